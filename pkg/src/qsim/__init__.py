# Single-qubit circuit simulation
from src.qsim.circuits import CircuitKind, QubitInit, exact_p0, final_state
from src.qsim.estimates import ProbEstimate
from src.qsim.noise import NoiseModel, apply_readout_noise, mitigate_readout
from src.qsim.sampler import EXACT, ExactMode, Mode, ShotsMode, exact_probability, run_register, sample
from src.qsim.seeding import splitmix64, sub_seed
