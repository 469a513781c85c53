from dataclasses import dataclass
from typing import Optional

from src.config.settings import Config
from src.qsim.noise import NoiseModel
from src.qsim.sampler import EXACT, Mode, ShotsMode
from src.utils.exceptions import ConfigError

MODES = ("exact", "shots")
OUTPUTS = ("json", "csv")


@dataclass(frozen=True)
class RunConfig:
    """Run settings for one CLI command"""
    mode: str = "exact"
    shots: int = Config.DEFAULT_SHOTS
    seed: int = Config.DEFAULT_SEED
    noise_flip: float = Config.DEFAULT_NOISE_FLIP
    mitigate: bool = False
    calibration_flip: Optional[float] = None
    output: str = "json"

    def validate(self) -> "RunConfig":
        if self.mode not in MODES:
            raise ConfigError(f"--mode must be one of {MODES}, got {self.mode!r}")
        if self.output not in OUTPUTS:
            raise ConfigError(f"--output must be one of {OUTPUTS}, got {self.output!r}")
        if self.shots < 1:
            raise ConfigError(f"--shots must be >= 1, got {self.shots}")
        if not -(1 << 63) <= self.seed < (1 << 64):
            raise ConfigError(f"--seed must fit in 64 bits, got {self.seed}")
        if not 0.0 <= self.noise_flip < 0.5:
            raise ConfigError(f"--noise-flip must be in [0, 0.5), got {self.noise_flip}")
        if self.calibration_flip is not None and not 0.0 <= self.calibration_flip < 0.5:
            raise ConfigError(f"--calibration-flip must be in [0, 0.5), got {self.calibration_flip}")
        if self.mitigate and self.noise_flip == 0.0 and self.calibration_flip is None:
            raise ConfigError("--mitigate needs --noise-flip > 0 or an explicit --calibration-flip")
        return self

    @property
    def run_mode(self) -> Mode:
        return EXACT if self.mode == "exact" else ShotsMode(self.shots, self.seed)

    @property
    def noise(self) -> Optional[NoiseModel]:
        return NoiseModel(self.noise_flip) if self.noise_flip > 0.0 else None

    @property
    def calibration(self) -> Optional[NoiseModel]:
        return NoiseModel(self.calibration_flip) if self.calibration_flip is not None else None
