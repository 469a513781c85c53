# Density-matrix analysis
from src.analysis.density import DensityMatrix, density_matrix, expectation, spectrum
