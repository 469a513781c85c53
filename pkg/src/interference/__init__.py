# Double-slit demonstrator
from src.interference.double_slit import SlitConfig, intensity, phase_scan, plot_scan, scan_frame
