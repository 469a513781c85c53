# Synthetic embedding data
