# Multi-run experiments
