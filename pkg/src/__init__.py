"""
FilterLab - Main Package
"""

__version__ = "1.0.0"
__author__ = "Signal Processing Lab"
__description__ = "Train tiny networks to mimic FIR filters and open the black box"
