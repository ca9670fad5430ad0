"""
hyperfree - exact invariants and freeness certificates for hyperplane arrangements
"""

__version__ = "0.1.0"
__author__ = "Team 5 - EUMaster4HPC"

from loguru import logger

# Library code stays silent until an application enables the package
logger.disable("hyperfree")

__all__ = ["__version__", "__author__", "logger"]
