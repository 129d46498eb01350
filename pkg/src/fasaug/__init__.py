"""Face anti-spoofing augmentation toolkit.

Turns live face images into simulated physical attacks (color jitter and
moiré warp) and simulated digital attacks (self-blended forgeries), and
scores prediction files with APCER / BPCER / ACER / AUC.
"""
from ._backend import BACKEND
from .rng import RngStream, derive_seed

__version__ = "0.1.0"

__all__ = ["BACKEND", "RngStream", "derive_seed", "__version__"]
