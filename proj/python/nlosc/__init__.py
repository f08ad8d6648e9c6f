"""Numerical laboratory for the nonlocal oscillator with delay-coupled action.

The Lagrangian L = -(m/alpha^2) q(t) q(t+alpha) is treated through its
lambda-field representation: antiperiodic mode decomposition, constraint
reduction to a Dirac bracket, three equivalent Hamiltonians, and the
quantized alternating-sign oscillator tower.
"""

from ._core import *  # noqa: F401,F403
from ._core import quantum  # noqa: F401

__version__ = "0.1.0"
