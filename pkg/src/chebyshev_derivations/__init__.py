"""Chebyshev derivations - exact kernels and polynomial identities for T_n and U_n."""

__version__ = "0.1.0"
