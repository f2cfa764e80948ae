"""Finite-truncation modular structure on Hilbert-Schmidt operator space
and its Landau-level realization: modular triple, KMS verification,
complex Hermite polynomials, planar Gaussian quadrature, and coherent-state
resolutions of identity.
"""

__version__ = "1.0.0"
