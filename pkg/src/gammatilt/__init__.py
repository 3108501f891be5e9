"""Dirichlet mean functionals, Lamperti occupation laws and gamma tilting.

Subpackages and modules:

* :mod:`~gammatilt.kernels` quadrature primitives and special functions
* :mod:`~gammatilt.lamperti` Lamperti ratio and occupation-time laws
* :mod:`~gammatilt.dirichlet_mean` Cifarelli-Regazzini inversion
* :mod:`~gammatilt.tilting` exponential tilting of gamma mixtures and Dirichlet means
* :mod:`~gammatilt.samplers` exact and stick-breaking samplers
* :mod:`~gammatilt.catalog` closed-form densities with independent samplers
* :mod:`~gammatilt.verify` the statistical identity suite
"""
from .dirichlet_mean import MeanFunctional, cr_cdf, cr_pdf
from .dist import Dist
from .errors import (DomainError, GammaTiltError, ModelError, PreconditionError, QuadratureError,
                     SamplerError, UnsupportedOperation)
from .lamperti import LampertiRatio, OccupationLaw
from .measures import BaseMeasure
from .samplers import RngState

__version__ = "0.1.0"

__all__ = ["MeanFunctional", "cr_cdf", "cr_pdf", "Dist", "LampertiRatio", "OccupationLaw",
           "BaseMeasure", "RngState", "GammaTiltError", "DomainError", "PreconditionError",
           "ModelError", "QuadratureError", "SamplerError", "UnsupportedOperation",
           "__version__"]
