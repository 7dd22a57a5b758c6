"""High-precision q-Bessel, little q-Jacobi and q-Dunkl numerics with
Neumann-series expansions of the q-Dunkl kernel and the q-plane wave."""

__version__ = "0.1.0"

from .context import QContext, SeriesValue, TruncationPolicy
from .errors import (BranchCut, ConvergenceViolation, DivergentSeries, DomainError, LatticeWindowError,
                     NonConvergent, NoValidBranch, ParameterError, PoleInParameters, QNumericsError,
                     WindowTooSmall, ZeroArgument)
from .lattice import LatticeFunction, LatticePoint
from .qbessel import dunkl_kernel, jackson3_bessel, q_trig, rubin_exp
from .qcore import basic_hypergeometric, q_integral, qpochhammer, qpochhammer_inf
from .qexpansion import (ExpansionCoefficients, NeumannSystem, PWSpec, kernel_expansion_partial, neumann_fn,
                         neumann_reconstruct, plane_wave_partial, pw_synthesize)
from .qortho import PolyParams, gegenbauer_gen, little_q_gegenbauer, little_q_jacobi
from .qtransform import WeberParams, dunkl_transform, hankel_transform, weber_schafheitlin_closed
from .report import Case, Report

__all__ = [
    "__version__",
    "QContext", "SeriesValue", "TruncationPolicy",
    "BranchCut", "ConvergenceViolation", "DivergentSeries", "DomainError", "LatticeWindowError",
    "NonConvergent", "NoValidBranch", "ParameterError", "PoleInParameters", "QNumericsError",
    "WindowTooSmall", "ZeroArgument",
    "LatticeFunction", "LatticePoint",
    "dunkl_kernel", "jackson3_bessel", "q_trig", "rubin_exp",
    "basic_hypergeometric", "q_integral", "qpochhammer", "qpochhammer_inf",
    "ExpansionCoefficients", "NeumannSystem", "PWSpec", "kernel_expansion_partial", "neumann_fn",
    "neumann_reconstruct", "plane_wave_partial", "pw_synthesize",
    "PolyParams", "gegenbauer_gen", "little_q_gegenbauer", "little_q_jacobi",
    "WeberParams", "dunkl_transform", "hankel_transform", "weber_schafheitlin_closed",
    "Case", "Report",
]
