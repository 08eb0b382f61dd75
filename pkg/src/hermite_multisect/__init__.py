"""Multisected Hermite generating functions, exponential sums and the
operators exp[(a d/dx)^j], each paired with an independent series oracle."""

from .core import (QuadratureRule, SeriesControl, VerifyReport, filter_weight,
                   gauss_hermite, gauss_laguerre, roots_of_unity, sum_series)
from .errors import (DivergenceError, DomainError, HermiteMultisectError,
                     NumericalOverflowError, SingularityError, TruncationError)
from .expsums import MultisectIndex, s_closed, s_derivative, s_derivative_check, s_series
from .genfun import GenFunPoint, g_closed, g_rodrigues_check, g_series, g_shifted_gaussian
from .hermite import (HermiteSequence, floor_scaled_term_sequence, hermite_eval,
                      hermite_sequence, scaled_term_sequence)
from .operators import (OperatorQuery, TestFunction, i2_kernel, i2_quadrature,
                        ij_quadrature, ij_series, shift_apply, weierstrass_gaussian)
from .squeezed import KPoint, k2010_closed, k2110_closed, k_combined_closed, k_series

__version__ = "0.1.0"
