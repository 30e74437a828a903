"""Function models and the growth functionals M, mu, nu, m, N, T."""
from .entire import (DepthExceeded, EntireFunction, MeromorphicFunction, derivative, entire,
                     eval_at)
from .expr import ExpressionSyntaxError, TruncationError, parse
from .functionals import (GrowthSample, InapplicableError, QuadratureError, argmax_modulus,
                          characteristic_T, counting_N, log_max_modulus, max_term_and_index,
                          proximity_m, wiman_valiron_deviation)
from .scaled import ScaledComplex

eval = eval_at  # noqa: A001  (public name matches the operation)

__all__ = [
    "DepthExceeded", "EntireFunction", "MeromorphicFunction", "derivative", "entire", "eval",
    "eval_at", "ExpressionSyntaxError", "TruncationError", "parse", "GrowthSample",
    "InapplicableError", "QuadratureError", "argmax_modulus", "characteristic_T", "counting_N",
    "log_max_modulus", "max_term_and_index", "proximity_m", "wiman_valiron_deviation",
    "ScaledComplex",
]
