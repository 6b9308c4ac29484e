"""Complex special-function kernel.

Scalar binary64-complex implementations of every function symbol used by the
identity registry.  ``FUNCTION_TABLE`` (see ``table.py``) maps DSL names to
callables.
"""

from .gammafn import (
    gamma,
    log_gamma,
    rgamma,
    gamma_ratio,
    gamma_upper,
    gamma_generalized,
    pochhammer,
    binomial_c,
    factorial,
    double_factorial,
)

__all__ = [
    "gamma",
    "log_gamma",
    "rgamma",
    "gamma_ratio",
    "gamma_upper",
    "gamma_generalized",
    "pochhammer",
    "binomial_c",
    "factorial",
    "double_factorial",
]
