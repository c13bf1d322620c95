"""Exact gap power sums for numerical semigroups with two or three generators."""

try:
    from ._semigaps import (
        bernoulli,
        gaps,
        higher_bernoulli,
        hilbert,
        oracle_power_sum,
        power_sums,
        relations,
        validate,
    )
except ImportError:  # running against a build tree with _semigaps on sys.path
    from _semigaps import (
        bernoulli,
        gaps,
        higher_bernoulli,
        hilbert,
        oracle_power_sum,
        power_sums,
        relations,
        validate,
    )

__all__ = [
    "bernoulli",
    "gaps",
    "higher_bernoulli",
    "hilbert",
    "oracle_power_sum",
    "power_sums",
    "relations",
    "validate",
]

__version__ = "0.1.0"
