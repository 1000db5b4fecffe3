"""Statement registry, instance generators and checkers."""

from .registry import (
    NUMERIC,
    PER_PRIME,
    SYMBOLIC,
    Bounds,
    Instance,
    TheoremDescriptor,
    UnknownTheorem,
    bb_specs,
    descriptor,
    expand_ids,
    instances,
    registry,
    theorem_ids,
)
from .runner import (
    CheckOutcome,
    Report,
    check_numeric,
    check_over_primes,
    check_symbolic,
    min_prime,
    prime_range,
    run_suite,
)

__all__ = [
    "Bounds",
    "CheckOutcome",
    "Instance",
    "NUMERIC",
    "PER_PRIME",
    "Report",
    "SYMBOLIC",
    "TheoremDescriptor",
    "UnknownTheorem",
    "bb_specs",
    "check_numeric",
    "check_over_primes",
    "check_symbolic",
    "descriptor",
    "expand_ids",
    "instances",
    "min_prime",
    "prime_range",
    "registry",
    "run_suite",
    "theorem_ids",
]
