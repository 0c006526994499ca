"""Exception hierarchy shared by the algebra modules and the CLI.

Every error carries a stable ``code`` that the CLI prints as ``error[<code>]: <message>``.
"""

from __future__ import annotations


class TrigradedError(Exception):
    code = "trigraded"
    exit_code = 1


class UnknownName(TrigradedError):
    code = "unknown-name"


class MixedRings(TrigradedError):
    code = "mixed-rings"


class InvalidPrime(TrigradedError):
    code = "invalid-prime"


class EvenPrime(InvalidPrime):
    code = "even-prime"


class NotAComplex(TrigradedError):
    code = "not-a-complex"


class CapTooSmall(TrigradedError):
    code = "cap-too-small"


class BoxExceeded(TrigradedError):
    code = "box-exceeded"


class BocksteinError(TrigradedError):
    code = "bockstein"


class InhomogeneousDifferential(BocksteinError):
    code = "inhomogeneous-differential"


class LeibnizContradiction(BocksteinError):
    code = "leibniz-contradiction"


class UnknownObject(TrigradedError):
    code = "unknown-object"


class EmptyRange(TrigradedError):
    code = "empty-range"


class InputError(TrigradedError):
    """Malformed input file, expression or box string."""

    code = "input"


class UsageError(TrigradedError):
    code = "usage"


class ValidationFailed(TrigradedError):
    """A table or spectral sequence failed a consistency check."""

    code = "validation"
    exit_code = 2
