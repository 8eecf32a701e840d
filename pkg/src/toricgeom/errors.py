"""Exception types shared across the package.

Two categories matter for callers (and for the CLI exit codes): malformed
input that violates a structural precondition, and input that is structurally
fine but outside the supported mathematical domain.
"""


class ValidationError(ValueError):
    """Structurally invalid input: bad dimensions, bad fan data, bad schema."""


class UnsupportedInputError(ValueError):
    """Valid data outside the supported domain, e.g. a torsion class group
    where torsion-free is required, or a non-simplicial fan for a Chow ring."""
