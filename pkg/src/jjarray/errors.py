"""Exception hierarchy.

Every error raised by this package derives from JJArrayError and carries a
short machine-readable ``code`` used by the CLI (stderr prefix) and the HTTP
service (error field).
"""


class JJArrayError(Exception):
    """Base class for all jjarray errors."""

    code = "error"


class ParseError(JJArrayError):
    """Topology document is not well-formed (bad syntax)."""

    code = "parse"


class ValidationError(JJArrayError):
    """Structurally well-formed input violates a model invariant."""

    code = "validation"


class SingularityError(JJArrayError):
    """Coupling matrix is singular or not positive definite."""

    code = "singularity"


class ParameterError(JJArrayError):
    """Physical or numerical parameter outside its admissible range."""

    code = "parameter"


class LimitError(JJArrayError):
    """A built-in size guard (enumeration or symmetry search) was exceeded."""

    code = "limit"


class DegenerateBranchError(JJArrayError):
    """Two energy branches coincide everywhere; no isolated crossing exists."""

    code = "degenerate"
