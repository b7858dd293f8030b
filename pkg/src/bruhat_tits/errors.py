"""Exception hierarchy.

Every exception carries a short machine-readable ``code`` which the command
line front end prints verbatim.
"""


class BruhatTitsError(Exception):
    code = "error"


class ValidationError(BruhatTitsError, ValueError):
    """Malformed or inconsistent input."""

    code = "invalid_input"


class InadmissibleTypeError(ValidationError):
    code = "inadmissible_type"


class FacetIndexError(ValidationError):
    code = "facet_out_of_range"


class PreconditionError(ValidationError):
    code = "precondition_failed"


class DegenerateInputError(ValidationError):
    """A point that was required to avoid every wall lies on one."""

    code = "degenerate_input"


class InternalError(BruhatTitsError, RuntimeError):
    """Something that cannot happen for valid input did happen."""

    code = "internal_error"
