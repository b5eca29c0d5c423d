"""Error taxonomy shared by every module.

Exit-code mapping used by the CLI: InputError, PreconditionError and
StructureError all signal bad or inconsistent input (exit 2); ResourceError
signals a blown budget or term ceiling (exit 3). A check that runs fine but
finds the claimed identity false is not an exception at all — it is a False
return value (exit 1 at the CLI).
"""


class InputError(ValueError):
    """Malformed or out-of-range input: bad indices, axiom violations, field
    mismatches, unparseable JSON."""


class PreconditionError(InputError):
    """A documented hypothesis of an operation does not hold (e.g. the edge
    set given as a handle is not one, a matroid is disconnected where
    connectivity is required)."""


class StructureError(InputError):
    """Structured data that is individually well-formed but mutually
    inconsistent: a broken quotient link in a chain, inexact division where
    exactness is guaranteed, a cross-check contradiction."""


class ResourceError(RuntimeError):
    """An explicit budget (point-count grid size, expansion term ceiling)
    would be exceeded. Carries the required budget when known."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
