"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when arguments or documents violate a precondition."""


class InstanceTooLargeError(InputError):
    """Raised by brute-force routines when an instance exceeds their size cap."""


class EvaluationError(ValueError):
    """Raised when a user-supplied function misbehaves on an atom."""


class IterationCapError(RuntimeError):
    """Raised when an iterative refinement exhausts its budget."""
