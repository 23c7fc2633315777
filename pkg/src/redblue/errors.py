"""Exception hierarchy shared by every module of the package."""


class RedBlueError(Exception):
    """Base class for all errors raised by :mod:`redblue`."""


class InputError(RedBlueError, ValueError):
    """The caller supplied an unusable instance (too few points, bad file...)."""


class GeneralPositionError(InputError):
    """Three input points are collinear, or two input points coincide."""


class DegenerateOverlap(GeneralPositionError):
    """Two segments are collinear and overlap in more than a point."""


class CollinearWithPivot(RedBlueError):
    """Two input points are collinear with the pivot of a radial order."""


class ConfigurationError(RedBlueError):
    """A jump configuration cannot be built on the given radial order."""


class NonTermination(RedBlueError):
    """The repair loop exceeded its iteration cap."""


class PivotSearchExhausted(RedBlueError):
    """No admissible pivot was found within the halving budget."""


class SizeLimit(RedBlueError, ValueError):
    """An exhaustive oracle was asked to enumerate an instance that is too big."""


class InternalInvariantViolation(RedBlueError):
    """A constructed object failed verification; this indicates a bug."""
