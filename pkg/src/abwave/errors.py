"""Exception taxonomy.

Three top-level families map onto the CLI exit codes: scenario/config
problems (exit 2), violated numerical preconditions (exit 3), and I/O
failures (exit 4). Plain ValueError/OverflowError are used for bad
arguments to low-level math functions, and are treated as config-class
errors by the CLI when they escape a pipeline.
"""


class AbwaveError(Exception):
    """Base class for all package-specific errors."""


class ScenarioError(AbwaveError):
    """Invalid scenario definition (config file or geometry). Exit code 2."""


class GeometryError(ScenarioError):
    """Physically inconsistent geometry, e.g. flux bar wider than the aperture."""


class PreconditionError(AbwaveError):
    """A numerical precondition failed; the computation refuses to run. Exit code 3."""


class AliasingError(PreconditionError):
    """Source sampling too coarse for the requested propagation geometry."""


class RegimeError(PreconditionError):
    """Requested propagation regime does not hold (e.g. Fresnel number too large)."""


class CoverageError(PreconditionError):
    """Pattern window does not capture enough of the total intensity."""


class MarginError(PreconditionError):
    """Pattern margins too small for the requested convolution width."""


class DegenerateError(PreconditionError):
    """Degenerate input, e.g. an all-zero intensity pattern."""


class SmoothnessError(PreconditionError):
    """Field is not smooth enough for derivative-based analysis."""


class GridMismatchError(PreconditionError):
    """Two inputs that must share a grid do not."""


class EvaluationError(PreconditionError):
    """An integrand or field evaluated to a non-finite value."""


class OutputIOError(AbwaveError):
    """Could not write an output file. Exit code 4."""


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICS = 3
EXIT_IO = 4


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit-code taxonomy."""
    if isinstance(exc, PreconditionError):
        return EXIT_NUMERICS
    if isinstance(exc, (ScenarioError, ValueError, OverflowError)):
        return EXIT_CONFIG
    if isinstance(exc, (OutputIOError, OSError)):
        return EXIT_IO
    return EXIT_CONFIG
