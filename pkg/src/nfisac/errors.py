"""Error taxonomy.

Validation problems (bad geometry, bad placement, bad config) raise
``ValueError`` subclasses; diagnosed numerical breakdowns raise
``NumericalError``.  The CLI maps ``ConfigError`` to exit code 2 and
``NumericalError`` to exit code 3.
"""


class ConfigError(ValueError):
    """Invalid user-supplied configuration (CLI exit code 2)."""


class UnsupportedModelError(ValueError):
    """Operation has no closed form / no meaning for the requested model."""


class DegenerateChannelError(ValueError):
    """Channel pair too close to collinear for the requested computation."""


class NumericalError(RuntimeError):
    """A numerical procedure failed its own diagnostics (CLI exit code 3)."""
