"""Error taxonomy shared across the package.

All classes subclass ValueError so library callers can catch broadly;
the CLI maps each to a distinct exit code.
"""


class ConfigError(ValueError):
    """Invalid configuration value or malformed config file (exit code 2)."""


class DataError(ValueError):
    """Malformed input data: bad CSV cells, dimension mismatches (exit code 3)."""


class UndefinedMetricError(ValueError):
    """Metric undefined for the given inputs, e.g. single-class labels (exit code 4)."""
