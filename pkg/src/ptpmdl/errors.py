"""Exception types shared across the package."""


class PtpmdlError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(PtpmdlError):
    """Invalid encoder configuration, source description, or experiment spec."""


class MalformedStreamError(PtpmdlError):
    """A container or bitstream cannot be parsed or fails integrity checks."""
