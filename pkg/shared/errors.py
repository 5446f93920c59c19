class LoglimError(Exception):
    """Base class for every domain error raised by the library."""


class GraphValidationError(LoglimError, ValueError):
    pass


class DistributionError(LoglimError, ValueError):
    pass


class GroupError(LoglimError, ValueError):
    pass


class UndefinedDensityError(LoglimError, ValueError):
    """h(H,G) has no meaning when H or G has no edge."""


class ConfigError(LoglimError, ValueError):
    pass


class CapExceededError(LoglimError, RuntimeError):
    """A configured size cap would be exceeded; carries the cap name and the offending size."""

    def __init__(self, cap_name: str, size: float, limit: float):
        self.cap_name = cap_name
        self.size = size
        self.limit = limit
        super().__init__(f"{cap_name} exceeded: size {size:.6g} > limit {limit:.6g}")


class ConvergenceError(LoglimError, RuntimeError):
    pass


class ProfileError(LoglimError, ValueError):
    pass
