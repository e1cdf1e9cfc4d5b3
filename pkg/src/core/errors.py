from typing import Optional


class GaugeDimError(Exception):
    """Base error; `module` names the package the failure came from."""

    def __init__(self, message: str, module: Optional[str] = None):
        super().__init__(message)
        self.module = module or "core"

    def to_dict(self) -> dict:
        return {
            "status": "error",
            "message": str(self),
            "error_type": type(self).__name__,
            "module": self.module,
        }


class PreconditionError(GaugeDimError, ValueError):
    pass


class CapacityError(GaugeDimError):
    """A configured size or search cap was exceeded."""


class NoBracketError(GaugeDimError):
    """The s-range does not bracket the accept/reject boundary."""

    def __init__(self, message: str, module: Optional[str] = None, diagnostics: Optional[list] = None):
        super().__init__(message, module)
        self.diagnostics = diagnostics or []


class NetTooCoarseError(GaugeDimError):
    pass


class BitSourceExhaustedError(GaugeDimError):
    pass


class ConfigError(GaugeDimError):
    pass


class GaugeSyntaxError(ConfigError):
    pass
