from __future__ import annotations


class LocaleLabError(Exception):
    """Base class for every error raised by localelab."""


class FrameError(LocaleLabError, ValueError):
    """An order table does not describe a finite frame.

    ``witness`` holds the elements exhibiting the violation.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAPoset(FrameError):
    pass


class Unbounded(FrameError):
    pass


class NotALattice(FrameError):
    pass


class NotDistributive(FrameError):
    pass


class FrameMismatch(LocaleLabError, ValueError):
    pass


class CapExceeded(LocaleLabError, RuntimeError):
    pass


class GuardExceeded(LocaleLabError, ValueError):
    pass


class NotAHom(LocaleLabError, ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class LiftNotRegular(LocaleLabError, RuntimeError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ModeRequiresComplemented(LocaleLabError, ValueError):
    pass
