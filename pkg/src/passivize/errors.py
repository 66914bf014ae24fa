"""Exception hierarchy for the passivization engine."""


class PassivizeError(Exception):
    """Base class for everything the engine raises on purpose."""


class LexiconError(PassivizeError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructuralError(PassivizeError, ValueError):
    """A constructor received arguments that break a type invariant."""


class ParseError(PassivizeError):
    def __init__(self, message, position=0):
        self.position = position
        super().__init__(f"{message} (at token {position})")
        self.detail = message


class NotSVO(ParseError):
    pass


class UnknownVerbForm(ParseError):
    pass


class MissingObject(ParseError):
    pass


class KernelForm(PassivizeError):
    """The verb form has no passive image (it maps to the null element)."""

    def __init__(self, tense, form):
        self.tense = tense
        self.form = form
        super().__init__(f"v{tense}{form} is in the kernel; no passive form exists")
