"""Exception types shared by the whole toolchain.

Every failure carries a short machine-readable ``code`` (for example
``"duplicate-rule"`` or ``"bad-path"``) so callers and tests can dispatch on
it without parsing messages.
"""

from __future__ import annotations

from dataclasses import dataclass


class Mvc2GenError(Exception):
    """Base class for every error raised by mvc2gen."""

    def __init__(self, code: str, message: str = "", path: str | None = None):
        self.code = code
        self.message = message or code
        self.path = path
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f" at {self.path}" if self.path else ""
        return f"{self.code}{where}: {self.message}"


class ParseError(Mvc2GenError):
    """Input text or XML could not be turned into a model."""

    def __init__(self, code, message="", path=None, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None and path is None:
            path = f"{line}:{column}"
        super().__init__(code, message, path)


class TransformError(Mvc2GenError):
    """Rule registration or rule execution failed."""


class PathError(Mvc2GenError):
    """A fragment path is malformed or does not address an element."""


class CodegenError(Mvc2GenError):
    """Scaffolding could not be produced from the given model."""


@dataclass(frozen=True)
class Violation:
    """One well-formedness problem found by a validator."""

    path: str
    code: str
    message: str = ""

    def __str__(self) -> str:
        text = f"{self.path}: {self.code}"
        return f"{text} ({self.message})" if self.message else text
