"""Utility functions and helper classes."""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any


class ErrorCode(Enum):
    """Exit codes of the mwlab command line."""

    SUCCESS = 0
    VERIFICATION_FAILED = 1
    INPUT_ERROR = 2


class MwlabError(Exception):
    """Base exception for mwlab errors."""

    def __init__(
        self,
        message: str,
        code: ErrorCode = ErrorCode.INPUT_ERROR,
        suggestion: str | None = None,
    ):
        self.message = message
        self.code = code
        self.suggestion = suggestion
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """Convert error to dictionary.

        Returns:
            Error dictionary with code, message, and suggestion.
        """
        result = {"code": self.code.name, "message": self.message}
        if self.suggestion:
            result["suggestion"] = self.suggestion
        return result


class FieldError(MwlabError):
    """Unsupported field size or bad modulus."""

    def __init__(self, details: str):
        super().__init__(
            details,
            ErrorCode.INPUT_ERROR,
            suggestion="Use a prime power q; for q outside {4, 8, 9, 16, 25, 27} supply an irreducible modulus",
        )


class CodeError(MwlabError):
    """Malformed generator matrix or incompatible codes."""

    def __init__(self, details: str):
        super().__init__(f"Invalid code: {details}", ErrorCode.INPUT_ERROR)


class BudgetExceededError(MwlabError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        message = f"Enumerating {what} needs {needed} items, budget is {budget}"
        super().__init__(
            message,
            ErrorCode.INPUT_ERROR,
            suggestion="Raise the budget with --budget or MWLAB_BUDGET, or use a smaller instance",
        )
        self.needed = needed
        self.budget = budget


class ParameterRangeError(MwlabError):
    """A numeric parameter lies outside its admissible range."""

    def __init__(self, name: str, value: Any, admissible: str):
        super().__init__(f"{name} outside {admissible}: {value}", ErrorCode.INPUT_ERROR)
        self.name = name


class CodeFileError(MwlabError):
    """Code file missing or malformed."""

    def __init__(self, path: Path, details: str):
        super().__init__(
            f"Cannot read code file {path}: {details}",
            ErrorCode.INPUT_ERROR,
            suggestion='Expected JSON like {"q": 2, "n": 3, "generators": [[1, 1, 1]]}',
        )


class VerificationFailedError(MwlabError):
    """An identity that must hold did not."""

    def __init__(self, details: str):
        super().__init__(
            f"Verification failed: {details}",
            ErrorCode.VERIFICATION_FAILED,
            suggestion="Check that every input code is linear",
        )


def check_budget(what: str, needed: int, budget: int) -> None:
    """Raise if an enumeration of ``needed`` items exceeds ``budget``.

    Raises:
        BudgetExceededError: If needed > budget.
    """
    if needed > budget:
        raise BudgetExceededError(what, needed, budget)


def read_json(path: Path) -> Any:
    """Read and decode a JSON file.

    Raises:
        CodeFileError: If the file is missing or not valid JSON.
    """
    if not path.exists():
        raise CodeFileError(path, "file not found")
    if not path.is_file():
        raise CodeFileError(path, "not a regular file")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise CodeFileError(path, f"malformed JSON ({e.msg} at line {e.lineno})")
    except UnicodeDecodeError:
        raise CodeFileError(path, "not UTF-8 text")
    except OSError as e:
        raise CodeFileError(path, e.strerror or str(e))


def get_logger(name: str) -> logging.Logger:
    """Get logger instance.

    Args:
        name: Logger name.

    Returns:
        Logger instance.
    """
    return logging.getLogger(name)


def configure_logging(level: str = "WARNING") -> None:
    """Send log records to stderr so stdout carries only reports."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
