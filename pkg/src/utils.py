# braid_workbench/src/utils.py

import logging
from typing import Optional

from src.config import LOG_FORMAT, LOG_LEVEL, MAX_ENDO_LEN


# --- Errors shared by every module ---

class BraidError(Exception):
    """Base class for every error raised by the workbench."""


class WordSyntaxError(BraidError, ValueError):
    """Raised by the word parsers; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DomainMismatchError(BraidError, ValueError):
    """A word, letter or free word does not belong to the expected group."""


class IllegalMoveError(BraidError, ValueError):
    """A Markov step failed its legality check."""

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


class NotInKernelError(BraidError, ValueError):
    """Input to a kernel or Schreier rewrite is outside the subgroup."""


class BudgetExceededError(BraidError, RuntimeError):
    """A resource budget was exceeded; the answer is unknown, never guessed."""


# --- Logging ---

_logging_configured = False


def configure_logging(level: Optional[str] = None):
    global _logging_configured
    if _logging_configured and level is None:
        return
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger("src").setLevel((level or LOG_LEVEL).upper())
    _logging_configured = True


# --- Budgets ---

def resolve_budget(value: Optional[int], default: int) -> int:
    """Returns the per-call budget, falling back to the configured default."""
    if value is None:
        return default
    if value <= 0:
        raise ValueError(f"Budget must be positive, got {value}")
    return value


def endo_budget(value: Optional[int]) -> int:
    return resolve_budget(value, MAX_ENDO_LEN)
