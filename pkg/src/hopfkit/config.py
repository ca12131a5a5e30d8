"""Size caps for exhaustive enumeration.

The cap defaults to 8 and can be raised through the ``HOPFKIT_MAX_N``
environment variable or, for a block of code, the :func:`max_n` context
manager.  No cap may exceed :data:`HARD_CEILING`.
"""
from __future__ import annotations

import contextlib
import contextvars
import os

from .errors import CapExceededError

DEFAULT_MAX_N = 8
HARD_CEILING = 12

_override: contextvars.ContextVar[int | None] = contextvars.ContextVar("hopfkit_max_n", default=None)


def _validate(n: int) -> int:
    if n < 0:
        raise CapExceededError(f"cap must be nonnegative, got {n}")
    if n > HARD_CEILING:
        raise CapExceededError(f"cap {n} exceeds the hard ceiling {HARD_CEILING}")
    return n


def current_cap() -> int:
    value = _override.get()
    if value is not None:
        return value
    env = os.environ.get("HOPFKIT_MAX_N")
    if env:
        try:
            return _validate(int(env))
        except ValueError as exc:
            raise CapExceededError(f"bad HOPFKIT_MAX_N={env!r}: {exc}") from None
    return DEFAULT_MAX_N


@contextlib.contextmanager
def max_n(n: int):
    """Temporarily set the enumeration cap for the current context."""
    token = _override.set(_validate(int(n)))
    try:
        yield n
    finally:
        _override.reset(token)


def check_cap(n: int, what: str = "size") -> None:
    cap = current_cap()
    if n > cap:
        raise CapExceededError(f"{what} {n} exceeds the cap {cap} (raise with --max-n or HOPFKIT_MAX_N)")
