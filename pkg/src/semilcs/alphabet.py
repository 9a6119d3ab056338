"""Characters, wildcards, and string coercion.

Strings are handled as sequences of hashable symbols.  The wildcard
matches every symbol; the blow-up filler '$' is an ordinary character
that matches only itself.
"""

from __future__ import annotations

from typing import Sequence


class _Wildcard:
    __slots__ = ()

    def __repr__(self) -> str:
        return "WILDCARD"


WILDCARD = _Wildcard()

DOLLAR = "$"


def chars_match(x, y) -> bool:
    return x == y or x is WILDCARD or y is WILDCARD


def as_symbols(s) -> list:
    """Coerce a str or any sequence of symbols to a list of symbols."""
    if isinstance(s, str):
        return list(s)
    return list(s)


def decode_text(s: str, literal: bool = False, wildcard_char: str = "?") -> list:
    """Turn raw text into symbols, mapping the wildcard character unless
    ``literal`` is set."""
    if literal:
        return list(s)
    return [WILDCARD if ch == wildcard_char else ch for ch in s]
