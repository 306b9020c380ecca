"""Tiny braid-word DSL: parse, render, and evaluate words in B_m.

Grammar: a word is one or more whitespace-separated factors, each
``b<INDEX>`` with an optional ``^<SIGNED_INT>`` exponent (default 1, zero
rejected).  Indices are 1-based generator numbers; the strand count is
`declared_strands` when given, otherwise max index + 1.  Words act on kets
from the left in reading order: "b1 b2" |v> = (b1 b2) |v>.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .braidrep import BraidRepresentation
from .errors import BraidSyntaxError, DimensionMismatchError, DomainError
from .states import apply_structured, structured_braid_op

_FACTOR_RE = re.compile(r"b(\d+)(?:\^([+-]?\d+))?\Z")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    factors: tuple[tuple[int, int], ...]   # (generator index, exponent)


def parse(text: str, declared_strands: Optional[int] = None) -> BraidWord:
    """Parse braid-word text; syntax errors carry the character position."""
    if declared_strands is not None and declared_strands < 2:
        raise DomainError(f"need at least 2 strands, got {declared_strands}")
    factors = []
    max_index = 0
    matches = list(re.finditer(r"\S+", text))
    if not matches:
        raise BraidSyntaxError("empty braid word", 0)
    for tok in matches:
        m = _FACTOR_RE.match(tok.group())
        if m is None:
            raise BraidSyntaxError(
                f"bad factor {tok.group()!r}; expected bN or bN^E", tok.start()
            )
        index = int(m.group(1))
        exponent = int(m.group(2)) if m.group(2) is not None else 1
        if index < 1:
            raise BraidSyntaxError("generator index must be >= 1", tok.start())
        if exponent == 0:
            raise BraidSyntaxError("zero exponent not allowed", tok.start())
        if declared_strands is not None and index > declared_strands - 1:
            raise BraidSyntaxError(
                f"generator b{index} out of range for {declared_strands} strands "
                f"(has b1..b{declared_strands - 1})", tok.start()
            )
        factors.append((index, exponent))
        max_index = max(max_index, index)
    strands = declared_strands if declared_strands is not None else max_index + 1
    return BraidWord(strands=strands, factors=tuple(factors))


def render(word: BraidWord) -> str:
    return " ".join(
        f"b{i}" if e == 1 else f"b{i}^{e}" for i, e in word.factors
    )


def _check_compat(word: BraidWord, rep: BraidRepresentation) -> None:
    top = max(i for i, _ in word.factors)
    if top > len(rep.generators):
        raise DomainError(
            f"word uses b{top} but the {rep.family} representation has "
            f"{len(rep.generators)} generators"
        )


def evaluate(word: BraidWord, rep: BraidRepresentation) -> np.ndarray:
    """Left-to-right product of generator powers (binary powering)."""
    _check_compat(word, rep)
    out = np.eye(rep.dim, dtype=np.complex128)
    for index, exponent in word.factors:
        g = rep.generators[index - 1] if exponent > 0 else rep.inverses[index - 1]
        out = out @ np.linalg.matrix_power(g, abs(exponent))
    return out


_STRUCTURED_FORWARD = ((1, 1), (2, 1))
_STRUCTURED_INVERSE = ((2, -1), (1, -1))


def evaluate_on_state(word: BraidWord, rep: BraidRepresentation,
                      v: np.ndarray) -> np.ndarray:
    """Apply the word to a state; the jones words b1 b2 and b2^-1 b1^-1 use
    the structured single-pass path, everything else goes dense."""
    if rep.dim != v.shape[0]:
        raise DimensionMismatchError(
            f"representation dim {rep.dim} vs state length {v.shape[0]}"
        )
    if rep.family == "jones" and word.factors in (_STRUCTURED_FORWARD,
                                                  _STRUCTURED_INVERSE):
        op = structured_braid_op(rep.shape, rep.params, rep.spec,
                                 validate_dense=False)
        return apply_structured(op, v, inverse=word.factors == _STRUCTURED_INVERSE)
    return evaluate(word, rep) @ v
