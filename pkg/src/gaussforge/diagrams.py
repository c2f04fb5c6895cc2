"""Gauss diagrams of long (based) and closed virtual knots.

A diagram is a double-occurrence word on positions ``0..2n-1`` (traversal
order from the base point), one chord per crossing.  Each chord carries a
sign (local writhe) and remembers which of its two endpoints is the
over-strand passage; the arrow points from that endpoint to the other one.

Text format::

    code  := token* flag?
    token := ("O" | "U") int ("+" | "-")
    flag  := "@closed"

whitespace-separated, case-sensitive.  The ``O`` occurrence of chord ``k``
is its over endpoint; the sign is written on both occurrences and must
agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable

from .errors import (
    AlreadyClosed,
    ChordSeenOnceOrThrice,
    DuplicateRole,
    MalformedToken,
    NoSuchChord,
    SignMismatch,
)

_TOKEN_RE = re.compile(r"([OU])([1-9][0-9]*)([+-])\Z")


@dataclass(frozen=True, order=True)
class Chord:
    """One crossing: two endpoint positions, a sign, and the over endpoint."""

    end_first: int
    end_second: int
    sign: int
    over_end: int
    id: int

    def __post_init__(self) -> None:
        if not 0 <= self.end_first < self.end_second:
            raise ValueError(f"chord {self.id}: endpoints out of order")
        if self.sign not in (1, -1):
            raise ValueError(f"chord {self.id}: sign must be +1 or -1")
        if self.over_end not in (self.end_first, self.end_second):
            raise ValueError(f"chord {self.id}: over_end is not an endpoint")

    @property
    def over_first(self) -> bool:
        return self.over_end == self.end_first


@dataclass(frozen=True)
class BasedGaussDiagram:
    """A validated Gauss diagram; ``closed=False`` means long (based)."""

    chords: tuple[Chord, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        chords = tuple(sorted(self.chords))
        object.__setattr__(self, "chords", chords)
        _check_double_occurrence(
            [(c.end_first, c.end_second) for c in chords]
        )
        ids = [c.id for c in chords]
        if len(set(ids)) != len(ids):
            raise ValueError("chord ids must be distinct")

    @property
    def n_chords(self) -> int:
        return len(self.chords)

    def chord_by_id(self, chord_id: int) -> Chord:
        for c in self.chords:
            if c.id == chord_id:
                return c
        raise NoSuchChord(f"no chord with id {chord_id}")


@dataclass(frozen=True)
class FlatWord:
    """Based chord diagram whose chords carry letters 'a'/'b' only."""

    chords: tuple[tuple[int, int, str], ...]

    def __post_init__(self) -> None:
        chords = tuple(sorted(self.chords))
        object.__setattr__(self, "chords", chords)
        _check_double_occurrence([(u, v) for (u, v, _) in chords])
        for (_, _, letter) in chords:
            if letter not in ("a", "b"):
                raise ValueError(f"bad letter {letter!r}")

    @property
    def n_chords(self) -> int:
        return len(self.chords)


@dataclass(frozen=True)
class PseudoDiagram:
    """Chord diagram with signs but no arrows (image of the arrow-forgetting map)."""

    chords: tuple[tuple[int, int, int], ...]
    closed: bool = False

    def __post_init__(self) -> None:
        chords = tuple(sorted(self.chords))
        object.__setattr__(self, "chords", chords)
        _check_double_occurrence([(u, v) for (u, v, _) in chords])
        for (_, _, sign) in chords:
            if sign not in (1, -1):
                raise ValueError(f"bad sign {sign}")

    @property
    def n_chords(self) -> int:
        return len(self.chords)


def _check_double_occurrence(ends: Iterable[tuple[int, int]]) -> None:
    ends = list(ends)
    used = sorted(p for uv in ends for p in uv)
    if used != list(range(2 * len(ends))):
        raise ValueError("endpoints do not form a double-occurrence word")
    for u, v in ends:
        if not u < v:
            raise ValueError("chord endpoints out of order")


def parse_gauss_code(text: str) -> BasedGaussDiagram:
    """Parse a whitespace-separated Gauss code into a validated diagram."""
    tokens = text.split()
    closed = False
    if tokens and tokens[-1] == "@closed":
        closed = True
        tokens = tokens[:-1]

    seen: dict[int, list[tuple[int, str, int]]] = {}
    for pos, tok in enumerate(tokens):
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise MalformedToken(f"bad token {tok!r} at position {pos}")
        role, ident, sign = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        seen.setdefault(ident, []).append((pos, role, sign))

    chords = []
    for ident, occ in seen.items():
        if len(occ) != 2:
            raise ChordSeenOnceOrThrice(
                f"chord {ident} occurs {len(occ)} times (expected 2)"
            )
        (p1, r1, s1), (p2, r2, s2) = occ
        if s1 != s2:
            raise SignMismatch(f"chord {ident}: signs disagree")
        if r1 == r2:
            raise DuplicateRole(f"chord {ident}: two {r1!r} occurrences")
        over = p1 if r1 == "O" else p2
        chords.append(Chord(p1, p2, s1, over, ident))
    return BasedGaussDiagram(tuple(chords), closed=closed)


def serialize(d: BasedGaussDiagram) -> str:
    """Inverse of :func:`parse_gauss_code` (token-normalized)."""
    toks = [""] * (2 * d.n_chords)
    for c in d.chords:
        s = "+" if c.sign == 1 else "-"
        toks[c.end_first] = f"{'O' if c.over_first else 'U'}{c.id}{s}"
        toks[c.end_second] = f"{'U' if c.over_first else 'O'}{c.id}{s}"
    if d.closed:
        toks.append("@closed")
    return " ".join(toks)


def close(d: BasedGaussDiagram) -> BasedGaussDiagram:
    """Join the two ends of a long diagram."""
    if d.closed:
        raise AlreadyClosed("diagram is already closed")
    return replace(d, closed=True)


def reverse(d: BasedGaussDiagram) -> BasedGaussDiagram:
    """Reverse the traversal orientation of a long diagram.

    Positions map ``p -> 2n-1-p``; over/under status is intrinsic, so the
    over endpoint follows its endpoint.
    """
    n2 = 2 * d.n_chords
    chords = []
    for c in d.chords:
        u, v = n2 - 1 - c.end_second, n2 - 1 - c.end_first
        over = n2 - 1 - c.over_end
        chords.append(Chord(u, v, c.sign, over, c.id))
    return BasedGaussDiagram(tuple(chords), closed=d.closed)


def mirror(d: BasedGaussDiagram) -> BasedGaussDiagram:
    """Mirror image: switch every crossing (flip sign, swap over endpoint)."""
    chords = []
    for c in d.chords:
        over = c.end_second if c.over_first else c.end_first
        chords.append(Chord(c.end_first, c.end_second, -c.sign, over, c.id))
    return BasedGaussDiagram(tuple(chords), closed=d.closed)


def virtualize_chord(d: BasedGaussDiagram, chord_id: int) -> BasedGaussDiagram:
    """Swap over/under at one crossing, keeping its sign."""
    target = d.chord_by_id(chord_id)
    over = target.end_second if target.over_first else target.end_first
    new = Chord(target.end_first, target.end_second, target.sign, over, target.id)
    chords = tuple(new if c.id == chord_id else c for c in d.chords)
    return BasedGaussDiagram(chords, closed=d.closed)


EMPTY = BasedGaussDiagram(())
