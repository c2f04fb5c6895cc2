"""Projections between diagram variants.

* ``map_p_r``  -- forget arrows, keep signs (pseudodiagram).
* ``map_p``    -- forget signs-and-arrows into a flat letter ('a'/'b') that
  records the orientation type of the flattened double point.
* ``map_i``    -- letters back to signs: a -> +, b -> -.
* ``map_q``    -- flat word to a descending diagram (first branch on top).
* ``tau0`` / ``tau1`` -- the letter and sign involutions.

Compositions of these produce the four sign-level shadows of one long
diagram, from which the four Jones polynomials / Khovanov tables are
computed.
"""

from __future__ import annotations

import re

from .diagrams import BasedGaussDiagram, Chord, FlatWord, PseudoDiagram
from .errors import MalformedToken, RequiresBasePoint

_FLAT_TOKEN_RE = re.compile(r"([1-9][0-9]*)([ab]?)\Z")


def map_p_r(d: BasedGaussDiagram) -> PseudoDiagram:
    """Forget the arrows; signs and the word are kept."""
    return PseudoDiagram(
        tuple((c.end_first, c.end_second, c.sign) for c in d.chords),
        closed=d.closed,
    )


def flat_letter(sign: int, over_first: bool) -> str:
    # 'a' iff the frame (first-branch tangent, second-branch tangent) of the
    # flattened double point is positive.
    return "a" if (sign == 1) == over_first else "b"


def map_p(d: BasedGaussDiagram) -> FlatWord:
    """Flatten a long diagram to its underlying open flat virtual knot."""
    if d.closed:
        raise RequiresBasePoint("the flattening map needs a base point")
    return FlatWord(
        tuple(
            (c.end_first, c.end_second, flat_letter(c.sign, c.over_first))
            for c in d.chords
        )
    )


def tau0(f: FlatWord) -> FlatWord:
    """Letter involution a <-> b."""
    return FlatWord(
        tuple((u, v, "b" if letter == "a" else "a") for (u, v, letter) in f.chords)
    )


def tau1(s: PseudoDiagram) -> PseudoDiagram:
    """Sign involution + <-> - (pseudodiagram-level mirror)."""
    return PseudoDiagram(
        tuple((u, v, -sign) for (u, v, sign) in s.chords), closed=s.closed
    )


def map_i(f: FlatWord) -> PseudoDiagram:
    """Letters to signs: a -> +, b -> -."""
    return PseudoDiagram(
        tuple((u, v, 1 if letter == "a" else -1) for (u, v, letter) in f.chords),
        closed=False,
    )


def map_q(f: FlatWord) -> BasedGaussDiagram:
    """Lift a flat word to the descending diagram realizing it.

    The first-traversed branch is made the over-strand at every double
    point; the sign is then forced by the flat type (a -> +, b -> -).
    """
    chords = tuple(
        Chord(u, v, 1 if letter == "a" else -1, u, k + 1)
        for k, (u, v, letter) in enumerate(f.chords)
    )
    return BasedGaussDiagram(chords, closed=False)


def four_projections(
    d: BasedGaussDiagram,
) -> tuple[PseudoDiagram, PseudoDiagram, PseudoDiagram, PseudoDiagram]:
    """The four sign-level shadows of a long diagram.

    Returns (pr, pra, ip, iap) where pra = tau1 . pr and iap = tau1 . ip.
    """
    if d.closed:
        raise RequiresBasePoint("four projections are defined for long diagrams")
    pr = map_p_r(d)
    ip = map_i(map_p(d))
    return pr, tau1(pr), ip, tau1(ip)


def flat_to_text(f: FlatWord) -> str:
    """Canonical text form: each endpoint prints its chord id, with the
    letter suffixed on the first occurrence only, e.g. ``"1a 2b 1 2"``."""
    toks = [""] * (2 * f.n_chords)
    for k, (u, v, letter) in enumerate(f.chords, start=1):
        toks[u] = f"{k}{letter}"
        toks[v] = str(k)
    return " ".join(toks)


def flat_from_text(text: str) -> FlatWord:
    """Parse the canonical flat-word text form."""
    seen: dict[int, list[tuple[int, str]]] = {}
    for pos, tok in enumerate(text.split()):
        m = _FLAT_TOKEN_RE.match(tok)
        if m is None:
            raise MalformedToken(f"bad flat token {tok!r} at position {pos}")
        seen.setdefault(int(m.group(1)), []).append((pos, m.group(2)))
    chords = []
    for ident, occ in seen.items():
        if len(occ) != 2:
            raise MalformedToken(f"flat chord {ident} occurs {len(occ)} times")
        (u, first_letter), (v, second_letter) = occ
        if not first_letter or second_letter:
            raise MalformedToken(
                f"flat chord {ident}: letter belongs on the first occurrence only"
            )
        chords.append((u, v, first_letter))
    return FlatWord(tuple(chords))
