"""Vectorized brute-force oracles, independent of the exact arc recurrence.

These classify whole angle grids through the raw sector table and never
touch the interval machinery they are used to check: region words are
validated against the interval hull of matching dyadic grid angles, and
the mating angles against exhaustive search over the Mersenne grid
j / (2^period - 1).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .coding import SECTOR_CHARS, Word, upper_arc

F = Fraction

_COARSE = str.maketrans("ub", "cc")

_SECTORS_OF_CHAR: dict[str, list[int]] = {}
for _i, _ch in enumerate(SECTOR_CHARS):
    _SECTORS_OF_CHAR.setdefault(_ch, []).append(_i)
_SECTORS_OF_CHAR["c"] = _SECTORS_OF_CHAR["u"] + _SECTORS_OF_CHAR["b"]


def grid_sequences(depth: int = 10, log2_den: int = 14) -> list[str]:
    """Coarse itinerary strings of every angle k / 2^log2_den.

    The dyadic grid misses every region boundary (the only grid angles
    with denominator dividing 14 are 0 and 1/2, interior by convention),
    which is asserted.
    """
    n = 1 << log2_den
    k = np.arange(n, dtype=np.int64)
    rows = np.empty((depth, n), dtype=np.int8)
    for i in range(depth):
        scaled = 14 * k
        on_boundary = (scaled % n == 0) & (k != 0) & (k != n // 2)
        assert not on_boundary.any()
        rows[i] = scaled // n
        k = (2 * k) % n
    chars = np.array(list(SECTOR_CHARS))
    return ["".join(chars[rows[:, j]]).translate(_COARSE) for j in range(n)]


def restricted_words(max_len: int, with_final_c: bool = True) -> list[Word]:
    """All admissible words over {L3, L2, R3} of length <= max_len,
    optionally also those with a single final C."""
    allowed = {"3": "32", "2": "r", "r": "32"}
    bodies: list[str] = []
    frontier = ["3", "2", "r"]
    for length in range(1, max_len + 1):
        bodies.extend(frontier)
        if length < max_len:
            frontier = [s + ch for s in frontier for ch in allowed[s[-1]]]
    words = [Word(b) for b in bodies]
    if with_final_c:
        words.append(Word("c"))
        words.extend(
            Word(b + "c") for b in bodies if len(b) < max_len and b[-1] == "2"
        )
    return words


def hull_check(words: list[Word], depth: int = 10, log2_den: int = 14) -> list[dict]:
    """Compare each word's trace arc with its dyadic grid hull, exactly.

    A word passes iff the upper-semicircle grid angles whose itinerary
    starts with it are precisely those strictly inside its arc, and the
    lower-semicircle matches are exactly their conjugates.
    """
    seqs = grid_sequences(depth, log2_den)
    n = 1 << log2_den
    half = n // 2
    by_prefix: dict[str, list[int]] = {}
    for j, seq in enumerate(seqs):
        for length in range(1, depth + 1):
            by_prefix.setdefault(seq[:length], []).append(j)
    claims = []
    for word in words:
        arc = upper_arc(word)
        hits = by_prefix.get(word.chars, [])
        upper = [j for j in hits if j < half]
        lower = sorted(j for j in hits if j > half)
        inside = [j for j in range(half + 1) if arc.lo < F(j, n) < arc.hi]
        ok = upper == inside and lower == sorted(n - j for j in upper)
        claims.append(
            {
                "id": f"oracle/hull-{word.chars}",
                "locus": "1.4",
                "status": "pass" if ok else "fail",
                "witness": {
                    "grid_matches": len(upper),
                    "arc_interior": len(inside),
                },
            }
        )
    return claims


def mersenne_matches(cycle: Word) -> list[int]:
    """All j whose angle j/(2^N - 1) has itinerary ``cycle``, N = |cycle|.

    Grid angles whose orbit meets a region boundary are skipped; the
    survivors are matched letter by letter over one full period.
    """
    n = len(cycle)
    m = (1 << n) - 1
    k = np.arange(1, m, dtype=np.int64)
    j = k.copy()
    alive = np.ones(len(k), dtype=bool)
    for letter in cycle.chars:
        scaled = 14 * k
        alive &= scaled % m != 0
        sector = scaled // m
        step_ok = np.zeros(len(k), dtype=bool)
        for s in _SECTORS_OF_CHAR[letter]:
            step_ok |= sector == s
        alive &= step_ok
        k = (2 * k) % m
    return sorted(int(x) for x in j[alive])
