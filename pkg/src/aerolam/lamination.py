"""Finite-depth pullback of the invariant lamination from its minor leaf.

Each chord {t1, t2} has two preimage chords on the angle set
{t1/2, t1/2 + 1/2, t2/2, t2/2 + 1/2}.  Of the two ways to pair these four
angles, the builder keeps the pairing whose chords cross nothing already
present; if both survive, the one maximizing the minimum angular chord
length wins (this reproduces the true major leaves, of length 3/7, at the
critical step).  A tie would raise PairingAmbiguity rather than guess.

A minor-seeded pullback contains every backward iterate of the minor but
not its forward cycle, so the forward-invariance check applies to leaves
of depth >= 1 (finite-depth truncation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .angles import Angle
from .errors import PairingAmbiguity, UnsupportedAngle

F = Fraction

MINOR = (F(3, 7), F(4, 7))


@dataclass(frozen=True, slots=True, order=True)
class Chord:
    """Unordered chord of the circle, endpoints sorted exactly."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(x: Fraction, y: Fraction) -> "Chord":
        x, y = x % 1, y % 1
        return Chord(min(x, y), max(x, y))

    @property
    def arc_length(self) -> Fraction:
        d = self.b - self.a
        return min(d, 1 - d)

    def crosses(self, other: "Chord") -> bool:
        """Endpoints interleave strictly around the circle."""
        return (self.a < other.a < self.b) != (self.a < other.b < self.b)

    def image(self) -> "Chord":
        return Chord.of((2 * self.a) % 1, (2 * self.b) % 1)

    def __str__(self) -> str:
        return f"{{{self.a}, {self.b}}}"


def minor_leaf_of(p: Angle) -> Chord:
    """The minor leaf determined by an odd-denominator angle.

    Only the aeroplane minor {3/7, 4/7} is supported; other angles raise
    UnsupportedAngle.
    """
    if p.denominator % 2 == 0:
        raise UnsupportedAngle(f"{p} has even denominator")
    if p in MINOR:
        return Chord(*MINOR)
    raise UnsupportedAngle(f"minor partner search not supported for {p}")


@dataclass(frozen=True, slots=True)
class Lamination:
    minor: Chord
    layers: tuple[tuple[Chord, ...], ...]  # layers[d] holds the depth-d leaves

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    @property
    def leaves(self) -> tuple[Chord, ...]:
        return tuple(c for layer in self.layers for c in layer)


class _ChordPool:
    """Grows int64 endpoint arrays for vectorized crossing tests.

    All angles produced by a depth-d pullback of the minor are multiples
    of 1/(7 * 2^d); everything is scaled to the common denominator once.
    """

    def __init__(self, scale: int):
        self.scale = scale
        self._a: list[int] = []
        self._b: list[int] = []
        self.a = np.empty(0, dtype=np.int64)
        self.b = np.empty(0, dtype=np.int64)

    def _scaled(self, x: Fraction) -> int:
        s = x * self.scale
        assert s.denominator == 1
        return int(s)

    def add(self, chord: Chord) -> None:
        self._a.append(self._scaled(chord.a))
        self._b.append(self._scaled(chord.b))

    def flush(self) -> None:
        self.a = np.asarray(self._a, dtype=np.int64)
        self.b = np.asarray(self._b, dtype=np.int64)

    def crosses_any(self, chord: Chord) -> bool:
        # stale entries since the last flush are checked by the caller
        if not len(self.a):
            return False
        a, b = self._scaled(chord.a), self._scaled(chord.b)
        ina = (a < self.a) & (self.a < b)
        inb = (a < self.b) & (self.b < b)
        return bool(np.any(ina != inb))


def _preimage_pairings(chord: Chord) -> tuple[tuple[Chord, Chord], tuple[Chord, Chord]]:
    h1, h2 = chord.a / 2, chord.b / 2
    straight = (Chord.of(h1, h2), Chord.of(h1 + HALF, h2 + HALF))
    crossed = (Chord.of(h1, h2 + HALF), Chord.of(h1 + HALF, h2))
    return straight, crossed


HALF = F(1, 2)


def pullback_lamination(minor: Chord, depth: int) -> Lamination:
    """Iterated preimage layers of the minor, choosing valid pairings."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > 50:
        raise ValueError("depth beyond the supported exact-int range")
    layers: list[tuple[Chord, ...]] = [(minor,)]
    pool = _ChordPool(7 * 2**depth)
    pool.add(minor)
    pool.flush()
    for d in range(1, depth + 1):
        new_layer: list[Chord] = []
        for frontier in layers[-1]:
            candidates = [
                pairing
                for pairing in _preimage_pairings(frontier)
                if not pairing[0].crosses(pairing[1])
                and not pool.crosses_any(pairing[0])
                and not pool.crosses_any(pairing[1])
            ]
            if not candidates:
                raise PairingAmbiguity(
                    f"no crossing-free preimage pairing for {frontier} at depth {d}"
                )
            if len(candidates) == 2:
                m0 = min(c.arc_length for c in candidates[0])
                m1 = min(c.arc_length for c in candidates[1])
                if m0 == m1:
                    raise PairingAmbiguity(
                        f"tied preimage pairings for {frontier} at depth {d}"
                    )
                candidates = [candidates[0] if m0 > m1 else candidates[1]]
            new_layer.extend(candidates[0])
            pool.add(candidates[0][0])
            pool.add(candidates[0][1])
            pool.flush()
        layers.append(tuple(new_layer))
    return Lamination(minor, tuple(layers))


def _pairwise_non_crossing(leaves: tuple[Chord, ...], scale: int) -> bool:
    n = len(leaves)
    if n < 2:
        return True
    a = np.array([int(c.a * scale) for c in leaves], dtype=np.int64)
    b = np.array([int(c.b * scale) for c in leaves], dtype=np.int64)
    block = max(1, (1 << 22) // max(n, 1))
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        sa, sb = a[lo:hi, None], b[lo:hi, None]
        ina = (sa < a[None, :]) & (a[None, :] < sb)
        inb = (sa < b[None, :]) & (b[None, :] < sb)
        if np.any(ina != inb):
            return False
    return True


def check_invariance(lam: Lamination) -> list[dict]:
    """Forward/backward invariance and global non-crossing, exactly.

    Forward: the image of every leaf of depth >= 1 is a leaf one layer up.
    Backward: both preimage chords of every non-deepest leaf are present.
    """
    claims = []
    layer_sets = [frozenset(layer) for layer in lam.layers]
    forward_ok = all(
        chord.image() in layer_sets[d - 1]
        for d in range(1, len(lam.layers))
        for chord in lam.layers[d]
    )
    claims.append(
        {
            "id": "lamination/forward-invariance",
            "locus": "1.2",
            "status": "pass" if forward_ok else "fail",
            "witness": {"layers": [len(l) for l in lam.layers]},
        }
    )
    backward_ok = True
    for d in range(len(lam.layers) - 1):
        by_endpoint: dict[Fraction, list[Chord]] = {}
        for c in lam.layers[d + 1]:
            by_endpoint.setdefault(c.a, []).append(c)
            by_endpoint.setdefault(c.b, []).append(c)
        for chord in lam.layers[d]:
            angles = {
                (chord.a / 2) % 1,
                (chord.a / 2 + HALF) % 1,
                (chord.b / 2) % 1,
                (chord.b / 2 + HALF) % 1,
            }
            present = {c for t in angles for c in by_endpoint.get(t, ())}
            covered = {t for c in present for t in (c.a, c.b)}
            if len(present) != 2 or covered != angles:
                backward_ok = False
    claims.append(
        {
            "id": "lamination/backward-invariance",
            "locus": "1.2",
            "status": "pass" if backward_ok else "fail",
            "witness": {},
        }
    )
    scale = 7 * 2 ** (len(lam.layers) + 1)
    ok = _pairwise_non_crossing(lam.leaves, scale)
    claims.append(
        {
            "id": "lamination/pairwise-non-crossing",
            "locus": "1.2",
            "status": "pass" if ok else "fail",
            "witness": {"leaves": len(lam.leaves)},
        }
    )
    return claims
