"""Nine-region symbolic dynamics for the aeroplane lamination map.

The circle is cut at the points ±r/14 (1 <= r <= 6) into fourteen sectors,
paired by conjugation into seven labelled regions: R1, R2, R3, C (refined
into UC above and BC below the real axis), L3, L2, L1.  Under doubling the
regions map

    R1, L1 -> R1 | R2      R2, L2 -> R3 | C
    R3, L3 -> L3 | L2      C      -> L1

and this transition table pins the labelling uniquely; ``verify_region_table``
checks both facts exactly.  Words over the letters index the chord-bounded
regions D(w); their circle traces are computed by an exact interval
recurrence, which is what every ordering and containment predicate in the
package reduces to.

Conventions: 0 is interior to R1 and 1/2 interior to L1; itineraries report
the coarse letter C unless UC/BC refinement is requested.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .angles import Angle, conjugate
from .errors import (
    BoundaryAngle,
    InadmissibleCycle,
    InadmissibleWord,
    MissingFinalC,
    PrefixRelated,
    UnsupportedAlphabet,
)

F = Fraction


class Letter(Enum):
    L1 = "1"
    L2 = "2"
    L3 = "3"
    R1 = "p"
    R2 = "q"
    R3 = "r"
    C = "c"
    UC = "u"
    BC = "b"

    @property
    def char(self) -> str:
        return self.value

    @property
    def coarse(self) -> "Letter":
        return Letter.C if self in (Letter.UC, Letter.BC) else self

    @property
    def is_c_class(self) -> bool:
        return self in (Letter.C, Letter.UC, Letter.BC)

    @property
    def flips(self) -> bool:
        """Whether prefixing this letter reverses arc orientation."""
        return self in (Letter.L1, Letter.L2, Letter.L3)

    def __repr__(self) -> str:
        return self.name


CHAR_TO_LETTER = {l.value: l for l in Letter}

# successor letters (coarse) allowed by the transition table
TARGETS = {
    Letter.R1: frozenset({Letter.R1, Letter.R2}),
    Letter.L1: frozenset({Letter.R1, Letter.R2}),
    Letter.R2: frozenset({Letter.R3, Letter.C}),
    Letter.L2: frozenset({Letter.R3, Letter.C}),
    Letter.R3: frozenset({Letter.L3, Letter.L2}),
    Letter.L3: frozenset({Letter.L3, Letter.L2}),
    Letter.C: frozenset({Letter.L1}),
}

RESTRICTED = frozenset({Letter.L3, Letter.L2, Letter.R3})

_TOKEN_RE = re.compile(r"^(L1|L2|L3|R1|R2|R3|UC|BC|C)(?:\^(\d+))?$")


def _pair_ok(x: Letter, y: Letter) -> bool:
    return y.coarse in TARGETS[x.coarse]


@dataclass(frozen=True, slots=True)
class Word:
    """A finite sequence of letters, stored as a compact char string."""

    chars: str = ""

    @staticmethod
    def of(*letters: Letter) -> "Word":
        return Word("".join(l.value for l in letters))

    @staticmethod
    def parse(text: str, raw: bool = False) -> "Word":
        """Parse dot/space separated letter names with optional ^powers.

        Inadmissible words are rejected unless ``raw`` is true.
        """
        parts = [p for p in re.split(r"[.\s]+", text.strip()) if p]
        chars = []
        for part in parts:
            m = _TOKEN_RE.match(part)
            if not m:
                raise InadmissibleWord(f"cannot parse word token {part!r}")
            letter = Letter[m.group(1)]
            count = int(m.group(2)) if m.group(2) else 1
            chars.append(letter.value * count)
        word = Word("".join(chars))
        if not raw and not admissible(word):
            raise InadmissibleWord(f"inadmissible word {word}")
        return word

    def __len__(self) -> int:
        return len(self.chars)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.chars[i])
        return CHAR_TO_LETTER[self.chars[i]]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.chars + other.chars)

    def __mul__(self, n: int) -> "Word":
        return Word(self.chars * n)

    def __iter__(self):
        return (CHAR_TO_LETTER[ch] for ch in self.chars)

    def __bool__(self) -> bool:
        return bool(self.chars)

    def __str__(self) -> str:
        return " ".join(CHAR_TO_LETTER[ch].name for ch in self.chars)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def startswith(self, other: "Word") -> bool:
        return self.chars.startswith(other.chars)

    def endswith(self, other: "Word") -> bool:
        return self.chars.endswith(other.chars)

    def find_all(self, sub: "Word") -> tuple[int, ...]:
        """All (possibly overlapping) occurrence positions of ``sub``."""
        if not sub.chars:
            return ()
        out = []
        i = self.chars.find(sub.chars)
        while i != -1:
            out.append(i)
            i = self.chars.find(sub.chars, i + 1)
        return tuple(out)

    @property
    def l32_count(self) -> int:
        """Number of letters in {L3, L2} (the parity that matters)."""
        return self.chars.count("3") + self.chars.count("2")

    @property
    def flip_count(self) -> int:
        c = self.chars
        return c.count("1") + c.count("2") + c.count("3")


def W(chars: str) -> Word:
    """Shorthand constructor from compact chars."""
    return Word(chars)


def admissible(word: Word) -> bool:
    """True iff every consecutive letter pair follows the transition table."""
    for x, y in itertools.pairwise(word):
        if not _pair_ok(x, y):
            return False
    return True


def require_admissible(word: Word) -> None:
    if not admissible(word):
        raise InadmissibleWord(f"inadmissible word {word}")


def cyclically_admissible(word: Word) -> bool:
    return bool(word) and admissible(word) and _pair_ok(word[-1], word[0])


@dataclass(frozen=True, slots=True, order=True)
class Arc:
    """Open interval (lo, hi) on the upper semicircle, exact endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty arc ({self.lo}, {self.hi})")

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def is_right_of(self, other: "Arc") -> bool:
        """Smaller upper-semicircle angles are further right."""
        return self.hi <= other.lo

    def contains_arc(self, other: "Arc") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def contains_strictly(self, theta: Fraction) -> bool:
        return self.lo < theta < self.hi

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


# Upper-semicircle base arcs, one sector of width 1/14 per letter.
# BC lives on the lower semicircle and has no upper trace.
BASE_ARC = {
    "p": Arc(F(0), F(1, 14)),
    "q": Arc(F(1, 14), F(2, 14)),
    "r": Arc(F(2, 14), F(3, 14)),
    "c": Arc(F(3, 14), F(4, 14)),
    "u": Arc(F(3, 14), F(4, 14)),
    "3": Arc(F(4, 14), F(5, 14)),
    "2": Arc(F(5, 14), F(6, 14)),
    "1": Arc(F(6, 14), F(7, 14)),
}

# sector index 0..13 -> letter char (lower sectors mirror the upper ones)
SECTOR_CHARS = "pqru321" + "123brqp"


def region_of(theta: Angle) -> Letter:
    """The letter whose region contains ``theta``; UC/BC on the C arcs.

    Raises BoundaryAngle on the chord endpoint set {k/14, k != 0, 7}.
    """
    theta = theta % 1
    scaled = theta * 14
    if scaled.denominator == 1:
        k = scaled.numerator
        if k == 0:
            return Letter.R1
        if k == 7:
            return Letter.L1
        raise BoundaryAngle(theta)
    return CHAR_TO_LETTER[SECTOR_CHARS[int(scaled)]]


def itinerary(theta: Angle, depth: int, refine_c: bool = False) -> Word:
    """Letters of the first ``depth`` doubling iterates of ``theta``.

    C-class letters are reported coarsely unless ``refine_c`` is set.
    Raises BoundaryAngle (carrying the offending iterate index) if the
    orbit hits a chord endpoint within range.
    """
    chars = []
    t = theta % 1
    for k in range(depth):
        try:
            letter = region_of(t)
        except BoundaryAngle:
            raise BoundaryAngle(theta, k) from None
        if not refine_c:
            letter = letter.coarse
        chars.append(letter.value)
        t = (2 * t) % 1
    return Word("".join(chars))


def _step_arc(ch: str, arc: Arc) -> Arc:
    """Trace arc of (letter + tail) from the tail's trace arc."""
    if ch in ("1", "2", "3"):
        return Arc((1 - arc.hi) / 2, (1 - arc.lo) / 2)
    if ch in ("p", "q", "r", "c", "u"):
        return Arc(arc.lo / 2, arc.hi / 2)
    raise UnsupportedAlphabet(f"letter {CHAR_TO_LETTER[ch].name} has no trace rule")


@lru_cache(maxsize=8192)
def _trace_arc(chars: str) -> Arc:
    """Upper-semicircle trace of D(word) for any traceable word."""
    if not chars:
        raise ValueError("empty word has no arc")
    arc = BASE_ARC.get(chars[-1])
    if arc is None:
        raise UnsupportedAlphabet(
            f"letter {CHAR_TO_LETTER[chars[-1]].name} has no upper trace"
        )
    for ch in reversed(chars[:-1]):
        arc = _step_arc(ch, arc)
    return arc


def _check_restricted(word: Word) -> None:
    body, last = word.chars[:-1], word.chars[-1]
    if last not in "32rc":
        raise UnsupportedAlphabet(f"unsupported final letter in {word}")
    if any(ch not in "32r" for ch in body):
        raise UnsupportedAlphabet(f"letters outside L3/L2/R3 in {word}")


def upper_arc(word: Word) -> Arc:
    """Trace of D(word) on the upper semicircle.

    The word must be admissible over {L3, L2, R3} with at most a single
    final C.  Backward recurrence: an R-letter prefix halves the arc, an
    L-letter prefix flips and halves it; the lower trace is the conjugate.
    """
    if not word:
        raise InadmissibleWord("empty word")
    _check_restricted(word)
    require_admissible(word)
    return _trace_arc(word.chars)


def arc_under_prefix(prefix: Word, arc: Arc) -> Arc:
    """Image of ``arc`` under the inverse-branch chain named by ``prefix``."""
    for ch in reversed(prefix.chars):
        arc = _step_arc(ch, arc)
    return arc


def suffix_arcs(word: Word) -> list[Arc]:
    """Trace arcs of every suffix word[j:], in one backward pass."""
    n = len(word.chars)
    out: list[Arc] = [None] * n  # type: ignore[list-item]
    arc = BASE_ARC[word.chars[-1]]
    out[n - 1] = arc
    for j in range(n - 2, -1, -1):
        arc = _step_arc(word.chars[j], arc)
        out[j] = arc
    return out


def word_less(v: Word, w: Word) -> bool:
    """Order by position: v < w iff D(v) is to the right of D(w).

    Right means smaller upper-semicircle angle; shared boundary chords
    are allowed.  Prefix-related pairs are not comparable.
    """
    if v.chars.startswith(w.chars) or w.chars.startswith(v.chars):
        raise PrefixRelated(f"{v} and {w} are prefix-related")
    return _trace_arc(v.chars).is_right_of(_trace_arc(w.chars))


# --- precritical points -----------------------------------------------------

CYCLE_CHARS = "1qc"  # letters following a C: L1, R2, C, L1, ...


@dataclass(frozen=True, slots=True)
class PrecriticalPoint:
    """The lowest-preperiod backward-orbit point in D(word).

    ``word`` is admissible and ends with its only C-class letter; the
    point reaches the critical point after len(word) - 1 steps.
    """

    word: Word

    def __post_init__(self):
        w = self.word
        if not w or not w[-1].is_c_class:
            raise MissingFinalC(f"word {w} does not end in C")
        if any(l.is_c_class for l in w[:-1]):
            raise InadmissibleWord(f"C-class letter before the end in {w}")
        require_admissible(w)

    @property
    def preperiod(self) -> int:
        return len(self.word) - 1

    def stream_char(self, j: int) -> str:
        """j-th letter of the full forward itinerary (coarse C)."""
        n = len(self.word)
        if j < n:
            ch = self.word.chars[j]
            return "c" if ch in "ub" else ch
        return CYCLE_CHARS[(j - n) % 3]

    def arc(self) -> Arc:
        return _trace_arc(self.word.chars)

    def __str__(self) -> str:
        return f"p({self.word})"


def point_from_word(word: Word) -> PrecriticalPoint:
    return PrecriticalPoint(word)


def full_itinerary(p: PrecriticalPoint, depth: int) -> Word:
    """The point's itinerary: its word, then (L1 R2 C) forever."""
    if depth < len(p.word):
        raise ValueError(f"depth {depth} shorter than |{p.word}|")
    return Word("".join(p.stream_char(j) for j in range(depth)))


def point_in_region(p: PrecriticalPoint, e: Word) -> bool:
    """Whether the point lies in D(e), i.e. e prefixes its itinerary."""
    require_admissible(e)
    for j, ch in enumerate(e.chars):
        want = "c" if ch in "ub" else ch
        if p.stream_char(j) != want:
            return False
    return True


# the three critical-cycle points, as itinerary words
CYCLE_POINTS = (W("c"), W("1qc"), W("qc"))


# --- leaves -----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Leaf:
    """A vertical chord {upper, lower = conjugate(upper)}; may degenerate."""

    upper: Fraction
    lower: Fraction

    @property
    def degenerate(self) -> bool:
        return self.upper == self.lower

    def __str__(self) -> str:
        return f"{{{self.upper}, {self.lower}}}"


def periodic_leaf(word: Word) -> Leaf:
    """The vertical leaf coded by word^infinity.

    The trace recurrence of an N-letter cycle composes to an affine map
    t -> (s*t + m) / 2^N with s = +-1 by orientation parity; the leaf's
    upper endpoint is its unique fixed point m / (2^N - s), a rational
    with denominator dividing 2^N - s.  The lower endpoint is the
    conjugate; equal endpoints are flagged via ``Leaf.degenerate``.

    The word must be letterwise admissible over the six L/R letters.  When
    the wrap pair (last letter to first) is also admissible the fixed point
    is checked against the closed trace arc; otherwise the formal fixed
    point is returned as-is (the degenerate single-letter cases).
    """
    if not word:
        raise InadmissibleCycle("empty cycle")
    if any(l.is_c_class for l in word):
        raise InadmissibleCycle(f"C-class letter in cycle {word}")
    if not admissible(word):
        raise InadmissibleCycle(f"inadmissible cycle word {word}")
    s, num, n = 1, 0, 0
    for ch in reversed(word.chars):
        if ch in "123":
            s, num = -s, 2**n - num
        n += 1
    upper = F(num, 2**n - s) % 1
    lower = conjugate(upper)
    if cyclically_admissible(word):
        arc = _trace_arc(word.chars)
        if not (arc.lo <= upper <= arc.hi) and not (upper == lower == 0):
            raise InadmissibleCycle(
                f"fixed point {upper} escapes the trace of {word}"
            )
    return Leaf(upper, lower)


# --- region table verification ----------------------------------------------

SLOT_LETTERS = (
    Letter.R1,
    Letter.R2,
    Letter.R3,
    Letter.C,
    Letter.L3,
    Letter.L2,
    Letter.L1,
)


def _sector_intervals(slot: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """Upper and lower sector intervals of conjugate-pair slot 0..6."""
    lo, hi = F(slot, 14), F(slot + 1, 14)
    return ((lo, hi), (1 - hi, 1 - lo))


def _double_interval(lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    a, b = 2 * lo, 2 * hi
    if b <= 1:
        return [(a, b)]
    if a >= 1:
        return [(a - 1, b - 1)]
    return [(a, F(1)), (F(0), b - 1)]


def _normalize(intervals) -> tuple[tuple[Fraction, Fraction], ...]:
    merged: list[list[Fraction]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(hi, merged[-1][1])
        else:
            merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


def _slot_transition(slot: int) -> frozenset[int]:
    """Slots covered by doubling both sectors of a slot."""
    covered = set()
    for lo, hi in _sector_intervals(slot):
        start = int(2 * lo * 14)  # doubled sector spans two sectors
        for k in (start % 14, (start + 1) % 14):
            covered.add(k if k <= 6 else 13 - k)
    return frozenset(covered)


def region_table_assignments() -> list[dict[int, Letter]]:
    """All slot -> letter assignments consistent with the transitions."""
    slot_targets = {i: _slot_transition(i) for i in range(7)}
    found = []
    for perm in itertools.permutations(SLOT_LETTERS):
        letter_of = dict(enumerate(perm))
        if all(
            frozenset(letter_of[j] for j in slot_targets[i]) == TARGETS[letter_of[i]]
            for i in range(7)
        ):
            found.append(letter_of)
    return found


def verify_region_table() -> list[dict]:
    """Exact transition soundness and uniqueness of the labelling."""
    claims = []
    for slot, letter in enumerate(SLOT_LETTERS):
        image = _normalize(
            iv
            for sector in _sector_intervals(slot)
            for iv in _double_interval(*sector)
        )
        expected = _normalize(
            iv
            for t in TARGETS[letter]
            for iv in _sector_intervals(SLOT_LETTERS.index(t))
        )
        claims.append(
            {
                "id": f"region-table/transition-{letter.name}",
                "locus": "1.4",
                "status": "pass" if image == expected else "fail",
                "witness": {
                    "image": [[str(a), str(b)] for a, b in image],
                    "expected": [[str(a), str(b)] for a, b in expected],
                },
            }
        )
    assignments = region_table_assignments()
    unique = len(assignments) == 1 and assignments[0] == dict(enumerate(SLOT_LETTERS))
    claims.append(
        {
            "id": "region-table/unique-labelling",
            "locus": "1.4",
            "status": "pass" if unique else "fail",
            "witness": {"consistent_assignments": len(assignments)},
        }
    )
    return claims
