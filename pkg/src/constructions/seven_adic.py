"""
Seven-adic Cantor constructions.

Every interval is split into seven closed pieces K1 J00 J01 K2 J10 J11 K3;
for each kept interval u and each a in {0, 1} one bit b of the stream picks
J_ab. Intervals are stored as integer numerators over 7**level.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from core.errors import PreconditionError
from constructions.bit_source import BitSource
from models.intervals import IntervalSet

logger = logging.getLogger(__name__)

# offset of J_ab inside the seven-way split
CHILD_OFFSETS: Dict[Tuple[int, int], int] = {(0, 0): 1, (0, 1): 2, (1, 0): 4, (1, 1): 5}

BitsLike = Union[str, Sequence[int]]


def seven_adic_children(interval: Tuple[Fraction, Fraction]) -> Dict[str, Tuple[Fraction, Fraction]]:
    """J00, J01, J10, J11: the 2nd, 3rd, 5th and 6th sevenths of a closed interval."""
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if not hi > lo:
        raise PreconditionError(f"degenerate interval [{lo}, {hi}]", module="constructions")
    w = (hi - lo) / 7
    return {f"{a}{b}": (lo + k * w, lo + (k + 1) * w) for (a, b), k in CHILD_OFFSETS.items()}


def build_construction(bits: BitSource, L: int) -> List[IntervalSet]:
    """
    Levels 0..L of the randomized construction driven by `bits`.

    Level l -> l+1 reads 2**(l+1) bits in the order b_{u0}, b_{u1} for u in
    lexicographic order, so the cursor advances by 2**(L+1) - 2 overall.
    """
    if L < 0:
        raise PreconditionError("depth must be nonnegative", module="constructions")
    start = bits.cursor
    levels = [IntervalSet(level=0, intervals=[(0, 1)], denominator_power=0, labels=[""])]
    for level in range(L):
        current = levels[-1]
        stream = bits.take(2 ** (level + 1))
        labels, intervals = [], []
        for i, (label, (n, _)) in enumerate(zip(current.labels, current.intervals)):
            for a in (0, 1):
                b = stream[2 * i + a]
                m = 7 * n + CHILD_OFFSETS[(a, b)]
                labels.append(f"{label}{a}{b}")
                intervals.append((m, m + 1))
        levels.append(IntervalSet(level=level + 1, intervals=intervals, denominator_power=level + 1, labels=labels))
    logger.info(f"[Constructions] Built depth {L} from {bits.descriptor}: {len(levels[-1])} intervals, "
                f"{bits.cursor - start} bits read")
    return levels


def self_similar_e0(L: int) -> IntervalSet:
    """Level L of the set of reals whose base-7 digits are all 1 or 4 (an all-zero stream)."""
    return build_construction(BitSource.constant(0), L)[L]


def level_violations(levels: Sequence[IntervalSet]) -> List[str]:
    """Exact check of counts, widths, gaps and nesting across consecutive levels."""
    problems = []
    for iset in levels:
        unit = Fraction(1, 7 ** iset.level)
        if len(iset) != 2 ** iset.level:
            problems.append(f"level {iset.level}: {len(iset)} intervals, expected {2 ** iset.level}")
        if any(w != unit for w in iset.widths()):
            problems.append(f"level {iset.level}: width differs from 7^-{iset.level}")
        if any(g < unit for g in iset.gaps()):
            problems.append(f"level {iset.level}: gap below 7^-{iset.level}")
    for parent, child in zip(levels, levels[1:]):
        spans = parent.fractions()
        for lo, hi in child.fractions():
            holders = sum(1 for plo, phi in spans if plo <= lo and hi <= phi)
            if holders != 1:
                problems.append(f"level {child.level}: [{lo}, {hi}] nested in {holders} parents")
    return problems


def g_map_digits(S: Sequence[int], R: BitsLike, n_digits: int) -> List[int]:
    """g(S)[n] = S[n] + R[2n + S[n]]: a 1 becomes 1 or 2, a 4 becomes 4 or 5."""
    R = _as_bits(R)
    if n_digits > len(S):
        raise PreconditionError(f"S has {len(S)} digits, {n_digits} requested", module="constructions")
    out = []
    for n in range(n_digits):
        digit = S[n]
        if digit not in (1, 4):
            raise PreconditionError(f"digit {digit!r} at position {n} is not 1 or 4", module="constructions")
        index = 2 * n + digit
        if index >= len(R):
            raise PreconditionError(f"R needs index {index}, has {len(R)} bits", module="constructions")
        out.append(digit + R[index])
    return out


def arrange_bits_for_g_map(R: BitsLike, L: int) -> BitSource:
    """
    Stream under which build_construction selects J_ab with b = R[2n + 1 + 3a]
    at level n for every interval, i.e. the choices the g map makes.
    Positions 0 and 2 of R are never read.
    """
    R = _as_bits(R)
    if L > 0 and len(R) < 2 * (L - 1) + 5:
        raise PreconditionError(f"R needs {2 * (L - 1) + 5} bits for depth {L}", module="constructions")
    stream = []
    for n in range(L):
        pair = [R[2 * n + 1], R[2 * n + 4]]
        stream.extend(pair * (2 ** n))
    return BitSource.from_bits(stream)


def point_from_digits(digits: Sequence[int]) -> Fraction:
    """0.d1 d2 d3 ... in base 7, exactly."""
    if any(d not in range(7) for d in digits):
        raise PreconditionError("base-7 digits must lie in 0..6", module="constructions")
    numerator = 0
    for d in digits:
        numerator = 7 * numerator + d
    return Fraction(numerator, 7 ** len(digits))


def interval_set_diameters(iset: IntervalSet) -> List[Fraction]:
    """Diameters of the canonical cover of a level by its own intervals."""
    return iset.widths()


def _as_bits(R: BitsLike) -> List[int]:
    if isinstance(R, str):
        if set(R) - {"0", "1"}:
            raise PreconditionError("bit strings hold 0/1 only", module="constructions")
        return [int(c) for c in R]
    bits = list(R)
    if any(b not in (0, 1) for b in bits):
        raise PreconditionError("bit lists hold 0/1 only", module="constructions")
    return bits
