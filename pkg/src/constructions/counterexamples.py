from fractions import Fraction
from typing import List

from core.errors import PreconditionError


def one_over_n_points(n_max: int) -> List[Fraction]:
    """{1/n : 1 <= n <= n_max}, largest first. A countable compact set whose compact subsets are all finite."""
    if n_max < 1:
        raise PreconditionError(f"n_max must be at least 1, got {n_max}", module="constructions")
    return [Fraction(1, n) for n in range(1, n_max + 1)]
