"""Graded rank tables for sutured solid tori and tensor-product bookkeeping."""

from dataclasses import dataclass
from math import comb

from .errors import NonpositiveP, OddSutureCount


@dataclass(frozen=True)
class GradedRanks:
    """Finitely supported map from an integer grading to nonnegative ranks."""

    ranks: tuple  # sorted ((grading, rank), ...) with rank > 0

    @classmethod
    def from_dict(cls, table):
        items = []
        for grading, rank in sorted(table.items()):
            rank = int(rank)
            if rank < 0:
                raise ValueError(f"negative rank {rank} at grading {grading}")
            if rank:
                items.append((int(grading), rank))
        return cls(tuple(items))

    def as_dict(self):
        return dict(self.ranks)

    def __getitem__(self, grading):
        return self.as_dict().get(grading, 0)

    @property
    def total_rank(self):
        return sum(rank for _, rank in self.ranks)


def torus_sfh(p, q, n):
    """Rank table of the solid torus whose sutures are n parallel (p, q) curves.

    With n = 2k + 2 the rank at grading i is C(k, i // p) for 0 <= i < p(k+1)
    and zero elsewhere.  The parameter q does not enter the pattern; it is
    accepted so callers can keep the full suture description.
    """
    if p < 1:
        raise NonpositiveP(f"longitudinal winding p must be >= 1, got {p}")
    if n % 2 or n < 2:
        raise OddSutureCount(
            f"suture count must be a positive even integer >= 2, got {n}"
        )
    k = (n - 2) // 2
    return GradedRanks.from_dict(
        {i: comb(k, i // p) for i in range(p * (k + 1))}
    )


def tensor_ranks(g1, g2):
    """Convolution of two graded rank tables; total ranks multiply."""
    out = {}
    for i, r1 in g1.ranks:
        for j, r2 in g2.ranks:
            out[i + j] = out.get(i + j, 0) + r1 * r2
    return GradedRanks.from_dict(out)
