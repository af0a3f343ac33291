"""Majorization and the squared-sum comparison it licenses.

Sequences are plain non-increasing integer sequences (tuples, lists, or
DegreeSequence.values).  Only f(t) = t^2 is built in: it is the one
strictly convex function the energy comparisons need, and keeping it fixed
makes the contract exactly testable.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from stlab.families import gen_fnk
from stlab.invariants import laplacian_energy
from stlab.digraph import out_degree_sequence


class KaramataVerdict(Enum):
    HOLDS_STRICT = "holds_strict"
    HOLDS_EQUAL = "holds_equal"
    NOT_APPLICABLE = "not_applicable"


def _check_pair(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    for seq, name in ((x, "x"), (y, "y")):
        if any(a < b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"{name} is not non-increasing: {tuple(seq)}")


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff every prefix sum of x dominates y's and the totals agree."""
    _check_pair(x, y)
    sx = sy = 0
    for a, b in zip(x, y):
        sx += a
        sy += b
        if sx < sy:
            return False
    return sx == sy


def karamata_square_check(x: Sequence[int], y: Sequence[int]) -> KaramataVerdict:
    """Verdict of the squared-sum inequality under majorization.

    NOT_APPLICABLE when x does not majorize y; HOLDS_EQUAL when x == y;
    otherwise HOLDS_STRICT, with sum(x^2) > sum(y^2) verified numerically.
    """
    if not majorizes(x, y):
        return KaramataVerdict.NOT_APPLICABLE
    if tuple(x) == tuple(y):
        return KaramataVerdict.HOLDS_EQUAL
    sq_x = sum(a * a for a in x)
    sq_y = sum(b * b for b in y)
    if sq_x <= sq_y:
        raise ArithmeticError(
            f"strict convexity violated: {sq_x} <= {sq_y} for majorizing {tuple(x)} over {tuple(y)}"
        )
    return KaramataVerdict.HOLDS_STRICT


def verify_fnk_ordering(n: int, k: int) -> list[tuple[int, int]]:
    """Laplacian energies of the residual-block placements, checked increasing.

    Returns [(s, LE of the member with the residual block at position s+1)]
    for s = 0..q.  Raises if the energies are not strictly increasing in s,
    or if a later placement fails to majorize an earlier one (prefix sums
    of the outdegree sequence), or when n % k == 0 and there is only the
    single member with nothing to order.
    """
    q, r = divmod(n, k)
    if r == 0:
        raise ValueError(f"n={n}, k={k}: single member, no ordering to verify")
    members = [gen_fnk(n, k, s + 1) for s in range(q + 1)]
    energies = [laplacian_energy(g) for g in members]
    for s in range(q):
        if not energies[s] < energies[s + 1]:
            raise ArithmeticError(
                f"energy ordering violated at n={n}, k={k}: "
                f"LE(s={s})={energies[s]} !< LE(s={s + 1})={energies[s + 1]}"
            )
    seqs = [out_degree_sequence(g).values for g in members]
    for s_lo in range(q + 1):
        for s_hi in range(s_lo + 1, q + 1):
            if not majorizes(seqs[s_hi], seqs[s_lo]):
                raise ArithmeticError(
                    f"majorization violated at n={n}, k={k}: "
                    f"placement {s_hi} does not majorize placement {s_lo}"
                )
    return list(enumerate(energies))
