"""Partitions, bipartitions and the combinatorial maps built on them.

Partitions are tuples of weakly decreasing positive integers (no trailing
zeros); the empty tuple is the unique partition of 0.  Bipartitions are pairs
of partitions.  Labels for type D irreducibles are unordered bipartitions,
possibly carrying a split index when the two components coincide.
"""
from __future__ import annotations

from functools import cache
from itertools import combinations
from math import factorial
from typing import Iterator, Optional

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]


def is_partition(parts) -> bool:
    """True if parts is a weakly decreasing tuple of positive integers."""
    if not isinstance(parts, tuple):
        return False
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            return False
        if i > 0 and parts[i - 1] < p:
            return False
    return True


def check_partition(parts: Partition) -> Partition:
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(gen(n, n))


@cache
def bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions (lam0, lam1) with |lam0| + |lam1| = n."""
    out = []
    for r in range(n + 1):
        for a in partitions(r):
            for b in partitions(n - r):
                out.append((a, b))
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def contents(lam: Partition) -> tuple[int, ...]:
    """Multiset {j - i : (i, j) a box of lam} (0-based), as a sorted tuple."""
    out = [j - i for i, row in enumerate(lam) for j in range(row)]
    return tuple(sorted(out))


def hook_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // prod


def fits_in_box(lam: Partition, k: int, m: int) -> bool:
    """True iff lam fits inside the rectangle (k^(k+m))."""
    return len(lam) <= k + m and (not lam or lam[0] <= k)


def dagger(lam: Partition, k: int, m: int) -> Partition:
    """Box complement dual inside (k^(k+m)): transpose of the reversed complement.

    The i-th part is #{j in [1, k+m] : k - lam_{k+m+1-j} >= i}; concretely the
    conjugate of the complement row lengths (k - lam_j) read bottom-up.
    """
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    if not fits_in_box(lam, k, m):
        raise ValueError(f"{lam} does not fit in the box ({k}^{k + m})")
    padded = lam + (0,) * (k + m - len(lam))
    complement = tuple(sorted((k - p for p in padded), reverse=True))
    # strip trailing zeros before conjugating
    complement = tuple(p for p in complement if p > 0)
    return conjugate(complement)


@cache
def subpartitions_of_box(k: int, m: int) -> tuple[Partition, ...]:
    """All partitions fitting inside (k^(k+m))."""
    out = []
    for n in range(k * (k + m) + 1):
        for lam in partitions(n):
            if fits_in_box(lam, k, m):
                out.append(lam)
    return tuple(out)


def _contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu}.

    Counts semistandard fillings of the skew shape nu/lam with content mu whose
    reverse reading word (rows top to bottom, each row right to left) is a
    lattice word.
    """
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if not _contains(nu, lam):
        return 0
    if not mu:
        return 1 if nu == lam else 0
    inner = lam + (0,) * (len(nu) - len(lam))
    # cells in reverse reading order
    cells = []
    for i, row in enumerate(nu):
        for j in range(row - 1, inner[i] - 1, -1):
            cells.append((i, j))
    fill: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)  # counts[v] = occurrences of value v so far

    def backtrack(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, len(mu) + 1):
            if counts[v] >= mu[v - 1]:
                continue
            # lattice condition on the reverse reading word
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            # weakly increasing along rows: cell to the right already placed
            right = fill.get((i, j + 1))
            if right is not None and v > right:
                continue
            # strictly increasing down columns: cell above already placed
            above = fill.get((i - 1, j))
            if above is not None and v <= above:
                continue
            fill[(i, j)] = v
            counts[v] += 1
            total += backtrack(idx + 1)
            counts[v] -= 1
            del fill[(i, j)]
        return total

    return backtrack(0)


@cache
def refinement_le(lam: Partition, mu: Partition) -> bool:
    """True iff the parts of lam can be grouped into sums giving the parts of mu.

    Equivalently the Young subgroup S_lam embeds in S_mu up to conjugacy.
    """
    if sum(lam) != sum(mu):
        raise ValueError("refinement_le needs partitions of the same n")

    @cache
    def solve(rest: Partition, targets: Partition) -> bool:
        if not targets:
            return not rest
        goal = targets[0]
        idxs = range(len(rest))
        # the first remaining part must land in some group; fix it in this one
        for size in range(1, len(rest) + 1):
            for combo in combinations(idxs[1:], size - 1):
                chosen = (0,) + combo
                if sum(rest[i] for i in chosen) == goal:
                    remaining = tuple(rest[i] for i in idxs if i not in chosen)
                    if solve(remaining, targets[1:]):
                        return True
        return False

    if not mu:
        return not lam
    return solve(lam, mu)


# ---------------------------------------------------------------------------
# Unordered bipartitions (type D labels)
# ---------------------------------------------------------------------------

DLabel = tuple[Partition, Partition, Optional[int]]
"""(first, second, split): first >= second in tuple order; split is None for
first != second and 1 or 2 when first == second."""


def d_label(lam: Partition, mu: Partition, split: Optional[int] = None) -> DLabel:
    """Canonical unordered-bipartition label for type D."""
    first, second = (lam, mu) if lam >= mu else (mu, lam)
    if first == second:
        if split not in (1, 2):
            raise ValueError("equal components need a split index 1 or 2")
        return (first, second, split)
    if split is not None:
        raise ValueError("split index only allowed for equal components")
    return (first, second, None)


@cache
def d_labels(n: int) -> tuple[DLabel, ...]:
    """All type-D irreducible labels for D_n."""
    seen = set()
    out = []
    for a, b in bipartitions(n):
        if a == b:
            for s in (1, 2):
                lab = (a, b, s)
                if lab not in seen:
                    seen.add(lab)
                    out.append(lab)
        else:
            lab = d_label(a, b)
            if lab not in seen:
                seen.add(lab)
                out.append(lab)
    return tuple(out)


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------

def partition_to_json(lam: Partition) -> list[int]:
    return list(lam)


def partition_from_json(data) -> Partition:
    return check_partition(tuple(data))


def bipartition_to_json(bp: Bipartition) -> list[list[int]]:
    return [list(bp[0]), list(bp[1])]


def bipartition_from_json(data) -> Bipartition:
    if len(data) != 2:
        raise ValueError(f"not a bipartition: {data!r}")
    return (check_partition(tuple(data[0])), check_partition(tuple(data[1])))


def d_label_to_json(lab: DLabel) -> dict:
    first, second, split = lab
    return {"pair": [list(first), list(second)], "split": split}


def d_label_from_json(data) -> DLabel:
    first = check_partition(tuple(data["pair"][0]))
    second = check_partition(tuple(data["pair"][1]))
    return d_label(first, second, data.get("split"))


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def format_bipartition(bp: Bipartition) -> str:
    return "[" + ",".join(str(p) for p in bp[0]) + "|" + ",".join(str(p) for p in bp[1]) + "]"


def parse_bipartition(text: str) -> Bipartition:
    """Parse the text form "[2,1|1]" (empty components allowed: "[|1,1]")."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")) or "|" not in body:
        raise ValueError(f"not a bipartition: {text!r}")
    left, right = body[1:-1].split("|", 1)

    def side(s: str) -> Partition:
        s = s.strip()
        if not s:
            return ()
        return check_partition(tuple(int(x) for x in s.split(",")))

    return (side(left), side(right))


def format_d_label(lab: DLabel) -> str:
    first, second, split = lab
    base = "{" + format_partition(first) + "," + format_partition(second) + "}"
    return base + (f"_{split}" if split else "")
