"""Brute-force ground truth by exhaustive subset enumeration.

Everything here is definition-literal on purpose: no closed-form shortcuts,
so the oracle shares no logic (and no bugs) with the formula suite.  The
critical-number searches enumerate subset sizes in descending order and
stop at the first size that contains a qualifying incomplete set; sizes
are never skipped, which keeps the scan valid for the generating-restricted
variants where incompleteness alone is not downward-closed.

Work at a fixed size can be split across processes by partitioning the
combination sequence into contiguous rank ranges.  Chunk results are
consumed in rank order, so values and witnesses do not depend on the
worker count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidOrder
from .formulas import CriticalKind
from .groups import GroupType, factorize
from .quotients import closure_bits
from .sumsets import (
    GroupSubset,
    hfold_bits,
    interval_bits,
    layout_for,
    subset_sums_bits,
    translate_bits,
)

DEFAULT_QUERY_BUDGET = 20
DEFAULT_SWEEP_BUDGET = 16

_PARALLEL_MIN_CANDIDATES = 4096


@dataclass(frozen=True)
class OracleQuery:
    """A single brute-force question: one group, one critical quantity.

    The class flags are normalized from the kind, so a query built from a
    generating-restricted kind always carries restrict_generating = True.
    """

    group: GroupType
    kind: CriticalKind
    restrict_generating: bool = False
    exclude_zero: bool = False

    def __post_init__(self) -> None:
        if self.kind.restricts_to_generating and not self.restrict_generating:
            object.__setattr__(self, "restrict_generating", True)
        if self.kind.excludes_zero and not self.exclude_zero:
            object.__setattr__(self, "exclude_zero", True)


def _check_budget(n: int, budget: int | None, default: int) -> None:
    limit = default if budget is None else budget
    if n > limit:
        raise BudgetExceeded(
            f"group order {n} exceeds the oracle budget {limit}; "
            f"pass an explicit larger budget to acknowledge the cost"
        )


def _scan_chunk(args: tuple) -> int | None:
    """Scan one contiguous range of size-k combinations; first hit wins.

    Module-level so process pools can pickle it.  Returns the bitmask of
    the first qualifying incomplete set in the range, or None.
    """
    factors, mode, param, restrict, pool, k, start, stop = args
    layout = layout_for(GroupType(factors))
    full = layout.full
    combos = itertools.islice(itertools.combinations(pool, k), start, stop)
    for combo in combos:
        bits = 0
        for i in combo:
            bits |= 1 << i
        if mode == "hfold":
            if hfold_bits(layout, bits, param) == full:
                continue
        elif mode == "interval":
            if interval_bits(layout, bits, param) == full:
                continue
        else:
            if subset_sums_bits(layout, bits) == full:
                continue
        if restrict and closure_bits(layout, bits) != full:
            continue
        return bits
    return None


def brute_critical_witness(
    query: OracleQuery, *, budget: int | None = None, workers: int = 1
) -> tuple[int, GroupSubset | None]:
    """The critical value together with a largest qualifying incomplete set.

    Returns (1 + max incomplete qualifying size, witness); when no subset
    qualifies at all the value is 1 and the witness is None (or the empty
    set for the subset-sum kinds, where the empty set itself qualifies).
    """
    group = query.group
    n = group.order
    _check_budget(n, budget, DEFAULT_QUERY_BUDGET)
    mode = query.kind.mode
    param = query.kind.param
    restrict = query.restrict_generating
    pool = tuple(range(1, n)) if query.exclude_zero else tuple(range(n))
    min_k = 0 if mode == "sums" else 1
    executor = None
    try:
        for k in range(len(pool), min_k - 1, -1):
            total = math.comb(len(pool), k)
            found = None
            if workers > 1 and total >= _PARALLEL_MIN_CANDIDATES:
                if executor is None:
                    executor = ProcessPoolExecutor(max_workers=workers)
                chunks = workers * 4
                bounds = [total * i // chunks for i in range(chunks + 1)]
                argsets = [
                    (group.factors, mode, param, restrict, pool, k, bounds[i], bounds[i + 1])
                    for i in range(chunks)
                    if bounds[i] < bounds[i + 1]
                ]
                for res in executor.map(_scan_chunk, argsets):
                    if res is not None:
                        found = res
                        break
            else:
                found = _scan_chunk((group.factors, mode, param, restrict, pool, k, 0, total))
            if found is not None:
                return k + 1, GroupSubset(group, found)
    finally:
        if executor is not None:
            executor.shutdown(wait=False, cancel_futures=True)
    return 1, None


def brute_critical(query: OracleQuery, *, budget: int | None = None, workers: int = 1) -> int:
    value, _ = brute_critical_witness(query, budget=budget, workers=workers)
    return value


def brute_critical_zero_anchored(query: OracleQuery, *, budget: int | None = None) -> int:
    """Same value, scanning only subsets that contain zero.

    Valid for the unrestricted h-fold and interval kinds: translating any
    incomplete set by the negation of one of its members preserves size
    and incompleteness, so the maximum is attained on zero-anchored sets.
    Used as an independent consistency check on the main scan.
    """
    if query.restrict_generating or query.exclude_zero or query.kind.mode == "sums":
        raise ValueError("zero-anchored reduction applies only to the unrestricted sumset kinds")
    group = query.group
    n = group.order
    _check_budget(n, budget, DEFAULT_QUERY_BUDGET)
    layout = layout_for(group)
    full = layout.full
    mode = query.kind.mode
    param = query.kind.param
    rest = tuple(range(1, n))
    for k in range(n, 0, -1):
        for combo in itertools.combinations(rest, k - 1):
            bits = 1
            for i in combo:
                bits |= 1 << i
            if mode == "hfold":
                sums = hfold_bits(layout, bits, param)
            else:
                sums = interval_bits(layout, bits, param)
            if sums != full:
                return k + 1
    return 1


def brute_cr(group: GroupType, *, budget: int | None = None, workers: int = 1) -> int:
    return brute_critical(OracleQuery(group, CriticalKind("cr")), budget=budget, workers=workers)


def brute_cr_star(group: GroupType, *, budget: int | None = None, workers: int = 1) -> int:
    return brute_critical(OracleQuery(group, CriticalKind("cr_star")), budget=budget, workers=workers)


def brute_max_sumfree(n: int, *, budget: int | None = None) -> int:
    """Maximum size of a subset of the cyclic group disjoint from its double.

    Depth-first search over elements 1..n-1 in increasing order, keeping
    the set and its pairwise-sum mask incrementally; branches are cut when
    the remaining elements cannot beat the best size found so far.  The
    search never consults the closed form.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidOrder(f"sum-free search needs a cyclic order >= 2, got {n!r}")
    _check_budget(n, budget, DEFAULT_QUERY_BUDGET)
    layout = layout_for(GroupType((n,)))
    best = 0

    def rec(e: int, amask: int, twoa: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if e >= n or size + (n - e) <= best:
            return
        if not twoa >> e & 1:
            shifted = translate_bits(layout, amask, e)
            if not shifted & amask:
                double = 2 * e % n
                if not amask >> double & 1:
                    rec(e + 1, amask | 1 << e, twoa | shifted | 1 << double, size + 1)
        rec(e + 1, amask, twoa, size)

    rec(1, 0, 0, 0)
    return best


def enumerate_subgroups(group: GroupType, *, budget: int | None = None) -> list[GroupSubset]:
    """All subgroups as bit-vector subsets, smallest first.

    Breadth-first over the subgroup lattice: grow each known subgroup by
    one outside generator and close; stop when nothing new appears.
    """
    n = group.order
    _check_budget(n, budget, DEFAULT_SWEEP_BUDGET)
    layout = layout_for(group)
    seen = {1}
    frontier = [1]
    while frontier:
        fresh = []
        for mask in frontier:
            outside = layout.full ^ mask
            x = outside
            while x:
                low = x & -x
                x ^= low
                grown = closure_bits(layout, mask | low)
                if grown not in seen:
                    seen.add(grown)
                    fresh.append(grown)
        frontier = fresh
    masks = sorted(seen, key=lambda m: (m.bit_count(), m))
    return [GroupSubset(group, m) for m in masks]


def _scalar_index(group: GroupType, k: int, index: int) -> int:
    return group.encode(group.scalar(k, group.decode(index)))


def brute_quotient_types(group: GroupType, *, budget: int | None = None) -> set[GroupType]:
    """Isomorphism types of all nontrivial quotients, from first principles.

    For each subgroup H, the quotient's p-primary structure is read off by
    counting solutions of p^k * x in H: consecutive count ratios are p to
    the number of cyclic p-power factors of exponent at least k, and the
    conjugate of that profile gives the elementary divisors.
    """
    n = group.order
    subgroups = enumerate_subgroups(group, budget=budget)
    types: set[GroupType] = set()
    for sub in subgroups:
        q = n // sub.size
        if q == 1:
            continue
        entries: list[int] = []
        for p in factorize(q):
            profile = []
            prev = sub.size
            k = 1
            while True:
                pk = p**k
                cnt = sum(1 for i in range(n) if sub.contains_index(_scalar_index(group, pk, i)))
                ratio, m_k = cnt // prev, 0
                while ratio > 1:
                    if ratio % p:
                        raise RuntimeError(f"count ratio {cnt}/{prev} is not a power of {p}")
                    ratio //= p
                    m_k += 1
                if m_k == 0:
                    break
                profile.append(m_k)
                prev = cnt
                k += 1
            for j in range(1, profile[0] + 1 if profile else 1):
                entries.append(p ** sum(1 for mk in profile if mk >= j))
        types.add(GroupType(tuple(entries)))
    return types
