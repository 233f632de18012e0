"""Acceptance gate: oracle equivalence and certificate checks at desk scale.

Each criterion prints and records exactly one PASS/FAIL line (echoed in the
terminal summary by conftest).  Exact equality throughout; no tolerances.
One deviation is expected and documented: the interval-2 value at order 3
(see README, "Known boundary discrepancy").
"""

import random
import time

import pytest
from conftest import record_acceptance

from critnum import (
    CriticalKind,
    CritnumError,
    GroupSubset,
    GroupType,
    OracleQuery,
    abelian_types,
    best_interval_bound,
    brute_cr,
    brute_cr_star,
    brute_critical,
    brute_max_sumfree,
    critical_number,
    cyclic,
    generating_interval_critical_cyclic,
    generating_interval_critical_s3,
    generating_interval_critical_two_group,
    hfold_sumset,
    hfold_witness,
    interval3_piecewise_value,
    interval_sumset,
    max_incomplete_size,
    max_sumfree_size,
    pairwise_sumset,
    subset_sum_critical_pair,
    subset_sums,
)


def _finish(tag: str, scope: str, failures: list[str]) -> None:
    if failures:
        head = "; ".join(failures[:5])
        more = "" if len(failures) <= 5 else f" (+{len(failures) - 5} more)"
        record_acceptance(f"{tag} FAIL {scope}: {head}{more}")
        pytest.fail(f"{tag}: {len(failures)} deviation(s): {head}{more}")
    record_acceptance(f"{tag} PASS {scope}")


def _interval_value(group: GroupType, s: int) -> int:
    q = OracleQuery(group, CriticalKind("chi_hat_interval", s))
    return brute_critical(q)


def test_a01_hfold_critical_number():
    failures = []
    cases = 0
    for n in range(2, 17):
        for g in abelian_types(n):
            for h in range(1, 7):
                want = critical_number(n, h)
                got = brute_critical(OracleQuery(g, CriticalKind("chi_h", h)))
                cases += 1
                if got != want:
                    failures.append(f"chi({g}, h={h}): brute {got} vs formula {want}")
    _finish("A1", f"h-fold critical number on {cases} (group, h) cases", failures)


def test_a02_generating_restriction_changes_nothing():
    failures = []
    cases = 0
    for n in range(2, 17):
        for g in abelian_types(n):
            for h in range(1, 7):
                want = critical_number(n, h)
                got = brute_critical(OracleQuery(g, CriticalKind("chi_hat_h", h)))
                cases += 1
                if got != want:
                    failures.append(f"chi_hat({g}, h={h}): brute {got} vs formula {want}")
    _finish("A2", f"generating-restricted h-fold value on {cases} cases", failures)


def test_a03_hfold_witness_grid():
    failures = []
    cases = 0
    for n in range(2, 65):
        for g in abelian_types(n):
            for h in range(1, 9):
                cases += 1
                try:
                    cert = hfold_witness(g, h)
                except CritnumError as exc:
                    failures.append(f"witness({g}, h={h}) raised {type(exc).__name__}: {exc}")
                    continue
                if cert.claimed_size != max_incomplete_size(n, h):
                    failures.append(f"witness({g}, h={h}) size {cert.claimed_size}")
                elif not (cert.generates and cert.incomplete):
                    failures.append(f"witness({g}, h={h}) flags {cert.generates}/{cert.incomplete}")
    _finish("A3", f"extremal construction certificates on {cases} cases", failures)


def test_a04_cyclic_interval_formula():
    failures = []
    cases = 0
    for n in range(2, 17):
        for s in range(1, 6):
            want = generating_interval_critical_cyclic(n, s)
            got = _interval_value(cyclic(n), s)
            cases += 1
            if got != want:
                failures.append(f"cyclic n={n}, s={s}: brute {got} vs formula {want}")
    _finish("A4", f"cyclic interval value on {cases} cases incl. value-1 branch", failures)


def test_a05_two_group_interval_formula():
    failures = []
    cases = 0
    for r in range(1, 5):
        g = GroupType((2,) * r)
        for s in (2, 3, 4):
            want = generating_interval_critical_two_group(r, s)
            got = _interval_value(g, s)
            cases += 1
            if got != want:
                failures.append(f"rank {r}, s={s}: brute {got} vs formula {want}")
    _finish("A5", f"exponent-2 interval value on {cases} cases", failures)


def test_a06_interval3_structure_formula():
    failures = []
    cases = 0
    for n in range(5, 17):
        for g in abelian_types(n):
            if g.is_elementary_two:
                continue
            want = generating_interval_critical_s3(g)
            got = _interval_value(g, 3)
            cases += 1
            if got != want:
                failures.append(f"{g}: brute {got} vs formula {want}")
    # orders 3 and 4 sit outside the validated domain: report, do not assert
    for n in (3, 4):
        g = cyclic(n)
        got = _interval_value(g, 3)
        piecewise = interval3_piecewise_value(g)
        match = "true" if got == piecewise else "false"
        record_acceptance(f"A6 report: order {n} brute={got} piecewise={piecewise} match={match}")
    _finish("A6", f"interval-3 structure formula on {cases} in-domain cases", failures)


def test_a07_subset_sum_critical_pair():
    failures = []
    cases = 0
    for n in range(10, 15):
        for g in abelian_types(n):
            star, whole = subset_sum_critical_pair(g)
            got_star = brute_cr_star(g)
            got_whole = brute_cr(g)
            cases += 1
            if (got_star, got_whole) != (star, whole):
                failures.append(
                    f"{g}: brute ({got_star}, {got_whole}) vs formula ({star}, {whole})"
                )
    _finish("A7", f"subset-sum critical pair on {cases} groups", failures)


def test_a08_sumfree_bound():
    failures = []
    for n in range(2, 10001):
        if max_sumfree_size(n) != max_incomplete_size(n, 3):
            failures.append(f"n={n}: sum-free bound != 3-fold divisor bound")
    for n in range(2, 19):
        got = brute_max_sumfree(n)
        want = max_sumfree_size(n)
        if got != want:
            failures.append(f"n={n}: search {got} vs formula {want}")
    _finish("A8", "sum-free maximum: identity to 10^4, search to 18", failures)


def test_a09_bound_certificates_are_sound():
    failures = []
    cases = 0
    for n in range(2, 17):
        for g in abelian_types(n):
            for s in range(1, 5):
                cases += 1
                cert = best_interval_bound(g, s)
                if cert.is_trivial:
                    if cert.bound != 1 or cert.witness is not None:
                        failures.append(f"{g}, s={s}: malformed trivial certificate")
                        continue
                else:
                    ok = (
                        cert.generates
                        and cert.incomplete
                        and cert.witness.size == cert.bound - 1
                    )
                    if not ok:
                        failures.append(f"{g}, s={s}: unverified witness")
                        continue
                brute = _interval_value(g, s)
                if brute < cert.bound:
                    failures.append(f"{g}, s={s}: brute {brute} below bound {cert.bound}")
    _finish("A9", f"coset lower-bound certificates on {cases} cases", failures)


def test_a10_small_interval_values():
    failures = []
    cases = 0
    for n in range(3, 17):
        for g in abelian_types(n):
            got = _interval_value(g, 1)
            cases += 1
            if got != n:
                failures.append(f"{g}, s=1: brute {got} vs n={n}")
    for n in range(2, 17):
        for g in abelian_types(n):
            if g.factors in ((2,), (2, 2)):
                continue
            got = _interval_value(g, 2)
            want = n // 2 + 1
            cases += 1
            if got != want:
                failures.append(f"{g}, s=2: brute {got} vs floor(n/2)+1 = {want}")
    _finish("A10", f"easy interval cases on {cases} cases", failures)


def test_a11_property_suite():
    start = time.monotonic()
    failures = []
    checks = 0
    rng = random.Random(20260814)

    def random_subset(group, nonempty=True, with_zero=False):
        n = group.order
        bits = rng.getrandbits(n)
        if with_zero:
            bits |= 1
        if nonempty and bits == 0:
            bits = 1 << rng.randrange(n)
        return GroupSubset(group, bits)

    # monotonicity of all three expansions under A subset of B
    for _ in range(150):
        n = rng.randint(2, 64)
        types = abelian_types(n)
        g = types[rng.randrange(len(types))]
        a = random_subset(g)
        b = GroupSubset(g, a.bits | random_subset(g).bits)
        h = rng.randint(1, 4)
        s = rng.randint(0, 4)
        checks += 1
        if not hfold_sumset(a, h).issubset(hfold_sumset(b, h)):
            failures.append(f"h-fold monotonicity broke on {g}, h={h}")
        if not interval_sumset(a, s).issubset(interval_sumset(b, s)):
            failures.append(f"interval monotonicity broke on {g}, s={s}")

    # translation identities: every group to order 16, every translate
    for n in range(2, 17):
        for g in abelian_types(n):
            samples = [GroupSubset(g, 1 << i) for i in range(n)]
            samples += [random_subset(g) for _ in range(8)]
            for a in samples:
                for h in (1, 2, 3):
                    base = hfold_sumset(a, h)
                    for t in range(n):
                        el = g.decode(t)
                        left = hfold_sumset(a.translated(el), h)
                        right = base.translated(g.scalar(h, el))
                        checks += 1
                        if left.size != base.size or left.bits != right.bits:
                            failures.append(f"translate identity broke on {g}, h={h}")

    # zero absorption: exhaustive over subsets containing zero, orders <= 12
    for n in range(2, 13):
        for g in abelian_types(n):
            for mask in range(1, 1 << n, 2):
                a = GroupSubset(g, mask)
                for s in range(0, 5):
                    want = 1 if s == 0 else hfold_sumset(a, s).bits
                    checks += 1
                    if interval_sumset(a, s).bits != want:
                        failures.append(f"zero absorption broke on {g}, s={s}")

    # fold additivity: exhaustive over nonempty subsets, orders <= 12
    for n in range(2, 13):
        for g in abelian_types(n):
            for mask in range(1, 1 << n):
                a = GroupSubset(g, mask)
                folds = [None, a]
                for _ in range(5):
                    folds.append(pairwise_sumset(folds[-1], a))
                for h1 in (1, 2, 3):
                    for h2 in (1, 2, 3):
                        checks += 1
                        if pairwise_sumset(folds[h1], folds[h2]).bits != folds[h1 + h2].bits:
                            failures.append(f"fold additivity broke on {g}, {h1}+{h2}")

    elapsed = time.monotonic() - start
    if elapsed >= 60.0:
        failures.append(f"property suite took {elapsed:.1f}s, budget is one minute")
    _finish("A11", f"sumset property suite, {checks} checks in {elapsed:.1f}s", failures)
