"""Acceptance suite: ten end-to-end checks, one printed line each.

Every comparison here is exact.  Series coefficients are Python ints,
partition and path counts come from brute-force enumeration, and the
tolerance everywhere is zero.  Each test prints a single

    [PASS] <number>. <what was checked>

line (run with ``-s`` to see them all; a failing criterion also fails
its test).  Orders are chosen so the whole file runs in a couple of
minutes on a laptop.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qgordon import (
    ConstructionData,
    GordonParams,
    IdentitySpec,
    PochSpec,
    Series,
    build_chain,
    check_pair,
    closed_form_alpha,
    count_A,
    count_B,
    count_S,
    count_W,
    count_Wbar,
    enumerate_S_paths,
    eval_multisum_AG,
    eval_multisum_main,
    eval_product_side,
    forward_construct,
    invert_poch,
    is_S_admissible,
    limit_identity,
    poch_finite,
    rescale,
    relative_heights,
    reverse_deconstruct,
    theta_sum,
    triple_product,
    unit_pair,
    verify,
)

MAIN_PAIRS = tuple(
    (k, a) for k in range(2, 7) for a in range(1, k + 1) if (k - a) % 2 == 1
)
CHAIN_PAIRS = ((2, 1), (3, 2), (4, 1), (5, 2))


def _criterion(num: int, label: str, ok: bool, detail: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {label}")
    assert ok, f"criterion {num} failed: {label}" + (f"; {detail}" if detail else "")


def test_criterion_01_parity_multisum_equals_product():
    """Opposite-parity (k, a) up to k = 6: multisum = product below q^60."""
    failures = []
    for k, a in MAIN_PAIRS:
        gp = GordonParams(k, a)
        lhs = eval_multisum_main(gp, 60)
        rhs = eval_product_side("Main", gp, 60)
        if lhs != rhs:
            failures.append(f"(k={k}, a={a}) differs at q^{lhs.first_discrepancy(rhs)}")
    _criterion(
        1,
        f"parity-restricted multisum equals its product below q^60 "
        f"for all {len(MAIN_PAIRS)} opposite-parity pairs with k <= 6",
        not failures,
        "; ".join(failures),
    )


def test_criterion_02_andrews_gordon_sum_product_and_oracles():
    """AG for k <= 5, all a: sum = product below q^60, both = counts to n = 40."""
    failures = []
    for k in range(2, 6):
        for a in range(1, k + 1):
            gp = GordonParams(k, a)
            lhs = eval_multisum_AG(gp, 60)
            rhs = eval_product_side("AG", gp, 60)
            if lhs != rhs:
                failures.append(f"(k={k}, a={a}) sides differ")
                continue
            for n in range(41):
                c = lhs.coefficient(n)
                if c != count_B(n, gp) or c != count_A(n, gp):
                    failures.append(f"(k={k}, a={a}) oracle mismatch at n={n}")
                    break
    _criterion(
        2,
        "Andrews-Gordon sum equals product below q^60 and both match the "
        "count_B and count_A oracles to n = 40 (14 pairs)",
        not failures,
        "; ".join(failures),
    )


def test_criterion_03_even_part_parity_identities():
    """Even parts with even multiplicity, k <= 5, both parity regimes."""
    failures = []
    for k in range(2, 6):
        for a in range(1, k + 1):
            gp = GordonParams(k, a)
            tag = "W_same" if (k - a) % 2 == 0 else "W_diff"
            report = verify(IdentitySpec(tag, gp, 40))
            if not report.equal:
                failures.append(f"{tag} (k={k}, a={a}) sides differ")
                continue
            for n in range(37):
                if report.lhs.coefficient(n) != count_W(n, gp):
                    failures.append(f"{tag} (k={k}, a={a}) count_W mismatch at n={n}")
                    break
    _criterion(
        3,
        "even-multiplicity-of-even-parts multisum equals its product "
        "(one product for k = a mod 2, a sum of two otherwise) below q^40 "
        "and matches count_W to n = 36 for every (k, a) with k <= 5",
        not failures,
        "; ".join(failures),
    )


def test_criterion_04_odd_part_parity_identities():
    """Odd parts with even multiplicity, k <= 5, both stated regimes."""
    failures = []
    regimes = [
        ("Wbar_odd_even", [(3, 2), (5, 2), (5, 4)]),
        ("Wbar_even_odd", [(2, 1), (4, 1), (4, 3)]),
    ]
    for tag, pairs in regimes:
        for k, a in pairs:
            gp = GordonParams(k, a)
            report = verify(IdentitySpec(tag, gp, 40))
            if not report.equal:
                failures.append(f"{tag} (k={k}, a={a}) sides differ")
                continue
            for n in range(37):
                if report.lhs.coefficient(n) != count_Wbar(n, gp):
                    failures.append(f"{tag} (k={k}, a={a}) count_Wbar mismatch at n={n}")
                    break
    _criterion(
        4,
        "even-multiplicity-of-odd-parts multisum equals its product below "
        "q^40 and matches count_Wbar to n = 36 in both parity regimes, k <= 5",
        not failures,
        "; ".join(failures),
    )


def test_criterion_05_path_counts_match_multisum():
    """Path generating function equals the parity multisum coefficientwise."""
    failures = []
    bounds = {(2, 1): 24, (3, 2): 24, (4, 1): 20, (4, 3): 20, (5, 2): 20}
    for (k, a), n_max in bounds.items():
        gp = GordonParams(k, a)
        series = eval_multisum_main(gp, n_max + 1)
        for n in range(n_max + 1):
            if count_S(n, gp) != series.coefficient(n):
                failures.append(
                    f"(k={k}, a={a}) n={n}: "
                    f"{count_S(n, gp)} paths vs coefficient {series.coefficient(n)}"
                )
                break
    _criterion(
        5,
        "admissible path counts equal the parity multisum coefficients "
        "(n <= 24 for k <= 3, else n <= 20) under the default E-step rule "
        "'each': every peak of relative height k or k-1 has a multiple of "
        "four E steps to its left",
        not failures,
        "; ".join(failures),
    )


def test_criterion_06_worked_example_replay():
    """The seven-peak construction at (5, 2) replays and reverses exactly."""
    gp = GordonParams(5, 2)
    data = ConstructionData(
        gp=gp,
        n=(3, 1, 1, 2),
        east_partition=(1, 0),
        uplift_set=frozenset({2}),
        right_moves=((4, 2, 0), (0,), (2,)),
    )
    path = forward_construct(data)
    peaks = path.peaks()
    ok = (
        tuple(x for x, _ in peaks) == (1, 5, 8, 11, 17, 25, 38)
        and relative_heights(path) == (1, 1, 2, 1, 3, 5, 4)
        and path.major_index == 105
        and data.weight() == 105
        and is_S_admissible(path, gp)
        and reverse_deconstruct(path, gp) == data
    )
    _criterion(
        6,
        "worked example at (5, 2): peak weights 1,5,8,11,17,25,38, relative "
        "heights 1,1,2,1,3,5,4, major index 105, admissible, and the reverse "
        "map recovers every construction choice",
        ok,
    )


def test_criterion_07_bijection_round_trip():
    """Every admissible path, major index <= 20, survives reverse-then-forward."""
    failures = []
    total = 0
    for k, a in ((2, 1), (3, 2)):
        gp = GordonParams(k, a)
        for path in enumerate_S_paths(20, gp):
            total += 1
            data = reverse_deconstruct(path, gp)
            if forward_construct(data) != path or data.weight() != path.major_index:
                failures.append(f"(k={k}, a={a}) {path}")
    _criterion(
        7,
        f"construction round trip holds for all {total} admissible paths "
        "of major index <= 20 at (2, 1) and (3, 2)",
        not failures,
        "; ".join(failures),
    )


def test_criterion_08_bailey_chain_links():
    """Unit pair, base-doubled pair, and every chain link satisfy the relation."""
    failures = []
    if not check_pair(unit_pair(10, 40)):
        failures.append("unit pair fails its defining relation")
    for k, a in CHAIN_PAIRS:
        gp = GordonParams(k, a)
        chain = build_chain(gp, 10, 40)
        for label, bp in chain:
            if not check_pair(bp):
                failures.append(f"(k={k}, a={a}) step {label} breaks the relation")
        first = chain[1][1]
        for n in range(11):
            expected = (
                invert_poch(PochSpec(1, 2, 2), first.order, n=n, denom=2)
                .shift(n)
                .truncate(first.order)
            )
            if first.beta[n] != expected:
                failures.append(f"(k={k}, a={a}) beta^(1)_{n} is not q^n/(q^2;q^2)_n")
                break
        final = chain[-1][1]
        for n in range(7):
            if final.alpha[n] != closed_form_alpha(gp, n, final.order):
                failures.append(f"(k={k}, a={a}) alpha^(k)_{n} misses its closed form")
                break
    _criterion(
        8,
        "Bailey chains for (2,1), (3,2), (4,1), (5,2): every link satisfies "
        "the pair relation for n <= 10 at order 40 on the half-integer grid, "
        "beta after base doubling is q^n/(q^2;q^2)_n, and the endpoint alpha "
        "matches its closed form for n <= 6",
        not failures,
        "; ".join(failures),
    )


def test_criterion_09_chain_limit_reproduces_identity():
    """q -> q^2 in the chain's limit gives both sides of the parity identity."""
    failures = []
    for k, a in CHAIN_PAIRS:
        gp = GordonParams(k, a)
        lhs, rhs = limit_identity(gp, 20)
        if rescale(lhs, 2) != eval_multisum_main(gp, 40):
            failures.append(f"(k={k}, a={a}) rescaled sum side differs")
        if rescale(rhs, 2) != eval_product_side("Main", gp, 40):
            failures.append(f"(k={k}, a={a}) rescaled product side differs")
    _criterion(
        9,
        "rescaling the chain's limit identity by q -> q^2 reproduces both "
        "sides of the parity-restricted identity below q^40 for the four "
        "chain pairs",
        not failures,
        "; ".join(failures),
    )


def test_criterion_10_property_suites():
    """Ring axioms, Pochhammer recurrence, triple product, count monotonicity."""
    failures = []

    rng = random.Random(20250816)

    def rand_series() -> Series:
        return Series.from_terms(
            [(e, rng.randint(-5, 5)) for e in range(30)], 30
        )

    one = Series.from_terms([(0, 1)], 30)
    for i in range(1000):
        f, g, h = rand_series(), rand_series(), rand_series()
        if (f + g) + h != f + (g + h):
            failures.append(f"addition not associative (triple {i})")
            break
        if f * g != g * f or (f * g) * h != f * (g * h):
            failures.append(f"multiplication not commutative/associative (triple {i})")
            break
        if f * (g + h) != f * g + f * h:
            failures.append(f"distributivity fails (triple {i})")
            break
        if one * f != f:
            failures.append(f"unit law fails (triple {i})")
            break

    for spec in (
        PochSpec(1, 1, 1),
        PochSpec(-1, 1, 1),
        PochSpec(1, 2, 2),
        PochSpec(-1, 1, 2),
        PochSpec(-1, Fraction(1, 2), 1),
    ):
        for n in range(1, 21):
            step = Series.from_terms(
                [(0, 1), (spec.exponent + spec.base * (n - 1), -spec.sign)], 30
            )
            if poch_finite(spec, n, 30) != poch_finite(spec, n - 1, 30) * step:
                failures.append(f"Pochhammer recurrence fails for {spec} at n={n}")
                break

    for e1, e3 in ((1, 2), (1, 3), (2, 3), (1, 5), (2, 5), (3, 7), (5, 12)):
        if triple_product(e1, e3 - e1, e3, 60) != theta_sum(e1, e3, 60):
            failures.append(f"triple product vs theta sum differ for ({e1}, {e3})")

    for n in range(26):
        for k in range(2, 6):
            for a in range(1, k):
                if count_B(n, (k, a)) > count_B(n, (k, a + 1)):
                    failures.append(f"count_B not monotone in a at (n={n}, k={k}, a={a})")
        for k in range(2, 5):
            for a in range(1, k + 1):
                if count_B(n, (k, a)) > count_B(n, (k + 1, a)):
                    failures.append(f"count_B not monotone in k at (n={n}, k={k}, a={a})")
    _criterion(
        10,
        "property suites: ring axioms on 1000 seeded random triples at order "
        "30, Pochhammer recurrence to n = 20, triple product vs theta sum "
        "below q^60, and count_B monotonicity in both parameters to n = 25",
        not failures,
        "; ".join(failures[:4]),
    )


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
