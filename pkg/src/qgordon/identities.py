"""Sum and product sides of the Gordon-style identity family.

Every identity here equates a multiple sum over a descending ladder
N_1 >= N_2 >= ... >= N_{k-1} >= 0 with an infinite product.  The sums
share one shape: a quadratic form in the N_i, optional linear terms in
the N_i and in the gaps n_i = N_i - N_{i+1}, finite Pochhammer
denominators per level, and an optional numerator factor on the
innermost index.  :func:`ladder_multisum` evaluates that shape once;
the ``eval_multisum_*`` wrappers pin down the parameters for each
theorem tag, and :func:`verify` compares a sum against its product to
a requested order and reports the first discrepancy if any.

Theorem tags:

* ``AG``: parts not congruent to 0, +-a mod 2k+1 (classic multisum).
* ``W_same`` / ``W_diff``: even parts appear an even number of times;
  the tag records whether k and a share parity (the product side
  differs, and for opposite parity it is a sum of two products).
* ``Wbar_odd_even`` / ``Wbar_even_odd``: odd parts appear an even
  number of times, for k odd with a even and k even with a odd.
* ``Main``: the parity-restricted sum with (-q; q^2)_n numerator and
  (q^4; q^4)_n innermost denominator.
* ``Paths``: major-index generating function of the path family
  S(k, a) against the Main sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .lattice_paths import count_S
from .partitions import GordonParams
from .qseries import PochSpec, Series, invert_poch, mul, poch_finite, poch_infinite, triple_product

__all__ = [
    "THEOREMS",
    "IdentitySpec",
    "VerificationReport",
    "ladder_multisum",
    "eval_multisum_AG",
    "eval_multisum_W",
    "eval_multisum_Wbar",
    "eval_multisum_main",
    "eval_product_side",
    "verify",
]

THEOREMS = ("AG", "W_same", "W_diff", "Wbar_odd_even", "Wbar_even_odd", "Main", "Paths")

_Q = PochSpec(1, 1, 1)        # (q; q)
_Q2 = PochSpec(1, 2, 2)       # (q^2; q^2)
_Q4 = PochSpec(1, 4, 4)       # (q^4; q^4)
_NEG_Q_ODD = PochSpec(-1, 1, 2)   # (-q; q^2)
_NEG_Q_EVEN = PochSpec(-1, 2, 2)  # (-q^2; q^2)
_NEG_Q3_ODD = PochSpec(-1, 3, 2)  # (-q^3; q^2)


def _as_params(gp) -> GordonParams:
    if isinstance(gp, GordonParams):
        return gp
    k, a = gp
    return GordonParams(k, a)


# ---------------------------------------------------------------- generic sum


def ladder_multisum(
    k: int,
    order,
    *,
    quad,
    lin: Sequence,
    nlin: Sequence,
    level_denom: PochSpec,
    innermost: PochSpec,
    numer: Optional[PochSpec] = None,
    denom: int = 1,
) -> Series:
    """Evaluate the descending-ladder sum to the given order.

    The term for N_1 >= ... >= N_{k-1} >= 0 is::

        q^(quad * sum N_i^2 + sum lin[i-1] * N_i + sum nlin[i-1] * n_i)
        * numer(N_{k-1}) / (innermost at N_{k-1})
        / prod_{i<k-1} (level_denom at n_i)

    with n_i = N_i - N_{i+1} and n_{k-1} = N_{k-1}.  ``lin`` and
    ``nlin`` have length k - 1 and may hold Fractions; ``denom`` fixes
    the exponent grid of the result.  For k = 1 the sum is empty and
    equals 1.

    The table H[i][N] accumulates levels i..k-1 with N_i = N; each
    level is capped as soon as its own quadratic term passes the order.
    """
    order = Fraction(order)
    quad = Fraction(quad)
    if quad <= 0:
        raise ValueError(f"quadratic coefficient must be positive, got {quad}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return Series.one(order, denom)
    if len(lin) != k - 1 or len(nlin) != k - 1:
        raise ValueError("lin and nlin need one entry per level 1..k-1")
    lin = [Fraction(v) for v in lin]
    nlin = [Fraction(v) for v in nlin]

    def level_range(i: int):
        n = 0
        while quad * n * n + lin[i - 1] * n < order:
            yield n
            n += 1

    table: dict[int, Series] = {}
    i = k - 1
    for n in level_range(i):
        e = quad * n * n + lin[i - 1] * n
        t = invert_poch(innermost, order, n=n, denom=denom)
        if numer is not None:
            t = mul(t, poch_finite(numer, n, order, denom=denom))
        table[n] = t.shift(e).truncate(order)
    for i in range(k - 2, 0, -1):
        nxt: dict[int, Series] = {}
        for n in level_range(i):
            e_base = quad * n * n + lin[i - 1] * n
            acc = Series.zero(order, denom)
            for m, inner in table.items():
                if m > n:
                    continue
                e = e_base + nlin[i - 1] * (n - m)
                if e >= order:
                    continue
                term = mul(inner, invert_poch(level_denom, order, n=n - m, denom=denom))
                acc = acc + term.shift(e).truncate(order)
            nxt[n] = acc
        table = nxt
    total = Series.zero(order, denom)
    for t in table.values():
        total = total + t
    return total


# ---------------------------------------------------------------- sum sides


def eval_multisum_AG(gp, order) -> Series:
    """Sum side of the classic multisum: quadratic N_i^2, linear tail
    N_a + ... + N_{k-1}, all denominators (q; q)."""
    gp = _as_params(gp)
    k, a = gp.k, gp.a
    lin = [1 if i >= a else 0 for i in range(1, k)]
    return ladder_multisum(
        k, order, quad=1, lin=lin, nlin=[0] * (k - 1), level_denom=_Q, innermost=_Q
    )


def eval_multisum_W(gp, order) -> Series:
    """Sum side for the even-parts-even-multiplicity family: linear
    terms 2 N_i on i = a, a+2, ..., all denominators (q^2; q^2)."""
    gp = _as_params(gp)
    k, a = gp.k, gp.a
    lin = [2 if i >= a and (i - a) % 2 == 0 else 0 for i in range(1, k)]
    return ladder_multisum(
        k, order, quad=1, lin=lin, nlin=[0] * (k - 1), level_denom=_Q2, innermost=_Q2
    )


def eval_multisum_Wbar(gp, order) -> Series:
    """Sum side for the odd-parts-even-multiplicity family.

    The linear terms depend on the parity regime: for k odd and a even
    every N_i with i >= a - 1 appears; for k even and a odd every N_i
    with i >= a appears and odd-indexed gaps n_i with i <= a - 2 get a
    linear term as well.
    """
    gp = _as_params(gp)
    k, a = gp.k, gp.a
    if k % 2 == 1 and a % 2 == 0:
        lin = [1 if i >= a - 1 else 0 for i in range(1, k)]
        nlin = [1 if i % 2 == 1 and i <= a - 3 else 0 for i in range(1, k)]
    elif k % 2 == 0 and a % 2 == 1:
        lin = [1 if i >= a else 0 for i in range(1, k)]
        nlin = [1 if i % 2 == 1 and i <= a - 2 else 0 for i in range(1, k)]
    else:
        raise ValueError(f"this family needs k, a of opposite parity with a even iff k odd, got {gp}")
    return ladder_multisum(
        k, order, quad=1, lin=lin, nlin=nlin, level_denom=_Q2, innermost=_Q2
    )


def eval_multisum_main(gp, order) -> Series:
    """Sum side of the parity-restricted theorem: (q^2; q^2) levels,
    (q^4; q^4) innermost, (-q; q^2) numerator."""
    gp = _as_params(gp)
    k, a = gp.k, gp.a
    if (k - a) % 2 == 0:
        raise ValueError(f"this sum needs k and a of opposite parity, got {gp}")
    lin = [2 if i >= a and (i - a) % 2 == 0 else 0 for i in range(1, k)]
    return ladder_multisum(
        k,
        order,
        quad=1,
        lin=lin,
        nlin=[0] * (k - 1),
        level_denom=_Q2,
        innermost=_Q4,
        numer=_NEG_Q_ODD,
    )


# ---------------------------------------------------------------- product sides


def eval_product_side(theorem: str, gp, order) -> Series:
    """Product side for a theorem tag, as a series to ``order``.

    For ``W_diff`` the right-hand side is a sum of two products (the
    second vanishes identically when a = 1).  ``Paths`` shares the
    ``Main`` product.
    """
    gp = _as_params(gp)
    k, a = gp.k, gp.a
    if theorem == "AG":
        m = 2 * k + 1
        return mul(triple_product(a, m - a, m, order), invert_poch(_Q, order))
    if theorem == "W_same":
        if (k - a) % 2:
            raise ValueError(f"W_same needs k = a mod 2, got {gp}")
        m = 2 * k + 2
        t = mul(triple_product(a, m - a, m, order), poch_infinite(_NEG_Q_ODD, order))
        return mul(t, invert_poch(_Q2, order))
    if theorem == "W_diff":
        if (k - a) % 2 == 0:
            raise ValueError(f"W_diff needs k != a mod 2, got {gp}")
        m = 2 * k + 2
        aux = mul(poch_infinite(_NEG_Q3_ODD, order), invert_poch(_Q2, order))
        first = mul(triple_product(a + 1, m - a - 1, m, order), aux)
        if a == 1:
            # the companion product carries (q^{a-1}; ...) = (1; ...) = 0
            return first
        second = mul(triple_product(a - 1, m - a + 1, m, order), aux)
        return first + second.shift(1).truncate(order)
    if theorem in ("Wbar_odd_even", "Wbar_even_odd"):
        m = 2 * k + 2
        if theorem == "Wbar_odd_even":
            if k % 2 == 0 or a % 2 == 1:
                raise ValueError(f"Wbar_odd_even needs k odd and a even, got {gp}")
            tp = triple_product(a, m - a, m, order)
        else:
            if k % 2 == 1 or a % 2 == 0:
                raise ValueError(f"Wbar_even_odd needs k even and a odd, got {gp}")
            tp = triple_product(a + 1, m - a - 1, m, order)
        t = mul(tp, poch_infinite(_NEG_Q_EVEN, order))
        return mul(t, invert_poch(_Q2, order))
    if theorem in ("Main", "Paths"):
        if (k - a) % 2 == 0:
            raise ValueError(f"{theorem} needs k != a mod 2, got {gp}")
        m = 2 * k + 2
        t = mul(triple_product(a, m - a, m, order), poch_infinite(_NEG_Q_ODD, order))
        return mul(t, invert_poch(_Q2, order))
    raise ValueError(f"unknown theorem tag {theorem!r}; pick from {THEOREMS}")


# ---------------------------------------------------------------- verification


@dataclass(frozen=True)
class IdentitySpec:
    """One identity instance: a theorem tag, parameters, and an order."""

    theorem: str
    gp: GordonParams
    order: int

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem tag {self.theorem!r}; pick from {THEOREMS}")
        gp = _as_params(self.gp)
        object.__setattr__(self, "gp", gp)
        k, a = gp.k, gp.a
        if k < 2:
            raise ValueError(f"identities start at k = 2, got k = {k}")
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"order must be a positive int, got {self.order!r}")
        parity_ok = {
            "AG": True,
            "W_same": (k - a) % 2 == 0,
            "W_diff": (k - a) % 2 == 1,
            "Wbar_odd_even": k % 2 == 1 and a % 2 == 0,
            "Wbar_even_odd": k % 2 == 0 and a % 2 == 1,
            "Main": (k - a) % 2 == 1,
            "Paths": (k - a) % 2 == 1,
        }[self.theorem]
        if not parity_ok:
            raise ValueError(f"theorem {self.theorem} does not apply to (k, a) = ({k}, {a})")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity to its requested order."""

    spec: IdentitySpec
    lhs: Series
    rhs: Series
    equal: bool
    first_discrepancy: Optional[Fraction]

    def to_json_obj(self) -> dict:
        return {
            "theorem": self.spec.theorem,
            "k": self.spec.gp.k,
            "a": self.spec.gp.a,
            "order": self.spec.order,
            "equal": self.equal,
            "first_discrepancy": None
            if self.first_discrepancy is None
            else str(self.first_discrepancy),
        }


def verify(spec: IdentitySpec) -> VerificationReport:
    """Evaluate both sides of the identity named by ``spec`` and compare.

    Returns:
        A report carrying both series, whether they agree on the window
        below the order, and the first differing exponent otherwise.
    """
    gp, order = spec.gp, spec.order
    t = spec.theorem
    if t == "AG":
        lhs = eval_multisum_AG(gp, order)
    elif t in ("W_same", "W_diff"):
        lhs = eval_multisum_W(gp, order)
    elif t in ("Wbar_odd_even", "Wbar_even_odd"):
        lhs = eval_multisum_Wbar(gp, order)
    elif t == "Main":
        lhs = eval_multisum_main(gp, order)
    else:  # Paths: exhaustive counts against the Main sum
        lhs = Series.from_terms(((n, count_S(n, gp)) for n in range(order)), order)
    if t == "Paths":
        rhs = eval_multisum_main(gp, order)
    else:
        rhs = eval_product_side(t, gp, order)
    return VerificationReport(
        spec=spec,
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        first_discrepancy=lhs.first_discrepancy(rhs),
    )
