"""The three recursive towers: evaluation, point enumeration, and counts.

Variant F is the recursion tr_j(y/x^{q^k}) + tr_k(y^{q^j}/x) - 1 = 0, variant
G its (q-1)-power pushforward, and variant H the quotient recursion in the
u-coordinates.  Rational points live in F_{q^m}^*; enumeration brute-forces
each fiber over the canonical element order, so output is deterministic.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInSubfield, NotOnCurve, NotPrime, SizeCapExceeded, ZeroDenominator, ZeroPoint
from .field import FieldCtx, FieldElem, is_prime
from .isogeny import TowerParams, q_poly
from .ore import solve_affine

ENUMERATION_CAP = 2**16


def eval_F(params: TowerParams, ctx: FieldCtx, x: FieldElem, y: FieldElem) -> FieldElem:
    """tr_j(y/x^{q^k}) + tr_k(y^{q^j}/x) - 1; requires x != 0."""
    if x == ctx.zero:
        raise ZeroDenominator("x = 0 in the F-recursion")
    q, j, k = ctx.q, params.j, params.k
    t1 = ctx.trace_partial(ctx.mul(y, ctx.inv(ctx.pow(x, q**k))), j)
    t2 = ctx.trace_partial(ctx.mul(ctx.pow(y, q**j), ctx.inv(x)), k)
    return ctx.sub(ctx.add(t1, t2), ctx.one)


def eval_G(params: TowerParams, ctx: FieldCtx, X: FieldElem, Y: FieldElem) -> FieldElem:
    """Y * (sum of Y^{N_i}/X^{N_*} terms)^{q-1} - X with N_l = (q^l-1)/(q-1)."""
    if X == ctx.zero:
        raise ZeroDenominator("X = 0 in the G-recursion")
    q, m, j, k = ctx.q, params.m, params.j, params.k
    N = lambda l: (q**l - 1) // (q - 1)
    acc = ctx.zero
    X_inv = ctx.inv(X)
    for i in range(j):
        term = ctx.mul(ctx.pow(Y, N(i)), ctx.pow(X_inv, N(k + i)))
        acc = ctx.add(acc, term)
    for i in range(j, m):
        term = ctx.mul(ctx.pow(Y, N(i)), ctx.pow(X_inv, N(i - j)))
        acc = ctx.add(acc, term)
    return ctx.sub(ctx.mul(Y, ctx.pow(acc, q - 1)), X)


def _h_denominators(params: TowerParams, ctx: FieldCtx, u: FieldElem):
    q = ctx.q
    a_c, b_c = ctx.scalar(params.a), ctx.scalar(params.b)
    den1 = ctx.sub(ctx.pow(ctx.trace_partial(u, params.j), q**params.k), a_c)
    den2 = ctx.sub(ctx.trace_partial(u, params.k), b_c)
    return den1, den2


def eval_H(params: TowerParams, ctx: FieldCtx, u: FieldElem, v: FieldElem) -> FieldElem:
    """(tr_j(v)-a)/(tr_j(u)^{q^k}-a) - (tr_k(v)^{q^j}-b)/(tr_k(u)-b)."""
    den1, den2 = _h_denominators(params, ctx, u)
    if den1 == ctx.zero:
        raise ZeroDenominator("tr_j(u)^{q^k} - a vanishes")
    if den2 == ctx.zero:
        raise ZeroDenominator("tr_k(u) - b vanishes")
    q = ctx.q
    a_c, b_c = ctx.scalar(params.a), ctx.scalar(params.b)
    num1 = ctx.sub(ctx.trace_partial(v, params.j), a_c)
    num2 = ctx.sub(ctx.pow(ctx.trace_partial(v, params.k), q**params.j), b_c)
    return ctx.sub(ctx.mul(num1, ctx.inv(den1)), ctx.mul(num2, ctx.inv(den2)))


def eval_H_cross(params: TowerParams, ctx: FieldCtx, u: FieldElem, v: FieldElem) -> FieldElem:
    """Cross-multiplied form of the H-recursion, safe at degenerate denominators."""
    den1, den2 = _h_denominators(params, ctx, u)
    q = ctx.q
    a_c, b_c = ctx.scalar(params.a), ctx.scalar(params.b)
    num1 = ctx.sub(ctx.trace_partial(v, params.j), a_c)
    num2 = ctx.sub(ctx.pow(ctx.trace_partial(v, params.k), q**params.j), b_c)
    return ctx.sub(ctx.mul(num1, den2), ctx.mul(num2, den1))


@dataclass(frozen=True)
class TowerPoint:
    """A coordinate tuple on one tower level, validated at construction."""

    variant: str  # "F", "G", or "H"
    params: TowerParams
    ctx: FieldCtx
    coords: tuple
    rationality_degree: int | None = None

    def __post_init__(self):
        ctx, pr = self.ctx, self.params
        if self.variant not in ("F", "G", "H"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if any(x == ctx.zero for x in self.coords):
            raise ZeroPoint("tower coordinates must be nonzero")
        pairs = list(zip(self.coords, self.coords[1:]))
        if self.variant == "F":
            bad = any(eval_F(pr, ctx, x, y) != ctx.zero for x, y in pairs)
        elif self.variant == "G":
            bad = any(eval_G(pr, ctx, x, y) != ctx.zero for x, y in pairs)
        else:
            for u, _v in pairs:
                den1, den2 = _h_denominators(pr, ctx, u)
                if den1 == ctx.zero or den2 == ctx.zero:
                    raise ZeroDenominator("degenerate denominator inside H-chain")
            bad = any(eval_H_cross(pr, ctx, u, v) != ctx.zero for u, v in pairs)
        if bad:
            raise NotOnCurve(f"coordinates violate the {self.variant}-recursion")

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "params": {
                "p": self.params.p,
                "e": self.params.e,
                "m": self.params.m,
                "j": self.params.j,
            },
            "coords": [self.ctx.format_elem(x) for x in self.coords],
            "supersingular": self.is_supersingular(),
        }

    def is_supersingular(self) -> bool:
        """For F-variant points: head coordinate in F_{q^m}^* (all rational points qualify)."""
        m = self.params.m
        if self.ctx.d % m != 0:
            return False
        return all(self.ctx.in_subfield(x, m) for x in self.coords)


def fiber_solutions(params: TowerParams, ctx: FieldCtx, x: FieldElem) -> list:
    """All y in the ambient with Q_x(y) = x; q^{m-1} of them once split."""
    if x == ctx.zero:
        raise ZeroPoint("fiber over x = 0 is undefined")
    return solve_affine(q_poly(params, ctx, x), x)


def _level_candidates(params, ctx, variant, prev):
    """Successors of coordinate `prev` among the nonzero rational elements."""
    out = []
    for y in ctx.all_elements():
        if y == ctx.zero:
            continue
        if variant == "F":
            ok = eval_F(params, ctx, prev, y) == ctx.zero
        elif variant == "G":
            ok = eval_G(params, ctx, prev, y) == ctx.zero
        else:
            den1, den2 = _h_denominators(params, ctx, prev)
            if den1 == ctx.zero or den2 == ctx.zero:
                return []
            ok = eval_H_cross(params, ctx, prev, y) == ctx.zero
        if ok:
            out.append(y)
    return out


def enumerate_rational(
    params: TowerParams, n: int, variant: str, workers: int = 1
) -> list:
    """All level-n points with coordinates in F_{q^m}^*, canonical order.

    Variant F/G points have n coordinates; variant H points have n-1
    (u_2, ..., u_n) and require n >= 2.  Output order is independent of the
    worker count.
    """
    if variant not in ("F", "G", "H"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "H" and n < 2:
        raise ValueError("H-variant needs n >= 2")
    if params.q**params.m > ENUMERATION_CAP:
        raise SizeCapExceeded(f"q^m = {params.q}^{params.m} exceeds enumeration cap")
    ctx = params.field(params.m)
    length = n if variant != "H" else n - 1
    frontier = [(x,) for x in ctx.all_elements() if x != ctx.zero]
    succ: dict = {}
    for _ in range(length - 1):
        needed = []
        for t in frontier:
            if t[-1] not in succ and t[-1] not in needed:
                needed.append(t[-1])

        def find(prev):
            return _level_candidates(params, ctx, variant, prev)

        if workers > 1 and len(needed) > 1:
            with ThreadPoolExecutor(max_workers=workers) as ex:
                found = list(ex.map(find, needed))
        else:
            found = [find(prev) for prev in needed]
        succ.update(zip(needed, found))
        frontier = [t + (y,) for t in frontier for y in succ[t[-1]]]
    return [
        TowerPoint(variant, params, ctx, coords, rationality_degree=params.m)
        for coords in frontier
    ]


def count_supersingular(params: TowerParams, n: int) -> tuple:
    """(enumerated F-variant rational count, (q^m-1) q^{(m-1)(n-1)})."""
    pts = enumerate_rational(params, n, "F")
    formula = (params.q**params.m - 1) * params.q ** ((params.m - 1) * (n - 1))
    return len(pts), formula


@dataclass(frozen=True)
class RSU:
    """The coordinates R = y/x^{q^k}, S = y^{q^j}/x, and u on the quotient curve."""

    R: FieldElem
    S: FieldElem
    u: FieldElem


def rsu(params: TowerParams, ctx: FieldCtx, x: FieldElem, y: FieldElem) -> RSU:
    """R, S, u for a consecutive pair on the F-tower; verifies the trace relations."""
    if x == ctx.zero:
        raise ZeroPoint("rsu needs x != 0")
    if eval_F(params, ctx, x, y) != ctx.zero:
        raise NotOnCurve("(x, y) does not satisfy the F-recursion")
    q, j, k, a, b = ctx.q, params.j, params.k, params.a, params.b
    R = ctx.mul(y, ctx.inv(ctx.pow(x, q**k)))
    S = ctx.mul(ctx.pow(y, q**j), ctx.inv(x))
    acc = ctx.zero
    for r in range(a):
        acc = ctx.add(acc, ctx.pow(R, q ** (r * k)))
    acc2 = ctx.zero
    for s in range(b):
        acc2 = ctx.add(acc2, ctx.pow(S, q ** (s * j)))
    u = ctx.add(acc, ctx.pow(acc2, q))
    # the trace relations are load-bearing downstream; fail loudly if violated
    a_c, b_c = ctx.scalar(a), ctx.scalar(b)
    if R != ctx.sub(ctx.trace_partial(u, k), b_c):
        raise NotOnCurve("R = tr_k(u) - b violated")
    if S != ctx.add(ctx.neg(ctx.trace_partial(u, j)), a_c):
        raise NotOnCurve("S = -tr_j(u) + a violated")
    return RSU(R, S, u)


def galois_action(params: TowerParams, mu: FieldElem, point: TowerPoint) -> TowerPoint:
    """The twisted scaling (mu x_1, mu^{q^k} x_2, ..., mu^{q^{k(n-1)}} x_n)."""
    if point.variant != "F":
        raise ValueError("the twisted action is defined on F-variant points")
    ctx = point.ctx
    if ctx.d % params.m != 0 or not ctx.in_subfield(mu, params.m) or mu == ctx.zero:
        raise NotInSubfield("mu must lie in F_{q^m}^*")
    q, k = ctx.q, params.k
    coords = tuple(
        ctx.mul(ctx.pow(mu, q ** (k * i)), x) for i, x in enumerate(point.coords)
    )
    return TowerPoint("F", params, ctx, coords, rationality_degree=point.rationality_degree)


def ssing_u_set(params: TowerParams, n: int) -> set:
    """{(u_2,...,u_n) in (F_{q^m}^*)^{n-1} : tr_m(u_i) = a + b for all i}."""
    if n < 2:
        raise ValueError("need n >= 2")
    if params.q**params.m > ENUMERATION_CAP:
        raise SizeCapExceeded("q^m exceeds enumeration cap")
    ctx = params.field(params.m)
    target = ctx.scalar(params.a + params.b)
    good = [
        u
        for u in ctx.all_elements()
        if u != ctx.zero and ctx.trace_partial(u, params.m) == target
    ]
    import itertools

    return set(itertools.product(good, repeat=n - 1))


def ihara_bound(p: int, m: int) -> Fraction:
    """The closed-form lower bound 2(p^{m+1}-1) / (p + 1 + (p-1)/(p^m-1))."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("m must be positive")
    num = 2 * (p ** (m + 1) - 1)
    den = Fraction(p + 1) + Fraction(p - 1, p**m - 1)
    return Fraction(num) / den
