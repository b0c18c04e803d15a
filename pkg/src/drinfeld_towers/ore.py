"""Twisted polynomial ring L{tau} with tau * a = a^q * tau.

A TwistedPoly acts on its field as the q-linearized map
f(mu) = sum g_i mu^{q^i}; multiplication in the ring models composition of
these maps.  Kernels and affine solution sets are computed by exact linear
algebra over F_q inside the ambient field standing in for the algebraic
closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import ContextMismatch, NoSplittingFound, SizeCapExceeded
from .field import FieldCtx, FieldElem, embed, make_field


class TwistedPoly:
    """Finite coefficient sequence (g_0, ..., g_d) over a FieldCtx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        coeffs = tuple(coeffs)
        while coeffs and coeffs[-1] == ctx.zero:
            coeffs = coeffs[:-1]
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (ctx.one,))

    @classmethod
    def constant(cls, ctx, c: FieldElem):
        return cls(ctx, (c,))

    @classmethod
    def tau(cls, ctx, i: int = 1, coeff: FieldElem | None = None):
        """coeff * tau^i (coeff defaults to 1)."""
        c = ctx.one if coeff is None else coeff
        return cls(ctx, (ctx.zero,) * i + (c,))

    @property
    def tau_degree(self):
        """Index of the last nonzero coefficient; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if i < len(self.coeffs) else self.ctx.zero

    def __eq__(self, other):
        return (
            isinstance(other, TwistedPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __add__(self, other):
        return ore_add(self, other)

    def __sub__(self, other):
        return ore_add(self, ore_scale(self.ctx.neg(self.ctx.one), other))

    def __neg__(self):
        return ore_scale(self.ctx.neg(self.ctx.one), self)

    def __mul__(self, other):
        return ore_mul(self, other)

    def __call__(self, mu: FieldElem) -> FieldElem:
        return evaluate(self, mu)

    def __repr__(self):
        return f"TwistedPoly({self.text()})"

    def text(self) -> str:
        """Canonical text form: "g_0 + g_1*t + g_2*t^2 + ..."."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.ctx.zero:
                continue
            s = self.ctx.format_elem(c)
            if i == 0:
                parts.append(s)
            elif i == 1:
                parts.append(f"{s}*t")
            else:
                parts.append(f"{s}*t^{i}")
        return " + ".join(parts)

    def map_to(self, dst: FieldCtx) -> "TwistedPoly":
        """Same polynomial with coefficients embedded into a larger ambient."""
        return TwistedPoly(dst, tuple(embed(c, self.ctx, dst) for c in self.coeffs))


def _same_ctx(f: TwistedPoly, g: TwistedPoly):
    if f.ctx != g.ctx:
        raise ContextMismatch("twisted polynomials over different contexts")


def ore_add(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    _same_ctx(f, g)
    ctx = f.ctx
    n = max(len(f.coeffs), len(g.coeffs))
    return TwistedPoly(ctx, (ctx.add(f.coeff(i), g.coeff(i)) for i in range(n)))


def ore_scale(c: FieldElem, f: TwistedPoly) -> TwistedPoly:
    ctx = f.ctx
    return TwistedPoly(ctx, (ctx.mul(c, a) for a in f.coeffs))


def ore_mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """Product under the twist rule (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}."""
    _same_ctx(f, g)
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return TwistedPoly.zero(ctx)
    out = [ctx.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == ctx.zero:
            continue
        for j, b in enumerate(g.coeffs):
            if b == ctx.zero:
                continue
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, ctx.frobenius(b, i)))
    return TwistedPoly(ctx, out)


def evaluate(f: TwistedPoly, mu: FieldElem) -> FieldElem:
    """f(mu) = sum g_i mu^{q^i}."""
    ctx = f.ctx
    acc, cur = ctx.zero, mu
    for i, g in enumerate(f.coeffs):
        if i:
            cur = ctx.frobenius(cur, 1)
        if g != ctx.zero:
            acc = ctx.add(acc, ctx.mul(g, cur))
    return acc


def point_derivation(f: TwistedPoly) -> FieldElem:
    """The constant coefficient g_0 (multiplicative on products)."""
    return f.coeff(0)


def linear_matrix(f: TwistedPoly):
    """d x d matrix over F_q of the q-linear map mu -> f(mu).

    Column i holds the coordinates of f(y^i) in the basis {1, y, ..., y^{d-1}}.
    """
    ctx = f.ctx
    cols = []
    for t in range(ctx.d):
        basis_elem = tuple([0] * t + [1] + [0] * (ctx.d - t - 1))
        cols.append(evaluate(f, basis_elem))
    return tuple(tuple(cols[c][r] for c in range(ctx.d)) for r in range(ctx.d))


@dataclass(frozen=True)
class Subspace:
    """F_q-subspace of a FieldCtx, held as a canonical RREF basis."""

    ctx: FieldCtx
    basis: tuple  # rows are FieldElems in reduced echelon form

    @classmethod
    def from_vectors(cls, ctx: FieldCtx, vectors) -> "Subspace":
        rows = tuple(tuple(v) for v in vectors)
        if not rows:
            return cls(ctx, ())
        red, _ = linalg.rref(rows, ctx._bops)
        return cls(ctx, red)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return self.ctx.q**self.dim

    def contains(self, x: FieldElem) -> bool:
        red, _ = linalg.rref(self.basis + (tuple(x),), self.ctx._bops)
        return len(red) == self.dim

    def elements(self) -> list:
        """All q^dim members, sorted in canonical field order."""
        ctx = self.ctx
        span = [ctx.zero]
        for b in self.basis:
            layer = list(span)
            for s in range(1, ctx.q):
                sb = ctx.base_scale(s, b)
                layer.extend(ctx.add(v, sb) for v in span)
            span = layer
        span.sort(key=ctx.to_int)
        return span

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)


def kernel(f: TwistedPoly) -> Subspace:
    """All mu in the ambient with f(mu) = 0, as a canonical Subspace."""
    ctx = f.ctx
    if f.is_zero():
        return Subspace.from_vectors(ctx, [tuple([0] * t + [1] + [0] * (ctx.d - t - 1)) for t in range(ctx.d)])
    rows = linear_matrix(f)
    basis = linalg.nullspace(rows, ctx._bops)
    return Subspace(ctx, tuple(basis))


def solve_affine(f: TwistedPoly, c: FieldElem) -> list:
    """All mu in the ambient with f(mu) = c, in canonical order."""
    ctx = f.ctx
    if f.is_zero():
        return [] if c != ctx.zero else kernel(f).elements()
    rows = linear_matrix(f)
    part = linalg.solve(rows, tuple(c), ctx._bops)
    if part is None:
        return []
    ker = kernel(f)
    sols = [ctx.add(tuple(part), k) for k in ker.elements()]
    sols.sort(key=ctx.to_int)
    return sols


def splitting_degree(
    f: TwistedPoly, target_dim: int, max_d: int | None = None, *, divisible_by: int = 1
) -> int:
    """Least multiple D of the ambient degree at which Ker(f) reaches target_dim.

    Requires a nonzero constant coefficient (so f is separable and the kernel
    stops growing once full).  `divisible_by` additionally constrains D, for
    callers that need the ambient to contain a fixed subfield.  Raises
    NoSplittingFound if no D <= max_d works within the size cap.
    """
    ctx = f.ctx
    if f.is_zero() or f.coeff(0) == ctx.zero:
        raise ValueError("splitting_degree needs a nonzero constant coefficient")
    if max_d is None:
        # largest degree the size cap allows
        max_d = 1
        while ctx.p ** (ctx.e * (max_d + 1)) <= ctx.size_cap:
            max_d += 1
    D = ctx.d
    while D <= max_d:
        if D % divisible_by:
            D += ctx.d
            continue
        try:
            amb = make_field(ctx.p, ctx.e, D, ctx.size_cap)
        except SizeCapExceeded:
            break
        g = f.map_to(amb)
        if kernel(g).dim == target_dim:
            return D
        D += ctx.d
    raise NoSplittingFound(
        f"kernel of tau-degree-{f.tau_degree} polynomial never reached dim {target_dim} up to degree {max_d}"
    )
