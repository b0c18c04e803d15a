"""Finite fields F_{q^d} with q = p^e, built as F_q[y]/(g) over F_q = F_p[x]/(h).

A field element is a plain tuple of length d whose entries are "base ints":
an element of F_q packed as an integer in [0, q) via base-p digits.  The
tuple is exactly the coordinate vector in the F_q-basis {1, y, ..., y^{d-1}},
which is what the linear algebra downstream works with.

All contexts are canonical: both moduli are the least monic irreducibles of
their degree (coefficient sequences compared as base-q / base-p integers), so
two builds of the same (p, e, d) agree bit for bit.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

from .errors import (
    ContextMismatch,
    DegreeNotDividing,
    DivisionByZero,
    NoIrreducibleFound,
    NotPrime,
    SizeCapExceeded,
)

FieldElem = tuple  # length-d tuple of base ints; alias for readability

DEFAULT_SIZE_CAP = 2**26


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# ---------------------------------------------------------------------------
# generic dense polynomials over a small field given by an "ops" object
# (elements are ints; ops has .add/.sub/.mul/.neg/.inv and .size)

def poly_trim(c: Sequence[int]) -> tuple:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def poly_add(a, b, ops) -> tuple:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(ops.add(x, y))
    return poly_trim(out)


def poly_sub(a, b, ops) -> tuple:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(ops.sub(x, y))
    return poly_trim(out)


def poly_mul(a, b, ops) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = ops.add(out[i + j], ops.mul(x, y))
    return poly_trim(out)


def poly_divmod(a, b, ops) -> tuple:
    """Quotient and remainder of dense polynomials; b must be nonzero."""
    b = poly_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(poly_trim(a))
    db, lb = len(b) - 1, b[-1]
    lb_inv = ops.inv(lb)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = ops.mul(a[-1], lb_inv)
        shift = len(a) - 1 - db
        q[shift] = c
        for i in range(db + 1):
            a[shift + i] = ops.sub(a[shift + i], ops.mul(c, b[i]))
        a = list(poly_trim(a))
    return poly_trim(q), poly_trim(a)


def poly_mod(a, b, ops) -> tuple:
    return poly_divmod(a, b, ops)[1]


def _poly_from_index(idx: int, deg: int, size: int) -> tuple:
    """Monic polynomial of given degree whose low coefficients encode idx base `size`."""
    coeffs = []
    for _ in range(deg):
        coeffs.append(idx % size)
        idx //= size
    coeffs.append(1)
    return tuple(coeffs)


def _is_irreducible(f, ops) -> bool:
    """Exhaustive trial division by all lower-degree monic polynomials."""
    deg = len(f) - 1
    if deg <= 0:
        return False
    for t in range(1, deg // 2 + 1):
        for idx in range(ops.size**t):
            g = _poly_from_index(idx, t, ops.size)
            if not poly_mod(f, g, ops):
                return False
    return True


def least_irreducible(deg: int, ops) -> tuple:
    """Least monic irreducible of the given degree, coefficient order ascending."""
    for idx in range(ops.size**deg):
        f = _poly_from_index(idx, deg, ops.size)
        if _is_irreducible(f, ops):
            return f
    raise NoIrreducibleFound(f"no monic irreducible of degree {deg} over size-{ops.size} field")


# ---------------------------------------------------------------------------
# the two coefficient levels

class _PrimeOps:
    """Arithmetic on F_p represented as ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.size = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in F_p")
        return pow(a, -1, self.p)


class _BaseOps:
    """Arithmetic on F_q = F_p[x]/(h), elements packed as ints in [0, q).

    Packing: value = sum(digit_i * p^i) over the coefficients of x^i.
    Multiplication results are memoised; the desk-scale fields used here keep
    the cache tiny.
    """

    def __init__(self, p: int, e: int, modulus: tuple):
        self.p = p
        self.e = e
        self.size = p**e
        self.modulus = modulus
        self._pops = _PrimeOps(p)
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}

    def _unpack(self, a: int) -> tuple:
        p, out = self.p, []
        for _ in range(self.e):
            out.append(a % p)
            a //= p
        return tuple(out)

    def _pack(self, digits: Iterable[int]) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d
        return v

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        da, db = self._unpack(a), self._unpack(b)
        return self._pack((x + y) % self.p for x, y in zip(da, db))

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        da, db = self._unpack(a), self._unpack(b)
        return self._pack((x - y) % self.p for x, y in zip(da, db))

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._pack((-x) % self.p for x in self._unpack(a))

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        key = (a, b) if a <= b else (b, a)
        v = self._mul_cache.get(key)
        if v is None:
            pa = poly_trim(self._unpack(a))
            pb = poly_trim(self._unpack(b))
            prod = poly_mod(poly_mul(pa, pb, self._pops), self.modulus, self._pops)
            v = self._pack(list(prod) + [0] * (self.e - len(prod)))
            self._mul_cache[key] = v
        return v

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in F_q")
        if self.e == 1:
            return pow(a, -1, self.p)
        v = self._inv_cache.get(a)
        if v is None:
            v = self.pow(a, self.size - 2)
            self._inv_cache[a] = v
        return v

    def pow(self, a, n):
        r, b = 1, a
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r


class FieldCtx:
    """Immutable description of F_{q^d}; owns all element arithmetic.

    Elements are tuples of length d of base ints (see module docstring).
    The context is safe to share across threads: every cache is append-only
    and keyed by value.
    """

    def __init__(self, p: int, e: int, d: int, size_cap: int = DEFAULT_SIZE_CAP):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1 or d < 1:
            raise ValueError("extension degrees must be positive")
        if p ** (e * d) > size_cap:
            raise SizeCapExceeded(f"p^(e*d) = {p}^{e * d} exceeds cap {size_cap}")
        self.p = p
        self.e = e
        self.d = d
        self.q = p**e
        self.size_cap = size_cap
        self._pops = _PrimeOps(p)
        self.base_modulus = least_irreducible(e, self._pops)
        self._bops = _BaseOps(p, e, self.base_modulus)
        self.ext_modulus = least_irreducible(d, self._bops)
        self.zero: FieldElem = (0,) * d
        self.one: FieldElem = tuple([1] + [0] * (d - 1))
        # y^{d+i} reduced mod ext_modulus, for multiplication reduction
        self._high_pows = []
        cur = poly_trim(self.ext_modulus[:-1])  # y^d = -(low part), monic modulus
        cur = tuple(self._bops.neg(c) for c in cur)
        for _ in range(d - 1):
            self._high_pows.append(self._pad(cur))
            # multiply by y and reduce
            shifted = (0,) + cur
            if len(shifted) > d:
                lead = shifted[d]
                shifted = poly_trim(shifted[:d])
                head = tuple(self._bops.mul(lead, c) for c in self._high_pows[0])
                cur = tuple(
                    self._bops.add(a, b)
                    for a, b in zip(self._pad(shifted), head)
                )
                cur = poly_trim(cur)
            else:
                cur = poly_trim(shifted)
        # Frobenius data, built lazily
        self._frob_y = None
        self._frob_b = None
        self._subfield_cache: dict = {}

    # -- representation helpers ------------------------------------------------

    def _pad(self, coeffs: Sequence[int]) -> FieldElem:
        return tuple(coeffs) + (0,) * (self.d - len(coeffs))

    def element(self, coeffs: Sequence[int]) -> FieldElem:
        """Element from base-int coefficients in the basis {1, y, ..., y^{d-1}}."""
        if len(coeffs) > self.d:
            raise ValueError("too many coefficients")
        if any(c < 0 or c >= self.q for c in coeffs):
            raise ValueError("coefficients must be base ints in [0, q)")
        return self._pad(coeffs)

    def from_base(self, b: int) -> FieldElem:
        """Constant element of the F_q-subfield, given as a base int."""
        return self._pad((b,))

    def scalar(self, n: int) -> FieldElem:
        """Integer constant mapped into the prime subfield."""
        return self.from_base(n % self.p)

    def to_int(self, x: FieldElem) -> int:
        v = 0
        for c in reversed(x):
            v = v * self.q + c
        return v

    def from_int(self, v: int) -> FieldElem:
        out = []
        for _ in range(self.d):
            out.append(v % self.q)
            v //= self.q
        return tuple(out)

    def format_elem(self, x: FieldElem) -> str:
        """Canonical text form: base-p digits, inner (x-)coefficients first."""
        digits = []
        for c in x:
            digits.extend(self._bops._unpack(c))
        return "[" + ",".join(str(t) for t in digits) + "]"

    def parse_elem(self, s: str) -> FieldElem:
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"bad element literal: {s!r}")
        digits = [int(t) for t in s[1:-1].split(",")] if s != "[]" else []
        if len(digits) != self.e * self.d:
            raise ValueError(f"expected {self.e * self.d} digits, got {len(digits)}")
        if any(t < 0 or t >= self.p for t in digits):
            raise ValueError("digits out of range")
        coeffs = []
        for i in range(self.d):
            coeffs.append(self._bops._pack(digits[i * self.e : (i + 1) * self.e]))
        return tuple(coeffs)

    # -- arithmetic ------------------------------------------------------------

    def add(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return tuple(self._bops.add(a, b) for a, b in zip(x, y))

    def sub(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return tuple(self._bops.sub(a, b) for a, b in zip(x, y))

    def neg(self, x: FieldElem) -> FieldElem:
        return tuple(self._bops.neg(a) for a in x)

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        d, bops = self.d, self._bops
        out = [0] * (2 * d - 1)
        for i, a in enumerate(x):
            if a == 0:
                continue
            for jj, b in enumerate(y):
                if b:
                    out[i + jj] = bops.add(out[i + jj], bops.mul(a, b))
        # fold y^{d+i} terms back via precomputed reductions
        res = list(out[:d])
        for i in range(d - 1):
            c = out[d + i]
            if c == 0:
                continue
            red = self._high_pows[i]
            for t in range(d):
                if red[t]:
                    res[t] = bops.add(res[t], bops.mul(c, red[t]))
        return tuple(res)

    def base_scale(self, b: int, x: FieldElem) -> FieldElem:
        return tuple(self._bops.mul(b, c) for c in x)

    def inv(self, x: FieldElem) -> FieldElem:
        if x == self.zero:
            raise DivisionByZero("inverse of 0")
        bops = self._bops
        # extended Euclid on (x, ext_modulus) over F_q
        r0, r1 = poly_trim(x), self.ext_modulus
        s0, s1 = (1,), ()
        while r1:
            q, r = poly_divmod(r0, r1, bops)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, bops), bops)
        lead_inv = bops.inv(r0[-1])
        return self._pad(tuple(bops.mul(lead_inv, c) for c in s0))

    def div(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElem, n: int) -> FieldElem:
        if n < 0:
            return self.pow(self.inv(x), -n)
        r, b = self.one, x
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def _frob_setup(self):
        # (y^t)^q for each basis power; coefficients live in F_q and are fixed
        # by x -> x^q, so the q-Frobenius is F_q-linear in the coordinates
        if self._frob_y is None:
            frob_y = []
            for t in range(self.d):
                yt = self._pad(tuple([0] * t + [1]))
                frob_y.append(self.pow(yt, self.q))
            self._frob_y = frob_y

    def frobenius(self, x: FieldElem, i: int = 1) -> FieldElem:
        """x^{q^i}; F_q-linear, so computed as a linear map on coordinates."""
        self._frob_setup()
        for _ in range(i):
            acc = self.zero
            for t, c in enumerate(x):
                if c:
                    acc = self.add(acc, self.base_scale(c, self._frob_y[t]))
            x = acc
        return x

    def trace_partial(self, x: FieldElem, l: int) -> FieldElem:
        """tr_l(x) = sum of x^{q^i} for 0 <= i < l."""
        acc, cur = self.zero, x
        for i in range(l):
            if i:
                cur = self.frobenius(cur, 1)
            acc = self.add(acc, cur)
        return acc

    def in_subfield(self, x: FieldElem, m: int) -> bool:
        """True iff x^{q^m} = x, i.e. x lies in F_{q^m} inside this field."""
        if m < 1 or self.d % m != 0:
            raise DegreeNotDividing(f"{m} does not divide ambient degree {self.d}")
        return self.frobenius(x, m) == x

    def subfield_elements(self, m: int) -> list:
        """All q^m elements of F_{q^m} inside this field, in canonical order."""
        if m < 1 or self.d % m != 0:
            raise DegreeNotDividing(f"{m} does not divide ambient degree {self.d}")
        if self.q**m > self.size_cap:
            raise SizeCapExceeded(f"q^m = {self.q}^{m} exceeds cap")
        cached = self._subfield_cache.get(m)
        if cached is not None:
            return list(cached)
        from .linalg import nullspace

        # fixed points of frob^m: nullspace of (M - I)
        self._frob_setup()
        cols = [self.frobenius(self._pad(tuple([0] * t + [1])), m) for t in range(self.d)]
        rows = []
        for r in range(self.d):
            row = []
            for c in range(self.d):
                v = cols[c][r]
                if r == c:
                    v = self._bops.sub(v, 1)
                row.append(v)
            rows.append(tuple(row))
        basis = nullspace(tuple(rows), self._bops)
        span = [self.zero]
        for b in basis:
            cur = list(span)
            for s in range(1, self.q):
                sb = self.base_scale(s, tuple(b))
                cur.extend(self.add(v, sb) for v in span)
            span = cur
        span.sort(key=self.to_int)
        self._subfield_cache[m] = tuple(span)
        return span

    def all_elements(self) -> list:
        return self.subfield_elements(self.d)

    # contexts with equal parameters are interchangeable
    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.e, self.d) == (other.p, other.e, other.d)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.d))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, d={self.d})"


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, e: int, d: int, size_cap: int) -> FieldCtx:
    return FieldCtx(p, e, d, size_cap)


def make_field(p: int, e: int, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> FieldCtx:
    """Canonical context for F_{(p^e)^d}; deterministic across runs."""
    return _make_field_cached(p, e, d, size_cap)


# ---------------------------------------------------------------------------
# canonical embeddings along the tower of canonical contexts

_embed_cache: dict = {}


def embed(x: FieldElem, src: FieldCtx, dst: FieldCtx) -> FieldElem:
    """Map x from a canonical context into a larger one with src.d | dst.d.

    Sends the generator y of src to the least root (canonical order) of
    src.ext_modulus inside dst.  Both contexts must share (p, e); only
    canonically constructed contexts are supported.
    """
    if (src.p, src.e) != (dst.p, dst.e):
        raise ContextMismatch("contexts have different base fields")
    if dst.d % src.d != 0:
        raise DegreeNotDividing(f"{src.d} does not divide {dst.d}")
    if src.d == dst.d:
        return x
    key = (src.p, src.e, src.d, dst.d)
    powers = _embed_cache.get(key)
    if powers is None:
        root = None
        for cand in dst.subfield_elements(src.d):
            acc = dst.zero
            for c in reversed(src.ext_modulus):
                acc = dst.add(dst.mul(acc, cand), dst.from_base(c))
            if acc == dst.zero:
                root = cand
                break
        if root is None:
            raise NoIrreducibleFound("modulus has no root in target subfield")
        powers = [dst.one]
        for _ in range(src.d - 1):
            powers.append(dst.mul(powers[-1], root))
        _embed_cache[key] = powers
    acc = dst.zero
    for t, c in enumerate(x):
        if c:
            acc = dst.add(acc, dst.base_scale(c, powers[t]))
    return acc
