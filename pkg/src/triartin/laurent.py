"""Integer Laurent polynomials in one variable t, with exact gcd machinery.

LaurentPoly stores a sparse exponent-to-coefficient map (negative exponents
allowed).  The gcd/Bezout helpers work on dense ordinary-polynomial
coefficient lists; units t^k are stripped before converting, which is safe
because t is invertible in the Laurent ring.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Dict, Iterable, List, Tuple


class LaurentPoly:
    """Sparse integer Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, int] | Iterable[Tuple[int, int]] = ()):
        data: Dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for exp, c in items:
            if c:
                data[int(exp)] = data.get(int(exp), 0) + int(c)
                if not data[int(exp)]:
                    del data[int(exp)]
        object.__setattr__(self, "coeffs", dict(data))

    def __setattr__(self, *args):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def monomial(exp: int, c: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Units of Z[t, 1/t] are exactly +-t^k."""
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    def min_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs)

    def max_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def evaluate(self, t: int) -> int:
        """Exact evaluation at a nonzero integer (negative exponents allowed
        only when they divide out, i.e. at t = +-1 in practice)."""
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += Fraction(c) * Fraction(t) ** e
        if total.denominator != 1:
            raise ValueError("evaluation is not an integer")
        return int(total)

    def unit_normalize(self) -> "LaurentPoly":
        """Multiply by +-t^k so the lowest degree is 0 with positive coefficient."""
        if self.is_zero():
            return self
        low = self.min_degree()
        sign = 1 if self.coeffs[low] > 0 else -1
        return LaurentPoly({e - low: sign * c for e, c in self.coeffs.items()})

    def to_dense(self) -> Tuple[List[int], int]:
        """(coefficient list lowest-to-highest, offset) with t^offset factored out."""
        if self.is_zero():
            return [], 0
        low, high = self.min_degree(), self.max_degree()
        return [self.coeffs.get(e, 0) for e in range(low, high + 1)], low

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                tpow = "t" if e == 1 else "t^%d" % e
                body = tpow if abs(c) == 1 else "%d%s" % (abs(c), tpow)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    __repr__ = __str__


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)


def alternating_sum(length: int) -> LaurentPoly:
    """c_L(t) = sum_{i=0}^{L-1} (-t)^i; the closed form of a rewritten
    alternating relator row."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return LaurentPoly({i: (-1) ** i for i in range(length)})


# ---------------------------------------------------------------------------
# Dense ordinary-polynomial helpers (index = degree, ints unless noted).
# ---------------------------------------------------------------------------

def trim(p: List[int]) -> List[int]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def deg(p: List[int]) -> int:
    return len(p) - 1


def dense_mul(p: List[int], q: List[int]) -> List[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def dense_sub(p: List[int], q: List[int]) -> List[int]:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def content(p: List[int]) -> int:
    c = 0
    for a in p:
        c = int_gcd(c, abs(a))
    return c


def primitive(p: List[int]) -> List[int]:
    c = content(p)
    if c == 0:
        return []
    p = [a // c for a in p]
    if p[-1] < 0:
        p = [-a for a in p]
    return p


def pseudo_rem(p: List[int], q: List[int]) -> List[int]:
    """Pseudo-remainder of p by q (q nonzero), exact over Z."""
    p = list(p)
    dq = deg(q)
    lead = q[-1]
    while deg(p) >= dq and p:
        shift = deg(p) - dq
        coeff = p[-1]
        p = [a * lead for a in p]
        sub = [0] * shift + [a * coeff for a in q]
        p = dense_sub(p, sub)
    return trim(p)


def z_gcd(p: List[int], q: List[int]) -> List[int]:
    """Primitive gcd in Z[t] via the primitive remainder sequence."""
    p, q = trim(list(p)), trim(list(q))
    if not p:
        return primitive(q)
    if not q:
        return primitive(p)
    cont = int_gcd(content(p), content(q))
    p, q = primitive(p), primitive(q)
    while q:
        r = primitive(pseudo_rem(p, q))
        p, q = q, r
    if deg(p) == 0:
        return [cont]
    return [a * cont for a in p] if cont != 1 else p


def z_gcd_many(ps: Iterable[List[int]]) -> List[int]:
    out: List[int] = []
    for p in ps:
        out = z_gcd(out, p)
        if out == [1]:
            return out
    return out


def dense_divexact(p: List[int], q: List[int]) -> List[int]:
    """Exact division in Z[t]; raises if q does not divide p."""
    p = trim(list(p))
    q = trim(list(q))
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    out = [0] * (max(len(p) - len(q) + 1, 0))
    while p and deg(p) >= deg(q):
        if p[-1] % q[-1] != 0:
            raise ValueError("not an exact division")
        c = p[-1] // q[-1]
        shift = deg(p) - deg(q)
        out[shift] = c
        p = dense_sub(p, [0] * shift + [c * a for a in q])
    if p:
        raise ValueError("not an exact division")
    return trim(out)


def q_divmod(p: List[Fraction], q: List[Fraction]):
    p = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while p and len(p) >= len(q):
        c = p[-1] / q[-1]
        shift = len(p) - len(q)
        quo[shift] = c
        for i, a in enumerate(q):
            p[shift + i] -= c * a
        while p and p[-1] == 0:
            p.pop()
    return quo, p


def q_ext_gcd(p: List[Fraction], q: List[Fraction]):
    """Extended Euclid over Q[t]: returns (g, u, v) with u*p + v*q = g monic."""
    r0, r1 = list(p), list(q)
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]

    def fmul(a, b):
        if not a or not b:
            return []
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        while out and out[-1] == 0:
            out.pop()
        return out

    def fsub(a, b):
        n = max(len(a), len(b))
        out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0)) for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return out

    while r1:
        quo, rem = q_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, fsub(u0, fmul(quo, u1))
        v0, v1 = v1, fsub(v0, fmul(quo, v1))
    if not r0:
        return [], u0, v0
    lead = r0[-1]
    r0 = [c / lead for c in r0]
    u0 = [c / lead for c in u0]
    v0 = [c / lead for c in v0]
    return r0, u0, v0


def p_gcd(p: List[int], q: List[int], mod: int) -> List[int]:
    """Monic gcd over the prime field F_mod (empty list = zero)."""

    def norm(a):
        a = [x % mod for x in a]
        while a and a[-1] == 0:
            a.pop()
        return a

    def rem(a, b):
        a = list(a)
        inv = pow(b[-1], -1, mod)
        while a and len(a) >= len(b):
            c = (a[-1] * inv) % mod
            shift = len(a) - len(b)
            for i, x in enumerate(b):
                a[shift + i] = (a[shift + i] - c * x) % mod
            while a and a[-1] == 0:
                a.pop()
        return a

    a, b = norm(p), norm(q)
    while b:
        a, b = b, rem(a, b)
    if a:
        inv = pow(a[-1], -1, mod)
        a = [(x * inv) % mod for x in a]
    return a


_CYCLOTOMIC_CACHE: Dict[int, List[int]] = {}


def cyclotomic(n: int) -> List[int]:
    """Dense coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[n]
    # (t^n - 1) / prod of lower cyclotomics at divisors of n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = dense_divexact(num, cyclotomic(d))
    _CYCLOTOMIC_CACHE[n] = num
    return num


def dense_derivative(p: List[int]) -> List[int]:
    return trim([i * p[i] for i in range(1, len(p))])


def squarefree_part(p: List[int]) -> List[int]:
    p = primitive(p)
    if deg(p) <= 0:
        return p
    return primitive(dense_divexact(p, z_gcd(p, dense_derivative(p))))


def dense_to_laurent(p: List[int], offset: int = 0) -> LaurentPoly:
    return LaurentPoly({i + offset: c for i, c in enumerate(p)})


def normalize_row(row: Tuple[LaurentPoly, ...]) -> Tuple[LaurentPoly, ...]:
    """Scale a vector of Laurent polynomials by the unit +-t^k that puts the
    overall lowest degree at 0 with a positive leading (lowest) coefficient
    in the first nonzero entry."""
    nonzero = [p for p in row if not p.is_zero()]
    if not nonzero:
        return row
    low = min(p.min_degree() for p in nonzero)
    first = next(p for p in row if not p.is_zero())
    sign = 1 if first.coeffs[first.min_degree()] > 0 else -1
    return tuple(p.shift(-low).scale(sign) if not p.is_zero() else p for p in row)
