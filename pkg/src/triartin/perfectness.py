"""Laurent-module engine deciding perfectness of degree-map kernels.

The abelianized kernel of the degree map of a triangle group is a module
over Z[t, 1/t] on the classes of (s_b, s_c), presented by the three
rewritten relator rows.  The kernel is perfect exactly when that module is
zero, which is decided through its Fitting ideal: the ideal of maximal
minors is the unit ideal iff the module vanishes.

The decision procedure is witness-producing in both directions: a negative
answer carries a common factor of the minors (over Q or over some F_p), a
positive answer carries the integer certificate that 1 is reachable from
the minors modulo every relevant prime.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import (
    LaurentPoly,
    alternating_sum,
    cyclotomic,
    deg,
    dense_divexact,
    dense_to_laurent,
    normalize_row,
    p_gcd,
    primitive,
    q_ext_gcd,
    squarefree_part,
    trim,
    z_gcd_many,
)
from .schreier import finite_cover_presentation, kernel_relator_rows
from .snf import cokernel, smith_normal_form
from .presentations import first_homology, triangle_artin

Row = Tuple[LaurentPoly, ...]


@dataclass
class ModulePresentation:
    """Finitely presented module over Z[t, 1/t]: rows relate the generators."""

    num_generators: int
    rows: List[Row]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.num_generators:
                raise ValueError("row width does not match generator count")
        self.rows = [normalize_row(row) for row in self.rows]


@dataclass
class ModuleDecision:
    trivial: bool
    witness: Optional[str] = None
    certificate: Optional[Dict] = None

    def __bool__(self) -> bool:
        return self.trivial


def alexander_rows(m: int, n: int, p: int) -> ModulePresentation:
    """Normalized relator rows of the degree-map kernel module of the
    (m, n, p) triangle group; up to units these are (c_m, 0), (c_n, -c_n)
    and (0, c_p) for c_L the length-L alternating sum."""
    rows = kernel_relator_rows(m, n, p)
    return ModulePresentation(num_generators=2, rows=[tuple(r) for r in rows])


# ---------------------------------------------------------------------------
# Integer factoring (for the prime checks of the decision procedure)
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = int_gcd(abs(x - y), n)
        if d != n:
            return d


def prime_factors(n: int) -> List[int]:
    """Sorted distinct prime factors of a positive integer."""
    if n < 1:
        raise ValueError("need a positive integer")
    rng = random.Random(0x5EED)
    out = set()
    stack = [n]
    while stack:
        k = stack.pop()
        if k == 1:
            continue
        if _is_probable_prime(k):
            out.add(k)
            continue
        for p in (2, 3, 5, 7, 11, 13):
            if k % p == 0:
                out.add(p)
                while k % p == 0:
                    k //= p
                stack.append(k)
                break
        else:
            d = _pollard_rho(k, rng)
            stack.extend((d, k // d))
    return sorted(out)


# ---------------------------------------------------------------------------
# Witness extraction
# ---------------------------------------------------------------------------

def _rational_root_factor(p: List[int]) -> Optional[List[int]]:
    """A linear factor q t - r from a rational root r/q, if one exists."""
    p = primitive(p)
    if deg(p) < 1:
        return None
    const, lead = p[0], p[-1]
    if const == 0:
        return [0, 1]  # t itself; callers strip units beforehand
    def divisors(k):
        k = abs(k)
        return [d for d in range(1, k + 1) if k % d == 0]
    for q in divisors(lead):
        for r in divisors(const):
            for sign in (1, -1):
                num = sum(c * (sign * r) ** i * q ** (deg(p) - i) for i, c in enumerate(p))
                if num == 0:
                    return [-sign * r, q]
    return None


def _irreducible_factor(p: List[int]) -> Tuple[List[int], bool]:
    """(factor, certified_irreducible) for a positive-degree integer poly.

    Tries rational roots, then low-degree irreducibility, then a cyclotomic
    sweep; falls back to the square-free part when nothing certifies.
    """
    s = squarefree_part(p)
    root = _rational_root_factor(s)
    if root is not None:
        return root, True
    if deg(s) <= 3:
        # No rational roots and degree <= 3: irreducible over Q.
        return s, True
    for nn in range(3, 2 * deg(s) + 3):
        phi = cyclotomic(nn)
        if deg(phi) > deg(s):
            continue
        try:
            dense_divexact(s, phi)
        except (ValueError, ZeroDivisionError):
            continue
        return phi, True
    return s, False


def _poly_str(p: List[int]) -> str:
    low = p.copy()
    if low and low[0] < 0:
        low = [-c for c in low]
    return str(dense_to_laurent(low))


# ---------------------------------------------------------------------------
# Triviality decision
# ---------------------------------------------------------------------------

def _maximal_minors(mod: ModulePresentation) -> List[LaurentPoly]:
    g = mod.num_generators
    rows = mod.rows
    if len(rows) < g:
        return []

    def det(sub_rows: List[Row], cols: List[int]) -> LaurentPoly:
        if len(cols) == 1:
            return sub_rows[0][cols[0]]
        total = LaurentPoly()
        for k, col in enumerate(cols):
            minor = det(sub_rows[1:], cols[:k] + cols[k + 1:])
            term = sub_rows[0][col] * minor
            total = total + (term if k % 2 == 0 else -term)
        return total

    from itertools import combinations

    out = []
    for combo in combinations(range(len(rows)), g):
        out.append(det([rows[i] for i in combo], list(range(g))))
    return out


def is_trivial_module(mod: ModulePresentation) -> ModuleDecision:
    """Decide whether the presented module is zero.

    Steps: (1) form the maximal minors and deduplicate up to units; (2) a
    positive-degree rational gcd refutes triviality with an irreducible
    factor witness; (3) otherwise combine the minors over Q[t] into a
    positive integer D in the ideal; (4) for each prime p | D a positive-
    degree gcd of the minors over F_p refutes with a (p, factor) witness;
    (5) otherwise the Fitting ideal is the unit ideal and the module is
    zero, certified by D and the primes checked.
    """
    minors = _maximal_minors(mod)
    normalized = {}
    for q in minors:
        if not q.is_zero():
            key = q.unit_normalize()
            normalized[key] = key
    if not normalized:
        return ModuleDecision(False, witness="rank-deficient")
    dense = []
    for q in normalized:
        coeffs, _ = q.to_dense()
        dense.append(trim(coeffs))
    common = z_gcd_many(dense)
    if deg(common) > 0:
        factor, certified = _irreducible_factor(common)
        return ModuleDecision(False, witness=_poly_str(factor),
                              certificate={"irreducible_certified": certified})
    # Bezout combination over Q[t] of polynomials with rational gcd 1.
    g = [Fraction(c) for c in dense[0]]
    combo: List[List[Fraction]] = [[Fraction(1)]]
    for nxt in dense[1:]:
        gq, u, v = q_ext_gcd(g, [Fraction(c) for c in nxt])
        combo = [_fpoly_mul(u, c) for c in combo]
        combo.append(v)
        g = gq
    if len(g) != 1:
        raise RuntimeError("rational gcd disagreement in Bezout combination")
    denom = 1
    for c in combo:
        for x in c:
            denom = denom * x.denominator // int_gcd(denom, x.denominator)
    ints = [[int(x * denom) for x in c] for c in combo]
    shrink = 0
    for c in ints:
        for x in c:
            shrink = int_gcd(shrink, abs(x))
    shrink = int_gcd(shrink, denom)
    if shrink > 1:
        denom //= shrink
        ints = [[x // shrink for x in c] for c in ints]
    d_cert = denom
    primes = prime_factors(d_cert) if d_cert > 1 else []
    for p in primes:
        mod_polys = []
        all_zero = True
        for q in dense:
            reduced = [c % p for c in q]
            reduced = trim(reduced)
            if reduced:
                all_zero = False
                # strip unit powers of t surviving mod p
                while reduced and reduced[0] == 0:
                    reduced = reduced[1:]
                mod_polys.append(reduced)
        if all_zero:
            return ModuleDecision(False, witness="p=%d divides every minor" % p,
                                  certificate={"prime": p})
        gp: List[int] = []
        for q in mod_polys:
            gp = p_gcd(gp, q, p)
            if gp == [1]:
                break
        if len(gp) > 1:
            return ModuleDecision(False, witness="(p=%d, %s)" % (p, _poly_str(gp)),
                                  certificate={"prime": p, "factor_mod_p": _poly_str(gp)})
    return ModuleDecision(True, certificate={"bezout_integer": d_cert, "primes_checked": primes})


def _fpoly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def is_perfect_kernel(m: int, n: int, p: int) -> bool:
    """Is the degree-map kernel of the (m, n, p) triangle group perfect?"""
    return is_trivial_module(alexander_rows(m, n, p)).trivial


def perfectness_report(m: int, n: int, p: int) -> Dict:
    decision = is_trivial_module(alexander_rows(m, n, p))
    out = {"triple": [m, n, p], "perfect": decision.trivial}
    if decision.witness is not None:
        out["witness"] = decision.witness
    if decision.certificate is not None:
        out["certificate"] = decision.certificate
    return out


# ---------------------------------------------------------------------------
# Finite-cover homology cross-checks
# ---------------------------------------------------------------------------

def h1_finite_cover(m: int, n: int, p: int, cover_index: int) -> Tuple[int, List[int]]:
    """H1 of the kernel of the mod-n degree map, via the rewritten cover
    presentation and integer Smith normal form."""
    pres = finite_cover_presentation(triangle_artin(m, n, p), cover_index)
    return first_homology(pres)


def circulant_specialization(mod: ModulePresentation, n: int) -> List[List[int]]:
    """Integer matrix of the module modulo (t^n - 1).

    Each Laurent row expands to n integer rows (multiplication by t^k),
    each generator to n columns indexed by residues of the exponent.
    """
    if n < 1:
        raise ValueError("specialization index must be >= 1")
    out = []
    for row in mod.rows:
        for k in range(n):
            int_row = [0] * (mod.num_generators * n)
            for gidx, poly in enumerate(row):
                for e, c in poly.coeffs.items():
                    int_row[gidx * n + ((e + k) % n)] += c
            out.append(int_row)
    return out


def specialization_cokernel(mod: ModulePresentation, n: int) -> Tuple[int, List[int]]:
    matrix = circulant_specialization(mod, n)
    return cokernel(matrix, cols=mod.num_generators * n)
