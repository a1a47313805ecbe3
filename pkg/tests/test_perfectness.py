import random
from math import gcd

import pytest

from triartin.laurent import LaurentPoly, alternating_sum, normalize_row
from triartin.perfectness import (
    ModulePresentation,
    alexander_rows,
    circulant_specialization,
    h1_finite_cover,
    is_perfect_kernel,
    is_trivial_module,
    perfectness_report,
    prime_factors,
    specialization_cokernel,
)


def pairwise_coprime(m, n, p):
    return gcd(m, n) == 1 and gcd(n, p) == 1 and gcd(m, p) == 1


def test_alexander_rows_closed_forms():
    mod = alexander_rows(2, 3, 7)
    cm, cn, cp = alternating_sum(2), alternating_sum(3), alternating_sum(7)
    zero = LaurentPoly()
    assert mod.rows[0] == normalize_row((cm, zero))
    assert mod.rows[1] == normalize_row((cn, -cn))
    assert mod.rows[2] == normalize_row((zero, cp))


def test_even_rows_vanish_at_one():
    mod = alexander_rows(4, 4, 4)
    for row in mod.rows:
        for poly in row:
            assert poly.is_zero() or poly.evaluate(1) == 0


def test_triviality_examples():
    assert is_trivial_module(alexander_rows(2, 3, 7)).trivial
    d333 = is_trivial_module(alexander_rows(3, 3, 3))
    assert not d333.trivial
    assert d333.witness == "1-t+t^2"
    d236 = is_trivial_module(alexander_rows(2, 3, 6))
    assert not d236.trivial
    assert d236.witness == "1-t"


def test_rank_deficient_module():
    zero = LaurentPoly()
    mod = ModulePresentation(num_generators=2, rows=[(zero, zero)])
    decision = is_trivial_module(mod)
    assert not decision.trivial
    assert decision.witness == "rank-deficient"


def test_perfect_kernel_examples():
    assert is_perfect_kernel(2, 3, 5)
    assert not is_perfect_kernel(2, 4, 4)
    assert is_perfect_kernel(3, 5, 7)


def test_decision_stability_under_units_and_redundancy():
    rng = random.Random(8)
    t = LaurentPoly.monomial(1)
    for (m, n, p) in [(2, 3, 7), (3, 3, 3), (2, 3, 6), (4, 5, 9)]:
        mod = alexander_rows(m, n, p)
        base = is_trivial_module(mod).trivial
        rows = list(mod.rows)
        # multiply a row by a unit +-t^k
        i = rng.randrange(len(rows))
        k = rng.randrange(-2, 3)
        sign = rng.choice((1, -1))
        rows[i] = tuple(q.shift(k).scale(sign) for q in rows[i])
        # append t * (existing row)
        j = rng.randrange(len(rows))
        rows.append(tuple(q.shift(1) for q in rows[j]))
        assert is_trivial_module(ModulePresentation(2, rows)).trivial == base


def test_grid_matches_pairwise_coprimality():
    for m in range(2, 10):
        for n in range(2, 10):
            for p in range(2, 10):
                assert is_perfect_kernel(m, n, p) == pairwise_coprime(m, n, p), (m, n, p)


def test_specialization_cross_oracle():
    # necessary condition: a zero module has zero specialization at t^n = 1
    for (m, n, p) in [(2, 3, 5), (2, 3, 7), (3, 4, 5), (4, 5, 7), (5, 6, 7)]:
        mod = alexander_rows(m, n, p)
        assert is_trivial_module(mod).trivial
        for nn in (2, 3, 4, 5):
            free_rank, _ = specialization_cokernel(mod, nn)
            assert free_rank == 0


def test_circulant_shape():
    mod = alexander_rows(2, 3, 7)
    mat = circulant_specialization(mod, 4)
    assert len(mat) == 3 * 4
    assert all(len(row) == 2 * 4 for row in mat)


def test_h1_finite_cover_values():
    assert h1_finite_cover(2, 3, 7, 1) == (1, [])
    # regression constant recorded from the first computation
    assert h1_finite_cover(2, 3, 7, 2) == (1, [])
    free_rank, torsion = h1_finite_cover(2, 3, 6, 2)
    assert free_rank >= 1
    assert (free_rank, torsion) == (2, [3])


def test_report_fields():
    report = perfectness_report(3, 3, 3)
    assert report["triple"] == [3, 3, 3]
    assert report["perfect"] is False
    assert report["witness"] == "1-t+t^2"
    sure = perfectness_report(2, 3, 7)
    assert sure["perfect"] is True
    assert "bezout_integer" in sure["certificate"]


def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(2 * 3 * 3 * 7) == [2, 3, 7]
    assert prime_factors(2 ** 5) == [2]
    # two moderately large primes exercise the rho splitter
    assert prime_factors(1000003 * 1000033) == [1000003, 1000033]
    with pytest.raises(ValueError):
        prime_factors(0)
