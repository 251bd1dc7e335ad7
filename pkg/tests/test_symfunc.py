import math
import random
from fractions import Fraction
from itertools import product

import pytest

from plethys.symfunc import (
    SymFunc,
    adams,
    d_operator,
    euler_phi,
    geom,
    h_gen,
    h_lambda,
    log_inv,
    partial_p,
    partitions_of,
    plethysm,
    z_of,
)


def brute_partitions(n):
    """Independent oracle: weakly decreasing positive tuples summing to n."""
    if n == 0:
        return {()}
    found = set()
    for first in range(1, n + 1):
        for rest in brute_partitions(n - first):
            if not rest or rest[0] <= first:
                found.add((first,) + rest)
    return found


def random_symfunc(rng, truncation, min_degree=1, max_terms=4):
    terms = {}
    degrees = list(range(min_degree, truncation + 1))
    for _ in range(rng.randint(1, max_terms)):
        d = rng.choice(degrees)
        lam = rng.choice(partitions_of(d))
        terms[lam] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return SymFunc(truncation, terms)


def test_partitions_small():
    assert partitions_of(0) == ((),)
    assert partitions_of(1) == ((1,),)
    assert len(partitions_of(4)) == 5


def test_partitions_match_brute_force():
    for n in range(9):
        assert set(partitions_of(n)) == brute_partitions(n)
        assert len(partitions_of(n)) == len(set(partitions_of(n)))


def test_partitions_reverse_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for n in range(9):
        parts = partitions_of(n)
        keys = [tuple(-p for p in lam) for lam in parts]
        assert keys == sorted(keys)


def test_z_of_examples():
    assert z_of((1, 1, 1)) == 6
    assert z_of((2, 1)) == 2
    for n in range(1, 9):
        assert z_of((n,)) == n


def test_z_of_counts_conjugacy_classes():
    # sum over partitions of n!/z_lam is n! distributed over classes
    for n in range(1, 7):
        assert sum(math.factorial(n) // z_of(lam) for lam in partitions_of(n)) == math.factorial(n)


def test_z_reciprocals_sum_to_one():
    for n in range(1, 9):
        assert sum(Fraction(1, z_of(lam)) for lam in partitions_of(n)) == 1


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2
    assert euler_phi(12) == 4


def test_euler_phi_unit_count_oracle():
    for n in range(1, 60):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_h_gen_small():
    N = 6
    assert h_gen(1, N) == SymFunc.p(1, N)
    assert h_gen(2, N) == SymFunc(N, {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)})
    assert h_gen(3, N) == SymFunc(
        N, {(3,): Fraction(1, 3), (2, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 6)}
    )


def test_h_gen_rejects_above_truncation():
    with pytest.raises(ValueError):
        h_gen(4, 3)


def test_ring_ops():
    N = 3
    p1 = SymFunc.p(1, N)
    assert p1 * p1 == SymFunc(N, {(1, 1): 1})
    f = h_gen(3, N)
    assert f + SymFunc.zero(N) == f
    # degree-4 products vanish at truncation 3
    assert h_gen(2, N) * SymFunc.p(2, N) == SymFunc.zero(N)


def test_truncation_mismatch_rejected():
    with pytest.raises(ValueError):
        SymFunc.p(1, 3) + SymFunc.p(1, 4)
    with pytest.raises(ValueError):
        SymFunc.p(1, 3) * SymFunc.p(1, 4)


def test_constructor_rejects_bad_terms():
    with pytest.raises(ValueError):
        SymFunc(3, {(1, 2): 1})  # not weakly decreasing
    with pytest.raises(ValueError):
        SymFunc(3, {(4,): 1})  # above truncation
    with pytest.raises(TypeError):
        SymFunc(3, {(1,): 0.5})  # inexact coefficient


def test_plethysm_examples():
    N = 6
    assert plethysm(SymFunc.p(2, N), SymFunc.p(3, N)) == SymFunc.p(6, N)
    g = random_symfunc(random.Random(7), N)
    assert plethysm(h_gen(1, N), g) == g
    assert plethysm(h_gen(2, N), SymFunc.p(2, N)) == SymFunc(
        N, {(4,): Fraction(1, 2), (2, 2): Fraction(1, 2)}
    )


def test_plethysm_rejects_constant_term():
    N = 4
    g = SymFunc.one(N) + SymFunc.p(1, N)
    with pytest.raises(ValueError):
        plethysm(SymFunc.p(1, N), g)


def test_plethysm_left_constant_passes_through():
    N = 4
    f = SymFunc.one(N) * Fraction(3, 2) + SymFunc.p(2, N)
    g = SymFunc.p(1, N)
    assert plethysm(f, g) == SymFunc(N, {(): Fraction(3, 2), (2,): 1})


def test_plethysm_associative_randomized():
    rng = random.Random(2024)
    for _ in range(30):
        N = rng.randint(3, 6)
        f = random_symfunc(rng, N)
        g = random_symfunc(rng, N)
        h = random_symfunc(rng, N)
        assert plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h))


def test_adams_examples():
    N = 6
    assert adams(2, SymFunc.p(1, N)) == SymFunc.p(2, N)
    f = random_symfunc(random.Random(3), N)
    assert adams(1, f) == f
    assert adams(2, h_gen(2, N)) == plethysm(h_gen(2, N), SymFunc.p(2, N))


def test_adams_is_plethysm_by_power_sum():
    rng = random.Random(11)
    for _ in range(20):
        N = rng.randint(3, 6)
        g = random_symfunc(rng, N)
        for k in range(1, N + 1):
            assert plethysm(SymFunc.p(k, N), g) == adams(k, g)


def test_adams_semigroup_and_ring_hom():
    rng = random.Random(13)
    for _ in range(20):
        N = rng.randint(4, 6)
        f = random_symfunc(rng, N, min_degree=0)
        g = random_symfunc(rng, N, min_degree=0)
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        assert adams(m, adams(n, f)) == adams(m * n, f)
        assert adams(m, f * g) == adams(m, f) * adams(m, g)
        assert adams(m, f + g) == adams(m, f) + adams(m, g)


def test_partial_p_examples():
    N = 6
    f = SymFunc(N, {(2, 1, 1): 1})  # p1^2 p2
    assert partial_p(1, f) == SymFunc(N, {(2, 1): 2})
    assert partial_p(2, h_gen(2, N)) == SymFunc(N, {(): Fraction(1, 2)})
    h3pp = partial_p(1, partial_p(1, h_gen(3, N)))
    assert h3pp == SymFunc.p(1, N)


def test_second_derivative_of_h_shifts_index():
    N = 8
    for n in range(3, 9):
        hn = h_gen(n, N)
        assert partial_p(1, partial_p(1, hn)) == h_gen(n - 2, N)


def test_d_operator_examples():
    N = 6
    rng = random.Random(5)
    g = random_symfunc(rng, N, min_degree=1)
    p1 = SymFunc.p(1, N)
    p2 = SymFunc.p(2, N)
    assert d_operator(p1 * p1, g) == partial_p(1, partial_p(1, g))
    assert d_operator(p2, g) == partial_p(2, g) * 2
    assert d_operator(p1, p1) == SymFunc.one(N)


def test_d_operator_composition():
    rng = random.Random(17)
    for _ in range(20):
        N = rng.randint(4, 6)
        f1 = random_symfunc(rng, N)
        f2 = random_symfunc(rng, N)
        g = random_symfunc(rng, N)
        assert d_operator(SymFunc.p(1, N), g) == partial_p(1, g)
        assert d_operator(f1 * f2, g) == d_operator(f1, d_operator(f2, g))


def test_log_inv_and_geom():
    N = 3
    p1 = SymFunc.p(1, N)
    assert log_inv(p1) == SymFunc(
        N, {(1,): 1, (1, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 3)}
    )
    N = 5
    p2 = SymFunc.p(2, N)
    assert geom(p2) == SymFunc(N, {(): 1, (2,): 1, (2, 2): 1})
    assert log_inv(SymFunc.zero(N)) == SymFunc.zero(N)
    assert geom(SymFunc.zero(N)) == SymFunc.one(N)
    with pytest.raises(ValueError):
        log_inv(SymFunc.one(N))
    with pytest.raises(ValueError):
        geom(SymFunc.one(N))


def test_log_geom_inverse_relation():
    # exp/log consistency: geom(f) * (1 - f) = 1 exactly up to truncation
    rng = random.Random(23)
    for _ in range(15):
        N = rng.randint(3, 6)
        f = random_symfunc(rng, N)
        assert geom(f) * (SymFunc.one(N) - f) == SymFunc.one(N)


def test_degree_bookkeeping():
    rng = random.Random(29)
    for _ in range(20):
        N = rng.randint(3, 6)
        f = random_symfunc(rng, N)
        g = random_symfunc(rng, N)
        fg = f * g
        for lam, _ in fg.terms():
            assert sum(lam) <= N
        for k in range(1, 4):
            for lam, _ in adams(k, f).terms():
                assert sum(lam) % k == 0


def test_truncated():
    N = 6
    f = h_gen(4, N) + SymFunc.p(2, N)
    g = f.truncated(3)
    assert g.truncation == 3
    assert g == SymFunc.p(2, 3)
    with pytest.raises(ValueError):
        g.truncated(5)


def test_json_roundtrip_and_order():
    N = 5
    f = h_gen(3, N) - SymFunc.p(2, N) * Fraction(7, 3)
    obj = f.to_json_obj()
    assert SymFunc.from_json_obj(obj) == f
    # canonical order: by degree, then reverse-lex
    partitions = [tuple(t["partition"]) for t in obj["terms"]]
    keys = [(sum(lam), tuple(-p for p in lam)) for lam in partitions]
    assert keys == sorted(keys)
    # numerators and denominators serialize as decimal strings
    assert all(isinstance(t["num"], str) and isinstance(t["den"], str) for t in obj["terms"])


def test_str_rendering():
    N = 4
    assert str(SymFunc.zero(N)) == "0"
    assert str(SymFunc.p(2, N)) == "p2"
    assert str(h_gen(2, N)) == "1/2*p2 + 1/2*p1^2"


def test_h_lambda_multiplicativity():
    N = 6
    assert h_lambda((2, 2), N) == h_gen(2, N) * h_gen(2, N)
    assert h_lambda((3, 2), N) == h_gen(3, N) * h_gen(2, N)
    assert h_lambda((), N) == SymFunc.one(N)
