"""Dual (n, a, b) decomposition in dimension 3 and its inverse."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegalie import (AlgebraSpec, Matrix, NabTriple, decompose, dual_c,
                      forced_b, forced_omega, generate, reconstruct, residual,
                      t_vector)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def rand_triple(rng):
    sym = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
           for _ in range(3)]
    n = Matrix(tuple(tuple(sym[i][j] + sym[j][i] for j in range(3)) for i in range(3)))
    a = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3))
    b = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3))
    return NabTriple(n, a, b)


def rand_spec(rng):
    return reconstruct(rand_triple(rng))


# --- the frozen table columns: (label, n diagonal, a, b), parametric rows
#     written with their pattern scaled by the parameter in the test body
FIRST_ROWS = [
    ("I", (0, 0, 0)), ("II", (1, 0, 0)), ("VI0", (1, -1, 0)),
    ("VII0", (1, 1, 0)), ("VIII", (1, 1, -1)), ("IX", (1, 1, 1)),
]
SECOND_ROWS = [
    ("V", (0, 0, 0), (0, 0, 1), (0, 0, 0), False),
    ("IV", (1, 0, 0), (0, 0, 1), (0, 0, 0), False),
    ("IV_x", (1, 0, 0), (1, 0, 0), (-2, 0, 0), False),
    ("VI_a", (1, -1, 0), (0, 0, 1), (0, 0, 0), True),
    ("VI_x", (1, -1, 0), (1, 0, 0), (-2, 0, 0), False),
    ("VI_y", (1, -1, 0), (0, 1, 0), (0, 2, 0), False),
    ("VI_n", (1, -1, 0), (1, 1, 0), (-2, 2, 0), False),
    ("VII_a", (1, 1, 0), (0, 0, 1), (0, 0, 0), True),
    ("VII_x", (1, 1, 0), (1, 0, 0), (-2, 0, 0), False),
    ("VIII_a", (1, 1, -1), (0, 0, 1), (0, 0, 2), True),
    ("VIII_xa", (1, 1, -1), (1, 0, 0), (-2, 0, 0), True),
    ("VIII_na", (1, 1, -1), (1, 0, 1), (-2, 0, 2), True),
    ("IX_a", (1, 1, 1), (0, 0, 1), (0, 0, -2), True),
]


def test_first_table_decompositions():
    for label, nd in FIRST_ROWS:
        trip = decompose(generate(label))
        assert trip.n == Matrix.diagonal(nd), label
        assert trip.a == (0, 0, 0) and trip.b == (0, 0, 0), label


def test_second_table_decompositions_and_forced_b():
    for label, nd, apat, bpat, parametric in SECOND_ROWS:
        for p in ((Fraction(1, 2), Fraction(1), Fraction(2)) if parametric else (1,)):
            trip = decompose(generate(label, p if parametric else None))
            assert trip.n == Matrix.diagonal(nd), label
            assert trip.a == tuple(x * p for x in apat), label
            assert trip.b == tuple(x * p for x in bpat), label
            assert trip.b == forced_b(trip.n, trip.a), label
            assert trip.satisfies_forced_b


def test_canonical_commutation_relations():
    # [e1,e2] = n3 e3 - a2 e1 + a1 e2  (and cyclic), omega(e1,e2) = -2 n3 a3
    for label, nd, apat, bpat, parametric in SECOND_ROWS:
        p = Fraction(3, 2) if parametric else None
        s = generate(label, p)
        n = nd
        a = tuple(x * (p if parametric else 1) for x in apat)
        assert (s.c_at(1, 1, 2), s.c_at(2, 1, 2), s.c_at(3, 1, 2)) == (-a[1], a[0], n[2])
        assert (s.c_at(1, 3, 1), s.c_at(2, 3, 1), s.c_at(3, 3, 1)) == (a[2], n[1], -a[0])
        assert (s.c_at(1, 2, 3), s.c_at(2, 2, 3), s.c_at(3, 2, 3)) == (n[0], -a[2], a[1])
        assert s.omega_at(1, 2) == -2 * n[2] * a[2]
        assert s.omega_at(3, 1) == -2 * n[1] * a[1]
        assert s.omega_at(2, 3) == -2 * n[0] * a[0]


def test_dual_c_of_type_ii():
    s = generate("II")  # [e2,e3] = e1 gives dual matrix e11 = 1
    assert dual_c(s.c) == Matrix.diagonal((1, 0, 0))


def test_decompose_type_v():
    s = AlgebraSpec.from_entries(3, [(1, 3, 1, "-1"), (2, 3, 2, "-1")], [])
    trip = decompose(s)
    assert trip.n == Matrix.diagonal((0, 0, 0))
    assert trip.a == (0, 0, 1)
    assert trip.b == (0, 0, 0)


def test_reconstruct_vi_x_omega():
    trip = NabTriple(Matrix.diagonal((1, -1, 0)), (1, 0, 0), (-2, 0, 0))
    s = reconstruct(trip)
    assert s.omega_at(2, 3) == -2
    assert s.omega_at(1, 2) == 0 and s.omega_at(3, 1) == 0


def test_round_trips_on_random_data():
    rng = random.Random(21)
    for _ in range(120):
        trip = rand_triple(rng)
        assert decompose(reconstruct(trip)) == trip
        spec = rand_spec(rng)
        assert reconstruct(decompose(spec)) == spec


@given(st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=6, max_size=6))
@settings(deadline=None, max_examples=60)
def test_round_trip_property(a, b, sym6):
    n = Matrix(((sym6[0], sym6[1], sym6[2]),
                (sym6[1], sym6[3], sym6[4]),
                (sym6[2], sym6[4], sym6[5])))
    trip = NabTriple(n, tuple(a), tuple(b))
    assert decompose(reconstruct(trip)) == trip


def test_decompose_arbitrary_spec_round_trips():
    # decompose is defined for any skew (c, omega), valid algebra or not
    rng = random.Random(22)
    for _ in range(40):
        c_entries = [(i, j, k, Fraction(rng.randint(-5, 5), rng.randint(1, 2)))
                     for i, j in ((1, 2), (1, 3), (2, 3)) for k in (1, 2, 3)]
        om = [(i, j, Fraction(rng.randint(-5, 5))) for i, j in ((1, 2), (1, 3), (2, 3))]
        s = AlgebraSpec.from_entries(3, c_entries, om)
        assert reconstruct(decompose(s)) == s


def test_t_vector_zero_iff_forced_b():
    rng = random.Random(23)
    for _ in range(80):
        trip = rand_triple(rng)
        is_forced = trip.b == forced_b(trip.n, trip.a)
        assert (t_vector(trip) == (0, 0, 0)) == is_forced
        assert residual(reconstruct(trip)).is_zero == is_forced
    forced = NabTriple(trip.n, trip.a, forced_b(trip.n, trip.a))
    assert t_vector(forced) == (0, 0, 0)


def test_forced_omega_matches_forced_b_route():
    rng = random.Random(24)
    for _ in range(40):
        spec = rand_spec(rng)
        om = forced_omega(spec.c)
        trip = decompose(spec)
        rebuilt = reconstruct(NabTriple(trip.n, trip.a, forced_b(trip.n, trip.a)))
        assert om == rebuilt.omega
        assert residual(AlgebraSpec(3, spec.c, om)).is_zero


def test_decompose_requires_dim3():
    with pytest.raises(ValueError):
        decompose(AlgebraSpec.zero(2))
    with pytest.raises(ValueError):
        decompose(AlgebraSpec.zero(4))


def test_nab_triple_validation():
    with pytest.raises(ValueError):
        NabTriple(Matrix(((0, 1, 0), (0, 0, 0), (0, 0, 0))), (0, 0, 0), (0, 0, 0))
    with pytest.raises(ValueError):
        NabTriple(Matrix.identity(2), (0, 0), (0, 0))
