import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linpn.errors import DimensionError, StructureError
from linpn.exactmath import Mat, basis_vector
from linpn.io import algebra_from_json, constants_to_json, lie_from_json, ParseError
from linpn.lsa import (
    AlgebraSpec,
    LieAlgebraSpec,
    ad,
    associator,
    b_form,
    derived_lie,
    jacobi_defect,
    left_mult,
    left_symmetry_defect,
    multiply,
    right_mult,
    tau,
)

from helpers import matrix_algebra, rand_point, random_algebra, random_symplectic, sl2


def E(n, i):
    return basis_vector(n, i)


def test_zero_algebra_products():
    A = AlgebraSpec.zero(3)
    assert multiply(A, (1, 2, 3), (4, 5, 6)) == (0, 0, 0)
    assert left_symmetry_defect(A) == 0
    assert derived_lie(A) == LieAlgebraSpec.abelian(3)
    assert tau(A) == (0, 0, 0)
    assert b_form(A) == Mat.zeros(3)
    assert right_mult(A, (1, 1, 1)) == Mat.zeros(3)


def test_multiply_bilinear_in_zero(example_lsa):
    assert multiply(example_lsa, (0,) * 6, (1, 2, 3, 4, 5, 6)) == (0,) * 6


def test_multiply_length_mismatch():
    with pytest.raises(DimensionError):
        multiply(AlgebraSpec.zero(2), (1,), (1, 2))


def test_basis_products_read_back_structure_constants(example_lsa):
    n = example_lsa.dim
    for i, j in product(range(n), repeat=2):
        assert multiply(example_lsa, E(n, i), E(n, j)) == example_lsa.R[i][j]


def test_matrix_algebra_is_associative():
    A = matrix_algebra(2)
    for i, j, k in product(range(4), repeat=3):
        assert associator(A, E(4, i), E(4, j), E(4, k)) == (0,) * 4
    assert left_symmetry_defect(A) == 0


def test_example_lsa_left_symmetric_exhaustive(example_lsa):
    n = example_lsa.dim
    for i, j, k in product(range(n), repeat=3):
        a = associator(example_lsa, E(n, i), E(n, j), E(n, k))
        b = associator(example_lsa, E(n, j), E(n, i), E(n, k))
        assert a == b
    assert left_symmetry_defect(example_lsa) == 0


def test_derived_lie_recovers_bracket(example_sla):
    assert derived_lie(example_sla.lsa) == example_sla.lie


def test_commutative_algebra_has_abelian_bracket():
    rng = random.Random(0)
    R = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k in product(range(3), repeat=3):
        if i <= j:
            R[i][j][k] = R[j][i][k] = Fraction(rng.randint(-3, 3))
    assert derived_lie(AlgebraSpec(3, R)) == LieAlgebraSpec.abelian(3)


def test_lie_spec_rejects_non_antisymmetric():
    with pytest.raises(StructureError):
        LieAlgebraSpec.from_entries(2, [(0, 1, 1, 1)])


def test_duplicate_entries_rejected():
    with pytest.raises(StructureError):
        AlgebraSpec.from_entries(2, [(0, 0, 0, 1), (0, 0, 0, 2)])


def test_jacobi_examples(example_sla):
    assert jacobi_defect(LieAlgebraSpec.abelian(4)) == 0
    assert jacobi_defect(example_sla.lie) == 0
    assert jacobi_defect(sl2()) == 0


def test_jacobi_detects_perturbed_sl2():
    c = [[list(r) for r in m] for m in sl2().c]
    # [X+, X-] = H + X+ breaks Jacobi: [H, [X+, X-]] + cyclic = 2 X+
    c[1][2][1] += 1
    c[2][1][1] -= 1
    assert jacobi_defect(LieAlgebraSpec(3, c)) == 2


def test_right_mult_zero_and_linear(example_lsa):
    rng = random.Random(1)
    n = example_lsa.dim
    assert right_mult(example_lsa, (0,) * n) == Mat.zeros(n)
    for _ in range(20):
        x, y = rand_point(rng, n), rand_point(rng, n)
        xy = tuple(a + b for a, b in zip(x, y))
        assert right_mult(example_lsa, xy) == right_mult(example_lsa, x) + right_mult(example_lsa, y)
        assert right_mult(example_lsa, x) @ y == multiply(example_lsa, y, x)
        assert left_mult(example_lsa, x) @ y == multiply(example_lsa, x, y)


def _right_mult_identity_sides(A, x, y):
    Rx, Ry, Ly = right_mult(A, x), right_mult(A, y), left_mult(A, y)
    lhs = Rx @ Ry - right_mult(A, multiply(A, y, x))
    rhs = Rx @ Ly - Ly @ Rx
    return lhs, rhs


def test_right_mult_identity_on_random_pairs(example_lsa):
    rng = random.Random(2)
    for _ in range(30):
        x, y = rand_point(rng, 6), rand_point(rng, 6)
        lhs, rhs = _right_mult_identity_sides(example_lsa, x, y)
        assert lhs == rhs


def test_right_mult_identity_fails_for_perturbation(example_lsa):
    R = [[list(r) for r in m] for m in example_lsa.R]
    R[0][2][1] += 1
    B = AlgebraSpec(6, R)
    assert left_symmetry_defect(B) > 0
    assert any(
        _right_mult_identity_sides(B, E(6, i), E(6, j))[0] != _right_mult_identity_sides(B, E(6, i), E(6, j))[1]
        for i, j in product(range(6), repeat=2)
    )


def test_tau_is_minus_twice_trace_ad(example_sla):
    t = tau(example_sla.lsa)
    for i in range(6):
        assert t[i] == -2 * ad(example_sla.lie, E(6, i)).trace()


def test_tau_vanishes_on_unimodular(heis_sla):
    assert tau(heis_sla.lsa) == (0,) * heis_sla.dim


def test_b_form_symmetric_and_tau_form(example_lsa):
    b = b_form(example_lsa)
    t = tau(example_lsa)
    n = example_lsa.dim
    for i, j in product(range(n), repeat=2):
        assert b[i, j] == b[j, i]
        ji = multiply(example_lsa, E(n, j), E(n, i))
        assert b[i, j] == sum(a * v for a, v in zip(t, ji))
        assert b[i, j] == right_mult(example_lsa, ji).trace()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_random_algebra_left_symmetry_implies_jacobi(seed):
    rng = random.Random(seed)
    A = random_symplectic(rng).lsa if seed % 2 else random_algebra(rng, 3, 0.3)
    if left_symmetry_defect(A) == 0:
        assert jacobi_defect(derived_lie(A)) == 0


def test_io_round_trip(example_lsa, example_sla):
    doc = constants_to_json(example_lsa)
    assert algebra_from_json(doc) == example_lsa
    assert lie_from_json(constants_to_json(example_sla.lie)) == example_sla.lie
    assert all(isinstance(e[3], str) for e in doc["constants"])


def test_io_duplicate_key_is_error():
    with pytest.raises(ParseError):
        algebra_from_json({"dim": 2, "constants": [[0, 1, 1, "1"], [0, 1, 1, "2"]]})
