import random
from itertools import product

import pytest

from linpn.errors import DegenerateError, PreconditionError, StructureError
from linpn.exactmath import Mat, basis_vector, mat_det
from linpn.gln import build_gln, nu, example_basis, example_config
from linpn.hamiltonians import hamiltonian
from linpn.lsa import (
    AlgebraSpec,
    LieAlgebraSpec,
    bracket,
    derived_lie,
    jacobi_defect,
    left_symmetry_defect,
    right_mult,
    tau,
)
from linpn.symplectic import (
    Cocycle2,
    SymplecticLieAlgebra,
    coboundary,
    cocycle_defect,
    defining_relation_defect,
    is_unimodular,
    lsa_from_symplectic,
)

from helpers import heisenberg_plus_line, rand_q, random_symplectic, sl2

STD2 = Mat.from_rows([[0, 1], [-1, 0]])


def test_cocycle_on_abelian_is_trivial():
    rng = random.Random(0)
    W = Mat.from_func(4, 4, lambda i, j: 0)
    for _ in range(5):
        vals = {(i, j): rand_q(rng) for i in range(4) for j in range(i + 1, 4)}
        W = Mat.from_func(4, 4, lambda i, j: vals.get((i, j), -vals.get((j, i), 0)))
        assert cocycle_defect(LieAlgebraSpec.abelian(4), W) == 0


def test_coboundary_of_example_nu_is_cocycle(example_sla):
    cfg = example_config(1, 0)
    basis = example_basis()
    nu_vec = [nu(cfg, b) for b in basis]
    W = coboundary(example_sla.lie, nu_vec)
    assert W == example_sla.omega.omega
    assert cocycle_defect(example_sla.lie, W) == 0


def test_cocycle_defect_rejects_non_antisymmetric():
    with pytest.raises(StructureError):
        cocycle_defect(LieAlgebraSpec.abelian(2), Mat.from_rows([[1, 0], [0, 0]]))


def test_no_nondegenerate_cocycle_on_sl2():
    # odd dimension forces degeneracy
    rng = random.Random(0xC0FFEE)
    L = sl2()
    for _ in range(200):
        vals = {(i, j): rand_q(rng) for i in range(3) for j in range(i + 1, 3)}
        W = Mat.from_func(3, 3, lambda i, j: vals.get((i, j), -vals.get((j, i), 0)))
        assert mat_det(W) == 0 or cocycle_defect(L, W) > 0
        with pytest.raises(DegenerateError):
            Cocycle2(W)


def test_every_form_on_sl2_is_a_degenerate_cocycle():
    # one basis triple in dimension 3, and sl2 is unimodular: the identity holds trivially
    rng = random.Random(5)
    L = sl2()
    for _ in range(50):
        vals = {(i, j): rand_q(rng) for i in range(3) for j in range(i + 1, 3)}
        W = Mat.from_func(3, 3, lambda i, j: vals.get((i, j), -vals.get((j, i), 0)))
        assert cocycle_defect(L, W) == 0
        assert mat_det(W) == 0


def test_random_nondegenerate_forms_on_gl2_are_not_cocycles():
    lie, _ = build_gln(example_config(1, 0))
    gl2 = LieAlgebraSpec(
        4, [[[lie.c[i + 2][j + 2][k + 2] for k in range(4)] for j in range(4)] for i in range(4)]
    )
    assert jacobi_defect(gl2) == 0
    rng = random.Random(0xC0FFEE)
    tried = 0
    for _ in range(200):
        vals = {(i, j): rand_q(rng) for i in range(4) for j in range(i + 1, 4)}
        W = Mat.from_func(4, 4, lambda i, j: vals.get((i, j), -vals.get((j, i), 0)))
        if mat_det(W) != 0:
            tried += 1
            assert cocycle_defect(gl2, W) > 0
    assert tried > 100


def test_degenerate_form_rejected():
    with pytest.raises(DegenerateError):
        Cocycle2(Mat.zeros(2))
    with pytest.raises(StructureError):
        Cocycle2(Mat.identity(2))


def test_flat_and_sharp_convention():
    w = Cocycle2(STD2)
    x, y = (2, 3), (5, 7)
    flat_x = w.flat @ x
    assert sum(a * b for a, b in zip(flat_x, y)) == w(x, y)
    assert w.sharp @ w.flat == Mat.identity(2)


def test_lsa_from_abelian_is_zero_algebra():
    A = lsa_from_symplectic(LieAlgebraSpec.abelian(2), STD2)
    assert A == AlgebraSpec.zero(2)


def test_lsa_defining_relation(example_sla):
    assert defining_relation_defect(example_sla.lie, example_sla.omega, example_sla.lsa) == 0
    L, W, A = example_sla.lie, example_sla.omega, example_sla.lsa
    n = L.dim
    e = [basis_vector(n, i) for i in range(n)]
    from linpn.lsa import multiply

    for i, j, k in product(range(n), repeat=3):
        assert W(multiply(A, e[i], e[j]), e[k]) == -W(e[j], bracket(L, e[i], e[k]))


def test_lsa_round_trip_example(example_sla):
    A = lsa_from_symplectic(example_sla.lie, example_sla.omega)
    assert left_symmetry_defect(A) == 0
    assert derived_lie(A) == example_sla.lie


def test_example_h1_after_coordinate_change(example_sla):
    from linpn.gln import to_example_coordinates
    from linpn.exactmath import MPoly

    h1 = to_example_coordinates(hamiltonian(example_sla.lsa, 1), 1)
    assert h1 == -4 * MPoly.var(6, 2) + 4 * MPoly.var(6, 3)


def test_lsa_from_symplectic_refuses_bad_input():
    L = LieAlgebraSpec.from_entries(2, [(0, 1, 1, 1), (1, 0, 1, -1)])
    with pytest.raises(DegenerateError):
        lsa_from_symplectic(L, Mat.zeros(2))
    # broken Jacobi
    with pytest.raises(PreconditionError):
        c = [[list(r) for r in m] for m in sl2().c]
        c[1][2][1] += 1
        c[2][1][1] -= 1
        bad4 = LieAlgebraSpec(
            4, [[[c[i][j][k] if max(i, j, k) < 3 else 0 for k in range(4)] for j in range(4)] for i in range(4)]
        )
        lsa_from_symplectic(bad4, Mat.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]))
    # h3 + R with omega(e3, e4) != 0 violates the cocycle identity
    lie, _ = heisenberg_plus_line()
    W = Mat.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    assert cocycle_defect(lie, W) > 0
    with pytest.raises(PreconditionError):
        lsa_from_symplectic(lie, W)


def test_unimodular_examples(example_sla, heis_sla):
    assert is_unimodular(LieAlgebraSpec.abelian(3))
    assert is_unimodular(heis_sla.lie)
    assert not is_unimodular(example_sla.lie)


def test_symplectic_construction_invariants_random():
    rng = random.Random(11)
    for _ in range(10):
        S = random_symplectic(rng)
        assert jacobi_defect(S.lie) == 0
        assert cocycle_defect(S.lie, S.omega) == 0
        assert left_symmetry_defect(S.lsa) == 0
        assert derived_lie(S.lsa) == S.lie
        assert defining_relation_defect(S.lie, S.omega, S.lsa) == 0


def test_omega_symmetry_of_right_mult(example_sla):
    n = example_sla.dim
    w = example_sla.omega
    e = [basis_vector(n, i) for i in range(n)]
    for p, y, z in product(range(n), repeat=3):
        Rp = right_mult(example_sla.lsa, e[p])
        assert w(Rp @ e[y], e[z]) == w(e[y], Rp @ e[z])


def test_unimodular_implies_zero_tau_and_h1(heis_sla):
    assert is_unimodular(heis_sla.lie)
    assert tau(heis_sla.lsa) == (0, 0, 0, 0)
    assert hamiltonian(heis_sla.lsa, 1).is_zero()
