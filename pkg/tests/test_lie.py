"""Algebra bases, weights, sl2 triples, and the symplecticity criterion."""

import itertools

import numpy as np
import pytest

from orbitent import (
    BOSONIC,
    DISTINGUISHABLE,
    FERMIONIC,
    DimensionMismatch,
    EnumerationTooLarge,
    NotAWeightVector,
    WeightVector,
    build_state,
    cartan_basis,
    degeneracy_rank,
    highest_weight_vector,
    kostant_sternberg_check,
    rep_action,
    sl2_triples,
    su_basis,
    weight_table,
)


@pytest.mark.parametrize("dims,count", [((2,), 3), ((2, 2), 6), ((3,), 8)])
def test_su_basis_counts(dims, count):
    assert len(su_basis(dims)) == count


def test_su_basis_elements_antihermitian_traceless():
    basis = su_basis((2, 3, 4))
    assert len(basis) == 3 + 8 + 15
    for el in basis.elements:
        m = el.matrix
        assert np.allclose(m, -m.conj().T)
        assert abs(np.trace(m)) < 1e-14


def test_su_basis_cartan_elements_commute():
    basis = su_basis((4,))
    cartan = [el.matrix for el in basis.elements[:3]]
    for a, b in itertools.combinations(cartan, 2):
        assert np.allclose(a @ b - b @ a, 0)


def test_su_basis_rejects_dim_one():
    with pytest.raises(DimensionMismatch):
        su_basis((1, 2))


def test_sl2_triples_bracket_identities_exact():
    for triple in sl2_triples((3, 4)):
        e, f, h = triple.raising, triple.lowering, triple.coroot
        assert np.array_equal(h @ e - e @ h, 2 * e)
        assert np.array_equal(h @ f - f @ h, -2 * f)
        assert np.array_equal(e @ f - f @ e, h)


def test_rep_action_leibniz_on_product_state():
    rng = np.random.default_rng(2)
    z1 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    z2 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    v1 = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    v2 = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    state = np.tensordot(v1, v2, axes=0)
    state = build_state(state)
    out = rep_action((z1, z2), state)
    expected = (np.tensordot(z1 @ v1, v2, axes=0)
                + np.tensordot(v1, z2 @ v2, axes=0)) / state_norm(v1, v2)
    assert np.allclose(out, expected)


def state_norm(v1, v2):
    return np.linalg.norm(np.tensordot(v1, v2, axes=0))


def test_rep_action_diagonal_cartan_on_symmetric_pair():
    h = np.diag([1.0, -1.0])
    e11 = np.zeros((2, 2)); e11[0, 0] = 1
    state = build_state(e11, BOSONIC)
    out = rep_action(h, state)
    assert np.allclose(out, 2 * state.coeffs)


def test_rep_action_on_zero_tensor_is_zero():
    z = np.zeros((2, 2))
    out = rep_action((np.eye(2), np.eye(2)), z)
    assert not out.any()


def test_weight_table_two_qubits():
    table = weight_table((2, 2))
    weights = sorted(w.weight for w in table)
    assert weights == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_weight_table_sym2_c3():
    table = {w.label: w.weight for w in weight_table((3, 3), BOSONIC)}
    assert len(table) == 6
    # doubled indices carry weight 2 L_i, pairs L_i + L_j, over (H1, H2)
    assert table["e1.e1"] == (2, 0)
    assert table["e2.e2"] == (-2, 2)
    assert table["e3.e3"] == (0, -2)
    assert table["e1.e2"] == (0, 1)
    assert table["e1.e3"] == (1, -1)
    assert table["e2.e3"] == (-1, 0)


def test_weight_table_wedge2_c3():
    table = weight_table((3, 3), FERMIONIC)
    assert len(table) == 3
    labels = {w.label for w in table}
    assert labels == {"e1^e2", "e1^e3", "e2^e3"}


def test_weight_vectors_are_exact_cartan_eigenvectors():
    for dims, sym in [((2, 3), DISTINGUISHABLE), ((3, 3), BOSONIC),
                      ((4, 4), FERMIONIC)]:
        cartans = cartan_basis(dims if sym == DISTINGUISHABLE else (dims[0],))
        for w in weight_table(dims, sym):
            for lam, gen in zip(w.weight, cartans):
                if sym == DISTINGUISHABLE:
                    mats = [None] * len(dims)
                    mats[gen.party] = gen.matrix
                    image = rep_action(tuple(mats), w.int_coeffs)
                else:
                    image = rep_action(
                        gen.matrix.astype(np.int64), w.int_coeffs)
                assert np.array_equal(image, lam * w.int_coeffs)


def test_weight_table_enumeration_guard():
    with pytest.raises(EnumerationTooLarge):
        weight_table((2,) * 21)


def test_highest_weight_vectors():
    assert highest_weight_vector((2, 2)).label == "e1*e1"
    assert highest_weight_vector((3, 3), BOSONIC).label == "e1.e1"
    assert highest_weight_vector((4, 4), FERMIONIC).label == "e1^e2"
    hw3 = highest_weight_vector((4, 4, 4), FERMIONIC)
    assert hw3.label == "e1^e2^e3"


def test_ks_two_qubit_weight_vectors_symplectic():
    for w in weight_table((2, 2)):
        assert kostant_sternberg_check(w).symplectic


def test_ks_sym2_pair_not_symplectic_with_witness():
    table = {w.label: w for w in weight_table((3, 3), BOSONIC)}
    verdict = kostant_sternberg_check(table["e1.e2"])
    assert not verdict.symplectic
    assert (verdict.witness.i, verdict.witness.j) == (0, 1)


def test_ks_wedge2_c4_all_symplectic():
    for w in weight_table((4, 4), FERMIONIC):
        assert kostant_sternberg_check(w).symplectic


def test_ks_rejects_non_weight_vector():
    w = weight_table((2, 2))[0]
    fake = WeightVector(
        label="e1*e1+e2*e2",
        weight=w.weight,
        state=build_state(np.eye(2)),
        int_coeffs=np.eye(2, dtype=np.int64),
    )
    with pytest.raises(NotAWeightVector):
        kostant_sternberg_check(fake)


def test_ks_highest_weight_symplectic_all_classes_dims_to_4():
    for n in (2, 3, 4):
        for m in (2, 3):
            assert kostant_sternberg_check(
                highest_weight_vector((n,) * m)).symplectic
            assert kostant_sternberg_check(
                highest_weight_vector((n,) * m, BOSONIC)).symplectic
            if m <= n:
                assert kostant_sternberg_check(
                    highest_weight_vector((n,) * m, FERMIONIC)).symplectic


KS_ORACLE_SPACES = [
    ((2, 2), DISTINGUISHABLE),   # dim 4
    ((2, 3), DISTINGUISHABLE),   # dim 6
    ((3, 3), DISTINGUISHABLE),   # dim 9
    ((2, 4), DISTINGUISHABLE),   # dim 8
    ((2, 2, 2), DISTINGUISHABLE),  # dim 8
    ((2, 2, 3), DISTINGUISHABLE),  # dim 12
    ((2, 2, 2, 2), DISTINGUISHABLE),  # dim 16
    ((3, 3), BOSONIC),           # Sym^2 C^3, dim 6
    ((4, 4), BOSONIC),           # Sym^2 C^4, dim 10
    ((5, 5), BOSONIC),           # Sym^2 C^5, dim 15
    ((2, 2, 2), BOSONIC),        # Sym^3 C^2, dim 4
    ((3, 3, 3), BOSONIC),        # Sym^3 C^3, dim 10
    ((4, 4), FERMIONIC),         # Wedge^2 C^4, dim 6
    ((5, 5), FERMIONIC),         # Wedge^2 C^5, dim 10
    ((6, 6), FERMIONIC),         # Wedge^2 C^6, dim 15
    ((4, 4, 4), FERMIONIC),      # Wedge^3 C^4, dim 4
    ((5, 5, 5), FERMIONIC),      # Wedge^3 C^5, dim 10
]


@pytest.mark.parametrize("dims,sym", KS_ORACLE_SPACES)
def test_ks_agrees_with_oracle_degeneracy(dims, sym):
    """Symplectic verdict at a weight vector is exactly the oracle's D = 0."""
    for w in weight_table(dims, sym):
        verdict = kostant_sternberg_check(w)
        rank = degeneracy_rank(w.state)
        assert verdict.symplectic == (rank.degeneracy == 0), (
            f"{dims} {sym} {w.label}: KS {verdict.verdict} vs D = "
            f"{rank.degeneracy}")
