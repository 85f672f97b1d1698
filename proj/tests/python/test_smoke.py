from fractions import Fraction

import numpy as np
import pytest

import gradedrep as gr


def test_dimension_and_relations():
    rep = gr.build_representation([2, 1, 0])
    assert rep.dim == 8
    assert len(rep.basis) == gr.weyl_dim([2, 1, 0])
    assert rep.commutator_residual() < 1e-9
    assert rep.transpose_residual() < 1e-12
    e12, e21 = rep.generator(1, 2), rep.generator(2, 1)
    h = rep.generator(1, 1) - rep.generator(2, 2)
    assert np.abs(e12 @ e21 - e21 @ e12 - h).max() < 1e-12


def test_gradings_of_sl3():
    sl3 = gr.sl_algebra(3)
    g1 = gr.grading_from_automorphism("inner:3,1")
    g2 = gr.grading_from_automorphism("outer:3")
    assert g1.part_dims() == {"0": 4, "1": 4}
    assert g2.part_dims() == {"0": 3, "1": 5}
    assert gr.verify_grading(sl3, g2).ok
    parts = g2.parts
    assert gr.classify_two_part(sl3, parts["0"], parts["1"]) == "Z2Grading"


def test_simulation_and_compatibility():
    r = gr.simulation_inner([2, 1, 0], 1)
    assert r.kind == "diagonal"
    assert np.array_equal(r.matrix @ r.matrix, np.eye(8))
    j = gr.j_matrix([2, 1, 0])
    assert j.kind == "signed_permutation"
    rep = gr.build_representation([2, 1, 0])
    g2 = gr.grading_from_automorphism("outer:3")
    assert gr.check_compatibility(rep.sl_matrices(), g2, gr.decompose_rep_space(j)).ok
    assert not gr.is_self_contragredient([1, 0, 0])
    with pytest.raises(ValueError):
        gr.j_matrix([1, 0, 0])
    mats, swap = gr.doubled_rep([1, 0, 0])
    assert gr.check_compatibility(mats, g2, gr.decompose_rep_space(swap)).ok


def test_contractions():
    eps = gr.enumerate_binary_epsilon([2])
    assert len(eps) == 5
    assert [[1, 1], [1, 0]] in eps
    psi = gr.enumerate_binary_psi([[1, 1], [1, 0]])
    assert len(psi) == 6
    assert gr.verify_epsilon([[Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), 0]]).ok
    with pytest.raises(ValueError):
        gr.enumerate_binary_epsilon([5])

    sl3 = gr.sl_algebra(3)
    g1 = gr.grading_from_automorphism("inner:3,1")
    abelian = gr.contract_algebra(sl3, g1, [[0, 0], [0, 0]])
    assert abelian.constants() == []
    semidirect = gr.contract_algebra(sl3, g1, [[1, 1], [1, 0]])
    assert semidirect.check_jacobi(0.0).ok

    rep = gr.build_representation([1, 0, 0])
    vspace = gr.decompose_rep_space(gr.simulation_inner([1, 0, 0], 1))
    mats = gr.contract_rep(rep.sl_matrices(), g1, vspace, [[1, 1], [0, 1]], [[1, 1], [1, 0]])
    assert len(mats) == 8 and mats[0].shape == (3, 3)


def test_json_round_trip():
    sl3 = gr.sl_algebra(3)
    again = gr.LieAlgebra.from_json(sl3.to_json())
    assert again.to_json() == sl3.to_json()
    g1 = gr.grading_from_automorphism("inner:3,1")
    assert gr.Grading.from_json(g1.to_json()).to_json() == g1.to_json()
