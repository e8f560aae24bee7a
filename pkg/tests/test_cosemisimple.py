import numpy as np
import pytest

from coring_lab.algebra import Algebra
from coring_lab.coring import check_coring, trivial_coring
from coring_lab.cosemisimple import decompose, is_cosemisimple, search_conjugacy, verify_conjugacy
from coring_lab.field import Field, TooLargeToEnumerate
from coring_lab.fixtures import build


def test_cosemisimple_verdicts():
    assert is_cosemisimple(build("FIX-SW").corings["C"])
    assert is_cosemisimple(build("FIX-MAT").corings["C"])
    assert not is_cosemisimple(build("FIX-DUALNUM").corings["C"])


def test_matrix_coring_decomposes_into_one_block():
    res = decompose(build("FIX-MAT").corings["C"])
    assert res.ok
    assert len(res.blocks) == 1
    block = res.blocks[0]
    assert block.dim == 4
    assert block.sigma.dim == 2
    assert block.division is True
    assert block.division_algebra.dim == 1
    assert block.can.comatrix.dim == 4
    assert block.can.is_bijective()
    assert check_coring(block.coring).ok


def test_sweedler_coring_block():
    res = decompose(build("FIX-SW").corings["C"])
    assert res.ok and len(res.blocks) == 1
    block = res.blocks[0]
    assert block.sigma.dim == 2
    assert block.division_algebra.dim == 1
    assert block.can.is_bijective()


def test_two_blocks():
    res = decompose(build("FIX-TWOBLOCK").corings["C"])
    assert res.ok
    assert len(res.blocks) == 2
    assert [b.dim for b in res.blocks] == [1, 1]


def test_not_cosemisimple_reports_without_blocks():
    res = decompose(build("FIX-DUALNUM").corings["C"])
    assert not res.verdict and not res.ok
    assert res.blocks == []


def test_decomposition_is_deterministic_across_seeds():
    for name in ("FIX-MAT", "FIX-TWOBLOCK", "FIX-SW"):
        c = build(name).corings["C"]
        F = c.field
        reference = decompose(c, seed=0)
        for seed in range(1, 10):
            res = decompose(c, seed=seed)
            assert len(res.blocks) == len(reference.blocks)
            for a, b in zip(res.blocks, reference.blocks):
                assert F.equal(a.embedding, b.embedding)
                assert a.sigma.dim == b.sigma.dim
                assert a.division_algebra.dim == b.division_algebra.dim


def test_same_seed_gives_identical_simple_comodule():
    c = build("FIX-MAT").corings["C"]
    F = c.field
    a = decompose(c, seed=5).blocks[0]
    b = decompose(c, seed=5).blocks[0]
    assert F.equal(a.sigma_embedding, b.sigma_embedding)


def test_conjugacy_identity_and_search():
    c = build("FIX-MAT").corings["C"]
    F = c.field
    first = decompose(c, seed=0).blocks[0]
    sigma, D = first.sigma.module, first.endo.T
    assert verify_conjugacy(sigma, D, sigma, D, F.eye(sigma.dim))
    other = None
    for seed in range(1, 10):
        cand = decompose(c, seed=seed).blocks[0]
        if not F.same_span(cand.sigma_embedding, first.sigma_embedding):
            other = cand
            break
    assert other is not None
    witness = search_conjugacy(sigma, D, other.sigma.module, other.endo.T)
    assert witness is not None and witness.ok
    assert verify_conjugacy(sigma, D, other.sigma.module, other.endo.T, witness.g)


def test_conjugacy_dimension_mismatch():
    block = decompose(build("FIX-SW").corings["C"]).blocks[0]
    sigma = block.sigma.module
    F = sigma.field
    assert not verify_conjugacy(sigma, block.endo.T, sigma, block.endo.S, F.eye(sigma.dim))


def test_conjugacy_search_needs_finite_field():
    Q = Field.rationals()
    c = trivial_coring(Algebra.ground(Q))
    block = decompose(c).blocks[0]
    with pytest.raises(TooLargeToEnumerate):
        search_conjugacy(block.sigma.module, block.endo.T, block.sigma.module, block.endo.T)


def test_rational_trivial_coring():
    Q = Field.rationals()
    res = decompose(trivial_coring(Algebra.matrix_algebra(Q, 2)))
    assert res.verdict
    assert len(res.blocks) == 1
    assert res.blocks[0].sigma.dim == 2
