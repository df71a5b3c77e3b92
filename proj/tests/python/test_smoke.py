"""Smoke tests for the _textiles extension module."""

import os
import pathlib

import pytest

import _textiles as tx

FIXTURES = pathlib.Path(os.environ.get("TEXTILES_FIXTURES", "fixtures"))


@pytest.fixture(scope="module")
def chain_doc():
    text = (FIXTURES / "two_vertex_chain.spec").read_text()
    return tx.parse_document(text)


def test_parse_and_validate(chain_doc):
    assert chain_doc.textile_names == ["T"]
    t = chain_doc.textile("T")
    report = tx.lifting_report(t)
    assert report["is_LR"]
    assert tx.is_essential_textile(t)


def test_conversions_round_trip(chain_doc):
    t = chain_doc.textile("T")
    lam = tx.textile_to_twograph(t)
    assert len(lam.squares()) == 4
    back = tx.twograph_to_textile(lam)
    assert sorted(e[0] for e in back.F.edges) == ["lam1", "lam2", "lam3", "lam4"]


def test_insplit_twograph(chain_doc):
    lam = chain_doc.twograph("L")
    classes = chain_doc.twograph_partition("G")
    assert tx.check_pairing(lam, classes)["ok"]
    insplit = tx.insplit_twograph(lam, classes)
    assert len(insplit.skeleton.vertices) == 3
    assert len(insplit.squares()) == 5


def test_pipeline(chain_doc):
    t = chain_doc.textile("T")
    result = tx.four_move_pipeline(t, chain_doc.twograph_partition("G"), max_block=3)
    sizes = (result["A_edges"], result["B_vertices"], result["C_edges"],
             result["D_edges"], result["pruned_edges"])
    assert sizes == (5, 3, 7, 7, 5)
    assert result["blocks_equal"]


def test_blocks_and_inversion(chain_doc):
    t = chain_doc.textile("T")
    blocks = tx.enumerate_blocks(t, 2, 2)
    assert len(blocks) == 6
    hat = tx.invert_textile(t)
    transposed = {
        tuple(tuple(row[r] for row in b) for r in range(2))
        for b in blocks
    }
    hat_blocks = {tuple(tuple(row) for row in b) for b in tx.enumerate_blocks(hat, 2, 2)}
    assert transposed == hat_blocks


def test_jm_insplit_drops_lr(chain_doc):
    t = chain_doc.textile("T")
    classes = chain_doc.graph_partition("FP")
    ti = tx.insplit_textile(t, classes)
    assert not tx.lifting_report(ti)["is_LR"]
    check = tx.verify_insplit_conjugacy(t, classes, max_width=3, max_height=3)
    assert check["ok"], check["detail"]


def test_three_constructions_agree(chain_doc):
    t = chain_doc.textile("T")
    for start, name in (("G", "G"), ("F", "FP"), ("E", "EP")):
        classes = (chain_doc.twograph_partition(name) if start == "G"
                   else chain_doc.graph_partition(name))
        rep = tx.roundtrip_equivalences(t, start, classes)
        assert rep["ok"], rep["mismatches"]


def test_random_generator_is_deterministic():
    a = tx.random_lr_textile(17)
    b = tx.random_lr_textile(17)
    assert a.F.edges == b.F.edges
    assert tx.lifting_report(a)["is_LR"]


def test_errors_surface_as_python_exceptions(chain_doc):
    non_lr = tx.parse_document((FIXTURES / "non_lr_bouquet.spec").read_text())
    with pytest.raises(tx.Error):
        tx.textile_to_twograph(non_lr.textile("T"))
