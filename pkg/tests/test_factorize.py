from math import comb

import pytest

from oracles import trinion_rank
from vfblocks.curve import DualGraph, builtin_graphs, graphs_of_genus
from vfblocks.factorize import decomposition_table, rank_nodal, rank_smooth
from vfblocks.weights import LevelError, Weight, weights_at_level


def test_smooth_examples():
    assert rank_smooth(2, 3, 0) == 1
    for l in range(6):
        assert rank_smooth(2, l, 1) == l + 1
    assert rank_smooth(2, 1, 2) == 4


def test_level_violation():
    with pytest.raises(LevelError):
        rank_smooth(2, 1, 0, [Weight((2, 0))])


@pytest.mark.parametrize(
    "r,l,h,n", [(2, 1, 0, 4), (2, 3, 1, 2), (2, 2, 2, 1), (3, 1, 1, 2), (3, 2, 1, 1), (3, 2, 2, 0)]
)
def test_handle_operator_matches_trinions(r, l, h, n):
    import itertools

    for mus in itertools.combinations_with_replacement(weights_at_level(r, l), n):
        assert rank_smooth(r, l, h, mus) == trinion_rank(r, l, h, list(mus)), mus


def test_nodal_examples():
    G = builtin_graphs()
    assert rank_nodal(G["genus2-loop"], 2, 1) == 4
    assert rank_nodal(G["genus2-separating"], 2, 2) == 10
    assert rank_nodal(G["genus2-theta"], 2, 1) == 4


@pytest.mark.parametrize("m", range(1, 7))
def test_genus2_closed_form(m):
    for g in graphs_of_genus(2):
        assert rank_nodal(g, 2, m) == comb(m + 3, 3)


def test_decomposition_rows():
    rows = decomposition_table(builtin_graphs()["genus2-loop"], 2, 1)
    assert [(str(r.labeling.labels[0]), r.contribution) for r in rows] == [("0,0", 2), ("1,0", 2)]
    rows = decomposition_table(builtin_graphs()["genus2-theta"], 3, 0)
    assert [r.contribution for r in rows] == [1]


def test_leg_outside_root_lattice_kills_every_row():
    g = DualGraph((("A", 1), ("B", 1)), (("A", "B"),), (("A", Weight((1, 0))),))
    rows = decomposition_table(g, 2, 2)
    assert rows and all(r.contribution == 0 for r in rows)


def test_legs_with_genus_one_components():
    # Two legs omega_1 split across a separating node against a smooth genus-2 curve.
    w = Weight((1, 0))
    split = DualGraph((("A", 1), ("B", 1)), (("A", "B"),), (("A", w), ("B", w)))
    assert rank_nodal(split, 2, 2) == rank_smooth(2, 2, 2, [w, w])


def test_parallel_path_matches(monkeypatch):
    import vfblocks.factorize as fz

    g = builtin_graphs()["genus3-k4"]
    serial = fz.rank_nodal(g, 2, 2)
    monkeypatch.setattr(fz, "PARALLEL_THRESHOLD", 1)
    monkeypatch.setenv("VF_THREADS", "2")
    assert fz.rank_nodal(g, 2, 2) == serial
