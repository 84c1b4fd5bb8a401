from __future__ import annotations

from colorbraid.action import is_liftable, standard_label
from colorbraid.braid import gen
from colorbraid.complex import (build_complex, lassos, schreier_generators, square_report, tail_independence,
                                verify_generation)
from colorbraid.covering import Coloring, rho_I, rho_tilde_I
from colorbraid.perm import T


def edge_set(x):
    out = set()
    for c in x.edges():
        u, v = sorted((standard_label(x.vertices[c.a]), standard_label(x.vertices[c.b])))
        out.add((u, v, x.label_name(c.label)))
    return out


def test_square_orbit_edges():
    x = build_complex(rho_I(6, [2, 3]))
    assert len(x.vertices) == 6
    assert edge_set(x) == {("23", "24", "b3"), ("24", "25", "b4"), ("24", "34", "b2"),
                           ("25", "35", "b2"), ("34", "35", "b4"), ("35", "45", "b3")}


def test_tilde_orbit_edges():
    x = build_complex(rho_tilde_I(6, [4]))
    assert len(x.vertices) == 8
    d4_edges = [e for e in edge_set(x) if e[2] == "d4"]
    assert sorted(d4_edges) == [("2", "~2", "d4"), ("3", "~3", "d4"), ("4", "~4", "d4"), ("5", "~5", "d4")]


def test_single_vertex_orbit_has_only_loops():
    c = Coloring(4, (T(1, 2),) * 6)
    x = build_complex(c, [gen(6, i) for i in range(5)], names=[f"b{i}" for i in range(5)])
    assert len(x.vertices) == 1 and all(cell.is_loop for cell in x.cells)


def test_lassos_are_liftable():
    c = rho_I(8, [2, 3])
    x = build_complex(c)
    words = schreier_generators(x)
    assert len(words) == len(lassos(x)) > 0
    assert all(is_liftable(w, c) for w in words)


def test_spanning_tree():
    x = build_complex(rho_tilde_I(6, [4]))
    assert len(x.tree) == len(x.vertices) - 1


def test_square_report_width_six():
    failing = [r.name for r in square_report(build_complex(rho_I(6, [2, 3]))) if not r.passed]
    # the two pendant edges of the orbit graph lie on no commuting square
    assert failing == ["edge 23-24 b3", "edge 35-45 b3"]


def test_tail_independence_width_eight():
    assert all(r.passed for r in tail_independence(build_complex(rho_I(8, [2, 3]))))


def test_generation_width_six():
    entries = verify_generation(6, "a")
    assert entries and all(e.status in ("CERTIFIED", "HOMOLOGY-MATCHED") for e in entries)


def test_dot_export():
    dot = build_complex(rho_I(6, [2, 3])).to_dot()
    assert dot.startswith("graph orbit {") and dot.count(" -- ") > 0
