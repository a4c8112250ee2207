"""BFS/box enumeration, the dual-route checks, and graph export."""

import json

import pytest

from crystalcone.cartan import CartanData, LambdaConfig
from crystalcone.enumeration import (
    EnumConfig,
    bfs_enumerate,
    box_enumerate_img,
    box_enumerate_sigma,
    export_graph,
    graph_from_json,
    verify_equality,
    verify_shift_equivalences,
)
from crystalcone.lattice import canonical_key, img_membership_elt, make_elt, z_lambda

CFG = LambdaConfig(CartanData(3, 3), 1, 1)


def ec(depth=1, support=3, max_coord=4, K=8):
    return EnumConfig(CFG, depth=depth, support=support, max_coord=max_coord, weyl_depth=K)


def test_enum_config_validation():
    with pytest.raises(ValueError):
        EnumConfig(CFG, depth=-1)
    with pytest.raises(ValueError):
        EnumConfig(CFG, depth=21)
    with pytest.raises(ValueError):
        EnumConfig(CFG, support=0)


def test_bfs_depth_one():
    result = bfs_enumerate(ec(depth=1))
    assert len(result.elements) == 3
    assert len(result.f_edges()) == 2
    keys = {canonical_key(e) for e in result.elements}
    assert canonical_key(z_lambda(CFG.lam)) in keys
    assert canonical_key(make_elt({1: 1}, CFG.lam)) in keys
    assert canonical_key(make_elt({}, CFG.lam, {0: -1})) in keys


def test_bfs_depth_zero():
    result = bfs_enumerate(ec(depth=0))
    assert len(result.elements) == 1
    assert result.f_edges() == []


def test_bfs_monotone_in_depth():
    sizes = [len(bfs_enumerate(ec(depth=d)).elements) for d in range(0, 7)]
    assert sizes == sorted(sizes)
    assert sizes[0] == 1 and sizes[1] == 3


def test_box_contains_examples():
    box = box_enumerate_sigma(ec(support=2, max_coord=3))
    keys = {canonical_key(e) for e in box}
    assert canonical_key(z_lambda(CFG.lam)) in keys
    assert canonical_key(make_elt({1: 1}, CFG.lam)) in keys
    assert canonical_key(make_elt({}, CFG.lam, {0: -1})) in keys
    assert canonical_key(make_elt({1: 2}, CFG.lam)) not in keys


def test_box_deterministic_and_sorted():
    a = box_enumerate_sigma(ec(support=2, max_coord=3))
    b = box_enumerate_sigma(ec(support=2, max_coord=3))
    assert a == b
    keys = [canonical_key(e) for e in a]
    assert keys == sorted(keys)


def test_bfs_subset_of_box():
    box_keys = {canonical_key(e) for e in box_enumerate_sigma(ec(support=3, max_coord=4))}
    for elt in bfs_enumerate(ec(depth=6)).elements:
        in_box = all(
            1 <= k <= 3 and v <= 4
            for k, v in elt.plus.entries
        ) and all(-3 <= k <= 0 and v >= -4 for k, v in elt.minus.entries)
        if in_box:
            assert canonical_key(elt) in box_keys


def test_box_img_contains_sigma():
    sigma = box_enumerate_sigma(ec(support=3, max_coord=3))
    img_keys = {canonical_key(e) for e in box_enumerate_img(ec(support=3, max_coord=3))}
    for elt in sigma:
        assert canonical_key(elt) in img_keys
        assert img_membership_elt(CFG.cartan, elt)


def test_verify_equality_small():
    report = verify_equality(ec(support=2, max_coord=2, K=8))
    assert report["equal"]
    assert report["size_sigma"] == report["size_extremal"] > 0
    assert report["only_sigma"] == [] and report["only_extremal"] == []


def test_verify_equality_k_zero_is_weaker():
    # K = 0 keeps at least as many candidates as any larger truncation
    weak = verify_equality(ec(support=2, max_coord=2, K=8), K=0)
    strong = verify_equality(ec(support=2, max_coord=2, K=8), K=8)
    assert weak["size_extremal"] >= strong["size_extremal"]
    assert weak["only_sigma"] == []  # the cone side is K-independent


def test_verify_shift_equivalences():
    report = verify_shift_equivalences(ec(support=3, max_coord=4), L=6, L_max=40)
    assert report["verified"], report["mismatches"]
    assert report["parts"] > 5
    # the empty part and plus{1:1} are among the candidates per the worked cases
    assert report["checks"] > 50


def test_export_json_round_trip():
    result = bfs_enumerate(ec(depth=2))
    text = export_graph(result.elements, result, fmt="json")
    back = graph_from_json(text)
    assert sorted(map(canonical_key, back)) == sorted(
        map(canonical_key, result.elements)
    )
    doc = json.loads(text)
    assert all(set(e) == {"src", "i", "dst"} for e in doc["edges"])


def test_export_byte_stable():
    result = bfs_enumerate(ec(depth=2))
    assert export_graph(result.elements, result, fmt="json") == export_graph(
        result.elements, result, fmt="json"
    )
    assert export_graph(result.elements, result, fmt="dot") == export_graph(
        result.elements, result, fmt="dot"
    )


def test_export_dot_shape():
    result = bfs_enumerate(ec(depth=1))
    text = export_graph(result.elements, result, fmt="dot")
    assert text.startswith("digraph crystal {")
    assert text.rstrip().endswith("}")
    assert 'color="red"' in text and 'color="blue"' in text
    assert text.count("->") == 2


def test_export_isolated_node():
    single = [z_lambda(CFG.lam)]
    text = export_graph(single, [], fmt="dot")
    assert "->" not in text
    assert text.count(";") == 1


def test_export_to_file(tmp_path):
    result = bfs_enumerate(ec(depth=1))
    out = tmp_path / "graph.dot"
    export_graph(result.elements, result, fmt="dot", out=str(out))
    assert out.read_text().startswith("digraph")


def test_export_bad_format():
    with pytest.raises(ValueError):
        export_graph([], [], fmt="svg")
