"""Force-directed layout: determinism, component packing, shape sanity."""
import numpy as np

from conftest import clique_pairs, make_graph, path_pairs, random_graph

from graphrepo.layout import compute_layout


def bounding_box(pos):
    return pos[:, 0].min(), pos[:, 1].min(), pos[:, 0].max(), pos[:, 1].max()


def boxes_disjoint(a, b):
    ax0, ay0, ax1, ay1 = a
    bx0, by0, bx1, by1 = b
    return ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0


def test_single_node_at_origin():
    pos = compute_layout(make_graph(1, []), seed=0)
    assert pos.shape == (1, 2)
    assert pos[0].tolist() == [0.0, 0.0]


def test_components_get_disjoint_boxes():
    g = make_graph(9, clique_pairs(4) + path_pairs(5, offset=4))
    pos = compute_layout(g, seed=2)
    a = bounding_box(pos[:4])
    b = bounding_box(pos[4:])
    assert boxes_disjoint(a, b)


def test_many_components_pairwise_disjoint():
    pairs, comps, off = [], [], 0
    for size in (3, 5, 2, 7, 4):
        pairs += path_pairs(size, offset=off)
        comps.append(list(range(off, off + size)))
        off += size
    pos = compute_layout(make_graph(off, pairs), seed=5)
    boxes = [bounding_box(pos[c]) for c in comps]
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            assert boxes_disjoint(boxes[i], boxes[j])


def test_path_endpoints_stretched_apart():
    g = make_graph(10, path_pairs(10))
    hits = 0
    for seed in range(100):
        pos = compute_layout(g, seed=seed)
        d = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=2)
        i, j = np.unravel_index(np.argmax(d), d.shape)
        if {int(i), int(j)} == {0, 9}:
            hits += 1
    assert hits >= 90


def test_layout_deterministic_per_seed():
    g = random_graph(13)
    a = compute_layout(g, seed=4)
    b = compute_layout(g, seed=4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, compute_layout(g, seed=6))


def test_layout_shape_and_finiteness():
    for seed in (0, 8):
        g = random_graph(seed)
        pos = compute_layout(g, seed=seed)
        assert pos.shape == (g.n, 2)
        assert np.isfinite(pos).all()
