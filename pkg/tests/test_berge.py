import itertools
import random

import pytest

from bergesat import make
from bergesat.berge import (
    BergeEmbedding,
    contains_berge,
    contains_berge_cycle,
    contains_berge_matching,
    contains_berge_star,
    longest_berge_path,
    verify_embedding,
)
from bergesat import patterns
from naive_oracle import naive_contains

PATTERNS = [
    patterns.path(3),
    patterns.path(4),
    patterns.cycle(3),
    patterns.cycle(4),
    patterns.star(2),
    patterns.star(3),
    patterns.matching(2),
]


def loose_path(t):
    return make(2 * t + 1, 3, [(2 * i, 2 * i + 1, 2 * i + 2) for i in range(t)])


def test_two_level_tree_path_window(two_level_tree):
    emb5 = contains_berge(two_level_tree, patterns.path(5))
    assert emb5 is not None
    assert verify_embedding(two_level_tree, patterns.path(5), emb5)
    assert contains_berge(two_level_tree, patterns.path(6)) is None


def test_single_edge_hosts_k2():
    h = make(4, 3, [(0, 1, 2)])
    f = patterns.general(2, [(0, 1)])
    emb = contains_berge(h, f)
    assert emb is not None and verify_embedding(h, f, emb)


def test_path_tiny_orders():
    h = make(4, 3, [(0, 1, 2)])
    assert contains_berge(h, patterns.path(1)) is not None
    assert contains_berge(h, patterns.path(2)) is not None
    assert contains_berge(h, patterns.path(3)) is None  # only one edge
    empty = make(0, 3, [])
    assert contains_berge(empty, patterns.path(1)) is None


def test_longest_path_values(two_level_tree):
    assert longest_berge_path(make(3, 3, [(0, 1, 2)]))[0] == 1
    assert longest_berge_path(loose_path(4))[0] == 4
    t, emb = longest_berge_path(make(5, 3, []))
    assert t == 0 and emb is not None and len(emb.vertex_map) == 1
    assert longest_berge_path(make(0, 2, [])) == (0, None)
    # two levels of branching: down, across the root, down again
    assert longest_berge_path(two_level_tree)[0] == 4


def test_longest_path_restrictions():
    h = loose_path(3)  # edges (0,1,2),(2,3,4),(4,5,6)
    t, emb = longest_berge_path(h, required_edge=(0, 1, 2))
    assert t == 3 and 0 in emb.edge_map
    t2, emb2 = longest_berge_path(h, start_vertex=4)
    assert emb2.vertex_map[0] == 4
    assert t2 == 2  # paths from the middle cannot use all three edges
    with pytest.raises(ValueError):
        longest_berge_path(h, required_edge=(0, 1, 3))
    with pytest.raises(ValueError):
        longest_berge_path(h, start_vertex=99)


def test_cycle_on_tight_cycle(tight_cycle_7):
    emb = contains_berge_cycle(tight_cycle_7, 7)
    assert emb is not None
    assert verify_embedding(tight_cycle_7, patterns.cycle(7), emb)
    assert contains_berge_cycle(tight_cycle_7, 3) is not None


def test_no_cycle_in_linear_tree(two_level_tree):
    for m in range(3, 8):
        assert contains_berge_cycle(two_level_tree, m) is None


def test_star_pendant_and_shared():
    pend = make(7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6)])
    emb = contains_berge_star(pend, 3)
    assert emb is not None and verify_embedding(pend, patterns.star(3), emb)
    # two edges overlapping in two vertices: K_{1,2} at a shared vertex
    h = make(4, 3, [(0, 1, 2), (1, 2, 3)])
    assert contains_berge_star(h, 2) is not None
    assert contains_berge_star(h, 3) is None


def test_matching_examples():
    disj = make(9, 3, [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    assert contains_berge_matching(disj, 3) is not None
    assert contains_berge_matching(make(6, 3, [(0, 1, 2), (3, 4, 5)]), 3) is None
    shared = make(5, 3, [(0, 1, 2), (2, 3, 4)])
    emb = contains_berge_matching(shared, 2)
    assert emb is not None
    assert verify_embedding(shared, patterns.matching(2), emb)


def test_required_edge_is_used(two_level_tree):
    h = two_level_tree
    f = patterns.path(4)
    for idx, e in enumerate(h.edges):
        emb = contains_berge(h, f, required_edge=e)
        if emb is not None:
            assert idx in emb.edge_map
            assert verify_embedding(h, f, emb)
            # positive with a required edge implies positive without
            assert contains_berge(h, f) is not None
    with pytest.raises(ValueError):
        contains_berge(h, f, required_edge=(0, 1, 3))


def test_verify_embedding_rejects_bad():
    h = make(5, 3, [(0, 1, 2), (2, 3, 4)])
    f = patterns.matching(2)
    good = contains_berge(h, f)
    assert verify_embedding(h, f, good)
    dup_edge = BergeEmbedding(good.vertex_map, (good.edge_map[0],) * 2)
    assert not verify_embedding(h, f, dup_edge)
    vm = list(good.vertex_map)
    vm[1] = vm[0]
    assert not verify_embedding(h, f, BergeEmbedding(tuple(vm), good.edge_map))
    assert not verify_embedding(h, f, BergeEmbedding(good.vertex_map[:3], good.edge_map))
    assert not verify_embedding(h, f, BergeEmbedding(good.vertex_map, (0, 99)))


def random_host(rng):
    n = rng.randrange(4, 9)
    pool = list(itertools.combinations(range(n), 3))
    m = rng.randrange(0, 7)
    return make(n, 3, rng.sample(pool, min(m, len(pool))))


def test_agrees_with_naive_oracle():
    rng = random.Random(20260816)
    for _ in range(120):
        h = random_host(rng)
        for f in PATTERNS:
            emb = contains_berge(h, f)
            truth = naive_contains(h.n, h.edges, f.nv, f.edges)
            assert (emb is not None) == truth, (h.edges, f.label)
            if emb is not None:
                assert verify_embedding(h, f, emb)


def test_specialized_matches_general():
    rng = random.Random(99)
    for _ in range(60):
        h = random_host(rng)
        for f in PATTERNS:
            g = patterns.general(f.nv, f.edges)
            assert (contains_berge(h, f) is None) == (contains_berge(h, g) is None)


def test_monotone_under_edge_addition():
    rng = random.Random(5)
    for _ in range(40):
        h = random_host(rng)
        for f in PATTERNS:
            if contains_berge(h, f) is None:
                continue
            extra = [e for e in itertools.combinations(range(h.n), 3)
                     if e not in h.edge_set]
            if extra:
                h2 = h.with_edge(rng.choice(extra))
                assert contains_berge(h2, f) is not None


def test_required_matches_unrestricted_on_new_edge():
    """For hosts free of f, adding a non-edge e: searching only through e
    agrees with the unrestricted search on h+e."""
    rng = random.Random(17)
    checked = 0
    for _ in range(80):
        h = random_host(rng)
        for f in PATTERNS:
            if contains_berge(h, f) is not None:
                continue
            extra = [e for e in itertools.combinations(range(h.n), 3)
                     if e not in h.edge_set]
            if not extra:
                continue
            e = rng.choice(extra)
            h2 = h.with_edge(e)
            with_req = contains_berge(h2, f, required_edge=e)
            without = contains_berge(h2, f)
            assert (with_req is None) == (without is None)
            checked += 1
    assert checked > 50
