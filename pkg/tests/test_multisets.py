import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multires.errors import GraphValidationError
from multires.generators import gen_cycle, gen_path, gen_star
from multires.graph import all_pairs_distances
from multires.multisets import (
    Variant,
    is_resolving,
    representation,
    representation_multiset,
    scope_pairs,
    violating_pairs,
)

from strategies import connected_graphs


def test_variant_lookup():
    assert Variant.from_name("lmd") is Variant.LMD
    assert Variant.from_name("DIM_MS") is Variant.DIM_MS
    with pytest.raises(GraphValidationError):
        Variant.from_name("nope")


def test_variant_finiteness():
    assert not Variant.MD.always_finite
    assert not Variant.LMD.always_finite
    for v in (Variant.DIM, Variant.LDIM, Variant.DIM_MS, Variant.LDIM_MS):
        assert v.always_finite


def test_representation_vector_vs_multiset():
    dm = all_pairs_distances(gen_path(4))
    assert representation(dm, 0, (3, 1)) == (3, 1)
    assert representation_multiset(dm, 0, {3, 1}) == (1, 3)
    with pytest.raises(GraphValidationError):
        representation(dm, 0, ())
    with pytest.raises(GraphValidationError):
        representation_multiset(dm, 0, set())


@settings(max_examples=100, deadline=None)
@given(connected_graphs(n_max=6), st.data())
def test_multiset_is_order_insensitive_and_idempotent(g, data):
    dm = all_pairs_distances(g)
    W = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=g.n - 1),
            min_size=1,
            max_size=g.n,
            unique=True,
        )
    )
    u = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    bag = representation_multiset(dm, u, W)
    assert bag == representation_multiset(dm, u, reversed(W))
    assert bag == tuple(sorted(bag))


def test_scope_pairs():
    g = gen_star(3)  # center 0, leaves 1..3
    assert sorted(scope_pairs(g, (), "all")) == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)
    ]
    assert sorted(scope_pairs(g, (), "adjacent")) == [(0, 1), (0, 2), (0, 3)]
    assert sorted(scope_pairs(g, (1,), "outer")) == [(0, 2), (0, 3), (2, 3)]
    assert sorted(scope_pairs(g, (0,), "adjacent_outer")) == []
    with pytest.raises(ValueError):
        list(scope_pairs(g, (), "sideways"))


def test_is_resolving_c4():
    g = gen_cycle(4)
    dm = all_pairs_distances(g)
    # a single landmark separates the two colour classes locally
    assert is_resolving(dm, g, (0,), Variant.LMD)
    assert not is_resolving(dm, g, (0,), Variant.DIM)
    assert is_resolving(dm, g, (0, 1), Variant.DIM)
    # opposite vertices both see {1, 1}: not a multiset resolving set
    assert not is_resolving(dm, g, (0, 1), Variant.MD)


def test_violating_pairs_reports_colliding_edge():
    g = gen_cycle(3)
    dm = all_pairs_distances(g)
    assert violating_pairs(dm, g, (0,), Variant.LMD) == [(1, 2)]
    assert violating_pairs(dm, g, (0,), Variant.LDIM_MS) == [(1, 2)]


def test_candidate_validation():
    g = gen_path(3)
    dm = all_pairs_distances(g)
    with pytest.raises(GraphValidationError):
        is_resolving(dm, g, (), Variant.DIM)
    with pytest.raises(GraphValidationError):
        is_resolving(dm, g, (7,), Variant.DIM)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(n_max=6))
def test_vector_resolving_implies_multiset_scope_containment(g):
    """On a fixed W, the all-pairs scopes dominate the adjacent ones."""
    dm = all_pairs_distances(g)
    W = tuple(range(g.n - 1)) or (0,)
    if is_resolving(dm, g, W, Variant.MD):
        assert is_resolving(dm, g, W, Variant.LMD)
        assert is_resolving(dm, g, W, Variant.DIM)
    if is_resolving(dm, g, W, Variant.DIM):
        assert is_resolving(dm, g, W, Variant.LDIM)
