import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import X5_R, X5_W
from hodgepc.core import (
    AbstractGame,
    Cycle,
    FormGame,
    completeness,
    connected_components,
    find_cycle,
    flip_dominance,
    from_form,
    inverse_permutation,
    permute,
    remove_mutual,
    reverse_cycle,
    to_form,
    validate,
)
from hodgepc.errors import (
    CycleNotInGame,
    Degenerate,
    DimensionMismatch,
    InvalidForm,
    InvalidGame,
    MalformedCycle,
    NoSuchDominance,
    NotMutual,
    SizeMismatch,
)
from hodgepc.fixtures import GREEN_CYCLE, x5_mutual_removed
from oracles import union_find_components


@st.composite
def games(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return AbstractGame.from_pairs(n, chosen)


class TestAbstractGame:
    def test_rejects_reflexive(self):
        with pytest.raises(InvalidGame):
            AbstractGame.from_pairs(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidGame):
            AbstractGame.from_pairs(2, [(0, 2)])

    def test_rejects_duplicates_and_labels(self):
        with pytest.raises(InvalidGame):
            AbstractGame.from_pairs(3, [(0, 1), (0, 1)])
        with pytest.raises(InvalidGame):
            AbstractGame.from_pairs(["a", "a"], [])


class TestToForm:
    def test_running_example(self, x5):
        fg = to_form(x5)
        np.testing.assert_array_equal(fg.w, X5_W)
        np.testing.assert_array_equal(fg.r, X5_R)
        assert fg.w[0].tolist() == [0, 1, 1, 0, 1]
        assert fg.r[0].tolist() == [0, -1, -1, 0, 0]

    def test_empty(self):
        fg = to_form(AbstractGame.from_pairs(3, []))
        assert not fg.w.any() and not fg.r.any()

    def test_mutual(self):
        fg = to_form(AbstractGame.from_pairs(2, [(0, 1), (1, 0)]))
        assert fg.w[0, 1] == fg.w[1, 0] == 1
        assert not fg.r.any()


class TestFromForm:
    def test_running_example(self, x5):
        assert from_form(FormGame(X5_W, X5_R)) == x5

    def test_empty(self):
        z = np.zeros((3, 3), dtype=int)
        assert from_form(FormGame(z, z)).dominances == frozenset()

    def test_mutual_edge(self):
        w = np.array([[0, 1], [1, 0]])
        assert from_form(FormGame(w, np.zeros((2, 2)))).dominances == {(0, 1), (1, 0)}

    def test_invalid_construction(self):
        with pytest.raises(InvalidForm):
            FormGame(np.zeros((2, 2)), np.array([[0, 1], [1, 0]]))


class TestValidate:
    def test_valid(self):
        assert validate(X5_W, X5_R) == []

    def test_skew_violation(self):
        w = np.array([[0, 1], [1, 0]])
        r = np.array([[0, 1], [1, 0]])
        assert validate(w, r) == ["r is not skew-symmetric"]

    def test_support_violation(self):
        w = np.zeros((2, 2), dtype=int)
        r = np.array([[0, -1], [1, 0]])
        assert validate(w, r) == ["r is nonzero off the edges of w"]

    def test_other_violations(self):
        w = np.array([[1, 2], [0, 0]])
        r = np.array([[0, 3], [-3, 0]])
        problems = validate(w, r)
        assert "w is not symmetric" in problems
        assert "w has a nonzero diagonal" in problems
        assert "w has entries outside {0, 1}" in problems
        assert "r has entries outside {-1, 0, 1}" in problems

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            validate(np.zeros((2, 2)), np.zeros((3, 3)))


class TestCompleteness:
    def test_running_example(self, x5_form):
        assert completeness(x5_form) == pytest.approx(4 / 5, abs=0, rel=0)

    @pytest.mark.parametrize("n", [2, 3, 7])
    def test_complete(self, n):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        assert completeness(to_form(AbstractGame.from_pairs(n, pairs))) == 1.0

    def test_empty(self):
        assert completeness(to_form(AbstractGame.from_pairs(4, []))) == 0.0

    def test_degenerate(self):
        with pytest.raises(Degenerate):
            completeness(to_form(AbstractGame.from_pairs(1, [])))


class TestComponents:
    def test_running_example(self, x5_form):
        assert connected_components(x5_form) == [[0, 1, 2, 3, 4]]

    def test_empty(self):
        assert connected_components(to_form(AbstractGame.from_pairs(3, []))) == [[0], [1], [2]]

    def test_two_edges(self):
        fg = to_form(AbstractGame.from_pairs(4, [(0, 2), (3, 1)]))
        parts = connected_components(fg)
        assert parts == union_find_components(fg.w) == [[0, 2], [1, 3]]

    @settings(max_examples=60, deadline=None)
    @given(games())
    def test_matches_union_find(self, g):
        fg = to_form(g)
        assert connected_components(fg) == union_find_components(fg.w)


class TestPermute:
    def test_identity(self, x5):
        assert permute(x5, range(5)) == x5

    def test_swap_first_last(self, x5):
        g = permute(x5, [4, 1, 2, 3, 0])
        # (0,1) -> (4,1), (1,4) -> (1,0), (4,2) -> (0,2); nothing maps onto (2,0)
        assert {(4, 1), (1, 0), (0, 2)} <= g.dominances
        assert (2, 0) not in g.dominances

    def test_inverse(self, x5):
        p = [2, 0, 4, 1, 3]
        assert permute(permute(x5, p), inverse_permutation(p)) == x5

    def test_bad_permutation(self, x5):
        with pytest.raises(SizeMismatch):
            permute(x5, [0, 0, 1, 2, 3])
        with pytest.raises(SizeMismatch):
            permute(x5, [0, 1, 2])

    @settings(max_examples=60, deadline=None)
    @given(games(), st.randoms(use_true_random=False))
    def test_preserves_structure(self, g, rnd):
        p = list(range(g.n))
        rnd.shuffle(p)
        fg, pg = to_form(g), to_form(permute(g, p))
        if g.n >= 2:
            assert completeness(fg) == completeness(pg)
        mapped = sorted(sorted(p[v] for v in part) for part in connected_components(fg))
        assert mapped == connected_components(pg)


class TestCycles:
    def test_malformed(self):
        with pytest.raises(MalformedCycle):
            Cycle(((0, 1), (2, 0)))
        with pytest.raises(MalformedCycle):
            Cycle(((0, 1),))

    def test_reverse_green_cycle(self, x5):
        g = reverse_cycle(x5, GREEN_CYCLE)
        for e in [(4, 1), (2, 4), (1, 2)]:
            assert e in g.dominances
        for e in GREEN_CYCLE:
            assert e not in g.dominances

    def test_not_in_game(self, x5):
        with pytest.raises(CycleNotInGame):
            reverse_cycle(x5, [(1, 0), (0, 1)])

    def test_mutual_pair_is_fixed_point(self, x5):
        assert reverse_cycle(x5, [(0, 4), (4, 0)]) == x5

    def test_asymmetric_involution(self):
        g = AbstractGame.from_pairs(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        c = Cycle(((0, 1), (1, 2), (2, 0)))
        once = reverse_cycle(g, c)
        assert reverse_cycle(once, c.reversed()) == g
        np.testing.assert_array_equal(to_form(once).w, to_form(g).w)

    def test_find_cycle_running_example(self, x5):
        c = find_cycle(x5)
        assert c is not None and set(c.edges) <= x5.dominances

    def test_find_cycle_asymmetric_running_example(self, x5):
        c = find_cycle(x5, asymmetric_only=True)
        # the only all-asymmetric cycle would need an edge back into x1; none exists
        assert c is None

    def test_find_cycle_none(self):
        assert find_cycle(AbstractGame.from_pairs(3, [(0, 1), (1, 2)])) is None
        assert find_cycle(AbstractGame.from_pairs(2, [(0, 1), (1, 0)]), asymmetric_only=True) is None

    @settings(max_examples=80, deadline=None)
    @given(games(), st.integers(0, 1000), st.booleans())
    def test_find_cycle_valid(self, g, seed, asym):
        c = find_cycle(g, asymmetric_only=asym, seed=seed)
        if c is None:
            return
        assert set(c.edges) <= g.dominances
        if asym:
            assert not any((b, a) in g.dominances for a, b in c.edges)


class TestFlipAndRemove:
    def test_flip_asymmetric(self, x5):
        g = flip_dominance(x5, 4, 2)
        assert (2, 4) in g.dominances and (4, 2) not in g.dominances
        before, after = to_form(x5), to_form(g)
        np.testing.assert_array_equal(before.w, after.w)
        assert after.r[2, 4] - before.r[2, 4] == -2

    def test_flip_within_mutual(self):
        g = AbstractGame.from_pairs(2, [(0, 1), (1, 0)])
        f = flip_dominance(g, 1, 0)
        assert f.dominances == {(0, 1)}
        assert to_form(f).r[0, 1] == -1

    def test_flip_round_trip(self, x5):
        assert flip_dominance(flip_dominance(x5, 4, 2), 2, 4) == x5

    def test_flip_missing(self, x5):
        with pytest.raises(NoSuchDominance):
            flip_dominance(x5, 3, 0)

    def test_remove_mutual_running_example(self, x5):
        assert remove_mutual(remove_mutual(x5, 0, 4), 1, 4) == x5_mutual_removed()

    def test_remove_mutual_completeness_drop(self, x5):
        before = completeness(to_form(x5))
        after = completeness(to_form(remove_mutual(x5, 0, 4)))
        assert after == pytest.approx(before - 2 / 20, abs=1e-15)

    def test_remove_only_edge(self):
        g = remove_mutual(AbstractGame.from_pairs(2, [(0, 1), (1, 0)]), 1, 0)
        assert not to_form(g).w.any()

    def test_not_mutual(self, x5):
        with pytest.raises(NotMutual):
            remove_mutual(x5, 0, 1)


@settings(max_examples=100, deadline=None)
@given(games())
def test_round_trips(g):
    fg = to_form(g)
    assert from_form(fg) == g
    assert to_form(from_form(fg)) == fg


@settings(max_examples=100, deadline=None)
@given(games(), st.integers(0, 10**6))
def test_transforms_stay_valid(g, seed):
    rng = np.random.default_rng(seed)
    doms = g.sorted_dominances()
    out = [permute(g, rng.permutation(g.n))]
    if doms:
        j, i = doms[rng.integers(len(doms))]
        flipped = flip_dominance(g, j, i)
        out.append(flipped)
        np.testing.assert_array_equal(to_form(flipped).w, to_form(g).w)
    mutual = [(i, j) for i, j in doms if i < j and (j, i) in g.dominances]
    if mutual:
        i, j = mutual[0]
        removed = remove_mutual(g, i, j)
        out.append(removed)
        assert to_form(removed).w.sum() == to_form(g).w.sum() - 2
    c = find_cycle(g, seed=seed)
    if c is not None:
        out.append(reverse_cycle(g, c))
    for h in out:
        fg = to_form(h)
        assert validate(fg.w, fg.r) == []


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 100), st.floats(0.0, 0.2), st.integers(0, 2**32 - 1))
def test_base_is_connected_matches_union_find(n, p, seed):
    from hodgepc.core import base_is_connected

    rng = np.random.default_rng(seed)
    w = np.triu(rng.random((n, n)) < p, 1).astype(np.int8)
    w = w + w.T
    assert base_is_connected(w) == (len(union_find_components(w)) == 1)
