import random

import pytest

from surfacebraid.bracket import bracket_of_diagram
from surfacebraid.diagrams import count_components, trace_closure
from surfacebraid.laurent import KINK_NEG, KINK_POS
from surfacebraid.reidemeister import (
    available_moves,
    canonical_form,
    faces,
    is_spherical,
    reidemeister_simplify,
    triviality_verdict,
)
from surfacebraid.tangles import TangleKind, TangleLetter, TangleWord, e, sigma, sigma_inv


def T(strands, *letters):
    return TangleWord(strands, tuple(letters))


def random_diagram(rng, max_crossings=8):
    strands = rng.randint(2, 4)
    letters = []
    crossings = 0
    for _ in range(rng.randint(1, 10)):
        kind = rng.choice([TangleKind.SPOS, TangleKind.SNEG, TangleKind.E])
        if kind is not TangleKind.E:
            if crossings == max_crossings:
                continue
            crossings += 1
        letters.append(TangleLetter(kind, rng.randint(1, strands - 1)))
    return trace_closure(TangleWord(strands, tuple(letters)))


class TestFaces:
    def test_kink_faces(self):
        pd = trace_closure(T(2, sigma(1)))
        sizes = sorted(len(f) for f in faces(pd))
        assert sizes == [1, 1, 2]

    def test_spherical(self):
        for word in [T(2, sigma(1)), T(3, sigma(1), sigma(2)), T(2, *[sigma(1)] * 3)]:
            assert is_spherical(trace_closure(word))


class TestR1R2:
    def test_r2_pair_reduces_in_one_move(self):
        pd = trace_closure(T(2, sigma(1), sigma_inv(1)))
        result = reidemeister_simplify(pd, allowed=("R2",))
        assert result.trivial
        assert result.move_counts == (0, 1, 0)
        assert result.final.free_loops == 2

    def test_kink_reduces(self):
        pd = trace_closure(T(2, sigma(1)))
        result = reidemeister_simplify(pd, allowed=("R1",))
        assert result.trivial and result.move_counts == (1, 0, 0)

    def test_hopf_clasp_is_not_r2(self):
        pd = trace_closure(T(2, sigma(1), sigma(1)))
        moves = available_moves(pd, allowed=("R1", "R2"))
        assert moves == []


class TestR3:
    def test_braid_relation_diagrams_linked_by_r3(self):
        left = trace_closure(T(3, sigma(1), sigma(2), sigma(1)))
        right = trace_closure(T(3, sigma(2), sigma(1), sigma(2)))
        moves = [m for m in available_moves(left, allowed=("R3",))]
        assert moves, "expected an R3 triangle on the braid-relation closure"
        images = {canonical_form(pd) for _, pd in moves}
        assert canonical_form(right) in images

    @pytest.mark.parametrize("seed", range(40))
    def test_r3_preserves_bracket_components_sphericity(self, seed):
        rng = random.Random(seed)
        pd = random_diagram(rng)
        for move, nxt in available_moves(pd, allowed=("R3",)):
            assert is_spherical(nxt)
            assert count_components(nxt) == count_components(pd)
            assert bracket_of_diagram(nxt) == bracket_of_diagram(pd)

    def test_r3_is_reversible(self):
        pd = trace_closure(T(3, sigma(1), sigma(2), sigma(1)))
        for move, nxt in available_moves(pd, allowed=("R3",)):
            back = {canonical_form(p) for _, p in available_moves(nxt, allowed=("R3",))}
            assert canonical_form(pd) in back


class TestMoveInvariance:
    @pytest.mark.parametrize("seed", range(40))
    def test_r2_down_preserves_bracket(self, seed):
        rng = random.Random(100 + seed)
        pd = random_diagram(rng)
        for move, nxt in available_moves(pd, allowed=("R2",)):
            assert bracket_of_diagram(nxt) == bracket_of_diagram(pd)
            assert count_components(nxt) == count_components(pd)

    @pytest.mark.parametrize("seed", range(40))
    def test_r1_down_scales_bracket_by_kink_unit(self, seed):
        rng = random.Random(200 + seed)
        pd = random_diagram(rng)
        for move, nxt in available_moves(pd, allowed=("R1",)):
            before = bracket_of_diagram(pd)
            after = bracket_of_diagram(nxt)
            assert before in (after * KINK_POS, after * KINK_NEG)
            assert count_components(nxt) == count_components(pd)

    @pytest.mark.parametrize("seed", range(25))
    def test_growing_moves_preserve_bracket_up_to_kinks(self, seed):
        rng = random.Random(300 + seed)
        pd = random_diagram(rng, max_crossings=5)
        grown = available_moves(pd, allowed=("R1", "R2"), max_crossings=pd.crossing_count + 2, grow=True)
        before = bracket_of_diagram(pd)
        for move, nxt in grown:
            assert is_spherical(nxt)
            assert count_components(nxt) == count_components(pd)
            after = bracket_of_diagram(nxt)
            if move.kind == "R2":
                assert after == before
            else:
                assert after in (before * KINK_POS, before * KINK_NEG)


class TestTriviality:
    def test_single_kink_trivial(self):
        v = triviality_verdict(T(2, sigma(1)), "trace")
        assert v.is_trivial and v.components == 1

    def test_trefoil_nontrivial(self):
        v = triviality_verdict(T(2, *[sigma(1)] * 3), "trace")
        assert v.status == "nontrivial"
        assert "bracket" in v.witness

    @pytest.mark.parametrize("k", [-5, -3, -2, 2, 3, 4, 5])
    def test_torus_words_nontrivial(self, k):
        letter = sigma(1) if k > 0 else sigma_inv(1)
        v = triviality_verdict(T(2, *[letter] * abs(k)), "trace")
        assert v.status == "nontrivial"

    @pytest.mark.parametrize("k", [-1, 0, 1])
    def test_short_torus_words_trivial(self, k):
        letter = sigma(1) if k > 0 else sigma_inv(1)
        v = triviality_verdict(T(2, *[letter] * abs(k)), "trace")
        assert v.is_trivial

    def test_trefoil_never_simplifies_to_trivial(self):
        pd = trace_closure(T(2, *[sigma(1)] * 3))
        result = reidemeister_simplify(pd, max_expansions=2000)
        assert not result.trivial

    def test_split_unlink_trivial(self):
        v = triviality_verdict(T(3, sigma(1)), "trace")
        assert v.is_trivial and v.components == 2


class TestCanonicalForm:
    def test_relabel_invariance(self):
        pd1 = trace_closure(T(3, sigma(1), sigma(2)))
        pd2 = trace_closure(T(3, sigma(2), sigma(1)))
        # same diagram up to planar symmetry: rotating the braid word
        assert canonical_form(pd1) == canonical_form(pd2)

    def test_distinguishes_signs(self):
        pos = trace_closure(T(2, sigma(1)))
        neg = trace_closure(T(2, sigma_inv(1)))
        assert canonical_form(pos) != canonical_form(neg)
