import random

import pytest

from surfacebraid.diagrams import (
    count_components,
    pd_export,
    pd_import,
    plat_closure,
    trace_closure,
    writhes_over_orientations,
)
from surfacebraid.tangles import (
    TangleWord,
    e,
    parse_tangle,
    sigma,
    sigma_inv,
)
from surfacebraid.words import crossing_permutation, parse_word


def T(strands, *letters):
    return TangleWord(strands, tuple(letters))


class TestTraceClosure:
    def test_empty_two_strands(self):
        pd = trace_closure(T(2))
        assert pd.crossing_count == 0 and pd.free_loops == 2

    def test_single_crossing(self):
        pd = trace_closure(T(2, sigma(1)))
        assert pd.crossing_count == 1
        assert count_components(pd) == 1

    @pytest.mark.parametrize("k,comps", [(1, 1), (2, 2), (3, 1), (4, 2), (5, 1)])
    def test_torus_word_components(self, k, comps):
        pd = trace_closure(T(2, *[sigma(1)] * k))
        assert pd.crossing_count == k
        assert count_components(pd) == comps

    def test_e_closure(self):
        pd = trace_closure(T(2, e(1)))
        assert pd.crossing_count == 0 and pd.free_loops == 1
        assert count_components(pd) == 1

    @pytest.mark.parametrize("seed", range(25))
    def test_crossing_only_components_match_permutation_cycles(self, seed):
        rng = random.Random(seed)
        strands = rng.randint(2, 5)
        word = parse_word(
            " ".join(
                rng.choice("cC") + str(rng.randint(1, strands - 1))
                for _ in range(rng.randint(0, 10))
            ),
            strands,
        )
        tangle = T(
            strands,
            *[sigma(g.index) if g.kind.name == "C" else sigma_inv(g.index) for g in word],
        )
        perm = crossing_permutation(word)
        seen = set()
        cycles = 0
        for s in range(1, strands + 1):
            if s in seen:
                continue
            cycles += 1
            p = s
            while p not in seen:
                seen.add(p)
                p = perm[p - 1]
        assert count_components(trace_closure(tangle)) == cycles


class TestPlatClosure:
    def test_needs_odd_strands(self):
        with pytest.raises(ValueError):
            plat_closure(T(2, sigma(1)))

    def test_empty_three_strands(self):
        pd = plat_closure(T(3))
        assert pd.crossing_count == 0
        assert count_components(pd) == 2

    def test_unknot_from_one_crossing(self):
        pd = plat_closure(T(3, sigma_inv(1)))
        assert pd.crossing_count == 1
        assert count_components(pd) == 1

    @pytest.mark.parametrize("k", [1, 3, 5])
    def test_odd_twist_region_is_knot(self, k):
        pd = plat_closure(T(3, *[sigma(1)] * k))
        assert count_components(pd) == 1


class TestPDText:
    def test_round_trip(self):
        pd = trace_closure(parse_tangle("s1 S2 s1 e2", 3))
        text = pd_export(pd)
        assert pd_import(text) == pd

    def test_no_crossings(self):
        pd = trace_closure(T(2))
        assert pd_export(pd) == "loops=2"
        assert pd_import("loops=2") == pd


class TestWrithe:
    def test_positive_kink(self):
        pd = trace_closure(T(2, sigma(1)))
        assert writhes_over_orientations(pd) == (1,)

    def test_negative_kink(self):
        pd = trace_closure(T(2, sigma_inv(1)))
        assert writhes_over_orientations(pd) == (-1,)

    def test_parallel_braid_orientation_included(self):
        # Hopf link: writhes +-2 depending on relative orientation
        pd = trace_closure(T(2, sigma(1), sigma(1)))
        assert set(writhes_over_orientations(pd)) == {2, -2}

    def test_kink_after_cap_is_negative(self):
        # cap followed by a positive crossing traverses antiparallel: writhe -1
        pd = trace_closure(T(2, e(1), sigma(1)))
        assert writhes_over_orientations(pd) == (-1,)

    def test_trefoil_writhe(self):
        pd = trace_closure(T(2, sigma(1), sigma(1), sigma(1)))
        assert writhes_over_orientations(pd) == (3,)
