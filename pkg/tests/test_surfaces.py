import pytest

from surfacebraid.bracket import kauffman_bracket
from surfacebraid.diagrams import count_components, plat_closure, trace_closure
from surfacebraid.surfaces import (
    ResolutionSign,
    csb_membership,
    dnk_diagram,
    dnk_word,
    euler_characteristic,
    mirror_closure,
    resolve,
    surface_invariants,
    twist_spin,
)
from surfacebraid.tangles import parse_tangle
from surfacebraid.words import parse_closed_word, parse_word


def closed(text):
    return parse_closed_word(text)


class TestResolve:
    def test_a_b_conventions(self):
        w = parse_word("a1 b1", 2)
        assert str(resolve(w, ResolutionSign.PLUS)) == "e1"
        assert str(resolve(w, ResolutionSign.MINUS)) == "e1"

    def test_projective_plane_word(self):
        w = parse_word("c1 a1", 2)
        assert str(resolve(w, ResolutionSign.PLUS)) == "s1"
        assert str(resolve(w, ResolutionSign.MINUS)) == "s1 e1"

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_crossings_sign_independent(self, k):
        w = parse_word(f"c1^{k}", 2)
        for sign in ResolutionSign:
            assert str(resolve(w, sign)) == " ".join(["s1"] * k)

    def test_crossing_order_preserved(self):
        w = parse_word("c1 a2 C1 b1 c2", 3)
        for sign in ResolutionSign:
            resolved = resolve(w, sign)
            crossings = [t for t in resolved.letters if t.is_crossing]
            assert [str(t) for t in crossings] == ["s1", "S1", "s2"]


class TestEuler:
    @pytest.mark.parametrize(
        "text,chi",
        [
            ("[]_1", 2),          # sphere
            ("[a1 b1]_2", 0),     # torus
            ("[c1 a1]_2", 1),     # projective plane
            ("[a2 b2]_3", 2),     # sphere with two trivial saddles
            ("[]_2", 4),          # two split spheres
        ],
    )
    def test_calibration(self, text, chi):
        assert euler_characteristic(closed(text)) == chi

    def test_invariants_record(self):
        inv = surface_invariants(closed("[a1 b1]_2"), check_membership=True)
        assert inv.euler_characteristic == 0
        assert inv.saddle_count == 2
        assert (inv.components_plus, inv.components_minus) == (1, 1)
        assert all(v.is_trivial for v in inv.csb)


class TestCsbMembership:
    def test_torus_word(self):
        plus, minus = csb_membership(closed("[a1 b1]_2"))
        assert plus.is_trivial and minus.is_trivial

    def test_torus_link_word_fails(self):
        plus, minus = csb_membership(closed("[c1^3]_2"))
        assert plus.status == "nontrivial" and minus.status == "nontrivial"

    def test_empty(self):
        plus, minus = csb_membership(closed("[]_2"))
        assert plus.is_trivial and minus.is_trivial


class TestTwistSpin:
    def test_formula_inverse_tangle(self):
        spun = twist_spin(parse_word("C1", 3), 1)
        assert str(spun) == "[a2 C1 b2 c1 c1 c2 c1 c1 c2 c1]_3"

    def test_negative_twists_use_formal_inverse(self):
        spun = twist_spin(parse_word("C1", 3), -1)
        assert str(spun) == "[a2 C1 b2 c1 C1 C2 C1 C1 C2 C1]_3"

    def test_zero_twists_collapse(self):
        spun = twist_spin(parse_word("", 3), 0)
        assert str(spun) == "[a2 b2]_3"

    def test_torus_knot_family_word(self):
        spun = twist_spin(parse_word("c1^-3", 3), 2)
        expected = parse_closed_word("[a2 c1^-3 b2 c1^3 delta(3,1)^4]_3")
        assert spun == expected

    def test_saddle_count_is_2m(self):
        for strands in (3, 5, 7):
            spun = twist_spin(parse_word("", strands), 1)
            assert spun.word.saddle_count() == strands - 1

    def test_rejects_even_strands(self):
        with pytest.raises(ValueError):
            twist_spin(parse_word("c1", 2), 1)

    def test_rejects_vertices(self):
        with pytest.raises(ValueError):
            twist_spin(parse_word("a2", 3), 1)

    @pytest.mark.parametrize("n,k", [(0, 1), (1, 1), (1, 3), (2, 3)])
    def test_membership_of_twist_spun_torus_words(self, n, k):
        spun = twist_spin(parse_word(f"c1^-{k}", 3), n)
        plus, minus = csb_membership(spun, max_expansions=50000)
        assert plus.is_trivial and minus.is_trivial


class TestMirror:
    def test_definition(self):
        w = closed("[a2 C1 b2 c1 delta(3,1)^2]_3")
        assert str(mirror_closure(w)) == "[C1 C2 C1 C1 C2 C1 C1 b2 c1 a2]_3"

    def test_involution(self):
        w = closed("[a2 C1 b2 c1 delta(3,1)^2]_3")
        assert mirror_closure(mirror_closure(w)) == w

    def test_single_crossing(self):
        assert str(mirror_closure(closed("[c1]_2"))) == "[C1]_2"


class TestDnk:
    @pytest.mark.parametrize("n,k", [(2, 3), (2, 5), (3, 3)])
    def test_crossing_and_component_counts(self, n, k):
        pd = dnk_diagram(n, k)
        assert pd.crossing_count == 6 * n + 2 * k
        assert count_components(pd) == 2

    def test_word_form(self):
        t = dnk_word(2, 3)
        assert str(t) == "s1 s1 s1 " + "s1 s2 s1 " * 4 + "S1 S1 S1".strip()

    @pytest.mark.parametrize("n,k", [(1, 3), (2, 2), (2, 1), (0, 3)])
    def test_parameter_validation(self, n, k):
        with pytest.raises(ValueError):
            dnk_word(n, k)


class TestResolutionInvariants:
    @pytest.mark.parametrize("text", ["[a2 C1 b2 c1]_3", "[c1 a1]_2", "[a1 b1 c1]_2"])
    def test_plus_minus_same_crossings(self, text):
        w = closed(text)
        plus = resolve(w.word, ResolutionSign.PLUS)
        minus = resolve(w.word, ResolutionSign.MINUS)
        assert [str(t) for t in plus.letters if t.is_crossing] == [
            str(t) for t in minus.letters if t.is_crossing
        ]
