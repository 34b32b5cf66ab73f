import random

import pytest

from surfacebraid.rewrite import (
    RewriteCertificate,
    RewriteStep,
    apply_rule_at,
    catalog_by_id,
    certificate_from_json,
    certificate_to_json,
    instantiate,
    rule_catalog,
)
from surfacebraid.words import parse_closed_word, parse_word


def closed(text):
    return parse_closed_word(text)


class TestCatalog:
    def test_two_strands(self):
        cat = catalog_by_id(2)
        assert len(cat["A1"]) == 2
        assert len(cat["A9"]) == len(cat["A10"]) == len(cat["A11"]) == 1
        for rid in ("A3", "A4", "A5", "A6", "A7", "A8", "A12", "A13", "A14"):
            assert cat[rid] == [], rid
        # same-pair commutation instances exist on two strands
        assert len(cat["A2"]) == 6
        assert len(cat["C2"]) == 4 and len(cat["C1"]) == 1

    def test_three_strand_a12_instance(self):
        cat = catalog_by_id(3)
        forms = {
            tuple(str(g) for g in r.lhs) + ("=",) + tuple(str(g) for g in r.rhs)
            for r in cat["A12"]
        }
        assert ("a1", "b2", "c1", "c2", "c1", "=", "a1", "b2", "C1", "C2", "C1") in forms

    def test_four_strand_a7_instance(self):
        cat = catalog_by_id(4)
        (r,) = cat["A7"]
        assert [str(g) for g in r.lhs] == [
            "a3", "b1", "c2", "c1", "c3", "c2", "c2", "c1", "c3", "c2",
        ]
        assert [str(g) for g in r.rhs] == ["a3", "b1"]

    def test_far_commutation_absent_below_four_strands(self):
        far = [r for r in catalog_by_id(3)["A2"] if r.param("i") != r.param("n")]
        assert far == []
        far4 = [r for r in catalog_by_id(4)["A2"] if r.param("i") != r.param("n")]
        assert len(far4) == 16  # (i, n) = (1, 3), all kind pairs

    def test_a13_covers_both_twist_signs(self):
        signs = {r.param("sign") for r in catalog_by_id(3)["A13"]}
        assert signs == {1, -1}

    def test_vertex_count_conservation(self):
        for m in (2, 3, 4):
            for r in rule_catalog(m):
                if r.lhs is None:
                    continue
                for kind in "ab":
                    lhs = sum(1 for g in r.lhs if str(g)[0] == kind)
                    rhs = sum(1 for g in r.rhs if str(g)[0] == kind)
                    changed = (r.rule_id, kind) in (("A9", "a"), ("A10", "b"))
                    assert abs(lhs - rhs) == (1 if changed else 0), r


class TestApply:
    def test_a1_deletion(self):
        w = closed("[c1 C1]_2")
        rule = instantiate("A1", i=1, order=1)
        assert apply_rule_at(w, rule, 0) == closed("[]_2")

    def test_c1_rotation_both_ways(self):
        w = closed("[a2 C1 b2 c1]_3")
        c1 = instantiate("C1")
        assert apply_rule_at(w, c1, 3, "RL") == closed("[c1 a2 C1 b2]_3")
        assert apply_rule_at(w, c1, 0, "LR") == closed("[C1 b2 c1 a2]_3")

    def test_index_validation(self):
        with pytest.raises(Exception):
            closed("[c2 b2 c2^-1]_2")

    def test_no_match_reports(self):
        w = closed("[c1 c1]_2")
        rule = instantiate("A1", i=1, order=1)
        with pytest.raises(ValueError, match="does not match"):
            apply_rule_at(w, rule, 0)

    def test_c2_stabilize_destabilize(self):
        w = closed("[a1]_2")
        up = instantiate("C2", x="c")
        stabilized = apply_rule_at(w, up, 1, "LR")
        assert stabilized == closed("[a1 c2]_3")
        assert apply_rule_at(stabilized, up, 1, "RL") == w

    def test_c2_down_needs_top_strand_letter(self):
        w = closed("[c2 a1]_3")
        rule = instantiate("C2", x="a")
        with pytest.raises(ValueError):
            apply_rule_at(w, rule, 1, "RL")  # trailing a1 is not on the top pair
        w2 = closed("[c2 a2]_3")
        with pytest.raises(ValueError):
            apply_rule_at(w2, rule, 1, "RL")  # prefix c2 does not fit 2 strands

    @pytest.mark.parametrize("seed", range(30))
    def test_rules_self_invert(self, seed):
        rng = random.Random(seed)
        m = rng.choice([2, 3, 4])
        pattern_rules = [r for r in rule_catalog(m) if r.lhs is not None]
        rule = rng.choice(pattern_rules)
        prefix = parse_word(
            " ".join(rng.choice("abcC") + str(rng.randint(1, m - 1)) for _ in range(rng.randint(0, 3))),
            m,
        )
        suffix = parse_word(
            " ".join(rng.choice("abcC") + str(rng.randint(1, m - 1)) for _ in range(rng.randint(0, 3))),
            m,
        )
        from surfacebraid.words import SurfaceBraidWord

        word = prefix * SurfaceBraidWord(m, rule.lhs) * suffix
        pos = len(prefix)
        forward = apply_rule_at(word, rule, pos, "LR")
        assert apply_rule_at(forward, rule, pos, "RL") == word


class TestCertificates:
    def test_json_round_trip(self):
        start = closed("[c1 C1]_2")
        cert = RewriteCertificate(
            start.word,
            closed("[]_2").word,
            (RewriteStep(instantiate("A1", i=1, order=1), "LR", 0, 2, 0),),
            True,
            "strict",
        )
        text = certificate_to_json(cert)
        assert certificate_from_json(text) == cert

    def test_inverted_round_trip(self):
        cert = RewriteCertificate(
            closed("[c1 C1]_2").word,
            closed("[]_2").word,
            (RewriteStep(instantiate("A1", i=1, order=1), "LR", 0, 2, 0),),
            True,
            "strict",
        )
        inv = cert.inverted()
        assert inv.start == cert.end and inv.end == cert.start
        assert inv.steps[0].direction == "RL"
        assert inv.inverted() == cert
