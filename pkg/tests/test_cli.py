import json

import pytest

from surfacebraid.cli import EXIT_OK, EXIT_UNKNOWN, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEquiv:
    def test_one_step_certificate(self, capsys):
        code, out, _ = run(capsys, "equiv", "[c1 C1]_2", "[]_2")
        assert code == EXIT_OK
        assert "equivalent in 1 steps" in out

    def test_unknown_exit_code(self, capsys):
        code, out, _ = run(capsys, "equiv", "[a1 b1]_2", "[c1]_2", "--max-exp", "1000")
        assert code == EXIT_UNKNOWN
        assert "unknown" in out

    def test_certificate_round_trip_through_replay(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        code, out, _ = run(
            capsys, "equiv", "[c1 C1]_2", "[]_2", "--output", str(path)
        )
        assert code == EXIT_OK
        code, out, _ = run(capsys, "replay", str(path))
        assert code == EXIT_OK and "valid" in out

    def test_rule_restriction(self, capsys):
        code, out, _ = run(
            capsys,
            "--json",
            "equiv",
            "a2 C1 b2 c1 delta(3,1)^2".join(["[", "]_3"]),
            "[a2 C1 b2 c1]_3",
            "--rules",
            ",".join(f"A{i}" for i in range(1, 14)),
        )
        assert code == EXIT_OK
        data = json.loads(out)
        used = {s["rule"] for s in data["certificate"]["steps"]}
        assert "A14" not in used


class TestSubcommands:
    def test_dnk_counts(self, capsys):
        code, out, _ = run(capsys, "dnk", "--n", "2", "--k", "3")
        assert code == EXIT_OK
        assert "18 crossings" in out and "2 components" in out

    def test_dnk_json_pd(self, capsys):
        code, out, _ = run(capsys, "--json", "dnk", "--n", "2", "--k", "5", "--emit-pd")
        data = json.loads(out)
        assert data["crossings"] == 22
        assert data["pd"].count("X[") == 22

    def test_normalize(self, capsys):
        code, out, _ = run(capsys, "normalize", "--strands", "2", "a1 b1 c1 c1 c1")
        assert code == EXIT_OK
        assert "[a1 b1 c1]_2" in out

    def test_euler(self, capsys):
        code, out, _ = run(capsys, "euler", "--strands", "2", "a1 b1")
        assert code == EXIT_OK
        assert "chi = 0" in out

    def test_csb_check(self, capsys):
        code, out, _ = run(capsys, "csb-check", "--strands", "2", "c1^3")
        assert code == EXIT_OK
        assert out.count("nontrivial") == 2

    def test_twist_spin(self, capsys):
        code, out, _ = run(
            capsys, "twist-spin", "--tangle", "C1", "--strands", "3", "--twists", "1"
        )
        assert code == EXIT_OK
        assert "[a2 C1 b2 c1 c1 c2 c1 c1 c2 c1]_3" in out

    def test_resolve(self, capsys):
        code, out, _ = run(capsys, "--json", "resolve", "--sign", "+", "--strands", "2", "a1 b1")
        data = json.loads(out)
        assert data["tangle"] == "e1"
        assert data["components"] == 1

    def test_simplify_word_input(self, capsys):
        code, out, _ = run(
            capsys, "simplify", "--moves", "r2", "--strands", "2", "s1 S1"
        )
        assert code == EXIT_OK
        assert "R2=1" in out

    def test_simplify_unknown(self, capsys):
        code, out, _ = run(
            capsys, "simplify", "--moves", "r1,r2,r3", "--strands", "2",
            "--max-exp", "500", "s1 s1 s1"
        )
        assert code == EXIT_UNKNOWN

    def test_classify_small(self, capsys):
        code, out, _ = run(capsys, "classify", "--max-len", "2")
        assert code == EXIT_OK
        assert "[a1 b1]_2" in out

    def test_parse_error_exit(self, capsys):
        code, out, err = run(capsys, "euler", "--strands", "2", "q9")
        assert code == 2
        assert "parse error" in err
