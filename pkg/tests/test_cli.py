import json

import pytest

from superkit.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestValidate:
    def test_builtin_pair(self, capsys):
        code, out, _ = run(capsys, ["validate", "gl11"])
        assert code == 0
        assert "PASS" in out

    def test_json_mode(self, capsys):
        code, out, _ = run(capsys, ["--json", "validate", "gl21"])
        assert code == 0
        data = json.loads(out)
        assert data["holds"] is True
        assert data["failures"] == []

    def test_file_fixture(self, capsys):
        code, out, _ = run(capsys, ["validate", "fixtures/gl21.pair.json"])
        assert code == 0
        assert "PASS" in out

    def test_unknown_fixture_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["validate", "nope"])
        assert code == 2
        assert "error" in err.lower()


class TestNormalForm:
    ARGS = ["nf", "gl11", "e(a1,v-) e(a2,v+)", "--coeffs", "Lambda(a1,a2)"]

    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, self.ARGS)
        assert code == 0
        assert "even[0][0] = 1 - a1*a2" in out
        assert "odd v+ = a2" in out
        assert "odd v- = a1" in out

    def test_oracle_flag(self, capsys):
        code, out, _ = run(capsys, self.ARGS + ["--check-oracle"])
        assert code == 0
        assert "oracle: ok" in out

    def test_strategies_same_output(self, capsys):
        out_l = run(capsys, self.ARGS + ["--strategy", "leftmost"])[1]
        out_r = run(capsys, self.ARGS + ["--strategy", "rightmost"])[1]
        assert out_l == out_r

    def test_group_token_and_f_token(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "nf",
                "gl11",
                "g[[2,0],[0,1]] e(a1,v+) f(a1*a2,x1)",
                "--coeffs",
                "Lambda(a1,a2)",
            ],
        )
        assert code == 0
        assert "odd v+" in out

    def test_bad_word_is_usage_error(self, capsys):
        code, _, err = run(
            capsys, ["nf", "gl11", "e(a1,zz)", "--coeffs", "Lambda(a1)"]
        )
        assert code == 2
        assert "zz" in err

    def test_bad_coefficient_algebra(self, capsys):
        code, _, _ = run(
            capsys, ["nf", "gl11", "e(a1,v+)", "--coeffs", "Poly(a1)"]
        )
        assert code == 2


class TestGr:
    def test_builtin_filtered(self, capsys):
        code, out, _ = run(capsys, ["gr", "Lambda2"])
        assert code == 0
        assert "degree dims: 0:1 1:2 2:1" in out
        assert "gr well defined: PASS" in out

    def test_tensor_iso(self, capsys):
        code, out, _ = run(capsys, ["gr", "Lambda2", "--with", "dual"])
        assert code == 0
        assert "gr tensor iso with dual: PASS" in out

    def test_file_fixture(self, capsys):
        code, out, _ = run(capsys, ["gr", "fixtures/grassmann2.alg.json"])
        assert code == 0
        assert "gr well defined: PASS" in out

    def test_json_mode(self, capsys):
        code, out, _ = run(capsys, ["--json", "gr", "Lambda3"])
        assert code == 0
        data = json.loads(out)
        assert data["degree_dims"] == {"0": 1, "1": 3, "2": 3, "3": 1}


class TestRadical:
    def test_pseudoabelian_full(self, capsys):
        code, out, _ = run(
            capsys, ["radical", "pseudoabelian", "--lie-r", "full"]
        )
        assert code == 0
        assert "W_R dim 2" in out
        assert "Lie(H_R) dim 1" in out

    def test_zero_r(self, capsys):
        code, out, _ = run(capsys, ["radical", "pseudoabelian", "--lie-r", "zero"])
        assert code == 0
        assert "W_R dim 0" in out

    def test_explicit_rows_with_oracle(self, capsys):
        code, out, _ = run(
            capsys,
            ["radical", "gl11", "--lie-r", "[[1,1]]", "--check-oracle"],
        )
        assert code == 0
        assert "W_R dim 2" in out
        assert "oracle: ok" in out

    def test_bad_rows(self, capsys):
        code, _, _ = run(capsys, ["radical", "gl11", "--lie-r", "[[1,1,1]]"])
        assert code == 2


class TestHypDecompose:
    def test_pure_gamma(self, capsys):
        code, out, _ = run(
            capsys,
            ["--field", "p=3", "hyp-decompose", "add3xL1", "0,1,0,0,0,0"],
        )
        assert code == 0
        assert "phi[1]*g1 : 1" in out
        assert "roundtrip: PASS" in out

    def test_wrong_length(self, capsys):
        code, _, _ = run(
            capsys, ["--field", "p=3", "hyp-decompose", "add3xL1", "0,1"]
        )
        assert code == 2


class TestAxioms:
    def test_grassmann_passes(self, capsys):
        code, out, _ = run(capsys, ["axioms", "L2"])
        assert code == 0
        assert "PASS" in out

    def test_char0_truncation_fails(self, capsys):
        code, out, _ = run(capsys, ["axioms", "add3"])
        assert code == 1
        assert "FAIL" in out

    def test_char_p_truncation_passes(self, capsys):
        code, out, _ = run(capsys, ["--field", "p=3", "axioms", "add3"])
        assert code == 0

    def test_file_fixture(self, capsys):
        code, out, _ = run(capsys, ["axioms", "fixtures/grassmann3.hopf.json"])
        assert code == 0
        assert "PASS" in out


class TestCoinvariants:
    def test_regular_is_trivial_line(self, capsys):
        code, out, _ = run(capsys, ["coinvariants", "L2"])
        assert code == 0
        assert "coinvariants dim 1" in out
        assert "alpha surjective: True" in out

    def test_trivial_mode(self, capsys):
        code, out, _ = run(capsys, ["coinvariants", "L2", "--mode", "trivial"])
        assert code == 0
        assert "coinvariants dim 4" in out
        assert "alpha surjective: False" in out


class TestFieldOption:
    def test_char2_rejected(self, capsys):
        code, _, _ = run(capsys, ["--field", "p=2", "validate", "gl11"])
        assert code == 2

    def test_nonprime_rejected(self, capsys):
        code, _, _ = run(capsys, ["--field", "p=6", "validate", "gl11"])
        assert code == 2

    def test_f5_validate(self, capsys):
        code, out, _ = run(capsys, ["--field", "p=5", "validate", "gl11"])
        assert code == 0
        assert "PASS" in out
