"""End-to-end tests of the command-line interface.

Everything goes through ``main(argv)`` so exit codes are the returned
ints and output is captured with capsys.
"""

import json

import pytest

from inpk.cli import main
from inpk.formula import parse, render
from inpk.proofs import check, proof_from_json
from inpk.semantics import LogicParams, is_tautology


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


# -- parse -------------------------------------------------------------


def test_parse_prints_primitive_form(capsys):
    rc, out, _ = run(capsys, "parse", "p || q")
    assert rc == 0
    assert out.strip() == "!p -> q"


def test_parse_json(capsys):
    rc, out, _ = run(capsys, "--json", "parse", "p && q")
    assert rc == 0
    doc = json.loads(out)
    assert parse(doc["formula"]) is parse("p && q")


def test_parse_syntax_error_is_usage_exit(capsys):
    rc, _, err = run(capsys, "parse", "p ->")
    assert rc == 2
    assert "syntax error" in err


# -- table -------------------------------------------------------------


def test_table_json_shape(capsys):
    rc, out, _ = run(
        capsys, "--json", "table", "--n", "1", "--k", "0", "--connective", "imp"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["values"] == ["F0", "F1", "T0"]
    # row F0 (non-designated antecedent): always T0
    assert doc["entries"][0] == ["T0", "T0", "T0"]
    # row T0: designated antecedent, output tracks consequent designation
    assert doc["entries"][2] == ["F0", "F0", "T0"]


def test_table_text_has_all_values(capsys):
    rc, out, _ = run(capsys, "table", "--n", "0", "--k", "1", "--connective", "neg")
    assert rc == 0
    for v in ("F0", "T0", "T1"):
        assert v in out


def test_table_unknown_connective_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--n", "0", "--k", "0", "--connective", "xor"])
    assert exc.value.code == 2


# -- eval --------------------------------------------------------------


def test_eval_value(capsys):
    rc, out, _ = run(
        capsys, "eval", "--n", "1", "--k", "0", "--val", "p=F1", "!p"
    )
    assert rc == 0
    assert out.strip() == "F0"


def test_eval_two_atoms(capsys):
    rc, out, _ = run(
        capsys,
        "eval", "--n", "1", "--k", "1", "--val", "p=T1, q=F0", "p -> q",
    )
    assert rc == 0
    assert out.strip() == "F0"


def test_eval_missing_atom_is_usage_error(capsys):
    rc, _, err = run(capsys, "eval", "--n", "0", "--k", "0", "--val", "p=T0", "q")
    assert rc == 2
    assert "q" in err


def test_eval_value_out_of_range_is_usage_error(capsys):
    rc, _, err = run(capsys, "eval", "--n", "0", "--k", "0", "--val", "p=F3", "p")
    assert rc == 2


# -- taut / entails ----------------------------------------------------


def test_taut_counterexample_exact_output(capsys):
    rc, out, _ = run(capsys, "taut", "--n", "1", "--k", "0", "!p | p")
    assert rc == 1
    assert out.strip() == "counterexample: p=F1"


def test_taut_valid(capsys):
    rc, out, _ = run(capsys, "taut", "--n", "2", "--k", "2", "p -> p")
    assert rc == 0
    assert out.strip() == "valid"


def test_taut_json_counterexample(capsys):
    rc, out, _ = run(capsys, "--json", "taut", "--n", "1", "--k", "0", "!p | p")
    assert rc == 1
    doc = json.loads(out)
    assert doc == {"valid": False, "counterexample": {"p": "F1"}}


def test_entails_with_hypotheses(capsys):
    rc, out, _ = run(
        capsys,
        "entails", "--n", "1", "--k", "1",
        "--hyp", "p -> q", "--hyp", "p", "q",
    )
    assert rc == 0
    assert out.strip() == "valid"


def test_entails_failure_reports_counterexample(capsys):
    rc, out, _ = run(
        capsys, "entails", "--n", "0", "--k", "0", "--hyp", "p", "q"
    )
    assert rc == 1
    assert out.startswith("counterexample: ")


def test_param_capacity_error(capsys):
    rc, _, err = run(capsys, "taut", "--n", "17", "--k", "0", "p")
    assert rc == 2
    assert "capped" in err


def test_negative_param_is_usage_error(capsys):
    rc, _, err = run(capsys, "taut", "--n", "-1", "--k", "0", "p")
    assert rc == 2


# -- compare -----------------------------------------------------------


def test_compare_incomparable(capsys):
    rc, out, _ = run(capsys, "compare", "1", "0", "0", "1")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "incomparable"
    # separable in both directions, so two witnesses
    assert len(lines) == 3
    assert all(ln.startswith("witness: ") for ln in lines[1:])


def test_compare_below_with_verified_witness(capsys):
    rc, out, _ = run(capsys, "--json", "compare", "2", "1", "1", "0")
    assert rc == 0
    doc = json.loads(out)
    assert doc["order"] == "below"
    assert len(doc["witnesses"]) == 1
    w = doc["witnesses"][0]
    f = parse(w["formula"])
    assert bool(is_tautology(LogicParams(*w["valid_in"]), f))
    assert not is_tautology(LogicParams(*w["refuted_in"]), f)


def test_compare_equal_has_no_witness(capsys):
    rc, out, _ = run(capsys, "compare", "1", "1", "1", "1")
    assert rc == 0
    assert out.strip() == "equal"


def test_compare_above(capsys):
    rc, out, _ = run(capsys, "compare", "0", "0", "2", "1")
    assert rc == 0
    assert out.strip().splitlines()[0] == "above"


# -- prove / check pipeline --------------------------------------------


def test_prove_check_roundtrip(tmp_path, capsys):
    path = tmp_path / "proof.json"
    rc, out, _ = run(
        capsys, "prove", "--n", "0", "--k", "0", "p -> p", "-o", str(path)
    )
    assert rc == 0
    assert str(path) in out

    rc, out, _ = run(capsys, "check", str(path))
    assert rc == 0
    assert out.strip() == "accepted"

    pf = proof_from_json(path.read_text())
    assert pf.conclusion is parse("p -> p")


def test_prove_json_stdout_is_a_checking_proof(capsys):
    rc, out, _ = run(capsys, "--json", "prove", "--n", "0", "--k", "1", "~p | p")
    assert rc == 0
    pf = proof_from_json(out)
    assert check(pf)
    assert pf.conclusion is parse("~p | p")
    assert pf.hypotheses == ()


def test_prove_non_tautology_counterexample(capsys):
    rc, out, _ = run(capsys, "prove", "--n", "1", "--k", "0", "!p | p")
    assert rc == 1
    assert out.strip() == "counterexample: p=F1"


def test_prove_text_listing_without_output_file(capsys):
    rc, out, _ = run(capsys, "prove", "--n", "0", "--k", "0", "p -> p")
    assert rc == 0
    assert out.startswith("logic: (0,0)")
    assert "1." in out


def test_check_tampered_proof_rejected(tmp_path, capsys):
    path = tmp_path / "proof.json"
    rc, _, _ = run(
        capsys, "prove", "--n", "0", "--k", "0", "p -> p", "-o", str(path)
    )
    assert rc == 0
    doc = json.loads(path.read_text())
    doc["lines"][-1]["formula"] = "p -> q"
    path.write_text(json.dumps(doc))

    rc, out, _ = run(capsys, "check", str(path))
    assert rc == 1
    assert out.startswith("rejected line ")


def test_check_malformed_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    rc, _, err = run(capsys, "check", str(path))
    assert rc == 2
    assert "bad proof file" in err


def test_check_missing_file_is_usage_error(capsys):
    rc, _, err = run(capsys, "check", "/no/such/file.json")
    assert rc == 2


# -- dt ----------------------------------------------------------------


def _hyp_proof_doc():
    return {
        "logic": {"n": 1, "k": 1},
        "hypotheses": ["p"],
        "lines": [{"formula": "p", "just": {"kind": "hyp", "index": 0}}],
    }


def test_dt_discharges_hypothesis(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text(json.dumps(_hyp_proof_doc()))
    dst = tmp_path / "out.json"
    rc, _, _ = run(capsys, "dt", str(src), "--discharge", "0", "-o", str(dst))
    assert rc == 0
    pf = proof_from_json(dst.read_text())
    assert pf.conclusion is parse("p -> p")
    assert pf.hypotheses == ()
    assert check(pf)


def test_dt_bad_index_is_usage_error(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text(json.dumps(_hyp_proof_doc()))
    rc, _, err = run(capsys, "dt", str(src), "--discharge", "3")
    assert rc == 2
    assert "out of range" in err


def test_dt_rejects_broken_input_proof(tmp_path, capsys):
    doc = _hyp_proof_doc()
    doc["lines"][0]["formula"] = "q"  # does not match the hypothesis
    src = tmp_path / "in.json"
    src.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, "dt", str(src), "--discharge", "0")
    assert rc == 1
    assert "does not check" in out
