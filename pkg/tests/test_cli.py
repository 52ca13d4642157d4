import json

import pytest

from finadj import corpus
from finadj.cli import run
from finadj.enriched import gcat_to_dict
from finadj.simplicial import boundary_simplex


@pytest.fixture
def files(tmp_path):
    paths = {}

    def write(name, payload):
        p = tmp_path / name
        p.write_text(json.dumps(payload), encoding="utf-8")
        paths[name] = str(p)
        return str(p)

    write("chain3.json", corpus.chain3().to_dict())
    write("pp.json", corpus.pp().to_dict())
    G = corpus.monotone_functor(corpus.chain3(), corpus.two(), {"0": "0", "1": "1", "2": "1"})
    write("g.json", G.to_dict())
    bad = corpus.functor(corpus.one(), corpus.disc2(), {"*": "x"})
    write("no_adjoint.json", bad.to_dict())
    write("pz2.json", gcat_to_dict(corpus.pz2()))
    write("boundary2.json", boundary_simplex(2).to_dict())
    write("setf.json", corpus.b2_failing_on_two().to_dict())
    write("two.json", corpus.two().to_dict())
    return tmp_path, paths, write


def _run_to(tmp_path, argv):
    out = tmp_path / "out.json"
    code = run(argv + ["--out", str(out)])
    return code, json.loads(out.read_text(encoding="utf-8")) if out.exists() else None


def test_gaft_emits_adjoint_certificate(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["gaft", "--functor", paths["g.json"]])
    assert code == 0
    assert cert["verdict"] == "exists"
    body = cert["witness"]
    assert list(body)[:4] == ["verdict", "left_adjoint", "unit", "witness_failure"]
    assert body["left_adjoint"]["obj_map"] == {"0": "0", "1": "1"}
    assert cert["provenance"]["operation"] == "gaft_decide"
    assert len(cert["provenance"]["inputs"]["functor"]["sha256"]) == 64


def test_gaft_negative_verdict_still_exits_zero(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["gaft", "--functor", paths["no_adjoint.json"]])
    assert code == 0
    assert cert["verdict"] == "none"
    assert cert["witness"]["witness_failure"] == {"anchor": "y"}


def test_classify_verb_matches_fixture(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["classify", "--gcat", paths["pz2.json"], "--object", "x"])
    assert code == 0
    assert cert["verdict"] == {
        "initial": False,
        "h_initial": True,
        "weakly_initial_singleton": True,
    }


def test_tau1_verb_counts_the_two_diagonals(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["tau1", "--sset", paths["boundary2.json"]])
    assert code == 0
    mors = cert["witness"]["category"]["morphisms"]
    assert sum(1 for m in mors if m["src"] == "0" and m["dst"] == "2") == 2


def test_nerve_and_validate_verbs(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["nerve", "--category", paths["chain3.json"]])
    assert code == 0
    assert len(cert["witness"]["sset"]["simplices"]["2"]) == 1
    code, cert = _run_to(tmp_path, ["validate", "--category", paths["chain3.json"]])
    assert code == 0 and cert["verdict"] == "valid"


def test_validate_reports_invalid_without_failing(files):
    tmp_path, paths, write = files
    broken = corpus.chain3().to_dict()
    broken["identities"].pop("0")
    write("broken.json", broken)
    code, cert = _run_to(tmp_path, ["validate", "--category", paths["broken.json"]])
    assert code == 0
    assert cert["verdict"] == "invalid"
    assert cert["witness"]["error"] == "IdentityViolation"


def test_parse_errors_exit_two(files, capsys):
    tmp_path, paths, write = files
    p = tmp_path / "junk.json"
    p.write_text("{not json", encoding="utf-8")
    assert run(["gaft", "--functor", str(p)]) == 2
    err = capsys.readouterr().err
    assert "line" in err and "column" in err
    missing = write("missing_key.json", {"objects": []})
    assert run(["initial", "--category", missing]) == 2


def test_bound_errors_exit_three(files):
    tmp_path, paths, write = files
    circle = write(
        "circle.json",
        {"simplices": {"0": ["v"], "1": ["e"], "2": [], "3": []}, "faces": {"e": ["v", "v"]}},
    )
    assert run(["tau1", "--sset", circle, "--closure-bound", "32"]) == 3


def test_adjoint_verb_runs_the_oracle(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["adjoint", "--functor", paths["g.json"]])
    assert code == 0
    assert cert["verdict"] == "exists"
    assert len(cert["witness"]["pairs"]) == 1


def test_limits_and_initial_verbs(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(tmp_path, ["limits", "--category", paths["pp.json"]])
    assert code == 0 and cert["verdict"] is False
    assert cert["witness"]["completeness"] == "finite"
    code, cert = _run_to(tmp_path, ["initial", "--category", paths["chain3.json"]])
    assert cert["verdict"] == ["0"]
    assert cert["witness"]["terminal_objects"] == ["2"]


def test_brown_verbs(files):
    tmp_path, paths, _ = files
    code, cert = _run_to(
        tmp_path,
        ["brown", "--category", paths["two.json"], "--setfunctor", paths["setf.json"], "--check", "b2"],
    )
    assert code == 0 and cert["verdict"] is False
    code, cert = _run_to(
        tmp_path,
        ["brown", "--category", paths["two.json"], "--setfunctor", paths["setf.json"]],
    )
    assert cert["verdict"] == "not-representable"
    code, cert = _run_to(
        tmp_path, ["brown", "--check", "generators", "--category", paths["chain3.json"]]
    )
    assert cert["verdict"] == [["1", "2"]]


def test_gaft_fin_and_compare_verbs(files, tmp_path):
    from finadj.corpus import pz2_pick_y

    G = pz2_pick_y()
    raw = {
        "source": gcat_to_dict(G.source),
        "target": gcat_to_dict(G.target),
        "obj_map": G.obj_map,
        "cell_map": G.cell_map,
        "arrow_map": G.arrow_map,
    }
    p = tmp_path / "gf.json"
    p.write_text(json.dumps(raw), encoding="utf-8")
    code, cert = _run_to(tmp_path, ["gaft-fin", "--gfunctor", str(p)])
    assert code == 0 and cert["verdict"] == "none"
    code, cert = _run_to(tmp_path, ["compare", "--gfunctor", str(p)])
    assert cert["verdict"]["h_adjoint"] == "exists"
    assert cert["verdict"]["full_adjoint"] == "none"
    assert cert["verdict"]["consistent"] == "not-applicable"


def test_certificates_are_byte_identical_across_runs(files):
    tmp_path, paths, _ = files
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["gaft", "--functor", paths["g.json"], "--out", str(a)]) == 0
    assert run(["gaft", "--functor", paths["g.json"], "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_corpus_verb_summarizes_a_suite(files):
    tmp_path, _, _ = files
    code, cert = _run_to(tmp_path, ["corpus", "enriched"])
    assert code == 0
    assert cert["verdict"] == "pass"
    assert cert["witness"]["failures"] == 0
    assert cert["witness"]["first_counterexample"] is None
