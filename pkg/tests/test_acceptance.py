"""Acceptance criteria, one test per criterion.

Each test prints a single pass line on success; a failure raises with the
first counterexample.  Criteria with stated runtime budgets assert the
elapsed wall time as part of the criterion.
"""

import json
import time

from finadj import corpus, sweeps
from finadj.adjoint import brute_force_left_adjoint, gaft_decide, verify_adjunction
from finadj.brown import check_B1, check_B2, hom_functor, representability_search
from finadj.cli import run
from finadj.enriched import (
    classify_object,
    comparison_functor,
    enriched_comma_under,
    homotopy_adjoint_compare,
    initial_reflection_check,
    mapping_invariants,
    solution_set_invariance,
)
from finadj.fincat import functor_profile
from finadj.limits import has_finite_limits, identity_limit_cones, initial_objects
from finadj.simplicial import initial_by_lifting, nerve, tau1


def _ok(n, name):
    print(f"[acceptance] criterion {n} ({name}): PASS")


def test_criterion_1_gaft_oracle_equivalence():
    started = time.monotonic()
    posets = corpus.posets_up_to(4)
    instances = [
        (f"{i}->{j}", G)
        for i, P in enumerate(posets)
        for j, Q in enumerate(posets)
        for G in corpus.monotone_maps(P, Q)
    ]
    curated = corpus.curated_oracle_functors()
    assert len(curated) >= 20
    instances += curated
    for name, G in instances:
        decided = gaft_decide(G)
        oracle = brute_force_left_adjoint(G)
        assert decided.exists == oracle.exists, name
        if decided.exists:
            assert verify_adjunction(decided.certificate).ok, name
    elapsed = time.monotonic() - started
    assert elapsed <= 60.0, f"oracle sweep took {elapsed:.1f}s"
    _ok(1, f"gaft oracle equivalence, {len(instances)} instances, {elapsed:.1f}s")


def test_criterion_2_identity_limit_characterization():
    for name, C in sweeps.sweep_corpus_categories():
        apexes = sorted({c.apex for c in identity_limit_cones(C)})
        assert apexes == sorted(initial_objects(C)), name
    _ok(2, "identity-limit apexes equal initial objects")


def test_criterion_3_roundtrip_and_lifting():
    started = time.monotonic()
    cats = sweeps.sweep_corpus_categories()
    for name, C in cats:
        assert tau1(nerve(C)) == C, name
    for name, C in cats:
        K = nerve(C)
        lifted = {x for x in C.objects if initial_by_lifting(K, x)}
        assert lifted == set(initial_objects(C)), name
    elapsed = time.monotonic() - started
    assert elapsed <= 30.0, f"round-trip sweep took {elapsed:.1f}s"
    _ok(3, f"tau1/nerve round trip and lifting agreement, {len(cats)} categories, {elapsed:.1f}s")


def test_criterion_4_solution_set_invariance():
    checked = 0
    for name, G in corpus.enriched_functors():
        for c in G.target.objects:
            rep = solution_set_invariance(G, c)
            assert rep.enriched_has_set == rep.ordinary_has_set, (name, c)
            assert rep.transfer_down_ok, (name, c)
            assert rep.transfer_up_ok, (name, c)
            checked += 1
    _ok(4, f"solution-set invariance with witness transfer, {checked} anchors")


def test_criterion_5_divergence_fixture():
    P = corpus.pz2()
    G = corpus.pz2_pick_y()
    inv = mapping_invariants(P, "x", "y")
    assert inv.components == 1 and inv.automorphism_orders == (2,)
    cls = classify_object(P, "x")
    assert cls.initial is False and cls.h_initial is True
    rep = homotopy_adjoint_compare(G)
    assert rep.h_result.exists and not rep.full_result.exists
    _, profile = comparison_functor(G, "x")
    assert profile.surjective_on_objects and profile.full and profile.conservative
    assert not profile.equalizing_pairs
    comma = enriched_comma_under(G, "x")
    o = comma.base.objects[0]
    assert len(comma.base.hom(o, o).cells) == 2
    _ok(5, "two-object fixture reproduces all five facts")


def test_criterion_6_reflection_sweep():
    generated = sweeps.generate_reflection_functors(seed=0, count=200)
    qualifying = 0
    for name, F in generated:
        profile = functor_profile(F)
        if not (
            profile.surjective_on_objects
            and profile.full
            and profile.conservative
            and profile.equalizing_pairs
        ):
            continue
        qualifying += 1
        rep = initial_reflection_check(F)
        assert rep.applies, name
        assert rep.reflects is True, name
    assert qualifying >= 200
    cmp_functor, _ = comparison_functor(corpus.pz2_pick_y(), "x")
    rep = initial_reflection_check(cmp_functor)
    assert rep.applies is False
    assert rep.reflects is not False
    _ok(6, f"initial reflection holds on {qualifying} generated functors")


def test_criterion_7_finite_completeness_corollary():
    for name, C in sweeps.sweep_corpus_categories():
        if has_finite_limits(C).ok:
            assert initial_objects(C), name
    _ok(7, "finite completeness forces an initial object")


def test_criterion_8_brown_necessity():
    from finadj.brown import CoproductAbsent, PushoutAbsent

    swept = 0
    for name, C in sweeps.sweep_corpus_categories():
        if not initial_objects(C):
            continue
        try:
            for a in C.objects:
                F = hom_functor(C, a)
                assert check_B1(C, F).ok, (name, a)
                assert check_B2(C, F).ok, (name, a)
                res = representability_search(C, F)
                assert res.found, (name, a)
                assert res.representing == a or any(
                    C.is_iso(m) for m in C.hom(res.representing, a)
                ), (name, a)
                swept += 1
        except (CoproductAbsent, PushoutAbsent):
            continue
    assert swept > 0
    fixture = corpus.b2_failing_on_two()
    rep = check_B2(corpus.two(), fixture)
    assert not rep.ok
    assert rep.witness["square"] == {
        "span": ["0<1", "0<1"],
        "apex": "1",
        "legs": ["id_1", "id_1"],
    }
    assert not representability_search(corpus.two(), fixture).found
    _ok(8, f"Brown necessity on {swept} representables plus the designated failure")


def test_criterion_9_determinism(tmp_path):
    for suite in sweeps.SUITES:
        a = tmp_path / f"{suite}_a.json"
        b = tmp_path / f"{suite}_b.json"
        assert run(["corpus", suite, "--out", str(a)]) == 0
        assert run(["corpus", suite, "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes(), suite
        assert json.loads(a.read_text())["verdict"] == "pass", suite
    _ok(9, "corpus certificates are byte-identical across runs")
