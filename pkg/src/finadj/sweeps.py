"""Named invariant sweeps over the fixture corpus.

Each sweep returns a deterministic JSON-ready report: counts, failures,
and the first counterexample if any.  Nothing time-dependent goes into a
report, so repeated runs are byte-identical.
"""

from __future__ import annotations

import random

from . import adjoint, brown, corpus, enriched, limits, simplicial
from .fincat import (
    FinCategory,
    FinFunctor,
    build_category,
    functor_profile,
    identity_functor,
    opposite,
)

SUITES = ("posets4", "fixtures", "enriched", "oracle")


def _report(suite: str, checks: int, failures: list, details: dict) -> dict:
    return {
        "suite": suite,
        "checks": checks,
        "failures": len(failures),
        "first_counterexample": failures[0] if failures else None,
        "details": details,
    }


def sweep_corpus_categories() -> list[tuple[str, FinCategory]]:
    named = list(corpus.categories().items())
    posets = [(f"poset{i}", P) for i, P in enumerate(corpus.posets_up_to(4))]
    return named + posets


def oracle_sweep(oracle_bounds: tuple[int, int] = (4, 16)) -> dict:
    """Agreement of the comma-based decision with the brute-force oracle
    over every monotone map between posets of at most four elements, plus
    the curated non-poset instances.  Certificates are re-verified."""
    failures = []
    checks = 0
    posets = corpus.posets_up_to(4)
    instances = []
    for i, P in enumerate(posets):
        for j, Q in enumerate(posets):
            for k, G in enumerate(corpus.monotone_maps(P, Q)):
                instances.append((f"poset{i}->poset{j}#{k}", G))
    instances += corpus.curated_oracle_functors()
    for name, G in instances:
        checks += 1
        g = adjoint.gaft_decide(G)
        b = adjoint.brute_force_left_adjoint(G, *oracle_bounds)
        if g.exists != b.exists:
            failures.append({"instance": name, "reason": "existence disagreement"})
        elif g.exists and not adjoint.verify_adjunction(g.certificate).ok:
            failures.append({"instance": name, "reason": "certificate fails verification"})
    return _report(
        "oracle",
        checks,
        failures,
        {"poset_instances": len(instances) - len(corpus.curated_oracle_functors()),
         "curated_instances": len(corpus.curated_oracle_functors())},
    )


def posets4_sweep() -> dict:
    """Identity-limit, duality, round-trip, lifting, and finite-completeness
    invariants over the whole category corpus."""
    failures = []
    checks = 0
    details = {}
    cats = sweep_corpus_categories()

    for name, C in cats:
        checks += 1
        apexes = sorted({c.apex for c in limits.identity_limit_cones(C)})
        single = limits.limit_of_identity(C)
        ok = apexes == sorted(limits.initial_objects(C)) and (
            (single is None) == (not apexes)
        )
        if not ok:
            failures.append({"category": name, "invariant": "identity_limit"})

    for name, C in cats:
        checks += 1
        if simplicial.tau1(simplicial.nerve(C)) != C:
            failures.append({"category": name, "invariant": "tau1_nerve_roundtrip"})

    for name, C in cats:
        checks += 1
        N = simplicial.nerve(C)
        init = set(limits.initial_objects(C))
        lifted = {x for x in C.objects if simplicial.initial_by_lifting(N, x)}
        if init != lifted:
            failures.append({"category": name, "invariant": "initial_by_lifting"})

    for name, C in cats:
        checks += 1
        if limits.has_finite_limits(C).ok and not limits.initial_objects(C):
            failures.append({"category": name, "invariant": "finite_limits_imply_initial"})

    for name, C in cats:
        checks += 1
        if limits.initial_objects(opposite(C)) != limits.terminal_objects(C):
            failures.append({"category": name, "invariant": "opposite_duality"})

    poset_names = {name for name, _ in cats if name.startswith("poset")}
    for name, C in cats:
        if name not in poset_names:
            continue
        checks += 1
        ok = True
        for f in C.morphisms:
            for g in C.morphisms:
                if f.src != g.src:
                    continue
                if limits.weak_pushout(C, f.id, g.id) != limits.pushouts(C, f.id, g.id):
                    ok = False
        if not ok:
            failures.append({"category": name, "invariant": "poset_weak_pushouts_are_pushouts"})

    for name, G in corpus.curated_oracle_functors():
        for d in G.target.objects:
            checks += 1
            if not adjoint.comma_duality_holds(G, d):
                failures.append({"functor": name, "anchor": d, "invariant": "comma_duality"})

    details["categories"] = len(cats)
    return _report("posets4", checks, failures, details)


# -- generated functors satisfying the reflection hypotheses -----------------


def inflate(C: FinCategory, copies: list[int]) -> FinFunctor:
    """Duplicate each object the given number of times and collapse back.

    The collapse functor is surjective on objects, hom-wise bijective
    (hence full and faithful), and conservative; its source equalizes
    parallel pairs whenever C does.  This supplies arbitrarily many
    functors meeting the initial-reflection hypotheses.
    """
    names = {
        x: [f"{x}.{k}" for k in range(m)] for x, m in zip(C.objects, copies)
    }
    objects = [n for x in C.objects for n in names[x]]
    mid = lambda f, a, b: f"{f}@{a}>{b}"
    morphisms, identity, obj_map, mor_map = [], {}, {}, {}
    for x in C.objects:
        for n in names[x]:
            obj_map[n] = x
    for a in objects:
        for b in objects:
            for f in C.hom(obj_map[a], obj_map[b]):
                m = mid(f, a, b)
                morphisms.append((m, a, b))
                mor_map[m] = f
                if a == b and f == C.id_of(obj_map[a]):
                    identity[a] = m
    compose = {}
    for m, a, b in morphisms:
        for m2, b2, c in morphisms:
            if b2 != b:
                continue
            compose[(m2, m)] = mid(C.compose(mor_map[m2], mor_map[m]), a, c)
    D = build_category(objects, morphisms, identity, compose)
    return FinFunctor(D, C, obj_map, mor_map)


def reflection_pool() -> list[tuple[str, FinCategory]]:
    cats = corpus.categories()
    pool = [(n, cats[n]) for n in ("one", "disc2", "two", "chain3", "diamond", "vee", "wedge", "ppe", "idem", "iso2")]
    pool += [(f"poset{i}", P) for i, P in enumerate(corpus.posets_up_to(3))]
    return pool


def generate_reflection_functors(seed: int = 0, count: int = 200):
    """Seeded stream of functors whose profiles meet all four hypotheses."""
    rng = random.Random(seed)
    pool = reflection_pool()
    out = []
    while len(out) < count:
        name, C = pool[rng.randrange(len(pool))]
        copies = [rng.randint(1, 3) for _ in C.objects]
        if sum(copies) == 0:
            copies = [1 for _ in C.objects]
        F = inflate(C, copies)
        out.append((f"{name}x{''.join(map(str, copies))}#{len(out)}", F))
    return out


def fixtures_sweep(seed: int = 0) -> dict:
    """The divergence fixture, the reflection sweep, and the
    representability necessity checks."""
    failures = []
    checks = 0
    details = {}

    # the two-object fixture where homotopy and enriched verdicts diverge
    P = corpus.pz2()
    G = corpus.pz2_pick_y()
    checks += 1
    mi = enriched.mapping_invariants(P, "x", "y")
    if not (mi.components == 1 and mi.automorphism_orders == (2,)):
        failures.append({"fixture": "pz2", "fact": "mapping_invariants"})
    checks += 1
    cls = enriched.classify_object(P, "x")
    if not (cls.h_initial and not cls.initial):
        failures.append({"fixture": "pz2", "fact": "classification"})
    checks += 1
    cmp_report = enriched.homotopy_adjoint_compare(G)
    if not (cmp_report.h_result.exists and not cmp_report.full_result.exists):
        failures.append({"fixture": "pz2", "fact": "adjoint_divergence"})
    checks += 1
    _, profile = enriched.comparison_functor(G, "x")
    if not (
        profile.surjective_on_objects
        and profile.full
        and profile.conservative
        and not profile.equalizing_pairs
    ):
        failures.append({"fixture": "pz2", "fact": "comparison_profile"})
    checks += 1
    comma_h = enriched.homotopy_category(enriched.enriched_comma_under(G, "x").base).category
    flr = limits.has_finite_limits(comma_h)
    pair = [m for m in comma_h.nonidentity()]
    eq_missing = (
        len(comma_h.objects) == 1
        and not limits.equalizer_cones(comma_h, comma_h.id_of(comma_h.objects[0]), pair[0])
    )
    if flr.ok or not eq_missing:
        failures.append({"fixture": "pz2", "fact": "comma_incompleteness"})

    # reflection sweep
    generated = generate_reflection_functors(seed=seed, count=200)
    qualifying = 0
    for name, F in generated:
        prof = functor_profile(F)
        rep = enriched.initial_reflection_check(F)
        if not rep.applies:
            continue
        qualifying += 1
        checks += 1
        if rep.reflects is not True:
            failures.append({"functor": name, "invariant": "initial_reflection"})
    details["reflection_generated"] = len(generated)
    details["reflection_qualifying"] = qualifying
    if qualifying < 200:
        failures.append({"invariant": "reflection_sample_size", "qualifying": qualifying})
    checks += 1
    cmpF, _ = enriched.comparison_functor(corpus.pz2_pick_y(), "x")
    rep = enriched.initial_reflection_check(cmpF)
    if rep.applies or rep.reflects is False:
        failures.append({"fixture": "pz2", "invariant": "reflection_does_not_apply"})

    # representability necessity
    yoneda = 0
    for name, C in sweep_corpus_categories():
        if not limits.initial_objects(C):
            continue
        try:
            for a in C.objects:
                F = brown.hom_functor(C, a)
                checks += 1
                if not brown.check_B1(C, F).ok:
                    failures.append({"category": name, "object": a, "invariant": "B1"})
                checks += 1
                if not brown.check_B2(C, F).ok:
                    failures.append({"category": name, "object": a, "invariant": "B2"})
                checks += 1
                res = brown.representability_search(C, F)
                iso_to_a = res.found and (
                    res.representing == a
                    or any(C.is_iso(m) for m in C.hom(res.representing, a))
                )
                if not iso_to_a:
                    failures.append({"category": name, "object": a, "invariant": "yoneda"})
                yoneda += 1
        except (brown.CoproductAbsent, brown.PushoutAbsent):
            continue
    details["yoneda_objects"] = yoneda

    checks += 1
    b2f = brown.check_B2(corpus.two(), corpus.b2_failing_on_two())
    expected_square = {"span": ["0<1", "0<1"], "apex": "1", "legs": ["id_1", "id_1"]}
    if b2f.ok or b2f.witness["square"] != expected_square:
        failures.append({"fixture": "b2_failing", "invariant": "documented_square"})
    checks += 1
    if brown.check_B1(corpus.two(), corpus.b1_failing_on_two()).ok:
        failures.append({"fixture": "b1_failing", "invariant": "B1_fails"})
    checks += 1
    if brown.representability_search(corpus.two(), corpus.b2_failing_on_two()).found:
        failures.append({"fixture": "b2_failing", "invariant": "not_representable"})

    return _report("fixtures", checks, failures, details)


def enriched_sweep() -> dict:
    """Solution-set invariance, embedding agreement, homotopy functoriality,
    and classification implications over the enriched corpus."""
    failures = []
    checks = 0
    details = {}
    efs = corpus.enriched_functors()

    for name, G in efs:
        for c in G.target.objects:
            checks += 1
            r = enriched.solution_set_invariance(G, c)
            if not (
                r.enriched_has_set == r.ordinary_has_set
                and r.transfer_down_ok
                and r.transfer_up_ok
            ):
                failures.append({"functor": name, "anchor": c, "invariant": "solution_set_invariance"})

    for name, G in efs:
        checks += 1
        full = enriched.gaft_fin_decide(G)
        h = adjoint.gaft_decide(enriched.homotopy_functor(G))
        if name.startswith("embed") and full.exists != h.exists:
            failures.append({"functor": name, "invariant": "embedding_agreement"})

    cats = corpus.categories()
    for name in ("one", "two", "chain3", "diamond", "iso2", "z2", "pp", "free_boundary"):
        checks += 1
        C = cats[name]
        h = enriched.homotopy_category(enriched.embed(C))
        if h.category != C:
            failures.append({"category": name, "invariant": "homotopy_of_embedding"})

    # homotopy construction is functorial on composable corpus pairs
    pairs = [
        ("embed", corpus.monotone_functor(cats["two"], cats["chain3"], {"0": "0", "1": "2"}),
         corpus.monotone_functor(cats["chain3"], cats["two"], {"0": "0", "1": "1", "2": "1"})),
    ]
    for name, F1, F2 in pairs:
        checks += 1
        G1, G2 = enriched.embed_functor(F1), enriched.embed_functor(F2)
        lhs = enriched.homotopy_functor(enriched.compose_gfunctors(G2, G1))
        rhs_src = enriched.homotopy_functor(G1)
        rhs_tgt = enriched.homotopy_functor(G2)
        composed = {
            "obj": {x: rhs_tgt.obj_map[y] for x, y in rhs_src.obj_map.items()},
            "mor": {m: rhs_tgt.mor_map[n] for m, n in rhs_src.mor_map.items()},
        }
        if lhs.obj_map != composed["obj"] or lhs.mor_map != composed["mor"]:
            failures.append({"pair": name, "invariant": "homotopy_functoriality"})

    gcat_instances = [("pz2", corpus.pz2()), ("disc_gpd", corpus.disc_gpd())] + [
        (f"embed_{n}", enriched.embed(cats[n])) for n in ("chain3", "iso2", "z2")
    ]
    for name, GC in gcat_instances:
        for x in GC.objects:
            checks += 1
            cls = enriched.classify_object(GC, x)
            if (cls.initial and not cls.h_initial) or (
                cls.h_initial and not cls.weakly_initial_singleton
            ):
                failures.append({"gcat": name, "object": x, "invariant": "classification_chain"})

    for name, G in efs:
        for c in G.target.objects:
            checks += 1
            try:
                enriched.comparison_functor(G, c)
            except enriched.InvariantViolation:
                failures.append({"functor": name, "anchor": c, "invariant": "comparison_construction"})

    details["enriched_functors"] = len(efs)
    return _report("enriched", checks, failures, details)


def run_suite(suite: str, seed: int = 0, oracle_bounds: tuple[int, int] = (4, 16)) -> dict:
    if suite == "posets4":
        return posets4_sweep()
    if suite == "fixtures":
        return fixtures_sweep(seed=seed)
    if suite == "enriched":
        return enriched_sweep()
    if suite == "oracle":
        return oracle_sweep(oracle_bounds)
    raise ValueError(f"unknown suite {suite!r}")
