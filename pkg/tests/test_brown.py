import itertools
import random

import pytest

from finadj import corpus
from finadj.brown import (
    ColimitAbsent,
    CoproductAbsent,
    PushoutAbsent,
    SetFunctor,
    check_B1,
    check_B1p_B2p,
    check_B2,
    hom_functor,
    representability_search,
    validate_set_functor,
    weak_generators,
)
from finadj.fincat import identity_functor
from finadj.limits import coproduct_cocones, initial_objects, pushouts

CATS = corpus.categories()


def test_representables_satisfy_B1_and_B2_on_the_diamond():
    D = CATS["diamond"]
    for a in D.objects:
        F = hom_functor(D, a)
        assert check_B1(D, F).ok, a
        assert check_B2(D, F).ok, a


def test_B1_fails_at_the_empty_coproduct():
    rep = check_B1(CATS["two"], corpus.b1_failing_on_two())
    assert not rep.ok
    assert rep.witness["family"] == []


def test_B1_checks_need_coproducts():
    with pytest.raises(CoproductAbsent):
        check_B1(CATS["wedge"], corpus.constant_singleton(CATS["wedge"]))
    with pytest.raises(CoproductAbsent):
        check_B1(CATS["disc2"], corpus.constant_singleton(CATS["disc2"]))


def test_B2_failing_fixture_reports_the_documented_square():
    rep = check_B2(CATS["two"], corpus.b2_failing_on_two())
    assert not rep.ok
    assert rep.witness["square"] == {
        "span": ["0<1", "0<1"],
        "apex": "1",
        "legs": ["id_1", "id_1"],
    }
    assert rep.witness["missing"] == ["a", "b"]


def test_B2_checks_need_pushouts():
    with pytest.raises(PushoutAbsent):
        check_B2(CATS["pp"], corpus.constant_singleton(CATS["pp"]))


# -- independent recomputation of the two conditions -------------------------


def _b1_direct(C, F):
    """Unfold the definition with no shared bijection code: build the
    product of value sets and compare image multisets."""
    for i in initial_objects(C):
        if len(F.at(i)) != 1:
            return False
    for x in C.objects:
        for y in C.objects:
            for cc in coproduct_cocones(C, x, y):
                i1, i2 = cc.legs
                image = sorted(
                    (F.restrict(i1, a), F.restrict(i2, a)) for a in F.at(cc.apex)
                )
                full = sorted(itertools.product(F.at(x), F.at(y)))
                if image != full:
                    return False
    return True


def _b2_direct(C, F):
    for f in C.morphisms:
        for g in C.morphisms:
            if f.src != g.src:
                continue
            for cc in pushouts(C, f.id, g.id):
                p, q = cc.legs
                image = {(F.restrict(p, a), F.restrict(q, a)) for a in F.at(cc.apex)}
                fiber = {
                    (b, c)
                    for b in F.at(f.dst)
                    for c in F.at(g.dst)
                    if F.restrict(f.id, b) == F.restrict(g.id, c)
                }
                if not fiber <= image:
                    return False
    return True


def _product_functor(C, F, G):
    pair = lambda a, b: f"{a}&{b}"
    on_objects = {
        x: tuple(pair(a, b) for a in F.at(x) for b in G.at(x)) for x in C.objects
    }
    on_morphisms = {
        m.id: {
            pair(a, b): pair(F.restrict(m.id, a), G.restrict(m.id, b))
            for a in F.at(m.dst)
            for b in G.at(m.dst)
        }
        for m in C.morphisms
    }
    return validate_set_functor(C, {"on_objects": on_objects, "on_morphisms": on_morphisms})


def _sum_functor(C, F, G):
    tag = lambda t, a: f"{t}.{a}"
    on_objects = {
        x: tuple(tag("l", a) for a in F.at(x)) + tuple(tag("r", b) for b in G.at(x))
        for x in C.objects
    }

    def table(m):
        out = {}
        for a in F.at(m.dst):
            out[tag("l", a)] = tag("l", F.restrict(m.id, a))
        for b in G.at(m.dst):
            out[tag("r", b)] = tag("r", G.restrict(m.id, b))
        return out

    on_morphisms = {m.id: table(m) for m in C.morphisms}
    return validate_set_functor(C, {"on_objects": on_objects, "on_morphisms": on_morphisms})


def test_checks_agree_with_direct_unfolding_on_random_functor_algebra():
    rng = random.Random(12)
    for name in ("two", "chain3", "diamond"):
        C = CATS[name]
        atoms = [hom_functor(C, a) for a in C.objects] + [corpus.constant_singleton(C)]
        for _ in range(12):
            F = atoms[rng.randrange(len(atoms))]
            G = atoms[rng.randrange(len(atoms))]
            combined = _product_functor(C, F, G) if rng.random() < 0.5 else _sum_functor(C, F, G)
            assert check_B1(C, combined).ok == _b1_direct(C, combined)
            assert check_B2(C, combined).ok == _b2_direct(C, combined)


def test_sums_of_representables_fail_B1_at_the_empty_coproduct():
    C = CATS["chain3"]
    F = _sum_functor(C, hom_functor(C, "1"), hom_functor(C, "2"))
    rep = check_B1(C, F)
    assert not rep.ok and rep.witness["family"] == []


def test_representability_search_examples():
    C = CATS["chain3"]
    res = representability_search(C, hom_functor(C, "1"))
    assert res.found and res.representing == "1"
    res = representability_search(C, corpus.constant_singleton(C))
    assert res.found and res.representing == "2"
    res = representability_search(CATS["two"], corpus.b2_failing_on_two())
    assert not res.found
    assert set(res.obstructions) == {"0", "1"}


def test_representability_components_are_the_yoneda_transformation():
    C = CATS["diamond"]
    res = representability_search(C, hom_functor(C, "a"))
    assert res.found and res.element == "id_a"
    for y in C.objects:
        for g in C.hom(y, "a"):
            assert res.components[y][g] == g


def test_weak_generators_examples():
    assert weak_generators(CATS["chain3"]) == [("1", "2")]
    assert weak_generators(CATS["one"]) == [()]
    assert weak_generators(CATS["disc2"]) == [()]


def _postcomposition_is_bijection(C, g, f):
    image = [C.compose(f, h) for h in C.hom(g, C.src(f))]
    return len(set(image)) == len(image) and set(image) == set(C.hom(g, C.dst(f)))


def test_weak_generators_detect_all_non_isos():
    for name in ("two", "chain3", "diamond", "ppe"):
        C = CATS[name]
        for gens in weak_generators(C):
            for f in C.morphisms:
                if C.is_iso(f.id):
                    continue
                assert any(
                    not _postcomposition_is_bijection(C, g, f.id) for g in gens
                ), (name, f.id)


def test_B1p_B2p_examples():
    assert check_B1p_B2p(identity_functor(CATS["diamond"])).ok
    two_to_one = corpus.monotone_functor(CATS["two"], CATS["one"], {"0": "*", "1": "*"})
    assert check_B1p_B2p(two_to_one).ok
    pick1 = corpus.functor(CATS["one"], CATS["two"], {"*": "1"})
    rep = check_B1p_B2p(pick1)
    assert not rep.ok and rep.witness["colimit"] == "empty coproduct"


def test_B1p_B2p_needs_source_colimits():
    with pytest.raises(ColimitAbsent):
        check_B1p_B2p(identity_functor(CATS["wedge"]))


def test_B1p_B2p_implies_hom_functors_satisfy_B1_B2():
    # when the image functor preserves the colimits, every represented
    # functor through it inherits both conditions
    instances = [
        identity_functor(CATS["diamond"]),
        corpus.monotone_functor(CATS["two"], CATS["one"], {"0": "*", "1": "*"}),
        corpus.monotone_functor(CATS["diamond"], CATS["two"], {"bot": "0", "a": "1", "b": "1", "top": "1"}),
    ]
    for F in instances:
        if not check_B1p_B2p(F).ok:
            continue
        C, D = F.source, F.target
        for d in D.objects:
            Yd = validate_set_functor(
                C,
                {
                    "on_objects": {c: list(D.hom(F.obj_map[c], d)) for c in C.objects},
                    "on_morphisms": {
                        m.id: {
                            g: D.compose(g, F.mor_map[m.id])
                            for g in D.hom(F.obj_map[m.dst], d)
                        }
                        for m in C.morphisms
                    },
                },
            )
            assert check_B1(C, Yd).ok, (F.obj_map, d)
            assert check_B2(C, Yd).ok, (F.obj_map, d)


def test_exhaustive_checker_is_experimental_and_bounded():
    # no claim is made beyond the enumerated range; on these two posets
    # every small functor passing both conditions happens to be
    # representable, and the report says exactly that
    from finadj.brown import exhaustive_representability_check

    rep = exhaustive_representability_check(CATS["two"], 2)
    assert rep.functors_checked > 0
    assert rep.passing_both == rep.representable
    assert rep.holds
    rep = exhaustive_representability_check(CATS["chain3"], 1)
    assert rep.holds


def test_set_functor_validation_catches_broken_tables():
    C = CATS["two"]
    with pytest.raises(Exception):
        validate_set_functor(
            C,
            {
                "on_objects": {"0": ["a"], "1": ["b"]},
                "on_morphisms": {"id_0": {"a": "a"}, "id_1": {"b": "b"}, "0<1": {"b": "zzz"}},
            },
        )
