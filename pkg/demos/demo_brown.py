"""Representability at desk scale.

Representable set-valued functors send coproducts to products bijectively
and pushouts to weak pullbacks surjectively.  The engine checks those two
necessity conditions and decides representability itself by searching over
universal elements, never by inferring it from the conditions.
"""

from finadj import corpus
from finadj.brown import (
    check_B1,
    check_B1p_B2p,
    check_B2,
    exhaustive_representability_check,
    hom_functor,
    representability_search,
    weak_generators,
)
from finadj.fincat import identity_functor


def main():
    diamond = corpus.diamond()
    two = corpus.two()

    print("representables on the diamond lattice:")
    for a in diamond.objects:
        F = hom_functor(diamond, a)
        found = representability_search(diamond, F)
        print(f"  hom(-, {a}): B1 {check_B1(diamond, F).ok}, "
              f"B2 {check_B2(diamond, F).ok}, search finds {found.representing!r}")

    print("\nthe designated failure on the arrow poset:")
    bad = corpus.b2_failing_on_two()
    rep = check_B2(two, bad)
    print("  B2 verdict:", rep.ok, "witness square:", rep.witness["square"])
    print("  missing fiber element:", rep.witness["missing"])
    print("  representable:", representability_search(two, bad).found)

    print("\nweak generators:")
    for name in ("chain3", "one", "disc2", "diamond"):
        print(f"  {name:8s} ->", weak_generators(corpus.categories()[name]))

    print("\ncolimit preservation (empty coproducts, coproducts, weak pushouts):")
    print("  identity on the diamond:", check_B1p_B2p(identity_functor(diamond)).ok)
    pick_top = corpus.functor(corpus.one(), two, {"*": "1"})
    print("  point at the top of the arrow:", check_B1p_B2p(pick_top))

    print("\nexperimental exhaustive sweep over tiny functors:")
    report = exhaustive_representability_check(two, 2)
    print(f"  checked {report.functors_checked}, both conditions {report.passing_both}, "
          f"representable {report.representable}")


if __name__ == "__main__":
    main()
