"""Nerves, cones, fundamental categories, and lifting-based initiality.

Everything stays truncated at dimension 3, which is enough to recover a
category from its nerve and to decide initiality by boundary extensions.
"""

from finadj import corpus
from finadj.limits import initial_objects
from finadj.simplicial import (
    boundary_simplex,
    initial_by_lifting,
    join_point,
    isomorphic,
    nerve,
    standard_simplex,
    tau1,
    vertex_slice,
)


def main():
    cats = corpus.categories()
    chain3 = cats["chain3"]

    K = nerve(chain3)
    print("nerve of the three-chain, simplices per dimension:",
          [len(K.ids(n)) for n in range(4)])
    print("round trip through the fundamental category is exact:",
          tau1(K) == chain3)

    boundary = boundary_simplex(2)
    T = tau1(boundary)
    print("\nfundamental category of the empty triangle: hom(0, 2) =",
          list(T.hom("0", "2")), "(no relation merges the two paths)")
    print("filling the triangle collapses them:",
          [len(tau1(standard_simplex(2)).hom('0', '2'))])

    cone = join_point(nerve(cats["two"]))
    print("\ncone over the arrow is the three-chain nerve:",
          isomorphic(cone.sset, K))

    sl = vertex_slice(K, "2")
    print("slice at the top vertex matches the nerve up to dimension 2:",
          [len(sl.ids(n)) for n in range(3)])

    print("\nlifting-based initiality against the direct search:")
    for name in ("chain3", "free_boundary", "iso2", "z2"):
        C = cats[name]
        N = nerve(C)
        lifted = sorted(x for x in C.objects if initial_by_lifting(N, x))
        print(f"  {name:14s} lifting {lifted} == search {sorted(initial_objects(C))}")


if __name__ == "__main__":
    main()
