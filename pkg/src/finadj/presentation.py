"""Closure of finitely presented categories.

A presentation lists objects, generating morphisms, and equations between
parallel generator paths.  The closure materializes the quotient of the free
category on the generators by the congruence those equations generate, and
aborts once the number of distinct morphisms passes a configurable bound
(free categories on graphs with directed cycles are infinite).

The algorithm is a worklist variant of coset enumeration.  Morphisms are
equivalence classes of paths, kept in a union-find structure together with a
deterministic right-multiplication table (class, generator) -> class.  Every
equation is enforced at every class whose target matches the equation's
source object; right contexts are covered by the determinism of the table,
left contexts by that enforcement loop.  Merges propagate through the table
until nothing changes, at which point the table is a total, associative
composition law and the classes are exactly the congruence classes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fincat import (
    ClosureBoundExceeded,
    FinCategory,
    MissingComposite,
    UnknownObject,
    build_category,
)

Path = tuple[str, ...]
Relation = tuple[str, Path, Path]  # (source object, lhs path, rhs path)


class _Closure:
    def __init__(self, bound: int):
        self.bound = bound
        self.parent: list[int] = []
        self.src: list[str] = []
        self.dst: list[str] = []
        self.witness: list[Path] = []
        self.step: list[dict[str, int]] = []
        self.live = 0

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def new_class(self, src: str, dst: str, witness: Path) -> int:
        idx = len(self.parent)
        self.parent.append(idx)
        self.src.append(src)
        self.dst.append(dst)
        self.witness.append(witness)
        self.step.append({})
        self.live += 1
        if self.live > self.bound:
            raise ClosureBoundExceeded(
                f"closure generated more than {self.bound} distinct morphisms"
            )
        return idx

    def multiply(self, cls: int, gen: str, gen_dst: dict[str, str]) -> int:
        cls = self.find(cls)
        nxt = self.step[cls].get(gen)
        if nxt is not None:
            return self.find(nxt)
        idx = self.new_class(self.src[cls], gen_dst[gen], self.witness[cls] + (gen,))
        self.step[cls][gen] = idx
        return idx

    def fold(self, cls: int, path: Path, gen_dst: dict[str, str]) -> int:
        for gen in path:
            cls = self.multiply(cls, gen, gen_dst)
        return self.find(cls)

    def merge(self, a: int, b: int) -> bool:
        queue = [(a, b)]
        merged = False
        while queue:
            x, y = queue.pop()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            if self.src[x] != self.src[y] or self.dst[x] != self.dst[y]:
                raise MissingComposite("presentation equates non-parallel morphisms")
            self.parent[y] = x
            self.live -= 1
            merged = True
            for gen, tgt in self.step[y].items():
                cur = self.step[x].get(gen)
                if cur is None:
                    self.step[x][gen] = tgt
                else:
                    queue.append((cur, tgt))
            self.step[y] = {}
        return merged

    def roots(self) -> list[int]:
        return [i for i in range(len(self.parent)) if self.find(i) == i]


def close_presentation(
    objects: Sequence[str],
    generators: Iterable[tuple[str, str, str]],
    relations: Iterable[Relation],
    identity_names: dict[str, str] | None = None,
    bound: int = 10_000,
) -> FinCategory:
    """Close a presentation into a finite category with a total table.

    `generators` are (id, src, dst) triples; identities are implicit and
    named through `identity_names` (default "id_<object>", primed on
    collision).  Each relation equates two parallel generator paths read in
    diagrammatic order, the empty path standing for an identity.
    """
    objects = list(objects)
    gens = list(generators)
    gen_dst = {g: d for g, _, d in gens}
    gen_src = {g: s for g, s, _ in gens}
    obj_set = set(objects)
    for g, s, d in gens:
        if s not in obj_set or d not in obj_set:
            raise UnknownObject(f"generator {g!r} has unknown endpoints")

    st = _Closure(bound)
    id_cls = {x: st.new_class(x, x, ()) for x in objects}
    for g, s, _ in gens:
        st.multiply(id_cls[s], g, gen_dst)

    rels = []
    for src, lhs, rhs in relations:
        for path in (lhs, rhs):
            at = src
            for g in path:
                if gen_src.get(g) != at:
                    raise UnknownObject(f"relation path {path} is not composable at {g!r}")
                at = gen_dst[g]
        rels.append((src, tuple(lhs), tuple(rhs)))

    changed = True
    while changed:
        changed = False
        # complete the multiplication table on the current classes
        for root in st.roots():
            for g, s, _ in gens:
                if st.dst[root] == s and g not in st.step[st.find(root)]:
                    st.multiply(root, g, gen_dst)
                    changed = True
        # enforce every relation in every left context
        for root in st.roots():
            root = st.find(root)
            for src, lhs, rhs in rels:
                if st.dst[root] != src:
                    continue
                a = st.fold(root, lhs, gen_dst)
                b = st.fold(root, rhs, gen_dst)
                if a != b:
                    st.merge(a, b)
                    changed = True

    # name the classes deterministically: identities, then generator
    # classes by first declared generator, then composites by witness
    roots = st.roots()
    root_of_gen = {g: st.fold(id_cls[s], (g,), gen_dst) for g, s, _ in gens}
    names: dict[int, str] = {}
    taken: set[str] = set()
    identity_names = identity_names or {}

    def claim(name: str) -> str:
        while name in taken:
            name += "'"
        taken.add(name)
        return name

    ordered: list[int] = []
    for x in objects:
        r = st.find(id_cls[x])
        if r not in names:
            names[r] = claim(identity_names.get(x, f"id_{x}"))
            ordered.append(r)
    for g, _, _ in gens:
        r = st.find(root_of_gen[g])
        if r not in names:
            names[r] = claim(g)
            ordered.append(r)
    for r in roots:
        if r not in names:
            w = st.witness[r]
            names[r] = claim("∘".join(reversed(w)) if w else f"id_{st.src[r]}")
            ordered.append(r)

    identity = {x: names[st.find(id_cls[x])] for x in objects}
    morphisms = [(names[r], st.src[r], st.dst[r]) for r in ordered]
    compose = {}
    for a in ordered:
        for b in ordered:
            if st.dst[a] != st.src[b]:
                continue
            c = st.fold(a, st.witness[b], gen_dst)
            # entry is (g, f) -> g o f with f first in diagrammatic order
            compose[(names[st.find(b)], names[a])] = names[c]
    return build_category(objects, morphisms, identity, compose, check=False)
