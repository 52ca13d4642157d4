"""Comma categories and adjoint-functor decision procedures.

The decision procedure mirrors the universal-arrow characterization: a
functor G admits a left adjoint exactly when each comma category under an
anchor object has an initial object.  Initiality in a comma is decided by
the `limits` module on the comma built as a first-class finite category, so
there is a single code path and a single oracle for it.

`brute_force_left_adjoint` is the independent check: it enumerates every
candidate functor and unit within configured bounds and verifies the hom
bijections directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import limits
from .fincat import (
    CategoryError,
    FinCategory,
    FinFunctor,
    UnknownObject,
    build_category,
    check_functor_laws,
    opposite_functor,
)


class WitnessNotInitial(CategoryError):
    pass


class OracleBoundExceeded(CategoryError):
    pass


@dataclass(frozen=True)
class Comma:
    """A comma category together with its projection and anchor.

    `pairs` maps each comma object id back to its (object, morphism)
    pair.  `mors` maps each comma morphism id to the underlying morphism.
    """

    base: FinCategory
    projection: FinFunctor
    anchor: str
    direction: str  # "under" or "over"
    pairs: dict[str, tuple[str, str]]
    mors: dict[str, str]


@dataclass(frozen=True)
class AdjunctionCertificate:
    left: FinFunctor
    right: FinFunctor
    unit: dict[str, str]
    bijections: dict[tuple[str, str], dict[str, str]]

    def to_json_dict(self) -> dict:
        return {
            "verdict": "exists",
            "left_adjoint": {
                "obj_map": dict(self.left.obj_map),
                "mor_map": dict(self.left.mor_map),
            },
            "unit": dict(self.unit),
            "witness_failure": None,
        }


@dataclass(frozen=True)
class GaftResult:
    exists: bool
    certificate: AdjunctionCertificate | None
    witness: str | None  # anchor whose comma has no initial object

    def to_json_dict(self) -> dict:
        if self.exists:
            return self.certificate.to_json_dict()
        return {
            "verdict": "none",
            "left_adjoint": None,
            "unit": None,
            "witness_failure": {"anchor": self.witness},
        }


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    violation: str | None


@dataclass(frozen=True)
class SolutionSetReport:
    holds: bool
    sets: dict[str, tuple[str, ...]]  # anchor -> minimal weakly initial set


@dataclass(frozen=True)
class CoinitialityRecord:
    nonempty: bool
    connected: bool
    has_initial: bool


def _obj_id(d: str, u: str) -> str:
    return f"({d},{u})"


def _mor_id(phi: str, src_obj: str, dst_obj: str) -> str:
    return f"({phi}):{src_obj}>{dst_obj}"


def comma_under(G: FinFunctor, c: str) -> Comma:
    """The comma category of morphisms out of c into values of G.

    Objects are pairs (d, u: c -> G d); a morphism (d, u) -> (d', u') is a
    morphism phi: d -> d' of the source of G with G(phi) o u == u'.
    """
    D, C = G.source, G.target
    if not C.has_object(c):
        raise UnknownObject(f"{c!r} is not an object of the target")
    objects, pairs = [], {}
    for d in D.objects:
        for u in C.hom(c, G.obj_map[d]):
            o = _obj_id(d, u)
            objects.append(o)
            pairs[o] = (d, u)
    morphisms, mors, identity, proj_mor = [], {}, {}, {}
    by_pair = {pairs[o]: o for o in objects}
    for o in objects:
        d, u = pairs[o]
        for phi_m in D.morphisms:
            if phi_m.src != d:
                continue
            u2 = C.compose(G.mor_map[phi_m.id], u)
            o2 = by_pair[(phi_m.dst, u2)]
            mid = _mor_id(phi_m.id, o, o2)
            morphisms.append((mid, o, o2))
            mors[mid] = phi_m.id
            proj_mor[mid] = phi_m.id
            if phi_m.id == D.id_of(d):
                identity[o] = mid
    compose = {}
    for mid, o, o2 in morphisms:
        for nid, p, p2 in morphisms:
            if p != o2:
                continue
            comp_phi = D.compose(mors[nid], mors[mid])
            compose[(nid, mid)] = _mor_id(comp_phi, o, p2)
    base = build_category(objects, morphisms, identity, compose, check=True)
    projection = FinFunctor(base, D, {o: pairs[o][0] for o in objects}, proj_mor)
    check_functor_laws(projection)
    return Comma(base, projection, c, "under", pairs, mors)


def comma_over(F: FinFunctor, d: str) -> Comma:
    """The comma category of morphisms from values of F into d.

    Objects are pairs (c, v: F c -> d); a morphism (c, v) -> (c', v') is a
    morphism phi: c -> c' with v' o F(phi) == v.  Dual to `comma_under`
    through opposite categories, which the tests assert.
    """
    C, D = F.source, F.target
    if not D.has_object(d):
        raise UnknownObject(f"{d!r} is not an object of the target")
    objects, pairs = [], {}
    for c in C.objects:
        for v in D.hom(F.obj_map[c], d):
            o = _obj_id(c, v)
            objects.append(o)
            pairs[o] = (c, v)
    morphisms, mors, identity, proj_mor = [], {}, {}, {}
    for o in objects:
        c, v = pairs[o]
        for o2 in objects:
            c2, v2 = pairs[o2]
            for phi in C.hom(c, c2):
                if D.compose(v2, F.mor_map[phi]) != v:
                    continue
                mid = _mor_id(phi, o, o2)
                morphisms.append((mid, o, o2))
                mors[mid] = phi
                proj_mor[mid] = phi
                if phi == C.id_of(c) and o2 == o:
                    identity[o] = mid
    compose = {}
    for mid, o, o2 in morphisms:
        for nid, p, p2 in morphisms:
            if p != o2:
                continue
            comp_phi = C.compose(mors[nid], mors[mid])
            compose[(nid, mid)] = _mor_id(comp_phi, o, p2)
    base = build_category(objects, morphisms, identity, compose, check=True)
    projection = FinFunctor(base, C, {o: pairs[o][0] for o in objects}, proj_mor)
    check_functor_laws(projection)
    return Comma(base, projection, d, "over", pairs, mors)


def solution_set_condition(G: FinFunctor) -> SolutionSetReport:
    """Minimal weakly initial sets of every comma under G.

    Finite instances always satisfy the condition (the full object set of a
    comma is weakly initial, and the empty comma has the empty set), so the
    value of this report is the explicit witnesses.
    """
    sets = {}
    for c in G.target.objects:
        comma = comma_under(G, c)
        minimal = limits.weakly_initial_sets(comma.base)
        sets[c] = minimal[0] if minimal else ()
    return SolutionSetReport(True, sets)


def construct_left_adjoint(G: FinFunctor, witnesses: dict[str, tuple[str, str]]) -> AdjunctionCertificate:
    """Assemble the left adjoint from one initial comma object per anchor.

    Each witness (d_c, u_c) must be initial in its comma; the functor's
    action on a morphism is the unique comma morphism that initiality
    provides.  Every certificate invariant is verified before returning.
    """
    D, C = G.source, G.target
    commas = {c: comma_under(G, c) for c in C.objects}
    for c, (d, u) in witnesses.items():
        comma = commas[c]
        oid = _obj_id(d, u)
        if oid not in comma.pairs:
            raise WitnessNotInitial(f"witness {(d, u)} is not an object of the comma at {c!r}")
        if oid not in limits.initial_objects(comma.base):
            raise WitnessNotInitial(f"witness {(d, u)} is not initial in the comma at {c!r}")
    obj_map = {c: witnesses[c][0] for c in C.objects}
    unit = {c: witnesses[c][1] for c in C.objects}
    mor_map = {}
    for m in C.morphisms:
        c, c2 = m.src, m.dst
        dc, uc = witnesses[c]
        dc2, uc2 = witnesses[c2]
        target_u = C.compose(uc2, m.id)  # object (d_{c'}, u_{c'} o f) of the comma at c
        arrows = [
            phi
            for phi in D.hom(dc, dc2)
            if C.compose(G.mor_map[phi], uc) == target_u
        ]
        if len(arrows) != 1:
            raise WitnessNotInitial(
                f"initiality failed to give a unique image for {m.id!r} ({len(arrows)} candidates)"
            )
        mor_map[m.id] = arrows[0]
    F = FinFunctor(C, D, obj_map, mor_map)
    check_functor_laws(F)
    cert = AdjunctionCertificate(F, G, unit, _record_bijections(F, G, unit))
    result = verify_adjunction(cert)
    if not result.ok:
        raise WitnessNotInitial(f"constructed certificate fails verification: {result.violation}")
    return cert


def _record_bijections(F: FinFunctor, G: FinFunctor, unit: dict[str, str]):
    C, D = F.source, F.target
    return {
        (c, d): {g: C.compose(G.mor_map[g], unit[c]) for g in D.hom(F.obj_map[c], d)}
        for c in C.objects
        for d in D.objects
    }


def verify_adjunction(cert: AdjunctionCertificate) -> VerificationResult:
    """Exhaustively check unit naturality and every hom bijection."""
    F, G, unit = cert.left, cert.right, cert.unit
    C, D = F.source, F.target
    for c in C.objects:
        u = unit.get(c)
        if u is None or not C.has_morphism(u):
            return VerificationResult(False, f"unit component missing at {c!r}")
        if C.src(u) != c or C.dst(u) != G.obj_map[F.obj_map[c]]:
            return VerificationResult(False, f"unit component at {c!r} has wrong endpoints")
    for m in C.morphisms:
        lhs = C.compose(G.mor_map[F.mor_map[m.id]], unit[m.src])
        rhs = C.compose(unit[m.dst], m.id)
        if lhs != rhs:
            return VerificationResult(False, f"unit naturality fails at {m.id!r}")
    for c in C.objects:
        for d in D.objects:
            mapping = {g: C.compose(G.mor_map[g], unit[c]) for g in D.hom(F.obj_map[c], d)}
            recorded = cert.bijections.get((c, d))
            if recorded is not None and recorded != mapping:
                return VerificationResult(False, f"recorded bijection at ({c!r}, {d!r}) is stale")
            values = list(mapping.values())
            if len(set(values)) != len(values):
                return VerificationResult(False, f"hom map at ({c!r}, {d!r}) is not injective")
            if set(values) != set(C.hom(c, G.obj_map[d])):
                return VerificationResult(False, f"hom map at ({c!r}, {d!r}) is not surjective")
    return VerificationResult(True, None)


def gaft_decide(G: FinFunctor) -> GaftResult:
    """Decide left-adjoint existence through initial comma objects.

    On success the adjoint is constructed from the canonically least
    initial object of each comma and the certificate is verified before
    being returned.  On failure the witness anchor is reported.
    """
    C = G.target
    witnesses = {}
    for c in C.objects:
        comma = comma_under(G, c)
        init = limits.initial_objects(comma.base)
        if not init:
            return GaftResult(False, None, c)
        witnesses[c] = comma.pairs[init[0]]
    return GaftResult(True, construct_left_adjoint(G, witnesses), None)


def right_adjoint_decide(F: FinFunctor) -> GaftResult:
    """Decide a right adjoint by deciding a left adjoint in the opposites.

    There is no separate code path for the dual problem: a right adjoint
    for F is exactly a left adjoint for the opposite functor.
    """
    return gaft_decide(opposite_functor(F))


@dataclass(frozen=True)
class BruteForceResult:
    exists: bool
    pairs: list[tuple[FinFunctor, dict[str, str]]]


def brute_force_left_adjoint(
    G: FinFunctor,
    max_source_objects: int = 4,
    max_target_morphisms: int = 16,
) -> BruteForceResult:
    """Independent oracle: enumerate every functor and unit candidate.

    Candidate functors go from the target of G back to its source; object
    assignments leaving some unit component without a candidate morphism
    are pruned, which loses nothing because such assignments admit no unit
    at all.  Beyond the configured bounds the oracle refuses to run rather
    than sample.
    """
    D, C = G.source, G.target
    if len(C.objects) > max_source_objects:
        raise OracleBoundExceeded(
            f"{len(C.objects)} source objects exceed the bound {max_source_objects}"
        )
    if len(D.morphisms) > max_target_morphisms:
        raise OracleBoundExceeded(
            f"{len(D.morphisms)} target morphisms exceed the bound {max_target_morphisms}"
        )
    found = []
    nonid = C.nonidentity()
    for objs in itertools.product(D.objects, repeat=len(C.objects)):
        obj_map = dict(zip(C.objects, objs))
        unit_choices = [C.hom(c, G.obj_map[obj_map[c]]) for c in C.objects]
        if any(not ch for ch in unit_choices):
            continue
        mor_map = {C.id_of(x): D.id_of(obj_map[x]) for x in C.objects}
        candidates = [D.hom(obj_map[C.src(m)], obj_map[C.dst(m)]) for m in nonid]
        if any(not cand for cand in candidates):
            continue
        for F in _enumerate_functors(C, D, obj_map, mor_map, nonid, candidates):
            for combo in itertools.product(*unit_choices):
                unit = dict(zip(C.objects, combo))
                cert = AdjunctionCertificate(F, G, unit, _record_bijections(F, G, unit))
                if verify_adjunction(cert).ok:
                    found.append((F, unit))
    return BruteForceResult(bool(found), found)


def _enumerate_functors(C, D, obj_map, mor_map, nonid, candidates, i=0):
    if i == len(nonid):
        yield FinFunctor(C, D, dict(obj_map), dict(mor_map))
        return
    m = nonid[i]
    for fm in candidates[i]:
        mor_map[m] = fm
        if _consistent(C, D, mor_map, m):
            yield from _enumerate_functors(C, D, obj_map, mor_map, nonid, candidates, i + 1)
    del mor_map[m]


def _consistent(C, D, mor_map, new):
    for (g, f), gf in C.compose_table.items():
        if new not in (g, f, gf):
            continue
        mg, mf, mgf = mor_map.get(g), mor_map.get(f), mor_map.get(gf)
        if mg is None or mf is None or mgf is None:
            continue
        if D.compose(mg, mf) != mgf:
            return False
    return True


def coinitiality_profile(F: FinFunctor) -> dict[str, CoinitialityRecord]:
    """Per object of the target: is the comma over it nonempty, connected
    as an undirected graph, and does it have an initial object.

    Nonempty everywhere certifies weak coinitiality, nonempty and connected
    the next level up, and an initial object everywhere is a sufficient
    certificate for coinitiality.
    """
    out = {}
    for d in F.target.objects:
        comma = comma_over(F, d)
        objs = comma.base.objects
        nonempty = bool(objs)
        connected = False
        if nonempty:
            index = {o: i for i, o in enumerate(objs)}
            parent = list(range(len(objs)))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for m in comma.base.morphisms:
                ra, rb = find(index[m.src]), find(index[m.dst])
                if ra != rb:
                    parent[rb] = ra
            connected = len({find(i) for i in range(len(objs))}) == 1
        has_initial = bool(limits.initial_objects(comma.base))
        out[d] = CoinitialityRecord(nonempty, connected, has_initial)
    return out


def comma_duality_holds(F: FinFunctor, d: str) -> bool:
    """The over-comma agrees with the opposite of the under-comma of the
    opposite functor, through the canonical pairing of objects."""
    from .fincat import isomorphic, opposite

    over = comma_over(F, d)
    dual = comma_under(opposite_functor(F), d)
    return isomorphic(over.base, opposite(dual.base))
