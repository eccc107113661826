"""Idempotent completion and splitting of idempotent morphisms and 2-cells."""

from dataclasses import dataclass

from ..errors import ComponentDoesNotSplit, IllTyped
from .category import (
    FinCategory,
    FunctorMap,
    NatTransformation,
    compose_functors,
    identity_functor,
    identity_nat,
    label,
    vert,
)
from .structures import ComonadData, MonadData


def karoubi_complete(K):
    """Karoubi envelope of ``K`` with its fully faithful embedding.

    Objects are pairs ``(x, e)`` with ``e`` an idempotent on ``x``; a morphism
    ``(x, e) -> (y, d)`` is a base morphism ``f`` with ``d f e = f``, stored as
    ``((x, e), (y, d), f)``.
    """
    objects = [(x, e) for x in K.objects for e in K.idempotents(x)]
    morphisms = {}
    for a in objects:
        for b in objects:
            for f in K.hom(a[0], b[0]):
                if K.compose(b[1], f, a[1]) == f:
                    morphisms[(a, b, f)] = (a, b)
    identity = {a: (a, a, a[1]) for a in objects}
    by_src = {}
    for m in morphisms:
        by_src.setdefault(m[0], []).append(m)
    compose = {}
    for f in morphisms:
        for g in by_src.get(f[1], ()):
            compose[(g, f)] = (f[0], g[1], K.comp(g[2], f[2]))
    name = f"Kar({K.name})" if K.name else "Kar"
    out = FinCategory(objects, morphisms, identity, compose, name=name, karoubi_base=K)
    emb_obj = {x: (x, K.id(x)) for x in K.objects}
    emb = FunctorMap(
        K, out, emb_obj,
        {f: (emb_obj[K.src(f)], emb_obj[K.tgt(f)], f) for f in K.morphisms},
        name="embed",
    )
    return out, emb


def extend_functor(F, KA, KB):
    """Extend ``F: A -> B`` to the envelopes ``KA -> KB``."""
    obj = {a: (F.ob(a[0]), F.ar(a[1])) for a in KA.objects}
    arr = {m: (obj[m[0]], obj[m[1]], F.ar(m[2])) for m in KA.morphisms}
    for o in obj.values():
        if not KB.has_object(o):
            raise IllTyped("extension lands outside the target envelope", witness=o)
    return FunctorMap(KA, KB, obj, arr, name=F.name)


def extend_nat_trans(n, FK, GK):
    """Extend ``n: F -> G`` given the extended functors ``FK, GK``."""
    B = n.codomain
    comps = {}
    for a in FK.source.objects:
        m = B.comp(n.target.ar(a[1]), B.comp(n[a[0]], n.source.ar(a[1])))
        comps[a] = (FK.ob(a), GK.ob(a), m)
    return NatTransformation(FK, GK, comps)


def extend_monad(m, KK):
    """Extend a monad or comonad on ``K`` to its envelope ``KK``."""
    t = extend_functor(m.functor, KK, KK)
    tt = compose_functors(t, t)
    one = identity_functor(KK)
    if isinstance(m, MonadData):
        return MonadData(t, extend_nat_trans(m.mult, tt, t), extend_nat_trans(m.unit, one, t))
    return ComonadData(t, extend_nat_trans(m.comult, t, tt), extend_nat_trans(m.counit, t, one))


def split_morphism(K, e):
    """Split an idempotent morphism: return ``(object, pi, iota)``.

    Identities split through themselves; in a Karoubi envelope ``e`` on
    ``(x, d)`` splits through ``(x, e)``; otherwise the first object (in
    canonical order) admitting a factorisation is used.
    """
    x, y = K.morphisms[e]
    if x != y or K.comp(e, e) != e:
        raise IllTyped(f"{label(e)} is not idempotent", witness=e)
    if K.is_identity(e):
        return x, e, e
    if K.karoubi_base is not None:
        base_e = e[2]
        w = (x[0], base_e)
        pi, iota = (x, w, base_e), (w, x, base_e)
        if K.has_object(w) and K.has_morphism(pi) and K.has_morphism(iota):
            if K.comp(pi, iota) == K.id(w) and K.comp(iota, pi) == e:
                return w, pi, iota
    for w in K.objects:
        for pi in K.hom(x, w):
            for iota in K.hom(w, x):
                if K.comp(pi, iota) == K.id(w) and K.comp(iota, pi) == e:
                    return w, pi, iota
    raise ComponentDoesNotSplit(f"idempotent {label(e)} on {label(x)} does not split", witness=x)


def is_idempotent_complete(K):
    for x in K.objects:
        for e in K.idempotents(x):
            try:
                split_morphism(K, e)
            except ComponentDoesNotSplit:
                return False
    return True


@dataclass(frozen=True, eq=False)
class IdempotentSplit:
    idempotent: NatTransformation
    through: FunctorMap
    projection: NatTransformation
    injection: NatTransformation


def split_idempotent(theta):
    """Split an idempotent transformation ``theta: V -> V`` componentwise."""
    V = theta.source
    if not (theta.target == V):
        raise IllTyped("idempotent must be an endo-transformation")
    if vert(theta, theta) != theta:
        raise IllTyped("transformation is not idempotent")
    K = V.target
    X = V.source
    obj, pi, iota = {}, {}, {}
    for x in X.objects:
        w, p, i = split_morphism(K, theta[x])
        obj[x], pi[x], iota[x] = w, p, i
    arr = {}
    for f, (s, t) in X.morphisms.items():
        arr[f] = K.compose(pi[t], V.ar(f), iota[s])
    Vhat = FunctorMap(X, K, obj, arr, name="split")
    projection = NatTransformation(V, Vhat, pi)
    injection = NatTransformation(Vhat, V, iota)
    out = IdempotentSplit(theta, Vhat, projection, injection)
    check_split(out)
    return out


def check_split(s):
    if vert(s.projection, s.injection) != identity_nat(s.through):
        raise IllTyped("projection . injection is not the identity")
    if vert(s.injection, s.projection) != s.idempotent:
        raise IllTyped("injection . projection is not the idempotent")
    return s
