"""Monads, comonads, adjunctions and Eilenberg-Moore categories on finite categories."""

from dataclasses import dataclass

from ..errors import AssocFails, IllTyped, TriangleFails, UnitFails
from .category import (
    FinCategory,
    FunctorMap,
    NatTransformation,
    compose_functors,
    first_difference,
    identity_functor,
    identity_nat,
    label,
    validate_functor,
    validate_nat_trans,
    vert,
    whisker,
)


@dataclass(frozen=True, eq=False)
class MonadData:
    functor: FunctorMap
    mult: NatTransformation
    unit: NatTransformation

    @property
    def base(self):
        return self.functor.source


@dataclass(frozen=True, eq=False)
class ComonadData:
    functor: FunctorMap
    comult: NatTransformation
    counit: NatTransformation

    @property
    def base(self):
        return self.functor.source


def _check_shape(n, F, G, what):
    if not (n.source == F and n.target == G):
        raise IllTyped(f"{what} has the wrong source or target", witness=what)
    try:
        validate_nat_trans(n)
    except IllTyped as e:
        raise IllTyped(f"{what}: {e}", witness=e.witness) from None


def validate_monad(m, side="monad"):
    """Check the (co)monad laws componentwise; returns ``m``.

    ``side`` is ``"monad"`` for ``MonadData`` and ``"comonad"`` for ``ComonadData``.
    """
    t = m.functor
    K = t.source
    if t.target != K:
        raise IllTyped("not an endofunctor")
    validate_functor(t)
    one = identity_functor(K)
    tt = compose_functors(t, t)
    if side == "monad":
        mu, eta = m.mult, m.unit
        _check_shape(mu, tt, t, "mult")
        _check_shape(eta, one, t, "unit")
        lhs = vert(mu, whisker(t, mu))
        rhs = vert(mu, whisker(mu, t))
        x = first_difference(lhs, rhs)
        if x is not None:
            raise AssocFails(f"associativity fails at {label(x)}", witness=x)
        ident = identity_nat(t)
        for cell in (vert(mu, whisker(eta, t)), vert(mu, whisker(t, eta))):
            x = first_difference(cell, ident)
            if x is not None:
                raise UnitFails(f"unit law fails at {label(x)}", witness=x)
        return m
    if side == "comonad":
        delta, eps = m.comult, m.counit
        _check_shape(delta, t, tt, "comult")
        _check_shape(eps, t, one, "counit")
        lhs = vert(whisker(t, delta), delta)
        rhs = vert(whisker(delta, t), delta)
        x = first_difference(lhs, rhs)
        if x is not None:
            raise AssocFails(f"coassociativity fails at {label(x)}", witness=x)
        ident = identity_nat(t)
        for cell in (vert(whisker(eps, t), delta), vert(whisker(t, eps), delta)):
            x = first_difference(cell, ident)
            if x is not None:
                raise UnitFails(f"counit law fails at {label(x)}", witness=x)
        return m
    raise ValueError(f"unknown side {side!r}")


def identity_monad(K):
    one = identity_functor(K)
    return MonadData(one, identity_nat(one), identity_nat(one))


def identity_comonad(K):
    one = identity_functor(K)
    return ComonadData(one, identity_nat(one), identity_nat(one))


@dataclass(frozen=True, eq=False)
class AdjunctionData:
    """``left -| right`` with ``unit: 1 -> right left`` and ``counit: left right -> 1``."""

    left: FunctorMap
    right: FunctorMap
    unit: NatTransformation
    counit: NatTransformation

    def monad(self):
        t = compose_functors(self.right, self.left)
        return MonadData(t, whisker(self.right, self.counit, self.left), self.unit)

    def comonad(self):
        c = compose_functors(self.left, self.right)
        return ComonadData(c, whisker(self.left, self.unit, self.right), self.counit)


def validate_adjunction(a):
    """Check naturality and both triangle identities."""
    f, u = a.left, a.right
    validate_functor(f)
    validate_functor(u)
    _check_shape(a.unit, identity_functor(f.source), compose_functors(u, f), "unit")
    _check_shape(a.counit, compose_functors(f, u), identity_functor(f.target), "counit")
    left_tri = vert(whisker(a.counit, f), whisker(f, a.unit))
    x = first_difference(left_tri, identity_nat(f))
    if x is not None:
        raise TriangleFails(f"triangle for the left adjoint fails at {label(x)}", witness=("left", x))
    right_tri = vert(whisker(u, a.counit), whisker(a.unit, u))
    x = first_difference(right_tri, identity_nat(u))
    if x is not None:
        raise TriangleFails(f"triangle for the right adjoint fails at {label(x)}", witness=("right", x))
    return a


def compose_adjunctions(inner, outer):
    """From ``l1 -| r1`` (inner) and ``l2 -| r2`` (outer) build ``l2 l1 -| r1 r2``."""
    l = compose_functors(outer.left, inner.left)
    r = compose_functors(inner.right, outer.right)
    unit = vert(whisker(inner.right, outer.unit, inner.left), inner.unit)
    counit = vert(outer.counit, whisker(outer.left, inner.counit, outer.right))
    return AdjunctionData(l, r, unit, counit)


def identity_adjunction(K):
    one = identity_functor(K)
    return AdjunctionData(one, one, identity_nat(one), identity_nat(one))


# Eilenberg-Moore categories -----------------------------------------


@dataclass(frozen=True, eq=False)
class EMResult:
    category: FinCategory
    forgetful: FunctorMap
    adjunction: AdjunctionData

    def __iter__(self):
        return iter((self.category, self.forgetful, self.adjunction))


def _sub_category(objects, base, ok, name):
    """Category whose morphisms are base morphisms between ``objects`` passing ``ok``.

    ``objects`` is a list of tuples whose first entry is the carrier in ``base``.
    Morphism ids are ``(source object, target object, base morphism)``.
    """
    morphisms = {}
    for x in objects:
        for y in objects:
            for f in base.hom(x[0], y[0]):
                if ok(x, y, f):
                    morphisms[(x, y, f)] = (x, y)
    identity = {x: (x, x, base.id(x[0])) for x in objects}
    compose = {}
    by_src = {}
    for m in morphisms:
        by_src.setdefault(m[0], []).append(m)
    for f in morphisms:
        for g in by_src.get(f[1], ()):
            compose[(g, f)] = (f[0], g[1], base.comp(g[2], f[2]))
    return FinCategory(objects, morphisms, identity, compose, name=name)


def _forget(cat, base):
    return FunctorMap(
        cat, base,
        {x: x[0] for x in cat.objects},
        {m: m[2] for m in cat.morphisms},
        name="forget",
    )


def _sort_key(K):
    def key(obj):
        a, *structure = obj
        return (K.obj_index(a), *(K.mor_index(s) for s in structure))
    return key


def algebras(m):
    """All ``(a, alpha)`` satisfying the unit and associativity laws, canonically sorted."""
    t, mu, eta = m.functor, m.mult, m.unit
    K = t.source
    out = []
    for a in K.objects:
        for alpha in K.hom(t.ob(a), a):
            if K.comp(alpha, eta[a]) != K.id(a):
                continue
            if K.comp(alpha, mu[a]) != K.comp(alpha, t.ar(alpha)):
                continue
            out.append((a, alpha))
    return sorted(out, key=_sort_key(K))


def coalgebras(m):
    c, delta, eps = m.functor, m.comult, m.counit
    K = c.source
    out = []
    for a in K.objects:
        for gamma in K.hom(a, c.ob(a)):
            if K.comp(eps[a], gamma) != K.id(a):
                continue
            if K.comp(delta[a], gamma) != K.comp(c.ar(gamma), gamma):
                continue
            out.append((a, gamma))
    return sorted(out, key=_sort_key(K))


def em_category(m):
    """Eilenberg-Moore category with forgetful functor and (co)free adjunction.

    For a monad the adjunction is ``free -| forgetful``; for a comonad it is
    ``forgetful -| cofree``.
    """
    if isinstance(m, MonadData):
        t, mu, eta = m.functor, m.mult, m.unit
        K = t.source
        objs = algebras(m)

        def ok(x, y, f):
            return K.comp(f, x[1]) == K.comp(y[1], t.ar(f))

        cat = _sub_category(objs, K, ok, name="EM")
        u = _forget(cat, K)
        free_obj = {a: (t.ob(a), mu[a]) for a in K.objects}
        free = FunctorMap(
            K, cat, free_obj,
            {f: (free_obj[K.src(f)], free_obj[K.tgt(f)], t.ar(f)) for f in K.morphisms},
            name="free",
        )
        unit = NatTransformation(identity_functor(K), compose_functors(u, free), dict(eta.components))
        fu = compose_functors(free, u)
        counit = NatTransformation(
            fu, identity_functor(cat), {x: (fu.ob(x), x, x[1]) for x in cat.objects}
        )
        return EMResult(cat, u, AdjunctionData(free, u, unit, counit))
    if isinstance(m, ComonadData):
        c, delta, eps = m.functor, m.comult, m.counit
        K = c.source
        objs = coalgebras(m)

        def ok(x, y, f):
            return K.comp(y[1], f) == K.comp(c.ar(f), x[1])

        cat = _sub_category(objs, K, ok, name="coEM")
        v = _forget(cat, K)
        cofree_obj = {a: (c.ob(a), delta[a]) for a in K.objects}
        cofree = FunctorMap(
            K, cat, cofree_obj,
            {f: (cofree_obj[K.src(f)], cofree_obj[K.tgt(f)], c.ar(f)) for f in K.morphisms},
            name="cofree",
        )
        gv = compose_functors(cofree, v)
        unit = NatTransformation(
            identity_functor(cat), gv, {x: (x, gv.ob(x), x[1]) for x in cat.objects}
        )
        counit = NatTransformation(compose_functors(v, cofree), identity_functor(K), dict(eps.components))
        return EMResult(cat, v, AdjunctionData(v, cofree, unit, counit))
    raise TypeError("expected MonadData or ComonadData")


def same_monad(a, b):
    """Componentwise equality of two monads (or two comonads)."""
    if isinstance(a, MonadData):
        return a.functor == b.functor and a.mult == b.mult and a.unit == b.unit
    return a.functor == b.functor and a.comult == b.comult and a.counit == b.counit


def comparison_functor(adj, side="monad"):
    """Comparison functor into the Eilenberg-Moore category of the induced (co)monad.

    Returns ``(comparison, em_result)``. For ``side="monad"`` the adjunction is
    ``f -| u`` and the comparison sends ``l`` to ``(u l, u eps_l)``; for
    ``side="comonad"`` it is ``v -| g`` and ``m`` goes to ``(v m, v eta_m)``.
    """
    if side == "monad":
        m = adj.monad()
        em = em_category(m)
        u = adj.right
        L = u.source
        obj = {l: (u.ob(l), u.ar(adj.counit[l])) for l in L.objects}
    else:
        m = adj.comonad()
        em = em_category(m)
        u = adj.left
        L = u.source
        obj = {l: (u.ob(l), u.ar(adj.unit[l])) for l in L.objects}
    arr = {}
    for f, (s, t) in L.morphisms.items():
        key = (obj[s], obj[t], u.ar(f))
        arr[f] = key
    return FunctorMap(L, em.category, obj, arr, name="comparison"), em
