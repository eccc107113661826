"""The canonical idempotent of a weak law, weak liftings and the embedding into squares.

A law ``(K, t, c, lam)`` is sent to the commutative square

    P --vbar--> L
    |           |
   ubar         u
    v           v
    M ---v----> K

with ``L = K^t``, ``M = K^c`` and ``P`` the category of mixed algebras. The
bar adjunctions come from the weakly lifted monad on ``M`` and comonad on
``L``, transported along the isomorphisms of their Eilenberg-Moore
categories with ``P``.
"""

from dataclasses import dataclass

from .config import DEFAULT_BOUNDS
from .errors import IllTyped, LiftFails
from .fincat import (
    AdjunctionData,
    ComonadData,
    FinCategory,
    FunctorMap,
    MonadData,
    NatTransformation,
    compose_functors,
    em_category,
    enumerate_functors,
    enumerate_nat_trans,
    first_difference,
    identity_adjunction,
    identity_functor,
    identity_nat,
    inverse_functor,
    is_isomorphism,
    label,
    split_idempotent,
    split_morphism,
    validate_adjunction,
    validate_functor,
    validate_monad,
    vert,
    whisker,
)
from .fincat.structures import comparison_functor
from .weakdl import (
    LawMorphism,
    LawTwoCell,
    WeakMixedLaw,
    check_mixed_algebra,
    enumerate_law_morphisms,
    enumerate_law_two_cells,
    identity_law_morphism,
    mixed_em_category,
)


# canonical splitting -------------------------------------------------


@dataclass(frozen=True, eq=False)
class CanonicalSplitting:
    idempotent: NatTransformation
    image: FunctorMap
    pi: NatTransformation
    sigma: NatTransformation
    action: NatTransformation
    coaction: NatTransformation
    eta1: NatTransformation
    eps1: NatTransformation

    @property
    def is_trivial(self):
        return self.idempotent == identity_nat(self.idempotent.source)


def canonical_idempotent(law):
    """``e = eps tc . lam c . t delta`` on ``tc``."""
    t, c = law.t, law.c
    return vert(whisker(law.eps, t, c), whisker(law.law, c), whisker(t, law.delta))


def splitting_diagrams(law, s):
    """The three identities tying ``(a, alpha, gamma)`` and ``eta1, eps1`` back to ``lam``."""
    t, c, lam = law.t, law.c, law.law
    a, alpha, gamma, eta1, eps1 = s.image, s.action, s.coaction, s.eta1, s.eps1
    first = first_difference(
        vert(whisker(c, eps1), whisker(c, alpha), whisker(lam, a), whisker(t, gamma), whisker(t, eta1)),
        lam,
    )
    second = first_difference(vert(gamma, eta1), vert(whisker(c, eta1), law.delta))
    third = first_difference(vert(eps1, alpha, whisker(t, eta1)), vert(whisker(law.eps, t), lam))
    return {"i": first is None, "ii": second is None, "iii": third is None}


def canonical_splitting(law):
    """Split ``e`` and build the induced mixed algebra with domain ``K``."""
    t, c = law.t, law.c
    e = canonical_idempotent(law)
    if vert(e, e) != e:
        raise LiftFails("canonical idempotent is not idempotent", witness=first_difference(vert(e, e), e))
    sp = split_idempotent(e)
    a, pi, sigma = sp.through, sp.projection, sp.injection
    alpha = vert(pi, whisker(law.mu, c), whisker(t, sigma))
    gamma = vert(whisker(c, pi), whisker(law.law, c), whisker(t, law.delta), sigma)
    eta1 = vert(pi, whisker(law.eta, c))
    eps1 = vert(whisker(t, law.eps), sigma)
    out = CanonicalSplitting(e, a, pi, sigma, alpha, gamma, eta1, eps1)
    if not check_mixed_algebra(law, a, alpha, gamma).passed:
        raise LiftFails("split object is not a mixed algebra")
    bad = [k for k, ok in splitting_diagrams(law, out).items() if not ok]
    if bad:
        raise LiftFails(f"diagram(s) {', '.join(bad)} fail", witness=bad)
    return out


# weak liftings -------------------------------------------------------


def _lift_monad_to_coalgebras(law, em_c):
    """Monad ``tbar`` on ``K^c``; ``(a, gamma)`` goes to the image of ``eps ta . lam a . t gamma``."""
    K, t, c, lam = law.base, law.t, law.c, law.law
    M = em_c.category
    split = {}
    for x in M.objects:
        a, gamma = x
        e = K.compose(law.eps[t.ob(a)], lam[a], t.ar(gamma))
        w, p, s = split_morphism(K, e)
        hat = K.compose(c.ar(p), lam[a], t.ar(gamma), s)
        y = (w, hat)
        if not M.has_object(y):
            raise LiftFails(f"lift of {label(x)} is not a coalgebra", witness=x)
        split[x] = (y, p, s)
    obj = {x: split[x][0] for x in M.objects}
    arr = {}
    for h, (x, z) in M.morphisms.items():
        base = K.compose(split[z][1], t.ar(h[2]), split[x][2])
        m = (obj[x], obj[z], base)
        if not M.has_morphism(m):
            raise LiftFails(f"lift of {label(h)} is not a coalgebra map", witness=h)
        arr[h] = m
    tbar = FunctorMap(M, M, obj, arr, name="tbar")
    unit = {x: (x, obj[x], K.comp(split[x][1], law.eta[x[0]])) for x in M.objects}
    mult = {}
    for x in M.objects:
        y = obj[x]
        _, p, s = split[x]
        _, _, s2 = split[y]
        mult[x] = (obj[y], y, K.compose(p, law.mu[x[0]], t.ar(s), s2))
    m = MonadData(
        tbar,
        NatTransformation(compose_functors(tbar, tbar), tbar, mult),
        NatTransformation(identity_functor(M), tbar, unit),
    )
    return m, split


def _lift_comonad_to_algebras(law, em_t):
    """Comonad ``cbar`` on ``K^t``; ``(a, alpha)`` goes to the image of ``c alpha . lam a . eta ca``."""
    K, t, c, lam = law.base, law.t, law.c, law.law
    L = em_t.category
    split = {}
    for x in L.objects:
        a, alpha = x
        e = K.compose(c.ar(alpha), lam[a], law.eta[c.ob(a)])
        w, p, s = split_morphism(K, e)
        check = K.compose(p, c.ar(alpha), lam[a], t.ar(s))
        y = (w, check)
        if not L.has_object(y):
            raise LiftFails(f"lift of {label(x)} is not an algebra", witness=x)
        split[x] = (y, p, s)
    obj = {x: split[x][0] for x in L.objects}
    arr = {}
    for h, (x, z) in L.morphisms.items():
        base = K.compose(split[z][1], c.ar(h[2]), split[x][2])
        m = (obj[x], obj[z], base)
        if not L.has_morphism(m):
            raise LiftFails(f"lift of {label(h)} is not an algebra map", witness=h)
        arr[h] = m
    cbar = FunctorMap(L, L, obj, arr, name="cbar")
    counit = {x: (obj[x], x, K.comp(law.eps[x[0]], split[x][2])) for x in L.objects}
    comult = {}
    for x in L.objects:
        y = obj[x]
        _, p, s = split[x]
        _, p2, _ = split[y]
        comult[x] = (y, obj[y], K.compose(p2, c.ar(p), law.delta[x[0]], s))
    m = ComonadData(
        cbar,
        NatTransformation(cbar, compose_functors(cbar, cbar), comult),
        NatTransformation(cbar, identity_functor(L), counit),
    )
    return m, split


def weak_lift(law, side, em=None):
    """``tbar`` on ``K^c`` (side ``monad_on_Kc``) or ``cbar`` on ``K^t`` (``comonad_on_Kt``).

    Returns the validated (co)monad; its Eilenberg-Moore category is checked
    against the mixed algebras by :func:`mixed_em_isomorphisms`.
    """
    if side == "monad_on_Kc":
        m, _ = _lift_monad_to_coalgebras(law, em or em_category(law.comonad))
        return validate_monad(m, "monad")
    if side == "comonad_on_Kt":
        m, _ = _lift_comonad_to_algebras(law, em or em_category(law.monad))
        return validate_monad(m, "comonad")
    raise ValueError(f"unknown side {side!r}")


@dataclass(frozen=True, eq=False)
class LiftedEM:
    lifted: object
    em: object
    to_mixed: FunctorMap
    from_mixed: FunctorMap


def _iso_or_fail(F, what):
    validate_functor(F)
    if not is_isomorphism(F):
        raise LiftFails(f"{what} is not an isomorphism of categories")
    return F


def mixed_em_isomorphisms(law, mixed=None, em_t=None, em_c=None):
    """Explicit isomorphisms ``(K^c)^tbar -> P`` and ``(K^t)^cbar -> P``.

    A ``tbar``-algebra ``((a, gamma), beta)`` goes to ``(a, beta pi, gamma)``
    and a ``cbar``-coalgebra ``((a, alpha), beta)`` to ``(a, alpha, sigma beta)``.
    """
    K = law.base
    em_t = em_t or em_category(law.monad)
    em_c = em_c or em_category(law.comonad)
    mixed = mixed or mixed_em_category(law, em_t, em_c)
    P = mixed.category

    tbar, split_c = _lift_monad_to_coalgebras(law, em_c)
    validate_monad(tbar, "monad")
    em_tbar = em_category(tbar)
    obj = {}
    for y in em_tbar.category.objects:
        (a, gamma), beta = y
        p = split_c[(a, gamma)][1]
        obj[y] = (a, K.comp(beta[2], p), gamma)
    arr = {m: (obj[m[0]], obj[m[1]], m[2][2]) for m in em_tbar.category.morphisms}
    _check_lands(P, obj, arr, "tbar-algebra")
    to_t = _iso_or_fail(FunctorMap(em_tbar.category, P, obj, arr, name="tbar-alg"), "tbar comparison")

    cbar, split_t = _lift_comonad_to_algebras(law, em_t)
    validate_monad(cbar, "comonad")
    em_cbar = em_category(cbar)
    obj = {}
    for y in em_cbar.category.objects:
        (a, alpha), beta = y
        s = split_t[(a, alpha)][2]
        obj[y] = (a, alpha, K.comp(s, beta[2]))
    arr = {m: (obj[m[0]], obj[m[1]], m[2][2]) for m in em_cbar.category.morphisms}
    _check_lands(P, obj, arr, "cbar-coalgebra")
    to_c = _iso_or_fail(FunctorMap(em_cbar.category, P, obj, arr, name="cbar-coalg"), "cbar comparison")

    return (
        LiftedEM(tbar, em_tbar, to_t, inverse_functor(to_t)),
        LiftedEM(cbar, em_cbar, to_c, inverse_functor(to_c)),
    )


def _check_lands(P, obj, arr, what):
    for x, y in obj.items():
        if not P.has_object(y):
            raise LiftFails(f"{what} {label(x)} is not sent to a mixed algebra", witness=x)
    for f, g in arr.items():
        if not P.has_morphism(g):
            raise LiftFails(f"{what} map {label(f)} is not sent to a mixed map", witness=f)


# the square ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EmbeddingSquare:
    """Commutative square ``v ubar = u vbar`` with adjunctions ``f -| u``, ``fbar -| ubar``,
    ``v -| g`` and ``vbar -| gbar``."""

    P: FinCategory
    L: FinCategory
    M: FinCategory
    K: FinCategory
    vbar: FunctorMap
    ubar: FunctorMap
    u: FunctorMap
    v: FunctorMap
    adj_u: AdjunctionData
    adj_ubar: AdjunctionData
    adj_v: AdjunctionData
    adj_vbar: AdjunctionData
    law: object = None
    diagonal: FunctorMap = None

    @property
    def f(self):
        return self.adj_u.left

    @property
    def g(self):
        return self.adj_v.right

    @property
    def fbar(self):
        return self.adj_ubar.left

    @property
    def gbar(self):
        return self.adj_vbar.right

    def corners(self):
        return {"P": self.P, "L": self.L, "M": self.M, "K": self.K}

    def edges(self):
        return {"vbar": self.vbar, "ubar": self.ubar, "u": self.u, "v": self.v}


def make_square(vbar, ubar, u, v, adj_u, adj_ubar, adj_v, adj_vbar, law=None):
    """Assemble a square, checking commutativity and the four adjunctions."""
    d1, d2 = compose_functors(v, ubar), compose_functors(u, vbar)
    if d1 != d2:
        raise IllTyped("square does not commute")
    for adj, right, left in ((adj_u, u, None), (adj_ubar, ubar, None), (adj_v, None, v), (adj_vbar, None, vbar)):
        if right is not None and adj.right != right:
            raise IllTyped("adjunction does not have the expected right adjoint")
        if left is not None and adj.left != left:
            raise IllTyped("adjunction does not have the expected left adjoint")
        validate_adjunction(adj)
    return EmbeddingSquare(
        vbar.source, vbar.target, ubar.target, u.target,
        vbar, ubar, u, v, adj_u, adj_ubar, adj_v, adj_vbar, law=law, diagonal=d1,
    )


def _transport_adjunction(adj, iso, inv, side):
    """Move ``free -| forget`` (or ``forget -| cofree``) from an EM category to ``P`` along ``iso``."""
    if side == "monad":
        left = compose_functors(iso, adj.left)
        right = compose_functors(adj.right, inv)
        unit = NatTransformation(identity_functor(left.source), compose_functors(right, left), dict(adj.unit.components))
        counit = NatTransformation(
            compose_functors(left, right),
            identity_functor(iso.target),
            {p: iso.ar(adj.counit[inv.ob(p)]) for p in iso.target.objects},
        )
        return AdjunctionData(left, right, unit, counit)
    left = compose_functors(adj.left, inv)
    right = compose_functors(iso, adj.right)
    unit = NatTransformation(
        identity_functor(iso.target),
        compose_functors(right, left),
        {p: iso.ar(adj.unit[inv.ob(p)]) for p in iso.target.objects},
    )
    counit = NatTransformation(compose_functors(left, right), identity_functor(left.target), dict(adj.counit.components))
    return AdjunctionData(left, right, unit, counit)


def law_to_square(law):
    em_t = em_category(law.monad)
    em_c = em_category(law.comonad)
    mixed = mixed_em_category(law, em_t, em_c)
    lift_t, lift_c = mixed_em_isomorphisms(law, mixed, em_t, em_c)
    adj_ubar = _transport_adjunction(lift_t.em.adjunction, lift_t.to_mixed, lift_t.from_mixed, "monad")
    adj_vbar = _transport_adjunction(lift_c.em.adjunction, lift_c.to_mixed, lift_c.from_mixed, "comonad")
    if adj_ubar.right != mixed.to_coalgebras or adj_vbar.left != mixed.to_algebras:
        raise LiftFails("transported adjunctions do not sit over the projections")
    return make_square(
        mixed.to_algebras, mixed.to_coalgebras,
        em_t.forgetful, em_c.forgetful,
        em_t.adjunction, adj_ubar, em_c.adjunction, adj_vbar,
        law=law,
    )


def delta_square(X):
    """The square with every corner ``X`` and every edge and adjoint the identity."""
    one = identity_functor(X)
    adj = identity_adjunction(X)
    return make_square(one, one, one, one, adj, adj, adj, adj)


# morphisms of squares ---------------------------------------------


@dataclass(frozen=True, eq=False)
class SquareMorphism:
    xP: FunctorMap
    xL: FunctorMap
    xM: FunctorMap
    xK: FunctorMap
    underlying: object = None

    def key(self):
        return tuple(
            (tuple(F.on_objects[o] for o in F.source.objects), tuple(F.on_morphisms[m] for m in F.source.morphisms))
            for F in (self.xP, self.xL, self.xM, self.xK)
        )

    def __eq__(self, other):
        return isinstance(other, SquareMorphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True, eq=False)
class SquareTwoCell:
    source: SquareMorphism
    target: SquareMorphism
    wP: NatTransformation
    wL: NatTransformation
    wM: NatTransformation
    wK: NatTransformation

    def key(self):
        return tuple(w.key() for w in (self.wP, self.wL, self.wM, self.wK))


def check_square_morphism(sq, sq2, m):
    """The four faces ``u' xL = xK u``, ``v' xM = xK v``, ``vbar' xP = xL vbar``, ``ubar' xP = xM ubar``."""
    faces = {
        "right": (compose_functors(sq2.u, m.xL), compose_functors(m.xK, sq.u)),
        "bottom": (compose_functors(sq2.v, m.xM), compose_functors(m.xK, sq.v)),
        "top": (compose_functors(sq2.vbar, m.xP), compose_functors(m.xL, sq.vbar)),
        "left": (compose_functors(sq2.ubar, m.xP), compose_functors(m.xM, sq.ubar)),
    }
    return {k: a == b for k, (a, b) in faces.items()}


def check_square_two_cell(sq, sq2, w):
    pairs = {
        "right": (whisker(sq2.u, w.wL), whisker(w.wK, sq.u)),
        "bottom": (whisker(sq2.v, w.wM), whisker(w.wK, sq.v)),
        "top": (whisker(sq2.vbar, w.wP), whisker(w.wL, sq.vbar)),
        "left": (whisker(sq2.ubar, w.wP), whisker(w.wM, sq.ubar)),
    }
    return {k: a.components == b.components for k, (a, b) in pairs.items()}


def _functor_on(source, target, obj_fn, arr_fn, what):
    obj = {}
    for x in source.objects:
        y = obj_fn(x)
        if not target.has_object(y):
            raise LiftFails(f"{what}: {label(x)} is not sent to a structured object", witness=x)
        obj[x] = y
    arr = {}
    for f in source.morphisms:
        g = (obj[f[0]], obj[f[1]], arr_fn(f))
        if not target.has_morphism(g):
            raise LiftFails(f"{what}: {label(f)} is not sent to a structured map", witness=f)
        arr[f] = g
    return FunctorMap(source, target, obj, arr, name=what)


def lift_morphism(source, target, m, sq=None, sq2=None):
    """The square morphism ``(x^(xi,zeta), x^xi, x^zeta, x)`` of a law morphism."""
    sq = sq or law_to_square(source)
    sq2 = sq2 or law_to_square(target)
    x, xi, zeta = m.carrier, m.monad_part, m.comonad_part
    K2 = target.base
    xL = _functor_on(sq.L, sq2.L, lambda o: (x.ob(o[0]), K2.comp(x.ar(o[1]), xi[o[0]])), lambda f: x.ar(f[2]), "x^xi")
    xM = _functor_on(sq.M, sq2.M, lambda o: (x.ob(o[0]), K2.comp(zeta[o[0]], x.ar(o[1]))), lambda f: x.ar(f[2]), "x^zeta")
    xP = _functor_on(
        sq.P, sq2.P,
        lambda o: (x.ob(o[0]), K2.comp(x.ar(o[1]), xi[o[0]]), K2.comp(zeta[o[0]], x.ar(o[2]))),
        lambda f: x.ar(f[2]),
        "x^(xi,zeta)",
    )
    out = SquareMorphism(xP, xL, xM, x, underlying=m)
    faces = check_square_morphism(sq, sq2, out)
    if not all(faces.values()):
        raise LiftFails(f"lifted faces fail: {sorted(k for k, v in faces.items() if not v)}")
    return out


def lift_two_cell(cell, lifted_source, lifted_target, sq=None, sq2=None):
    """Components of ``omega`` at structured objects, read in each corner."""
    omega = cell.underlying
    a, b = lifted_source, lifted_target

    def comps(F, G, C):
        out = {}
        for o in F.source.objects:
            mor = (F.ob(o), G.ob(o), omega[o[0]])
            if not C.has_morphism(mor):
                raise LiftFails(f"component at {label(o)} is not a structured map", witness=o)
            out[o] = mor
        return NatTransformation(F, G, out)

    wL = comps(a.xL, b.xL, b.xL.target)
    wM = comps(a.xM, b.xM, b.xM.target)
    wP = comps(a.xP, b.xP, b.xP.target)
    return SquareTwoCell(a, b, wP, wL, wM, omega)


def lift_law_morphism_identity(law, sq=None):
    return lift_morphism(law, law, identity_law_morphism(law), sq, sq)


# brute-force square homs ------------------------------------------


def square_morphisms(sq, sq2, bounds=DEFAULT_BOUNDS):
    """All functor quadruples making the four faces commute, by constrained search."""
    out = []
    for xK in enumerate_functors(sq.K, sq2.K, bounds=bounds):
        xu, xv = compose_functors(xK, sq.u), compose_functors(xK, sq.v)
        xLs = list(enumerate_functors(sq.L, sq2.L, constraints=[(sq2.u, xu)], bounds=bounds))
        if not xLs:
            continue
        xMs = list(enumerate_functors(sq.M, sq2.M, constraints=[(sq2.v, xv)], bounds=bounds))
        for xL in xLs:
            for xM in xMs:
                cons = [(sq2.vbar, compose_functors(xL, sq.vbar)), (sq2.ubar, compose_functors(xM, sq.ubar))]
                for xP in enumerate_functors(sq.P, sq2.P, constraints=cons, bounds=bounds):
                    m = SquareMorphism(xP, xL, xM, xK)
                    if all(check_square_morphism(sq, sq2, m).values()):
                        out.append(m)
    return out


def _lift_through_faithful(U, F, G, base_cell):
    """The unique cell ``F -> G`` with ``U`` image ``base_cell`` (``U`` faithful), or ``None``."""
    C = F.target
    comps = {}
    for o in F.source.objects:
        want = base_cell[o]
        hits = [h for h in C.hom(F.ob(o), G.ob(o)) if U.ar(h) == want]
        if not hits:
            return None
        comps[o] = hits[0]
    n = NatTransformation(F, G, comps)
    try:
        from .fincat import validate_nat_trans
        validate_nat_trans(n)
    except Exception:
        return None
    return n


def square_two_cells(sq, sq2, a, b, bounds=DEFAULT_BOUNDS):
    """All 2-cells ``a -> b`` of square morphisms, by brute force over the bottom-right cell."""
    out = []
    for wK in enumerate_nat_trans(a.xK, b.xK, bounds=bounds):
        wL = _lift_through_faithful(sq2.u, a.xL, b.xL, whisker(wK, sq.u))
        if wL is None:
            continue
        wM = _lift_through_faithful(sq2.v, a.xM, b.xM, whisker(wK, sq.v))
        if wM is None:
            continue
        wP = _lift_through_faithful(sq2.vbar, a.xP, b.xP, whisker(wL, sq.vbar))
        if wP is None:
            continue
        w = SquareTwoCell(a, b, wP, wL, wM, wK)
        if all(check_square_two_cell(sq, sq2, w).values()):
            out.append(w)
    return out


@dataclass
class FaithfulnessReport:
    objects_law: int
    objects_square: int
    cells_law: int
    cells_square: int
    bijective_on_objects: bool
    bijective_on_cells: bool
    functorial: bool
    mismatch: object = None

    @property
    def passed(self):
        return self.bijective_on_objects and self.bijective_on_cells and self.functorial

    def __bool__(self):
        return self.passed


def check_full_faithfulness(source, target, bounds=DEFAULT_BOUNDS, sq=None, sq2=None):
    """Compare the hom-category of laws with the hom-category of squares.

    Every law morphism and law 2-cell is lifted; the lifts must be exactly
    the independently enumerated square morphisms and square 2-cells, and
    lifting must preserve identities and vertical composition.
    """
    sq = sq or law_to_square(source)
    sq2 = sq2 or law_to_square(target)
    law_morphs = enumerate_law_morphisms(source, target, bounds=bounds)
    lifted = [lift_morphism(source, target, m, sq, sq2) for m in law_morphs]
    squares = square_morphisms(sq, sq2, bounds=bounds)
    lk, sk = [m.key() for m in lifted], [m.key() for m in squares]
    obj_ok = len(set(lk)) == len(lk) and set(lk) == set(sk)
    mismatch = None
    if not obj_ok:
        extra = set(sk) - set(lk)
        mismatch = ("object", len(extra), len(set(lk) - set(sk)))
    cells_law = cells_sq = 0
    cell_ok = True
    functorial = True
    by_key = {m.key(): m for m in squares}
    for i, m in enumerate(law_morphs):
        for j, m2 in enumerate(law_morphs):
            cells = enumerate_law_two_cells(source, target, m, m2, bounds=bounds)
            lc = [lift_two_cell(c, lifted[i], lifted[j]).key() for c in cells]
            a, b = by_key.get(lifted[i].key()), by_key.get(lifted[j].key())
            sc = [] if a is None or b is None else [w.key() for w in square_two_cells(sq, sq2, a, b, bounds)]
            cells_law += len(lc)
            cells_sq += len(sc)
            if set(lc) != set(sc) or len(set(lc)) != len(lc):
                cell_ok = False
                mismatch = mismatch or ("cell", i, j)
            if i == j:
                ident = LawTwoCell(m, m, identity_nat(m.carrier))
                lifted_id = lift_two_cell(ident, lifted[i], lifted[i])
                if any(w != identity_nat(w.source) for w in (lifted_id.wP, lifted_id.wL, lifted_id.wM)):
                    functorial = False
    return FaithfulnessReport(
        len(law_morphs), len(squares), cells_law, cells_sq, obj_ok, cell_ok, functorial, mismatch
    )


def lift_preserves_composition(l0, l1, l2, g, f, squares=None):
    """``lift(g f) = lift(g) lift(f)`` for law morphisms ``f: l0 -> l1`` and ``g: l1 -> l2``."""
    from .weakdl import compose_law_morphisms

    s0, s1, s2 = squares or (law_to_square(l0), law_to_square(l1), law_to_square(l2))
    lf = lift_morphism(l0, l1, f, s0, s1)
    lg = lift_morphism(l1, l2, g, s1, s2)
    lgf = lift_morphism(l0, l2, compose_law_morphisms(g, f), s0, s2)
    comp = SquareMorphism(
        compose_functors(lg.xP, lf.xP), compose_functors(lg.xL, lf.xL),
        compose_functors(lg.xM, lf.xM), compose_functors(lg.xK, lf.xK),
    )
    return comp == lgf


# consequences ------------------------------------------------------


def square_right_adjoint_data(sq, which):
    """Object-level value of the right adjoint: ``vbar`` for J, ``ubar`` for J_*, ``P`` for Y."""
    if which == "J":
        return sq.vbar
    if which == "Jstar":
        return sq.ubar
    if which == "Y":
        return sq.P
    raise ValueError(f"unknown embedding {which!r}")


def is_monadic(adj):
    F, _ = comparison_functor(adj, "monad")
    return is_isomorphism(F)


def is_comonadic(adj):
    F, _ = comparison_functor(adj, "comonad")
    return is_isomorphism(F)


def squares_isomorphic(sq, sq2, bounds=DEFAULT_BOUNDS):
    """Search for invertible corner functors forming a square morphism ``sq -> sq2``.

    Identity-on-objects structure is not assumed; each corner isomorphism is
    found by constrained search, so the result witnesses an isomorphism in
    the category of squares.
    """
    from .fincat import find_isomorphism

    for xK in enumerate_functors(sq.K, sq2.K, bounds=bounds, injective_objects=True):
        if not is_isomorphism(xK):
            continue
        for xL in enumerate_functors(sq.L, sq2.L, [(sq2.u, compose_functors(xK, sq.u))], bounds, True):
            if not is_isomorphism(xL):
                continue
            for xM in enumerate_functors(sq.M, sq2.M, [(sq2.v, compose_functors(xK, sq.v))], bounds, True):
                if not is_isomorphism(xM):
                    continue
                cons = [(sq2.vbar, compose_functors(xL, sq.vbar)), (sq2.ubar, compose_functors(xM, sq.ubar))]
                for xP in enumerate_functors(sq.P, sq2.P, cons, bounds, True):
                    if is_isomorphism(xP):
                        return SquareMorphism(xP, xL, xM, xK)
    return None


def j_prime_square(v_adj):
    """``J'`` applied to ``v: M -> K``: top and bottom ``v``, verticals identities."""
    v = v_adj.left
    M, K = v.source, v.target
    return make_square(v, identity_functor(M), identity_functor(K), v,
                       identity_adjunction(K), identity_adjunction(M), v_adj, v_adj)


def j_star_prime_square(u_adj):
    """Dual square for ``u: L -> K``: verticals ``u``, top and bottom identities."""
    u = u_adj.right
    L, K = u.source, u.target
    return make_square(identity_functor(L), u, u, identity_functor(K),
                       u_adj, u_adj, identity_adjunction(K), identity_adjunction(L))
