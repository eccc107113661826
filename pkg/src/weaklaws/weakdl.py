"""Weak mixed distributive laws and the 2-category they form.

A law is a quadruple ``(K, t, c, lam)`` with ``lam: tc -> ct``. Every axiom
is evaluated by building both sides of its diagram as natural
transformations and comparing component tables, so a failure always comes
with the first object where the two paths disagree.
"""

from dataclasses import dataclass, field

from .config import DEFAULT_BOUNDS
from .errors import IllTyped, InconsistencyDetected, NotComposable, SearchSpaceExceeded
from .fincat import (
    ComonadData,
    FinCategory,
    FunctorMap,
    MonadData,
    NatTransformation,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    first_difference,
    identity_comonad,
    identity_functor,
    identity_monad,
    identity_nat,
    is_natural,
    label,
    validate_monad,
    vert,
    whisker,
)
from .fincat.structures import _sub_category


@dataclass(frozen=True, eq=False)
class WeakMixedLaw:
    base: FinCategory
    monad: MonadData
    comonad: ComonadData
    law: NatTransformation
    name: str = ""

    @property
    def t(self):
        return self.monad.functor

    @property
    def c(self):
        return self.comonad.functor

    @property
    def mu(self):
        return self.monad.mult

    @property
    def eta(self):
        return self.monad.unit

    @property
    def delta(self):
        return self.comonad.comult

    @property
    def eps(self):
        return self.comonad.counit

    def with_law(self, lam, name=""):
        return WeakMixedLaw(self.base, self.monad, self.comonad, lam, name=name)


@dataclass
class AxiomVerdict:
    passed: bool
    witness: object = None

    def __bool__(self):
        return self.passed


@dataclass
class LawReport:
    axiom1: AxiomVerdict
    axiom2: AxiomVerdict
    axiom3: AxiomVerdict
    axiom4: AxiomVerdict
    counit_strict: AxiomVerdict
    unit_strict: AxiomVerdict

    @property
    def valid(self):
        return all((self.axiom1, self.axiom2, self.axiom3, self.axiom4))

    @property
    def strict(self):
        return self.valid and bool(self.counit_strict) and bool(self.unit_strict)

    def as_dict(self):
        out = {}
        for key in ("axiom1", "axiom2", "axiom3", "axiom4"):
            v = getattr(self, key)
            out[key] = {"pass": v.passed, "witness": None if v.passed else label(v.witness)}
        out["valid"] = self.valid
        out["strict"] = self.strict
        return out


def _verdict(lhs, rhs):
    x = first_difference(lhs, rhs)
    return AxiomVerdict(x is None, x)


# the four diagrams ----------------------------------------------------


def _law_shape(law):
    t, c, lam = law.t, law.c, law.law
    if not (lam.source == compose_functors(t, c) and lam.target == compose_functors(c, t)):
        raise IllTyped("law is not of shape tc -> ct")
    if not is_natural(lam):
        raise IllTyped("law is not natural")


def axiom_mult(law):
    """``lam . mu c = c mu . lam t . t lam`` on ``ttc``."""
    t, c, lam, mu = law.t, law.c, law.law, law.mu
    return _verdict(
        vert(lam, whisker(mu, c)),
        vert(whisker(c, mu), whisker(lam, t), whisker(t, lam)),
    )


def axiom_comult(law):
    """``delta t . lam = c lam . lam c . t delta`` on ``tc``."""
    t, c, lam, delta = law.t, law.c, law.law, law.delta
    return _verdict(
        vert(whisker(delta, t), lam),
        vert(whisker(c, lam), whisker(lam, c), whisker(t, delta)),
    )


def axiom_unit(law):
    """``lam . eta c = c eps t . c lam . c eta c . delta`` on ``c``."""
    t, c, lam, eta, delta, eps = law.t, law.c, law.law, law.eta, law.delta, law.eps
    return _verdict(
        vert(lam, whisker(eta, c)),
        vert(whisker(c, eps, t), whisker(c, lam), whisker(c, eta, c), delta),
    )


def axiom_counit(law):
    """``eps t . lam = mu . t eps t . t lam . t eta c`` on ``tc``."""
    t, c, lam, eta, mu, eps = law.t, law.c, law.law, law.eta, law.mu, law.eps
    return _verdict(
        vert(whisker(eps, t), lam),
        vert(mu, whisker(t, eps, t), whisker(t, lam), whisker(t, eta, c)),
    )


def counit_strictness(law):
    """``eps t . lam = t eps``."""
    return _verdict(vert(whisker(law.eps, law.t), law.law), whisker(law.t, law.eps))


def unit_strictness(law):
    """``lam . eta c = c eta``."""
    return _verdict(vert(law.law, whisker(law.eta, law.c)), whisker(law.c, law.eta))


def check_weak_law(law):
    _law_shape(law)
    return LawReport(
        axiom_mult(law),
        axiom_comult(law),
        axiom_unit(law),
        axiom_counit(law),
        counit_strictness(law),
        unit_strictness(law),
    )


def make_law(K, monad, comonad, lam, name="", validate=True):
    """Assemble a law; with ``validate`` the four axioms must hold."""
    law = WeakMixedLaw(K, monad, comonad, lam, name=name)
    if validate:
        report = check_weak_law(law)
        if not report.valid:
            bad = next(k for k in ("axiom1", "axiom2", "axiom3", "axiom4") if not getattr(report, k))
            raise IllTyped(f"{bad} fails at {label(getattr(report, bad).witness)}", witness=bad)
    return law


# weak morphisms of monads and comonads --------------------------------


def mnd_iota_one_cell(t, t2, x, xi):
    """First diagram for ``(x, xi): (K, t) -> (K', t')`` with ``xi: t'x -> xt``."""
    lhs = vert(whisker(x, t.mult), whisker(xi, t.functor), whisker(t2.functor, xi))
    rhs = vert(xi, whisker(t2.mult, x))
    return _verdict(lhs, rhs)


def mnd_iota_two_cell(t, t2, x, xi, x2, xi2, omega):
    """Second diagram: ``omega t . xi = x' mu . xi' t . t' omega t . t' xi . t' eta' x``."""
    T, T2 = t.functor, t2.functor
    lhs = vert(whisker(omega, T), xi)
    rhs = vert(
        whisker(x2, t.mult),
        whisker(xi2, T),
        whisker(T2, omega, T),
        whisker(T2, xi),
        whisker(T2, t2.unit, x),
    )
    return _verdict(lhs, rhs)


def cmd_pi_one_cell(c, c2, x, zeta):
    """Dual first diagram for ``(x, zeta): (K, c) -> (K', c')`` with ``zeta: xc -> c'x``."""
    lhs = vert(whisker(c2.functor, zeta), whisker(zeta, c.functor), whisker(x, c.comult))
    rhs = vert(whisker(c2.comult, x), zeta)
    return _verdict(lhs, rhs)


def cmd_pi_two_cell(c, c2, x, zeta, x2, zeta2, omega):
    """Dual second diagram: ``zeta' . omega c = c' eps' x' . c' zeta' . c' omega c . zeta c . x delta``."""
    C, C2 = c.functor, c2.functor
    lhs = vert(zeta2, whisker(omega, C))
    rhs = vert(
        whisker(C2, c2.counit, x2),
        whisker(C2, zeta2),
        whisker(C2, omega, C),
        whisker(zeta, C),
        whisker(x, c.comult),
    )
    return _verdict(lhs, rhs)


def check_hom_cell(kind, cell, data):
    """Dispatch to the 1-cell / 2-cell conditions of the weak monad (comonad) morphisms.

    ``data`` is a dict with keys ``source``, ``target`` (monads or comonads),
    ``x``, ``cell`` (``xi`` or ``zeta``) and for 2-cells also ``x2``,
    ``cell2`` and ``omega``.
    """
    src, tgt = data["source"], data["target"]
    if kind == "mnd_iota":
        if not (isinstance(src, MonadData) and isinstance(tgt, MonadData)):
            raise IllTyped("mnd_iota cells need monads")
        if cell == "1cell":
            return mnd_iota_one_cell(src, tgt, data["x"], data["cell"])
        return mnd_iota_two_cell(src, tgt, data["x"], data["cell"], data["x2"], data["cell2"], data["omega"])
    if kind == "cmd_pi":
        if not (isinstance(src, ComonadData) and isinstance(tgt, ComonadData)):
            raise IllTyped("cmd_pi cells need comonads")
        if cell == "1cell":
            return cmd_pi_one_cell(src, tgt, data["x"], data["cell"])
        return cmd_pi_two_cell(src, tgt, data["x"], data["cell"], data["x2"], data["cell2"], data["omega"])
    raise ValueError(f"unknown kind {kind!r}")


def hom_cell_characterisation(law):
    """The four hom-cell conditions equivalent to the weak law axioms.

    ``(c, lam)`` a weak monad morphism, ``(t, lam)`` a weak comonad morphism,
    ``eta: 1 -> (t, lam)`` a weak comonad 2-cell and ``eps: (c, lam) -> 1`` a
    weak monad 2-cell.
    """
    K = law.base
    one = identity_functor(K)
    t, c, lam = law.monad, law.comonad, law.law
    return {
        "c_lam_1cell": check_hom_cell("mnd_iota", "1cell", dict(source=t, target=t, x=c.functor, cell=lam)),
        "t_lam_1cell": check_hom_cell("cmd_pi", "1cell", dict(source=c, target=c, x=t.functor, cell=lam)),
        "eta_2cell": check_hom_cell(
            "cmd_pi", "2cell",
            dict(source=c, target=c, x=one, cell=identity_nat(c.functor), x2=t.functor, cell2=lam, omega=t.unit),
        ),
        "eps_2cell": check_hom_cell(
            "mnd_iota", "2cell",
            dict(source=t, target=t, x=c.functor, cell=lam, x2=one, cell2=identity_nat(t.functor), omega=c.counit),
        ),
    }


def derived_two_cells(law):
    """``mu: (t,lam)(t,lam) -> (t,lam)`` and ``delta: (c,lam) -> (c,lam)(c,lam)`` conditions."""
    t, c, lam = law.monad, law.comonad, law.law
    T, C = t.functor, c.functor
    lam_tt = vert(whisker(lam, T), whisker(T, lam))
    lam_cc = vert(whisker(C, lam), whisker(lam, C))
    return {
        "mu_2cell": cmd_pi_two_cell(c, c, compose_functors(T, T), lam_tt, T, lam, t.mult),
        "delta_2cell": mnd_iota_two_cell(t, t, C, lam, compose_functors(C, C), lam_cc, c.comult),
    }


def strictness_conditions(law):
    """Three characterisations of strictness, keyed ``iv``, ``v``, ``vi``.

    Each needs both multiplicative axioms. ``iv`` adds the two strict
    (co)unit equations, ``v`` the weak unit axiom with strict counit and
    ``vi`` the weak counit axiom with strict unit.
    """
    ax1, ax2 = axiom_mult(law).passed, axiom_comult(law).passed
    ax3, ax4 = axiom_unit(law).passed, axiom_counit(law).passed
    cs, us = counit_strictness(law).passed, unit_strictness(law).passed
    return {
        "iv": ax1 and ax2 and us and cs,
        "v": ax1 and ax2 and ax3 and cs,
        "vi": ax1 and ax2 and ax4 and us,
    }


# enumeration ----------------------------------------------------------


def enumerate_laws(K, monad, comonad, bounds=DEFAULT_BOUNDS):
    """All natural ``lam: tc -> ct`` with their reports, in component order."""
    tc = compose_functors(monad.functor, comonad.functor)
    ct = compose_functors(comonad.functor, monad.functor)
    out = []
    for lam in enumerate_nat_trans(tc, ct, bounds=bounds):
        law = WeakMixedLaw(K, monad, comonad, lam)
        out.append((lam, check_weak_law(law)))
    return out


def enumerate_monads(K, side="monad", bounds=DEFAULT_BOUNDS):
    """Every monad (or comonad) structure on every endofunctor of ``K``."""
    one = identity_functor(K)
    out = []
    for t in enumerate_functors(K, K, bounds=bounds):
        tt = compose_functors(t, t)
        if side == "monad":
            units = list(enumerate_nat_trans(one, t, bounds=bounds))
            if not units:
                continue
            mults = list(enumerate_nat_trans(tt, t, bounds=bounds))
            for eta in units:
                for mu in mults:
                    m = MonadData(t, mu, eta)
                    if _passes(m, side):
                        out.append(m)
        else:
            counits = list(enumerate_nat_trans(t, one, bounds=bounds))
            if not counits:
                continue
            comults = list(enumerate_nat_trans(t, tt, bounds=bounds))
            for eps in counits:
                for delta in comults:
                    m = ComonadData(t, delta, eps)
                    if _passes(m, side):
                        out.append(m)
    return out


def _passes(m, side):
    try:
        validate_monad(m, side)
    except Exception:
        return False
    return True


# 1-cells and 2-cells of Wdl(K) ---------------------------------------


@dataclass(frozen=True, eq=False)
class LawMorphism:
    carrier: FunctorMap
    monad_part: NatTransformation
    comonad_part: NatTransformation

    def key(self):
        x = self.carrier
        return (
            tuple(x.on_objects[o] for o in x.source.objects),
            tuple(x.on_morphisms[f] for f in x.source.morphisms),
            self.monad_part.key(),
            self.comonad_part.key(),
        )

    def __eq__(self, other):
        if not isinstance(other, LawMorphism):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self.monad_part == other.monad_part
            and self.comonad_part == other.comonad_part
        )

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True, eq=False)
class LawTwoCell:
    source: LawMorphism
    target: LawMorphism
    underlying: NatTransformation

    def __eq__(self, other):
        if not isinstance(other, LawTwoCell):
            return NotImplemented
        return self.underlying == other.underlying and self.source == other.source and self.target == other.target

    def __hash__(self):
        return hash(self.underlying.key())


def is_monad_morphism(t, t2, x, xi):
    """Strict monad morphism: multiplication diagram plus ``xi . eta' x = x eta``."""
    if not mnd_iota_one_cell(t, t2, x, xi):
        return False
    return vert(xi, whisker(t2.unit, x)) == whisker(x, t.unit)


def is_comonad_morphism(c, c2, x, zeta):
    if not cmd_pi_one_cell(c, c2, x, zeta):
        return False
    return vert(whisker(c2.counit, x), zeta) == whisker(x, c.counit)


def _morphism_shape(source, target, m):
    x = m.carrier
    if not (x.source == source.base and x.target == target.base):
        raise IllTyped("carrier has the wrong endpoints")
    if not (m.monad_part.source == compose_functors(target.t, x) and m.monad_part.target == compose_functors(x, source.t)):
        raise IllTyped("monad part is not of shape t'x -> xt")
    if not (m.comonad_part.source == compose_functors(x, source.c) and m.comonad_part.target == compose_functors(target.c, x)):
        raise IllTyped("comonad part is not of shape xc -> c'x")
    if not (is_natural(m.monad_part) and is_natural(m.comonad_part)):
        raise IllTyped("parts are not natural")
    if not is_monad_morphism(source.monad, target.monad, x, m.monad_part):
        raise IllTyped("(x, xi) is not a monad morphism", witness="xi")
    if not is_comonad_morphism(source.comonad, target.comonad, x, m.comonad_part):
        raise IllTyped("(x, zeta) is not a comonad morphism", witness="zeta")


def morphism_diagram_3(source, target, m):
    """``zeta t . x lam . xi c`` against the path through ``t'x delta``."""
    x, xi, zeta = m.carrier, m.monad_part, m.comonad_part
    t, c, lam = source.t, source.c, source.law
    t2, c2, lam2 = target.t, target.c, target.law
    lhs = vert(
        whisker(c2, x, source.eps, t),
        whisker(c2, x, lam),
        whisker(c2, xi, c),
        whisker(lam2, x, c),
        whisker(t2, zeta, c),
        whisker(t2, x, source.delta),
    )
    rhs = vert(whisker(zeta, t), whisker(x, lam), whisker(xi, c))
    return _verdict(lhs, rhs)


def morphism_diagram_4(source, target, m):
    """``zeta t . x lam . xi c`` against the path through ``t'x eta c``."""
    x, xi, zeta = m.carrier, m.monad_part, m.comonad_part
    t, c, lam = source.t, source.c, source.law
    t2, c2, lam2 = target.t, target.c, target.law
    lhs = vert(
        whisker(c2, x, source.mu),
        whisker(c2, xi, t),
        whisker(lam2, x, t),
        whisker(t2, zeta, t),
        whisker(t2, x, lam),
        whisker(t2, x, source.eta, c),
    )
    rhs = vert(whisker(zeta, t), whisker(x, lam), whisker(xi, c))
    return _verdict(lhs, rhs)


@dataclass
class MorphismReport:
    diag3: AxiomVerdict
    diag4: AxiomVerdict

    @property
    def passed(self):
        return self.diag3.passed

    def __bool__(self):
        return self.passed


def check_law_morphism(source, target, m):
    _morphism_shape(source, target, m)
    d3 = morphism_diagram_3(source, target, m)
    d4 = morphism_diagram_4(source, target, m)
    if d3.passed != d4.passed:
        raise InconsistencyDetected(
            f"diagram (3) says {d3.passed} but diagram (4) says {d4.passed}",
            witness=(d3.witness, d4.witness),
        )
    return MorphismReport(d3, d4)


@dataclass
class TwoCellReport:
    monad_square: AxiomVerdict
    comonad_square: AxiomVerdict

    @property
    def passed(self):
        return self.monad_square.passed and self.comonad_square.passed

    def __bool__(self):
        return self.passed


def check_law_two_cell(source, target, m, m2, omega):
    """Both squares: ``xi' . t' omega = omega t . xi`` and ``zeta' . omega c = c' omega . zeta``."""
    if not (omega.source == m.carrier and omega.target == m2.carrier):
        raise IllTyped("omega is not a transformation x -> x'")
    if not is_natural(omega):
        raise IllTyped("omega is not natural")
    sq1 = _verdict(vert(m2.monad_part, whisker(target.t, omega)), vert(whisker(omega, source.t), m.monad_part))
    sq2 = _verdict(vert(m2.comonad_part, whisker(omega, source.c)), vert(whisker(target.c, omega), m.comonad_part))
    return TwoCellReport(sq1, sq2)


def identity_law_morphism(law):
    x = identity_functor(law.base)
    return LawMorphism(x, identity_nat(law.t), identity_nat(law.c))


def compose_law_morphisms(g, f):
    """``g . f`` with ``f: L -> L'`` and ``g: L' -> L''``; parts pasted as in Mnd and Cmd."""
    if not (g.carrier.source == f.carrier.target):
        raise NotComposable("carriers do not compose")
    x2, x = g.carrier, f.carrier
    xi = vert(whisker(x2, f.monad_part), whisker(g.monad_part, x))
    zeta = vert(whisker(g.comonad_part, x), whisker(x2, f.comonad_part))
    return LawMorphism(compose_functors(x2, x), xi, zeta)


def identity_two_cell(m):
    return LawTwoCell(m, m, identity_nat(m.carrier))


def compose_law_two_cells(kind, b, a):
    """Vertical ``b . a`` or horizontal ``b * a`` composite of 2-cells."""
    if kind == "vertical":
        if not (a.target == b.source):
            raise NotComposable("2-cells are not vertically composable")
        return LawTwoCell(a.source, b.target, vert(b.underlying, a.underlying))
    if kind == "horizontal":
        if not (b.source.carrier.source == a.source.carrier.target):
            raise NotComposable("2-cells are not horizontally composable")
        om = vert(whisker(b.underlying, a.target.carrier), whisker(b.source.carrier, a.underlying))
        return LawTwoCell(
            compose_law_morphisms(b.source, a.source),
            compose_law_morphisms(b.target, a.target),
            om,
        )
    raise ValueError(f"unknown kind {kind!r}")


def enumerate_law_morphisms(source, target, bounds=DEFAULT_BOUNDS, include_failures=False):
    """All morphisms of weak laws ``source -> target``.

    With ``include_failures`` the result also holds well-typed candidates
    (monad and comonad morphisms) that fail diagram (3), paired with reports.
    """
    out = []
    for x in enumerate_functors(source.base, target.base, bounds=bounds):
        xis = [
            xi for xi in enumerate_nat_trans(compose_functors(target.t, x), compose_functors(x, source.t), bounds=bounds)
            if is_monad_morphism(source.monad, target.monad, x, xi)
        ]
        if not xis:
            continue
        zetas = [
            z for z in enumerate_nat_trans(compose_functors(x, source.c), compose_functors(target.c, x), bounds=bounds)
            if is_comonad_morphism(source.comonad, target.comonad, x, z)
        ]
        for xi in xis:
            for zeta in zetas:
                m = LawMorphism(x, xi, zeta)
                report = check_law_morphism(source, target, m)
                if include_failures:
                    out.append((m, report))
                elif report.passed:
                    out.append(m)
    return out


def enumerate_law_two_cells(source, target, m, m2, bounds=DEFAULT_BOUNDS):
    out = []
    for omega in enumerate_nat_trans(m.carrier, m2.carrier, bounds=bounds):
        if check_law_two_cell(source, target, m, m2, omega).passed:
            out.append(LawTwoCell(m, m2, omega))
    return out


# structural laws ------------------------------------------------------


def trivial_law(X):
    """``YX = (X, 1, 1, 1)``."""
    one = identity_functor(X)
    return WeakMixedLaw(X, identity_monad(X), identity_comonad(X), identity_nat(one), name=f"Y({X.name})")


def embed_one_sided(side, m):
    """``J(K, c) = (K, 1, c, 1)`` for a comonad, ``J_*(K, t) = (K, t, 1, 1)`` for a monad."""
    K = m.functor.source
    if side == "comonad":
        return WeakMixedLaw(K, identity_monad(K), m, identity_nat(m.functor), name="J")
    if side == "monad":
        return WeakMixedLaw(K, m, identity_comonad(K), identity_nat(m.functor), name="J*")
    raise ValueError(f"unknown side {side!r}")


# mixed algebras --------------------------------------------------------


@dataclass
class MixedAlgebraReport:
    action: AxiomVerdict
    coaction: AxiomVerdict
    pentagon: AxiomVerdict
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.action.passed and self.coaction.passed and self.pentagon.passed

    def __bool__(self):
        return self.passed


def check_mixed_algebra(law, a, alpha, gamma):
    """Action laws, coaction laws and ``gamma . alpha = c alpha . lam a . t gamma``."""
    t, c = law.t, law.c
    ta, ca = compose_functors(t, a), compose_functors(c, a)
    if not (alpha.source == ta and alpha.target == a and gamma.source == a and gamma.target == ca):
        raise IllTyped("action must be ta -> a and coaction a -> ca")
    if not (is_natural(alpha) and is_natural(gamma)):
        raise IllTyped("action or coaction is not natural")
    ida = identity_nat(a)
    unit = _verdict(vert(alpha, whisker(law.eta, a)), ida)
    assoc = _verdict(vert(alpha, whisker(law.mu, a)), vert(alpha, whisker(t, alpha)))
    counit = _verdict(vert(whisker(law.eps, a), gamma), ida)
    coassoc = _verdict(vert(whisker(law.delta, a), gamma), vert(whisker(c, gamma), gamma))
    pent = _verdict(
        vert(gamma, alpha),
        vert(whisker(c, alpha), whisker(law.law, a), whisker(t, gamma)),
    )
    action = unit if not unit.passed else assoc
    coaction = counit if not counit.passed else coassoc
    return MixedAlgebraReport(action, coaction, pent)


def mixed_algebras(law):
    """All mixed algebras with domain the terminal category, as ``(a, alpha, gamma)`` triples."""
    K, t, c = law.base, law.t, law.c
    lam = law.law
    out = []
    for a in K.objects:
        actions = [
            al for al in K.hom(t.ob(a), a)
            if K.comp(al, law.eta[a]) == K.id(a) and K.comp(al, law.mu[a]) == K.comp(al, t.ar(al))
        ]
        if not actions:
            continue
        coactions = [
            g for g in K.hom(a, c.ob(a))
            if K.comp(law.eps[a], g) == K.id(a) and K.comp(law.delta[a], g) == K.comp(c.ar(g), g)
        ]
        for al in actions:
            for g in coactions:
                if K.comp(g, al) == K.compose(c.ar(al), lam[a], t.ar(g)):
                    out.append((a, al, g))
    key = lambda o: (K.obj_index(o[0]), K.mor_index(o[1]), K.mor_index(o[2]))
    return sorted(out, key=key)


@dataclass(frozen=True, eq=False)
class MixedEM:
    category: FinCategory
    to_algebras: FunctorMap
    to_coalgebras: FunctorMap
    algebras: FinCategory
    coalgebras: FinCategory


def mixed_em_category(law, em_t=None, em_c=None):
    """Category of mixed algebras with its projections to ``K^t`` and ``K^c``.

    Objects ``(a, alpha, gamma)``; morphisms ``(src, tgt, f)`` with ``f``
    compatible with both structures.
    """
    from .fincat import em_category

    K, t, c = law.base, law.t, law.c
    em_t = em_t or em_category(law.monad)
    em_c = em_c or em_category(law.comonad)
    objs = mixed_algebras(law)

    def ok(x, y, f):
        return K.comp(f, x[1]) == K.comp(y[1], t.ar(f)) and K.comp(y[2], f) == K.comp(c.ar(f), x[2])

    P = _sub_category(objs, K, ok, name="mixedEM")
    L, M = em_t.category, em_c.category
    vbar = FunctorMap(
        P, L, {x: (x[0], x[1]) for x in P.objects},
        {m: ((m[0][0], m[0][1]), (m[1][0], m[1][1]), m[2]) for m in P.morphisms},
        name="vbar",
    )
    ubar = FunctorMap(
        P, M, {x: (x[0], x[2]) for x in P.objects},
        {m: ((m[0][0], m[0][2]), (m[1][0], m[1][2]), m[2]) for m in P.morphisms},
        name="ubar",
    )
    return MixedEM(P, vbar, ubar, L, M)


# hom-category from YX --------------------------------------------------


def mixed_algebras_with_domain(law, X, bounds=DEFAULT_BOUNDS):
    """All ``(a, alpha, gamma)`` with ``a: X -> K`` by brute force over functors and cells."""
    out = []
    t, c = law.t, law.c
    for a in enumerate_functors(X, law.base, bounds=bounds):
        ta, ca = compose_functors(t, a), compose_functors(c, a)
        alphas = [
            al for al in enumerate_nat_trans(ta, a, bounds=bounds)
            if vert(al, whisker(law.eta, a)) == identity_nat(a)
            and vert(al, whisker(law.mu, a)) == vert(al, whisker(t, al))
        ]
        if not alphas:
            continue
        gammas = [
            g for g in enumerate_nat_trans(a, ca, bounds=bounds)
            if vert(whisker(law.eps, a), g) == identity_nat(a)
            and vert(whisker(law.delta, a), g) == vert(whisker(c, g), g)
        ]
        for al in alphas:
            for g in gammas:
                if check_mixed_algebra(law, a, al, g).passed:
                    out.append((a, al, g))
    return out


def law_morphism_to_mixed_algebra(m):
    """Read a morphism ``YX -> law`` as the mixed algebra ``(a, xi, zeta)``."""
    a = m.carrier
    xi = NatTransformation(m.monad_part.source, a, m.monad_part.components)
    zeta = NatTransformation(a, m.comonad_part.target, m.comonad_part.components)
    return a, xi, zeta


def mixed_algebra_to_law_morphism(a, alpha, gamma):
    return LawMorphism(a, alpha, gamma)


def assert_search_bound(n, bounds=DEFAULT_BOUNDS):
    if n > bounds.max_search:
        raise SearchSpaceExceeded(f"{n} exceeds {bounds.max_search}", witness=n)
