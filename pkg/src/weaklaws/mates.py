"""Mates across pairs of adjunctions, sections of the square mate and law reconstruction."""

from dataclasses import dataclass

from .config import DEFAULT_BOUNDS
from .errors import IllTyped, NoSectionExists, ReconstructionInvalid
from .fincat import (
    AdjunctionData,
    ComonadData,
    FunctorMap,
    MonadData,
    NatTransformation,
    compose_adjunctions,
    compose_functors,
    enumerate_nat_trans,
    identity_nat,
    identity_functor,
    label,
    validate_adjunction,
    vert,
    whisker,
)
from .fincat.structures import comparison_functor
from .fincat.search import is_isomorphism
from .weakdl import WeakMixedLaw, check_weak_law


@dataclass(frozen=True, eq=False)
class MateContext:
    """Adjunctions ``l -| r`` (A <-> B) and ``lb -| rb`` (C <-> D) framed by ``x: C -> A``, ``y: D -> B``.

    Cells ``phi: x rb -> r y`` correspond to cells ``psi: l x -> y lb``.
    """

    adj: AdjunctionData
    adj_bar: AdjunctionData
    x: object
    y: object

    def validate(self):
        validate_adjunction(self.adj)
        validate_adjunction(self.adj_bar)
        return self


def mate(ctx, cell, direction):
    """``direction="to_left"``: ``phi |-> eps y lb . l phi lb . l x etabar``;
    ``"to_right"``: ``psi |-> r y epsbar . r psi rb . eta x rb``."""
    l, r, eta, eps = ctx.adj.left, ctx.adj.right, ctx.adj.unit, ctx.adj.counit
    lb, rb, etab, epsb = ctx.adj_bar.left, ctx.adj_bar.right, ctx.adj_bar.unit, ctx.adj_bar.counit
    x, y = ctx.x, ctx.y
    if direction == "to_left":
        if not (cell.source == compose_functors(x, rb) and cell.target == compose_functors(r, y)):
            raise IllTyped("cell is not of shape x rb -> r y")
        return vert(whisker(eps, y, lb), whisker(l, cell, lb), whisker(l, x, etab))
    if direction == "to_right":
        if not (cell.source == compose_functors(l, x) and cell.target == compose_functors(y, lb)):
            raise IllTyped("cell is not of shape l x -> y lb")
        return vert(whisker(r, y, epsb), whisker(r, cell, rb), whisker(eta, x, rb))
    raise ValueError(f"unknown direction {direction!r}")


def mate_of_left_cell(adj, adj2, alpha):
    """For ``alpha: l -> l'`` the mate ``r' -> r`` is ``r eps' . r alpha r' . eta r'``."""
    r, r2 = adj.right, adj2.right
    return vert(whisker(r, adj2.counit), whisker(r, alpha, r2), whisker(adj.unit, r2))


def inverse_mates(adj, adj2, alpha, alpha_check):
    """``alpha alpha_check = 1`` exactly when the mates satisfy ``beta_hat beta = 1``."""
    beta = mate_of_left_cell(adj, adj2, alpha)
    beta_hat = mate_of_left_cell(adj2, adj, alpha_check)
    left = vert(alpha, alpha_check) == identity_nat(adj2.left)
    right = vert(beta_hat, beta) == identity_nat(adj2.right)
    return left, right


# square mates -----------------------------------------------------


def pi_context(sq):
    return MateContext(sq.adj_u, sq.adj_ubar, sq.v, sq.vbar)


def sigma_context(sq):
    return MateContext(sq.adj_v, sq.adj_vbar, sq.ubar, sq.u)


def theta_context(sq):
    return MateContext(sq.adj_vbar, sq.adj_v, sq.fbar, sq.f)


def square_mates(sq):
    """``pi: f v -> vbar fbar`` and ``sigma: ubar gbar -> g u``, mates of ``v ubar = u vbar``."""
    diag = NatTransformation(
        compose_functors(sq.v, sq.ubar), compose_functors(sq.u, sq.vbar),
        identity_nat(sq.diagonal).components,
    )
    pi = mate(pi_context(sq), diag, "to_left")
    sigma = mate(sigma_context(sq), diag, "to_right")
    return pi, sigma


def composite_adjunctions(sq):
    """``f v -| g u`` and ``vbar fbar -| ubar gbar``."""
    return compose_adjunctions(sq.adj_v, sq.adj_u), compose_adjunctions(sq.adj_ubar, sq.adj_vbar)


def is_invertible(n):
    C = n.codomain
    return all(C.is_iso(n[x]) for x in n.domain.objects)


@dataclass(frozen=True, eq=False)
class SectionData:
    pi: NatTransformation
    pi_check: NatTransformation
    sigma: NatTransformation
    sigma_hat: NatTransformation
    theta: NatTransformation


def sigma_hat_of(sq, pi_check):
    """``pi_check |-> sigma_hat``: the mate of a left cell across the composite adjunctions."""
    big, small = composite_adjunctions(sq)
    return mate_of_left_cell(small, big, pi_check)


def pi_check_of(sq, sigma_hat):
    """Inverse direction: the left cell whose mate is ``sigma_hat``."""
    big, small = composite_adjunctions(sq)
    l, l2 = small.left, big.left
    # mate of beta: r' -> r in the other direction is eps l' . l beta l' . l eta'
    return vert(whisker(small.counit, l2), whisker(l, sigma_hat, l2), whisker(l, big.unit))


def theta_of(sq, pi_check):
    return mate(theta_context(sq), pi_check, "to_right")


def canonical_section(sq):
    """Section read off the splitting monos, when ``sq`` came from a law."""
    if sq.law is None:
        return None
    from .lifting import _lift_monad_to_coalgebras
    from .fincat import em_category

    pi, _ = square_mates(sq)
    _, split = _lift_monad_to_coalgebras(sq.law, em_category(sq.law.comonad))
    comps = {}
    for x in sq.M.objects:
        src, tgt = pi.target.ob(x), pi.source.ob(x)
        m = (src, tgt, split[x][2])
        if not sq.L.has_morphism(m):
            return None
        comps[x] = m
    cand = NatTransformation(pi.target, pi.source, comps)
    if vert(pi, cand) != identity_nat(pi.target):
        return None
    return cand


def all_sections(sq, pi=None, bounds=DEFAULT_BOUNDS):
    pi = pi or square_mates(sq)[0]
    one = identity_nat(pi.target)
    return [s for s in enumerate_nat_trans(pi.target, pi.source, bounds=bounds) if vert(pi, s) == one]


def all_retractions(sq, sigma=None, bounds=DEFAULT_BOUNDS):
    sigma = sigma or square_mates(sq)[1]
    one = identity_nat(sigma.source)
    return [r for r in enumerate_nat_trans(sigma.target, sigma.source, bounds=bounds) if vert(r, sigma) == one]


def find_section(sq, pi=None, bounds=DEFAULT_BOUNDS):
    """Canonical splitting mono first, then lexicographic search; verified before return."""
    pi_, sigma = square_mates(sq)
    pi = pi or pi_
    cand = canonical_section(sq)
    if cand is None:
        one = identity_nat(pi.target)
        cand = next(
            (s for s in enumerate_nat_trans(pi.target, pi.source, bounds=bounds) if vert(pi, s) == one),
            None,
        )
    if cand is None:
        bad = next((x for x in pi.domain.objects if not _has_section(pi.codomain, pi[x])), None)
        raise NoSectionExists("pi has no section", witness=bad)
    sigma_hat = sigma_hat_of(sq, cand)
    if vert(sigma_hat, sigma) != identity_nat(sigma.source):
        raise NoSectionExists("retraction condition fails for the mate of the section")
    theta = theta_of(sq, cand)
    return SectionData(pi, cand, sigma, sigma_hat, theta)


def _has_section(C, f):
    s, t = C.morphisms[f]
    return any(C.comp(f, g) == C.id(t) for g in C.hom(t, s))


def reconstruct_law(sq, s=None, bounds=DEFAULT_BOUNDS):
    """``lam = v sigma f . v ubar theta . u pi g``, with ``t = u f`` and ``c = v g``."""
    s = s or find_section(sq, bounds=bounds)
    t_monad = sq.adj_u.monad()
    c_comonad = sq.adj_v.comonad()
    first = whisker(sq.u, s.pi, sq.g)
    second = whisker(sq.v, sq.ubar, s.theta)
    third = whisker(sq.v, s.sigma, sq.f)
    lam = vert(third, second, first)
    lam = NatTransformation(
        compose_functors(t_monad.functor, c_comonad.functor),
        compose_functors(c_comonad.functor, t_monad.functor),
        lam.components,
        name="lambda",
    )
    law = WeakMixedLaw(sq.K, t_monad, c_comonad, lam, name="reconstructed")
    report = check_weak_law(law)
    if not report.valid:
        raise ReconstructionInvalid("reconstructed cell is not a weak law", witness=report.as_dict())
    return law


@dataclass
class Classification:
    in_image: bool
    strict: bool
    witness: list = None

    def as_dict(self):
        return {"in_image": self.in_image, "strict": self.strict, "witness": self.witness}


def classify_square(sq, bounds=DEFAULT_BOUNDS):
    """In the image iff u, ubar monadic, v, vbar comonadic and pi has a section.

    ``witness`` lists every failing condition, so a square that fails
    several of them reports all of them.
    """
    checks = (
        ("u", sq.adj_u, "monad"),
        ("ubar", sq.adj_ubar, "monad"),
        ("v", sq.adj_v, "comonad"),
        ("vbar", sq.adj_vbar, "comonad"),
    )
    reasons = []
    for name, adj, side in checks:
        F, _ = comparison_functor(adj, side)
        if not is_isomorphism(F):
            reasons.append(f"{name} is not {side}ic")
    pi, _ = square_mates(sq)
    try:
        find_section(sq, pi, bounds=bounds)
    except NoSectionExists as e:
        reasons.append(f"pi has no section at {label(e.witness)}")
    if reasons:
        return Classification(False, False, reasons)
    return Classification(True, is_invertible(pi))


# hand-built squares outside the image -------------------------------


def _adjunction(left, right):
    """The adjunction between two poset maps, or between maps out of a terminal category.

    Units and counits are forced (at most one morphism per hom), so they are
    read off the hom-sets and the result is validated.
    """
    A, B = left.source, left.target
    rl, lr = compose_functors(right, left), compose_functors(left, right)
    unit = NatTransformation(identity_functor(A), rl, {a: A.hom(a, rl.ob(a))[0] for a in A.objects})
    counit = NatTransformation(lr, identity_functor(B), {b: B.hom(lr.ob(b), b)[0] for b in B.objects})
    return validate_adjunction(AdjunctionData(left, right, unit, counit))


def _poset_map(P, Q, images):
    obj = dict(zip(P.objects, images))
    arr = {f: Q.hom(obj[s], obj[t])[0] for f, (s, t) in P.morphisms.items()}
    return FunctorMap(P, Q, obj, arr)


def non_split_square():
    """Every corner the chain ``0 < 1 < 2``; ``pi`` has a component ``1 -> 2`` with no section."""
    from .fincat.examples import chain
    from .lifting import make_square

    C = chain(3)
    one = identity_functor(C)
    ubar = _poset_map(C, C, ["0", "2", "2"])
    fbar = _poset_map(C, C, ["0", "1", "1"])
    gbar = _poset_map(C, C, ["0", "0", "2"])
    idadj = _adjunction(one, one)
    return make_square(ubar, ubar, one, one, idadj, _adjunction(fbar, ubar), idadj, _adjunction(ubar, gbar))


def non_monadic_square():
    """``L = P`` the walking arrow over ``K = M`` terminal; ``u`` forgets the arrow, so it is not monadic."""
    from .fincat.examples import terminal_category, walking_arrow
    from .lifting import make_square

    T, W = terminal_category(), walking_arrow()
    bang = FunctorMap(W, T, {"0": "*", "1": "*"}, {f: "1*" for f in W.morphisms})
    zero = FunctorMap(T, W, {"*": "0"}, {"1*": "1_0"})
    one_T, one_W = identity_functor(T), identity_functor(W)
    adj_u = _adjunction(zero, bang)
    return make_square(one_W, bang, bang, one_T, adj_u, adj_u, _adjunction(one_T, one_T), _adjunction(one_W, one_W))
