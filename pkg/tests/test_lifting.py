import itertools

import pytest

from weaklaws import corpus
from weaklaws.errors import LiftFails
from weaklaws.fincat import (
    compose_functors,
    em_category,
    find_isomorphism,
    identity_functor,
    identity_nat,
    karoubi_complete,
    vert,
)
from weaklaws.fincat.examples import chain, idempotent_monoid, terminal_category, walking_arrow
from weaklaws.lifting import (
    canonical_idempotent,
    canonical_splitting,
    check_square_morphism,
    check_square_two_cell,
    delta_square,
    is_comonadic,
    is_monadic,
    j_prime_square,
    j_star_prime_square,
    law_to_square,
    splitting_diagrams,
    lift_law_morphism_identity,
    lift_morphism,
    lift_preserves_composition,
    lift_two_cell,
    mixed_em_isomorphisms,
    square_right_adjoint_data,
    squares_isomorphic,
    weak_lift,
)
from weaklaws.weakdl import (
    LawTwoCell,
    check_mixed_algebra,
    compose_law_two_cells,
    embed_one_sided,
    enumerate_law_morphisms,
    enumerate_law_two_cells,
    mixed_em_category,
    trivial_law,
)

from test_weakdl import WEAK_LAWS

LIFTED_MORPHISMS, LIFTED_TWO_CELLS = 1146, 33589


@pytest.fixture(scope="module")
def squares(corpus_laws):
    return {law.name: law_to_square(law) for law in corpus_laws}


# canonical splitting ----------------------------------------------


def test_strict_laws_have_identity_idempotent(corpus_laws):
    for law in corpus_laws:
        s = canonical_splitting(law)
        assert s.is_trivial == (law.name not in WEAK_LAWS)
        if s.is_trivial:
            tc = compose_functors(law.t, law.c)
            assert s.image == tc
            assert s.pi == identity_nat(tc) == s.sigma


def test_trivial_law_idempotent_is_identity():
    for K in (walking_arrow(), karoubi_complete(idempotent_monoid())[0]):
        law = trivial_law(K)
        e = canonical_idempotent(law)
        assert e == identity_nat(e.source)


def test_splitting_invariants(corpus_laws):
    for law in corpus_laws:
        s = canonical_splitting(law)
        e = s.idempotent
        assert vert(e, e) == e
        assert vert(s.pi, s.sigma) == identity_nat(s.image)
        assert vert(s.sigma, s.pi) == e
        assert check_mixed_algebra(law, s.image, s.action, s.coaction).passed
        assert splitting_diagrams(law, s) == {"i": True, "ii": True, "iii": True}


# weak lifts -------------------------------------------------------


def test_lift_for_one_sided_law_is_t():
    tr = corpus.triple("zero-mixed")
    law = embed_one_sided("monad", tr.monad)
    em_c = em_category(law.comonad)
    tbar = weak_lift(law, "monad_on_Kc", em_c)
    U = em_c.forgetful
    assert compose_functors(U, tbar.functor) == compose_functors(law.t, U)


def test_lift_for_trivial_law_is_identity():
    law = trivial_law(chain(3))
    tbar = weak_lift(law, "monad_on_Kc")
    cbar = weak_lift(law, "comonad_on_Kt")
    assert tbar.functor == identity_functor(tbar.functor.source)
    assert cbar.functor == identity_functor(cbar.functor.source)
    assert tbar.mult == identity_nat(tbar.functor)


def test_mixed_em_isomorphisms(corpus_laws):
    for law in corpus_laws:
        mixed = mixed_em_category(law)
        lift_t, lift_c = mixed_em_isomorphisms(law, mixed)
        for lifted in (lift_t, lift_c):
            assert compose_functors(lifted.from_mixed, lifted.to_mixed) == identity_functor(lifted.em.category)
            assert compose_functors(lifted.to_mixed, lifted.from_mixed) == identity_functor(mixed.category)


# squares ----------------------------------------------------------


def test_trivial_law_gives_delta_square():
    for X in (terminal_category(), walking_arrow()):
        sq = law_to_square(trivial_law(X))
        assert squares_isomorphic(sq, delta_square(X)) is not None
        d = delta_square(X)
        assert all(C == X for C in d.corners().values())
        assert all(F == identity_functor(X) for F in d.edges().values())


def test_one_sided_comonad_square_is_j_prime():
    tr = corpus.triple("zero-mixed")
    law = embed_one_sided("comonad", tr.comonad)
    sq = law_to_square(law)
    ref = j_prime_square(em_category(tr.comonad).adjunction)
    assert squares_isomorphic(sq, ref) is not None


def test_one_sided_monad_square_is_j_star_prime():
    tr = corpus.triple("zero-mixed")
    law = embed_one_sided("monad", tr.monad)
    ref = j_star_prime_square(em_category(tr.monad).adjunction)
    assert squares_isomorphic(law_to_square(law), ref) is not None


def test_corpus_squares_are_valid(squares):
    for sq in squares.values():
        assert compose_functors(sq.v, sq.ubar) == compose_functors(sq.u, sq.vbar)
        assert is_monadic(sq.adj_u) and is_monadic(sq.adj_ubar)
        assert is_comonadic(sq.adj_v) and is_comonadic(sq.adj_vbar)


# lifting morphisms and 2-cells -------------------------------------


def test_identity_lifts_to_identity(corpus_laws, squares):
    for law in corpus_laws:
        m = lift_law_morphism_identity(law, squares[law.name])
        for F in (m.xP, m.xL, m.xM, m.xK):
            assert F == identity_functor(F.source)


def test_lift_is_functorial(squares):
    laws = [corpus.law(n) for n in ("idempotent/1", "zero-identity/1", "zero-identity/2", "zero-mixed/1")]
    checked = 0
    for a, b, c in itertools.product(laws, repeat=3):
        sqs = (squares[a.name], squares[b.name], squares[c.name])
        for f in enumerate_law_morphisms(a, b):
            for g in enumerate_law_morphisms(b, c):
                assert lift_preserves_composition(a, b, c, g, f, sqs)
                checked += 1
    assert checked > 0


def test_failing_candidates_do_not_lift(corpus_laws, squares):
    for s, t in itertools.product(corpus_laws, repeat=2):
        for m, rep in enumerate_law_morphisms(s, t, include_failures=True):
            if rep.passed:
                lifted = lift_morphism(s, t, m, squares[s.name], squares[t.name])
                assert all(check_square_morphism(squares[s.name], squares[t.name], lifted).values())
            else:
                with pytest.raises(LiftFails) as err:
                    lift_morphism(s, t, m, squares[s.name], squares[t.name])
                assert err.value.witness is not None


def test_two_cell_lifts_compose_vertically(squares):
    s, t = corpus.law("zero-identity/1"), corpus.law("zero-identity/2")
    sq, sq2 = squares[s.name], squares[t.name]
    ms = enumerate_law_morphisms(s, t)
    lifted = {m.key(): lift_morphism(s, t, m, sq, sq2) for m in ms}
    checked = 0
    for a, b, c in itertools.product(ms, repeat=3):
        for x in enumerate_law_two_cells(s, t, a, b):
            for y in enumerate_law_two_cells(s, t, b, c):
                yx = compose_law_two_cells("vertical", y, x)
                lx = lift_two_cell(x, lifted[a.key()], lifted[b.key()])
                ly = lift_two_cell(y, lifted[b.key()], lifted[c.key()])
                lyx = lift_two_cell(yx, lifted[a.key()], lifted[c.key()])
                assert all(check_square_two_cell(sq, sq2, lyx).values())
                for corner in ("wP", "wL", "wM"):
                    assert vert(getattr(ly, corner), getattr(lx, corner)) == getattr(lyx, corner)
                checked += 1
    assert checked > 0
    m = ms[0]
    ident = lift_two_cell(LawTwoCell(m, m, identity_nat(m.carrier)), lifted[m.key()], lifted[m.key()])
    assert ident.wP == identity_nat(ident.wP.source)


# consequences -----------------------------------------------------


def test_right_adjoint_values(squares):
    X = walking_arrow()
    assert square_right_adjoint_data(delta_square(X), "Y") == X
    for name, sq in squares.items():
        assert square_right_adjoint_data(sq, "Y") == sq.P
        assert square_right_adjoint_data(sq, "J") == sq.vbar
        assert is_comonadic(sq.adj_vbar)


def test_j_prime_value_is_v():
    tr = corpus.triple("arrow-interior")
    adj = em_category(tr.comonad).adjunction
    sq = j_prime_square(adj)
    assert square_right_adjoint_data(sq, "J") == adj.left


def test_unknown_embedding():
    with pytest.raises(ValueError):
        square_right_adjoint_data(delta_square(walking_arrow()), "H")
