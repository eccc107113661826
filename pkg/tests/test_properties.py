"""Randomised invariants over small exhaustively enumerated families."""

from functools import lru_cache

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from weaklaws import corpus
from weaklaws.fincat import (
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    hcomp,
    identity_functor,
    identity_nat,
    vert,
    whisker,
)
from weaklaws.fincat.io import dump_json
from weaklaws.linback import (
    EntwiningCandidate,
    candidate,
    check_entwining,
    groupoid_bialgebra,
    kron,
    mm,
    rank,
    rank_factorization,
    rref,
)
from weaklaws.mates import mate, pi_context, sigma_context
from weaklaws.lifting import law_to_square
from weaklaws.serialize import law_from_json, law_to_json
from weaklaws.weakdl import check_weak_law

import oracle


@lru_cache(maxsize=None)
def base():
    return corpus.triple("zero-identity").base


@lru_cache(maxsize=None)
def endos():
    return tuple(enumerate_functors(base(), base()))


@lru_cache(maxsize=None)
def cells(i, j):
    return tuple(enumerate_nat_trans(endos()[i], endos()[j]))


functor_index = st.integers(min_value=0, max_value=len(endos()) - 1)


@given(functor_index, functor_index, functor_index)
def test_functor_composition_associative(i, j, k):
    F, G, H = (endos()[n] for n in (i, j, k))
    assert compose_functors(compose_functors(F, G), H) == compose_functors(F, compose_functors(G, H))
    one = identity_functor(base())
    assert compose_functors(one, F) == F == compose_functors(F, one)


@st.composite
def cell_chain(draw, length):
    """A composable chain of cells ``F0 -> F1 -> ...`` with at least one cell between each pair."""
    idx = [draw(functor_index)]
    out = []
    for _ in range(length):
        targets = [j for j in range(len(endos())) if cells(idx[-1], j)]
        j = draw(st.sampled_from(targets))
        out.append(draw(st.sampled_from(cells(idx[-1], j))))
        idx.append(j)
    return out


@settings(max_examples=50, deadline=None)
@given(cell_chain(3))
def test_vertical_associative_and_unital(chain):
    a, b, c = chain
    assert vert(vert(c, b), a) == vert(c, vert(b, a)) == vert(c, b, a)
    assert vert(a, identity_nat(a.source)) == a == vert(identity_nat(a.target), a)


@settings(max_examples=50, deadline=None)
@given(cell_chain(2), cell_chain(2))
def test_interchange(inner, outer):
    a1, a2 = inner
    b1, b2 = outer
    assert hcomp(vert(b2, b1), vert(a2, a1)) == vert(hcomp(b2, a2), hcomp(b1, a1))


@settings(max_examples=50, deadline=None)
@given(cell_chain(1), functor_index, functor_index)
def test_whiskering_is_functorial_in_functors(chain, i, j):
    (a,) = chain
    F, G = endos()[i], endos()[j]
    assert whisker(F, whisker(G, a)) == whisker(compose_functors(F, G), a)
    assert whisker(whisker(a, F), G) == whisker(a, compose_functors(F, G))


@lru_cache(maxsize=None)
def mate_cells():
    out = []
    for law in corpus.laws():
        sq = law_to_square(law)
        for ctx in (pi_context(sq), sigma_context(sq)):
            src = compose_functors(ctx.x, ctx.adj_bar.right)
            tgt = compose_functors(ctx.adj.right, ctx.y)
            for cell in enumerate_nat_trans(src, tgt):
                out.append((ctx, cell))
    return tuple(out)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_mate_involution(data):
    ctx, cell = data.draw(st.sampled_from(mate_cells()))
    left = mate(ctx, cell, "to_left")
    assert mate(ctx, left, "to_right") == cell
    assert mate(ctx, mate(ctx, left, "to_right"), "to_left") == left


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(range(len(corpus.laws()))))
def test_law_json_round_trip(i):
    law = corpus.laws()[i]
    back = law_from_json(law_to_json(law))
    assert dump_json(law_to_json(back)) == dump_json(law_to_json(law))
    assert check_weak_law(back).as_dict() == check_weak_law(law).as_dict()


primes = st.sampled_from([2, 3, 5, 7])


@st.composite
def matrices(draw, p=None, max_dim=5):
    p = p or draw(primes)
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
    return p, np.array(entries, dtype=np.int64).reshape(r, c)


@given(matrices())
def test_rref_invariants(pm):
    p, M = pm
    R, piv = rref(M, p)
    assert np.array_equal(rref(R, p)[0], R)
    assert len(piv) == rank(M, p) <= min(M.shape)
    for r, j in enumerate(piv):
        assert R[r, j] == 1 and int(R[:, j].sum() % p) == 1
    sigma, pi = rank_factorization(M, p)
    assert np.array_equal(mm(p, sigma, pi), M % p)
    assert rank(M.T, p) == rank(M, p)


@given(matrices(), matrices(), matrices(), matrices())
def test_kron_mixed_product(a, b, c, d):
    p = 2
    A, B, C, D = (m % p for _, m in (a, b, c, d))
    # shapes only need to chain for the product; trim to square-compatible views
    n, m = min(A.shape[1], C.shape[0]), min(B.shape[1], D.shape[0])
    A, C, B, D = A[:, :n], C[:n, :], B[:, :m], D[:m, :]
    assert np.array_equal(mm(p, kron(A, B), kron(C, D)), kron(mm(p, A, C), mm(p, B, D)))


@lru_cache(maxsize=None)
def g2_oracle():
    A, C = groupoid_bialgebra(2)
    return A, C, oracle.entwining_census(A.mult, A.unit, C.comult, C.counit, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 16 - 1))
def test_single_candidate_matches_oracle(i):
    A, C, rows = g2_oracle()
    psi = candidate(A, C, i)
    weights = 2 ** np.arange(15, -1, -1)
    assert int((psi.ravel() * weights).sum()) == i
    rep = check_entwining(EntwiningCandidate(A, C, psi))
    row = rows[i]
    assert tuple(getattr(rep, f"axiom{k}").passed for k in range(1, 5)) == tuple(row[f"axiom{k}"] for k in range(1, 5))
    assert (rep.valid and rep.strict) == row["strict"]
