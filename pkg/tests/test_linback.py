import itertools

import numpy as np
import pytest

import oracle
from weaklaws.errors import SearchSpaceExceeded, ShapeMismatch
from weaklaws.linback import (
    EntwiningCandidate,
    candidate,
    candidate_count,
    canonical_idempotent,
    check_entwining,
    comult_of_unit_is_tensor_square,
    groupoid_bialgebra,
    kron,
    make_algebra,
    make_coalgebra,
    matrix_canonical_split,
    rank,
    rank_factorization,
    rref,
    scalar_law,
    scalar_structures,
    search_entwinings,
    validate_fd_structures,
)
from weaklaws.weakdl import check_weak_law

# frozen from the index-form oracle in tests/oracle.py
GROUPOID2 = {"total": 65536, "valid": 26, "strict": 7, "weak_only": 19}
GROUPOID2_RANKS = {"0": 1, "1": 4, "2": 6, "3": 8, "4": 7}
SCALAR_F2_CSV = "index,axiom1,axiom2,axiom3,axiom4,strict,rank_e\n0,1,1,1,1,0,0\n1,1,1,1,1,1,1\n"


@pytest.fixture(scope="module")
def g2():
    return groupoid_bialgebra(2)


@pytest.fixture(scope="module")
def g2_census(g2):
    return search_entwinings(*g2)


def test_scalar_structures_valid():
    A, C = scalar_structures(1, 1, 1, 1)
    assert validate_fd_structures(A, C).passed


def test_groupoid_structures_valid(g2):
    assert validate_fd_structures(*g2).passed


def test_non_coassociative_comult_has_witness():
    A, _ = groupoid_bialgebra(2)
    # Delta(f0) = Delta(f1) = f0 (x) f0 breaks the counit law at f1
    comult = np.zeros((4, 2), dtype=int)
    comult[0, 0] = comult[0, 1] = 1
    C = make_coalgebra(comult, [1, 1])
    rep = validate_fd_structures(A, C)
    assert not rep.passed
    assert not rep.checks["right_counit"].passed
    name, where = rep.witness
    assert name in rep.checks and isinstance(where, tuple)


def test_shape_mismatch_raised():
    A = make_algebra(np.zeros((2, 3), dtype=int), [1, 0])
    C = make_coalgebra(np.zeros((1, 1), dtype=int), [1])
    with pytest.raises(ShapeMismatch):
        validate_fd_structures(A, C)


def test_identity_psi_is_strict():
    A, C = scalar_structures(1, 1, 1, 1)
    rep = check_entwining(EntwiningCandidate(A, C, np.array([[1]])))
    assert rep.valid and rep.strict


def test_zero_psi_is_weak_not_strict():
    A, C = scalar_structures(1, 1, 1, 1)
    cand = EntwiningCandidate(A, C, np.array([[0]]))
    rep = check_entwining(cand)
    assert rep.valid and not rep.strict
    sp = matrix_canonical_split(cand)
    assert sp.rank == 0 and not sp.idempotent.any()


def test_axiom1_failure_has_coordinate_witness(g2, g2_census):
    i = next(r["index"] for r in g2_census.rows if not r["axiom1"])
    rep = check_entwining(EntwiningCandidate(*g2, candidate(*g2, i)))
    assert not rep.axiom1.passed
    w = rep.axiom1.witness
    # both sides of axiom 1 are maps A (x) A (x) C -> C (x) A
    assert 0 <= w[0] < 4 and 0 <= w[1] < 8


def test_groupoid_census_counts(g2_census):
    s = g2_census.summary()
    assert {k: s[k] for k in GROUPOID2} == GROUPOID2
    assert s["rank_histogram"] == GROUPOID2_RANKS


def test_groupoid_census_matches_oracle(g2, g2_census):
    A, C = g2
    assert oracle.entwining_census(A.mult, A.unit, C.comult, C.counit, 2) == g2_census.rows


def test_strict_means_identity_idempotent(g2, g2_census):
    for r in g2_census.rows:
        if r["rank_e"] is None:
            continue
        sp = matrix_canonical_split(EntwiningCandidate(*g2, candidate(*g2, r["index"])))
        assert all(d.passed for d in sp.diagrams.values())
        assert r["strict"] == np.array_equal(sp.idempotent, np.eye(4, dtype=int))
        assert r["strict"] == (sp.rank == 4)


def test_weak_groupoid_law_has_intermediate_rank(g2, g2_census):
    ranks = {r["rank_e"] for r in g2_census.rows if r["rank_e"] is not None and not r["strict"]}
    assert ranks & {1, 2, 3}


def test_scalar_census_csv():
    A, C = scalar_structures(1, 1, 1, 1)
    census = search_entwinings(A, C)
    assert census.to_csv() == SCALAR_F2_CSV
    assert census.to_csv() == search_entwinings(A, C).to_csv()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_scalar_census_matches_oracle(p):
    A, C = scalar_structures(1, 1, 1, 1, p)
    census = search_entwinings(A, C)
    assert oracle.entwining_census(A.mult, A.unit, C.comult, C.counit, p) == census.rows


def test_groupoid3_over_f3_exceeds_bound():
    A, C = groupoid_bialgebra(3, p=3)
    assert validate_fd_structures(A, C).passed
    assert candidate_count(A, C) == 3 ** 81
    with pytest.raises(SearchSpaceExceeded):
        search_entwinings(A, C)


def test_comult_of_unit():
    assert comult_of_unit_is_tensor_square(*groupoid_bialgebra(1))
    assert not comult_of_unit_is_tensor_square(*groupoid_bialgebra(2))


def _axioms(rep):
    return tuple(getattr(rep, f"axiom{k}").passed for k in range(1, 5))


def _dim_one_cases(p):
    for m, u, d, e in itertools.product(range(1, p), repeat=4):
        if m * u % p == 1 and d * e % p == 1:
            for psi in range(p):
                yield m, u, d, e, psi


@pytest.mark.parametrize("p,count", [(2, 2), (3, 12), (5, 80)])
def test_scalar_law_agrees_across_backends(p, count):
    cases = list(_dim_one_cases(p))
    assert len(cases) == count
    for m, u, d, e, psi in cases:
        A, C = scalar_structures(m, u, d, e, p)
        cand = EntwiningCandidate(A, C, np.array([[psi]]))
        lin = check_entwining(cand)
        cat = check_weak_law(scalar_law(cand))
        ax, strict = oracle.entwining_axioms(m, u, d, e, psi, p)
        assert _axioms(lin) == _axioms(cat) == ax
        assert lin.strict == cat.strict == strict


def test_rref_and_rank():
    M = np.array([[1, 2, 0], [2, 4, 1], [0, 0, 1]])
    R, piv = rref(M, 5)
    assert piv == [0, 2] and rank(M, 5) == 2
    sigma, pi = rank_factorization(M, 5)
    assert np.array_equal(sigma @ pi % 5, M % 5)


def test_kron_left_factor_slowest():
    a, b = np.array([[1], [0]]), np.array([[0], [1], [0]])
    assert kron(a, b).ravel().tolist() == [0, 1, 0, 0, 0, 0]


def test_canonical_idempotent_is_idempotent(g2, g2_census):
    for r in g2_census.rows:
        if r["rank_e"] is not None:
            e = canonical_idempotent(EntwiningCandidate(*g2, candidate(*g2, r["index"])))
            assert np.array_equal(e @ e % 2, e)
