"""Weak entwining structures: algebras and coalgebras as exact matrices over ``F_p``.

Vectors are columns, so a linear map ``V -> W`` is a ``dim W x dim V``
matrix. Tensor products are Kronecker products with the left factor varying
slowest: the basis vector ``e_i (x) f_j`` of ``V (x) W`` has index
``i * dim W + j``. An entwining candidate is ``psi: A (x) C -> C (x) A``,
the linear incarnation of ``lam: tc -> ct``.
"""

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_BOUNDS
from .errors import SearchSpaceExceeded, ShapeMismatch
from .weakdl import AxiomVerdict, LawReport


def _reduce(x, p):
    return np.asarray(x, dtype=np.int64) % p


def is_prime(p):
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True, eq=False)
class FDAlgebra:
    dim: int
    mult: np.ndarray
    unit: np.ndarray
    prime: int = 2


@dataclass(frozen=True, eq=False)
class FDCoalgebra:
    dim: int
    comult: np.ndarray
    counit: np.ndarray
    prime: int = 2


@dataclass(frozen=True, eq=False)
class EntwiningCandidate:
    algebra: FDAlgebra
    coalgebra: FDCoalgebra
    psi: np.ndarray

    @property
    def prime(self):
        return self.algebra.prime


def make_algebra(mult, unit, p=2):
    mult, unit = _reduce(mult, p), _reduce(unit, p).reshape(-1, 1)
    return FDAlgebra(mult.shape[0], mult, unit, p)


def make_coalgebra(comult, counit, p=2):
    comult, counit = _reduce(comult, p), _reduce(counit, p).reshape(1, -1)
    return FDCoalgebra(comult.shape[1], comult, counit, p)


def eye(n):
    return np.eye(n, dtype=np.int64)


def kron(*ms):
    out = np.ones((1, 1), dtype=np.int64)
    for m in ms:
        out = np.kron(out, m)
    return out


def mm(p, *ms):
    """Product ``ms[0] ms[1] ...`` reduced mod ``p`` after each step."""
    out = ms[-1] % p
    for m in reversed(ms[:-1]):
        out = (m @ out) % p
    return out


def _verdict(lhs, rhs):
    if lhs.shape != rhs.shape:
        raise ShapeMismatch(f"shapes {lhs.shape} and {rhs.shape} differ")
    diff = np.argwhere(lhs != rhs)
    if len(diff):
        return AxiomVerdict(False, tuple(int(i) for i in diff[0]))
    return AxiomVerdict(True)


@dataclass
class StructureReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(v.passed for v in self.checks.values())

    @property
    def witness(self):
        for k, v in self.checks.items():
            if not v.passed:
                return (k, v.witness)
        return None

    def __bool__(self):
        return self.passed


def _expect_shape(m, shape, what):
    if m.shape != shape:
        raise ShapeMismatch(f"{what} has shape {m.shape}, expected {shape}", witness=what)


def validate_fd_structures(A, C):
    """(Co)associativity and (co)unit laws as exact matrix identities."""
    p = A.prime
    if C.prime != p:
        raise ShapeMismatch("algebra and coalgebra live over different fields")
    a, c = A.dim, C.dim
    _expect_shape(A.mult, (a, a * a), "mult")
    _expect_shape(A.unit, (a, 1), "unit")
    _expect_shape(C.comult, (c * c, c), "comult")
    _expect_shape(C.counit, (1, c), "counit")
    m, u, d, e = A.mult, A.unit, C.comult, C.counit
    Ia, Ic = eye(a), eye(c)
    checks = {
        "assoc": _verdict(mm(p, m, kron(m, Ia)), mm(p, m, kron(Ia, m))),
        "left_unit": _verdict(mm(p, m, kron(u, Ia)), Ia),
        "right_unit": _verdict(mm(p, m, kron(Ia, u)), Ia),
        "coassoc": _verdict(mm(p, kron(d, Ic), d), mm(p, kron(Ic, d), d)),
        "left_counit": _verdict(mm(p, kron(e, Ic), d), Ic),
        "right_counit": _verdict(mm(p, kron(Ic, e), d), Ic),
    }
    return StructureReport(checks)


def _axiom_sides(A, C, psi):
    p = A.prime
    a, c = A.dim, C.dim
    m, u, d, e = A.mult, A.unit, C.comult, C.counit
    Ia, Ic = eye(a), eye(c)
    return {
        "axiom1": (mm(p, psi, kron(m, Ic)), mm(p, kron(Ic, m), kron(psi, Ia), kron(Ia, psi))),
        "axiom2": (mm(p, kron(Ic, psi), kron(psi, Ic), kron(Ia, d)), mm(p, kron(d, Ia), psi)),
        "axiom3": (mm(p, psi, kron(u, Ic)), mm(p, kron(Ic, e, Ia), kron(Ic, psi), kron(Ic, u, Ic), d)),
        "axiom4": (mm(p, kron(e, Ia), psi), mm(p, m, kron(Ia, e, Ia), kron(Ia, psi), kron(Ia, u, Ic))),
        "counit_strict": (mm(p, kron(e, Ia), psi), kron(Ia, e)),
        "unit_strict": (mm(p, psi, kron(u, Ic)), kron(Ic, u)),
    }


def check_entwining(cand):
    A, C, psi = cand.algebra, cand.coalgebra, _reduce(cand.psi, cand.prime)
    _expect_shape(psi, (C.dim * A.dim, A.dim * C.dim), "psi")
    sides = _axiom_sides(A, C, psi)
    v = {k: _verdict(*sides[k]) for k in sides}
    return LawReport(v["axiom1"], v["axiom2"], v["axiom3"], v["axiom4"], v["counit_strict"], v["unit_strict"])


# exact linear algebra over F_p ---------------------------------------


def rref(M, p):
    """Reduced row echelon form mod ``p`` and the pivot columns, left to right."""
    R = _reduce(M, p).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for j in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, j])[0]
        if not len(nz):
            continue
        k = r + int(nz[0])
        R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, j]), -1, p)) % p
        for i in range(rows):
            if i != r and R[i, j]:
                R[i] = (R[i] - R[i, j] * R[r]) % p
        pivots.append(j)
        r += 1
    return R, pivots


def rank(M, p):
    return len(rref(M, p)[1])


def rank_factorization(M, p):
    """``M = sigma pi`` with ``sigma`` the pivot columns of ``M`` and ``pi`` the nonzero rows of its RREF."""
    R, piv = rref(M, p)
    M = _reduce(M, p)
    return M[:, piv], R[: len(piv), :]


@dataclass(frozen=True, eq=False)
class MatrixSplitting:
    idempotent: np.ndarray
    rank: int
    pi: np.ndarray
    sigma: np.ndarray
    action: np.ndarray
    coaction: np.ndarray
    eta1: np.ndarray
    eps1: np.ndarray
    diagrams: dict


def canonical_idempotent(cand):
    """``e = (eps (x) 1_A (x) 1_C)(psi (x) 1_C)(1_A (x) Delta)`` on ``A (x) C``."""
    A, C, p = cand.algebra, cand.coalgebra, cand.prime
    Ia, Ic = eye(A.dim), eye(C.dim)
    return mm(p, kron(C.counit, Ia, Ic), kron(_reduce(cand.psi, p), Ic), kron(Ia, C.comult))


def mixed_algebra_checks(cand, r, alpha, gamma):
    A, C, p = cand.algebra, cand.coalgebra, cand.prime
    psi = _reduce(cand.psi, p)
    Ia, Ic, Ir = eye(A.dim), eye(C.dim), eye(r)
    return {
        "unit": _verdict(mm(p, alpha, kron(A.unit, Ir)), Ir),
        "assoc": _verdict(mm(p, alpha, kron(A.mult, Ir)), mm(p, alpha, kron(Ia, alpha))),
        "counit": _verdict(mm(p, kron(C.counit, Ir), gamma), Ir),
        "coassoc": _verdict(mm(p, kron(C.comult, Ir), gamma), mm(p, kron(Ic, gamma), gamma)),
        "compatible": _verdict(mm(p, gamma, alpha), mm(p, kron(Ic, alpha), kron(psi, Ir), kron(Ia, gamma))),
    }


def matrix_canonical_split(cand):
    """Split ``e`` by rank factorisation and verify the induced structure."""
    A, C, p = cand.algebra, cand.coalgebra, cand.prime
    psi = _reduce(cand.psi, p)
    Ia, Ic = eye(A.dim), eye(C.dim)
    e = canonical_idempotent(cand)
    if not np.array_equal(mm(p, e, e), e):
        raise ShapeMismatch("canonical idempotent is not idempotent", witness="e")
    sigma, pi = rank_factorization(e, p)
    r = sigma.shape[1]
    Ir = eye(r)
    alpha = mm(p, pi, kron(A.mult, Ic), kron(Ia, sigma))
    gamma = mm(p, kron(Ic, pi), kron(psi, Ic), kron(Ia, C.comult), sigma)
    eta1 = mm(p, pi, kron(A.unit, Ic))
    eps1 = mm(p, kron(Ia, C.counit), sigma)
    diagrams = {
        "pi_sigma": _verdict(mm(p, pi, sigma), Ir),
        "sigma_pi": _verdict(mm(p, sigma, pi), e),
        "i": _verdict(
            mm(p, kron(Ic, eps1), kron(Ic, alpha), kron(psi, Ir), kron(Ia, gamma), kron(Ia, eta1)), psi
        ),
        "ii": _verdict(mm(p, gamma, eta1), mm(p, kron(Ic, eta1), C.comult)),
        "iii": _verdict(mm(p, eps1, alpha, kron(Ia, eta1)), mm(p, kron(C.counit, Ia), psi)),
    }
    diagrams.update({f"mixed_{k}": v for k, v in mixed_algebra_checks(cand, r, alpha, gamma).items()})
    return MatrixSplitting(e, r, pi, sigma, alpha, gamma, eta1, eps1, diagrams)


# examples -----------------------------------------------------------


def groupoid_bialgebra(n, p=2, bounds=DEFAULT_BOUNDS):
    """``k^n`` with pointwise product and ``Delta(e_i) = e_i (x) e_i``, ``eps(e_i) = 1``."""
    if n < 1 or n > bounds.max_groupoid:
        raise SearchSpaceExceeded(f"groupoid size {n} outside 1..{bounds.max_groupoid}", witness=n)
    mult = np.zeros((n, n * n), dtype=np.int64)
    comult = np.zeros((n * n, n), dtype=np.int64)
    for i in range(n):
        mult[i, i * n + i] = 1
        comult[i * n + i, i] = 1
    A = make_algebra(mult, np.ones(n, dtype=np.int64), p)
    C = make_coalgebra(comult, np.ones(n, dtype=np.int64), p)
    rep = validate_fd_structures(A, C)
    if not rep.passed:
        raise ShapeMismatch(f"groupoid structures fail {rep.witness}")
    return A, C


def comult_of_unit_is_tensor_square(A, C):
    """``Delta(1) = 1 (x) 1`` read with the algebra unit as an element of ``C`` (same dimension)."""
    p = A.prime
    one = A.unit
    return np.array_equal(mm(p, C.comult, one), kron(one, one) % p)


def scalar_structures(m, u, d, e, p=2):
    """Dimension-1 algebra and coalgebra from four scalars."""
    return make_algebra([[m]], [u], p), make_coalgebra([[d]], [e], p)


# exhaustive search -------------------------------------------------


def _bkron(X, I, left=True):
    """Batched Kronecker product of a stack ``X`` with a fixed matrix ``I``."""
    n, r, c = X.shape
    ir, ic = I.shape
    if left:
        out = np.einsum("nij,kl->nikjl", X, I)
        return out.reshape(n, r * ir, c * ic)
    out = np.einsum("kl,nij->nkilj", I, X)
    return out.reshape(n, ir * r, ic * c)


def _bmm(p, *ms):
    out = ms[-1] % p
    for m in reversed(ms[:-1]):
        out = np.matmul(m, out) % p
    return out


def _batch_verdicts(A, C, psis):
    p = A.prime
    a, c = A.dim, C.dim
    m, u, d, e = A.mult, A.unit, C.comult, C.counit
    Ia, Ic = eye(a), eye(c)
    psi_Ia = _bkron(psis, Ia)
    Ia_psi = _bkron(psis, Ia, left=False)
    psi_Ic = _bkron(psis, Ic)
    Ic_psi = _bkron(psis, Ic, left=False)
    pairs = {
        "axiom1": (_bmm(p, psis, kron(m, Ic)), _bmm(p, kron(Ic, m), psi_Ia, Ia_psi)),
        "axiom2": (_bmm(p, Ic_psi, psi_Ic, kron(Ia, d)), _bmm(p, kron(d, Ia), psis)),
        "axiom3": (_bmm(p, psis, kron(u, Ic)), _bmm(p, kron(Ic, e, Ia), Ic_psi, kron(Ic, u, Ic), d)),
        "axiom4": (_bmm(p, kron(e, Ia), psis), _bmm(p, m, kron(Ia, e, Ia), Ia_psi, kron(Ia, u, Ic))),
        "counit_strict": (_bmm(p, kron(e, Ia), psis), kron(Ia, e)[None]),
        "unit_strict": (_bmm(p, psis, kron(u, Ic)), kron(Ic, u)[None]),
    }
    return {k: np.all((l == r).reshape(len(psis), -1), axis=1) for k, (l, r) in pairs.items()}


def candidate_count(A, C):
    n = (A.dim * C.dim) ** 2
    return A.prime ** n


def candidate(A, C, index):
    """The ``index``-th matrix in enumeration order: base-``p`` digits, row-major, most significant first."""
    n = A.dim * C.dim
    p = A.prime
    digits = []
    for _ in range(n * n):
        digits.append(index % p)
        index //= p
    return np.array(digits[::-1], dtype=np.int64).reshape(n, n)


@dataclass
class Census:
    prime: int
    dims: tuple
    total: int
    valid: int
    strict: int
    rows: list

    @property
    def weak_only(self):
        return self.valid - self.strict

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "axiom1", "axiom2", "axiom3", "axiom4", "strict", "rank_e"])
        for r in self.rows:
            w.writerow([r["index"], *(int(r[k]) for k in ("axiom1", "axiom2", "axiom3", "axiom4", "strict")),
                        "" if r["rank_e"] is None else r["rank_e"]])
        return buf.getvalue()

    def summary(self):
        return {
            "prime": self.prime,
            "dims": list(self.dims),
            "total": self.total,
            "valid": self.valid,
            "strict": self.strict,
            "weak_only": self.weak_only,
            "rank_histogram": self.rank_histogram(),
        }

    def rank_histogram(self):
        out = {}
        for r in self.rows:
            if r["rank_e"] is not None:
                out[str(r["rank_e"])] = out.get(str(r["rank_e"]), 0) + 1
        return dict(sorted(out.items(), key=lambda kv: int(kv[0])))


def search_entwinings(A, C, bounds=DEFAULT_BOUNDS, chunk=1 << 14, verify=True):
    """Classify every ``psi`` over ``F_p`` in enumeration order.

    Accepted candidates are split and their splitting identities checked;
    a failure there raises, since it would contradict the construction.
    """
    total = candidate_count(A, C)
    if total > bounds.max_candidates:
        raise SearchSpaceExceeded(f"{total} candidates exceed the bound {bounds.max_candidates}", witness=total)
    rep = validate_fd_structures(A, C)
    if not rep.passed:
        raise ShapeMismatch(f"structures are invalid: {rep.witness}", witness=rep.witness)
    p = A.prime
    n = A.dim * C.dim
    weights = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    rows = []
    valid = strict = 0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        psis = ((idx[:, None] // weights[None, :]) % p).reshape(-1, n, n)
        v = _batch_verdicts(A, C, psis)
        ok = v["axiom1"] & v["axiom2"] & v["axiom3"] & v["axiom4"]
        st = ok & v["counit_strict"] & v["unit_strict"]
        for k, i in enumerate(idx):
            rank_e = None
            if ok[k]:
                cand = EntwiningCandidate(A, C, psis[k])
                if verify:
                    sp = matrix_canonical_split(cand)
                    bad = [name for name, d in sp.diagrams.items() if not d.passed]
                    if bad:
                        raise ShapeMismatch(f"candidate {int(i)} fails {bad}", witness=int(i))
                    if bool(st[k]) != bool(np.array_equal(sp.idempotent, eye(n))):
                        raise ShapeMismatch(f"candidate {int(i)}: strictness and e = I disagree", witness=int(i))
                    rank_e = sp.rank
                else:
                    rank_e = rank(canonical_idempotent(cand), p)
            rows.append({
                "index": int(i),
                "axiom1": bool(v["axiom1"][k]),
                "axiom2": bool(v["axiom2"][k]),
                "axiom3": bool(v["axiom3"][k]),
                "axiom4": bool(v["axiom4"][k]),
                "strict": bool(st[k]),
                "rank_e": rank_e,
            })
        valid += int(ok.sum())
        strict += int(st.sum())
    return Census(p, (A.dim, C.dim), total, valid, strict, rows)


# JSON -------------------------------------------------------------


def structures_to_json(A, C):
    return {
        "prime": A.prime,
        "algebra": {"mult": A.mult.tolist(), "unit": A.unit.ravel().tolist()},
        "coalgebra": {"comult": C.comult.tolist(), "counit": C.counit.ravel().tolist()},
    }


def structures_from_json(doc):
    from .errors import ParseError

    try:
        p = int(doc.get("prime", 2))
        A = make_algebra(doc["algebra"]["mult"], doc["algebra"]["unit"], p)
        C = make_coalgebra(doc["coalgebra"]["comult"], doc["coalgebra"]["counit"], p)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed linear structures: {e!r}") from None
    if not is_prime(p):
        raise ParseError(f"{p} is not prime")
    return A, C


def candidate_from_json(doc):
    A, C = structures_from_json(doc)
    from .errors import ParseError

    try:
        psi = _reduce(doc["psi"], A.prime)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed psi: {e!r}") from None
    return EntwiningCandidate(A, C, psi)


# dimension one as a one-object category ----------------------------


def scalar_monoid_category(p):
    """``(F_p, x)`` as a one-object category; morphisms are the residues as strings."""
    from .fincat.examples import monoid_category

    elements = ["1", "0"] + [str(i) for i in range(2, p)]
    return monoid_category(elements, lambda x, y: str(int(x) * int(y) % p), name=f"F{p}")


def scalar_law(cand):
    """Encode a dimension-1 candidate as ``(K, 1, 1, psi)`` with scalar structure cells.

    Tensoring with a line is the identity, so ``t`` and ``c`` are identity
    functors and every structure map becomes a central scalar.
    """
    from .fincat import ComonadData, MonadData, NatTransformation, compose_functors, identity_functor
    from .weakdl import WeakMixedLaw

    A, C = cand.algebra, cand.coalgebra
    if A.dim != 1 or C.dim != 1:
        raise ShapeMismatch("only dimension-1 structures have a scalar encoding")
    p = cand.prime
    K = scalar_monoid_category(p)
    one = identity_functor(K)
    oo = compose_functors(one, one)

    def cell(F, G, value):
        return NatTransformation(F, G, {"*": str(int(value) % p)})

    t = MonadData(one, cell(oo, one, A.mult[0, 0]), cell(one, one, A.unit[0, 0]))
    c = ComonadData(one, cell(one, oo, C.comult[0, 0]), cell(one, one, C.counit[0, 0]))
    return WeakMixedLaw(K, t, c, cell(oo, oo, _reduce(cand.psi, p)[0, 0]))
