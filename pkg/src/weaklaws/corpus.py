"""The shipped instance set: fixed ``(K, t, c)`` triples and every law on them.

| name              | K                              | t                   | c                   |
|-------------------|--------------------------------|---------------------|---------------------|
| terminal          | one object                     | identity            | identity            |
| arrow-closure     | walking arrow ``0 -> 1``       | constant at ``1``   | identity            |
| arrow-interior    | walking arrow                  | identity            | constant at ``0``   |
| chain-mixed       | chain ``0 < 1 < 2``            | ``0,1,2 -> 1,1,2``  | ``0,1,2 -> 0,1,1``  |
| cyclic            | group ``C2``                   | identity            | identity            |
| nilpotent         | Kar of ``{1, a, z}``, ``aa=z`` | identity            | identity            |
| idempotent        | Kar of ``{1, e}``              | identity            | identity            |
| zero-identity     | Kar of ``{1, e, 0}``           | identity            | identity            |
| zero-mixed        | Kar of ``{1, e, 0}``           | image of ``e``      | image of ``e``      |
| twisted           | Kar of ``C2`` plus a unit      | identity, unit ``g``| identity, counit ``g`` |
| twisted-reflection| Kar of ``C2`` plus a unit      | onto ``(*,e)``, ``g`` | onto ``(*,e)``, ``g`` |

``Kar`` is the idempotent completion. Monads and comonads are picked out of
the full enumeration by their action on objects (and, for the twisted
rows, by the base morphisms of their unit and counit), with the first
structure in enumeration order taken when several share it. Laws are all valid
candidates from :func:`enumerate_laws`, in enumeration order.
"""

from dataclasses import dataclass
from functools import lru_cache

from .fincat import karoubi_complete, label
from .fincat.examples import chain, monoid_category, terminal_category, walking_arrow
from .weakdl import WeakMixedLaw, enumerate_laws, enumerate_monads


@dataclass(frozen=True, eq=False)
class Triple:
    name: str
    base: object
    monad: object
    comonad: object


def cyclic_group():
    return monoid_category(["1", "g"], lambda x, y: "g" if (x == "g") != (y == "g") else "1", name="C2")


def nilpotent_monoid():
    """``{1, a, z}`` with ``aa = z`` and ``z`` absorbing."""
    def mult(x, y):
        if x == "1":
            return y
        if y == "1":
            return x
        return "z"
    return monoid_category(["1", "a", "z"], mult, name="{1,a,z}")


def zero_monoid():
    """``{1, e, 0}`` with ``ee = e`` and ``0`` absorbing."""
    def mult(x, y):
        if "0" in (x, y):
            return "0"
        return "e" if "e" in (x, y) else "1"
    return monoid_category(["1", "e", "0"], mult, name="{1,e,0}")


def twisted_monoid():
    """``C2`` with a new unit adjoined: ``{1, e, g}`` with ``gg = e`` and ``e`` the group unit."""
    def mult(x, y):
        if x == "1":
            return y
        if y == "1":
            return x
        return "e" if x == y else "g"
    return monoid_category(["1", "e", "g"], mult, name="C2+1")


def idempotent_monoid_envelope():
    from .fincat.examples import idempotent_monoid

    return karoubi_complete(idempotent_monoid())[0]


def _pick(K, side, images, units=None):
    """First (co)monad whose object map sends ``K.objects[i]`` to ``images[i]`` (by label).

    ``units`` optionally pins the base morphisms of the unit (counit) components.
    """
    for m in enumerate_monads(K, side):
        if [label(m.functor.ob(x)) for x in K.objects] != list(images):
            continue
        cell = m.unit if side == "monad" else m.counit
        if units is None or [label(cell[x][2]) for x in K.objects] == list(units):
            return m
    raise LookupError(f"no {side} with object map {images}")


def _identity_images(K):
    return [label(x) for x in K.objects]


@lru_cache(maxsize=None)
def triples():
    out = []
    T = terminal_category()
    out.append(Triple("terminal", T, _pick(T, "monad", ["*"]), _pick(T, "comonad", ["*"])))
    A = walking_arrow()
    out.append(Triple("arrow-closure", A, _pick(A, "monad", ["1", "1"]), _pick(A, "comonad", ["0", "1"])))
    out.append(Triple("arrow-interior", A, _pick(A, "monad", ["0", "1"]), _pick(A, "comonad", ["0", "0"])))
    C = chain(3)
    out.append(Triple("chain-mixed", C, _pick(C, "monad", ["1", "1", "2"]), _pick(C, "comonad", ["0", "1", "1"])))
    G = cyclic_group()
    out.append(Triple("cyclic", G, _pick(G, "monad", ["*"]), _pick(G, "comonad", ["*"])))
    N = karoubi_complete(nilpotent_monoid())[0]
    out.append(Triple("nilpotent", N, _pick(N, "monad", _identity_images(N)), _pick(N, "comonad", _identity_images(N))))
    E = idempotent_monoid_envelope()
    out.append(Triple("idempotent", E, _pick(E, "monad", _identity_images(E)), _pick(E, "comonad", _identity_images(E))))
    Z = karoubi_complete(zero_monoid())[0]
    out.append(Triple("zero-identity", Z, _pick(Z, "monad", _identity_images(Z)), _pick(Z, "comonad", _identity_images(Z))))
    e_image = ["(*,e)", "(*,e)", "(*,0)"]
    out.append(Triple("zero-mixed", Z, _pick(Z, "monad", e_image), _pick(Z, "comonad", e_image)))
    W = karoubi_complete(twisted_monoid())[0]
    ids = _identity_images(W)
    out.append(Triple("twisted", W, _pick(W, "monad", ids, ["1", "g"]), _pick(W, "comonad", ids, ["1", "g"])))
    e_only = ["(*,e)", "(*,e)"]
    out.append(Triple("twisted-reflection", W, _pick(W, "monad", e_only, ["g", "g"]), _pick(W, "comonad", e_only, ["g", "g"])))
    return tuple(out)


def triple(name):
    for t in triples():
        if t.name == name:
            return t
    raise KeyError(name)


@lru_cache(maxsize=None)
def candidates():
    """Every ``(triple, lam, report)`` over the instance set."""
    out = []
    for tr in triples():
        for lam, report in enumerate_laws(tr.base, tr.monad, tr.comonad):
            out.append((tr, lam, report))
    return tuple(out)


@lru_cache(maxsize=None)
def laws():
    """All valid laws of the instance set, named ``<triple>/<index>``."""
    out = []
    counts = {}
    for tr, lam, report in candidates():
        if not report.valid:
            continue
        i = counts.get(tr.name, 0)
        counts[tr.name] = i + 1
        out.append(WeakMixedLaw(tr.base, tr.monad, tr.comonad, lam, name=f"{tr.name}/{i}"))
    return tuple(out)


def law(name):
    for l in laws():
        if l.name == name:
            return l
    raise KeyError(name)


def write_corpus(directory):
    """Write every corpus law as a JSON file; returns the paths written."""
    import os

    from .fincat.io import dump_json
    from .serialize import law_to_json

    os.makedirs(directory, exist_ok=True)
    paths = []
    for l in laws():
        path = os.path.join(directory, l.name.replace("/", "-") + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_json(law_to_json(l)))
        paths.append(path)
    return paths
