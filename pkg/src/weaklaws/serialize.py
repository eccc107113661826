"""Laws, law morphisms, squares and sections in the JSON dialect.

A law document has fields ``category``, ``monad``, ``comonad`` and
``lambda``; a morphism document has ``source`` and ``target`` laws plus
``x``, ``xi``, ``zeta`` and optionally ``omega`` with a second pair
``x2``, ``xi2``, ``zeta2`` for a 2-cell.
"""

from .config import DEFAULT_BOUNDS
from .fincat import compose_functors
from .fincat.io import (
    category_from_json,
    category_to_json,
    functor_from_json,
    functor_to_json,
    guarded,
    monad_from_json,
    monad_to_json,
    nat_from_json,
    nat_to_json,
)
from .weakdl import LawMorphism, WeakMixedLaw


def law_to_json(law):
    return {
        "name": law.name,
        "category": category_to_json(law.base),
        "monad": monad_to_json(law.monad),
        "comonad": monad_to_json(law.comonad),
        "lambda": nat_to_json(law.law),
    }


def _law_from_json(doc, bounds):
    K = category_from_json(doc["category"], bounds)
    t = monad_from_json(doc["monad"], K, "monad")
    c = monad_from_json(doc["comonad"], K, "comonad")
    lam = nat_from_json(doc["lambda"], compose_functors(t.functor, c.functor), compose_functors(c.functor, t.functor))
    return WeakMixedLaw(K, t, c, lam, name=doc.get("name", ""))


def law_from_json(doc, bounds=DEFAULT_BOUNDS):
    return guarded(_law_from_json, doc, bounds)


def morphism_to_json(source, target, m, prefix=""):
    return {
        f"x{prefix}": functor_to_json(m.carrier),
        f"xi{prefix}": nat_to_json(m.monad_part),
        f"zeta{prefix}": nat_to_json(m.comonad_part),
    }


def _morphism_from_json(doc, source, target, prefix=""):
    x = functor_from_json(doc[f"x{prefix}"], source.base, target.base)
    xi = nat_from_json(doc[f"xi{prefix}"], compose_functors(target.t, x), compose_functors(x, source.t))
    zeta = nat_from_json(doc[f"zeta{prefix}"], compose_functors(x, source.c), compose_functors(target.c, x))
    return LawMorphism(x, xi, zeta)


def morphism_from_json(doc, source, target, prefix=""):
    return guarded(_morphism_from_json, doc, source, target, prefix)


def morphism_document(source, target, m):
    out = {"source": law_to_json(source), "target": law_to_json(target)}
    out.update(morphism_to_json(source, target, m))
    return out


def two_cell_document(source, target, m, m2, omega):
    out = morphism_document(source, target, m)
    out.update(morphism_to_json(source, target, m2, prefix="2"))
    out["omega"] = nat_to_json(omega)
    return out


def omega_from_json(doc, m, m2):
    return guarded(nat_from_json, doc["omega"], m.carrier, m2.carrier)


def square_to_json(sq):
    return {
        "corners": {k: category_to_json(C) for k, C in sq.corners().items()},
        "edges": {k: functor_to_json(F) for k, F in sq.edges().items()},
        "adjoints": {
            "f": functor_to_json(sq.f),
            "g": functor_to_json(sq.g),
            "fbar": functor_to_json(sq.fbar),
            "gbar": functor_to_json(sq.gbar),
        },
    }


def section_to_json(s):
    return {k: nat_to_json(getattr(s, k)) for k in ("pi", "pi_check", "sigma", "sigma_hat", "theta")}


def identity_law_document(law):
    from .weakdl import identity_law_morphism

    return morphism_document(law, law, identity_law_morphism(law))

