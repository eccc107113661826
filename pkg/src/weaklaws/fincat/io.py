"""JSON dialect and DOT export.

Every id is written through :func:`label`, so files always carry string ids.
Reading a file back gives a category isomorphic to the one written (and
equal to it when its ids were already strings).
"""

import json

from ..config import DEFAULT_BOUNDS
from ..errors import ParseError, WeakLawsError
from .category import (
    FunctorMap,
    NatTransformation,
    compose_functors,
    identity_functor,
    label,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from .structures import ComonadData, MonadData, validate_monad


def category_to_json(K):
    return {
        "name": K.name,
        "objects": [label(x) for x in K.objects],
        "morphisms": [{"id": label(f), "src": label(s), "tgt": label(t)} for f, (s, t) in K.morphisms.items()],
        "identity": {label(x): label(K.id(x)) for x in K.objects},
        "compose": [{"g": label(g), "f": label(f), "gf": label(gf)} for (g, f), gf in K.compose_table.items()],
    }


def _lookup(K):
    """Maps from labels back to ids, so in-memory categories can read their own files."""
    return {label(x): x for x in K.objects}, {label(f): f for f in K.morphisms}


def category_from_json(doc, bounds=DEFAULT_BOUNDS):
    try:
        return validate_category(doc, bounds=bounds)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed category: {e}") from None


def functor_to_json(F):
    return {
        "on_objects": {label(x): label(F.ob(x)) for x in F.source.objects},
        "on_morphisms": {label(f): label(F.ar(f)) for f in F.source.morphisms},
    }


def functor_from_json(doc, A, B):
    ao, am = _lookup(A)
    bo, bm = _lookup(B)
    try:
        obj = {ao[k]: bo[v] for k, v in doc["on_objects"].items()}
        arr = {am[k]: bm[v] for k, v in doc["on_morphisms"].items()}
    except (KeyError, TypeError, AttributeError) as e:
        raise ParseError(f"malformed functor: unknown id {e}") from None
    return validate_functor(FunctorMap(A, B, obj, arr))


def nat_to_json(n):
    return {"components": {label(x): label(n[x]) for x in n.domain.objects}}


def nat_from_json(doc, F, G):
    ao, _ = _lookup(F.source)
    _, bm = _lookup(F.target)
    try:
        comps = {ao[k]: bm[v] for k, v in doc["components"].items()}
    except (KeyError, TypeError, AttributeError) as e:
        raise ParseError(f"malformed transformation: unknown id {e}") from None
    return validate_nat_trans(NatTransformation(F, G, comps))


def monad_to_json(m):
    if isinstance(m, MonadData):
        return {"side": "monad", "functor": functor_to_json(m.functor), "mult": nat_to_json(m.mult), "unit": nat_to_json(m.unit)}
    return {"side": "comonad", "functor": functor_to_json(m.functor), "comult": nat_to_json(m.comult), "counit": nat_to_json(m.counit)}


def monad_from_json(doc, K, side):
    t = functor_from_json(doc["functor"], K, K)
    tt = compose_functors(t, t)
    one = identity_functor(K)
    if side == "monad":
        m = MonadData(t, nat_from_json(doc["mult"], tt, t), nat_from_json(doc["unit"], one, t))
    else:
        m = ComonadData(t, nat_from_json(doc["comult"], t, tt), nat_from_json(doc["counit"], t, one))
    return validate_monad(m, side)


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from None


def dump_json(doc):
    """Deterministic serialisation used for every file the package writes."""
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def guarded(fn, *args):
    """Turn structural lookup failures inside a loader into :class:`ParseError`."""
    try:
        return fn(*args)
    except WeakLawsError:
        raise
    except (KeyError, TypeError, AttributeError, ValueError) as e:
        raise ParseError(f"malformed document: {e!r}") from None


# DOT ----------------------------------------------------------------


def _q(s):
    return '"' + label(s).replace('"', '\\"') + '"'


def category_to_dot(K, show_identities=False):
    lines = [f"digraph {_q(K.name or 'K')} {{"]
    for x in K.objects:
        lines.append(f"  {_q(x)};")
    for f, (s, t) in K.morphisms.items():
        if not show_identities and K.is_identity(f):
            continue
        lines.append(f"  {_q(s)} -> {_q(t)} [label={_q(f)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def square_to_dot(sq):
    """Four corners and four edges, each corner annotated with its size."""
    corners = sq.corners()
    lines = ['digraph "square" {', "  rankdir=LR;"]
    for name, C in corners.items():
        lines.append(f'  {name} [label="{name}\\n{len(C.objects)} objects, {len(C.morphisms)} morphisms"];')
    lines += [
        '  P -> L [label="vbar"];',
        '  P -> M [label="ubar"];',
        '  L -> K [label="u"];',
        '  M -> K [label="v"];',
        "  { rank=same; P; M; }",
        "  { rank=same; L; K; }",
        "}",
    ]
    return "\n".join(lines) + "\n"
