"""Exhaustive enumeration of functors, natural transformations and isomorphisms.

All generators are deterministic: candidates are tried in the canonical
order of the target category's objects and morphisms, so results come out
lexicographically ordered on (object images, morphism images) or on
component ids respectively.
"""

from itertools import product
from math import prod

from ..config import DEFAULT_BOUNDS
from ..errors import SearchSpaceExceeded
from .category import FunctorMap, NatTransformation, label, validate_functor


def _pairs_by_last_index(A, index):
    """Group composable pairs (g, f) of ``A`` by the largest search index involved."""
    groups = {}
    for (g, f), gf in A.compose_table.items():
        key = max(index[g], index[f], index[gf])
        groups.setdefault(key, []).append((g, f, gf))
    return groups


def enumerate_functors(
    A, B, constraints=(), bounds=DEFAULT_BOUNDS, injective_objects=False, object_filter=None
):
    """Yield every functor ``F: A -> B`` with ``G F = H`` for each ``(G, H)`` in constraints."""
    obj_cands = []
    for a in A.objects:
        cands = [
            b for b in B.objects
            if all(G.on_objects[b] == H.on_objects[a] for G, H in constraints)
            and (object_filter is None or object_filter(a, b))
        ]
        obj_cands.append(cands)
    size = prod(len(c) for c in obj_cands) if obj_cands else 1
    if size > bounds.max_search:
        raise SearchSpaceExceeded(
            f"functor search over {size} object assignments exceeds {bounds.max_search}",
            witness=size,
        )
    idents = {A.id(x) for x in A.objects}
    free = [f for f in A.morphisms if f not in idents]
    index = {f: -1 for f in idents}
    index.update({f: i for i, f in enumerate(free)})
    groups = _pairs_by_last_index(A, index)
    budget = [bounds.max_search]

    for obj_images in product(*obj_cands):
        if injective_objects and len(set(obj_images)) != len(obj_images):
            continue
        omap = dict(zip(A.objects, obj_images))
        arr = {A.id(x): B.id(omap[x]) for x in A.objects}
        if any(
            arr[gf] != B.comp(arr[g], arr[f]) for g, f, gf in groups.get(-1, ())
        ):
            continue
        mor_cands = []
        dead = False
        for f in free:
            s, t = A.morphisms[f]
            cands = [
                g for g in B.hom(omap[s], omap[t])
                if all(G.on_morphisms[g] == H.on_morphisms[f] for G, H in constraints)
            ]
            if not cands:
                dead = True
                break
            mor_cands.append(cands)
        if dead:
            continue
        yield from _assign_morphisms(A, B, omap, arr, free, mor_cands, groups, 0, budget)


def _assign_morphisms(A, B, omap, arr, free, mor_cands, groups, i, budget):
    if i == len(free):
        yield FunctorMap(A, B, omap, dict(arr))
        return
    f = free[i]
    for g in mor_cands[i]:
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchSpaceExceeded("functor search node budget exhausted", witness=label(f))
        arr[f] = g
        if all(arr[c] == B.comp(arr[a], arr[b]) for a, b, c in groups.get(i, ())):
            yield from _assign_morphisms(A, B, omap, arr, free, mor_cands, groups, i + 1, budget)
        del arr[f]


def enumerate_nat_trans(F, G, bounds=DEFAULT_BOUNDS, component_filter=None):
    """Yield every natural transformation ``F -> G`` in lexicographic component order.

    ``component_filter(x, m)`` optionally restricts the component at ``x``.
    """
    A, K = F.source, F.target
    cands = []
    for x in A.objects:
        hs = K.hom(F.ob(x), G.ob(x))
        if component_filter is not None:
            hs = tuple(m for m in hs if component_filter(x, m))
        cands.append(hs)
    size = prod(len(c) for c in cands) if cands else 1
    if size > bounds.max_search:
        raise SearchSpaceExceeded(
            f"natural transformation search over {size} candidates exceeds {bounds.max_search}",
            witness=size,
        )
    if any(not c for c in cands):
        return
    pos = {x: i for i, x in enumerate(A.objects)}
    checks = {}
    for f, (s, t) in A.morphisms.items():
        checks.setdefault(max(pos[s], pos[t]), []).append((f, s, t))
    comps = {}

    def rec(i):
        if i == len(A.objects):
            yield NatTransformation(F, G, dict(comps))
            return
        x = A.objects[i]
        for m in cands[i]:
            comps[x] = m
            if all(
                K.comp(G.ar(f), comps[s]) == K.comp(comps[t], F.ar(f))
                for f, s, t in checks.get(i, ())
            ):
                yield from rec(i + 1)
        comps.pop(x, None)

    yield from rec(0)


def is_isomorphism(F):
    """A functor is an isomorphism of categories iff it is bijective on objects and morphisms."""
    validate_functor(F)
    A, B = F.source, F.target
    return (
        len(set(F.on_objects.values())) == len(A.objects) == len(B.objects)
        and len(set(F.on_morphisms.values())) == len(A.morphisms) == len(B.morphisms)
    )


def inverse_functor(F):
    obj = {y: x for x, y in F.on_objects.items()}
    arr = {g: f for f, g in F.on_morphisms.items()}
    return FunctorMap(F.target, F.source, obj, arr)


def _signature(C, x):
    out = sorted(len(C.hom(x, y)) for y in C.objects)
    inc = sorted(len(C.hom(y, x)) for y in C.objects)
    return (len(C.end(x)), tuple(out), tuple(inc))


def _hom_profile(C):
    return sorted(_signature(C, x) for x in C.objects)


def find_isomorphism(A, B, bounds=DEFAULT_BOUNDS):
    """Search for an isomorphism of categories ``A -> B``; ``None`` if there is none."""
    if len(A.objects) != len(B.objects) or len(A.morphisms) != len(B.morphisms):
        return None
    if _hom_profile(A) != _hom_profile(B):
        return None
    def same_shape(a, b):
        return _signature(A, a) == _signature(B, b)

    for F in enumerate_functors(A, B, bounds=bounds, injective_objects=True, object_filter=same_shape):
        if len(set(F.on_morphisms.values())) == len(B.morphisms):
            return F
    return None
