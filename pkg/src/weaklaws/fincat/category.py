"""Finite categories, functors and natural transformations as explicit tables.

Objects and morphisms are arbitrary hashable ids. Categories loaded from
JSON use strings; constructed categories (Eilenberg-Moore, Karoubi) use
tuples that encode the structure they were built from. Equality of
functors and transformations is extensional equality of their tables.

Composition of 1-cells is written right to left, so ``compose_functors(t, c)``
is the functor ``tc`` that applies ``c`` first. ``whisker`` and ``vert`` mirror
the usual 2-categorical notation: ``whisker(c, x, eps, t)`` is ``c x eps t`` and
``vert(a, b)`` is ``a . b`` (``b`` first).
"""

from ..config import DEFAULT_BOUNDS
from ..errors import (
    BreaksComposition,
    BreaksIdentity,
    IllTyped,
    IllTypedComposite,
    MissingIdentity,
    NaturalityFails,
    NonAssociative,
    SearchSpaceExceeded,
)


def label(x):
    """Canonical string encoding of an id (strings pass through)."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(label(y) for y in x) + ")"
    return str(x)


class FinCategory:
    """A finite category stored as dense tables.

    ``morphisms`` maps id -> (source, target) and keeps insertion order,
    which is the canonical order used by every enumeration.
    """

    def __init__(self, objects, morphisms, identity, compose, name="", karoubi_base=None):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identity = dict(identity)
        self.compose_table = dict(compose)
        self.name = name
        # set when this category is the idempotent completion of another
        self.karoubi_base = karoubi_base
        self._obj_index = {x: i for i, x in enumerate(self.objects)}
        self._mor_index = {f: i for i, f in enumerate(self.morphisms)}
        hom = {}
        for f, (s, t) in self.morphisms.items():
            hom.setdefault((s, t), []).append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        out = {x: [] for x in self.objects}
        for f, (s, _) in self.morphisms.items():
            out.setdefault(s, []).append(f)
        self._out = {k: tuple(v) for k, v in out.items()}

    # basic accessors -------------------------------------------------

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def id(self, x):
        return self.identity[x]

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def outgoing(self, x):
        return self._out.get(x, ())

    def end(self, x):
        return self.hom(x, x)

    def obj_index(self, x):
        return self._obj_index[x]

    def mor_index(self, f):
        return self._mor_index[f]

    def has_object(self, x):
        return x in self._obj_index

    def has_morphism(self, f):
        return f in self._mor_index

    def comp(self, g, f):
        """``g . f``; raises IllTypedComposite when not composable."""
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise IllTypedComposite(
                f"{label(g)} . {label(f)} undefined in {self.name or 'category'}",
                witness=(g, f),
            ) from None

    def compose(self, *fs):
        """Compose a chain right to left: ``compose(h, g, f) = h . g . f``."""
        if not fs:
            raise ValueError("empty composite")
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.comp(g, out)
        return out

    def is_identity(self, f):
        s, t = self.morphisms[f]
        return s == t and self.identity[s] == f

    def is_idempotent(self, f):
        s, t = self.morphisms[f]
        return s == t and self.comp(f, f) == f

    def idempotents(self, x):
        return tuple(f for f in self.end(x) if self.comp(f, f) == f)

    def is_iso(self, f):
        s, t = self.morphisms[f]
        return any(
            self.comp(g, f) == self.identity[s] and self.comp(f, g) == self.identity[t]
            for g in self.hom(t, s)
        )

    def __len__(self):
        return len(self.morphisms)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identity == other.identity
            and self.compose_table == other.compose_table
        )

    def __hash__(self):
        return hash((self.objects, len(self.morphisms)))

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"<FinCategory{name}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"


def check_category_laws(cat):
    """Raise on the first failing law instance; returns ``cat``."""
    for x in cat.objects:
        i = cat.identity.get(x)
        if i is None or cat.morphisms.get(i) != (x, x):
            raise MissingIdentity(f"object {label(x)} has no identity", witness=x)
    for (g, f), gf in cat.compose_table.items():
        if cat.morphisms[f][1] != cat.morphisms[g][0]:
            raise IllTypedComposite(f"{label(g)} . {label(f)} is not composable", witness=(g, f))
        if cat.morphisms.get(gf) != (cat.morphisms[f][0], cat.morphisms[g][1]):
            raise IllTypedComposite(f"{label(g)} . {label(f)} has the wrong type", witness=(g, f))
    for f, (s, t) in cat.morphisms.items():
        for g in _outgoing(cat, t):
            if (g, f) not in cat.compose_table:
                raise IllTypedComposite(f"{label(g)} . {label(f)} missing", witness=(g, f))
    for f, (s, t) in cat.morphisms.items():
        if cat.compose_table[(cat.identity[t], f)] != f:
            raise MissingIdentity(f"left identity law fails at {label(f)}", witness=t)
        if cat.compose_table[(f, cat.identity[s])] != f:
            raise MissingIdentity(f"right identity law fails at {label(f)}", witness=s)
    for f, (_, b) in cat.morphisms.items():
        for g in _outgoing(cat, b):
            gf = cat.compose_table[(g, f)]
            c = cat.morphisms[g][1]
            for h in _outgoing(cat, c):
                if cat.compose_table[(h, gf)] != cat.compose_table[(cat.compose_table[(h, g)], f)]:
                    raise NonAssociative(
                        f"({label(h)}.{label(g)}).{label(f)} != {label(h)}.({label(g)}.{label(f)})",
                        witness=(h, g, f),
                    )
    return cat


def _outgoing(cat, x):
    return cat.outgoing(x)


def validate_category(raw, bounds=DEFAULT_BOUNDS, name=""):
    """Build a category from raw tables and check every law by enumeration.

    ``raw`` is either a FinCategory or a mapping with the JSON field names
    ``objects``, ``morphisms`` (``{id, src, tgt}`` records), ``identity`` and
    ``compose`` (``{g, f, gf}`` records).
    """
    if isinstance(raw, FinCategory):
        cat = raw
    else:
        objects = list(raw["objects"])
        morphisms = {}
        for m in raw["morphisms"]:
            if isinstance(m, dict):
                morphisms[m["id"]] = (m["src"], m["tgt"])
            else:
                mid, s, t = m
                morphisms[mid] = (s, t)
        objs = set(objects)
        for mid, (s, t) in morphisms.items():
            if s not in objs or t not in objs:
                raise IllTypedComposite(f"morphism {label(mid)} has unknown endpoint", witness=(mid,))
        identity = dict(raw["identity"])
        for x in objects:
            if identity.get(x) not in morphisms:
                raise MissingIdentity(f"object {label(x)} has no identity", witness=x)
        compose = {}
        table = raw["compose"]
        entries = table.items() if isinstance(table, dict) else (
            ((e["g"], e["f"]), e["gf"]) if isinstance(e, dict) else ((e[0], e[1]), e[2]) for e in table
        )
        for (g, f), gf in entries:
            if g not in morphisms or f not in morphisms or gf not in morphisms:
                raise IllTypedComposite(f"compose entry {label(g)}.{label(f)} names unknown morphism", witness=(g, f))
            compose[(g, f)] = gf
        cat = FinCategory(objects, morphisms, identity, compose, name=raw.get("name", name) if hasattr(raw, "get") else name)
    if len(cat.morphisms) > bounds.max_morphisms:
        raise SearchSpaceExceeded(
            f"{len(cat.morphisms)} morphisms exceeds bound {bounds.max_morphisms}",
            witness=len(cat.morphisms),
        )
    return check_category_laws(cat)


def category_from_generators(objects, morphisms, compose_fn, name=""):
    """Tabulate a category from an explicit composition function.

    ``morphisms`` lists (id, src, tgt); identities must be among them and are
    recognised by ``compose_fn`` acting neutrally. Used by the shipped examples.
    """
    morphisms = {m: (s, t) for m, s, t in morphisms}
    compose = {}
    for f, (_, b) in morphisms.items():
        for g, (s, _) in morphisms.items():
            if s == b:
                compose[(g, f)] = compose_fn(g, f)
    identity = {}
    for x in objects:
        for f, (s, t) in morphisms.items():
            if s == t == x and all(
                compose[(f, h)] == h for h, (_, b) in morphisms.items() if b == x
            ) and all(compose[(h, f)] == h for h, (a, _) in morphisms.items() if a == x):
                identity[x] = f
                break
    return FinCategory(objects, morphisms, identity, compose, name=name)


# functors ------------------------------------------------------------


class FunctorMap:
    def __init__(self, source, target, on_objects, on_morphisms, name=""):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        self.name = name

    def ob(self, x):
        return self.on_objects[x]

    def ar(self, f):
        return self.on_morphisms[f]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FunctorMap):
            return NotImplemented
        return (
            self.on_objects == other.on_objects
            and self.on_morphisms == other.on_morphisms
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        return hash((len(self.on_objects), len(self.on_morphisms)))

    def __repr__(self):
        return f"<FunctorMap {self.name or ''} {self.source!r} -> {self.target!r}>"


def identity_functor(cat):
    return FunctorMap(cat, cat, {x: x for x in cat.objects}, {f: f for f in cat.morphisms}, name="1")


def constant_functor(source, target, x):
    i = target.id(x)
    return FunctorMap(source, target, {a: x for a in source.objects}, {f: i for f in source.morphisms}, name=f"const {label(x)}")


def compose_functors(*fs):
    """``compose_functors(f, g, h) = f g h``: ``h`` is applied first."""
    if not fs:
        raise ValueError("empty composite")
    for outer, inner in zip(fs, fs[1:]):
        if not (outer.source is inner.target or outer.source == inner.target):
            raise IllTyped(f"cannot compose {outer!r} after {inner!r}", witness=(outer, inner))
    last = fs[-1]
    obj = dict(last.on_objects)
    arr = dict(last.on_morphisms)
    for F in reversed(fs[:-1]):
        obj = {x: F.on_objects[y] for x, y in obj.items()}
        arr = {f: F.on_morphisms[g] for f, g in arr.items()}
    return FunctorMap(last.source, fs[0].target, obj, arr)


def validate_functor(F):
    """Check that ``F`` is well typed and preserves identities and composition."""
    A, B = F.source, F.target
    for x in A.objects:
        if x not in F.on_objects or not B.has_object(F.on_objects[x]):
            raise IllTyped(f"object {label(x)} has no image", witness=x)
    for f, (s, t) in A.morphisms.items():
        g = F.on_morphisms.get(f)
        if g is None or not B.has_morphism(g) or B.morphisms[g] != (F.on_objects[s], F.on_objects[t]):
            raise IllTyped(f"morphism {label(f)} is sent to an ill-typed image", witness=f)
    for x in A.objects:
        if F.on_morphisms[A.id(x)] != B.id(F.on_objects[x]):
            raise BreaksIdentity(f"identity of {label(x)} not preserved", witness=x)
    for (g, f), gf in A.compose_table.items():
        if F.on_morphisms[gf] != B.comp(F.on_morphisms[g], F.on_morphisms[f]):
            raise BreaksComposition(f"composite {label(g)}.{label(f)} not preserved", witness=(g, f))
    return F


def is_faithful(F):
    seen = {}
    for f, g in F.on_morphisms.items():
        key = (F.source.morphisms[f], g)
        if key in seen:
            return False
        seen[key] = f
    return True


# natural transformations --------------------------------------------


class NatTransformation:
    def __init__(self, source, target, components, name=""):
        self.source = source
        self.target = target
        self.components = dict(components)
        self.name = name

    @property
    def domain(self):
        return self.source.source

    @property
    def codomain(self):
        return self.source.target

    def __getitem__(self, x):
        return self.components[x]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NatTransformation):
            return NotImplemented
        return (
            self.components == other.components
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        return hash(tuple(self.components.values()))

    def __repr__(self):
        return f"<NatTransformation {self.name or ''} on {len(self.components)} objects>"

    def key(self):
        """Component ids in object order; deterministic and hashable."""
        return tuple(self.components[x] for x in self.domain.objects)


def identity_nat(F):
    K = F.target
    return NatTransformation(F, F, {x: K.id(F.ob(x)) for x in F.source.objects}, name="1")


def _same_functor(F, G):
    return F is G or F == G


def validate_nat_trans(n):
    """Check component types and every naturality square."""
    F, G = n.source, n.target
    if not (F.source == G.source and F.target == G.target):
        raise IllTyped("functors are not parallel", witness=None)
    K = F.target
    for x in F.source.objects:
        m = n.components.get(x)
        if m is None or not K.has_morphism(m) or K.morphisms[m] != (F.ob(x), G.ob(x)):
            raise IllTyped(f"component at {label(x)} has the wrong type", witness=x)
    for f in F.source.morphisms:
        s, t = F.source.morphisms[f]
        if K.comp(G.ar(f), n[s]) != K.comp(n[t], F.ar(f)):
            raise NaturalityFails(f"naturality fails at {label(f)}", witness=f)
    return n


def is_natural(n):
    try:
        validate_nat_trans(n)
    except (IllTyped, NaturalityFails):
        return False
    return True


def vert(*cells):
    """Vertical composite ``cells[0] . cells[1] . ...`` (last applied first)."""
    if not cells:
        raise ValueError("empty composite")
    for outer, inner in zip(cells, cells[1:]):
        if not _same_functor(outer.source, inner.target):
            raise IllTyped(
                f"vertical composite ill typed: {outer.name or outer!r} after {inner.name or inner!r}",
                witness=(outer, inner),
            )
    K = cells[0].codomain
    comps = {}
    for x in cells[-1].domain.objects:
        comps[x] = K.compose(*(c.components[x] for c in cells))
    return NatTransformation(cells[-1].source, cells[0].target, comps)


def whisker(*parts):
    """Whisker one transformation by functors on both sides.

    ``whisker(c, x, eps, t)`` is the transformation written ``c x eps t``:
    its component at ``k`` is ``c(x(eps_{t(k)}))``.
    """
    cells = [i for i, p in enumerate(parts) if isinstance(p, NatTransformation)]
    if len(cells) != 1:
        raise IllTyped("whisker needs exactly one transformation")
    i = cells[0]
    left, theta, right = parts[:i], parts[i], parts[i + 1:]
    R = compose_functors(*right) if right else None
    L = compose_functors(*left) if left else None
    if R is not None and not (R.target is theta.domain or R.target == theta.domain):
        raise IllTyped("right whiskering functor lands in the wrong category")
    if L is not None and not (L.source is theta.codomain or L.source == theta.codomain):
        raise IllTyped("left whiskering functor starts in the wrong category")
    dom_objects = R.source.objects if R is not None else theta.domain.objects
    comps = {}
    for k in dom_objects:
        m = theta.components[R.on_objects[k]] if R is not None else theta.components[k]
        comps[k] = L.on_morphisms[m] if L is not None else m
    src = theta.source
    tgt = theta.target
    if R is not None:
        src = compose_functors(src, R)
        tgt = compose_functors(tgt, R)
    if L is not None:
        src = compose_functors(L, src)
        tgt = compose_functors(L, tgt)
    return NatTransformation(src, tgt, comps)


def hcomp(outer, inner):
    """Horizontal composite ``outer * inner`` of ``inner: x -> y`` and ``outer: x' -> y'``."""
    return vert(whisker(outer, inner.target), whisker(outer.source, inner))


def first_difference(a, b):
    """First object (in domain order) where two parallel transformations differ."""
    for x in a.domain.objects:
        if a.components[x] != b.components[x]:
            return x
    return None

