"""Small named categories used by the shipped corpus and the tests."""

from .category import FinCategory, FunctorMap, NatTransformation, category_from_generators


def empty_category():
    return FinCategory([], {}, {}, {}, name="0")


def terminal_category():
    return FinCategory(["*"], {"1*": ("*", "*")}, {"*": "1*"}, {("1*", "1*"): "1*"}, name="1")


def discrete_category(n):
    objs = [str(i) for i in range(n)]
    return FinCategory(
        objs,
        {f"1{x}": (x, x) for x in objs},
        {x: f"1{x}" for x in objs},
        {(f"1{x}", f"1{x}"): f"1{x}" for x in objs},
        name=f"disc{n}",
    )


def chain(n):
    """The poset 0 < 1 < ... < n-1; the morphism i -> j is named ``"i<=j"``."""
    objs = [str(i) for i in range(n)]
    mors = [(f"{i}<={j}", str(i), str(j)) for i in range(n) for j in range(i, n)]

    def comp(g, f):
        i = f.split("<=")[0]
        j = g.split("<=")[1]
        return f"{i}<={j}"

    cat = category_from_generators(objs, mors, comp, name=f"chain{n}")
    return cat


def walking_arrow():
    """``0 --s--> 1`` with identities ``1_0`` and ``1_1``."""
    return FinCategory(
        ["0", "1"],
        {"1_0": ("0", "0"), "s": ("0", "1"), "1_1": ("1", "1")},
        {"0": "1_0", "1": "1_1"},
        {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1", ("s", "1_0"): "s", ("1_1", "s"): "s"},
        name="2",
    )


def monoid_category(elements, mult, name="M"):
    """One-object category ``*`` of a finite monoid given by its multiplication.

    ``mult(a, b)`` is the product ``a b`` (apply ``b`` first); the first element
    must be the unit.
    """
    mors = [(m, "*", "*") for m in elements]
    return category_from_generators(["*"], mors, mult, name=name)


def idempotent_monoid():
    """The monoid ``{1, e}`` with ``e e = e``."""
    return monoid_category(["1", "e"], lambda a, b: "e" if "e" in (a, b) else "1", name="{1,e}")


def semilattice_monoid():
    """The monoid ``{1, e, f, ef}`` of commuting idempotents."""
    def mult(a, b):
        letters = set(a.replace("1", "")) | set(b.replace("1", ""))
        return "".join(sorted(letters)) or "1"

    return monoid_category(["1", "e", "f", "ef"], mult, name="{1,e,f,ef}")


def functor_from_tables(source, target, on_objects, on_morphisms, name=""):
    return FunctorMap(source, target, on_objects, on_morphisms, name=name)


def nat_from_components(F, G, components, name=""):
    return NatTransformation(F, G, components, name=name)
