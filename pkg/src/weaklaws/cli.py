"""Batch command line: ``weaklaws <command> [file] [options]``.

Exit status: 0 when every check passes, 1 when a check fails, 2 when the
input cannot be read or is not a valid structure, 3 when a search bound is
exceeded. Output goes to ``--out`` or stdout and is byte-identical across
runs for identical inputs and options.
"""

import argparse
import sys
from dataclasses import dataclass, field, replace

from .config import DEFAULT_BOUNDS
from .errors import ParseError, SearchSpaceExceeded, WeakLawsError
from .fincat import em_category, karoubi_complete, label
from .fincat.io import (
    category_from_json,
    category_to_dot,
    category_to_json,
    dump_json,
    functor_to_json,
    load_json,
    monad_from_json,
    monad_to_json,
    nat_to_json,
    square_to_dot,
)

COMMANDS = (
    "check-law", "check-morphism", "em", "mixed-em", "embed", "split",
    "lift", "mates", "reconstruct", "classify", "search", "karoubi",
)
BUILTIN_SQUARES = ("non-split", "non-monadic")

PASS, FAIL, PARSE, BOUNDS = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    out: str = None
    prime: int = 2
    bound: int = None
    fmt: str = "json"
    verbose: int = 0
    side: str = "monad"
    groupoid: int = None
    builtin: str = None

    @property
    def bounds(self):
        if self.bound is None:
            return DEFAULT_BOUNDS
        return replace(DEFAULT_BOUNDS, max_search=self.bound, max_candidates=self.bound)


class InputError(Exception):
    """An input that parsed as JSON but does not describe a valid structure."""


# loading -------------------------------------------------------------


def _kind(doc):
    if not isinstance(doc, dict):
        return None
    if "algebra" in doc and "coalgebra" in doc:
        return "linear-candidate" if "psi" in doc else "linear"
    if "source" in doc and "target" in doc:
        return "morphism"
    if "category" in doc and "monad" in doc and "comonad" in doc:
        return "law" if "lambda" in doc else "triple"
    if "objects" in doc and "morphisms" in doc:
        return "category"
    return None


def _load(cfg, want):
    if not cfg.inputs:
        raise ParseError("missing input file")
    doc = load_json(cfg.inputs[0])
    kind = _kind(doc)
    if kind not in want:
        raise ParseError(f"{cfg.inputs[0]}: expected a {' or '.join(want)} document, found {kind or 'unknown'}")
    try:
        return kind, _build(kind, doc, cfg)
    except (ParseError, SearchSpaceExceeded):
        raise
    except WeakLawsError as e:
        raise InputError(f"{cfg.inputs[0]}: {type(e).__name__}: {e}") from None


def _build(kind, doc, cfg):
    from .linback import candidate_from_json, structures_from_json
    from .serialize import law_from_json, morphism_from_json
    from .fincat.io import guarded

    if kind == "law":
        return law_from_json(doc, cfg.bounds)
    if kind == "triple":
        def triple():
            K = category_from_json(doc["category"], cfg.bounds)
            return K, monad_from_json(doc["monad"], K, "monad"), monad_from_json(doc["comonad"], K, "comonad")
        return guarded(triple)
    if kind == "linear":
        return structures_from_json(doc)
    if kind == "linear-candidate":
        return candidate_from_json(doc)
    if kind == "morphism":
        source = law_from_json(doc["source"], cfg.bounds)
        target = law_from_json(doc["target"], cfg.bounds)
        m = morphism_from_json(doc, source, target)
        m2 = morphism_from_json(doc, source, target, "2") if "omega" in doc else None
        return source, target, m, m2
    return category_from_json(doc, cfg.bounds)


def _square(cfg):
    from .lifting import law_to_square
    from .mates import non_monadic_square, non_split_square

    if cfg.builtin == "non-split":
        return non_split_square()
    if cfg.builtin == "non-monadic":
        return non_monadic_square()
    _, law = _load(cfg, ("law",))
    return law_to_square(law)


def _emit_category(cfg, C):
    return category_to_dot(C) if cfg.fmt == "dot" else dump_json(category_to_json(C))


def _verdicts(d):
    return {k: {"pass": v.passed, "witness": None if v.passed else label(v.witness)} for k, v in d.items()}


# commands --------------------------------------------------------------


def cmd_check_law(cfg):
    from .linback import check_entwining, validate_fd_structures
    from .weakdl import check_weak_law, strictness_conditions

    kind, obj = _load(cfg, ("law", "linear-candidate"))
    if kind == "linear-candidate":
        structures = validate_fd_structures(obj.algebra, obj.coalgebra)
        if not structures.passed:
            return FAIL, {"structures": {"pass": False, "witness": label(structures.witness)}}
        report = check_entwining(obj)
        return (PASS if report.valid else FAIL), report.as_dict()
    report = check_weak_law(obj)
    out = report.as_dict()
    out["conditions"] = strictness_conditions(obj)
    return (PASS if report.valid else FAIL), out


def cmd_check_morphism(cfg):
    from .weakdl import check_law_morphism, check_law_two_cell
    from .serialize import omega_from_json

    _, (source, target, m, m2) = _load(cfg, ("morphism",))
    rep = check_law_morphism(source, target, m)
    out = {"morphism": _verdicts({"diag3": rep.diag3, "diag4": rep.diag4}), "pass": rep.passed}
    ok = rep.passed
    if m2 is not None:
        rep2 = check_law_morphism(source, target, m2)
        omega = omega_from_json(load_json(cfg.inputs[0]), m, m2)
        cell = check_law_two_cell(source, target, m, m2, omega)
        out["morphism2"] = _verdicts({"diag3": rep2.diag3, "diag4": rep2.diag4})
        out["two_cell"] = _verdicts({"monad_square": cell.monad_square, "comonad_square": cell.comonad_square})
        ok = ok and rep2.passed and cell.passed
        out["pass"] = ok
    return (PASS if ok else FAIL), out


def _monad_of(cfg):
    kind, obj = _load(cfg, ("law", "triple"))
    if kind == "law":
        return obj.monad if cfg.side == "monad" else obj.comonad
    _, t, c = obj
    return t if cfg.side == "monad" else c


def cmd_em(cfg):
    return PASS, _emit_category(cfg, em_category(_monad_of(cfg)).category)


def cmd_mixed_em(cfg):
    from .weakdl import mixed_em_category

    _, law = _load(cfg, ("law",))
    return PASS, _emit_category(cfg, mixed_em_category(law).category)


def cmd_embed(cfg):
    from .serialize import square_to_json

    sq = _square(cfg)
    return PASS, (square_to_dot(sq) if cfg.fmt == "dot" else dump_json(square_to_json(sq)))


def cmd_split(cfg):
    from .lifting import canonical_splitting, splitting_diagrams
    from .linback import matrix_canonical_split

    kind, obj = _load(cfg, ("law", "linear-candidate"))
    if kind == "linear-candidate":
        import numpy as np

        from .linback import check_entwining

        if not check_entwining(obj).valid:
            return FAIL, {"valid": False}
        sp = matrix_canonical_split(obj)
        n = sp.idempotent.shape[0]
        out = {
            "identity": bool(np.array_equal(sp.idempotent, np.eye(n, dtype=np.int64))),
            "rank": sp.rank,
            "idempotent": sp.idempotent.tolist(),
            "pi": sp.pi.tolist(),
            "sigma": sp.sigma.tolist(),
            "diagrams": _verdicts(sp.diagrams),
        }
        return (PASS if all(d.passed for d in sp.diagrams.values()) else FAIL), out
    s = canonical_splitting(obj)
    out = {
        "identity": s.is_trivial,
        "idempotent": nat_to_json(s.idempotent),
        "image": functor_to_json(s.image),
        "pi": nat_to_json(s.pi),
        "sigma": nat_to_json(s.sigma),
        "diagrams": splitting_diagrams(obj, s),
    }
    return (PASS if all(out["diagrams"].values()) else FAIL), out


def cmd_lift(cfg):
    from .lifting import mixed_em_isomorphisms

    _, law = _load(cfg, ("law",))
    lift_t, lift_c = mixed_em_isomorphisms(law)
    out = {
        "tbar": monad_to_json(lift_t.lifted),
        "cbar": monad_to_json(lift_c.lifted),
        "tbar_algebras": len(lift_t.em.category.objects),
        "cbar_coalgebras": len(lift_c.em.category.objects),
        "isomorphic_to_mixed": True,
    }
    return PASS, out


def cmd_mates(cfg):
    from .errors import NoSectionExists
    from .mates import find_section, is_invertible, square_mates
    from .serialize import section_to_json

    sq = _square(cfg)
    pi, sigma = square_mates(sq)
    try:
        s = find_section(sq, bounds=cfg.bounds)
    except NoSectionExists as e:
        return FAIL, {"pi": nat_to_json(pi), "sigma": nat_to_json(sigma), "section": None, "witness": label(e.witness)}
    out = section_to_json(s)
    out["pi_invertible"] = is_invertible(pi)
    return PASS, out


def cmd_reconstruct(cfg):
    from .lifting import law_to_square
    from .mates import reconstruct_law

    _, law = _load(cfg, ("law",))
    rebuilt = reconstruct_law(law_to_square(law), bounds=cfg.bounds)
    same = rebuilt.law == law.law
    return (PASS if same else FAIL), {"lambda": nat_to_json(rebuilt.law), "round_trip": same}


def cmd_classify(cfg):
    from .mates import classify_square

    c = classify_square(_square(cfg), bounds=cfg.bounds)
    return (PASS if c.in_image else FAIL), c.as_dict()


def cmd_search(cfg):
    from .linback import groupoid_bialgebra, search_entwinings

    if cfg.groupoid is not None:
        A, C = groupoid_bialgebra(cfg.groupoid, cfg.prime, cfg.bounds)
    else:
        kind, obj = _load(cfg, ("linear", "triple"))
        if kind == "triple":
            return _law_census(cfg, *obj)
        A, C = obj
    census = search_entwinings(A, C, cfg.bounds)
    if cfg.fmt == "csv":
        return PASS, census.to_csv()
    out = census.summary()
    out["accepted"] = [r["index"] for r in census.rows if r["rank_e"] is not None]
    return PASS, out


def _law_census(cfg, K, t, c):
    import csv
    import io

    from .weakdl import enumerate_laws

    found = enumerate_laws(K, t, c, cfg.bounds)
    keys = ("axiom1", "axiom2", "axiom3", "axiom4")
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", *keys, "strict"])
        for i, (_, rep) in enumerate(found):
            w.writerow([i, *(int(getattr(rep, k).passed) for k in keys), int(rep.valid and rep.strict)])
        return PASS, buf.getvalue()
    valid = [(i, lam, rep) for i, (lam, rep) in enumerate(found) if rep.valid]
    return PASS, {
        "total": len(found),
        "valid": len(valid),
        "strict": sum(rep.strict for _, _, rep in valid),
        "laws": [{"index": i, "strict": rep.strict, "lambda": nat_to_json(lam)} for i, lam, rep in valid],
    }


def cmd_karoubi(cfg):
    _, K = _load(cfg, ("category",))
    return PASS, _emit_category(cfg, karoubi_complete(K)[0])


HANDLERS = {
    "check-law": cmd_check_law,
    "check-morphism": cmd_check_morphism,
    "em": cmd_em,
    "mixed-em": cmd_mixed_em,
    "embed": cmd_embed,
    "split": cmd_split,
    "lift": cmd_lift,
    "mates": cmd_mates,
    "reconstruct": cmd_reconstruct,
    "classify": cmd_classify,
    "search": cmd_search,
    "karoubi": cmd_karoubi,
}


# entry point -----------------------------------------------------------


def _positive(s):
    n = int(s)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="weaklaws", description="Check and construct weak mixed distributive laws.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("inputs", nargs="*", help="input JSON file")
    p.add_argument("--prime", type=int, default=2, help="field characteristic for linear searches")
    p.add_argument("--bound", type=_positive, help="cap on enumerated candidates")
    p.add_argument("--format", dest="fmt", choices=("json", "dot", "csv"), default="json")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--side", choices=("monad", "comonad"), default="monad", help="which structure `em` uses")
    p.add_argument("--groupoid", type=_positive, help="search self-entwinings of the groupoid algebra on N objects")
    p.add_argument("--builtin", choices=BUILTIN_SQUARES, help="use a hand-built square instead of a file")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def run(cfg):
    """Execute ``cfg``; returns ``(status, text)``."""
    from .linback import is_prime

    if not is_prime(cfg.prime):
        return PARSE, f"error: {cfg.prime} is not prime\n"
    try:
        status, result = HANDLERS[cfg.command](cfg)
    except ParseError as e:
        return PARSE, f"error: {e}\n"
    except InputError as e:
        return PARSE, f"error: {e}\n"
    except SearchSpaceExceeded as e:
        return BOUNDS, f"error: search bound exceeded: {e}\n"
    except WeakLawsError as e:
        return FAIL, f"error: {type(e).__name__}: {e}\n"
    return status, result if isinstance(result, str) else dump_json(result)


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command, inputs=args.inputs, out=args.out, prime=args.prime, bound=args.bound,
        fmt=args.fmt, verbose=args.verbose, side=args.side, groupoid=args.groupoid, builtin=args.builtin,
    )
    status, text = run(cfg)
    if text.startswith("error:"):
        sys.stderr.write(text)
    elif cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.verbose:
        sys.stderr.write(f"status {status}\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
