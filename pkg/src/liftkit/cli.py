"""``liftkit`` command-line front end.

Every command prints a report: a short text summary by default, one JSON
object with ``--json``, indented JSON with ``--pretty``.  Exit codes:

    0  ok / equivalent
    2  unreadable or malformed input, unknown name
    3  arithmetic precondition violated
    4  not factorable in the requested structure
    5  inequivalent
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import fixtures
from .exceptions import NotFactorableError, PreconditionError
from .factorize import factor_generic, factor_in_structure
from .lifting import is_irreducible, product, reduce_to_irreducible
from .polyphase import det, is_hs, is_unimodular, is_ws, matrix_order
from .sampling import random_cascade
from .serialize import (
    DocumentError,
    cascade_from_doc,
    cascade_to_doc,
    dumps,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    structure_from_json,
)
from .structures import (
    Verdict,
    cascade_in_structure,
    dc_normalized,
    equivalent_mod_rescaling,
    is_d_invariant,
    is_order_increasing,
)

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NOT_FACTORABLE = 4
EXIT_INEQUIVALENT = 5

SAMPLE_COUNT = 50


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg})") from None


def _load_cascade(path):
    return cascade_from_doc(_load_json(path))


def _load_matrix(path):
    """A matrix document, a named matrix, or a cascade (multiplied out)."""
    obj = _load_json(path)
    if isinstance(obj, dict) and ("steps" in obj or "gain" in obj):
        return product(cascade_from_doc(obj))
    return matrix_from_json(obj)


def _structure(name):
    if name is None or name == "generic":
        return None
    if name.lstrip().startswith("{"):
        try:
            return structure_from_json(json.loads(name))
        except json.JSONDecodeError:
            raise DocumentError("bad structure document") from None
    return structure_from_json(name)


def _matrix_facts(m):
    return {
        "matrix": matrix_to_json(m, named=False),
        "det": poly_to_json(det(m)),
        "order": matrix_order(m) if any(m.entries) else None,
        "is_ws": is_ws(m),
        "is_hs": is_hs(m),
        "dc_normalized": dc_normalized(m),
    }


def cmd_multiply(args):
    c = _load_cascade(args.file)
    return _matrix_facts(product(c)), EXIT_OK


def cmd_reduce(args):
    c = _load_cascade(args.file)
    r = reduce_to_irreducible(c)
    preserved = product(r) == product(c)
    if not preserved:
        raise AssertionError("reduction changed the product")
    return {
        "cascade": cascade_to_doc(r),
        "steps_before": len(c.steps),
        "steps_after": len(r.steps),
        "product_preserved": preserved,
    }, EXIT_OK


def _order_report(c):
    chk = is_order_increasing(c)
    return {"ok": chk.ok, "failed_at": chk.failed_at, "orders": list(chk.orders)}


def cmd_factor(args):
    h = _load_matrix(args.file)
    s = _structure(args.structure)
    if not is_unimodular(h):
        raise PreconditionError("factorization needs a unimodular matrix")
    peels = []

    def record(rep):
        peels.append({"step": str(rep.step), "order_before": rep.order_before,
                      "order_after": rep.order_after})

    if s is None:
        c = factor_generic(h)
    else:
        c = factor_in_structure(h, s, verbose=record if args.verbose else None)
    verification = {
        "product_matches": product(c) == h,
        "irreducible": is_irreducible(c),
        "order_increasing": _order_report(c),
    }
    if s is not None:
        verification["member"] = cascade_in_structure(c, s)
    out = {"structure": s.name if s else "generic", "cascade": cascade_to_doc(c),
           "verification": verification}
    if args.verbose:
        out["peels"] = peels
    return out, EXIT_OK


def _sampling_evidence(s, seed):
    rng = random.Random(seed)
    tested = failures = 0
    for _ in range(SAMPLE_COUNT):
        c = random_cascade(rng, s)
        if not is_irreducible(c):
            continue
        tested += 1
        if not is_order_increasing(c):
            failures += 1
    return {"seed": seed, "sampled": tested, "order_increasing_failures": failures}


def cmd_check(args):
    c = _load_cascade(args.file)
    s = _structure(args.structure)
    irreducible = is_irreducible(c)
    out = {
        "irreducible": irreducible,
        "order_increasing": _order_report(c) if irreducible else None,
    }
    if s is not None:
        out["structure"] = s.name
        out["member"] = cascade_in_structure(c, s)
        out["d_invariant"] = is_d_invariant(s)
        out["sampling"] = _sampling_evidence(s, args.seed)
    return out, EXIT_OK


def cmd_equiv(args):
    a, b = _load_cascade(args.file_a), _load_cascade(args.file_b)
    if args.reduce:
        a, b = reduce_to_irreducible(a), reduce_to_irreducible(b)
    elif not (is_irreducible(a) and is_irreducible(b)):
        raise PreconditionError("equivalence needs irreducible cascades (use --reduce)")
    v = equivalent_mod_rescaling(a, b)
    out = {
        "verdict": v.kind.value,
        "alpha": str(v.alpha) if v.alpha is not None else None,
        "reason": v.reason,
        "same_product": product(a) == product(b),
    }
    code = EXIT_INEQUIVALENT if v.kind is Verdict.INEQUIVALENT else EXIT_OK
    return out, code


def cmd_examples(args):
    if args.name is None:
        return {"examples": list(fixtures.NAMES)}, EXIT_OK
    try:
        found = fixtures.get(args.name, args.b, args.c)
    except KeyError as exc:
        raise DocumentError(exc.args[0]) from None
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    if args.matrix:
        docs = {k: matrix_to_json(product(v), named=False) for k, v in found.items()}
    else:
        docs = {k: cascade_to_doc(v) for k, v in found.items()}
    if len(docs) == 1:
        return next(iter(docs.values())), EXIT_OK
    return docs, EXIT_OK


def _humanize(obj):
    """Replace polynomial documents by readable strings for text output."""
    if isinstance(obj, dict):
        if set(obj) == {"lo", "c"}:
            return str(poly_from_json(obj))
        return {k: _humanize(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_humanize(v) for v in obj]
    return obj


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def _scalar_text(v):
    if isinstance(v, str):
        return v
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    return json.dumps(v)


def _flat(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json",
                     help="compact JSON output")
    fmt.add_argument("--pretty", dest="fmt", action="store_const", const="pretty",
                     help="indented JSON output")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling (default 0)")

    p = argparse.ArgumentParser(
        prog="liftkit",
        description="Exact lifting factorizations of two-channel FIR filter banks.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("multiply", parents=[common], help="multiply out a cascade")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_multiply)

    sp = sub.add_parser("reduce", parents=[common], help="merge and drop steps")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("factor", parents=[common], help="factor a unimodular matrix")
    sp.add_argument("file", help="matrix document, named matrix, or cascade")
    sp.add_argument("--structure", default="generic",
                    help="ws, ws-reversible, hs, hs-reversible, elasf, generic, or JSON")
    sp.add_argument("--verbose", action="store_true", help="include each peel")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("check", parents=[common], help="structural checks on a cascade")
    sp.add_argument("file")
    sp.add_argument("--structure")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("equiv", parents=[common], help="compare two cascades")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--reduce", action="store_true", help="reduce both inputs first")
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("examples", parents=[common], help="built-in example documents")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--b", default="2", help="example1 parameter b (default 2)")
    sp.add_argument("--c", default="3", help="example1 parameter c (default 3)")
    sp.add_argument("--matrix", action="store_true", help="emit the product matrix")
    sp.set_defaults(func=cmd_examples)
    return p


def _emit(obj, fmt, stream):
    if fmt == "json":
        print(dumps(obj), file=stream)
    elif fmt == "pretty":
        print(dumps(obj, pretty=True), file=stream)
    else:
        print("\n".join(_text(_humanize(obj))), file=stream)


def main(argv=None):
    args = build_parser().parse_args(argv)
    report = {"command": args.command}
    try:
        body, code = args.func(args)
    except NotFactorableError as exc:
        code, report["error"] = EXIT_NOT_FACTORABLE, str(exc)
        if exc.report is not None:
            report["peel_report"] = exc.report
    except (PreconditionError, ZeroDivisionError) as exc:
        code, report["error"] = EXIT_PRECONDITION, str(exc)
    except ValueError as exc:  # DocumentError and bad scalars
        code, report["error"] = EXIT_PARSE, str(exc)
    else:
        if args.command == "examples":
            # bare documents, ready to redirect into a file
            print(dumps(body, pretty=args.fmt != "json"))
            return code
        report.update(body)
    report["exit"] = code
    _emit(report, args.fmt, sys.stderr if "error" in report else sys.stdout)
    return code

if __name__ == "__main__":
    sys.exit(main())
