"""Command line front-end: ``tomokron <subcommand> [options]``.

Exit codes: 0 computed, 1 a checked property failed, 2 invalid input,
3 an enumeration or degree cap was exceeded.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .characters import KRON_CAP, kron
from .errors import CapExceeded
from .kostka import enumerate_gt, format_tableau, gt_to_ssyt, kostka
from .partitions import format_rational, parse_partition, to_exact
from .tables import (TABLE_CAP, count_binary3, enumerate_binary3, enumerate_tables,
                     format_matrix, format_tensor, graph, graph_marginals_expected,
                     is_matrix_of_uniqueness, marginals3, matrix_to_json, parse_inline_matrix,
                     parse_matrix, t_orbit, tensor_to_json)
from .tomography import (AdditiveTriple, certificate_to_json,
                         check_perturbation, derive_triples, family, is_additive, is_additive3,
                         is_minimal, is_pi_unique, majorizing_witness)

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
SCHEMA_VERSION = 1


@dataclass
class RunManifest:
    command: str
    inputs: dict
    caps: dict
    seed: int | None
    version: str = __version__
    outputs_digest: str = ""
    cap_overrides: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


class InvalidInput(ValueError):
    pass


# -- input helpers --------------------------------------------------------

def _partition(text):
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _read_text(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    return Path(spec).read_text()


def _matrix(args):
    if getattr(args, "inline", None):
        return parse_inline_matrix(args.inline)
    if getattr(args, "matrix", None):
        return parse_matrix(_read_text(args.matrix))
    raise InvalidInput("give --matrix FILE or --inline 'a b; c d'")


def _signed_rows(text: str) -> tuple:
    # integer or num/den entries of either sign, same layout as parse_matrix
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(stripped)
        rows = data["rows"] if isinstance(data, dict) else data
        return tuple(tuple(to_exact(v if isinstance(v, int) else str(v)) for v in r) for r in rows)
    rows = []
    for line in stripped.replace(";", "\n").splitlines():
        line = line.split("#")[0].strip()
        if line:
            rows.append(tuple(to_exact(v) for v in line.replace(",", " ").split()))
    if len({len(r) for r in rows}) > 1:
        raise InvalidInput("ragged matrix")
    return tuple(rows)


# -- subcommands ----------------------------------------------------------
# each returns (exit_code, payload, text)

def cmd_kron(args):
    g = kron(args.l, args.m, args.n, max_degree=args.max_degree)
    return EXIT_OK, {"lambda": list(args.l), "mu": list(args.m), "nu": list(args.n), "kron": g}, str(g)


def cmd_kostka(args):
    k = kostka(args.shape, args.content)
    payload = {"shape": list(args.shape), "content": list(args.content), "kostka": k}
    text = str(k)
    if args.list:
        tabs = [gt_to_ssyt(x) for x in enumerate_gt(args.shape, args.content, cap=args.max_tables)]
        payload["tableaux"] = tabs
        text = "\n".join([text] + [format_tableau(t) for t in tabs])
    return EXIT_OK, payload, text


def cmd_tables(args):
    tabs = list(enumerate_tables(args.alpha, args.beta, pi=args.pi, dominated_by=args.dominated_by,
                                 cap=args.max_tables))
    payload = {"alpha": list(args.alpha), "beta": list(args.beta), "count": len(tabs)}
    if args.count:
        return EXIT_OK, payload, str(len(tabs))
    payload["tables"] = [matrix_to_json(t)["rows"] for t in tabs]
    text = "\n\n".join(format_matrix(t.rows) for t in tabs)
    return EXIT_OK, payload, f"{len(tabs)} tables\n\n{text}".rstrip()


def cmd_binary3(args):
    m = count_binary3(args.alpha, args.beta, args.gamma, cap=args.max_tables)
    payload = {"alpha": list(args.alpha), "beta": list(args.beta), "gamma": list(args.gamma),
               "count": m, "unique": m == 1}
    text = f"m* = {m}"
    if args.list:
        ts = list(enumerate_binary3(args.alpha, args.beta, args.gamma, cap=args.max_tables))
        payload["tensors"] = [tensor_to_json(t) for t in ts]
        text += "\n\n" + "\n\n---\n\n".join(format_tensor(t) for t in ts)
    return EXIT_OK, payload, text


def cmd_additive(args):
    a = _matrix(args)
    w = is_additive(a)
    payload = {"matrix": matrix_to_json(a)["rows"], "additive": w is not None,
               "witness": None if w is None else w.to_json()}
    if w is None:
        return EXIT_FAILED, payload, "not additive"
    x = " ".join(format_rational(v) for v in w.x)
    y = " ".join(format_rational(v) for v in w.y)
    return EXIT_OK, payload, f"additive\nx: {x}\ny: {y}"


def cmd_minimal(args):
    a = _matrix(args)
    ok = is_minimal(a, cap=args.max_tables)
    payload = {"matrix": matrix_to_json(a)["rows"], "minimal": ok}
    text = "minimal" if ok else "not minimal"
    if not ok:
        b = majorizing_witness(a, cap=args.max_tables)
        payload["witness"] = matrix_to_json(b)["rows"]
        text += f"; strictly majorized pi-sequence:\n{format_matrix(b.rows)}"
    return (EXIT_OK if ok else EXIT_FAILED), payload, text


def cmd_piunique(args):
    a = _matrix(args)
    ok = is_pi_unique(a, cap=args.max_tables)
    payload = {"matrix": matrix_to_json(a)["rows"], "pi_unique": ok}
    return (EXIT_OK if ok else EXIT_FAILED), payload, "pi-unique" if ok else "not pi-unique"


def cmd_graphmap(args):
    a = _matrix(args)
    t = graph(a)
    got = marginals3(t)
    want = graph_marginals_expected(a)
    ok = tuple(map(tuple, got)) == tuple(map(tuple, want))
    payload = {"tensor": tensor_to_json(t), "marginals": [list(m) for m in got],
               "expected": [list(m) for m in want], "consistent": ok,
               "matrix_of_uniqueness": None}
    text = format_tensor(t) + "\n\nmarginals: " + " | ".join(",".join(map(str, m)) for m in got)
    if args.uniqueness:
        u = is_matrix_of_uniqueness(t)
        payload["matrix_of_uniqueness"] = u
        text += f"\nmatrix of uniqueness: {u}"
    if args.additive3:
        w = is_additive3(t)
        payload["additive3"] = w is not None
        text += f"\n(0,1)-additive: {w is not None}"
    return (EXIT_OK if ok else EXIT_FAILED), payload, text


def cmd_symmetries(args):
    a = _matrix(args)
    box = tuple(int(v) for v in args.box.split(",")) if args.box else None
    images = t_orbit(a, box)
    base_additive = is_additive(a) is not None
    out, lines, ok = [], [], True
    for label, m in images:
        add = is_additive(m) is not None
        ok &= add or not base_additive
        out.append({"label": label, "matrix": matrix_to_json(m)["rows"], "additive": add})
        lines.append(f"{label:>7}  additive={add}\n{format_matrix(m.rows)}")
    return (EXIT_OK if ok else EXIT_FAILED), {"images": out}, "\n\n".join(lines)


def cmd_families(args):
    params = [parse_partition(args.args)] if args.kind == "young" or args.kind == "row" \
        else [int(v) for v in args.args.split(",") if v.strip()]
    m = family(args.kind, *params)
    w = is_additive(m)
    t = AdditiveTriple.from_matrix(m) if w is not None else None
    payload = {"kind": args.kind, "matrix": matrix_to_json(m)["rows"], "additive": w is not None,
               "triple": None if t is None else [list(p) for p in t.as_tuple()]}
    text = format_matrix(m.rows)
    if t is not None:
        text += "\ntriple: " + " ; ".join(",".join(map(str, p)) for p in t.as_tuple())
    return (EXIT_OK if w is not None else EXIT_FAILED), payload, text


def cmd_triples(args):
    a = _matrix(args)
    try:
        t = AdditiveTriple.from_matrix(a)
    except ValueError:
        return EXIT_FAILED, {"additive": False}, "not additive"
    ts = derive_triples(t)
    payload = {"triples": [[list(p) for p in x.as_tuple()] for x in ts]}
    text = "\n".join(" ; ".join(",".join(map(str, p)) or "-" for p in x.as_tuple()) for x in ts)
    return EXIT_OK, payload, text


def cmd_stability(args):
    from .stability import stability_sequence

    r = stability_sequence(args.l, args.m, args.n, args.alpha, args.beta, args.gamma, args.N,
                           window=args.window, max_degree=args.max_degree, jobs=args.jobs)
    text = r.to_csv().rstrip() if args.csv else r.to_text()
    return (EXIT_OK if r.monotone else EXIT_FAILED), r.to_json(), text


def cmd_stembridge(args):
    from .stability import stembridge_condition

    r = stembridge_condition(args.alpha, args.beta, args.gamma, args.n, max_tables=args.max_tables)
    payload = r.to_json()
    lines = [f"n={n}: {v}" for n, v in r.values.items()]
    lines.append(f"all ones: {r.all_ones}")
    warnings = []
    if not r.class_nonempty:
        warnings.append("no additive matrix exists")
    if r.dominated is not None:
        lines.append(f"unique dominated table (additive={r.dominated_additive}):")
        lines.append(format_matrix(r.dominated.rows))
    payload["warnings"] = warnings
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    failed = r.all_ones and not r.dominated_additive
    return (EXIT_FAILED if failed else EXIT_OK), payload, "\n".join(lines)


def cmd_certify(args):
    a = _signed_rows(_read_text(args.matrix) if args.matrix else args.inline.replace(";", "\n"))
    x = _signed_rows(_read_text(args.perturbation))
    t = to_exact(args.t)
    c = check_perturbation(a, x, t)
    payload = {"valid": c.valid, "reason": c.reason, "certificate": certificate_to_json(x, t),
               "pi_before": [format_rational(v) for v in c.pi_before],
               "pi_after": [format_rational(v) for v in c.pi_after]}
    text = f"{'valid' if c else 'invalid'}: {c.reason}"
    if c.pi_after:
        text += "\npi(A - tX): " + " ".join(format_rational(v) for v in c.pi_after)
        text += "\npi(A):      " + " ".join(format_rational(v) for v in c.pi_before)
    return (EXIT_OK if c else EXIT_FAILED), payload, text


def cmd_paper_examples(args):
    from .fixtures import worked_examples

    rows = []
    for name, check in worked_examples():
        try:
            ok = bool(check())
        except Exception as exc:  # report, keep going
            ok = False
            name += f" ({type(exc).__name__}: {exc})"
        rows.append((name, ok))
    width = max(len(n) for n, _ in rows)
    text = "\n".join(f"{n.ljust(width)}  {'pass' if ok else 'FAIL'}" for n, ok in rows)
    payload = {"results": [{"name": n, "pass": ok} for n, ok in rows]}
    return (EXIT_OK if all(ok for _, ok in rows) else EXIT_FAILED), payload, text


# -- parser ---------------------------------------------------------------

def _common(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-tables", type=int, default=TABLE_CAP)
    p.add_argument("--max-degree", type=int, default=KRON_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--manifest", metavar="PATH", help="write a run manifest here")


def _matrix_opts(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", metavar="FILE", help="matrix file ('-' for stdin)")
    g.add_argument("--inline", metavar="ROWS", help="'4 3 2; 3 1 0; 1 1 0'")


def build_parser() -> argparse.ArgumentParser:
    P = _partition
    parser = argparse.ArgumentParser(prog="tomokron", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        _common(p)
        p.set_defaults(func=func)
        return p

    p = add("kron", cmd_kron, "Kronecker coefficient g(l, m, n)")
    for flag in ("--l", "--m", "--n"):
        p.add_argument(flag, type=P, required=True)

    p = add("kostka", cmd_kostka, "Kostka number K(shape, content)")
    p.add_argument("--shape", type=P, required=True)
    p.add_argument("--content", type=lambda s: tuple(int(v) for v in s.split(",") if v), required=True)
    p.add_argument("--list", action="store_true", help="print the tableaux")

    p = add("tables", cmd_tables, "enumerate M(alpha, beta)")
    p.add_argument("--alpha", type=P, required=True)
    p.add_argument("--beta", type=P, required=True)
    p.add_argument("--pi", type=P)
    p.add_argument("--dominated-by", type=P)
    p.add_argument("--count", action="store_true")

    p = add("binary3", cmd_binary3, "count 3D binary matrices with given 1-marginals")
    for flag in ("--alpha", "--beta", "--gamma"):
        p.add_argument(flag, type=P, required=True)
    p.add_argument("--list", action="store_true")

    for name, func, help in (("additive", cmd_additive, "decide additivity"),
                             ("minimal", cmd_minimal, "decide minimality"),
                             ("piunique", cmd_piunique, "decide pi-uniqueness"),
                             ("triples", cmd_triples, "six additive triples from the S3 action")):
        _matrix_opts(add(name, func, help))

    p = add("graphmap", cmd_graphmap, "3D graph of a matrix and its marginals")
    _matrix_opts(p)
    p.add_argument("--uniqueness", action="store_true")
    p.add_argument("--additive3", action="store_true")

    p = add("symmetries", cmd_symmetries, "12 images under axis permutations and complement")
    _matrix_opts(p)
    p.add_argument("--box", help="p,q,r bounding box")

    p = add("families", cmd_families, "build a matrix from a named additive family")
    p.add_argument("--kind", required=True, choices=["box", "tripod", "staircase", "young", "row"])
    p.add_argument("--args", required=True, help="e.g. 1,1,1 for tripod or 4,2,1 for young")

    p = add("stability", cmd_stability, "s_k along a direction")
    for flag in ("--l", "--m", "--n", "--alpha", "--beta", "--gamma"):
        p.add_argument(flag, type=P, required=True)
    p.add_argument("--N", type=int, default=6)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--csv", action="store_true")

    p = add("stembridge", cmd_stembridge, "inner products along n*(alpha, beta, gamma)")
    for flag in ("--alpha", "--beta", "--gamma"):
        p.add_argument(flag, type=P, required=True)
    p.add_argument("--n", type=int, required=True, help="largest n")

    p = add("certify", cmd_certify, "check a perturbation certificate A - tX")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", metavar="FILE")
    g.add_argument("--inline")
    p.add_argument("--perturbation", required=True, metavar="FILE")
    p.add_argument("--t", default="1", help="step, exact (e.g. 1/2)")

    add("paper-examples", cmd_paper_examples, "run every worked-example check")
    return parser


def _inputs(args) -> dict:
    skip = {"func", "json", "max_tables", "max_degree", "jobs", "seed", "manifest", "command"}
    out = {}
    for k, v in vars(args).items():
        if k in skip or v is None:
            continue
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, text = args.func(args)
    except CapExceeded as exc:
        code, payload, text = EXIT_CAP, {"error": "cap exceeded", "detail": str(exc)}, f"cap exceeded: {exc}"
    except (InvalidInput, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        code, payload, text = EXIT_INVALID, {"error": "invalid input", "detail": str(exc)}, f"invalid input: {exc}"
    payload = {"schema": SCHEMA_VERSION, "command": args.command, "exit_code": code, **payload}

    if args.manifest:
        overrides = [name for name, default in (("max_tables", TABLE_CAP), ("max_degree", KRON_CAP))
                     if getattr(args, name) != default]
        m = RunManifest(args.command, _inputs(args),
                        {"max_tables": args.max_tables, "max_degree": args.max_degree, "jobs": args.jobs},
                        args.seed, outputs_digest=digest(payload), cap_overrides=overrides)
        Path(args.manifest).write_text(json.dumps(m.to_json(), indent=2, default=str) + "\n")

    if args.json:
        print(json.dumps(payload, default=str))
    else:
        stream = sys.stderr if code in (EXIT_INVALID, EXIT_CAP) else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
