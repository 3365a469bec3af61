"""Command line front end.

Every subcommand prints a single JSON object (or, for the report streams,
JSON Lines) to the configured output. --human switches to an indented or
tabular rendering of the same data. Exit codes: 0 success, 1 domain or usage
errors, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import apolarity, brionlab, characters, curvebounds, monodromy, seminormal
from .config import Config, load_config
from .errors import (
    CapacityError,
    ConsistencyError,
    DomainError,
    KronsecError,
    PrecisionError,
)
from .partitions import format_partition, parse_partition, partitions_of, size
from .permutations import cycle_notation


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as error objects, not exit 2."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="kronsec", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="path to a key=value config file")
    parser.add_argument("--human", action="store_true", help="indented output instead of compact JSON")
    parser.add_argument("--seed", type=int, help="override the configured random seed")
    parser.add_argument("--precision-bits", type=int, help="working precision for numeric tracking")
    parser.add_argument("--n-cap", type=int, help="largest symmetric group order allowed")
    parser.add_argument("--sweep-cap", type=int, help="largest sweep size allowed")
    parser.add_argument("--output", help="output path, - for stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="full character table of one symmetric group")
    p.add_argument("n", type=int)

    p = sub.add_parser("kron", help="one Kronecker coefficient")
    p.add_argument("lam")
    p.add_argument("omega")
    p.add_argument("sigma")

    p = sub.add_parser("lr", help="one Littlewood-Richardson number, dual-route checked")
    p.add_argument("lam")
    p.add_argument("omega")
    p.add_argument("sigma")

    p = sub.add_parser("pieri", help="row-strip decomposition of lambda times a one-row shape")
    p.add_argument("lam")
    p.add_argument("n", type=int, help="size of the one-row factor")
    p.add_argument("--distinguished", action="store_true",
                   help="also report the unique long-first-row constituent")

    p = sub.add_parser("tensor", help="full Kronecker decomposition of a tensor square or product")
    p.add_argument("lam")
    p.add_argument("omega")

    p = sub.add_parser("rep-check", help="seminormal matrices: defining relations and sampled traces")
    p.add_argument("lam")
    p.add_argument("--words", type=int, default=5, help="number of random words to trace")

    p = sub.add_parser("secant", help="catalecticant kernel test for membership at one k")
    p.add_argument("form", help='binary form, e.g. "deg=3; coeffs=1,0,0,1"')
    p.add_argument("k", type=int)

    p = sub.add_parser("sylvester", help="rank certificate for a binary form")
    p.add_argument("form")

    p = sub.add_parser("vdm", help="rank of the moment matrix of given nodes")
    p.add_argument("nodes", help='JSON list, e.g. \'[0, 1, "1/2", "inf"]\'')
    p.add_argument("degree", type=int)

    p = sub.add_parser("join", help="first kernel degrees of two forms and their sum")
    p.add_argument("form1")
    p.add_argument("form2")

    p = sub.add_parser("curve-bounds", help="section counts and separation bounds on a curve")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--twist", type=int, help="report h0 after twisting down by this degree")
    p.add_argument("--k", type=int, help="report whether 2k points are separated")

    p = sub.add_parser("monodromy", help="track one loop, a relation word, or the defining action")
    p.add_argument("--spec", help="loop spec: a JSON file path, or inline JSON starting with {")
    p.add_argument("--n", type=int, help="number of roots for --word/--spherical/--defining")
    p.add_argument("--word", help="comma-separated generator indices, e.g. 1,2,1")
    p.add_argument("--spherical", action="store_true", help="track the full relation word")
    p.add_argument("--defining", action="store_true", help="generators, group order, character split")
    p.add_argument("--samples", type=int, default=3, help="random cross-check words for --defining")

    p = sub.add_parser("brion-sweep", help="exhaustive vanishing/equality records up to n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--mode", choices=("vanishing", "equality", "both"), default="both")

    p = sub.add_parser("brion-boundary", help="the same records just outside the hypothesis")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("vanishing", "equality", "both"), default="both")

    return parser


def _merge_config(args) -> Config:
    cfg = load_config(args.config)
    updates = {}
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.precision_bits is not None:
        updates["precision_bits"] = args.precision_bits
    if args.n_cap is not None:
        updates["n_cap"] = args.n_cap
    if args.sweep_cap is not None:
        updates["sweep_cap"] = args.sweep_cap
    if args.output is not None:
        updates["output"] = args.output
    if updates:
        from dataclasses import replace

        cfg = replace(cfg, **updates)
    return cfg


def _scalar(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return x
    return str(x)


@contextmanager
def _sink(cfg: Config):
    if cfg.output in ("-", ""):
        yield sys.stdout
    else:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            yield fh


def _emit(obj: dict, cfg: Config, human: bool) -> None:
    with _sink(cfg) as out:
        if human:
            out.write(json.dumps(obj, indent=2, default=_scalar) + "\n")
        else:
            out.write(json.dumps(obj, separators=(",", ":"), default=_scalar) + "\n")


def _cmd_chartable(args, cfg: Config, human: bool) -> int:
    table = characters.character_table(args.n, cap=cfg.n_cap)
    shapes = [format_partition(lam) for lam in table.irreducibles]
    classes = [format_partition(c.cycle_type) for c in table.classes]
    sizes = [c.cls_size for c in table.classes]
    if human:
        with _sink(cfg) as out:
            width = max(len(s) for s in shapes + classes) + 2
            out.write(" " * width + "".join(c.rjust(width) for c in classes) + "\n")
            out.write(" " * width + "".join(str(s).rjust(width) for s in sizes) + "\n")
            for lam, row in zip(table.irreducibles, table.values):
                out.write(format_partition(lam).rjust(width)
                          + "".join(str(v).rjust(width) for v in row) + "\n")
        return 0
    _emit({"n": args.n, "classes": classes, "class_sizes": sizes,
           "shapes": shapes, "table": [list(row) for row in table.values]}, cfg, human)
    return 0


def _cmd_kron(args, cfg: Config, human: bool) -> int:
    value = characters.kronecker(parse_partition(args.lam), parse_partition(args.omega),
                                 parse_partition(args.sigma), cap=cfg.n_cap)
    _emit({"kron": value}, cfg, human)
    return 0


def _cmd_lr(args, cfg: Config, human: bool) -> int:
    value = characters.lr_checked(parse_partition(args.lam), parse_partition(args.omega),
                                  parse_partition(args.sigma))
    _emit({"lr": value}, cfg, human)
    return 0


def _cmd_pieri(args, cfg: Config, human: bool) -> int:
    lam = parse_partition(args.lam)
    terms = characters.pieri_decompose(lam, args.n)
    ordered = [mu for mu in partitions_of(args.n) if mu in terms]
    obj = {"lambda": format_partition(lam), "n": args.n,
           "terms": [format_partition(mu) for mu in ordered]}
    if args.distinguished:
        obj["distinguished"] = format_partition(characters.pieri_distinguished(lam, args.n))
    _emit(obj, cfg, human)
    return 0


def _cmd_tensor(args, cfg: Config, human: bool) -> int:
    lam = parse_partition(args.lam)
    omega = parse_partition(args.omega)
    decomp = characters.tensor_decompose(lam, omega, cap=cfg.n_cap)
    ordered = {format_partition(sig): decomp[sig]
               for sig in partitions_of(size(lam)) if sig in decomp}
    _emit({"lambda": format_partition(lam), "omega": format_partition(omega),
           "terms": ordered}, cfg, human)
    return 0


def _cmd_rep_check(args, cfg: Config, human: bool) -> int:
    lam = parse_partition(args.lam)
    rep = seminormal.build_rep(lam)
    relations = seminormal.check_relations(rep)
    image = seminormal.spherical_relation_image(rep)
    spherical = all(image[i][j] == (1 if i == j else 0)
                    for i in range(rep.dim) for j in range(rep.dim))
    rng = random.Random(cfg.seed)
    traces_ok = True
    sampled = 0
    if rep.n >= 2:
        for _ in range(args.words):
            word = [rng.randrange(1, rep.n) for _ in range(rng.randrange(1, 2 * rep.n))]
            expected = characters.mn_value(lam, seminormal.word_cycle_type(rep, word))
            if seminormal.word_trace(rep, word) != expected:
                traces_ok = False
            sampled += 1
    _emit({"shape": format_partition(lam), "n": rep.n, "dim": rep.dim,
           **relations, "spherical_identity": spherical,
           "word_samples": sampled, "word_traces_ok": traces_ok,
           "seed": cfg.seed}, cfg, human)
    return 0


def _cmd_secant(args, cfg: Config, human: bool) -> int:
    p = apolarity.parse_form(args.form)
    _emit({"member": apolarity.secant_membership(p, args.k),
           "kernel_dimension": apolarity.kernel_dimension(p, args.k)}, cfg, human)
    return 0


def _point_json(pt: apolarity.SupportPoint) -> dict:
    return {"alpha": _scalar(pt.alpha), "beta": _scalar(pt.beta),
            "exact": pt.exact,
            "radius": None if pt.radius is None else float(pt.radius)}


def _cmd_sylvester(args, cfg: Config, human: bool) -> int:
    p = apolarity.parse_form(args.form)
    cert = apolarity.sylvester_decompose(p, precision_bits=cfg.precision_bits)
    _emit({
        "form": apolarity.format_form(cert.form),
        "kernel_degree": cert.kernel_degree,
        "rank": cert.rank,
        "member": cert.member,
        "annihilator": apolarity.format_form(cert.annihilator),
        "support": None if cert.support is None else [_point_json(q) for q in cert.support],
        "coefficients": None if cert.coefficients is None
                        else [_scalar(c) for c in cert.coefficients],
        "support_exact": cert.support_exact,
        "error_bound": None if cert.error_bound is None else float(cert.error_bound),
    }, cfg, human)
    return 0


def _cmd_vdm(args, cfg: Config, human: bool) -> int:
    try:
        raw = json.loads(args.nodes)
    except json.JSONDecodeError as exc:
        raise DomainError(f"nodes must be a JSON list: {exc}") from None
    if not isinstance(raw, list):
        raise DomainError("nodes must be a JSON list")
    nodes = [tuple(x) if isinstance(x, list) else x for x in raw]
    _emit({"rank": apolarity.vandermonde_rank(nodes, args.degree)}, cfg, human)
    return 0


def _cmd_join(args, cfg: Config, human: bool) -> int:
    result = apolarity.join_rank_check(apolarity.parse_form(args.form1),
                                       apolarity.parse_form(args.form2))
    _emit({"a": result.a, "b": result.b, "c": result.c,
           "sum_is_zero": result.sum_is_zero}, cfg, human)
    return 0


def _cmd_curve_bounds(args, cfg: Config, human: bool) -> int:
    ctx = curvebounds.CurveContext(genus=args.genus, degree=args.degree)
    obj: dict = {}
    if args.twist is not None:
        obj["h0"] = curvebounds.h0(ctx, args.twist)
    if args.k is not None:
        obj["separates"] = curvebounds.separates_2k(ctx, args.k)
    if not obj:
        obj["max_k"] = curvebounds.max_admissible_k(ctx)
    _emit(obj, cfg, human)
    return 0


def _loop_json(loop: monodromy.MonodromyLoop) -> dict:
    return {
        "permutation": loop.notation(),
        "zero_based": list(loop.permutation),
        "steps": loop.refinement.steps,
        "halvings": loop.refinement.halvings,
        "initial_step": float(loop.refinement.initial_step),
        "min_step": float(loop.refinement.min_step),
        "tolerance": float(loop.tolerance),
        "precision_bits": loop.precision_bits,
    }


def _cmd_monodromy(args, cfg: Config, human: bool) -> int:
    chosen = [bool(args.spec), args.word is not None, args.spherical, args.defining]
    if sum(chosen) != 1:
        raise DomainError("pick exactly one of --spec, --word, --spherical, --defining")
    kwargs = {"precision_bits": cfg.precision_bits}
    if args.spec:
        text = args.spec
        if not text.lstrip().startswith("{"):
            try:
                with open(text, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise DomainError(f"cannot read loop spec {args.spec}: {exc}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"loop spec is not valid JSON: {exc}") from None
        base, segments, tolerance = monodromy.parse_loop_spec(data)
        loop = monodromy.track_roots(base, segments, tolerance=tolerance, **kwargs)
        _emit(_loop_json(loop), cfg, human)
        return 0
    if args.n is None:
        raise DomainError("--word, --spherical, and --defining need --n")
    if args.word is not None:
        try:
            word = [int(part) for part in args.word.split(",") if part.strip()]
        except ValueError:
            raise DomainError(f"word must be comma-separated integers, got {args.word!r}") from None
        loop = monodromy.word_loop(args.n, word, **kwargs)
        _emit(_loop_json(loop), cfg, human)
        return 0
    if args.spherical:
        check = monodromy.spherical_word_check(args.n, **kwargs)
        _emit({"n": args.n, "identity": check.identity, **_loop_json(check.loop)}, cfg, human)
        return 0
    report = monodromy.defining_rep_decomposition(args.n, sample_loops=args.samples,
                                                  seed=cfg.seed, **kwargs)
    _emit({
        "n": report.n,
        "generators": [cycle_notation(p) for p in report.generator_permutations],
        "word_samples": report.word_samples,
        "word_checks_ok": report.word_checks_ok,
        "group_order": report.group_order,
        "decomposition": {format_partition(lam): m for lam, m in report.decomposition.items()},
        "seed": report.seed,
    }, cfg, human)
    return 0


def _record_line(record: brionlab.BrionRecord, human: bool) -> str:
    obj = record.to_json()
    if human:
        return " ".join(f"{key}={obj[key]}" for key in obj)
    return json.dumps(obj, separators=(",", ":"))


def _stream_records(records, cfg: Config, human: bool) -> int:
    summary = {"records": 0, "vanishing_ok": 0, "equality_ok": 0, "no_sigma": 0, "violations": 0}
    key_for = {brionlab.VANISHING_OK: "vanishing_ok", brionlab.EQUALITY_OK: "equality_ok",
               brionlab.NO_SIGMA: "no_sigma", brionlab.VIOLATION: "violations"}
    with _sink(cfg) as out:
        for record in records:
            out.write(_record_line(record, human) + "\n")
            summary["records"] += 1
            summary[key_for[record.verdict]] += 1
        if human:
            out.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
        else:
            out.write(json.dumps({"summary": summary}, separators=(",", ":")) + "\n")
    return 0


def _cmd_brion_sweep(args, cfg: Config, human: bool) -> int:
    records = brionlab.sweep(args.n_max, cap=cfg.sweep_cap, mode=args.mode)
    return _stream_records(records, cfg, human)


def _cmd_brion_boundary(args, cfg: Config, human: bool) -> int:
    records = brionlab.boundary_scan(args.n, cap=cfg.sweep_cap, mode=args.mode)
    return _stream_records(records, cfg, human)


_COMMANDS = {
    "chartable": _cmd_chartable,
    "kron": _cmd_kron,
    "lr": _cmd_lr,
    "pieri": _cmd_pieri,
    "tensor": _cmd_tensor,
    "rep-check": _cmd_rep_check,
    "secant": _cmd_secant,
    "sylvester": _cmd_sylvester,
    "vdm": _cmd_vdm,
    "join": _cmd_join,
    "curve-bounds": _cmd_curve_bounds,
    "monodromy": _cmd_monodromy,
    "brion-sweep": _cmd_brion_sweep,
    "brion-boundary": _cmd_brion_boundary,
}


def _error_line(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message},
                                separators=(",", ":")) + "\n")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        _error_line("usage", str(exc))
        return 1
    try:
        cfg = _merge_config(args)
        return _COMMANDS[args.command](args, cfg, args.human)
    except ConsistencyError as exc:
        _error_line("consistency", str(exc))
        return 2
    except CapacityError as exc:
        _error_line("capacity", str(exc))
        return 1
    except PrecisionError as exc:
        _error_line("precision", str(exc))
        return 1
    except DomainError as exc:
        _error_line("domain", str(exc))
        return 1
    except KronsecError as exc:
        _error_line("error", str(exc))
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
