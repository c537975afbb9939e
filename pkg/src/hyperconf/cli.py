"""
Command-line interface for the hyperconf toolkit.

Exit statuses:
    0  success
    1  violation found (a witness is printed)
    2  usage, parse or validation error
    3  budget exhausted before an answer was reached

With ``--format structured`` every result line is one JSON record; logs go to
stderr in both modes.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from dotenv import load_dotenv
from pydantic import ValidationError

from hyperconf.bounds import (
    corollary_lower_bound,
    known_value_table,
    known_values_frame,
    odd_upper_bound,
    pi_formulas,
    pi_known,
    sweep_claims,
    sweep_ratio_steps,
)
from hyperconf.cleaning import clean, verify_cleaned
from hyperconf.exceptions.errors import (
    BudgetExhausted,
    ConfigurationException,
    HyperconfException,
    HypergraphException,
    InvalidParams,
    PreconditionException,
    TheoremViolation,
    ValidationException,
)
from hyperconf.hypergraph import (
    Hypergraph,
    Params,
    cover_profile,
    read_hypergraph,
    serialize_hypergraph,
    t_shadow,
    t_tight_components,
    write_hypergraph,
)
from hyperconf.models import (
    Command,
    ConfigQuery,
    OutputFormat,
    PackConstraints,
    RunConfig,
    SearchBudget,
    SolverOptions,
)
from hyperconf.reduction import reduce_k5, reduce_k7
from hyperconf.search import find_configuration
from hyperconf.solver import GENERATOR, exact_f, greedy_pack
from hyperconf.utils import (
    configure,
    ensure_parent,
    format_fraction,
    format_timestamp,
    generate_run_id,
    get_config,
    get_logger,
    load_config,
    parse_int_list,
    run_context,
    setup_logging,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class Emitter:
    """Writes result lines as text or as one JSON record per line."""

    def __init__(self, fmt: OutputFormat, run_id: str, stream: TextIO):
        self.fmt = fmt
        self.run_id = run_id
        self.stream = stream

    def emit(self, record: Dict[str, Any], text: Optional[str] = None) -> None:
        if self.fmt is OutputFormat.STRUCTURED:
            self.stream.write(json.dumps({"run_id": self.run_id, **record}, default=str) + "\n")
        elif text is not None:
            self.stream.write(text + "\n")

    def raw(self, text: str) -> None:
        """Text-mode only payload, such as a serialized hypergraph."""
        if self.fmt is OutputFormat.TEXT:
            self.stream.write(text)


def _load(config: RunConfig) -> Hypergraph:
    F = read_hypergraph(config.input)
    if config.r is not None and config.r != F.r:
        raise InvalidParams(
            f"--r {config.r} does not match the file's uniformity {F.r}",
            details={"r": config.r, "file_r": F.r},
        )
    return F


def _params(config: RunConfig, r: int) -> Params:
    return Params(r, config.t, config.k if config.k is not None else 2)


def _budget(config: RunConfig) -> Optional[SearchBudget]:
    return SearchBudget(max_nodes=config.max_nodes) if config.max_nodes else None


def _emit_graph(out: Emitter, F: Hypergraph, path: Optional[Path]) -> None:
    if path is not None:
        write_hypergraph(F, path)
        out.emit({"written": str(path), "edges": F.m}, f"wrote {F.m} edges to {path}")
    else:
        out.emit({"hypergraph": serialize_hypergraph(F)})
        out.raw(serialize_hypergraph(F))


def _run_check(config: RunConfig, out: Emitter) -> int:
    F = _load(config)
    params = _params(config, F.r)
    label = f"{config.ell}{'-minus' if config.minus else ''}"
    hit = None
    if F.m >= config.ell:
        q = ConfigQuery.for_params(params, config.ell, config.minus)
        hit = find_configuration(F, q, _budget(config), workers=config.workers)
    if hit is None:
        out.emit({"command": "check", "configuration": label, "free": True}, f"{label}-free")
        return EXIT_OK
    edges = hit.edges_in(F)
    out.emit(
        {
            "command": "check",
            "configuration": label,
            "free": False,
            "witness": list(hit.sorted_indices),
            "edges": [list(e) for e in edges],
            "span": hit.span,
        },
        f"not {label}-free: witness edges {','.join(map(str, hit.sorted_indices))} "
        f"({' | '.join(' '.join(map(str, e)) for e in edges)}), span {hit.span}",
    )
    return EXIT_VIOLATION


def _run_shadow(config: RunConfig, out: Emitter) -> int:
    F = _load(config)
    shadow = t_shadow(F, config.t)
    profile = cover_profile(F, config.t, include_zero=True)
    out.emit({"command": "shadow", "t": config.t, "size": len(shadow)}, f"shadow {len(shadow)}")
    for mult in sorted(profile.histogram):
        count = profile.histogram[mult]
        out.emit({"multiplicity": mult, "t_sets": count}, f"J{mult} {count}")
    return EXIT_OK


def _run_components(config: RunConfig, out: Emitter) -> int:
    F = _load(config)
    components = t_tight_components(F, config.t)
    for i, component in enumerate(components):
        idxs = sorted(component)
        out.emit(
            {"component": i, "size": len(idxs), "edges": idxs},
            f"component {i} size {len(idxs)}: {' '.join(map(str, idxs))}",
        )
    return EXIT_OK


def _run_clean(config: RunConfig, out: Emitter) -> int:
    F = _load(config)
    params = _params(config, F.r)
    G, ledger = clean(F, params, _budget(config))
    for record in ledger.to_records():
        out.emit(record, f"{record['stage']}: removed {record['count']} (bound {record['bound']})")
    out.emit(
        {"removed": ledger.total_removed, "bound_total": ledger.bound_total},
        f"removed {ledger.total_removed} of {F.m} edges (bound {ledger.bound_total})",
    )
    _emit_graph(out, G, config.output)
    report = verify_cleaned(G, params, workers=config.workers)
    for record in report.to_records():
        out.emit(record, f"violation {record['property']}: {record['detail']}")
    return EXIT_OK if report.is_clean else EXIT_VIOLATION


def _run_reduce(config: RunConfig, out: Emitter) -> int:
    F = _load(config)
    params = _params(config, F.r)
    if config.clean_first:
        F, ledger = clean(F, params, _budget(config))
        logger.info(f"Cleaned input first: removed {ledger.total_removed} edges")
    reducer = reduce_k5 if config.k == 5 else reduce_k7
    final, trace = reducer(F, params)
    for record in trace.to_records():
        out.emit(record, f"{record['rule']}: dJ={record['delta_j']} dF={record['delta_f']}")
    summary = trace.summary()
    out.emit(
        summary.to_record(),
        f"|J| dropped by {summary.lhs}, required {summary.rhs}: {'ok' if summary.holds else 'FAILED'}",
    )
    _emit_graph(out, final, config.output)
    return EXIT_OK


def _run_bounds(config: RunConfig, out: Emitter) -> int:
    if config.r is not None and config.t is not None and config.k is not None and not config.table:
        r, t, k = config.r, config.t, config.k
        known = pi_known(r, t, k)
        if known is not None:
            out.emit(known.to_record(), known.to_text())
        else:
            out.emit({"r": r, "t": t, "k": k, "value": None}, f"{r} {t} {k} unknown")
        for source, value in pi_formulas(r, t, k):
            out.emit({"formula": source, "value": format_fraction(value)}, f"{source} {format_fraction(value)}")
        lower = corollary_lower_bound(r, t)
        out.emit({"lower_bound": format_fraction(lower)}, f"lower-bound {format_fraction(lower)}")
        if k % 2 and t >= 2 and k >= 3:
            upper = odd_upper_bound(r, t, k)
            out.emit({"upper_bound": format_fraction(upper)}, f"upper-bound {format_fraction(upper)}")
        return EXIT_OK

    grid = {
        "r_max": config.r_max or 6,
        "k_max": config.k_max or 7,
        "t_max": config.t_max or 3,
    }
    for row in known_value_table(**grid):
        out.emit(row.to_record(), row.to_text())
    if config.csv is not None:
        ensure_parent(config.csv)
        known_values_frame(**grid).to_csv(config.csv, index=False)
        logger.info(f"Known-value table written to {config.csv}")
    return EXIT_OK


def _run_solve(config: RunConfig, out: Emitter) -> int:
    params = Params(config.r, config.t, config.k)
    settings = get_config()
    opts = SolverOptions(
        node_limit=config.node_limit or settings.solver_node_limit,
        time_limit=config.time_limit or settings.solver_time_limit,
        symmetry_pruning=config.symmetry_pruning,
        seed=config.seed,
    )
    result = exact_f(params, config.n, opts)
    out.emit(result.to_record(), result.to_text())
    if config.output is not None:
        _emit_graph(out, result.witness, config.output)
    return EXIT_OK if result.complete else EXIT_BUDGET


def _run_pack(config: RunConfig, out: Emitter) -> int:
    params = Params(config.r, config.t, config.k)
    constraints = PackConstraints(
        minus_free=config.minus_free,
        no_three_minus_with_two=config.no_three_minus_with_two,
        split_disjoint=config.split_disjoint,
    )
    F = greedy_pack(params, config.n, config.seed, constraints)
    out.emit(
        {"edges": F.m, "generator": GENERATOR, "seed": config.seed},
        f"packed {F.m} edges ({GENERATOR}, seed {config.seed})",
    )
    _emit_graph(out, F, config.output)
    return EXIT_OK


def _run_verify_claims(config: RunConfig, out: Emitter) -> int:
    claims = sweep_claims(config.r_max, config.t_max, config.k_max, workers=config.workers)
    ratios = sweep_ratio_steps(config.samples, seed=config.seed)
    ok = True
    for report in (claims, ratios):
        ok = ok and report.ok
        for record in report.to_records():
            if "checked" in record:
                text = f"{record['check']}: {record['checked']} checked, {record['counterexamples']} counterexamples"
            else:
                text = f"counterexample {record}"
            out.emit(record, text)
    return EXIT_OK if ok else EXIT_VIOLATION


_HANDLERS = {
    Command.CHECK: _run_check,
    Command.SHADOW: _run_shadow,
    Command.COMPONENTS: _run_components,
    Command.CLEAN: _run_clean,
    Command.REDUCE: _run_reduce,
    Command.BOUNDS: _run_bounds,
    Command.SOLVE: _run_solve,
    Command.PACK: _run_pack,
    Command.VERIFY_CLAIMS: _run_verify_claims,
}


def run(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """
    Execute one command and return its exit status.

    Errors are mapped to statuses: malformed input and invalid arguments give
    2, exhausted budgets give 3, failed preconditions and violated inequalities
    give 1 with the witness in the error record.
    """
    run_id = generate_run_id()
    out = Emitter(config.output_format, run_id, stream or sys.stdout)
    with run_context(run_id, config.command.value):
        logger.info(f"Run started at {format_timestamp()}")
        status = _dispatch(config, out)
        logger.info(f"Run finished with status {status}")
    return status


def _dispatch(config: RunConfig, out: Emitter) -> int:
    try:
        status = _HANDLERS[config.command](config, out)
    except BudgetExhausted as e:
        logger.warning(f"Budget exhausted: {e.message}")
        out.emit(e.to_dict(), f"budget exhausted: {e.message}")
        return EXIT_BUDGET
    except (PreconditionException, TheoremViolation) as e:
        logger.error(f"{e.__class__.__name__}: {e.message}")
        out.emit(e.to_dict(), f"{e.__class__.__name__}: {e.message} {json.dumps(e.details, default=str)}")
        return EXIT_VIOLATION
    except (HypergraphException, ValidationException, ConfigurationException) as e:
        logger.error(f"{e.__class__.__name__}: {e.message}")
        out.emit(e.to_dict(), f"error: {e.message}")
        return EXIT_USAGE
    except HyperconfException as e:
        logger.error(f"Unhandled toolkit error: {e.message}")
        out.emit(e.to_dict(), f"error: {e.message}")
        return EXIT_USAGE
    return status


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=["text", "structured"], default="text")
    parser.add_argument(
        "--workers", type=int, default=None, help="Worker processes for the check, clean and verify-claims searches"
    )
    parser.add_argument("--config", default=None, help="YAML configuration file")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")


def _graph_input(parser: argparse.ArgumentParser, needs_k: bool = True) -> None:
    parser.add_argument("input", type=Path, help="Hypergraph file")
    parser.add_argument("--r", type=int, default=None, help="Expected uniformity (checked against the file)")
    parser.add_argument("--t", type=int, required=True)
    if needs_k:
        parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--max-nodes", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperconf",
        description="Configuration search, cleaning, reductions and exact bounds for r-uniform hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Test l-freeness and print a witness")
    _graph_input(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--minus", action="store_true")
    _common(p)

    p = sub.add_parser("shadow", help="t-shadow size and cover histogram")
    _graph_input(p, needs_k=False)
    _common(p)

    p = sub.add_parser("components", help="t-tight components")
    _graph_input(p, needs_k=False)
    _common(p)

    p = sub.add_parser("clean", help="Clean a k-free hypergraph and print the ledger")
    _graph_input(p)
    p.add_argument("--output", type=Path, default=None)
    _common(p)

    p = sub.add_parser("reduce", help="Run the k=5 or k=7 density reduction")
    _graph_input(p)
    p.add_argument("--output", type=Path, default=None)
    p.add_argument("--clean", dest="clean_first", action="store_true", help="Clean the input first")
    _common(p)

    p = sub.add_parser("bounds", help="Known limit values and closed forms")
    p.add_argument("--table", action="store_true")
    p.add_argument("--csv", type=Path, default=None, help="Also export the table as CSV")
    for name in ("r", "t", "k", "r-max", "t-max", "k-max"):
        p.add_argument(f"--{name}", type=int, default=None)
    _common(p)

    for name, text in (("solve", "Exact f(n) by branch and bound"), ("pack", "Greedy k-free packing")):
        p = sub.add_parser(name, help=text)
        for param in ("r", "t", "k", "n"):
            p.add_argument(f"--{param}", type=int, required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", type=Path, default=None)
        if name == "solve":
            p.add_argument("--node-limit", type=int, default=None)
            p.add_argument("--time-limit", type=float, default=None)
            p.add_argument("--symmetry", dest="symmetry_pruning", action="store_true")
        else:
            p.add_argument("--minus-free", default="", help="Comma-separated l values")
            p.add_argument("--no-three-minus-with-two", action="store_true")
            p.add_argument("--split-disjoint", action="store_true")
        _common(p)

    p = sub.add_parser("verify-claims", help="Sweep the binomial inequalities and the ratio step")
    p.add_argument("--grid", default=None, help="r_max,t_max,k_max")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None}
    values.pop("config", None)
    values.pop("log_level", None)
    if "minus_free" in values:
        values["minus_free"] = frozenset(parse_int_list(values["minus_free"]))
    if "grid" in values:
        grid = parse_int_list(values.pop("grid"))
        values.update(dict(zip(("r_max", "t_max", "k_max"), grid)))
    values.setdefault("workers", get_config().workers)
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        if args.config:
            configure(load_config(args.config))
    except (ConfigurationException, FileNotFoundError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    settings = get_config()
    setup_logging(
        log_level=args.log_level or settings.log_level,
        log_file=settings.log_file,
        pretty_print=settings.log_format == "pretty",
    )

    try:
        config = _run_config(args)
    except (ValidationError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
