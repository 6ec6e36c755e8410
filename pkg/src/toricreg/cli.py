"""Command-line front end.

Every subcommand writes one JSON document (``--format json``, the default) or a
human-readable rendering (``--format table``) to stdout.  Errors go to stderr as
JSON with a nonzero exit status: 2 for bad input, 3 when a size cap is hit, 4
when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .betti import BettiTable
from .chordal_bipartite import NotChordalBipartite, regularity_bounds, regularity_upper_bound
from .errors import CapabilityError, InvariantViolation, PartialResultError, ToricRegError
from .fibre import DEFAULT_FIBRE_CAP, enumerate_fibre, format_vertex_monomial, gamma_complex, parse_vertex_monomial
from .graph_core import Graph, parse_edge_list
from .homology import HOCHSTER_GROUND_CAP, FieldSpec, hochster_betti
from .k2d import k2d_report
from .knn import DEFAULT_N_CAP, KnnInstance, verify_nonvanishing, verify_taylor
from .toric import regularity_from_table, toric_betti_table

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_CAPABILITY, EXIT_INVARIANT = 0, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    field: FieldSpec = FieldSpec()
    max_degree: int | None = None
    alpha: str | None = None
    n: int | None = None
    d: int | None = None
    n_cap: int = DEFAULT_N_CAP
    cap_fibre: int = DEFAULT_FIBRE_CAP
    cap_subsets: int = HOCHSTER_GROUND_CAP
    workers: int = 1
    output_format: str = "json"

    def __post_init__(self):
        for name in ("cap_fibre", "cap_subsets", "n_cap", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name.replace('_', '-')} must be positive")


class _InputError(ToricRegError, ValueError):
    pass


def _read_graph(path: str | None, stdin=None) -> Graph:
    if path is None:
        raise _InputError("an edge-list input path is required")
    if path == "-":
        return parse_edge_list((stdin or sys.stdin).read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _alpha(g: Graph, cfg: RunConfig):
    if cfg.alpha is None:
        raise _InputError("--alpha is required")
    return parse_vertex_monomial(g, cfg.alpha)


def _edge_monomial_str(g: Graph, w) -> str:
    parts = [g.edge_label(k) + (f"^{e}" if e > 1 else "") for k, e in enumerate(w) if e]
    return "*".join(parts) or "1"


def _table_obj(t: BettiTable) -> dict:
    out = {"betti": t.to_json_obj(), "truncated_at": t.truncated_at}
    if t.zero_ideal:
        out["zero_ideal"] = True
    return out


# --- subcommands: each returns (json object, text rendering) -----------------

def _cmd_fibre(cfg, g):
    alpha = _alpha(g, cfg)
    fib = enumerate_fibre(g, alpha, cfg.cap_fibre)
    gamma = gamma_complex(g, alpha, cfg.cap_fibre)
    facets = [[g.edge_label(k) for k in f] for f in gamma.facets]
    obj = {"alpha": format_vertex_monomial(g, alpha), "fibre_size": len(fib),
           "fibre": [_edge_monomial_str(g, w) for w in fib], "gamma_facets": facets}
    lines = [f"alpha = {obj['alpha']}", f"|C_alpha| = {len(fib)}", f"Gamma(alpha): {len(facets)} facets"]
    lines += ["  {" + ", ".join(f) + "}" for f in facets]
    return obj, "\n".join(lines) + "\n"


def _cmd_toric_betti(cfg, g):
    if cfg.max_degree is None:
        raise _InputError("--max-degree is required")
    t = toric_betti_table(g, cfg.max_degree, cfg.field, cfg.cap_fibre, cfg.workers)
    obj = _table_obj(t)
    if t.entries:
        obj["regularity_through_cutoff"] = regularity_from_table(t)
    return obj, t.to_text()


def _cmd_gamma_betti(cfg, g):
    alpha = _alpha(g, cfg)
    gamma = gamma_complex(g, alpha, cfg.cap_fibre)
    if gamma.is_void:
        raise _InputError(f"the fibre of {format_vertex_monomial(g, alpha)} is empty")
    t = hochster_betti(gamma, cfg.field, cfg.cap_subsets)
    obj = {"alpha": format_vertex_monomial(g, alpha), **_table_obj(t)}
    return obj, t.to_text()


def _cmd_knn_verify(cfg, _g):
    inst = KnnInstance(cfg.n)
    if cfg.n <= cfg.n_cap:
        rep = verify_nonvanishing(inst, cfg.field, cfg.n_cap)
    else:
        rep = verify_taylor(inst, cfg.field)
        rep.skipped = ["sr_generators", "hochster_beta", "toric_beta"]
    obj = rep.to_json_obj()
    text = "\n".join(f"{k}: {v}" for k, v in obj.items()) + "\n"
    return obj, text


def _cmd_cb_bounds(cfg, g):
    ub = regularity_upper_bound(g)
    rb = regularity_bounds(g, search_cap=cfg.cap_subsets)
    obj = ub.to_json_obj()
    obj["lower"] = rb.lower
    obj["lower_certificate"] = rb.lower_certificate
    if rb.exact is not None:
        obj["exact"] = rb.exact
    lines = [f"status: {obj['status']}", f"upper: {obj['upper']}", f"lower: {obj['lower']}"]
    if "exact" in obj:
        lines.append(f"exact: {obj['exact']}")
    if ub.matrix is not None:
        lines.append("rows: " + " ".join(obj["row_perm"]) + "   cols: " + " ".join(obj["col_perm"]))
        lines += ["  " + "".join(map(str, r)) for r in obj["matrix"]]
        lines.append(f"H: {len(obj['h_edges'])} edges")
        for piece in obj["cover"]:
            lines.append(f"  H_{piece['row']}: " + " ".join("-".join(e) for e in piece["edges"]))
    return obj, "\n".join(lines) + "\n"


def _cmd_k2d(cfg, _g):
    rep = k2d_report(cfg.d, cfg.field)
    obj = rep.to_json_obj()
    lines = [f"K_(2,{cfg.d}) over {rep.field}; linear resolution: {rep.linear}",
             " i  strand  hochster  corrected  verbatim  subsets"]
    for r in rep.rows:
        h = "-" if r.hochster is None else r.hochster
        flag = "" if r.verbatim == r.strand else "  *"
        lines.append(f"{r.i:2d}  {r.strand:6d}  {h!s:>8}  {r.corrected:9d}  {r.verbatim:8d}  {r.subset_count:7d}{flag}")
    if rep.verbatim_disagreements:
        lines.append("* verbatim formula differs from the strand count")
    return obj, "\n".join(lines) + "\n"


def _cmd_reg(cfg, g):
    rb = regularity_bounds(g, search_cap=cfg.cap_subsets, table_cap=cfg.max_degree, field=cfg.field)
    obj = {"status": rb.status, "lower": rb.lower, "lower_certificate": rb.lower_certificate,
           "upper": rb.upper, "upper_certificate": rb.upper_certificate}
    if rb.table is not None:
        obj["table"] = _table_obj(rb.table)
        obj["table_regularity"] = rb.table_regularity
    if rb.exact is not None:
        obj["exact"] = rb.exact
    lines = [f"{k}: {obj[k]}" for k in ("status", "lower", "upper") if k in obj]
    if "exact" in obj:
        lines.append(f"exact: {obj['exact']}")
    if rb.table is not None:
        lines.append(rb.table.to_text().rstrip("\n"))
    return obj, "\n".join(lines) + "\n"


COMMANDS = {
    "fibre": (_cmd_fibre, True),
    "toric-betti": (_cmd_toric_betti, True),
    "gamma-betti": (_cmd_gamma_betti, True),
    "knn-verify": (_cmd_knn_verify, False),
    "cb-bounds": (_cmd_cb_bounds, True),
    "k2d": (_cmd_k2d, False),
    "reg": (_cmd_reg, True),
}


def _error(kind: str, exc: BaseException, **extra) -> str:
    return json.dumps({"schema": SCHEMA, "error": kind, "message": str(exc), **extra}, sort_keys=True)


def run(cfg: RunConfig, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    fn, needs_graph = COMMANDS[cfg.command]
    try:
        g = _read_graph(cfg.input, stdin) if needs_graph else None
        obj, text = fn(cfg, g)
    except NotChordalBipartite as exc:
        print(_error("not_chordal_bipartite", exc, witness=exc.witness), file=stderr)
        return EXIT_INPUT
    except PartialResultError as exc:
        extra = {"completed": _table_obj(exc.completed)} if exc.completed is not None else {}
        print(_error("capability", exc, **extra), file=stderr)
        return EXIT_CAPABILITY
    except CapabilityError as exc:
        print(_error("capability", exc), file=stderr)
        return EXIT_CAPABILITY
    except InvariantViolation as exc:
        print(_error("invariant_violation", exc, certificate=exc.certificate), file=stderr)
        return EXIT_INVARIANT
    except (ValueError, KeyError) as exc:
        print(_error("invalid_input", exc), file=stderr)
        return EXIT_INPUT
    if cfg.output_format == "table":
        stdout.write(text)
    else:
        stdout.write(json.dumps({"schema": SCHEMA, "command": cfg.command, **obj}, sort_keys=True) + "\n")
    return EXIT_OK


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec(), help="q (rationals, default) or p:<prime>")
    common.add_argument("--format", dest="output_format", choices=("json", "table"), default="json")
    common.add_argument("--cap-fibre", type=_positive, default=DEFAULT_FIBRE_CAP,
                        help="maximum fibre size / edge-monomial count per degree")
    common.add_argument("--cap-subsets", type=_positive, default=HOCHSTER_GROUND_CAP,
                        help="maximum ground set for subset enumerations (Hochster, biclique search)")
    common.add_argument("--workers", type=_positive, default=1)

    p = argparse.ArgumentParser(prog="toricreg", description="Betti numbers and regularity of toric ideals of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", help="edge-list file, or - for stdin")
        return sp

    graph_cmd("fibre", "fibre size and fibre-complex facets").add_argument("--alpha", required=True)
    graph_cmd("toric-betti", "truncated graded Betti table").add_argument("--max-degree", type=_positive, required=True)
    graph_cmd("gamma-betti", "Betti table of the fibre complex's Stanley-Reisner ideal").add_argument(
        "--alpha", required=True)
    sp = sub.add_parser("knn-verify", parents=[common], help="non-vanishing certificate for K_{n,n}")
    sp.add_argument("n", type=int)
    sp.add_argument("--n-cap", type=_positive, default=DEFAULT_N_CAP,
                    help="largest n for the fibre-complex and toric checks")
    graph_cmd("cb-bounds", "chordal bipartite upper bound with certificates")
    sp = sub.add_parser("k2d", parents=[common], help="linear-strand report for K_{2,d}")
    sp.add_argument("d", type=int)
    graph_cmd("reg", "combined regularity bounds").add_argument("--max-degree", type=_positive)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command, input=getattr(args, "input", None), field=args.field,
            max_degree=getattr(args, "max_degree", None), alpha=getattr(args, "alpha", None),
            n=getattr(args, "n", None), d=getattr(args, "d", None),
            n_cap=getattr(args, "n_cap", DEFAULT_N_CAP), cap_fibre=args.cap_fibre,
            cap_subsets=args.cap_subsets, workers=args.workers, output_format=args.output_format)
    except ValueError as exc:
        print(_error("invalid_input", exc), file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
