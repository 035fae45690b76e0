"""Command line: ``carlitz verify | compute | list``.

Exit status is 0 when every check passes, 1 when any check fails and 2 for
usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .config import FORMATS, ConfigError, RunConfig, config_path, load_config_file
from .suites import SUITES, run_suite, suite_names

__all__ = ["main", "build_parser", "resolve_config"]

COMPUTE_TARGETS = ("exp-coeffs", "phi-table", "pi-tilde", "omega", "l-series")

_FLAG_FIELDS = ("q", "ext_deg", "u_prec", "t_prec", "tau_order", "deg_max", "tol", "n", "seed",
                "format", "out", "jobs")


def _common(p: argparse.ArgumentParser):
    g = p.add_argument_group("parameters (override the config file)")
    g.add_argument("--q", type=int, help="field size (prime power)")
    g.add_argument("--ext-deg", type=int, help="extension degree d of F_{q^d}")
    g.add_argument("--u-prec", type=int, help="u = 1/theta precision")
    g.add_argument("--t-prec", type=int, help="number of t-coefficients")
    g.add_argument("--tau-order", type=int, help="tau-order of operator truncations")
    g.add_argument("--deg-max", type=int, help="degree bound (monic polynomials, L-series blocks)")
    g.add_argument("--tol", type=float, help="numeric tolerance for the gamma suites")
    g.add_argument("--n", type=int, help="index bound where a suite or target has one")
    g.add_argument("--seed", type=int, help="random seed (skew-algebra triples)")
    g.add_argument("--format", choices=FORMATS, help="output format (default json)")
    g.add_argument("--out", help="write output to this file instead of stdout")
    g.add_argument("--jobs", type=int, help="worker processes for verify")
    g.add_argument("--config", help="INI config file (else $CARLITZ_CONFIG)")
    g.add_argument("--timing", action="store_true", default=None, help="include elapsed times")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="carlitz", description="Generalised Carlitz module verification")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", default=None,
                   help="suite name (repeatable or comma separated); default all")
    _common(v)
    c = sub.add_parser("compute", help="print a computed object")
    c.add_argument("target", choices=COMPUTE_TARGETS)
    _common(c)
    ls = sub.add_parser("list", help="list suites")
    ls.add_argument("--format", choices=FORMATS, default="text")
    return p


def resolve_config(args) -> RunConfig:
    """Config file first, then explicit flags on top."""
    kw: dict = {}
    path = config_path(getattr(args, "config", None))
    if path:
        try:
            kw.update(load_config_file(path))
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
    for name in _FLAG_FIELDS:
        v = getattr(args, name, None)
        if v is not None:
            kw[name] = v
    if getattr(args, "timing", None):
        kw["timing"] = True
    if getattr(args, "suite", None):
        kw["suites"] = tuple(s for item in args.suite for s in item.replace(",", " ").split())
    return RunConfig(**kw).validate(SUITES)


# -- output ---------------------------------------------------------------------------------


def _emit(text: str, cfg: RunConfig):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_num(x):
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.3g}"
    return str(x)


def render_reports(reports, cfg: RunConfig) -> str:
    t = cfg.timing
    n_fail = sum(1 for r in reports if not r.ok)
    if cfg.format == "json":
        doc = {
            "params": reports[0].params if reports else cfg.params(),
            "suites": [r.to_dict(t) for r in reports],
            "summary": {"suites": len(reports), "failed": n_fail, "status": "pass" if n_fail == 0 else "fail"},
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check", "status", "metric", "precision"] + (["elapsed"] if t else []))
        for r in reports:
            if r.error:
                w.writerow([r.suite, "<error>", "fail", r.error, ""] + ([f"{r.elapsed:.4f}"] if t else []))
            for rec in r.records:
                d = rec.to_dict()
                w.writerow([r.suite, rec.name, rec.status, d["metric"], d["precision"]]
                           + ([f"{rec.elapsed:.4f}" if rec.elapsed is not None else ""] if t else []))
        return buf.getvalue()
    lines = []
    for r in reports:
        head = f"[{r.status.upper():4}] {r.suite} ({len(r.records)} checks)"
        if t:
            head += f" {r.elapsed:.2f}s"
        lines.append(head)
        if r.error:
            lines.append(f"    error: {r.error}")
        for rec in r.records:
            extra = f" metric={_fmt_num(rec.metric)}" if rec.metric is not None else ""
            lines.append(f"    {rec.status:7} {rec.name} prec={_fmt_num(rec.precision)}{extra}")
    lines.append(f"{len(reports) - n_fail}/{len(reports)} suites passed")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------------------


def _worker(item):
    name, cfg = item
    return run_suite(name, cfg)


def cmd_verify(cfg: RunConfig) -> int:
    names = sorted(set(cfg.suites)) if cfg.suites else suite_names()
    items = [(n, cfg) for n in names]
    if cfg.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.jobs, len(items))) as ex:
            reports = list(ex.map(_worker, items))
    else:
        reports = [_worker(it) for it in items]
    _emit(render_reports(reports, cfg), cfg)
    return 0 if all(r.ok for r in reports) else 1


def cmd_list(fmt: str) -> int:
    rows = [SUITES[n] for n in suite_names()]
    if fmt == "json":
        doc = [{"name": s.name, "module": s.module, "operation": s.operation,
                "description": s.description, "anchor": s.anchor} for s in rows]
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "module", "operation", "description", "anchor"])
        for s in rows:
            w.writerow([s.name, s.module, s.operation, s.description, s.anchor])
        sys.stdout.write(buf.getvalue())
    else:
        for s in rows:
            sys.stdout.write(f"{s.name:24} [{s.module}: {s.operation}]\n    {s.description}\n    anchor: {s.anchor}\n")
    return 0


def theta_poly(x) -> str:
    """An exact series in u = 1/theta with no positive u-powers, as a polynomial in theta."""
    terms = sorted(x.terms().items())
    if not terms:
        return "0"
    if x.prec is not None or terms[-1][0] > 0:
        return repr(x)
    out = []
    for e, c in terms:
        k = -e
        mono = "1" if k == 0 else ("theta" if k == 1 else f"theta^{k}")
        cs = x.field.format(c)
        out.append(mono if cs == "1" and k else (cs if k == 0 else f"{cs}*{mono}"))
    return " + ".join(out)


def compute(target: str, cfg: RunConfig) -> dict:
    """The object behind ``compute <target>`` as a JSON-ready dict."""
    from . import anderson_thakur as at
    from . import carlitz as cz
    from .fields import FieldTower

    q = cfg.q or 2
    params = {"q": q}
    if target == "exp-coeffs":
        n = 6 if cfg.n is None else cfg.n
        F = FieldTower.for_q(q).big
        d, l_ = cz.exp_log_coeffs(at.new_context(F, q), n)
        rows = []
        for k in range(n + 1):
            dc, lc = at.d_poly(F, q, k), at.l_poly(F, q, k)
            rows.append({
                "n": k,
                "d_recursion": theta_poly(d[k]), "d_closed_form": theta_poly(dc),
                "l_recursion": theta_poly(l_[k]), "l_closed_form": theta_poly(lc),
                "agree": bool(d[k] == dc and l_[k] == lc),
            })
        params["n"] = n
        return {"target": target, "params": params, "rows": rows}
    if target == "phi-table":
        n = 3 if cfg.n is None else cfg.n
        if cfg.q is None:
            table = cz.poly_phi_table(n)
            rows = [{"a": f"s^{k}", "coeffs": [str(c) for c in table[k]]} for k in range(n + 1)]
            return {"target": target, "params": {"ring": "Q(s)", "convention": "OLD", "n": n}, "rows": rows}
        F = FieldTower.for_q(q).big
        ctx = at.new_context(F, q)
        rows = []
        for k in range(n + 1):
            op = ctx.phi(ctx.vartheta**k if k else ctx.ring.one(), k + 1)
            rows.append({"a": f"theta^{k}", "coeffs": [theta_poly(c) for c in op.coeffs]})
        return {"target": target, "params": {"q": q, "convention": "NEW", "n": n}, "rows": rows}
    u = cfg.u_prec or 20
    params["u_prec"] = u
    F = FieldTower.for_q(q).big
    if target == "pi-tilde":
        return {"target": target, "params": params, "value": at.pi_tilde(F, q, u).to_json()}
    t = cfg.t_prec or 4
    params["t_prec"] = t
    if target == "omega":
        return {"target": target, "params": params, "value": at.omega(F, q, t, u).to_json()}
    res = at.l_series(FieldTower.for_q(q), 0, 1, t, u, cfg.deg_max)
    params["deg_max"] = cfg.deg_max
    return {"target": target, "params": params, "value": res["series"].to_json(),
            "block_orders": res["block_orders"], "gate_passed": res["gate_passed"],
            "achieved_prec": res["achieved_prec"]}


def render_compute(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rows = doc.get("rows")
    if rows is None:
        rows = [{"value": json.dumps(doc["value"], sort_keys=True)}]
    if fmt == "csv":
        buf = io.StringIO()
        keys = list(rows[0])
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        for r in rows:
            w.writerow([json.dumps(r[k]) if isinstance(r[k], list) else r[k] for k in keys])
        return buf.getvalue()
    lines = [f"{doc['target']} {json.dumps(doc['params'], sort_keys=True)}"]
    for r in rows:
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "list":
        return cmd_list(args.format)
    try:
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(f"carlitz: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        return cmd_verify(cfg)
    try:
        doc = compute(args.target, cfg)
    except (ValueError, ArithmeticError) as exc:
        print(f"carlitz: error: {exc}", file=sys.stderr)
        return 2
    _emit(render_compute(doc, cfg.format), cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
