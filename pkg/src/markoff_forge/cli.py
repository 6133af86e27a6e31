"""Command-line front end: `markoff-forge <command> ...`.

Exit codes: 0 result found or verified, 1 empty / absent / golden mismatch,
2 usage or input error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .ff import MAX_MODULUS, is_prime

EXIT_OK, EXIT_EMPTY, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
SCHEMA = "markoff-forge/1"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    kappa: int = 0
    n: int | None = None
    fmt: str = "text"
    seed: int = 0
    budget: float = 60.0
    threads: int | None = None

    def validate(self) -> None:
        if self.p is not None:
            if self.p <= 3 or self.p >= MAX_MODULUS or not is_prime(self.p):
                raise UsageError(f"p must be a prime > 3, got {self.p}")
        if self.n is not None and self.n < 1:
            raise UsageError(f"n must be positive, got {self.n}")
        if self.budget <= 0:
            raise UsageError("time budget must be positive")
        if self.threads is not None and self.threads < 1:
            raise UsageError("thread count must be positive")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _pairs_text(pairs) -> str:
    return "{" + ", ".join(f"({a},{b})" for a, b in pairs) + "}"


# --- commands -----------------------------------------------------------------

def cmd_graph(cfg: RunConfig, args) -> int:
    from .markoff import enumerate_graph

    g = enumerate_graph(cfg.kappa, cfg.p)
    summ = g.summary()
    summ["carlitz_check"] = summ["vertex_count"] == summ["carlitz_count"]
    sizes = summ["component_sizes"]
    print(f"p={g.p} kappa={g.kappa} vertices={g.vertex_count} components={sizes} "
          f"carlitz={'ok' if summ['carlitz_check'] else 'MISMATCH'}", file=sys.stderr)
    if cfg.fmt == "dot":
        _emit(g.to_dot(), args.out)
    elif cfg.fmt == "graphml":
        _emit(g.to_graphml(), args.out)
    elif cfg.fmt == "json":
        _emit(json.dumps({"schema": SCHEMA, **summ}), args.out)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["x", "y", "z", "n1", "n2", "n3"])
        for i in range(g.vertex_count):
            w.writerow(list(g.triple(i)) + [str(g.triple(j)) for j in g.neighbors(i)])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(f"vertices {g.vertex_count}\ncomponents {sizes}\ncarlitz {summ['carlitz_count']}", args.out)
    return EXIT_OK


def _solution(cfg: RunConfig, method: str = "auto"):
    from .subdivision import solve, solve_n1

    if cfg.n == 1 and method == "auto":
        return solve_n1(cfg.kappa, cfg.p)
    return solve(cfg.n, cfg.kappa, cfg.p, method)


def cmd_solve(cfg: RunConfig, args) -> int:
    sol = _solution(cfg, args.method)
    if sol.degenerate:
        _warn(f"degenerate parameters: {', '.join(sol.degenerate_reasons)}")
    if cfg.fmt == "json":
        _emit(json.dumps(sol.to_dict()), args.out)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "kappa", "p", "alpha", "beta"])
        for a, b in sol.dist_pairs:
            w.writerow([sol.n, sol.kappa, sol.p, a, b])
        _emit(buf.getvalue(), args.out)
    else:
        # same marker rule as the n = 2 table: only a vanishing W hides the listing
        starred = sol.n == 2 and "W = 0" in sol.degenerate_reasons
        _emit("***" if starred else _pairs_text(sol.dist_pairs), args.out)
        if starred:
            return EXIT_EMPTY
    return EXIT_OK if sol.dist_pairs else EXIT_EMPTY


def _cert(cfg: RunConfig, args):
    from .markoff import SignChange
    from .subdivision import build_cert

    if args.alpha is None:
        sol = _solution(cfg)
        if not sol.dist_pairs:
            return None
        pair = sol.dist_pairs[0]
    else:
        beta = args.beta
        if beta is None:
            matches = [pr for pr in _solution(cfg).all_pairs if pr[0] == args.alpha % cfg.p]
            if not matches:
                raise UsageError(f"alpha={args.alpha} is not part of a solution; pass --beta")
            beta = matches[0][1]
        pair = (args.alpha, beta)
    try:
        return build_cert(pair, cfg.n, cfg.kappa, cfg.p, SignChange.from_label(args.sign))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_cert(cfg: RunConfig, args) -> int:
    cert = _cert(cfg, args)
    if cert is None:
        _warn("no distinct solution pair for these parameters")
        return EXIT_EMPTY
    if cfg.fmt == "dot":
        _emit(cert.to_dot(), args.out)
    elif cfg.fmt == "json":
        _emit(cert.to_json(), args.out)
    else:
        lines = [f"K_({cert.sextuple.alpha},{cert.sextuple.beta}) n={cert.n} sign={cert.sextuple.sign.label}",
                 f"distinct={cert.distinct} proper={cert.proper} verified={cert.verified}"]
        for pr in cert.paths:
            lines.append(f"{pr.start}-{pr.end}: " + " -> ".join(f"({t})" for t in pr.vertices))
        _emit("\n".join(lines), args.out)
    return EXIT_OK if cert.verified else EXIT_EMPTY


def cmd_cycles(cfg: RunConfig, args) -> int:
    from .subdivision import extract_cycles

    cert = _cert(cfg, args)
    if cert is None or not cert.verified:
        _warn("no verified certificate for these parameters")
        return EXIT_EMPTY
    cycles = extract_cycles(cert)
    if cfg.fmt == "json":
        _emit(json.dumps({"schema": SCHEMA, "lengths": [c.length for c in cycles],
                          "cycles": [[list(t) for t in c.vertices] for c in cycles]}), args.out)
    else:
        _emit("\n".join(f"{c.length}: " + " -> ".join(f"({t})" for t in c.vertices) for c in cycles), args.out)
    return EXIT_OK


def cmd_disjoint(cfg: RunConfig, args) -> int:
    from .subdivision import disjoint_copies

    cert = _cert(cfg, args)
    if cert is None:
        _warn("no distinct solution pair for these parameters")
        return EXIT_EMPTY
    rep = disjoint_copies(cert)
    body = {"schema": SCHEMA, "disjoint": rep.disjoint, "side_conditions": rep.side_conditions,
            "overlaps": {f"{a}/{b}": v for (a, b), v in rep.overlaps.items()},
            "vertex_counts": [len(c.vertex_set) for c in rep.copies]}
    if cfg.fmt == "json":
        _emit(json.dumps(body), args.out)
    else:
        lines = [f"disjoint {rep.disjoint}", f"side conditions {rep.side_conditions}"]
        lines += [f"overlap {k} {v}" for k, v in body["overlaps"].items()]
        _emit("\n".join(lines), args.out)
    return EXIT_OK if rep.disjoint else EXIT_EMPTY


def cmd_tables(cfg: RunConfig, args) -> int:
    from .tables import check_tables

    status = EXIT_OK
    for chk in check_tables():
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            (Path(args.out) / f"table_n{chk.n}.txt").write_text(chk.rendered)
        else:
            sys.stdout.write(chk.rendered)
        if not chk.matches:
            sys.stderr.write(chk.diff())
            status = EXIT_EMPTY
    return status


def cmd_density(cfg: RunConfig, args) -> int:
    from .density import density_sweep

    rep = density_sweep(cfg.kappa, args.X, cfg.threads)
    if cfg.fmt == "json":
        _emit(rep.to_json(), args.out)
    elif cfg.fmt == "csv":
        _emit(rep.to_csv(), args.out)
    else:
        lines = [f"kappa={rep.kappa} X={rep.X} primes={rep.primes} excluded={rep.excluded} ({rep.label})"]
        lines += [f"{t:8s} {rep.counts[t]:7d} {rep.ratios[t]:.4f}" for t in ("n1", "n2A", "n2B", "special", "union")]
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_topo(cfg: RunConfig, args) -> int:
    from .markoff import enumerate_graph
    from .topo import cycle_census, find_2k33, find_custom, find_k33, read_pattern

    g = enumerate_graph(cfg.kappa, cfg.p)
    if args.kind == "census":
        c = cycle_census(g, args.max_len)
        body = {"schema": SCHEMA, "p": g.p, "kappa": g.kappa, "counts": c.counts,
                "s": c.s, "h": c.h, "girth": c.girth}
        _emit(json.dumps(body) if cfg.fmt == "json" else
              f"squares {c.s}\nhexagons {c.h}\ngirth {c.girth}\ncounts {c.counts}", args.out)
        return EXIT_OK
    if args.kind == "k33":
        res = find_k33(g, cfg.budget, args.exhaustive)
    elif args.kind == "2k33":
        res = find_2k33(g, cfg.budget)
    else:
        if not args.pattern:
            raise UsageError("--kind custom needs --pattern FILE")
        res = find_custom(g, read_pattern(Path(args.pattern).read_text()), cfg.budget)
    if res.cert is not None:
        _emit(res.cert.to_json() if cfg.fmt == "json" else
              f"found {res.cert.kind} ({res.cert.source}) in {res.elapsed:.2f}s", args.out)
        return EXIT_OK
    status = "proven absent" if res.proven_absent else "not found within budget"
    if cfg.fmt == "json":
        _emit(json.dumps({"schema": SCHEMA, "kind": args.kind, "p": g.p, "kappa": g.kappa,
                          "found": False, "status": status, "note": res.note}), args.out)
    else:
        _emit(f"{status} ({res.note})", args.out)
    return EXIT_EMPTY


def cmd_identities(cfg: RunConfig, args) -> int:
    from .chebyshev import identity_suite
    from .elimination import CONSTRUCTS, poly_identity_check

    rep = identity_suite(m_max=args.m_max, seed=cfg.seed)
    lines = [f"chebyshev: {rep.checks} checks, {len(rep.failures)} failures"]
    ok = rep.ok
    for construct in CONSTRUCTS:
        r = poly_identity_check(4, construct, seed=cfg.seed)
        ok &= r.ok
        lines.append(f"{construct}: {r.samples} samples, {len(r.mismatches)} mismatches")
    _emit("\n".join(lines), args.out)
    if not ok:
        return EXIT_INTERNAL
    return EXIT_OK


COMMANDS = {
    "graph": cmd_graph, "solve": cmd_solve, "cert": cmd_cert, "cycles": cmd_cycles,
    "disjoint": cmd_disjoint, "tables": cmd_tables, "density": cmd_density,
    "topo": cmd_topo, "identities": cmd_identities,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="markoff-forge", description="Markoff-type graphs over F_p.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", default="text",
                        choices=["text", "json", "csv", "dot", "graphml"])
    common.add_argument("--out", help="write the main output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None, help="worker count (default: MF_THREADS or 1)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, p=True, n=False, help_text=""):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if p:
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--kappa", type=int, default=0)
        if n:
            sp.add_argument("--n", type=int, required=True)
        return sp

    add("graph", help_text="build G_k(p) and export it")
    sp = add("solve", n=True, help_text="list T^dist_{n,k}(p)")
    sp.add_argument("--method", default="auto", choices=["auto", "direct", "elimination"])
    for name in ("cert", "cycles", "disjoint"):
        sp = add(name, n=True, help_text=f"{name} for a sextuple K_(alpha,beta)")
        sp.add_argument("--alpha", type=int)
        sp.add_argument("--beta", type=int)
        sp.add_argument("--sign", default="+++", choices=["+++", "+--", "-+-", "--+"])
    add("tables", p=False, help_text="regenerate the n = 2, 3 tables and diff against golden files")
    sp = add("density", p=False, help_text="prime sweep of the construction conditions")
    sp.add_argument("--kappa", type=int, default=0)
    sp.add_argument("--X", type=int, required=True)
    sp = add("topo", help_text="cycle census and K33 / 2K33 searches")
    sp.add_argument("--kind", default="k33", choices=["census", "k33", "2k33", "custom"])
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--budget", type=float, default=60.0, help="wall-clock seconds")
    sp.add_argument("--pattern", help="edge-list file for --kind custom")
    sp.add_argument("--max-len", type=int, default=6)
    sp = add("identities", p=False, help_text="Chebyshev and elimination identity suites")
    sp.add_argument("--m-max", type=int, default=12)
    return ap


def main(argv=None) -> int:
    from .markoff import CountMismatch
    from .subdivision import CertInconsistency

    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = RunConfig(args.command, getattr(args, "p", None), getattr(args, "kappa", 0),
                    getattr(args, "n", None), args.fmt, args.seed,
                    getattr(args, "budget", 60.0), args.threads)
    try:
        cfg.validate()
        if args.command == "density" and args.X < 5:
            raise UsageError("--X must be at least 5")
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertInconsistency, CountMismatch) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
