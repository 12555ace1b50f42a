"""Command-line surface for constructions, search, synthesis, and checks.

Subcommands: construct, search, synth, verify.  Every run is
deterministic given its inputs and seed; the effective configuration is
echoed into each report header.  Exit codes: 0 success, 1 verification
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import circuits, classical, gf2, stab, unioncode
from .errors import UnionStabError


def _parse_config(path: str) -> dict:
    """Reads a config file of "key = value" lines."""
    out = {}
    for ln in Path(path).read_text().splitlines():
        ln = ln.split("#")[0].strip()
        if not ln:
            continue
        if "=" not in ln:
            raise UnionStabError(f"bad config line: {ln!r}")
        key, val = (part.strip() for part in ln.split("=", 1))
        out[key.replace("-", "_")] = val
    return out


class Report:
    """Accumulates key/value lines; renders as text or csv."""

    def __init__(self, fmt: str, header: dict):
        self.fmt = fmt
        self.rows = [("config." + k, str(v)) for k, v in sorted(header.items())]

    def add(self, key: str, value) -> None:
        self.rows.append((key, str(value)))

    def render(self) -> str:
        if self.fmt == "csv":
            return "\n".join(f"{k},{v}" for k, v in self.rows) + "\n"
        return "\n".join(f"{k}: {v}" for k, v in self.rows) + "\n"


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _coset_report(code: classical.CosetCode) -> str:
    prov = code.distance_provenance or "unknown"
    return (f"({code.n}, 2^{code.log2_size()} words, "
            f"{code.claimed_distance} [{prov}])")


def _load_stabilizer(path: str) -> stab.StabilizerCode:
    return stab.parse_stabilizer(Path(path).read_text())


def _load_coset(path: str) -> classical.CosetCode:
    return classical.parse_coset_code(Path(path).read_text())


def cmd_construct(args, cfg: dict, report: Report) -> int:
    kind = args.kind
    params = args.params
    if kind == "rm":
        r, m = int(params[0]), int(params[1])
        code = classical.reed_muller(r, m)
        report.add("code", f"[{code.n}, {code.k}, {code.known_distance} "
                           f"[{code.distance_provenance}]]")
        _write(args.out, gf2.format_matrix(code.generator))
    elif kind == "nr":
        code = classical.nordstrom_robinson()
        report.add("code", _coset_report(code))
        _write(args.out, classical.format_coset_code(code))
    elif kind in ("preparata", "goethals"):
        m = int(params[0])
        if kind == "preparata":
            code = classical.preparata_like(m, route=args.route)
        else:
            code = classical.goethals_binary(m)
        report.add("code", _coset_report(code))
        _write(args.out, classical.format_coset_code(code))
    elif kind == "css":
        c1, c2 = _load_linear(params[0]), _load_linear(params[1])
        code = stab.css(c1, c2)
        report.add("code", f"[[{code.n}, {code.k}]]")
        _write(args.out, stab.format_stabilizer(code))
    elif kind == "enlarge":
        c, cp = _load_linear(params[0]), _load_linear(params[1])
        code = stab.enlarge_css(c, cp)
        report.add("code", f"[[{code.n}, {code.k}]]")
        _write(args.out, stab.format_stabilizer(code))
    elif kind == "css-union":
        cc1, cc2 = _load_coset(params[0]), _load_coset(params[1])
        d = min(x for x in (cc1.claimed_distance, cc2.claimed_distance)
                if x is not None)
        code = unioncode.css_like_union(
            cc1.base, cc2.base, cc1.translations, cc2.translations, d=d)
        report.add("code", _union_report(code))
        if len(code.translations) <= 1024 and args.out:
            _write(args.out, unioncode.format_union_code(code))
    elif kind == "family":
        code = unioncode.family_build(params[0], int(params[1]))
        report.add("code", _union_report(code))
    else:
        raise UnionStabError(f"unknown construct kind {kind!r}")
    return 0


def _load_linear(path: str) -> classical.LinearCode:
    return classical.linear_code(gf2.parse_matrix(Path(path).read_text()))


def _union_report(code: unioncode.UnionStabilizerCode) -> str:
    p = code.params
    dim = f"2^{p.log2_dim:g}"
    prov = p.provenance.get("d", "none")
    return f"(({p.n}, {dim}, {p.d} [{prov}]))"


def cmd_search(args, cfg: dict, report: Report) -> int:
    base = _load_stabilizer(args.stabilizer)
    graph = unioncode.build_search_graph(base, args.d, cap=args.cap)
    report.add("graph.vertices", graph.num_vertices)
    report.add("graph.edges", graph.num_edges)
    result = unioncode.max_clique(graph, mode=args.mode, seed=args.seed,
                                  budget=args.budget)
    report.add("clique.size", result.size)
    report.add("clique.optimal", result.optimal)
    report.add("clique.vertices", " ".join(result.vertices))
    code = unioncode.union_from_clique(graph, result)
    report.add("code", _union_report(code))
    if args.out:
        _write(args.out, unioncode.format_union_code(code))
    return 0


def cmd_synth(args, cfg: dict, report: Report) -> int:
    code = unioncode.parse_union_code(Path(args.code).read_text())
    q1 = circuits.synth_q1(code.base)
    labels = circuits.canonicalize_translations(code, q1)
    report.add("labels", " ".join(labels))
    if args.any_order:
        qc, order = circuits.synth_qc_any_order(labels,
                                                max_gates=args.max_gates)
        code = unioncode.union_code(
            code.base, [code.translations[i] for i in order])
        report.add("qc.order", " ".join(map(str, order)))
    else:
        qc = circuits.synth_qc(labels, max_gates=args.max_gates)
    report.add("q1.gates", len(q1))
    report.add("qc.gates", len(qc))
    if args.out:
        _write(args.out + ".q1", circuits.format_circuit(q1))
        _write(args.out + ".qc", circuits.format_circuit(qc))
    states = circuits.code_basis(code)
    d = code.params.d or 2
    kl = circuits.kl_verify(states, d)
    report.add("kl.ok", kl.ok)
    report.add("kl.worst", f"{kl.worst_deviation:.2e}")
    enc = circuits.full_encoder_check(code, q1, qc)
    report.add("encoder.ok", enc.ok)
    return 0 if (kl.ok and enc.ok) else 1


def cmd_verify(args, cfg: dict, report: Report) -> int:
    text = Path(args.code).read_text()
    code = unioncode.parse_union_code(text)
    labels = {unioncode._translation_syndrome(code.base, t)
              for t in code.translations}
    distinct = len(labels) == len(code.translations)
    report.add("cosets.distinct", distinct)
    report.add("dimension", f"2^{code.params.log2_dim:g}")
    ok = distinct
    if args.level == "full":
        bound = unioncode.union_distance_bound(code, cap=args.cap)
        report.add("distance.bound", bound.d)
        report.add("purity", bound.purity)
        exact = unioncode.true_distance(code, cap=args.cap)
        report.add("distance.exact", exact)
        if code.params.d is not None:
            ok = ok and exact >= code.params.d
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="unionstab",
        description="Union stabilizer code constructions and verification")
    p.add_argument("--config", help="file of key = value option defaults")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=gf2.DEFAULT_CAP,
                        help="enumeration cap (words)")
    common.add_argument("--budget", type=int, default=10**7,
                        help="search node budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=("text", "csv"), default="text")
    common.add_argument("--out", help="output file or prefix")

    c = sub.add_parser("construct", parents=[common])
    c.add_argument("kind", choices=("rm", "nr", "preparata", "goethals",
                                    "css", "enlarge", "css-union", "family"))
    c.add_argument("params", nargs="*")
    c.add_argument("--route", choices=("direct", "gray"), default="direct")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", parents=[common])
    s.add_argument("stabilizer", help="stabilizer code file")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    s.set_defaults(func=cmd_search)

    y = sub.add_parser("synth", parents=[common])
    y.add_argument("code", help="union code file")
    y.add_argument("--max-gates", type=int, default=10)
    y.add_argument("--any-order", action="store_true",
                   help="allow any label-to-index bijection")
    y.set_defaults(func=cmd_synth)

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("code", help="union code file")
    v.add_argument("--level", choices=("structural", "full"),
                   default="structural")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _parse_config(args.config) if args.config else {}
        for key, val in cfg.items():
            if hasattr(args, key) and f"--{key.replace('_', '-')}" not in (
                    argv or sys.argv):
                cur = getattr(args, key)
                setattr(args, key,
                        type(cur)(val) if cur is not None else val)
        header = {"command": args.command, "cap": args.cap,
                  "budget": args.budget, "seed": args.seed,
                  "workers": args.workers}
        report = Report(args.format, header)
        rc = args.func(args, cfg, report)
        sys.stdout.write(report.render())
        return rc
    except UnionStabError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except (OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
