"""Command-line front end.

Subcommands::

    qgordon verify --theorem ag --k 3 --a 2 [--order 40] [--json]
    qgordon count --family B --k 2 --a 2 --n 10 [--json]
    qgordon enumerate-paths --k 3 --a 2 [--n 20] [--format compact]
    qgordon bailey-chain --k 5 --a 2 [--nmax 8] [--order 40] [--trace]
    qgordon sweep [--kmax 4] [--order 40] [--json]

Exit codes: 0 when every requested check passes, 1 when a check ran
and failed, 2 for a bad invocation.  Diagnostics go to stderr, results
to stdout; ``--json`` switches the result to a single JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .bailey import build_chain, check_pair, closed_form_alpha
from .identities import IdentitySpec, VerificationReport, verify
from .lattice_paths import (
    count_S,
    enumerate_S_paths,
    path_to_compact,
    path_to_json_obj,
    path_to_svg,
)
from .partitions import GordonParams, count_A, count_B, count_W, count_Wbar

__all__ = ["run", "sweep", "main"]

_THEOREM_NAMES = ("ag", "w", "wbar", "main", "paths")
_FAMILIES = ("B", "A", "W", "Wbar", "S")


def _resolve_tag(name: str, gp: GordonParams) -> str:
    """Map a CLI theorem name to the precise tag for (k, a)."""
    k, a = gp.k, gp.a
    if name == "ag":
        return "AG"
    if name == "w":
        return "W_same" if (k - a) % 2 == 0 else "W_diff"
    if name == "wbar":
        if k % 2 == 1 and a % 2 == 0:
            return "Wbar_odd_even"
        if k % 2 == 0 and a % 2 == 1:
            return "Wbar_even_odd"
        raise ValueError(
            f"the odd-multiplicity family needs a even for odd k and a odd for even k, got (k, a) = ({k}, {a})"
        )
    if name == "main":
        return "Main"
    return "Paths"


def _emit(obj, as_json: bool, lines: List[str]) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- subcommands


def _cmd_verify(args) -> int:
    gp = GordonParams(args.k, args.a)
    tag = _resolve_tag(args.theorem, gp)
    order = args.order if args.order is not None else (20 if tag == "Paths" else 40)
    report = verify(IdentitySpec(tag, gp, order))
    if report.equal:
        line = f"PASS {tag} (k={gp.k}, a={gp.a}): both sides agree below q^{order}"
    else:
        line = (
            f"FAIL {tag} (k={gp.k}, a={gp.a}): first discrepancy at "
            f"q^{report.first_discrepancy}"
        )
    _emit(report.to_json_obj(), args.json, [line])
    return 0 if report.equal else 1


def _cmd_count(args) -> int:
    gp = GordonParams(args.k, args.a)
    fn = {
        "B": count_B,
        "A": count_A,
        "W": count_W,
        "Wbar": count_Wbar,
        "S": count_S,
    }[args.family]
    counts = [fn(n, gp) for n in range(args.n + 1)]
    obj = {"family": args.family, "k": gp.k, "a": gp.a, "counts": counts}
    _emit(obj, args.json, [f"{n} {c}" for n, c in enumerate(counts)])
    return 0


def _cmd_enumerate_paths(args) -> int:
    gp = GordonParams(args.k, args.a)
    paths = enumerate_S_paths(args.n, gp)
    if args.format == "json":
        print(json.dumps([path_to_json_obj(p) for p in paths], indent=2))
    elif args.format == "svg":
        for p in paths:
            print(path_to_svg(p))
    else:
        for p in paths:
            print(path_to_compact(p))
    return 0


def _cmd_bailey_chain(args) -> int:
    gp = GordonParams(args.k, args.a)
    chain = build_chain(gp, args.nmax, args.order)
    steps = []
    all_ok = True
    for label, bp in chain:
        ok = check_pair(bp)
        all_ok &= ok
        steps.append({"label": label, "relation_ok": ok})
    final = chain[-1][1]
    closed_ok = all(
        final.alpha[n] == closed_form_alpha(gp, n, final.order)
        for n in range(args.nmax + 1)
    )
    all_ok &= closed_ok
    lines = [
        f"{s['label']:<12} relation {'ok' if s['relation_ok'] else 'BROKEN'}"
        for s in steps
    ]
    if args.trace and not args.json:
        lines = []
        for label, bp in chain:
            lines.append(f"step {label}")
            for n in range(min(bp.n_max, 2) + 1):
                lines.append(f"  alpha_{n} = {bp.alpha[n]}")
                lines.append(f"  beta_{n}  = {bp.beta[n]}")
    lines.append(
        f"endpoint alpha matches closed form for n <= {args.nmax}: "
        f"{'yes' if closed_ok else 'NO'}"
    )
    obj = {
        "k": gp.k,
        "a": gp.a,
        "n_max": args.nmax,
        "order": args.order,
        "steps": steps,
        "closed_form_ok": closed_ok,
    }
    _emit(obj, args.json, lines)
    return 0 if all_ok else 1


def sweep(kmax: int = 4, order: int = 40) -> List[VerificationReport]:
    """Verify every theorem tag over the (k, a) grid up to kmax.

    Path counting is excluded (it has its own theorem name and a far
    smaller practical order).
    """
    if kmax < 2:
        raise ValueError(f"kmax must be >= 2, got {kmax}")
    specs = []
    for k in range(2, kmax + 1):
        for a in range(1, k + 1):
            gp = GordonParams(k, a)
            specs.append(IdentitySpec("AG", gp, order))
            specs.append(IdentitySpec("W_same" if (k - a) % 2 == 0 else "W_diff", gp, order))
            if k % 2 == 1 and a % 2 == 0:
                specs.append(IdentitySpec("Wbar_odd_even", gp, order))
            elif k % 2 == 0 and a % 2 == 1:
                specs.append(IdentitySpec("Wbar_even_odd", gp, order))
            if (k - a) % 2 == 1:
                specs.append(IdentitySpec("Main", gp, order))
    return [verify(s) for s in specs]


def _cmd_sweep(args) -> int:
    reports = sweep(args.kmax, args.order)
    lines = []
    for r in reports:
        tag, gp = r.spec.theorem, r.spec.gp
        if r.equal:
            lines.append(f"PASS {tag} (k={gp.k}, a={gp.a})")
        else:
            lines.append(
                f"FAIL {tag} (k={gp.k}, a={gp.a}): first discrepancy at q^{r.first_discrepancy}"
            )
    failed = sum(1 for r in reports if not r.equal)
    lines.append(
        f"{len(reports)} checks below q^{args.order}: "
        + ("all passed" if not failed else f"{failed} FAILED")
    )
    _emit([r.to_json_obj() for r in reports], args.json, lines)
    return 0 if not failed else 1


# ---------------------------------------------------------------- entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgordon",
        description="Verify Gordon-style partition identities with exact q-series arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ka(p):
        p.add_argument("--k", type=int, required=True, help="modulus parameter k")
        p.add_argument("--a", type=int, required=True, help="residue parameter a, 1 <= a <= k")

    p = sub.add_parser("verify", help="compare both sides of one identity")
    p.add_argument("--theorem", choices=_THEOREM_NAMES, required=True)
    add_ka(p)
    p.add_argument("--order", type=int, default=None,
                   help="truncation order (default 40, or 20 for paths)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="print counts of one partition or path family")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    add_ka(p)
    p.add_argument("--n", type=int, required=True, help="count everything up to this size")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate-paths", help="list admissible paths up to a major index")
    add_ka(p)
    p.add_argument("--n", type=int, default=20, help="major index bound (default 20)")
    p.add_argument("--format", choices=("compact", "json", "svg"), default="compact")
    p.set_defaults(func=_cmd_enumerate_paths)

    p = sub.add_parser("bailey-chain", help="build the chain for (k, a) and check every link")
    add_ka(p)
    p.add_argument("--nmax", type=int, default=8, help="pair length (default 8)")
    p.add_argument("--order", type=int, default=40, help="final truncation order (default 40)")
    p.add_argument("--trace", action="store_true", help="print leading alpha and beta entries per step")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bailey_chain)

    p = sub.add_parser("sweep", help="verify the whole family over a (k, a) grid")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
