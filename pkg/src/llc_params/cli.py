"""Deterministic command line front end.

Subcommands mirror the library: ``component``, ``enumerate``, ``verify``,
``block``, ``match``, ``summary``; the top-level ``--grid`` flag runs the
full grid sweep.  Reports go to standard output as either JSON (sorted keys,
schema version stamped, byte-identical across runs) or a text rendering in
component notation such as ``[G_m/G_m] × μ_5``.

Exit codes: 0 success, 2 validation failure, 1 internal error.  Failures are
always emitted as a machine-readable error object regardless of the chosen
output mode.  The environment variable ``LLC_PARAMS_MAX_MODULUS`` (default
10**7) caps the exponent modulus that ``enumerate`` will scan.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from . import __version__
from .blocks import (
    BlockDescriptor,
    gln_block_descriptor,
    match_sides,
    torus_block_descriptor,
)
from .cocycles import ComponentDescriptor, FrobTorus, cocycle_space, component_descriptor
from .diag import DiagGroup
from .errors import InvalidArgument, InvalidRank, LlcError
from .glparams import (
    COEFFS,
    TrselpGL,
    ZBAR,
    _scan_canonical,
    count_params,
    matrices,
    nilpotent_support_fixed_positions,
    verify_cocycle,
)
from .lattice import IntMatrix
from .rootdata import RootDatum, WeylTwist, coxeter_twist, identity_twist, preset, weyl_twist
from .sweep import run_grid
from .blocks import categorical_summary

SCHEMA_VERSION = 1
MAX_MODULUS_ENV = "LLC_PARAMS_MAX_MODULUS"
DEFAULT_MAX_MODULUS = 10**7

MATH_COMMANDS = ("component", "enumerate", "verify", "block", "match", "summary")


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as structured validation errors."""

    def error(self, message):
        raise InvalidArgument(message, code="usage-error", hint=self.format_usage().strip())


def _max_modulus() -> int:
    raw = os.environ.get(MAX_MODULUS_ENV)
    if raw is None:
        return DEFAULT_MAX_MODULUS
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidArgument(
            f"{MAX_MODULUS_ENV} must be an integer, got {raw!r}",
            code="env-invalid",
        )
    if cap < 1:
        raise InvalidArgument(
            f"{MAX_MODULUS_ENV} must be positive, got {cap}",
            code="env-invalid",
        )
    return cap


def build_parser() -> _Parser:
    parser = _Parser(prog="llc-params", description=__doc__, add_help=True)
    parser.add_argument("--version", action="version", version=f"llc-params {__version__}")
    parser.add_argument(
        "--grid",
        action="store_true",
        help="run the grid sweep (all computable grid claims) and emit a pass/fail table",
    )
    parser.add_argument(
        "--output",
        choices=("text", "json"),
        default="text",
        help="report format (default: text)",
    )

    sub = parser.add_subparsers(dest="command")

    def add_common(p, *, weyl=False, coeff=False, ab=False, paging=False):
        p.add_argument("--group", choices=("GL", "SL", "PGL"), default="GL")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--ell", type=int, required=True)
        if weyl:
            p.add_argument(
                "--weyl",
                default="coxeter",
                help="twist: 'coxeter', 'identity', or a JSON matrix like [[0,1],[1,0]]",
            )
        if coeff:
            p.add_argument("--coeff", choices=COEFFS, default=ZBAR)
        if ab:
            p.add_argument("--a", type=int, required=True)
            p.add_argument("--b", type=int, default=0)
        if paging:
            p.add_argument("--limit", type=int, default=100)
            p.add_argument("--offset", type=int, default=0)
        # SUPPRESS: a subparser default must not clobber a top-level --output
        p.add_argument("--output", choices=("text", "json"), default=argparse.SUPPRESS)

    add_common(sub.add_parser("component", help="structure of one parameter component"), weyl=True)
    add_common(
        sub.add_parser("enumerate", help="list regular parameters up to equivalence"),
        coeff=True,
        paging=True,
    )
    add_common(
        sub.add_parser("verify", help="check one parameter: regularity, cocycle, support"),
        coeff=True,
        ab=True,
    )
    add_common(sub.add_parser("block", help="block-side invariants"), weyl=True)
    add_common(sub.add_parser("match", help="compare component and block sides"), weyl=True)
    add_common(sub.add_parser("summary", help="full GL_n comparison summary"))
    sub.add_parser("grid", help="run the grid sweep").add_argument(
        "--output", choices=("text", "json"), default=argparse.SUPPRESS
    )
    return parser


# ---------------------------------------------------------------------------
# rendering


def _render_diag(d: DiagGroup) -> str:
    g = d.char_group
    parts = []
    if g.free_rank == 1:
        parts.append("G_m")
    elif g.free_rank > 1:
        parts.append(f"G_m^{g.free_rank}")
    parts.extend(f"μ_{f}" for f in g.invariant_factors)
    return " × ".join(parts) if parts else "1"


def _torus_symbol(rank: int) -> str:
    if rank == 0:
        return "*"
    if rank == 1:
        return "G_m"
    return f"G_m^{rank}"


def component_notation(desc: ComponentDescriptor) -> str:
    """The component in quotient notation, e.g. '[G_m/G_m] × μ_5'."""
    stab = _render_diag(desc.stabilizer)
    if desc.product_form == "point_mod_S_psi":
        left = f"[*/{stab}]"
    else:
        left = f"[{_torus_symbol(desc.orbit_torus_rank)}/{stab}]"
    return f"{left} × {_render_diag(desc.mu)}"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# command implementations


def _build_datum(group: str, n: int) -> RootDatum:
    if group in ("SL", "PGL") and n < 2:
        raise InvalidRank(f"{group} needs n >= 2, got {n}")
    if n < 1:
        raise InvalidRank(f"n must be positive, got {n}")
    return preset(group, n)


def _build_twist(rd: RootDatum, choice: str) -> WeylTwist:
    if choice == "coxeter":
        return coxeter_twist(rd)
    if choice == "identity":
        return identity_twist(rd)
    try:
        data = json.loads(choice)
    except json.JSONDecodeError:
        raise InvalidArgument(
            f"--weyl must be 'coxeter', 'identity', or a JSON matrix; got {choice!r}",
            code="weyl-invalid",
        )
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InvalidArgument("--weyl matrix must be a list of rows", code="weyl-invalid")
    return weyl_twist(rd, IntMatrix(data))


def _input_echo(args, fields) -> dict:
    return {name: getattr(args, name) for name in fields}


def _cmd_component(args) -> tuple[dict, str]:
    rd = _build_datum(args.group, args.n)
    twist = _build_twist(rd, args.weyl)
    desc = component_descriptor(rd, twist, args.q, args.ell)
    space = cocycle_space(FrobTorus(rd.rank, twist, args.q, args.ell))
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "component",
        "input": _input_echo(args, ("group", "n", "q", "ell", "weyl")),
        "datum": rd.to_json(),
        "notation": component_notation(desc),
        "cocycleSpace": space.to_json(),
        **desc.to_json(),
    }
    lines = [
        f"component [{rd.name}, q={args.q}, ell={args.ell}, weyl={args.weyl}]",
        f"  notation:         {component_notation(desc)}",
        f"  fixed scheme:     {_render_diag(desc.fixed_scheme)}",
        f"  mu invariant:     {_render_diag(desc.mu)}",
        f"  stabilizer:       {_render_diag(desc.stabilizer)}",
        f"  orbit torus rank: {desc.orbit_torus_rank}",
        f"  elliptic:         {_yesno(desc.elliptic)}",
        f"  product form:     {desc.product_form}",
        f"  cocycle space:    {space.component_count} components, each "
        f"{_render_diag(space.component_shape)}",
    ]
    return report, "\n".join(lines)


def _require_gl(args, what: str) -> None:
    if args.group != "GL":
        raise InvalidArgument(
            f"{what} is defined for GL only, got group {args.group}",
            code="unsupported-group",
            hint="parameter enumeration lives on the GL side",
        )


def _cmd_enumerate(args) -> tuple[dict, str]:
    _require_gl(args, "enumeration")
    if args.limit < 0 or args.offset < 0:
        raise InvalidArgument("--limit and --offset must be nonnegative", code="paging-invalid")
    probe = TrselpGL(args.n, args.q, args.ell, args.coeff, 0, 0)
    cap = _max_modulus()
    if probe.modulus > cap:
        raise InvalidArgument(
            f"exponent modulus {probe.modulus} exceeds the cap {cap}",
            code="modulus-cap-exceeded",
            hint=f"raise {MAX_MODULUS_ENV} to scan larger moduli",
        )
    count = count_params(args.n, args.q, args.ell, args.coeff)
    page = [
        TrselpGL(args.n, args.q, args.ell, args.coeff, a, 0)
        for a in itertools.islice(
            _scan_canonical(args.n, args.q, probe.modulus), args.offset, args.offset + args.limit
        )
    ]
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "enumerate",
        "input": _input_echo(args, ("group", "n", "q", "ell", "coeff")),
        "modulus": probe.modulus,
        "count": count,
        "offset": args.offset,
        "limit": args.limit,
        "parameters": [phi.to_json() for phi in page],
    }
    lines = [
        f"enumerate [GL_{args.n}, q={args.q}, ell={args.ell}, coeff={args.coeff}]",
        f"  modulus: {probe.modulus}",
        f"  count:   {count}",
        f"  showing {len(page)} at offset {args.offset}",
    ]
    lines.extend(f"  a={phi.a} b={phi.b}" for phi in page)
    return report, "\n".join(lines)


def _cmd_verify(args) -> tuple[dict, str]:
    _require_gl(args, "verification")
    phi = TrselpGL(args.n, args.q, args.ell, args.coeff, args.a, args.b)
    m = matrices(phi)
    ok = verify_cocycle(m, args.q)
    support = nilpotent_support_fixed_positions(phi)
    diagonal = support == [(i, i) for i in range(1, args.n + 1)]
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "verify",
        "input": _input_echo(args, ("group", "n", "q", "ell", "coeff", "a", "b")),
        "parameter": phi.to_json(),
        "regular": phi.is_regular,
        "cocycleHolds": ok,
        "matrices": m.to_json(),
        "nilpotentSupport": {
            "positions": [list(p) for p in support],
            "diagonalOnly": diagonal,
        },
    }
    lines = [
        f"verify [GL_{args.n}, q={args.q}, ell={args.ell}, a={phi.a}, b={phi.b}]",
        f"  regular:          {_yesno(phi.is_regular)}",
        f"  cocycle holds:    {_yesno(ok)}",
        f"  support diagonal: {_yesno(diagonal)} ({len(support)} positions)",
    ]
    return report, "\n".join(lines)


def _block_for(args, rd: RootDatum, twist: WeylTwist) -> BlockDescriptor:
    if args.group == "GL":
        # the GL block is pinned to the elliptic (Coxeter-torus) block
        return gln_block_descriptor(args.n, args.q, args.ell)
    return torus_block_descriptor(
        rd.rank,
        WeylTwist(twist.matrix.transpose()),
        args.q,
        args.ell,
        free_rank=0,
        coxeter_number=args.n,
    )


def _cmd_block(args) -> tuple[dict, str]:
    rd = _build_datum(args.group, args.n)
    twist = _build_twist(rd, args.weyl)
    block = _block_for(args, rd, twist)
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "block",
        "input": _input_echo(args, ("group", "n", "q", "ell", "weyl")),
        "block": block.to_json(),
    }
    lines = [
        f"block [{args.group}_{args.n}, q={args.q}, ell={args.ell}]",
        f"  torsion:            {block.torsion.describe()}",
        f"  free rank:          {block.free_rank}",
        f"  finite torus order: {block.finite_torus_order}",
        f"  k:                  {block.k}",
    ]
    for flag in block.applicability:
        lines.append(f"  {flag.code}: {_yesno(flag.holds)} ({flag.detail})")
    return report, "\n".join(lines)


def _cmd_match(args) -> tuple[dict, str]:
    rd = _build_datum(args.group, args.n)
    twist = _build_twist(rd, args.weyl)
    desc = component_descriptor(rd, twist, args.q, args.ell)
    block = _block_for(args, rd, twist)
    report_obj = match_sides(desc, block)
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "match",
        "input": _input_echo(args, ("group", "n", "q", "ell", "weyl")),
        "component": desc.to_json(),
        "block": block.to_json(),
        "match": report_obj.to_json(),
    }
    lines = [
        f"match [{args.group}_{args.n}, q={args.q}, ell={args.ell}, weyl={args.weyl}]",
        f"  component:          {component_notation(desc)}",
        f"  mu character group: {report_obj.mu_char_group.describe()}",
        f"  block torsion:      {report_obj.block_torsion.describe()}",
        f"  isomorphic:         {_yesno(report_obj.isomorphic)}",
        f"  free ranks agree:   {_yesno(report_obj.free_ranks_agree)} "
        f"({desc.orbit_torus_rank} vs {block.free_rank})",
        f"  grading index:      {report_obj.grading_index}",
        f"  context mismatch:   {_yesno(report_obj.context_mismatch)}",
    ]
    for flag in report_obj.applicability_flags:
        lines.append(f"  {flag.code}: {_yesno(flag.holds)} ({flag.detail})")
    return report, "\n".join(lines)


def _cmd_summary(args) -> tuple[dict, str]:
    _require_gl(args, "the comparison summary")
    summary = categorical_summary(args.n, args.q, args.ell)
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "summary",
        "input": _input_echo(args, ("group", "n", "q", "ell")),
        "summary": summary.to_json(),
    }
    verdict = summary.match.isomorphic and summary.match.free_ranks_agree
    lines = [
        f"summary [GL_{args.n}, q={args.q}, ell={args.ell}]",
        f"  grading index: {summary.grading_index}",
        f"  cell: free rank {summary.cell_free_rank}, torsion {summary.cell_torsion.describe()}",
        f"  component:     {component_notation(summary.component)}",
        f"  sides match:   {_yesno(verdict)}",
    ]
    return report, "\n".join(lines)


def _cmd_grid(args) -> tuple[dict, str, bool]:
    checks = run_grid()
    all_pass = all(c.passed for c in checks)
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": "grid",
        "checks": [c.to_json() for c in checks],
        "allPass": all_pass,
    }
    width = max(len(c.check_id) for c in checks)
    lines = ["grid sweep"]
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"  {status}  {c.check_id.ljust(width)}  {c.detail}")
    lines.append(f"  {'all checks pass' if all_pass else 'SOME CHECKS FAILED'}")
    return report, "\n".join(lines), all_pass


def _emit(args, report: dict, text: str, stream) -> None:
    if args.output == "json":
        stream.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write(text + "\n")


def run(argv: list[str] | None = None, stream=None) -> int:
    """Parse argv, execute, write the report; return the process exit code."""
    if argv is None:
        argv = sys.argv[1:]
    if stream is None:
        stream = sys.stdout
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if args.grid and args.command is None:
            args.command = "grid"
        if args.command is None:
            raise InvalidArgument(
                "no command given",
                code="usage-error",
                hint=f"choose one of: {', '.join(MATH_COMMANDS)} (or --grid)",
            )
        if args.command == "grid":
            report, text, all_pass = _cmd_grid(args)
            _emit(args, report, text, stream)
            return 0 if all_pass else 1
        handler = {
            "component": _cmd_component,
            "enumerate": _cmd_enumerate,
            "verify": _cmd_verify,
            "block": _cmd_block,
            "match": _cmd_match,
            "summary": _cmd_summary,
        }[args.command]
        report, text = handler(args)
        _emit(args, report, text, stream)
        return 0
    except SystemExit as err:  # argparse --help / --version already printed
        code = err.code
        return code if isinstance(code, int) else 0
    except LlcError as err:
        payload = {"schemaVersion": SCHEMA_VERSION, "error": err.to_json()}
        stream.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        return err.exit_code
    except Exception as err:  # defensive: never a traceback on the report stream
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "error": {
                "code": "internal-error",
                "message": f"{type(err).__name__}: {err}",
                "hint": None,
            },
        }
        stream.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        return 1


def main() -> None:
    sys.exit(run())
