"""Command line front end for the package.

Each subcommand reads sequence JSON files ({"n_min": int, "values": [...]}),
runs one analysis, and emits a JSON report on stdout or to --output.  The
two plot-oriented commands (trace, genfun line-scan) emit CSV instead.
Output is deterministic: fixed field order, floats printed as their
shortest round-trip decimal.

Exit codes: 0 on success, 2 on invalid input (including unknown flags and
malformed JSON), 3 on numeric failure or an unconverged solve.  The parsed
argparse namespace is the run configuration; every numeric default mirrors
the corresponding module default.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from pwcis import combmap, genfun, muckenhoupt, paleywiener, sequences
from pwcis.errors import (
    EXIT_NUMERIC,
    InvalidInput,
    PwcisError,
    exit_code_for,
)

# A power-law weight at the A2 boundary grows only logarithmically, so
# growth is judged over two decades of window length, not one doubling.
_GROWTH_FACTOR = 1.5
_GROWTH_SCALE = 100


class _Parser(argparse.ArgumentParser):
    """Parser whose errors surface as InvalidInput (exit 2, one line)."""

    def error(self, message):
        raise InvalidInput(message)


def parse_complex(text: str) -> complex:
    """Parse the scalar syntax a+bi, e.g. "0.5+0.25i" or "-2i" or "3"."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise InvalidInput(f"cannot parse {text!r} as a complex scalar a+bi")


# ---------------------------------------------------------------------------
# file I/O


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON in {path}: {exc}")


def _sequence_payload(path: str) -> tuple[int, list]:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "n_min" not in obj or "values" not in obj:
        raise InvalidInput(f"{path}: expected an object with n_min and values")
    n_min = obj["n_min"]
    if isinstance(n_min, bool) or not isinstance(n_min, int):
        raise InvalidInput(f"{path}: n_min must be an integer")
    values = obj["values"]
    if not isinstance(values, list):
        raise InvalidInput(f"{path}: values must be a list")
    return n_min, values


def _require_reals(values: list, path: str) -> np.ndarray:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise InvalidInput(f"{path}: values must all be numbers")
    return np.array(values, dtype=np.float64)


def load_indexed_sequence(path: str) -> sequences.IndexedSequence:
    n_min, values = _sequence_payload(path)
    return sequences.IndexedSequence(n_min=n_min, values=_require_reals(values, path))


def load_positive_sequence(path: str) -> muckenhoupt.PositiveSequence:
    n_min, values = _sequence_payload(path)
    return muckenhoupt.PositiveSequence(n_min=n_min, values=_require_reals(values, path))


def load_signed_sequence(path: str) -> muckenhoupt.SignedCriticalSequence:
    n_min, values = _sequence_payload(path)
    return muckenhoupt.SignedCriticalSequence(
        n_min=n_min, values=_require_reals(values, path)
    )


def load_complex_data(path: str) -> tuple[int, np.ndarray]:
    """Data vector JSON: entries are numbers or [re, im] pairs."""
    n_min, values = _sequence_payload(path)
    out = np.empty(len(values), dtype=np.complex128)
    for k, v in enumerate(values):
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            out[k] = complex(v, 0.0)
        elif (
            isinstance(v, list)
            and len(v) == 2
            and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)
        ):
            out[k] = complex(v[0], v[1])
        else:
            raise InvalidInput(f"{path}: data entries must be numbers or [re, im] pairs")
    return n_min, out


def _write_text(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InvalidInput(f"cannot write {output}: {exc}")


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _emit_json(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False, default=_json_default)
    _write_text(text + "\n", output)


def _format_cell(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _emit_csv(header: str, rows, output: str | None) -> None:
    lines = [header]
    lines.extend(",".join(_format_cell(c) for c in row) for row in rows)
    _write_text("\n".join(lines) + "\n", output)


def _build_function(nodes: sequences.IndexedSequence, radius: float | None):
    if radius is not None:
        return genfun.SymmetricProduct(nodes, radius_R=radius)
    return genfun.tail_completion(nodes)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_analyze(args) -> int:
    seq = load_indexed_sequence(args.input)
    r = args.r if args.r is not None else seq.span / 4.0
    report = {
        "separation": sequences.separation(seq).to_dict(),
        "kadets": sequences.kadets_check(seq).to_dict(),
        "density": sequences.density(seq, r).to_dict(),
    }
    _emit_json(report, args.output)
    return 0


def _cmd_muckenhoupt(args) -> int:
    if args.continuous:
        if args.input is None:
            raise InvalidInput("muckenhoupt --continuous: --input node JSON is required")
        if not args.lengths or not args.centers:
            raise InvalidInput("muckenhoupt --continuous: --lengths and --centers are required")
        nodes = load_indexed_sequence(args.input)
        w = genfun.WeightTrace(genfun.tail_completion(nodes), y=args.y)
        report = muckenhoupt.continuous_a2_scan(w, args.lengths, args.centers)
        _emit_json(report.to_dict(), args.output)
        return 0

    if (args.input is None) == (args.alpha is None):
        raise InvalidInput("muckenhoupt: provide exactly one of --input or --alpha")
    if args.alpha is not None:
        if args.range is None:
            raise InvalidInput("muckenhoupt: --alpha requires --range")
        d = muckenhoupt.power_law_sequence(args.alpha, -args.range, args.range)
    else:
        d = load_positive_sequence(args.input)
    cap = args.window_cap if args.window_cap is not None else len(d)
    report = muckenhoupt.discrete_ratio(d, p=args.p, window_cap=cap)
    short = muckenhoupt.discrete_ratio(
        d, p=args.p, window_cap=max(1, min(cap, len(d)) // _GROWTH_SCALE)
    )
    out = report.to_dict()
    out["growing_ratio"] = bool(report.max_ratio >= _GROWTH_FACTOR * short.max_ratio)
    _emit_json(out, args.output)
    return 0


def _cmd_genfun(args) -> int:
    nodes = load_indexed_sequence(args.input)
    F = _build_function(nodes, args.radius)

    if args.mode == "eval":
        if args.z is None:
            raise InvalidInput("genfun eval: --z is required")
        value = genfun.evaluate(F, args.z)
        _emit_json(
            {"z": [args.z.real, args.z.imag], "value": [value.real, value.imag]},
            args.output,
        )
        return 0

    if args.mode == "critical-data":
        if args.gaps is None:
            raise InvalidInput("genfun critical-data: --gaps LO HI is required")
        data = genfun.critical_data(F, (args.gaps[0], args.gaps[1]))
        _emit_json(data.to_dict(), args.output)
        return 0

    if args.mode == "type-estimate":
        if not args.radii:
            raise InvalidInput("genfun type-estimate: --radii is required")
        estimates = genfun.type_estimate(F, args.radii)
        _emit_json({"radii": args.radii, "estimates": estimates}, args.output)
        return 0

    if args.mode == "cartwright":
        if args.half_range is None:
            raise InvalidInput("genfun cartwright: --half-range is required")
        value = genfun.cartwright_integral(F, args.half_range)
        _emit_json({"half_range": args.half_range, "value": value}, args.output)
        return 0

    # line-scan: |F| sampled along a horizontal line, as plot-ready CSV
    if args.x_range is None or args.step is None:
        raise InvalidInput("genfun line-scan: --x-range and --step are required")
    x0, x1 = args.x_range
    if x1 < x0:
        raise InvalidInput("genfun line-scan: empty --x-range")
    if not (args.step > 0.0):
        raise InvalidInput("genfun line-scan: --step must be positive")
    n_pts = int(math.floor((x1 - x0) / args.step + 0.5)) + 1
    rows = []
    for i in range(n_pts):
        x = x0 + i * args.step
        rows.append((x, abs(genfun.evaluate(F, complex(x, args.y)))))
    _emit_csv("x,abs_F", rows, args.output)
    return 0


def _cmd_trace(args) -> int:
    nodes = load_indexed_sequence(args.input)
    F = genfun.tail_completion(nodes)
    tracked = combmap.BranchTrackedLog(F)
    records = combmap.boundary_trace(
        tracked,
        eps=args.eps,
        gaps=(args.gaps[0], args.gaps[1]),
        samples_per_gap=args.samples,
        keep_samples=True,
    )
    rows = []
    for rec in records:
        for x, re_p, im_p in zip(rec.x, rec.re_phi, rec.im_phi):
            rows.append((rec.gap, x, re_p, im_p))
    _emit_csv("gap,x,re_phi,im_phi", rows, args.output)
    return 0


def _central_slice(
    c: muckenhoupt.SignedCriticalSequence, half_width: int
) -> muckenhoupt.SignedCriticalSequence:
    if c.n_min > -half_width or c.n_min + len(c) - 1 < half_width:
        raise InvalidInput(
            f"targets do not cover the index window [{-half_width}, {half_width}]"
        )
    lo = -half_width - c.n_min
    return muckenhoupt.SignedCriticalSequence(
        n_min=-half_width, values=np.array(c.values[lo : lo + 2 * half_width + 1])
    )


def _cmd_synthesize(args) -> int:
    targets = load_signed_sequence(args.targets)
    if args.half_width is not None:
        targets = _central_slice(targets, args.half_width)
    problem = combmap.SynthesisProblem(
        targets=targets,
        tail_value=args.tail_value,
        padding_K=args.padding,
        max_iter=args.max_iter,
        residual_tol=args.residual_tol,
        step_tol=args.step_tol,
    )
    result = combmap.synthesize(problem)
    _emit_json(result.to_dict(), args.output)
    if not result.converged:
        print(
            "error[NOT_CONVERGED]: synthesis residual above tolerance", file=sys.stderr
        )
        return EXIT_NUMERIC
    return 0


def _cmd_certify(args) -> int:
    nodes = load_indexed_sequence(args.input)
    report = combmap.certify(nodes, window_cap=args.window_cap)
    _emit_json(report.to_dict(), args.output)
    return 0


def _cmd_interpolate(args) -> int:
    nodes = load_indexed_sequence(args.input)
    n_min, data = load_complex_data(args.data)
    if n_min != nodes.n_min:
        raise InvalidInput(
            f"data n_min {n_min} does not match node n_min {nodes.n_min}"
        )
    problem = paleywiener.InterpolationProblem(nodes, data)
    out: dict = {}
    if args.z is not None:
        value = paleywiener.interpolate_eval(problem, args.z)
        out["z"] = [args.z.real, args.z.imag]
        out["value"] = [value.real, value.imag]
    if args.norm_check is not None:
        out["norm_equivalence"] = paleywiener.norm_equivalence_check(
            problem, args.norm_check
        )
    if not out:
        raise InvalidInput("interpolate: provide --z and/or --norm-check T")
    _emit_json(out, args.output)
    return 0


def _cmd_frame_bounds(args) -> int:
    nodes = load_indexed_sequence(args.input)
    size = args.size
    if size is None:
        size = len(nodes) if len(nodes) % 2 == 1 else len(nodes) - 1
    report = paleywiener.riesz_bounds(nodes, size)
    _emit_json(report.to_dict(), args.output)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pwcis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="separation, deviation and density reports")
    p.add_argument("--input", required=True, help="node sequence JSON")
    p.add_argument("--r", type=float, help="density window half-length (default span/4)")
    _add_output(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("muckenhoupt", help="windowed weight-ratio scans")
    p.add_argument("--input", help="weight sequence JSON (or node JSON with --continuous)")
    p.add_argument("--alpha", type=float, help="power-law exponent instead of --input")
    p.add_argument("--range", type=int, help="power-law index half-range N for [-N, N]")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--window-cap", type=int, help="longest window scanned (default all)")
    p.add_argument("--continuous", action="store_true",
                   help="scan the squared modulus of the generating function")
    p.add_argument("--y", type=float, default=1.0, help="line height for --continuous")
    p.add_argument("--lengths", type=float, nargs="+", help="interval lengths")
    p.add_argument("--centers", type=float, nargs="+", help="interval centers")
    _add_output(p)
    p.set_defaults(func=_cmd_muckenhoupt)

    p = sub.add_parser("genfun", help="evaluate the generating function of a node set")
    p.add_argument("mode", choices=["eval", "critical-data", "type-estimate",
                                    "cartwright", "line-scan"])
    p.add_argument("--input", required=True, help="node sequence JSON")
    p.add_argument("--radius", type=float,
                   help="use a truncated symmetric product with this reference radius")
    p.add_argument("--z", type=parse_complex, help="evaluation point a+bi")
    p.add_argument("--gaps", type=int, nargs=2, metavar=("LO", "HI"),
                   help="gap index range for critical-data")
    p.add_argument("--radii", type=float, nargs="+", help="radii for type-estimate")
    p.add_argument("--half-range", type=float, help="integration half-range for cartwright")
    p.add_argument("--y", type=float, default=1.0, help="line height for line-scan")
    p.add_argument("--x-range", type=float, nargs=2, metavar=("X0", "X1"))
    p.add_argument("--step", type=float, help="grid step for line-scan")
    _add_output(p)
    p.set_defaults(func=_cmd_genfun)

    p = sub.add_parser("trace", help="boundary trace of the comb map, as CSV")
    p.add_argument("--input", required=True, help="node sequence JSON")
    p.add_argument("--eps", type=float, default=1e-3, help="distance kept from each node")
    p.add_argument("--gaps", type=int, nargs=2, default=[0, 0], metavar=("LO", "HI"))
    p.add_argument("--samples", type=int, default=129, help="samples per gap")
    _add_output(p)
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("synthesize", help="recover nodes from target critical values")
    p.add_argument("--targets", required=True, help="signed critical values JSON")
    p.add_argument("--half-width", type=int,
                   help="use only the central [-N, N] slice of the targets")
    p.add_argument("--tail-value", type=float, default=1.0 / math.pi,
                   help="asymptotic |critical value| of the integer tail")
    p.add_argument("--padding", type=int, default=4,
                   help="extra gaps reported on each side of the core")
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--residual-tol", type=float, default=1e-10)
    p.add_argument("--step-tol", type=float, default=1e-12)
    _add_output(p)
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("certify", help="consistency checks for a candidate node set")
    p.add_argument("--input", required=True, help="node sequence JSON")
    p.add_argument("--window-cap", type=int, default=32,
                   help="longest discrete ratio window")
    _add_output(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("interpolate", help="evaluate the interpolant of a data vector")
    p.add_argument("--input", required=True, help="node sequence JSON")
    p.add_argument("--data", required=True,
                   help="data JSON, entries numbers or [re, im] pairs")
    p.add_argument("--z", type=parse_complex, help="evaluation point a+bi")
    p.add_argument("--norm-check", type=float, metavar="T",
                   help="compare data norm against the function norm on [-T, T]")
    _add_output(p)
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("frame-bounds", help="finite-section frame bound estimates")
    p.add_argument("--input", required=True, help="node sequence JSON")
    p.add_argument("--size", type=int,
                   help="odd section size (default: largest odd window size)")
    _add_output(p)
    p.set_defaults(func=_cmd_frame_bounds)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except PwcisError as err:
        print(f"error[{err.code}]: {err}", file=sys.stderr)
        return exit_code_for(err)
    except SystemExit as err:
        # argparse exits directly only for --help
        return int(err.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
