"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 computation error (caps, malformed
input), 3 when verify ends with a COUNTEREXAMPLE status.  Errors print a
single machine-parsable "Kind: reason" line on stderr.  JSON documents carry
a trailing "meta" block (tool, version, timing) which is the only
nondeterministic part of any output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .degrees import SpectralInput, degree_product, ghost_degree_linear, negative_eigen_multiplicities
from .errors import BurnsideError, NoSolution
from .groups import DEFAULT_MAX_ORDER, catalog_group, group_from_generators
from .pipeline import Pipeline
from .ring import DEFAULT_MAX_UNIT_CLASSES, BurnsideElement, enumerate_units, ghost_map
from .units import factor_unit, parity_vector, verify_generation

COMMANDS = (
    "info",
    "subgroups",
    "marks",
    "multable",
    "chartable",
    "irreps",
    "basic-degrees",
    "units",
    "factor",
    "degree",
    "verify",
)

CSV_COMMANDS = ("marks", "multable")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group_spec: str
    format: str = "text"
    out_path: str | None = None
    coeffs: str | None = None
    mu: str | None = None
    blocks_path: str | None = None
    max_order: int = DEFAULT_MAX_ORDER
    max_classes: int = DEFAULT_MAX_UNIT_CLASSES


def _load_group(config: RunConfig):
    spec = config.group_spec
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        return group_from_generators(
            doc["domain"],
            doc["generators"],
            name=doc.get("name", path),
            max_order=config.max_order,
        )
    return catalog_group(spec, config.max_order)


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


def _fmt_complex(v: complex) -> str:
    re = round(v.real, 6) + 0.0
    im = round(v.imag, 6) + 0.0
    if im == 0:
        return f"{re:g}"
    if re == 0:
        return f"{im:g}i"
    return f"{re:g}{im:+g}i"


def _re_im(v: complex) -> list[float]:
    return [round(v.real, 12) + 0.0, round(v.imag, 12) + 0.0]


# ---------------------------------------------------------------------------
# per-command emitters: each returns (payload dict, text string, csv or None)


def _emit_info(pipe: Pipeline):
    g = pipe.group
    payload = {
        "group": g.name,
        "order": g.order,
        "domain": g.domain_size,
        "exponent": g.exponent,
        "N": pipe.classes.size,
        "r": pipe.irreps.count,
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    return payload, text, None


def _emit_subgroups(pipe: Pipeline):
    classes = pipe.classes
    payload = {
        "group": pipe.group.name,
        "classes": [
            {
                "label": classes.labels[i],
                "order": c.subgroup_order,
                "size": c.size,
                "normalizer_order": c.normalizer_order,
                "weyl_order": c.weyl_order,
                "representative": list(c.representative.indices),
            }
            for i, c in enumerate(classes.classes)
        ],
        "containment_counts": [list(r) for r in classes.containment_counts],
    }
    rows = [["label", "order", "size", "|N(H)|", "|W(H)|", "representative"]]
    for i, c in enumerate(classes.classes):
        rows.append(
            [
                classes.labels[i],
                str(c.subgroup_order),
                str(c.size),
                str(c.normalizer_order),
                str(c.weyl_order),
                "{" + ",".join(map(str, c.representative.indices)) + "}",
            ]
        )
    return payload, _grid(rows), None


def _emit_marks(pipe: Pipeline):
    psi = pipe.psi
    labels = pipe.classes.labels
    payload = {"order": list(labels), "psi": [list(r) for r in psi.entries]}
    rows = [[""] + list(labels)]
    for i, row in enumerate(psi.entries):
        rows.append([labels[i]] + [str(v) for v in row])
    csv_lines = [",".join(labels)]
    csv_lines += [",".join(str(v) for v in row) for row in psi.entries]
    return payload, _grid(rows), "\n".join(csv_lines)


def _emit_multable(pipe: Pipeline):
    tensor = pipe.tensor
    labels = pipe.classes.labels
    payload = {
        "order": list(labels),
        "tensor": [[list(r) for r in plane] for plane in tensor.entries],
    }
    n = tensor.size
    lines = []
    for i in range(n):
        for j in range(i, n):
            terms = [
                f"{v if v != 1 else ''}({labels[k]})"
                for k, v in enumerate(tensor.entries[i][j])
                if v
            ]
            lines.append(f"({labels[i]}) * ({labels[j]}) = " + (" + ".join(terms) or "0"))
    csv_lines = ["i,j,k,value"]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                csv_lines.append(f"{i},{j},{k},{tensor.entries[i][j][k]}")
    return payload, "\n".join(lines), "\n".join(csv_lines)


def _emit_chartable(pipe: Pipeline):
    table = pipe.chartable
    payload = {
        "group": pipe.group.name,
        "classes": [{"rep": c.rep, "size": c.size} for c in table.classes],
        "degrees": list(table.degrees),
        "values": [[_re_im(v) for v in row] for row in table.chars],
    }
    rows = [["class rep"] + [str(c.rep) for c in table.classes]]
    rows.append(["size"] + [str(c.size) for c in table.classes])
    for i, chi in enumerate(table.chars):
        rows.append([f"chi_{i + 1}"] + [_fmt_complex(v) for v in chi])
    return payload, _grid(rows), None


def _emit_irreps(pipe: Pipeline):
    irreps = pipe.irreps
    d = pipe.fixed_dims
    fs_names = {1: "orthogonal", 0: "complex", -1: "quaternionic"}
    payload = {
        "group": pipe.group.name,
        "classes": list(pipe.classes.labels),
        "irreps": [
            {
                "k": k + 1,
                "dim": ir.real_dimension,
                "fs": ir.fs_type,
                "provenance": list(ir.provenance),
            }
            for k, ir in enumerate(irreps.irreps)
        ],
        "D": [list(r) for r in d.entries],
    }
    rows = [["k", "dim", "type"]]
    for k, ir in enumerate(irreps.irreps):
        rows.append([str(k + 1), str(ir.real_dimension), fs_names[ir.fs_type]])
    text = _grid(rows) + "\n\nfixed dimensions (classes x irreps):\n"
    drows = [[""] + [f"k={k + 1}" for k in range(d.n_irreps)]]
    for i, row in enumerate(d.entries):
        drows.append([pipe.classes.labels[i]] + [str(v) for v in row])
    return payload, text + _grid(drows), None


def _emit_basic_degrees(pipe: Pipeline):
    payload = {
        "order": list(pipe.classes.labels),
        "degrees": [
            {
                "k": bd.irrep_index + 1,
                "fs": pipe.irreps.irreps[bd.irrep_index].fs_type,
                "coeffs": list(bd.element.coeffs),
                "ghost": list(bd.ghost.values),
            }
            for bd in pipe.basics
        ],
    }
    rows = [["k", "coefficients", "ghost signs"]]
    for bd in pipe.basics:
        rows.append(
            [
                str(bd.irrep_index + 1),
                "(" + ",".join(map(str, bd.element.coeffs)) + ")",
                "(" + ",".join(f"{v:+d}" for v in bd.ghost.values) + ")",
            ]
        )
    return payload, _grid(rows), None


def _emit_units(pipe: Pipeline):
    units = enumerate_units(pipe.psi, max_classes=pipe.max_unit_classes)
    payload = {
        "order": list(pipe.classes.labels),
        "units": [
            {
                "coeffs": list(u.coeffs),
                "ghost": list(ghost_map(pipe.psi, u).values),
            }
            for u in units
        ],
    }
    rows = [["coefficients", "ghost signs"]]
    for u in units:
        rows.append(
            [
                "(" + ",".join(map(str, u.coeffs)) + ")",
                "(" + ",".join(f"{v:+d}" for v in ghost_map(pipe.psi, u).values) + ")",
            ]
        )
    return payload, _grid(rows), None


def _emit_factor(pipe: Pipeline, config: RunConfig):
    if not config.coeffs:
        raise UsageError("factor requires --coeffs")
    coeffs = _parse_int_list(config.coeffs, "--coeffs")
    if len(coeffs) != pipe.classes.size:
        raise UsageError(
            f"--coeffs needs {pipe.classes.size} entries for this group, got {len(coeffs)}"
        )
    unit = BurnsideElement(pipe.classes, coeffs)
    delta = parity_vector(unit, pipe.psi)
    fact = factor_unit(unit, pipe)
    payload = {
        "group": pipe.group.name,
        "coeffs": list(coeffs),
        "delta": list(delta.bits),
        "mu": list(fact.mu),
        "verified": fact.verified,
    }
    text = (
        f"coeffs: {list(coeffs)}\ndelta: {list(delta.bits)}\n"
        f"mu: {list(fact.mu)}\nverified: {fact.verified}"
    )
    return payload, text, None


def _parse_blocks_file(path: str, n_irreps: int) -> SpectralInput:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    blocks = {}
    for entry in doc["blocks"]:
        k = int(entry["k"]) - 1
        if not 0 <= k < n_irreps:
            raise UsageError(f"block irrep index {k + 1} out of range 1..{n_irreps}")
        try:
            blocks[k] = [[Fraction(str(x)) for x in row] for row in entry["matrix"]]
        except (ValueError, ZeroDivisionError):
            raise UsageError("block matrices must contain integers or p/q strings") from None
    return SpectralInput.from_blocks(n_irreps, blocks)


def _emit_degree(pipe: Pipeline, config: RunConfig):
    r = pipe.irreps.count
    if config.mu is not None and config.blocks_path is not None:
        raise UsageError("degree takes --mu or --blocks, not both")
    if config.mu is not None:
        mu = _parse_int_list(config.mu, "--mu")
        if len(mu) != r:
            raise UsageError(f"--mu needs {r} entries for this group, got {len(mu)}")
        if any(m < 0 for m in mu):
            raise UsageError("--mu entries must be nonnegative")
        spec = SpectralInput.from_counts(mu)
    elif config.blocks_path is not None:
        spec = _parse_blocks_file(config.blocks_path, r)
    else:
        raise UsageError("degree requires --mu or --blocks")
    mu = negative_eigen_multiplicities(spec)
    result = degree_product(mu, pipe.basics, pipe.tensor)
    ghost = ghost_degree_linear(mu, pipe.fixed_dims)
    assert ghost_map(pipe.psi, result).values == ghost.values
    payload = {
        "group": pipe.group.name,
        "mu": list(mu),
        "coeffs": list(result.coeffs),
        "ghost": list(ghost.values),
    }
    text = f"mu: {list(mu)}\ncoeffs: {list(result.coeffs)}\nghost: {list(ghost.values)}"
    return payload, text, None


def _emit_verify(pipe: Pipeline):
    report = verify_generation(pipe)
    payload = report.to_json_dict()
    lines = [
        f"group: {report.group}",
        f"classes: {report.n_classes}  real irreps: {report.n_irreps}",
        f"units: {report.unit_count}  rank(D mod 2): {report.rank_d_mod2}",
        f"status: {report.status}",
    ]
    for rec in report.results:
        mu = list(rec.mu) if rec.mu is not None else "unsolvable"
        lines.append(f"  unit {list(rec.coeffs)}  mu={mu}  verified={rec.verified}")
    return payload, "\n".join(lines), None


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit code, document)."""
    started = time.perf_counter()
    if config.command not in COMMANDS:
        raise UsageError(f"unknown command {config.command!r}")
    if config.format not in ("text", "json", "csv"):
        raise UsageError(f"unknown format {config.format!r}")
    if config.format == "csv" and config.command not in CSV_COMMANDS:
        raise UsageError(f"csv format is only available for {'/'.join(CSV_COMMANDS)}")

    group = _load_group(config)
    pipe = Pipeline(group, max_order=config.max_order, max_unit_classes=config.max_classes)

    code = 0
    if config.command == "info":
        payload, text, csv = _emit_info(pipe)
    elif config.command == "subgroups":
        payload, text, csv = _emit_subgroups(pipe)
    elif config.command == "marks":
        payload, text, csv = _emit_marks(pipe)
    elif config.command == "multable":
        payload, text, csv = _emit_multable(pipe)
    elif config.command == "chartable":
        payload, text, csv = _emit_chartable(pipe)
    elif config.command == "irreps":
        payload, text, csv = _emit_irreps(pipe)
    elif config.command == "basic-degrees":
        payload, text, csv = _emit_basic_degrees(pipe)
    elif config.command == "units":
        payload, text, csv = _emit_units(pipe)
    elif config.command == "factor":
        payload, text, csv = _emit_factor(pipe, config)
    elif config.command == "degree":
        payload, text, csv = _emit_degree(pipe, config)
    else:
        payload, text, csv = _emit_verify(pipe)
        if payload["status"] == "COUNTEREXAMPLE":
            code = 3

    if config.format == "json":
        payload["meta"] = {
            "tool": "burnside",
            "version": __version__,
            "elapsed_ms": round(1000 * (time.perf_counter() - started), 3),
        }
        document = json.dumps(payload, indent=2)
    elif config.format == "csv":
        document = csv or ""
    else:
        document = text
    return code, document


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burnside",
        description="Burnside ring computations: marks, units, basic degrees.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--group", required=True, help="catalog spec or file:PATH")
    parser.add_argument("--format", default="text", choices=("text", "json", "csv"))
    parser.add_argument("--out", default=None, help="write the document to this path")
    parser.add_argument("--coeffs", default=None, help="comma-separated coefficients")
    parser.add_argument("--mu", default=None, help="comma-separated exponents")
    parser.add_argument("--blocks", default=None, help="JSON file of spectral blocks")
    parser.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    parser.add_argument(
        "--max-classes",
        type=int,
        default=DEFAULT_MAX_UNIT_CLASSES,
        help="cap on subgroup-class count for the unit search",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1

    config = RunConfig(
        command=args.command,
        group_spec=args.group,
        format=args.format,
        out_path=args.out,
        coeffs=args.coeffs,
        mu=args.mu,
        blocks_path=args.blocks,
        max_order=args.max_order,
        max_classes=args.max_classes,
    )
    try:
        code, document = run(config)
    except UsageError as exc:
        sys.stderr.write(f"UsageError: {exc}\n")
        return 1
    except NoSolution as exc:
        sys.stderr.write(f"NoSolution: {exc}\n")
        return 2
    except BurnsideError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2

    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as fh:
            fh.write(document + "\n")
    else:
        sys.stdout.write(document + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
