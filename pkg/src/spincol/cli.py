"""Command line interface: file ingestion, subcommand dispatch, reports.

Subcommands
-----------
analyze        full spin analysis of a determinant file
axis           collinearity eigen-analysis only
oracle-check   closed-form values against the brute-force Fock-space oracle
gen            write a generated determinant (rhf, rohf, dods, random)
paper-fixture  regression checks against the published H2O+ reference values

Exit codes: 0 success, 1 validation or consistency failure, 2 usage error.
Text reports print six decimals; JSON reports print full precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .collinearity import (
    CollinearityResult,
    SpinVector,
    a_matrix,
    analyze_collinearity,
    col_along,
    spin_vector,
)
from .determinant import SpinorDeterminant, build_overlap_blocks, electron_counts, orthonormalize
from .errors import SpincolError
from .fock import oracle_expectation
from .io import file_sha256, load_determinant, parse_determinant, save_determinant
from .reference import run_reference_checks
from .rotation import align_to_axis, gen_dods, gen_random_gchf, gen_rhf, gen_rohf
from .spin import (
    S2Decomposition,
    decompose_s2,
    expect_s2,
    expect_sminus_splus,
    expect_splus,
    expect_splus_sminus,
    expect_sz,
    expect_sz2,
)

ORACLE_CHECK_TOL = 1e-8
_CONSISTENCY_TOL = 1e-10


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyze subcommand emits for one determinant."""

    input_path: str
    input_sha256: str
    version: str
    basis_dim: int
    n_electrons: int
    n_alpha: float
    n_beta: float
    sz: float
    sz2: float
    sminus_splus: float
    splus_sminus: float
    splus: complex
    s2: float
    decomposition: S2Decomposition
    vector: SpinVector
    collinearity: CollinearityResult
    axis_query: tuple[np.ndarray, float] | None = None
    aligned_decomposition: S2Decomposition | None = None

    def to_dict(self) -> dict:
        doc = {
            "tool": "spincol",
            "version": self.version,
            "input": {"path": self.input_path, "sha256": self.input_sha256},
            "basis_dim": self.basis_dim,
            "n_electrons": self.n_electrons,
            "electron_counts": {"n_alpha": self.n_alpha, "n_beta": self.n_beta},
            "expectations": {
                "sz": self.sz,
                "sz2": self.sz2,
                "sminus_splus": self.sminus_splus,
                "splus_sminus": self.splus_sminus,
                "splus": {"re": self.splus.real, "im": self.splus.imag},
                "s2": self.s2,
            },
            "decomposition": _decomposition_dict(self.decomposition),
            "spin_vector": {"sx": self.vector.sx, "sy": self.vector.sy, "sz": self.vector.sz},
            "collinearity": _collinearity_dict(self.collinearity),
        }
        if self.axis_query is not None:
            axis, value = self.axis_query
            doc["axis_query"] = {"axis": list(map(float, axis)), "col_along": value}
        if self.aligned_decomposition is not None:
            doc["aligned_decomposition"] = _decomposition_dict(self.aligned_decomposition)
        return doc

    def render_text(self) -> str:
        lines = [
            f"spincol {self.version} analysis",
            f"input: {self.input_path}",
            f"sha256: {self.input_sha256}",
            f"basis_dim: {self.basis_dim}   n_electrons: {self.n_electrons}",
            "",
            f"N_alpha              {self.n_alpha:+.6f}",
            f"N_beta               {self.n_beta:+.6f}",
            f"<Sz>                 {self.sz:+.6f}",
            f"<Sz^2>               {self.sz2:+.6f}",
            f"<S-S+>               {self.sminus_splus:+.6f}",
            f"<S+S->               {self.splus_sminus:+.6f}",
            f"<S+>                 {self.splus.real:+.6f} {self.splus.imag:+.6f}i",
            f"<S^2>                {self.s2:+.6f}",
            "",
            "decomposition of <S^2>",
            *_decomposition_text(self.decomposition),
            "",
            "spin vector",
            f"  <Sx> <Sy> <Sz>     {self.vector.sx:+.6f} {self.vector.sy:+.6f} "
            f"{self.vector.sz:+.6f}",
            "",
        ]
        lines.extend(_collinearity_text(self.collinearity))
        if self.axis_query is not None:
            axis, value = self.axis_query
            lines.append("")
            lines.append(
                f"col along ({axis[0]:+.6f}, {axis[1]:+.6f}, {axis[2]:+.6f}) = {value:+.6f}"
            )
        if self.aligned_decomposition is not None:
            lines.append("")
            lines.append("decomposition after aligning z to the optimal axis")
            lines.extend(_decomposition_text(self.aligned_decomposition))
        return "\n".join(lines)


def _decomposition_text(d: S2Decomposition) -> list[str]:
    return [
        f"  {name:<20} {value:+.6f}"
        for name, value in _decomposition_dict(d).items()
    ]


def _decomposition_dict(d: S2Decomposition) -> dict:
    return {
        "s_effective": d.s_effective,
        "rohf_term": d.rohf_term,
        "z_noncollinearity": d.z_noncollinearity,
        "spin_contamination": d.spin_contamination,
        "xy_perpendicularity": d.xy_perpendicularity,
        "total": d.total,
    }


def _collinearity_dict(c: CollinearityResult) -> dict:
    return {
        "a_matrix": [[float(x) for x in row] for row in c.a_matrix],
        "eigenvalues": [float(x) for x in c.eigenvalues],
        "eigenvectors": [[float(x) for x in c.eigenvectors[:, k]] for k in range(3)],
        "col": c.col,
        "optimal_axis": [float(x) for x in c.optimal_axis],
        "degenerate": c.degenerate,
    }


def _collinearity_text(c: CollinearityResult) -> list[str]:
    lines = ["collinearity"]
    for row in c.a_matrix:
        lines.append(f"  A row              {row[0]:+.6f} {row[1]:+.6f} {row[2]:+.6f}")
    ev = c.eigenvalues
    lines.append(f"  eigenvalues        {ev[0]:+.6f} {ev[1]:+.6f} {ev[2]:+.6f}")
    lines.append(f"  col                {c.col:+.6f}")
    ax = c.optimal_axis
    lines.append(f"  optimal_axis       {ax[0]:+.6f} {ax[1]:+.6f} {ax[2]:+.6f}")
    lines.append(f"  degenerate         {'yes' if c.degenerate else 'no'}")
    return lines


def build_report(
    det: SpinorDeterminant,
    path: str,
    sha256: str,
    axis=None,
    align_optimal: bool = False,
) -> AnalysisReport:
    """Compute every reported quantity and re-assert the cross identities."""
    blocks = build_overlap_blocks(det)
    n_alpha, n_beta = electron_counts(blocks)
    decomposition = decompose_s2(blocks)
    s2 = expect_s2(blocks)
    vector = spin_vector(blocks)
    collin = analyze_collinearity(blocks)

    _assert_consistent(abs(decomposition.total - s2), "<S^2> decomposition sum")
    _assert_consistent(abs(sum(decomposition.terms()) - decomposition.total), "term total")
    trace_gap = abs(float(np.trace(collin.a_matrix)) + vector.norm_sq() - s2)
    _assert_consistent(trace_gap, "covariance trace identity")
    eig_residual = float(
        np.max(np.abs(collin.a_matrix @ collin.optimal_axis - collin.col * collin.optimal_axis))
    )
    if eig_residual > 1e-9:
        raise SpincolError(f"optimal axis eigen-residual {eig_residual:.3e} exceeds 1e-9")

    axis_query = None
    if axis is not None:
        axis = np.asarray(axis, dtype=float)
        norm = float(np.linalg.norm(axis))
        if norm == 0.0:
            raise SpincolError("--axis direction must be nonzero")
        axis = axis / norm
        axis_query = (axis, col_along(blocks, axis))

    aligned = None
    if align_optimal:
        tilted = align_to_axis(det, collin.optimal_axis)
        aligned = decompose_s2(build_overlap_blocks(tilted))

    return AnalysisReport(
        input_path=path,
        input_sha256=sha256,
        version=__version__,
        basis_dim=det.basis_dim,
        n_electrons=det.n_electrons,
        n_alpha=n_alpha,
        n_beta=n_beta,
        sz=expect_sz(blocks),
        sz2=expect_sz2(blocks),
        sminus_splus=expect_sminus_splus(blocks),
        splus_sminus=expect_splus_sminus(blocks),
        splus=expect_splus(blocks),
        s2=s2,
        decomposition=decomposition,
        vector=vector,
        collinearity=collin,
        axis_query=axis_query,
        aligned_decomposition=aligned,
    )


def _assert_consistent(deviation: float, what: str) -> None:
    if deviation > _CONSISTENCY_TOL:
        raise SpincolError(f"internal consistency violated: {what} off by {deviation:.3e}")


def oracle_rows(det: SpinorDeterminant) -> list[tuple[str, complex, complex, float]]:
    """(label, closed-form value, oracle value, |deviation|) for every check."""
    blocks = build_overlap_blocks(det)
    vector = spin_vector(blocks)
    a = a_matrix(blocks)
    s = vector.as_array()
    rows = [
        ("<Sz>", expect_sz(blocks), oracle_expectation(det, "Sz")),
        ("<Sz^2>", expect_sz2(blocks), oracle_expectation(det, "Sz2")),
        ("<S-S+>", expect_sminus_splus(blocks), oracle_expectation(det, "S-S+")),
        ("<S+S->", expect_splus_sminus(blocks), oracle_expectation(det, "S+S-")),
        ("<S+>", expect_splus(blocks), oracle_expectation(det, "S+")),
        ("<S^2>", expect_s2(blocks), oracle_expectation(det, "S2")),
        ("<Sx>", vector.sx, oracle_expectation(det, "Sx")),
        ("<Sy>", vector.sy, oracle_expectation(det, "Sy")),
    ]
    labels = "xyz"
    for mu in range(3):
        for nu in range(3):
            formula = a[mu, nu] + s[mu] * s[nu]
            oracle = oracle_expectation(det, f"S{labels[mu]}S{labels[nu]}").real
            rows.append((f"Re<S{labels[mu]}S{labels[nu]}>", formula, oracle))
    return [
        (label, complex(formula), complex(oracle), abs(complex(formula) - complex(oracle)))
        for label, formula, oracle in rows
    ]


def _fmt_value(z: complex) -> str:
    if z.imag == 0.0:
        return f"{z.real:+.12f}"
    return f"{z.real:+.12f}{z.imag:+.12f}i"


def _cmd_analyze(args) -> int:
    det = _load(args.file, args.orthonormalize)
    report = build_report(
        det,
        path=args.file,
        sha256=file_sha256(args.file),
        axis=args.axis,
        align_optimal=args.align_optimal,
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=1))
    else:
        print(report.render_text())
    return 0


def _cmd_axis(args) -> int:
    det = _load(args.file, args.orthonormalize)
    collin = analyze_collinearity(build_overlap_blocks(det))
    if args.json:
        print(json.dumps(_collinearity_dict(collin), indent=1))
    else:
        print("\n".join(_collinearity_text(collin)))
    return 0


def _cmd_oracle_check(args) -> int:
    det = load_determinant(args.file)
    rows = oracle_rows(det)
    width = max(len(label) for label, *_ in rows)
    for label, formula, oracle, dev in rows:
        print(f"{label:<{width}}  formula {_fmt_value(formula)}  oracle {_fmt_value(oracle)}  |dev| {dev:.3e}")
    max_dev = max(dev for *_, dev in rows)
    print(f"max deviation: {max_dev:.3e}")
    if max_dev > ORACLE_CHECK_TOL:
        print(f"FAIL: deviation exceeds {ORACLE_CHECK_TOL:.0e}", file=sys.stderr)
        return 1
    return 0


def _cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    m, ne = args.m, args.ne

    def random_orbitals(count):
        return (rng.standard_normal((m, count)) + 1j * rng.standard_normal((m, count))) / np.sqrt(2)

    if args.kind == "random":
        det = gen_random_gchf(m, ne, args.seed)
    elif args.kind == "rhf":
        if ne % 2:
            raise SpincolError("rhf needs an even electron count")
        det = gen_rhf(random_orbitals(ne // 2))
    elif args.kind == "rohf":
        n_open = 1 if ne % 2 else 2
        if ne < n_open:
            raise SpincolError(f"rohf needs at least {n_open} electrons here")
        n_closed = (ne - n_open) // 2
        det = gen_rohf(random_orbitals(n_closed), random_orbitals(n_open))
    elif args.kind == "dods":
        n_alpha = (ne + 1) // 2
        det = gen_dods(random_orbitals(n_alpha), random_orbitals(ne - n_alpha))
    else:  # pragma: no cover - argparse enforces choices
        raise SpincolError(f"unknown kind {args.kind!r}")

    save_determinant(det, args.out)
    print(f"wrote {args.out} ({args.kind}, basis_dim={m}, n_electrons={ne}, seed={args.seed})")
    return 0


def _cmd_paper_fixture(args) -> int:
    results = run_reference_checks()
    ok = True
    for name, passed, detail in results:
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        ok = ok and passed
    return 0 if ok else 1


def _load(path: str, do_orthonormalize: bool) -> SpinorDeterminant:
    if do_orthonormalize:
        return orthonormalize(parse_determinant(path))
    return load_determinant(path)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincol",
        description="Spin expectation values, <S^2> decomposition and collinearity "
        "analysis for general complex single-determinant wave functions.",
    )
    parser.add_argument("--version", action="version", version=f"spincol {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full analysis report for a determinant file")
    analyze.add_argument("file")
    analyze.add_argument(
        "--orthonormalize",
        action="store_true",
        help="symmetrically orthonormalize the spinors before analyzing",
    )
    analyze.add_argument(
        "--axis",
        nargs=3,
        type=float,
        metavar=("X", "Y", "Z"),
        help="also report col along this direction (normalized internally)",
    )
    analyze.add_argument(
        "--align-optimal",
        action="store_true",
        help="append the decomposition after tilting z to the optimal axis",
    )
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable, full precision")
    fmt.add_argument("--text", action="store_true", help="human-readable, six decimals (default)")
    analyze.set_defaults(func=_cmd_analyze)

    axis = sub.add_parser("axis", help="collinearity eigen-analysis only")
    axis.add_argument("file")
    axis.add_argument(
        "--orthonormalize",
        action="store_true",
        help="symmetrically orthonormalize the spinors before analyzing",
    )
    axis.add_argument("--json", action="store_true", help="machine-readable, full precision")
    axis.set_defaults(func=_cmd_axis)

    oracle = sub.add_parser(
        "oracle-check", help="closed-form values against the Fock-space brute force"
    )
    oracle.add_argument("file")
    oracle.set_defaults(func=_cmd_oracle_check)

    gen = sub.add_parser("gen", help="write a generated determinant file")
    gen.add_argument("--kind", required=True, choices=("rhf", "rohf", "dods", "random"))
    gen.add_argument("--m", required=True, type=int, help="spatial basis size")
    gen.add_argument("--ne", required=True, type=int, help="electron count")
    gen.add_argument("--seed", required=True, type=int)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_gen)

    fixture = sub.add_parser(
        "paper-fixture", help="regression checks against the published H2O+ values"
    )
    fixture.set_defaults(func=_cmd_paper_fixture)

    return parser


def run(argv=None) -> int:
    """Entry point returning an exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except SpincolError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
