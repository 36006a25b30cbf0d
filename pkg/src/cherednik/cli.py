"""Command line front end.

Usage::

    cherednik check --n 2 --c -1,0
    cherednik verify-all --n 3 --c 1,-1,0 --json

Exit codes:
    0   every check passed
    1   a mathematical verdict came out negative (e.g. c is not in F)
    2   two independent computations disagreed (an implementation bug)
    64  usage error

Set ``CHEREDNIK_LOG`` to a logging level name (``DEBUG``, ``INFO``, ...)
for progress messages on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from .algebra import CyclicParams, check_inner_grading, normal_order, xi_pow_x_identity
from .criteria import (
    build_Dk,
    build_Fk,
    composed_Dk,
    composed_Fk,
    dk_all_nonsingular,
    generation_report,
    good_translate,
    in_F,
)
from .endo import critical_ks, det_formula, direct_fixed_killed_dim, end_dim, xi_n_matrix
from .hecke import (
    CONVENTION,
    check_annihilation,
    check_commutation,
    eigenvalue_on_standard,
    eta_matrix,
    hecke_poly,
)
from .homspace import default_t, delta_to_nabla_hom, singular_space_dim
from .modules import DELTA, NABLA, ModVector, act, composed_eu_matrix, epsilon_action, eu_matrix
from .scalars import (
    DEFAULT_TOL,
    ConsistencyError,
    PreconditionError,
    parse_scalar,
    scalar_to_str,
)

log = logging.getLogger("cherednik")

EXIT_OK, EXIT_FAIL, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2, 64
RESIDUAL_TOL = 1e-8
COMMANDS = ("check", "normalize", "matrices", "end-dim", "hecke", "hom", "verify-all")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: CyclicParams
    t: tuple
    max_degree: int
    tol: float
    seed: int
    json: bool

    @property
    def n(self) -> int:
        return self.params.n

    def echo(self) -> dict:
        return {
            "n": self.n,
            "c": [scalar_to_str(v) for v in self.params.c],
            "t": [scalar_to_str(v) for v in self.t],
            "mode": self.params.mode,
            "max_degree": self.max_degree,
            "tol": self.tol,
            "seed": self.seed,
        }


class Report:
    """Collects checks and data; serializes to plain JSON types."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.checks: list[dict] = []
        self.data: dict[str, Any] = {}

    def check(self, name: str, anchor: str, status: bool | None, **detail) -> bool | None:
        entry = {"name": name, "anchor": anchor, "status": _status(status)}
        if detail:
            entry["detail"] = jsonable(detail)
        self.checks.append(entry)
        log.info("%s: %s", name, entry["status"])
        return status

    def to_dict(self, elapsed: float) -> dict:
        return {
            "command": self.config.command,
            "config": self.config.echo(),
            "checks": self.checks,
            "data": jsonable(self.data),
            "timing_s": round(elapsed, 6),
        }

    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.checks)


def _status(flag: bool | None) -> str:
    if flag is None:
        return "skip"
    return "pass" if flag else "fail"


def jsonable(obj):
    """Convert scalars, tuples and numpy values into JSON-native data."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    return scalar_to_str(obj)


def emit(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def parse(text: str) -> dict:
    return json.loads(text)


# ---------------------------------------------------------------- commands


def cmd_check(cfg: RunConfig, rep: Report) -> None:
    p = cfg.params
    crit = in_F(p, cfg.tol)
    verdict = dk_all_nonsingular(p, cfg.max_degree, cfg.tol)
    rep.data.update(
        in_F=crit.in_F,
        semisimple=crit.semisimple,
        failing_pairs=crit.failing_pairs,
        witnesses=[[i, j] for i, j, _m in crit.failing_pairs],
        singular_degrees=[list(w) for w in verdict.witnesses],
        dk_scan_singular=verdict.scan_singular,
    )
    rep.check("good parameter set", "definition of the good parameter set F", crit.in_F)
    rep.check(
        "D_k criterion vs determinant scan",
        "D_k nonsingular for all k >= 0 iff c in F",
        True,
        scan_bound=verdict.scan_bound,
    )


def cmd_normalize(cfg: RunConfig, rep: Report) -> None:
    p = cfg.params
    if not p.is_exact:
        raise UsageError("normalize needs --mode exact")
    q = good_translate(p)
    diffs = [p.c[i] - q.c[i] for i in range(p.n)]
    congruent = all(Fraction(d) / p.n == int(Fraction(d) / p.n) for d in diffs)
    rep.data.update(c_prime=list(q.c), difference=diffs)
    rep.check("output in F", "normalization into F", in_F(q).in_F)
    rep.check("output congruent mod n", "normalization into F", congruent)


def _matrix_json(mat) -> list:
    return [[jsonable(a) for a in row] for row in mat.rows]


def cmd_matrices(cfg: RunConfig, rep: Report) -> None:
    p, n, K = cfg.params, cfg.n, cfg.max_degree
    rep.data["D"] = {k: _matrix_json(build_Dk(p, k)) for k in range(0, K + 1)}
    if cfg.t[-1] != 0:
        rep.data["F"] = {k: _matrix_json(build_Fk(p, cfg.t, k)) for k in range(1 - n, 0)}
    rep.data["eu"] = {k: _matrix_json(eu_matrix(p, k)) for k in range(1 - n, K + 1)}
    rep.data["eta"] = {k: jsonable(eta_matrix(p, k)) for k in range(1 - n, K + 1)}
    rep.data["hecke_convention"] = CONVENTION


def _end_section(cfg: RunConfig, rep: Report) -> int:
    p, n = cfg.params, cfg.n
    e = end_dim(p, cfg.max_degree, cfg.tol)
    rep.data.update(
        dim_end=e.dim_end,
        critical_ks=[list(x) for x in e.critical_ks],
        det_values=e.det_values,
    )
    rep.check("dim End equals n", "dimension of End of the standard module", e.dim_end == n)
    return e.dim_end


def cmd_end_dim(cfg: RunConfig, rep: Report) -> None:
    _end_section(cfg, rep)


def _hecke_section(cfg: RunConfig, rep: Report) -> None:
    p, n, K = cfg.params, cfg.n, cfg.max_degree
    poly = hecke_poly(p)
    ann = check_annihilation(p, K)
    com = check_commutation(p, K)
    rep.data.update(
        hecke_convention=CONVENTION,
        hecke_roots=poly.roots,
        hecke_coeffs=poly.coeffs,
        annihilation_residual=ann,
        commutation_residual=com,
    )
    rep.check("eta satisfies the Hecke relation", "eta annihilated by the Hecke polynomial", ann < RESIDUAL_TOL)
    rep.check("eta commutes with x, s, xi", "eta commutes with the algebra action", com < RESIDUAL_TOL)
    diag_err = 0.0
    for k in range(1 - n, K + 1):
        diag = np.diag(eta_matrix(p, k))
        diag_err = max(diag_err, float(np.max(np.abs(diag - poly.roots[: len(diag)]))))
    rep.check("eta diagonal", "eta triangular with Hecke roots on the diagonal", diag_err < 1e-10, max_error=diag_err)
    crit = in_F(p, cfg.tol)
    if crit.semisimple:
        eig = [eigenvalue_on_standard(p, j, cfg.tol) for j in range(1, n + 1)]
        err = float(max(abs(a - b) for a, b in zip(eig, poly.roots)))
        rep.data["eigenvalues_on_standard"] = eig
        rep.check("eigenvalues on standard modules", "eta is the Hecke action", err < 1e-10, max_error=err)
    else:
        rep.check("eigenvalues on standard modules", "eta is the Hecke action", None, reason="not semisimple")


def cmd_hecke(cfg: RunConfig, rep: Report) -> None:
    _hecke_section(cfg, rep)


def _hom_section(cfg: RunConfig, rep: Report) -> bool:
    p = cfg.params
    hom = delta_to_nabla_hom(p, cfg.t, cfg.max_degree)
    rep.data.update(hom_iso=hom.iso, hom_deficient_degrees=hom.deficient_degrees)
    rep.check("Delta -> M is an isomorphism", "isomorphisms correspond to generators", hom.iso)
    if cfg.t[-1] != 0:
        gen = generation_report(p, cfg.t, cfg.max_degree, cfg.tol)
        # the span route may look past K; compare on the common window
        hom_full = delta_to_nabla_hom(p, cfg.t, gen.window)
        if hom_full.iso != gen.generates:
            raise ConsistencyError("hom iso verdict disagrees with generation")
    return hom.iso


def cmd_hom(cfg: RunConfig, rep: Report) -> None:
    _hom_section(cfg, rep)


def _random_vector(rng: random.Random, tag: str, n: int, exact: bool) -> ModVector:
    entries = {}
    for _ in range(rng.randint(1, 4)):
        key = (rng.randint(0, 3 * n), rng.randint(0, n - 1))
        if exact:
            entries[key] = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        else:
            entries[key] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return ModVector(tag, n, entries)


def relations_hold(p: CyclicParams, v: ModVector) -> bool:
    """The three defining relations applied to a module vector, exactly."""
    q, qi = p.q_pow(1), p.q_pow(-1)
    ok1 = act("s", act("xi", v, p), p) == act("xi", act("s", v, p), p).scale(q)
    ok2 = act("s", act("x", v, p), p) == act("x", act("s", v, p), p).scale(qi)
    rhs = v
    for k in range(p.n):
        d = p.delta(k + 1, k)
        if d != 0:
            rhs = rhs + epsilon_action(k, v, p).scale(d)
    ok3 = act("xi", act("x", v, p), p) - act("x", act("xi", v, p), p) == rhs
    return ok1 and ok2 and ok3


def cmd_verify_all(cfg: RunConfig, rep: Report) -> None:
    p, n, K, tol = cfg.params, cfg.n, cfg.max_degree, cfg.tol
    exact = p.is_exact
    rng = random.Random(cfg.seed)

    if exact:
        ok = all(relations_hold(p, _random_vector(rng, tag, n, True)) for tag in (DELTA, NABLA) for _ in range(20))
        rep.check("defining relations on both modules", "defining relations of the algebra", ok)
        ok = all(xi_pow_x_identity(j, p) == normal_order(["xi"] * j + ["x"], p) for j in range(2 * n + 1))
        rep.check("xi^j x identity", "commutation of xi^j past x", ok)
        rep.check("inner grading", "[eu, h] = deg(h) h", check_inner_grading(p))
        ok = all(eu_matrix(p, k) == composed_eu_matrix(p, k) for k in range(1 - n, K + 1))
        rep.check("eu matrices", "eu on the graded pieces of Delta", ok)
        rep.check("singular vectors in degree 0", "basis of singular vectors psi_i", singular_space_dim(p, 0) == n)
        ok = all(build_Dk(p, k) == composed_Dk(p, k) for k in range(0, K + 1))
        if cfg.t[-1] != 0:
            ok = ok and all(build_Fk(p, cfg.t, k) == composed_Fk(p, cfg.t, k) for k in range(1 - n, 0))
        rep.check("D_k and F_k transcription", "matrices of x on M and its quotients", ok)
        ok = all(build_Fk(p, default_t(n), k).is_unit_upper_triangular() for k in range(1 - n, 0))
        rep.check("F_k unitriangular for t = e_(n-1)", "F_k for the distinguished t", ok)
    else:
        for name in ("defining relations on both modules", "xi^j x identity", "inner grading"):
            rep.check(name, "exact identity", None, reason="float mode")

    crit = in_F(p, tol)
    rep.data.update(in_F=crit.in_F, semisimple=crit.semisimple, failing_pairs=crit.failing_pairs)
    rep.check("good parameter set", "definition of the good parameter set F", crit.in_F)
    dk_all_nonsingular(p, K, tol)
    rep.check("D_k criterion vs determinant scan", "D_k nonsingular for all k >= 0 iff c in F", True)

    gen = generation_report(p, cfg.t, K, tol)
    rep.data.update(generates=gen.generates, generation_window=gen.window)
    rep.check("psi generates M", "generation criterion via D_k and F_k", gen.generates)
    _hom_section(cfg, rep)

    dim = _end_section(cfg, rep)
    if exact:
        ok = all(xi_n_matrix(p, k).det() == det_formula(p, k) for k in range(1, K + 1))
        rep.check("det of xi^n", "closed form of det of xi^n", ok)
        crit_ks = critical_ks(p, tol)
        direct = sum(direct_fixed_killed_dim(p, d, tol) for d in range(1, max([K] + crit_ks) * n + 1))
        rep.check("End via direct kernel", "Delta-side fixed vectors killed by xi^n", direct == dim - n)

    _hecke_section(cfg, rep)

    if cfg.t == default_t(n):
        agree = gen.generates == crit.in_F == (dim == n)
        if not agree:
            raise ConsistencyError("generation, membership in F and dim End disagree")
        rep.check("generation iff F iff dim End = n", "main equivalence for cyclic groups", agree)
    if crit.semisimple and not crit.in_F:
        raise ConsistencyError("semisimple parameter outside F")


HANDLERS: dict[str, Callable[[RunConfig, Report], None]] = {
    "check": cmd_check,
    "normalize": cmd_normalize,
    "matrices": cmd_matrices,
    "end-dim": cmd_end_dim,
    "hecke": cmd_hecke,
    "hom": cmd_hom,
    "verify-all": cmd_verify_all,
}


# ------------------------------------------------------------- plumbing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="order of the cyclic group")
    common.add_argument("--c", required=True, help="comma separated c_1,...,c_n with c_n = 0")
    common.add_argument("--t", default=None, help="comma separated t_0,...,t_{n-1} (default e_{n-1})")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--max-degree", type=int, default=None, help="degree bound K (default 3n)")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="zero tolerance for floats")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    parser = _Parser(prog="cherednik", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _split(text: str) -> list[str]:
    parts = [s.strip() for s in text.split(",")]
    if any(not s for s in parts):
        raise UsageError(f"empty entry in list {text!r}")
    return parts


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--c -1,0`` into ``--c=-1,0`` so argparse does not read -1,0 as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--c", "--t"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def make_config(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(_glue_values(argv))
    if args.n < 1:
        raise UsageError("--n must be positive")
    try:
        c = [parse_scalar(s, args.mode) for s in _split(args.c)]
    except ValueError as exc:
        raise UsageError(f"--c: {exc}") from None
    if len(c) != args.n:
        raise UsageError(f"--c needs {args.n} entries, got {len(c)}")
    if c[-1] != 0:
        raise UsageError(f"the last entry of --c must be 0 (c_n = 0), got {args.c.split(',')[-1].strip()}")
    params = CyclicParams(args.n, tuple(c), args.mode)
    if args.t is None:
        t = default_t(args.n)
    else:
        try:
            t = tuple(parse_scalar(s, args.mode) for s in _split(args.t))
        except ValueError as exc:
            raise UsageError(f"--t: {exc}") from None
        if len(t) != args.n:
            raise UsageError(f"--t needs {args.n} entries")
    K = 3 * args.n if args.max_degree is None else args.max_degree
    if K < args.n:
        raise UsageError("--max-degree must be at least n")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    return RunConfig(args.command, params, tuple(t), K, args.tol, args.seed, args.json)


def _print_text(report: dict) -> None:
    cfg = report["config"]
    print(f"{report['command']}  n={cfg['n']}  c=({', '.join(cfg['c'])})  mode={cfg['mode']}  K={cfg['max_degree']}")
    for chk in report["checks"]:
        print(f"  [{chk['status'].upper():4}] {chk['name']}")
    for key in sorted(report["data"]):
        val = report["data"][key]
        text = json.dumps(val)
        if len(text) > 100:
            text = text[:97] + "..."
        print(f"  {key} = {text}")


def run(argv: Sequence[str]) -> tuple[int, dict | None]:
    try:
        cfg = make_config(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    rep = Report(cfg)
    start = time.perf_counter()
    try:
        HANDLERS[cfg.command](cfg, rep)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    except PreconditionError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT, None
    report = rep.to_dict(time.perf_counter() - start)
    if cfg.json:
        print(emit(report))
    else:
        _print_text(report)
    return (EXIT_FAIL if rep.failed() else EXIT_OK), report


def main(argv: Sequence[str] | None = None) -> int:
    level = os.environ.get("CHEREDNIK_LOG")
    if level:
        logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO), stream=sys.stderr)
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
