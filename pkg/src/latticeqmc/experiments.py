"""Convergence experiments: QMC errors of plain, tent-transformed, and
symmetrized lattice rules on smooth test integrands, as CSV tables with
fitted convergence rates.

Everything here is deterministic: Fibonacci rules for the bivariate study,
fast-CBC tent-criterion rules for the high-dimensional product integrands.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .cbc import CbcCriterion, cbc_fast
from .errors import DomainError
from .lattice import (
    LatticeRule,
    distinct_count,
    fibonacci_rule,
    rank1_points,
    symmetrize,
    tent_transform,
)
from .numtheory import fibonacci, nearest_prime
from .weights import WeightScheme
from .worst_case_error import C_PRIME

ERROR_FLOOR = 1e-15
CSV_HEADER = "N,points_used,err_lattice,err_tent,err_sym,parity"

PRESET_NAMES = ("figure1", "f1_s20", "f2c1_s20", "f2c2_s20", "f1_s100", "f2c1_s100", "f2c2_s100")


# -- integrands ---------------------------------------------------------------


def integrand_eval(name: str, x, omega=(), c1: float = 1.3, c2: float = 1.0):
    """Evaluate a test integrand at points x of shape (m, s)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if name == "bivar":
        if x.shape[1] != 2:
            raise DomainError("the bivariate integrand needs s = 2")
        return x[:, 1] * np.exp(x[:, 0] * x[:, 1]) / (math.e - 2.0)
    w = np.asarray(omega, dtype=float)
    if x.shape[1] != len(w):
        raise DomainError(f"need {x.shape[1]} coefficients, got {len(w)}")
    if name == "f1":
        return np.prod(1.0 + w * (x**c1 - 1.0 / (1.0 + c1)), axis=1)
    if name == "f2":
        return np.prod(1.0 + w / (1.0 + w * x**c2), axis=1)
    raise DomainError(f"unknown integrand {name!r}")


def exact_integral(name: str, omega=(), c1: float = 1.3, c2: float = 1.0) -> float:
    """Closed-form integrals of the test integrands over the unit cube."""
    if name == "bivar":
        return 1.0
    if name == "f1":
        return 1.0
    if name == "f2":
        w = np.asarray(omega, dtype=float)
        if c2 == 1.0:
            return float(np.prod(1.0 + np.log1p(w)))
        if c2 == 2.0:
            return float(np.prod(1.0 + np.sqrt(w) * np.arctan(np.sqrt(w))))
        raise DomainError(f"no closed form for the second integrand with exponent {c2}")
    raise DomainError(f"unknown integrand {name!r}")


# -- configuration ------------------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    name: str
    N_list: tuple[int, ...]
    dims: int
    rules: tuple[str, ...]
    integrand: str
    rule_source: str  # "fibonacci" | "cbc_tent"
    omega: tuple[float, ...] = ()
    c1: float = 1.3
    c2: float = 1.0
    cbc_gamma: tuple[float, ...] = ()

    def __post_init__(self):
        if list(self.N_list) != sorted(set(self.N_list)):
            raise DomainError("N_list must be strictly increasing")
        bad = set(self.rules) - {"lattice", "tent", "sym"}
        if bad:
            raise DomainError(f"unknown rules {sorted(bad)}")
        if "sym" in self.rules and self.dims > 20:
            raise DomainError("symmetrized rules are refused for s > 20")
        if self.rule_source not in ("fibonacci", "cbc_tent"):
            raise DomainError(f"unknown rule source {self.rule_source!r}")
        if self.rule_source == "fibonacci" and self.dims != 2:
            raise DomainError("Fibonacci rules are two-dimensional")


def _fibonacci_n_list(m_lo: int = 7, m_hi: int = 25) -> tuple[int, ...]:
    return tuple(fibonacci(m) for m in range(m_lo, m_hi + 1))


def _prime_n_list(p_lo: int = 6, p_hi: int = 14) -> tuple[int, ...]:
    return tuple(nearest_prime(2**p) for p in range(p_lo, p_hi + 1))


def experiment_config(name: str) -> ExperimentConfig:
    """The named experiment presets (N grids are defaults, override as needed)."""
    if name == "figure1":
        return ExperimentConfig(
            name=name, N_list=_fibonacci_n_list(), dims=2,
            rules=("lattice", "tent", "sym"), integrand="bivar", rule_source="fibonacci",
        )
    presets = {
        "f1_s20": ("f1", 20, 2, 1.0), "f2c1_s20": ("f2", 20, 2, 1.0), "f2c2_s20": ("f2", 20, 2, 2.0),
        "f1_s100": ("f1", 100, 3, 1.0), "f2c1_s100": ("f2", 100, 3, 1.0), "f2c2_s100": ("f2", 100, 3, 2.0),
    }
    if name not in presets:
        raise DomainError(f"unknown experiment {name!r}; choose from {PRESET_NAMES}")
    integrand, s, decay, c2 = presets[name]
    j = np.arange(1, s + 1, dtype=float)
    return ExperimentConfig(
        name=name, N_list=_prime_n_list(), dims=s, rules=("lattice", "tent"),
        integrand=integrand, rule_source="cbc_tent",
        omega=tuple(1.0 / j**decay), c1=1.3, c2=c2,
        cbc_gamma=tuple(1.0 / (4.0 * C_PRIME * j**decay)),
    )


# -- running ------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceRow:
    N: int
    points_used: int
    err_lattice: float
    err_tent: float
    err_sym: float
    parity: str
    err_external: float = math.nan


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    rows: tuple[ConvergenceRow, ...]
    vectors: dict[int, tuple[int, ...]]
    has_external: bool = False

    def to_csv_text(self) -> str:
        header = CSV_HEADER + (",err_external" if self.has_external else "")
        lines = [header]
        for r in self.rows:
            cells = [str(r.N), str(r.points_used), f"{r.err_lattice:.17g}",
                     f"{r.err_tent:.17g}", f"{r.err_sym:.17g}", r.parity]
            if self.has_external:
                cells.append(f"{r.err_external:.17g}")
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def to_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_csv_text())


def _fibonacci_rule_for(N: int) -> LatticeRule:
    m = 3
    while fibonacci(m) < N:
        m += 1
    if fibonacci(m) != N:
        raise DomainError(f"{N} is not a Fibonacci number")
    return fibonacci_rule(m)


def _build_rule(cfg: ExperimentConfig, N: int) -> LatticeRule:
    if cfg.rule_source == "fibonacci":
        return _fibonacci_rule_for(N)
    crit = CbcCriterion(kind="tent", base_weights=WeightScheme.product(cfg.cbc_gamma))
    return cbc_fast(N, cfg.dims, crit).rule()


def run_experiment(cfg: ExperimentConfig, external_points=None) -> ExperimentResult:
    """Build the rule for each N, average the integrand over the requested
    point multisets, and tabulate absolute errors against the exact integral."""
    target = exact_integral(cfg.integrand, cfg.omega, cfg.c1, cfg.c2)

    def qmc_error(points: np.ndarray) -> float:
        q = float(np.mean(integrand_eval(cfg.integrand, points, cfg.omega, cfg.c1, cfg.c2)))
        return abs(q - target)

    rows = []
    vectors = {}
    for N in cfg.N_list:
        rule = _build_rule(cfg, N)
        vectors[N] = rule.z
        plain = rank1_points(rule)
        err_lattice = qmc_error(plain.points) if "lattice" in cfg.rules else math.nan
        err_tent = qmc_error(tent_transform(plain).points) if "tent" in cfg.rules else math.nan
        err_sym = math.nan
        points_used = N
        if "sym" in cfg.rules:
            sym = symmetrize(plain)
            err_sym = qmc_error(sym.points)
            points_used = distinct_count(sym)
        err_external = math.nan
        if external_points is not None:
            ext = np.atleast_2d(np.asarray(external_points, dtype=float))
            if ext.shape[0] >= N and ext.shape[1] == cfg.dims:
                err_external = qmc_error(ext[:N])
            else:
                warnings.warn(f"external point file cannot serve N={N}, s={cfg.dims}")
        rows.append(ConvergenceRow(
            N=N, points_used=points_used, err_lattice=err_lattice, err_tent=err_tent,
            err_sym=err_sym, parity="even" if N % 2 == 0 else "odd",
            err_external=err_external,
        ))
    return ExperimentResult(config=cfg, rows=tuple(rows), vectors=vectors,
                            has_external=external_points is not None)


def slope_fit(rows, column: str, window: tuple[int, int] | None = None) -> float:
    """Least-squares slope of log(error) against log(N) over the N window.

    Errors at or below the 1e-15 floor are dropped with a warning (the window
    auto-shrinks); at least three points must remain.
    """
    lo, hi = window if window is not None else (0, 2**62)
    pts = []
    dropped = 0
    for r in rows:
        if not lo <= r.N <= hi:
            continue
        err = getattr(r, f"err_{column}")
        if not math.isfinite(err):
            continue
        if err <= ERROR_FLOOR:
            dropped += 1
            continue
        pts.append((math.log(r.N), math.log(err)))
    if dropped:
        warnings.warn(f"{dropped} error(s) at the 1e-15 floor excluded from the slope window")
    if len(pts) < 3:
        raise DomainError(f"slope fit needs >= 3 usable rows, got {len(pts)}")
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    x = x - x.mean()
    return float(np.sum(x * (y - y.mean())) / np.sum(x * x))


def fitted_slopes(result: ExperimentResult, window: tuple[int, int] | None = None) -> dict[str, float]:
    """Slopes for every rule column present in the result."""
    out = {}
    columns = list(result.config.rules) + (["external"] if result.has_external else [])
    for col in columns:
        try:
            out[col] = slope_fit(result.rows, col, window)
        except DomainError:
            out[col] = math.nan
    return out
