"""Seeded random quantum objects and the randomized verification harness.

The generator is deliberately *not* a language-library default: golden
files produced here must be reproducible from the documented update
equations alone, on any platform. SplitMix64 is used:

    state   <- (state + 0x9E3779B97F4A7C15) mod 2^64
    output:    z = state
               z = (z xor (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
               z = (z xor (z >> 27)) * 0x94D049BB133111EB   mod 2^64
               return z xor (z >> 31)

Uniforms map the top 53 bits into (0, 1]; Gaussians come from Box-Muller
applied to consecutive uniform pairs; complex normals use one pair per
entry (real part first). Isometries are built by modified Gram-Schmidt
with a second re-orthogonalization pass in fixed column order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .bounds import bound_report, dou_bounds, heisenberg_bound, luo_bound, schrodinger_bound
from .errors import NumericError
from .measures import abs_variance, operator_u, sym_abs_variance
from .objects import DensityMatrix, KrausChannel, make_channel, make_density

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

SLACK_TOL = 1e-9

#: every bound name tracked by the verification harness
BOUND_NAMES = (
    "thm1_bound", "thm2_bound", "thm3_bound", "thm4_bound",
    "lb_eq13", "lb1_eq14",
    "heisenberg_bound", "schrodinger_bound", "luo_bound",
    "dou_comm", "dou_brackets", "dou_u",
)


class SplitMix64:
    """Counter-based 64-bit generator; see the module docstring for the equations."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in (0, 1]."""
        return ((self.next_u64() >> 11) + 1) * 2.0 ** -53

    def gauss_pair(self) -> tuple[float, float]:
        """Two independent standard normals via Box-Muller."""
        u1 = self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        return r * math.cos(angle), r * math.sin(angle)

    def complex_normal(self) -> complex:
        re, im = self.gauss_pair()
        return complex(re, im)

    def complex_matrix(self, rows: int, cols: int) -> np.ndarray:
        """Row-major matrix of independent standard complex normals."""
        out = np.empty((rows, cols), dtype=complex)
        for i in range(rows):
            for j in range(cols):
                out[i, j] = self.complex_normal()
        return out


def _as_rng(seed) -> SplitMix64:
    return seed if isinstance(seed, SplitMix64) else SplitMix64(seed)


def random_operator(dim: int, seed, hermitian: bool = False) -> np.ndarray:
    """Matrix of standard complex normals, optionally symmetrized to (M + M^dag)/2."""
    rng = _as_rng(seed)
    m = rng.complex_matrix(dim, dim)
    if hermitian:
        m = 0.5 * (m + m.conj().T)
    return m


def random_density(dim: int, rank: int, seed) -> DensityMatrix:
    """Normalized G G^dag for a dim x rank complex Gaussian G."""
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    rng = _as_rng(seed)
    g = rng.complex_matrix(dim, rank)
    m = g @ g.conj().T
    m = m / np.trace(m).real
    m = 0.5 * (m + m.conj().T)
    return make_density(m)


def _gram_schmidt(a: np.ndarray) -> np.ndarray:
    """Orthonormalize the columns of ``a`` (modified Gram-Schmidt, two passes)."""
    q = a.astype(complex).copy()
    rows, cols = q.shape
    for j in range(cols):
        v = q[:, j].copy()
        for _ in range(2):
            for i in range(j):
                v -= np.vdot(q[:, i], v) * q[:, i]
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise NumericError("Gram-Schmidt hit a numerically dependent column")
        q[:, j] = v / norm
    return q


def random_channel(dim: int, kraus_count: int, seed) -> KrausChannel:
    """Slice a random isometry from dim to dim*kraus_count into Kraus blocks."""
    if kraus_count < 1:
        raise ValueError(f"kraus_count must be >= 1, got {kraus_count}")
    rng = _as_rng(seed)
    g = rng.complex_matrix(dim * kraus_count, dim)
    isometry = _gram_schmidt(g)
    ops = [isometry[i * dim:(i + 1) * dim, :] for i in range(kraus_count)]
    return make_channel(ops, tol=1e-10)


@dataclass(frozen=True)
class EnsembleConfig:
    """Parameters of one verification sweep."""

    dim: int
    kraus_count: int
    rank: int
    seed: int
    trials: int

    def __post_init__(self):
        if not 2 <= self.dim <= 8:
            raise ValueError(f"dim must lie in [2, 8], got {self.dim}")
        if self.kraus_count < 1:
            raise ValueError(f"kraus_count must be >= 1, got {self.kraus_count}")
        if not 1 <= self.rank <= self.dim:
            raise ValueError(f"rank must lie in [1, {self.dim}], got {self.rank}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


@dataclass(frozen=True)
class Violation:
    bound_name: str
    seed: int
    slack: float


@dataclass
class VerificationReport:
    """Outcome of a verification sweep; deterministic apart from ``elapsed``."""

    trials_run: int
    violations: list[Violation]
    min_slack_per_bound: dict[str, float]
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "trials_run": self.trials_run,
            "violations": [
                {"bound": v.bound_name, "seed": v.seed, "slack": v.slack}
                for v in self.violations
            ],
            "min_slack_per_bound": dict(self.min_slack_per_bound),
            "elapsed_seconds": self.elapsed,
        }


def _trial_slacks(rho: DensityMatrix, phi, psi, k, l, a, b,
                  broken_bound: str | None) -> dict[str, float]:
    report = bound_report(rho, phi, psi, check=False)
    slacks = dict(report.slacks)

    va = abs_variance(rho, a)
    vb = abs_variance(rho, b)
    slacks["heisenberg_bound"] = va * vb - heisenberg_bound(rho, a, b)
    slacks["schrodinger_bound"] = va * vb - schrodinger_bound(rho, a, b)
    luo_lhs, luo_rhs = luo_bound(rho, a, b)
    slacks["luo_bound"] = luo_lhs - luo_rhs

    comm, brackets, u_comm = dou_bounds(rho, k, l)
    lhs_v = sym_abs_variance(rho, k) * sym_abs_variance(rho, l)
    lhs_u = operator_u(rho, k) * operator_u(rho, l)
    slacks["dou_comm"] = lhs_v - comm
    slacks["dou_brackets"] = lhs_v - brackets
    slacks["dou_u"] = lhs_u - u_comm

    if broken_bound is not None:
        # self-test hook: inflate one bound tenfold to prove the detector fires
        lhs_by_name = {
            "thm1_bound": report.lhs_product_v, "thm2_bound": report.lhs_product_v,
            "thm3_bound": report.lhs_product_u, "lb_eq13": report.lhs_product_u,
            "thm4_bound": report.lhs_sum_u2, "lb1_eq14": report.lhs_sum_u2,
            "heisenberg_bound": va * vb, "schrodinger_bound": va * vb,
            "luo_bound": luo_lhs, "dou_comm": lhs_v, "dou_brackets": lhs_v,
            "dou_u": lhs_u,
        }
        if broken_bound not in lhs_by_name:
            raise ValueError(f"unknown bound name {broken_bound!r}")
        lhs = lhs_by_name[broken_bound]
        slacks[broken_bound] = lhs - 10.0 * (lhs - slacks[broken_bound])
    return slacks


def verify_suite(config: EnsembleConfig, broken_bound: str | None = None
                 ) -> VerificationReport:
    """Sweep random (state, channel, channel) triples through every bound.

    Trial t draws everything from one SplitMix64 stream seeded with
    ``config.seed + t``, so trials are independently reproducible. Each
    trial also draws a general operator pair and a Hermitian observable
    pair for the operator-level relations. Any slack below -1e-9 is
    recorded as a violation together with the trial seed.
    """
    start = time.perf_counter()
    violations: list[Violation] = []
    min_slack = {name: math.inf for name in BOUND_NAMES}
    for t in range(config.trials):
        trial_seed = config.seed + t
        rng = SplitMix64(trial_seed)
        rho = random_density(config.dim, config.rank, rng)
        phi = random_channel(config.dim, config.kraus_count, rng)
        psi = random_channel(config.dim, config.kraus_count, rng)
        k = random_operator(config.dim, rng)
        l = random_operator(config.dim, rng)
        a = random_operator(config.dim, rng, hermitian=True)
        b = random_operator(config.dim, rng, hermitian=True)
        try:
            slacks = _trial_slacks(rho, phi, psi, k, l, a, b, broken_bound)
        except NumericError as exc:
            raise NumericError(f"trial seed {trial_seed}: {exc}") from exc
        for name in BOUND_NAMES:
            slack = slacks[name]
            if slack < min_slack[name]:
                min_slack[name] = slack
            if slack < -SLACK_TOL:
                violations.append(Violation(name, trial_seed, float(slack)))
    elapsed = time.perf_counter() - start
    return VerificationReport(
        trials_run=config.trials,
        violations=violations,
        min_slack_per_bound={name: float(min_slack[name]) for name in BOUND_NAMES},
        elapsed=elapsed,
    )
