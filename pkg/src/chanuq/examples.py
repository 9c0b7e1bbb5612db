"""Built-in example states, channels and their closed-form bound surfaces.

Two four-dimensional state families are shipped: the Werner family
(``werner``) and a two-block family (``rho_theta``), both parameterized
by theta in [0, 1], together with a fixed pair of diagonal/damping-style
channels E(p) and F(q). For the canonical parameter values
(theta = 1 for ``werner``, theta = 0 for ``rho_theta``) closed-form
expressions for the four channel bounds are available and serve as
regression surfaces for the numeric evaluators.

The closed forms are evaluated exactly as written, with no algebraic
simplification, so a transcription error in one of them shows up as a
systematic numeric-vs-closed difference instead of being masked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .objects import DensityMatrix, KrausChannel, make_channel, make_density

EXAMPLE_IDS = ("werner", "rho_theta")

#: theta at which each family's closed-form surfaces apply
CLOSED_FORM_THETA = {"werner": 1.0, "rho_theta": 0.0}


@dataclass(frozen=True)
class ExampleConfig:
    """One evaluation point of a built-in example."""

    example_id: str
    theta: float
    p: float
    q: float

    def __post_init__(self):
        if self.example_id not in EXAMPLE_IDS:
            raise ValueError(f"unknown example {self.example_id!r}; "
                             f"choose one of {EXAMPLE_IDS}")
        _check_unit("theta", self.theta)
        _check_unit("p", self.p)
        _check_unit("q", self.q)


@dataclass(frozen=True)
class ClosedFormValues:
    thm3_closed: float
    lb_closed: float
    lb1_closed: float
    lb2_closed: float

    def to_dict(self) -> dict:
        return {
            "thm3_closed": self.thm3_closed,
            "lb_closed": self.lb_closed,
            "lb1_closed": self.lb1_closed,
            "lb2_closed": self.lb2_closed,
        }


def _check_unit(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")
    return value


def werner_state(theta: float) -> DensityMatrix:
    """Werner family: white noise mixed into the two-qubit singlet.

    Diagonal entries theta/3 and (3 - 2 theta)/6, inner off-diagonal
    entries (4 theta - 3)/6. Eigenvalues are {theta/3 (x3), 1 - theta},
    so the matrix is a state for every theta in [0, 1]; theta = 3/4
    gives the maximally mixed state.
    """
    _check_unit("theta", theta)
    a = theta / 3.0
    b = (3.0 - 2.0 * theta) / 6.0
    c = (4.0 * theta - 3.0) / 6.0
    m = np.array([
        [a, 0, 0, 0],
        [0, b, c, 0],
        [0, c, b, 0],
        [0, 0, 0, a],
    ], dtype=complex)
    return make_density(m)


def rho_theta_state(theta: float) -> DensityMatrix:
    """Two-block family: constant 1/4 diagonal, (2 theta - 1)/4 inside each block."""
    _check_unit("theta", theta)
    c = (2.0 * theta - 1.0) / 4.0
    m = np.array([
        [0.25, c, 0, 0],
        [c, 0.25, 0, 0],
        [0, 0, 0.25, c],
        [0, 0, c, 0.25],
    ], dtype=complex)
    return make_density(m)


def channel_E(p: float) -> KrausChannel:
    """Damping-style channel: E1 = diag(1, r, 1, r), E2 = diag(0, sqrt(p), 0, sqrt(p))
    with r = sqrt(1 - p). The zero operator at p = 0 is kept so the list
    length stays 2 across parameter sweeps."""
    _check_unit("p", p)
    r = math.sqrt(1.0 - p)
    sp = math.sqrt(p)
    e1 = np.diag([1.0, r, 1.0, r]).astype(complex)
    e2 = np.diag([0.0, sp, 0.0, sp]).astype(complex)
    return make_channel([e1, e2])


def channel_F(q: float) -> KrausChannel:
    """Companion channel: F1 = diag(sqrt(1-q), 1, sqrt(1-q), 1), F2 lowers
    within each two-dimensional block with amplitude sqrt(q)."""
    _check_unit("q", q)
    r = math.sqrt(1.0 - q)
    sq = math.sqrt(q)
    f1 = np.diag([r, 1.0, r, 1.0]).astype(complex)
    f2 = np.zeros((4, 4), dtype=complex)
    f2[1, 0] = sq
    f2[3, 2] = sq
    return make_channel([f1, f2])


def example_state(example_id: str, theta: float) -> DensityMatrix:
    if example_id == "werner":
        return werner_state(theta)
    if example_id == "rho_theta":
        return rho_theta_state(theta)
    raise ValueError(f"unknown example {example_id!r}; choose one of {EXAMPLE_IDS}")


def _checked_root(arg: float) -> float:
    """sqrt with a guard: arguments below -1e-12 indicate a transcription error."""
    if arg < -1e-12:
        raise NumericError(f"closed-form root argument is negative: {arg!r}")
    return math.sqrt(max(0.0, arg))


def example1_closed_forms(p: float, q: float) -> ClosedFormValues:
    """Closed-form surfaces of the werner family at theta = 1.

    The root argument of the thm3 surface is a product of two nonpositive
    factors, hence nonnegative throughout [0, 1]^2.
    """
    _check_unit("p", p)
    _check_unit("q", q)
    rp = math.sqrt(1.0 - p)
    rq = math.sqrt(1.0 - q)
    root_arg = ((10.0 * rp + 5.0 * p - 10.0)
                * (40.0 * (rq - 1.0) + 4.0 * q * (1.0 + 4.0 * rq) - 3.0 * q ** 2))
    thm3 = _checked_root(root_arg) / 72.0
    lb = 0.0
    lb1 = 5.0 / 72.0 * (rp - 1.0) ** 2 * (rq - 1.0) ** 2
    lb2 = 5.0 / 144.0 * ((rp - 1.0) ** 2 + p) ** 2
    return ClosedFormValues(thm3_closed=thm3, lb_closed=lb, lb1_closed=lb1,
                            lb2_closed=lb2)


def example2_closed_forms(p: float, q: float) -> ClosedFormValues:
    """Closed-form surfaces of the rho_theta family at theta = 0.

    Note: the lb1 surface here is a valid but tighter expression than the
    literal double-sum evaluated by ``lb1_eq14``; the two genuinely differ
    (e.g. 1/2 vs 1/8 at p = q = 1). Dual-evaluation consumers should treat
    the numeric value as the definitional one and report the difference.
    """
    _check_unit("p", p)
    _check_unit("q", q)
    rp = math.sqrt(1.0 - p)
    rq = math.sqrt(1.0 - q)
    root_arg = ((2.0 * rp + p - 2.0)
                * (1800.0 * (rq - 1.0) + 60.0 * q * (14.0 + rq) - q ** 2))
    thm3 = _checked_root(root_arg) / 128.0
    lb = q / 8.0 * (1.0 - rp)
    lb1 = 1.0 / 8.0 * (1.0 - rp) * (1.0 - rq + math.sqrt(p * q)) ** 2
    lb2 = 1.0 / 16.0 * ((1.0 - rp) ** 4 + p ** 2
                        + 2.0 * abs(p * (p - 2.0 + 2.0 * rp)
                                    + q * (q - 2.0 + 2.0 * rq)))
    return ClosedFormValues(thm3_closed=thm3, lb_closed=lb, lb1_closed=lb1,
                            lb2_closed=lb2)


def closed_forms(example_id: str, p: float, q: float) -> ClosedFormValues:
    """Closed-form surfaces of the named example (valid at its canonical theta)."""
    if example_id == "werner":
        return example1_closed_forms(p, q)
    if example_id == "rho_theta":
        return example2_closed_forms(p, q)
    raise ValueError(f"unknown example {example_id!r}; choose one of {EXAMPLE_IDS}")
