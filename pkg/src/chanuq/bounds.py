"""The catalog of uncertainty lower bounds.

Observable-level relations (Heisenberg, Schrodinger, Luo), their
generalizations to arbitrary operators (Dou-style symmetrized-bracket
bounds), two prior channel bounds on the u-measures (``lb_eq13``,
``lb1_eq14``), and the four channel relations ``thm1`` .. ``thm4``,
including the fine-grained single-basis-vector machinery behind
``thm3``. :func:`bound_report` evaluates everything for one
(state, channel, channel) triple and checks every slack.

Conventions shared by all bound evaluators:

* channels of unequal Kraus count are zero-padded to a common length N,
  which also fixes the 1/(4 N^2) prefactors;
* bound values that land in ``[-1e-12, 0)`` from rounding clamp to 0,
  anything more negative raises ``NumericError``;
* the anticommutator terms act on centered operators wherever a mixed
  state would otherwise pick up a spurious classical contribution (the
  commutator terms are centering-invariant, so raw operators appear
  there when that matches the printed form of the bound).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (BoundViolationError, DimensionMismatchError,
                     NotHermitianError, NumericError)
from .measures import MeasureSet, channel_measures, operator_u
from .objects import DensityMatrix, KrausChannel, center_operator, pad_channels

SLACK_TOL = 1e-9
_CLAMP_FLOOR = -1e-12


def _clamped(value: float, what: str) -> float:
    if value < _CLAMP_FLOOR:
        raise NumericError(f"{what} evaluated to {value!r}, beyond rounding tolerance")
    return max(value, 0.0)


def _require_hermitian_observable(m) -> np.ndarray:
    m = linalg.as_matrix(m)
    res = linalg.frob_norm(m - linalg.dagger(m))
    if res > 1e-10 * max(1.0, linalg.frob_norm(m)):
        raise NotHermitianError(res)
    return m


def _expect(rho: DensityMatrix, k: np.ndarray) -> complex:
    return complex(np.trace(rho.matrix @ k))


def _check_operator(rho: DensityMatrix, k) -> np.ndarray:
    k = linalg.as_matrix(k)
    if k.shape[0] != rho.dim:
        raise DimensionMismatchError(
            f"operator dimension {k.shape[0]} does not match state dimension {rho.dim}")
    return k


# ---------------------------------------------------------------------------
# observable- and operator-level relations
# ---------------------------------------------------------------------------

def heisenberg_bound(rho: DensityMatrix, a, b) -> float:
    """(1/4) |Tr(rho [A, B])|^2 for Hermitian observables A, B."""
    a = _require_hermitian_observable(_check_operator(rho, a))
    b = _require_hermitian_observable(_check_operator(rho, b))
    return 0.25 * abs(_expect(rho, linalg.commutator(a, b))) ** 2


def schrodinger_bound(rho: DensityMatrix, a, b) -> float:
    """Heisenberg term plus the centered anticommutator term."""
    a = _require_hermitian_observable(_check_operator(rho, a))
    b = _require_hermitian_observable(_check_operator(rho, b))
    a0 = center_operator(a, rho)
    b0 = center_operator(b, rho)
    comm_term = 0.25 * abs(_expect(rho, linalg.commutator(a, b))) ** 2
    anti_term = 0.25 * abs(_expect(rho, linalg.anticommutator(a0, b0))) ** 2
    return comm_term + anti_term


def luo_bound(rho: DensityMatrix, a, b) -> tuple[float, float]:
    """Luo's relation for the U-quantities of Hermitian observables.

    Returns ``(lhs, rhs)`` where ``lhs = U_rho(A) U_rho(B)`` and
    ``rhs = (1/4)|Tr(rho [A, B])|^2``, so callers can verify the
    inequality directly.
    """
    a = _require_hermitian_observable(_check_operator(rho, a))
    b = _require_hermitian_observable(_check_operator(rho, b))
    lhs = operator_u(rho, a) * operator_u(rho, b)
    rhs = 0.25 * abs(_expect(rho, linalg.commutator(a, b))) ** 2
    return lhs, rhs


def dou_bounds(rho: DensityMatrix, k, l) -> tuple[float, float, float]:
    """The three operator-level bounds for arbitrary (non-Hermitian) K, L.

    Returns ``(comm, brackets, u_comm)``:

    * ``comm``     -- (1/4)|Tr(rho [K, L])|^2, a bound on |V|(K)|V|(L);
    * ``brackets`` -- symmetrized commutator term plus the symmetrized
      anticommutator term of the *centered* operators, also bounding
      |V|(K)|V|(L) (the uncentered anticommutator version fails already
      for K = L = I on a mixed state);
    * ``u_comm``   -- the symmetrized commutator term alone, a bound
      on |U|(K)|U|(L).

    For Hermitian K, L these reduce to the Heisenberg, Schrodinger and
    Luo right-hand sides.
    """
    k = _check_operator(rho, k)
    l = _check_operator(rho, l)
    linalg.require_same_dim(k, l)
    k0 = center_operator(k, rho)
    l0 = center_operator(l, rho)
    comm = 0.25 * abs(_expect(rho, linalg.commutator(k, l))) ** 2
    sym_comm = 0.25 * abs(_expect(rho, linalg.sym_commutator(k, l))) ** 2
    sym_anti = 0.25 * abs(_expect(rho, linalg.sym_anticommutator(k0, l0))) ** 2
    return comm, sym_comm + sym_anti, sym_comm


# ---------------------------------------------------------------------------
# channel bounds
# ---------------------------------------------------------------------------

def thm1_bound(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel) -> float:
    """Larger of the commutator and centered-anticommutator trace sums,
    each with prefactor 1/(4 N^2), bounding v_sym(phi) * v_sym(psi)."""
    ops_e, ops_f, n = pad_channels(phi, psi)
    if phi.dim != rho.dim:
        raise DimensionMismatchError(
            f"channel dimension {phi.dim} does not match state dimension {rho.dim}")
    comm_sum = 0j
    anti_sum = 0j
    e0 = [center_operator(e, rho) for e in ops_e]
    f0 = [center_operator(f, rho) for f in ops_f]
    for i in range(n):
        for j in range(n):
            comm_sum += _expect(rho, linalg.commutator(ops_e[i], ops_f[j]))
            anti_sum += _expect(rho, linalg.anticommutator(e0[i], f0[j]))
    pref = 1.0 / (4.0 * n * n)
    return max(pref * abs(comm_sum) ** 2, pref * abs(anti_sum) ** 2)


def thm2_bound(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel) -> float:
    """Sum of the squared symmetrized-anticommutator and
    symmetrized-commutator trace sums over centered Kraus operators,
    with prefactor 1/(4 N^2)."""
    ops_e, ops_f, n = pad_channels(phi, psi)
    if phi.dim != rho.dim:
        raise DimensionMismatchError(
            f"channel dimension {phi.dim} does not match state dimension {rho.dim}")
    e0 = [center_operator(e, rho) for e in ops_e]
    f0 = [center_operator(f, rho) for f in ops_f]
    anti_sum = 0j
    comm_sum = 0j
    for i in range(n):
        for j in range(n):
            anti_sum += _expect(rho, linalg.sym_anticommutator(e0[i], f0[j]))
            comm_sum += _expect(rho, linalg.sym_commutator(e0[i], f0[j]))
    pref = 1.0 / (4.0 * n * n)
    return pref * (abs(anti_sum) ** 2 + abs(comm_sum) ** 2)


def lb_eq13(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel) -> float:
    """(1/4) sum_ij |Tr([F_j, E_i^dag] rho)|^2, bounding u(phi) * u(psi).

    The double sum runs over the native Kraus lists; no padding needed.
    """
    if phi.dim != psi.dim or phi.dim != rho.dim:
        raise DimensionMismatchError("state and channels must share one dimension")
    total = 0.0
    for e in phi.kraus_ops:
        e_dag = linalg.dagger(e)
        for f in psi.kraus_ops:
            total += abs(complex(np.trace(linalg.commutator(f, e_dag) @ rho.matrix))) ** 2
    return 0.25 * total


def lb1_eq14(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel) -> float:
    """(1/2) sum_ij |a_i * b_j|, bounding u(phi)^2 + u(psi)^2.

    The index pattern pairs position i of *both* Kraus lists inside the
    commutator inner product a_i = <[sqrt(rho), F_i], [sqrt(rho), E_i]>,
    and position j of both lists inside the anticommutator factor
    b_j = <{sqrt(rho), F_j}, {sqrt(rho), E_j}> - 4 <F_j^dag> <E_j>, so
    the (i, j) double sum multiplies an i-indexed factor by a j-indexed
    factor. Lists are zero-padded to a common length first.
    """
    ops_e, ops_f, n = pad_channels(phi, psi)
    if phi.dim != rho.dim:
        raise DimensionMismatchError(
            f"channel dimension {phi.dim} does not match state dimension {rho.dim}")
    s = rho.sqrt_matrix
    a = []
    b = []
    for e, f in zip(ops_e, ops_f):
        a.append(linalg.frob_inner(linalg.commutator(s, f), linalg.commutator(s, e)))
        b.append(linalg.frob_inner(linalg.anticommutator(s, f),
                                   linalg.anticommutator(s, e))
                 - 4.0 * _expect(rho, linalg.dagger(f)) * _expect(rho, e))
    return 0.5 * sum(abs(ai * bj) for ai in a for bj in b)


@dataclass(frozen=True)
class FineGrainedTerms:
    """Sums of the fine-grained Cauchy-Schwarz terms for one basis vector.

    ``i0`` and ``i0_tilde`` are the full products i_tilde(phi)*j_tilde(psi)
    and i_tilde(psi)*j_tilde(phi); ``i1 <= i0`` and ``i1_tilde <= i0_tilde``
    drop a nonnegative gap from the chosen basis-vector component.
    """

    i1: float
    i1_tilde: float
    i0: float
    i0_tilde: float
    basis_index: int


def fine_grained_terms(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel,
                       basis_index: int = 0) -> FineGrainedTerms:
    """Fine-grained terms built from single basis-vector columns.

    For basis vector |t>, each per-pair term replaces the product of the
    |t>-column masses of [sqrt(rho), E_i0] and {sqrt(rho), F_j0} by the
    squared overlap of those columns (a Cauchy-Schwarz improvement);
    the tilde terms swap the roles of the two channels and of the two
    bracket types.
    """
    if phi.dim != psi.dim or phi.dim != rho.dim:
        raise DimensionMismatchError("state and channels must share one dimension")
    if not 0 <= basis_index < rho.dim:
        raise IndexError(
            f"basis index {basis_index} out of range for dimension {rho.dim}")
    s = rho.sqrt_matrix
    t = basis_index

    e0 = [center_operator(e, rho) for e in phi.kraus_ops]
    f0 = [center_operator(f, rho) for f in psi.kraus_ops]
    comm_e = [linalg.commutator(s, e) for e in e0]
    anti_e = [linalg.anticommutator(s, e) for e in e0]
    comm_f = [linalg.commutator(s, f) for f in f0]
    anti_f = [linalg.anticommutator(s, f) for f in f0]

    i_phi = [0.5 * linalg.frob_norm(c) ** 2 for c in comm_e]
    j_phi = [0.5 * linalg.frob_norm(a) ** 2 for a in anti_e]
    i_psi = [0.5 * linalg.frob_norm(c) ** 2 for c in comm_f]
    j_psi = [0.5 * linalg.frob_norm(a) ** 2 for a in anti_f]

    def column_gap(x: np.ndarray, y: np.ndarray) -> float:
        u = x[:, t]
        w = y[:, t]
        return 0.25 * (float(np.vdot(u, u).real) * float(np.vdot(w, w).real)
                       - abs(complex(np.vdot(u, w))) ** 2)

    i1 = 0.0
    for i, ce in enumerate(comm_e):
        for j, af in enumerate(anti_f):
            i1 += i_phi[i] * j_psi[j] - column_gap(ce, af)
    i1_tilde = 0.0
    for j, cf in enumerate(comm_f):
        for i, ae in enumerate(anti_e):
            i1_tilde += i_psi[j] * j_phi[i] - column_gap(cf, ae)

    i0 = sum(i_phi) * sum(j_psi)
    i0_tilde = sum(i_psi) * sum(j_phi)
    return FineGrainedTerms(i1=_clamped(i1, "fine-grained term"),
                            i1_tilde=_clamped(i1_tilde, "fine-grained tilde term"),
                            i0=float(i0), i0_tilde=float(i0_tilde),
                            basis_index=basis_index)


def thm3_bound(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel,
               basis_index: int = 0) -> float:
    """sqrt(i1 * i1_tilde), bounding u(phi) * u(psi)."""
    terms = fine_grained_terms(rho, phi, psi, basis_index)
    return float(np.sqrt(max(terms.i1 * terms.i1_tilde, 0.0)))


def thm4_bound(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel) -> float:
    """Bound on u(phi)^2 + u(psi)^2 from one Cauchy-Schwarz step.

    The psi part pairs the commutator of each F_i with the anticommutator
    of each F_j (raw operators; the commutator side makes the centering
    correction vanish). The phi part keeps the exact product of commutator
    and anticommutator masses, the latter written with the explicit
    -4|Tr(rho E_j)|^2 centering correction.
    """
    ops_e, ops_f, n = pad_channels(phi, psi)
    if phi.dim != rho.dim:
        raise DimensionMismatchError(
            f"channel dimension {phi.dim} does not match state dimension {rho.dim}")
    s = rho.sqrt_matrix
    f_term = 0.0
    for fi in ops_f:
        ci = linalg.commutator(s, fi)
        for fj in ops_f:
            aj = linalg.anticommutator(s, fj)
            f_term += abs(linalg.frob_inner(ci, aj)) ** 2
    e_comm = sum(linalg.frob_norm(linalg.commutator(s, e)) ** 2 for e in ops_e)
    e_anti = sum(linalg.frob_norm(linalg.anticommutator(s, e)) ** 2
                 - 4.0 * abs(_expect(rho, e)) ** 2 for e in ops_e)
    return _clamped(0.25 * (f_term + e_comm * e_anti), "thm4 bound")


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    """All left-hand sides, all bounds and all slacks for one triple."""

    lhs_product_v: float
    lhs_product_u: float
    lhs_sum_u2: float
    thm1: float
    thm2: float
    thm3: float
    thm4: float
    lb_eq13: float
    lb1_eq14: float
    n_common: int
    slacks: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "lhs_product_v": self.lhs_product_v,
            "lhs_product_u": self.lhs_product_u,
            "lhs_sum_u2": self.lhs_sum_u2,
            "thm1": self.thm1,
            "thm2": self.thm2,
            "thm3": self.thm3,
            "thm4": self.thm4,
            "lb_eq13": self.lb_eq13,
            "lb1_eq14": self.lb1_eq14,
            "n_common": self.n_common,
            "slacks": dict(self.slacks),
        }


def bound_report(rho: DensityMatrix, phi: KrausChannel, psi: KrausChannel,
                 basis_index: int = 0, check: bool = True,
                 measures: tuple[MeasureSet, MeasureSet] | None = None) -> BoundReport:
    """Evaluate every bound against its left-hand side and record slacks.

    With ``check=True`` (the default) a slack below ``-1e-9`` raises
    ``BoundViolationError`` naming the offending bound; the randomized
    verification harness passes ``check=False`` and inspects the slacks
    itself.
    """
    if measures is None:
        measures = (channel_measures(rho, phi), channel_measures(rho, psi))
    m_phi, m_psi = measures
    lhs_product_v = m_phi.v_sym * m_psi.v_sym
    lhs_product_u = m_phi.u_abs * m_psi.u_abs
    lhs_sum_u2 = m_phi.u_abs ** 2 + m_psi.u_abs ** 2

    _, _, n_common = pad_channels(phi, psi)
    values = {
        "thm1_bound": (thm1_bound(rho, phi, psi), lhs_product_v),
        "thm2_bound": (thm2_bound(rho, phi, psi), lhs_product_v),
        "thm3_bound": (thm3_bound(rho, phi, psi, basis_index), lhs_product_u),
        "lb_eq13": (lb_eq13(rho, phi, psi), lhs_product_u),
        "thm4_bound": (thm4_bound(rho, phi, psi), lhs_sum_u2),
        "lb1_eq14": (lb1_eq14(rho, phi, psi), lhs_sum_u2),
    }
    slacks = {name: lhs - bound for name, (bound, lhs) in values.items()}
    if check:
        for name, (bound, lhs) in values.items():
            if slacks[name] < -SLACK_TOL:
                raise BoundViolationError(name, lhs, bound)
    return BoundReport(
        lhs_product_v=float(lhs_product_v),
        lhs_product_u=float(lhs_product_u),
        lhs_sum_u2=float(lhs_sum_u2),
        thm1=float(values["thm1_bound"][0]),
        thm2=float(values["thm2_bound"][0]),
        thm3=float(values["thm3_bound"][0]),
        thm4=float(values["thm4_bound"][0]),
        lb_eq13=float(values["lb_eq13"][0]),
        lb1_eq14=float(values["lb1_eq14"][0]),
        n_common=n_common,
        slacks={name: float(s) for name, s in slacks.items()},
    )
