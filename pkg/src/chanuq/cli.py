"""Command-line front end.

Subcommands: ``compute`` (bounds for user-supplied JSON objects),
``sweep`` (example grid sweep to CSV), ``verify`` (randomized bound
verification), ``example`` (numeric vs closed-form values at one point).

Exit codes: 0 ok, 2 parse/usage, 3 validation, 4 dimension mismatch,
5 verification failure. All floats are printed with 17 significant
digits so output is byte-deterministic and round-trips exactly.
"""

from __future__ import annotations

import functools
import json
import sys
from dataclasses import dataclass

import click
import numpy as np

from .bounds import bound_report
from .ensembles import BOUND_NAMES, EnsembleConfig, VerificationReport, verify_suite
from .errors import (BoundViolationError, ChanuqError, DimensionMismatchError,
                     NumericError, SchemaError, ValidationError)
from .examples import (CLOSED_FORM_THETA, EXAMPLE_IDS, channel_E, channel_F,
                       closed_forms, example_state)
from .measures import channel_measures
from .objects import channel_from_json, state_from_json

EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_DIMENSION = 4
EXIT_VERIFICATION = 5


def _fmt(x: float) -> str:
    # adding 0.0 folds IEEE negative zero into plain zero
    return format(float(x) + 0.0, ".17g")


def _dumps(obj, indent: int = 0) -> str:
    """JSON serialization with 17-significant-digit floats and stable key order."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(f"{inner}{json.dumps(k)}: {_dumps(v, indent + 1)}"
                           for k, v in obj.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{inner}{_dumps(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    return json.dumps(obj)


def _echo_json(obj) -> None:
    click.echo(_dumps(obj))


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (SchemaError, json.JSONDecodeError) as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except IndexError as exc:
            click.echo(f"parameter error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except ValidationError as exc:
            click.echo(f"validation error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)
        except DimensionMismatchError as exc:
            click.echo(f"dimension error: {exc}", err=True)
            sys.exit(EXIT_DIMENSION)
        except (BoundViolationError, NumericError) as exc:
            click.echo(f"verification failure: {exc}", err=True)
            sys.exit(EXIT_VERIFICATION)
        except ChanuqError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)
        except OSError as exc:
            click.echo(f"io error: {exc}", err=True)
            sys.exit(1)
    return wrapper


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _unit_interval(ctx, param, value):
    if value is not None and not 0.0 <= value <= 1.0:
        raise click.BadParameter("must lie in [0, 1]")
    return value


@click.group()
def cli():
    """Uncertainty measures and lower bounds for quantum channels."""


@cli.command()
@click.option("--state", required=True, type=click.Path(exists=True, dir_okay=False),
              help="JSON file holding the density matrix.")
@click.option("--channel-a", required=True, type=click.Path(exists=True, dir_okay=False),
              help="JSON file holding the first channel's Kraus operators.")
@click.option("--channel-b", required=True, type=click.Path(exists=True, dir_okay=False),
              help="JSON file holding the second channel's Kraus operators.")
@click.option("--basis-index", default=0, show_default=True, type=int,
              help="Basis vector used by the fine-grained bound.")
@_handle_errors
def compute(state, channel_a, channel_b, basis_index):
    """Evaluate all bounds for a (state, channel, channel) triple."""
    rho = state_from_json(_load_json(state))
    phi = channel_from_json(_load_json(channel_a))
    psi = channel_from_json(_load_json(channel_b))
    report = bound_report(rho, phi, psi, basis_index=basis_index)
    _echo_json(report.to_dict())


SWEEP_COLUMNS = ("p", "q", "u_phi", "u_psi", "product_u", "sum_u2",
                 "thm1", "thm2", "thm3", "lb_eq13", "lb1_eq14", "thm4",
                 "closed_thm3", "closed_lb", "closed_lb1", "closed_lb2")


@dataclass(frozen=True)
class SweepSpec:
    """Parameters of one example grid sweep."""

    example_id: str
    theta: float
    grid_steps: int
    basis_index: int
    output_path: str

    def __post_init__(self):
        if self.grid_steps < 2:
            raise ValueError(f"grid_steps must be >= 2, got {self.grid_steps}")


def run_sweep(spec: SweepSpec) -> int:
    """Evaluate the grid of ``spec`` and write the CSV; returns the row count.

    The closed_* columns are filled only when theta equals the canonical
    value of the example's closed-form surfaces; otherwise they stay empty.
    """
    rho = example_state(spec.example_id, spec.theta)
    grid = np.linspace(0.0, 1.0, spec.grid_steps)
    with_closed = spec.theta == CLOSED_FORM_THETA[spec.example_id]
    channels_f = [channel_F(float(q)) for q in grid]
    lines = [",".join(SWEEP_COLUMNS)]
    for p in grid:
        phi = channel_E(float(p))
        m_phi = channel_measures(rho, phi)
        for q, psi in zip(grid, channels_f):
            m_psi = channel_measures(rho, psi)
            report = bound_report(rho, phi, psi, basis_index=spec.basis_index,
                                  measures=(m_phi, m_psi))
            row = [_fmt(p), _fmt(q), _fmt(m_phi.u_abs), _fmt(m_psi.u_abs),
                   _fmt(report.lhs_product_u), _fmt(report.lhs_sum_u2),
                   _fmt(report.thm1), _fmt(report.thm2), _fmt(report.thm3),
                   _fmt(report.lb_eq13), _fmt(report.lb1_eq14), _fmt(report.thm4)]
            if with_closed:
                closed = closed_forms(spec.example_id, float(p), float(q))
                row += [_fmt(closed.thm3_closed), _fmt(closed.lb_closed),
                        _fmt(closed.lb1_closed), _fmt(closed.lb2_closed)]
            else:
                row += ["", "", "", ""]
            lines.append(",".join(row))
    with open(spec.output_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(lines) - 1


@cli.command()
@click.option("--example", "example_id", required=True,
              type=click.Choice(EXAMPLE_IDS), help="Built-in example family.")
@click.option("--theta", required=True, type=float, callback=_unit_interval,
              help="State parameter in [0, 1].")
@click.option("--grid-steps", default=21, show_default=True, type=int,
              help="Number of grid points per axis (>= 2).")
@click.option("--basis-index", default=0, show_default=True, type=int)
@click.option("--out", required=True, type=click.Path(dir_okay=False, writable=True),
              help="Output CSV path.")
@_handle_errors
def sweep(example_id, theta, grid_steps, basis_index, out):
    """Sweep the (p, q) grid of a built-in example and write a CSV.

    The closed_* columns are filled only when theta equals the canonical
    value of the example's closed-form surfaces (1 for werner, 0 for
    rho_theta); otherwise they are left empty.
    """
    try:
        spec = SweepSpec(example_id=example_id, theta=theta, grid_steps=grid_steps,
                         basis_index=basis_index, output_path=out)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc
    rows = run_sweep(spec)
    click.echo(f"wrote {rows} rows to {out}")


def _merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    merged = VerificationReport(
        trials_run=sum(r.trials_run for r in reports),
        violations=[v for r in reports for v in r.violations],
        min_slack_per_bound={
            name: min(r.min_slack_per_bound[name] for r in reports)
            for name in BOUND_NAMES
        },
        elapsed=sum(r.elapsed for r in reports),
    )
    return merged


@cli.command()
@click.option("--dim", "dims", multiple=True, type=click.IntRange(2, 8),
              default=(2, 3, 4), show_default=True,
              help="Hilbert-space dimension; repeat to sweep several.")
@click.option("--kraus", "kraus_counts", multiple=True, type=click.IntRange(min=1),
              default=(1, 2, 3), show_default=True,
              help="Kraus-operator count; repeat to sweep several.")
@click.option("--trials", default=100, show_default=True, type=click.IntRange(min=1),
              help="Trials per (dim, kraus) combination.")
@click.option("--seed", default=2024, show_default=True, type=int)
@click.option("--self-test", is_flag=True,
              help="Inflate one bound tenfold to confirm violations are detected.")
@_handle_errors
def verify(dims, kraus_counts, trials, seed, self_test):
    """Run the randomized bound-verification suite; nonzero exit on violation."""
    broken = "thm1_bound" if self_test else None
    reports = []
    for dim in dims:
        for kraus_count in kraus_counts:
            config = EnsembleConfig(dim=dim, kraus_count=kraus_count,
                                    rank=dim, seed=seed, trials=trials)
            reports.append(verify_suite(config, broken_bound=broken))
    merged = _merge_reports(reports)
    _echo_json(merged.to_dict())
    if merged.violations:
        sys.exit(EXIT_VERIFICATION)


def _measures_dict(m) -> dict:
    return {"v_sym": m.v_sym, "i_tilde": m.i_tilde, "j_tilde": m.j_tilde,
            "c_abs": m.c_abs, "u_abs": m.u_abs}


@cli.command()
@click.option("--example", "example_id", required=True, type=click.Choice(EXAMPLE_IDS))
@click.option("--theta", required=True, type=float, callback=_unit_interval)
@click.option("--p", "p", required=True, type=float, callback=_unit_interval)
@click.option("--q", "q", required=True, type=float, callback=_unit_interval)
@click.option("--basis-index", default=0, show_default=True, type=int)
@_handle_errors
def example(example_id, theta, p, q, basis_index):
    """Numeric bounds and closed-form values, side by side, at one point.

    The closed-form block (and the difference block) is null unless theta
    equals the canonical value of the example's closed-form surfaces.
    """
    rho = example_state(example_id, theta)
    phi = channel_E(p)
    psi = channel_F(q)
    m_phi = channel_measures(rho, phi)
    m_psi = channel_measures(rho, psi)
    report = bound_report(rho, phi, psi, basis_index=basis_index,
                          measures=(m_phi, m_psi))
    doc = {
        "example": example_id,
        "theta": theta,
        "p": p,
        "q": q,
        "basis_index": basis_index,
        "u_phi": m_phi.u_abs,
        "u_psi": m_psi.u_abs,
        "measures_phi": _measures_dict(m_phi),
        "measures_psi": _measures_dict(m_psi),
        "report": report.to_dict(),
    }
    if theta == CLOSED_FORM_THETA[example_id]:
        closed = closed_forms(example_id, p, q)
        doc["closed"] = closed.to_dict()
        doc["abs_diff"] = {
            "thm3": abs(report.thm3 - closed.thm3_closed),
            "lb_eq13": abs(report.lb_eq13 - closed.lb_closed),
            "lb1_eq14": abs(report.lb1_eq14 - closed.lb1_closed),
            "thm4": abs(report.thm4 - closed.lb2_closed),
        }
    else:
        doc["closed"] = None
        doc["abs_diff"] = None
    _echo_json(doc)


def main():
    cli()


if __name__ == "__main__":
    main()
