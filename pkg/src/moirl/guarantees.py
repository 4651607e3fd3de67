"""Executable checks of the imitation guarantees.

Given ground-truth weights that generated the expert data, these report
per-decision reward gaps, locate the iteration at which a run's best
iterate meets a reward-imitation budget, and test the three-way
equivalence between a vanishing subgradient, identical actions, and zero
Wasserstein distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from .domain import Instance, TrajectorySet, as_weights, validate
from .learner import RunLog
from .solvers import solve
from .wasserstein import w1_exact

__all__ = [
    "GuaranteeViolation",
    "GapReport",
    "EquivalenceReport",
    "reward_gap_report",
    "equivalence_check",
    "corollary_check",
]

# Absolute slack for float dust in exact-statement checks.
DUST = 1e-12


class GuaranteeViolation(AssertionError):
    """A guarantee that should hold on well-formed data failed."""


def _check_expert_consistent(phi0, data, instances) -> list[Instance]:
    problems = validate(data, instances)
    if problems:
        raise ValueError("invalid trajectory data: " + "; ".join(problems))
    insts = [instances[t.instance_id] for t in data]
    w0 = as_weights(phi0, insts[0].dim)
    for n, traj in enumerate(data):
        chosen = solve(w0, insts[n], tie_tol=0.0).chosen
        if not np.array_equal(chosen, traj.action):
            raise GuaranteeViolation(
                f"expert action {n} is not the solver output for the given "
                f"ground-truth weights: got {traj.action.tolist()}, "
                f"solver returns {chosen.tolist()}"
            )
    return insts


@dataclass(frozen=True)
class GapReport:
    """Per-decision reward gaps of candidate weights vs the ground truth."""

    gaps: np.ndarray  # (N,) each >= 0 up to dust
    objective: float  # mean of gaps
    n: int

    def within_budget(self, eps: float) -> bool:
        """True iff every gap is below eps * N (the reward-imitation bound)."""
        return bool(np.all(self.gaps < eps * self.n + DUST))


def reward_gap_report(
    phi, phi0, data: TrajectorySet, instances: Mapping[str, Instance],
    tie_tol: float = 0.0,
) -> GapReport:
    """Gap, per decision, between the reward phi gives its own optimal
    action and the reward it gives the expert's action.

    Requires the expert data to be generated by the solver under
    ``phi0``; each gap is nonnegative and their mean is the training
    objective at ``phi``.
    """
    insts = _check_expert_consistent(phi0, data, instances)
    w = as_weights(phi, insts[0].dim)
    gaps = np.array(
        [
            float(w @ solve(w, insts[n], tie_tol).chosen - w @ traj.action)
            for n, traj in enumerate(data)
        ]
    )
    if np.any(gaps < -DUST):
        worst = int(np.argmin(gaps))
        raise GuaranteeViolation(
            f"negative reward gap {gaps[worst]} at decision {worst}; "
            "expert action beats the solver under its own weights"
        )
    return GapReport(gaps=gaps, objective=float(gaps.mean()), n=len(data))


@dataclass(frozen=True)
class EquivalenceReport:
    """Independent evaluations of the three equivalent completion criteria."""

    subgrad_zero: bool  # sum of per-decision action differences is exactly 0
    actions_equal: bool  # solver output matches the expert on every decision
    w1_zero: bool  # exact W1 between the two action distributions is 0

    @property
    def unanimous(self) -> bool:
        return self.subgrad_zero == self.actions_equal == self.w1_zero


def equivalence_check(
    phi, phi0, data: TrajectorySet, instances: Mapping[str, Instance]
) -> EquivalenceReport:
    """Evaluate the three completion criteria independently at ``phi``.

    Runs with exact tie-breaking (tie_tol = 0); meaningful on instances
    whose scores are exact in floating point.
    """
    insts = _check_expert_consistent(phi0, data, instances)
    w = as_weights(phi, insts[0].dim)
    w0 = as_weights(phi0, insts[0].dim)
    learner = np.stack([solve(w, inst, tie_tol=0.0).chosen for inst in insts])
    truth = np.stack([solve(w0, inst, tie_tol=0.0).chosen for inst in insts])
    return EquivalenceReport(
        subgrad_zero=bool(np.all((learner - truth).sum(axis=0) == 0.0)),
        actions_equal=bool(np.all(learner == truth)),
        w1_zero=w1_exact(learner, truth) == 0.0,
    )


def corollary_check(
    log: RunLog,
    phi0,
    data: TrajectorySet,
    instances: Mapping[str, Instance],
    eps: float,
) -> Optional[int]:
    """First iteration whose best-so-far objective drops below ``eps``.

    At that best iterate, asserts every per-decision reward gap lies in
    [0, eps * N).  Returns the iteration index, or None if the run never
    reaches the budget.
    """
    if not eps > 0:
        return None
    best_trace = log.prefix_best()
    hits = np.nonzero(best_trace < eps)[0]
    if hits.size == 0:
        return None
    k = int(log.iterations[hits[0]])
    phi_best = log.best_weights_at(k)
    report = reward_gap_report(phi_best, phi0, data, instances, tie_tol=0.0)
    if not report.within_budget(eps):
        raise GuaranteeViolation(
            f"reward gap exceeds eps*N at iteration {k}: "
            f"max gap {report.gaps.max()}, budget {eps * report.n}"
        )
    return k
