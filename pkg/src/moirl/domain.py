"""Core data types: instances, expert trajectories, feasible weight sets.

An instance is a decision situation: a finite set of candidate action
vectors in feature space.  A trajectory records which action the expert
actually took on one instance.  All types are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Union

import numpy as np

__all__ = [
    "Instance",
    "Trajectory",
    "TrajectorySet",
    "Box",
    "Ball",
    "Simplex",
    "FeasibleSet",
    "make_instance",
    "canonical_actions",
    "as_weights",
    "validate",
]


def as_weights(v, dim: int | None = None) -> np.ndarray:
    """Coerce ``v`` to a finite 1-D float vector, optionally of length ``dim``."""
    w = np.asarray(v, dtype=float)
    if w.ndim != 1 or w.size < 1:
        raise ValueError("weights must be a 1-D vector with at least one entry")
    if not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite (no NaN/Inf)")
    if dim is not None and w.size != dim:
        raise ValueError(f"weights have dimension {w.size}, expected {dim}")
    return w


def canonical_actions(actions) -> np.ndarray:
    """Deduplicate and lexicographically sort a list of action vectors.

    The canonical order makes serialization byte-stable and loading
    idempotent; duplicates are dropped with set semantics.
    """
    arr = np.asarray(actions, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ValueError("actions must be a nonempty list of equal-length vectors")
    if not np.all(np.isfinite(arr)):
        raise ValueError("action vectors must be finite")
    arr = np.unique(arr, axis=0)  # sorts rows lexicographically and dedups
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Instance:
    """A state together with its finite set of feasible action vectors."""

    id: str
    actions: np.ndarray  # (n_actions, d), canonical order, read-only
    state: Any = None

    @property
    def dim(self) -> int:
        return self.actions.shape[1]


def make_instance(id: str, actions, state: Any = None) -> Instance:
    return Instance(id=id, actions=canonical_actions(actions), state=state)


@dataclass(frozen=True)
class Trajectory:
    """One expert decision: the action taken on the referenced instance."""

    instance_id: str
    action: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.action, dtype=float)
        if a.ndim != 1:
            raise ValueError("trajectory action must be a 1-D vector")
        a.setflags(write=False)
        object.__setattr__(self, "action", a)


@dataclass(frozen=True)
class TrajectorySet:
    """A nonempty collection of expert decisions (the empirical sample)."""

    trajectories: tuple[Trajectory, ...]

    def __post_init__(self):
        trajs = tuple(self.trajectories)
        if len(trajs) < 1:
            raise ValueError("trajectory set must contain at least one trajectory")
        object.__setattr__(self, "trajectories", trajs)

    def __len__(self) -> int:
        return len(self.trajectories)

    def __iter__(self):
        return iter(self.trajectories)


def validate(ts: TrajectorySet, instances: Mapping[str, Instance]) -> list[str]:
    """Check a trajectory set against its instances; returns diagnostics.

    Returns an empty list iff every trajectory references a known
    instance, dimensions agree, and each expert action is exactly one of
    the instance's actions.  Never raises.
    """
    violations: list[str] = []
    for n, traj in enumerate(ts):
        inst = instances.get(traj.instance_id)
        if inst is None:
            violations.append(
                f"trajectory {n}: unknown instance id {traj.instance_id!r}"
            )
            continue
        if traj.action.shape[0] != inst.dim:
            violations.append(
                f"trajectory {n}: action dimension {traj.action.shape[0]} "
                f"!= instance dimension {inst.dim}"
            )
            continue
        if not np.any(np.all(inst.actions == traj.action, axis=1)):
            violations.append(
                f"trajectory {n}: action {traj.action.tolist()} is not in the "
                f"action set of instance {traj.instance_id!r}"
            )
    return violations


@dataclass(frozen=True, eq=False)
class Box:
    """Axis-aligned box {v : lo <= v <= hi componentwise}."""

    lo: np.ndarray
    hi: np.ndarray

    def __eq__(self, other):
        return (
            isinstance(other, Box)
            and np.array_equal(self.lo, other.lo)
            and np.array_equal(self.hi, other.hi)
        )

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float)
        hi = np.asarray(self.hi, dtype=float)
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ValueError("box bounds must be 1-D vectors of equal length")
        if np.any(lo > hi):
            raise ValueError("box requires lo <= hi componentwise")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def dim(self) -> int:
        return self.lo.shape[0]


@dataclass(frozen=True, eq=False)
class Ball:
    """Euclidean ball {v : ||v - center|| <= radius}."""

    center: np.ndarray
    radius: float

    def __eq__(self, other):
        return (
            isinstance(other, Ball)
            and np.array_equal(self.center, other.center)
            and self.radius == other.radius
        )

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        if c.ndim != 1:
            raise ValueError("ball center must be a 1-D vector")
        if not self.radius > 0:
            raise ValueError("ball radius must be positive")
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self) -> int:
        return self.center.shape[0]


@dataclass(frozen=True)
class Simplex:
    """Probability simplex {v >= 0 : sum v = 1} in the given dimension."""

    dimension: int

    def __post_init__(self):
        if int(self.dimension) < 1:
            raise ValueError("simplex dimension must be >= 1")
        object.__setattr__(self, "dimension", int(self.dimension))

    @property
    def dim(self) -> int:
        return self.dimension


FeasibleSet = Union[Box, Ball, Simplex]
