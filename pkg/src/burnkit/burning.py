"""Exact semantics of the discrete burning process.

A sequence of sources ``(b_1, ..., b_k)`` burns a graph step by step: at step
``t`` the fire spreads from every burned vertex to its neighbors while ``b_t``
is ignited, provided ``b_t`` was still unburned at the end of step ``t-1``.
A source reached by older fire exactly at its own step is a valid placement;
strictly earlier is not.

Two execution engines are kept permanently: ``simulate`` evaluates the
closed-form ``min_i (i + d(b_i, v))`` over per-source BFS distances and also
computes the responsible-source sets, while ``frontier_burn_times`` runs a
literal event-driven frontier expansion.  They must agree; the test suite
cross-checks them on random instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Graph, UnknownVertexError

_UNREACHED = 1 << 60


class BurnError(Exception):
    """Base class for burning-process errors."""


class InvalidSequenceError(BurnError):
    """Some source was already burned strictly before its own step."""

    def __init__(self, step: int, source: str, burned_step: int, cause: str | None = None):
        self.step = step
        self.source = source
        self.burned_step = burned_step
        self.cause = cause
        detail = f" by fire from {cause!r}" if cause else ""
        super().__init__(
            f"source {source!r} placed at step {step} was already burned "
            f"at step {burned_step}{detail}"
        )


class IncompleteScheduleError(BurnError):
    """Operation requires a schedule with no unburned vertices."""


@dataclass(frozen=True)
class BurningSequence:
    """Ordered burning sources; labels are distinct."""

    sources: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.sources)) != len(self.sources):
            raise ValueError("burning sequence labels must be distinct")

    @classmethod
    def of(cls, sources: Iterable[str]) -> "BurningSequence":
        return cls(tuple(sources))

    def __len__(self) -> int:
        return len(self.sources)

    def __iter__(self) -> Iterator[str]:
        return iter(self.sources)

    def __getitem__(self, i: int) -> str:
        return self.sources[i]


@dataclass(frozen=True)
class BurningSchedule:
    """Outcome of simulating a burning sequence.

    ``burn_time`` maps each burned vertex to its step in ``[1, k]``; vertices
    missing from it are unburned.  ``responsible[v]`` is the set of sources
    whose fire reaches ``v`` exactly at its burn time (the source itself
    included when it ignites in place).
    """

    k: int
    burn_time: dict[str, int]
    responsible: dict[str, frozenset[str]]
    unburned: frozenset[str]

    @property
    def complete(self) -> bool:
        return not self.unburned


def _resolve_sources(g: Graph, sequence: BurningSequence | Sequence[str]) -> list[str]:
    sources = list(sequence)
    if not sources:
        raise ValueError("burning sequence is empty")
    for b in sources:
        if b not in g:
            raise UnknownVertexError(f"unknown vertex {b!r} in burning sequence")
    return sources


def frontier_burn_times(
    g: Graph, sequence: BurningSequence | Sequence[str]
) -> dict[str, int]:
    """Event-driven engine: literal step-by-step frontier expansion.

    Returns the map vertex -> burn step for all vertices burned within
    ``len(sequence)`` steps.  Raises :class:`InvalidSequenceError` exactly when
    a source is burned strictly before its own step.
    """
    sources = _resolve_sources(g, sequence)
    view = g.indexed()
    idx = view.index
    adj = view.adj
    burned_at: dict[int, int] = {}
    placed_at: dict[int, int] = {}
    frontier: list[int] = []
    for t, label in enumerate(sources, start=1):
        b = idx[label]
        new: list[int] = []
        for u in frontier:
            for w in adj[u]:
                if w not in burned_at:
                    burned_at[w] = t
                    new.append(w)
        prior = burned_at.get(b)
        if prior is not None and prior < t:
            cause = sources[placed_at[b] - 1] if b in placed_at else None
            raise InvalidSequenceError(t, label, prior, cause)
        if prior is None:
            burned_at[b] = t
            new.append(b)
        placed_at[b] = t
        frontier = new
    return {view.labels[i]: t for i, t in burned_at.items()}


def simulate(g: Graph, sequence: BurningSequence | Sequence[str]) -> BurningSchedule:
    """Closed-form engine: burn times and responsible sets from per-source BFS."""
    sources = _resolve_sources(g, sequence)
    view = g.indexed()
    idx = view.index
    k = len(sources)
    n = len(view.labels)
    src_idx = [idx[b] for b in sources]
    pos = {b: i for i, b in enumerate(src_idx, start=1)}

    best = [_UNREACHED] * n
    resp: list[list[str] | None] = [None] * n
    for i, (label, s) in enumerate(zip(sources, src_idx), start=1):
        dist = view.bfs(s)
        for v in range(n):
            d = dist[v]
            if d < 0:
                continue
            t = i + d
            if t < best[v]:
                best[v] = t
                resp[v] = [label]
            elif t == best[v]:
                resp[v].append(label)
            # validity: fire arriving at a later source strictly before its step
            j = pos.get(v)
            if j is not None and j > i and t < j:
                raise InvalidSequenceError(j, sources[j - 1], t, label)

    burn_time: dict[str, int] = {}
    responsible: dict[str, frozenset[str]] = {}
    unburned: list[str] = []
    for v in range(n):
        label = view.labels[v]
        if best[v] <= k:
            burn_time[label] = best[v]
            responsible[label] = frozenset(resp[v])
        else:
            unburned.append(label)
    return BurningSchedule(
        k=k,
        burn_time=burn_time,
        responsible=responsible,
        unburned=frozenset(unburned),
    )


def is_burning_sequence(g: Graph, sequence: BurningSequence | Sequence[str]) -> bool:
    """True iff the sequence is valid and burns every vertex by step ``len(sequence)``."""
    sources = list(sequence)
    if len(set(sources)) != len(sources):
        return False
    try:
        times = frontier_burn_times(g, sources)
    except (InvalidSequenceError, UnknownVertexError, ValueError):
        return False
    return len(times) == g.vertex_count


def last_step_set(schedule: BurningSchedule) -> frozenset[str]:
    """Vertices burned in the final step (the set BL)."""
    if not schedule.complete:
        raise IncompleteScheduleError("schedule left vertices unburned")
    return frozenset(v for v, t in schedule.burn_time.items() if t == schedule.k)


def uniquely_burned_set(schedule: BurningSchedule) -> frozenset[str]:
    """Vertices burned by exactly one responsible source (the set UB)."""
    if not schedule.complete:
        raise IncompleteScheduleError("schedule left vertices unburned")
    return frozenset(v for v, s in schedule.responsible.items() if len(s) == 1)


def read_sequence(text: str) -> BurningSequence:
    """Parse sequence text: one vertex label per line, '#' comments allowed."""
    sources = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        sources.append(stripped)
    return BurningSequence.of(sources)


def write_sequence(sequence: BurningSequence | Sequence[str]) -> str:
    return "\n".join(sequence) + "\n"
