"""Vertex-cover-to-burning reduction pipeline.

Stages: a connected cubic graph G is double-subdivided into G' (one edge
replaced by a path p-x-y-q), then every edge of G' becomes a BTP-gadget and a
Y-gadget plus C-gadget annexe hangs off x and y, yielding a connected cubic
graph H whose burning number equals beta(G') + cn' + 3.

Label scheme (frozen; audits rely on it being prefix-exact):
  core vertices of G'      g:<label>
  BTP for edge (u, v)      btp:<u>:<v>:bt:<side>:<level>:<index>
                           btp:<u>:<v>:t:<i>:<column>:<pos>
  Y-gadget                 y:z, y:px:a1, ...
  C-gadget                 c:p<i>:a<j>, c:tail:v<j>, c:vm2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .burning import (
    BurningSchedule,
    BurningSequence,
    InvalidSequenceError,
    is_burning_sequence,
    last_step_set,
    simulate,
    uniquely_burned_set,
)
from .gadgets import Landmark, _btp_parts, _c_parts, _y_parts, check_btp_inequalities
from .graph import Graph, is_connected, is_regular


class ReductionError(Exception):
    pass


class EdgeNotFoundError(ReductionError):
    pass


class NotCubicError(ReductionError):
    pass


class NotConnectedError(ReductionError):
    pass


class NotACoverError(ReductionError):
    def __init__(self, uncovered: list[tuple[str, str]]):
        self.uncovered = tuple(uncovered)
        super().__init__(f"{len(uncovered)} edges uncovered, e.g. {uncovered[0]}")


class MissingXYError(ReductionError):
    """The supplied cover contains neither subdivision vertex."""


class SequenceTooShortError(ReductionError):
    pass


class NotABurningSequenceError(ReductionError):
    pass


class OwnersNotACoverError(ReductionError):
    """A valid threshold-length sequence whose Owners set misses edges.

    This would contradict the backward direction of the reduction; it is
    surfaced loudly and never silently repaired.
    """

    def __init__(self, owners: frozenset[str], unrepresented: list[tuple[str, str]]):
        self.owners = owners
        self.unrepresented = tuple(unrepresented)
        super().__init__(
            f"owners set of a valid sequence misses {len(unrepresented)} edges: "
            f"{list(unrepresented)[:5]}"
        )


@dataclass(frozen=True)
class ReductionParams:
    """Gadget parameters derived from n' = |V(G')|.

    cn is the unique power of two in [4n', 8n'); all other fields follow the
    fixed formulas and satisfy both BTP inequalities.
    """

    n_prime: int
    cn: int
    c: Fraction
    h: int
    l1: int
    l2: int
    d1: int
    d2: int
    m: int

    def as_dict(self) -> dict[str, int | str]:
        return {
            "n_prime": self.n_prime,
            "cn": self.cn,
            "c": str(self.c),
            "h": self.h,
            "l1": self.l1,
            "l2": self.l2,
            "d1": self.d1,
            "d2": self.d2,
            "m": self.m,
        }


def choose_params(n_prime: int) -> ReductionParams:
    """Pick cn' (power of two, 4 <= c < 8) and derive all gadget parameters."""
    if n_prime < 6 or n_prime % 2:
        raise ReductionError(f"n' must be even and >= 6, got {n_prime}")
    cn = 1 << (4 * n_prime - 1).bit_length()  # smallest power of two >= 4n'
    if cn < 4 * n_prime or cn >= 8 * n_prime:
        raise ReductionError(f"internal: no power of two in [4n', 8n') for n'={n_prime}")
    h = cn.bit_length() - 1 + 2
    l1 = (cn - 2 * h) // 2
    l2 = cn // 2 + 2
    params = ReductionParams(
        n_prime=n_prime,
        cn=cn,
        c=Fraction(cn, n_prime),
        h=h,
        l1=l1,
        l2=l2,
        d1=n_prime // 4 + cn // 2,
        d2=-(-n_prime // 4) + cn // 2 + 1,
        m=cn + 3,
    )
    if (cn - 2 * h) % 2:
        raise ReductionError("internal: l1 is not an integer")
    violated = check_btp_inequalities(h, l1, l2)
    if violated:
        raise ReductionError("internal: " + "; ".join(violated))
    return params


def double_subdivide(
    g: Graph, edge: tuple[str, str] | None = None
) -> tuple[Graph, str, str]:
    """Replace one edge (p, q) by a path p-x-y-q; returns (G', x, y).

    Defaults to the lexicographically smallest edge.  The new labels are 'x'
    and 'y', suffixed with underscores if those labels are taken.
    """
    all_edges = list(g.edges())
    if not all_edges:
        raise EdgeNotFoundError("graph has no edges")
    if edge is None:
        p, q = all_edges[0]
    else:
        p, q = edge
        if not g.has_edge(p, q):
            raise EdgeNotFoundError(f"edge {edge!r} not in graph")
    x, y = "x", "y"
    while x in g or y in g:
        x += "_"
        y += "_"
    kept = [e for e in all_edges if set(e) != {p, q}]
    kept += [(p, x), (x, y), (y, q)]
    return Graph(kept), x, y


@dataclass
class ReductionInstance:
    """H plus full provenance: G, G', parameters, origins, and domains."""

    g: Graph
    g_prime: Graph
    h_graph: Graph
    params: ReductionParams
    subdivided_edge: tuple[str, str]
    x: str
    y: str
    origin: dict[str, str]
    domains: dict[str, frozenset[str]]
    btp_landmarks: dict[tuple[str, str], dict[str, Landmark]]
    y_landmarks: dict[str, Landmark]
    c_landmarks: dict[str, Landmark]
    _owner_of: dict[str, str] | None = field(default=None, repr=False)

    def core_label(self, v: str) -> str:
        return f"g:{v}"

    @property
    def outside_domains(self) -> frozenset[str]:
        inside = set()
        for dom in self.domains.values():
            inside |= dom
        return frozenset(set(self.h_graph.vertices) - inside)

    def owner_of(self, h_vertex: str) -> str | None:
        """The G' vertex whose domain contains ``h_vertex``, if any."""
        if self._owner_of is None:
            rev: dict[str, str] = {}
            for u, dom in self.domains.items():
                for v in dom:
                    rev[v] = u
            self._owner_of = rev
        return self._owner_of.get(h_vertex)


def build_H(g: Graph, edge: tuple[str, str] | None = None) -> ReductionInstance:
    """Full reduction: connected cubic G -> instance holding H and provenance."""
    if not is_connected(g):
        raise NotConnectedError("input graph must be connected")
    if g.vertex_count < 4 or not is_regular(g, 3):
        raise NotCubicError("input graph must be cubic on at least 4 vertices")
    g_prime, x, y = double_subdivide(g, edge)
    sub_edge = tuple(
        e for e in g.edges() if e not in set(g_prime.edges())
    )[0]
    params = choose_params(g_prime.vertex_count)

    core = {v: f"g:{v}" for v in g_prime.vertices}
    edges: list[tuple[str, str]] = []
    origin: dict[str, str] = {c: f"core:{v}" for v, c in core.items()}
    halves: dict[tuple[str, str], frozenset[str]] = {}  # (vertex, other end) -> half
    btp_landmarks: dict[tuple[str, str], dict[str, Landmark]] = {}

    for u, v in g_prime.edges():
        marks_edges, marks = _btp_parts(params.h, params.l1, params.l2, f"btp:{u}:{v}:")
        edges += marks_edges
        edges.append((core[u], marks["r_ab"]))
        edges.append((core[v], marks["r_ba"]))
        halves[(u, v)] = frozenset(marks["a_half"])
        halves[(v, u)] = frozenset(marks["b_half"])
        btp_landmarks[(u, v)] = marks
        for w in halves[(u, v)]:
            origin[w] = f"btp:{u}:{v}"
        for w in halves[(v, u)]:
            origin[w] = f"btp:{u}:{v}"

    y_edges, y_marks = _y_parts(params.d1, params.d2, "y:")
    edges += y_edges
    edges.append((core[x], y_marks["x_a"]))
    edges.append((core[y], y_marks["y_a"]))
    for marks_set in ("px", "py", "pz"):
        for w in y_marks[marks_set]:
            origin[w] = "y"
    origin[y_marks["z"]] = "y"

    c_edges, c_marks = _c_parts(params.m, "c:")
    edges += c_edges
    edges.append((y_marks["z_b"], c_marks["v_m2"]))
    for a, b in c_edges:
        origin.setdefault(a, "c")
        origin.setdefault(b, "c")

    h_graph = Graph(edges)

    domains: dict[str, frozenset[str]] = {}
    for u in g_prime.vertices:
        dom = {core[u]}
        for w in g_prime.neighbors(u):
            dom |= halves[(u, w)]
        if u == x:
            dom |= set(y_marks["px"])
        elif u == y:
            dom |= set(y_marks["py"])
        domains[u] = frozenset(dom)

    return ReductionInstance(
        g=g,
        g_prime=g_prime,
        h_graph=h_graph,
        params=params,
        subdivided_edge=sub_edge,
        x=x,
        y=y,
        origin=origin,
        domains=domains,
        btp_landmarks=btp_landmarks,
        y_landmarks=y_marks,
        c_landmarks=c_marks,
    )


def expected_vertex_count(params: ReductionParams, n_edges_gprime: int) -> int:
    """Closed-form |V(H)|: cores + BTPs + Y + C."""
    btp = 2 * ((1 << (params.h + 1)) - 1) + (1 << params.h) * (4 * params.l1 + 2 * params.l2)
    y = 4 * params.d1 + 2 * params.d2 - 5
    c = 2 * params.m * params.m - 2 * params.m - 1
    return params.n_prime + n_edges_gprime * btp + y + c


def witness_sources(
    cover: Iterable[str], x: str, y: str, m: int, gprime_edges: Iterable[tuple[str, str]]
) -> list[str]:
    """Source labels of the constructive witness: x (or y) first, then the
    rest of the cover lexicographically, then the C-gadget middles."""
    q = set(cover)
    if x in q:
        first = x
    elif y in q:
        first = y
    else:
        raise MissingXYError(
            "cover contains neither subdivision vertex; convert a cover of G first"
        )
    uncovered = [(u, v) for u, v in gprime_edges if u not in q and v not in q]
    if uncovered:
        raise NotACoverError(uncovered)
    _, c_marks = _c_parts(m, "c:")
    sources = [f"g:{first}"]
    sources += [f"g:{v}" for v in sorted(q - {first})]
    sources += list(c_marks["middles"])
    return sources


def vc_to_witness(inst: ReductionInstance, cover: Iterable[str]) -> BurningSequence:
    """Burning sequence of length |cover| + cn' + 3 for H from a cover of G'."""
    q = set(cover)
    unknown = q - set(inst.g_prime.vertices)
    if unknown:
        raise ReductionError(f"cover contains non-G' vertices: {sorted(unknown)[:5]}")
    sources = witness_sources(q, inst.x, inst.y, inst.params.m, inst.g_prime.edges())
    return BurningSequence.of(sources)


@dataclass(frozen=True)
class AuditReport:
    """Block partition, owners, edge representation, and BL/UB summary."""

    k: int
    s: int
    start_range: tuple[int, int]
    middle_range: tuple[int, int]
    end_range: tuple[int, int]
    owners: frozenset[str]
    represented: tuple[tuple[str, str], ...]
    unrepresented: tuple[tuple[str, str], ...]
    block_locations: dict[str, tuple[tuple[str, str], ...]]
    valid: bool
    complete: bool
    last_step: frozenset[str]
    uniquely_burned: frozenset[str]

    @property
    def bl_ub(self) -> frozenset[str]:
        return self.last_step & self.uniquely_burned


def audit_sequence(inst: ReductionInstance, sequence: BurningSequence | Sequence[str]) -> AuditReport:
    """Partition a sequence into blocks, chart domain membership, and simulate."""
    sources = list(sequence)
    k = len(sources)
    cn = inst.params.cn
    h = inst.params.h
    s = k - (cn + 3)
    if s < 0:
        raise SequenceTooShortError(f"need at least cn' + 3 = {cn + 3} sources, got {k}")

    blocks = {
        "start": sources[:s],
        "middle": sources[s : s + h + 1],
        "end": sources[s + h + 1 :],
    }
    block_locations = {
        name: tuple(
            (lbl, "inside" if inst.owner_of(lbl) is not None else "outside")
            for lbl in members
        )
        for name, members in blocks.items()
    }
    owners = frozenset(
        owner for lbl in blocks["start"] if (owner := inst.owner_of(lbl)) is not None
    )
    represented, unrepresented = [], []
    for u, v in inst.g_prime.edges():
        if u in owners or v in owners:
            represented.append((u, v))
        else:
            unrepresented.append((u, v))

    valid = True
    complete = False
    bl: frozenset[str] = frozenset()
    ub: frozenset[str] = frozenset()
    try:
        schedule: BurningSchedule = simulate(inst.h_graph, sources)
    except InvalidSequenceError:
        valid = False
    else:
        complete = schedule.complete
        if complete:
            bl = last_step_set(schedule)
            ub = uniquely_burned_set(schedule)

    return AuditReport(
        k=k,
        s=s,
        start_range=(1, s),
        middle_range=(s + 1, s + h + 1),
        end_range=(s + h + 2, k),
        owners=owners,
        represented=tuple(represented),
        unrepresented=tuple(unrepresented),
        block_locations=block_locations,
        valid=valid,
        complete=complete,
        last_step=bl,
        uniquely_burned=ub,
    )


def witness_to_vc(inst: ReductionInstance, sequence: BurningSequence | Sequence[str]) -> frozenset[str]:
    """Extract the Owners set of a valid sequence; it must cover E(G')."""
    sources = list(sequence)
    if not is_burning_sequence(inst.h_graph, sources):
        raise NotABurningSequenceError("sequence does not burn H")
    s = len(sources) - (inst.params.cn + 3)
    if s < 0:
        raise SequenceTooShortError("valid burning sequences of H are never this short")
    owners = frozenset(
        owner for lbl in sources[:s] if (owner := inst.owner_of(lbl)) is not None
    )
    unrepresented = [
        (u, v) for u, v in inst.g_prime.edges() if u not in owners and v not in owners
    ]
    if unrepresented:
        raise OwnersNotACoverError(owners, unrepresented)
    return owners
