"""Endpoint-state system for bounded-gap 132-avoider enumeration.

States are pairs (p, q) of endpoint thresholds drawn from
{0, ..., m-1, inf}: p bounds the first-entry deficiency and q the
last-entry deficiency of the permutations being counted.  Removing the
maximum element rewrites one state count in terms of others, which makes
the counts satisfy a linear system F = x*1 + W(x) F over polynomials in
the size variable x.  This module builds the sparse polynomial matrix
W(x), the dependency digraph on states, its strongly connected components
in topological order, the classification of the cyclic components, their
weighted periods, and DOT export of the graph.

Conventions: thresholds use ``math.inf`` for the vacuous bound, so
``q - k`` is again a threshold or a negative number (dropped).  States
are ordered lexicographically with inf sorting last; matrix rows are
targets and columns are sources, so entry (d, c) is the weight of the
edge c -> d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, inf

from .core_combinatorics import c_kp
from .polynomial_algebra import ExactPoly

INF = inf

State = tuple  # (p, q) with entries in {0, ..., m-1, inf}


class StructureError(RuntimeError):
    """The computed component structure contradicts the expected shape."""


@dataclass(frozen=True)
class ComponentInfo:
    """One strongly connected component of the dependency graph.

    ``tag`` is "U", "V", "I" or "acyclic_singleton" for m >= 2 and None
    for the degenerate m = 1 system, where the classification is not
    defined.  ``weighted_period`` is the gcd of total edge weights over
    all closed walks (None for acyclic components).
    """

    tag: str | None
    members: tuple[State, ...]
    cyclic: bool
    weighted_period: int | None


@dataclass
class StateSystem:
    """The matrix W(x), its dependency graph, and the SCC decomposition.

    ``entries`` maps (target_index, source_index) to the single monomial
    (degree, coefficient) of that matrix entry; every entry of W is one
    monomial c * x^k with c > 0 and 1 <= k <= m.  Immutable after build.
    """

    m: int
    states: list[State]
    index: dict[State, int]
    entries: dict[tuple[int, int], tuple[int, int]]
    sccs: list[ComponentInfo] = field(default_factory=list)
    _succ: list = field(default_factory=list, repr=False)
    _pred: list = field(default_factory=list, repr=False)
    _comp_index: dict = field(default_factory=dict, repr=False)

    @property
    def output_state(self) -> State:
        return (INF, INF)

    def successors(self, s: int) -> list[int]:
        return self._succ[s]

    def predecessors(self, t: int) -> list[int]:
        return self._pred[t]

    def component_of(self, state: State) -> ComponentInfo:
        return self.sccs[self._comp_index[self.index[state]]]


def thresholds(m: int) -> list:
    """The threshold alphabet {0, ..., m-1, inf} in canonical order."""
    return list(range(m)) + [INF]


def is_append_edge(sys: StateSystem, target: State, source: State) -> bool:
    """True when the edge source -> target is the append-last-maximum edge,
    i.e. source = (p - 1, m - 1) for target (p, q)."""
    p = target[0]
    return source == ((p - 1) if p != INF else INF, sys.m - 1)


def build_system(m: int) -> StateSystem:
    """Construct the (m+1)^2-state system for gap bound m.

    For every target state (p, q): removing a maximum at position
    k <= m contributes the monomial c_kp(k, p) * x^k from source
    (m - k, q - k) when q - k is still a threshold and the coefficient is
    positive, and appending the maximum contributes x from source
    (p - 1, m - 1) when p - 1 is still a threshold.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    states = sorted((p, q) for p in thresholds(m) for q in thresholds(m))
    index = {s: i for i, s in enumerate(states)}
    entries: dict[tuple[int, int], tuple[int, int]] = {}

    def put(tgt: State, src: State, degree: int, coeff: int) -> None:
        key = (index[tgt], index[src])
        if key in entries:
            raise StructureError(f"duplicate matrix entry for {tgt} <- {src}")
        entries[key] = (degree, coeff)

    for p, q in states:
        for k in range(1, m + 1):
            q_shift = q - k
            if q_shift != INF and q_shift < 0:
                continue
            coeff = c_kp(k, p)
            if coeff > 0:
                put((p, q), (m - k, q_shift), k, coeff)
        p_shift = p - 1
        if p_shift == INF or p_shift >= 0:
            put((p, q), (p_shift, m - 1), 1, 1)

    sys = StateSystem(m=m, states=states, index=index, entries=entries)
    succ: list[list[int]] = [[] for _ in states]
    pred: list[list[int]] = [[] for _ in states]
    for (t, s) in entries:
        succ[s].append(t)
        pred[t].append(s)
    sys._succ = succ
    sys._pred = pred
    sys.sccs = _decompose(sys)
    comp_index = {}
    for ci, comp in enumerate(sys.sccs):
        for member in comp.members:
            comp_index[index[member]] = ci
    sys._comp_index = comp_index
    return sys


def _tarjan_sccs(succ: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; components come out in reverse topological order."""
    n = len(succ)
    index_of = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    result: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index_of[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(succ[v])):
                w = succ[v][i]
                if index_of[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
    return result


def _expected_components(m: int) -> dict[str, frozenset]:
    u = frozenset((p, INF) for p in range(m))
    v = frozenset(
        {(p, q) for p in range(m) for q in range(p)}
        | {(p, m - 1) for p in range(m - 1)}
    )
    i = frozenset({(INF, m - 1)})
    return {"U": u, "V": v, "I": i}


def _decompose(sys: StateSystem) -> list[ComponentInfo]:
    raw = _tarjan_sccs(sys._succ)
    raw.reverse()  # topological: sources before the states depending on them
    expected = _expected_components(sys.m) if sys.m >= 2 else None
    comps: list[ComponentInfo] = []
    for members_idx in raw:
        members = tuple(sorted(sys.states[i] for i in members_idx))
        cyclic = len(members) > 1 or (
            (sys.index[members[0]], sys.index[members[0]]) in sys.entries
        )
        tag: str | None = None
        if expected is not None:
            member_set = frozenset(members)
            if cyclic:
                for name, want in expected.items():
                    if member_set == want:
                        tag = name
                        break
                else:
                    raise StructureError(
                        f"unexpected cyclic component at m={sys.m}: {members}"
                    )
            else:
                if len(members) != 1:
                    raise StructureError("acyclic component with several states")
                tag = "acyclic_singleton"
        period = _weighted_period(sys, members) if cyclic else None
        comps.append(
            ComponentInfo(tag=tag, members=members, cyclic=cyclic, weighted_period=period)
        )
    if expected is not None:
        found = {c.tag for c in comps if c.cyclic}
        if found != {"U", "V", "I"}:
            raise StructureError(f"cyclic components {found} instead of U, V, I")
    return comps


def scc_decompose(sys: StateSystem) -> list[ComponentInfo]:
    """Strongly connected components in topological order (computed at
    build time; each component comes after everything it depends on)."""
    return sys.sccs


def _weighted_period(sys: StateSystem, members: tuple[State, ...]) -> int:
    """Gcd of total weights of closed walks inside one cyclic component.

    Computed from a potential assignment: fix pot(root) = 0, extend along
    a spanning arborescence by edge weights, then take the gcd of
    |pot(u) + w - pot(v)| over all intra-component edges u -> v.
    """
    member_set = set(members)
    idx = {s: sys.index[s] for s in members}
    edges = []
    for s in members:
        for t_i in sys.successors(idx[s]):
            t = sys.states[t_i]
            if t in member_set:
                degree, _ = sys.entries[(t_i, idx[s])]
                edges.append((s, t, degree))
    pot = {members[0]: 0}
    frontier = [members[0]]
    adjacency: dict[State, list[tuple[State, int]]] = {s: [] for s in members}
    for s, t, w in edges:
        adjacency[s].append((t, w))
    while frontier:
        s = frontier.pop()
        for t, w in adjacency[s]:
            if t not in pot:
                pot[t] = pot[s] + w
                frontier.append(t)
    if len(pot) != len(members):
        raise StructureError("component not strongly connected")
    g = 0
    for s, t, w in edges:
        g = gcd(g, abs(pot[s] + w - pot[t]))
    if g == 0:
        raise StructureError("cyclic component with no closed walk")
    return g


def weighted_period(sys: StateSystem, comp: ComponentInfo) -> int:
    """Weighted period of a cyclic component; raises for acyclic ones."""
    if not comp.cyclic:
        raise ValueError("weighted period is defined only for cyclic components")
    assert comp.weighted_period is not None
    return comp.weighted_period


def simple_cycle_weights(sys: StateSystem, comp: ComponentInfo) -> list[int]:
    """Total weights of all simple directed cycles inside the component.

    Exponential-time enumeration; used as a cross-check oracle for the
    potential-based weighted period on small components.
    """
    members = list(comp.members)
    idx = {s: i for i, s in enumerate(members)}
    adjacency: list[list[tuple[int, int]]] = [[] for _ in members]
    for s in members:
        si = sys.index[s]
        for t_i in sys.successors(si):
            t = sys.states[t_i]
            if t in idx:
                degree, _ = sys.entries[(t_i, si)]
                adjacency[idx[s]].append((idx[t], degree))
    weights: list[int] = []

    def walk(start: int, v: int, total: int, visited: set[int]) -> None:
        for t, w in adjacency[v]:
            if t == start:
                weights.append(total + w)
            elif t > start and t not in visited:
                visited.add(t)
                walk(start, t, total + w, visited)
                visited.discard(t)

    for start in range(len(members)):
        walk(start, start, 0, {start})
    return weights


def output_accessible(sys: StateSystem, comp: ComponentInfo) -> bool:
    """True when some member of the component reaches the state (inf, inf)."""
    target = sys.index[sys.output_state]
    seen = {target}
    frontier = [target]
    while frontier:
        t = frontier.pop()
        for s in sys.predecessors(t):
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return any(sys.index[s] in seen for s in comp.members)


def component_matrix(sys: StateSystem, comp: ComponentInfo) -> list[list[ExactPoly]]:
    """Principal submatrix of W on the component members.

    Member order is canonical: lexicographic on (p, q) with inf last,
    rows = targets, columns = sources.
    """
    members = list(comp.members)  # already sorted canonically
    mat = []
    for t in members:
        row = []
        for s in members:
            key = (sys.index[t], sys.index[s])
            if key in sys.entries:
                degree, coeff = sys.entries[key]
                row.append(ExactPoly.monomial(degree, coeff))
            else:
                row.append(ExactPoly.zero())
        mat.append(row)
    return mat


def _state_name(s: State) -> str:
    p = "inf" if s[0] == INF else str(s[0])
    q = "inf" if s[1] == INF else str(s[1])
    return f"({p},{q})"


def to_dot(sys: StateSystem) -> str:
    """DOT rendering of the dependency graph.

    Split-edges are dotted red with a ``k=<k>`` label, append-edges solid
    blue; the cyclic components are enclosed in dashed clusters.
    """
    lines = [f"digraph dependency_m{sys.m} {{", "  rankdir=LR;"]
    cluster = 0
    clustered = set()
    for comp in sys.sccs:
        if not comp.cyclic:
            continue
        name = comp.tag if comp.tag else f"C{cluster}"
        lines.append(f"  subgraph cluster_{name} {{")
        lines.append("    style=dashed;")
        lines.append(f'    label="{name}";')
        for s in comp.members:
            lines.append(f'    "{_state_name(s)}";')
            clustered.add(s)
        lines.append("  }")
        cluster += 1
    for s in sys.states:
        if s not in clustered:
            lines.append(f'  "{_state_name(s)}";')
    for (t_i, s_i), (degree, coeff) in sorted(sys.entries.items()):
        t, s = sys.states[t_i], sys.states[s_i]
        if is_append_edge(sys, t, s):
            style = "style=solid,color=blue"
        else:
            style = f'style=dotted,color=red,label="k={degree}"'
        lines.append(f'  "{_state_name(s)}" -> "{_state_name(t)}" [{style}];')
    lines.append("}")
    return "\n".join(lines)
