"""Universal event labels, the event order, and related predicates.

The universal labeling identifies 1-cells that sit on opposite sides of a
2-cell.  Classes are named by their earliest-declared member edge, and the
order between classes is kept as an explicit transitive closure, which is
cheap at the sizes this library targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import NotConsistentError
from .precubical import Hda, Path, PrecubicalSet, Step

# A partition of universal-event classes, each part a frozenset of class
# representatives.
EventPartition = tuple[frozenset[str], ...]


@dataclass(frozen=True)
class UniversalEvents:
    """Partition of the 1-cells plus the induced order between classes."""

    classes: tuple[frozenset[str], ...]
    reps: tuple[str, ...]                       # one representative per class
    rep: Mapping[str, str]                      # edge -> representative edge
    order: frozenset[tuple[str, str]]           # transitive closure, on reps
    generators: tuple[tuple[str, str], ...]     # base order pairs, on reps

    def label(self, edge: str) -> str:
        return self.rep[edge]

    def members(self, rep: str) -> tuple[str, ...]:
        for cls, r in zip(self.classes, self.reps):
            if r == rep:
                return tuple(sorted(cls))
        raise KeyError(rep)


class _UnionFind:
    def __init__(self, items: Iterable[str]):
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _transitive_closure(nodes: Sequence[str], pairs: Iterable[tuple[str, str]]):
    succ: dict[str, set[str]] = {n: set() for n in nodes}
    for a, b in pairs:
        succ[a].add(b)
    closure: set[tuple[str, str]] = set()
    for start in nodes:
        seen: set[str] = set()
        stack = list(succ[start])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        closure.update((start, v) for v in seen)
    return frozenset(closure)


def universal_events(P) -> UniversalEvents:
    """Quotient of the 1-cells by opposite-face equivalence, with its order."""
    base = P.base if isinstance(P, Hda) else P
    edges = base.grade(1)
    decl = {e: i for i, e in enumerate(edges)}
    uf = _UnionFind(edges)
    for q in base.grade(2):
        for i in (1, 2):
            uf.union(base.s(q, i), base.t(q, i))
    groups: dict[str, list[str]] = {}
    for e in edges:
        groups.setdefault(uf.find(e), []).append(e)
    rep_of_root = {root: min(g, key=decl.__getitem__) for root, g in groups.items()}
    rep = {e: rep_of_root[uf.find(e)] for e in edges}
    classes = tuple(
        frozenset(groups[root])
        for root in sorted(groups, key=lambda r: decl[rep_of_root[r]]))
    gens = []
    for q in base.grade(2):
        pair = (rep[base.s(q, 2)], rep[base.s(q, 1)])
        if pair not in gens:
            gens.append(pair)
    reps = tuple(min(c, key=decl.__getitem__) for c in classes)
    return UniversalEvents(
        classes=classes, reps=reps, rep=rep,
        order=_transitive_closure(reps, gens),
        generators=tuple(gens))


def multilabel(P, q: str, ue: UniversalEvents | None = None) -> tuple[str, ...]:
    """The ordered tuple of event classes running in cell ``q``.

    Entry i is the label of the edge obtained by taking every lower face
    except the i-th, applied from the highest index down.
    """
    base = P.base if isinstance(P, Hda) else P
    if ue is None:
        ue = universal_events(base)
    n = base.dim(q)
    out = []
    for i in range(1, n + 1):
        cur = q
        for j in range(n, 0, -1):
            if j != i:
                cur = base.s(cur, j)
        out.append(ue.label(cur))
    return tuple(out)


def is_consistent(P, ue: UniversalEvents | None = None):
    """False iff some 2-cell has equal labels on its two lower faces."""
    base = P.base if isinstance(P, Hda) else P
    if ue is None:
        ue = universal_events(base)
    for q in base.grade(2):
        if ue.label(base.s(q, 1)) == ue.label(base.s(q, 2)):
            return False, q
    return True, None


def _find_order_cycle(ue: UniversalEvents):
    succ: dict[str, list[str]] = {r: [] for r in ue.reps}
    for a, b in ue.generators:
        succ[a].append(b)
    for a, b in ue.generators:
        if a == b:
            return [a, a]
    # a cycle exists iff some (a, b) and (b, a) are both in the closure
    for a, b in ue.order:
        if (b, a) in ue.order:
            # recover an explicit generator cycle a -> .. -> a by BFS
            parent = {a: None}
            queue = [a]
            while queue:
                v = queue.pop(0)
                for w in succ[v]:
                    if w == a:
                        cyc = [a]
                        while v is not None:
                            cyc.append(v)
                            v = parent[v]
                        cyc.reverse()
                        return cyc + [a] if cyc[0] != a else cyc + [a]
                    if w not in parent:
                        parent[w] = v
                        queue.append(w)
    return None


def is_ordered(P, ue: UniversalEvents | None = None):
    """True iff the event order is irreflexive and antisymmetric.

    On failure returns (False, cycle) where cycle is a list of class
    representatives [a, .., a] following generator pairs.
    """
    base = P.base if isinstance(P, Hda) else P
    if ue is None:
        ue = universal_events(base)
    for a, b in ue.order:
        if a == b or (b, a) in ue.order:
            return False, _find_order_cycle(ue)
    return True, None


# ---------------------------------------------------------------------------
# Non-repeating events


def _sequential_arcs(h: Hda) -> dict[str, tuple[tuple[str, str], ...]]:
    """state -> ((edge, next_state), ..) for steps up an edge and down again."""
    arcs: dict[str, list[tuple[str, str]]] = {v: [] for v in h.grade(0)}
    for e in h.grade(1):
        v, w = h.s(e, 1), h.t(e, 1)
        if v in arcs:
            arcs[v].append((e, w))
    return {v: tuple(a) for v, a in arcs.items()}


def _pumped_repeat_witness(h: Hda, ue, arcs, cycle_states: list[str]) -> Path:
    """A sequential rooted path repeating a label, built by looping a cycle."""
    # shortest sequential route from the initial state to the cycle
    parent: dict[str, tuple[str, str, str] | None] = {h.initial: None}
    queue = [h.initial]
    target = next(v for v in cycle_states)
    while queue and target not in parent:
        v = queue.pop(0)
        for e, w in arcs[v]:
            if w not in parent:
                parent[w] = (v, e, w)
                queue.append(w)
    steps: list[Step] = []
    chain: list[tuple[str, str, str]] = []
    cur = target
    while parent[cur] is not None:
        chain.append(parent[cur])
        cur = parent[cur][0]
    for v, e, w in reversed(chain):
        steps.append(Step("s", 1, e))
        steps.append(Step("t", 1, w))
    seen = {ue.label(st.target) for st in steps if st.direction == "s"}
    pos = cycle_states.index(target)
    cur = target
    while True:
        nxt_state = cycle_states[(pos + 1) % len(cycle_states)]
        edge = next(e for e, w in arcs[cur] if w == nxt_state)
        steps.append(Step("s", 1, edge))
        steps.append(Step("t", 1, nxt_state))
        if ue.label(edge) in seen:
            return Path(h.initial, tuple(steps))
        seen.add(ue.label(edge))
        cur = nxt_state
        pos += 1


def has_non_repeating_events(h: Hda, ue: UniversalEvents | None = None):
    """True iff no sequential rooted path sees the same label twice.

    A cycle in the sequential step graph forces a repeat and is reported
    with a pumped witness path; on acyclic graphs the check is an exact
    depth-first enumeration pruned on (state, label set) pairs.
    """
    if ue is None:
        ue = universal_events(h.base)
    arcs = _sequential_arcs(h)
    # cycle detection restricted to states reachable sequentially
    color: dict[str, int] = {}
    stack_path: list[str] = []

    def visit(v: str):
        color[v] = 1
        stack_path.append(v)
        for e, w in arcs[v]:
            if color.get(w, 0) == 1:
                return stack_path[stack_path.index(w):]
            if color.get(w, 0) == 0:
                cyc = visit(w)
                if cyc is not None:
                    return cyc
        stack_path.pop()
        color[v] = 2
        return None

    cycle = visit(h.initial)
    if cycle is not None:
        return False, _pumped_repeat_witness(h, ue, arcs, cycle)

    seen_memo: set[tuple[str, frozenset]] = set()
    stack: list[tuple[str, frozenset, Path]] = [(h.initial, frozenset(), Path(h.initial))]
    while stack:
        v, labels, path = stack.pop()
        for e, w in arcs[v]:
            lab = ue.label(e)
            ext = path.extend("s", 1, e).extend("t", 1, w)
            if lab in labels:
                return False, ext
            key = (w, labels | {lab})
            if key not in seen_memo:
                seen_memo.add(key)
                stack.append((w, labels | {lab}, ext))
    return True, None


# ---------------------------------------------------------------------------
# Ordered symmetric variant


def symmetric_variant(P: PrecubicalSet, order: Sequence[str],
                      ue: UniversalEvents | None = None) -> PrecubicalSet:
    """Reorder every cell's face maps so labels increase along the given order.

    ``order`` lists all class representatives; the output has the same cells
    and is ordered.  Requires a consistent input so the sorting permutation
    is well defined per cell.
    """
    if ue is None:
        ue = universal_events(P)
    ok, witness = is_consistent(P, ue)
    if not ok:
        raise NotConsistentError(f"inconsistent at 2-cell {witness!r}", witness)
    pos = {r: i for i, r in enumerate(order)}
    missing = [r for r in ue.reps if r not in pos]
    if missing:
        raise ValueError(f"order does not cover classes {missing}")
    new_s: dict[str, tuple[str, ...]] = {}
    new_t: dict[str, tuple[str, ...]] = {}
    for c in P.all_cells():
        n = P.dim(c)
        if n == 0:
            continue
        if n == 1:
            new_s[c] = P.s_faces[c]
            new_t[c] = P.t_faces[c]
            continue
        labels = multilabel(P, c, ue)
        sigma = sorted(range(1, n + 1), key=lambda i: pos[labels[i - 1]])
        new_s[c] = tuple(P.s(c, i) for i in sigma)
        new_t[c] = tuple(P.t(c, i) for i in sigma)
    return PrecubicalSet(dict(P.cells), new_s, new_t)


# ---------------------------------------------------------------------------
# Partitions of classes


def partition_of(ue: UniversalEvents, parts: Iterable[Iterable[str]]) -> EventPartition:
    """Normalize an iterable of groups of class reps into an EventPartition.

    Unmentioned classes become singletons; parts are ordered by their
    earliest-declared representative.
    """
    decl = {r: i for i, r in enumerate(ue.reps)}
    listed: list[frozenset[str]] = []
    covered: set[str] = set()
    for grp in parts:
        fs = frozenset(grp)
        for r in fs:
            if r not in decl:
                raise ValueError(f"unknown class representative {r!r}")
            if r in covered:
                raise ValueError(f"representative {r!r} in two parts")
        covered |= fs
        listed.append(fs)
    for r in ue.reps:
        if r not in covered:
            listed.append(frozenset({r}))
    return tuple(sorted(listed, key=lambda fs: min(decl[r] for r in fs)))


def discrete_partition(ue: UniversalEvents) -> EventPartition:
    return tuple(frozenset({r}) for r in ue.reps)


def partition_to_json(ue: UniversalEvents, partition: EventPartition) -> list[list[str]]:
    """Each part rendered as the sorted list of all member edges."""
    out = []
    for part in partition:
        edges: list[str] = []
        for rep in part:
            edges.extend(ue.members(rep))
        out.append(sorted(edges))
    return sorted(out)


def universal_events_to_json(ue: UniversalEvents) -> dict:
    return {
        "classes": [sorted(cls) for cls in ue.classes],
        "order": sorted([a, b] for a, b in ue.order),
    }
