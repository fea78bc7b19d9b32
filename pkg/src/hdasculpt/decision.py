"""Sculptability: the path covering, proper identifications, and the searches.

The covering labels every cell with the configurations of all rooted paths
reaching it.  A partition of the universal labels is a proper identification
when the quotient order stays antisymmetric, every cell keeps exactly one
quotient configuration, and distinct cells keep distinct ones; sculptability
is equivalent to the existence of such a partition.  Two searches are
provided: exhaustive enumeration of partitions in restricted-growth-string
order, and an incremental repair that resolves conflicts at states by merging
matched events along homotopy pairs, backtracking on clashes.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .bulk import Sculpture, validate_sculpture
from .errors import (CyclicError, InvalidStructureError, NotConnectedError,
                     NotProperError, RepeatingEventsError, ResourceLimitError)
from .events import (EventPartition, UniversalEvents,
                     has_non_repeating_events, is_ordered, multilabel,
                     partition_of, partition_to_json, universal_events)
from .precubical import (Hda, Path, Step, coface_index, is_acyclic,
                         is_connected, normalize_path, validate_hda)
from .st_chu import StConfig, StStructure, config_to_chu_string


@dataclass(frozen=True)
class Covering:
    """Per-cell path configurations plus one witness path per configuration."""

    ue: UniversalEvents
    configs: Mapping[str, tuple[StConfig, ...]]
    structure: StStructure
    labels: Mapping[str, tuple[str, ...]]  # cell -> multilabel (class reps)
    _parents: Mapping = field(repr=False)

    def witness(self, cell: str, cfg: StConfig) -> Path:
        steps = []
        key = (cell, cfg)
        while self._parents[key] is not None:
            prev, step = self._parents[key]
            steps.append(step)
            key = prev
        steps.reverse()
        return Path(key[0], tuple(steps))


def path_covering(h: Hda, ue: UniversalEvents | None = None) -> Covering:
    """The configuration each rooted path assigns to its end cell, per cell.

    Runs a breadth-first fixpoint over (cell, configuration) pairs: an
    s_i-step into q starts the i-th running event of q, a t_i-step out of q
    terminates it.  Homotopic paths agree on their configuration, so the
    fixpoint covers all rooted paths.  Requires a connected, acyclic
    automaton with non-repeating events.
    """
    if not is_connected(h):
        raise NotConnectedError("automaton is not connected")
    if ue is None:
        ue = universal_events(h.base)
    ok, witness = has_non_repeating_events(h, ue)
    if not ok:
        raise RepeatingEventsError("a sequential path repeats an event", witness)
    acyclic, pair = is_acyclic(h)
    if not acyclic:
        raise CyclicError(f"cells {pair[0]!r} and {pair[1]!r} lie on a cycle", pair)

    labels = {c: multilabel(h.base, c, ue) for c in h.all_cells()}
    cofaces = coface_index(h.base)
    empty = StConfig(frozenset(), frozenset())
    start_key = (h.initial, empty)
    parents: dict = {start_key: None}
    configs: dict[str, list[StConfig]] = {c: [] for c in h.all_cells()}
    configs[h.initial].append(empty)
    queue = deque([start_key])
    while queue:
        key = queue.popleft()
        cell, cfg = key
        moves = []
        for k, up in cofaces[cell]:
            lab = labels[up][k - 1]
            if lab in cfg.started:
                raise RepeatingEventsError(
                    f"event {lab!r} restarted entering {up!r}", None)
            moves.append((Step("s", k, up),
                          StConfig(cfg.started | {lab}, cfg.terminated)))
        for k in range(1, h.dim(cell) + 1):
            lab = labels[cell][k - 1]
            moves.append((Step("t", k, h.t(cell, k)),
                          StConfig(cfg.started, cfg.terminated | {lab})))
        for step, new_cfg in moves:
            new_key = (step.target, new_cfg)
            if new_key not in parents:
                parents[new_key] = (key, step)
                configs[step.target].append(new_cfg)
                queue.append(new_key)
    structure = StStructure(
        ue.reps, frozenset(c for cs in configs.values() for c in cs))
    return Covering(ue=ue,
                    configs={c: tuple(cs) for c, cs in configs.items()},
                    structure=structure,
                    labels=labels,
                    _parents=parents)


# ---------------------------------------------------------------------------
# Proper event identifications


@dataclass(frozen=True)
class Violation:
    clause: int           # 1 antisymmetry, 2 per-cell functionality, 3 injectivity
    message: str
    cells: tuple[str, ...] = ()
    configs: tuple[StConfig, ...] = ()
    cycle: tuple[str, ...] = ()


def _part_reps(ue: UniversalEvents, partition: EventPartition):
    decl = {r: i for i, r in enumerate(ue.reps)}
    rep_map: dict[str, str] = {}
    for part in partition:
        r = min(part, key=decl.__getitem__)
        for member in part:
            rep_map[member] = r
    return rep_map


def _quotient_config(cfg: StConfig, rep_map: Mapping[str, str]) -> StConfig:
    return StConfig(frozenset(rep_map[e] for e in cfg.started),
                    frozenset(rep_map[e] for e in cfg.terminated))


def _quotient_reachability(ue: UniversalEvents, rep_map: Mapping[str, str]):
    """Strict-order reachability between distinct quotient classes."""
    succ: dict[str, set[str]] = {}
    for a, b in ue.generators:
        qa, qb = rep_map[a], rep_map[b]
        if qa != qb:
            succ.setdefault(qa, set()).add(qb)
            succ.setdefault(qb, set())
    reach: dict[str, set[str]] = {}
    for start in succ:
        seen: set[str] = set()
        stack = list(succ[start])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        reach[start] = seen
    return reach


def _quotient_order_cycle(ue: UniversalEvents, rep_map: Mapping[str, str],
                          reach=None):
    """A strongly connected pair of distinct quotient classes, if any."""
    if reach is None:
        reach = _quotient_reachability(ue, rep_map)
    for start, seen in reach.items():
        if start in seen:
            other = next(s for s in seen
                         if s != start and start in reach.get(s, ()))
            return (start, other)
    return None


def check_proper(h: Hda, partition: EventPartition,
                 covering: Covering | None = None):
    """Decide whether ``partition`` is a proper event identification.

    Returns (True, None) or (False, violation) naming the failing clause:
    (1) the quotient order has a cycle through distinct classes, (2) some
    cell keeps two distinct quotient configurations, (3) two distinct cells
    share one.
    """
    if covering is None:
        covering = path_covering(h)
    ue = covering.ue
    rep_map = _part_reps(ue, partition)
    cyc = _quotient_order_cycle(ue, rep_map)
    if cyc is not None:
        return False, Violation(
            1, f"quotient order is cyclic through {cyc[0]!r} and {cyc[1]!r}",
            cycle=cyc)
    assigned: dict[str, StConfig] = {}
    for cell in h.all_cells():
        qcfgs = []
        for cfg in covering.configs[cell]:
            q = _quotient_config(cfg, rep_map)
            if q not in qcfgs:
                qcfgs.append(q)
        if len(qcfgs) > 1:
            return False, Violation(
                2, f"cell {cell!r} keeps {len(qcfgs)} distinct quotient configs",
                cells=(cell,), configs=(qcfgs[0], qcfgs[1]))
        assigned[cell] = qcfgs[0]
    seen: dict[StConfig, str] = {}
    for cell in h.all_cells():
        q = assigned[cell]
        if q in seen:
            return False, Violation(
                3, f"cells {seen[q]!r} and {cell!r} share quotient config {q}",
                cells=(seen[q], cell), configs=(q,))
        seen[q] = cell
    return True, None


def build_embedding(h: Hda, partition: EventPartition,
                    covering: Covering | None = None) -> Sculpture:
    """The bulk embedding induced by a proper identification.

    Quotient classes are numbered by a deterministic linear extension of the
    quotient order; each cell maps to the tuple of its unique quotient
    configuration.
    """
    if covering is None:
        covering = path_covering(h)
    ok, violation = check_proper(h, partition, covering)
    if not ok:
        raise NotProperError(violation.message, violation)
    ue = covering.ue
    rep_map = _part_reps(ue, partition)
    decl = {r: i for i, r in enumerate(ue.reps)}
    nodes = sorted({rep_map[r] for r in ue.reps}, key=decl.__getitem__)
    succ: dict[str, set[str]] = {n: set() for n in nodes}
    indeg = {n: 0 for n in nodes}
    for a, b in ue.generators:
        qa, qb = rep_map[a], rep_map[b]
        if qa != qb and qb not in succ[qa]:
            succ[qa].add(qb)
            indeg[qb] += 1
    events: list[str] = []
    ready = sorted((n for n in nodes if indeg[n] == 0), key=decl.__getitem__)
    while ready:
        n = ready.pop(0)
        events.append(n)
        changed = False
        for m in succ[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                ready.append(m)
                changed = True
        if changed:
            ready.sort(key=decl.__getitem__)
    if len(events) != len(nodes):
        raise NotProperError("quotient order is cyclic", None)
    em = {}
    for cell in h.all_cells():
        q = _quotient_config(covering.configs[cell][0], rep_map)
        em[cell] = config_to_chu_string(q, events)
    return Sculpture(h, len(events), em)


# ---------------------------------------------------------------------------
# Verdicts


@dataclass(frozen=True)
class Witness:
    kind: str  # repeating_events | cyclic | not_ordered | length_mismatch
    #          # | label_clash | exhausted
    path: Path | None = None
    cycle: tuple[str, ...] = ()
    cell: str | None = None
    cells: tuple[str, ...] = ()
    lengths: tuple[int, int] | None = None
    config: StConfig | None = None
    summary: str | None = None


@dataclass
class Verdict:
    sculptable: bool
    partition: EventPartition | None = None
    sculpture: Sculpture | None = None
    witness: Witness | None = None
    nodes_explored: int = 0
    heuristic_incomplete: bool = False

    @property
    def d(self) -> int | None:
        return self.sculpture.d if self.sculpture is not None else None


# ---------------------------------------------------------------------------
# Exhaustive search


def restricted_growth_strings(m: int):
    """All restricted growth strings of length m, lexicographically."""
    if m == 0:
        yield ()
        return
    a = [0] * m

    def rec(i: int, mx: int):
        if i == m:
            yield tuple(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


def partition_from_rgs(ue: UniversalEvents, rgs: Sequence[int]) -> EventPartition:
    blocks: dict[int, set[str]] = {}
    for r, digit in zip(ue.reps, rgs):
        blocks.setdefault(digit, set()).add(r)
    return partition_of(ue, [blocks[b] for b in sorted(blocks)])


def brute_force_search(h: Hda, covering: Covering | None = None,
                       max_events: int = 10) -> Verdict:
    """Try every partition of the universal labels in canonical order."""
    if covering is None:
        covering = path_covering(h)
    ue = covering.ue
    m = len(ue.reps)
    if m > max_events:
        raise ResourceLimitError(
            f"{m} universal events exceeds the exhaustive-search bound {max_events}")
    checked = 0
    for rgs in restricted_growth_strings(m):
        checked += 1
        partition = partition_from_rgs(ue, rgs)
        ok, _ = check_proper(h, partition, covering)
        if ok:
            sculpture = build_embedding(h, partition, covering)
            return Verdict(True, partition=partition, sculpture=sculpture,
                           nodes_explored=checked)
    return Verdict(False, witness=Witness(
        "exhausted", summary=f"no proper identification among {checked} partitions"),
        nodes_explored=checked)


# ---------------------------------------------------------------------------
# Repair search


class _UF:
    __slots__ = ("parent",)

    def __init__(self, items=None, other=None):
        self.parent = dict(other.parent) if other else {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            return True
        return False

    def partition(self, ue: UniversalEvents) -> EventPartition:
        groups: dict[str, set[str]] = {}
        for r in ue.reps:
            groups.setdefault(self.find(r), set()).add(r)
        return partition_of(ue, groups.values())


def _length_mismatch(h: Hda, covering: Covering):
    for cell in h.grade(0):
        sizes = {}
        for cfg in covering.configs[cell]:
            n = len(cfg.started)
            if sizes and n not in sizes:
                other = next(iter(sizes))
                return Witness("length_mismatch", cell=cell,
                               lengths=tuple(sorted((other, n))))
            sizes[n] = cfg
    return None


def _homotopy_pair(h: Hda, covering: Covering, cell: str,
                   rep_map: Mapping[str, str]):
    """Two matched-length event sequences witnessing a conflict at ``cell``.

    Takes one witness per distinct quotient configuration, normalizes each
    to its sequential form, strips shared prefixes and tails pairwise so the
    pair spans exactly the divergence, and returns the shortest suffix pair
    (ties broken lexicographically on labels) together with the states the
    two routes pass through.
    """
    by_quotient: dict[StConfig, StConfig] = {}
    for cfg in covering.configs[cell]:
        q = _quotient_config(cfg, rep_map)
        by_quotient.setdefault(q, cfg)
    normalized = [normalize_path(h, covering.witness(cell, cfg))
                  for cfg in by_quotient.values()]
    best = None
    for pa, pb in itertools.combinations(normalized, 2):
        common = 0
        while (common < len(pa.steps) and common < len(pb.steps)
               and pa.steps[common] == pb.steps[common]):
            common += 1
        # also drop any shared tail, so the pair spans just the divergence;
        # only whole start-then-terminate pairs may go, which keeps both
        # remainders ending at one state
        tail = 0
        while (common + tail < len(pa.steps) and common + tail < len(pb.steps)
               and pa.steps[len(pa.steps) - 1 - tail]
               == pb.steps[len(pb.steps) - 1 - tail]):
            tail += 1
        tail -= tail % 2
        edges_a = [s.target for s in pa.steps[common:len(pa.steps) - tail]
                   if s.direction == "s"]
        edges_b = [s.target for s in pb.steps[common:len(pb.steps) - tail]
                   if s.direction == "s"]
        states_a = [s.target for s in pa.steps[common:len(pa.steps) - tail]
                    if s.direction == "t"]
        states_b = [s.target for s in pb.steps[common:len(pb.steps) - tail]
                    if s.direction == "t"]
        labels_a = tuple(covering.ue.label(e) for e in edges_a)
        labels_b = tuple(covering.ue.label(e) for e in edges_b)
        key = (len(edges_a), labels_a, labels_b, tuple(edges_a), tuple(edges_b))
        alt = (len(edges_a), labels_b, labels_a, tuple(edges_b), tuple(edges_a))
        if alt < key:
            key = alt
            edges_a, edges_b = edges_b, edges_a
            states_a, states_b = states_b, states_a
        if best is None or key < best[0]:
            best = (key, edges_a, edges_b, states_a, states_b)
    return best[1], best[2], best[3], best[4]


def _matchings(labels_a, labels_b, compatible, diverged=None):
    """All admissible pairings of two label suffixes, as index maps.

    Positions whose labels are already identified must pair with each other,
    since a proper identification never merges two events of one suffix, so
    only the leftover positions permute, and only onto positions whose
    classes never co-occur with theirs.  First may not pair with first nor
    last with last, a suffix repeating a class admits no pairing at all, and
    a pairing mapping a proper prefix onto itself would hand the two distinct
    states after it the same configuration (``diverged`` flags those cuts).
    """
    n = len(labels_a)
    if len(set(labels_a)) < n or len(set(labels_b)) < n:
        return
    if labels_a[0] == labels_b[0] or labels_a[-1] == labels_b[-1]:
        return
    pos_b = {lab: j for j, lab in enumerate(labels_b)}
    forced = {i: pos_b[lab] for i, lab in enumerate(labels_a) if lab in pos_b}
    free_a = [i for i in range(n) if i not in forced]
    free_b = [j for j in range(n) if j not in set(forced.values())]
    allowed = {
        i: [j for j in free_b
            if not (i == 0 and j == 0) and not (i == n - 1 and j == n - 1)
            and compatible(labels_a[i], labels_b[j])]
        for i in free_a}

    def prefix_blocked(tau):
        if diverged is None:
            return False
        block = 0
        for k in range(n - 1):
            block = max(block, tau[k])
            if block == k and diverged[k]:
                return True
        return False

    def assign(idx, used, tau):
        if idx == len(free_a):
            if not prefix_blocked(tau):
                yield dict(tau)
            return
        i = free_a[idx]
        for j in allowed[i]:
            if j not in used:
                tau[i] = j
                used.add(j)
                yield from assign(idx + 1, used, tau)
                used.discard(j)
                del tau[i]

    yield from assign(0, set(), dict(forced))


def repair_search(h: Hda, covering: Covering | None = None,
                  node_budget: int = 10 ** 6) -> Verdict:
    """Merge events along homotopy pairs, depth first with backtracking.

    Starts from the discrete partition.  A state carrying two distinct
    quotient configurations yields a homotopy pair whose positions must be
    matched crosswise; the admissible matchings are filtered by the event
    order, co-occurrence, and prefix divergence, and the conflict with the
    fewest of them is repaired first, so forced repairs (two-step
    interleavings included) chain before anything branches.  Branches whose
    quotient order turns cyclic are dropped; a clash between distinct cells
    backtracks.
    """
    if covering is None:
        covering = path_covering(h)
    ue = covering.ue
    mismatch = _length_mismatch(h, covering)
    if mismatch is not None:
        return Verdict(False, witness=mismatch)

    # base classes started together along some path may never be identified
    cooccur: dict[str, set[str]] = {r: set() for r in ue.reps}
    for cfg in covering.structure.configs:
        started = sorted(cfg.started)
        for x in started:
            for y in started:
                if x != y:
                    cooccur[x].add(y)

    first_clash: Witness | None = None
    nodes = 0
    decl = {r: i for i, r in enumerate(ue.reps)}
    stack: list[_UF] = [_UF(items=ue.reps)]
    seen: set[frozenset[frozenset[str]]] = set()
    while stack:
        uf = stack.pop()
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(f"repair search exceeded {node_budget} nodes")
        groups: dict[str, list[str]] = {}
        for r in ue.reps:
            groups.setdefault(uf.find(r), []).append(r)
        fingerprint = frozenset(frozenset(ms) for ms in groups.values())
        if fingerprint in seen:
            continue  # the same partition was reached along another merge order
        seen.add(fingerprint)
        canon = {root: min(ms, key=decl.__getitem__) for root, ms in groups.items()}
        rep_map = {r: canon[uf.find(r)] for r in ue.reps}
        reach = _quotient_reachability(ue, rep_map)
        if _quotient_order_cycle(ue, rep_map, reach) is not None:
            continue
        members = {rep_map[r]: groups[uf.find(r)] for r in ue.reps}

        def compatible(x, y):
            # merging order-comparable classes always collapses a square's
            # concurrent pair somewhere along the connecting chain
            if y in reach.get(x, ()) or x in reach.get(y, ()):
                return False
            return not any(v in cooccur[u]
                           for u in members[x] for v in members[y])

        # gather the most constrained repairable conflict: fewest admissible
        # pairings first, shorter pairs breaking ties, so forced repairs
        # chain before anything branches
        best = None
        best_key = None
        dead_conflict = False
        any_conflict = False
        for cell in h.grade(0):
            qcfgs = {_quotient_config(c, rep_map) for c in covering.configs[cell]}
            if len(qcfgs) < 2:
                continue
            any_conflict = True
            edges_a, edges_b, states_a, states_b = _homotopy_pair(
                h, covering, cell, rep_map)
            if len(edges_a) < 2:
                dead_conflict = True
                continue
            labels_a = tuple(rep_map[ue.label(e)] for e in edges_a)
            labels_b = tuple(rep_map[ue.label(e)] for e in edges_b)
            diverged = [sa != sb for sa, sb in zip(states_a, states_b)]
            taus = list(_matchings(labels_a, labels_b, compatible, diverged))
            if not taus:
                dead_conflict = True
                continue
            key = (len(taus), len(edges_a))
            if best_key is None or key < best_key:
                best, best_key = (edges_a, edges_b, taus), key
                if key[0] == 1:
                    break
        if not any_conflict:
            partition = uf.partition(ue)
            ok, violation = check_proper(h, partition, covering)
            if ok:
                sculpture = build_embedding(h, partition, covering)
                return Verdict(True, partition=partition, sculpture=sculpture,
                               nodes_explored=nodes)
            if violation.clause == 3 and first_clash is None:
                first_clash = Witness("label_clash", cells=violation.cells,
                                      config=violation.configs[0])
            continue
        if best is not None and dead_conflict and len(best[2]) > 1:
            # an irreparable conflict remains, so only forced repairs are
            # worth following for the sake of a sharper witness
            best = None
        if best is None:
            # the branch dies; if the merges so far already label two
            # distinct cells alike, report that pair as the obstruction
            if first_clash is None:
                assigned: dict[StConfig, str] = {}
                for other in h.all_cells():
                    for cfg in covering.configs[other]:
                        q = _quotient_config(cfg, rep_map)
                        if q in assigned and assigned[q] != other:
                            first_clash = Witness(
                                "label_clash", cells=(assigned[q], other),
                                config=q)
                            break
                        assigned[q] = other
                    if first_clash is not None:
                        break
            continue
        edges_a, edges_b, taus = best
        n = len(edges_a)
        children = []
        for tau in taus:
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(
                    f"repair search exceeded {node_budget} nodes")
            child = _UF(other=uf)
            merged = False
            for i in range(n):
                merged |= child.union(ue.label(edges_a[i]),
                                      ue.label(edges_b[tau[i]]))
            if not merged:
                continue
            child_map = {r: child.find(r) for r in ue.reps}
            if _quotient_order_cycle(ue, child_map) is None:
                children.append(child)
        stack.extend(reversed(children))
    if first_clash is not None:
        return Verdict(False, witness=first_clash, nodes_explored=nodes)
    return Verdict(False, witness=Witness(
        "exhausted", summary=f"search tree exhausted after {nodes} nodes"),
        nodes_explored=nodes)


# ---------------------------------------------------------------------------
# Full decision pipeline


def decide_sculptable(h: Hda, oracle: bool = False, max_events: int = 10,
                      node_budget: int = 10 ** 6) -> Verdict:
    """Decide whether ``h`` embeds into some bulk, with a certificate.

    Pipeline: structural validation, connectivity, orderedness, then the
    path covering feeding either the repair search or (with ``oracle``) the
    exhaustive one.  Positive verdicts carry a validated sculpture; an
    exhausted repair search is cross-checked exhaustively when small enough
    and flagged heuristic otherwise.
    """
    report = validate_hda(h)
    if not report.ok:
        raise InvalidStructureError(str(report), report)
    if not is_connected(h):
        raise NotConnectedError("automaton is not connected")
    ue = universal_events(h.base)
    ordered, cycle = is_ordered(h.base, ue)
    if not ordered:
        return Verdict(False, witness=Witness("not_ordered", cycle=tuple(cycle)))
    try:
        covering = path_covering(h, ue)
    except RepeatingEventsError as exc:
        return Verdict(False, witness=Witness("repeating_events", path=exc.path))
    except CyclicError as exc:
        return Verdict(False, witness=Witness("cyclic", cells=tuple(exc.pair)))
    if oracle:
        verdict = brute_force_search(h, covering, max_events=max_events)
    else:
        verdict = repair_search(h, covering, node_budget=node_budget)
        if (not verdict.sculptable and verdict.witness is not None
                and verdict.witness.kind == "exhausted"):
            if len(ue.reps) <= max_events:
                verdict = brute_force_search(h, covering, max_events=max_events)
            else:
                verdict.heuristic_incomplete = True
    if verdict.sculptable:
        cert = validate_sculpture(verdict.sculpture)
        if not cert.ok:
            raise InvalidStructureError(
                f"internal error: certificate failed validation: {cert}", cert)
    return verdict


# ---------------------------------------------------------------------------
# JSON


def path_to_json(p: Path) -> dict:
    return {"start": p.start,
            "steps": [[s.direction, s.index, s.target] for s in p.steps]}


def path_from_json(data: Mapping) -> Path:
    return Path(data["start"],
                tuple(Step(d, int(k), t) for d, k, t in data["steps"]))


def witness_to_json(w: Witness) -> dict:
    out: dict = {"kind": w.kind}
    if w.path is not None:
        out["path"] = path_to_json(w.path)
    if w.cycle:
        out["cycle"] = list(w.cycle)
    if w.cell is not None:
        out["cell"] = w.cell
    if w.cells:
        out["cells"] = list(w.cells)
    if w.lengths is not None:
        out["lengths"] = list(w.lengths)
    if w.config is not None:
        out["config"] = [sorted(w.config.started), sorted(w.config.terminated)]
    if w.summary is not None:
        out["summary"] = w.summary
    return out


def verdict_to_json(v: Verdict, ue: UniversalEvents | None = None) -> dict:
    from .bulk import sculpture_to_json
    out: dict = {"sculptable": v.sculptable}
    if v.sculpture is not None:
        out["d"] = v.sculpture.d
        out["embedding"] = sculpture_to_json(v.sculpture)
    if v.partition is not None and ue is not None:
        out["partition"] = partition_to_json(ue, v.partition)
    if v.witness is not None:
        out["witness"] = witness_to_json(v.witness)
    if v.heuristic_incomplete:
        out["heuristic_incomplete"] = True
    return out
