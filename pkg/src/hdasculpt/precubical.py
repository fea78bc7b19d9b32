"""Precubical sets, higher-dimensional automata, paths, and elementary homotopy.

Cells are opaque strings.  Face maps are 1-indexed: the k-th lower face of an
n-cell q is ``s(q, k)`` for k in 1..n, the k-th upper face is ``t(q, k)``.
All iteration follows declaration order, so every algorithm here is
deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, NamedTuple

from .errors import (IllegalPathError, InvalidStructureError,
                     ResourceLimitError)


@dataclass(frozen=True)
class Problem:
    """One validation finding.  ``data`` holds kind-specific details."""

    kind: str
    cell: str
    message: str
    data: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[Problem, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{p.kind} at {p.cell}: {p.message}" for p in self.problems)


class Step(NamedTuple):
    direction: str  # "s" (up) or "t" (down)
    index: int      # 1-based face index
    target: str     # cell the step lands in


@dataclass(frozen=True)
class Path:
    """A path: a start cell and a sequence of s-/t-steps.

    An s-step moves from ``s(q, k)`` up into q; a t-step moves from q down
    to ``t(q, k)``.
    """

    start: str
    steps: tuple[Step, ...] = ()

    def end(self) -> str:
        return self.steps[-1].target if self.steps else self.start

    def cells(self) -> tuple[str, ...]:
        return (self.start,) + tuple(st.target for st in self.steps)

    @property
    def type_string(self) -> str:
        return "".join(st.direction for st in self.steps)

    def extend(self, direction: str, index: int, target: str) -> "Path":
        return Path(self.start, self.steps + (Step(direction, index, target),))

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class PrecubicalSet:
    """Graded cells with 1-indexed lower (s) and upper (t) face maps."""

    cells: Mapping[int, tuple[str, ...]]
    s_faces: Mapping[str, tuple[str, ...]]
    t_faces: Mapping[str, tuple[str, ...]]
    _dim_of: dict = field(default_factory=dict, repr=False, compare=False)
    _decl_idx: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        dim_of, decl = {}, {}
        i = 0
        for n in sorted(self.cells):
            for c in self.cells[n]:
                if c in dim_of:
                    raise ValueError(f"duplicate cell id {c!r}")
                dim_of[c] = n
                decl[c] = i
                i += 1
        object.__setattr__(self, "_dim_of", dim_of)
        object.__setattr__(self, "_decl_idx", decl)

    # -- basic accessors ------------------------------------------------

    def dim(self, cell: str) -> int:
        return self._dim_of[cell]

    def has_cell(self, cell: str) -> bool:
        return cell in self._dim_of

    def declaration_index(self, cell: str) -> int:
        return self._decl_idx[cell]

    def grade(self, n: int) -> tuple[str, ...]:
        return self.cells.get(n, ())

    @property
    def dimension(self) -> int:
        dims = [n for n, cs in self.cells.items() if cs]
        return max(dims) if dims else 0

    def all_cells(self) -> Iterator[str]:
        for n in sorted(self.cells):
            yield from self.cells[n]

    def size(self) -> int:
        return sum(len(cs) for cs in self.cells.values())

    def s(self, cell: str, k: int) -> str:
        return self.s_faces[cell][k - 1]

    def t(self, cell: str, k: int) -> str:
        return self.t_faces[cell][k - 1]

    def face(self, alpha: str, k: int, cell: str) -> str:
        return self.s(cell, k) if alpha == "s" else self.t(cell, k)


def precubical(cells, s_faces, t_faces) -> PrecubicalSet:
    """Normalize raw mappings into a PrecubicalSet."""
    norm_cells = {int(n): tuple(cs) for n, cs in cells.items()}
    return PrecubicalSet(
        cells=norm_cells,
        s_faces={c: tuple(fs) for c, fs in s_faces.items()},
        t_faces={c: tuple(fs) for c, fs in t_faces.items()},
    )


@dataclass(frozen=True)
class Hda:
    """A finite precubical set with a designated initial 0-cell."""

    base: PrecubicalSet
    initial: str

    def dim(self, cell: str) -> int:
        return self.base.dim(cell)

    def s(self, cell: str, k: int) -> str:
        return self.base.s(cell, k)

    def t(self, cell: str, k: int) -> str:
        return self.base.t(cell, k)

    def face(self, alpha: str, k: int, cell: str) -> str:
        return self.base.face(alpha, k, cell)

    def grade(self, n: int) -> tuple[str, ...]:
        return self.base.grade(n)

    def all_cells(self) -> Iterator[str]:
        return self.base.all_cells()

    @property
    def dimension(self) -> int:
        return self.base.dimension


def hda(cells, s_faces, t_faces, initial: str) -> Hda:
    return Hda(precubical(cells, s_faces, t_faces), initial)


@dataclass(frozen=True)
class Morphism:
    """A graded, face-commuting map between precubical sets."""

    mapping: Mapping[str, str]

    def __call__(self, cell: str) -> str:
        return self.mapping[cell]


# ---------------------------------------------------------------------------
# Validation


def validate_precubical(raw: PrecubicalSet) -> ValidationReport:
    """Check face-map shape, dangling references, and the face identities.

    The identity checked for every cell q of dimension n and every pair
    k < l is alpha_k(beta_l(q)) == beta_{l-1}(alpha_k(q)) for alpha, beta
    ranging over the two face kinds.
    """
    problems: list[Problem] = []
    for n in sorted(raw.cells):
        for c in raw.cells[n]:
            if n == 0:
                for kind, table in (("s", raw.s_faces), ("t", raw.t_faces)):
                    if table.get(c):
                        problems.append(Problem(
                            "face_count", c,
                            f"0-cell carries {kind}-faces", (kind,)))
                continue
            for kind, table in (("s", raw.s_faces), ("t", raw.t_faces)):
                faces = table.get(c)
                if faces is None or len(faces) != n:
                    got = 0 if faces is None else len(faces)
                    problems.append(Problem(
                        "face_count", c,
                        f"expected {n} {kind}-faces, got {got}", (kind, got)))
                    continue
                for k, f in enumerate(faces, start=1):
                    if not raw.has_cell(f):
                        problems.append(Problem(
                            "dangling_face", c,
                            f"{kind}_{k} references missing cell {f!r}",
                            (kind, k, f)))
                    elif raw.dim(f) != n - 1:
                        problems.append(Problem(
                            "wrong_dimension", c,
                            f"{kind}_{k} = {f!r} has dimension {raw.dim(f)},"
                            f" expected {n - 1}",
                            (kind, k, f)))
    if problems:
        return ValidationReport(tuple(problems))

    for n in sorted(raw.cells):
        if n < 2:
            continue
        for c in raw.cells[n]:
            for l in range(2, n + 1):
                for k in range(1, l):
                    for alpha in "st":
                        for beta in "st":
                            lhs = raw.face(alpha, k, raw.face(beta, l, c))
                            rhs = raw.face(beta, l - 1, raw.face(alpha, k, c))
                            if lhs != rhs:
                                problems.append(Problem(
                                    "identity_violation", c,
                                    f"{alpha}_{k} {beta}_{l} {c} = {lhs!r} but "
                                    f"{beta}_{l - 1} {alpha}_{k} {c} = {rhs!r}",
                                    (alpha, k, beta, l)))
    return ValidationReport(tuple(problems))


def validate_hda(h: Hda) -> ValidationReport:
    report = validate_precubical(h.base)
    problems = list(report.problems)
    if not h.base.has_cell(h.initial):
        problems.append(Problem("initial_missing", h.initial, "initial cell not present"))
    elif h.base.dim(h.initial) != 0:
        problems.append(Problem("initial_dimension", h.initial, "initial cell is not a 0-cell"))
    return ValidationReport(tuple(problems))


def check_valid(obj) -> None:
    """Raise InvalidStructureError unless the structure validates cleanly."""
    report = validate_hda(obj) if isinstance(obj, Hda) else validate_precubical(obj)
    if not report.ok:
        raise InvalidStructureError(str(report), report)


def validate_morphism(src: PrecubicalSet, dst: PrecubicalSet, m: Morphism,
                      initial: tuple[str, str] | None = None) -> ValidationReport:
    """Check totality, dimension preservation, and face commutation."""
    problems: list[Problem] = []
    for c in src.all_cells():
        img = m.mapping.get(c)
        if img is None:
            problems.append(Problem("not_total", c, "cell has no image"))
            continue
        if not dst.has_cell(img):
            problems.append(Problem("dangling_image", c, f"image {img!r} missing"))
            continue
        if dst.dim(img) != src.dim(c):
            problems.append(Problem("dimension", c, f"image {img!r} has wrong dimension"))
            continue
        for k in range(1, src.dim(c) + 1):
            for alpha in "st":
                want = m.mapping.get(src.face(alpha, k, c))
                got = dst.face(alpha, k, img)
                if want != got:
                    problems.append(Problem(
                        "face_commutation", c,
                        f"{alpha}_{k}: image face {got!r} != mapped face {want!r}",
                        (alpha, k)))
    if initial is not None:
        src_init, dst_init = initial
        if m.mapping.get(src_init) != dst_init:
            problems.append(Problem("initial", src_init, "initial cell not preserved"))
    return ValidationReport(tuple(problems))


# ---------------------------------------------------------------------------
# Self-linked cells

def _canonical_words(P: PrecubicalSet, cell: str, bound: int):
    """All canonically-written iterated face words of ``cell``.

    Yields pairs (word, result) with word = ((alpha_1, j_1), ..) written in
    composition order, indices strictly increasing, all below ``bound``, and
    result the cell obtained by applying the word right to left.
    """
    n = P.dim(cell)
    for j in range(1, min(n, bound - 1) + 1):
        for alpha in "st":
            child = P.face(alpha, j, cell)
            yield ((alpha, j),), child
            for word, res in _canonical_words(P, child, j):
                yield word + ((alpha, j),), res


def is_non_selflinked(P: PrecubicalSet):
    """True iff every pair of cells is in at most one face relation.

    On failure returns (False, (face, cell, word1, word2)) where both
    canonical words send ``cell`` to ``face``.
    """
    top = P.dimension
    for c in P.all_cells():
        if P.dim(c) == 0:
            continue
        seen: dict[str, tuple] = {}
        for word, res in _canonical_words(P, c, top + 2):
            if res in seen and seen[res] != word:
                return False, (res, c, seen[res], word)
            seen.setdefault(res, word)
    return True, None


# ---------------------------------------------------------------------------
# Steps, reachability, cycles


def coface_index(P: PrecubicalSet) -> dict[str, tuple[tuple[int, str], ...]]:
    """For each cell, the (k, q) pairs with s_k(q) = cell, in declaration order."""
    idx: dict[str, list[tuple[int, str]]] = {c: [] for c in P.all_cells()}
    for n in sorted(P.cells):
        if n == 0:
            continue
        for q in P.cells[n]:
            for k in range(1, n + 1):
                f = P.s(q, k)
                if f in idx:
                    idx[f].append((k, q))
    return {c: tuple(v) for c, v in idx.items()}


def step_successors(P: PrecubicalSet, cofaces=None) -> dict[str, tuple[str, ...]]:
    """Directed step graph: s-steps go up into cofaces, t-steps down to t-faces."""
    if cofaces is None:
        cofaces = coface_index(P)
    succ: dict[str, list[str]] = {c: [] for c in P.all_cells()}
    for c in P.all_cells():
        succ[c].extend(q for _, q in cofaces[c])
        for k in range(1, P.dim(c) + 1):
            succ[c].append(P.t(c, k))
    return {c: tuple(v) for c, v in succ.items()}


def reachable_cells(h: Hda) -> set[str]:
    succ = step_successors(h.base)
    seen = {h.initial}
    stack = [h.initial]
    while stack:
        c = stack.pop()
        for nxt in succ[c]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def is_connected(h: Hda) -> bool:
    return len(reachable_cells(h)) == h.base.size()


def restrict_to_reachable(h: Hda) -> Hda:
    """The sub-HDA on cells reachable from the initial cell."""
    keep = reachable_cells(h)
    cells = {n: tuple(c for c in cs if c in keep) for n, cs in h.base.cells.items()}
    cells = {n: cs for n, cs in cells.items() if cs}
    s = {c: h.base.s_faces[c] for c in keep if h.base.dim(c) >= 1}
    t = {c: h.base.t_faces[c] for c in keep if h.base.dim(c) >= 1}
    return Hda(PrecubicalSet(cells, s, t), h.initial)


def _strongly_connected_components(succ: Mapping[str, tuple[str, ...]]):
    """Tarjan, iterative."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    onstack: set[str] = set()
    stack: list[str] = []
    sccs: list[list[str]] = []
    counter = 0
    for root in succ:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def is_acyclic(h: Hda):
    """True iff no two distinct cells are mutually step-reachable.

    On failure returns (False, (q, q')) with q, q' in one strongly
    connected component.
    """
    succ = step_successors(h.base)
    for comp in _strongly_connected_components(succ):
        if len(comp) > 1:
            comp.sort(key=h.base.declaration_index)
            return False, (comp[0], comp[1])
    return True, None


# ---------------------------------------------------------------------------
# Paths


def validate_path(h: Hda, path: Path) -> None:
    """Raise IllegalPathError unless every step is legal in ``h``."""
    P = h.base
    if not P.has_cell(path.start):
        raise IllegalPathError(f"start cell {path.start!r} missing")
    cur = path.start
    for i, st in enumerate(path.steps):
        if not P.has_cell(st.target):
            raise IllegalPathError(f"step {i}: target {st.target!r} missing")
        if st.direction == "s":
            if not (1 <= st.index <= P.dim(st.target)) or P.s(st.target, st.index) != cur:
                raise IllegalPathError(
                    f"step {i}: s_{st.index}({st.target!r}) != {cur!r}")
        elif st.direction == "t":
            if not (1 <= st.index <= P.dim(cur)) or P.t(cur, st.index) != st.target:
                raise IllegalPathError(
                    f"step {i}: t_{st.index}({cur!r}) != {st.target!r}")
        else:
            raise IllegalPathError(f"step {i}: bad direction {st.direction!r}")
        cur = st.target


def is_rooted(h: Hda, path: Path) -> bool:
    return path.start == h.initial


def rooted_paths(h: Hda, limit: int = 100000) -> list[Path]:
    """All rooted paths of an acyclic HDA, in deterministic DFS order."""
    cofaces = coface_index(h.base)
    out: list[Path] = []
    stack = [Path(h.initial)]
    while stack:
        p = stack.pop()
        out.append(p)
        if len(out) > limit:
            raise ResourceLimitError(f"more than {limit} rooted paths")
        cur = p.end()
        nxt = []
        for k, up in cofaces[cur]:
            nxt.append(p.extend("s", k, up))
        for k in range(1, h.dim(cur) + 1):
            nxt.append(p.extend("t", k, h.t(cur, k)))
        stack.extend(reversed(nxt))
    return out


# ---------------------------------------------------------------------------
# Elementary homotopy

def _pair_rewrites(h: Hda, before: str, first: Step, second: Step):
    """Alternative two-step segments with the same endpoints.

    Locally determined commutes for ss, tt and st pairs; for ts pairs the
    filling cells one dimension up are searched.
    """
    P = h.base
    a, b = first.index, second.index
    mid, end = first.target, second.target
    out = []
    if first.direction == "s" and second.direction == "s":
        if a < b:
            m2 = P.s(end, a)
            out.append((Step("s", b - 1, m2), Step("s", a, end)))
        else:
            m2 = P.s(end, a + 1)
            out.append((Step("s", b, m2), Step("s", a + 1, end)))
    elif first.direction == "t" and second.direction == "t":
        if b < a:
            m2 = P.t(before, b)
            out.append((Step("t", b, m2), Step("t", a - 1, end)))
        else:
            m2 = P.t(before, b + 1)
            out.append((Step("t", b + 1, m2), Step("t", a, end)))
    elif first.direction == "s" and second.direction == "t":
        if a < b:
            m2 = P.t(before, b - 1)
            out.append((Step("t", b - 1, m2), Step("s", a, end)))
        elif a > b:
            m2 = P.t(before, b)
            out.append((Step("t", b, m2), Step("s", a - 1, end)))
    else:  # t then s: search for a filling cell one dimension above `before`
        n = P.dim(before) + 1
        for q in P.grade(n):
            if b <= a and P.s(q, b) == before and P.t(q, a + 1) == end:
                out.append((Step("s", b, q), Step("t", a + 1, end)))
            if a <= b and P.s(q, b + 1) == before and P.t(q, a) == end:
                out.append((Step("s", b + 1, q), Step("t", a, end)))
    return out


def elementary_homotopies(h: Hda, path: Path) -> set[Path]:
    """All paths one elementary move away from ``path``."""
    validate_path(h, path)
    cells = path.cells()
    results: set[Path] = set()
    for i in range(len(path.steps) - 1):
        before = cells[i]
        for new_pair in _pair_rewrites(h, before, path.steps[i], path.steps[i + 1]):
            steps = path.steps[:i] + new_pair + path.steps[i + 2:]
            cand = Path(path.start, steps)
            if cand != path:
                results.add(cand)
    return results


def homotopy_class(h: Hda, path: Path, limit: int = 200000) -> set[Path]:
    """Closure of ``path`` under elementary moves (breadth-first)."""
    seen = {path}
    frontier = [path]
    while frontier:
        nxt: list[Path] = []
        for p in frontier:
            for q in elementary_homotopies(h, p):
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise ResourceLimitError("homotopy class too large")
        frontier = nxt
    return seen


def normalize_path(h: Hda, path: Path) -> Path:
    """A path homotopic to ``path`` of type (s_1 t_1)^l s_1 s_2 .. s_n.

    First every up-up-down window is rewritten away, which leaves an
    alternating prefix followed by a final climb; then the climb is replaced
    by the canonical one derived from the iterated-face normal form.
    """
    validate_path(h, path)
    if not is_rooted(h, path):
        raise IllegalPathError("normalize_path expects a rooted path")
    P = h.base
    steps = list(path.steps)

    def cells_of(ss):
        out = [path.start]
        for st in ss:
            out.append(st.target)
        return out

    while True:
        cs = cells_of(steps)
        pos = next((i for i in range(len(steps) - 2)
                    if steps[i].direction == "s"
                    and steps[i + 1].direction == "s"
                    and steps[i + 2].direction == "t"), None)
        if pos is None:
            break
        j, k = steps[pos + 1].index, steps[pos + 2].index
        if j == k:
            new_pair = _pair_rewrites(h, cs[pos], steps[pos], steps[pos + 1])[0]
            steps[pos], steps[pos + 1] = new_pair
        else:
            new_pair = _pair_rewrites(h, cs[pos + 1], steps[pos + 1], steps[pos + 2])[0]
            steps[pos + 1], steps[pos + 2] = new_pair

    # steps now alternate s t .. s t followed by a final run of s-steps
    run_start = len(steps)
    while run_start > 0 and steps[run_start - 1].direction == "s":
        run_start -= 1
    run = steps[run_start:]
    if len(run) >= 2:
        q = run[-1].target
        n = P.dim(q)
        chain = [q]
        for j in range(n, 1, -1):
            chain.append(P.s(chain[-1], j))
        chain.reverse()  # chain[m-1] has dimension m, reached by s_m
        run = [Step("s", m, chain[m - 1]) for m in range(1, n + 1)]
    out = Path(path.start, tuple(steps[:run_start] + run))
    validate_path(h, out)
    return out


# ---------------------------------------------------------------------------
# JSON interchange


def precubical_to_json(P: PrecubicalSet) -> dict:
    return {
        "cells": {str(n): list(P.cells[n]) for n in sorted(P.cells)},
        "s": {c: list(P.s_faces[c]) for c in P.all_cells() if P.dim(c) >= 1},
        "t": {c: list(P.t_faces[c]) for c in P.all_cells() if P.dim(c) >= 1},
    }


def precubical_from_json(data: Mapping) -> PrecubicalSet:
    return precubical(data["cells"], data.get("s", {}), data.get("t", {}))


def hda_to_json(h: Hda) -> dict:
    out = precubical_to_json(h.base)
    out["initial"] = h.initial
    return out


def hda_from_json(data: Mapping) -> Hda:
    return Hda(precubical_from_json(data), data["initial"])


def dumps(obj, to_json: Callable[[object], dict]) -> str:
    return json.dumps(to_json(obj), indent=2, sort_keys=True)
