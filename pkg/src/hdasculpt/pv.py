"""Linear PV programs: parsing and the associated Euclidean complex.

Syntax: one process per line of whitespace-separated tokens ``P(name)`` and
``V(name)``, optionally preceded by header lines ``resource name capacity k``
(capacity defaults to 1; ``inf`` is accepted).  A grid cell survives when no
resource is over-held there; holding on a span between two positions means
holding at either end, so forbidden regions extend over every cell whose
closure touches a held position.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (HeldAtEndError, InitialForbiddenError, PvSyntaxError,
                     UnmatchedReleaseError)
from .euclid import ComplexEmbedding, Cube, complex_to_hda
from .precubical import restrict_to_reachable

_TOKEN = re.compile(r"(?P<kind>[PV])\((?P<name>[A-Za-z_][A-Za-z0-9_]*)\)$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class PvAction(NamedTuple):
    kind: str        # "P" or "V"
    resource: str


@dataclass(frozen=True)
class PvProgram:
    resources: dict[str, float]                 # name -> capacity
    processes: tuple[tuple[PvAction, ...], ...]


def parse_pv(text: str) -> PvProgram:
    """Parse a PV program; errors carry 1-based line and column positions."""
    resources: dict[str, float] = {}
    processes: list[tuple[PvAction, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split()
        if parts[0] == "resource":
            if len(parts) != 4 or parts[2] != "capacity":
                raise PvSyntaxError("expected 'resource <name> capacity <k>'",
                                    lineno, 1)
            if not _NAME.match(parts[1]):
                raise PvSyntaxError(f"bad resource name {parts[1]!r}", lineno,
                                    line.index(parts[1]) + 1)
            if parts[3] == "inf":
                cap: float = float("inf")
            else:
                try:
                    cap = int(parts[3])
                except ValueError:
                    raise PvSyntaxError(f"bad capacity {parts[3]!r}", lineno,
                                        line.index(parts[3]) + 1) from None
                if cap < 1:
                    raise PvSyntaxError("capacity must be positive", lineno,
                                        line.index(parts[3]) + 1)
            resources[parts[1]] = cap
            continue
        actions: list[PvAction] = []
        col = 1
        for tok in parts:
            col = line.index(tok, col - 1) + 1
            m = _TOKEN.match(tok)
            if not m:
                raise PvSyntaxError(f"bad token {tok!r}", lineno, col)
            actions.append(PvAction(m.group("kind"), m.group("name")))
            resources.setdefault(m.group("name"), 1)
        held: dict[str, int] = {}
        for i, act in enumerate(actions):
            if act.kind == "P":
                held[act.resource] = held.get(act.resource, 0) + 1
            else:
                if held.get(act.resource, 0) == 0:
                    col = 1
                    for j, tok in enumerate(parts):
                        col = line.index(tok, col - 1) + 1
                        if j == i:
                            break
                    raise UnmatchedReleaseError(
                        f"V({act.resource}) without a matching P", lineno, col)
                held[act.resource] -= 1
        leftover = sorted(r for r, n in held.items() if n)
        if leftover:
            raise HeldAtEndError(
                f"process {len(processes) + 1} ends holding {', '.join(leftover)}",
                process=len(processes), resources=leftover)
        processes.append(tuple(actions))
    return PvProgram(resources, tuple(processes))


def _holds_table(actions: Sequence[PvAction], resource: str) -> list[bool]:
    """holds[j]: the process holds ``resource`` after its first j actions."""
    count = 0
    out = [False]
    for act in actions:
        if act.resource == resource:
            count += 1 if act.kind == "P" else -1
        out.append(count > 0)
    return out


def pv_to_complex(prog: PvProgram) -> ComplexEmbedding:
    """The execution-space complex of the program, with forbidden cells removed.

    A cell assigns each process either a position j or a span from j to j+1;
    it is kept when, for every resource, the held-counts (a span counting as
    held if either end holds) sum to at most the capacity.

    The returned complex carries every kept cell.  The automaton is its
    restriction to cells reachable from the all-zero corner: forbidden
    regions can pinch off pockets that no execution enters, and automata
    are connected by convention.
    """
    if not prog.processes:
        raise ValueError("program has no processes")
    sizes = tuple(len(p) for p in prog.processes)
    holds = {r: [_holds_table(p, r) for p in prog.processes]
             for r in prog.resources}

    def axis_tokens(m: int):
        for j in range(m + 1):
            yield (j, False)
        for j in range(m):
            yield (j, True)

    kept: list[Cube] = []
    for profile in itertools.product(*(axis_tokens(m) for m in sizes)):
        ok = True
        for r, tables in holds.items():
            total = 0
            for (j, is_span), table in zip(profile, tables):
                if table[j] or (is_span and table[j + 1]):
                    total += 1
            if total > prog.resources[r]:
                ok = False
                break
        if ok:
            kept.append(Cube(tuple(j for j, _ in profile),
                             tuple(j + s for j, s in profile)))
    origin = Cube((0,) * len(sizes), (0,) * len(sizes))
    if origin not in kept:
        raise InitialForbiddenError("the all-zero corner is forbidden")
    # the keep rule is monotone under taking faces, so the set is face-closed
    emb = complex_to_hda(kept, initial=(0,) * len(sizes), auto_close=False)
    reachable = restrict_to_reachable(emb.hda)
    grid_map = {c: emb.grid_map[c] for c in reachable.all_cells()}
    return ComplexEmbedding(emb.complex, reachable, emb.grid, grid_map,
                            emb.added_faces)


def pv_forbidden_top_count(prog: PvProgram) -> int:
    """Number of excluded full-dimensional cells, for cross-checking."""
    emb = pv_to_complex(prog)
    total = 1
    for p in prog.processes:
        total *= len(p)
    return total - len(emb.complex.top_cells(len(prog.processes)))
