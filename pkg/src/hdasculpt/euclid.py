"""Grids, Euclidean cubical complexes, and their bulk embeddings.

Complexes are finite unions of elementary integer cubes, kept purely
combinatorial.  A cube is a pair of integer corner vectors whose per-axis
extents are 0 or 1; cube cells are named by per-axis tokens, "3" for the
point 3 and "3s" for the span from 3 to 4, joined with commas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .bulk import Sculpture
from .errors import InvalidStructureError, ResourceLimitError
from .precubical import Hda, PrecubicalSet

DEFAULT_GRID_LIMIT = 200_000


@dataclass(frozen=True)
class Cube:
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("corner vectors differ in length")
        for a, b in zip(self.lower, self.upper):
            if b - a not in (0, 1):
                raise ValueError(f"not an elementary cube: {self.lower}..{self.upper}")

    @property
    def directions(self) -> tuple[int, ...]:
        """0-based axes along which the cube extends, ascending."""
        return tuple(i for i, (a, b) in enumerate(zip(self.lower, self.upper)) if b > a)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def face(self, alpha: str, k: int) -> "Cube":
        axis = self.directions[k - 1]
        if alpha == "s":
            upper = list(self.upper)
            upper[axis] = self.lower[axis]
            return Cube(self.lower, tuple(upper))
        lower = list(self.lower)
        lower[axis] = self.upper[axis]
        return Cube(tuple(lower), self.upper)

    def cell_id(self) -> str:
        return ",".join(
            str(a) if a == b else f"{a}s"
            for a, b in zip(self.lower, self.upper)) or "pt"

    def sort_key(self):
        return (self.dim, self.lower, self.upper)


def cube(lower: Sequence[int], upper: Sequence[int]) -> Cube:
    return Cube(tuple(lower), tuple(upper))


@dataclass(frozen=True)
class EuclideanComplex:
    ambient: int
    cubes: frozenset[Cube]

    def sorted_cubes(self) -> tuple[Cube, ...]:
        return tuple(sorted(self.cubes, key=Cube.sort_key))

    def top_cells(self, n: int) -> tuple[Cube, ...]:
        return tuple(c for c in self.sorted_cubes() if c.dim == n)


def face_closure(cubes: Iterable[Cube]) -> tuple[set[Cube], set[Cube]]:
    """Close a cube set under faces; returns (closed set, cubes added)."""
    closed = set(cubes)
    added: set[Cube] = set()
    stack = list(closed)
    while stack:
        c = stack.pop()
        for k in range(1, c.dim + 1):
            for alpha in "st":
                f = c.face(alpha, k)
                if f not in closed:
                    closed.add(f)
                    added.add(f)
                    stack.append(f)
    return closed, added


def euclidean_complex(cubes: Iterable, auto_close: bool = True) -> tuple["EuclideanComplex", tuple[Cube, ...]]:
    """Build a face-closed complex; also reports any faces that were added."""
    normalized = {c if isinstance(c, Cube) else cube(*c) for c in cubes}
    if not normalized:
        raise ValueError("empty complex")
    ambients = {len(c.lower) for c in normalized}
    if len(ambients) != 1:
        raise ValueError("cubes live in different ambient dimensions")
    closed, added = face_closure(normalized)
    if added and not auto_close:
        missing = sorted(added, key=Cube.sort_key)[0]
        raise InvalidStructureError(
            f"cube set not closed under faces, missing {missing.lower}..{missing.upper}")
    return EuclideanComplex(ambients.pop(), frozenset(closed)), tuple(sorted(added, key=Cube.sort_key))


def _precubical_from_cubes(cubes: Iterable[Cube]) -> PrecubicalSet:
    ordered = sorted(cubes, key=Cube.sort_key)
    cells: dict[int, list[str]] = {}
    s_faces: dict[str, tuple[str, ...]] = {}
    t_faces: dict[str, tuple[str, ...]] = {}
    for c in ordered:
        cells.setdefault(c.dim, []).append(c.cell_id())
        if c.dim >= 1:
            s_faces[c.cell_id()] = tuple(c.face("s", k).cell_id() for k in range(1, c.dim + 1))
            t_faces[c.cell_id()] = tuple(c.face("t", k).cell_id() for k in range(1, c.dim + 1))
    return PrecubicalSet({n: tuple(cs) for n, cs in sorted(cells.items())},
                         s_faces, t_faces)


# ---------------------------------------------------------------------------
# Grids


@dataclass(frozen=True)
class Grid:
    sizes: tuple[int, ...]
    hda: Hda


def grid(*sizes: int, max_cells: int = DEFAULT_GRID_LIMIT) -> Grid:
    """The full box with the given number of top cubes along each axis."""
    if any(m < 1 for m in sizes):
        raise ValueError("grid sizes must be positive")
    total = 1
    for m in sizes:
        total *= 2 * m + 1
    if total > max_cells:
        raise ResourceLimitError(f"grid {sizes} has {total} cells, over {max_cells}")
    tops = [Cube(pos, tuple(p + 1 for p in pos))
            for pos in itertools.product(*(range(m) for m in sizes))]
    if not sizes:
        tops = [Cube((), ())]
    closed, _ = face_closure(tops)
    base = _precubical_from_cubes(closed)
    initial = Cube((0,) * len(sizes), (0,) * len(sizes)).cell_id()
    return Grid(tuple(sizes), Hda(base, initial))


def make_grid(*sizes: int, max_cells: int = DEFAULT_GRID_LIMIT) -> Hda:
    return grid(*sizes, max_cells=max_cells).hda


def _parse_tokens(cell: str) -> tuple[tuple[int, bool], ...]:
    """Per-axis (coordinate, is_span) pairs for a cube cell id."""
    if cell == "pt":
        return ()
    out = []
    for tok in cell.split(","):
        if tok.endswith("s"):
            out.append((int(tok[:-1]), True))
        else:
            out.append((int(tok), False))
    return tuple(out)


def grid_to_bulk(g: Grid) -> Sculpture:
    """Embed a grid into the bulk with one event per unit step of each axis.

    Along axis k at position j, the first j of that axis' events are done,
    the (j+1)-th runs exactly on the span from j to j+1, the rest have not
    started.
    """
    d = sum(g.sizes)
    em: dict[str, str] = {}
    for cell in g.hda.all_cells():
        chunks = []
        for (j, is_span), m in zip(_parse_tokens(cell), g.sizes):
            if is_span:
                chunks.append("1" * j + "x" + "0" * (m - j - 1))
            else:
                chunks.append("1" * j + "0" * (m - j))
        em[cell] = "".join(chunks)
    return Sculpture(g.hda, d, em)


# ---------------------------------------------------------------------------
# Complexes as automata


@dataclass(frozen=True)
class ComplexEmbedding:
    """An HDA built from a complex, with its bounding-grid embedding."""

    complex: EuclideanComplex
    hda: Hda
    grid: Grid
    grid_map: Mapping[str, str]   # complex cell id -> grid cell id
    added_faces: tuple[Cube, ...]

    def to_sculpture(self) -> Sculpture:
        bulk_em = grid_to_bulk(self.grid).em
        return Sculpture(self.hda, sum(self.grid.sizes),
                         {c: bulk_em[self.grid_map[c]] for c in self.hda.all_cells()})


def complex_to_hda(cubes: Iterable, initial: Sequence[int] | None = None,
                   auto_close: bool = True) -> ComplexEmbedding:
    """Read a cube set as an HDA embedded in its bounding grid.

    ``initial`` designates the initial vertex by its coordinates; by default
    the minimal corner of the bounding box is used, which must be present.
    Axes along which the complex is flat are projected away in the grid.
    """
    comp, added = euclidean_complex(cubes, auto_close=auto_close)
    ordered = comp.sorted_cubes()
    lo = tuple(min(c.lower[i] for c in ordered) for i in range(comp.ambient))
    hi = tuple(max(c.upper[i] for c in ordered) for i in range(comp.ambient))
    axes = [i for i in range(comp.ambient) if hi[i] > lo[i]]
    if initial is None:
        initial = lo
    init_cube = Cube(tuple(initial), tuple(initial))
    if init_cube not in comp.cubes:
        raise ValueError(f"initial vertex {tuple(initial)} is not in the complex")
    base = _precubical_from_cubes(ordered)
    h = Hda(base, init_cube.cell_id())
    g = grid(*(hi[i] - lo[i] for i in axes))
    grid_map = {}
    for c in ordered:
        shifted = Cube(tuple(c.lower[i] - lo[i] for i in axes),
                       tuple(c.upper[i] - lo[i] for i in axes))
        grid_map[c.cell_id()] = shifted.cell_id()
    return ComplexEmbedding(comp, h, g, grid_map, added)


def sculpture_to_complex(s: Sculpture) -> EuclideanComplex:
    """Reinterpret bulk coordinates as unit-cube corners in the integer lattice."""
    cubes = set()
    for cell in s.hda.all_cells():
        img = s.em[cell]
        lower = tuple(1 if ch == "1" else 0 for ch in img)
        upper = tuple(0 if ch == "0" else 1 for ch in img)
        cubes.add(Cube(lower, upper))
    return EuclideanComplex(s.d, frozenset(cubes))


# ---------------------------------------------------------------------------
# JSON


def complex_to_json(c: EuclideanComplex) -> dict:
    return {"cubes": [{"a": list(q.lower), "b": list(q.upper)}
                      for q in c.sorted_cubes()]}


def complex_from_json(data: Mapping) -> EuclideanComplex:
    comp, _ = euclidean_complex(
        [cube(q["a"], q["b"]) for q in data["cubes"]], auto_close=True)
    return comp
