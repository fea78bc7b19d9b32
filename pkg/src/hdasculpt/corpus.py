"""Hand-built example automata with their expected decision outcomes.

Each fixture builds a small HDA exercising one corner of the theory: open
and broken boxes, loops and their finite unfoldings, interleaving webs that
force event merges, a backtracking case, and the consistency and order
pathologies.  Squares are wired with s_1/t_1 as one pair of opposite edges
and s_2/t_2 as the other; comments note the intended picture.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Callable, Iterable

from .bulk import Sculpture, make_bulk
from .precubical import Hda, hda, hda_to_json
from .st_chu import StStructure, st


@dataclass(frozen=True)
class Fixture:
    name: str
    build: Callable[[], Hda]
    sculptable: bool | None            # None: not a decision fixture
    expected_d: int | None = None
    expected_witness: tuple[str, ...] = ()
    expected_classes: int | None = None
    expected_partition: tuple[tuple[str, ...], ...] | None = None
    notes: str = ""


def _square(name, bl, br, tl, tr, left, right, bottom, top):
    """Face tables for one filled square.

    s_1/t_1 are the left and right edges, s_2/t_2 bottom and top; the four
    corners follow from the face identities.
    """
    return {
        name: {"s": (left, bottom), "t": (right, top)},
        left: {"s": (bl,), "t": (tl,)},
        right: {"s": (br,), "t": (tr,)},
        bottom: {"s": (bl,), "t": (br,)},
        top: {"s": (tl,), "t": (tr,)},
    }


def _assemble(cells, tables, initial):
    s = {c: spec["s"] for c, spec in tables.items()}
    t = {c: spec["t"] for c, spec in tables.items()}
    return hda(cells, s, t, initial)


# ---------------------------------------------------------------------------
# Boxes


def sub_bulk(d: int, removed: Iterable[str]) -> Hda:
    """The d-cube with some higher cells removed (faces of kept cells stay)."""
    full = make_bulk(d)
    drop = set(removed)
    cells = {n: tuple(c for c in full.grade(n) if c not in drop)
             for n in range(d + 1)}
    cells = {n: cs for n, cs in cells.items() if cs}
    kept = {c for cs in cells.values() for c in cs}
    s = {c: full.base.s_faces[c] for c in kept if full.dim(c) >= 1}
    t = {c: full.base.t_faces[c] for c in kept if full.dim(c) >= 1}
    return hda(cells, s, t, "0" * d)


def matchbox() -> Hda:
    """An open box: the 3-cube surface without its interior and one square."""
    return sub_bulk(3, ["xxx", "0xx"])


def matchbox_sculpture() -> Sculpture:
    """The matchbox with its evident five-face embedding into the 3-cube."""
    h = matchbox()
    return Sculpture(h, 3, {c: c for c in h.all_cells()})


def broken_box() -> Hda:
    """The matchbox unfolding: the far corner splits into two vertices.

    Routes to the corner opposite the missing square via its two sides are
    not homotopic in the matchbox, so unfolding doubles that corner and the
    edge out of it.
    """
    verts = ["000", "001", "010", "100", "011a", "011b", "101", "110", "111"]
    edges = {
        "00x": ("000", "001"), "0x0": ("000", "010"), "x00": ("000", "100"),
        "0x1": ("001", "011a"), "x01": ("001", "101"), "01x": ("010", "011b"),
        "x10": ("010", "110"), "10x": ("100", "101"), "1x0": ("100", "110"),
        "x11a": ("011a", "111"), "x11b": ("011b", "111"),
        "1x1": ("101", "111"), "11x": ("110", "111"),
    }
    squares = {
        "x0x": {"s": ("00x", "x00"), "t": ("10x", "x01")},
        "xx0": {"s": ("0x0", "x00"), "t": ("1x0", "x10")},
        "xx1": {"s": ("0x1", "x01"), "t": ("1x1", "x11a")},
        "x1x": {"s": ("01x", "x10"), "t": ("11x", "x11b")},
        "1xx": {"s": ("10x", "1x0"), "t": ("11x", "1x1")},
    }
    s = {e: (v,) for e, (v, _) in edges.items()}
    t = {e: (w,) for e, (_, w) in edges.items()}
    s.update({q: spec["s"] for q, spec in squares.items()})
    t.update({q: spec["t"] for q, spec in squares.items()})
    return hda({0: verts, 1: list(edges), 2: list(squares)}, s, t, "000")


# ---------------------------------------------------------------------------
# Loops, triangles, and their unfoldings


def ab_loop() -> Hda:
    """Two states with an a-edge across and a b-edge back."""
    return hda({0: ["I", "v"], 1: ["a", "b"]},
               {"a": ("I",), "b": ("v",)},
               {"a": ("v",), "b": ("I",)}, "I")


def ab_chain() -> Hda:
    """Depth-3 truncation of the loop's unfolding: a, then b, then a again."""
    return hda({0: ["v0", "v1", "v2", "v3"], 1: ["a1", "b1", "a2"]},
               {"a1": ("v0",), "b1": ("v1",), "a2": ("v2",)},
               {"a1": ("v1",), "b1": ("v2",), "a2": ("v3",)}, "v0")


def triangle() -> Hda:
    """One state reached both by a single edge and by a two-edge route."""
    return hda({0: ["0", "1", "2"], 1: ["a", "b", "c"]},
               {"a": ("0",), "b": ("0",), "c": ("1",)},
               {"a": ("2",), "b": ("1",), "c": ("2",)}, "0")


def triangle_unfolding() -> Hda:
    """The triangle with the shared endpoint split in two."""
    return hda({0: ["0", "1", "2a", "2b"], 1: ["a", "b", "c"]},
               {"a": ("0",), "b": ("0",), "c": ("1",)},
               {"a": ("2b",), "b": ("1",), "c": ("2a",)}, "0")


# ---------------------------------------------------------------------------
# The speed game


def speed_game() -> Hda:
    """Two racing regions: one agent's finish decides another's choice."""
    cells = {
        0: ["00", "10a", "20a", "10b", "20b", "01", "11", "21a", "21b"],
        1: ["d1", "b1", "d2", "c1", "d3", "b2", "c2", "a1", "a2", "a3", "a4", "a5"],
        2: ["A", "B", "C", "D"],
    }
    tables = {}
    tables.update(_square("A", "00", "10a", "01", "11", "a1", "a2", "d1", "d3"))
    tables.update(_square("B", "10a", "20a", "11", "21a", "a2", "a4", "b1", "b2"))
    tables.update(_square("C", "00", "10b", "01", "11", "a1", "a3", "d2", "d3"))
    tables.update(_square("D", "10b", "20b", "11", "21b", "a3", "a5", "c1", "c2"))
    return _assemble(cells, tables, "00")


# ---------------------------------------------------------------------------
# The asymmetric conflict


def asym_conflict() -> Hda:
    """a or b from the start, but a again after b; no filled square."""
    return hda({0: ["00", "10", "01", "11"], 1: ["a1", "b", "a2"]},
               {"a1": ("00",), "b": ("00",), "a2": ("01",)},
               {"a1": ("10",), "b": ("01",), "a2": ("11",)}, "00")


def asym_conflict_sculptures() -> tuple[Sculpture, Sculpture]:
    """The same automaton read with the two a-edges equal, then distinct."""
    h = asym_conflict()
    two = Sculpture(h, 2, {"00": "00", "10": "10", "01": "01", "11": "11",
                           "a1": "x0", "b": "0x", "a2": "x1"})
    three = Sculpture(h, 3, {"00": "000", "10": "100", "01": "010", "11": "011",
                             "a1": "x00", "b": "0x0", "a2": "01x"})
    return two, three


def asym_conflict_st() -> StStructure:
    return st(["a", "b"], [
        ((), ()), (("a",), ()), (("a",), ("a",)),
        (("b",), ()), (("b",), ("b",)),
        (("a", "b"), ("b",)), (("a", "b"), ("a", "b")),
    ])


# ---------------------------------------------------------------------------
# Squares


def empty_square() -> Hda:
    """Two interleaving transitions with no filled interior."""
    return hda({0: ["I", "A", "B", "F"], 1: ["q1", "q2", "q3", "q4"]},
               {"q1": ("I",), "q2": ("I",), "q3": ("B",), "q4": ("A",)},
               {"q1": ("A",), "q2": ("B",), "q3": ("F",), "q4": ("F",)}, "I")


def filled_square() -> Hda:
    cells = {0: ["00", "10", "01", "11"], 1: ["l", "r", "b", "t"], 2: ["q"]}
    tables = _square("q", "00", "10", "01", "11", "l", "r", "b", "t")
    return _assemble(cells, tables, "00")


def repeating_square() -> Hda:
    """A filled square with the upper-left and lower-right corners identified."""
    cells = {0: ["I", "m", "F"], 1: ["l", "r", "b", "t"], 2: ["q"]}
    tables = _square("q", "I", "m", "m", "F", "l", "r", "b", "t")
    return _assemble(cells, tables, "I")


# ---------------------------------------------------------------------------
# The interleaving web and the backtracking example


def wheel() -> Hda:
    """A one-dimensional web of interleavings whose merges collide.

    All a-labeled edges are forced equal through four interleaving squares,
    after which two distinct states receive the same configuration.
    """
    verts = ["1", "2", "3", "5", "6", "7", "9", "10", "11", "12"]
    arcs = {
        "c1": ("9", "5"), "b2": ("5", "6"), "b1": ("9", "10"), "c2": ("10", "6"),
        "a2": ("5", "1"), "a1": ("6", "2"), "a5": ("6", "7"),
        "a3": ("9", "11"), "a4": ("10", "12"),
        "c4": ("11", "1"), "b3": ("1", "2"), "g1": ("2", "3"), "g2": ("7", "3"),
        "b4": ("11", "12"), "c3": ("12", "7"),
    }
    return hda({0: verts, 1: list(arcs)},
               {e: (v,) for e, (v, _) in arcs.items()},
               {e: (w,) for e, (_, w) in arcs.items()}, "9")


def backtracker() -> Hda:
    """A sculptable variation of the web where a first merge can go wrong."""
    verts = [str(i) for i in range(1, 13)]
    arcs = {
        "d1": ("1", "2"), "b1": ("5", "1"), "b2": ("6", "2"), "a1": ("2", "3"),
        "b3": ("7", "3"), "a2": ("1", "4"), "d2": ("5", "6"), "a3": ("6", "7"),
        "c1": ("8", "4"), "b4": ("11", "8"), "c2": ("9", "5"), "d3": ("9", "10"),
        "c3": ("10", "6"), "a4": ("9", "11"), "d4": ("11", "12"),
        "c4": ("12", "7"), "a5": ("10", "12"),
    }
    return hda({0: verts, 1: list(arcs)},
               {e: (v,) for e, (v, _) in arcs.items()},
               {e: (w,) for e, (_, w) in arcs.items()}, "9")


# ---------------------------------------------------------------------------
# Consistency and order pathologies


def collapsed_square() -> Hda:
    """One square whose four edge faces are all the same edge."""
    return hda({0: ["q0"], 1: ["q1"], 2: ["q2"]},
               {"q1": ("q0",), "q2": ("q1", "q1")},
               {"q1": ("q0",), "q2": ("q1", "q1")}, "q0")


def shared_edge_strip() -> Hda:
    """Three adjacent squares whose first and third share one extra edge.

    The left edge of the first square is also the bottom edge of the third,
    which forces two corner identifications; the result is inconsistent yet
    non-selflinked.
    """
    verts = ["A", "B", "p10", "p11", "p21", "p31"]
    edges = {
        "e": ("A", "B"),          # left of q2 and bottom of q2pp
        "h0": ("A", "p10"), "h1": ("p10", "A"),
        "v1": ("p10", "p11"), "v2": ("A", "p21"), "v3": ("B", "p31"),
        "g0": ("B", "p11"), "g1": ("p11", "p21"), "g2": ("p21", "p31"),
    }
    squares = {
        "q2": {"s": ("e", "h0"), "t": ("v1", "g0")},
        "q2p": {"s": ("v1", "h1"), "t": ("v2", "g1")},
        "q2pp": {"s": ("v2", "e"), "t": ("v3", "g2")},
    }
    s = {e: (v,) for e, (v, _) in edges.items()}
    t = {e: (w,) for e, (_, w) in edges.items()}
    s.update({q: spec["s"] for q, spec in squares.items()})
    t.update({q: spec["t"] for q, spec in squares.items()})
    return hda({0: verts, 1: list(edges), 2: list(squares)}, s, t, "A")


def pinched_square() -> Hda:
    """A filled square with two opposite corners identified into one vertex."""
    cells = {0: ["x", "v", "y"], 1: ["a", "b", "c", "d"], 2: ["q2"]}
    tables = _square("q2", "x", "v", "v", "y", "a", "b", "c", "d")
    return _assemble(cells, tables, "x")


def three_squares() -> Hda:
    """Three squares fanning out of one vertex with a cyclic face numbering."""
    verts = ["0", "1", "2", "3", "4", "5", "6"]
    edges = {
        "a": ("0", "1"), "b": ("0", "5"), "c": ("0", "3"),
        "d": ("1", "2"), "e": ("3", "2"), "f": ("3", "4"),
        "g": ("5", "4"), "h": ("5", "6"), "i": ("1", "6"),
    }
    squares = {
        "A": {"s": ("c", "a"), "t": ("d", "e")},
        "B": {"s": ("a", "b"), "t": ("h", "i")},
        "C": {"s": ("b", "c"), "t": ("f", "g")},
    }
    s = {e: (v,) for e, (v, _) in edges.items()}
    t = {e: (w,) for e, (_, w) in edges.items()}
    s.update({q: spec["s"] for q, spec in squares.items()})
    t.update({q: spec["t"] for q, spec in squares.items()})
    return hda({0: verts, 1: list(edges), 2: list(squares)}, s, t, "0")


def three_squares_reordered() -> Hda:
    """The same fan with the first square's face pairs swapped; ordered."""
    h = three_squares()
    s = {c: h.base.s_faces[c] for c in h.base.s_faces}
    t = {c: h.base.t_faces[c] for c in h.base.t_faces}
    s["A"] = (s["A"][1], s["A"][0])
    t["A"] = (t["A"][1], t["A"][0])
    return hda({n: list(cs) for n, cs in h.base.cells.items()}, s, t, "0")


# ---------------------------------------------------------------------------
# The fixture table


def fixtures() -> tuple[Fixture, ...]:
    return (
        Fixture("matchbox", matchbox, True, expected_d=3, expected_classes=3),
        Fixture("broken_box", broken_box, False,
                expected_witness=("label_clash",)),
        Fixture("ab_loop", ab_loop, False,
                expected_witness=("repeating_events",),
                notes="cyclic; the pumped loop repeats its first event"),
        Fixture("ab_chain", ab_chain, True, expected_d=3),
        Fixture("triangle", triangle, False,
                expected_witness=("length_mismatch",)),
        Fixture("triangle_unfolding", triangle_unfolding, True, expected_d=3),
        Fixture("speed_game", speed_game, False,
                expected_witness=("label_clash",)),
        Fixture("asym_conflict", asym_conflict, True, expected_d=3),
        Fixture("empty_square", empty_square, True, expected_d=2,
                expected_partition=(("q1", "q3"), ("q2", "q4"))),
        Fixture("filled_square", filled_square, True, expected_d=2),
        Fixture("wheel", wheel, False, expected_witness=("label_clash",)),
        Fixture("backtracker", backtracker, True, expected_d=4,
                expected_classes=4),
        Fixture("collapsed_square", collapsed_square, False,
                expected_witness=("not_ordered",),
                notes="inconsistent, hence not ordered"),
        Fixture("shared_edge_strip", shared_edge_strip, False,
                expected_witness=("not_ordered",)),
        Fixture("pinched_square", pinched_square, False,
                expected_witness=("repeating_events",),
                notes="consistent but a sequential path repeats"),
        Fixture("three_squares", three_squares, False,
                expected_witness=("not_ordered",)),
        Fixture("three_squares_reordered", three_squares_reordered, True,
                expected_d=3),
    )


def fixture(name: str) -> Fixture:
    for f in fixtures():
        if f.name == name:
            return f
    raise KeyError(name)


def run_fixture(f: Fixture):
    """Decide a fixture and compare against its expectations."""
    from .decision import decide_sculptable
    h = f.build()
    verdict = decide_sculptable(h)
    failures = []
    if verdict.sculptable != f.sculptable:
        failures.append(f"expected sculptable={f.sculptable}, got {verdict.sculptable}")
    if f.expected_d is not None and verdict.d != f.expected_d:
        failures.append(f"expected d={f.expected_d}, got {verdict.d}")
    if f.expected_classes is not None and len(verdict.partition or ()) != f.expected_classes:
        failures.append(f"expected {f.expected_classes} classes, "
                        f"got {len(verdict.partition or ())}")
    if f.expected_witness and (verdict.witness is None
                               or verdict.witness.kind not in f.expected_witness):
        got = verdict.witness.kind if verdict.witness else None
        failures.append(f"expected witness in {f.expected_witness}, got {got}")
    if f.expected_partition is not None:
        from .events import partition_to_json, universal_events
        rendered = partition_to_json(universal_events(h.base), verdict.partition)
        want = sorted(sorted(p) for p in f.expected_partition)
        if rendered != want:
            failures.append(f"expected partition {want}, got {rendered}")
    return verdict, failures


def export_corpus(directory: str) -> list[str]:
    """Write every fixture as a JSON file; returns the paths written."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for f in fixtures():
        data = {
            "name": f.name,
            "hda": hda_to_json(f.build()),
            "expected": {
                "sculptable": f.sculptable,
                "d": f.expected_d,
                "witness": list(f.expected_witness) or None,
            },
        }
        path = os.path.join(directory, f"{f.name}.json")
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(path)
    return written
