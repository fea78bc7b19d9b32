"""PV parsing and the execution-space complex."""

import itertools

import pytest

from hdasculpt import (HeldAtEndError, PvSyntaxError, UnmatchedReleaseError,
                       decide_sculptable, is_connected, parse_pv, pv_to_complex)

TWO_MUTEX = "P(a) P(b) V(b) V(a)\nP(b) P(a) V(a) V(b)\n"


def test_parse_two_mutex_program():
    prog = parse_pv(TWO_MUTEX)
    assert len(prog.processes) == 2
    assert prog.resources == {"a": 1, "b": 1}
    assert [a.kind for a in prog.processes[0]] == ["P", "P", "V", "V"]


def test_parse_empty_file():
    prog = parse_pv("")
    assert prog.processes == ()


def test_parse_errors():
    with pytest.raises(HeldAtEndError):
        parse_pv("P(a)\n")
    with pytest.raises(UnmatchedReleaseError):
        parse_pv("V(a)\n")
    with pytest.raises(PvSyntaxError) as exc:
        parse_pv("P(a) Q(b)\n")
    assert exc.value.line == 1 and exc.value.column == 6
    with pytest.raises(PvSyntaxError):
        parse_pv("resource a capacity zero\n")


def test_capacity_header_and_comments():
    prog = parse_pv("# demo\nresource a capacity 2\nP(a) V(a)\nP(a) V(a)\n")
    assert prog.resources["a"] == 2


def _holds(actions, resource, j):
    count = 0
    for act in actions[:j]:
        if act.resource == resource:
            count += 1 if act.kind == "P" else -1
    return count > 0


def _forbidden_by_brute_force(prog):
    """Independent re-derivation of the forbidden cell set."""
    sizes = [len(p) for p in prog.processes]
    forbidden = set()
    axis = [[(j, False) for j in range(m + 1)] + [(j, True) for j in range(m)]
            for m in sizes]
    for profile in itertools.product(*axis):
        for r, cap in prog.resources.items():
            total = 0
            for (j, span), actions in zip(profile, prog.processes):
                if _holds(actions, r, j) or (span and _holds(actions, r, j + 1)):
                    total += 1
            if total > cap:
                forbidden.add(profile)
                break
    return forbidden


def test_two_mutex_complex_matches_brute_force():
    prog = parse_pv(TWO_MUTEX)
    emb = pv_to_complex(prog)
    forbidden = _forbidden_by_brute_force(prog)
    top_forbidden = {p for p in forbidden if all(span for _, span in p)}
    assert len(emb.complex.top_cells(2)) == 16 - len(top_forbidden)
    kept = {tuple((c.lower[i], c.upper[i] > c.lower[i])
                  for i in range(2)) for c in emb.complex.cubes}
    assert kept.isdisjoint(forbidden)
    total_cells = 5 * 5 + 2 * 5 * 4 + 4 * 4
    assert len(emb.complex.cubes) == total_cells - len(forbidden)


def test_two_mutex_hda_is_sculptable():
    emb = pv_to_complex(parse_pv(TWO_MUTEX))
    assert is_connected(emb.hda)
    assert decide_sculptable(emb.hda).sculptable


def test_single_process_is_a_two_edge_path():
    emb = pv_to_complex(parse_pv("P(a) V(a)\n"))
    assert [len(emb.hda.grade(n)) for n in range(2)] == [3, 2]


def test_shared_capacity_two_keeps_the_full_board():
    emb = pv_to_complex(parse_pv("resource a capacity 2\nP(a) V(a)\nP(a) V(a)\n"))
    assert len(emb.complex.top_cells(2)) == 4
    assert len(emb.complex.cubes) == 9 + 12 + 4


def test_keeping_is_monotone_in_capacity():
    base = "P(a) P(b) V(b) V(a)\nP(b) P(a) V(a) V(b)\n"
    kept_by_cap = []
    for cap in (1, 2, 3):
        text = f"resource a capacity {cap}\nresource b capacity {cap}\n" + base
        emb = pv_to_complex(parse_pv(text))
        kept_by_cap.append(emb.complex.cubes)
    assert kept_by_cap[0] <= kept_by_cap[1] <= kept_by_cap[2]


def test_infinite_capacity_gives_full_grid():
    text = "resource a capacity inf\nresource b capacity inf\n" + TWO_MUTEX
    emb = pv_to_complex(parse_pv(text))
    assert len(emb.complex.top_cells(2)) == 16
    assert len(emb.complex.cubes) == 25 + 2 * 20 + 16


def test_pv_outputs_are_sculptable():
    programs = [
        TWO_MUTEX,
        "P(a) V(a)\n",
        "P(a) V(a) P(b) V(b)\nP(b) V(b)\n",
        "resource s capacity 2\nP(s) V(s)\nP(s) V(s)\nP(s) V(s)\n",
    ]
    for text in programs:
        emb = pv_to_complex(parse_pv(text))
        assert decide_sculptable(emb.hda).sculptable, text


def test_three_process_ring_program_decides_quickly():
    # three processes in a ring of mutexes: the detour conflicts around the
    # forbidden regions resolve without factorial branching
    text = ("P(a) P(b) V(a) V(b)\n"
            "P(b) P(c) V(b) V(c)\n"
            "P(c) P(a) V(c) V(a)\n")
    emb = pv_to_complex(parse_pv(text))
    v = decide_sculptable(emb.hda)
    assert v.sculptable and v.sculpture.d == 12
    assert v.nodes_explored < 5000
