"""Core structure tests: validation, linkage, reachability, paths, homotopy."""

import pytest

from hdasculpt import (IllegalPathError, Path, Step, corpus, elementary_homotopies,
                       hda, homotopy_class, is_acyclic, is_connected,
                       is_non_selflinked, make_bulk, normalize_path,
                       precubical, rooted_paths, validate_hda, validate_path,
                       validate_precubical)


def square_with_corners():
    """One 2-cell with 4 distinct edges and 4 distinct corners."""
    return corpus.filled_square().base


def test_validate_single_square_ok():
    assert validate_precubical(square_with_corners()).ok


def test_validate_lone_vertex_ok():
    assert validate_precubical(precubical({0: ["v"]}, {}, {})).ok


def test_validate_reports_miswired_identity():
    # bottom edge of the square rewired to start at the wrong corner
    h = corpus.filled_square()
    s = {c: list(h.base.s_faces[c]) for c in h.base.s_faces}
    t = {c: list(h.base.t_faces[c]) for c in h.base.t_faces}
    s["b"] = ["10"]  # now s_1(s_2 q) = 10 but s_1(s_1 q) = 00
    report = validate_precubical(precubical(h.base.cells, s, t))
    assert not report.ok
    kinds = {p.kind for p in report.problems}
    assert "identity_violation" in kinds
    assert any(p.cell == "q" for p in report.problems)


def test_validate_reports_dangling_reference():
    report = validate_precubical(
        precubical({0: ["v"], 1: ["e"]}, {"e": ["v"]}, {"e": ["ghost"]}))
    assert [p.kind for p in report.problems] == ["dangling_face"]


def test_bulk_is_non_selflinked():
    ok, witness = is_non_selflinked(make_bulk(2).base)
    assert ok and witness is None


def test_pinched_square_is_selflinked_at_doubled_vertex():
    ok, witness = is_non_selflinked(corpus.pinched_square().base)
    assert not ok
    face, cell, w1, w2 = witness
    assert face == "v" and cell == "q2" and w1 != w2


def test_collapsed_square_is_selflinked():
    ok, _ = is_non_selflinked(corpus.collapsed_square().base)
    assert not ok


def test_connectivity_and_acyclicity():
    esq = corpus.empty_square()
    assert is_connected(esq)
    assert is_acyclic(esq)[0]

    loop = corpus.ab_loop()
    assert is_connected(loop)
    ok, pair = is_acyclic(loop)
    assert not ok and len(pair) == 2

    extra = hda({0: ["I", "A", "B", "F", "lost"],
                 1: ["q1", "q2", "q3", "q4"]},
                {e: esq.base.s_faces[e] for e in esq.base.s_faces},
                {e: esq.base.t_faces[e] for e in esq.base.t_faces}, "I")
    assert not is_connected(extra)


# ---------------------------------------------------------------------------
# Paths


def test_validate_path_rejects_bad_steps():
    esq = corpus.empty_square()
    good = Path("I", (Step("s", 1, "q1"), Step("t", 1, "A")))
    validate_path(esq, good)
    with pytest.raises(IllegalPathError):
        validate_path(esq, Path("I", (Step("s", 1, "q3"),)))
    with pytest.raises(IllegalPathError):
        validate_path(esq, Path("I", (Step("s", 2, "q1"),)))


def test_normalize_already_canonical_climb():
    b2 = make_bulk(2)
    p = Path("00", (Step("s", 1, "x0"), Step("s", 2, "xx")))
    n = normalize_path(b2, p)
    assert n == p


def test_normalize_up_up_down_in_bulk3():
    b3 = make_bulk(3)
    p = Path("000", (Step("s", 1, "x00"), Step("s", 2, "xx0"), Step("t", 1, "1x0")))
    n = normalize_path(b3, p)
    assert n.end() == p.end()
    assert n.type_string == "sts"
    # expected form computed by exhaustive search over elementary moves
    assert n in homotopy_class(b3, p)


def test_normalize_empty_path():
    b2 = make_bulk(2)
    p = Path("00")
    assert normalize_path(b2, p) == p


def test_normalize_output_homotopic_on_small_instances():
    for build in (corpus.matchbox, corpus.filled_square, corpus.empty_square):
        h = build()
        paths = rooted_paths(h, limit=1000)
        if len(paths) > 200:
            paths = paths[:200]
        for p in paths:
            n = normalize_path(h, p)
            validate_path(h, n)
            assert n.end() == p.end()
            assert n in homotopy_class(h, p)


def test_elementary_swap_on_filled_square():
    # climbing via the bottom edge then the square swaps to the left route
    fsq = corpus.filled_square()
    p = Path("00", (Step("s", 1, "b"), Step("s", 2, "q")))
    moves = elementary_homotopies(fsq, p)
    swapped = Path("00", (Step("s", 1, "l"), Step("s", 1, "q")))
    assert swapped in moves
    for m in moves:
        assert m.end() == p.end() and m.start == p.start


def test_no_moves_in_one_dimensional_hda():
    esq = corpus.empty_square()
    p = Path("I", (Step("s", 1, "q1"), Step("t", 1, "A"),
                   Step("s", 1, "q4"), Step("t", 1, "F")))
    assert elementary_homotopies(esq, p) == set()


def test_maximal_paths_of_filled_square_are_homotopic():
    # frozen from a breadth-first search over moves: class of 6 paths,
    # the two interleavings four moves apart
    fsq = corpus.filled_square()
    p1 = Path("00", (Step("s", 1, "b"), Step("t", 1, "10"),
                     Step("s", 1, "r"), Step("t", 1, "11")))
    p2 = Path("00", (Step("s", 1, "l"), Step("t", 1, "01"),
                     Step("s", 1, "t"), Step("t", 1, "11")))
    dist = {p1: 0}
    frontier = [p1]
    while frontier:
        nxt = []
        for p in frontier:
            for q in elementary_homotopies(fsq, p):
                if q not in dist:
                    dist[q] = dist[p] + 1
                    nxt.append(q)
        frontier = nxt
    assert len(dist) == 6
    assert dist[p2] == 4


def test_paths_from_operations_are_step_legal():
    for build in (corpus.empty_square, corpus.matchbox):
        h = build()
        for p in rooted_paths(h, limit=2000):
            for q in elementary_homotopies(h, p):
                validate_path(h, q)
                assert q.start == p.start and q.end() == p.end()


def test_hda_validation_checks_initial():
    h = hda({0: ["v"], 1: []}, {}, {}, "missing")
    assert not validate_hda(h).ok


def _all_face_relations(P, cell):
    """Independent oracle: every iterated-face word, outermost first."""
    results = {}

    def rec(cur, word):
        for k in range(1, P.dim(cur) + 1):
            for alpha in "st":
                nxt = P.face(alpha, k, cur)
                w = ((alpha, k),) + word
                results.setdefault(nxt, set()).add(w)
                rec(nxt, w)

    rec(cell, ())
    return results


def _canonicalize_word(word):
    """Bubble-rewrite a face word until its indices strictly increase."""
    word = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            (a1, k1), (a2, k2) = word[i], word[i + 1]
            if k1 >= k2:
                word[i], word[i + 1] = (a2, k2), (a1, k1 + 1)
                changed = True
    return tuple(word)


def test_selflinked_detection_matches_all_words_oracle():
    builds = (corpus.pinched_square, corpus.collapsed_square, corpus.matchbox,
              corpus.filled_square, corpus.shared_edge_strip,
              corpus.empty_square, corpus.broken_box, corpus.speed_game,
              corpus.three_squares)
    for build in builds:
        P = build().base
        brute = False
        for c in P.all_cells():
            if P.dim(c) == 0:
                continue
            for words in _all_face_relations(P, c).values():
                if len({_canonicalize_word(w) for w in words}) > 1:
                    brute = True
                    break
            if brute:
                break
        assert brute == (not is_non_selflinked(P)[0]), build.__name__


def test_elementary_moves_are_symmetric():
    for build in (corpus.filled_square, corpus.matchbox, corpus.speed_game):
        h = build()
        for p in rooted_paths(h, limit=300):
            for q in elementary_homotopies(h, p):
                assert p in elementary_homotopies(h, q)


def test_normalize_fuzz_on_bulks():
    # normal form: alternating index-1 pairs then the canonical climb, with
    # the path's configuration (a homotopy invariant) preserved
    import random

    from hdasculpt import StConfig, multilabel, universal_events
    from hdasculpt.precubical import coface_index

    def random_rooted_path(h, rng, max_len=10):
        cofaces = coface_index(h.base)
        p = Path(h.initial)
        for _ in range(rng.randrange(max_len)):
            cur = p.end()
            moves = [("s", k, up) for k, up in cofaces[cur]]
            moves += [("t", k, h.t(cur, k)) for k in range(1, h.dim(cur) + 1)]
            if not moves:
                break
            p = p.extend(*moves[rng.randrange(len(moves))])
        return p

    def config_of(h, ue, p):
        started, terminated = set(), set()
        cur = h.initial
        for s in p.steps:
            lab = multilabel(h.base, s.target if s.direction == "s" else cur,
                             ue)[s.index - 1]
            (started if s.direction == "s" else terminated).add(lab)
            cur = s.target
        return StConfig(frozenset(started), frozenset(terminated))

    rng = random.Random(424242)
    for d in (2, 3, 4):
        b = make_bulk(d)
        ue = universal_events(b.base)
        for _ in range(120):
            p = random_rooted_path(b, rng)
            n = normalize_path(b, p)
            validate_path(b, n)
            assert n.end() == p.end()
            k = b.dim(n.end())
            ts = n.type_string
            assert ts.endswith("s" * k)
            prefix = ts[:len(ts) - k]
            assert prefix == "st" * (len(prefix) // 2)
            climb = n.steps[len(n.steps) - k:]
            assert [s.index for s in climb] == list(range(1, k + 1))
            assert all(s.index == 1 for s in n.steps[:len(n.steps) - k])
            assert config_of(b, ue, n) == config_of(b, ue, p)
