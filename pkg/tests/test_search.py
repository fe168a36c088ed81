import random

import pytest
from hypothesis import given, settings, strategies as st

from nullmove.board import START_FEN, generate_moves, in_check, make_move, make_null_move, parse_fen
from nullmove.evaluation import INF, MATE, MATE_THRESHOLD, evaluate
from nullmove.search import (
    NoLegalMoves,
    PolicyKind,
    PruningPolicy,
    Searcher,
    SearchLimits,
    fail_high_reduction,
    is_mate_score,
    mate_distance,
    null_move_allowed,
    quiescence,
    search_root,
)
from oracles import minimax_value, quiescence_value

ALL_POLICIES = [
    PruningPolicy.no_null(),
    PruningPolicy.standard(1),
    PruningPolicy.standard(2),
    PruningPolicy.standard(3),
    PruningPolicy.verified(3),
    PruningPolicy(PolicyKind.VARIANT_NO_CUTOFF_REDUCE2, 3),
    PruningPolicy(PolicyKind.VARIANT_REDUCE_ONE_EVERYWHERE, 3),
    PruningPolicy(PolicyKind.VARIANT_REDUCE_ONE_THEN_TWO, 3),
]

MATE_IN_ONE = "6k1/5ppp/8/8/8/8/8/R5K1 w - - 0 1"
# Qxh7+ Kxh7 hxg6#
MATE_IN_TWO = "r1bq2rk/pp3pbp/2p1p1pQ/7P/3P4/2PB1N2/PP3PPR/2KR4 w - - 0 1"


def random_positions(seed, count, min_plies=4, max_plies=40):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = parse_fen(START_FEN)
        for _ in range(rng.randint(min_plies, max_plies)):
            moves = generate_moves(p)
            if not moves:
                break
            make_move(p, rng.choice(moves))
        if generate_moves(p):
            out.append(p)
    return out


def no_tt_searcher(policy=None):
    return Searcher(policy or PruningPolicy.no_null(), tt_bytes=0)


@pytest.mark.parametrize("index", range(25))
def test_matches_alpha_beta_oracle(index):
    p = random_positions(101, 25)[index]
    result = no_tt_searcher().run(p, SearchLimits(depth=3))
    assert result.value == minimax_value(p, 3)


@pytest.mark.parametrize("index", range(4))
def test_oracle_pruned_and_unpruned_agree(index):
    p = random_positions(5, 4, max_plies=12)[index]
    assert minimax_value(p, 2, prune=True) == minimax_value(p, 2, prune=False)


@pytest.mark.parametrize("index", range(10))
def test_zero_window_consistency(index):
    p = random_positions(202, 10)[index]
    full = minimax_value(p, 2)
    for beta in (full - 30, full, full + 1, full + 30):
        v = no_tt_searcher().search(p, beta - 1, beta, 2)
        assert (v >= beta) == (full >= beta)


@pytest.mark.parametrize("index", range(10))
def test_fail_soft_bounds(index):
    p = random_positions(303, 10)[index]
    exact = minimax_value(p, 2)
    lo = no_tt_searcher().search(p, exact + 10, exact + 50, 2)
    hi = no_tt_searcher().search(p, exact - 50, exact - 10, 2)
    # fail-soft: the bound returned still brackets the true value
    assert exact <= lo <= exact + 10
    assert exact - 10 <= hi <= exact


@pytest.mark.parametrize("policy", ALL_POLICIES, ids=lambda p: p.label)
def test_mate_in_one_every_policy(policy):
    p = parse_fen(MATE_IN_ONE)
    result = search_root(p, policy, SearchLimits(depth=2))
    assert result.value == MATE - 1
    assert result.best_move.uci() == "a1a8"


def test_mate_in_two_verified():
    p = parse_fen(MATE_IN_TWO)
    result = search_root(p, PruningPolicy.verified(3), SearchLimits(depth=4))
    assert result.value == MATE - 3
    assert mate_distance(result.value) == 3
    assert len(result.pv) >= 3
    assert result.best_move.uci() == "h6h7"


@pytest.mark.parametrize("index", range(6))
def test_colour_mirror_keeps_value(index):
    p = random_positions(404, 6)[index]
    a = no_tt_searcher().run(p, SearchLimits(depth=3)).value
    b = no_tt_searcher().run(p.mirror(), SearchLimits(depth=3)).value
    assert a == b


def test_pv_is_legal_and_starts_with_best_move():
    p = parse_fen("r1bqkbnr/pppp1ppp/2n5/4p3/2B1P3/5Q2/PPPP1PPP/RNB1K1NR w KQkq - 2 3")
    result = search_root(p, PruningPolicy.verified(3), SearchLimits(depth=5))
    assert result.pv[0] == result.best_move
    q = p.copy()
    for m in result.pv:
        assert m in generate_moves(q)
        make_move(q, m)
    # Qxf7 is mate
    assert result.best_move.uci() == "f3f7"


@pytest.mark.parametrize("policy", ALL_POLICIES[:5], ids=lambda p: p.label)
def test_repeated_runs_are_identical(policy):
    p = random_positions(7, 1, 20, 20)[0]
    a = search_root(p, policy, SearchLimits(depth=5))
    b = search_root(p, policy, SearchLimits(depth=5))
    assert (a.best_move, a.value, a.pv, a.stats) == (b.best_move, b.value, b.pv, b.stats)


@pytest.mark.parametrize("policy", ALL_POLICIES, ids=lambda p: p.label)
def test_node_accounting(policy):
    p = random_positions(8, 1, 16, 16)[0]
    s = search_root(p, policy, SearchLimits(depth=5)).stats
    assert s.calls == s.nodes + s.qnodes + s.delegated
    assert s.total_nodes == sum(s.iteration_nodes)
    assert s.null_fail_highs <= s.null_tried
    assert s.tt_hits <= s.tt_probes
    if policy.kind == PolicyKind.NO_NULL:
        assert s.null_tried == 0


def test_node_limit_stops_and_reports_incomplete():
    p = random_positions(9, 1, 10, 10)[0]
    result = search_root(p, PruningPolicy.verified(3), SearchLimits(depth=30, nodes=20_000))
    assert not result.completed
    assert result.best_move in generate_moves(p)
    assert result.depth < 30


def test_no_legal_moves_distinguishes_mate_and_stalemate():
    with pytest.raises(NoLegalMoves) as err:
        search_root(parse_fen("R5k1/5ppp/8/8/8/8/8/6K1 b - - 0 1"), PruningPolicy.verified(), SearchLimits(depth=2))
    assert err.value.checkmate
    with pytest.raises(NoLegalMoves) as err:
        search_root(parse_fen("7k/5Q2/6K1/8/8/8/8/8 b - - 0 1"), PruningPolicy.verified(), SearchLimits(depth=2))
    assert not err.value.checkmate


@pytest.mark.parametrize("kwargs", [{}, {"depth": 0}, {"depth": 500}, {"nodes": 0}, {"time_seconds": -1.0}])
def test_bad_limits(kwargs):
    with pytest.raises(ValueError):
        SearchLimits(**kwargs)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_mate_scores_decode_within_depth(seed):
    p = random_positions(seed, 1, 30, 80)[0]
    result = search_root(p, PruningPolicy.verified(3), SearchLimits(depth=4))
    if is_mate_score(result.value):
        assert mate_distance(result.value) <= 4 + 2
    assert abs(result.value) <= MATE


def test_mate_score_survives_transposition_table():
    # the same mate found twice through the TT keeps its distance
    s = Searcher(PruningPolicy.verified(3))
    p = parse_fen(MATE_IN_TWO)
    first = s.run(p, SearchLimits(depth=4)).value
    second = s.run(p, SearchLimits(depth=4)).value
    assert first == second == MATE - 3


class TestNullMoveAllowed:
    def test_in_check(self):
        p = parse_fen("4k3/8/8/8/8/8/4r3/R3K3 w - - 0 1")
        assert not null_move_allowed(p, 5, False)

    def test_after_null_move(self):
        p = parse_fen(START_FEN)
        make_null_move(p)
        assert not null_move_allowed(p, 5, False)

    def test_king_and_pawns(self):
        p = parse_fen("4k3/pppp4/8/8/8/8/PPPP4/4K3 w - - 0 1")
        assert not null_move_allowed(p, 5, False)

    def test_verify_depth_one(self):
        p = parse_fen(START_FEN)
        assert not null_move_allowed(p, 1, True)
        assert null_move_allowed(p, 1, False)
        assert null_move_allowed(p, 2, True)

    def test_standard_ignores_verify(self):
        p = parse_fen(START_FEN)
        assert null_move_allowed(p, 1, True, PruningPolicy.standard(2))

    def test_no_null_policy(self):
        assert not null_move_allowed(parse_fen(START_FEN), 8, True, PruningPolicy.no_null())


@pytest.mark.parametrize(
    "kind, verify, expected",
    [
        (PolicyKind.STANDARD, True, 0),
        (PolicyKind.VERIFIED, True, 1),
        (PolicyKind.VERIFIED, False, 0),
        (PolicyKind.VARIANT_NO_CUTOFF_REDUCE2, True, 2),
        (PolicyKind.VARIANT_REDUCE_ONE_EVERYWHERE, False, 1),
        (PolicyKind.VARIANT_REDUCE_ONE_THEN_TWO, True, 1),
        (PolicyKind.VARIANT_REDUCE_ONE_THEN_TWO, False, 2),
    ],
)
def test_fail_high_reduction(kind, verify, expected):
    assert fail_high_reduction(int(kind), verify) == expected


class TestPolicyParsing:
    @pytest.mark.parametrize(
        "text, R, label",
        [
            ("std", None, "std2"),
            ("std", 3, "std3"),
            ("verified", None, "vrfd3"),
            ("vrfd3", None, "vrfd3"),
            ("nonull", None, "nonull"),
            ("var-reduce1", None, "reduce1-3"),
            ("var-nocut2", None, "nocut2-3"),
            ("var-reduce12", None, "reduce12-3"),
            ("std1", None, "std1"),
        ],
    )
    def test_names(self, text, R, label):
        assert PruningPolicy.parse(text, R).label == label

    @pytest.mark.parametrize("text", ["", "fast", "std0x"])
    def test_unknown(self, text):
        with pytest.raises(ValueError):
            PruningPolicy.parse(text)

    def test_R_must_be_positive(self):
        with pytest.raises(ValueError):
            PruningPolicy.standard(0)

    def test_labels_round_trip(self):
        for policy in ALL_POLICIES:
            assert PruningPolicy.parse(policy.label) == policy


class TestQuiescence:
    def test_quiet_position_is_stand_pat(self):
        p = parse_fen("4k3/8/8/8/8/8/8/3QK3 w - - 0 1")
        assert quiescence(p) == evaluate(p)

    def test_free_queen(self):
        p = parse_fen("4k3/8/8/3q4/4P3/8/8/4K3 w - - 0 1")
        assert quiescence(p) >= evaluate(p) + 800

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_never_below_stand_pat(self, seed):
        p = random_positions(seed, 1, 6, 40)[0]
        if in_check(p):
            return
        assert quiescence(p) >= evaluate(p)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_matches_oracle(self, seed):
        p = random_positions(seed, 1, 6, 40)[0]
        assert quiescence(p) == quiescence_value(p)

    def test_window_must_be_open(self):
        with pytest.raises(ValueError):
            Searcher(PruningPolicy.no_null()).quiescence(parse_fen(START_FEN), 5, 5)


def test_searcher_rejects_closed_window():
    with pytest.raises(ValueError):
        no_tt_searcher().search(parse_fen(START_FEN), 10, -10, 2)


def test_mate_threshold_below_mate():
    assert MATE_THRESHOLD < MATE - 1 < INF
