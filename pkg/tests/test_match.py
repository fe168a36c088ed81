import pytest

from nullmove.board import START_FEN, parse_fen
from nullmove.match import MatchError, insufficient_material, opening_fens, play_match
from nullmove.search import PruningPolicy

QUICK_MATE = "6k1/5ppp/8/8/8/8/5PPP/R5K1 w - - 0 1"


def test_self_play_is_symmetric():
    policy = PruningPolicy.verified(3)
    result = play_match(policy, policy, [START_FEN], depth=2, games=2, max_plies=40)
    assert (result.score_a, result.score_b) == (1.0, 1.0)
    assert result.games[0].moves == result.games[1].moves


def test_colours_alternate_and_openings_cycle():
    openings = [START_FEN, QUICK_MATE]
    result = play_match(PruningPolicy.standard(2), PruningPolicy.verified(3), openings, depth=2, games=4, max_plies=6)
    assert [g.white for g in result.games] == ["std2", "vrfd3", "std2", "vrfd3"]
    assert [g.opening for g in result.games] == [START_FEN, START_FEN, QUICK_MATE, QUICK_MATE]
    assert result.score_a + result.score_b == 4


def test_mate_is_adjudicated():
    result = play_match(PruningPolicy.verified(3), PruningPolicy.standard(2), [QUICK_MATE], depth=3, games=2)
    assert result.games[0].result == "1-0"
    assert result.games[0].reason == "checkmate"
    assert result.games[0].moves == ["a1a8"]


def test_move_limit_draw():
    result = play_match(PruningPolicy.verified(3), PruningPolicy.verified(3), [START_FEN], depth=1, games=2, max_plies=4)
    assert {g.reason for g in result.games} == {"move limit"}
    assert result.score_a == 1.0


def test_bare_kings_draw_immediately():
    result = play_match(
        PruningPolicy.verified(3), PruningPolicy.standard(2), ["4k3/8/8/8/8/8/8/4K3 w - - 0 1"], depth=2, games=2
    )
    assert all(g.reason == "insufficient material" and not g.moves for g in result.games)


def test_games_end_by_rule_before_the_cap():
    # a shallow rook ending: mate, repetition or the fifty-move rule comes first;
    # whatever happens the game ends by a rule, never by the ply cap
    result = play_match(
        PruningPolicy.verified(3), PruningPolicy.verified(3), ["7k/8/8/8/8/8/8/R6K w - - 0 1"], depth=1, games=2,
        max_plies=400,
    )
    assert all(g.reason != "move limit" for g in result.games)


def test_default_book_is_distinct():
    fens = opening_fens()
    assert len(set(fens)) == len(fens) == 10


@pytest.mark.parametrize("games", [0, 3, -2])
def test_bad_game_counts(games):
    with pytest.raises(ValueError):
        play_match(PruningPolicy.verified(), PruningPolicy.standard(), games=games)


def test_bad_opening():
    with pytest.raises(ValueError):
        play_match(PruningPolicy.verified(), PruningPolicy.standard(), ["not a fen"], games=2)


def test_engine_failure_names_the_game(monkeypatch):
    import nullmove.match as match

    def broken(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(match, "play_game", broken)
    with pytest.raises(MatchError) as err:
        play_match(PruningPolicy.verified(), PruningPolicy.standard(), games=2)
    assert err.value.game == 0


@pytest.mark.parametrize(
    "fen, expected",
    [
        ("4k3/8/8/8/8/8/8/4K3 w - - 0 1", True),
        ("4k3/8/8/8/8/8/8/4KN2 w - - 0 1", True),
        ("4k3/8/8/8/8/8/8/4KB2 w - - 0 1", True),
        ("4k3/8/8/8/8/8/8/3NKB2 w - - 0 1", False),
        ("4k3/8/8/8/8/8/4P3/4K3 w - - 0 1", False),
    ],
)
def test_insufficient_material(fen, expected):
    assert insufficient_material(parse_fen(fen)) is expected


@pytest.mark.slow
def test_verified_against_std2_twenty_games():
    result = play_match(PruningPolicy.verified(3), PruningPolicy.standard(2), depth=6, games=20)
    assert len(result.games) == 20
    assert result.score_a + result.score_b == 20
