"""Independent reference computations for the test suite.

Everything here is deliberately plain: negamax (optionally textbook
alpha-beta) in natural move order without TT, null moves or PVS, and an
exhaustive mate solver.  They share only the rules kernel
(checked against python-chess by perft) and the static evaluation.
"""
import numpy as np
from numba import njit

from nullmove.board import (
    HALFMOVE,
    HASH,
    SIDE,
    WKING,
    attacked,
    generate_pseudo,
    is_legal_after,
    make_move_kernel,
    unmake_move_kernel,
)
from nullmove.evaluation import INF, MATE, MAX_PLY, default_table, evaluate_kernel, is_tactical_code


@njit
def _checked(board, state):
    side = state[SIDE]
    return attacked(board, state[WKING + side], side ^ 1)


@njit
def _quiesce(board, state, alpha, beta, ply, table):
    stand = evaluate_kernel(board, state, table)
    if stand >= beta:
        return beta
    if stand > alpha:
        alpha = stand
    if ply >= MAX_PLY:
        return alpha
    buf = np.empty(256, dtype=np.int64)
    n = generate_pseudo(board, state, buf, False)
    # most valuable victim first; order only affects speed
    caps = np.empty(n, dtype=np.int64)
    keys = np.empty(n, dtype=np.int64)
    k = 0
    for i in range(n):
        if is_tactical_code(buf[i]):
            caps[k] = buf[i]
            keys[k] = -(((buf[i] >> 18) & 7) * 16 + ((buf[i] >> 22) & 7))
            k += 1
    order = np.argsort(keys[:k], kind="mergesort")
    saved = state.copy()
    for j in range(k):
        m = caps[order[j]]
        make_move_kernel(board, state, m)
        if is_legal_after(board, state):
            v = -_quiesce(board, state, -beta, -alpha, ply + 1, table)
            unmake_move_kernel(board, state, m, saved)
            if v >= beta:
                return beta
            if v > alpha:
                alpha = v
        else:
            unmake_move_kernel(board, state, m, saved)
    return alpha


@njit
def _negamax(board, state, alpha, beta, depth, ply, path, table, check_ext, prune):
    if depth <= 0:
        if check_ext and _checked(board, state):
            depth = 1
        else:
            if not prune:
                alpha, beta = -INF, INF
            return _quiesce(board, state, alpha, beta, ply, table)
    path[ply] = state[HASH]
    if ply > 0:
        if state[HALFMOVE] >= 100:
            return 0
        i = ply - 2
        while i >= 0 and i >= ply - state[HALFMOVE]:
            if path[i] == state[HASH]:
                return 0
            i -= 2
        if ply >= MAX_PLY:
            return evaluate_kernel(board, state, table)
    buf = np.empty(256, dtype=np.int64)
    n = generate_pseudo(board, state, buf, False)
    saved = state.copy()
    best = -INF
    legal = 0
    for i in range(n):
        m = buf[i]
        make_move_kernel(board, state, m)
        if not is_legal_after(board, state):
            unmake_move_kernel(board, state, m, saved)
            continue
        legal += 1
        if prune:
            v = -_negamax(board, state, -beta, -alpha, depth - 1, ply + 1, path, table, check_ext, prune)
        else:
            v = -_negamax(board, state, -INF, INF, depth - 1, ply + 1, path, table, check_ext, prune)
        unmake_move_kernel(board, state, m, saved)
        if v > best:
            best = v
        if prune and v > alpha:
            alpha = v
            if alpha >= beta:
                return beta
    if legal == 0:
        best = -MATE + ply if _checked(board, state) else 0
    if prune:
        # fail-hard: clamp into the window
        if best <= alpha:
            return alpha
        return best if best < beta else beta
    return best


def minimax_value(position, depth, check_extension=True, table=None, prune=True):
    """Exact negamax value with the engine's leaf semantics (check extension,
    capture quiescence, path-repetition and fifty-move draws).

    ``prune`` switches between textbook fail-hard alpha-beta in natural move
    order and unpruned negamax; both give the same root value.
    """
    table = default_table() if table is None else table
    path = np.zeros(MAX_PLY + 8, dtype=np.int64)
    return int(
        _negamax(
            position.board.copy(), position.state.copy(), -INF, INF, depth, 0, path, table,
            check_extension, prune,
        )
    )


def quiescence_value(position, table=None):
    table = default_table() if table is None else table
    return int(_quiesce(position.board.copy(), position.state.copy(), -INF, INF, 0, table))


@njit
def _forces_mate(board, state, n):
    """Side to move can force checkmate within n of its own moves."""
    buf = np.empty(256, dtype=np.int64)
    reply = np.empty(256, dtype=np.int64)
    count = generate_pseudo(board, state, buf, False)
    saved = state.copy()
    for i in range(count):
        m = buf[i]
        make_move_kernel(board, state, m)
        if not is_legal_after(board, state):
            unmake_move_kernel(board, state, m, saved)
            continue
        # defender to move: every reply must lose
        k = generate_pseudo(board, state, reply, False)
        inner = state.copy()
        legal = 0
        refuted = False
        for j in range(k):
            r = reply[j]
            make_move_kernel(board, state, r)
            if is_legal_after(board, state):
                legal += 1
                if n <= 1 or not _forces_mate(board, state, n - 1):
                    refuted = True
            unmake_move_kernel(board, state, r, inner)
            if refuted:
                break
        mated = legal == 0 and _checked(board, state)
        unmake_move_kernel(board, state, m, saved)
        if mated or (legal > 0 and not refuted):
            return True
    return False


def forces_mate(position, n):
    return bool(_forces_mate(position.board.copy(), position.state.copy(), n))


def mate_distance_moves(position, max_n):
    """Smallest n <= max_n such that the side to move mates in n, else None."""
    for n in range(1, max_n + 1):
        if forces_mate(position, n):
            return n
    return None


def mating_moves(position, n):
    """All legal first moves that force mate within n moves."""
    from nullmove.board import generate_moves, in_check, make_move, unmake_move

    found = []
    for m in generate_moves(position):
        undo = make_move(position, m)
        replies = generate_moves(position)
        if not replies:
            ok = in_check(position)
        elif n <= 1:
            ok = False
        else:
            ok = True
            for r in replies:
                u2 = make_move(position, r)
                good = forces_mate(position, n - 1)
                unmake_move(position, r, u2)
                if not good:
                    ok = False
                    break
        unmake_move(position, m, undo)
        if ok:
            found.append(m)
    return found
