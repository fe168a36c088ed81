"""Standard algebraic notation, rendering and parsing."""
from __future__ import annotations

import re

from .board import (
    FLAG_CASTLE,
    PAWN,
    PIECE_CHARS,
    Move,
    Position,
    generate_moves,
    in_check,
    make_move,
    square_name,
    unmake_move,
)


class SanError(ValueError):
    pass


class IllegalSan(SanError):
    pass


class AmbiguousSan(SanError):
    pass


_SAN_RE = re.compile(r"^([NBRQK])?([a-h])?([1-8])?(x)?([a-h][1-8])(?:=?([NBRQ]))?$")


def move_to_san(p: Position, m: Move, legal: list[Move] | None = None) -> str:
    legal = generate_moves(p) if legal is None else legal
    if m.flags & FLAG_CASTLE:
        san = "O-O" if m.to_square % 8 == 6 else "O-O-O"
    else:
        kind = m.piece & 7
        target = square_name(m.to_square)
        capture = "x" if m.captured else ""
        if kind == PAWN:
            san = ""
            if capture:
                san = square_name(m.from_square)[0]
            san += capture + target
            if m.promotion:
                san += "=" + PIECE_CHARS[m.promotion & 7]
        else:
            rivals = [
                o for o in legal
                if o != m and (o.piece & 7) == kind and o.to_square == m.to_square
            ]
            hint = ""
            if rivals:
                frm = square_name(m.from_square)
                same_file = any(o.from_square % 8 == m.from_square % 8 for o in rivals)
                same_rank = any(o.from_square // 8 == m.from_square // 8 for o in rivals)
                if not same_file:
                    hint = frm[0]
                elif not same_rank:
                    hint = frm[1]
                else:
                    hint = frm
            san = PIECE_CHARS[kind] + hint + capture + target
    undo = make_move(p, m)
    if in_check(p):
        san += "#" if not generate_moves(p) else "+"
    unmake_move(p, m, undo)
    return san


def parse_san(p: Position, text: str) -> Move:
    """Resolve SAN against the legal moves of ``p``.  Check/mate marks and
    annotation glyphs are ignored; castling may use O or 0."""
    clean = text.strip().rstrip("+#!?")
    legal = generate_moves(p)
    if clean in ("O-O", "0-0", "O-O-O", "0-0-0"):
        long = clean.count("-") == 2
        for m in legal:
            if m.flags & FLAG_CASTLE and (m.to_square % 8 == 2) == long:
                return m
        raise IllegalSan(f"castling {text!r} is not legal here")

    match = _SAN_RE.match(clean)
    if not match:
        raise SanError(f"cannot read SAN {text!r}")
    piece, from_file, from_rank, capture, target, promo = match.groups()
    kind = PIECE_CHARS.index(piece) if piece else PAWN
    to = (ord(target[0]) - ord("a")) + 8 * (int(target[1]) - 1)
    candidates = []
    for m in legal:
        if (m.piece & 7) != kind or m.to_square != to or m.flags & FLAG_CASTLE:
            continue
        if from_file and m.from_square % 8 != ord(from_file) - ord("a"):
            continue
        if from_rank and m.from_square // 8 != int(from_rank) - 1:
            continue
        if promo:
            if (m.promotion & 7) != PIECE_CHARS.index(promo):
                continue
        elif m.promotion:
            continue
        if capture and not m.captured:
            continue
        candidates.append(m)
    if not candidates:
        raise IllegalSan(f"{text!r} is not a legal move")
    if len(candidates) > 1:
        froms = ", ".join(square_name(m.from_square) for m in candidates)
        raise AmbiguousSan(f"{text!r} is ambiguous (pieces on {froms}); disambiguate")
    return candidates[0]


def line_to_san(p: Position, moves: list[Move]) -> list[str]:
    q = p.copy()
    out = []
    for m in moves:
        out.append(move_to_san(q, m))
        make_move(q, m)
    return out

