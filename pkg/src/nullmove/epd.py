"""EPD records: four FEN fields followed by ``opcode operand;`` operations."""
from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from pathlib import Path

from .board import BLACK, WHITE, FenError, Move, Position, only_king_and_pawns, parse_fen
from .san import SanError, move_to_san, parse_san


class EpdError(ValueError):
    def __init__(self, message: str, record_id: str | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if record_id:
            where.append(f"record {record_id!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.record_id = record_id
        self.line = line


@dataclass
class EpdRecord:
    position: Position
    best_moves: tuple[Move, ...] = ()
    avoid_moves: tuple[Move, ...] = ()
    id: str = ""
    # every operation in input order, operands verbatim (bm/am/id included)
    operations: dict[str, str] = field(default_factory=dict)

    @property
    def direct_mate(self) -> int | None:
        """Full moves to mate from the ``dm`` opcode, if present."""
        dm = self.operations.get("dm")
        return int(dm) if dm is not None else None

    @property
    def analysis_depth(self) -> int | None:
        acd = self.operations.get("acd")
        return int(acd) if acd is not None else None

    def is_solved_by(self, move: Move) -> bool | None:
        """None when the record has neither bm nor am."""
        if not self.best_moves and not self.avoid_moves:
            return None
        if self.best_moves and move not in self.best_moves:
            return False
        return move not in self.avoid_moves

    def to_epd(self) -> str:
        ops = " ".join(f"{op} {operand};" if operand else f"{op};" for op, operand in self.operations.items())
        return f"{self.position.epd_fields()} {ops}".rstrip()

    def san(self, moves) -> list[str]:
        return [move_to_san(self.position, m) for m in moves]


def _split_operations(text: str) -> list[str]:
    ops, current, quoted = [], [], False
    for ch in text:
        if ch == '"':
            quoted = not quoted
        if ch == ";" and not quoted:
            ops.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if quoted:
        raise EpdError("unterminated quoted operand")
    tail = "".join(current).strip()
    if tail:
        ops.append(tail)
    return [op for op in ops if op]


def parse_epd(line: str, lineno: int | None = None) -> EpdRecord:
    parts = line.strip().split(None, 4)
    if len(parts) < 4:
        raise EpdError("expected four position fields", line=lineno)
    try:
        position = parse_fen(" ".join(parts[:4]))
    except FenError as exc:
        raise EpdError(str(exc), line=lineno) from exc

    operations: dict[str, str] = {}
    for op in _split_operations(parts[4] if len(parts) > 4 else ""):
        name, _, operand = op.partition(" ")
        if name in operations:
            raise EpdError(f"duplicate opcode {name!r}", line=lineno)
        operations[name] = operand.strip()

    record_id = ""
    if "id" in operations:
        try:
            record_id = " ".join(shlex.split(operations["id"]))
        except ValueError:
            record_id = operations["id"].strip('"')

    def resolve(opcode):
        moves = []
        for token in operations.get(opcode, "").split():
            try:
                moves.append(parse_san(position, token))
            except SanError as exc:
                raise EpdError(f"{opcode}: {exc}", record_id=record_id or None, line=lineno) from exc
        return tuple(moves)

    best, avoid = resolve("bm"), resolve("am")
    if set(best) & set(avoid):
        raise EpdError("bm and am share a move", record_id=record_id or None, line=lineno)
    return EpdRecord(position, best, avoid, record_id, operations)


def read_suite(path: str | Path) -> tuple[list[EpdRecord], list[EpdError]]:
    """Parse a suite file; records that fail are reported, not fatal."""
    records, errors = [], []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rec = parse_epd(line, lineno)
        except EpdError as exc:
            errors.append(exc)
            continue
        if not rec.id:
            rec.id = f"line{lineno}"
        records.append(rec)
    return records, errors


def filter_suite(records: list[EpdRecord]) -> tuple[list[EpdRecord], int]:
    """Drop positions where either side has nothing but king and pawns.

    Returns the kept records and the number dropped.
    """
    kept = [
        r for r in records
        if not only_king_and_pawns(r.position, WHITE) and not only_king_and_pawns(r.position, BLACK)
    ]
    return kept, len(records) - len(kept)
