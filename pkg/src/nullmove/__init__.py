"""Chess search engine for comparing null-move pruning policies."""
from .board import Move, Position, parse_fen, perft
from .evaluation import evaluate
from .search import PolicyKind, PruningPolicy, SearchLimits, SearchResult, Searcher, search_root

__all__ = [
    "Move",
    "PolicyKind",
    "Position",
    "PruningPolicy",
    "SearchLimits",
    "SearchResult",
    "Searcher",
    "evaluate",
    "parse_fen",
    "perft",
    "search_root",
]

__version__ = "0.1.0"
