"""Exact TU-games, solution concepts and mechanical axiom checking."""

from .core import (
    CANONICAL,
    UNANIMITY,
    CoefficientMap,
    Game,
    GameError,
    Permutation,
    canonical_game,
    coalition,
    from_coefficients,
    linear_combine,
    make_game,
    null_players,
    nullifying_players,
    permute_game,
    rat,
    symmetric_pair,
    to_coefficients,
    unanimity_game,
    zero_game,
)
from .solutions import SolutionSpec, evaluate

__version__ = "0.1.0"

__all__ = [
    "CANONICAL",
    "UNANIMITY",
    "CoefficientMap",
    "Game",
    "GameError",
    "Permutation",
    "canonical_game",
    "coalition",
    "from_coefficients",
    "linear_combine",
    "make_game",
    "null_players",
    "nullifying_players",
    "permute_game",
    "rat",
    "symmetric_pair",
    "to_coefficients",
    "unanimity_game",
    "zero_game",
    "SolutionSpec",
    "evaluate",
]
