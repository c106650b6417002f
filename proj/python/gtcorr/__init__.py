# Copyright 2026 The gtcorr Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact correlated equilibria of extensive-form games.

Games and profiles are the same JSON documents the `gt` tool reads. Functions
accept either JSON text or an already-decoded dict; exact numbers come back
as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _gtcorr
from ._gtcorr import (
    Game,
    GameError,
    InvalidProfileError,
    ParseError,
    ResourceLimitError,
    fixture_names,
)

__version__ = _gtcorr.__version__

__all__ = [
    "Game",
    "GameError",
    "InvalidProfileError",
    "ParseError",
    "ResourceLimitError",
    "cbr",
    "convert",
    "decompose",
    "fixture",
    "fixture_names",
    "gap",
    "load_game",
    "outcome",
    "paper_check",
    "solve",
    "validate",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc, ensure_ascii=False)


def _game(game):
    return game if isinstance(game, Game) else Game(_text(game))


def load_game(path):
    with open(path, encoding="utf-8") as f:
        return Game(f.read())


def fixture(name):
    """Text of a bundled fixture, e.g. "ebos.game.json"."""
    return _gtcorr.fixture(name)


def validate(game):
    return json.loads(_gtcorr.validate(_text(game)))


def outcome(game, profile):
    """Terminal id -> probability, positive entries only."""
    raw = json.loads(_gtcorr.outcome(_game(game), _text(profile)))
    return {z: Fraction(p) for z, p in raw.items()}


def gap(game, profile, notion="efce", oracle=False, **caps):
    """GapReport as a dict; report["gap"] is a Fraction."""
    report = json.loads(
        _gtcorr.gap(_game(game), _text(profile), notion, oracle, **caps))
    report["gap"] = Fraction(report["gap"])
    return report


def convert(game, profile):
    """The outcome-equivalent BCE profile document for an EFCE profile."""
    return json.loads(_gtcorr.convert(_game(game), _text(profile)))


def decompose(game, profile):
    """Profile document with every behavior strategy split into pure ones."""
    return json.loads(_gtcorr.decompose(_game(game), _text(profile)))


def cbr(game, profile, player, sequence):
    result = json.loads(
        _gtcorr.cbr(_game(game), _text(profile), str(player), sequence))
    result["value"] = Fraction(result["value"])
    return result


def solve(game, notion="efce", objective=None, epsilon="0", **options):
    obj = None if objective is None else _text(objective)
    result = json.loads(
        _gtcorr.solve(_game(game), notion, obj, str(epsilon), **options))
    result["gap"] = Fraction(result["gap"])
    if "value" in result:
        result["value"] = Fraction(result["value"])
    return result


def paper_check():
    """One dict per acceptance criterion."""
    return json.loads(_gtcorr.paper_check())
