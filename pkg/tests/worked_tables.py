"""Worked completions on chains of length 3, 4 and 5, as test data.

Diagonals are written with ω-exponents: ``j`` stands for ω^j and ``None``
for 0.  ``free`` maps a letter to a 1-based pair, ``target`` is the pair of
the dependent entry and ``formula(w, v)`` its printed value, where ``v`` maps
letters to field elements.
"""

from dataclasses import dataclass
from typing import Callable, Optional


@dataclass(frozen=True)
class Worked:
    table: int
    k: int
    diag: tuple
    free: dict
    target: Optional[tuple]
    formula: Optional[Callable]
    erratum: bool = False


def _ab(coef):
    return lambda w, v: coef(w) * v["a"] * v["b"] * (-1) / 4


T1_FREE = {"a": (1, 2), "b": (2, 3)}

TABLE1 = [
    Worked(1, 4, (0, 2, 3), {"a": (1, 2), "b": (1, 3), "c": (2, 3)}, None, None),
    Worked(1, 4, (3, 2, 3), T1_FREE, (1, 3), _ab(lambda w: 2 + 2 * w)),
    Worked(1, 4, (1, 3, 1), T1_FREE, (1, 3), _ab(lambda w: 2 * w ** 3)),
    Worked(1, 4, (0, 3, 0), T1_FREE, (1, 3), _ab(lambda w: 2 + 2 * w ** 3)),
    Worked(1, 4, (None, 2, None), T1_FREE, (1, 3), _ab(lambda w: -4 * w ** 2)),
    Worked(1, 4, (0, 2, 0), T1_FREE, (1, 3), _ab(lambda w: w * 0 + 2)),
    Worked(1, 4, (2, None, 2), T1_FREE, (1, 3), _ab(lambda w: 4 * w ** 2)),
    Worked(1, 4, (0, None, 0), T1_FREE, (1, 3), _ab(lambda w: w * 0 + 4)),
]

TABLE2 = [
    Worked(2, 3, (1, 1, 0, 0), {"a": (1, 3), "b": (1, 4), "c": (2, 3), "d": (2, 4)}, None, None),
    Worked(2, 3, (0, 1, 2, 0),
           {"a": (1, 2), "d": (1, 3), "b": (2, 3), "e": (2, 4), "c": (3, 4)}, (1, 4),
           lambda w, v: -((2 + w) * v["a"] * v["e"] + (2 + w ** 2) * v["d"] * v["c"]
                          + v["a"] * v["b"] * v["c"]) / 3),
    Worked(2, 3, (1, 2, 0, 2),
           {"a": (1, 2), "d": (1, 3), "e": (1, 4), "b": (2, 3), "c": (3, 4)}, (2, 4),
           lambda w, v: -(2 * w + w ** 2) * v["b"] * v["c"] / 3),
    Worked(2, 3, (1, 2, 0, 1),
           {"a": (1, 2), "d": (1, 3), "b": (2, 3), "e": (2, 4), "c": (3, 4)}, (1, 4),
           lambda w, v: -((1 + 2 * w ** 2) * v["a"] * v["e"] + (w + 2 * w ** 2) * v["d"] * v["c"]
                          + w * v["a"] * v["b"] * v["c"]) / 3),
    Worked(2, 3, (1, 0, 1, 2),
           {"a": (1, 2), "c": (1, 4), "b": (2, 3), "d": (2, 4), "e": (3, 4)}, (1, 3),
           lambda w, v: -(w + 2 * w ** 2) * v["a"] * v["b"] / 3),
    Worked(2, 3, (1, 2, 2, 1),
           {"a": (1, 2), "d": (1, 3), "e": (2, 4), "c": (3, 4)}, (1, 4),
           lambda w, v: -((1 + 2 * w ** 2) * v["a"] * v["e"]
                          + (1 + 2 * w ** 2) * v["d"] * v["c"]) / 3),
]

_T3_FULL = {"a": (1, 2), "b": (1, 3), "c": (1, 4), "j": (1, 5), "d": (2, 3), "e": (2, 4),
            "f": (2, 5), "g": (3, 4), "h": (3, 5), "l": (4, 5)}

TABLE3 = [
    Worked(3, 4, (1, 3, 2, 0, None), _T3_FULL, None, None),
    Worked(3, 4, (3, 2, 3, 0, 1),
           {"a": (1, 2), "b": (1, 4), "c": (1, 5), "d": (2, 3), "e": (2, 4), "f": (2, 5),
            "g": (3, 4), "h": (3, 5), "l": (4, 5)}, (1, 3),
           lambda w, v: -(2 + 2 * w) * v["a"] * v["d"] / 4),
    # same matrix as the next entry; this value uses h and l, which lie on
    # no path into position (2,4), so it is a known-wrong value
    Worked(3, 4, (3, 3, 2, 3, 0),
           {"b": (1, 3), "d": (1, 5), "e": (2, 3), "f": (2, 5), "g": (3, 4), "h": (3, 5),
            "l": (4, 5)}, (2, 4),
           lambda w, v: -(2 * w ** 2 + 2 * w ** 3) * v["h"] * v["l"] / 4, erratum=True),
    Worked(3, 4, (3, 3, 2, 3, 0),
           {"b": (1, 3), "d": (1, 5), "e": (2, 3), "f": (2, 5), "g": (3, 4), "h": (3, 5),
            "l": (4, 5)}, (2, 4),
           lambda w, v: -(2 + 2 * w) * v["e"] * v["g"] / 4),
    Worked(3, 4, (None, 3, 1, None, 0),
           {"a": (1, 2), "b": (1, 3), "c": (1, 5), "d": (2, 3), "e": (2, 4), "f": (2, 5),
            "g": (3, 4), "h": (3, 5), "l": (4, 5)}, (1, 4),
           lambda w, v: w * v["a"] * v["e"] + w ** 3 * v["b"] * v["g"]
           + w ** 2 * v["a"] * v["d"] * v["g"]),
    # the last monomial is adgl
    Worked(3, 4, (1, 3, 2, 0, 1),
           {"a": (1, 2), "b": (1, 3), "c": (1, 4), "d": (2, 3), "e": (2, 4), "f": (2, 5),
            "g": (3, 4), "h": (3, 5), "l": (4, 5)}, (1, 5),
           lambda w, v: -(2 * w ** 3 * v["a"] * v["f"] + (2 + 2 * w ** 3) * v["b"] * v["h"]
                          + (2 * w ** 2 + 2 * w ** 3) * v["c"] * v["l"]
                          + (w ** 2 + w ** 3) * v["a"] * v["d"] * v["h"]
                          + (w + w ** 2) * v["a"] * v["e"] * v["l"]
                          + 2 * w ** 2 * v["b"] * v["g"] * v["l"]
                          + w * v["a"] * v["d"] * v["g"] * v["l"]) / 4),
]

ALL = TABLE1 + TABLE2 + TABLE3
