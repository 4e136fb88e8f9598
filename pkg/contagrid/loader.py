# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Published reference values used as golden data by the table and verify commands

Tables are keyed by (n, m) with 1 <= n <= m.
"""
import typing

GAMMA_TABLE_MAX = 15

_GAMMA_ROWS = {
    1: (1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8),
    2: (2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9),
    3: (2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8),
    4: (3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8),
    5: (3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8),
    6: (4, 4, 5, 5, 6, 6, 7, 7, 8, 8),
    7: (4, 5, 5, 6, 6, 7, 7, 8, 8),
    8: (5, 5, 6, 6, 7, 7, 8, 8),
    9: (5, 6, 6, 7, 7, 8, 8),
    10: (6, 6, 7, 7, 8, 8),
    11: (6, 7, 7, 8, 8),
    12: (7, 7, 8, 8),
    13: (7, 8, 8),
    14: (8, 8),
    15: (8,),
}

# contamination number, n = 1..15, m = n..15
GAMMA_TABLE: typing.Dict[typing.Tuple[int, int], int] = {
    (n, n + offset): value
    for n, row in _GAMMA_ROWS.items()
    for offset, value in enumerate(row)
}

ALPHA_TABLE_MAX = 9

_ALPHA_ROWS = {
    1: (1, 1, 1, 2, 1, 3, 1, 4, 1),
    2: (2, 10, 8, 48, 24, 176, 64, 560),
    3: (2, 20, 10, 130, 40, 640, 144),
    4: (12, 8, 210, 68, 1736, 412),
    5: (6, 232, 88, 3048, 786),
    6: (122, 48, 3104, 820),
    7: (22, 2260, 644),
    8: (912, 272),
    9: (90,),
}

# number of optimal solutions, n = 1..9, m = n..9
ALPHA_TABLE: typing.Dict[typing.Tuple[int, int], int] = {
    (n, n + offset): value
    for n, row in _ALPHA_ROWS.items()
    for offset, value in enumerate(row)
}

# seed-row words of the 22 optimal solutions of the 7x7 grid, odd columns left to right
SQUARE7_PERMUTATIONS: typing.Tuple[str, ...] = (
    '1357', '1375', '1537', '1735', '1573', '1753', '3157', '3175',
    '5137', '7135', '7153', '3517', '5317', '7315', '5713', '7513',
    '3571', '3751', '5371', '7351', '5731', '7531',
)
SQUARE7_MISSING: typing.Tuple[str, ...] = ('5173', '3715')
SQUARE9_OPTIMAL = 90
FORBIDDEN_PATTERNS: typing.Tuple[str, ...] = ('2413', '3142')

# first published terms of the sequences matched against the enumeration
SEQUENCE_PREFIXES: typing.Dict[str, typing.Tuple[int, ...]] = {
    'A036289': (0, 2, 8, 24, 64, 160, 384, 896, 2048),
    'A084857': (0, 1, 10, 48, 176, 560, 1632, 4480, 11776),
    'A193519': (2, 10, 40, 144, 490),
    'A006318': (1, 2, 6, 22, 90, 394),
}

# refuted closed form, checked on the 4x5 grid
CONJECTURE1_COUNTEREXAMPLE = (4, 5)
CONJECTURE1_CLAIMED = 4
