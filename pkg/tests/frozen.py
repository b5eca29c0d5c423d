"""Frozen reference values.

Regenerate by running the scripts in tests/oracles/ (each prints the
literal blocks below).  Polynomial tables map exponent tuples to integer
coefficients; variable order is x1, x2, ... throughout.
"""

BASIS_POLYS = {'c3': {(0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1},
 'c4': {(0, 1, 1, 1): 1, (1, 0, 1, 1): 1, (1, 1, 0, 1): 1, (1, 1, 1, 0): 1},
 'glued': {(0, 0, 1, 1, 1): 1,
           (0, 1, 1, 0, 1): 1,
           (0, 1, 1, 1, 0): 1,
           (1, 0, 0, 1, 1): 1,
           (1, 0, 1, 0, 1): 1,
           (1, 0, 1, 1, 0): 1,
           (1, 1, 0, 0, 1): 1,
           (1, 1, 0, 1, 0): 1},
 'theta': {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1},
 'u13': {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1},
 'u23': {(0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1},
 'u24': {(0, 0, 1, 1): 1,
         (0, 1, 0, 1): 1,
         (0, 1, 1, 0): 1,
         (1, 0, 0, 1): 1,
         (1, 0, 1, 0): 1,
         (1, 1, 0, 0): 1},
 'u36': {(0, 0, 0, 1, 1, 1): 1,
         (0, 0, 1, 0, 1, 1): 1,
         (0, 0, 1, 1, 0, 1): 1,
         (0, 0, 1, 1, 1, 0): 1,
         (0, 1, 0, 0, 1, 1): 1,
         (0, 1, 0, 1, 0, 1): 1,
         (0, 1, 0, 1, 1, 0): 1,
         (0, 1, 1, 0, 0, 1): 1,
         (0, 1, 1, 0, 1, 0): 1,
         (0, 1, 1, 1, 0, 0): 1,
         (1, 0, 0, 0, 1, 1): 1,
         (1, 0, 0, 1, 0, 1): 1,
         (1, 0, 0, 1, 1, 0): 1,
         (1, 0, 1, 0, 0, 1): 1,
         (1, 0, 1, 0, 1, 0): 1,
         (1, 0, 1, 1, 0, 0): 1,
         (1, 1, 0, 0, 0, 1): 1,
         (1, 1, 0, 0, 1, 0): 1,
         (1, 1, 0, 1, 0, 0): 1,
         (1, 1, 1, 0, 0, 0): 1}}
WHITNEY_POLYS = {'c3': {(0, 0, 1, 1): 1,
        (0, 1, 0, 1): 1,
        (0, 1, 1, 0): 1,
        (0, 1, 1, 1): 1,
        (1, 0, 0, 1): 1,
        (1, 0, 1, 0): 1,
        (1, 1, 0, 0): 1,
        (2, 0, 0, 0): 1},
 'c4': {(0, 0, 1, 1, 1): 1,
        (0, 1, 0, 1, 1): 1,
        (0, 1, 1, 0, 1): 1,
        (0, 1, 1, 1, 0): 1,
        (0, 1, 1, 1, 1): 1,
        (1, 0, 0, 1, 1): 1,
        (1, 0, 1, 0, 1): 1,
        (1, 0, 1, 1, 0): 1,
        (1, 1, 0, 0, 1): 1,
        (1, 1, 0, 1, 0): 1,
        (1, 1, 1, 0, 0): 1,
        (2, 0, 0, 0, 1): 1,
        (2, 0, 0, 1, 0): 1,
        (2, 0, 1, 0, 0): 1,
        (2, 1, 0, 0, 0): 1,
        (3, 0, 0, 0, 0): 1},
 'glued': {(0, 0, 0, 1, 1, 1): 1,
           (0, 0, 1, 1, 0, 1): 1,
           (0, 0, 1, 1, 1, 0): 1,
           (0, 0, 1, 1, 1, 1): 1,
           (0, 1, 0, 0, 1, 1): 1,
           (0, 1, 0, 1, 0, 1): 1,
           (0, 1, 0, 1, 1, 0): 1,
           (0, 1, 0, 1, 1, 1): 1,
           (0, 1, 1, 0, 0, 1): 1,
           (0, 1, 1, 0, 1, 0): 1,
           (0, 1, 1, 0, 1, 1): 1,
           (0, 1, 1, 1, 0, 1): 1,
           (0, 1, 1, 1, 1, 0): 1,
           (0, 1, 1, 1, 1, 1): 1,
           (1, 0, 0, 0, 1, 1): 1,
           (1, 0, 0, 1, 0, 1): 1,
           (1, 0, 0, 1, 1, 0): 1,
           (1, 0, 1, 0, 0, 1): 1,
           (1, 0, 1, 0, 1, 0): 1,
           (1, 0, 1, 0, 1, 1): 1,
           (1, 0, 1, 1, 0, 0): 1,
           (1, 1, 0, 0, 0, 1): 1,
           (1, 1, 0, 0, 1, 0): 1,
           (1, 1, 0, 1, 0, 0): 1,
           (1, 1, 1, 0, 0, 0): 1,
           (1, 1, 1, 1, 0, 0): 1,
           (2, 0, 0, 0, 0, 1): 1,
           (2, 0, 0, 0, 1, 0): 1,
           (2, 0, 0, 1, 0, 0): 1,
           (2, 0, 1, 0, 0, 0): 1,
           (2, 1, 0, 0, 0, 0): 1,
           (3, 0, 0, 0, 0, 0): 1},
 'theta': {(0, 0, 0, 1): 1,
           (0, 0, 1, 0): 1,
           (0, 0, 1, 1): 1,
           (0, 1, 0, 0): 1,
           (0, 1, 0, 1): 1,
           (0, 1, 1, 0): 1,
           (0, 1, 1, 1): 1,
           (1, 0, 0, 0): 1},
 'u13': {(0, 0, 0, 1): 1,
         (0, 0, 1, 0): 1,
         (0, 0, 1, 1): 1,
         (0, 1, 0, 0): 1,
         (0, 1, 0, 1): 1,
         (0, 1, 1, 0): 1,
         (0, 1, 1, 1): 1,
         (1, 0, 0, 0): 1},
 'u23': {(0, 0, 1, 1): 1,
         (0, 1, 0, 1): 1,
         (0, 1, 1, 0): 1,
         (0, 1, 1, 1): 1,
         (1, 0, 0, 1): 1,
         (1, 0, 1, 0): 1,
         (1, 1, 0, 0): 1,
         (2, 0, 0, 0): 1},
 'u24': {(0, 0, 0, 1, 1): 1,
         (0, 0, 1, 0, 1): 1,
         (0, 0, 1, 1, 0): 1,
         (0, 0, 1, 1, 1): 1,
         (0, 1, 0, 0, 1): 1,
         (0, 1, 0, 1, 0): 1,
         (0, 1, 0, 1, 1): 1,
         (0, 1, 1, 0, 0): 1,
         (0, 1, 1, 0, 1): 1,
         (0, 1, 1, 1, 0): 1,
         (0, 1, 1, 1, 1): 1,
         (1, 0, 0, 0, 1): 1,
         (1, 0, 0, 1, 0): 1,
         (1, 0, 1, 0, 0): 1,
         (1, 1, 0, 0, 0): 1,
         (2, 0, 0, 0, 0): 1},
 'u36': {(0, 0, 0, 0, 1, 1, 1): 1,
         (0, 0, 0, 1, 0, 1, 1): 1,
         (0, 0, 0, 1, 1, 0, 1): 1,
         (0, 0, 0, 1, 1, 1, 0): 1,
         (0, 0, 0, 1, 1, 1, 1): 1,
         (0, 0, 1, 0, 0, 1, 1): 1,
         (0, 0, 1, 0, 1, 0, 1): 1,
         (0, 0, 1, 0, 1, 1, 0): 1,
         (0, 0, 1, 0, 1, 1, 1): 1,
         (0, 0, 1, 1, 0, 0, 1): 1,
         (0, 0, 1, 1, 0, 1, 0): 1,
         (0, 0, 1, 1, 0, 1, 1): 1,
         (0, 0, 1, 1, 1, 0, 0): 1,
         (0, 0, 1, 1, 1, 0, 1): 1,
         (0, 0, 1, 1, 1, 1, 0): 1,
         (0, 0, 1, 1, 1, 1, 1): 1,
         (0, 1, 0, 0, 0, 1, 1): 1,
         (0, 1, 0, 0, 1, 0, 1): 1,
         (0, 1, 0, 0, 1, 1, 0): 1,
         (0, 1, 0, 0, 1, 1, 1): 1,
         (0, 1, 0, 1, 0, 0, 1): 1,
         (0, 1, 0, 1, 0, 1, 0): 1,
         (0, 1, 0, 1, 0, 1, 1): 1,
         (0, 1, 0, 1, 1, 0, 0): 1,
         (0, 1, 0, 1, 1, 0, 1): 1,
         (0, 1, 0, 1, 1, 1, 0): 1,
         (0, 1, 0, 1, 1, 1, 1): 1,
         (0, 1, 1, 0, 0, 0, 1): 1,
         (0, 1, 1, 0, 0, 1, 0): 1,
         (0, 1, 1, 0, 0, 1, 1): 1,
         (0, 1, 1, 0, 1, 0, 0): 1,
         (0, 1, 1, 0, 1, 0, 1): 1,
         (0, 1, 1, 0, 1, 1, 0): 1,
         (0, 1, 1, 0, 1, 1, 1): 1,
         (0, 1, 1, 1, 0, 0, 0): 1,
         (0, 1, 1, 1, 0, 0, 1): 1,
         (0, 1, 1, 1, 0, 1, 0): 1,
         (0, 1, 1, 1, 0, 1, 1): 1,
         (0, 1, 1, 1, 1, 0, 0): 1,
         (0, 1, 1, 1, 1, 0, 1): 1,
         (0, 1, 1, 1, 1, 1, 0): 1,
         (0, 1, 1, 1, 1, 1, 1): 1,
         (1, 0, 0, 0, 0, 1, 1): 1,
         (1, 0, 0, 0, 1, 0, 1): 1,
         (1, 0, 0, 0, 1, 1, 0): 1,
         (1, 0, 0, 1, 0, 0, 1): 1,
         (1, 0, 0, 1, 0, 1, 0): 1,
         (1, 0, 0, 1, 1, 0, 0): 1,
         (1, 0, 1, 0, 0, 0, 1): 1,
         (1, 0, 1, 0, 0, 1, 0): 1,
         (1, 0, 1, 0, 1, 0, 0): 1,
         (1, 0, 1, 1, 0, 0, 0): 1,
         (1, 1, 0, 0, 0, 0, 1): 1,
         (1, 1, 0, 0, 0, 1, 0): 1,
         (1, 1, 0, 0, 1, 0, 0): 1,
         (1, 1, 0, 1, 0, 0, 0): 1,
         (1, 1, 1, 0, 0, 0, 0): 1,
         (2, 0, 0, 0, 0, 0, 1): 1,
         (2, 0, 0, 0, 0, 1, 0): 1,
         (2, 0, 0, 0, 1, 0, 0): 1,
         (2, 0, 0, 1, 0, 0, 0): 1,
         (2, 0, 1, 0, 0, 0, 0): 1,
         (2, 1, 0, 0, 0, 0, 0): 1,
         (3, 0, 0, 0, 0, 0, 0): 1}}
MAXRANK_POLYS = {'c3': {(0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 1},
 'c4': {(0, 1, 1, 1): 1,
        (1, 0, 1, 1): 1,
        (1, 1, 0, 1): 1,
        (1, 1, 1, 0): 1,
        (1, 1, 1, 1): 1},
 'glued': {(0, 0, 1, 1, 1): 1,
           (0, 1, 1, 0, 1): 1,
           (0, 1, 1, 1, 0): 1,
           (0, 1, 1, 1, 1): 1,
           (1, 0, 0, 1, 1): 1,
           (1, 0, 1, 0, 1): 1,
           (1, 0, 1, 1, 0): 1,
           (1, 0, 1, 1, 1): 1,
           (1, 1, 0, 0, 1): 1,
           (1, 1, 0, 1, 0): 1,
           (1, 1, 0, 1, 1): 1,
           (1, 1, 1, 0, 1): 1,
           (1, 1, 1, 1, 0): 1,
           (1, 1, 1, 1, 1): 1},
 'theta': {(0, 0, 1): 1,
           (0, 1, 0): 1,
           (0, 1, 1): 1,
           (1, 0, 0): 1,
           (1, 0, 1): 1,
           (1, 1, 0): 1,
           (1, 1, 1): 1},
 'u13': {(0, 0, 1): 1,
         (0, 1, 0): 1,
         (0, 1, 1): 1,
         (1, 0, 0): 1,
         (1, 0, 1): 1,
         (1, 1, 0): 1,
         (1, 1, 1): 1},
 'u23': {(0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 1},
 'u24': {(0, 0, 1, 1): 1,
         (0, 1, 0, 1): 1,
         (0, 1, 1, 0): 1,
         (0, 1, 1, 1): 1,
         (1, 0, 0, 1): 1,
         (1, 0, 1, 0): 1,
         (1, 0, 1, 1): 1,
         (1, 1, 0, 0): 1,
         (1, 1, 0, 1): 1,
         (1, 1, 1, 0): 1,
         (1, 1, 1, 1): 1},
 'u36': {(0, 0, 0, 1, 1, 1): 1,
         (0, 0, 1, 0, 1, 1): 1,
         (0, 0, 1, 1, 0, 1): 1,
         (0, 0, 1, 1, 1, 0): 1,
         (0, 0, 1, 1, 1, 1): 1,
         (0, 1, 0, 0, 1, 1): 1,
         (0, 1, 0, 1, 0, 1): 1,
         (0, 1, 0, 1, 1, 0): 1,
         (0, 1, 0, 1, 1, 1): 1,
         (0, 1, 1, 0, 0, 1): 1,
         (0, 1, 1, 0, 1, 0): 1,
         (0, 1, 1, 0, 1, 1): 1,
         (0, 1, 1, 1, 0, 0): 1,
         (0, 1, 1, 1, 0, 1): 1,
         (0, 1, 1, 1, 1, 0): 1,
         (0, 1, 1, 1, 1, 1): 1,
         (1, 0, 0, 0, 1, 1): 1,
         (1, 0, 0, 1, 0, 1): 1,
         (1, 0, 0, 1, 1, 0): 1,
         (1, 0, 0, 1, 1, 1): 1,
         (1, 0, 1, 0, 0, 1): 1,
         (1, 0, 1, 0, 1, 0): 1,
         (1, 0, 1, 0, 1, 1): 1,
         (1, 0, 1, 1, 0, 0): 1,
         (1, 0, 1, 1, 0, 1): 1,
         (1, 0, 1, 1, 1, 0): 1,
         (1, 0, 1, 1, 1, 1): 1,
         (1, 1, 0, 0, 0, 1): 1,
         (1, 1, 0, 0, 1, 0): 1,
         (1, 1, 0, 0, 1, 1): 1,
         (1, 1, 0, 1, 0, 0): 1,
         (1, 1, 0, 1, 0, 1): 1,
         (1, 1, 0, 1, 1, 0): 1,
         (1, 1, 0, 1, 1, 1): 1,
         (1, 1, 1, 0, 0, 0): 1,
         (1, 1, 1, 0, 0, 1): 1,
         (1, 1, 1, 0, 1, 0): 1,
         (1, 1, 1, 0, 1, 1): 1,
         (1, 1, 1, 1, 0, 0): 1,
         (1, 1, 1, 1, 0, 1): 1,
         (1, 1, 1, 1, 1, 0): 1,
         (1, 1, 1, 1, 1, 1): 1}}
CONFIG_COEFFS = {'A': {(0, 1, 2): 1,
       (0, 1, 3): 4,
       (0, 1, 4): 36,
       (0, 1, 5): 144,
       (0, 2, 3): 4,
       (0, 2, 4): 9,
       (0, 2, 5): 16,
       (0, 3, 4): 36,
       (0, 3, 5): 256,
       (0, 4, 5): 144,
       (1, 2, 3): 1,
       (1, 2, 4): 4,
       (1, 2, 5): 9,
       (1, 3, 4): 4,
       (1, 3, 5): 36,
       (1, 4, 5): 36,
       (2, 3, 4): 1,
       (2, 3, 5): 4,
       (2, 4, 5): 1,
       (3, 4, 5): 4},
 'B': {(0, 1, 2): 36,
       (0, 1, 3): 3600,
       (0, 1, 4): 171396,
       (0, 1, 5): 6051600,
       (0, 2, 3): 34596,
       (0, 2, 4): 2822400,
       (0, 2, 5): 121749156,
       (0, 3, 4): 15729156,
       (0, 3, 5): 1161446400,
       (0, 4, 5): 5262922116,
       (1, 2, 3): 32400,
       (1, 2, 4): 3240000,
       (1, 2, 5): 154256400,
       (1, 3, 4): 31136400,
       (1, 3, 5): 2540160000,
       (1, 4, 5): 14156240400,
       (2, 3, 4): 29160000,
       (2, 3, 5): 2916000000,
       (2, 4, 5): 28022760000,
       (3, 4, 5): 26244000000}}


TRIANGLE_TREES = [[0, 1], [0, 2], [1, 2]]
TRIANGLE_U = {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1}
TRIANGLE_F = {(0, 1, 1): 4, (1, 0, 1): 1, (1, 1, 0): 1}
TRIANGLE_F_SUPPORT = [[0, 1], [0, 2], [1, 2]]
CYCLE4_U = {(0, 0, 0, 1): 1, (0, 0, 1, 0): 1, (0, 1, 0, 0): 1, (1, 0, 0, 0): 1}
CYCLE4_F = {(0, 0, 1, 1): 49,
 (0, 1, 0, 1): 9,
 (0, 1, 1, 0): 16,
 (1, 0, 0, 1): 1,
 (1, 0, 1, 0): 36,
 (1, 1, 0, 0): 4}
CYCLE4_F_SUPPORT = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


PRODUCT_JET_COUNTS = {(1, 1, 0, 2): 1,
 (1, 1, 0, 3): 1,
 (1, 1, 1, 2): 1,
 (1, 1, 1, 3): 1,
 (1, 1, 2, 2): 1,
 (1, 1, 2, 3): 1,
 (1, 2, 0, 2): 2,
 (1, 2, 0, 3): 3,
 (1, 2, 1, 2): 4,
 (1, 2, 1, 3): 9,
 (1, 2, 2, 2): 8,
 (1, 2, 2, 3): 27,
 (1, 3, 0, 2): 4,
 (1, 3, 0, 3): 9,
 (1, 3, 1, 2): 16,
 (1, 3, 1, 3): 81,
 (1, 3, 2, 2): 64,
 (1, 3, 2, 3): 729,
 (2, 2, 0, 2): 3,
 (2, 2, 0, 3): 5,
 (2, 2, 1, 2): 8,
 (2, 2, 1, 3): 21,
 (2, 2, 2, 2): 20,
 (2, 2, 2, 3): 81,
 (2, 3, 0, 2): 6,
 (2, 3, 0, 3): 15,
 (2, 3, 1, 2): 32,
 (2, 3, 1, 3): 189,
 (2, 3, 2, 2): 160,
 (2, 3, 2, 3): 2187,
 (3, 3, 0, 2): 7,
 (3, 3, 0, 3): 19,
 (3, 3, 1, 2): 44,
 (3, 3, 1, 3): 297,
 (3, 3, 2, 2): 256,
 (3, 3, 2, 3): 4131}
PSI23_JET1_COUNTS = {3: 99, 5: 725, 7: 2695}
DERIVATION_COUNT_2222 = 24
XSQUARED_JET1_F3 = 3


FPURE_WITNESSES = {('c4', 2): (0, 1, 1, 1),
 ('c4', 3): (0, 2, 2, 2),
 ('c4', 5): (0, 4, 4, 4),
 ('glued', 2): (0, 0, 1, 1, 1),
 ('glued', 3): (0, 0, 2, 2, 2),
 ('glued', 5): (0, 0, 4, 4, 4),
 ('u13', 2): (0, 0, 1),
 ('u13', 3): (0, 0, 2),
 ('u13', 5): (0, 0, 4),
 ('u23', 2): (0, 1, 1),
 ('u23', 3): (0, 2, 2),
 ('u23', 5): (0, 4, 4),
 ('u24', 2): (0, 0, 1, 1),
 ('u24', 3): (0, 0, 2, 2),
 ('u24', 5): (0, 0, 4, 4)}
SPLIT_WITNESSES_PRESENT = True  # predicted basis-shaped monomials all found
SPLIT_PREDICTED = {('c4', 2, 0): (1, 1, 1, 1),
 ('c4', 2, 1): (1, 1, 1, 1),
 ('c4', 2, 2): (1, 1, 1, 1),
 ('c4', 2, 3): (1, 1, 1, 1),
 ('c4', 3, 0): (1, 2, 2, 2),
 ('c4', 3, 1): (2, 1, 2, 2),
 ('c4', 3, 2): (2, 2, 1, 2),
 ('c4', 3, 3): (2, 2, 2, 1),
 ('c4', 5, 0): (1, 4, 4, 4),
 ('c4', 5, 1): (4, 1, 4, 4),
 ('c4', 5, 2): (4, 4, 1, 4),
 ('c4', 5, 3): (4, 4, 4, 1),
 ('glued', 2, 0): (1, 1, 1, 1, 0),
 ('glued', 2, 1): (1, 1, 1, 1, 0),
 ('glued', 2, 2): (1, 1, 1, 1, 0),
 ('glued', 2, 3): (1, 1, 0, 1, 1),
 ('glued', 2, 4): (1, 1, 0, 1, 1),
 ('glued', 3, 0): (1, 2, 2, 2, 0),
 ('glued', 3, 1): (2, 1, 2, 2, 0),
 ('glued', 3, 2): (2, 2, 1, 2, 0),
 ('glued', 3, 3): (2, 2, 0, 1, 2),
 ('glued', 3, 4): (2, 2, 0, 2, 1),
 ('glued', 5, 0): (1, 4, 4, 4, 0),
 ('glued', 5, 1): (4, 1, 4, 4, 0),
 ('glued', 5, 2): (4, 4, 1, 4, 0),
 ('glued', 5, 3): (4, 4, 0, 1, 4),
 ('glued', 5, 4): (4, 4, 0, 4, 1),
 ('u13', 2, 0): (1, 1, 0),
 ('u13', 2, 1): (1, 1, 0),
 ('u13', 2, 2): (1, 0, 1),
 ('u13', 3, 0): (1, 2, 0),
 ('u13', 3, 1): (2, 1, 0),
 ('u13', 3, 2): (2, 0, 1),
 ('u13', 5, 0): (1, 4, 0),
 ('u13', 5, 1): (4, 1, 0),
 ('u13', 5, 2): (4, 0, 1),
 ('u23', 2, 0): (1, 1, 1),
 ('u23', 2, 1): (1, 1, 1),
 ('u23', 2, 2): (1, 1, 1),
 ('u23', 3, 0): (1, 2, 2),
 ('u23', 3, 1): (2, 1, 2),
 ('u23', 3, 2): (2, 2, 1),
 ('u23', 5, 0): (1, 4, 4),
 ('u23', 5, 1): (4, 1, 4),
 ('u23', 5, 2): (4, 4, 1),
 ('u24', 2, 0): (1, 1, 1, 0),
 ('u24', 2, 1): (1, 1, 1, 0),
 ('u24', 2, 2): (1, 1, 1, 0),
 ('u24', 2, 3): (1, 1, 0, 1),
 ('u24', 3, 0): (1, 2, 2, 0),
 ('u24', 3, 1): (2, 1, 2, 0),
 ('u24', 3, 2): (2, 2, 1, 0),
 ('u24', 3, 3): (2, 2, 0, 1),
 ('u24', 5, 0): (1, 4, 4, 0),
 ('u24', 5, 1): (4, 1, 4, 0),
 ('u24', 5, 2): (4, 4, 1, 0),
 ('u24', 5, 3): (4, 4, 0, 1)}
