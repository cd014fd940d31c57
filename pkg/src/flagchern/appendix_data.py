"""Reference table for F(1,1,2) at x_i = i: weights, their product and their sum.

Weight lists are copied from the reference table.  Two of its entries
disagree with their own weight lists (row ({4},{1},{2,3}) lists product 12
and sum 3; row ({4},{3},{1,2}) lists sum 9); the values below are the ones
the listed weights actually give.
"""

DIMS = (1, 1, 2)

ROWS = [
    {"I": "({1},{2},{3,4})", "W": [1, 2, 3, 1, 2], "e": 12, "c1": 9},
    {"I": "({1},{3},{2,4})", "W": [2, 1, 3, -1, 1], "e": -6, "c1": 6},
    {"I": "({1},{4},{2,3})", "W": [3, 1, 2, -2, -1], "e": 12, "c1": 3},
    {"I": "({2},{1},{3,4})", "W": [-1, 1, 2, 2, 3], "e": -12, "c1": 7},
    {"I": "({2},{3},{1,4})", "W": [1, -1, 2, -2, 1], "e": 4, "c1": 1},
    {"I": "({2},{4},{1,3})", "W": [2, -1, 1, -3, -1], "e": -6, "c1": -2},
    {"I": "({3},{1},{2,4})", "W": [-2, -1, 1, 1, 3], "e": 6, "c1": 2},
    {"I": "({3},{2},{1,4})", "W": [-1, -2, 1, -1, 2], "e": -4, "c1": -1},
    {"I": "({3},{4},{1,2})", "W": [1, -2, -1, -3, -2], "e": 12, "c1": -7},
    {"I": "({4},{1},{2,3})", "W": [-3, -2, -1, 1, 2], "e": -12, "c1": -3},
    {"I": "({4},{2},{1,3})", "W": [-2, -3, -1, -1, 1], "e": 6, "c1": -6},
    {"I": "({4},{3},{1,2})", "W": [-1, -3, -2, -2, -1], "e": -12, "c1": -9},
]

C1_POW5 = 4500
C1_POW6 = 0

GOLDEN = {"dims": list(DIMS), "rows": ROWS, "c1^5": C1_POW5, "c1^6": C1_POW6}
