"""Hand-transcribed reduced basis elements for general n.

Each entry maps (m, l - n) to the list of monomials (a, b, c - n); the first
monomial is the leading term.
"""

TABLE = {
    (0, -5): [(6, 0, -5), (4, 1, -5), (0, 3, -5), (0, 0, -3)],
    (0, -4): [(5, 0, -4), (2, 0, -3), (1, 2, -4)],
    (0, -3): [(4, 0, -3), (2, 1, -3), (0, 2, -3)],
    (0, -2): [(3, 0, -2), (0, 0, -1)],
    (0, -1): [(2, 0, -1), (0, 1, -1)],
    (0, 0): [(1, 0, 0)],
    (0, 1): [(0, 0, 1)],
    (1, -5): [(5, 1, -5), (4, 0, -4), (1, 3, -5), (0, 2, -4)],
    (1, -4): [(4, 1, -4), (3, 0, -3), (2, 2, -4), (0, 3, -4), (0, 0, -2)],
    (1, -3): [(3, 1, -3), (2, 0, -2)],
    (1, -2): [(2, 1, -2), (1, 0, -1), (0, 2, -2)],
    (1, -1): [(1, 1, -1), (0, 0, 0)],
    (1, 0): [(0, 1, 0)],
    (2, -5): [(4, 2, -5), (2, 3, -5), (2, 0, -3), (0, 4, -5), (0, 1, -3)],
    (2, -4): [(3, 2, -4), (1, 0, -2), (0, 2, -3)],
    (2, -3): [(2, 2, -3), (0, 3, -3), (0, 0, -1)],
    (2, -2): [(1, 2, -2)],
    (2, -1): [(0, 2, -1)],
    (3, -5): [(3, 3, -5), (2, 2, -4), (1, 1, -3), (0, 0, -2)],
    (3, -4): [(2, 3, -4), (1, 2, -3), (0, 4, -4), (0, 1, -2)],
    (3, -3): [(1, 3, -3), (0, 2, -2)],
    (3, -2): [(0, 3, -2), (0, 0, 0)],
    (4, -5): [(2, 4, -5), (0, 5, -5)],
    (4, -4): [(1, 4, -4), (0, 0, -1)],
    (4, -3): [(0, 4, -3), (0, 1, -1)],
    (5, -5): [(1, 5, -5), (0, 4, -4)],
    (5, -4): [(0, 5, -4), (1, 0, -1)],
    (6, -5): [(0, 6, -5), (0, 0, -1)],
}

# four further elements, valid for n >= 12
EXTRA = {
    (8, -9): [(2, 8, -9), (0, 9, -9), (0, 3, -5), (0, 0, -3)],
    (10, -9): [(0, 10, -9), (2, 3, -5), (2, 0, -3), (0, 1, -3)],
    (10, -10): [(1, 10, -10), (3, 0, -4), (2, 2, -5), (0, 0, -3)],
    (12, -12): [(1, 12, -12), (4, 0, -5), (0, 8, -9), (1, 0, -4)],
}


def instantiate(entry, n):
    return frozenset((a, b, c + n) for a, b, c in entry)
