"""Independent brute-force references used by the tests.

Nothing here imports ``tra``; each helper recomputes an expected value a
different way than the library does.
"""

import itertools

# Printed preliminary SL table, rows = know-how 2..4, columns = resources 2..4.
PSL_PRINTED = [
    [2, 3, 4],
    [3, 3, 4],
    [3, 4, 4],
]

RAILWAY_PRINTED = {
    1: (1, 1, 1, 1, 1, 1, 1),
    2: (2, 2, 2, 1, 2, 2, 1),
    3: (3, 3, 3, 1, 3, 3, 1),
    4: (4, 4, 4, 1, 4, 4, 1),
}

ISO27005_PRINTED = [
    [0, 1, 2, 3, 4],
    [1, 2, 3, 4, 5],
    [2, 3, 4, 5, 6],
    [3, 4, 5, 6, 7],
    [4, 5, 6, 7, 8],
]

SAMPLE_PRINTED = [
    [1, 2, 3, 4, 5],
    [2, 4, 6, 8, 10],
    [3, 6, 9, 12, 15],
    [4, 8, 12, 16, 20],
    [5, 10, 15, 20, 25],
]


def sl_target_oracle(r):
    """SL-T by integer counting: how many thresholds 4k+1 (k=1..4) does r reach."""
    return sum(1 for k in range(1, 5) if r >= 4 * k + 1)


def zero_sl_cells_oracle():
    return sorted(
        (l, i) for l in range(1, 6) for i in range(1, 6) if sl_target_oracle(l * i) == 0
    )


def vectors_dominated_by(top):
    return sum(
        1
        for v in itertools.product(range(5), repeat=7)
        if all(x <= t for x, t in zip(v, top))
    )


def default_sample_band(value):
    if 1 <= value <= 4:
        return "green"
    if 5 <= value <= 8:
        return "yellow"
    if 9 <= value <= 12:
        return "orange"
    if 15 <= value <= 25:
        return "red"
    raise KeyError(value)


def same_band_different_slt_pairs():
    cells = [(l, i) for i in range(1, 6) for l in range(1, 6)]
    out = []
    for (l1, i1), (l2, i2) in itertools.combinations(cells, 2):
        r1, r2 = l1 * i1, l2 * i2
        if default_sample_band(r1) == default_sample_band(r2) and sl_target_oracle(r1) != sl_target_oracle(r2):
            out.append(((l1, i1), (l2, i2)))
    return out
