"""Independent brute-force oracles used only by the tests.

These deliberately avoid the library's own algorithms: the 2-core
oracle removes dominoes one at a time, and the symbol-class oracle
finds equivalence classes by raw search over bounded beta-set pairs.
"""

from __future__ import annotations

import itertools

from thetacalc import Symbol, normalize, partition, rank


def removable_dominoes(parts):
    """All single-domino removals of a partition, as new partitions."""
    parts = list(parts)
    out = []
    for i, row in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if row - 2 >= below:
            out.append(partition(parts[:i] + [row - 2] + parts[i + 1 :]))
        if i + 1 < len(parts) and parts[i + 1] == row:
            above = parts[i - 1] if i > 0 else None
            lower_next = parts[i + 2] if i + 2 < len(parts) else 0
            if row - 1 >= lower_next and (above is None or above >= row - 1):
                out.append(
                    partition(parts[:i] + [row - 1, row - 1] + parts[i + 2 :])
                )
    return out


def two_core_by_removal(parts):
    """Remove dominoes until none fits; greedy order."""
    current = partition(parts)
    while True:
        options = removable_dominoes(current)
        if not options:
            return current
        current = options[0]


def all_two_cores_by_removal(parts):
    """Every partition reachable by full domino removal (order check)."""
    frontier = {partition(parts)}
    terminal = set()
    while frontier:
        nxt = set()
        for lam in frontier:
            options = removable_dominoes(lam)
            if not options:
                terminal.add(lam)
            else:
                nxt.update(options)
        frontier = nxt
    return terminal


def bounded_beta_rows(max_entry, max_size):
    """All beta-sets with entries < max_entry and at most max_size entries."""
    values = range(max_entry)
    rows = []
    for size in range(max_size + 1):
        rows.extend(
            tuple(sorted(combo, reverse=True))
            for combo in itertools.combinations(values, size)
        )
    return rows


def exhaustive_symbol_classes(max_rank, max_entry=9, max_size=5):
    """Normalized symbol classes of rank <= max_rank found by raw search.

    With the default bounds the search provably covers every class of
    rank <= 3 (minimal representatives have at most 5 entries per row,
    all below 9).
    """
    rows = bounded_beta_rows(max_entry, max_size)
    found = {}
    for top in rows:
        for bottom in rows:
            sym = normalize(Symbol(top, bottom))
            r = rank(sym)
            if r <= max_rank:
                found.setdefault(r, set()).add(sym)
    return found
