"""First occurrences: closed-form theta maps against brute-force scans.

For a symplectic-series symbol the minimal partner in each even
orthogonal tower is given by a four-case closed form; an independent
scan over the target series confirms both the partner and its rank.
The classical cuspidal first occurrences fall out: the rank-2
symplectic cuspidal meets the non-split tower at dimension 2 and the
split tower at dimension 8.
"""

from thetacalc import (
    SP,
    O_MINUS,
    O_PLUS,
    SeriesTag,
    enumerate_series,
    first_occurrence_bruteforce,
    first_occurrence_unitary,
    format_partition,
    format_symbol,
    parse_symbol,
    rank,
    theta_zero_sp,
)

cuspidal = parse_symbol("|2,1,0")
for family, sign in ((O_PLUS, 1), (O_MINUS, -1)):
    closed = theta_zero_sp(cuspidal, sign)
    oracle = first_occurrence_bruteforce(cuspidal, family)
    print(
        f"{format_symbol(cuspidal)} -> {family}: closed partner {format_symbol(closed)} "
        f"(dim {2 * rank(closed)}), oracle dim {oracle.space_dimension}"
    )

print()
print("closed form == oracle across the whole rank-3 symplectic series:")
for sym in enumerate_series(SeriesTag(SP, 3)):
    dims = []
    for family, sign in ((O_PLUS, 1), (O_MINUS, -1)):
        closed = 2 * rank(theta_zero_sp(sym, sign))
        oracle = first_occurrence_bruteforce(sym, family).space_dimension
        assert closed == oracle
        dims.append(closed)
    print(f"   {format_symbol(sym):>12}: towers {dims[0]:>2} and {dims[1]:>2}")

print()
print("unitary towers for a few partitions (even-dim, odd-dim targets):")
for lam in [(), (1,), (2,), (2, 1), (3, 1)]:
    even = first_occurrence_unitary(lam, 0)
    odd = first_occurrence_unitary(lam, 1)
    print(
        f"   [{format_partition(lam):>5}]: {even.space_dimension:>2} "
        f"(witness {format_partition(even.witnesses[0])!r}) and {odd.space_dimension:>2} "
        f"(witness {format_partition(odd.witnesses[0])!r})"
    )
