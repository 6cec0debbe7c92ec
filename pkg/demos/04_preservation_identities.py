"""The preservation identities, from symbols to arbitrary characters.

The two first occurrences of a character across paired towers always
sum to twice the space dimension minus twice delta, plus a constant
depending only on the family (+1 unitary, 0 orthogonal, +2 symplectic).
Cuspidal characters have delta = 0, recovering the classical sums.
"""

from random import Random

from thetacalc import (
    SP,
    SeriesTag,
    char_dim,
    delta_char,
    enumerate_series,
    delta_symbol,
    format_symbol,
    preservation_sum_general,
    preservation_sum_unipotent,
    preservation_sum_unitary,
    random_character,
    staircase,
)

print("symplectic symbols of rank 2: dims over the two even towers sum to 4n - 2 delta + 2")
for sym in enumerate_series(SeriesTag(SP, 2)):
    lhs, rhs = preservation_sum_unipotent(sym)
    print(f"   {format_symbol(sym):>12}: delta {delta_symbol(sym)}, sum {lhs} == {rhs}")

print()
print("unitary staircases (the cuspidal partitions): sum = m(m+1) + 1")
for m in range(4):
    lam = staircase(m)
    lhs, rhs = preservation_sum_unitary(lam)
    print(f"   m={m}: partition {lam}, sum {lhs} == {rhs} == {m * (m + 1) + 1}")

print()
print("500 random block-model characters per family, exact every time:")
rng = Random(2024)
for family in ("u", "oeven", "oodd"):
    checked = 0
    for _ in range(500):
        rho = random_character(family, rng, 12)
        lhs, rhs = preservation_sum_general(rho)
        assert lhs == rhs, rho
        checked += 1
    print(f"   {family}: {checked} identities verified")
for kind in ("even", "odd"):
    checked = 0
    for _ in range(500):
        rho = random_character("sp", rng, 12)
        lhs, rhs = preservation_sum_general(rho, kind)
        assert lhs == rhs, rho
        checked += 1
    print(f"   sp ({kind} targets): {checked} identities verified")

print()
rho = random_character("sp", rng, 12)
print("one sampled symplectic character:", rho)
print(
    f"dim {char_dim(rho)}, delta(even) {delta_char(rho, 'even')}, "
    f"delta(odd) {delta_char(rho, 'odd')}"
)
