"""Tour of the basic symbol calculus.

A symbol is an ordered pair of beta-sets (strictly decreasing sets of
non-negative integers) up to simultaneous shift.  Its rank matches the
rank of a classical group, its defect mod 4 picks the group family,
and delta measures the distance from cuspidality.
"""

from thetacalc import (
    delta_symbol,
    defect,
    equivalent,
    format_symbol,
    is_cuspidal,
    normalize,
    parse_symbol,
    rank,
    shift,
    upsilon,
)

examples = ["|", "0|", "1,0|2", "|2,1,0", "3,1|2,0", "2,1,0|2,1"]

print(f"{'symbol':>12}  {'rank':>4}  {'defect':>6}  {'delta':>5}  {'cuspidal':>8}  upsilon")
for text in examples:
    sym = parse_symbol(text)
    upper, lower = upsilon(sym)
    print(
        f"{format_symbol(sym):>12}  {rank(sym):>4}  {defect(sym):>6}  "
        f"{delta_symbol(sym):>5}  {str(is_cuspidal(sym)):>8}  ({upper}, {lower})"
    )

print()
sym = parse_symbol("1,0|2")
moved = shift(sym, 3)
print(f"{format_symbol(sym)} shifted three times is {format_symbol(moved)}")
print(f"equivalent: {equivalent(sym, moved)}; normalized back: {format_symbol(normalize(moved))}")
print("rank, defect, delta and upsilon are all invariants of the class.")
