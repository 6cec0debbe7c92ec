"""The block model of arbitrary irreducible characters.

A character is a multiset of abstract blocks (the part of the
underlying semisimple element away from eigenvalues +-1) plus one or
two unipotent symbols.  Correspondence between two characters reduces
to block equality and symbol relations, so first occurrences and the
twist structure become finite computations.
"""

import json

from thetacalc import (
    c_twist,
    character_to_json,
    char_dim,
    corresponds,
    first_occurrence_general_brute,
    first_occurrence_partner,
    is_cuspidal_character,
    make_character,
    odd_witt_split,
    parse_symbol,
    pseudo_unipotent_cuspidal_sp,
    sgn_twist,
)

S = parse_symbol

# the unipotent cuspidal of the rank-2 symplectic group
zeta = make_character("sp", 2, [], S("|"), S("|2,1,0"))
print("unipotent cuspidal of Sp_4:", json.dumps(character_to_json(zeta)))
print("   cuspidal:", is_cuspidal_character(zeta), " dim:", char_dim(zeta))
dim, partner = first_occurrence_partner(zeta, "o-odd")
print("   first odd-orthogonal occurrence at dim", dim, "partner:",
      json.dumps(character_to_json(partner)))
print("   partner cuspidal and pseudo-unipotent:",
      is_cuspidal_character(partner) and partner.d0 == 0)

print()
# the two pseudo-unipotent cuspidals of Sp_2 are swapped by the c twist
rho1, rho2 = pseudo_unipotent_cuspidal_sp(1).characters
print("pseudo-unipotent cuspidals of Sp_2 swapped by the c twist:",
      c_twist(rho1) == rho2)
print("   odd-tower split of the first:", odd_witt_split(rho1))
print("   odd-tower split of the second:", odd_witt_split(rho2))

print()
# a mixed character with a nontrivial block
rho = make_character("sp", 3, [2], S("1,0|"), S("1,0|1"))
print("mixed symplectic character:", json.dumps(character_to_json(rho)))
for target in ("o+", "o-", "o-odd"):
    dim, partner = first_occurrence_partner(rho, target)
    brute_dim, hits = first_occurrence_general_brute(rho, target)
    print(f"   target {target}: closed {dim}, oracle {brute_dim}, "
          f"witnesses {len(hits)}, partner corresponds: {corresponds(rho, partner)}")

print()
twisted = sgn_twist(first_occurrence_partner(rho, "o+")[1])
print("sgn twist of the even-orthogonal partner:",
      json.dumps(character_to_json(twisted)))
