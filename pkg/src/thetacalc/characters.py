"""Block-decomposed model of irreducible characters.

An irreducible character of a finite classical group is modeled by the
data its parametrization attaches to it: a multiset of abstract blocks
(label plus dimension) for the part of the underlying semisimple
element with eigenvalues other than +-1, and one or two unipotent
symbols (a partition for unitary groups).  Everything the first
occurrence and preservation identities need is a function of this data,
so eigenvalues and field size never enter.

Correspondence between two characters reduces to block equality plus
the unipotent relations of :mod:`thetacalc.theta`, which makes the
general first occurrences computable both in closed form (theta maps)
and by a brute-force scan over model characters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from random import Random

from .partitions import (
    Partition,
    format_partition,
    parse_partition,
    partition,
    partitions_of,
)
from .symbols import (
    SP,
    O_MINUS,
    O_PLUS,
    SeriesTag,
    Symbol,
    defect,
    delta_symbol,
    enumerate_series,
    format_symbol,
    normalize,
    orth_sign,
    parse_symbol,
    rank,
    symbol_from_partition,
    transpose,
)
from .theta import (
    first_occurrence_unitary_closed,
    in_b_sp_oeven,
    in_b_uu,
    theta_zero_orth,
    theta_zero_sp,
)

U_FAMILY = "u"
SP_FAMILY = "sp"
OEVEN_FAMILY = "oeven"
OODD_FAMILY = "oodd"

TARGETS = ("u-even", "u-odd", "sp", "o+", "o-", "o-odd", "o-odd-c")

_LEGAL_TARGETS = {
    U_FAMILY: ("u-even", "u-odd"),
    SP_FAMILY: ("o+", "o-", "o-odd", "o-odd-c"),
    OEVEN_FAMILY: ("sp",),
    OODD_FAMILY: ("sp",),
}


class CharacterError(ValueError):
    pass


class DimensionMismatchError(CharacterError):
    pass


class WrongSeriesError(CharacterError):
    pass


class MissingSignBitError(CharacterError):
    pass


class SpuriousFieldError(CharacterError):
    pass


class WrongFamilyError(CharacterError):
    pass


class UnsupportedPairError(CharacterError):
    pass


class UnsupportedTargetError(CharacterError):
    pass


Block = tuple[str, int]


def canonical_blocks(entries) -> tuple[Block, ...]:
    """Blocks from dims or (label, dim) pairs, in canonical order.

    Bare dimensions get positional labels so that equal dimension
    multisets compare equal.
    """
    items = list(entries)
    if items and not isinstance(items[0], tuple):
        dims = sorted((int(d) for d in items), reverse=True)
        items = [(f"x{i + 1}", d) for i, d in enumerate(dims)]
    blocks = tuple(sorted((str(label), int(dim)) for label, dim in items))
    labels = [label for label, _ in blocks]
    if len(set(labels)) != len(labels):
        raise CharacterError(f"duplicate block labels in {blocks}")
    return blocks


def _require_sp_series(sym: Symbol, who: str) -> None:
    if defect(sym) % 4 != 1:
        raise WrongSeriesError(f"wrong-series: {who} must have defect 1 mod 4")


def _require_orth_series(sym: Symbol, who: str) -> None:
    if defect(sym) % 2 != 0:
        raise WrongSeriesError(f"wrong-series: {who} must have even defect")


@dataclass(frozen=True)
class GeneralCharacter:
    """family 'u', 'sp', 'oeven' or 'oodd' with the block data described above.

    lambda1 is a partition for 'u' and a symbol otherwise; symbols are
    stored normalized so equality is structural.
    """

    family: str
    n: int
    blocks: tuple[Block, ...] = ()
    lambda1: Symbol | Partition = ()
    lambda2: Symbol | None = None
    epsilon: int | None = None
    sign: int | None = None

    def __post_init__(self):
        if self.n < 0:
            raise CharacterError("n must be non-negative")
        object.__setattr__(self, "blocks", canonical_blocks(self.blocks))
        d0 = self.d0
        if any(dim < 1 for _, dim in self.blocks):
            raise CharacterError("block dimensions must be positive")

        if self.family == U_FAMILY:
            for field in ("lambda2", "epsilon", "sign"):
                if getattr(self, field) is not None:
                    raise SpuriousFieldError(f"spurious-field: {field} on a unitary character")
            object.__setattr__(self, "lambda1", partition(self.lambda1))
            if self.n != d0 + sum(self.lambda1):
                raise DimensionMismatchError(
                    f"dimension-mismatch: n={self.n} != {d0} + |{self.lambda1}|"
                )
            return

        if self.family not in (SP_FAMILY, OEVEN_FAMILY, OODD_FAMILY):
            raise CharacterError(f"unknown family {self.family!r}")
        if any(dim % 2 for _, dim in self.blocks):
            raise DimensionMismatchError("dimension-mismatch: blocks must have even dims")
        if not isinstance(self.lambda1, Symbol) or not isinstance(self.lambda2, Symbol):
            raise CharacterError("lambda1 and lambda2 must be symbols")
        object.__setattr__(self, "lambda1", normalize(self.lambda1))
        object.__setattr__(self, "lambda2", normalize(self.lambda2))

        if self.family == SP_FAMILY:
            if self.epsilon is not None or self.sign is not None:
                raise SpuriousFieldError("spurious-field: epsilon/sign on a symplectic character")
            _require_orth_series(self.lambda1, "lambda1")
            _require_sp_series(self.lambda2, "lambda2")
        elif self.family == OEVEN_FAMILY:
            if self.sign is not None:
                raise SpuriousFieldError("spurious-field: sign on an even-orthogonal character")
            _require_orth_series(self.lambda1, "lambda1")
            _require_orth_series(self.lambda2, "lambda2")
            derived = orth_sign(self.lambda1) * orth_sign(self.lambda2)
            if self.epsilon is None:
                object.__setattr__(self, "epsilon", derived)
            elif self.epsilon != derived:
                raise WrongSeriesError(
                    f"wrong-series: epsilon {self.epsilon} != lambda series product {derived}"
                )
        else:
            if self.epsilon is not None:
                raise SpuriousFieldError("spurious-field: epsilon on an odd-orthogonal character")
            if self.sign not in (1, -1):
                raise MissingSignBitError("missing-sign-bit: odd-orthogonal characters need sign")
            _require_sp_series(self.lambda1, "lambda1")
            _require_sp_series(self.lambda2, "lambda2")

        if 2 * self.n != d0 + 2 * rank(self.lambda1) + 2 * rank(self.lambda2):
            raise DimensionMismatchError(
                "dimension-mismatch: 2n != d0 + 2 rk(lambda1) + 2 rk(lambda2)"
            )

    @property
    def d0(self) -> int:
        return sum(dim for _, dim in self.blocks)


_FAMILY_ALIASES = {
    "u": (U_FAMILY, None),
    "sp": (SP_FAMILY, None),
    "oeven": (OEVEN_FAMILY, None),
    "o+": (OEVEN_FAMILY, 1),
    "o-": (OEVEN_FAMILY, -1),
    "oodd": (OODD_FAMILY, None),
    "o-odd": (OODD_FAMILY, None),
}


def make_character(
    family: str,
    n: int,
    d0_blocks=(),
    lambda1=(),
    lambda2=None,
    sign=None,
    epsilon=None,
) -> GeneralCharacter:
    """Validated character; raises the named CharacterError subclasses.

    family accepts the aliases "o+"/"o-" (even orthogonal with the sign
    baked in) and "o-odd" alongside the canonical names.
    """
    if family not in _FAMILY_ALIASES:
        raise CharacterError(f"unknown family {family!r}")
    family, implied_epsilon = _FAMILY_ALIASES[family]
    if implied_epsilon is not None:
        if epsilon is not None and epsilon != implied_epsilon:
            raise WrongSeriesError("wrong-series: epsilon contradicts the family alias")
        epsilon = implied_epsilon
    return GeneralCharacter(
        family=family,
        n=n,
        blocks=canonical_blocks(d0_blocks),
        lambda1=lambda1,
        lambda2=lambda2,
        epsilon=epsilon,
        sign=sign,
    )


def char_dim(rho: GeneralCharacter) -> int:
    """dim of the underlying space: n, 2n, 2n, or 2n + 1 by family."""
    if rho.family == U_FAMILY:
        return rho.n
    if rho.family == OODD_FAMILY:
        return 2 * rho.n + 1
    return 2 * rho.n


def delta_char(rho: GeneralCharacter, sp_targets: str | None = None) -> int:
    """The delta statistic steering the preservation identities.

    For symplectic characters it depends on which Witt series of targets
    is in play: 'even' reads delta off lambda2, 'odd' off lambda1.
    """
    if rho.family == U_FAMILY:
        return delta_symbol(symbol_from_partition(rho.lambda1))
    if rho.family == SP_FAMILY:
        if sp_targets == "even":
            return delta_symbol(rho.lambda2)
        if sp_targets == "odd":
            return delta_symbol(rho.lambda1)
        raise ValueError("sp characters need sp_targets 'even' or 'odd'")
    return delta_symbol(rho.lambda2)


def sgn_twist(rho: GeneralCharacter) -> GeneralCharacter:
    """Tensor with the sign character (orthogonal families only)."""
    if rho.family == OEVEN_FAMILY:
        return replace(
            rho, lambda1=transpose(rho.lambda1), lambda2=transpose(rho.lambda2)
        )
    if rho.family == OODD_FAMILY:
        return replace(rho, sign=-rho.sign)
    raise WrongFamilyError("wrong-family: sgn twist applies to orthogonal characters")


def c_twist(rho: GeneralCharacter) -> GeneralCharacter:
    """The similitude-conjugation twist (symplectic family only)."""
    if rho.family != SP_FAMILY:
        raise WrongFamilyError("wrong-family: c twist applies to symplectic characters")
    return replace(rho, lambda1=transpose(rho.lambda1))


def is_cuspidal_character(rho: GeneralCharacter) -> bool:
    """Modeling rule: no blocks and every unipotent component cuspidal."""
    from .symbols import is_cuspidal

    if rho.blocks:
        return False
    if rho.family == U_FAMILY:
        return is_cuspidal(symbol_from_partition(rho.lambda1))
    return is_cuspidal(rho.lambda1) and is_cuspidal(rho.lambda2)


def corresponds(rho: GeneralCharacter, rho_prime: GeneralCharacter) -> bool:
    """Whether the two characters pair under the correspondence.

    Supported family pairs: (u, u), (sp, oeven), (sp, oodd) in either
    order.  Block data must agree exactly; the unipotent components are
    compared through the symbol relations.
    """
    pair = (rho.family, rho_prime.family)
    if pair == (U_FAMILY, U_FAMILY):
        return rho.blocks == rho_prime.blocks and in_b_uu(
            symbol_from_partition(rho.lambda1),
            symbol_from_partition(rho_prime.lambda1),
        )
    if pair == (OEVEN_FAMILY, SP_FAMILY) or pair == (OODD_FAMILY, SP_FAMILY):
        rho, rho_prime = rho_prime, rho
        pair = (rho.family, rho_prime.family)
    if pair == (SP_FAMILY, OEVEN_FAMILY):
        return (
            rho.blocks == rho_prime.blocks
            and rho.lambda1 == rho_prime.lambda1
            and in_b_sp_oeven(rho.lambda2, rho_prime.lambda2, orth_sign(rho_prime.lambda2))
        )
    if pair == (SP_FAMILY, OODD_FAMILY):
        eps1 = orth_sign(rho.lambda1)
        return (
            rho.blocks == rho_prime.blocks
            and rho.lambda2 == rho_prime.lambda1
            and in_b_sp_oeven(rho_prime.lambda2, rho.lambda1, eps1)
            and rho_prime.sign == eps1
        )
    raise UnsupportedPairError(f"unsupported-pair: {pair}")


def _check_target(rho: GeneralCharacter, target: str) -> None:
    if target not in TARGETS:
        raise UnsupportedTargetError(f"unsupported-target: {target!r}")
    if target not in _LEGAL_TARGETS[rho.family]:
        raise UnsupportedTargetError(
            f"unsupported-target: {target!r} for family {rho.family!r}"
        )


def first_occurrence_partner(
    rho: GeneralCharacter, target: str
) -> tuple[int, GeneralCharacter]:
    """Closed-form first occurrence: minimal target dimension and a partner.

    Block data passes through unchanged; the free unipotent component of
    the partner is the theta image of the matching component of rho.
    """
    _check_target(rho, target)
    blocks = rho.blocks
    d0 = rho.d0

    if rho.family == U_FAMILY:
        parity = 0 if target == "u-even" else 1
        sub_parity = (parity - d0) % 2
        size, partner_partition = first_occurrence_unitary_closed(
            rho.lambda1, sub_parity
        )
        dim = d0 + size
        return dim, GeneralCharacter(U_FAMILY, dim, blocks, partner_partition)

    if rho.family == SP_FAMILY:
        if target in ("o+", "o-"):
            eps_target = 1 if target == "o+" else -1
            tower = eps_target * orth_sign(rho.lambda1)
            partner2 = theta_zero_sp(rho.lambda2, tower)
            dim = d0 + 2 * rank(rho.lambda1) + 2 * rank(partner2)
            partner = GeneralCharacter(
                OEVEN_FAMILY, dim // 2, blocks, rho.lambda1, partner2
            )
            return dim, partner
        if target == "o-odd":
            partner2 = theta_zero_orth(rho.lambda1)
            dim = d0 + 2 * rank(rho.lambda2) + 2 * rank(partner2) + 1
            partner = GeneralCharacter(
                OODD_FAMILY,
                (dim - 1) // 2,
                blocks,
                rho.lambda2,
                partner2,
                sign=orth_sign(rho.lambda1),
            )
            return dim, partner
        # o-odd-c: the second odd tower, realized on the twisted character
        return first_occurrence_partner(c_twist(rho), "o-odd")

    if rho.family == OEVEN_FAMILY:
        partner2 = theta_zero_orth(rho.lambda2)
        dim = d0 + 2 * rank(rho.lambda1) + 2 * rank(partner2)
        return dim, GeneralCharacter(SP_FAMILY, dim // 2, blocks, rho.lambda1, partner2)

    partner1 = theta_zero_sp(rho.lambda2, rho.sign)
    dim = d0 + 2 * rank(rho.lambda1) + 2 * rank(partner1)
    return dim, GeneralCharacter(SP_FAMILY, dim // 2, blocks, partner1, rho.lambda1)


def first_occurrence_general(rho: GeneralCharacter, target: str) -> int:
    return first_occurrence_partner(rho, target)[0]


def _max_delta(rho: GeneralCharacter) -> int:
    if rho.family == U_FAMILY:
        return delta_symbol(symbol_from_partition(rho.lambda1))
    return max(delta_symbol(rho.lambda1), delta_symbol(rho.lambda2))


def enumerate_characters(
    family: str, n: int, blocks: tuple[Block, ...] = (), epsilon: int | None = None
):
    """All model characters of the family with the given rank and blocks."""
    blocks = canonical_blocks(blocks)
    d0 = sum(dim for _, dim in blocks)
    if family == U_FAMILY:
        if n >= d0:
            for lam in partitions_of(n - d0):
                yield GeneralCharacter(U_FAMILY, n, blocks, lam)
        return
    if d0 % 2 or 2 * n < d0:
        return
    budget = n - d0 // 2

    def orth_symbols(r: int):
        return itertools.chain(
            enumerate_series(SeriesTag(O_PLUS, r)), enumerate_series(SeriesTag(O_MINUS, r))
        )

    for r1 in range(budget + 1):
        r2 = budget - r1
        if family == SP_FAMILY:
            for sym1 in orth_symbols(r1):
                for sym2 in enumerate_series(SeriesTag(SP, r2)):
                    yield GeneralCharacter(SP_FAMILY, n, blocks, sym1, sym2)
        elif family == OEVEN_FAMILY:
            for sym1 in orth_symbols(r1):
                for sym2 in orth_symbols(r2):
                    if epsilon is not None and orth_sign(sym1) * orth_sign(sym2) != epsilon:
                        continue
                    yield GeneralCharacter(OEVEN_FAMILY, n, blocks, sym1, sym2)
        elif family == OODD_FAMILY:
            for sym1 in enumerate_series(SeriesTag(SP, r1)):
                for sym2 in enumerate_series(SeriesTag(SP, r2)):
                    for sign in (1, -1):
                        yield GeneralCharacter(OODD_FAMILY, n, blocks, sym1, sym2, sign=sign)
        else:
            raise CharacterError(f"unknown family {family!r}")


def block_dim_choices(d0: int, even: bool) -> list[tuple[int, ...]]:
    """All block-dimension multisets summing to d0 (even parts if even)."""
    if even:
        if d0 % 2:
            return []
        return [tuple(2 * p for p in lam) for lam in partitions_of(d0 // 2)]
    return [lam for lam in partitions_of(d0)]


def enumerate_characters_all_blocks(family: str, n: int, epsilon: int | None = None):
    """Model characters of every block configuration at the given rank."""
    even = family != U_FAMILY
    top = n if family == U_FAMILY else 2 * n
    for d0 in range(0, top + 1, 2 if even else 1):
        for dims in block_dim_choices(d0, even):
            yield from enumerate_characters(family, n, canonical_blocks(dims), epsilon)


def first_occurrence_general_brute(
    rho: GeneralCharacter, target: str
) -> tuple[int, tuple[GeneralCharacter, ...]]:
    """Oracle: scan target characters by increasing dimension until one
    corresponds.  Partner blocks must equal the source blocks, so the
    scan fixes them and enumerates the unipotent data."""
    _check_target(rho, target)
    if target == "o-odd-c":
        return first_occurrence_general_brute(c_twist(rho), "o-odd")
    cap_dim = 2 * char_dim(rho) + 2 * _max_delta(rho) + 4
    blocks = rho.blocks

    if rho.family == U_FAMILY:
        parity = 0 if target == "u-even" else 1
        sizes = range(parity, cap_dim + 1, 2)
        candidates = lambda size: enumerate_characters(U_FAMILY, size, blocks)
        dim_of = lambda size: size
    elif target in ("o+", "o-"):
        eps = 1 if target == "o+" else -1
        sizes = range(0, cap_dim // 2 + 1)
        candidates = lambda size: enumerate_characters(OEVEN_FAMILY, size, blocks, eps)
        dim_of = lambda size: 2 * size
    elif target == "o-odd":
        sizes = range(0, (cap_dim - 1) // 2 + 1)
        candidates = lambda size: enumerate_characters(OODD_FAMILY, size, blocks)
        dim_of = lambda size: 2 * size + 1
    else:
        sizes = range(0, cap_dim // 2 + 1)
        candidates = lambda size: enumerate_characters(SP_FAMILY, size, blocks)
        dim_of = lambda size: 2 * size

    for size in sizes:
        hits = tuple(cand for cand in candidates(size) if corresponds(rho, cand))
        if hits:
            return dim_of(size), hits
    raise RuntimeError(f"cap-exceeded: no partner for {rho} in {target}")


def preservation_sum_general(
    rho: GeneralCharacter, sp_targets: str | None = None
) -> tuple[int, int]:
    """Both sides of the preservation identity for a model character."""
    dim = char_dim(rho)
    if rho.family == U_FAMILY:
        lhs = first_occurrence_general(rho, "u-even") + first_occurrence_general(
            rho, "u-odd"
        )
        return lhs, 2 * dim - 2 * delta_char(rho) + 1
    if rho.family in (OEVEN_FAMILY, OODD_FAMILY):
        lhs = first_occurrence_general(rho, "sp") + first_occurrence_general(
            sgn_twist(rho), "sp"
        )
        return lhs, 2 * dim - 2 * delta_char(rho)
    if sp_targets == "even":
        lhs = first_occurrence_general(rho, "o+") + first_occurrence_general(rho, "o-")
        return lhs, 2 * dim - 2 * delta_char(rho, "even") + 2
    if sp_targets == "odd":
        lhs = first_occurrence_general(rho, "o-odd") + first_occurrence_general(
            c_twist(rho), "o-odd"
        )
        return lhs, 2 * dim - 2 * delta_char(rho, "odd") + 2
    raise ValueError("sp characters need sp_targets 'even' or 'odd'")


def odd_witt_split(rho: GeneralCharacter) -> tuple[int, int]:
    """First occurrences of a symplectic character in the two odd
    orthogonal towers; the second tower is the first tower of the twist."""
    if rho.family != SP_FAMILY:
        raise WrongFamilyError("wrong-family: odd towers attach to symplectic characters")
    return (
        first_occurrence_general(rho, "o-odd"),
        first_occurrence_general(c_twist(rho), "o-odd"),
    )


def random_character(family: str, rng: Random, max_dim: int = 12) -> GeneralCharacter:
    """A uniformly-shaped random valid character with dim <= max_dim."""
    if family == U_FAMILY:
        n = rng.randint(0, max_dim)
        d0 = rng.randint(0, n)
        dims = rng.choice(partitions_of(d0))
        lam = rng.choice(partitions_of(n - d0))
        return GeneralCharacter(U_FAMILY, n, canonical_blocks(dims), lam)

    n_top = max_dim // 2 if family != OODD_FAMILY else (max_dim - 1) // 2
    n = rng.randint(0, n_top)
    half = rng.randint(0, n)
    dims = tuple(2 * p for p in rng.choice(partitions_of(half)))
    blocks = canonical_blocks(dims)
    r1 = rng.randint(0, n - half)
    r2 = n - half - r1

    def orth_pick(r: int) -> Symbol:
        pool = list(enumerate_series(SeriesTag(O_PLUS, r))) + list(
            enumerate_series(SeriesTag(O_MINUS, r))
        )
        return rng.choice(pool)

    def sp_pick(r: int) -> Symbol:
        return rng.choice(list(enumerate_series(SeriesTag(SP, r))))

    if family == SP_FAMILY:
        return GeneralCharacter(SP_FAMILY, n, blocks, orth_pick(r1), sp_pick(r2))
    if family == OEVEN_FAMILY:
        return GeneralCharacter(OEVEN_FAMILY, n, blocks, orth_pick(r1), orth_pick(r2))
    if family == OODD_FAMILY:
        return GeneralCharacter(
            OODD_FAMILY, n, blocks, sp_pick(r1), sp_pick(r2), sign=rng.choice((1, -1))
        )
    raise CharacterError(f"unknown family {family!r}")


_JSON_FAMILY = {
    "u": (U_FAMILY, None),
    "sp": (SP_FAMILY, None),
    "o+": (OEVEN_FAMILY, 1),
    "o-": (OEVEN_FAMILY, -1),
    "o-odd": (OODD_FAMILY, None),
}


def character_to_json(rho: GeneralCharacter) -> dict:
    """The character literal consumed and produced by the CLI."""
    if rho.family == OEVEN_FAMILY:
        family = "o+" if rho.epsilon > 0 else "o-"
    else:
        family = {U_FAMILY: "u", SP_FAMILY: "sp", OODD_FAMILY: "o-odd"}[rho.family]
    if rho.family == U_FAMILY:
        lambda1 = format_partition(rho.lambda1)
        lambda2 = None
    else:
        lambda1 = format_symbol(rho.lambda1)
        lambda2 = format_symbol(rho.lambda2)
    sign = None if rho.sign is None else ("+" if rho.sign > 0 else "-")
    return {
        "family": family,
        "n": rho.n,
        "d0_blocks": [dim for _, dim in rho.blocks],
        "lambda1": lambda1,
        "lambda2": lambda2,
        "sign": sign,
    }


def character_from_json(data: dict) -> GeneralCharacter:
    try:
        family, epsilon = _JSON_FAMILY[data["family"]]
    except KeyError as exc:
        raise CharacterError(f"unknown family {data.get('family')!r}") from exc
    sign_text = data.get("sign")
    sign = None if sign_text in (None, "") else (1 if sign_text == "+" else -1)
    if family == U_FAMILY:
        lambda1: Symbol | Partition = parse_partition(data["lambda1"])
        lambda2 = None
    else:
        lambda1 = parse_symbol(data["lambda1"])
        lambda2 = parse_symbol(data["lambda2"])
    return make_character(
        family,
        int(data["n"]),
        tuple(int(d) for d in data.get("d0_blocks", ())),
        lambda1,
        lambda2,
        sign=sign,
        epsilon=epsilon,
    )
