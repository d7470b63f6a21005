import dataclasses
import logging
from collections import namedtuple
from typing import Iterable, Optional, Sequence

from newtondual.exceptions import AmbientMismatchException, TrivialIdealException

log = logging.getLogger("newtondual")

# Exponents are kept within signed 32-bit range; every input at desk scale is tiny.
MAX_EXPONENT: int = 2**31 - 1

SupportStats = namedtuple("SupportStats", ["supp", "supp_1", "max"])


@dataclasses.dataclass(frozen=True)
class Monomial:
    """
    An exponent vector over a fixed number of variables. Variables are indexed 1..n
    in every public function; the tuple itself is 0-indexed.
    """

    exponents: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def exponent(self, i: int) -> int:
        return self.exponents[i - 1]

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        return format_monomial(self)


def monomial(exponents: Iterable[int]) -> Monomial:
    exps: tuple[int, ...] = tuple(int(e) for e in exponents)
    if not exps:
        raise ValueError("A monomial needs at least one variable.")
    for e in exps:
        if e < 0:
            raise ValueError(f"Negative exponent {e} in {exps}.")
        if e > MAX_EXPONENT:
            raise OverflowError(f"Exponent {e} exceeds {MAX_EXPONENT}.")
    return Monomial(exps)


def unit(n: int) -> Monomial:
    return monomial([0] * n)


def variable(n: int, i: int) -> Monomial:
    exps: list[int] = [0] * n
    exps[i - 1] = 1
    return monomial(exps)


def from_support(n: int, support: Iterable[int]) -> Monomial:
    """Squarefree monomial x^sigma for a set of 1-based indices."""
    exps: list[int] = [0] * n
    for i in support:
        exps[i - 1] = 1
    return monomial(exps)


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        names = [f"x{i}" for i in range(1, m.n + 1)]

    parts: list[str] = []
    for name, e in zip(names, m.exponents, strict=True):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")

    return "*".join(parts) if parts else "1"


def _check_ambient(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise AmbientMismatchException(f"Monomials live in {a.n} and {b.n} variables.")


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_ambient(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents, strict=True)))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_ambient(a, b)
    return Monomial(tuple(min(x, y) for x, y in zip(a.exponents, b.exponents, strict=True)))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_ambient(a, b)
    return monomial(x + y for x, y in zip(a.exponents, b.exponents, strict=True))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a / b; b must divide a."""
    if not divides(b, a):
        raise ValueError(f"{b} does not divide {a}.")
    return Monomial(tuple(x - y for x, y in zip(a.exponents, b.exponents, strict=True)))


def monomial_pow(a: Monomial, r: int) -> Monomial:
    return monomial(e * r for e in a.exponents)


def divides(a: Monomial, b: Monomial) -> bool:
    _check_ambient(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents, strict=True))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m.exponents)


def fold_lcm(monomials: Iterable[Monomial]) -> Monomial:
    result: Optional[Monomial] = None
    for m in monomials:
        result = m if result is None else monomial_lcm(result, m)
    if result is None:
        raise ValueError("Cannot take the lcm of no monomials.")
    return result


def colex_key(m: Monomial) -> tuple[int, ...]:
    """Sort key realising the co-lexicographic order within a fixed degree."""
    return tuple(reversed(m.exponents))


def colex_compare(a: Monomial, b: Monomial) -> int:
    """
    Returns -1, 0 or 1 as a precedes, equals or follows b. a precedes b iff at the
    largest index k where they differ, a(k) < b(k).
    """
    _check_ambient(a, b)
    if a.degree != b.degree:
        raise ValueError(f"Co-lex comparison needs equal degrees; got {a.degree} and {b.degree}.")

    for x, y in zip(reversed(a.exponents), reversed(b.exponents), strict=True):
        if x != y:
            return -1 if x < y else 1
    return 0


def support_stats(m: Monomial) -> SupportStats:
    if m.is_unit():
        raise TrivialIdealException("The unit monomial has empty support.")

    supp: frozenset[int] = frozenset(i for i, e in enumerate(m.exponents, 1) if e > 0)
    return SupportStats(supp, supp - {1}, max(supp))


@dataclasses.dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal held by its minimal generating set. Generators are sorted by
    degree and then co-lexicographically, so equal ideals compare equal.
    """

    n: int
    generators: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.is_unit() for g in self.generators)

    @property
    def is_equigenerated(self) -> bool:
        return len({g.degree for g in self.generators}) == 1

    @property
    def degree(self) -> int:
        if not self.is_equigenerated:
            raise ValueError("The ideal is not generated in a single degree.")
        return self.generators[0].degree

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal_sort_key(m: Monomial) -> tuple:
    return m.degree, colex_key(m)


def minimalize(gens: Iterable[Monomial], n: Optional[int] = None) -> MonomialIdeal:
    candidates: list[Monomial] = sorted(set(gens), key=ideal_sort_key)

    if not candidates:
        if n is None:
            raise ValueError("An empty generator set needs an explicit ambient variable count.")
        log.debug("Empty generator set in %s variables; returning the zero ideal.", n)
        return MonomialIdeal(n, ())

    ambient: int = candidates[0].n if n is None else n
    kept: list[Monomial] = []
    for c in candidates:
        if c.n != ambient:
            raise AmbientMismatchException(f"Generator {c} does not live in {ambient} variables.")
        # Divisors have degree at most that of c, so they were already seen.
        if not any(divides(k, c) for k in kept):
            kept.append(c)

    return MonomialIdeal(ambient, tuple(kept))


def require_nontrivial(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise TrivialIdealException("The zero ideal is not accepted here.")
    if ideal.is_unit:
        raise TrivialIdealException("The unit ideal is not accepted here.")


def colon_ideal(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    if ideal.n != m.n:
        raise AmbientMismatchException(f"Ideal lives in {ideal.n} variables, monomial in {m.n}.")

    return minimalize((monomial_div(g, monomial_gcd(g, m)) for g in ideal.generators), ideal.n)


def product_ideal(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    if first.n != second.n:
        raise AmbientMismatchException(f"Ideals live in {first.n} and {second.n} variables.")

    return minimalize((monomial_mul(f, g) for f in first.generators for g in second.generators), first.n)


def sum_ideal(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    if first.n != second.n:
        raise AmbientMismatchException(f"Ideals live in {first.n} and {second.n} variables.")

    return minimalize(first.generators + second.generators, first.n)


def ideal_lcm(ideal: MonomialIdeal) -> Monomial:
    require_nontrivial(ideal)
    return fold_lcm(ideal.generators)


def is_generated_by_variables(ideal: MonomialIdeal) -> bool:
    return all(g.degree == 1 for g in ideal.generators)


def variable_indices(ideal: MonomialIdeal) -> frozenset[int]:
    """The 1-based indices of variable generators of an ideal generated by variables."""
    return frozenset(g.exponents.index(1) + 1 for g in ideal.generators if g.degree == 1)


def ideal_from_exponents(rows: Iterable[Sequence[int]]) -> MonomialIdeal:
    return minimalize(monomial(r) for r in rows)
