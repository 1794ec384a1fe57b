"""Shared domain types: triple types, stability parameters, wall data,
and Hodge-polynomial results with verification metadata."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .errors import DomainError
from .polyring import BiLaurent

# side tags for a stability parameter: exact value, or an infinitesimal
# push to either side of it
MINUS_EPS = -1
EXACT = 0
PLUS_EPS = 1

_SIDE_LABEL = {MINUS_EPS: "-", EXACT: "", PLUS_EPS: "+"}


@dataclass(frozen=True, order=False)
class SigmaValue:
    """An exact rational stability parameter with an infinitesimal side tag.

    Comparisons treat epsilon as a positive infinitesimal, so
    (v, +eps) > (v, exact) > (v, -eps).
    """

    value: Fraction
    side: int = EXACT

    def __post_init__(self):
        if self.side not in (MINUS_EPS, EXACT, PLUS_EPS):
            raise DomainError(f"invalid side tag {self.side}")
        object.__setattr__(self, "value", Fraction(self.value))

    # -- arithmetic helpers (epsilon sign is preserved) ----------------

    def shift(self, c: Fraction | int) -> "SigmaValue":
        return SigmaValue(self.value + Fraction(c), self.side)

    def scale(self, r: Fraction | int) -> "SigmaValue":
        r = Fraction(r)
        if r <= 0:
            raise DomainError("scale factor must be positive")
        return SigmaValue(self.value * r, self.side)

    def floor(self) -> int:
        """Floor with the epsilon side resolving integer boundaries:
        floor(n + eps) = n, floor(n - eps) = n - 1, floor(n) = n."""
        base = self.value
        if base.denominator == 1:
            n = int(base)
            return n - 1 if self.side == MINUS_EPS else n
        # epsilon is smaller than any gap to the next integer
        return base.numerator // base.denominator

    # -- comparisons ---------------------------------------------------

    def _key(self):
        return (self.value, self.side)

    @staticmethod
    def _coerce(other) -> "SigmaValue":
        if isinstance(other, SigmaValue):
            return other
        return SigmaValue(Fraction(other))

    def __lt__(self, other):
        return self._key() < SigmaValue._coerce(other)._key()

    def __le__(self, other):
        return self._key() <= SigmaValue._coerce(other)._key()

    def __gt__(self, other):
        return self._key() > SigmaValue._coerce(other)._key()

    def __ge__(self, other):
        return self._key() >= SigmaValue._coerce(other)._key()

    def equals_exact(self, q: Fraction | int) -> bool:
        return self.side == EXACT and self.value == Fraction(q)

    @classmethod
    def parse(cls, text: str) -> "SigmaValue":
        """Parse 'NUM', 'NUM/DEN', with an optional trailing '+' or '-'."""
        text = text.strip()
        side = EXACT
        if text.endswith("+"):
            side = PLUS_EPS
            text = text[:-1]
        elif text.endswith("-"):
            side = MINUS_EPS
            text = text[:-1]
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse stability parameter {text!r}") from exc
        return cls(value, side)

    def __str__(self) -> str:
        return f"{self.value}{_SIDE_LABEL[self.side]}"


@dataclass(frozen=True)
class TripleType:
    """Type (n1, n2, d1, d2) of a holomorphic triple on a genus-g curve."""

    g: int
    n1: int
    n2: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 == 0:
            raise DomainError("ranks must be nonnegative and not both zero")

    @property
    def mu1(self) -> Fraction:
        if self.n1 == 0:
            raise DomainError("mu1 undefined for rank n1 = 0")
        return Fraction(self.d1, self.n1)

    @property
    def mu2(self) -> Fraction:
        if self.n2 == 0:
            raise DomainError("mu2 undefined for rank n2 = 0")
        return Fraction(self.d2, self.n2)

    @property
    def lam(self) -> Fraction:
        return Fraction(self.n2, self.n1 + self.n2)

    @property
    def slope_gap(self) -> Fraction:
        return self.mu1 - self.mu2

    def dual(self) -> "TripleType":
        """The dualization swap (n1,n2,d1,d2) -> (n2,n1,-d2,-d1)."""
        return TripleType(self.g, self.n2, self.n1, -self.d2, -self.d1)


# wall kinds for rank (2,2): the destabilizing data is either a line
# subbundle of E1 (level d_L) or a line subbundle of E2 (level d_F);
# for d1+d2 even both happen at once
DL_WALL = "dL"
DF_WALL = "dF"
BOTH_KINDS = "both"


@dataclass(frozen=True)
class FlipWall:
    """A critical value sigma_c = mu1 - mu2 + n for rank (2,2) triples."""

    n: int
    sigma_c: Fraction
    kind: str
    level: Optional[int] = None  # the integer d_L or d_F (None for BOTH_KINDS)

    def sigma_above(self) -> SigmaValue:
        return SigmaValue(self.sigma_c, PLUS_EPS)

    def sigma_below(self) -> SigmaValue:
        return SigmaValue(self.sigma_c, MINUS_EPS)


@dataclass(frozen=True)
class HodgeResult:
    """A Hodge polynomial together with the metadata the checks rely on."""

    poly: BiLaurent
    dim: int
    smooth: bool = False
    projective: bool = False

    def poincare(self) -> BiLaurent:
        return self.poly.diagonal()

    def sanity_failures(self) -> List[str]:
        """Symmetry / nonnegativity / constant-term / duality checks for
        smooth projective results; empty list means all pass."""
        if not (self.smooth and self.projective):
            return []
        failures = []
        if not self.poly.is_symmetric():
            failures.append("not symmetric under the u,v swap")
        if not self.poly.has_nonnegative_coefficients():
            failures.append("has a negative coefficient")
        if self.poly.constant_term() != 1:
            failures.append(f"constant term {self.poly.constant_term()} != 1")
        if self.poly.reciprocal_dual(self.dim) != self.poly:
            failures.append(f"not self-dual at complex dimension {self.dim}")
        return failures
