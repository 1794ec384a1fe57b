"""Exact sparse bivariate Laurent polynomials in u and v.

A polynomial is a dictionary mapping exponent pairs ``(p, q)`` (which may be
negative) to nonzero Python integers.  This is the universal value type of the
whole library: every closed-form mixed-Hodge computation evaluates into it,
and exact equality of term maps is the test oracle everywhere.

  2*u + u^2*v^-1  ->  {(1, 0): 2, (2, -1): 1}

The zero polynomial has an empty term map.  Values are immutable after
construction; all operations return fresh objects.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple

from .errors import DomainError, InexactDivisionError, UnsupportedOperationError

Exponent = Tuple[int, int]


def _grlex(e: Exponent) -> Tuple[int, int]:
    # graded-lexicographic key: total degree first, then u-degree
    return (e[0] + e[1], e[0])


class BiLaurent:
    """Sparse Laurent polynomial in u, v over the integers, canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: Dict[Exponent, int] = {}
        if terms:
            for (p, q), c in terms.items():
                if c:
                    clean[(int(p), int(q))] = c
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls()

    @classmethod
    def const(cls, c: int) -> "BiLaurent":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, p: int, q: int) -> "BiLaurent":
        return cls({(p, q): c})

    @classmethod
    def u(cls) -> "BiLaurent":
        return cls({(1, 0): 1})

    @classmethod
    def v(cls) -> "BiLaurent":
        return cls({(0, 1): 1})

    @classmethod
    def uv(cls, n: int = 1) -> "BiLaurent":
        """The monomial (uv)^n; n may be negative."""
        return cls({(n, n): 1})

    # -- basic queries ------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _grlex(kv[0])))

    def coefficient(self, p: int, q: int) -> int:
        return self._terms.get((p, q), 0)

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiLaurent.const(other)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "BiLaurent | int") -> "BiLaurent":
        if isinstance(other, int):
            other = BiLaurent.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        res = BiLaurent.__new__(BiLaurent)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "BiLaurent":
        res = BiLaurent.__new__(BiLaurent)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other: "BiLaurent | int") -> "BiLaurent":
        if isinstance(other, int):
            other = BiLaurent.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "BiLaurent":
        return BiLaurent.const(other) - self

    def __mul__(self, other: "BiLaurent | int") -> "BiLaurent":
        if isinstance(other, int):
            if other == 0:
                return BiLaurent.zero()
            res = BiLaurent.__new__(BiLaurent)
            res._terms = {e: c * other for e, c in self._terms.items()}
            return res
        out: Dict[Exponent, int] = {}
        for (p1, q1), c1 in self._terms.items():
            for (p2, q2), c2 in other._terms.items():
                e = (p1 + p2, q1 + q2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        res = BiLaurent.__new__(BiLaurent)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiLaurent":
        if n < 0:
            if not self.is_monomial():
                raise UnsupportedOperationError(
                    "negative power is only defined for single-term operands"
                )
            ((p, q), c), = self._terms.items()
            if abs(c) != 1:
                raise UnsupportedOperationError(
                    f"negative power of monomial with coefficient {c} is not integral"
                )
            return BiLaurent.monomial(c if n % 2 else 1, p * n, q * n)
        result = BiLaurent.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- exact division -----------------------------------------------

    def exact_div(self, den: "BiLaurent") -> "BiLaurent":
        """Exact quotient self / den; raises InexactDivisionError otherwise.

        Iterated elimination of the graded-lex *smallest* term of the
        remainder.  Any nonzero remainder is a hard error, never truncated.
        """
        if den.is_zero():
            raise DomainError("division by the zero polynomial")
        if self.is_zero():
            return BiLaurent.zero()
        num = dict(self._terms)
        dmin = min(den._terms, key=_grlex)
        dmax = max(den._terms, key=_grlex)
        dc = den._terms[dmin]
        nmax = max(num, key=_grlex)
        bound = _grlex((nmax[0] - dmax[0], nmax[1] - dmax[1]))
        # generous lattice cap; only relevant for pathological inexact inputs
        all_p = [e[0] for e in num] + [e[0] for e in den._terms]
        all_q = [e[1] for e in num] + [e[1] for e in den._terms]
        cap = 4 * (max(all_p) - min(all_p) + 2) * (max(all_q) - min(all_q) + 2) + 16
        quot: Dict[Exponent, int] = {}
        while num:
            lead = min(num, key=_grlex)
            qe = (lead[0] - dmin[0], lead[1] - dmin[1])
            if _grlex(qe) > bound:
                raise InexactDivisionError(
                    "nonzero remainder: quotient support exceeds the exact bound"
                )
            c = num[lead]
            qc, rem = divmod(c, dc)
            if rem:
                raise InexactDivisionError(
                    f"coefficient {c} not divisible by leading coefficient {dc}"
                )
            quot[qe] = qc
            for (p, q), c2 in den._terms.items():
                e = (p + qe[0], q + qe[1])
                s = num.get(e, 0) - qc * c2
                if s:
                    num[e] = s
                elif e in num:
                    del num[e]
            cap -= 1
            if cap < 0:
                raise InexactDivisionError("division does not terminate; inexact")
        return BiLaurent(quot)

    def divide_int(self, k: int) -> "BiLaurent":
        """Exact division of every coefficient by the integer k."""
        if k == 0:
            raise DomainError("division by zero")
        out = {}
        for e, c in self._terms.items():
            qc, rem = divmod(c, k)
            if rem:
                raise InexactDivisionError(f"coefficient {c} not divisible by {k}")
            out[e] = qc
        return BiLaurent(out)

    # -- specializations ----------------------------------------------

    def swap_uv(self) -> "BiLaurent":
        return BiLaurent({(q, p): c for (p, q), c in self._terms.items()})

    def neg_squares(self) -> "BiLaurent":
        """Substitution u -> -u^2, v -> -v^2."""
        out: Dict[Exponent, int] = {}
        for (p, q), c in self._terms.items():
            e = (2 * p, 2 * q)
            sign = -1 if (p + q) % 2 else 1
            s = out.get(e, 0) + sign * c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return BiLaurent(out)

    def diagonal(self) -> "BiLaurent":
        """Substitution u -> t, v -> t; the result lives in the first variable."""
        out: Dict[Exponent, int] = {}
        for (p, q), c in self._terms.items():
            e = (p + q, 0)
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return BiLaurent(out)

    def evaluate(self, u_val: Fraction | int, v_val: Fraction | int) -> Fraction:
        u_val = Fraction(u_val)
        v_val = Fraction(v_val)
        total = Fraction(0)
        for (p, q), c in self._terms.items():
            total += c * u_val ** p * v_val ** q
        return total

    def reciprocal_dual(self, n: int) -> "BiLaurent":
        """The involution sending c*u^p*v^q to c*u^(n-p)*v^(n-q).

        A smooth projective variety of complex dimension n has a Hodge
        polynomial fixed by this map.
        """
        return BiLaurent({(n - p, n - q): c for (p, q), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap_uv()

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"u": p, "v": q, "c": str(self._terms[(p, q)])}
                for (p, q) in sorted(self._terms)
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BiLaurent":
        return cls({(t["u"], t["v"]): int(t["c"]) for t in obj["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "BiLaurent":
        return cls.from_json_obj(json.loads(text))

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (p, q), c in self:
            mono = ""
            if p:
                mono += f"u^{{{p}}}" if p != 1 else "u"
            if q:
                mono += f" v^{{{q}}}" if q != 1 else (" v" if mono else "v")
            mono = mono.strip()
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)} {mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_text(self, var1: str = "u", var2: str = "v") -> str:
        """Plain-text rendering in graded-lex term order."""
        if not self._terms:
            return "0"
        parts = []
        for (p, q), c in self:
            factors = []
            if p:
                factors.append(var1 if p == 1 else f"{var1}^{p}")
            if q:
                factors.append(var2 if q == 1 else f"{var2}^{q}")
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def univariate_text(self, var: str = "t") -> str:
        """Rendering for polynomials supported on the first variable only."""
        if any(q for (_, q) in self._terms):
            raise DomainError("not a univariate polynomial in the first variable")
        parts = []
        for (p, _), c in self:
            if p == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = var if p == 1 else f"{var}^{p}"
            else:
                body = f"{abs(c)}*{var}" if p == 1 else f"{abs(c)}*{var}^{p}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BiLaurent({self.to_text()})"


ONE = BiLaurent.const(1)
UV = BiLaurent.uv()
