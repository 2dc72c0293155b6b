"""Exact arithmetic core: sparse multivariate polynomials, integer
partitions and compositions, and classical counting sequences.

Conventions used throughout the package:

* rationals are `fractions.Fraction`; plain `int` is accepted anywhere a
  rational is expected, and operations return `int` when the value is
  integral (the two compare and hash equal, so mixing is safe);
* a partition is a tuple of positive ints sorted weakly decreasing, the
  empty tuple being the empty partition;
* an exponent vector is a tuple of nonnegative ints, one per variable.

All values are immutable after construction and every operation is a pure
function, so everything here can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

Coeff = int | Fraction


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or "p") into a Fraction. "3", "3/1" and "-29/720" all work."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def format_rational(value: Coeff) -> str:
    """Canonical string form: "p/q" with q > 0 and gcd 1, or plain "p" if integral."""
    return str(Fraction(value))


def _normalize_coeff(value: Coeff) -> Coeff:
    # ints keep the heavy integer-only paths on fast native arithmetic
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


# ---------------------------------------------------------------------------
# counting sequences
# ---------------------------------------------------------------------------

def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)... down to 1 or 2, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial needs n >= -1, got {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient extended to negative n via the falling factorial."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    # coefficients of v(v-1)...(v-n+1) in powers of v
    row = [1]
    for m in range(n):
        row = [
            (row[j - 1] if j > 0 else 0) - m * (row[j] if j < len(row) else 0)
            for j in range(m + 2)
        ]
    return tuple(row)


def stirling_first_signed(n: int, i: int) -> int:
    """Signed Stirling number of the first kind: sum_i s(n,i) v^i = v(v-1)...(v-n+1)."""
    if n < 0 or i < 0 or i > n:
        raise ValueError(f"need 0 <= i <= n, got n={n}, i={i}")
    return _stirling1_row(n)[i]


@lru_cache(maxsize=None)
def _stirling2_row(m: int) -> tuple[int, ...]:
    row = [1]
    for _ in range(m):
        row = [
            (row[j - 1] if j > 0 else 0) + j * (row[j] if j < len(row) else 0)
            for j in range(len(row) + 1)
        ]
    return tuple(row)


def stirling_second(m: int, n: int) -> int:
    """Stirling number of the second kind: partitions of an m-set into n blocks."""
    if m < 0 or n < 0:
        raise ValueError(f"need m, n >= 0, got m={m}, n={n}")
    if n > m:
        return 0
    return _stirling2_row(m)[n]


# ---------------------------------------------------------------------------
# partitions and compositions
# ---------------------------------------------------------------------------

def normalize_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Canonical form: weakly decreasing tuple of positive ints."""
    out = tuple(sorted(parts, reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def partitions_of(n: int, max_parts: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n (at most max_parts parts if given) in canonical order.

    The order -- by number of parts ascending, then lexicographically
    descending -- is part of the interface: emitted tables and cached
    files index rows and columns by it.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    out.sort(key=lambda p: (len(p), tuple(-x for x in p)))
    return out


def compositions(m: int, slots: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of `slots` nonnegative ints summing to m.

    Deterministic order: first slot descending, then recursively the rest.
    Yields binomial(m + slots - 1, slots - 1) tuples.
    """
    if m < 0 or slots < 1:
        raise ValueError(f"need m >= 0 and slots >= 1, got m={m}, slots={slots}")
    if slots == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in compositions(m - first, slots - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

class MultiPoly:
    """Sparse polynomial in variables x0..x(N-1) with exact coefficients.

    Terms are stored as a map from exponent vector (dense tuple, one entry
    per variable) to a nonzero coefficient, so two polynomials are equal
    exactly when their term maps are equal.  The variable count is fixed at
    construction; arithmetic between different arities raises instead of
    coercing (silent broadcasting hides indexing bugs).  Instances are
    immutable.
    """

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], Coeff] | Iterable = ()):
        if num_vars < 1:
            raise ValueError(f"need at least one variable, got {num_vars}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[tuple[int, ...], Coeff] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {num_vars} variables")
            coeff = _normalize_coeff(store.get(exps, 0) + coeff)
            if coeff:
                store[exps] = coeff
            else:
                store.pop(exps, None)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "_terms", store)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _raw(cls, num_vars: int, store: dict) -> "MultiPoly":
        # internal: store is already canonical (no zeros, correct arity)
        self = object.__new__(cls)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "_terms", store)
        return self

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value: Coeff) -> "MultiPoly":
        value = _normalize_coeff(value)
        if not value:
            return cls.zero(num_vars)
        return cls._raw(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exps = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls._raw(num_vars, {exps: 1})

    @classmethod
    def var_sum(cls, num_vars: int, upto: int) -> "MultiPoly":
        """x0 + x1 + ... + x_upto."""
        if not 0 <= upto < num_vars:
            raise ValueError(f"variable index {upto} out of range for {num_vars} variables")
        store = {}
        for i in range(upto + 1):
            store[tuple(1 if j == i else 0 for j in range(num_vars))] = 1
        return cls._raw(num_vars, store)

    # -- inspection ---------------------------------------------------------

    def items(self):
        """Live (exponent vector, coefficient) view; do not mutate."""
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Iterable[int]) -> Coeff:
        return self._terms.get(tuple(exps), 0)

    def coefficient_sum(self) -> Coeff:
        """Sum of all coefficients, i.e. the value at the all-ones point."""
        return _normalize_coeff(sum(self._terms.values(), start=Fraction(0)))

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=0)

    def degree_in(self, index: int) -> int:
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} out of range")
        return max((e[index] for e in self._terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _require_same_arity(self, other: "MultiPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"mismatched variable counts: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same_arity(other)
        store = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = _normalize_coeff(store.get(exps, 0) + coeff)
            if total:
                store[exps] = total
            else:
                store.pop(exps, None)
        return MultiPoly._raw(self.num_vars, store)

    def __neg__(self):
        return MultiPoly._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._require_same_arity(other)
            store: dict[tuple[int, ...], Coeff] = {}
            get = store.get
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    exps = tuple(a + b for a, b in zip(e1, e2))
                    total = get(exps, 0) + c1 * c2
                    if total:
                        store[exps] = total
                    else:
                        del store[exps]
            for exps in [e for e, c in store.items() if isinstance(c, Fraction)]:
                store[exps] = _normalize_coeff(store[exps])
            return MultiPoly._raw(self.num_vars, store)
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.num_vars)
            return MultiPoly._raw(
                self.num_vars,
                {e: _normalize_coeff(c * other) for e, c in self._terms.items()},
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            raise ZeroDivisionError("division of polynomial by zero")
        return self * (Fraction(1) / scalar)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial powers need a nonnegative int, got {exponent!r}")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    __hash__ = None  # dict-backed; use serialized form as a key if needed

    # -- structural operations ----------------------------------------------

    def substitute(self, index: int, replacement: "MultiPoly") -> "MultiPoly":
        """Replace variable `index` by `replacement` and re-expand."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} out of range")
        self._require_same_arity(replacement)
        powers: dict[int, MultiPoly] = {0: MultiPoly.constant(self.num_vars, 1)}

        def power(n: int) -> MultiPoly:
            if n not in powers:
                powers[n] = power(n - 1) * replacement
            return powers[n]

        result = MultiPoly.zero(self.num_vars)
        for exps, coeff in self._terms.items():
            exp_i = exps[index]
            rest = exps[:index] + (0,) + exps[index + 1 :]
            monomial = MultiPoly._raw(self.num_vars, {rest: coeff})
            result = result + monomial * power(exp_i)
        return result

    def eval(self, point: Iterable[Coeff]) -> Coeff:
        """Exact value at the point (one coordinate per variable)."""
        coords = tuple(point)
        if len(coords) != self.num_vars:
            raise ValueError(
                f"point has {len(coords)} coordinates, polynomial has {self.num_vars} variables"
            )
        total: Coeff = 0
        for exps, coeff in self._terms.items():
            value = coeff
            for x, e in zip(coords, exps):
                if e:
                    value *= x ** e
            total += value
        return _normalize_coeff(total)

    def extended(self, num_vars: int) -> "MultiPoly":
        """Same polynomial viewed in a larger variable set (exponents padded)."""
        if num_vars < self.num_vars:
            raise ValueError(f"cannot shrink from {self.num_vars} to {num_vars} variables")
        if num_vars == self.num_vars:
            return self
        pad = (0,) * (num_vars - self.num_vars)
        return MultiPoly._raw(num_vars, {e + pad: c for e, c in self._terms.items()})

    # -- serialization and rendering -----------------------------------------

    def to_obj(self) -> list[dict]:
        """JSON form: [{"exp": [...], "coeff": "p/q"}, ...] sorted by exponents."""
        return [
            {"exp": list(exps), "coeff": format_rational(self._terms[exps])}
            for exps in sorted(self._terms)
        ]

    @classmethod
    def from_obj(cls, obj: Iterable[Mapping], num_vars: int | None = None) -> "MultiPoly":
        terms = []
        for entry in obj:
            exps = tuple(entry["exp"])
            terms.append((exps, parse_rational(entry["coeff"])))
            if num_vars is None:
                num_vars = len(exps)
        if num_vars is None:
            raise ValueError("empty term list needs an explicit num_vars")
        return cls(num_vars, terms)

    def _ordered_terms(self):
        # graded-lex with x0 most significant, leading term first
        return sorted(
            self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0]))
        )

    def text(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for exps, coeff in self._ordered_terms():
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            ]
            mag = abs(coeff)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(mag)] + factors)
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def latex(self) -> str:
        if not self._terms:
            return "0"

        def render_coeff(c: Coeff) -> str:
            c = Fraction(c)
            if c.denominator == 1:
                return str(c.numerator)
            sign = "-" if c < 0 else ""
            return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"

        chunks = []
        for exps, coeff in self._ordered_terms():
            factors = [
                f"x_{{{i}}}" if e == 1 else f"x_{{{i}}}^{{{e}}}"
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(Fraction(coeff))
            if not factors:
                body = render_coeff(mag)
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = " ".join([render_coeff(mag)] + factors)
            chunks.append(("-" if coeff < 0 else "+", body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.num_vars}, {self.text()!r})"
