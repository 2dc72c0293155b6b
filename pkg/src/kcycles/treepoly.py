"""Production route for the tree polynomials and their relatives.

The reduced tree polynomial of level k lives in variables x0..x_{2k}; it
is assembled from a family of integer-coefficient polynomials P_k^c (c
odd, |c| <= 2k+1, with P_k^c = P_k^{-c}) via

    reduced_tree_poly(k) = 4^(-k) * sum_{s=0..k} P_k^{2s+1},

and the family satisfies a three-term recursion in k that this module
iterates with x0 kept general.  The same family gives the leaf-weighted
generalizations l_poly(k, n) = 4^(-k) * sum (2s+1)^(2n) P_k^{2s+1}, whose
exponential generating function in t satisfies the hyperbolic recursion
checked by verify_g_recursion.  Closed forms for near-all-ones
evaluations and the shuffle sign-sum tables live here too, next to the
recursion they cross-check.

Everything returned is immutable and cached per process; building a new
level takes an internal lock, reads after that are lock-free.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exact import MultiPoly, binomial, double_factorial
from .series import TruncatedSeries, elementary_series

# Exponent vectors are packed into one int, _PACK_BITS bits per variable,
# while the recursion runs; multiplying monomials becomes a single integer
# add.  Results are unpacked into canonical MultiPoly form at the API
# boundary.  Six bits bound per-variable exponents by 63, far above the
# 2k+2 reached while building any practical level.
_PACK_BITS = 6
_PACK_MASK = (1 << _PACK_BITS) - 1
_MAX_LEVEL = 30

_lock = threading.RLock()
_packed_levels: list[dict[int, dict[int, int]]] = [{1: {0: 1}}]
_pfamily_cache: dict[int, "PFamily"] = {}
_reduced_cache: dict[int, MultiPoly] = {}


def _pvar(i: int) -> dict[int, int]:
    return {1 << (_PACK_BITS * i): 1}


def _pzsum(j: int) -> dict[int, int]:
    # x0 + x1 + ... + xj
    return {1 << (_PACK_BITS * i): 1 for i in range(j + 1)}


def _padd(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        total = out.get(e, 0) + c
        if total:
            out[e] = total
        elif e in out:
            del out[e]
    return out


def _pscale(p: dict, s: int) -> dict:
    return {e: c * s for e, c in p.items()} if s else {}


def _pmul(p: dict, q: dict) -> dict:
    out: dict[int, int] = {}
    get = out.get
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            c = get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                del out[e]
    return out


def _unpack(packed: dict[int, int], num_vars: int) -> dict[tuple[int, ...], int]:
    return {
        tuple((e >> (_PACK_BITS * i)) & _PACK_MASK for i in range(num_vars)): c
        for e, c in packed.items()
    }


def _extend_levels(level: int) -> None:
    # caller holds _lock
    while len(_packed_levels) <= level:
        k = len(_packed_levels) - 1
        prev = _packed_levels[k]

        def source(c: int) -> dict[int, int]:
            return prev.get(abs(c), {})

        y1, y2 = _pvar(2 * k + 1), _pvar(2 * k + 2)
        z2k = _pzsum(2 * k)
        z2k1 = _pzsum(2 * k + 1)
        z2k2 = _pzsum(2 * k + 2)
        y1y2 = _pmul(y1, y2)
        z2k_z2k2 = _pmul(z2k, z2k2)
        z2k1_ysum = _pmul(z2k1, _padd(y1, y2))
        drop = _pmul(z2k, _padd(z2k1, _pscale(y2, -1)))  # z_{2k}(z_{2k+1} - y2)

        nxt: dict[int, dict[int, int]] = {}
        for c in range(1, 2 * k + 4, 2):
            keep = _padd(_pscale(y1y2, 2 * c * c), _pscale(drop, -2))
            down = _padd(
                _padd(_pscale(y1y2, (c - 2) ** 2), _pscale(z2k1_ysum, c - 2)),
                z2k_z2k2,
            )
            up = _padd(
                _padd(_pscale(y1y2, (c + 2) ** 2), _pscale(z2k1_ysum, -(c + 2))),
                z2k_z2k2,
            )
            acc = _pmul(source(c), keep)
            acc = _padd(acc, _pmul(source(c - 2), down))
            acc = _padd(acc, _pmul(source(c + 2), up))
            nxt[c] = acc
        _packed_levels.append(nxt)


@dataclass(frozen=True)
class PFamily:
    """The polynomials P_k^c for one level, keyed by c in {1, 3, ..., 2k+1}.

    Only nonnegative c is stored; P_k^{-c} = P_k^c.  Treat the dict as
    read-only.
    """

    k: int
    polys: dict[int, MultiPoly] = field(repr=False)

    def __getitem__(self, c: int) -> MultiPoly:
        c = abs(c)
        if c > 2 * self.k + 1:
            return MultiPoly.zero(2 * self.k + 1)
        return self.polys[c]


def p_family(k: int) -> PFamily:
    """The level-k family, computed by iterating the three-term recursion."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k > _MAX_LEVEL:
        raise ValueError(f"level {k} exceeds the packed-exponent limit {_MAX_LEVEL}")
    with _lock:
        if k not in _pfamily_cache:
            _extend_levels(k)
            num_vars = 2 * k + 1
            polys = {
                c: MultiPoly(num_vars, _unpack(packed, num_vars))
                for c, packed in _packed_levels[k].items()
            }
            _pfamily_cache[k] = PFamily(k, polys)
        return _pfamily_cache[k]


def reduced_tree_poly(k: int) -> MultiPoly:
    """Generating function of increasing trees on 0..2k by even-component counts.

    Homogeneous of degree 2k with nonnegative integer coefficients summing
    to (2k)!; linear in x_{2k}; depends on x0 and x1 only through x0 + x1.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    with _lock:
        if k not in _reduced_cache:
            _extend_levels(k)
            acc: dict[int, int] = {}
            for c in range(1, 2 * k + 2, 2):
                acc = _padd(acc, _packed_levels[k][c])
            num_vars = 2 * k + 1
            scale = Fraction(1, 4 ** k)
            terms = {e: c * scale for e, c in _unpack(acc, num_vars).items()}
            _reduced_cache[k] = MultiPoly(num_vars, terms)
        return _reduced_cache[k]


def tree_poly(k: int) -> MultiPoly:
    """x0 times the reduced tree polynomial; homogeneous of degree 2k+1."""
    reduced = reduced_tree_poly(k)
    return MultiPoly.variable(reduced.num_vars, 0) * reduced


def l_poly(k: int, n: int) -> MultiPoly:
    """Tree generating function with 2n extra leaves: 4^-k sum (2s+1)^(2n) P_k^(2s+1).

    l_poly(k, 0) is the reduced tree polynomial; the coefficient sum is
    (2k)! (2k+1)^(2n).
    """
    if k < 0 or n < 0:
        raise ValueError(f"need k, n >= 0, got ({k}, {n})")
    family = p_family(k)
    num_vars = 2 * k + 1
    acc = MultiPoly.zero(num_vars)
    for s in range(k + 1):
        acc = acc + family[2 * s + 1] * ((2 * s + 1) ** (2 * n))
    return acc / 4 ** k


def _check_odd_tuple(values: Sequence[int]) -> tuple[int, ...]:
    values = tuple(values)
    if len(values) % 2 == 0 or not values:
        raise ValueError(f"need an odd number of entries, got {len(values)}")
    if any(v < 1 or v % 2 == 0 for v in values):
        raise ValueError(f"entries must be positive odd integers, got {values}")
    return values


def q_eval(values: Sequence[int]) -> Fraction:
    """Average oriented sign sum over cyclic shuffles of the given alphabet.

    Equals the full tree polynomial divided by the shuffle count
    z0 z1 ... z_{2k-1}, where z_j is the j-th partial sum of the entries;
    the division is exact by construction.
    """
    values = _check_odd_tuple(values)
    k = (len(values) - 1) // 2
    numerator = values[0] * reduced_tree_poly(k).eval(values)
    denominator = 1
    partial = 0
    for j in range(2 * k):
        partial += values[j]
        denominator *= partial
    return Fraction(numerator) / denominator


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def t_closed_ones(k: int, n: int, m: int) -> int:
    """Closed form for the tree polynomial at (n, 1, ..., 1, m).

    (2k-1)!! m n (n+1)(n+3)...(n+2k-1).  For k = 0 the first and last
    positions coincide, so n and m must agree and the value is n.
    """
    if n < 1 or n % 2 == 0 or m < 1 or m % 2 == 0:
        raise ValueError(f"n and m must be positive odd, got ({n}, {m})")
    if k == 0:
        if n != m:
            raise ValueError("at k = 0 the two distinguished positions merge; need n == m")
        return n
    value = double_factorial(2 * k - 1) * m * n
    for i in range(1, k + 1):
        value *= n + 2 * i - 1
    return value


def q_closed_ones(k: int, n: int) -> Fraction:
    """Closed form for the average sign sum at (n, 1, ..., 1): (2k-1)!! n!! / (n+2k-2)!!."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be positive odd, got {n}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return Fraction(
        double_factorial(2 * k - 1) * double_factorial(n), double_factorial(n + 2 * k - 2)
    )


def t_closed_main(k: int, p: int, q: int, r: int) -> int:
    """Closed form for the tree polynomial at (3, 1^p, 2r+1, 1^q) with p+q = 2k-1."""
    if k < 1 or p < 0 or q < 0 or r < 0:
        raise ValueError(f"need k >= 1 and p, q, r >= 0, got (k={k}, p={p}, q={q}, r={r})")
    if p + q != 2 * k - 1:
        raise ValueError(f"need p + q = 2k - 1, got p={p}, q={q}, k={k}")
    total = Fraction(0)
    for s in range((q + 1) // 2 + 1):
        bracket = (q - 2 * s + 1) * (2 * r + 2 * s + 1) - 2 * s * (2 * k - 2 * s + 3)
        total += (
            Fraction(factorial(q), factorial(q - 2 * s + 1))
            * binomial(r - 1 + s, s)
            * factorial(2 * k - 2 * s)
            * 3
            * (k - s + 1)
            * bracket
        )
    if total.denominator != 1:
        raise ArithmeticError(f"closed form produced a non-integer: {total}")
    return int(total)


def xe_tables(variant: str, n: int, m: int) -> tuple[int, Fraction]:
    """Closed-form (X, E) for the three shuffle sign-sum families.

    X is the total oriented sign sum over the binomial(n+m, n) shuffles and
    E its average, tabulated by the parities of n and m; E * binomial(n+m, n)
    equals X in every case.
    """
    if variant not in ("X0", "X1", "X2"):
        raise ValueError(f"unknown variant {variant!r}")
    if n < 0 or m < 0:
        raise ValueError(f"need n, m >= 0, got ({n}, {m})")
    df = double_factorial
    if n % 2 == 0:
        j = n // 2
        if m % 2 == 0:
            kk = m // 2
            x = {
                "X0": 2 * j * comb(j + kk, j),
                "X1": (2 * j + 1) * comb(j + kk, j),
                "X2": (2 * j + 2) * comb(j + kk, j),
            }[variant]
            e = {
                "X0": Fraction(2 * j * df(2 * j - 1) * df(2 * kk - 1), df(2 * j + 2 * kk - 1)),
                "X1": Fraction(df(2 * j + 1) * df(2 * kk - 1), df(2 * j + 2 * kk - 1)),
                "X2": Fraction(
                    (2 * j + 2) * df(2 * j - 1) * df(2 * kk - 1), df(2 * j + 2 * kk - 1)
                ),
            }[variant]
        else:
            kk = (m + 1) // 2
            x = {"X0": 0, "X1": comb(j + kk - 1, j), "X2": 0}[variant]
            e = {
                "X0": Fraction(0),
                "X1": Fraction(df(2 * j - 1) * df(2 * kk - 1), df(2 * j + 2 * kk - 1)),
                "X2": Fraction(0),
            }[variant]
    else:
        j = (n + 1) // 2
        if m % 2 == 0:
            kk = m // 2
            x = {
                "X0": (2 * j + 2 * kk - 1) * comb(j + kk - 1, kk),
                "X1": (2 * j + 2 * kk) * comb(j + kk - 1, kk),
                "X2": (2 * j + 2 * kk + 1) * comb(j + kk - 1, kk),
            }[variant]
            base = Fraction(df(2 * j - 1) * df(2 * kk - 1), 1)
            e = {
                "X0": base / df(2 * j + 2 * kk - 3),
                "X1": (2 * j + 2 * kk) * base / df(2 * j + 2 * kk - 1),
                "X2": (2 * j + 2 * kk + 1) * base / df(2 * j + 2 * kk - 1),
            }[variant]
        else:
            kk = (m + 1) // 2
            x = {
                "X0": 2 * kk * comb(j + kk - 1, kk),
                "X1": 2 * kk * comb(j + kk - 1, kk),
                "X2": -2 * kk * comb(j + kk - 1, kk),
            }[variant]
            base = Fraction(df(2 * j - 1) * df(2 * kk - 1), df(2 * j + 2 * kk - 3))
            e = {"X0": base, "X1": base, "X2": -base}[variant]
    return x, e


def double_sum_identity(k: int, r: int) -> tuple[Fraction, Fraction]:
    """Both sides of the split-position sum identity.

    lhs sums q_eval over (3, 1^p, 2r+1, 1^q) for all p + q = 2k - 1; rhs is
    3(2k+2r+3)/(2k+1) - 3 (2r+3)!! (2k-1)!! / (2k+2r+1)!!.  The two agree.
    """
    if k < 1 or r < 0:
        raise ValueError(f"need k >= 1 and r >= 0, got ({k}, {r})")
    lhs = Fraction(0)
    for p in range(2 * k):
        q = 2 * k - 1 - p
        lhs += q_eval((3,) + (1,) * p + (2 * r + 1,) + (1,) * q)
    rhs = Fraction(3 * (2 * k + 2 * r + 3), 2 * k + 1) - Fraction(
        3 * double_factorial(2 * r + 3) * double_factorial(2 * k - 1),
        double_factorial(2 * k + 2 * r + 1),
    )
    return lhs, rhs


def verify_g_recursion(k: int, order: int) -> bool:
    """Check the hyperbolic recursion for the leaf generating function.

    g_k(t) = sum_n l_poly(k, n) t^(2n)/(2n)! satisfies g_0 = cosh t and

      g_{k+1} = g_k (z_{2k} z_{2k+2} sinh^2 t + z_{2k} y2)
              + g_k' z_{2k+1} (y1 + y2) sinh t cosh t
              + g_k'' y1 y2 cosh^2 t

    with z_j = x0+...+xj, y_i = x_{2k+i}.  Returns exact equality of both
    sides through the (even) truncation order.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if order < 2 or order % 2:
        raise ValueError(f"truncation order must be even and >= 2, got {order}")
    num_vars = 2 * k + 3
    inner = order + 2  # two t-derivatives cost two orders of accuracy
    zero = MultiPoly.zero(num_vars)

    coeffs = [zero] * (inner + 1)
    for n in range(inner // 2 + 1):
        coeffs[2 * n] = l_poly(k, n).extended(num_vars) / factorial(2 * n)
    g_full = TruncatedSeries(coeffs, inner)
    g = g_full.truncated(order)
    g1 = g_full.derivative().truncated(order)
    g2 = g_full.derivative().derivative().truncated(order)

    sinh = elementary_series("sinh", order, num_vars)
    cosh = elementary_series("cosh", order, num_vars)
    z2k = MultiPoly.var_sum(num_vars, 2 * k)
    z2k1 = MultiPoly.var_sum(num_vars, 2 * k + 1)
    z2k2 = MultiPoly.var_sum(num_vars, 2 * k + 2)
    y1 = MultiPoly.variable(num_vars, 2 * k + 1)
    y2 = MultiPoly.variable(num_vars, 2 * k + 2)

    rhs = (
        (g * (sinh * sinh)).scale(z2k * z2k2)
        + g.scale(z2k * y2)
        + (g1 * (sinh * cosh)).scale(z2k1 * (y1 + y2))
        + (g2 * (cosh * cosh)).scale(y1 * y2)
    )

    lhs_coeffs = [zero] * (order + 1)
    for n in range(order // 2 + 1):
        lhs_coeffs[2 * n] = l_poly(k + 1, n) / factorial(2 * n)
    lhs = TruncatedSeries(lhs_coeffs, order)
    return lhs == rhs
