"""Conversion coefficients between the dual Kontsevich cycle basis and
monomials in the adjusted Miller-Morita-Mumford classes.

Both bases are indexed by partitions of equal weight; the change-of-basis
matrices b (kappa-monomials expanded in dual cycles) and a (its inverse)
are exact rationals.  One-part coefficients are explicit:

    a_n = (-2)^(n+1) (2n+1)!!,   b_n = 1/a_n.

Multi-part b-coefficients reduce to the one-superscript case b_lambda^n by
a sum-of-products rule over surjections, and b_lambda^n itself is computed
by peeling one part k at a time: peeling costs a weighted sum of average
shuffle sign sums q_eval over compositions of the remaining weight into
2k+1 slots.  Which part is peeled must not matter; the test suite checks
that over all peel orders instead of assuming it.

Zero parts (the degenerate weight-0 class) extend both matrices by
Stirling-number factors; see degenerate_b and degenerate_a.

A CoeffTable memoizes everything behind a re-entrant lock; the module
keeps one shared table so casual callers can use the free functions.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .exact import (
    Coeff,
    double_factorial,
    format_rational,
    normalize_partition,
    partitions_of,
    compositions,
    stirling_first_signed,
    stirling_second,
)
from .treepoly import q_eval

SCHEMA_VERSION = 1


def a_single(n: int) -> int:
    """a_n = (-2)^(n+1) (2n+1)!!, the one-part expansion coefficient."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (-2) ** (n + 1) * double_factorial(2 * n + 1)


def b_single(n: int) -> Fraction:
    """b_n = 1/a_n."""
    return Fraction(1, a_single(n))


def sym_count(values: Iterable[int]) -> int:
    """Number of permutations fixing the multiset: product of multiplicity factorials."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    out = 1
    for c in counts.values():
        out *= factorial(c)
    return out


_h_cache: dict[int, Fraction] = {0: Fraction(1)}


def h_sequence(n: int) -> Fraction:
    """h(0) = 1 and h(n+1) = sum over a+b+c = n of h(a)h(b)h(c)(2a+1)(2c+1)/((2a+3)(n+1)).

    Normalizes the all-ones coefficients: b over the partition 1^n equals
    4^-n n! h(n).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n not in _h_cache:
        prev = n - 1
        total = Fraction(0)
        for a in range(prev + 1):
            for b in range(prev + 1 - a):
                c = prev - a - b
                total += (
                    h_sequence(a)
                    * h_sequence(b)
                    * h_sequence(c)
                    * Fraction((2 * a + 1) * (2 * c + 1), (2 * a + 3) * (prev + 1))
                )
        _h_cache[n] = total
    return _h_cache[n]


def closed_b_pair(r: int, k: int) -> Fraction:
    """Two-part closed form: b over (r,k) with superscript r+k is b_r b_k (2r+2k+3) + b_{r+k}."""
    if r < 1 or k < 1:
        raise ValueError(f"need r, k >= 1, got ({r}, {k})")
    return b_single(r) * b_single(k) * (2 * r + 2 * k + 3) + b_single(r + k)


def closed_a_pair(r: int, k: int) -> Coeff:
    """Two-part closed form on the a side: -(a_r a_k + (2r+2k+3) a_{r+k}) / Sym(r, k)."""
    if r < 1 or k < 1:
        raise ValueError(f"need r, k >= 1, got ({r}, {k})")
    value = Fraction(
        -(a_single(r) * a_single(k) + (2 * r + 2 * k + 3) * a_single(r + k)),
        sym_count((r, k)),
    )
    return int(value) if value.denominator == 1 else value


class CoeffTable:
    """Memoized b/a coefficient tables over partitions, one lock per table.

    Reads after a value is built are cheap dictionary hits; building takes
    the re-entrant lock, so a table can be shared between threads.
    """

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._bn: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
        self._bmu: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
        self._matrices: dict[int, tuple[list[list[Fraction]], list[list[Fraction]]]] = {}

    # -- the b side ----------------------------------------------------------

    def b_extend(self, lam: Sequence[int], k: int) -> Fraction:
        """Peel step: the b-coefficient of lam + {k} with one-part superscript.

        Sums b_lam^mu * (2m0+1)/(2m0+3) * q_eval(2m0+3, 2m1+1, ..., 2m_{2k}+1)
        over all compositions (m0..m_{2k}) of sum(lam) into 2k+1 slots, where
        mu is the partition of the nonzero slots, then divides by
        (-2)^(k+1) (2k-1)!!.
        """
        if k < 1:
            raise ValueError(f"need a peeled part k >= 1, got {k}")
        lam = normalize_partition(lam)
        with self._lock:
            m = sum(lam)
            total = Fraction(0)
            for comp in compositions(m, 2 * k + 1):
                mu = normalize_partition(x for x in comp if x)
                weight = self.b_lambda_mu(lam, mu)
                if not weight:
                    continue
                tuple_q = (2 * comp[0] + 3,) + tuple(2 * x + 1 for x in comp[1:])
                total += weight * Fraction(2 * comp[0] + 1, 2 * comp[0] + 3) * q_eval(tuple_q)
            return total / ((-2) ** (k + 1) * double_factorial(2 * k - 1))

    def b_lambda_n(self, lam: Sequence[int], peel_index: int | None = None) -> Fraction:
        """b of the partition lam with the one-part superscript sum(lam).

        By default the smallest part is peeled (and the result memoized);
        passing peel_index forces a specific part and skips the memo, which
        is how order independence gets tested rather than assumed.
        """
        lam = normalize_partition(lam)
        if not lam:
            raise ValueError("b_lambda_n needs a nonempty partition")
        if peel_index is not None:
            if not 0 <= peel_index < len(lam):
                raise ValueError(f"peel index {peel_index} out of range for {lam}")
            if len(lam) == 1:
                return b_single(lam[0])
            rest = lam[:peel_index] + lam[peel_index + 1 :]
            return self.b_extend(rest, lam[peel_index])
        with self._lock:
            if lam not in self._bn:
                if len(lam) == 1:
                    self._bn[lam] = b_single(lam[0])
                else:
                    # canonical order is weakly decreasing, so [-1] is the smallest part
                    self._bn[lam] = self.b_extend(lam[:-1], lam[-1])
            return self._bn[lam]

    def b_lambda_mu(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """Sum-of-products rule: sum over surjections of part slots of lam onto
        part slots of mu whose blocks sum to the targeted part."""
        lam = normalize_partition(lam)
        mu = normalize_partition(mu)
        if sum(lam) != sum(mu):
            raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
        key = (lam, mu)
        with self._lock:
            if key not in self._bmu:
                self._bmu[key] = self._surjection_sum(lam, mu)
            return self._bmu[key]

    def _surjection_sum(self, available: tuple[int, ...], mu_rest: tuple[int, ...]) -> Fraction:
        if not mu_rest:
            return Fraction(1) if not available else Fraction(0)
        target = mu_rest[0]
        total = Fraction(0)
        n = len(available)
        # blocks are index subsets: equal parts in distinct slots count separately
        for bits in range(1, 1 << n):
            block = tuple(available[i] for i in range(n) if bits >> i & 1)
            if sum(block) != target:
                continue
            factor = self.b_lambda_n(block)
            if factor:
                rest = tuple(available[i] for i in range(n) if not bits >> i & 1)
                total += factor * self._surjection_sum(rest, mu_rest[1:])
        return total

    # -- matrices and everything built on them --------------------------------

    def _built_matrices(self, n: int) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
        if n < 0:
            raise ValueError(f"need weight >= 0, got {n}")
        with self._lock:
            if n not in self._matrices:
                parts = partitions_of(n)
                b_rows = [
                    [self.b_lambda_mu(lam, mu) for mu in parts] for lam in parts
                ]
                self._matrices[n] = (b_rows, invert_rational_matrix(b_rows))
            return self._matrices[n]

    def b_matrix(self, n: int) -> list[list[Fraction]]:
        """Matrix of b over partitions of n, rows and columns in partitions_of order."""
        rows, _ = self._built_matrices(n)
        return [list(row) for row in rows]

    def a_matrix(self, n: int) -> list[list[Fraction]]:
        """Exact inverse of b_matrix(n)."""
        _, rows = self._built_matrices(n)
        return [list(row) for row in rows]

    def a_lambda_mu(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        lam = normalize_partition(lam)
        mu = normalize_partition(mu)
        if sum(lam) != sum(mu):
            raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
        parts = partitions_of(sum(lam))
        _, a_rows = self._built_matrices(sum(lam))
        return a_rows[parts.index(lam)][parts.index(mu)]

    def witten_expansion(self, lam: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        """Row of the a-matrix for lam: the dual-cycle class expanded in
        kappa-monomials, nonzero entries only."""
        lam = normalize_partition(lam)
        if not lam:
            return {(): Fraction(1)}
        parts = partitions_of(sum(lam))
        _, a_rows = self._built_matrices(sum(lam))
        row = a_rows[parts.index(lam)]
        return {mu: value for mu, value in zip(parts, row) if value}

    def cup_coeff(
        self, lam: Sequence[int], mu: Sequence[int]
    ) -> dict[tuple[int, ...], Fraction]:
        """Structure constants of the dual-cycle basis under cup product.

        m_{lam,mu}^nu = sum over alpha, beta of a_lam^alpha a_mu^beta times
        b of the concatenation alpha+beta with superscript nu.
        """
        lam = normalize_partition(lam)
        mu = normalize_partition(mu)
        total_weight = sum(lam) + sum(mu)
        out: dict[tuple[int, ...], Fraction] = {}
        for alpha, a_left in self.witten_expansion(lam).items():
            for beta, a_right in self.witten_expansion(mu).items():
                joined = normalize_partition(alpha + beta)
                scale = a_left * a_right
                for nu in partitions_of(total_weight):
                    factor = self.b_lambda_mu(joined, nu)
                    if factor:
                        out[nu] = out.get(nu, Fraction(0)) + scale * factor
        return {nu: value for nu, value in out.items() if value}


def invert_rational_matrix(rows: Sequence[Sequence[Coeff]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    work = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col]), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [x / pivot for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                scale = work[r][col]
                work[r] = [x - scale * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


# -- degenerate (zero-padded) extension ---------------------------------------

def degenerate_b(
    lam: Sequence[int], p: int, mu: Sequence[int], q: int, table: "CoeffTable | None" = None
) -> Fraction:
    """b with p zero parts appended below and q above.

    Equals b_lam^mu times sum over m of C(p, m) q! S2(p-m, q) (2n+r)^m / (-2)^p,
    where n is the common weight and r the part count of the superscript mu
    (each zero attached to a part of size mu_j contributes 2*mu_j + 1, and
    summing over the attachment point gives 2n + r per zero).  Zero when
    q > p: every appended zero above needs its own zero below.
    """
    if p < 0 or q < 0:
        raise ValueError(f"need p, q >= 0, got ({p}, {q})")
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    if q > p:
        return Fraction(0)
    table = table if table is not None else _shared
    base = table.b_lambda_mu(lam, mu)
    if not base:
        return Fraction(0)
    n, r = sum(mu), len(mu)
    total = sum(
        comb(p, m) * factorial(q) * stirling_second(p - m, q) * (2 * n + r) ** m
        for m in range(p - q + 1)
    )
    return Fraction(total, (-2) ** p) * base


def degenerate_a(
    lam: Sequence[int], m: int, mu: Sequence[int], i: int, table: "CoeffTable | None" = None
) -> Fraction:
    """a with m zero parts appended below and i above.

    Equals (1/m!) sum_{j=i}^{m} S1(m, j) C(j, i) (-2n-r)^(j-i) (-2)^i a_lam^mu,
    with n the weight and r the part count of the subscript lam.  Zero when
    i > m.  Padded a- and b-matrices over (partition, zero count) pairs are
    exact mutual inverses.
    """
    if m < 0 or i < 0:
        raise ValueError(f"need m, i >= 0, got ({m}, {i})")
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    if i > m:
        return Fraction(0)
    table = table if table is not None else _shared
    base = table.a_lambda_mu(lam, mu)
    if not base:
        return Fraction(0)
    n, r = sum(lam), len(lam)
    total = sum(
        stirling_first_signed(m, j) * comb(j, i) * (-2 * n - r) ** (j - i)
        for j in range(i, m + 1)
    )
    return Fraction(total, factorial(m)) * (-2) ** i * base


# -- shared table and document export ------------------------------------------

_shared = CoeffTable()


def shared_table() -> CoeffTable:
    """The process-wide memoized table used by the free functions and the CLI."""
    return _shared


def b_extend(lam, k, table: CoeffTable | None = None) -> Fraction:
    return (table or _shared).b_extend(lam, k)


def b_lambda_n(lam, peel_index: int | None = None, table: CoeffTable | None = None) -> Fraction:
    return (table or _shared).b_lambda_n(lam, peel_index)


def b_lambda_mu(lam, mu, table: CoeffTable | None = None) -> Fraction:
    return (table or _shared).b_lambda_mu(lam, mu)


def a_lambda_mu(lam, mu, table: CoeffTable | None = None) -> Fraction:
    return (table or _shared).a_lambda_mu(lam, mu)


def b_matrix(n: int, table: CoeffTable | None = None) -> list[list[Fraction]]:
    return (table or _shared).b_matrix(n)


def a_matrix(n: int, table: CoeffTable | None = None) -> list[list[Fraction]]:
    return (table or _shared).a_matrix(n)


def witten_expansion(lam, table: CoeffTable | None = None) -> dict:
    return (table or _shared).witten_expansion(lam)


def cup_coeff(lam, mu, table: CoeffTable | None = None) -> dict:
    return (table or _shared).cup_coeff(lam, mu)


def partition_key(parts: Sequence[int]) -> str:
    """Comma-joined descending parts, the map key used in exported documents."""
    return ",".join(str(p) for p in normalize_partition(parts))


def table_document(n: int, table: CoeffTable | None = None) -> dict:
    """Versioned export of the weight-n b/a matrices in canonical order."""
    table = table if table is not None else _shared
    parts = partitions_of(n)
    return {
        "version": SCHEMA_VERSION,
        "weight": n,
        "order": [list(p) for p in parts],
        "b": [[format_rational(x) for x in row] for row in table.b_matrix(n)],
        "a": [[format_rational(x) for x in row] for row in table.a_matrix(n)],
    }


def cup_document(lam, mu, table: CoeffTable | None = None) -> dict:
    """Exported cup-product coefficients, keys in canonical partition order."""
    table = table if table is not None else _shared
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    terms = table.cup_coeff(lam, mu)
    ordered = {}
    for nu in partitions_of(sum(lam) + sum(mu)):
        if nu in terms:
            ordered[partition_key(nu)] = format_rational(terms[nu])
    return {
        "version": SCHEMA_VERSION,
        "lambda": list(lam),
        "mu": list(mu),
        "terms": ordered,
    }
