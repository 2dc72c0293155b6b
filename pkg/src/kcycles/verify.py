"""Self-verification: every identity the package relies on, run as named
checks that compare an independent route against the production route.

Quick level covers the explicitly tabulated anchor values (seconds);
full level adds the exhaustive oracle equivalences and closed-form sweeps
(minutes).  A check never raises on a mathematical mismatch; it reports
both sides so the caller can render a report and choose an exit code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import cache as cache_mod
from . import oracles
from .exact import (
    MultiPoly,
    double_factorial,
    partitions_of,
    stirling_first_signed,
    stirling_second,
)
from .coeffs import (
    SCHEMA_VERSION,
    a_single,
    b_single,
    closed_a_pair,
    closed_b_pair,
    degenerate_a,
    degenerate_b,
    h_sequence,
    shared_table,
    sym_count,
    table_document,
)
from .series import elementary_series
from .treepoly import (
    double_sum_identity,
    l_poly,
    q_closed_ones,
    q_eval,
    reduced_tree_poly,
    t_closed_main,
    t_closed_ones,
    tree_poly,
    verify_g_recursion,
    xe_tables,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    lhs: str
    rhs: str
    seconds: float


@dataclass
class VerifyReport:
    level: str
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self, timings: bool = False) -> list[str]:
        # timings are off by default so identical invocations print identical bytes
        out = []
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.name}"
            if timings:
                line += f" ({r.seconds:.2f}s)"
            if not r.ok:
                line += f": lhs={r.lhs} rhs={r.rhs}"
            out.append(line)
        failed = sum(1 for r in self.results if not r.ok)
        summary = (
            f"{'OK' if failed == 0 else 'FAILED'}: {len(self.results) - failed}/"
            f"{len(self.results)} checks passed"
        )
        if timings:
            summary += f" in {sum(r.seconds for r in self.results):.1f}s"
        out.append(summary)
        return out


Pair = tuple[str, object, object]


def _compare(pairs: Iterable[Pair]) -> tuple[bool, str, str]:
    count = 0
    for label, lhs, rhs in pairs:
        count += 1
        if lhs != rhs:
            return False, f"{label}: {lhs!r}", f"{label}: {rhs!r}"
    return True, f"{count} comparisons", f"{count} comparisons"


def _odd_tuples(length: int, max_total: int) -> Iterator[tuple[int, ...]]:
    def rec(slots: int, budget: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            yield ()
            return
        value = 1
        while value + (slots - 1) <= budget:
            for rest in rec(slots - 1, budget - value):
                yield (value,) + rest
            value += 2

    yield from rec(length, max_total)


# ---------------------------------------------------------------------------
# quick checks: tabulated anchors
# ---------------------------------------------------------------------------

def check_reduced_polys() -> tuple[bool, str, str]:
    x = [MultiPoly.variable(3, i) for i in range(3)]
    expected1 = (x[0] + x[1]) * x[2]
    y = [MultiPoly.variable(5, i) for i in range(5)]
    s01 = y[0] + y[1]
    expected2 = s01 * s01 * y[2] * y[4] + s01 * y[2] * y[2] * y[4] \
        + 2 * s01 * s01 * y[3] * y[4] + 5 * s01 * y[2] * y[3] * y[4]
    t2_at_zero = reduced_tree_poly(2).substitute(0, MultiPoly.zero(5))
    expected2_at_zero = expected2.substitute(0, MultiPoly.zero(5))
    t3 = reduced_tree_poly(3)
    pairs = [
        ("T~0", reduced_tree_poly(0), MultiPoly.constant(1, 1)),
        ("T~1", reduced_tree_poly(1), expected1),
        ("T~2", reduced_tree_poly(2), expected2),
        ("T~2|x0=0", t2_at_zero, expected2_at_zero),
        ("T~3[x1..x6]", t3.coefficient((0, 1, 1, 1, 1, 1, 1)), 61),
        ("T~3[x1x2x3^2x4x6]", t3.coefficient((0, 1, 1, 2, 1, 0, 1)), 5),
    ]
    pairs += [
        (f"total k={k}", reduced_tree_poly(k).coefficient_sum(), factorial(2 * k))
        for k in range(4)
    ]
    return _compare(pairs)


def check_coefficient_anchors() -> tuple[bool, str, str]:
    table = shared_table()
    pairs = [
        ("b_1^1", table.b_lambda_n((1,)), Fraction(1, 12)),
        ("b_11^2", table.b_lambda_n((1, 1)), Fraction(29, 720)),
        ("b_111^3", table.b_lambda_n((1, 1, 1)), Fraction(263, 6720)),
        ("b_1111^4", table.b_lambda_n((1, 1, 1, 1)), Fraction(23479, 403200)),
        ("b_21^3", table.b_lambda_n((2, 1)), Fraction(-19, 3360)),
        ("b_111^21", table.b_lambda_mu((1, 1, 1), (2, 1)), Fraction(29, 2880)),
        ("b_21^21", table.b_lambda_mu((2, 1), (2, 1)), Fraction(-1, 1440)),
        ("peel example", table.b_extend((1,), 1), Fraction(29, 720)),
        ("h(1)", h_sequence(1), Fraction(1, 3)),
        ("h(2)", h_sequence(2), Fraction(29, 90)),
        ("h(3)", h_sequence(3), Fraction(263, 630)),
        ("h(4)", h_sequence(4), Fraction(23479, 37800)),
        ("a_1", a_single(1), 12),
        ("a_3", a_single(3), 1680),
        ("b_2", b_single(2), Fraction(-1, 120)),
    ]
    pairs += [
        (f"b_1^{n} vs h", table.b_lambda_n((1,) * n),
         Fraction(factorial(n), 4 ** n) * h_sequence(n))
        for n in range(1, 6)
    ]
    return _compare(pairs)


def check_witten_and_cup_anchors() -> tuple[bool, str, str]:
    table = shared_table()
    pairs = [
        ("W*_111", table.witten_expansion((1, 1, 1)),
         {(1, 1, 1): 288, (2, 1): 4176, (3,): 20736}),
        ("W*_1", table.witten_expansion((1,)), {(1,): 12}),
        ("W*_empty", table.witten_expansion(()), {(): 1}),
        ("cup 1,1", table.cup_coeff((1,), (1,)), {(1, 1): 2, (2,): Fraction(29, 5)}),
        ("cup 1,empty", table.cup_coeff((1,), ()), {(1,): 1}),
    ]
    return _compare(pairs)


def check_pair_closed_anchors() -> tuple[bool, str, str]:
    table = shared_table()
    pairs = [
        ("b_pair(1,1)", closed_b_pair(1, 1), Fraction(29, 720)),
        ("b_pair(2,1)", closed_b_pair(2, 1), Fraction(-19, 3360)),
        ("b_pair(1,1) vs recursion", closed_b_pair(1, 1), table.b_lambda_n((1, 1))),
    ]
    for n in range(1, 5):
        expected = Fraction(
            -12 * a_single(n) - (2 * n + 5) * a_single(n + 1), sym_count((n, 1))
        )
        pairs.append((f"a_pair({n},1)", Fraction(closed_a_pair(n, 1)), expected))
    return _compare(pairs)


def check_xe_anchors() -> tuple[bool, str, str]:
    pairs = []
    for variant, n, m, expected in [
        ("X0", 2, 2, 4),
        ("X0", 2, 1, 0),
        ("X0", 4, 3, 0),
        ("X1", 2, 2, (2 + 1) * comb(2, 1)),
        ("X2", 1, 1, -2),
    ]:
        x_closed, _ = xe_tables(variant, n, m)
        pairs.append((f"{variant}({n},{m}) closed", x_closed, expected))
        pairs.append(
            (f"{variant}({n},{m}) brute",
             oracles.shuffle_sign_sum_bruteforce(variant, n, m), expected)
        )
    return _compare(pairs)


def check_counting_anchors() -> tuple[bool, str, str]:
    pairs = []
    for n, s, expected in [(3, 1, 1), (5, 2, 5), (4, 3, -16)]:
        pairs.append((f"brute({n},{s})", oracles.counting_identity_bruteforce(n, s), expected))
        pairs.append((f"closed({n},{s})", oracles.counting_identity_closed(n, s), expected))
    return _compare(pairs)


def check_q_t_closed_anchors() -> tuple[bool, str, str]:
    pairs = [
        ("Q_2(3,1,1,1,1)", q_eval((3, 1, 1, 1, 1)), Fraction(3, 5)),
        ("q_closed(2,3)", q_closed_ones(2, 3), Fraction(3, 5)),
        ("Q_1(5,3,7)", q_eval((5, 3, 7)), 7),
        ("Q_0(9)", q_eval((9,)), 9),
        ("T_1(3,1,1)", t_closed_ones(1, 3, 1), 12),
        ("T_2(1,...,1)", t_closed_ones(2, 1, 1), 24),
        ("T_1 eval", tree_poly(1).eval((3, 1, 1)), 12),
    ]
    return _compare(pairs)


def check_l_poly_anchors() -> tuple[bool, str, str]:
    num_vars = 3
    x0 = MultiPoly.variable(num_vars, 0)
    x1 = MultiPoly.variable(num_vars, 1)
    x2 = MultiPoly.variable(num_vars, 2)
    s01 = x0 + x1
    pairs = []
    for n in range(4):
        expected = (
            s01 * (2 * x2 + s01) * Fraction(3 ** (2 * n), 4)
            + s01 * (2 * x2 - s01) * Fraction(1, 4)
        )
        pairs.append((f"L_1^{n}", l_poly(1, n), expected))
    pairs.append(("L_0^3", l_poly(0, 3), MultiPoly.constant(1, 1)))
    pairs.append(("L_2^1(1..1)", l_poly(2, 1).coefficient_sum(), factorial(4) * 25))
    return _compare(pairs)


def check_series_anchors() -> tuple[bool, str, str]:
    cosh = elementary_series("cosh", 4)
    sinh2 = elementary_series("sinh2", 2)
    cosh2 = elementary_series("cosh2", 2)
    combo = sinh2 + cosh2
    pairs = [
        ("cosh t^2", cosh.coefficient(2), MultiPoly.constant(1, Fraction(1, 2))),
        ("cosh t^4", cosh.coefficient(4), MultiPoly.constant(1, Fraction(1, 24))),
        ("sinh2+cosh2 t^0", combo.coefficient(0), MultiPoly.constant(1, 1)),
        ("sinh2+cosh2 t^2", combo.coefficient(2), MultiPoly.constant(1, 2)),
        ("d/dt cosh", elementary_series("cosh", 4).derivative(),
         elementary_series("sinh", 4).truncated(3)),
        ("g recursion k=0", verify_g_recursion(0, 4), True),
    ]
    return _compare(pairs)


def check_stirling() -> tuple[bool, str, str]:
    pairs = [
        ("s1(3,1)", stirling_first_signed(3, 1), 2),
        ("s1(4,2)", stirling_first_signed(4, 2), 11),
        ("S2(3,2)", stirling_second(3, 2), 3),
        ("S2(4,2)", stirling_second(4, 2), 7),
        ("5!!", double_factorial(5), 15),
        ("7!!", double_factorial(7), 105),
        ("(-1)!!", double_factorial(-1), 1),
    ]
    for n in range(11):
        for m in range(11):
            lhs = sum(
                stirling_first_signed(n, k) * stirling_second(k, m) for k in range(n + 1)
            )
            pairs.append((f"duality({n},{m})", lhs, int(n == m)))
    return _compare(pairs)


def check_degenerate_anchors() -> tuple[bool, str, str]:
    pairs = []
    for m in range(5):
        for n in range(5):
            expected = Fraction(factorial(n) * stirling_second(m, n), (-2) ** m)
            pairs.append((f"b_0^{m},{n}", degenerate_b((), m, (), n), expected))
    for k in range(1, 4):
        pairs.append(
            (f"one zero, k={k}", degenerate_b((k,), 1, (k,), 0),
             Fraction(-(2 * k + 1), 2) * b_single(k))
        )
    for m in range(5):
        for i in range(m + 1):
            expected = Fraction(stirling_first_signed(m, i) * (-2) ** i, factorial(m))
            pairs.append((f"a_0^{m},{i}", degenerate_a((), m, (), i), expected))
    pairs.append(("p=q=0", degenerate_b((2, 1), 0, (3,), 0),
                  shared_table().b_lambda_mu((2, 1), (3,))))
    return _compare(pairs)


def check_double_sum_anchors() -> tuple[bool, str, str]:
    pairs = []
    for k, r in [(1, 0), (1, 1), (2, 0), (2, 1)]:
        lhs, rhs = double_sum_identity(k, r)
        pairs.append((f"double sum k={k} r={r}", lhs, rhs))
    lhs10, _ = double_sum_identity(1, 0)
    lhs11, _ = double_sum_identity(1, 1)
    pairs.append(("value k=1 r=0", lhs10, Fraction(2)))
    pairs.append(("value k=1 r=1", lhs11, Fraction(4)))
    return _compare(pairs)


_cache_dir_holder: list = []  # set by run_verify so the cache check sees the option


def check_cache_consistency() -> tuple[bool, str, str]:
    cache_dir = _cache_dir_holder[0] if _cache_dir_holder else cache_mod.default_cache_dir()
    cache_dir = Path(cache_dir)
    if not cache_dir.is_dir():
        return True, "no cache directory", "no cache directory"
    checked = 0
    for path in sorted(cache_dir.glob(f"table-w*.v{SCHEMA_VERSION}.json")):
        stored = path.read_text()
        name = path.name.split(".")[0]
        try:
            weight = int(name.removeprefix("table-w"))
        except ValueError:
            continue
        fresh = cache_mod.canonical_json(table_document(weight))
        checked += 1
        if stored != fresh:
            return False, f"{path.name}: stored bytes differ", "freshly computed document"
    return True, f"{checked} cached tables", f"{checked} cached tables"


# ---------------------------------------------------------------------------
# full checks: oracle equivalences and sweeps
# ---------------------------------------------------------------------------

def check_oracle_reduced(limit: int = 5) -> tuple[bool, str, str]:
    pairs = []
    for k in range(limit + 1):
        pairs.append(
            (f"k={k}", reduced_tree_poly(k), oracles.reduced_tree_poly_bruteforce(k))
        )
    return _compare(pairs)


def check_oracle_shuffles() -> tuple[bool, str, str]:
    pairs = []
    for length in (1, 3, 5):
        poly = tree_poly((length - 1) // 2)
        for values in _odd_tuples(length, 9):
            pairs.append(
                (f"T{values}", oracles.tree_poly_bruteforce(values), poly.eval(values))
            )
    return _compare(pairs)


def check_shuffle_counts() -> tuple[bool, str, str]:
    pairs = []
    for length in (1, 3, 5, 7, 9, 11):
        for values in _odd_tuples(length, 11):
            formula = 1
            partial = 0
            for v in values[:-1]:
                partial += v
                formula *= partial
            count = sum(1 for _ in oracles.enumerate_cyclic_shuffles(values))
            pairs.append((f"count{values}", count, formula))
    return _compare(pairs)


def check_xe_sweep() -> tuple[bool, str, str]:
    pairs = []
    for variant in oracles.SIGN_SUM_VARIANTS:
        for n in range(11):
            for m in range(11 - n):
                brute = oracles.shuffle_sign_sum_bruteforce(variant, n, m)
                x_closed, e_closed = xe_tables(variant, n, m)
                pairs.append((f"{variant}({n},{m})", brute, x_closed))
                pairs.append(
                    (f"{variant}({n},{m}) E", e_closed * comb(n + m, n), x_closed)
                )
    return _compare(pairs)


def check_counting_sweep() -> tuple[bool, str, str]:
    pairs = [
        (f"({n},{s})", oracles.counting_identity_bruteforce(n, s),
         oracles.counting_identity_closed(n, s))
        for n in range(1, 7)
        for s in range(5)
    ]
    return _compare(pairs)


def check_even_cycles() -> tuple[bool, str, str]:
    pairs = []
    # histograms by full permutation enumeration up to degree 8, and the
    # x0-degree profile of the reduced polynomial one level further
    for k in range(1, 6):
        closed = oracles.even_cycle_closed_coeffs(2 * k)
        if k <= 4:
            pairs.append((f"2k={2 * k}", oracles.even_cycle_histogram(2 * k), closed))
        reduced = reduced_tree_poly(k)
        by_x0: dict[int, int] = {}
        for exps, coeff in reduced.items():
            by_x0[exps[0]] = by_x0.get(exps[0], 0) + coeff
        poly_coeffs = [by_x0.get(i, 0) for i in range(k + 1)]
        pairs.append((f"T~{k}(x,1..1)", poly_coeffs, closed))
    return _compare(pairs)


def check_closed_ones_sweep() -> tuple[bool, str, str]:
    pairs = []
    for k in range(1, 6):
        poly = tree_poly(k)
        for n in range(1, 10, 2):
            pairs.append(
                (f"Q k={k} n={n}", q_eval((n,) + (1,) * (2 * k)), q_closed_ones(k, n))
            )
            for m in range(1, 10, 2):
                values = (n,) + (1,) * (2 * k - 1) + (m,)
                pairs.append(
                    (f"T k={k} n={n} m={m}", poly.eval(values), t_closed_ones(k, n, m))
                )
    return _compare(pairs)


def check_closed_main_sweep() -> tuple[bool, str, str]:
    pairs = []
    for k in range(1, 5):
        poly = tree_poly(k)
        for r in range(5):
            for p in range(2 * k):
                q = 2 * k - 1 - p
                values = (3,) + (1,) * p + (2 * r + 1,) + (1,) * q
                pairs.append(
                    (f"k={k} r={r} p={p}", poly.eval(values), t_closed_main(k, p, q, r))
                )
            lhs, rhs = double_sum_identity(k, r)
            pairs.append((f"double k={k} r={r}", lhs, rhs))
    return _compare(pairs)


def check_pair_closed_sweep() -> tuple[bool, str, str]:
    table = shared_table()
    pairs = []
    for total in range(2, 9):
        for r in range(1, total):
            k = total - r
            if r < k:
                continue
            pairs.append(
                (f"b({r},{k})", table.b_lambda_n((r, k)), closed_b_pair(r, k))
            )
            pairs.append(
                (f"a({r},{k})", table.a_lambda_mu((r, k), (total,)),
                 Fraction(closed_a_pair(r, k)))
            )
    return _compare(pairs)


def check_structural(limit: int = 6) -> tuple[bool, str, str]:
    pairs = []
    for k in range(limit + 1):
        reduced = reduced_tree_poly(k)
        num_vars = 2 * k + 1
        pairs.append((f"homog k={k}", reduced.is_homogeneous(2 * k), True))
        pairs.append(
            (f"nonneg int k={k}",
             all(isinstance(c, int) and c > 0 for _, c in reduced.items()), True)
        )
        pairs.append((f"sum k={k}", reduced.coefficient_sum(), factorial(2 * k)))
        pairs.append((f"linear last k={k}", tree_poly(k).degree_in(2 * k), 1))
        if k >= 1:
            at_zero = reduced.substitute(0, MultiPoly.zero(num_vars))
            x0_plus_x1 = MultiPoly.variable(num_vars, 0) + MultiPoly.variable(num_vars, 1)
            pairs.append(
                (f"x0+x1 k={k}", at_zero.substitute(1, x0_plus_x1), reduced)
            )
    return _compare(pairs)


def check_l_poly_sweep() -> tuple[bool, str, str]:
    pairs = [
        (f"L_{k}^{n}(1..1)", l_poly(k, n).coefficient_sum(),
         factorial(2 * k) * (2 * k + 1) ** (2 * n))
        for k in range(5)
        for n in range(4)
    ]
    return _compare(pairs)


def check_g_recursion_sweep() -> tuple[bool, str, str]:
    pairs = [(f"k={k}", verify_g_recursion(k, 6), True) for k in range(3)]
    return _compare(pairs)


def check_matrix_duality(limit: int = 6) -> tuple[bool, str, str]:
    table = shared_table()
    pairs = []
    for n in range(1, limit + 1):
        parts = partitions_of(n)
        b_rows = table.b_matrix(n)
        a_rows = table.a_matrix(n)
        size = len(parts)
        product = [
            [sum(b_rows[i][k] * a_rows[k][j] for k in range(size)) for j in range(size)]
            for i in range(size)
        ]
        identity = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        pairs.append((f"B.A weight {n}", product, identity))
        for idx, lam in enumerate(parts):
            expected = Fraction(1)
            for part in lam:
                expected *= a_single(part)
            expected /= sym_count(lam)
            pairs.append((f"diag {lam}", a_rows[idx][idx], expected))
    return _compare(pairs)


def check_order_independence(limit: int = 7) -> tuple[bool, str, str]:
    table = shared_table()
    pairs = []
    for weight in range(2, limit + 1):
        for lam in partitions_of(weight):
            if len(lam) < 2:
                continue
            default = table.b_lambda_n(lam)
            seen = set()
            for index, part in enumerate(lam):
                if part in seen:
                    continue  # identical peel, identical arguments
                seen.add(part)
                pairs.append(
                    (f"{lam} peel {part}", table.b_lambda_n(lam, peel_index=index), default)
                )
    return _compare(pairs)


def check_degenerate_inverses(max_weight: int = 3, max_pad: int = 3) -> tuple[bool, str, str]:
    table = shared_table()
    pairs = []
    for weight in range(max_weight + 1):
        index = [
            (lam, pad) for lam in partitions_of(weight) for pad in range(max_pad + 1)
        ]
        size = len(index)
        b_rows = [
            [degenerate_b(lam, p, mu, q, table) for (mu, q) in index]
            for (lam, p) in index
        ]
        a_rows = [
            [degenerate_a(lam, p, mu, q, table) for (mu, q) in index]
            for (lam, p) in index
        ]
        for first, second, tag in ((b_rows, a_rows, "B.A"), (a_rows, b_rows, "A.B")):
            product = [
                [
                    sum(first[i][k] * second[k][j] for k in range(size))
                    for j in range(size)
                ]
                for i in range(size)
            ]
            identity = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
            pairs.append((f"{tag} weight {weight}", product, identity))
    return _compare(pairs)


def check_cup_symmetry(max_total: int = 5) -> tuple[bool, str, str]:
    table = shared_table()
    pairs = []
    for wl in range(max_total + 1):
        for wm in range(max_total + 1 - wl):
            for lam in partitions_of(wl):
                for mu in partitions_of(wm):
                    pairs.append(
                        (f"{lam}x{mu}", table.cup_coeff(lam, mu), table.cup_coeff(mu, lam))
                    )
    return _compare(pairs)


CHECKS: list[tuple[str, str, Callable[[], tuple[bool, str, str]]]] = [
    ("anchors/reduced-polys", "quick", check_reduced_polys),
    ("anchors/coefficients", "quick", check_coefficient_anchors),
    ("anchors/witten-cup", "quick", check_witten_and_cup_anchors),
    ("anchors/pair-closed", "quick", check_pair_closed_anchors),
    ("anchors/xe-tables", "quick", check_xe_anchors),
    ("anchors/counting", "quick", check_counting_anchors),
    ("anchors/q-t-closed", "quick", check_q_t_closed_anchors),
    ("anchors/l-poly", "quick", check_l_poly_anchors),
    ("anchors/series", "quick", check_series_anchors),
    ("anchors/stirling", "quick", check_stirling),
    ("anchors/degenerate", "quick", check_degenerate_anchors),
    ("anchors/double-sum", "quick", check_double_sum_anchors),
    ("cache/tables", "quick", check_cache_consistency),
    ("oracle/reduced-tree-poly", "full", check_oracle_reduced),
    ("oracle/cyclic-shuffles", "full", check_oracle_shuffles),
    ("oracle/shuffle-counts", "full", check_shuffle_counts),
    ("oracle/xe-sweep", "full", check_xe_sweep),
    ("oracle/counting-sweep", "full", check_counting_sweep),
    ("oracle/even-cycles", "full", check_even_cycles),
    ("sweep/closed-ones", "full", check_closed_ones_sweep),
    ("sweep/closed-main", "full", check_closed_main_sweep),
    ("sweep/pair-closed", "full", check_pair_closed_sweep),
    ("struct/reduced-poly", "full", check_structural),
    ("struct/l-poly", "full", check_l_poly_sweep),
    ("struct/g-recursion", "full", check_g_recursion_sweep),
    ("matrix/duality", "full", check_matrix_duality),
    ("matrix/order-independence", "full", check_order_independence),
    ("degenerate/inverses", "full", check_degenerate_inverses),
    ("cup/symmetry", "full", check_cup_symmetry),
]


def run_verify(level: str = "quick", cache_dir=None) -> VerifyReport:
    """Run all checks at the requested level ("quick" or "full")."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}; choose quick or full")
    _cache_dir_holder.clear()
    if cache_dir is not None:
        _cache_dir_holder.append(cache_dir)
    wanted = ("quick",) if level == "quick" else ("quick", "full")
    results = []
    for name, check_level, func in CHECKS:
        if check_level not in wanted:
            continue
        start = time.perf_counter()
        ok, lhs, rhs = func()
        results.append(CheckResult(name, ok, lhs, rhs, time.perf_counter() - start))
    return VerifyReport(level, results)
