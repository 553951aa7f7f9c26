"""Verification suites behind ``fermionic verify``.

Each suite is a list of named checks.  A check yields ``(label, ok, detail)``
triples; the suite report counts them and keeps the first failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import characters as chars
from . import reference
from .kostka import build_kostka_matrix, invert_unitriangular, kostka_poly, kostka_poly_rectangles, n_statistic
from .oracles import charge_kostka, cocharge_kostka, finite_char, lr_multiplicity, tensor_decomposition, weyl_kac_char
from .qseries import LaurentPolynomial, eval_at_one, reciprocal_q
from .weights import (
    PartitionShape,
    RankedWeight,
    RectangularSequence,
    all_partitions,
    partition_to_weight,
    weyl_dimension,
)

Outcome = tuple[str, bool, str]

SUITES = ["paper-tables", "oracle-lr", "oracle-charge", "oracle-weyl-kac", "internal-identities"]


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, label: str, ok: bool, detail: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = f"{label}: {detail}" if detail else label

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "failed": self.failed, "first_failure": self.first_failure}


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def render(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            status = "ok  " if c.ok else "FAIL"
            lines.append(f"  {status} {c.name}: {c.passed} passed, {c.failed} failed")
            if c.first_failure:
                lines.append(f"       first counterexample: {c.first_failure}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _run(name: str, gen: Iterator[Outcome]) -> CheckResult:
    res = CheckResult(name)
    for label, ok, detail in gen:
        res.record(label, ok, detail)
    return res


def _eq(label: str, got, want) -> Outcome:
    return label, got == want, f"got {got}, expected {want}"


# --------------------------------------------------------------------------
# reference tables


def sl4_matrix_checks() -> Iterator[Outcome]:
    K = build_kostka_matrix(3, 4, 12, 0)
    order = [tuple(w.coords) for w in K.weights()]
    yield _eq("index order", order, reference.SL4_ORDER)
    want = reference.sl4_kostka()
    for i, row in enumerate(K.entries):
        for j, e in enumerate(row):
            yield _eq(f"K[{order[i]}, {order[j]}]", e, want[i][j])


def sl4_inverse_checks() -> Iterator[Outcome]:
    Kinv = invert_unitriangular(build_kostka_matrix(3, 4, 12, 0))
    order = [tuple(w.coords) for w in Kinv.weights()]
    want = reference.sl4_kostka_inverse()
    for i, row in enumerate(Kinv.entries):
        for j, e in enumerate(row):
            yield _eq(f"Kinv[{order[i]}, {order[j]}]", e, want[i][j])


def sl3_closed_form_checks(max_label: int = 4) -> Iterator[Outcome]:
    # the closed form is indexed (column labels; row labels)
    for l1, l2 in itertools.product(range(max_label + 1), repeat=2):
        t = min(l1, l2)
        for i, j in itertools.product(range(t + 1), repeat=2):
            m1, m2 = l1 - i, l2 - j
            got = kostka_poly(2, RankedWeight((m1, m2)), RectangularSequence((l1, l2)))
            yield _eq(f"K[({m1},{m2}), ({l1},{l2})]", got, reference.sl3_kostka(l1, l2, m1, m2))


def sl3_inverse_checks(max_label: int = 4) -> Iterator[Outcome]:
    for res in range(3):
        K = invert_unitriangular(build_kostka_matrix(2, 2 * max_label, 3 * max_label, res))
        ws = [tuple(w.coords) for w in K.weights()]
        for i, row in enumerate(K.entries):
            for j, e in enumerate(row):
                (m1, m2), (l1, l2) = ws[i], ws[j]
                yield _eq(f"Kinv[{ws[i]}, {ws[j]}]", e, reference.sl3_kostka_inverse(l1, l2, m1, m2))


def quoted_value_checks() -> Iterator[Outcome]:
    P = LaurentPolynomial.parse
    yield _eq("K[(0,0,0), n=(1,0,1)]", kostka_poly(3, RankedWeight((0, 0, 0)), RectangularSequence((1, 0, 1))), P("q"))
    yield _eq("K[(0,2,0), n=(1,2,1)]", kostka_poly(3, RankedWeight((0, 2, 0)), RectangularSequence((1, 2, 1))), P("q + q^2"))
    yield _eq("K[(0,0), n=(0,0)]", kostka_poly(2, RankedWeight((0, 0)), RectangularSequence((0, 0))), P("1"))
    yield _eq("LR (0,0,0) in w1 x w3", lr_multiplicity(3, (0, 0, 0), [(1, 0, 0), (0, 0, 1)]), 1)
    yield _eq("LR (0,2,0) in w1 x 2w2 x w3", lr_multiplicity(3, (0, 2, 0), [(1, 0, 0), (0, 2, 0), (0, 0, 1)]), 2)
    col = {tuple(partition_to_weight(3, nu).coords): c for nu, c in chars.inverse_kostka_column(3, RankedWeight((1, 2, 1))).items()}
    yield _eq("assembly coefficients of V_(1,2,1)", col, reference.sl4_assembly_121())


def fusion_recombination_checks(D: int = 3) -> Iterator[Outcome]:
    """The n=(1,2,1) fusion at level 4 against sum_lambda K_{lambda,n}(1/q) V_lambda."""
    order = reference.SL4_ORDER
    col = order.index((1, 2, 1))
    K = reference.sl4_kostka()
    fusion = chars.char_fusion_V(3, 4, (1, 2, 1), D)
    total = None
    for i, lam in enumerate(order):
        c = reciprocal_q(K[i][col])
        if not c:
            continue
        V = chars.char_V_general(3, 4, lam, D - c.min_exponent())
        part = chars.WeightGradedCharacter(3, 4, D, {w: (s * c).truncate(D) for w, s in V.table.items()}, "fusion_V")
        total = part if total is None else total + part
    diffs = fusion.differences(total, D)
    yield "fusion (1,2,1) recombination", not diffs, "; ".join(diffs[:3])


def reference_tables(max_degree: int = 3) -> SuiteReport:
    rep = SuiteReport("paper-tables")
    rep.checks.append(_run("sl4 Kostka matrix", sl4_matrix_checks()))
    rep.checks.append(_run("sl4 inverse Kostka matrix", sl4_inverse_checks()))
    rep.checks.append(_run("sl3 closed form", sl3_closed_form_checks()))
    rep.checks.append(_run("sl3 inverse", sl3_inverse_checks()))
    rep.checks.append(_run("quoted values", quoted_value_checks()))
    rep.checks.append(_run("fusion recombination", fusion_recombination_checks(min(max_degree, 3))))
    return rep


# --------------------------------------------------------------------------
# oracles


def lr_sweep(max_rank: int = 3, max_size: int = 8) -> Iterator[Outcome]:
    """``K(1)`` against tensor-product multiplicities for every weight of matching size."""
    for r in range(1, max_rank + 1):
        for counts in itertools.product(range(max_size + 1), repeat=r):
            size = sum((a + 1) * c for a, c in enumerate(counts))
            if size > max_size:
                continue
            mus = [RankedWeight.fundamental(r, a + 1, c) for a, c in enumerate(counts) if c]
            dec = tensor_decomposition(r, mus)
            n = RectangularSequence(counts)
            for s in range(size, -1, -(r + 1)):
                for p in all_partitions(s, None, r):
                    lam = partition_to_weight(r, PartitionShape(p))
                    got = eval_at_one(kostka_poly(r, lam, n))
                    yield _eq(f"r={r} lambda={lam} n={counts}", got, dec.get(lam, 0))


def lr_dimension_sweep(max_rank: int = 3, max_size: int = 8) -> Iterator[Outcome]:
    for r in range(1, max_rank + 1):
        for counts in itertools.product(range(max_size + 1), repeat=r):
            if sum((a + 1) * c for a, c in enumerate(counts)) > max_size:
                continue
            mus = [RankedWeight.fundamental(r, a + 1, c) for a, c in enumerate(counts) if c]
            dec = tensor_decomposition(r, mus)
            lhs = sum(m * weyl_dimension(l) for l, m in dec.items())
            rhs = 1
            for mu in mus:
                rhs *= weyl_dimension(mu)
            yield _eq(f"r={r} n={counts} dimension", lhs, rhs)


def oracle_lr(max_size: int = 8) -> SuiteReport:
    rep = SuiteReport("oracle-lr")
    rep.checks.append(_run("K(1) = tensor multiplicity", lr_sweep(3, max_size)))
    rep.checks.append(_run("dimension count", lr_dimension_sweep(3, max_size)))
    return rep


def single_row_cases(max_size: int = 8, max_rank: Optional[int] = None) -> Iterator[tuple[int, tuple, tuple]]:
    """``(r, mu, lam_bar)`` with ``|mu| <= max_size`` and ``r >= |mu|``."""
    for s in range(1, max_size + 1):
        top = max_size if max_rank is None else max(max_rank, s)
        for r in range(s, top + 1):
            for mu in all_partitions(s):
                for lb in all_partitions(s, None, r):
                    yield r, mu, lb


def charge_composite_sweep(max_size: int = 8) -> Iterator[Outcome]:
    """Single-row rectangles: ``K(q) == q^{n(R)} * cocharge(1/q)`` as literally composed."""
    for r, mu, lb in single_row_cases(max_size):
        rects = [(a, 1) for a in mu]
        got = kostka_poly_rectangles(r, partition_to_weight(r, PartitionShape(lb)), rects)
        want = reciprocal_q(cocharge_kostka(lb, mu)).shift(n_statistic(rects))
        yield _eq(f"r={r} shape={lb} rows={mu}", got, want)


def cocharge_sweep(max_size: int = 8) -> Iterator[Outcome]:
    """Single-row rectangles: ``K(q)`` equals the cocharge Kostka-Foulkes polynomial."""
    for r, mu, lb in single_row_cases(max_size):
        got = kostka_poly_rectangles(r, partition_to_weight(r, PartitionShape(lb)), [(a, 1) for a in mu])
        yield _eq(f"r={r} shape={lb} rows={mu}", got, cocharge_kostka(lb, mu))


def charge_count_sweep(max_size: int = 8) -> Iterator[Outcome]:
    from .oracles import semistandard_tableaux

    for s in range(1, max_size + 1):
        for mu in all_partitions(s):
            for lb in all_partitions(s):
                count = sum(1 for _ in semistandard_tableaux(PartitionShape(lb), mu))
                yield _eq(f"shape={lb} content={mu}", eval_at_one(charge_kostka(lb, mu)), count)


def oracle_charge(max_size: int = 8) -> SuiteReport:
    rep = SuiteReport("oracle-charge")
    rep.checks.append(_run("charge at q=1 counts tableaux", charge_count_sweep(max_size)))
    rep.checks.append(_run("K = cocharge Kostka-Foulkes", cocharge_sweep(max_size)))
    rep.checks.append(_run("K = q^n(R) cocharge(1/q), as composed", charge_composite_sweep(max_size)))
    return rep


def weyl_kac_sweep_cases() -> Iterator[tuple[int, int, tuple[int, ...]]]:
    for r, levels in ((1, (1, 2, 3)), (2, (1, 2))):
        for k in levels:
            for lam in itertools.product(range(k + 1), repeat=r):
                if sum(lam) <= k:
                    yield r, k, lam


def _rect(lam: tuple[int, ...]) -> Optional[tuple[int, int]]:
    return RankedWeight(lam).rectangle()


def weyl_kac_checks(D: int = 8) -> Iterator[Outcome]:
    for r, k, lam in weyl_kac_sweep_cases():
        wk = weyl_kac_char(r, k, lam, D)
        gen = chars.char_V_general(r, k, lam, D)
        diffs = wk.differences(gen, D)
        yield f"general r={r} k={k} lambda={lam}", not diffs, "; ".join(diffs[:2])
        rect = _rect(lam)
        if rect is not None:
            l, beta = rect
            diffs = wk.differences(chars.char_V_rect(r, k, l, beta, D), D)
            yield f"rect r={r} k={k} lambda={lam}", not diffs, "; ".join(diffs[:2])


def oracle_weyl_kac(max_degree: int = 8) -> SuiteReport:
    rep = SuiteReport("oracle-weyl-kac")
    rep.checks.append(_run("fermionic = Weyl-Kac", weyl_kac_checks(max_degree)))
    rep.checks.append(_run("Weyl-Kac self-consistency", weyl_kac_invariants(max_degree)))
    return rep


def weyl_kac_invariants(D: int = 8) -> Iterator[Outcome]:
    for r, k, lam in weyl_kac_sweep_cases():
        wk = weyl_kac_char(r, k, lam, D)
        v = wk.weyl_violations()
        yield f"Weyl invariance r={r} k={k} lambda={lam}", not v, "; ".join(v[:2])
        yield _eq(f"top layer r={r} k={k} lambda={lam}", wk.layer(0), finite_char(r, lam))


# --------------------------------------------------------------------------
# internal identities


def rect_sweep_cases() -> Iterator[tuple[int, int, int, int]]:
    for r in (1, 2):
        for k in (1, 2, 3):
            for beta in range(1, r + 1):
                for l in range(k + 1):
                    yield r, k, l, beta


def two_line_checks(D: int = 6) -> Iterator[Outcome]:
    for r, k, l, beta in rect_sweep_cases():
        n = tuple(l if a == beta - 1 else 0 for a in range(r))
        compact = chars.char_fusion_V(r, k, n, D)
        two = chars.char_fusion_V_two_line(r, k, n, D)
        d = compact.differences(two, D)
        yield f"integrable r={r} k={k} l={l} beta={beta}", not d, "; ".join(d[:2])
        compact = chars.char_W_rect(r, k, l, beta, D)
        two = chars.char_W_rect_two_line(r, k, l, beta, D)
        d = compact.differences(two, D)
        yield f"principal r={r} k={k} l={l} beta={beta}", not d, "; ".join(d[:2])


def collapse_checks(D: int = 6) -> Iterator[Outcome]:
    for r, k, l, beta in rect_sweep_cases():
        lam = RankedWeight.fundamental(r, beta, l)
        d = chars.char_V_general(r, k, lam, D).differences(chars.char_V_rect(r, k, l, beta, D), D)
        yield f"V r={r} k={k} lambda={lam}", not d, "; ".join(d[:2])
        d = chars.char_W_general(r, k, lam, D).differences(chars.char_W_rect(r, k, l, beta, D), D)
        yield f"W r={r} k={k} lambda={lam}", not d, "; ".join(d[:2])


def translation_checks(D: int = 6) -> Iterator[Outcome]:
    cases = [(1, 1, l, 1) for l in (0, 1)] + [(2, 2, l, 1) for l in (0, 1, 2)]
    for r, k, l, beta in cases:
        V = chars.char_V_rect(r, k, l, beta, D)
        prev = None
        for N in range(0, D + 2):
            T = chars.char_W_rect_translated(r, k, l, beta, N, D)
            if prev is not None:
                worse = [
                    f"{w} q^{e}"
                    for w, s in prev.table.items()
                    for e, c in s.items()
                    if T.multiplicity(w, e) < c
                ]
                yield f"monotone r={r} k={k} l={l} N={N}", not worse, "; ".join(worse[:2])
            prev = T
        d = prev.differences(V, D)
        yield f"limit r={r} k={k} l={l} N={D + 1}", not d, "; ".join(d[:2])


def internal_identities(max_degree: int = 6) -> SuiteReport:
    rep = SuiteReport("internal-identities")
    rep.checks.append(_run("two-line forms", two_line_checks(max_degree)))
    rep.checks.append(_run("rectangular collapse", collapse_checks(max_degree)))
    rep.checks.append(_run("translation limit", translation_checks(max_degree)))
    return rep


RUNNERS: dict[str, Callable[..., SuiteReport]] = {
    "paper-tables": lambda size, degree: reference_tables(degree if degree is not None else 3),
    "oracle-lr": lambda size, degree: oracle_lr(size if size is not None else 8),
    "oracle-charge": lambda size, degree: oracle_charge(size if size is not None else 8),
    "oracle-weyl-kac": lambda size, degree: oracle_weyl_kac(degree if degree is not None else 8),
    "internal-identities": lambda size, degree: internal_identities(degree if degree is not None else 6),
}


def run_suite(name: str, max_size: Optional[int] = None, max_degree: Optional[int] = None) -> list[SuiteReport]:
    names = SUITES if name == "all" else [name]
    return [RUNNERS[n](max_size, max_degree) for n in names]
