"""Identity-verification suites, shared by the command line and the tests.

Each suite checks one closed-form identity against an independent
computation (a group-element average, a graph census, or an orbit count)
by exact degreewise comparison.  Every suite carries its own default
degree, chosen so that ``run_all`` at defaults is exactly the acceptance
workload; an explicit ``max_degree`` overrides it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphoracle
from .graphoracle import Budget, hom_char
from .groups import hyperoct_dihedral, dihedral_in_sym, ind_trivial_char, ind_trivial_char_wreath
from .series import (
    ModuleSpec,
    a_series,
    ass_series,
    b1_series,
    cyclic_necklace_series,
    necklace_series,
    second_leg_series,
)
from .symfunc import SymFunc, h_gen, h_lambda, plethysm
from .wreath import dih_char_closed, dih_series_closed, plethysm_deg1


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status}" + (f" ({self.detail})" if self.detail else "")


SUITE_DEFAULT_DEGREE = {
    "bb": 12,
    "generating": 10,
    "deg1": 5,
    "cyclic": 6,
    "necklaces": 6,
    "theorem": 4,
    "negative-dih": 6,
}

SUITE_NAMES = tuple(SUITE_DEFAULT_DEGREE)


def _census_budget(max_degree: int, budget: Budget | None) -> Budget:
    """Size the enumeration budget to the requested degree: a census graph
    of degree d has at most d vertices on its cycle and at most 3d
    half-edges."""
    if budget is not None:
        return budget
    base = Budget()
    return Budget(
        max_half_edges=max(base.max_half_edges, 3 * max_degree),
        max_legs=max(base.max_legs, max_degree),
    )


def _first_difference(f: SymFunc, g: SymFunc, max_degree: int):
    for d in range(max_degree + 1):
        if f.degree_part(d) != g.degree_part(d):
            return d
    return None


def _diff_detail(f: SymFunc, g: SymFunc, max_degree: int):
    d = _first_difference(f, g, max_degree)
    if d is None:
        return None
    return f"first differing degree {d}: {f.degree_part(d)} vs {g.degree_part(d)}"


def run_bb(max_degree: int = SUITE_DEFAULT_DEGREE["bb"], **_ignored) -> SuiteResult:
    """Closed form of the cyclically-ordered corolla series against the
    averages over cyclic subgroups."""
    closed = ass_series(max_degree, method="closed")
    burnside = ass_series(max_degree, method="burnside")
    detail = _diff_detail(closed, burnside, max_degree)
    return SuiteResult("bb", detail is None, detail or f"exact through degree {max_degree}")


def run_generating(max_degree: int = SUITE_DEFAULT_DEGREE["generating"], **_ignored) -> SuiteResult:
    """Per-degree closed dihedral characters against hyperoctahedral
    subgroup averages and against the closed generating series."""
    series = dih_series_closed(max_degree)
    for n in range(1, max_degree + 1):
        closed = dih_char_closed(n, max_degree)
        burnside = ind_trivial_char_wreath(hyperoct_dihedral(n), max_degree)
        if closed != burnside:
            return SuiteResult(
                "generating", False, f"degree {n}: closed {closed} vs subgroup average {burnside}"
            )
        if series.degree_part(n) != closed:
            return SuiteResult(
                "generating", False, f"degree {n}: series part {series.degree_part(n)} vs {closed}"
            )
    return SuiteResult("generating", True, f"exact for all degrees <= {max_degree}")


def run_deg1(max_degree: int = SUITE_DEFAULT_DEGREE["deg1"], **_ignored) -> SuiteResult:
    """Differential-operator pairing against the orbit-counting oracle."""
    N = max(max_degree, 5)
    cases_g = [((4,), h_gen(4, N)), ((3, 2), h_lambda((3, 2), N))]
    p1 = SymFunc.p(1, N)
    p2 = SymFunc.p(2, N)
    h2 = h_gen(2, N)
    cases_f = [
        ("p1^2", p1 * p1, lambda lam: hom_char("regular", lam, N)),
        ("p2", p2, lambda lam: hom_char("trivial", lam, N) * 2 - hom_char("regular", lam, N)),
        ("h2", h2, lambda lam: hom_char("trivial", lam, N)),
    ]
    for glam, g in cases_g:
        for fname, f, oracle in cases_f:
            lhs = plethysm_deg1(f, g)
            rhs = oracle(glam)
            if lhs != rhs:
                return SuiteResult(
                    "deg1", False, f"f={fname}, g=h{list(glam)}: {lhs} vs orbit oracle {rhs}"
                )
    return SuiteResult("deg1", True, "all operator/orbit pairings agree")


def run_cyclic(
    spec: ModuleSpec | None = None,
    max_degree: int = SUITE_DEFAULT_DEGREE["cyclic"],
    budget: Budget | None = None,
) -> SuiteResult:
    """Cyclically-oriented necklace series against the oriented census."""
    spec = spec or ModuleSpec.standard()
    budget = _census_budget(max_degree, budget)
    working = max(max_degree, spec.max_arity())
    a0 = a_series(spec, 0, working)
    formula = cyclic_necklace_series(a0)
    census_sum = SymFunc.zero(working)
    for n in range(1, max_degree + 1):
        census_sum = census_sum + graphoracle.cyclic_necklace_char_oracle(
            spec, n, working, budget
        )
    detail = _diff_detail(formula, census_sum, max_degree)
    return SuiteResult("cyclic", detail is None, detail or f"exact through degree {max_degree}")


def run_necklaces(
    spec: ModuleSpec | None = None,
    max_degree: int = SUITE_DEFAULT_DEGREE["necklaces"],
    budget: Budget | None = None,
) -> SuiteResult:
    """Unordered necklace series (both computation paths) against the
    unordered census."""
    spec = spec or ModuleSpec.standard()
    budget = _census_budget(max_degree, budget)
    working = max(max_degree, spec.max_arity())
    a0 = a_series(spec, 0, working)
    direct = necklace_series(a0, method="direct")
    wreath_path = necklace_series(a0, method="wreath")
    detail = _diff_detail(direct, wreath_path, max_degree)
    if detail is not None:
        return SuiteResult("necklaces", False, "direct vs wreath path: " + detail)
    census_sum = SymFunc.zero(working)
    for n in range(1, max_degree + 1):
        census_sum = census_sum + graphoracle.necklace_char_oracle(spec, n, working, budget)
    detail = _diff_detail(direct, census_sum, max_degree)
    return SuiteResult("necklaces", detail is None, detail or f"both paths match census through degree {max_degree}")


def run_theorem(
    spec: ModuleSpec | None = None,
    max_degree: int = SUITE_DEFAULT_DEGREE["theorem"],
    budget: Budget | None = None,
) -> SuiteResult:
    """End-to-end genus-one series against the full stable-graph census."""
    spec = spec or ModuleSpec.standard()
    if budget is None and 3 * max_degree > Budget().max_half_edges:
        budget = _census_budget(max_degree, None)
    formula = b1_series(spec, max_degree)
    census_sum = SymFunc.zero(max_degree)
    for n in range(1, max_degree + 1):
        census_sum = census_sum + graphoracle.mv_char(spec, n, max_degree, budget)
    detail = _diff_detail(formula, census_sum, max_degree)
    return SuiteResult("theorem", detail is None, detail or f"exact through degree {max_degree}")


def run_negative_dih(
    spec: ModuleSpec | None = None,
    max_degree: int = SUITE_DEFAULT_DEGREE["negative-dih"],
    budget: Budget | None = None,
) -> SuiteResult:
    """Negative control: treating the dihedral groups as plain subgroups of
    the symmetric groups and substituting the doubly-marked genus-0 series
    must NOT reproduce the necklace census; the suite passes when a
    difference is found."""
    spec = spec or ModuleSpec.standard()
    budget = _census_budget(max_degree, budget)
    working = max(max_degree, spec.max_arity())
    a0 = a_series(spec, 0, working)
    core = second_leg_series(a0)
    naive = SymFunc.zero(working)
    for n in range(1, max_degree + 1):
        naive = naive + plethysm(ind_trivial_char(dihedral_in_sym(n), working), core)
    census_sum = SymFunc.zero(working)
    for n in range(1, max_degree + 1):
        census_sum = census_sum + graphoracle.necklace_char_oracle(spec, n, working, budget)
    d = _first_difference(naive, census_sum, max_degree)
    if d is None:
        return SuiteResult(
            "negative-dih", False, f"no difference found through degree {max_degree}; expected one"
        )
    return SuiteResult("negative-dih", True, f"difference detected at degree {d}, as required")


_RUNNERS = {
    "bb": run_bb,
    "generating": run_generating,
    "deg1": run_deg1,
    "cyclic": run_cyclic,
    "necklaces": run_necklaces,
    "theorem": run_theorem,
    "negative-dih": run_negative_dih,
}


def run_suite(
    name: str,
    spec: ModuleSpec | None = None,
    max_degree: int | None = None,
    budget: Budget | None = None,
) -> SuiteResult:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES} or 'all'")
    kwargs = {"max_degree": max_degree if max_degree is not None else SUITE_DEFAULT_DEGREE[name]}
    if name in ("cyclic", "necklaces", "theorem", "negative-dih"):
        kwargs["spec"] = spec
        kwargs["budget"] = budget
    return _RUNNERS[name](**kwargs)


def run_all(
    spec: ModuleSpec | None = None,
    max_degree: int | None = None,
    budget: Budget | None = None,
) -> list[SuiteResult]:
    return [run_suite(name, spec, max_degree, budget) for name in SUITE_NAMES]
