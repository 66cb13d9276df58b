"""Verification checks, the speculation prober, and a suite runner."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .checks import (
    cauchy_product,
    cauchy_sum,
    genthm_coefficients,
    verify_borwein,
    verify_cauchy_mod,
    verify_cauchy_restricted,
    verify_finite_identity,
    verify_genthm,
    verify_macmahon,
    verify_proposition_rsk,
    verify_rr,
    verify_rr_sum_rewrite,
    verify_xyrr,
)
from .report import IdentityReport, Status
from .speculation import SpeculationSolution, probe_speculation, row_restricted_sum
from .tables import verify_table1, verify_table2

__all__ = [
    "IdentityReport",
    "SpeculationSolution",
    "Status",
    "SUITE",
    "cauchy_product",
    "cauchy_sum",
    "genthm_coefficients",
    "overall_status",
    "probe_speculation",
    "row_restricted_sum",
    "run_all",
    "suite_tasks",
    "verify_borwein",
    "verify_cauchy_mod",
    "verify_cauchy_restricted",
    "verify_finite_identity",
    "verify_genthm",
    "verify_macmahon",
    "verify_proposition_rsk",
    "verify_rr",
    "verify_rr_sum_rewrite",
    "verify_table1",
    "verify_table2",
    "verify_xyrr",
]

# name -> (check, fixed kwargs, whether it takes the suite order)
SUITE: list[tuple[str, Callable[..., IdentityReport], dict, bool]] = [
    ("rr", verify_rr, {"which": "first"}, True),
    ("rr", verify_rr, {"which": "second"}, True),
    ("rr-rewrite", verify_rr_sum_rewrite, {}, True),
    ("cauchy", verify_cauchy_mod, {"k": 1, "i": 2}, True),
    ("table1", verify_table1, {}, True),
    ("table2", verify_table2, {}, True),
    ("rsk", verify_proposition_rsk, {"n_max": 40}, False),
    ("xyrr", verify_xyrr, {"degree_cap": 8}, True),
    ("finite", verify_finite_identity, {"n_max": 30}, False),
    ("genthm", verify_genthm, {"k": 1, "i": 2}, True),
    ("borwein", verify_borwein, {"n_max": 12}, True),
    ("macmahon", verify_macmahon, {"n_max": 100}, False),
]


def suite_tasks(order: int, mutate: bool = False) -> list[tuple[Callable[..., IdentityReport], dict]]:
    tasks = []
    for _, fn, kwargs, takes_order in SUITE:
        kw = dict(kwargs, mutate=mutate)
        if takes_order:
            kw["order"] = order
        tasks.append((fn, kw))
    return tasks


def _run(task):
    fn, kwargs = task
    return fn(**kwargs)


def run_all(order: int = 100, jobs: int | None = None, mutate: bool = False) -> list[IdentityReport]:
    """Run every check; results come back in suite order whatever ``jobs`` is."""
    tasks = suite_tasks(order, mutate)
    jobs = jobs or os.cpu_count() or 1
    if jobs == 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(_run, tasks))


def overall_status(reports: list[IdentityReport]) -> Status:
    if any(r.status is Status.FAIL for r in reports):
        return Status.FAIL
    if any(r.status is Status.INCONCLUSIVE for r in reports):
        return Status.INCONCLUSIVE
    return Status.PASS
