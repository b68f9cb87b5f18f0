"""Randomized verification harness.

Trial ``t`` uses seed ``spec.seed + t`` for everything it generates, so
trials are independent and may run in worker processes without changing
the report.  ``spec.dim`` and ``spec.index`` act as upper bounds: each
trial draws its own dimension and index beneath them.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .checks import (
    CheckResult,
    Instance,
    Verdict,
    check_base_gates,
    check_blocks_and_commutation,
    check_core_ep_equivalence,
    check_decomposition,
    check_definition,
    check_degenerate,
    check_double_inverse,
    check_drazin_sum,
    check_gg,
    check_identities,
    check_laws,
    check_m1_reduction,
    check_normal_blocks,
    check_paths,
    check_polar,
    check_power_reduction,
    check_relaxed_systems,
    check_triple_inverse,
    check_weak_group_of_inverse,
)
from .engine import mwg_decompose
from .generators import GenSpec, gen_additive_pair, gen_product_pair, gen_with_index

__all__ = ["trial_spec", "run_trial", "run_suite", "build_report"]


def trial_spec(spec: GenSpec, trial: int) -> GenSpec:
    seed = spec.seed + trial
    rng = random.Random(seed)
    dim = rng.randint(1, spec.dim)
    index = rng.randint(0, min(spec.index, dim))
    return GenSpec(dim, index, spec.entry_bound, seed)


def matrix_checks(inst: Instance, m: int, ctx: dict) -> list[CheckResult]:
    """Every single-matrix checker at one value of m."""
    return [
        check_definition(inst, inst.mwg(m), m, ctx),
        check_paths(inst, m, ctx),
        check_decomposition(inst, mwg_decompose(inst.A, m), ctx),
        check_drazin_sum(inst, m, ctx),
        check_identities(inst, m, ctx),
        check_double_inverse(inst, m, ctx),
        check_triple_inverse(inst, m, ctx),
        check_weak_group_of_inverse(inst, m, ctx),
        check_core_ep_equivalence(inst, m, ctx),
        check_power_reduction(inst, m, ctx),
        check_relaxed_systems(inst, m, ctx),
        check_polar(inst, m, ctx),
        check_blocks_and_commutation(inst, m, m + 1, ctx),
    ]


def run_trial(spec: GenSpec, trial: int, m_list: Sequence[int]) -> list[CheckResult]:
    ts = trial_spec(spec, trial)
    ctx = {"trial": trial, "dim": ts.dim}
    inst = Instance(gen_with_index(ts))
    results = [
        check_base_gates(inst, ctx),
        check_m1_reduction(inst, ctx),
        check_gg(inst, ctx),
        check_degenerate(inst, m_list, ctx),
    ]
    for m in m_list:
        results.extend(matrix_checks(inst, m, ctx))

    if ts.dim >= 2:
        add = gen_additive_pair(ts)
        for m in m_list:
            results.append(check_laws("additive", add.a, add.b, m, ctx))

    family = 1 if trial % 2 == 0 else 2
    prod = gen_product_pair(ts, family=family)
    pctx = dict(ctx, family=prod.label)
    for m in m_list:
        results.append(check_laws("product", prod.a, prod.b, m, pctx))
        if family == 1:
            results.append(check_normal_blocks(prod.a, m, pctx))
            results.append(check_blocks_and_commutation(prod.a, m, m + 1, pctx))
    return results


def _run_trial_args(args):
    return run_trial(*args)


def run_suite(spec: GenSpec, trials: int, m_list: Sequence[int], workers: int = 1) -> list[CheckResult]:
    if trials < 1:
        raise ValueError("trials must be positive")
    m_list = list(m_list)
    if not m_list or any(m < 1 for m in m_list):
        raise ValueError("m values must be positive integers")
    jobs = [(spec, t, m_list) for t in range(trials)]
    if workers <= 1:
        per_trial = [run_trial(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_trial = list(pool.map(_run_trial_args, jobs, chunksize=1))
    return [r for batch in per_trial for r in batch]


def build_report(results: Sequence[CheckResult], *, seed: int, trials: int, dim_max: int,
                 index_max: int, m_list: Sequence[int], entry_bound: int) -> dict:
    summary = {
        "total": len(results),
        "passed": sum(r.verdict is Verdict.PASS for r in results),
        "failed": sum(r.verdict is Verdict.FAIL for r in results),
        "hypothesisViolated": sum(r.verdict is Verdict.HYPOTHESIS_VIOLATED for r in results),
    }
    return {
        "meta": {
            "seed": seed,
            "trials": trials,
            "dims": {"dimMax": dim_max, "indexMax": index_max, "entryBound": entry_bound},
            "mList": list(m_list),
            "toolVersion": __version__,
        },
        "results": [r.to_json() for r in results],
        "summary": summary,
    }
