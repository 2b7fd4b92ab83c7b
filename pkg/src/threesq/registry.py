"""Check registry: one entry per verifiable identity id.

The fixed id enumeration is shared between the CLI and the test suite.
Three kinds of checks:

* series  -- exact IntSeries comparison up to a truncation order
* sweep   -- exact per-n verification over an integer range
* numeric -- certified battery of sample points (mpmath)

Range sweeps have a fast vectorized path (kernel tables) used for
jobs=1; per-n scalar sweeps can be spread over worker processes with
jobs > 1 and merged order-independently.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import counts, identities, numeric, qforms

ENGINE_VERSION = "threesq 0.1.0"


@dataclass(frozen=True)
class CheckReport:
    identity_id: str
    passed: bool
    scope: str
    checked: int
    detail: str
    duration: float


_SERIES_CHECKS = {
    "andrews516": (identities.check_andrews516, 500),
    "gauss-gen": (identities.check_gauss_gen, 500),
    "eyphka": (identities.check_eyphka, 500),
    "jacobi4": (identities.check_jacobi4, 500),
    "two-square": (identities.check_two_square, 500),
    "triple-product": (identities.check_triple_product, 500),
    "eta-limits": (identities.check_eta_limits, 200),
}

_SWEEP_DEFAULTS = {
    "andrews-crandall": (1, 5000),
    "parity-lemma": (1, 5000),
    "propositions": (1, 2000),
    "decomposition": (1, 5000),
    "hurwitz-equivalence": (3, 4000),
    "dirichlet-ratio": (3, 200),  # range of |D0|; f runs 1..6
    "hurwitz-4n": (3, 2000),
    "gauss-r3": (1, 2000),
    "gauss-N3": (1, 1000),
}

_NUMERIC_IDS = ("kronecker", "kronecker-sym", "kronecker-alt", "theorem-1-1", "partial-fraction")

IDENTITY_IDS = tuple(_SERIES_CHECKS) + tuple(_SWEEP_DEFAULTS) + _NUMERIC_IDS

DIRICHLET_MAX_F = 6


# -- scalar per-n checks (used by parallel sweeps and spot tests) -------------


def scalar_check(identity_id: str, n: int) -> bool:
    """Single-n form of a sweep check; vacuously true off the sweep's
    residue classes."""
    if identity_id == "andrews-crandall":
        return counts.andrews_crandall_r3(n) == counts.r_squares(3, n)
    if identity_id == "parity-lemma":
        return n % 4 not in (1, 2) or counts.parity_lemma_check(n)
    if identity_id == "propositions":
        return counts.proposition_checks(n)
    if identity_id == "decomposition":
        counts.decompose_solutions(n)  # raises on violation
        return True
    if identity_id == "hurwitz-equivalence":
        if n % 4 in (1, 2):
            return True
        return qforms.hurwitz_direct(n) == qforms.hurwitz_divisor_sum(n)
    if identity_id == "hurwitz-4n":
        return n % 4 != 3 or qforms.hurwitz_4n_lemma_check(n)
    if identity_id == "gauss-r3":
        return qforms.gauss_r3_check(n)
    if identity_id == "gauss-N3":
        return n % 8 not in (1, 2, 3, 5, 6) or qforms.gauss_N3_check(n)
    if identity_id == "dirichlet-ratio":
        if not qforms.is_fundamental(-n):
            return True
        return all(qforms.dirichlet_ratio_check(-n, f) for f in range(1, DIRICHLET_MAX_F + 1))
    raise ValueError(f"not a sweep identity: {identity_id}")


def _chunk_worker(args):
    identity_id, ns = args
    for n in ns:
        if not scalar_check(identity_id, n):
            return len(ns), f"first failure at n={n}"
    return len(ns), ""


# -- vectorized sweep paths ----------------------------------------------------


def _first_bad(ns: np.ndarray, ok: np.ndarray) -> str:
    bad = ns[~ok]
    return "" if bad.size == 0 else f"first failure at n={int(bad[0])}"


def _sweep_tables(identity_id: str, lo: int, hi: int) -> tuple[int, str]:
    ns = np.arange(max(lo, 1), hi + 1)
    sign = np.where(ns % 2 == 1, 1, -1).astype(np.int64)
    if identity_id == "andrews-crandall":
        r3 = counts.r3_table(hi)[ns]
        sp = counts.signed_pair_table(hi)[ns]
        st = counts.signed_triple_table(hi)[ns]
        return len(ns), _first_bad(ns, 6 * sign * sp + 4 * sign * st == r3)
    if identity_id == "parity-lemma":
        mask = (ns % 4 == 1) | (ns % 4 == 2)
        ms = ns[mask]
        total = counts.solution_tables(hi)[0][ms]
        st = counts.signed_triple_table(hi)[ms]
        return len(ms), _first_bad(ms, sign[mask] * st == total)
    if identity_id == "decomposition":
        total, strict, two_eq, all_eq = counts.solution_tables(hi)
        ok = total[ns] == 6 * strict[ns] + 3 * two_eq[ns] + all_eq[ns]
        return len(ns), _first_bad(ns, ok)
    if identity_id == "propositions":
        r3 = counts.r3_table(hi)
        d, _, _, _ = counts.divisor_tables(hi)
        _, strict, two_eq, _ = counts.solution_tables(hi)
        st = counts.signed_triple_table(hi)
        for n in range(max(lo, 1), hi + 1):
            ok = True
            if n % 4 == 1:
                ok &= r3[n] == 6 * d[n] + 24 * strict[n] + 12 * two_eq[n]
            if n % 4 == 2:
                ok &= r3[n] == 12 * d[n // 2] + 24 * strict[n]
            if n % 2 == 1:
                ok &= r3[n] == 6 * d[n] + 4 * st[n]
            else:
                k = (n & -n).bit_length() - 1
                ok &= r3[n] == 6 * (3 - k) * d[n >> k] - 4 * st[n]
            if not ok:
                return hi - max(lo, 1) + 1, f"first failure at n={n}"
        return hi - max(lo, 1) + 1, ""
    if identity_id == "gauss-r3":
        r3 = counts.r3_table(hi)
        r3_of = lambda m: int(r3[m])
        for n in range(max(lo, 1), hi + 1):
            if not qforms.gauss_r3_check(n, r3_of):
                return hi - max(lo, 1) + 1, f"first failure at n={n}"
        return hi - max(lo, 1) + 1, ""
    if identity_id == "gauss-N3":
        n3 = counts.n3_table(hi)
        n3_of = lambda m: int(n3[m])
        checked = 0
        for n in range(max(lo, 1), hi + 1):
            if n % 8 not in (1, 2, 3, 5, 6):
                continue
            checked += 1
            if not qforms.gauss_N3_check(n, n3_of):
                return checked, f"first failure at n={n}"
        return checked, ""
    # per-n checks without table support
    checked = 0
    for n in range(max(lo, 1), hi + 1):
        checked += 1
        if not scalar_check(identity_id, n):
            return checked, f"first failure at n={n}"
    return checked, ""


def _run_sweep(identity_id: str, lo: int, hi: int, jobs: int) -> tuple[int, str]:
    if jobs <= 1:
        return _sweep_tables(identity_id, lo, hi)
    ns = list(range(max(lo, 1), hi + 1))
    chunks = [ns[i::jobs] for i in range(jobs)]
    detail = ""
    checked = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for done, d in pool.map(_chunk_worker, [(identity_id, c) for c in chunks if c]):
            checked += done
            if d and not detail:
                detail = d
    return checked, detail


# -- top-level dispatch --------------------------------------------------------


def run_check(
    identity_id: str,
    order: Optional[int] = None,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    samples: Optional[int] = None,
    tolerance: Optional[float] = None,
    precision: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: int = 1,
) -> CheckReport:
    """Run one registered check and report pass/fail with scope info."""
    start = time.perf_counter()
    if identity_id in _SERIES_CHECKS:
        fn, default_order = _SERIES_CHECKS[identity_id]
        n = order if order is not None else default_order
        res = fn(n)
        detail = "" if res.passed else (
            f"mismatch at q^{res.first_mismatch.exponent}: "
            f"lhs={res.first_mismatch.lhs} rhs={res.first_mismatch.rhs}"
        )
        return CheckReport(
            identity_id, res.passed, f"order {n}", n + 1, detail,
            time.perf_counter() - start,
        )
    if identity_id in _SWEEP_DEFAULTS:
        dlo, dhi = _SWEEP_DEFAULTS[identity_id]
        lo = dlo if lo is None else lo
        hi = dhi if hi is None else hi
        checked, detail = _run_sweep(identity_id, lo, hi, jobs)
        scope = f"n in {lo}..{hi}"
        if identity_id == "dirichlet-ratio":
            scope = f"|D0| in {lo}..{hi}, f in 1..{DIRICHLET_MAX_F}"
        return CheckReport(
            identity_id, detail == "", scope, checked, detail,
            time.perf_counter() - start,
        )
    if identity_id in _NUMERIC_IDS:
        kwargs = dict(
            count=samples if samples is not None else 20,
            seed=seed if seed is not None else numeric.BATTERY_SEED,
            precision=precision if precision is not None else numeric.DEFAULT_PRECISION,
            tolerance=tolerance if tolerance is not None else numeric.DEFAULT_TOLERANCE,
        )
        battery_ids = (
            ("theorem-1-1", "theorem-1-1-sym")
            if identity_id == "theorem-1-1"
            else (identity_id,)
        )
        reports = [numeric.run_battery(b, **kwargs) for b in battery_ids]
        passed = all(r.passed for r in reports)
        checked = sum(len(r.outcomes) for r in reports)
        max_rel = max(r.max_rel_err for r in reports)
        details = []
        for r in reports:
            for o in r.outcomes:
                if not o.passed:
                    details.append(
                        f"{r.identity_id} fails at q={o.context.q} x={o.context.x} "
                        f"y={o.context.y} z={o.context.z}: rel={o.rel_err:.3e}"
                    )
                    break
            for s in r.skipped:
                details.append(f"{r.identity_id} skipped near pole: {s}")
        scope = f"{kwargs['count']} samples"
        if len(battery_ids) == 2:
            scope += " x 2 LHS variants"
        detail = "; ".join(details) if details else f"max rel err {max_rel:.3e}"
        return CheckReport(
            identity_id, passed, scope, checked, detail,
            time.perf_counter() - start,
        )
    raise KeyError(identity_id)
