"""Parameter profiles and the runner for the check suite."""

import time
from concurrent.futures import ProcessPoolExecutor

from .checks import CHECKS
from .sampling import rng, seed_from_env

PROFILES = {
    "quick": {
        "lie": {"ps": [2, 3], "nmax": 3},
        "lie-structure": {"ps": [2, 3], "nmax": 3, "samples": 20},
        "fock": {"ps": [2, 3], "ms": [1, 2], "nvar": 2, "deg": 2, "nmax": 2, "phis": 2},
        "fock-pbw": {"ps": [2, 3], "ms": [1, 2], "weight": 3, "nmax": 3},
        "verdicts": {"ps": [2, 3], "ms": [1, 2], "grid": 5, "m0_weight": 3, "combos": 1,
                     "oracle_depth": 0, "oracle_weight": 0},
        "eta": {"ps": [2, 3], "ms": [1, 2], "samples": 2, "pairs": 5},
        "decompose": {"cases": [(2, [1]), (3, [1, 2])], "ms": [1, 2], "samples": 2},
        "omega": {"ps": [2, 3], "nmax": 3, "deg": 3, "samples": 1, "grid": 6, "t_nmax": 3, "t_deg": 3},
        "tensor": {"ps": [2, 3], "extract": 4, "fingerprints": 4},
        "tensor-rep": {"ps": [2, 3], "nmax": 2},
        "theta": {"ps": [2, 3], "bound": 3, "fock_ps": [2, 3]},
    },
    "full": {
        "lie": {"ps": [2, 3, 4, 5], "nmax": 6},
        "lie-structure": {"ps": [2, 3, 4, 5], "nmax": 6, "samples": 100},
        "fock": {"ps": [2, 3, 4, 5], "ms": [1, 2], "nvar": 2, "deg": 3, "nmax": 3, "phis": 4},
        "fock-pbw": {"ps": [2, 3, 4, 5], "ms": [1, 2], "weight": 5, "nmax": 6},
        "verdicts": {"ps": [2, 3, 4, 5], "ms": [1, 2], "grid": 20, "m0_weight": 4, "combos": 3,
                     "oracle_depth": 6, "oracle_weight": 3},
        "eta": {"ps": [2, 3, 4, 5], "ms": [1, 2, 3], "samples": 4, "pairs": 20},
        "decompose": {"cases": [(2, [1]), (3, [1, 2]), (4, [2]), (4, [1, 3]), (5, [1, 4]), (5, [2, 3])],
                      "ms": [1, 2], "samples": 5},
        "omega": {"ps": [2, 3, 4, 5], "nmax": 6, "deg": 6, "samples": 2, "grid": 12, "t_nmax": 6, "t_deg": 6},
        "tensor": {"ps": [2, 3, 4, 5], "extract": 16, "fingerprints": 12},
        "tensor-rep": {"ps": [2, 3, 4], "nmax": 3},
        "theta": {"ps": [2, 3, 4, 5], "bound": 6, "fock_ps": [2, 3, 4, 5]},
    },
}

# The acceptance criteria, at exactly the stated sizes.
ACCEPTANCE = {
    "lie": {"ps": [2, 3, 5], "nmax": 6},
    "fock": {"ps": [2, 3, 4], "ms": [1, 2], "nvar": 2, "deg": 3, "nmax": 3, "phis": 4},
    "verdicts": {"ps": [2, 3], "ms": [1, 2], "grid": 20, "m0_weight": 4, "combos": 3,
                 "oracle_depth": 6, "oracle_weight": 3},
    "eta": {"ps": [2, 3], "ms": [1, 2], "samples": 3, "pairs": 10},
    "decompose": {"cases": [(4, [2]), (4, [1, 3])], "ms": [1, 2], "samples": 5},
    "omega": {"ps": [2, 3], "nmax": 5, "deg": 5, "samples": 2, "grid": 12, "t_nmax": 5, "t_deg": 6},
    "tensor": {"ps": [2, 3, 4], "extract": 8, "fingerprints": 8},
    "theta": {"ps": [2, 3], "bound": 4, "fock_ps": [2, 3, 4]},
}


def run_one(name, params, seed=None):
    return CHECKS[name](params, rng(seed, name))


def _job(args):
    name, params, seed = args
    return run_one(name, params, seed)


def run_suite(profile="quick", seed=None, jobs=1, only=None):
    """Run every check of a profile; results sorted by id."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    seed = seed_from_env() if seed is None else seed
    items = [(n, p, seed) for n, p in PROFILES[profile].items() if only is None or n in only]
    t = time.perf_counter()
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_job, items))
    else:
        results = [_job(a) for a in items]
    results.sort(key=lambda r: r.id)
    return {
        "profile": profile,
        "seed": seed,
        "passed": all(r.passed for r in results),
        "seconds": round(time.perf_counter() - t, 3),
        "results": results,
    }


def report_json(report, timings=False):
    out = {"profile": report["profile"], "seed": report["seed"], "passed": report["passed"],
           "results": [r.to_json() for r in report["results"]]}
    if timings:
        out["seconds"] = report["seconds"]
    return out
