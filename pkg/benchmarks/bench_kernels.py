"""Compare the compiled Laurent-polynomial kernels with the pure-Python
fallback.

Two views:

* micro: each kernel function timed in-process on a seeded random
  workload, with the results cross-checked between backends;
* end-to-end: a structural check run in two subprocesses, one with
  ``C2WEBS_PURE=1`` forcing the fallback, one without.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat N] [--terms T] [--skip-e2e]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time

from c2webs import _kernels_py

try:
    from c2webs import _kernels
except ImportError:
    _kernels = None


def random_poly(rng, terms):
    return {
        rng.randrange(-8, 9): rng.randrange(-9, 10) or 1
        for _ in range(terms)
    }


def build_workload(terms, count, seed=2024):
    rng = random.Random(seed)
    pairs = [
        (random_poly(rng, terms), random_poly(rng, terms))
        for _ in range(count)
    ]
    # divisions must be exact, so divide a product by its factor
    divs = [(_kernels_py.pmul(a, b), b) for a, b in pairs]
    return pairs, divs


def bench_one(fn, args_list, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(*args) for args in args_list]
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def micro(repeat, terms, count):
    pairs, divs = build_workload(terms, count)
    cases = [
        ("padd", pairs),
        ("psub", pairs),
        ("pmul", pairs),
        ("pscale", [(a, 7) for a, _ in pairs]),
        ("pshift", [(a, 3) for a, _ in pairs]),
        ("pneg", [(a,) for a, _ in pairs]),
        ("pdivexact", divs),
    ]
    print(f"micro: {count} calls/function, {terms}-term operands, "
          f"best of {repeat}")
    header = f"{'function':<12}{'pure (s)':>12}"
    if _kernels is not None:
        header += f"{'compiled (s)':>14}{'speedup':>10}"
    print(header)
    for name, args_list in cases:
        t_py, out_py = bench_one(getattr(_kernels_py, name), args_list,
                                 repeat)
        line = f"{name:<12}{t_py:>12.4f}"
        if _kernels is not None:
            t_cy, out_cy = bench_one(getattr(_kernels, name), args_list,
                                     repeat)
            if out_cy != out_py:
                raise SystemExit(f"backend mismatch in {name}")
            line += f"{t_cy:>14.4f}{t_py / t_cy:>9.1f}x"
        print(line)


E2E_SNIPPET = """
import json, time
from c2webs import ladders
from c2webs._backend import backend_name
t0 = time.perf_counter()
rep = ladders.triangularity_check("2121")
rep2 = ladders.basis_check("121", "211")
elapsed = time.perf_counter() - t0
print(json.dumps({
    "backend": backend_name(),
    "elapsed": elapsed,
    "ok": bool(rep["verdict"] and rep2["verdict"]),
}))
"""


def run_e2e(pure):
    env = dict(os.environ)
    env.pop("C2WEBS_PURE", None)
    if pure:
        env["C2WEBS_PURE"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", E2E_SNIPPET],
        capture_output=True, text=True, env=env, check=True,
    )
    return json.loads(proc.stdout)


def e2e():
    print("\nend-to-end: triangularity('2121') + basis_check('121','211'), "
          "symbolic")
    rows = [run_e2e(pure=False), run_e2e(pure=True)]
    for row in rows:
        if not row["ok"]:
            raise SystemExit(f"check failed under {row['backend']} backend")
        print(f"  {row['backend']:<8} {row['elapsed']:.3f}s")
    if rows[0]["backend"] != rows[1]["backend"]:
        print(f"  speedup {rows[1]['elapsed'] / rows[0]['elapsed']:.1f}x")
    else:
        print("  (compiled backend unavailable; both runs used the "
              "fallback)")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5,
                    help="timing repetitions, best kept (default 5)")
    ap.add_argument("--terms", type=int, default=12,
                    help="terms per operand (default 12)")
    ap.add_argument("--count", type=int, default=2000,
                    help="calls per function per repetition (default 2000)")
    ap.add_argument("--skip-e2e", action="store_true",
                    help="skip the subprocess comparison")
    args = ap.parse_args(argv)
    if _kernels is None:
        print("note: compiled backend not importable; pure numbers only")
    micro(args.repeat, args.terms, args.count)
    if not args.skip_e2e:
        e2e()


if __name__ == "__main__":
    main()
