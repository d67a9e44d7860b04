"""Compare the compiled scanner with the numpy fallback.

    python benchmarks/bench_scan.py [--problems 300] [--seed 0]

Two workloads: raw enumeration throughput on an unsatisfiable formula
that defeats range skipping, and end-to-end oracle runs on random
problems (same generator as the test suite).
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from propneed.verifier import brute_force_verdict, ground
from propneed.verifier import _scan_py
from propneed.verifier.program import ATOM, NOT, OR, flatten

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from problem_gen import ProblemGen  # noqa: E402

try:
    from propneed.verifier import _scan as _scan_c
except ImportError:
    _scan_c = None


def backends():
    out = {"numpy": _scan_py.Scanner}
    if _scan_c is not None:
        out["cython"] = _scan_c.Scanner
    return out


def raw_throughput(n_atoms: int) -> dict[str, float]:
    # (x0 or not x0) holds everywhere; (xn-1 and not xn-1) fails everywhere,
    # read last so each mask costs a full evaluation with no skipping
    tautology = [(ATOM, 0), (ATOM, 0), (NOT, 0), (OR, 2)]
    contradiction = [(ATOM, 0), (NOT, 0), (ATOM, 0), (OR, 2), (NOT, 0)]
    code = flatten([tautology, contradiction])
    result = {}
    for name, cls in backends().items():
        scanner = cls(*code, n_atoms)
        t = time.perf_counter()
        assert scanner.next(0, 1 << n_atoms) == -1
        result[name] = time.perf_counter() - t
    return result


def oracle_runs(n: int, seed: int) -> dict[str, float]:
    gen = ProblemGen(random.Random(seed))
    problems = [ground(gen.problem()) for _ in range(n)]
    result = {}
    verdicts = {}
    for name, cls in backends().items():
        t = time.perf_counter()
        verdicts[name] = [brute_force_verdict(gp, scanner=cls) for gp in problems]
        result[name] = time.perf_counter() - t
    first = next(iter(verdicts.values()))
    assert all(v == first for v in verdicts.values()), "backends disagree"
    return result


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--problems", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    names = list(backends())
    print(f"{'workload':<28}" + "".join(f"{n:>12}" for n in names))
    for n_atoms in (16, 20, 22):
        times = raw_throughput(n_atoms)
        print(f"{'full scan, 2^' + str(n_atoms):<28}" + "".join(f"{times[n]:>11.3f}s" for n in names))
    times = oracle_runs(args.problems, args.seed)
    label = f"oracle, {args.problems} problems"
    print(f"{label:<28}" + "".join(f"{times[n]:>11.3f}s" for n in names))


if __name__ == "__main__":
    main()
