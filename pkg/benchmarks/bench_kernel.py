"""Time the compiled strand kernel against the pure-Python one and against minimization.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from pdhyper import _kernel, _strand_py
from pdhyper.hypergraph import parse_pattern
from pdhyper.ideal import canonical_ideal
from pdhyper.oracle import build_taylor, minimize

CASES = [
    "cococococ",
    "cycle:cocoooocccoc",
    "cycle:oooooooooooo",
    "cococococococ",
    "cycle:cocococococoo",
]


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    compiled = _kernel._compiled
    print(f"kernel backend: {_kernel.BACKEND}")
    print(f"{'case':<24}{'mu':>4}{'compiled':>12}{'python':>12}{'minimize':>12}  speedup")
    for pattern in CASES:
        ideal = canonical_ideal(parse_pattern(pattern))
        tc = build_taylor(ideal, cap=16)
        masks = list(tc.masks)
        t_py, ref = _time(lambda: _strand_py.strand_betti(masks), args.repeat)
        t_min, table = _time(lambda: minimize(tc), 1)
        assert tuple(ref[: len(table.beta)]) == table.beta
        if compiled is not None:
            t_c, out = _time(lambda: compiled.strand_betti(masks), args.repeat)
            assert out == ref
            c_txt, speed = f"{t_c * 1e3:9.2f} ms", f"{t_py / t_c:6.1f}x"
        else:
            c_txt, speed = f"{'n/a':>12}", "   n/a"
        print(f"{pattern:<24}{len(masks):>4}{c_txt:>12}{t_py * 1e3:9.2f} ms{t_min * 1e3:9.1f} ms  {speed}")


if __name__ == "__main__":
    main()
