"""Time batch membership with the compiled and the pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--states 40] [--max-len 8]
"""

import argparse
import time

import numpy as np

from ulogic import _fallback, kernels
from ulogic import tlxy as T
from ulogic.difftest import gen_formula
from ulogic.sexpr import Alphabet, enumerate_words


def pack(m, words):
    flat, offsets = [], [0]
    for w in words:
        flat.extend(m.encode(w))
        offsets.append(len(flat))
    return np.array(flat, dtype=np.int32), np.array(offsets, dtype=np.int64)


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=12, help="formula size budget")
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    al = Alphabet("abc")
    seed = 0
    while True:
        m = T.to_po2dfa(gen_formula("tlxy", args.size, al, seed), al)
        if len(m) >= 20:
            break
        seed += 1
    words = list(enumerate_words(al, args.max_len))
    _, _, _, _, table, kinds = m._tables()
    flat, offsets = pack(m, words)
    init = m.states.index(m.init)
    print(f"automaton: {len(m)} states; words: {len(words)}")

    t_py, r_py = timed(lambda: _fallback.batch_member(table, kinds, init, flat, offsets), args.repeat)
    print(f"python  {t_py * 1e3:9.1f} ms")
    if kernels.BACKEND != "cython":
        print("cython  (extension not built)")
        return
    t_cy, r_cy = timed(lambda: kernels.batch_member(table, kinds, init, flat, offsets), args.repeat)
    assert np.array_equal(np.asarray(r_py), np.asarray(r_cy)), "backends disagree"
    print(f"cython  {t_cy * 1e3:9.1f} ms   speed-up x{t_py / t_cy:.1f}")


if __name__ == "__main__":
    main()
