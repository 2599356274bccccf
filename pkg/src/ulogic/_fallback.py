"""Pure-Python versions of the tabulated automaton kernels."""

import numpy as np

KIND_L, KIND_R, KIND_ACC, KIND_REJ = 0, 1, 2, 3


def run_table(table, kinds, init, codes, p0, budget):
    """Run a tabulated automaton; returns (verdict, final position, steps).

    verdict is 1 for accept, 0 for reject and -1 when the step budget ran out.
    """
    q = init
    p = p0
    steps = 0
    while kinds[q] < 2:
        if steps >= budget:
            return -1, p, steps
        nq = table[q][codes[p]]
        if nq < 0:
            nq = q
        k = kinds[nq]
        if k == KIND_L:
            p += 1
        elif k == KIND_R:
            p -= 1
        q = nq
        steps += 1
    return (1 if kinds[q] == KIND_ACC else 0), p, steps


def batch_member(table, kinds, init, flat_codes, offsets):
    """Membership for many words packed as ``>w<`` code runs in one flat array."""
    table = table.tolist() if hasattr(table, "tolist") else table
    kinds = kinds.tolist() if hasattr(kinds, "tolist") else kinds
    flat = flat_codes.tolist() if hasattr(flat_codes, "tolist") else flat_codes
    nwords = len(offsets) - 1
    out = np.zeros(nwords, dtype=np.uint8)
    nstates = len(kinds)
    for i in range(nwords):
        lo, hi = offsets[i], offsets[i + 1]
        codes = flat[lo:hi]
        budget = nstates * (hi - lo) + 1
        verdict, _, _ = run_table(table, kinds, init, codes, 1, budget)
        if verdict < 0:
            raise RuntimeError("step budget exceeded")
        out[i] = verdict
    return out
