# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the tabulated automaton kernels."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _run(const int[:, ::1] table, const signed char[::1] kinds, int init,
                     const int[::1] codes, Py_ssize_t base, int p0, long budget,
                     int* pos, long* nsteps) nogil:
    cdef int q = init
    cdef int p = p0
    cdef long steps = 0
    cdef int nq
    cdef signed char k
    while kinds[q] < 2:
        if steps >= budget:
            pos[0] = p
            nsteps[0] = steps
            return -1
        nq = table[q, codes[base + p]]
        if nq < 0:
            nq = q
        k = kinds[nq]
        if k == 0:
            p += 1
        elif k == 1:
            p -= 1
        q = nq
        steps += 1
    pos[0] = p
    nsteps[0] = steps
    return 1 if kinds[q] == 2 else 0


def run_table(table, kinds, int init, codes, int p0, long budget):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef signed char[::1] kd = np.ascontiguousarray(kinds, dtype=np.int8)
    cdef int[::1] c = np.ascontiguousarray(codes, dtype=np.int32)
    cdef int pos = 0
    cdef long steps = 0
    cdef int verdict = _run(t, kd, init, c, 0, p0, budget, &pos, &steps)
    return verdict, pos, steps


def batch_member(table, kinds, int init, flat_codes, offsets):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef signed char[::1] kd = np.ascontiguousarray(kinds, dtype=np.int8)
    cdef int[::1] flat = np.ascontiguousarray(flat_codes, dtype=np.int32)
    cdef long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef Py_ssize_t nwords = off.shape[0] - 1
    out = np.zeros(nwords, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t i
    cdef int pos = 0
    cdef long steps = 0
    cdef int verdict
    cdef long nstates = kd.shape[0]
    cdef bint bad = False
    with nogil:
        for i in range(nwords):
            verdict = _run(t, kd, init, flat, off[i], 1,
                           nstates * (off[i + 1] - off[i]) + 1, &pos, &steps)
            if verdict < 0:
                bad = True
                break
            o[i] = verdict
    if bad:
        raise RuntimeError("step budget exceeded")
    return out
