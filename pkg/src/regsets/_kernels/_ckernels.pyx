# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled counting kernels; mirrors _pykernels exactly."""

import numpy as np

cimport numpy as cnp


def subset_neighbor_counts(const cnp.int32_t[:, ::1] table, const cnp.int32_t[::1] s_ids,
                           const cnp.uint8_t[::1] member_mask):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t ns = s_ids.shape[0]
    out = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] counts = out
    cdef Py_ssize_t si, v
    cdef cnp.int32_t s
    for si in range(ns):
        s = s_ids[si]
        for v in range(n):
            if member_mask[table[s, v]]:
                counts[v] += 1
    return out


def find_regular_mask(const cnp.int32_t[:, ::1] table, const cnp.uint8_t[::1] member_mask,
                      const cnp.int32_t[::1] orbit_offsets, const cnp.int32_t[::1] orbit_elems,
                      long a, long b, long required_size):
    cdef Py_ssize_t n = table.shape[0]
    cdef int num_orbits = <int> (orbit_offsets.shape[0] - 1)
    cdef unsigned long long total = 1ULL << num_orbits
    cdef unsigned long long mask
    cdef long size, count, expected
    cdef int k
    cdef Py_ssize_t v, j, nsel
    sel_buf = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] selected = sel_buf
    cdef bint ok

    for mask in range(total):
        size = 0
        for k in range(num_orbits):
            if mask & (1ULL << k):
                size += orbit_offsets[k + 1] - orbit_offsets[k]
        if size != required_size:
            continue
        nsel = 0
        for k in range(num_orbits):
            if mask & (1ULL << k):
                for j in range(orbit_offsets[k], orbit_offsets[k + 1]):
                    selected[nsel] = orbit_elems[j]
                    nsel += 1
        ok = True
        for v in range(n):
            count = 0
            for j in range(nsel):
                if member_mask[table[selected[j], v]]:
                    count += 1
            expected = a if member_mask[v] else b
            if count != expected:
                ok = False
                break
        if ok:
            return <long long> mask
    return -1
