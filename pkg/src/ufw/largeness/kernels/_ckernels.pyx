# cython: language_level=3
"""Compiled universal-coloring kernel.

Semantics are identical to the pure-Python module: scan all r-colorings of
the domain in odometer order (position 0 least significant), return the
index of the first coloring with no monochromatic config, or -1 when every
coloring has one.  Configs arrive flattened (``flat`` positions, ``offsets``
of length nconfigs+1).
"""

from libc.stdlib cimport free, malloc


def first_uncovered_coloring_flat(int domain_size, int r, int[::1] flat, int[::1] offsets, bint fix_first):
    cdef int nconfigs = offsets.shape[0] - 1
    if domain_size == 0:
        return -1 if nconfigs > 0 else 0
    if r == 2 and domain_size <= 63:
        return _bitmask_scan(domain_size, flat, offsets, nconfigs, fix_first)
    return _odometer_scan(domain_size, r, flat, offsets, nconfigs, fix_first)


cdef object _bitmask_scan(int domain_size, int[::1] flat, int[::1] offsets, int nconfigs, bint fix_first):
    cdef unsigned long long *masks = <unsigned long long *> malloc(nconfigs * sizeof(unsigned long long))
    cdef unsigned long long m, c, x, total
    cdef int i, j
    cdef long long found = -1
    if masks == NULL:
        raise MemoryError()
    try:
        for i in range(nconfigs):
            m = 0
            for j in range(offsets[i], offsets[i + 1]):
                m |= (<unsigned long long> 1) << flat[j]
            masks[i] = m
        total = (<unsigned long long> 1) << domain_size
        c = 0
        while c < total:
            found = <long long> c
            for i in range(nconfigs):
                m = masks[i]
                x = c & m
                if x == 0 or x == m:
                    found = -1
                    break
            if found >= 0:
                return found
            c += 2 if fix_first else 1
        return -1
    finally:
        free(masks)


cdef object _odometer_scan(int domain_size, int r, int[::1] flat, int[::1] offsets, int nconfigs, bint fix_first):
    cdef int *colors = <int *> malloc(domain_size * sizeof(int))
    cdef int i, j, pos, c0, cap, first_cap
    cdef bint mono, covered
    cdef object index
    if colors == NULL:
        raise MemoryError()
    try:
        for i in range(domain_size):
            colors[i] = 0
        first_cap = 1 if fix_first else r
        while True:
            covered = False
            for i in range(nconfigs):
                c0 = colors[flat[offsets[i]]]
                mono = True
                for j in range(offsets[i] + 1, offsets[i + 1]):
                    if colors[flat[j]] != c0:
                        mono = False
                        break
                if mono:
                    covered = True
                    break
            if not covered:
                index = 0
                for pos in range(domain_size - 1, -1, -1):
                    index = index * r + colors[pos]
                return index
            pos = 0
            while pos < domain_size:
                cap = first_cap if pos == 0 else r
                colors[pos] += 1
                if colors[pos] < cap:
                    break
                colors[pos] = 0
                pos += 1
            if pos == domain_size:
                return -1
    finally:
        free(colors)
