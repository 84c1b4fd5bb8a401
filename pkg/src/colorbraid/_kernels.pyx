# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef tuple _reduce3(tuple a, tuple b, tuple c):
    cdef list out = []
    cdef Py_ssize_t m = 0
    cdef long x
    cdef tuple part
    for part in (a, b, c):
        for x in part:
            if m > 0 and out[m - 1] == -x:
                out.pop()
                m -= 1
            else:
                out.append(x)
                m += 1
    return tuple(out)


cdef tuple _inv(tuple w):
    cdef Py_ssize_t k
    cdef Py_ssize_t m = len(w)
    return tuple([-w[m - 1 - k] for k in range(m)])


def artin_images(int n, letters):
    cdef list img = [(k + 1,) for k in range(n)]
    cdef int i, e
    cdef tuple a, b
    for i, e in letters:
        a = img[i]
        b = img[i + 1]
        if e > 0:
            img[i] = _reduce3(a, b, _inv(a))
            img[i + 1] = a
        else:
            img[i] = b
            img[i + 1] = _reduce3(_inv(b), a, b)
    return tuple(img)


def apply_codes(codes, letters, conj):
    cdef list c = list(codes)
    cdef int i, e
    cdef object x, y
    for i, e in letters:
        x = c[i]
        y = c[i + 1]
        if e > 0:
            c[i] = conj[y][x]
            c[i + 1] = x
        else:
            c[i] = y
            c[i + 1] = conj[x][y]
    return tuple(c)


cdef int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def census_labels(int n, int d, pairs, conj):
    cdef int base = len(pairs)
    cdef long total = 1
    cdef int k, i, t, a, b, na, comps, ra, rb
    for k in range(n):
        total *= base
    cdef int* pa = <int*>malloc(base * sizeof(int))
    cdef int* pb = <int*>malloc(base * sizeof(int))
    cdef int* cj = <int*>malloc(base * base * sizeof(int))
    cdef long* powers = <long*>malloc(n * sizeof(long))
    cdef int* labels = <int*>malloc(total * sizeof(int))
    cdef long* stack = <long*>malloc(total * sizeof(long))
    cdef int* digits = <int*>malloc(n * sizeof(int))
    cdef int* parent = <int*>malloc(d * sizeof(int))
    cdef long code, cur, x, nxt, top
    cdef int next_label = 0
    try:
        for t in range(base):
            pa[t] = pairs[t][0]
            pb[t] = pairs[t][1]
            for k in range(base):
                cj[t * base + k] = conj[t][k]
        powers[0] = 1
        for k in range(1, n):
            powers[k] = powers[k - 1] * base
        for code in range(total):
            for k in range(d):
                parent[k] = k
            comps = d
            x = code
            for k in range(n):
                t = x % base
                x //= base
                ra = _find(parent, pa[t])
                rb = _find(parent, pb[t])
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
            labels[code] = -2 if comps == 1 else -1
        for code in range(total):
            if labels[code] != -2:
                continue
            labels[code] = next_label
            top = 0
            stack[top] = code
            top += 1
            while top > 0:
                top -= 1
                cur = stack[top]
                x = cur
                for k in range(n):
                    digits[k] = x % base
                    x //= base
                for i in range(n - 1):
                    a = digits[i]
                    b = digits[i + 1]
                    na = cj[b * base + a]
                    nxt = cur + (na - a) * powers[i] + (a - b) * powers[i + 1]
                    if labels[nxt] == -2:
                        labels[nxt] = next_label
                        stack[top] = nxt
                        top += 1
            next_label += 1
        return [labels[code] for code in range(total)]
    finally:
        free(pa)
        free(pb)
        free(cj)
        free(powers)
        free(labels)
        free(stack)
        free(digits)
        free(parent)
