"""Reference implementations of the hot loops.

The compiled module ``_kernels`` exposes the same three functions; both are
exercised against each other in the test suite.
"""
from __future__ import annotations


def _reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inv(w):
    return tuple(-x for x in reversed(w))


def artin_images(n, letters):
    img = [(k + 1,) for k in range(n)]
    for i, e in letters:
        a = img[i]
        b = img[i + 1]
        if e > 0:
            img[i] = _reduce(a + b + _inv(a))
            img[i + 1] = a
        else:
            img[i] = b
            img[i + 1] = _reduce(_inv(b) + a + b)
    return tuple(img)


def apply_codes(codes, letters, conj):
    """Act on a coloring given as transposition codes; ``conj[t][u]`` is u t u."""
    c = list(codes)
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


def census_labels(n, d, pairs, conj):
    """Orbit label of every length-n code sequence under the full braid group.

    ``pairs[t]`` is the (a, b) label pair (0-based) of code t.  Sequences whose
    transpositions do not generate a transitive group get label -1.  Codes are
    read little-endian in base ``len(pairs)``.  Labels are assigned in order of
    the smallest member of each orbit.
    """
    base = len(pairs)
    total = base ** n
    powers = [base ** k for k in range(n)]
    labels = [-2] * total
    for code in range(total):
        if not _transitive(code, n, d, base, pairs):
            labels[code] = -1
    next_label = 0
    for code in range(total):
        if labels[code] != -2:
            continue
        labels[code] = next_label
        stack = [code]
        while stack:
            cur = stack.pop()
            digits = []
            x = cur
            for _ in range(n):
                digits.append(x % base)
                x //= base
            for i in range(n - 1):
                a = digits[i]
                b = digits[i + 1]
                na = conj[b][a]
                nb = a
                nxt = cur + (na - a) * powers[i] + (nb - b) * powers[i + 1]
                if labels[nxt] == -2:
                    labels[nxt] = next_label
                    stack.append(nxt)
        next_label += 1
    return labels


def _transitive(code, n, d, base, pairs):
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = d
    for _ in range(n):
        a, b = pairs[code % base]
        code //= base
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1
