"""First homology of the closed covering surface and the action of liftable braids.

The surface is modeled by a graph: one vertex per sheet (the lifts of a base
point on the boundary) and one edge (i, j) per lift of the loop alpha_i that
starts on sheet j.  Closing up the covering adds discs along

* lifts of alpha_i that close after one turn (sheets fixed by sigma_i),
* lifts of alpha_i^2 through a 2-cycle of sigma_i,
* lifts of a power of alpha_0 ... alpha_{n-1} for each cycle of the boundary
  monodromy (the discs capping the boundary components).

H1 is the cycle lattice of the graph modulo these chains.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from sympy import Matrix, eye, zeros
from sympy.matrices.normalforms import smith_normal_decomp

from .action import is_liftable, step
from .braid import BraidWord, FreeWord, artin_images
from .covering import Coloring, boundary_monodromy, is_connected
from .perm import cycles


class NotLiftable(ValueError):
    pass


class TorsionFound(RuntimeError):
    pass


@dataclass
class SurfaceModel:
    coloring: Coloring
    edge_count: int
    # coordinates: chain (length n*d) -> H1 coordinates via these integer maps
    to_cycle: Matrix          # rows r..: Vinv restricted, maps chains to cycle-lattice coords
    to_h1: Matrix             # maps cycle-lattice coords to H1 coords
    basis: list[tuple[int, ...]]  # basis of H1 as edge chains
    relations: list[tuple[int, ...]]
    projection: tuple[tuple[int, ...], ...] = ()  # to_h1 * to_cycle as plain ints

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def genus(self) -> int:
        return self.rank // 2

    def edge(self, i: int, j: int) -> int:
        return i * self.coloring.degree + (j - 1)

    def coords(self, chain: Sequence[int]) -> tuple[int, ...]:
        """H1 coordinates of a cycle given as an edge chain."""
        return tuple(sum(a * b for a, b in zip(row, chain) if b) for row in self.projection)

    def basis_text(self) -> list[str]:
        out = []
        d = self.coloring.degree
        for b in self.basis:
            terms = []
            for k, c in enumerate(b):
                if c:
                    i, j = divmod(k, d)
                    terms.append(f"{c:+d}*e({i},{j + 1})")
            out.append(" ".join(terms) or "0")
        return out


def lift_chain(c: Coloring, w: Sequence[int], start: int) -> tuple[list[int], int]:
    """Chain of the lift of a free word starting on sheet ``start``, and its end sheet."""
    d = c.degree
    chain = [0] * (c.n * d)
    s = start
    for x in w:
        i = abs(x) - 1
        sigma = c.colors[i]
        if x > 0:
            chain[i * d + s - 1] += 1
            s = sigma(s)
        else:
            s = sigma(s)
            chain[i * d + s - 1] -= 1
    return chain, s


def _relations(c: Coloring) -> list[list[int]]:
    d, n = c.degree, c.n
    rels = []
    for i, t in enumerate(c.colors):
        for j in range(1, d + 1):
            v = [0] * (n * d)
            if t(j) == j:
                v[i * d + j - 1] = 1
                rels.append(v)
            elif j < t(j):
                v[i * d + j - 1] = 1
                v[i * d + t(j) - 1] = 1
                rels.append(v)
    outer = tuple(range(1, n + 1))
    for cyc in cycles(boundary_monodromy(c)):
        chain, end = lift_chain(c, outer * len(cyc), cyc[0])
        assert end == cyc[0]
        rels.append(chain)
    return rels


def _inverse_unimodular(m: Matrix) -> Matrix:
    inv = m.inv()
    assert all(x.is_integer for x in inv)
    return inv


@lru_cache(maxsize=64)
def build_surface(c: Coloring) -> SurfaceModel:
    if not is_connected(c):
        raise ValueError(f"coloring {c.text()} is not connected")
    d, n = c.degree, c.n
    ne = n * d
    boundary = zeros(d, ne)
    for i, t in enumerate(c.colors):
        for j in range(1, d + 1):
            boundary[t(j) - 1, i * d + j - 1] += 1
            boundary[j - 1, i * d + j - 1] -= 1
    s1, _u1, v1 = smith_normal_decomp(boundary)
    r1 = sum(1 for k in range(min(s1.shape)) if s1[k, k] != 0)
    v1inv = _inverse_unimodular(v1)
    to_cycle = v1inv[r1:, :]
    kernel = v1[:, r1:]
    rels = _relations(c)
    rel_mat = Matrix([list(r) for r in rels]).T
    rz = to_cycle * rel_mat
    if rz.rows == 0:
        return SurfaceModel(c, ne, to_cycle, zeros(0, 0), [], [tuple(r) for r in rels])
    s2, u2, _v2 = smith_normal_decomp(rz)
    diag = [s2[k, k] for k in range(min(s2.shape))]
    r2 = sum(1 for x in diag if x != 0)
    torsion = [x for x in diag if x not in (0, 1, -1)]
    if torsion:
        raise TorsionFound(f"torsion {torsion} in H1 of {c.text()}")
    u2inv = _inverse_unimodular(u2)
    to_h1 = u2[r2:, :]
    basis_cols = kernel * u2inv[:, r2:]
    basis = [tuple(int(x) for x in basis_cols[:, k]) for k in range(basis_cols.cols)]
    proj = to_h1 * to_cycle
    projection = tuple(tuple(int(x) for x in proj.row(k)) for k in range(proj.rows))
    return SurfaceModel(c, ne, to_cycle, to_h1, basis, [tuple(r) for r in rels], projection)


@dataclass(frozen=True)
class HomologyAction:
    matrix: tuple[tuple[int, ...], ...]
    word: BraidWord

    @property
    def size(self) -> int:
        return len(self.matrix)

    def as_matrix(self) -> Matrix:
        return Matrix([list(r) for r in self.matrix]) if self.matrix else zeros(0, 0)

    def is_identity(self) -> bool:
        return all(self.matrix[a][b] == (1 if a == b else 0)
                   for a in range(self.size) for b in range(self.size))

    def det(self) -> int:
        return int(self.as_matrix().det()) if self.matrix else 1

    def to_json(self) -> dict:
        return {"rank": self.size, "matrix": [list(r) for r in self.matrix]}


def _image_chain(c: Coloring, images: Sequence[FreeWord], chain: Sequence[int]) -> list[int]:
    d = c.degree
    out = [0] * len(chain)
    for k, coef in enumerate(chain):
        if not coef:
            continue
        i, j0 = divmod(k, d)
        piece, _ = lift_chain(c, images[i], j0 + 1)
        for m, x in enumerate(piece):
            out[m] += coef * x
    return out


def _add(*terms: tuple[int, list[int]]) -> list[int]:
    out = [0] * len(terms[0][1])
    for sign, v in terms:
        for k, x in enumerate(v):
            if x:
                out[k] += sign * x
    return out


def lifted_images(w: BraidWord, c: Coloring) -> list[list[list[int]]]:
    """Edge chains of the lifts of the Artin images of the alpha_k.

    ``out[k][s - 1]`` is the chain of the lift of w(alpha_k) that starts on
    sheet s.  The chains are updated letter by letter; the end sheet of each
    lifted image is read off the running coloring, so the free-group images
    are never expanded.
    """
    if w.strands != c.n:
        raise ValueError("strand mismatch")
    d, n = c.degree, c.n
    size = n * d
    lifts = [[[1 if m == k * d + s else 0 for m in range(size)] for s in range(d)]
             for k in range(n)]
    colors = list(c.colors)
    for i, e in w.letters:
        x, y = colors[i], colors[i + 1]
        li, lj = lifts[i], lifts[i + 1]
        if e > 0:
            # x y x^-1, then x
            lifts[i] = [_add((1, li[s - 1]), (1, lj[x(s) - 1]), (-1, li[x(y(x(s))) - 1]))
                        for s in range(1, d + 1)]
            lifts[i + 1] = li
        else:
            # y, then y^-1 x y
            lifts[i] = lj
            lifts[i + 1] = [_add((-1, lj[y(s) - 1]), (1, li[y(s) - 1]), (1, lj[x(y(s)) - 1]))
                            for s in range(1, d + 1)]
        colors = step(colors, i, e)
    return lifts


def homology_action(w: BraidWord, c: Coloring) -> HomologyAction:
    if not is_liftable(w, c):
        raise NotLiftable(f"{w.text()} is not liftable over {c.text()}")
    model = build_surface(c)
    d = c.degree
    lifts = lifted_images(w, c)
    cols = []
    for b in model.basis:
        terms = [(coef, lifts[k // d][k % d]) for k, coef in enumerate(b) if coef]
        cols.append(model.coords(_add(*terms)))
    size = model.rank
    rows = tuple(tuple(cols[b][a] for b in range(size)) for a in range(size))
    return HomologyAction(rows, w)


def homology_action_from_images(w: BraidWord, c: Coloring) -> HomologyAction:
    """The same matrix computed by lifting the expanded Artin images."""
    if not is_liftable(w, c):
        raise NotLiftable(f"{w.text()} is not liftable over {c.text()}")
    model = build_surface(c)
    images = artin_images(w)
    cols = [model.coords(_image_chain(c, images, b)) for b in model.basis]
    size = model.rank
    rows = tuple(tuple(cols[b][a] for b in range(size)) for a in range(size))
    return HomologyAction(rows, w)


def is_homology_trivial(w: BraidWord, c: Coloring) -> bool:
    return homology_action(w, c).is_identity()


def deviation_rank(h: HomologyAction) -> int:
    m = h.as_matrix()
    return (m - eye(h.size)).rank() if h.size else 0


def is_unipotent(h: HomologyAction) -> bool:
    if not h.size:
        return True
    m = h.as_matrix() - eye(h.size)
    return (m ** h.size).is_zero_matrix


# ---------------------------------------------------------------- fundamental groupoid

GroupoidWord = tuple[tuple[tuple[int, int], int], ...]


def _groupoid_generators(c: Coloring) -> dict[tuple[int, int], GroupoidWord]:
    """Edge (i, j) in terms of free generators once the branch discs are filled in.

    A sheet fixed by sigma_i makes (i, j) trivial; a 2-cycle {j, k} makes
    (i, k) the inverse of (i, j), with j < k kept as the generator.
    """
    out: dict[tuple[int, int], GroupoidWord] = {}
    for i, sigma in enumerate(c.colors):
        for j in range(1, c.degree + 1):
            k = sigma(j)
            if k == j:
                out[(i, j)] = ()
            elif j < k:
                out[(i, j)] = (((i, j), 1),)
                out[(i, k)] = (((i, j), -1),)
    return out


def _groupoid_lift(c: Coloring, w: FreeWord, start: int, gens) -> GroupoidWord:
    out: list = []
    s = start
    for x in w:
        i = abs(x) - 1
        sigma = c.colors[i]
        if x > 0:
            piece = gens[(i, s)]
            s = sigma(s)
        else:
            s = sigma(s)
            piece = tuple((g, -e) for g, e in reversed(gens[(i, s)]))
        for g, e in piece:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
    return tuple(out)


def groupoid_defect(w: BraidWord, c: Coloring) -> list[tuple[int, int]]:
    """Generators of the fundamental groupoid of the branched cover (one base point per sheet) moved by w.

    The groupoid is that of the cover of the disk with its boundary kept, so
    boundary twists are seen.  Insertions of M and P relators never change it,
    hence a nonempty result shows that w cannot be reduced to the empty braid
    by M, P and braid isotopy alone.
    """
    if not is_liftable(w, c):
        raise NotLiftable(f"{w.text()} is not liftable over {c.text()}")
    gens = _groupoid_generators(c)
    images = artin_images(w)
    moved = []
    for (i, j), v in sorted(gens.items()):
        if v != (((i, j), 1),):
            continue
        if _groupoid_lift(c, images[i], j, gens) != v:
            moved.append((i, j))
    return moved
