"""Cohomology of line bundles on P2 x P2 and of the bundle E given as the
middle homology of the line-bundle complex

    O(a+2, b-1) --(x^2, y^2, z^2, f)^T--> O(a+2, b+1)^3 + O(a+3, b)
                --(a^2, b^2, c^2, f)--> O(a+4, b+1)

with f = ax + by + cz.  Cohomology of O(d) on P2 lives in degree 0
(monomials of degree d) and degree 2 ("inverse monomials": exponent
triples, all <= -1, summing to d).  Multiplying an inverse monomial by a
monomial adds exponents and gives zero once an exponent becomes >= 0.

The hypercohomology spectral sequence of the complex starts from
E1^{p,q} = H^q(C^p), p in {-1,0,1}, q in {0,2,4}.  Its d2 hits an odd row,
which is zero, and d3 leaves the three columns, so
h^k(E) = sum over p+q=k of dim(ker d1 / im d1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .bipoly import (
    BiDegree,
    BiPoly,
    F_POLY,
    Monomial,
    graded_keys,
    h0_line,
    parse,
    unpack,
)
from .gf2core import BitMatrix, kernel_matrix, rank, row_space_complement

PHI2 = tuple(parse(s) for s in ("x^2", "y^2", "z^2")) + (F_POLY,)
PHI1 = tuple(parse(s) for s in ("a^2", "b^2", "c^2")) + (F_POLY,)

BLOCKS = ((0, 0), (0, 2), (2, 0), (2, 2))


def _h_p2(i: int, d: int) -> int:
    if i == 0:
        return (d + 1) * (d + 2) // 2 if d >= 0 else 0
    if i == 2:
        return (-d - 1) * (-d - 2) // 2 if d <= -3 else 0
    return 0


def h_line(i: int, a: int, b: int) -> int:
    """dim H^i(P2 x P2, O(a, b)) by Kuenneth."""
    if not 0 <= i <= 4:
        raise ValueError("cohomological degree must lie in 0..4")
    return sum(_h_p2(p, a) * _h_p2(i - p, b) for p in (0, 1, 2) if 0 <= i - p <= 2)


@lru_cache(maxsize=None)
def p2_basis(i: int, d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples spanning H^i(P2, O(d)) for i in {0, 2}."""
    if i == 0:
        if d < 0:
            return ()
        return tuple((d - j - k, j, k) for k in range(d + 1) for j in range(d - k + 1))
    if i == 2:
        if d > -3:
            return ()
        n = -d  # exponents -e_i with e_i >= 1 and sum e_i = n
        return tuple((-(n - j - k), -j, -k) for k in range(1, n) for j in range(1, n - k) if n - j - k >= 1)
    raise ValueError("H^1 of a line bundle on P2 vanishes; only i in {0, 2}")


@lru_cache(maxsize=None)
def kuenneth_basis(block: tuple[int, int], a: int, b: int):
    """Basis of H^iL(O(a)) (x) H^ih(O(b)) as pairs of exponent triples,
    with a lookup dict."""
    iL, ih = block
    basis = tuple(product(p2_basis(iL, a), p2_basis(ih, b)))
    return basis, {e: k for k, e in enumerate(basis)}


def _valid(i: int, e: tuple[int, int, int]) -> bool:
    return all(v >= 0 for v in e) if i == 0 else all(v <= -1 for v in e)


def _poly_monomials(g: BiPoly) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for k in g.keys:
        e = unpack(k)
        out.append((e[:3], e[3:]))
    return out


def _block_entries(g: BiPoly, block, src: tuple[int, int], tgt: tuple[int, int], row_off=0, col_off=0):
    iL, ih = block
    sb, _ = kuenneth_basis(block, *src)
    _, tidx = kuenneth_basis(block, *tgt)
    mons = _poly_monomials(g)
    for r, (u, v) in enumerate(sb):
        for mu, mv in mons:
            nu = (u[0] + mu[0], u[1] + mu[1], u[2] + mu[2])
            nv = (v[0] + mv[0], v[1] + mv[1], v[2] + mv[2])
            if _valid(iL, nu) and _valid(ih, nv):
                yield row_off + r, col_off + tidx[(nu, nv)]


def _as_block(i) -> tuple[int, int]:
    if isinstance(i, tuple):
        return i
    if i == 0:
        return (0, 0)
    if i == 4:
        return (2, 2)
    raise ValueError("H^2 has two Kuenneth blocks; pass (0, 2) or (2, 0)")


def mult_matrix(g: BiPoly, i, source, target) -> BitMatrix:
    """Multiplication by g from the Kuenneth block ``i`` of O(source) to that
    of O(target).  Row r is the image of the r-th source basis element."""
    block = _as_block(i)
    src, tgt = tuple(source), tuple(target)
    if g and g.bidegree != BiDegree(tgt[0] - src[0], tgt[1] - src[1]):
        raise ValueError(f"{g} does not have bidegree {tgt[0] - src[0], tgt[1] - src[1]}")
    ns = len(kuenneth_basis(block, *src)[0])
    nt = len(kuenneth_basis(block, *tgt)[0])
    return BitMatrix.from_entries(ns, nt, _block_entries(g, block, src, tgt))


# ----------------------------------------------------------- the complex


def monad_terms(a: int, b: int):
    left = (a + 2, b - 1)
    middle = ((a + 2, b + 1),) * 3 + ((a + 3, b),)
    right = (a + 4, b + 1)
    return left, middle, right


def _block_complex(block, a: int, b: int) -> tuple[BitMatrix, BitMatrix, int, int, int]:
    left, middle, right = monad_terms(a, b)
    n_left = len(kuenneth_basis(block, *left)[0])
    sizes = [len(kuenneth_basis(block, *m)[0]) for m in middle]
    offs = np.cumsum([0] + sizes).tolist()
    n_mid = offs[-1]
    n_right = len(kuenneth_basis(block, *right)[0])
    e2 = []
    for k in range(4):
        e2.extend(_block_entries(PHI2[k], block, left, middle[k], 0, offs[k]))
    e1 = []
    for k in range(4):
        e1.extend(_block_entries(PHI1[k], block, middle[k], right, offs[k], 0))
    d_left = BitMatrix.from_entries(n_left, n_mid, e2)
    d_mid = BitMatrix.from_entries(n_mid, n_right, e1)
    return d_left, d_mid, n_left, n_mid, n_right


def monad_cohomology_dims(a: int, b: int) -> tuple[int, int, int, int, int]:
    """(h^0, ..., h^4) of E(a, b)."""
    h = [0] * 7  # index k + 1 for k = -1 .. 5
    for block in BLOCKS:
        q = block[0] + block[1]
        d_left, d_mid, n_left, n_mid, n_right = _block_complex(block, a, b)
        r_left = rank(d_left)
        r_mid = rank(d_mid)
        e_m1 = n_left - r_left
        e_0 = n_mid - r_mid - r_left
        e_1 = n_right - r_mid
        h[q - 1 + 1] += e_m1
        h[q + 1] += e_0
        h[q + 1 + 1] += e_1
    if h[0] or h[6]:
        raise ArithmeticError(f"hypercohomology outside degrees 0..4 at ({a},{b})")
    return tuple(h[1:6])


def odd_rows_vanish(a: int, b: int) -> bool:
    """The E1 rows q = 1, 3 are zero: no H^1 or H^3 for any term."""
    left, middle, right = monad_terms(a, b)
    return all(h_line(q, *t) == 0 for q in (1, 3) for t in (left, right) + middle)


def monad_composite_vanishes(a: int, b: int) -> bool:
    for block in BLOCKS:
        d_left, d_mid, *_ = _block_complex(block, a, b)
        if d_left.rows and d_mid.cols and np.any((d_left @ d_mid).words):
            return False
    return True


def cohomology_table(amin: int, amax: int, bmin: int, bmax: int) -> dict[tuple[int, int], tuple[int, ...]]:
    return {(a, b): monad_cohomology_dims(a, b) for a in range(amin, amax + 1) for b in range(bmin, bmax + 1)}


# ------------------------------------------------------------- sections


@dataclass(frozen=True)
class SectionVec:
    """A lift (v1, v2, v3, v4) of a section of E(m, n) to the middle term,
    defined modulo the image of (x^2, y^2, z^2, f)^T."""

    v: tuple[BiPoly, BiPoly, BiPoly, BiPoly]
    twist: tuple[int, int]

    def is_valid(self) -> bool:
        return not sum((p * q for p, q in zip(PHI1, self.v)), BiPoly())

    def is_zero_section(self) -> bool:
        """True when v lies in the image of the left map."""
        m, n = self.twist
        g_deg = (m + 2, n - 1)
        keys = graded_keys(*g_deg)
        if not keys:
            return not any(self.v)
        # solve g * PHI2 = v for g of bidegree (m+2, n-1)
        cols = []
        for k in keys:
            cols.append([PHI2[i].mul_key(k) for i in range(4)])
        target = self.v
        coords = sorted({t for i in range(4) for t in target[i].term_set} | {t for c in cols for i in range(4) for t in c[i].term_set})
        idx = {(i, t): j for j, (i, t) in enumerate((i, t) for i in range(4) for t in coords)}
        M = BitMatrix.from_entries(len(keys), len(idx), ((r, idx[(i, t)]) for r, c in enumerate(cols) for i in range(4) for t in c[i].term_set))
        tv = BitMatrix.from_entries(1, len(idx), ((0, idx[(i, t)]) for i in range(4) for t in target[i].term_set))
        return rank(M.vstack(tv)) == rank(M)

    def __add__(self, other: "SectionVec") -> "SectionVec":
        if self.twist != other.twist:
            raise ValueError("sections of different twists")
        return SectionVec(tuple(p + q for p, q in zip(self.v, other.v)), self.twist)

    def to_json(self) -> dict:
        return {"twist": list(self.twist), "v": [str(p) for p in self.v]}


def section_space(m: int, n: int) -> list[SectionVec]:
    """A basis of H^0 E(m, n) as lifts to the middle term."""
    block = (0, 0)
    d_left, d_mid, *_ = _block_complex(block, m, n)
    K = kernel_matrix(d_mid.transpose())  # rows v with v * d_mid = 0
    pick = row_space_complement(d_left, K)
    _, middle, _ = monad_terms(m, n)
    bases = [kuenneth_basis(block, *d)[0] for d in middle]
    out = []
    for r in pick:
        parts: list[list[Monomial]] = [[] for _ in range(4)]
        for c in K.row_support(r):
            k = 0
            while c >= len(bases[k]):
                c -= len(bases[k])
                k += 1
            u, v = bases[k][c]
            parts[k].append(Monomial(tuple(u) + tuple(v)))
        polys = tuple(BiPoly.from_monomials(parts[k], middle[k]) for k in range(4))
        out.append(SectionVec(polys, (m, n)))
    return out


def random_section(m: int, n: int, rng) -> SectionVec:
    """A uniformly random nonzero element of H^0 E(m, n)."""
    basis = section_space(m, n)
    if not basis:
        raise ValueError(f"H^0 E({m},{n}) = 0")
    while True:
        picks = [v for v in basis if rng.getrandbits(1)]
        if picks:
            out = picks[0]
            for v in picks[1:]:
                out = out + v
            return out


def h0E(a: int, b: int) -> int:
    return monad_cohomology_dims(a, b)[0]


def hf_ideal_oracle(m: int, n: int, a: int, b: int) -> int:
    """dim of the degree-(a, b) part of the ideal of the zero scheme of a
    section of E(m, n), from 0 -> O -> E(m,n) -> I_Z(2m+3, 2n+3) -> 0."""
    return h0E(a - m - 3, b - n - 3) - h0_line(a - 2 * m - 3, b - 2 * n - 3)


# ----------------------------------------------------- lines in P2_L x {x}


def _gf2_points() -> list[tuple[int, int, int]]:
    return [p for p in product((0, 1), repeat=3) if any(p)]


def _binary_mult(coeffs: Sequence[int], d_src: int) -> list[list[int]]:
    """Rows: images of s^i t^(d_src - i) under multiplication by the binary
    form sum coeffs[j] s^j t^(deg - j), as index lists into degree d_src+deg."""
    deg = len(coeffs) - 1
    rows = []
    for i in range(d_src + 1):
        rows.append([i + j for j, c in enumerate(coeffs) if c % 2])
    return rows


def _h0_restricted(point, line_pts, twist: int) -> int:
    """h^0 of E restricted to the line through line_pts, times {point},
    twisted by O(twist); valid for twist >= -3."""
    P, Q = line_pts
    x0 = point
    # squares of the linear forms a, b, c along s P + t Q: P_i s^2 + Q_i t^2
    sq = [(Q[i], 0, P[i]) for i in range(3)]  # coefficient of t^2, st, s^2
    fl = (sum(x0[i] * Q[i] for i in range(3)) % 2, sum(x0[i] * P[i] for i in range(3)) % 2)
    # middle: O(2+k)^3 + O(3+k) -> O(4+k) via (sq0, sq1, sq2, fl)
    k = twist
    degs = [2 + k] * 3 + [3 + k]
    target = 4 + k
    entries = []
    off = 0
    for j in range(4):
        d = degs[j]
        if d < 0:
            continue
        coeffs = sq[j] if j < 3 else fl
        for r, cols in enumerate(_binary_mult(coeffs, d)):
            for c in cols:
                entries.append((off + r, c))
        off += d + 1
    n_mid = off
    M = BitMatrix.from_entries(n_mid, max(target + 1, 0), entries)
    ker = n_mid - rank(M)
    return ker - max(2 + k + 1, 0)


def _line_points(form: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    return [p for p in _gf2_points() if sum(f * q for f, q in zip(form, p)) % 2 == 0]


def splitting_type(point, line_form) -> tuple[int, int]:
    """Splitting type (d1 >= d2) of E on the line {line_form = 0} x {point}."""
    point = tuple(int(v) % 2 for v in point)
    form = tuple(int(v) % 2 for v in line_form)
    if not any(point) or not any(form):
        raise ValueError("point and line form must be nonzero")
    pts = _line_points(form)
    P, Q = pts[0], pts[1]
    h_m2 = _h0_restricted(point, (P, Q), -2)
    h_m1 = _h0_restricted(point, (P, Q), -1)
    d1 = h_m2 + 1
    d2 = 3 - d1
    # consistency: h^0 of O(d1-1) + O(d2-1)
    if h_m1 != max(d1, 0) + max(d2, 0):
        raise ArithmeticError("restricted cohomology is not that of a split rank-2 bundle of degree 3")
    return (d1, d2)


def linear_form(coeffs, names=("a", "b", "c")) -> BiPoly:
    return sum((BiPoly.var(n) for n, c in zip(names, coeffs) if c % 2), BiPoly())


def jumping_line(point) -> BiPoly:
    """The unique GF(2)-rational line l with E on l x {point} of type (3, 0)."""
    hits = [form for form in _gf2_points() if splitting_type(point, form) == (3, 0)]
    if len(hits) != 1:
        raise ArithmeticError(f"expected one jumping line through {point}, found {len(hits)}")
    return linear_form(hits[0])
