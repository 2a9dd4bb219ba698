"""Buchberger's algorithm over GF(2) in the fixed ring GF(2)[a,b,c,x,y,z]
with degrevlex a > b > c > x > y > z, and the ideal operations built on it.

Polynomials inside the engine are tuples of packed monomial keys (see
``bipoly``) sorted leading term first.

Colon ideals and intersections never leave the six-variable ring.  The
Hilbert series of the answer is known in advance from Gröbner bases of
sums of ideals:

    HS(R/(I ∩ J)) = HS(R/I) + HS(R/J) - HS(R/(I + J))
    t^deg(g) HS(R/(I : g)) = HS(R/I) - HS(R/(I + (g)))

The answer is then assembled bidegree by bidegree from kernels of
normal-form maps, and assembly stops once its Hilbert series matches.
Saturation by a variable uses the Bayer property of degrevlex (for a
homogeneous ideal and the last variable z, I : z^inf is obtained by
dividing the Gröbner basis by powers of z).  Other variables are first
swapped with z.
"""

from __future__ import annotations

import heapq
import math
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .bipoly import (
    BiPoly,
    DEG_SHIFT,
    EXP_MASK,
    H_VARS,
    L_VARS,
    NVARS,
    ONE_KEY,
    VARS,
    _COMP,
    _GUARD,
    as_bidegree,
    graded_keys,
    h0_line,
    key_bidegree,
    key_coprime,
    key_degree,
    key_divides,
    key_lcm,
    unpack,
    var_key,
)
from .gf2core import BitMatrix, echelon, kernel_matrix

INFINITE_CODIM = math.inf


# ------------------------------------------------------------------ engine


class _Engine:
    """Buchberger state: basis, leading monomials, sugar, and pair queue."""

    def __init__(self):
        self.polys: list[tuple[int, ...]] = []
        self.lms: list[int] = []
        self.sugar: list[int] = []
        self.redundant: list[bool] = []
        self.pairs: list[tuple[int, int, int, int]] = []
        self.unit = False
        self._div_cache: dict[int, int] = {}
        self._active: list[tuple[int, int]] | None = None

    def _divisor(self, t: int) -> int:
        hit = self._div_cache.get(t)
        if hit is not None:
            return hit
        tl = t & EXP_MASK
        if self._active is None:
            # non-redundant leading monomials, shortest polynomial first
            self._active = sorted(
                (((m & EXP_MASK) | _GUARD, i) for i, m in enumerate(self.lms) if not self.redundant[i]),
                key=lambda gi: len(self.polys[gi[1]]),
            )
        best = -1
        for g, i in self._active:
            if (g - tl) & _GUARD == _GUARD:
                best = i
                break
        self._div_cache[t] = best
        return best

    def reduce(self, terms: Iterable[int], sugar: int = 0) -> tuple[list[int], int]:
        """Full reduction; returns (terms leading first, sugar)."""
        live = set(terms)
        heap = [-t for t in live]
        heapq.heapify(heap)
        out: list[int] = []
        polys, lms, sug = self.polys, self.lms, self.sugar
        while heap:
            t = -heapq.heappop(heap)
            if t not in live:
                continue
            d = self._divisor(t)
            if d < 0:
                live.discard(t)
                out.append(t)
                continue
            shift = t - lms[d]
            s = sug[d] + ((shift + _COMP) >> DEG_SHIFT)
            if s > sugar:
                sugar = s
            for u in polys[d]:
                u += shift
                if u in live:
                    live.remove(u)
                else:
                    live.add(u)
                    heapq.heappush(heap, -u)
        return out, sugar

    def insert(self, poly: Sequence[int], sugar: int) -> None:
        """Add a reduced nonzero polynomial and update the pair queue with
        the Gebauer-Moeller criteria."""
        lm = poly[0]
        new = len(self.polys)
        if lm == ONE_KEY:
            self.unit = True
        cand = [(key_lcm(lm, self.lms[j]), j) for j in range(len(self.polys)) if not self.redundant[j]]
        keep = []
        for idx, (l, j) in enumerate(cand):
            dominated = False
            for idx2, (l2, _) in enumerate(cand):
                if idx2 != idx and key_divides(l2, l) and (l2 != l or idx2 < idx):
                    dominated = True
                    break
            if not dominated:
                keep.append((l, j))
        old = []
        for pr in self.pairs:
            _, l, i, j = pr
            if key_divides(lm, l) and key_lcm(lm, self.lms[i]) != l and key_lcm(lm, self.lms[j]) != l:
                continue
            old.append(pr)
        for l, j in keep:
            if key_coprime(lm, self.lms[j]):
                continue
            ldeg = l >> DEG_SHIFT
            s = max(sugar + ldeg - (lm >> DEG_SHIFT), self.sugar[j] + ldeg - (self.lms[j] >> DEG_SHIFT))
            old.append((s, l, j, new))
        heapq.heapify(old)
        self.pairs = old
        for j in range(len(self.polys)):
            if not self.redundant[j] and key_divides(lm, self.lms[j]):
                self.redundant[j] = True
        self.polys.append(tuple(poly))
        self.lms.append(lm)
        self.sugar.append(sugar)
        self.redundant.append(False)
        self._active = None
        self._div_cache.clear()

    def add(self, terms: Iterable[int]) -> None:
        terms = list(terms)
        if not terms or self.unit:
            return
        s0 = max(t >> DEG_SHIFT for t in terms)
        r, s = self.reduce(terms, s0)
        if r:
            self.insert(r, s)

    def run(self) -> None:
        while self.pairs and not self.unit:
            s, l, i, j = heapq.heappop(self.pairs)
            qi = l - self.lms[i]
            qj = l - self.lms[j]
            spoly = {t + qi for t in self.polys[i]}
            spoly.symmetric_difference_update(t + qj for t in self.polys[j])
            if not spoly:
                continue
            r, sr = self.reduce(spoly, s)
            if r:
                self.insert(r, sr)

    def reduced_basis(self) -> list[tuple[int, ...]]:
        if self.unit:
            return [(ONE_KEY,)]
        idx = [i for i in range(len(self.polys)) if not self.redundant[i]]
        # equal leading monomials: keep the first
        seen: set[int] = set()
        minimal = []
        for i in idx:
            if self.lms[i] in seen:
                continue
            seen.add(self.lms[i])
            minimal.append(i)
        tmp = _Engine()
        tmp.polys = [self.polys[i] for i in minimal]
        tmp.lms = [self.lms[i] for i in minimal]
        tmp.sugar = [0] * len(minimal)
        tmp.redundant = [False] * len(minimal)
        out = []
        for p in tmp.polys:
            tail, _ = tmp.reduce(p[1:])
            out.append((p[0],) + tuple(tail))
        out.sort(key=lambda p: p[0])
        return out


def _buchberger(gens: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    eng = _Engine()
    gens = sorted((tuple(sorted(g, reverse=True)) for g in gens if g), key=lambda p: (p[0] >> DEG_SHIFT, len(p)))
    for g in gens:
        eng.add(g)
        if eng.unit:
            break
    eng.run()
    return eng.reduced_basis()


# ------------------------------------------------------------ Gröbner basis


class GroebnerBasis:
    """A reduced Gröbner basis with cached normal-form data."""

    def __init__(self, polys: Sequence[Sequence[int]]):
        self.polys: tuple[tuple[int, ...], ...] = tuple(tuple(p) for p in polys)
        self.lms: tuple[int, ...] = tuple(p[0] for p in self.polys)
        self._eng = _Engine()
        self._eng.polys = list(self.polys)
        self._eng.lms = list(self.lms)
        self._eng.sugar = [0] * len(self.polys)
        self._eng.redundant = [False] * len(self.polys)
        self._nf_tables: dict[tuple[int, int], dict[int, frozenset]] = {}
        self._numerator: Optional[dict] = None

    @property
    def is_unit(self) -> bool:
        return self.lms == (ONE_KEY,)

    @property
    def is_zero(self) -> bool:
        return not self.polys

    def __len__(self) -> int:
        return len(self.polys)

    def elements(self) -> list[BiPoly]:
        return [BiPoly(p) for p in self.polys]

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [unpack(m) for m in self.lms]

    def is_standard(self, key: int) -> bool:
        tl = key & EXP_MASK
        for m in self.lms:
            if (((m & EXP_MASK) | _GUARD) - tl) & _GUARD == _GUARD:
                return False
        return True

    def reduce_keys(self, terms: Iterable[int]) -> list[int]:
        return self._eng.reduce(terms)[0]

    def normal_form(self, p: BiPoly) -> BiPoly:
        if not p:
            return p
        return BiPoly(self.reduce_keys(p.term_set))

    def standard_keys(self, dL: int, dh: int) -> list[int]:
        return [k for k in graded_keys(dL, dh) if self.is_standard(k)]

    def nf_table(self, dL: int, dh: int) -> dict[int, frozenset]:
        """Normal form of every monomial of bidegree (dL, dh).

        Only valid for bihomogeneous bases, where reduction stays inside
        one bidegree.  Monomials are processed in increasing order so each
        reduction step reuses smaller, already known normal forms.
        """
        tab = self._nf_tables.get((dL, dh))
        if tab is not None:
            return tab
        tab = {}
        for k in reversed(graded_keys(dL, dh)):
            d = self._eng._divisor(k)
            if d < 0:
                tab[k] = frozenset((k,))
                continue
            shift = k - self.lms[d]
            acc: set[int] = set()
            for u in self.polys[d][1:]:
                acc.symmetric_difference_update(tab[u + shift])
            tab[k] = frozenset(acc)
        self._nf_tables[(dL, dh)] = tab
        return tab

    def nf_bihomogeneous(self, terms: Iterable[int], dL: int, dh: int) -> set[int]:
        tab = self.nf_table(dL, dh)
        acc: set[int] = set()
        for t in terms:
            acc.symmetric_difference_update(tab[t])
        return acc

    def numerator(self) -> dict[tuple[int, int], int]:
        """Numerator of the bigraded Hilbert series of R/I over (1-s)^3 (1-t)^3."""
        if self._numerator is None:
            self._numerator = hilbert_numerator_monomial([unpack(m) for m in self.lms])
        return self._numerator

    def hilbert_function(self, dL: int, dh: int) -> int:
        if dL < 0 or dh < 0:
            return 0
        return sum(1 for k in graded_keys(dL, dh) if self.is_standard(k))

    def spolys_reduce_to_zero(self) -> bool:
        for i, j in combinations(range(len(self.polys)), 2):
            l = key_lcm(self.lms[i], self.lms[j])
            qi = l - self.lms[i]
            qj = l - self.lms[j]
            s = {t + qi for t in self.polys[i]} ^ {t + qj for t in self.polys[j]}
            if self.reduce_keys(s):
                return False
        return True


# --------------------------------------------------------------- Hilbert


def _shift_poly(n: dict, ds: int, dt: int, sign: int = 1) -> dict:
    return {(i + ds, j + dt): sign * c for (i, j), c in n.items()}


def _add_poly(p: dict, q: dict) -> dict:
    out = defaultdict(int, p)
    for k, v in q.items():
        out[k] += v
    return {k: v for k, v in out.items() if v}


def _minimalize(gens: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    gs = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gs:
        if not any(all(h[i] <= g[i] for i in range(NVARS)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _bideg_exp(e: tuple[int, ...]) -> tuple[int, int]:
    return (e[0] + e[1] + e[2], e[3] + e[4] + e[5])


def hilbert_numerator_monomial(gens: Sequence[tuple[int, ...]]) -> dict[tuple[int, int], int]:
    """Bigraded Hilbert series numerator of R/M for a monomial ideal M
    (pivot recursion: N(M) = N(M + p) + t^deg(p) N(M : p))."""
    memo: dict = {}

    def rec(gs: tuple[tuple[int, ...], ...]) -> dict:
        if gs in memo:
            return memo[gs]
        if not gs:
            return {(0, 0): 1}
        supports = [sum(1 << i for i in range(NVARS) if g[i]) for g in gs]
        counts = [0] * NVARS
        for s in supports:
            for i in range(NVARS):
                if s >> i & 1:
                    counts[i] += 1
        shared = [i for i in range(NVARS) if counts[i] > 1]
        if not shared:
            res = {(0, 0): 1}
            for g in gs:
                d = _bideg_exp(g)
                res = _add_poly(res, _shift_poly(res, d[0], d[1], -1))
            memo[gs] = res
            return res
        v = max(shared, key=lambda i: counts[i])
        # exponents of v in generators that are not pure powers of v; with
        # minimal generators x_v^e for such an e is never already in M
        cand = sorted(g[v] for g in gs if g[v] and any(g[i] for i in range(NVARS) if i != v))
        e = cand[(len(cand) - 1) // 2]
        p = tuple(e if i == v else 0 for i in range(NVARS))
        plus = _minimalize(gs + (p,))
        quot = _minimalize(tuple(tuple(max(0, g[i] - p[i]) for i in range(NVARS)) for g in gs))
        d = _bideg_exp(p)
        res = _add_poly(rec(plus), _shift_poly(rec(quot), d[0], d[1]))
        memo[gs] = res
        return res

    return rec(_minimalize(gens))


def hf_from_numerator(num: dict, dL: int, dh: int) -> int:
    return sum(c * h0_line(dL - i, dh - j) for (i, j), c in num.items())


# ----------------------------------------------------------------- Ideal


def _as_bipoly(p) -> BiPoly:
    if isinstance(p, BiPoly):
        return p
    from .bipoly import parse

    return parse(p)


class Ideal:
    """An ideal of GF(2)[a,b,c,x,y,z] given by generators; the reduced
    Gröbner basis is computed on first use and cached."""

    def __init__(self, gens: Iterable = ()):
        gs = []
        seen = set()
        for g in gens:
            g = _as_bipoly(g)
            if g and g not in seen:
                seen.add(g)
                gs.append(g)
        self.gens: tuple[BiPoly, ...] = tuple(gs)
        self._gb: Optional[GroebnerBasis] = None

    @classmethod
    def unit(cls) -> "Ideal":
        return cls([BiPoly.one()])

    @classmethod
    def _from_gb(cls, gb: GroebnerBasis, gens: Optional[Sequence[BiPoly]] = None) -> "Ideal":
        I = cls(gens if gens is not None else gb.elements())
        I._gb = gb
        return I

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = GroebnerBasis(_buchberger(g.keys for g in self.gens))
        return self._gb

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            return Ideal(self.gens + other.gens)
        if isinstance(other, BiPoly):
            return Ideal(self.gens + (other,))
        return Ideal(self.gens + tuple(_as_bipoly(p) for p in other))

    def __repr__(self) -> str:
        return f"Ideal({[str(g) for g in self.gens]})"

    @property
    def is_bihomogeneous(self) -> bool:
        return all(g.is_bihomogeneous for g in self.gens)

    @property
    def is_unit(self) -> bool:
        return self.gb.is_unit

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def normal_form(self, p) -> BiPoly:
        return self.gb.normal_form(_as_bipoly(p))

    def __contains__(self, p) -> bool:
        return not self.normal_form(p)

    def contains(self, other: "Ideal") -> bool:
        return all(g in self for g in other.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and ideal_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def generators_of_bidegree(self, d) -> list[BiPoly]:
        bd = as_bidegree(d)
        return [g for g in self.gens if g.bidegree == bd]

    def graded_piece(self, d) -> list[BiPoly]:
        """A basis of the degree-d part I_d (bihomogeneous ideals)."""
        bd = as_bidegree(d)
        keys = graded_keys(bd.dL, bd.dh)
        if not keys:
            return []
        tab = self.gb.nf_table(bd.dL, bd.dh)
        std = sorted({s for k in keys for s in tab[k]})
        col = {s: i for i, s in enumerate(std)}
        # kernel of monomial -> normal form
        M = BitMatrix.from_entries(len(std), len(keys), ((col[s], j) for j, k in enumerate(keys) for s in tab[k]))
        K = kernel_matrix(M)
        return [BiPoly((keys[c] for c in K.row_support(i)), bd) for i in range(K.rows)]

    def minimal_generators(self) -> list[BiPoly]:
        """Minimal bihomogeneous generators, chosen from the Gröbner basis
        in increasing total degree."""
        if self.is_unit:
            return [BiPoly.one()]
        cand = sorted(self.gb.elements(), key=lambda p: (p.total_degree(), p.leading_key()))
        kept: list[BiPoly] = []
        eng_gb: Optional[GroebnerBasis] = None
        deg = None
        batch: list[BiPoly] = []
        for p in cand + [None]:
            d = p.total_degree() if p is not None else None
            if d != deg and batch:
                eng_gb = GroebnerBasis(_buchberger(q.keys for q in kept))
                for q in batch:
                    if eng_gb.reduce_keys(q.keys):
                        kept.append(q)
                        eng_gb = GroebnerBasis(_buchberger(r.keys for r in kept))
                batch = []
            if p is None:
                break
            deg = d
            batch.append(p)
        return kept


def gb(I: Ideal) -> GroebnerBasis:
    return I.gb


def normal_form(p, I: Ideal) -> BiPoly:
    return I.normal_form(p)


def member(p, I: Ideal) -> bool:
    return p in I


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I.contains(J) and J.contains(I)


def _sum_numerator(I: Ideal, J: Ideal) -> dict:
    return (I + J).gb.numerator()


def _assemble(target_num: dict, piece: Callable[[int, int], list[BiPoly]], start: Sequence[BiPoly], max_degree: int = 60) -> Ideal:
    """Ideal K inside a bihomogeneous ideal T with known Hilbert numerator.

    ``start`` lists known elements of T; ``piece(dL, dh)`` spans T in one
    bidegree.  Generators are added where the Hilbert functions differ
    until the Hilbert series agree, which forces K = T.
    """
    gens = list(start)
    eng = _Engine()
    for g in sorted(gens, key=lambda p: (p.total_degree(), len(p))):
        eng.add(g.keys)
    eng.run()
    K = Ideal._from_gb(GroebnerBasis(eng.reduced_basis()), gens)
    if K.gb.numerator() == target_num:
        return K
    for D in range(max_degree + 1):
        added: list[BiPoly] = []
        for dL in range(D + 1):
            dh = D - dL
            want = h0_line(dL, dh) - hf_from_numerator(target_num, dL, dh)
            have = h0_line(dL, dh) - hf_from_numerator(K.gb.numerator(), dL, dh)
            if have == want:
                continue
            if have > want:
                raise ArithmeticError(f"assembled ideal exceeds its target at ({dL},{dh})")
            basis = piece(dL, dh)
            std = K.gb.standard_keys(dL, dh)
            col = {s: i for i, s in enumerate(std)}
            rows = [K.gb.nf_bihomogeneous(p.term_set, dL, dh) for p in basis]
            M = BitMatrix.from_row_sets(len(std), ([col[s] for s in r] for r in rows))
            E, _ = echelon(M)
            if E.rows != want - have:
                raise ArithmeticError(f"graded piece at ({dL},{dh}) has wrong dimension")
            for i in range(E.rows):
                added.append(BiPoly((std[c] for c in E.row_support(i)), (dL, dh)))
        if added:
            gens.extend(added)
            for g in added:
                eng.add(g.keys)
            eng.run()
            K = Ideal._from_gb(GroebnerBasis(eng.reduced_basis()), gens)
            if K.gb.numerator() == target_num:
                return K
    raise ArithmeticError("Hilbert series did not stabilise")


def _kernel_polys(keys: Sequence[int], images: list[set], bidegree) -> list[BiPoly]:
    """Polynomials sum c_k keys[k] with sum c_k images[k] = 0."""
    coords = sorted({s for im in images for s in im})
    col = {s: i for i, s in enumerate(coords)}
    M = BitMatrix.from_entries(len(coords), len(keys), ((col[s], j) for j, im in enumerate(images) for s in im))
    K = kernel_matrix(M)
    return [BiPoly((keys[c] for c in K.row_support(i)), bidegree) for i in range(K.rows)]


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J for bihomogeneous ideals."""
    if J.contains(I):
        return I
    if I.contains(J):
        return J
    target = _add_poly(_add_poly(I.gb.numerator(), J.gb.numerator()), _shift_poly(_sum_numerator(I, J), 0, 0, -1))

    def piece(dL: int, dh: int) -> list[BiPoly]:
        keys = graded_keys(dL, dh)
        t1 = I.gb.nf_table(dL, dh)
        t2 = J.gb.nf_table(dL, dh)
        # tag the second ideal's coordinates to keep them apart
        images = [set(t1[k]) | {-(s + 1) for s in t2[k]} for k in keys]
        return _kernel_polys(keys, images, (dL, dh))

    prod = [p * q for p in I.gens for q in J.gens]
    return _assemble(target, piece, prod)


def _colon_poly_general(I: Ideal, g: BiPoly) -> Ideal:
    dg = g.bidegree
    if dg is None:
        raise ValueError("colon needs a bihomogeneous polynomial")
    if g in I:
        return Ideal.unit()
    diff = _add_poly(I.gb.numerator(), _shift_poly(_sum_numerator(I, Ideal([g])), 0, 0, -1))
    target = _shift_poly(diff, -dg.dL, -dg.dh)
    if any(i < 0 or j < 0 for i, j in target):
        raise ArithmeticError("colon Hilbert numerator is not a polynomial")

    def piece(dL: int, dh: int) -> list[BiPoly]:
        keys = graded_keys(dL, dh)
        tL, th = dL + dg.dL, dh + dg.dh
        images = [I.gb.nf_bihomogeneous(g.mul_key(k).term_set, tL, th) for k in keys]
        return _kernel_polys(keys, images, (dL, dh))

    return _assemble(target, piece, list(I.gens))


def _swap_to_last(i: int) -> list[int]:
    perm = list(range(NVARS))
    perm[i], perm[NVARS - 1] = perm[NVARS - 1], perm[i]
    return perm


def _colon_variable(I: Ideal, v: int, infinite: bool) -> Ideal:
    """I : v or I : v^inf for a variable index v, via the degrevlex property
    of the last variable."""
    perm = _swap_to_last(v)
    J = Ideal(g.apply_permutation(perm) for g in I.gens)
    zshift = 8 * (NVARS - 1)
    out = []
    for p in J.gb.polys:
        zmin = min(127 - ((t >> zshift) & 0xFF) for t in p)
        k = zmin if infinite else min(zmin, 1)
        # dividing by z^k: raise the complemented field and drop the degree
        delta = (k << zshift) - (k << DEG_SHIFT)
        out.append(BiPoly(t + delta for t in p).apply_permutation(perm))
    return Ideal(out)


def _variable_index(g: BiPoly) -> Optional[int]:
    if len(g) != 1:
        return None
    e = unpack(g.keys[0])
    if sum(e) == 1:
        return e.index(1)
    return None


def _monomial_exponents(g: BiPoly) -> Optional[tuple[int, ...]]:
    return unpack(g.keys[0]) if len(g) == 1 else None


def colon(I: Ideal, g) -> Ideal:
    """{p : p g ∈ I} for a polynomial g, or I : J for an ideal J."""
    if isinstance(g, Ideal):
        out: Optional[Ideal] = None
        for h in g.gens:
            c = colon(I, h)
            out = c if out is None else intersect(out, c)
        return out if out is not None else Ideal.unit()
    g = _as_bipoly(g)
    if not g:
        raise ValueError("colon by the zero polynomial")
    exps = _monomial_exponents(g)
    if exps is not None:
        out_i = I
        for v, e in enumerate(exps):
            for _ in range(e):
                out_i = _colon_variable(out_i, v, infinite=False)
        return out_i
    return _colon_poly_general(I, g)


def _saturate_poly(I: Ideal, g: BiPoly) -> Ideal:
    exps = _monomial_exponents(g)
    if exps is not None:
        out = I
        for v, e in enumerate(exps):
            if e:
                out = _colon_variable(out, v, infinite=True)
        return out
    cur = I
    while True:
        nxt = _colon_poly_general(cur, g)
        if cur.contains(nxt):
            return cur
        cur = nxt


def saturate(I: Ideal, J) -> Ideal:
    """I : J^inf as the intersection of the saturations by each generator
    of J; each of those is an iterated colon run until it stabilises."""
    if isinstance(J, BiPoly) or isinstance(J, str):
        J = Ideal([_as_bipoly(J)])
    parts = [_saturate_poly(I, g) for g in J.gens]
    if not parts:
        return Ideal.unit()
    out = parts[0]
    for p in parts[1:]:
        out = intersect(out, p)
    return out


IRRELEVANT_L = Ideal(["a", "b", "c"])
IRRELEVANT_H = Ideal(["x", "y", "z"])


def sat_irrelevant(I: Ideal) -> Ideal:
    return saturate(saturate(I, IRRELEVANT_L), IRRELEVANT_H)


# ------------------------------------------------------------ dimension


def codim(I: Ideal):
    """6 minus the Krull dimension of R/LT(I), by searching variable subsets
    that avoid every leading monomial.  The unit ideal gives +inf."""
    G = I.gb
    if G.is_unit:
        return INFINITE_CODIM
    supports = [sum(1 << i for i in range(NVARS) if e[i]) for e in G.leading_monomials()]
    best = 0
    for mask in range(1 << NVARS):
        if all(s & ~mask for s in supports):
            best = max(best, bin(mask).count("1"))
    return NVARS - best


def hilbert_function(I: Ideal, a: int, b: int) -> int:
    """dim of (R/I) in bidegree (a, b): the count of standard monomials."""
    return I.gb.hilbert_function(a, b)


def _solve_exact(A: list[list[Fraction]], y: list[Fraction]) -> list[Fraction]:
    n = len(A[0])
    rows = [r[:] + [v] for r, v in zip(A, y)]
    piv_row = 0
    pivots = []
    for c in range(n):
        p = next((i for i in range(piv_row, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[piv_row], rows[p] = rows[p], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [v / pv for v in rows[piv_row]]
        for i in range(len(rows)):
            if i != piv_row and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [u - f * w for u, w in zip(rows[i], rows[piv_row])]
        pivots.append(c)
        piv_row += 1
    if len(pivots) != n:
        raise ArithmeticError("interpolation system is singular")
    for i in range(piv_row, len(rows)):
        if rows[i][n] != 0:
            raise ArithmeticError("Hilbert function is not polynomial on the fitting grid")
    return [rows[i][n] for i in range(n)]


def hilbert_polynomial(I: Ideal, grid: Sequence[int] = (6, 7, 8, 9), degree: int = 2) -> dict[tuple[int, int], Fraction]:
    """Exact fit of a polynomial of bidegree <= (degree, degree) to the
    Hilbert function of R/I on grid x grid; raises if any grid point is
    off the fitted polynomial."""
    exps = [(i, j) for i in range(degree + 1) for j in range(degree + 1)]
    A, y = [], []
    for a in grid:
        for b in grid:
            A.append([Fraction(a) ** i * Fraction(b) ** j for i, j in exps])
            y.append(Fraction(hilbert_function(I, a, b)))
    coeffs = _solve_exact(A, y)
    return dict(zip(exps, coeffs))


def multidegree(I: Ideal, grid: Sequence[int] = (6, 7, 8, 9)) -> tuple[int, int, int]:
    """(alpha, beta, gamma) of the class alpha L^2 + beta L h + gamma h^2,
    read off the quadratic part (gamma a^2 + 2 beta a b + alpha b^2) / 2 of
    the Hilbert polynomial."""
    c = codim(I)
    if c != 2:
        raise ValueError(f"multidegree needs a codimension-2 ideal, got codim {c}")
    hp = hilbert_polynomial(I, grid)
    for e in ((2, 1), (1, 2), (2, 2)):
        if hp[e] != 0:
            raise ArithmeticError(f"Hilbert polynomial has a nonzero {e} coefficient")
    gamma = 2 * hp[(2, 0)]
    beta = hp[(1, 1)]
    alpha = 2 * hp[(0, 2)]
    for v in (alpha, beta, gamma):
        if v.denominator != 1:
            raise ArithmeticError("non-integral multidegree")
    return (int(alpha), int(beta), int(gamma))
