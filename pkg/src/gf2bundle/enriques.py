"""Zero schemes of sections of E: ideals from the 7x7 matrix B and from
2x2 minors, restriction to the divisor f = 0, the F-singular versus
supersingular classification, chart-wise smoothness, half-fibers, and the
degenerate (minimal and reducible) zero sets."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional, Sequence

from .bipoly import (
    BiDegree,
    BiPoly,
    CHART_H,
    CHART_L,
    F_POLY,
    VARS,
    dehomogenize,
    graded_keys,
    parse,
    parse_list,
    random_bipoly,
)
from .gf2core import BitMatrix, kernel_matrix
from .groebner import (
    Ideal,
    codim,
    colon,
    hilbert_polynomial,
    ideal_equal,
    multidegree,
    sat_irrelevant,
    saturate,
)
from .sheafcoh import PHI2, SectionVec

# rows in the order of w = (f1, f2, g1, f3, g2, g3, h)
_B_ROWS = (
    ("b^2*y^2+c^2*z^2", "a*x*y^2+b*y^3+c*y^2*z", "a^2*y^2", "0", "a*x*z^2+b*y*z^2+c*z^3", "a^2*z^2", "a*b*y^2*z+a*c*y*z^2"),
    ("b^2*x^2", "a*x^3+b*x^2*y+c*x^2*z", "a^2*x^2+c^2*z^2", "a*x*z^2+b*y*z^2+c*z^3", "0", "b^2*z^2", "a*b*x^2*z+b*c*x*z^2"),
    ("a*b^2*x+b^3*y+b^2*c*z", "a^2*x^2+b^2*y^2", "a^3*x+a^2*b*y+a^2*c*z", "a^2*z^2", "b^2*z^2", "0", "a^2*b*x*z+a*b^2*y*z"),
    ("c^2*x^2", "0", "c^2*y^2", "a*x*y^2+b*y^3+c*y^2*z", "a*x^3+b*x^2*y+c*x^2*z", "a^2*x^2+b^2*y^2", "a*c*x^2*y+b*c*x*y^2"),
    ("0", "c^2*x^2", "a*c^2*x+b*c^2*y+c^3*z", "b^2*y^2+c^2*z^2", "b^2*x^2", "a*b^2*x+b^3*y+b^2*c*z", "b^2*c*x*y+b*c^2*x*z"),
    ("a*c^2*x+b*c^2*y+c^3*z", "c^2*y^2", "0", "a^2*y^2", "a^2*x^2+c^2*z^2", "a^3*x+a^2*b*y+a^2*c*z", "a^2*c*x*y+a*c^2*y*z"),
    ("b^2*c*x*y+b*c^2*x*z", "a*c*x^2*y+b*c*x*y^2", "a^2*c*x*y+a*c^2*y*z", "a*b*y^2*z+a*c*y*z^2", "a*b*x^2*z+b*c*x*z^2", "a^2*b*x*z+a*b^2*y*z", "0"),
)

# bidegrees of the ideal generators (columns of B) for the twist (0, 0)
GENERATOR_DEGREES = ((3, 2), (2, 3), (3, 2), (2, 3), (2, 3), (3, 2), (3, 3))
# column k of B paired with basis vector e_{WEDGE_ORDER.index(k)}: reordering
# the columns by WEDGE_ORDER gives a symmetric matrix with zero diagonal
WEDGE_ORDER = (3, 4, 5, 1, 0, 2, 6)

W_NAMES = ("f1", "f2", "g1", "f3", "g2", "g3", "h")
_F_POS = (0, 1, 3)
_G_POS = (2, 4, 5)
_H_POS = 6


def w_degree(pos: int, m: int, n: int) -> tuple[int, int]:
    if pos in _F_POS:
        return (m + 1, n)
    if pos in _G_POS:
        return (m, n + 1)
    return (m, n)


class MatrixB:
    """The fixed 7x7 matrix whose product with w generates the ideal of the
    zero scheme of the corresponding section."""

    def __init__(self):
        self.rows: tuple[tuple[BiPoly, ...], ...] = tuple(tuple(parse(e) for e in r) for r in _B_ROWS)

    def __getitem__(self, ij) -> BiPoly:
        i, j = ij
        return self.rows[i][j]

    def audit(self) -> list[str]:
        """Problems found in the transcription (empty when consistent).

        Checks the bidegree forced by each row/column position and the
        hidden antisymmetry: after reordering columns by WEDGE_ORDER the
        matrix is symmetric with zero diagonal (over GF(2))."""
        problems = []
        for i, j in product(range(7), range(7)):
            e = self.rows[i][j]
            if not e:
                continue
            wd = w_degree(i, 0, 0)
            gd = GENERATOR_DEGREES[j]
            want = BiDegree(gd[0] - wd[0], gd[1] - wd[1])
            if e.bidegree != want:
                problems.append(f"entry ({i + 1},{j + 1}) has bidegree {e.bidegree}, expected {want}")
        N = [[self.rows[i][WEDGE_ORDER[k]] for k in range(7)] for i in range(7)]
        for i in range(7):
            if N[i][i]:
                problems.append(f"wedge diagonal entry {i + 1} is nonzero")
            for k in range(i + 1, 7):
                if N[i][k] != N[k][i]:
                    problems.append(f"wedge entries ({i + 1},{k + 1}) and ({k + 1},{i + 1}) differ")
        return problems


B = MatrixB()


@dataclass(frozen=True)
class WVector:
    entries: tuple[BiPoly, ...]
    twist: tuple[int, int] = (0, 0)

    def __post_init__(self):
        if len(self.entries) != 7:
            raise ValueError("w has seven entries")
        m, n = self.twist
        for pos, e in enumerate(self.entries):
            if not e:
                continue
            want = BiDegree(*w_degree(pos, m, n))
            if e.bidegree != want:
                raise ValueError(f"entry {W_NAMES[pos]} = {e} must have bidegree {want}")

    @classmethod
    def parse(cls, text: str, twist=(0, 0)) -> "WVector":
        polys = parse_list(text)
        if len(polys) != 7:
            raise ValueError(f"expected 7 comma-separated polynomials, got {len(polys)}")
        return cls(tuple(polys), tuple(twist))

    @property
    def h(self) -> BiPoly:
        return self.entries[_H_POS]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def to_json(self) -> list[str]:
        return [str(e) for e in self.entries]


def w_coordinates(m: int, n: int) -> list[tuple[int, int]]:
    """(position, monomial key) pairs spanning the space of w at twist (m, n)."""
    return [(pos, k) for pos in range(7) for k in graded_keys(*w_degree(pos, m, n))]


def w_from_vector(vec: Sequence[int], m: int, n: int) -> WVector:
    coords = w_coordinates(m, n)
    if len(vec) != len(coords):
        raise ValueError("coordinate vector has the wrong length")
    terms: list[set] = [set() for _ in range(7)]
    for (pos, k), c in zip(coords, vec):
        if c % 2:
            terms[pos].add(k)
    return WVector(tuple(BiPoly(t, w_degree(p, m, n)) for p, t in enumerate(terms)), (m, n))


def random_w(m: int, n: int, rng: random.Random) -> WVector:
    return WVector(tuple(random_bipoly(w_degree(p, m, n), rng) if min(w_degree(p, m, n)) >= 0 else BiPoly() for p in range(7)), (m, n))


def w_times_B(w: WVector) -> list[BiPoly]:
    out = []
    for j in range(7):
        acc = BiPoly()
        for i in range(7):
            if w.entries[i] and B[i, j]:
                acc = acc + w.entries[i] * B[i, j]
        out.append(acc)
    return out


def ideal_from_w(w: WVector) -> Ideal:
    if w.is_zero():
        raise ValueError("w = 0 is the zero section; its zero scheme is everything")
    return Ideal(w_times_B(w))


# ------------------------------------------------------------ minors route


def ideal_from_section(v: SectionVec) -> Ideal:
    """2x2 minors of the 4x2 matrix [phi2 | v]."""
    if not v.is_valid():
        raise ValueError("not a section: a^2 v1 + b^2 v2 + c^2 v3 + f v4 != 0")
    minors = [PHI2[i] * v.v[j] + PHI2[j] * v.v[i] for i, j in combinations(range(4), 2)]
    return Ideal(minors)


class NotASectionZeroScheme(ValueError):
    pass


def match_w(I: Ideal, m: int = 0, n: int = 0) -> WVector:
    """A nonzero w at twist (m, n) with every entry of w B in I and
    sat(ideal(w B)) = I."""
    cd = codim(I)
    if cd != 2:
        raise NotASectionZeroScheme(f"zero schemes of sections have codimension 2, not {cd}")
    coords = w_coordinates(m, n)
    images = []
    for pos, k in coords:
        img = set()
        for j in range(7):
            e = B[pos, j]
            if not e:
                continue
            prod = e.mul_key(k)
            d = prod.bidegree
            nf = I.gb.nf_bihomogeneous(prod.term_set, d.dL, d.dh)
            img.update((j, t) for t in nf)
        images.append(img)
    tags = sorted({t for im in images for t in im})
    col = {t: i for i, t in enumerate(tags)}
    M = BitMatrix.from_entries(len(tags), len(coords), ((col[t], c) for c, im in enumerate(images) for t in im))
    K = kernel_matrix(M)
    if K.rows == 0:
        raise NotASectionZeroScheme("no nonzero w has w B inside the ideal")
    if K.rows > 12:
        raise NotASectionZeroScheme(f"solution space of dimension {K.rows} is too large to search")
    Kd = K.to_dense()
    for mask in range(1, 1 << K.rows):
        vec = [0] * len(coords)
        for r in range(K.rows):
            if mask >> r & 1:
                vec = [(p + q) % 2 for p, q in zip(vec, Kd[r])]
        w = w_from_vector(vec, m, n)
        if ideal_equal(sat_irrelevant(ideal_from_w(w)), I):
            return w
    raise NotASectionZeroScheme("no solution reproduces the ideal")


# ------------------------------------------------------ restriction to A


def restrict_to_A(w: WVector) -> tuple[BiPoly, BiPoly]:
    """(p, q) = (f1 a^2 + f2 b^2 + f3 c^2 + h abc, g1 z^2 + g2 x^2 + g3 y^2 + h xyz)."""
    f1, f2, g1, f3, g2, g3, h = w.entries
    a2, b2, c2, abc = (parse(s) for s in ("a^2", "b^2", "c^2", "a*b*c"))
    x2, y2, z2, xyz = (parse(s) for s in ("x^2", "y^2", "z^2", "x*y*z"))
    p = f1 * a2 + f2 * b2 + f3 * c2 + h * abc
    q = g1 * z2 + g2 * x2 + g3 * y2 + h * xyz
    return p, q


# -------------------------------------------------------------- smoothness


def _jacobian_minors(gens: Sequence[BiPoly], variables: Sequence[int]) -> list[BiPoly]:
    J = [[g.derivative(v) for v in variables] for g in gens]
    out = []
    for r1, r2 in combinations(range(len(gens)), 2):
        for c1, c2 in combinations(range(len(variables)), 2):
            m = J[r1][c1] * J[r2][c2] + J[r1][c2] * J[r2][c1]
            if m:
                out.append(m)
    return out


def chart_singular_ideal(I: Ideal, chart) -> Ideal:
    u, v = chart
    iu, iv = VARS.index(u), VARS.index(v)
    free = [i for i in range(6) if i not in (iu, iv)]
    base = I.minimal_generators() if I.is_bihomogeneous else list(I.gens)
    gens = [dehomogenize(g, chart) for g in base]
    gens = [g for g in gens if g]
    return Ideal(gens + _jacobian_minors(gens, free))


def smooth_check(I: Ideal) -> bool:
    """True when the singular locus is empty on all nine affine charts."""
    c = codim(I)
    if c != 2:
        raise ValueError(f"smooth_check expects a codimension-2 ideal, got codim {c}")
    return all(chart_singular_ideal(I, (u, v)).is_unit for u in CHART_L for v in CHART_H)


def singular_charts(I: Ideal) -> list[tuple[str, str]]:
    return [(u, v) for u in CHART_L for v in CHART_H if not chart_singular_ideal(I, (u, v)).is_unit]


# --------------------------------------------------------- classification

F_SINGULAR = "F-singular"
SUPERSINGULAR = "supersingular"


class ClassificationRefused(ValueError):
    pass


def classify_by_h(w: WVector) -> str:
    return SUPERSINGULAR if not w.h else F_SINGULAR


def classify(w: WVector, smooth: Optional[bool] = None) -> str:
    """F-singular or supersingular, for a smooth codimension-2 zero scheme
    at twist (0, 0).  Singular zero schemes are refused."""
    if w.twist != (0, 0):
        raise ValueError("classification is defined for sections of E itself")
    if smooth is None:
        I = sat_irrelevant(ideal_from_w(w))
        smooth = codim(I) == 2 and smooth_check(I)
    if not smooth:
        raise ClassificationRefused("zero scheme is singular; no classification is defined")
    p, q = restrict_to_A(w)
    h = 1 if w.h else 0
    if p.coefficient("a*b*c") != h or q.coefficient("x*y*z") != h:
        raise ArithmeticError("abc / xyz coefficients disagree with the h entry")
    return classify_by_h(w)


def generated_in_low_degrees(I: Ideal) -> bool:
    """Whether the (2,3) and (3,2) parts of I generate I."""
    low = I.graded_piece((2, 3)) + I.graded_piece((3, 2))
    return ideal_equal(Ideal(low), I)


# ------------------------------------------------------------- half-fibers


@dataclass
class HalfFibers:
    D_L: BiPoly
    D_h: BiPoly
    C_L: Ideal
    C_h: Ideal
    AS: Ideal
    anomalies: list[str] = field(default_factory=list)


def _unique_piece(I: Ideal, d, label: str, anomalies: list[str]) -> BiPoly:
    piece = I.graded_piece(d)
    if not piece:
        raise ValueError(f"no generator of bidegree {d} ({label}); input does not conform")
    if len(piece) > 1:
        anomalies.append(f"{label}: {len(piece)} independent elements of bidegree {d}; using the first")
    return piece[0]


def half_fibers(I: Ideal) -> HalfFibers:
    """D_L, D_h cutting I + (f) and the curves C_L = sat((D_L) + I) : AS,
    C_h likewise, with AS = sat(I + (f))."""
    AS = sat_irrelevant(I + F_POLY)
    anomalies: list[str] = []
    DL = _unique_piece(AS, (3, 0), "D_L", anomalies)
    Dh = _unique_piece(AS, (0, 3), "D_h", anomalies)
    CL = colon(sat_irrelevant(I + DL), AS)
    Ch = colon(sat_irrelevant(I + Dh), AS)
    return HalfFibers(DL, Dh, CL, Ch, AS, anomalies)


def curve_degrees(C: Ideal, grid: Sequence[int] = (6, 7, 8, 9)) -> tuple[int, int]:
    """(C.L, C.h) for a curve: the a and b coefficients of its linear
    Hilbert polynomial."""
    hp = hilbert_polynomial(C, grid)
    for e, v in hp.items():
        if sum(e) > 1 and v != 0:
            raise ArithmeticError("Hilbert polynomial of a curve must be linear")
    cl, ch = hp[(1, 0)], hp[(0, 1)]
    if cl.denominator != 1 or ch.denominator != 1:
        raise ArithmeticError("non-integral curve degrees")
    return int(cl), int(ch)


# ------------------------------------------------------------------ reports


@dataclass
class SurfaceReport:
    w: WVector
    ideal: Ideal
    codim: object
    smooth: Optional[bool]
    cycle_class: Optional[tuple[int, int, int]]
    classification: Optional[str]
    D_L: Optional[BiPoly] = None
    D_h: Optional[BiPoly] = None
    half_fibers: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        cd = self.codim
        return {
            "w": self.w.to_json(),
            "twist": list(self.w.twist),
            "ideal": _ideal_json(self.ideal),
            "codim": cd if isinstance(cd, int) else "inf",
            "smooth": self.smooth,
            "cycle_class": list(self.cycle_class) if self.cycle_class else None,
            "classification": self.classification,
            "D_L": str(self.D_L) if self.D_L is not None else None,
            "D_h": str(self.D_h) if self.D_h is not None else None,
            "half_fibers": self.half_fibers,
            "notes": list(self.notes),
        }


def _ideal_json(I: Ideal) -> list[str]:
    return [str(g) for g in I.minimal_generators()]


def surface_report(w: WVector, with_half_fibers: bool = True) -> SurfaceReport:
    I = sat_irrelevant(ideal_from_w(w))
    cd = codim(I)
    notes: list[str] = []
    smooth = None
    cls = None
    cycle = None
    DL = Dh = None
    hf: dict = {}
    if cd == 2:
        cycle = multidegree(I)
        smooth = smooth_check(I)
        if w.twist == (0, 0):
            p, q = restrict_to_A(w)
            if smooth:
                cls = classify(w, smooth=True)
            else:
                notes.append("zero scheme is singular: classification refused")
            if smooth and with_half_fibers:
                H = half_fibers(I)
                DL, Dh = H.D_L, H.D_h
                notes.extend(H.anomalies)
                if DL != p.part((3, 0)) or Dh != q.part((0, 3)):
                    notes.append("D_L/D_h differ from the restriction formulas")
                hf = {
                    "AS": _ideal_json(H.AS),
                    "C_L": _ideal_json(H.C_L),
                    "C_h": _ideal_json(H.C_h),
                    "C_L_degrees": list(curve_degrees(H.C_L)),
                    "C_h_degrees": list(curve_degrees(H.C_h)),
                }
            else:
                DL, Dh = p.part((3, 0)), q.part((0, 3))
    else:
        notes.append(f"zero scheme has codimension {cd}, not 2")
    return SurfaceReport(w, I, cd, smooth, cycle, cls, DL, Dh, hf, notes)


@dataclass
class ReducibleModel:
    w: WVector
    ideal: Ideal
    Y1: Ideal
    Y2: Ideal
    class_Y1: tuple[int, int, int]
    class_Y2: tuple[int, int, int]
    f_in_Y2: bool
    classification: str

    def to_json(self) -> dict:
        return {
            "w": self.w.to_json(),
            "twist": list(self.w.twist),
            "ideal": _ideal_json(self.ideal),
            "Y1": _ideal_json(self.Y1),
            "Y2": _ideal_json(self.Y2),
            "cycle_class_Y1": list(self.class_Y1),
            "cycle_class_Y2": list(self.class_Y2),
            "f_in_Y2": self.f_in_Y2,
            "classification": self.classification,
        }


def reducible_model(f1, f2, f3) -> ReducibleModel:
    """w = (f1, f2, 0, f3, 0, 0, 0): the zero scheme splits into Y1, the
    part off the divisor f = 0, and the residual Y2 inside it."""
    fs = [parse(f) if isinstance(f, str) else f for f in (f1, f2, f3)]
    w = WVector((fs[0], fs[1], BiPoly(), fs[2], BiPoly(), BiPoly(), BiPoly()), (0, 0))
    I = sat_irrelevant(ideal_from_w(w))
    Y1 = saturate(I, Ideal([F_POLY]))
    Y2 = colon(I, Y1)
    if Y1.is_unit or Y2.is_unit:
        raise ValueError("degenerate choice: the zero scheme does not split")
    return ReducibleModel(w, I, Y1, Y2, multidegree(Y1), multidegree(Y2), F_POLY in Y2, classify_by_h(w))


def _linear_forms(names: Sequence[str]) -> list[BiPoly]:
    out = []
    for cs in product((0, 1), repeat=3):
        if any(cs):
            out.append(sum((BiPoly.var(n) for n, c in zip(names, cs) if c), BiPoly()))
    return out


def nilpotent_candidates() -> list[BiPoly]:
    ls = _linear_forms(("a", "b", "c"))
    hs = _linear_forms(("x", "y", "z"))
    return ls + hs + [p * q for p in ls for q in hs]


@dataclass
class MinimalZeroScheme:
    w: WVector
    ideal: Ideal
    cycle_class: tuple[int, int, int]
    smooth: bool
    witness: Optional[BiPoly]

    def to_json(self) -> dict:
        return {
            "w": self.w.to_json(),
            "twist": list(self.w.twist),
            "ideal": _ideal_json(self.ideal),
            "cycle_class": list(self.cycle_class),
            "smooth": self.smooth,
            "nilpotent_witness": str(self.witness) if self.witness is not None else None,
        }


def minimal_zeroscheme(c1: int, c2: int, c3: int) -> MinimalZeroScheme:
    """Zero scheme of the section w = (c1, c2, 0, c3, 0, 0, 0) of E(-1, 0)."""
    cs = [BiPoly.one() if c % 2 else BiPoly() for c in (c1, c2, c3)]
    if not any(cs):
        raise ValueError("at least one constant must be nonzero")
    w = WVector((cs[0], cs[1], BiPoly(), cs[2], BiPoly(), BiPoly(), BiPoly()), (-1, 0))
    I = sat_irrelevant(ideal_from_w(w))
    witness = next((g for g in nilpotent_candidates() if g not in I and g * g in I), None)
    return MinimalZeroScheme(w, I, multidegree(I), smooth_check(I), witness)


DEFAULT_SEED = 1729


def sample_surfaces(count: int, seed: int = DEFAULT_SEED):
    """Yield (w, saturated ideal, smooth flag) for pseudorandom sections of E."""
    rng = random.Random(seed)
    for _ in range(count):
        w = random_w(0, 0, rng)
        if w.is_zero():
            continue
        I = sat_irrelevant(ideal_from_w(w))
        smooth = codim(I) == 2 and smooth_check(I)
        yield w, I, smooth
