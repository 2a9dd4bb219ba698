"""Integer intersection theory on P2 x P2 and the numerical invariants of E."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bipoly import binom2

# basis L^i h^j with 0 <= i, j <= 2, in this order
BASIS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2))
_INDEX = {e: k for k, e in enumerate(BASIS)}
_NAMES = ("1", "L", "h", "L^2", "Lh", "h^2", "L^2h", "Lh^2", "L^2h^2")


@dataclass(frozen=True)
class ChowClass:
    coeffs: tuple[int, ...] = (0,) * 9

    def __post_init__(self):
        if len(self.coeffs) != 9:
            raise ValueError("a Chow class has nine coefficients")

    @classmethod
    def from_dict(cls, d: dict) -> "ChowClass":
        c = [0] * 9
        for e, v in d.items():
            i, j = e
            if i <= 2 and j <= 2:
                c[_INDEX[(i, j)]] += v
        return cls(tuple(c))

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "ChowClass":
        return cls.from_dict({(i, j): coeff})

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for e, v in zip(BASIS, self.coeffs):
            if v:
                yield e, v

    def __getitem__(self, e: tuple[int, int]) -> int:
        return self.coeffs[_INDEX[e]]

    def __add__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(tuple(p - q for p, q in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ChowClass":
        return ChowClass(tuple(-p for p in self.coeffs))

    def __mul__(self, other) -> "ChowClass":
        if isinstance(other, int):
            return ChowClass(tuple(other * p for p in self.coeffs))
        return chow_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ChowClass":
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def graded(self, k: int) -> "ChowClass":
        """The codimension-k component."""
        return ChowClass(tuple(v if sum(e) == k else 0 for e, v in zip(BASIS, self.coeffs)))

    def degree(self) -> int:
        return self[(2, 2)]

    def __str__(self) -> str:
        parts = []
        for (e, v), name in zip(zip(BASIS, self.coeffs), _NAMES):
            if not v:
                continue
            if name == "1":
                parts.append(str(v))
            elif v == 1:
                parts.append(name)
            elif v == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{v}{name}")
        return "+".join(parts).replace("+-", "-") if parts else "0"

    def to_json(self) -> dict:
        return {name: v for name, v in zip(_NAMES, self.coeffs) if v}


def chow_mul(u: ChowClass, v: ChowClass) -> ChowClass:
    out = [0] * 9
    for (i1, j1), p in u.items():
        for (i2, j2), q in v.items():
            i, j = i1 + i2, j1 + j2
            if i <= 2 and j <= 2:
                out[_INDEX[(i, j)]] += p * q
    return ChowClass(tuple(out))


ONE = ChowClass.monomial(0, 0)
L = ChowClass.monomial(1, 0)
H = ChowClass.monomial(0, 1)


def inverse(u: ChowClass) -> ChowClass:
    """Inverse of a class with constant term 1 (nilpotent series)."""
    if u[(0, 0)] != 1:
        raise ValueError("only classes with constant term 1 are invertible here")
    n = u - ONE
    out = ONE
    term = ONE
    for _ in range(4):
        term = term * (-n)
        out = out + term
    return out


# --- formal Chern roots ------------------------------------------------------
#
# Q_L has roots alpha, L - alpha with alpha^2 = L alpha - L^2, and likewise
# Q_h with beta.  Elements of Chow[alpha, beta] / (those relations) are
# dicts {(ea, eb): ChowClass} with ea, eb in {0, 1}.


def _root_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (a1, b1), u in p.items():
        for (a2, b2), v in q.items():
            terms = [((a1 + a2, b1 + b2), u * v)]
            reduced = []
            for (ea, eb), w in terms:
                parts = [((ea, eb), w)]
                if ea == 2:  # alpha^2 = L alpha - L^2
                    parts = [((1, eb), w * L), ((0, eb), -(w * L * L))]
                for (fa, fb), x in parts:
                    if fb == 2:  # beta^2 = h beta - h^2
                        reduced += [((fa, 1), x * H), ((fa, 0), -(x * H * H))]
                    else:
                        reduced.append(((fa, fb), x))
            for e, w in reduced:
                out[e] = out.get(e, ChowClass()) + w
    return {e: w for e, w in out.items() if any(w.coeffs)}


def _linear_root(const: ChowClass, alpha: int, beta: int) -> dict:
    """1 + const + alpha*a + beta*b as a root-algebra element."""
    d = {(0, 0): ONE + const}
    if alpha:
        d[(1, 0)] = ChowClass.monomial(0, 0, alpha)
    if beta:
        d[(0, 1)] = ChowClass.monomial(0, 0, beta)
    return d


def chern_tensor_QL_Qh() -> ChowClass:
    """Total Chern class of Q_L (x) Q_h from the four roots alpha_i + beta_j."""
    # roots of Q_L: alpha, L - alpha ; of Q_h: beta, h - beta
    factors = [
        _linear_root(ChowClass(), 1, 1),  # alpha + beta
        _linear_root(H, 1, -1),  # alpha + h - beta
        _linear_root(L, -1, 1),  # L - alpha + beta
        _linear_root(L + H, -1, -1),  # L - alpha + h - beta
    ]
    prod = {(0, 0): ONE}
    for f in factors:
        prod = _root_mul(prod, f)
    if set(prod) - {(0, 0)}:
        raise ArithmeticError("product of Chern roots is not symmetric")
    return prod.get((0, 0), ChowClass())


def chern_E0() -> ChowClass:
    """c(E0) = c(Q_L (x) Q_h) / (c(O) c(O(L+h)))."""
    return chern_tensor_QL_Qh() * inverse(ONE + L + H)


def chern_twisted(m: int, n: int) -> tuple[ChowClass, ChowClass]:
    """(c1, c2) of E(m, n), where E = E0(L + h)."""
    c = chern_E0()
    c1, c2 = c.graded(1), c.graded(2)
    D = (m + 1) * L + (n + 1) * H
    return c1 + 2 * D, c2 + c1 * D + D * D


def chi_line(a: int, b: int) -> int:
    return binom2(a + 2) * binom2(b + 2)


def chi_E_monad(a: int, b: int) -> int:
    return 3 * chi_line(a + 2, b + 1) + chi_line(a + 3, b) - chi_line(a + 2, b - 1) - chi_line(a + 4, b + 1)


def chi_E_closed(a: int, b: int) -> int:
    ap, bp = a + 3, b + 3
    return ap * bp * (ap * bp - 1) // 2 - ap * ap - bp * bp + 1


def chi_E(a: int, b: int) -> int:
    m, c = chi_E_monad(a, b), chi_E_closed(a, b)
    if m != c:
        raise ArithmeticError(f"Euler characteristic routes disagree at ({a},{b}): {m} != {c}")
    return m


# graded free modules of the minimal resolution of the section module of E,
# as (shift, multiplicity) with O(s, t) twists
RESOLUTION = (
    (((0, 1), 3), ((0, 0), 1), ((1, 0), 3)),
    (((-2, 1), 1), ((-1, 0), 6), ((0, -1), 6), ((1, -2), 1)),
    (((-2, 0), 3), ((-1, -1), 8), ((0, -2), 3)),
    (((-2, -1), 3), ((-1, -2), 3)),
    (((-2, -2), 1),),
)


def _r(p: int, q: int) -> int:
    return binom2(p + 2) * binom2(q + 2) if p >= 0 and q >= 0 else 0


def resolution_hf(m: int, n: int) -> int:
    return sum(
        (-1) ** i * mult * _r(m + s, n + t)
        for i, module in enumerate(RESOLUTION)
        for (s, t), mult in module
    )
