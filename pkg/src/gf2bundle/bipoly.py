"""Bihomogeneous polynomials over GF(2) in a, b, c (degree (1,0)) and
x, y, z (degree (0,1)).

A monomial is stored as one packed integer ("key") whose integer order is
the degree-reverse-lexicographic order with a > b > c > x > y > z.  Each
variable owns an 8-bit field holding ``127 - exponent``; the total degree
sits above those fields.  Complementing the exponents makes larger keys
mean larger monomials, so sorting keys sorts terms.  Products, quotients
and divisibility tests become integer arithmetic on keys.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

VARS = ("a", "b", "c", "x", "y", "z")
NVARS = 6
L_VARS = (0, 1, 2)
H_VARS = (3, 4, 5)

_BITS = 8
_FIELD = (1 << _BITS) - 1
_CAP = 127
DEG_SHIFT = _BITS * NVARS
EXP_MASK = (1 << DEG_SHIFT) - 1
_COMP = sum(_CAP << (_BITS * i) for i in range(NVARS))
_GUARD = sum(0x80 << (_BITS * i) for i in range(NVARS))

ONE_KEY = _COMP  # the monomial 1


def pack(exps: Sequence[int]) -> int:
    k = 0
    total = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= _CAP:
            raise ValueError(f"exponent {e} out of range")
        k |= (_CAP - e) << (_BITS * i)
        total += e
    return k | (total << DEG_SHIFT)


def unpack(key: int) -> tuple[int, ...]:
    return tuple(_CAP - ((key >> (_BITS * i)) & _FIELD) for i in range(NVARS))


def key_mul(k1: int, k2: int) -> int:
    return k1 + k2 - _COMP


def key_div(k2: int, k1: int) -> int:
    """k2 / k1, assuming k1 divides k2."""
    return k2 - k1 + _COMP


def key_divides(k1: int, k2: int) -> bool:
    return (((k1 & EXP_MASK) | _GUARD) - (k2 & EXP_MASK)) & _GUARD == _GUARD


def key_degree(key: int) -> int:
    return key >> DEG_SHIFT


def key_lcm(k1: int, k2: int) -> int:
    out = 0
    total = 0
    for i in range(NVARS):
        s = _BITS * i
        v = min((k1 >> s) & _FIELD, (k2 >> s) & _FIELD)
        out |= v << s
        total += _CAP - v
    return out | (total << DEG_SHIFT)


def key_coprime(k1: int, k2: int) -> bool:
    return key_mul(k1, k2) == key_lcm(k1, k2)


def key_bidegree(key: int) -> tuple[int, int]:
    e = unpack(key)
    return (e[0] + e[1] + e[2], e[3] + e[4] + e[5])


def var_key(i: int, power: int = 1) -> int:
    exps = [0] * NVARS
    exps[i] = power
    return pack(exps)


@dataclass(frozen=True)
class BiDegree:
    dL: int
    dh: int

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.dL + other.dL, self.dh + other.dh)

    def __sub__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.dL - other.dL, self.dh - other.dh)

    def __le__(self, other) -> bool:  # componentwise
        return self.dL <= other.dL and self.dh <= other.dh

    def __ge__(self, other) -> bool:
        return self.dL >= other.dL and self.dh >= other.dh

    def __lt__(self, other) -> bool:
        return self <= other and self != other

    def __gt__(self, other) -> bool:
        return self >= other and self != other

    def __iter__(self) -> Iterator[int]:
        yield self.dL
        yield self.dh

    def __str__(self) -> str:
        return f"({self.dL},{self.dh})"


def as_bidegree(d) -> BiDegree:
    return d if isinstance(d, BiDegree) else BiDegree(*d)


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != NVARS or any(e < 0 for e in self.exponents):
            raise ValueError(f"bad exponent vector {self.exponents}")

    @classmethod
    def from_key(cls, key: int) -> "Monomial":
        return cls(unpack(key))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        p = parse(text)
        if len(p) != 1:
            raise ValueError(f"{text!r} is not a single monomial")
        return p.monomials()[0]

    @property
    def key(self) -> int:
        return pack(self.exponents)

    @property
    def bidegree(self) -> BiDegree:
        e = self.exponents
        return BiDegree(e[0] + e[1] + e[2], e[3] + e[4] + e[5])

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(p + q for p, q in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(p <= q for p, q in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        return format_key(self.key)


def format_key(key: int) -> str:
    parts = []
    for v, e in zip(VARS, unpack(key)):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


class BiPoly:
    """A polynomial over GF(2): a set of monomial keys.

    ``bidegree`` is the declared bidegree.  It is inferred when every term
    shares one bidegree; it may be given explicitly (required to give the
    zero polynomial a bidegree) and is then checked against every term.
    """

    __slots__ = ("_terms", "_bideg", "_sorted", "_hash")

    def __init__(self, terms: Iterable[int] = (), bidegree=None):
        ts = terms if isinstance(terms, frozenset) else frozenset(terms)
        self._terms = ts
        self._sorted: Optional[tuple[int, ...]] = None
        self._hash: Optional[int] = None
        if bidegree is not None:
            bd = as_bidegree(bidegree)
            for k in ts:
                if key_bidegree(k) != (bd.dL, bd.dh):
                    raise ValueError(f"term {format_key(k)} is not of bidegree {bd}")
            self._bideg = bd
        else:
            self._bideg = _infer_bidegree(ts)

    @classmethod
    def _raw(cls, terms: frozenset, bidegree: Optional[BiDegree]) -> "BiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._sorted = None
        p._hash = None
        p._bideg = bidegree
        return p

    @classmethod
    def from_monomials(cls, mons: Iterable[Monomial], bidegree=None) -> "BiPoly":
        acc: set[int] = set()
        for m in mons:
            acc ^= {m.key}
        return cls(acc, bidegree)

    @classmethod
    def monomial(cls, exps: Sequence[int]) -> "BiPoly":
        return cls((pack(exps),))

    @classmethod
    def var(cls, name: str) -> "BiPoly":
        return cls((var_key(VARS.index(name)),))

    @classmethod
    def zero(cls, bidegree=None) -> "BiPoly":
        return cls((), bidegree)

    @classmethod
    def one(cls) -> "BiPoly":
        return cls((ONE_KEY,))

    # -- accessors
    @property
    def keys(self) -> tuple[int, ...]:
        """Term keys, leading term first."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms, reverse=True))
        return self._sorted

    @property
    def term_set(self) -> frozenset:
        return self._terms

    @property
    def bidegree(self) -> Optional[BiDegree]:
        return self._bideg

    @property
    def is_bihomogeneous(self) -> bool:
        return self._bideg is not None

    def monomials(self) -> list[Monomial]:
        return [Monomial.from_key(k) for k in self.keys]

    def leading_key(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.keys[0]

    def total_degree(self) -> int:
        return max((key_degree(k) for k in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == frozenset((ONE_KEY,))

    def __contains__(self, m) -> bool:
        k = m.key if isinstance(m, Monomial) else m
        return k in self._terms

    # -- arithmetic
    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = _coerce(other)
        bd = _sum_bidegree(self, other)
        return BiPoly._raw(self._terms ^ other._terms, bd)

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = _coerce(other)
        bd = None
        if self._bideg is not None and other._bideg is not None:
            bd = self._bideg + other._bideg
        if len(self._terms) > len(other._terms):
            big, small = self._terms, other._terms
        else:
            big, small = other._terms, self._terms
        acc: set[int] = set()
        for s in small:
            shift = s - _COMP
            acc ^= {t + shift for t in big}
        return BiPoly._raw(frozenset(acc), bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = BiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_key(self, key: int) -> "BiPoly":
        shift = key - _COMP
        bd = None
        if self._bideg is not None:
            kb = key_bidegree(key)
            bd = BiDegree(self._bideg.dL + kb[0], self._bideg.dh + kb[1])
        return BiPoly._raw(frozenset(t + shift for t in self._terms), bd)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({format(self)!r})"

    def __str__(self) -> str:
        return format(self)

    def __format__(self, spec: str) -> str:
        return format_poly(self)

    def to_json(self) -> list[str]:
        return [format_key(k) for k in self.keys]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "BiPoly":
        acc = BiPoly()
        for s in items:
            acc = acc + parse(s)
        return acc

    # -- structure
    def part(self, bidegree) -> "BiPoly":
        """The bihomogeneous component of the given bidegree."""
        bd = as_bidegree(bidegree)
        want = (bd.dL, bd.dh)
        return BiPoly(frozenset(k for k in self._terms if key_bidegree(k) == want), bd)

    def coefficient(self, m) -> int:
        return coefficient(self, m)

    def derivative(self, var: int) -> "BiPoly":
        """Formal partial derivative in variable index ``var`` (mod 2)."""
        out = set()
        step = 1 << (_BITS * var)
        for k in self._terms:
            e = (_CAP - ((k >> (_BITS * var)) & _FIELD))
            if e & 1:
                out.add(k + step - (1 << DEG_SHIFT))
        return BiPoly(out)

    def substitute(self, values: dict) -> "BiPoly":
        """Replace variables (by name or index) by polynomials or 0/1."""
        idx = {VARS.index(k) if isinstance(k, str) else k: _coerce(v) for k, v in values.items()}
        out = BiPoly()
        cache: dict = {}
        for k in self._terms:
            exps = list(unpack(k))
            term = BiPoly.one()
            for i, val in idx.items():
                e = exps[i]
                if e:
                    ck = (i, e)
                    if ck not in cache:
                        cache[ck] = val ** e
                    term = term * cache[ck]
                    exps[i] = 0
            out = out + term * BiPoly((pack(exps),))
        return out

    def apply_permutation(self, perm: Sequence[int]) -> "BiPoly":
        """Rename variable i to variable perm[i]."""
        out = []
        for k in self._terms:
            e = unpack(k)
            ne = [0] * NVARS
            for i, v in enumerate(e):
                ne[perm[i]] = v
            out.append(pack(ne))
        return BiPoly(out)


def _infer_bidegree(ts: frozenset) -> Optional[BiDegree]:
    if not ts:
        return None
    it = iter(ts)
    bd = key_bidegree(next(it))
    for k in it:
        if key_bidegree(k) != bd:
            return None
    return BiDegree(*bd)


def _sum_bidegree(p: BiPoly, q: BiPoly) -> Optional[BiDegree]:
    if p._bideg is not None and q._bideg is not None:
        if p._bideg == q._bideg:
            return p._bideg
        if not p._terms and not q._terms:
            return None
        return _infer_bidegree(p._terms ^ q._terms)
    if not p._terms:
        return q._bideg
    if not q._terms:
        return p._bideg
    return _infer_bidegree(p._terms ^ q._terms)


def _coerce(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, int):
        return BiPoly.one() if v % 2 else BiPoly()
    if isinstance(v, str):
        return parse(v)
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


# ---------------------------------------------------------------- text I/O


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:([abcxyz])|(\d+)|(\^)|(\*)|(\+)|(\S))?")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.lastindex is None:
            break
        kind = ("var", "int", "^", "*", "+", "bad")[m.lastindex - 1]
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(6)!r}", start)
        out.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    return out


def parse(text: str) -> BiPoly:
    """Parse a sum of products such as ``"a^2*b + c*x*y"``.

    Multiplication may be written ``*`` or by juxtaposing variables
    (``a^2b``); a digit right after a variable (``a2b``) is rejected since it
    reads both as an exponent and as a coefficient.
    """
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty polynomial", 0)
    acc: set[int] = set()
    i = 0
    n = len(toks)

    def expect_factor(i):
        if i >= n:
            raise ParseError("expected a variable or constant", len(text))
        kind, val, pos = toks[i]
        if kind == "var":
            exps = [0] * NVARS
            e = 1
            i += 1
            if i < n and toks[i][0] == "int" and toks[i][2] == pos + 1:
                raise ParseError("exponent must be introduced by '^'", toks[i][2])
            if i < n and toks[i][0] == "^":
                if i + 1 >= n or toks[i + 1][0] != "int":
                    raise ParseError("expected an exponent after '^'", toks[i][2])
                e = int(toks[i + 1][1])
                i += 2
            exps[VARS.index(val)] = e
            return ("mono", pack(exps)), i
        if kind == "int":
            return ("const", int(val) % 2), i + 1
        raise ParseError(f"unexpected {val!r}", pos)

    while True:
        coeff = 1
        key = ONE_KEY
        f, i = expect_factor(i)
        while True:
            if f[0] == "mono":
                key = key_mul(key, f[1])
            else:
                coeff &= f[1]
            if i < n and toks[i][0] == "*":
                f, i = expect_factor(i + 1)
                continue
            if i < n and toks[i][0] == "var":
                f, i = expect_factor(i)
                continue
            break
        if coeff:
            acc ^= {key}
        if i == n:
            break
        if toks[i][0] != "+":
            raise ParseError(f"unexpected {toks[i][1]!r}", toks[i][2])
        i += 1
        if i == n:
            raise ParseError("dangling '+'", toks[i - 1][2])
    return BiPoly(acc)


def format_poly(p: BiPoly) -> str:
    if not p:
        return "0"
    return "+".join(format_key(k) for k in p.keys)


def parse_list(text: str) -> list[BiPoly]:
    return [parse(s) for s in text.split(",")]


# ---------------------------------------------------------------- queries


def coefficient(p: BiPoly, m: Union[Monomial, str, int]) -> int:
    if isinstance(m, str):
        m = Monomial.parse(m)
    k = m.key if isinstance(m, Monomial) else m
    return 1 if k in p.term_set else 0


def _degree_monomials_3(d: int) -> list[tuple[int, int, int]]:
    return [(d - j - k, j, k) for k in range(d + 1) for j in range(d - k + 1)]


@lru_cache(maxsize=None)
def graded_keys(dL: int, dh: int) -> tuple[int, ...]:
    """Keys of all monomials of bidegree (dL, dh), leading monomial first."""
    if dL < 0 or dh < 0:
        return ()
    out = [pack(l + h) for l in _degree_monomials_3(dL) for h in _degree_monomials_3(dh)]
    out.sort(reverse=True)
    return tuple(out)


def graded_basis(d) -> list[Monomial]:
    bd = as_bidegree(d)
    return [Monomial.from_key(k) for k in graded_keys(bd.dL, bd.dh)]


def binom2(k: int) -> int:
    """C(k, 2) = k(k-1)/2 for every integer k."""
    return k * (k - 1) // 2


def h0_line(dL: int, dh: int) -> int:
    if dL < 0 or dh < 0:
        return 0
    return binom2(dL + 2) * binom2(dh + 2)


CHART_L = ("a", "b", "c")
CHART_H = ("x", "y", "z")


def dehomogenize(p: BiPoly, chart) -> BiPoly:
    """Set the two chart variables (one of a,b,c and one of x,y,z) to 1."""
    u, v = chart
    iu = VARS.index(u) if isinstance(u, str) else u
    iv = VARS.index(v) if isinstance(v, str) else v
    if iu not in L_VARS or iv not in H_VARS:
        raise ValueError(f"chart {chart} must pick one of a,b,c and one of x,y,z")
    acc: set[int] = set()
    for k in p.term_set:
        e = list(unpack(k))
        e[iu] = e[iv] = 0
        acc ^= {pack(e)}
    return BiPoly(acc)


def random_bipoly(d, rng: random.Random) -> BiPoly:
    bd = as_bidegree(d)
    keys = graded_keys(bd.dL, bd.dh)
    return BiPoly((k for k in keys if rng.getrandbits(1)), bd)


def polys_from_vector(vec, keys: Sequence[int], bidegree=None) -> BiPoly:
    return BiPoly((keys[i] for i, v in enumerate(vec) if v), bidegree)


F_POLY = parse("a*x+b*y+c*z")
