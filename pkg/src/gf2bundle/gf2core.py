"""Dense linear algebra over GF(2) on bit-packed rows."""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np
from numba import njit

WORD = 64


def _nwords(ncols: int) -> int:
    return (ncols + WORD - 1) // WORD


@njit(cache=True)
def _rref(words, ncols, full):
    """In-place row echelon form. With ``full`` the pivot columns are cleared
    above the pivots as well, giving the reduced form."""
    m, nw = words.shape
    r = 0
    pivots = np.empty(min(m, ncols), dtype=np.int64)
    for c in range(ncols):
        if r == m:
            break
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        p = -1
        for i in range(r, m):
            if words[i, w] & bit:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for k in range(w, nw):
                t = words[r, k]
                words[r, k] = words[p, k]
                words[p, k] = t
        start = 0 if full else r + 1
        for i in range(start, m):
            if i != r and (words[i, w] & bit):
                for k in range(w, nw):
                    words[i, k] ^= words[r, k]
        pivots[r] = c
        r += 1
    return r, pivots[:r]


@njit(cache=True)
def _kernel_from_rref(words, ncols, rank, pivots):
    nw = words.shape[1]
    is_pivot = np.zeros(ncols, dtype=np.bool_)
    for i in range(rank):
        is_pivot[pivots[i]] = True
    nfree = ncols - rank
    out = np.zeros((nfree, nw), dtype=np.uint64)
    j = 0
    for f in range(ncols):
        if is_pivot[f]:
            continue
        fw = f >> 6
        fbit = np.uint64(1) << np.uint64(f & 63)
        out[j, fw] |= fbit
        for i in range(rank):
            if words[i, fw] & fbit:
                p = pivots[i]
                out[j, p >> 6] |= np.uint64(1) << np.uint64(p & 63)
        j += 1
    return out


@njit(cache=True)
def _matmul(a, b, ncols_a):
    m = a.shape[0]
    nwb = b.shape[1]
    out = np.zeros((m, nwb), dtype=np.uint64)
    for i in range(m):
        for k in range(ncols_a):
            if a[i, k >> 6] & (np.uint64(1) << np.uint64(k & 63)):
                for t in range(nwb):
                    out[i, t] ^= b[k, t]
    return out


class BitMatrix:
    """A rows x cols matrix over GF(2); row i is stored little-endian in
    ``words[i]`` (column j is bit j % 64 of word j // 64)."""

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: Optional[np.ndarray] = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        nw = _nwords(cols)
        if words is None:
            words = np.zeros((rows, nw), dtype=np.uint64)
        elif words.shape != (rows, nw) or words.dtype != np.uint64:
            raise ValueError(f"storage shape {words.shape} does not fit {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.words = words

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        for i in range(n):
            m.words[i, i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        return m

    @classmethod
    def from_dense(cls, array) -> "BitMatrix":
        a = np.asarray(array, dtype=np.uint8)
        if a.ndim != 2:
            raise ValueError("expected a 2-dimensional array")
        rows, cols = a.shape
        nw = _nwords(cols)
        packed = np.packbits(a & 1, axis=1, bitorder="little")
        buf = np.zeros((rows, nw * 8), dtype=np.uint8)
        buf[:, : packed.shape[1]] = packed
        return cls(rows, cols, buf.view("<u8").astype(np.uint64, copy=False).reshape(rows, nw))

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> "BitMatrix":
        """Build from (i, j) positions; repeated positions cancel mod 2."""
        m = cls(rows, cols)
        w = m.words
        for i, j in entries:
            w[i, j >> 6] ^= np.uint64(1) << np.uint64(j & 63)
        return m

    @classmethod
    def from_row_sets(cls, cols: int, row_sets: Iterable[Iterable[int]]) -> "BitMatrix":
        rs = list(row_sets)
        return cls.from_entries(len(rs), cols, ((i, j) for i, s in enumerate(rs) for j in s))

    def to_dense(self) -> np.ndarray:
        if self.cols == 0 or self.rows == 0:
            return np.zeros((self.rows, self.cols), dtype=np.uint8)
        b = np.ascontiguousarray(self.words).view(np.uint8).reshape(self.rows, -1)
        return np.unpackbits(b, axis=1, bitorder="little")[:, : self.cols].copy()

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.words.copy())

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int((int(self.words[i, j >> 6]) >> (j & 63)) & 1)

    def row_support(self, i: int) -> list[int]:
        """Column indices of the nonzero entries of row i."""
        out = []
        for k, word in enumerate(self.words[i]):
            word = int(word)
            while word:
                low = word & -word
                out.append(k * WORD + low.bit_length() - 1)
                word ^= low
        return out

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, BitMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            return BitMatrix(self.rows, other.cols, _matmul(self.words, other.words, self.cols))
        v = np.asarray(other, dtype=np.uint8).reshape(-1)
        if v.shape[0] != self.cols:
            raise ValueError(f"vector length {v.shape[0]} != {self.cols} columns")
        col = BitMatrix.from_dense(v.reshape(-1, 1))
        return (self @ col).to_dense().reshape(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.shape == other.shape
            and bool(np.array_equal(self.words, other.words))
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return BitMatrix.from_dense(np.hstack([self.to_dense(), other.to_dense()]))

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return BitMatrix(self.rows + other.rows, self.cols, np.vstack([self.words, other.words]))

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> list[np.ndarray]:
        return kernel_basis(self)


def echelon(M: BitMatrix, full: bool = True) -> tuple[BitMatrix, list[int]]:
    """Row echelon form (reduced when ``full``) and the pivot columns."""
    w = M.words.copy()
    r, piv = _rref(w, M.cols, full)
    return BitMatrix(r, M.cols, w[:r].copy()), [int(p) for p in piv]


def rank(M: BitMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    w = M.words.copy()
    r, _ = _rref(w, M.cols, False)
    return int(r)


def kernel_matrix(M: BitMatrix) -> BitMatrix:
    """Kernel basis as the rows of a (cols - rank) x cols matrix."""
    w = M.words.copy()
    if M.rows == 0:
        r, piv = 0, np.empty(0, dtype=np.int64)
    else:
        r, piv = _rref(w, M.cols, True)
    k = _kernel_from_rref(w, M.cols, r, piv)
    return BitMatrix(k.shape[0], M.cols, k)


def kernel_basis(M: BitMatrix) -> list[np.ndarray]:
    K = kernel_matrix(M).to_dense()
    return [K[i] for i in range(K.shape[0])]


def solve(M: BitMatrix, b) -> Optional[np.ndarray]:
    """Some x with M x = b, or None when the system is inconsistent."""
    bv = np.asarray(b, dtype=np.uint8).reshape(-1)
    if bv.shape[0] != M.rows:
        raise ValueError(f"right-hand side has length {bv.shape[0]}, expected {M.rows}")
    aug = M.hstack(BitMatrix.from_dense(bv.reshape(-1, 1)))
    R, piv = echelon(aug, full=True)
    if piv and piv[-1] == M.cols:
        return None
    x = np.zeros(M.cols, dtype=np.uint8)
    for i, p in enumerate(piv):
        x[p] = R[i, M.cols]
    return x


def row_space_complement(base: BitMatrix, extra: BitMatrix) -> list[int]:
    """Indices of rows of ``extra`` that extend a basis of rowspace(base)
    greedily (each chosen row is independent of base and earlier picks)."""
    if base.cols != extra.cols:
        raise ValueError("column counts differ")
    chosen: list[int] = []
    E, piv = echelon(base, full=True) if base.rows else (BitMatrix(0, base.cols), [])
    current = E
    r0 = current.rows
    for i in range(extra.rows):
        trial = current.vstack(BitMatrix(1, extra.cols, extra.words[i : i + 1].copy()))
        if rank(trial) > current.rows:
            chosen.append(i)
            current, _ = echelon(trial, full=True)
    assert current.rows == r0 + len(chosen)
    return chosen
