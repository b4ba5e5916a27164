"""Linear algebra over the prime field F_p (small p).

Matrices are numpy arrays of residues, or :class:`MatGFp` wrappers that may
hold sparse rows.  Vectors act as rows; the kernel of ``M`` is
``{x : M @ x = 0}``.

The kernel basis is canonical: one vector per free column (non-pivot column of
the reduced row echelon form), in increasing column order, with a 1 in that
free column and 0 in every other free column.  It depends only on the row
space, not on row order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SPARSE_COLUMN_CAP = 30_000
_CHUNK = 4096


def _as_array(M, p=None) -> tuple[np.ndarray, int]:
    if isinstance(M, MatGFp):
        return M.to_dense(), M.p
    if p is None:
        raise TypeError("p is required for plain arrays")
    return np.asarray(M) % p, p


def _float_type(inner: int, p: int):
    return np.float32 if inner * (p - 1) ** 2 < 2**24 else np.float64


def _mod_float(x: np.ndarray, p: int) -> np.ndarray:
    """Reduce integer-valued floats mod p in place (np.mod is much slower)."""
    q = x * (1.0 / p)
    np.floor(q, out=q)
    x -= p * q
    # floor may be off by one for large |x|
    np.subtract(x, p, out=x, where=x >= p)
    np.add(x, p, out=x, where=x < 0)
    return x


def matmul_mod(A, B, p: int) -> np.ndarray:
    """(A @ B) mod p via BLAS for residues; exact while inner sums fit the float mantissa."""
    dtype = _float_type(A.shape[-1], p)
    out = np.asarray(A, dtype=dtype) @ np.asarray(B, dtype=dtype)
    return _mod_float(out, p).astype(np.uint8)


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if len(rows):
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r].astype(np.uint8), pivots


def _kernel_from_rref(R: np.ndarray, pivots, n: int, p: int) -> np.ndarray:
    free = np.setdiff1d(np.arange(n), np.asarray(pivots, dtype=np.int64))
    K = np.zeros((len(free), n), dtype=np.uint8)
    K[np.arange(len(free)), free] = 1
    if len(pivots):
        K[:, pivots] = ((-R[:, free].astype(np.int64).T) % p).astype(np.uint8)
    return K


@dataclass
class MatGFp:
    """Matrix over F_p stored densely (uint8) or as sorted sparse rows."""

    p: int
    rows: int
    cols: int
    dense: np.ndarray | None = None
    sparse: list[tuple[np.ndarray, np.ndarray]] | None = field(default=None, repr=False)

    @classmethod
    def from_dense(cls, A, p: int) -> "MatGFp":
        A = (np.asarray(A, dtype=np.int64) % p).astype(np.uint8)
        return cls(p, A.shape[0], A.shape[1], dense=A)

    @classmethod
    def from_sparse(cls, rows, cols: int, p: int) -> "MatGFp":
        clean = []
        for cidx, vals in rows:
            cidx, vals = _normalize_sparse_row(cidx, vals, p)
            clean.append((cidx, vals))
        return cls(p, len(clean), cols, sparse=clean)

    def to_dense(self) -> np.ndarray:
        if self.dense is not None:
            return self.dense
        A = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, (c, v) in enumerate(self.sparse):
            A[i, c] = v
        return A

    def __matmul__(self, x):
        return matmul_mod(self.to_dense(), np.asarray(x), self.p)


def _normalize_sparse_row(cidx, vals, p):
    cidx = np.asarray(cidx, dtype=np.int64)
    vals = np.asarray(vals, dtype=np.int64) % p
    # merge repeated columns, drop zeros, sort
    if len(cidx):
        uniq, inv_ = np.unique(cidx, return_inverse=True)
        acc = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(acc, inv_, vals)
        acc %= p
        keep = acc != 0
        return uniq[keep], acc[keep].astype(np.uint8)
    return cidx, vals.astype(np.uint8)


def rank(M, p=None) -> int:
    A, p = _as_array(M, p)
    return len(rref(A, p)[1])


def kernel_basis(M, p=None) -> np.ndarray:
    """Canonical kernel basis as the rows of a (k, cols) array."""
    A, p = _as_array(M, p)
    R, piv = rref(A, p)
    return _kernel_from_rref(R, piv, A.shape[1], p)


def solve(M, b, p=None):
    """Particular solution of M x = b with free variables 0, or None if inconsistent."""
    A, p = _as_array(M, p)
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    if b.shape[0] != A.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape[0]} rows vs rhs of length {b.shape[0]}")
    n = A.shape[1]
    R, piv = rref(np.hstack([A.astype(np.int64), b[:, None]]), p)
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.uint8)
    x[piv] = R[:, n]
    return x


def row_space_rref(vectors, p: int) -> np.ndarray:
    """Canonical basis (RREF rows) of the span of the given vectors."""
    vectors = np.atleast_2d(np.asarray(vectors))
    if vectors.size == 0:
        return np.zeros((0, vectors.shape[-1]), dtype=np.uint8)
    return rref(vectors, p)[0]


class StreamingEliminator:
    """Incremental row reduction for tall systems with a moderate column count.

    Rows arrive in batches (dense arrays or sparse ``(cols, vals)`` pairs) and
    are reduced against the current pivot rows, which are kept as one dense
    matrix in reduced row echelon form.  Only pivot rows are retained, so
    memory is bounded by ``rank * cols`` bytes however many rows are fed.
    The final echelon form is the unique RREF of the row space, hence
    independent of arrival order.
    """

    def __init__(self, cols: int, p: int, *, cap: int = SPARSE_COLUMN_CAP):
        if cols > cap:
            raise ValueError(f"{cols} columns exceed the solver cap {cap}")
        self.cols = cols
        self.p = p
        self.R = np.zeros((0, cols), dtype=np.uint8)
        self.pivots = np.zeros(0, dtype=np.int64)
        self.rows_seen = 0
        self._dtype = _float_type(cols, p)
        self._set_cache()

    def _set_cache(self):
        self._free = np.setdiff1d(np.arange(self.cols), self.pivots)
        self._Rf = np.ascontiguousarray(self.R[:, self._free], dtype=self._dtype)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_sparse(self, rows):
        buf = []
        for cidx, vals in rows:
            buf.append((cidx, vals))
            if len(buf) == _CHUNK:
                self.add_dense(MatGFp.from_sparse(buf, self.cols, self.p).to_dense())
                buf = []
        if buf:
            self.add_dense(MatGFp.from_sparse(buf, self.cols, self.p).to_dense())

    def add_dense(self, B):
        B = np.asarray(B)
        if B.ndim == 1:
            B = B[None, :]
        self.rows_seen += B.shape[0]
        for start in range(0, B.shape[0], _CHUNK):
            self._add_chunk(B[start : start + _CHUNK])

    def _add_chunk(self, B):
        p = self.p
        if B.dtype != np.uint8 or B.max(initial=0) >= p:
            B = (B.astype(np.int64) % p).astype(np.uint8)
        B = B[B.any(axis=1)]
        if not len(B):
            return
        if self.rank and self.rank < self.cols:
            # pivot columns reduce to zero; only the free part needs computing
            Bf = B[:, self._free].astype(self._dtype)
            Bf -= B[:, self.pivots].astype(self._dtype) @ self._Rf
            keep = _mod_float(Bf, p).any(axis=1)
            B = np.zeros((int(keep.sum()), self.cols), dtype=np.uint8)
            B[:, self._free] = Bf[keep]
        elif self.rank == self.cols:
            return
        if not len(B):
            return
        Bn, newpiv = rref(B, p)
        newpiv = np.asarray(newpiv, dtype=np.int64)
        if self.rank:
            self.R = ((self.R.astype(np.int16) - matmul_mod(self.R[:, newpiv], Bn, p)) % p).astype(np.uint8)
        R = np.vstack([self.R, Bn])
        piv = np.concatenate([self.pivots, newpiv])
        order = np.argsort(piv, kind="stable")
        self.R, self.pivots = R[order], piv[order]
        self._set_cache()

    def kernel_basis(self) -> np.ndarray:
        return _kernel_from_rref(self.R, self.pivots, self.cols, self.p)


def sparse_rank_kernel(rows, cols: int, p: int, *, cap: int = SPARSE_COLUMN_CAP):
    """Rank and canonical kernel basis of a streamed sparse system."""
    elim = StreamingEliminator(cols, p, cap=cap)
    elim.add_sparse(rows)
    return elim.rank, elim.kernel_basis()
