"""Core value types shared across the package.

Dense matrices are plain float64 ``numpy.ndarray`` objects of shape
``(rows, cols)``; the helpers here validate the invariants (finite
entries, 2-D shape) at construction boundaries. Iterates of the
completion algorithms are never materialized densely: they are carried
as rank factorizations ``U @ V.T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NonOrthonormalFactorError

ORTHO_TOL = 1e-8
RECON_TOL = 1e-8


def as_dense(a, *, name: str = "matrix") -> np.ndarray:
    """Validate and convert ``a`` to a float64 2-D array with finite entries."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


@dataclass(frozen=True)
class Factorization:
    """A rank factorization ``U @ V.T`` of an m-by-n matrix.

    ``U`` is m-by-r and ``V`` is n-by-r. The column count r may exceed
    the true rank of the product.
    """

    U: np.ndarray
    V: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "U", as_dense(self.U, name="U"))
        object.__setattr__(self, "V", as_dense(self.V, name="V"))
        if self.U.shape[1] != self.V.shape[1]:
            raise ValueError(
                f"factor column mismatch: U has {self.U.shape[1]}, V has {self.V.shape[1]}"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.U.shape[0], self.V.shape[0])

    @property
    def rank(self) -> int:
        return self.U.shape[1]

    def dense(self) -> np.ndarray:
        return self.U @ self.V.T

    def entries(self, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
        """Evaluate (U V^T)[rows, cols] elementwise without forming the product."""
        return np.einsum("ij,ij->i", self.U[rows], self.V[cols])

    def restrict(self, rows: np.ndarray | None, cols: np.ndarray | None) -> "Factorization":
        U = self.U if rows is None else self.U[np.asarray(rows)]
        V = self.V if cols is None else self.V[np.asarray(cols)]
        return Factorization(U, V)

    def append(self, U_new: np.ndarray, V_new: np.ndarray) -> "Factorization":
        """Append columns to both factors (rank grows by U_new.shape[1])."""
        U_new = as_dense(U_new, name="U_new")
        V_new = as_dense(V_new, name="V_new")
        return Factorization(np.hstack([self.U, U_new]), np.hstack([self.V, V_new]))

    @staticmethod
    def zero(m: int, n: int) -> "Factorization":
        return Factorization(np.zeros((m, 0)), np.zeros((n, 0)))


@dataclass(frozen=True)
class SvdResult:
    """An SVD ``left @ diag(singular) @ right.T`` with orthonormal factors."""

    left: np.ndarray
    singular: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "left", as_dense(self.left, name="left"))
        object.__setattr__(self, "right", as_dense(self.right, name="right"))
        s = np.asarray(self.singular, dtype=np.float64).ravel()
        object.__setattr__(self, "singular", s)
        k = s.size
        if self.left.shape[1] != k or self.right.shape[1] != k:
            raise ValueError("factor widths must match the number of singular values")
        if np.any(np.diff(s) > 1e-12 * max(1.0, abs(s[0]) if k else 1.0)):
            raise ValueError("singular values must be nonincreasing")
        if np.any(s < -1e-15):
            raise ValueError("singular values must be nonnegative")
        for B, name in ((self.left, "left"), (self.right, "right")):
            if k and not np.allclose(B.T @ B, np.eye(k), atol=ORTHO_TOL * 10):
                raise NonOrthonormalFactorError(f"{name} factor is not orthonormal")

    def dense(self) -> np.ndarray:
        return (self.left * self.singular) @ self.right.T

    def to_factorization(self) -> Factorization:
        """Fold singular values into the left factor."""
        return Factorization(self.left * self.singular, self.right)


@dataclass(frozen=True)
class IndexSubsets:
    """Kept row/column index sets of a parent matrix, sorted ascending."""

    S: np.ndarray
    T: np.ndarray
    parent_shape: tuple[int, int]

    def __post_init__(self):
        m, n = self.parent_shape
        S = np.unique(np.asarray(self.S, dtype=np.intp))
        T = np.unique(np.asarray(self.T, dtype=np.intp))
        if S.size and (S[0] < 0 or S[-1] >= m):
            raise ValueError("row indices out of range")
        if T.size and (T[0] < 0 or T[-1] >= n):
            raise ValueError("column indices out of range")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)

    @staticmethod
    def full(m: int, n: int) -> "IndexSubsets":
        return IndexSubsets(np.arange(m), np.arange(n), (m, n))

    @property
    def dropped_rows(self) -> np.ndarray:
        return np.setdiff1d(np.arange(self.parent_shape[0]), self.S)

    @property
    def dropped_cols(self) -> np.ndarray:
        return np.setdiff1d(np.arange(self.parent_shape[1]), self.T)

    def intersect(self, other: "IndexSubsets") -> "IndexSubsets":
        if other.parent_shape != self.parent_shape:
            raise ValueError("parent shapes differ")
        return IndexSubsets(
            np.intersect1d(self.S, other.S),
            np.intersect1d(self.T, other.T),
            self.parent_shape,
        )


@dataclass
class RunMetadata:
    """Mutable bag recording desk-profile events (probability clamps etc.)."""

    clamped_probs: list = field(default_factory=list)

    def record_clamp(self, requested: float, served: float, where: str) -> None:
        self.clamped_probs.append(
            {"requested": float(requested), "served": float(served), "where": where}
        )

    @property
    def any_clamped(self) -> bool:
        return bool(self.clamped_probs)
