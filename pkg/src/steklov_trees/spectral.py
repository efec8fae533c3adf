"""Steklov spectrum of a tree via harmonic extension and the Schur complement.

The boundary is the leaf set.  The Dirichlet-to-Neumann matrix is the
Schur complement of the graph Laplacian onto the leaf block; its
eigenvalues, sorted ascending, form the Steklov spectrum
0 = lambda_1 <= lambda_2 <= ... <= lambda_m with m the number of leaves.

The eigensolver is a cyclic Jacobi iteration written out here rather
than delegated, so that this route stays numerically independent of the
distance-matrix route in the flux module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trees import Tree, leaf_set

# Off-diagonal Frobenius norm below which a Jacobi sweep stops.
_JACOBI_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 60

# |lambda_1| below this is snapped to exactly 0 (it vanishes in theory).
_ZERO_SNAP = 1e-10


@dataclass(frozen=True)
class BoundaryValues:
    """Dirichlet data on the leaves, indexed by leaf_set order."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(x) for x in self.values))

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)


@dataclass(frozen=True)
class Spectrum:
    """Nondecreasing Steklov eigenvalues, one per boundary leaf."""

    eigenvalues: tuple[float, ...]

    def __post_init__(self) -> None:
        lams = self.eigenvalues
        if any(b < a for a, b in zip(lams, lams[1:])):
            raise ValueError("eigenvalues must be nondecreasing")
        if lams and lams[0] < -_ZERO_SNAP:
            raise ValueError(f"negative bottom eigenvalue {lams[0]}")


def laplacian_matrix(t: Tree) -> np.ndarray:
    """Dense combinatorial Laplacian L = D - A."""
    lap = np.zeros((t.n, t.n))
    for u, v in t.edges:
        lap[u, u] += 1.0
        lap[v, v] += 1.0
        lap[u, v] -= 1.0
        lap[v, u] -= 1.0
    return lap


def harmonic_extension(t: Tree, g: BoundaryValues | np.ndarray) -> np.ndarray:
    """Extend leaf values g to the unique interior-harmonic function.

    g is indexed by leaf_set order; a raw array is accepted in place of
    BoundaryValues.  The interior block of the Laplacian is an M-matrix
    and always nonsingular on a tree, so a direct solve is exact up to
    rounding; with an empty interior the extension is g itself.
    """
    boundary = leaf_set(t)
    g = g.as_array() if isinstance(g, BoundaryValues) else np.asarray(g, dtype=float)
    if g.shape != (len(boundary),):
        raise ValueError(f"expected {len(boundary)} boundary values, got shape {g.shape}")
    interior = [v for v in range(t.n) if t.degrees[v] > 1]
    values = np.zeros(t.n)
    values[boundary] = g
    if interior:
        lap = laplacian_matrix(t)
        rhs = -lap[np.ix_(interior, boundary)] @ g
        values[interior] = np.linalg.solve(lap[np.ix_(interior, interior)], rhs)
    return values


def dtn_matrix(t: Tree) -> np.ndarray:
    """Dirichlet-to-Neumann matrix on the leaves.

    Schur complement L_BB - L_BI L_II^{-1} L_IB of the Laplacian;
    symmetric, positive semidefinite, row sums zero.  Output is
    symmetrized to kill the last-bit asymmetry of the solve.
    """
    boundary = leaf_set(t)
    interior = [v for v in range(t.n) if t.degrees[v] > 1]
    lap = laplacian_matrix(t)
    l_bb = lap[np.ix_(boundary, boundary)]
    if not interior:
        return l_bb
    l_bi = lap[np.ix_(boundary, interior)]
    l_ib = lap[np.ix_(interior, boundary)]
    l_ii = lap[np.ix_(interior, interior)]
    schur = l_bb - l_bi @ np.linalg.solve(l_ii, l_ib)
    return (schur + schur.T) / 2.0


def jacobi_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate away every off-diagonal pair until the off-diagonal
    Frobenius norm drops below _JACOBI_TOL (scaled by the matrix norm).
    Raises on non-convergence, which for the matrix sizes here would
    signal a bug rather than a hard spectrum.
    """
    a = np.array(a, dtype=float)
    m = a.shape[0]
    if a.shape != (m, m):
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if m == 1:
        return a[0, :1].copy()
    scale = max(np.max(np.abs(a)), 1.0)
    for _ in range(_JACOBI_MAX_SWEEPS):
        # Off-diagonal norm from the entries themselves; the textbook
        # trace-difference form cancels catastrophically near convergence.
        off = float(np.sqrt(((a - np.diag(np.diag(a))) ** 2).sum()))
        if off <= _JACOBI_TOL * scale:
            return np.sort(np.diag(a))
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1.0e10:
                    tan = 0.5 / theta
                else:
                    tan = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                cos = 1.0 / np.sqrt(tan * tan + 1.0)
                sin = tan * cos
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = cos * rp - sin * rq
                a[q, :] = sin * rp + cos * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = cos * cp - sin * cq
                a[:, q] = sin * cp + cos * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise RuntimeError(f"Jacobi eigensolver failed to converge on a {m}x{m} matrix")


def steklov_spectrum(t: Tree) -> Spectrum:
    """All Steklov eigenvalues of t, ascending, bottom snapped to 0."""
    lams = jacobi_eigenvalues(dtn_matrix(t))
    out = list(map(float, lams))
    if abs(out[0]) <= _ZERO_SNAP:
        out[0] = 0.0
    return Spectrum(tuple(out))


def lambda2_numeric(t: Tree) -> float:
    """First nonzero Steklov eigenvalue (second-smallest overall)."""
    return steklov_spectrum(t).eigenvalues[1]
