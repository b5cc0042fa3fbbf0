"""Left-invariant geometric data on a Lie group, given at the identity.

A manifold here is a frame {e_i}, structure constants C[k][i][j] with
[e_i, e_j] = C[k][i][j] e_k, a constant-component metric g and an almost
complex structure J (column j of the J matrix is J e_j).  All covariant
quantities reduce to finite algebra on these arrays, so every identity can
be certified without discretization error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .tensors import DenseTensor, MetricPair, _as_readonly, residual

JACOBI_TOLERANCE = 1e-10
MATRIX_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LieFrameManifold:
    """Structure constants, metric and almost complex structure in one frame."""

    dim: int
    structure_constants: NDArray = field(repr=False)
    metric: NDArray = field(repr=False)
    J: NDArray = field(repr=False)

    def __post_init__(self) -> None:
        d = self.dim
        if d <= 0 or d % 2 != 0:
            raise ValueError(f"frame dimension must be even and positive, got {d}")
        C = np.asarray(self.structure_constants, dtype=float)
        g = np.asarray(self.metric, dtype=float)
        J = np.asarray(self.J, dtype=float)
        if C.shape != (d, d, d):
            raise ValueError(f"structure constants shape {C.shape} != {(d, d, d)}")
        if g.shape != (d, d):
            raise ValueError(f"metric shape {g.shape} != {(d, d)}")
        if J.shape != (d, d):
            raise ValueError(f"J shape {J.shape} != {(d, d)}")
        for name, arr in (("structure_constants", C), ("metric", g), ("J", J)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")
        object.__setattr__(self, "structure_constants", _as_readonly(C))
        object.__setattr__(self, "metric", _as_readonly(g))
        object.__setattr__(self, "J", _as_readonly(J))


@dataclass(frozen=True)
class ConnectionCoeffs:
    """Frame connection coefficients: nabla_{e_i} e_j = gamma[k][i][j] e_k."""

    gamma: NDArray = field(repr=False)

    def __post_init__(self) -> None:
        gamma = np.asarray(self.gamma, dtype=float)
        if gamma.ndim != 3 or len(set(gamma.shape)) != 1:
            raise ValueError(f"gamma must be (d,d,d), got shape {gamma.shape}")
        if not np.all(np.isfinite(gamma)):
            raise ValueError("gamma contains non-finite entries")
        object.__setattr__(self, "gamma", _as_readonly(gamma))

    @property
    def dim(self) -> int:
        return self.gamma.shape[0]


@dataclass(frozen=True)
class Violation:
    name: str
    residual: float


@dataclass(frozen=True)
class ValidationOutcome:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.name} (residual {v.residual:.3e})" for v in self.violations)


class InvalidManifoldError(ValueError):
    """Raised when an operation requires a manifold that failed validation."""

    def __init__(self, outcome: ValidationOutcome):
        super().__init__(f"manifold failed validation: {outcome.describe()}")
        self.outcome = outcome


def canonical_norden_pair(dim: int) -> tuple[NDArray, NDArray]:
    """The canonical split-signature pair: g = diag(1..1,-1..-1), J e_i = e_{n+i}."""
    if dim <= 0 or dim % 2 != 0:
        raise ValueError(f"dimension must be even and positive, got {dim}")
    n = dim // 2
    g = np.diag([1.0] * n + [-1.0] * n)
    J = np.zeros((dim, dim))
    for i in range(n):
        J[n + i, i] = 1.0
        J[i, n + i] = -1.0
    return g, J


def jacobi_residual(C: NDArray) -> float:
    """Max-abs of the cyclic sum of [[e_i,e_j],e_l] in frame components."""
    T = np.einsum("mij,pml->pijl", C, C)
    cyc = T + T.transpose(0, 2, 3, 1) + T.transpose(0, 3, 1, 2)
    return float(np.max(np.abs(cyc))) if cyc.size else 0.0


def validate_manifold(
    m: LieFrameManifold,
    jacobi_tolerance: float = JACOBI_TOLERANCE,
    matrix_tolerance: float = MATRIX_TOLERANCE,
) -> ValidationOutcome:
    """Check every geometric invariant, reporting all violations with residuals.

    Shape errors are raised by the LieFrameManifold constructor; this function
    only judges the geometry of well-shaped data.
    """
    C, g, J = m.structure_constants, m.metric, m.J
    d = m.dim
    violations: list[Violation] = []

    r = residual(C, -C.transpose(0, 2, 1))
    if r > matrix_tolerance:
        violations.append(Violation("bracket antisymmetry C[k][i][j]=-C[k][j][i]", r))

    r = jacobi_residual(C)
    if r > jacobi_tolerance:
        violations.append(Violation("Jacobi identity", r))

    r = residual(J @ J, -np.eye(d))
    if r > matrix_tolerance:
        violations.append(Violation("almost complex structure J^2=-I", r))

    r = residual(J.T @ g @ J, -g)
    if r > matrix_tolerance:
        violations.append(Violation("Norden compatibility J^T g J = -g", r))

    r = residual(g, g.T)
    if r > matrix_tolerance:
        violations.append(Violation("metric symmetry", r))

    eigs = np.linalg.eigvalsh(0.5 * (g + g.T))
    n_small = int(np.sum(np.abs(eigs) <= matrix_tolerance))
    if n_small:
        violations.append(
            Violation("metric nondegeneracy", float(np.min(np.abs(eigs))))
        )
    else:
        n_pos = int(np.sum(eigs > 0))
        if n_pos != d // 2:
            violations.append(
                Violation(
                    f"metric signature ({n_pos},{d-n_pos}) != ({d//2},{d//2})",
                    float(abs(n_pos - d // 2)),
                )
            )

    return ValidationOutcome(ok=not violations, violations=tuple(violations))


def metric_pair(m: LieFrameManifold) -> MetricPair:
    return MetricPair.from_metric(m.metric, m.J, tol=1e-10)


def levi_civita(m: LieFrameManifold) -> ConnectionCoeffs:
    """Levi-Civita connection of a left-invariant metric.

    With constant-component g the Koszul formula collapses to
    2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i).
    """
    C, g = m.structure_constants, m.metric
    try:
        g_inv = np.linalg.inv(g)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(f"metric is singular: {exc}") from exc
    low = 0.5 * (
        np.einsum("mij,mk->ijk", C, g)
        + np.einsum("mki,mj->ijk", C, g)
        + np.einsum("mkj,mi->ijk", C, g)
    )
    gamma = np.einsum("km,ijm->kij", g_inv, low)
    return ConnectionCoeffs(gamma=gamma)


def covariant_derivative(
    m: LieFrameManifold, conn: ConnectionCoeffs, t: DenseTensor
) -> DenseTensor:
    """Covariant derivative of an all-covariant left-invariant tensor.

    Component functions are constant in the frame, so only connection terms
    survive: (nabla t)[i][a_1..a_r] = -sum_s gamma[m][i][a_s] t[a_1..m..a_r].
    The derivative direction is slot 0 of the result.
    """
    if t.rank == 0:
        return DenseTensor.zeros(m.dim, 1)
    if t.dim != m.dim:
        raise ValueError(f"tensor dim {t.dim} != manifold dim {m.dim}")
    if t.rank > 8:
        raise ValueError("covariant_derivative supports rank <= 8")
    gamma = conn.gamma
    letters = "abcdefgh"[: t.rank]
    out = np.zeros((m.dim,) * (t.rank + 1))
    for s in range(t.rank):
        t_letters = letters[:s] + "m" + letters[s + 1 :]
        out -= np.einsum(f"mi{letters[s]},{t_letters}->i{letters}", gamma, t.components)
    return DenseTensor(dim=m.dim, rank=t.rank + 1, components=out)


def connection_checks(m: LieFrameManifold, conn: ConnectionCoeffs) -> dict[str, float]:
    """Residuals of metric compatibility and torsion-freeness for `conn`."""
    C, g = m.structure_constants, m.metric
    gamma = conn.gamma
    low = np.einsum("kij,km->ijm", gamma, g)  # g(nabla_i e_j, e_m) indexed [i][j][m]
    compat = residual(low, -low.transpose(0, 2, 1))
    torsion_free = residual(gamma - gamma.transpose(0, 2, 1), C)
    return {"metric_compatibility": compat, "torsion_freeness": torsion_free}


def torsion(m: LieFrameManifold, conn: ConnectionCoeffs) -> DenseTensor:
    """Torsion T[k][i][j] of a connection: gamma[k][i][j]-gamma[k][j][i]-C[k][i][j]."""
    gamma = conn.gamma
    T = gamma - gamma.transpose(0, 2, 1) - m.structure_constants
    return DenseTensor(dim=m.dim, rank=3, components=T)
