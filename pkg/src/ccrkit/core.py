"""Dense complex linear algebra with subsystem structure.

States carry an explicit dimension signature (d_1, ..., d_n), and every
matrix/vector is indexed by the row-major flattening of the multi-index
(i_1, ..., i_n): the first subsystem index varies slowest.  All operations
are pure functions of immutable inputs; the arrays held by the value types
are marked read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, NumericError, ValidationError

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "DimensionSignature",
    "PureState",
    "DensityOperator",
    "Spectrum",
    "tensor_product",
    "density_from_pure",
    "partial_trace",
    "purity",
    "linear_entropy",
    "hermitian_spectrum",
    "von_neumann_entropy",
    "dephased",
    "purify",
]


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances and capacity limits, overridable per call.

    norm_atol        validation window for normalization / trace / Hermiticity
    psd_floor        smallest eigenvalue allowed before a matrix is rejected
    eig_clamp        eigenvalues in [-eig_clamp, 0] are snapped to 0
    jacobi_offdiag   convergence target for the off-diagonal Frobenius norm
    jacobi_max_sweeps  sweep budget before the eigensolver gives up
    purity_atol      |Tr rho^2 - 1| window for purity preconditions
    rank_cutoff      eigenvalues above this count toward the purification rank
    max_total_dim    largest total dimension tensor_product will produce
    """

    norm_atol: float = 1e-12
    psd_floor: float = -1e-10
    eig_clamp: float = 1e-10
    jacobi_offdiag: float = 1e-13
    jacobi_max_sweeps: int = 100
    purity_atol: float = 1e-10
    rank_cutoff: float = 1e-12
    max_total_dim: int = 4096


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class DimensionSignature:
    """Ordered subsystem dimensions (d_1, ..., d_n) of a tensor-product space.

    Unit entries are allowed so that trivial (rank-one ancilla) subsystems can
    be represented.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValidationError("dimension signature must be nonempty")
        if any(d < 1 for d in dims):
            raise ValidationError(f"subsystem dimensions must be positive, got {dims}")

    @property
    def total(self) -> int:
        """Product of all subsystem dimensions."""
        return math.prod(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, index: int) -> int:
        return self.dims[index]


def _as_signature(signature) -> DimensionSignature:
    if isinstance(signature, DimensionSignature):
        return signature
    return DimensionSignature(tuple(signature))


class PureState:
    """Normalized complex amplitude vector over a dimension signature."""

    __slots__ = ("signature", "amplitudes")

    def __init__(self, signature, amplitudes, *, tol: Tolerances | None = None):
        tol = tol or DEFAULT_TOL
        signature = _as_signature(signature)
        amps = np.array(amplitudes, dtype=np.complex128)
        if amps.shape != (signature.total,):
            raise ValidationError(
                f"amplitude vector has shape {amps.shape}, expected ({signature.total},) "
                f"for signature {signature.dims}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > tol.norm_atol:
            raise ValidationError(f"state vector is not normalized: sum |a|^2 = {norm_sq!r}")
        amps.setflags(write=False)
        self.signature = signature
        self.amplitudes = amps

    @property
    def dims(self) -> tuple[int, ...]:
        return self.signature.dims

    def __repr__(self) -> str:
        return f"PureState(dims={self.signature.dims})"


class DensityOperator:
    """Hermitian, unit-trace, positive-semidefinite matrix with a signature."""

    __slots__ = ("signature", "matrix")

    def __init__(self, signature, matrix, *, tol: Tolerances | None = None):
        tol = tol or DEFAULT_TOL
        signature = _as_signature(signature)
        mat = np.array(matrix, dtype=np.complex128)
        d = signature.total
        if mat.shape != (d, d):
            raise ValidationError(
                f"matrix has shape {mat.shape}, expected ({d}, {d}) for signature {signature.dims}"
            )
        herm_defect = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_defect > tol.norm_atol:
            raise ValidationError(f"matrix is not Hermitian: max |rho - rho^dag| = {herm_defect!r}")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > tol.norm_atol:
            raise ValidationError(f"matrix does not have unit trace: Tr rho = {trace!r}")
        smallest = float(np.linalg.eigvalsh(0.5 * (mat + mat.conj().T)).min())
        if smallest < tol.psd_floor:
            raise ValidationError(
                f"matrix is not positive semidefinite: smallest eigenvalue = {smallest!r}"
            )
        mat.setflags(write=False)
        self.signature = signature
        self.matrix = mat

    @property
    def dims(self) -> tuple[int, ...]:
        return self.signature.dims

    def __repr__(self) -> str:
        return f"DensityOperator(dims={self.signature.dims})"


def _density_unchecked(signature: DimensionSignature, matrix: np.ndarray) -> DensityOperator:
    """Internal constructor for matrices that are valid by construction."""
    rho = DensityOperator.__new__(DensityOperator)
    mat = np.ascontiguousarray(matrix, dtype=np.complex128)
    mat.setflags(write=False)
    rho.signature = signature
    rho.matrix = mat
    return rho


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and descending; column k of ``eigenvectors``
    pairs with ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def tensor_product(states: Sequence[DensityOperator], *, tol: Tolerances | None = None) -> DensityOperator:
    """Kronecker product of density operators, signatures concatenated in order."""
    tol = tol or DEFAULT_TOL
    states = list(states)
    if not states:
        raise ValidationError("tensor_product needs at least one state")
    total = math.prod(s.signature.total for s in states)
    if total > tol.max_total_dim:
        raise CapacityError(
            f"total dimension {total} exceeds the configured maximum {tol.max_total_dim}"
        )
    dims = tuple(d for s in states for d in s.signature.dims)
    out = states[0].matrix
    for s in states[1:]:
        out = np.kron(out, s.matrix)
    return _density_unchecked(DimensionSignature(dims), out)


def density_from_pure(psi: PureState) -> DensityOperator:
    """Rank-one projector |psi><psi| as a density operator."""
    return _density_unchecked(psi.signature, np.outer(psi.amplitudes, psi.amplitudes.conj()))


def partial_trace(rho: DensityOperator, keep: Iterable[int], *, tol: Tolerances | None = None) -> DensityOperator:
    """Trace out every subsystem not listed in ``keep``.

    Parameters
    ----------
    rho : DensityOperator
        State over n subsystems.
    keep : iterable of int
        Indices of the subsystems to retain; they stay in their original
        relative order.  Keeping the full set returns ``rho`` itself.

    Returns
    -------
    DensityOperator
        Reduced state with the restricted signature; trace and Hermiticity
        are preserved.
    """
    dims = rho.signature.dims
    n = len(dims)
    keep_list = sorted({int(k) for k in keep})
    if not keep_list:
        raise ValidationError("keep set must be nonempty")
    if keep_list[0] < 0 or keep_list[-1] >= n:
        raise ValidationError(
            f"subsystem index out of range for {n} subsystems: {keep_list}"
        )
    if len(keep_list) == n:
        return rho
    keep_set = set(keep_list)
    tensor = rho.matrix.reshape(dims + dims)
    bra_ket = list(range(n)) + [n + m if m in keep_set else m for m in range(n)]
    out_axes = keep_list + [n + m for m in keep_list]
    kept_dims = tuple(dims[m] for m in keep_list)
    k = math.prod(kept_dims)
    reduced = np.einsum(tensor, bra_ket, out_axes).reshape(k, k)
    reduced = 0.5 * (reduced + reduced.conj().T)
    return _density_unchecked(DimensionSignature(kept_dims), reduced)


def purity(rho: DensityOperator) -> float:
    """Tr rho^2, computed as the squared Frobenius norm of the Hermitian matrix."""
    return float(np.vdot(rho.matrix, rho.matrix).real)


def linear_entropy(rho: DensityOperator) -> float:
    """1 - Tr rho^2, the purity deficit; ranges over [0, (d-1)/d]."""
    return 1.0 - purity(rho)


def _offdiag_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Unitary 2x2 rotation annihilating a[p, q], accumulated into v."""
    apq = a[p, q]
    g = abs(apq)
    if g == 0.0:
        return
    tau = (a[q, q].real - a[p, p].real) / (2.0 * g)
    if tau == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    phase = apq / g
    sp = s * phase
    spc = s * phase.conjugate()

    col_p = a[:, p] * c - a[:, q] * spc
    col_q = a[:, p] * sp + a[:, q] * c
    a[:, p] = col_p
    a[:, q] = col_q
    row_p = a[p, :] * c - a[q, :] * sp
    row_q = a[p, :] * spc + a[q, :] * c
    a[p, :] = row_p
    a[q, :] = row_q
    a[p, q] = 0.0
    a[q, p] = 0.0

    vcol_p = v[:, p] * c - v[:, q] * spc
    vcol_q = v[:, p] * sp + v[:, q] * c
    v[:, p] = vcol_p
    v[:, q] = vcol_q


def hermitian_spectrum(rho: DensityOperator, *, tol: Tolerances | None = None) -> Spectrum:
    """Full eigendecomposition by cyclic Jacobi rotations.

    Sweeps over all index pairs, rotating each in turn, until the
    off-diagonal Frobenius norm drops below ``tol.jacobi_offdiag``.
    Eigenvalues within the clamp window below zero are snapped to 0, and
    the pairs are returned in descending eigenvalue order.

    Raises
    ------
    NumericError
        If the sweep budget is exhausted before convergence.
    """
    tol = tol or DEFAULT_TOL
    a = np.array(rho.matrix, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    for _ in range(tol.jacobi_max_sweeps):
        if _offdiag_norm(a) < tol.jacobi_offdiag:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q)
    if _offdiag_norm(a) >= tol.jacobi_offdiag:
        raise NumericError(
            f"Jacobi eigensolver did not converge within {tol.jacobi_max_sweeps} sweeps "
            f"(off-diagonal norm {_offdiag_norm(a):.3e})"
        )
    w = np.diag(a).real.copy()
    w[(w < 0.0) & (w >= -tol.eig_clamp)] = 0.0
    order = np.argsort(w, kind="stable")[::-1]
    eigenvalues = w[order]
    eigenvectors = v[:, order]
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def von_neumann_entropy(rho: DensityOperator, *, tol: Tolerances | None = None) -> float:
    """-sum lambda ln lambda over the spectrum (natural log, 0 ln 0 = 0)."""
    w = hermitian_spectrum(rho, tol=tol).eigenvalues
    w = w[w > 0.0]
    return float(-np.sum(w * np.log(w)))


def dephased(rho: DensityOperator) -> DensityOperator:
    """Diagonal part of rho in the computational basis; the nearest incoherent state."""
    return _density_unchecked(rho.signature, np.diag(np.diag(rho.matrix).real.astype(np.complex128)))


def purify(rho: DensityOperator, *, tol: Tolerances | None = None) -> PureState:
    """Embed rho as subsystem 0 of a pure state on system x ancilla.

    The ancilla dimension equals the rank of rho (eigenvalues above
    ``tol.rank_cutoff``), and the amplitudes are sqrt(lambda_k) on the
    Schmidt pairs, so tracing out the ancilla recovers rho.  The system
    side is returned as a single subsystem of the full dimension.
    """
    tol = tol or DEFAULT_TOL
    spectrum = hermitian_spectrum(rho, tol=tol)
    mask = spectrum.eigenvalues > tol.rank_cutoff
    lam = spectrum.eigenvalues[mask]
    vecs = spectrum.eigenvectors[:, mask]
    amps = (vecs * np.sqrt(lam)).reshape(-1)
    amps = amps / np.linalg.norm(amps)
    d = rho.signature.total
    return PureState(DimensionSignature((d, int(lam.size))), amps, tol=tol)
