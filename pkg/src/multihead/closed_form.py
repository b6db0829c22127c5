"""Closed-form statistics, Fock matrix elements, Wigner functions and parity.

All quantities are evaluated directly from the finite head sums, with no
Fock-space truncation.  Sums that are physically real (normalization, mean
photon number, Wigner values) are checked for an imaginary residue below
``RESIDUE_TOL`` before the imaginary part is discarded; a larger residue
raises InternalConsistencyError because it can only come from a formula bug.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import InternalConsistencyError, InvalidInputError, UndefinedStatisticError
from .roots import PolarAmplitude, root_angles, root_modulus
from .states import Family, StateSpec

RESIDUE_TOL = 1e-10
TWO_OVER_PI = 2.0 / math.pi


def _require_real(value: complex, what: str, tol: float = RESIDUE_TOL) -> float:
    imag = abs(np.imag(value))
    scale = max(1.0, float(np.max(np.abs(value))) if np.ndim(value) else abs(value))
    if np.max(imag) > tol * scale:
        raise InternalConsistencyError(
            f"{what}: imaginary residue {np.max(imag):.3e} exceeds tolerance"
        )
    return np.real(value)


def _head_weights(mu: float, n_heads: int) -> np.ndarray:
    """Overlap weights exp(mu*(exp(2*pi*i*(k1-k2)/N) - 1)) as an N x N matrix."""
    k = np.arange(n_heads)
    delta = k[:, None] - k[None, :]
    return np.exp(mu * (np.exp(2j * np.pi * delta / n_heads) - 1.0))


def normalization(alpha: PolarAmplitude, n_heads: int) -> float:
    """Normalization factor of the coherent superposition.

    Equals 1 for a single head and 2 + 2*exp(-2r) for two heads.
    """
    if n_heads < 1:
        raise InvalidInputError("head count must be >= 1")
    mu = alpha.r ** (2.0 / n_heads)
    total = _head_weights(mu, n_heads).sum()
    value = _require_real(total, "normalization")
    if value <= 0.0:
        raise InternalConsistencyError(f"normalization must be positive, got {value}")
    return float(value)


def moment_ic(alpha: PolarAmplitude, n_heads: int, h: int, l: int) -> complex:
    """Moment <a^dag^h a^l> of the incoherent family.

    The single head sum collapses to a multiple-of-N selection rule:
    nonzero only when (l - h) is divisible by N.
    """
    if h < 0 or l < 0:
        raise InvalidInputError("moment orders must be nonnegative")
    if (l - h) % n_heads != 0:
        return 0.0 + 0.0j
    if alpha.r == 0.0:
        return complex(1.0 if h == l == 0 else 0.0)
    mag = alpha.r ** ((h + l) / n_heads)
    return mag * cmath.exp(1j * (l - h) * alpha.theta_p / n_heads)


def moment_c(alpha: PolarAmplitude, n_heads: int, h: int, l: int) -> complex:
    """Moment <a^dag^h a^l> of the coherent family (head double sum over N_c)."""
    if h < 0 or l < 0:
        raise InvalidInputError("moment orders must be nonnegative")
    if alpha.r == 0.0:
        return complex(1.0 if h == l == 0 else 0.0)
    mu = alpha.r ** (2.0 / n_heads)
    phases = np.array(root_angles(alpha, n_heads))
    w = _head_weights(mu, n_heads)
    ket = np.exp(1j * l * phases)  # index k1
    bra = np.exp(-1j * h * phases)  # index k2
    total = np.einsum("i,ij,j->", ket, w, bra)
    n_c = _require_real(w.sum(), "normalization")
    return complex(alpha.r ** ((h + l) / n_heads) * total / n_c)


def moment(spec: StateSpec, h: int, l: int) -> complex:
    if spec.is_coherent:
        return moment_c(spec.alpha, spec.n_heads, h, l)
    return moment_ic(spec.alpha, spec.n_heads, h, l)


@dataclass(frozen=True)
class MomentTable:
    """The six low-order moments used by every derived statistic."""

    a_dag: complex
    a: complex
    n_mean: complex
    a_dag2: complex
    a2: complex
    a_dag2_a2: complex


def moment_table(spec: StateSpec) -> MomentTable:
    table = MomentTable(
        a_dag=moment(spec, 1, 0),
        a=moment(spec, 0, 1),
        n_mean=moment(spec, 1, 1),
        a_dag2=moment(spec, 2, 0),
        a2=moment(spec, 0, 2),
        a_dag2_a2=moment(spec, 2, 2),
    )
    _require_real(table.n_mean, "mean photon number")
    _require_real(table.a_dag2_a2, "second factorial moment")
    return table


def mean_photon(spec: StateSpec) -> float:
    return float(_require_real(moment(spec, 1, 1), "mean photon number"))


def mandel_q(spec: StateSpec) -> float:
    """Mandel Q = <a^dag2 a^2>/<a^dag a> - <a^dag a>; sign classifies the statistics."""
    n = mean_photon(spec)
    if n == 0.0:
        raise UndefinedStatisticError("Mandel Q is undefined at zero amplitude")
    g2 = _require_real(moment(spec, 2, 2), "second factorial moment")
    return float(g2 / n - n)


@dataclass(frozen=True)
class QuadratureVariances:
    """Variances of X1 = (a + a^dag)/sqrt(2) and X2 = (a - a^dag)/(sqrt(2) i)."""

    var_x1: float
    var_x2: float


def quadrature_variances(spec: StateSpec) -> QuadratureVariances:
    t = moment_table(spec)
    base = float(np.real(t.n_mean)) - abs(t.a) ** 2 + 0.5
    cross = float(np.real(t.a_dag2 - t.a_dag**2))
    return QuadratureVariances(var_x1=base + cross, var_x2=base - cross)


def _log_fock_magnitude(alpha: PolarAmplitude, n_heads: int, m: int, n: int) -> float:
    """log of r^{(m+n)/N} e^{-r^{2/N}} / sqrt(m! n!); requires r > 0."""
    mu = alpha.r ** (2.0 / n_heads)
    return (
        (m + n) / n_heads * math.log(alpha.r)
        - mu
        - 0.5 * (gammaln(m + 1) + gammaln(n + 1))
    )


def fock_element(spec: StateSpec, m: int, n: int) -> complex:
    """Density-matrix element p_mn in the photon-number basis.

    The head sums reduce to selection rules: the incoherent family needs
    (m - n) divisible by N, the coherent family needs both m and n divisible
    by N.  Magnitudes are assembled in log space so large m, n never
    overflow the factorials.
    """
    if m < 0 or n < 0:
        raise InvalidInputError("Fock indices must be nonnegative")
    alpha, n_heads = spec.alpha, spec.n_heads
    if alpha.r == 0.0:
        return complex(1.0 if m == n == 0 else 0.0)
    phase = cmath.exp(1j * (m - n) * alpha.theta_p / n_heads)
    if spec.is_coherent:
        if m % n_heads != 0 or n % n_heads != 0:
            return 0.0 + 0.0j
        n_c = normalization(alpha, n_heads)
        scale = n_heads**2 / n_c
    else:
        if (m - n) % n_heads != 0:
            return 0.0 + 0.0j
        scale = 1.0
    return complex(scale * math.exp(_log_fock_magnitude(alpha, n_heads, m, n)) * phase)


def pnd(spec: StateSpec, m: int) -> float:
    """Photon number distribution p_mm.

    Poissonian with mean r^{2/N} for the incoherent family; supported only
    on multiples of N for the coherent family.
    """
    value = fock_element(spec, m, m)
    return float(value.real)


def wigner(spec: StateSpec, beta):
    """Wigner function at phase-space point(s) beta (complex scalar or array).

    Sum of N displaced Gaussians for the incoherent family; for the
    coherent family the N^2 head-pair sum adds interference terms whose
    imaginary parts must cancel below tolerance.
    """
    beta = np.asarray(beta, dtype=complex)
    if not np.all(np.isfinite(beta)):
        raise InvalidInputError("phase-space points must be finite")
    alpha, n_heads = spec.alpha, spec.n_heads
    rho = root_modulus(alpha, n_heads)
    phases = root_angles(alpha, n_heads)
    heads = [rho * cmath.exp(1j * phi) for phi in phases]
    if not spec.is_coherent:
        total = np.zeros(beta.shape, dtype=float)
        for g in heads:
            total += np.exp(-2.0 * np.abs(g - beta) ** 2)
        out = TWO_OVER_PI * total / n_heads
    else:
        mu = rho**2
        w = _head_weights(mu, n_heads)
        total = np.zeros(beta.shape, dtype=complex)
        for k1, g1 in enumerate(heads):
            for k2, g2 in enumerate(heads):
                total += w[k1, k2] * np.exp(
                    -2.0 * (np.conj(g2) - np.conj(beta)) * (g1 - beta)
                )
        n_c = _require_real(w.sum(), "normalization")
        out = TWO_OVER_PI * _require_real(total, "Wigner value") / n_c
    if out.ndim == 0:
        return float(out)
    return out


def wigner_two_head_incoherent(alpha: PolarAmplitude, beta):
    """Two-head incoherent Wigner function in its explicit two-Gaussian form."""
    beta = np.asarray(beta, dtype=complex)
    g = math.sqrt(alpha.r) * cmath.exp(1j * alpha.theta_p / 2.0)
    out = (
        np.exp(-2.0 * np.abs(g - beta) ** 2) + np.exp(-2.0 * np.abs(-g - beta) ** 2)
    ) / math.pi
    return float(out) if out.ndim == 0 else out


def wigner_two_head_coherent(alpha: PolarAmplitude, beta):
    """Two-head cat Wigner function: two Gaussians plus the interference fringe."""
    beta = np.asarray(beta, dtype=complex)
    r = alpha.r
    g = math.sqrt(r) * cmath.exp(1j * alpha.theta_p / 2.0)
    denom = math.pi * (1.0 + math.exp(-2.0 * r))
    gauss = np.exp(-2.0 * np.abs(g - beta) ** 2) + np.exp(-2.0 * np.abs(-g - beta) ** 2)
    cross = np.exp(-2.0 * np.conj(g) * beta + 2.0 * g * np.conj(beta) - 2.0 * np.abs(beta) ** 2)
    fringe = _require_real(cross + np.conj(cross), "interference fringe")
    out = (gauss + fringe) / denom
    return float(out) if out.ndim == 0 else out


def parity(spec: StateSpec) -> float:
    """Photon-number parity via the phase-space origin value."""
    return float(math.pi / 2.0 * wigner(spec, 0.0))
