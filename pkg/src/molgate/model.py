"""Internal-state model: basis, pulse envelope, drive and coupling operators.

Two molecules, three levels each (qubit states ``u``/``d`` and an ancillary
state ``e`` reached from ``d`` by a global microwave drive).  A spin-exchange
coupling of strength ``J`` connects ``|u,e>`` and ``|e,u>`` only.  The gate
is two identical pi-area pulses, the second multiplied by ``exp(i*theta)``,
with an instantaneous pi phase gate on the ``d`` state of molecule ii after
each pulse.

Units: hbar = 1 throughout; the single-pulse duration ``T`` sets the time
unit and peak Rabi frequencies are quoted in 1/T.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import CalibrationError, PulseDomainError
from .propagator import DriveSegment, Schedule

STATE_LABELS = ("uu", "ud", "du", "dd", "ue", "eu", "de", "ed", "ee")
COMPUTATIONAL_LABELS = STATE_LABELS[:4]


class InternalBasis:
    """Canonically ordered two-molecule product basis.

    The four computational states come first so the rank-4 computational
    projector is the leading diagonal block.
    """

    def __init__(self):
        self.labels = STATE_LABELS
        self._index = {s: i for i, s in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis state {label!r}") from None

    def state(self, label: str) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[self.index(label)] = 1.0
        return v

    def computational_projector(self) -> np.ndarray:
        P = np.zeros((self.dim, self.dim))
        for s in COMPUTATIONAL_LABELS:
            i = self.index(s)
            P[i, i] = 1.0
        return P


DEFAULT_BASIS = InternalBasis()


def raising_operator(basis: InternalBasis = DEFAULT_BASIS) -> np.ndarray:
    """Sum over molecules of |e><d|, the operator the drive multiplies."""
    R = np.zeros((basis.dim, basis.dim), dtype=complex)
    for s in basis.labels:
        if s[0] == "d":
            R[basis.index("e" + s[1]), basis.index(s)] += 1.0
        if s[1] == "d":
            R[basis.index(s[0] + "e"), basis.index(s)] += 1.0
    return R


def exchange_operator(basis: InternalBasis = DEFAULT_BASIS) -> np.ndarray:
    """|u,e><e,u| + |e,u><u,e| — the dipolar spin-exchange coupling."""
    X = np.zeros((basis.dim, basis.dim), dtype=complex)
    X[basis.index("ue"), basis.index("eu")] = 1.0
    X[basis.index("eu"), basis.index("ue")] = 1.0
    return X


def drive_generator(theta: float, basis: InternalBasis = DEFAULT_BASIS) -> np.ndarray:
    """Hermitian drive matrix A with H_drive(t) = f(t) * A for real f >= 0."""
    R = raising_operator(basis)
    return 0.5 * (np.exp(1j * theta) * R + np.exp(-1j * theta) * R.conj().T)


def single_qubit_phase_gate(
    molecule: str, phase: float, basis: InternalBasis = DEFAULT_BASIS
) -> np.ndarray:
    """Diagonal unitary putting exp(i*phase) on every state whose target
    molecule is in ``d``; ``e`` and ``u`` components are untouched."""
    if molecule not in ("i", "ii"):
        raise ValueError(f"molecule must be 'i' or 'ii', got {molecule!r}")
    slot = 0 if molecule == "i" else 1
    diag = np.ones(basis.dim, dtype=complex)
    for s in basis.labels:
        if s[slot] == "d":
            diag[basis.index(s)] = np.exp(1j * phase)
    return np.diag(diag)


@dataclass(frozen=True)
class PulseSequence:
    """Two-pulse microwave drive Omega_mu(t) on [0, 2T].

    Pulse 1 is the offset-subtracted Gaussian
    ``omega * (exp(-(t - T/2)^2 / (2 t_w^2)) - exp(-T^2 / (8 t_w^2)))``,
    exactly zero at t = 0 and t = T.  Pulse 2 is the same envelope shifted
    by T and multiplied by ``exp(i*theta)``.
    """

    omega: float
    t_w: float
    T: float
    theta: float

    def __post_init__(self):
        if not 0.0 < self.t_w < self.T:
            raise ValueError(f"require 0 < t_w < T, got t_w={self.t_w}, T={self.T}")
        if self.omega <= 0.0:
            raise ValueError(f"peak Rabi frequency must be positive, got {self.omega}")

    def base_envelope(self, t):
        """Real pulse-1 envelope at time(s) t in [0, T] (vectorized, no
        domain check; callers clamp)."""
        t = np.asarray(t, dtype=float)
        return self.omega * (
            np.exp(-((t - self.T / 2.0) ** 2) / (2.0 * self.t_w**2))
            - np.exp(-self.T**2 / (8.0 * self.t_w**2))
        )

    def envelope(self, t: float) -> complex:
        """Complex drive amplitude Omega_mu(t) for t in [0, 2T]."""
        if not 0.0 <= t <= 2.0 * self.T:
            raise PulseDomainError(f"t={t} outside the pulse window [0, {2 * self.T}]")
        if t <= self.T:
            return complex(self.base_envelope(t))
        return np.exp(1j * self.theta) * complex(self.base_envelope(t - self.T))

    def pulse_area(self) -> float:
        """Numerical quadrature of the pulse-1 envelope over [0, T]."""
        val, est = quad(
            self.base_envelope, 0.0, self.T, epsabs=1e-13, epsrel=1e-13, limit=200
        )
        return val

    @classmethod
    def calibrated(
        cls,
        t_w: float,
        T: float,
        theta: float,
        area: float = np.pi,
        area_tol: float = 1e-10,
    ) -> "PulseSequence":
        omega = calibrate_pulse_area(t_w, T, area=area, area_tol=area_tol)
        return cls(omega=omega, t_w=t_w, T=T, theta=theta)


def calibrate_pulse_area(
    t_w: float, T: float, area: float = np.pi, area_tol: float = 1e-10
) -> float:
    """Peak Rabi frequency making the pulse-1 area equal ``area``.

    Root-solves the adaptive-quadrature area against the target; the
    returned value satisfies |area(omega) - area| < area_tol.
    """
    if not 0.0 < t_w < T:
        raise CalibrationError(f"require 0 < t_w < T, got t_w={t_w}, T={T}")

    def unit_env(t):
        return np.exp(-((t - T / 2.0) ** 2) / (2.0 * t_w**2)) - np.exp(
            -(T**2) / (8.0 * t_w**2)
        )

    unit_area, unit_err = quad(unit_env, 0.0, T, epsabs=1e-14, epsrel=1e-13, limit=200)
    if unit_area <= 0.0 or unit_err > 1e-10 * max(unit_area, 1e-30):
        raise CalibrationError(
            f"envelope quadrature unreliable (area={unit_area}, err={unit_err})"
        )

    guess = area / unit_area

    def residual(om):
        val, _ = quad(
            lambda t: om * unit_env(t), 0.0, T, epsabs=1e-14, epsrel=1e-13, limit=200
        )
        return val - area

    try:
        omega = brentq(residual, 0.1 * guess, 10.0 * guess, xtol=1e-14, rtol=1e-15)
    except ValueError as exc:
        raise CalibrationError(f"area root search did not bracket: {exc}") from exc
    res = residual(omega)
    if abs(res) >= area_tol:
        raise CalibrationError(f"calibration residual {res} exceeds {area_tol}")
    return omega


def pulse_phase_for_controlled_phase(phi: float) -> float:
    """Pulse-2 phase theta realizing the controlled phase phi.

    The gate imprints exp(i*(pi - 2*theta)) on |d,d>; inverting gives
    theta = (pi - phi)/2 (mod pi).  Returned in [0, 2*pi)."""
    return (-(np.pi + phi) / 2.0) % (2.0 * np.pi)


def controlled_phase_for_pulse_phase(theta: float) -> float:
    """Controlled phase produced by pulse-2 phase theta, in [0, 2*pi)."""
    return (np.pi - 2.0 * theta) % (2.0 * np.pi)


@dataclass(frozen=True)
class GateModel:
    """Internal-state gate: pulse sequence, exchange coupling, phase gates.

    ``ddi`` is the coupling J in energy units (1/T with hbar = 1); the
    dimensionless figures quote J/(hbar*Omega) with Omega the calibrated
    peak Rabi frequency.
    """

    pulse: PulseSequence
    ddi: float
    target_phase: float = np.pi
    basis: InternalBasis = field(default_factory=InternalBasis)

    @classmethod
    def from_dimensionless(
        cls,
        j_over_homega: float,
        t_w_over_T: float = 0.234,
        theta: float | None = None,
        target_phase: float = np.pi,
        T: float = 1.0,
    ) -> "GateModel":
        if theta is None:
            theta = pulse_phase_for_controlled_phase(target_phase)
        pulse = PulseSequence.calibrated(t_w=t_w_over_T * T, T=T, theta=theta)
        return cls(pulse=pulse, ddi=j_over_homega * pulse.omega, target_phase=target_phase)

    def hamiltonian_at(self, t: float) -> np.ndarray:
        """H(t) on the 9-dim space; Hermitian by construction."""
        amp = self.pulse.envelope(t)  # raises outside [0, 2T]
        R = raising_operator(self.basis)
        H = 0.5 * (amp * R + np.conj(amp) * R.conj().T)
        H += self.ddi * exchange_operator(self.basis)
        return H

    def phase_gate(self) -> np.ndarray:
        """The pi phase gate on molecule ii applied after each pulse."""
        return single_qubit_phase_gate("ii", np.pi, self.basis)

    def schedule(self, include_gates: bool = True) -> Schedule:
        """Propagation schedule: pulse 1, Z_ii, pulse 2, Z_ii."""
        T = self.pulse.T
        B = self.ddi * exchange_operator(self.basis)
        seg1 = DriveSegment(
            t0=0.0,
            t1=T,
            drive=drive_generator(0.0, self.basis),
            static=B,
            envelope=self.pulse.base_envelope,
        )
        seg2 = DriveSegment(
            t0=T,
            t1=2.0 * T,
            drive=drive_generator(self.pulse.theta, self.basis),
            static=B,
            envelope=lambda t, _T=T, _env=self.pulse.base_envelope: _env(
                np.asarray(t) - _T
            ),
        )
        gate = self.phase_gate() if include_gates else None
        return Schedule(segments=(seg1, seg2), gates=(gate, gate))
