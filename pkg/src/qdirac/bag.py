"""The confined quaternionic Dirac particle in a hard one-dimensional well.

The well is the infinite-mass bag limit: the wavefunction vanishes identically
outside [0, L] and the walls impose the no-flux conditions psi = beta*alpha3*
psi*i at z = 0 and psi = -beta*alpha3*psi*i at z = L (right-multiplication by
i). The z = 0 condition fixes the boundary phase of the standing wave through
cot(phase/2) = +-amp_ratio; the z = L condition then quantizes the momentum at
Q_n = n*pi/(2L).

A subtlety worth stating once: at z = L the standing-wave family satisfies two
scalar cotangent conditions that generically disagree; only their antisymmetry
combination

    g(Q) = cot(QL - phase/2) + cot(QL + phase/2)
         = 2*sin(2QL) / (cos(phase) - cos(2QL))

vanishes along the family, and its zeros are exactly Q_n = n*pi/(2L) for every
phase. quantization_residual computes g with the phase carried through the
physical energy chain; the full spinor mismatch at z = L is available
separately (boundary_residual) and is reported by the verify command rather
than asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .dirac import QSpinor, apply_matrix, build_matrices
from .quaternion import Quaternion
from .step import Branch, PotentialStep, as_branch, kinematics, mode_coefficients

__all__ = [
    "NoSolutionError",
    "BoundaryPhase",
    "BagLevel",
    "StationaryWavefunction",
    "boundary_operator",
    "boundary_residual",
    "boundary_phase",
    "quantized_momenta",
    "quantization_residual",
    "solve_spectrum",
    "stationary_wavefunction",
    "normalize",
    "density_profile",
]


class NoSolutionError(ValueError):
    """No energy in the admissible range carries the requested momentum."""


@dataclass(frozen=True)
class BoundaryPhase:
    """Phase offset of the standing wave fixed by the z = 0 wall.

    Lives in (0, 2*pi); the minus branch satisfies cot(phase/2) = amp_ratio,
    the plus branch cot(phase/2) = -amp_ratio.
    """

    branch: Branch
    phase: float


@dataclass(frozen=True)
class BagLevel:
    """One quantized confined state.

    momentum is the quantized wavenumber n*pi/(2L); eff_momentum is the
    shifted momentum (momentum + w_abs on the minus branch, - w_abs on the
    plus branch) whose square enters the energy. regime_flag marks plus-branch
    levels with momentum < w_abs, where the closed-form energy still follows
    from the squared shifted momentum but the travelling-mode decomposition
    behind the coefficients leaves its stated regime.
    """

    branch: Branch
    index: int
    momentum: float
    eff_momentum: float
    energy: float
    phase: float
    norm_const: float
    length: float
    regime_flag: bool = False


@dataclass(frozen=True)
class StationaryWavefunction:
    """Closed-form standing wave of one level; zero outside [0, length].

    w_factor is the complex representative of the quaternionic potential as it
    appears in this branch's spinor (conjugated on the plus branch); j_chi is
    the quaternionic admixture coefficient. amplitude multiplies the whole
    spinor; quad_neval records the node count of the last normalization
    quadrature (0 before normalization).
    """

    branch: Branch
    spin: str
    momentum: float
    phase: float
    amp_ratio: float
    j_chi: float
    w_factor: complex
    length: float
    energy: float
    mass: float
    pot: PotentialStep
    amplitude: float = 1.0
    quad_neval: int = 0

    def evaluate(self, z: float) -> QSpinor:
        zero = Quaternion()
        if z < 0.0 or z > self.length:
            return QSpinor([zero, zero, zero, zero])
        a = self.momentum * z - 0.5 * self.phase
        b = self.momentum * z + 0.5 * self.phase
        wm = self.w_factor * self.j_chi
        idx = 0 if self.spin == "up" else 1
        sigma_sign = 1.0 if idx == 0 else -1.0
        comp = [zero, zero, zero, zero]
        if self.branch is Branch.MINUS:
            chi_block = Quaternion(math.cos(a), -wm * math.cos(b))
            sigma_block = Quaternion(math.sin(a), wm * math.sin(b)) * (
                1j * self.amp_ratio
            )
            comp[idx] = self.amplitude * chi_block
            comp[2 + idx] = (sigma_sign * self.amplitude) * sigma_block
        else:
            sigma_block = (1j * self.amp_ratio) * Quaternion(
                math.sin(a), -wm * math.sin(b)
            )
            chi_block = Quaternion(math.cos(a), -wm * math.cos(b))
            comp[idx] = (sigma_sign * self.amplitude) * sigma_block
            comp[2 + idx] = self.amplitude * chi_block
        return QSpinor(comp)

    def density(self, z: float) -> float:
        return self.evaluate(z).norm_sq()

    def density_split(self, z: float):
        """(complex part, quaternionic part) of the density at z."""
        psi = self.evaluate(z)
        rho_c = sum(abs(q.u) ** 2 for q in psi.comp)
        rho_q = sum(abs(q.w) ** 2 for q in psi.comp)
        return rho_c, rho_q


_ENDS = ("left", "right")


def boundary_operator(end: str):
    """The wall map psi -> +-beta*alpha3*psi*i ('left' is z=0, 'right' z=L).

    Both maps are involutions since (beta*alpha3)^2 = -identity; a spinor
    meets the no-flux condition at that wall exactly when it is a fixed point.
    """
    if end not in _ENDS:
        raise ValueError("end must be 'left' or 'right'")
    mats = build_matrices()
    ba = mats.beta @ mats.alpha[2]
    sign = 1.0 if end == "left" else -1.0

    def wall_map(psi: QSpinor) -> QSpinor:
        return apply_matrix(sign * ba, psi).scale_right(1j)

    return wall_map


def boundary_residual(psi: QSpinor, end: str) -> float:
    """Norm of the no-flux defect ||psi - wall_map(psi)|| at one wall."""
    return (psi - boundary_operator(end)(psi)).norm()


def boundary_phase(amp_ratio: float, branch) -> BoundaryPhase:
    """Standing-wave phase from the block amplitude ratio at the z = 0 wall.

    phase = 2*arccot(amp_ratio) on the minus branch and 2*arccot(-amp_ratio)
    on the plus branch, with arccot into (0, pi) -- the unique continuous
    choice. The tan identity tan(phase) = +-2A/(A^2 - 1) then holds wherever
    tan is finite.
    """
    br = as_branch(branch)
    if not math.isfinite(amp_ratio):
        raise ValueError("amp_ratio must be finite")
    a = amp_ratio if br is Branch.MINUS else -amp_ratio
    return BoundaryPhase(branch=br, phase=2.0 * math.atan2(1.0, a))


def quantized_momenta(length: float, n_max: int) -> list:
    """The quantized wavenumbers n*pi/(2*length), n = 1..n_max."""
    if length <= 0:
        raise ValueError("length must be > 0")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [n * math.pi / (2.0 * length) for n in range(1, n_max + 1)]


def _energy_for_momentum(momentum: float, mass: float, pot: PotentialStep,
                         branch: Branch) -> float:
    """Energy at which the branch's travelling momentum equals `momentum`.

    With v0 = 0 the chain is algebraic: p = momentum +- w_abs per branch, and
    plus-branch momenta at or below w_abs have no admissible energy (returns
    nan so residual scans can skip the region). With v0 != 0 the squared
    branch momentum is inverted numerically on (mass, E_hi], taking the lowest
    energy crossing.
    """
    if pot.v0 == 0.0:
        p = momentum + pot.w_abs if branch is Branch.MINUS else momentum - pot.w_abs
        if p <= 0.0:
            return math.nan
        return math.hypot(p, mass)

    def defect(e):
        kin = kinematics(e, mass, pot)
        mom2 = kin.mom2_minus if branch is Branch.MINUS else kin.mom2_plus
        return mom2 - momentum * momentum

    lo = mass + 1e-9
    hi = math.hypot(momentum + pot.w_abs, mass) + abs(pot.v0) + 1.0
    for _ in range(60):
        if defect(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise NoSolutionError(
            "branch momentum never reaches %g on the %s branch" % (momentum, branch.value)
        )
    grid = np.linspace(lo, hi, 512)
    vals = [defect(e) for e in grid]
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            return float(grid[i])
        if vals[i] * vals[i + 1] < 0.0:
            return float(brentq(defect, grid[i], grid[i + 1], xtol=1e-13, rtol=1e-15))
    raise NoSolutionError(
        "no energy in (%g, %g] carries momentum %g on the %s branch"
        % (lo, hi, momentum, branch.value)
    )


def quantization_residual(momentum: float, mass: float, pot: PotentialStep,
                          length: float, branch) -> float:
    """The z = L antisymmetry defect g(Q) of the standing-wave family.

    Zero exactly at the quantized momenta n*pi/(2L); diverges at the poles
    where the two cotangent conditions collide. nan where the energy chain
    leaves its regime (plus branch at momentum <= w_abs with v0 = 0).
    """
    br = as_branch(branch)
    energy = _energy_for_momentum(momentum, mass, pot, br)
    if not math.isfinite(energy) or energy <= mass:
        return math.nan
    mc = mode_coefficients(energy, mass, pot, br)
    ph = boundary_phase(mc.amp_ratio.real, br).phase
    a = momentum * length - 0.5 * ph
    b = momentum * length + 0.5 * ph
    num = math.sin(a + b)
    den = math.sin(a) * math.sin(b)
    if den == 0.0:
        return math.copysign(math.inf, num) if num != 0.0 else math.nan
    return num / den


def solve_spectrum(mass: float, pot: PotentialStep, length: float, n_max: int,
                   branch) -> list:
    """All confined levels of one branch up to n_max.

    With v0 = 0 the energy is closed-form: E_n^2 = eff_momentum^2 + mass^2
    with eff_momentum = Q_n + w_abs (minus) or Q_n - w_abs (plus). With
    v0 != 0 the energy is found by inverting the branch momentum numerically;
    eff_momentum is still reported as the shifted wavenumber and the closed
    form is checked by the verify command as a diagnostic, not assumed here.
    Plus-branch levels with Q_n < w_abs carry regime_flag; Q_n = w_abs puts
    the level exactly on the mass shell where the coefficients are singular,
    which raises.
    """
    if mass < 0:
        raise ValueError("mass must be >= 0")
    br = as_branch(branch)
    shift = pot.w_abs if br is Branch.MINUS else -pot.w_abs
    levels = []
    for n, q_n in enumerate(quantized_momenta(length, n_max), start=1):
        eff = q_n + shift
        if pot.v0 == 0.0:
            energy = math.hypot(eff, mass)
        else:
            energy = _energy_for_momentum(q_n, mass, pot, br)
        regime = br is Branch.PLUS and q_n < pot.w_abs
        mc = mode_coefficients(energy, mass, pot, br)
        ph = boundary_phase(mc.amp_ratio.real, br).phase
        level = BagLevel(
            branch=br,
            index=n,
            momentum=q_n,
            eff_momentum=eff,
            energy=energy,
            phase=ph,
            norm_const=1.0,
            length=length,
            regime_flag=regime,
        )
        norm_const, _ = normalize(stationary_wavefunction(level, mass, pot))
        levels.append(replace(level, norm_const=norm_const))
    return levels


def stationary_wavefunction(level: BagLevel, mass: float, pot: PotentialStep,
                            spin: str = "up") -> StationaryWavefunction:
    """The standing-wave evaluator for one confined level.

    The chi block carries cos(Qz - phase/2) minus the j-admixture at the
    shifted argument; the sigma3*chi block carries the matching sines times
    i*amp_ratio (right factor on the minus branch, left factor on the plus
    branch, whose spinor also conjugates the potential representative and
    swaps the block order). The level's norm_const enters as the amplitude.
    """
    if spin not in ("up", "down"):
        raise ValueError("spin must be 'up' or 'down'")
    mc = mode_coefficients(level.energy, mass, pot, level.branch)
    w_factor = pot.w0 if level.branch is Branch.MINUS else pot.w0.conjugate()
    return StationaryWavefunction(
        branch=level.branch,
        spin=spin,
        momentum=level.momentum,
        phase=level.phase,
        amp_ratio=mc.amp_ratio.real,
        j_chi=mc.j_chi.real,
        w_factor=w_factor,
        length=level.length,
        energy=level.energy,
        mass=mass,
        pot=pot,
        amplitude=level.norm_const,
    )


def normalize(psi: StationaryWavefunction):
    """Rescale so the density integrates to 1 over the well.

    Returns (norm_const, normalized wavefunction); norm_const is the total
    amplitude of the normalized state. Adaptive quadrature at 1e-12 tolerance;
    the node count is recorded on the returned wavefunction.
    """
    total, _, info = quad(
        psi.density, 0.0, psi.length, epsabs=1e-12, epsrel=1e-12, full_output=1
    )
    if total <= 0.0:
        raise ValueError("cannot normalize an identically zero wavefunction")
    norm_const = psi.amplitude / math.sqrt(total)
    return norm_const, replace(psi, amplitude=norm_const, quad_neval=int(info["neval"]))


def density_profile(psi: StationaryWavefunction, grid_points: int):
    """Sampled (z, density) arrays on a uniform grid over the well."""
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    z = np.linspace(0.0, psi.length, grid_points)
    rho = np.array([psi.density(float(zz)) for zz in z])
    return z, rho
