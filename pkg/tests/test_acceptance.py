"""Acceptance suite: ten auditable criteria, one test per criterion.

Each test asserts its criterion at the stated tolerance and, where stated,
its runtime budget; the conftest hook prints one PASS/FAIL line per
criterion in the terminal summary. Recorded properties surface the key
measured numbers on those lines.
"""

import json
import math
import subprocess
import sys
from time import perf_counter

import numpy as np
import pytest

import oracles
from qdirac import (
    J,
    Branch,
    PlaneWaveState,
    PotentialStep,
    Quaternion,
    boundary_residual,
    build_matrices,
    build_report,
    dirac_residual,
    evanescent_width,
    kinematics,
    nr_parameters,
    nr_quantize,
    nullspace_oracle,
    principal_momentum,
    quantization_residual,
    quantized_momenta,
    solve_spectrum,
    stationary_wavefunction,
)


def test_c01_matrix_algebra_exact(record_property):
    # all generator identities in exact (Gaussian-integer) arithmetic
    start = perf_counter()
    mats = build_matrices()
    gens = list(mats.alpha) + [mats.beta]
    zero = np.zeros((4, 4), dtype=complex)
    checks = 0
    for i, a in enumerate(gens):
        assert np.array_equal(a @ a, mats.identity)
        assert np.array_equal(a.conj().T, a)
        checks += 2
        for b in gens[i + 1:]:
            assert np.array_equal(a @ b + b @ a, zero)
            checks += 1
    for m in gens:
        assert set(np.unique(m)) <= {0, 1, -1, 1j, -1j}
        checks += 1
    elapsed = perf_counter() - start
    assert elapsed < 1.0
    record_property("identities_checked", checks)


def test_c02_quaternion_random_sweep(record_property):
    # 1e4 random triples: associativity and norm multiplicativity to 1e-13,
    # the j-conjugation rule j*z = conj(z)*j to 1e-15
    start = perf_counter()
    rng = np.random.default_rng(29)
    n = 10_000
    coeffs = rng.standard_normal((3, n, 4))
    zs = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    max_assoc = 0.0
    max_norm = 0.0
    max_jz = 0.0
    for i in range(n):
        q1 = Quaternion.from_coeffs(*coeffs[0, i])
        q2 = Quaternion.from_coeffs(*coeffs[1, i])
        q3 = Quaternion.from_coeffs(*coeffs[2, i])
        scale = q1.norm() * q2.norm() * q3.norm()
        assoc = ((q1 * q2) * q3 - q1 * (q2 * q3)).norm() / max(scale, 1e-300)
        max_assoc = max(max_assoc, assoc)
        prod_norm = (q1 * q2).norm()
        pair_norm = q1.norm() * q2.norm()
        max_norm = max(
            max_norm, abs(prod_norm - pair_norm) / max(pair_norm, 1e-300)
        )
        z = complex(zs[i])
        defect = (J * z - z.conjugate() * J).norm()
        max_jz = max(max_jz, defect / max(abs(z), 1.0))
    elapsed = perf_counter() - start
    assert max_assoc < 1e-13
    assert max_norm < 1e-13
    assert max_jz < 1e-15
    assert elapsed < 5.0
    record_property("max_assoc", "%.2e" % max_assoc)
    record_property("max_norm_defect", "%.2e" % max_norm)
    record_property("max_jz_defect", "%.2e" % max_jz)


def test_c03_evanescent_window_sign_scan(record_property):
    # 100 random (m, v0, w) in [0,5]^3 with v0 > 0: a 1e-3 sign scan of the
    # minus-branch squared momentum brackets the closed-form window edges
    # within one grid step; windows thinner than the scan may come up empty
    start = perf_counter()
    rng = np.random.default_rng(31)
    step = 1e-3
    tol = step * (1.0 + 1e-6)
    n_windows = 0
    n_empty = 0
    for _ in range(100):
        mass = float(rng.uniform(0.0, 5.0))
        v0 = float(rng.uniform(1e-9, 5.0))
        w_abs = float(rng.uniform(0.0, 5.0))
        e_low, e_up, width = evanescent_width(mass, v0, w_abs)
        found = oracles.window_sign_scan(mass, v0, w_abs, e_step=step)
        if found is None:
            assert width <= 2.0 * step, (mass, v0, w_abs, width)
            n_empty += 1
            continue
        first_neg, last_neg = found
        assert abs(first_neg - e_low) <= tol, (mass, v0, w_abs)
        assert abs(last_neg - e_up) <= tol, (mass, v0, w_abs)
        n_windows += 1
    elapsed = perf_counter() - start
    assert elapsed < 30.0
    record_property("windows_located", n_windows)
    record_property("sub_grid_windows", n_empty)


def test_c04_bag_quantization_bisection(record_property):
    # 20 random (m, w, L): bisection roots of the far-wall residual over
    # Q in (0, 5*pi/L] land on n*pi/(2L) within 1e-9 for both branches; the
    # residual itself is spin-independent, so the spin content is checked
    # through the wall map on both spin states of the lowest levels.
    # Near a root |g| ~ |2QL - n*pi| * 2/|cos(theta) - cos(2QL)|, so the
    # float floor on the recovered roots sits orders of magnitude below the
    # 1e-9 budget for these draw ranges.
    start = perf_counter()
    rng = np.random.default_rng(37)
    worst = 0.0
    for _ in range(20):
        mass = float(rng.uniform(0.2, 2.0))
        length = float(rng.uniform(0.5, 3.0))
        q1 = math.pi / (2.0 * length)
        w_abs = float(rng.uniform(0.05, min(2.0, 0.6 * q1)))
        pot = PotentialStep(w_abs=w_abs, w_phase=float(rng.uniform(-math.pi, math.pi)))
        expected = quantized_momenta(length, 10)
        q_max = 10.5 * math.pi / (2.0 * length)
        for branch in (Branch.MINUS, Branch.PLUS):
            def residual(q, _b=branch):
                return quantization_residual(q, mass, pot, length, _b)

            grid = np.linspace(q_max / 4096, q_max, 4096)
            roots = []
            for lo, hi in oracles.scan_sign_changes(residual, grid):
                r = oracles.bisect(residual, float(lo), float(hi))
                if abs(residual(r)) < 1e-6:
                    roots.append(r)
            assert len(roots) == 10, (mass, w_abs, length, branch)
            for q_n, root in zip(expected, sorted(roots)):
                worst = max(worst, abs(root - q_n))
                assert abs(root - q_n) < 1e-9
            levels = solve_spectrum(mass, pot, length, 2, branch)
            for level in levels:
                for spin in ("up", "down"):
                    wf = stationary_wavefunction(level, mass, pot, spin)
                    assert boundary_residual(wf.evaluate(0.0), "left") < 1e-12
    elapsed = perf_counter() - start
    assert elapsed < 30.0
    record_property("worst_root_error", "%.2e" % worst)


def test_c05_first_level_energies(record_property):
    # L=1, m=1, w=0.5, v0=0: first levels against the closed form, with the
    # momentum recovered by inverting the dispersion at the found energy
    minus = solve_spectrum(1.0, PotentialStep(w_abs=0.5), 1.0, 1, Branch.MINUS)[0]
    plus = solve_spectrum(1.0, PotentialStep(w_abs=0.5), 1.0, 1, Branch.PLUS)[0]
    want_minus = math.hypot(math.pi / 2.0 + 0.5, 1.0)
    want_plus = math.hypot(math.pi / 2.0 - 0.5, 1.0)
    assert abs(minus.energy - want_minus) < 1e-5
    assert abs(plus.energy - want_plus) < 1e-5
    kin_m = kinematics(minus.energy, 1.0, PotentialStep(w_abs=0.5))
    kin_p = kinematics(plus.energy, 1.0, PotentialStep(w_abs=0.5))
    assert abs(principal_momentum(kin_m.mom2_minus).real - math.pi / 2.0) < 1e-12
    assert abs(principal_momentum(kin_p.mom2_plus).real - math.pi / 2.0) < 1e-12
    record_property("e1_minus", "%.16g" % minus.energy)
    record_property("e1_plus", "%.16g" % plus.energy)
    # comparison against the two printed six-digit constants: the minus one
    # agrees; the plus one is off by 1.2e-5, beyond its own stated tolerance
    record_property("printed_minus_diff", "%.2e" % abs(minus.energy - 2.299608))
    record_property("printed_plus_diff", "%.2e" % abs(plus.energy - 1.465118))


def test_c06_boundary_residual_iff(record_property):
    # constructed states: z=0 wall residual < 1e-12 (both branches, spins);
    # far-wall antisymmetry residual < 1e-10 at quantized momenta and
    # > 1e-2 one 0.1/L off them, in both directions of the iff
    configs = [
        (1.0, PotentialStep(w_abs=0.5), 1.0),
        (0.6, PotentialStep(w_abs=0.3, w_phase=0.8), 1.7),
    ]
    worst_wall = 0.0
    worst_root = 0.0
    best_off = math.inf
    for mass, pot, length in configs:
        for branch in (Branch.MINUS, Branch.PLUS):
            levels = solve_spectrum(mass, pot, length, 6, branch)
            for level in levels:
                for spin in ("up", "down"):
                    wf = stationary_wavefunction(level, mass, pot, spin)
                    res = boundary_residual(wf.evaluate(0.0), "left")
                    worst_wall = max(worst_wall, res)
                    assert res < 1e-12
                g_root = abs(
                    quantization_residual(level.momentum, mass, pot, length, branch)
                )
                g_off = abs(
                    quantization_residual(
                        level.momentum + 0.1 / length, mass, pot, length, branch
                    )
                )
                worst_root = max(worst_root, g_root)
                best_off = min(best_off, g_off)
                assert g_root < 1e-10
                assert g_off > 1e-2
    record_property("z0_max", "%.2e" % worst_wall)
    record_property("root_residual_max", "%.2e" % worst_root)
    record_property("off_root_min", "%.2e" % best_off)


def test_c07_nonrel_limit_scalings(record_property):
    # Dirichlet momenta exactly n*pi/L; amplitude coefficients scale as 1/m
    # over three mass decades within 2%; momentum spacing is exactly twice
    # the confined-well spacing
    for length in (0.5, 1.0, 2.0):
        levels = nr_quantize(length, 4, 1.0, 0.5)
        for n, level in enumerate(levels, start=1):
            assert level.momentum == n * math.pi / length
        nr_spacing = levels[1].momentum - levels[0].momentum
        bag_q = quantized_momenta(length, 2)
        assert nr_spacing / (bag_q[1] - bag_q[0]) == 2.0
    ratios = []
    prev = None
    for mass in (1e2, 1e3, 1e4):
        pars = nr_parameters(math.hypot(1.0, mass), mass, 0.5)
        if prev is not None:
            for field in ("amp_ratio", "j_chi_minus", "j_chi_plus"):
                r = getattr(prev, field) / getattr(pars, field)
                ratios.append(r)
                assert abs(r - 10.0) < 0.2
        prev = pars
    record_property("decade_ratios", ",".join("%.4f" % r for r in ratios))


def test_c08_complex_limit_collapse(record_property):
    # w = 0: the branch shift vanishes and both squared momenta collapse to
    # their complex-limit values exactly; w = 1e-12 moves them below 1e-9
    worst = 0.0
    for energy, mass, v0 in ((2.0, 1.0, 1.0), (3.5, 0.5, 2.0), (1.5, 1.0, 0.0)):
        kin0 = kinematics(energy, mass, PotentialStep(v0=v0))
        assert kin0.delta == 0.0
        assert kin0.mom2_plus == kin0.q2_plus
        assert kin0.mom2_minus == kin0.q2_minus
        kin1 = kinematics(energy, mass, PotentialStep(v0=v0, w_abs=1e-12))
        shift = max(
            abs(kin1.mom2_plus - kin1.q2_plus),
            abs(kin1.mom2_minus - kin1.q2_minus),
        )
        worst = max(worst, shift)
        assert shift < 1e-9
    record_property("tiny_w_max_shift", "%.2e" % worst)


def test_c09_nullspace_oracle_residuals(record_property):
    # every nullspace member solves the full equation of motion to 1e-12,
    # across both branches including evanescent momenta; the closed-form
    # agreement (minus) and quantified disagreement (plus), and the
    # consistency-relation distance, are emitted by the verify report
    rng = np.random.default_rng(41)
    n_states = 0
    worst = 0.0
    for _ in range(30):
        mass = float(rng.uniform(0.0, 3.0))
        energy = mass + float(rng.uniform(0.1, 4.0))
        pot = PotentialStep(
            v0=float(rng.uniform(0.0, 3.0)),
            w_abs=float(rng.uniform(0.0, 3.0)),
            w_phase=float(rng.uniform(-math.pi, math.pi)),
        )
        kin = kinematics(energy, mass, pot)
        for mom2 in (kin.mom2_minus, kin.mom2_plus):
            mom = principal_momentum(mom2)
            basis = nullspace_oracle(energy, mom, mass, pot)
            assert basis, (energy, mass, pot)
            for member in basis:
                state = PlaneWaveState(spinor=member, momentum=mom, energy=energy)
                res = dirac_residual(state, pot, mass)
                worst = max(worst, res)
                assert res < 1e-12
                n_states += 1
    report = build_report()
    assert report["sections"]["oracle_residuals"]["passed"] is True
    for name in ("plus_branch_disagreement", "consistency_relation"):
        assert report["sections"][name]["kind"] == "diagnostic"
    record_property("states_checked", n_states)
    record_property("worst_residual", "%.2e" % worst)
    record_property(
        "plus_disagreement_min",
        "%.3f" % report["sections"]["plus_branch_disagreement"][
            "printed_form_residual_min"
        ],
    )


def test_c10_cli_byte_determinism(record_property):
    # repeated CLI invocations with identical flags are byte-identical
    runs = [
        ["zones", "--mass", "1", "--v0", "1", "--w0-abs", "1", "--e-step", "0.25"],
        [
            "bag-spectrum", "--w0-abs", "0.5", "--levels", "4",
            "--format", "json",
        ],
        ["verify"],
    ]
    total_bytes = 0
    for args in runs:
        argv = [sys.executable, "-m", "qdirac"] + args
        first = subprocess.run(argv, capture_output=True, check=True)
        second = subprocess.run(argv, capture_output=True, check=True)
        assert first.stdout == second.stdout, args
        assert first.stdout
        total_bytes += len(first.stdout)
        if args[0] == "verify":
            assert json.loads(first.stdout)["all_assertions_passed"] is True
    record_property("bytes_compared", total_bytes)
