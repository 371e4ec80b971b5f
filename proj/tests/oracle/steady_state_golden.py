#!/usr/bin/env python3
"""Standalone high-precision oracle for the cavity-model golden values.

Evaluates the steady-state cavity amplitudes and the effective Ising coupling
coefficients with 50-digit arithmetic, independently of the C++ code paths.
The printed values are frozen into tests/test_cavity_model.cpp.

Run:  python3 tests/oracle/steady_state_golden.py   (needs mpmath)
"""

import mpmath as mp

mp.mp.dps = 50


def derive(delta, gamma0, eps, phases, g=1):
    """Steady-state amplitudes and couplings for lossless unit-modulus factors."""
    e1, e2, e3 = eps
    phi12, phi21, phi23, phi32 = phases
    i = mp.mpc(0, 1)
    f12, f21 = mp.e ** (i * phi12), mp.e ** (i * phi21)
    f23, f32 = mp.e ** (i * phi23), mp.e ** (i * phi32)

    chi = mp.mpf(g) ** 2 / delta
    m = i * delta + gamma0
    w2 = gamma0**2 * (f21 * f12 + f32 * f23)
    det = m * m - w2

    a1 = (e1 * m * m + e2 * m * gamma0 * f12
          + gamma0**2 * (e3 * f12 * f23 - e1 * f23 * f32)) / (m * det)
    a2 = (e2 * m + gamma0 * (e1 * f21 + e3 * f23)) / det
    a3 = (e3 * m * m + e2 * m * gamma0 * f32
          + gamma0**2 * (e1 * f32 * f21 - e3 * f21 * f12)) / (m * det)

    pref = 2 * gamma0 * chi**2
    j12 = pref * mp.im(a1 * mp.conj(a2) * f21 / det)
    j23 = pref * mp.im(a3 * mp.conj(a2) * f32 / det)
    j31 = pref * mp.im(gamma0 * a3 * mp.conj(a1) * f23 * f12 / (m * det))
    return (a1, a2, a3), (j12, j23, j31), abs(det)


def main():
    quarter = mp.pi / 4
    alpha, j, pole = derive(mp.mpf("10.5"), 10, (2, 2, 2), (quarter,) * 4)

    print("golden point: delta=10.5 gamma0=10 eps=(2,2,2) phases=pi/4 nu=0")
    for k, a in enumerate(alpha, 1):
        print(f"  alpha{k} = {mp.nstr(mp.re(a), 20)}  {mp.nstr(mp.im(a), 20)} i")
    print(f"  j12 = {mp.nstr(j[0], 20)}")
    print(f"  j23 = {mp.nstr(j[1], 20)}")
    print(f"  j31 = {mp.nstr(j[2], 20)}")
    print(f"  |M^2 - W^2| = {mp.nstr(pole, 20)}")

    # hand values used by the entanglement oracles
    print("\nclosed-form measure oracles")
    print(f"  W-state tangle 8/9       = {mp.nstr(mp.mpf(8) / 9, 20)}")
    print(f"  W-state pair concurrence = {mp.nstr(mp.mpf(2) / 3, 20)}")
    print(f"  pure (0.6,0,0,0.8) C     = {mp.nstr(mp.mpf('0.96'), 20)}")

    # loss-shifted resonance line at nu (L12 + L23) = ln(4/3)
    print("\nshifted line")
    print(f"  sqrt(1/2) gamma0 (gamma0=10) = {mp.nstr(mp.sqrt(mp.mpf(1) / 2) * 10, 20)}")


if __name__ == "__main__":
    main()
