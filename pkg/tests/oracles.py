"""High-precision reference evaluations used to freeze expected values.

These follow the printed formulas literally (difference form for the added
noise, expanded fidelity bracket) at 60 digits, so they share no code or
algebraic rearrangement with the package.
"""

import mpmath as mp

mp.mp.dps = 60

HBAR = mp.mpf("6.62607015e-34") / (2 * mp.pi)
C = mp.mpf(299792458)
G = mp.mpf("6.67430e-11")
LP = mp.sqrt(G * HBAR / C**3)
MP = mp.sqrt(HBAR * C / G)


def mu_max(rp):
    return mp.e ** (mp.pi * mp.mpf(rp) ** 2 - 1) + mp.mpf(1) / 2


def xi(mu):
    mu = mp.mpf(mu)
    return 2 * mu - mp.sqrt(4 * mu**2 - 1)


def fidelity(mu, mt):
    mu, mt = mp.mpf(mu), mp.mpf(mt)
    x = xi(mu)
    bracket = 1 - 4 * mt * (mp.sqrt(4 * mu**2 - 1) + mt - 2 * mu * (1 + 2 * mt * x))
    return bracket ** mp.mpf(-0.25)


def lower(eta, x):
    eta, x = mp.mpf(eta), mp.mpf(x)
    return 2 * eta * x / (1 + eta * x)


def delta(eta, x):
    eta, x = mp.mpf(eta), mp.mpf(x)
    return 2 * mp.sqrt(eta * x / (eta * x + 1 - eta))


def h2(p):
    p = mp.mpf(p)
    if p in (0, 1):
        return mp.mpf(0)
    return -p * mp.log(p, 2) - (1 - p) * mp.log(1 - p, 2)


def general_rate(eps, n, eta, rp, er):
    et = mp.mpf(eps) + n * delta(eta, xi(mu_max(rp)))
    return (er + 2 * h2(et) / n) / (1 - 8 * et), et


def thermal_entropy(n):
    n = mp.mpf(n)
    if n == 0:
        return mp.mpf(0)
    return (n + 1) * mp.log(n + 1, 2) - n * mp.log(n, 2)
