"""
Seeded random instance generator for property checks and benchmarks.

Every instance stream is derived from numpy.random.SeedSequence(seed).spawn(n)
with one PCG64 generator per instance, so instance i only depends on
(seed, i) and streams are reproducible across platforms.
"""

import numpy as np

from config import BENCH
from core.rational import CANONICAL, RationalMatrix, rational_matrix


def random_complex(rng: np.random.Generator, radius: float, size=None):
    """Complex numbers with modulus below radius and uniform argument."""
    modulus = radius * rng.random(size)
    angle = 2.0 * np.pi * rng.random(size)
    return modulus * np.exp(1j * angle)


def random_instance(
    rng: np.random.Generator,
    p: int = BENCH["p"],
    m: int = BENCH["m"],
    poles: int = BENCH["poles"],
    max_order: int = BENCH["max_order"],
    scale: float = BENCH["scale"],
    pole_radius: float = BENCH["pole_radius"],
    mode: str = CANONICAL,
    name: str = "",
) -> RationalMatrix:
    """Monic rational matrix with up to `poles` distinct poles.

    Args:
        rng: Generator owning this instance
        p: Matrix size
        m: Degree of the polynomial part
        poles: Upper limit on the number of distinct poles
        max_order: Highest pole power
        scale: Modulus cap of every coefficient entry
        pole_radius: Modulus cap of every pole
    """
    coeffs = [random_complex(rng, scale, (p, p)) for _ in range(m)]
    coeffs.append(np.eye(p))

    locations: list[complex] = []
    for _ in range(int(rng.integers(0, poles + 1))):
        a = complex(random_complex(rng, pole_radius))
        while any(abs(a - b) < 1e-3 for b in locations):
            a = complex(random_complex(rng, pole_radius))
        locations.append(a)

    terms = []
    for a in locations:
        order = int(rng.integers(1, max_order + 1))
        for k in range(order, 0, -1):
            terms.append((a, k, random_complex(rng, scale, (p, p))))
    return rational_matrix(coeffs, terms, mode, name)


def instance_stream(seed: int, count: int, **params) -> list[RationalMatrix]:
    """`count` instances, the i-th drawn from the i-th spawned seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [
        random_instance(np.random.Generator(np.random.PCG64(child)), name=f"seed{seed}-{i}", **params)
        for i, child in enumerate(children)
    ]
