"""
Arrangement generators - braid, Boolean and random central families
"""

from typing import List, Optional, Sequence

import numpy as np

from hyperfree.arrangements.models import Arrangement, Hyperplane
from hyperfree.errors import DomainError


def braid(n: int) -> Arrangement:
    """Braid arrangement x_i - x_j = 0 (i < j) in dimension n"""
    if n < 1:
        raise DomainError("Braid arrangement needs n >= 1")
    normals: List[List[int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            normals.append(v)
    return Arrangement(n, tuple(Hyperplane.from_coefficients(v) for v in normals))


def boolean(dimension: int) -> Arrangement:
    """Coordinate hyperplanes x_i = 0"""
    if dimension < 1:
        raise DomainError("Boolean arrangement needs dimension >= 1")
    return Arrangement(
        dimension,
        tuple(
            Hyperplane(tuple(1 if j == i else 0 for j in range(dimension)), 0)
            for i in range(dimension)
        ),
    )


def lines(normals: Sequence[Sequence[int]]) -> Arrangement:
    """Central arrangement of lines in the plane from (a, b) normals"""
    if any(len(n) != 2 for n in normals):
        raise DomainError("Line normals must have two coordinates")
    return Arrangement.from_normals([list(n) for n in normals])


def generic_central(
    count: int,
    dimension: int,
    rng: Optional[np.random.Generator] = None,
    box: int = 50,
) -> Arrangement:
    """
    Random central arrangement with integer normals in [-box, box]

    Normals are redrawn until `count` distinct hyperplanes are collected;
    for a large box the result is generic with probability close to 1.
    """
    if count < 0 or dimension < 1:
        raise DomainError("generic_central needs count >= 0 and dimension >= 1")
    rng = rng or np.random.default_rng()
    chosen: List[Hyperplane] = []
    seen = set()
    while len(chosen) < count:
        v = [int(x) for x in rng.integers(-box, box + 1, size=dimension)]
        if not any(v):
            continue
        h = Hyperplane.from_coefficients(v)
        if h in seen:
            continue
        seen.add(h)
        chosen.append(h)
    return Arrangement(dimension, tuple(chosen))
