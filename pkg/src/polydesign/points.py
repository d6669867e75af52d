"""Closed-form support-point families on [-1, 1].

Each family is the complete set of extremal points (points where the value
is +-1) of one equioscillating polynomial on the interval:

* kind "S": 2k extrema of the Chebyshev polynomial of degree 2k - 1,
* kind "X": 2k + 2 extrema of the Chebyshev polynomial of degree 2k + 1,
* kind "T": 2k extrema of the even polynomial from
  :func:`polydesign.polynomial.e_polynomial`.

One half of each family is computed from the closed-form cosine/radical
expressions and the other half is obtained by mirroring, so the symmetry
``points[i] == -points[m - 1 - i]`` holds bit-for-bit and the endpoints are
exactly -1 and +1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidOrderError


@dataclass(frozen=True, eq=False)
class SupportFamily:
    """A sorted, symmetric family of candidate support points."""

    kind: str  # "S", "X" or "T"
    k: int
    points: np.ndarray


def _mirrored(positive_half: np.ndarray, kind: str, k: int) -> SupportFamily:
    pts = np.concatenate([-positive_half[::-1], positive_half])
    return SupportFamily(kind=kind, k=k, points=pts)


def s_points(k: int) -> SupportFamily:
    """The 2k extrema of the Chebyshev polynomial of degree 2k - 1.

    Explicitly cos(j*pi/(2k-1)) for j = 2k-1, ..., 0; the positive half is
    j = k-1, ..., 0 and the negative half is its mirror image.
    """
    if k < 1:
        raise InvalidOrderError("order k must be at least 1")
    deg = 2 * k - 1
    pos = np.array([math.cos(j * math.pi / deg) for j in range(k - 1, -1, -1)])
    return _mirrored(pos, "S", k)


def x_points(k: int) -> SupportFamily:
    """The 2k + 2 extrema of the Chebyshev polynomial of degree 2k + 1.

    k = 0 is allowed and yields the two endpoint extrema of T_1 = x.
    """
    if k < 0:
        raise InvalidOrderError("order k must be nonnegative")
    deg = 2 * k + 1
    pos = np.array([math.cos(j * math.pi / deg) for j in range(k, -1, -1)])
    return _mirrored(pos, "X", k)


def t_points(k: int) -> SupportFamily:
    """The 2k extrema of the even equioscillating polynomial of degree 2k.

    The negative half is

        -sqrt((cos((i-1) pi / k) + cos(pi / 2k)) / (1 + cos(pi / 2k))),
        i = 1, ..., k,

    which is strictly increasing in i; the positive half is its mirror.
    The radicand equals 1 for i = 1, so the endpoints are exactly -+1.
    """
    if k < 1:
        raise InvalidOrderError("order k must be at least 1")
    c = math.cos(math.pi / (2 * k))
    neg = np.array(
        [
            -math.sqrt((math.cos((i - 1) * math.pi / k) + c) / (1.0 + c))
            for i in range(1, k + 1)
        ]
    )
    return _mirrored(-neg[::-1], "T", k)
