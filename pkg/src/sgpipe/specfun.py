"""Cylinder-function kernel.

Bessel functions of the first and second kind and modified Bessel functions
for integer order and real or complex argument, their derivatives, zeros of
J_k, and the cross-product function whose roots drive the neutral-stability
computation.

Evaluation is backed by scipy.special (AMOS for complex argument), which
meets the 12-significant-digit budget on the strip |z| <= 200, |Im z| <= 50
used by the rest of the library.  Accuracy is enforced by the test suite
against independent power-series oracles rather than trusted blindly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy import optimize, special

__all__ = [
    "CylinderKind",
    "BesselZeroTable",
    "cyl_eval",
    "cyl_deriv",
    "bessel_j_zero",
    "cross_product_fn",
]

MAX_ZERO_ORDER = 20
MAX_ZERO_INDEX = 50


class CylinderKind(enum.Enum):
    """The four cylinder-function families."""

    J = "J"
    Y = "Y"
    I = "I"  # noqa: E741 - standard special-function name
    K = "K"


def _as_kind(kind) -> CylinderKind:
    if isinstance(kind, CylinderKind):
        return kind
    try:
        return CylinderKind(str(kind))
    except ValueError:
        raise ValueError(f"unknown cylinder kind {kind!r}; expected one of J, Y, I, K")


def _check_finite(value, kind, order, z):
    if np.all(np.isfinite([value.real, value.imag])):
        return value
    raise OverflowError(
        f"{kind.value}_{order}({z}) exceeds the representable range"
    )


def cyl_eval(kind, order: int, z: complex) -> complex:
    """Evaluate a cylinder function of integer order at real or complex z.

    Negative orders are reduced with J_{-m} = (-1)^m J_m (same for Y);
    I and K require order >= 0.  Y and K are singular at z = 0.

    Raises
    ------
    ValueError
        for z = 0 with kind Y or K, or a negative order with kind I or K.
    OverflowError
        when the result magnitude exceeds the floating-point range.
    """
    kind = _as_kind(kind)
    order = int(order)
    z = complex(z)
    sign = 1.0
    if order < 0:
        if kind in (CylinderKind.I, CylinderKind.K):
            raise ValueError(f"kind {kind.value} requires order >= 0, got {order}")
        order = -order
        sign = (-1.0) ** order
    if z == 0:
        if kind in (CylinderKind.Y, CylinderKind.K):
            raise ValueError(f"{kind.value}_{order} is singular at z = 0")
        return complex(1.0 if order == 0 else 0.0)
    zz = z.real if z.imag == 0.0 else z
    fn = {
        CylinderKind.J: special.jv,
        CylinderKind.Y: special.yv,
        CylinderKind.I: special.iv,
        CylinderKind.K: special.kv,
    }[kind]
    value = complex(fn(order, zz)) * sign
    return _check_finite(value, kind, order, z)


def cyl_deriv(kind, order: int, z: complex) -> complex:
    """Derivative of a cylinder function via the downward recurrence.

    Uses F_m'(z) = (m/z) F_m(z) - F_{m+1}(z) for J, Y, K (with the K sign
    absorbed in the definition) and I_m'(z) = (m/z) I_m(z) + I_{m+1}(z).
    The z = 0 limits exist only for J and I.
    """
    kind = _as_kind(kind)
    order = int(order)
    z = complex(z)
    sign = 1.0
    if order < 0:
        if kind in (CylinderKind.I, CylinderKind.K):
            raise ValueError(f"kind {kind.value} requires order >= 0, got {order}")
        order = -order
        sign = (-1.0) ** order
    if z == 0:
        if kind in (CylinderKind.Y, CylinderKind.K):
            raise ValueError(f"{kind.value}_{order}' is singular at z = 0")
        if order == 1:
            return complex(0.5 * sign)
        return complex(0.0)
    head = (order / z) * cyl_eval(kind, order, z)
    tail = cyl_eval(kind, order + 1, z)
    if kind is CylinderKind.I:
        value = head + tail
    elif kind is CylinderKind.K:
        value = head - tail
    else:
        value = head - tail
    return _check_finite(sign * value, kind, order, z)


def bessel_j_zero(k: int, j: int) -> float:
    """The j-th positive zero of J_k, polished to machine residual.

    Supported range: 0 <= k <= 20, 1 <= j <= 50.
    """
    k = int(k)
    j = int(j)
    if not (0 <= k <= MAX_ZERO_ORDER):
        raise ValueError(f"order k = {k} outside supported range [0, {MAX_ZERO_ORDER}]")
    if not (1 <= j <= MAX_ZERO_INDEX):
        raise ValueError(f"index j = {j} outside supported range [1, {MAX_ZERO_INDEX}]")
    seed = special.jn_zeros(k, j)[-1]
    # one Newton step guards the library value to |J_k| ~ eps * |J_k'| * z
    root = optimize.newton(
        lambda x: special.jv(k, x), seed, fprime=lambda x: special.jvp(k, x), tol=1e-13
    )
    return float(root)


@dataclass(frozen=True)
class BesselZeroTable:
    """Ascending zeros alpha_{k,1} < alpha_{k,2} < ... of J_k."""

    order: int
    zeros: tuple

    def __post_init__(self):
        zs = np.asarray(self.zeros, dtype=float)
        if zs.size and not np.all(np.diff(zs) > 0):
            raise ValueError("zeros must be strictly increasing")
        for z in zs:
            bound = 1e-12 * max(1.0, abs(special.jvp(self.order, z)) * z)
            if abs(special.jv(self.order, z)) >= bound:
                raise ValueError(f"entry {z} is not a zero of J_{self.order}")

    @classmethod
    def build(cls, order: int, count: int) -> "BesselZeroTable":
        return cls(order, tuple(bessel_j_zero(order, j) for j in range(1, count + 1)))

    def __getitem__(self, j: int) -> float:
        return self.zeros[j]

    def __len__(self) -> int:
        return len(self.zeros)


def cross_product_fn(m: int, lam: float) -> float:
    """I_m(s) J_m'(s) - J_m(s) I_m'(s) at s = sqrt(lam), for lam > 0.

    Sign changes in lam bracket the neutral values lambda_{m,j}; the function
    vanishes like lam^(m+1/2) as lam -> 0+ without changing sign before the
    first genuine root.
    """
    if lam <= 0:
        raise ValueError(f"lam must be positive, got {lam}")
    s = float(np.sqrt(lam))
    jm = special.jv(m, s)
    im = special.iv(m, s)
    jd = special.jvp(m, s)
    idv = special.ivp(m, s)
    return float(im * jd - jm * idv)
