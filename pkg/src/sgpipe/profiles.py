"""Closed radial basis for eigenfunctions on the unit disk.

A RadialProfile is a finite combination of r^n, J_n(a r) and I_n(a r) terms
(n the azimuthal order), the family closed under the cylindrical Laplacian

    Lap_n = d^2/dr^2 + (1/r) d/dr - n^2/r^2,

with Lap_n r^n = 0, Lap_n J_n(a r) = -a^2 J_n(a r), Lap_n I_n(a r) = +a^2 I_n(a r).

Modified-Bessel terms are stored normalized to their value at r = 1, i.e. the
basis function is I_n(a r) / I_n(a); this keeps boundary matrices and profile
values O(1) even for large scale a, with the exponential growth handled by
scaled Bessel evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special

__all__ = ["POWER", "BESSEL_J", "BESSEL_I", "Term", "RadialProfile"]

POWER = "pow"
BESSEL_J = "J"
BESSEL_I = "I"


def _ive_deriv(n, x):
    """Scaled derivative I_n'(x) e^{-x}."""
    return 0.5 * (special.ive(n - 1, x) + special.ive(n + 1, x))


@dataclass(frozen=True)
class Term:
    kind: str
    scale: float
    coeff: complex

    def __post_init__(self):
        if self.kind not in (POWER, BESSEL_J, BESSEL_I):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.kind != POWER and self.scale <= 0:
            raise ValueError("Bessel-basis scale must be positive")


class RadialProfile:
    """Radial part of a single-wavenumber field, closed under Lap_n."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms=()):
        self.order = int(order)
        if self.order < 0:
            raise ValueError("order is the azimuthal modulus |m|, must be >= 0")
        self.terms = tuple(
            t if isinstance(t, Term) else Term(t[0], float(t[1]), complex(t[2]))
            for t in terms
        )

    @classmethod
    def zero(cls, order: int) -> "RadialProfile":
        return cls(order, ())

    def __call__(self, r):
        return self.eval(r)

    def eval(self, r):
        """Profile values; finite on [0, 1] by construction."""
        r = np.asarray(r, dtype=float)
        out = np.zeros(r.shape, dtype=complex)
        n = self.order
        for t in self.terms:
            if t.kind == POWER:
                out += t.coeff * r**n
            elif t.kind == BESSEL_J:
                out += t.coeff * special.jv(n, t.scale * r)
            else:
                a = t.scale
                out += t.coeff * (special.ive(n, a * r) / special.ive(n, a)) * np.exp(
                    a * (r - 1.0)
                )
        return out

    def eval_deriv(self, r):
        """d/dr of the profile, from the Bessel recurrences (no differencing)."""
        r = np.asarray(r, dtype=float)
        out = np.zeros(r.shape, dtype=complex)
        n = self.order
        for t in self.terms:
            if t.kind == POWER:
                if n > 0:
                    out += t.coeff * n * r ** (n - 1)
            elif t.kind == BESSEL_J:
                out += t.coeff * t.scale * special.jvp(n, t.scale * r)
            else:
                a = t.scale
                out += t.coeff * a * (
                    _ive_deriv(n, a * r) / special.ive(n, a)
                ) * np.exp(a * (r - 1.0))
        return out

    def laplacian(self) -> "RadialProfile":
        """Lap_n applied in closed form; power terms drop out."""
        new = []
        for t in self.terms:
            if t.kind == POWER:
                continue
            factor = -t.scale**2 if t.kind == BESSEL_J else t.scale**2
            new.append(Term(t.kind, t.scale, t.coeff * factor))
        return RadialProfile(self.order, new)

    def scaled(self, c) -> "RadialProfile":
        c = complex(c)
        return RadialProfile(
            self.order, [Term(t.kind, t.scale, t.coeff * c) for t in self.terms]
        )

    def __add__(self, other: "RadialProfile") -> "RadialProfile":
        if self.order != other.order:
            raise ValueError("profiles must share the azimuthal order")
        return RadialProfile(self.order, self.terms + other.terms)

    def conjugate(self) -> "RadialProfile":
        return RadialProfile(
            self.order, [Term(t.kind, t.scale, np.conj(t.coeff)) for t in self.terms]
        )

    def is_zero(self) -> bool:
        return all(t.coeff == 0 for t in self.terms)

    def __repr__(self):
        body = " + ".join(
            f"({t.coeff:.3g})*{t.kind}[{t.scale:.4g}]" for t in self.terms
        )
        return f"RadialProfile(n={self.order}, {body or '0'})"


def one_minus_eps_lap(p: RadialProfile, eps: float) -> RadialProfile:
    """(1 - eps * Lap_n) p, used throughout the operator algebra."""
    return p + p.laplacian().scaled(-eps)
