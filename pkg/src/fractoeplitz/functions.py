"""Test-function registry with analytic fractional derivatives/integrals.

Every entry carries the function itself, classical derivatives where they
exist, and -- for the monomial-built entries -- closed forms for the scaled
fractional derivative and integral obtained from the power rule

    ``D_a t^b = 2**a  Gamma(b+1) / Gamma(b+1-a) x**(b-a)``
    ``J_a t^b = 2**-a Gamma(b+1) / Gamma(b+1+a) x**(b+a)``

These closed forms are the ground truth the grid and quadrature routes are
tested against.  The string syntax accepted by :func:`parse_function` is
what the command line exposes: ``const:c``, ``poly:c0,c1,...``, ``pow:beta``,
``bridge``, ``sinpi``, ``bump:center,width`` and the alias ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .specialfn import gamma


@dataclass(frozen=True)
class FunctionSpec:
    """A named function on [0, 1] (or the line) with optional closed forms.

    ``dalpha``/``jalpha`` map ``(alpha, x)`` to the scaled lower fractional
    derivative / integral when a closed form exists, else ``None``.
    ``derivative`` returns the classical derivative as another spec.
    ``support`` bounds where the function is nonzero (whole-line entries).
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    dalpha: Optional[Callable[[float, float], float]] = None
    jalpha: Optional[Callable[[float, float], float]] = None
    derivative: Optional[Callable[[], "FunctionSpec"]] = None
    defined_at_0: bool = True
    defined_at_1: bool = True
    support: Optional[Tuple[float, float]] = None

    def __call__(self, t):
        return self.fn(np.asarray(t, dtype=float))

    def nth_derivative(self, n: int) -> "FunctionSpec":
        if n < 0:
            raise ValueError("derivative order must be >= 0")
        spec = self
        for _ in range(n):
            if spec.derivative is None:
                raise ValueError(f"{spec.name} has no registered derivative")
            spec = spec.derivative()
        return spec


def _monomial_dalpha(c: float, beta: float, alpha: float, x: float) -> float:
    if x <= 0.0:
        raise ValueError("power rule requires x > 0")
    return c * 2.0**alpha * gamma(beta + 1.0) / gamma(beta + 1.0 - alpha) \
        * x ** (beta - alpha)


def _monomial_jalpha(c: float, beta: float, alpha: float, x: float) -> float:
    if x < 0.0:
        raise ValueError("integral route requires x >= 0")
    if x == 0.0:
        return 0.0
    return c * 2.0**-alpha * gamma(beta + 1.0) / gamma(beta + 1.0 + alpha) \
        * x ** (beta + alpha)


def monomial_sum(name: str, terms: Sequence[Tuple[float, float]]) -> FunctionSpec:
    """``sum c * t**beta`` over ``(c, beta)`` pairs, with power-rule oracles."""
    terms = [(float(c), float(b)) for c, b in terms if c != 0.0]

    def fn(t):
        out = np.zeros_like(t, dtype=float)
        for c, b in terms:
            out += c * (t**b if b != 0.0 else np.ones_like(t))
        return out

    def dalpha(alpha, x):
        return sum(_monomial_dalpha(c, b, alpha, x) for c, b in terms)

    def jalpha(alpha, x):
        return sum(_monomial_jalpha(c, b, alpha, x) for c, b in terms)

    def derivative():
        dt = [(c * b, b - 1.0) for c, b in terms if b != 0.0]
        ok_at_0 = all(b >= 0.0 for _, b in dt)
        spec = monomial_sum(f"d({name})", dt)
        if not ok_at_0:
            return FunctionSpec(spec.name, spec.fn, spec.dalpha, spec.jalpha,
                                spec.derivative, defined_at_0=False)
        return spec

    return FunctionSpec(name, fn, dalpha, jalpha, derivative)


def const(c: float) -> FunctionSpec:
    return monomial_sum(f"const:{c:g}", [(c, 0.0)])


def poly(coeffs: Sequence[float]) -> FunctionSpec:
    name = "poly:" + ",".join(f"{c:g}" for c in coeffs)
    return monomial_sum(name, [(c, float(j)) for j, c in enumerate(coeffs)])


def power(beta: float, c: float = 1.0) -> FunctionSpec:
    if beta < 0.0:
        raise ValueError("negative powers are not in the registry")
    spec = monomial_sum(f"pow:{beta:g}", [(c, beta)])
    if 0.0 < beta < 1.0:
        # the classical derivative blows up at 0; flag it
        return FunctionSpec(spec.name, spec.fn, spec.dalpha, spec.jalpha,
                            spec.derivative)
    return spec


def bridge() -> FunctionSpec:
    spec = monomial_sum("bridge", [(1.0, 1.0), (-1.0, 2.0)])
    return FunctionSpec("bridge", spec.fn, spec.dalpha, spec.jalpha,
                        spec.derivative)


def sinpi() -> FunctionSpec:
    def make(phase: int) -> FunctionSpec:
        sign = -1.0 if (phase // 2) % 2 else 1.0
        scale = math.pi**phase
        base = np.cos if phase % 2 else np.sin

        def fn(t):
            return sign * scale * base(np.pi * t)

        return FunctionSpec(
            "sinpi" if phase == 0 else f"d^{phase}(sinpi)",
            fn, derivative=lambda: make(phase + 1))

    return make(0)


def bump(center: float = 0.0, width: float = 1.0) -> FunctionSpec:
    """Compactly supported quartic bump ``max(0, 1 - s**2)**2``, C^1 on R."""
    if width <= 0.0:
        raise ValueError("width must be positive")

    def fn(t):
        s = (t - center) / width
        return np.maximum(0.0, 1.0 - s * s) ** 2

    return FunctionSpec(f"bump:{center:g},{width:g}", fn,
                        support=(center - width, center + width))


def from_callable(name: str, fn, **kwargs) -> FunctionSpec:
    return FunctionSpec(name, lambda t: np.asarray(fn(t), dtype=float), **kwargs)


def parse_function(text: str) -> FunctionSpec:
    """Parse the command-line function syntax (see module docstring)."""
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    try:
        if head == "t":
            return poly([0.0, 1.0])
        if head == "const":
            return const(float(rest))
        if head == "poly":
            return poly([float(c) for c in rest.split(",")])
        if head == "pow":
            return power(float(rest))
        if head == "bridge":
            return bridge()
        if head == "sinpi":
            return sinpi()
        if head == "bump":
            parts = [float(c) for c in rest.split(",")] if rest else []
            if len(parts) == 0:
                return bump()
            if len(parts) == 2:
                return bump(parts[0], parts[1])
            raise ValueError("bump takes center,width")
    except ValueError as exc:
        raise ValueError(f"cannot parse function {text!r}: {exc}") from exc
    raise ValueError(f"unknown function {text!r}")
