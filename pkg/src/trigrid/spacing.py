"""Node-spacing fields: scalar functions delta(x, y) prescribing local edge length.

A spacing field is any callable (x, y) -> positive float, so custom fields plug
in without subclassing; the three built-in variants cover the CLI/HTTP syntax:

    uniform:DELTA
    circular:DELTA_A,DELTA_B,BETA,XS,YS
    stripe:DELTA_A,DELTA_B,ALPHA_DEG,L,XC,YC
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .diagnostics import ParamError

SpacingFn = Callable[[float, float], float]


@dataclass(frozen=True)
class Uniform:
    delta: float

    def __post_init__(self):
        if not (self.delta > 0 and math.isfinite(self.delta)):
            raise ParamError(f"uniform spacing needs delta > 0, got {self.delta}")

    def __call__(self, x: float, y: float) -> float:
        return self.delta


@dataclass(frozen=True)
class Circular:
    """delta_a far from (xs, ys), blending to delta_b at the center.

    value = delta_a + (delta_b - delta_a) * exp(-beta * r^2)
    """
    delta_a: float
    delta_b: float
    beta: float
    xs: float = 0.0
    ys: float = 0.0

    def __post_init__(self):
        if not (self.delta_a > 0 and self.delta_b > 0):
            raise ParamError("circular spacing needs positive deltas")
        if not self.beta > 0:
            raise ParamError(f"circular spacing needs beta > 0, got {self.beta}")

    def __call__(self, x: float, y: float) -> float:
        r2 = (x - self.xs) ** 2 + (y - self.ys) ** 2
        return self.delta_a + (self.delta_b - self.delta_a) * math.exp(-self.beta * r2)


@dataclass(frozen=True)
class Stripe:
    """delta_a on the line through (xc, yc) at angle alpha, growing linearly
    (slope delta_b / length) with the perpendicular distance from that line.

    Not top-delimited: the value keeps growing with distance.
    """
    delta_a: float
    delta_b: float
    alpha: float          # radians
    length: float
    xc: float = 0.0
    yc: float = 0.0

    def __post_init__(self):
        if not (self.delta_a > 0 and self.delta_b > 0):
            raise ParamError("stripe spacing needs positive deltas")
        if not self.length > 0:
            raise ParamError(f"stripe spacing needs length > 0, got {self.length}")

    def __call__(self, x: float, y: float) -> float:
        dx = x - self.xc
        dy = y - self.yc
        r = math.hypot(dx, dy)
        if r == 0.0:
            y_s = 0.0
        else:
            beta_p = math.atan2(dy, dx)
            y_s = abs(r * math.sin(beta_p - self.alpha))
        return self.delta_a + self.delta_b * y_s / self.length


SpacingField = Union[Uniform, Circular, Stripe]


def eval_spacing(field: SpacingFn, x: float, y: float) -> float:
    return field(x, y)


def parse_spacing(spec: str) -> SpacingField:
    """Parse the CLI/HTTP spacing syntax; angles arrive in degrees."""
    head, _, rest = spec.strip().partition(":")
    kind = head.strip().lower()
    try:
        args = [float(v) for v in rest.split(",")] if rest.strip() else []
    except ValueError:
        raise ParamError(f"bad number in spacing spec {spec!r}") from None
    if kind == "uniform":
        if len(args) != 1:
            raise ParamError("uniform spacing takes exactly one value: uniform:DELTA")
        return Uniform(args[0])
    if kind == "circular":
        if len(args) not in (3, 5):
            raise ParamError("circular spacing takes 3 or 5 values: "
                             "circular:DELTA_A,DELTA_B,BETA[,XS,YS]")
        args += [0.0, 0.0] if len(args) == 3 else []
        return Circular(args[0], args[1], args[2], args[3], args[4])
    if kind == "stripe":
        if len(args) not in (4, 6):
            raise ParamError("stripe spacing takes 4 or 6 values: "
                             "stripe:DELTA_A,DELTA_B,ALPHA_DEG,L[,XC,YC]")
        args += [0.0, 0.0] if len(args) == 4 else []
        return Stripe(args[0], args[1], math.radians(args[2]), args[3],
                      args[4], args[5])
    raise ParamError(f"unknown spacing kind {head!r}")


def format_spacing(field: SpacingField) -> str:
    """Inverse of parse_spacing (angles back to degrees)."""
    if isinstance(field, Uniform):
        return f"uniform:{field.delta:g}"
    if isinstance(field, Circular):
        return (f"circular:{field.delta_a:g},{field.delta_b:g},{field.beta:g},"
                f"{field.xs:g},{field.ys:g}")
    if isinstance(field, Stripe):
        return (f"stripe:{field.delta_a:g},{field.delta_b:g},"
                f"{math.degrees(field.alpha):g},{field.length:g},"
                f"{field.xc:g},{field.yc:g}")
    raise ParamError(f"unknown spacing field {field!r}")
