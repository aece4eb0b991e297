"""Shared generators and oracles for the test-suite."""

from __future__ import annotations

import math
import random

from alphagroup import (AlphaNumber, Displacement4, MetricTensor, Point4,
                        Polyline4, parse_field, parse_metric_file)
from alphagroup.fields import BinOp, Func, Neg, Num, ScalarField, Var

VARS = ("x", "y", "z", "t")


def random_alpha(rng: random.Random, span: float = 10.0) -> AlphaNumber:
    return AlphaNumber(rng.uniform(-span, span), rng.uniform(-span, span),
                       rng.uniform(-span, span), rng.uniform(-span, span))


def random_point(rng: random.Random, span: float = 10.0) -> Point4:
    return Point4(*(rng.uniform(-span, span) for _ in range(4)))


def random_disp(rng: random.Random, span: float = 10.0) -> Displacement4:
    return Displacement4(*(rng.uniform(-span, span) for _ in range(4)))


def random_poly_source(rng: random.Random, coeff_span: float = 1.0) -> str:
    """Source text of a random polynomial of degree <= 2 in x, y, z, t."""
    terms = [f"{rng.uniform(-coeff_span, coeff_span):.6f}"]
    for v in VARS:
        if rng.random() < 0.5:
            terms.append(f"{rng.uniform(-coeff_span, coeff_span):.6f}*{v}")
    for _ in range(3):
        if rng.random() < 0.4:
            u, w = rng.choice(VARS), rng.choice(VARS)
            terms.append(f"{rng.uniform(-coeff_span, coeff_span):.6f}*{u}*{w}")
    return " + ".join(terms)


def random_tensor(rng: random.Random, fill_prob: float = 1.0) -> MetricTensor:
    """Tensor with polynomial components parsed from generated source."""
    components = {}
    for r in range(1, 5):
        for c in range(1, 5):
            if rng.random() < fill_prob:
                components[r, c] = parse_field(random_poly_source(rng))
    return MetricTensor.from_components(components)


def euclidean_tensor() -> MetricTensor:
    return MetricTensor.from_definition(
        parse_metric_file("g[1][1]=1\ng[2][2]=1\ng[3][3]=1\n"))


def sphere_tensor() -> MetricTensor:
    """Unit-sphere surface metric in (colatitude, longitude) = (x, y)."""
    return MetricTensor.from_definition(
        parse_metric_file("g[1][1]=1\ng[2][2]=sin(x)^2\n"))


def sphere_chord_true_length(start: Point4, end: Point4) -> float:
    """Arc length of the straight coordinate chord under the sphere metric,
    by adaptive quadrature (independent of the polyline midpoint rule)."""
    from scipy.integrate import quad

    dx = end.x - start.x
    dy = end.y - start.y

    def integrand(s: float) -> float:
        return math.sqrt(dx * dx + math.sin(start.x + s * dx) ** 2 * dy * dy)

    value, _ = quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13)
    return value


def straight_path(start: Point4, end: Point4, segments: int) -> Polyline4:
    return Polyline4.straight(start, end, segments)


def random_tree(rng: random.Random, depth: int) -> ScalarField:
    """Random well-formed expression tree for render/parse round-trips."""
    if depth <= 0 or rng.random() < 0.2:
        if rng.random() < 0.5:
            return Var(rng.choice(VARS))
        return Num(abs(rng.uniform(0.0, 100.0)))
    kind = rng.random()
    if kind < 0.15:
        return Neg(random_tree(rng, depth - 1))
    if kind < 0.30:
        return Func(rng.choice(("sin", "cos", "exp", "sqrt", "abs")),
                    random_tree(rng, depth - 1))
    op = rng.choice(("+", "-", "*", "/", "^"))
    return BinOp(op, random_tree(rng, depth - 1), random_tree(rng, depth - 1))
