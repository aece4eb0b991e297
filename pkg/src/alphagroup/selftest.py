"""Randomized invariant suite behind the CLI's ``selftest`` command.

Each check draws inputs from a seeded RNG, so runs are reproducible; on
failure the first offending input is reported verbatim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import ONE, AlphaNumber
from .fields import BinOp, Num, ScalarField, Var
from .metric import (Displacement4, MetricTensor, Point4, eval_ds2_expanded,
                     eval_ds2_grouped, reduce_to_riemannian, riemannian_ds2)

RING_TOL = 1e-9
HOMOMORPHISM_TOL = 1e-12
TENSOR_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _random_alpha(rng: random.Random, span: float) -> AlphaNumber:
    return AlphaNumber(rng.uniform(-span, span), rng.uniform(-span, span),
                       rng.uniform(-span, span), rng.uniform(-span, span))


def _check_ring_axioms(rng: random.Random, cases: int) -> CheckResult:
    name = "ring axioms (associativity, commutativity, distributivity)"
    for _ in range(cases):
        x = _random_alpha(rng, 10.0)
        y = _random_alpha(rng, 10.0)
        z = _random_alpha(rng, 10.0)
        checks = (
            ("add associativity", (x + y) + z, x + (y + z)),
            ("mul associativity", (x * y) * z, x * (y * z)),
            ("mul commutativity", x * y, y * x),
            ("distributivity", x * (y + z), x * y + x * z),
            ("mul identity", x * ONE, x),
        )
        for label, lhs, rhs in checks:
            if not lhs.isclose(rhs, RING_TOL):
                return CheckResult(name, False, cases,
                                   f"{label} failed for x={x!r}, y={y!r}, z={z!r}")
    return CheckResult(name, True, cases)


def _check_split_homomorphism(rng: random.Random, cases: int) -> CheckResult:
    name = "projection homomorphism (split of product = product of splits)"
    for _ in range(cases):
        x = _random_alpha(rng, 1000.0)
        y = _random_alpha(rng, 1000.0)
        lhs = (x * y).split()
        px, py = x.split(), y.split()
        for label, got, want, scale in (
                ("p1", lhs.p1, px.p1 * py.p1, abs(px.p1) * abs(py.p1)),
                ("p2", lhs.p2, px.p2 * py.p2, abs(px.p2) * abs(py.p2))):
            if abs(got - want) > HOMOMORPHISM_TOL * max(1.0, scale):
                return CheckResult(name, False, cases,
                                   f"{label} mismatch for x={x!r}, y={y!r}")
    return CheckResult(name, True, cases)


def _random_polynomial(rng: random.Random) -> ScalarField:
    """A random polynomial of degree <= 2 in x, y, z, t."""
    node: ScalarField = Num(round(rng.uniform(-1.0, 1.0), 6))
    variables = ("x", "y", "z", "t")
    for v in variables:
        if rng.random() < 0.5:
            node = BinOp("+", node,
                         BinOp("*", Num(round(rng.uniform(-1.0, 1.0), 6)), Var(v)))
    for _ in range(2):
        if rng.random() < 0.5:
            u, w = rng.choice(variables), rng.choice(variables)
            term = BinOp("*", BinOp("*", Num(round(rng.uniform(-1.0, 1.0), 6)),
                                    Var(u)), Var(w))
            node = BinOp("+", node, term)
    return node


def _random_tensor(rng: random.Random) -> MetricTensor:
    return MetricTensor.from_components(
        {(r, c): _random_polynomial(rng)
         for r in range(1, 5) for c in range(1, 5)})


def _random_point(rng: random.Random) -> Point4:
    return Point4(*(rng.uniform(-10.0, 10.0) for _ in range(4)))


def _random_disp(rng: random.Random) -> Displacement4:
    return Displacement4(*(rng.uniform(-10.0, 10.0) for _ in range(4)))


def _check_grouping_equivalence(rng: random.Random, cases: int) -> CheckResult:
    name = "expanded and grouped line elements agree"
    for _ in range(cases):
        g = _random_tensor(rng)
        p = _random_point(rng)
        d = _random_disp(rng)
        expanded = eval_ds2_expanded(g, p, d)
        grouped = eval_ds2_grouped(g, p, d)
        if not expanded.isclose(grouped, TENSOR_TOL):
            return CheckResult(
                name, False, cases,
                f"mismatch at p={p!r}, d={d!r}: "
                f"expanded={expanded!r}, grouped={grouped!r}")
    return CheckResult(name, True, cases)


def _check_reduction_identity(rng: random.Random, cases: int) -> CheckResult:
    name = "reduced metric collapses to the real quadratic form"
    for _ in range(cases):
        g = _random_tensor(rng)
        p = _random_point(rng)
        d = _random_disp(rng)
        collapsed = eval_ds2_expanded(reduce_to_riemannian(g), p, d).collapse()
        direct = riemannian_ds2(g, p, d)
        if abs(collapsed - direct) > TENSOR_TOL:
            return CheckResult(
                name, False, cases,
                f"mismatch at p={p!r}, d={d!r}: "
                f"collapsed={collapsed!r}, direct={direct!r}")
    return CheckResult(name, True, cases)


def run_selftest(seed: int = 0) -> list[CheckResult]:
    """Run every embedded invariant check with a seeded RNG."""
    rng = random.Random(seed)
    return [
        _check_ring_axioms(rng, 2000),
        _check_split_homomorphism(rng, 2000),
        _check_grouping_equivalence(rng, 200),
        _check_reduction_identity(rng, 200),
    ]
