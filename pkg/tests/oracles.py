"""Deterministic random-instance generators used as cross-check oracles."""

import random
from fractions import Fraction

from lctdv.polytope import Constraint, ConstraintSystem, LinForm

RELATIONS = (">=", ">", "=")


def random_rational(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_system(rng: random.Random,
                  max_vars: int = 6,
                  max_constraints: int = 12) -> ConstraintSystem:
    """A random small system mixing loose, strict and equality rows."""
    n_vars = rng.randint(1, max_vars)
    names = [f"x{i}" for i in range(1, n_vars + 1)]
    n_cons = rng.randint(1, max_constraints)
    constraints = []
    for _ in range(n_cons):
        coeffs = {}
        for name in names:
            if rng.random() < 0.4:
                coeffs[name] = random_rational(rng)
        form = LinForm(coeffs, random_rational(rng))
        relation = rng.choices(RELATIONS, weights=(6, 3, 1))[0]
        constraints.append(Constraint(form, relation))
    return ConstraintSystem(names, constraints)


def random_objective(rng: random.Random,
                     sys: ConstraintSystem) -> LinForm:
    return LinForm({v: random_rational(rng) for v in sys.variables},
                   random_rational(rng))
