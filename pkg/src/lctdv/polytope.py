"""Exact linear-inequality engine over rationals.

Feasibility, optimization, implication checking, Fourier-Motzkin variable
elimination, and verifiable Farkas-style infeasibility certificates.  Both
non-strict (``f >= 0``) and strict (``f > 0``) constraints are handled
natively: the case contradictions we certify end in strict inequalities,
and replacing strict by non-strict would wrongly accept boundary-feasible
systems.

Two independent engines ship:

* an exact simplex (Bland's rule, deterministic) -- the default, used for
  feasibility witnesses, Farkas certificates, and optimization;
* Fourier-Motzkin elimination with multiplier provenance -- the projection
  operator and the cross-checking oracle in the tests.

All arithmetic is ``fractions.Fraction``; no tolerances exist anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .exactlin import Rational, RationalLike, rat, rat_str


class PolytopeError(Exception):
    pass


class UnknownVariable(PolytopeError):
    pass


class IndexOutOfRange(PolytopeError):
    pass


# ---------------------------------------------------------------------------
# Linear forms and constraints
# ---------------------------------------------------------------------------

class LinForm:
    """An affine form  sum coeff_v * v + constant  with rational coefficients.

    Zero coefficients are never stored.  Immutable.
    """

    __slots__ = ("_coeffs", "_constant")

    def __init__(self, coeffs: Mapping[str, RationalLike] | None = None,
                 constant: RationalLike = 0):
        cleaned = {}
        for name, c in (coeffs or {}).items():
            c = rat(c)
            if c != 0:
                cleaned[name] = c
        self._coeffs = cleaned
        self._constant = rat(constant)

    @property
    def coeffs(self) -> dict[str, Rational]:
        return dict(self._coeffs)

    @property
    def constant(self) -> Rational:
        return self._constant

    def coeff(self, name: str) -> Rational:
        return self._coeffs.get(name, Fraction(0))

    def variables(self) -> frozenset[str]:
        return frozenset(self._coeffs)

    def is_constant(self) -> bool:
        return not self._coeffs

    @classmethod
    def var(cls, name: str, coeff: RationalLike = 1) -> "LinForm":
        return cls({name: coeff})

    @classmethod
    def const(cls, value: RationalLike) -> "LinForm":
        return cls({}, value)

    def __add__(self, other: "LinForm") -> "LinForm":
        merged = dict(self._coeffs)
        for name, c in other._coeffs.items():
            merged[name] = merged.get(name, Fraction(0)) + c
        return LinForm(merged, self._constant + other._constant)

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self + other.scale(-1)

    def __neg__(self) -> "LinForm":
        return self.scale(-1)

    def scale(self, c: RationalLike) -> "LinForm":
        c = rat(c)
        return LinForm({n: c * v for n, v in self._coeffs.items()},
                       c * self._constant)

    def shift(self, c: RationalLike) -> "LinForm":
        return LinForm(self._coeffs, self._constant + rat(c))

    def evaluate(self, assignment: Mapping[str, RationalLike]) -> Rational:
        total = self._constant
        for name, c in self._coeffs.items():
            total += c * rat(assignment[name])
        return total

    def _key(self):
        return (tuple(sorted(self._coeffs.items())), self._constant)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinForm):
            return self._key() == other._key()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key())

    def dump(self) -> str:
        """Serialize as ``<p/q>*<var> + ... + <p/q>`` (constant always last)."""
        parts = [f"{rat_str(c)}*{name}"
                 for name, c in sorted(self._coeffs.items())]
        parts.append(rat_str(self._constant))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LinForm({self.dump()})"


#: Relation tags: the form compared with zero.
REL_GE = ">="
REL_GT = ">"
REL_EQ = "="
_RELATIONS = (REL_GE, REL_GT, REL_EQ)


@dataclass(frozen=True)
class Constraint:
    """``form >= 0``, ``form > 0`` or ``form = 0``."""

    form: LinForm
    relation: str

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise PolytopeError(f"unknown relation {self.relation!r}")

    def satisfied_by(self, assignment: Mapping[str, RationalLike]) -> bool:
        value = self.form.evaluate(assignment)
        if self.relation == REL_GE:
            return value >= 0
        if self.relation == REL_GT:
            return value > 0
        return value == 0

    def dump(self) -> str:
        return f"{self.form.dump()} {self.relation} 0"

    def __repr__(self) -> str:
        return f"Constraint({self.dump()})"


def ge(form: LinForm) -> Constraint:
    return Constraint(form, REL_GE)


def gt(form: LinForm) -> Constraint:
    return Constraint(form, REL_GT)


def eq(form: LinForm) -> Constraint:
    return Constraint(form, REL_EQ)


class ConstraintSystem:
    """An ordered set of variables plus a list of constraints over them."""

    __slots__ = ("_variables", "_constraints")

    def __init__(self, variables: Iterable[str],
                 constraints: Iterable[Constraint] = ()):
        ordered = []
        seen = set()
        for v in variables:
            if v not in seen:
                ordered.append(v)
                seen.add(v)
        self._variables = tuple(ordered)
        built = tuple(constraints)
        for c in built:
            undeclared = c.form.variables() - seen
            if undeclared:
                raise UnknownVariable(
                    f"constraint references undeclared variables: "
                    f"{sorted(undeclared)}")
        self._constraints = built

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def constraints(self) -> tuple[Constraint, ...]:
        return self._constraints

    def with_constraints(self, extra: Iterable[Constraint],
                         new_variables: Iterable[str] = ()) -> "ConstraintSystem":
        return ConstraintSystem(list(self._variables) + list(new_variables),
                                list(self._constraints) + list(extra))

    def satisfied_by(self, assignment: Mapping[str, RationalLike]) -> bool:
        return all(c.satisfied_by(assignment) for c in self._constraints)

    def dump(self) -> str:
        return "\n".join(c.dump() for c in self._constraints)

    @classmethod
    def parse(cls, text: str,
              variables: Optional[Iterable[str]] = None) -> "ConstraintSystem":
        """Restore a system from the dump format (one constraint per line)."""
        constraints = []
        names: list[str] = []
        seen = set()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            c = parse_dumped_constraint(line)
            constraints.append(c)
            for v in sorted(c.form.variables()):
                if v not in seen:
                    names.append(v)
                    seen.add(v)
        if variables is not None:
            names = list(variables)
        return cls(names, constraints)

    def __repr__(self) -> str:
        return (f"ConstraintSystem(vars={list(self._variables)}, "
                f"{len(self._constraints)} constraints)")


def parse_dumped_constraint(line: str) -> Constraint:
    """Parse one line of the dump format."""
    for rel in (REL_GE, REL_EQ, REL_GT):  # check '>=' before '>'
        marker = f" {rel} 0"
        if line.endswith(marker):
            body = line[: -len(marker)]
            break
    else:
        raise PolytopeError(f"cannot parse constraint line {line!r}")
    coeffs: dict[str, Fraction] = {}
    constant = Fraction(0)
    for term in body.split(" + "):
        term = term.strip()
        if not term:
            continue
        if "*" in term:
            c_text, name = term.split("*", 1)
            name = name.strip()
            coeffs[name] = coeffs.get(name, Fraction(0)) + rat(c_text)
        else:
            constant += rat(term)
    return Constraint(LinForm(coeffs, constant), rel)


# ---------------------------------------------------------------------------
# Farkas certificates
# ---------------------------------------------------------------------------

CONCLUSION_NEG_GE = "negative >= 0"
CONCLUSION_ZERO_GT = "0 > 0"
CONCLUSION_EPS = "0 >= eps > 0"


@dataclass(frozen=True)
class FarkasCertificate:
    """Nonnegative multipliers combining constraints into a contradiction.

    Multipliers must be nonnegative, except on equality constraints, where
    either sign is allowed (an equality may be used in both directions).
    """

    multipliers: tuple[tuple[int, Rational], ...]
    conclusion: str


def verify_certificate(sys: ConstraintSystem,
                       cert: FarkasCertificate) -> bool:
    """Independently recheck a certificate against the system.

    Returns true iff the multiplier combination of the referenced
    constraints has zero coefficient on every variable and the resulting
    constant contradicts the declared conclusion form:

    * ``negative >= 0``: constant < 0 (no strict multiplier required);
    * ``0 > 0``: constant = 0 and some strict constraint has a positive
      multiplier;
    * ``0 >= eps > 0``: constant < 0 and some strict constraint has a
      positive multiplier.
    """
    combo = LinForm()
    strict_weight = False
    for index, mult in cert.multipliers:
        if not 0 <= index < len(sys.constraints):
            raise IndexOutOfRange(f"certificate index {index} out of range")
        c = sys.constraints[index]
        mult = rat(mult)
        if mult < 0 and c.relation != REL_EQ:
            return False
        if mult == 0:
            continue
        if c.relation == REL_GT and mult > 0:
            strict_weight = True
        combo = combo + c.form.scale(mult)
    if combo.variables():
        return False
    k = combo.constant
    if cert.conclusion == CONCLUSION_NEG_GE:
        return k < 0
    if cert.conclusion == CONCLUSION_ZERO_GT:
        return k == 0 and strict_weight
    if cert.conclusion == CONCLUSION_EPS:
        return k < 0 and strict_weight
    return False


def _make_certificate(sys: ConstraintSystem,
                      weights: Mapping[int, Rational]) -> FarkasCertificate:
    """Build (and sanity-check) a certificate from raw multipliers."""
    entries = tuple(sorted((i, w) for i, w in weights.items() if w != 0))
    combo = LinForm()
    strict_weight = False
    for i, w in entries:
        c = sys.constraints[i]
        if c.relation == REL_GT and w > 0:
            strict_weight = True
        combo = combo + c.form.scale(w)
    k = combo.constant
    if combo.variables():
        raise PolytopeError("internal: certificate combination not constant")
    if k < 0:
        conclusion = CONCLUSION_EPS if strict_weight else CONCLUSION_NEG_GE
    elif k == 0 and strict_weight:
        conclusion = CONCLUSION_ZERO_GT
    else:
        raise PolytopeError("internal: multipliers do not certify anything")
    cert = FarkasCertificate(entries, conclusion)
    assert verify_certificate(sys, cert)
    return cert


# ---------------------------------------------------------------------------
# Exact simplex (default engine)
# ---------------------------------------------------------------------------

class _Simplex:
    """Dense exact simplex tableau for  max c.z  s.t.  A z <= b,  z >= 0.

    Bland's rule everywhere (smallest eligible column; ratio ties broken by
    smallest basis column index), which guarantees termination and makes
    every witness and certificate deterministic.
    """

    def __init__(self, a_rows: Sequence[Sequence[Fraction]],
                 b: Sequence[Fraction], c: Sequence[Fraction]):
        self.m = len(a_rows)
        self.n = len(c)
        # Columns: 0..n-1 structural, n..n+m-1 slacks.
        self.rows = [list(a_rows[i]) +
                     [Fraction(1) if j == i else Fraction(0)
                      for j in range(self.m)] +
                     [b[i]]
                     for i in range(self.m)]
        self.c = list(c) + [Fraction(0)] * self.m
        self.basis = [self.n + i for i in range(self.m)]
        self.total_cols = self.n + self.m

    # -- tableau mechanics ------------------------------------------------

    def _pivot(self, row: int, col: int) -> None:
        pivot = self.rows[row][col]
        self.rows[row] = [e / pivot for e in self.rows[row]]
        for r in range(self.m):
            if r != row and self.rows[r][col]:
                f = self.rows[r][col]
                self.rows[r] = [e - f * p
                                for e, p in zip(self.rows[r], self.rows[row])]
        self.basis[row] = col

    def _reduced_costs(self, c: Sequence[Fraction]) -> list[Fraction]:
        red = list(c)
        for r in range(self.m):
            cb = c[self.basis[r]]
            if cb:
                for j in range(self.total_cols):
                    red[j] -= cb * self.rows[r][j]
        # Basic columns are exactly zero by construction; force it to avoid
        # accumulating redundant exact arithmetic.
        for col in self.basis:
            red[col] = Fraction(0)
        return red

    def _ratio_row(self, col: int) -> Optional[int]:
        best = None
        best_ratio = None
        for r in range(self.m):
            a = self.rows[r][col]
            if a > 0:
                ratio = self.rows[r][-1] / a
                if (best is None or ratio < best_ratio or
                        (ratio == best_ratio and
                         self.basis[r] < self.basis[best])):
                    best, best_ratio = r, ratio
        return best

    def _optimize(self, c: Sequence[Fraction],
                  allowed_cols: Optional[set[int]] = None) -> str:
        """Run Bland pivots to optimality.  Returns 'optimal'|'unbounded'."""
        while True:
            red = self._reduced_costs(c)
            enter = None
            for j in range(self.total_cols):
                if allowed_cols is not None and j not in allowed_cols:
                    continue
                if red[j] > 0:
                    enter = j
                    break
            if enter is None:
                return "optimal"
            row = self._ratio_row(enter)
            if row is None:
                return "unbounded"
            self._pivot(row, enter)

    # -- public driver ----------------------------------------------------

    def solve(self):
        """Returns (status, value, point, duals).

        status: 'optimal' | 'unbounded' | 'infeasible'.
        point: values of the n structural variables (optimal or, when
        unbounded, a feasible point).  duals: per-row multipliers y >= 0
        with y.A >= 0 componentwise on structural columns; on infeasibility
        they satisfy y.b < 0 (a Farkas witness for A z <= b, z >= 0).
        """
        if any(self.rows[i][-1] < 0 for i in range(self.m)):
            status = self._phase_one()
            if status == "infeasible":
                y = self._duals_for(self._phase1_cost)
                return "infeasible", None, None, y
        status = self._optimize(self.c)
        point = self._point()
        y = self._duals_for(self.c)
        value = sum((self.c[j] * v for j, v in enumerate(point)), Fraction(0))
        return status, value, point, y

    def _phase_one(self) -> str:
        # Auxiliary column x0 with coefficient -1 in every row; maximize -x0.
        x0 = self.total_cols
        for r in range(self.m):
            self.rows[r].insert(-1, Fraction(-1))
        self.c.append(Fraction(0))
        self.total_cols += 1
        self._phase1_cost = [Fraction(0)] * self.total_cols
        self._phase1_cost[x0] = Fraction(-1)
        # Make the basis feasible: enter x0 on the most negative row.
        worst = min(range(self.m), key=lambda r: (self.rows[r][-1], r))
        self._pivot(worst, x0)
        self._optimize(self._phase1_cost)
        x0_value = Fraction(0)
        if x0 in self.basis:
            row = self.basis.index(x0)
            x0_value = self.rows[row][-1]
        if x0_value > 0:
            return "infeasible"
        if x0 in self.basis:
            # Degenerate: pivot x0 out on any nonzero entry.
            row = self.basis.index(x0)
            for j in range(self.total_cols - 1):
                if j != x0 and self.rows[row][j] != 0:
                    self._pivot(row, j)
                    break
        # Excise the x0 column.
        for r in range(self.m):
            del self.rows[r][x0]
        del self.c[x0]
        self.total_cols -= 1
        self.basis = [b if b < x0 else b - 1 for b in self.basis]
        return "feasible"

    def _point(self) -> list[Fraction]:
        values = [Fraction(0)] * self.total_cols
        for r, col in enumerate(self.basis):
            values[col] = self.rows[r][-1]
        return values[: self.n]

    def _duals_for(self, c: Sequence[Fraction]) -> list[Fraction]:
        # Slack columns sit at n .. n+m-1 in both phase layouts (the
        # auxiliary column, when present, is appended after the slacks).
        red = self._reduced_costs(c)
        return [-red[self.n + i] for i in range(self.m)]


def _solve_lp(variables: Sequence[str],
              rows: Sequence[tuple[LinForm, dict[int, Fraction]]],
              objective: LinForm):
    """Maximize ``objective`` over {row form >= 0 for all rows}.

    Each row carries a provenance map {original constraint index ->
    multiplier} describing it as a nonnegative combination of the original
    system's constraints (used to translate duals back into certificates).

    Returns (status, value, assignment, farkas_weights).
    """
    var_index = {v: i for i, v in enumerate(variables)}
    n = len(variables)
    # Free variables split as x = u - v; columns 2j (plus part), 2j+1 (minus).
    a_rows = []
    b = []
    for form, _src in rows:
        # form >= 0  <=>  -coef . x <= const
        coef = [Fraction(0)] * (2 * n)
        for name, cval in form.coeffs.items():
            j = var_index[name]
            coef[2 * j] = -cval
            coef[2 * j + 1] = cval
        a_rows.append(coef)
        b.append(form.constant)
    c = [Fraction(0)] * (2 * n)
    for name, cval in objective.coeffs.items():
        j = var_index[name]
        c[2 * j] = cval
        c[2 * j + 1] = -cval
    solver = _Simplex(a_rows, b, c)
    status, value, point, duals = solver.solve()
    if status == "infeasible":
        weights: dict[int, Fraction] = {}
        for row_i, y in enumerate(duals):
            if y:
                for orig, mult in rows[row_i][1].items():
                    weights[orig] = weights.get(orig, Fraction(0)) + y * mult
        return "infeasible", None, None, weights, duals
    assignment = {v: point[2 * j] - point[2 * j + 1]
                  for v, j in var_index.items()}
    if status == "optimal":
        value = objective.evaluate(assignment)
    return status, value, assignment, None, duals


# ---------------------------------------------------------------------------
# Feasibility / bounds / implication (public operations)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Optional[dict[str, Rational]] = None
    certificate: Optional[FarkasCertificate] = None


_MARGIN = "__margin__"


def _expanded_rows(sys: ConstraintSystem, margin: Optional[str]):
    """Rows (form >= 0) with provenance, strict rows shifted by -margin."""
    rows = []
    for i, c in enumerate(sys.constraints):
        if c.relation == REL_EQ:
            rows.append((c.form, {i: Fraction(1)}))
            rows.append((c.form.scale(-1), {i: Fraction(-1)}))
        elif c.relation == REL_GT and margin is not None:
            rows.append((c.form - LinForm.var(margin), {i: Fraction(1)}))
        else:
            rows.append((c.form, {i: Fraction(1)}))
    return rows


def is_feasible(sys: ConstraintSystem,
                engine: str = "simplex") -> FeasibilityResult:
    """Decide strict-exact feasibility; always returns a checkable artifact.

    Feasible: a witness assignment satisfying every constraint (strict ones
    strictly).  Infeasible: a Farkas certificate that passes
    :func:`verify_certificate`.
    """
    if engine == "fm":
        return _fm_feasible(sys)
    if engine != "simplex":
        raise PolytopeError(f"unknown engine {engine!r}")
    has_strict = any(c.relation == REL_GT for c in sys.constraints)
    variables = list(sys.variables)
    if not has_strict:
        rows = _expanded_rows(sys, None)
        status, _value, assignment, weights, _ = _solve_lp(
            variables, rows, LinForm())
        if status == "infeasible":
            cert = _make_certificate(sys, weights)
            return FeasibilityResult(False, certificate=cert)
        assert sys.satisfied_by(assignment)
        return FeasibilityResult(True, witness=assignment)
    # Maximize the worst strict margin t, capped at 1: feasible iff max > 0.
    variables2 = variables + [_MARGIN]
    all_rows = _expanded_rows(sys, _MARGIN)
    all_rows.append((LinForm({_MARGIN: -1}, 1), {}))  # 1 - t >= 0, no source
    status, value, assignment, weights, duals = _solve_lp(
        variables2, all_rows, LinForm.var(_MARGIN))
    if status == "infeasible":
        cert = _make_certificate(sys, weights)
        return FeasibilityResult(False, certificate=cert)
    assert status == "optimal"  # capped above by 1
    if value > 0:
        witness = {v: assignment[v] for v in variables}
        assert sys.satisfied_by(witness)
        return FeasibilityResult(True, witness=witness)
    # Supremum of the margin is <= 0: strictly infeasible.  The optimal
    # duals combine to multipliers with positive total weight on strict
    # constraints (the margin column forces their sum to 1, and the cap
    # row is nonbinding hence weight 0).
    weights = {}
    for row_i, y in enumerate(duals):
        if y:
            for orig, mult in all_rows[row_i][1].items():
                weights[orig] = weights.get(orig, Fraction(0)) + y * mult
    cert = _make_certificate(sys, weights)
    return FeasibilityResult(False, certificate=cert)


MAX = "MAX"
MIN = "MIN"


@dataclass(frozen=True)
class BoundResult:
    status: str  # 'optimal' | 'unbounded' | 'infeasible'
    value: Optional[Rational] = None
    witness: Optional[dict[str, Rational]] = None
    certificate: Optional[FarkasCertificate] = None


def bound(sys: ConstraintSystem, f: LinForm, sense: str = MAX) -> BoundResult:
    """Exact optimum of ``f`` over the solution set.

    The value is the exact supremum/infimum.  When strict constraints are
    present the optimum may be unattained; the witness is then a point of
    the closure achieving the value (the solution set is dense in the
    relaxation whenever it is nonempty).
    """
    if sense not in (MAX, MIN):
        raise PolytopeError("sense must be MAX or MIN")
    feas = is_feasible(sys)
    if not feas.feasible:
        return BoundResult("infeasible", certificate=feas.certificate)
    objective = f if sense == MAX else f.scale(-1)
    rows = _expanded_rows(sys, None)  # relax strict; sup is unchanged
    status, value, assignment, _w, _d = _solve_lp(
        list(sys.variables), rows, objective)
    if status == "unbounded":
        return BoundResult("unbounded")
    assert status == "optimal"
    actual = f.evaluate(assignment)
    return BoundResult("optimal", value=actual, witness=assignment)


def implied(sys: ConstraintSystem, c: Constraint) -> bool:
    """True iff every solution of ``sys`` satisfies ``c``."""
    if c.relation == REL_EQ:
        return (implied(sys, ge(c.form)) and implied(sys, ge(c.form.scale(-1))))
    if c.relation == REL_GE:
        negation = gt(c.form.scale(-1))
    else:
        negation = ge(c.form.scale(-1))
    extra_vars = [v for v in sorted(c.form.variables())
                  if v not in sys.variables]
    test = sys.with_constraints([negation], new_variables=extra_vars)
    return not is_feasible(test).feasible


# ---------------------------------------------------------------------------
# Fourier-Motzkin engine
# ---------------------------------------------------------------------------

@dataclass
class _FMRow:
    form: LinForm
    strict: bool
    # Provenance: nonnegative combination of original constraints
    # (negative weights only on equality constraints).
    weights: dict[int, Fraction] = field(default_factory=dict)

    def normalized(self) -> "_FMRow":
        """Rescale so the alphabetically first variable has |coeff| = 1."""
        coeffs = self.form.coeffs
        if not coeffs:
            return self
        scale = abs(coeffs[min(coeffs)])
        if scale == 1:
            return self
        inv = Fraction(1) / scale
        return _FMRow(self.form.scale(inv), self.strict,
                      {k: v * inv for k, v in self.weights.items()})

    def norm_key(self):
        row = self.normalized()
        return (tuple(sorted(row.form.coeffs.items())), row.form.constant)


def _fm_rows(sys: ConstraintSystem) -> list[_FMRow]:
    rows = []
    for i, c in enumerate(sys.constraints):
        if c.relation == REL_EQ:
            rows.append(_FMRow(c.form, False, {i: Fraction(1)}))
            rows.append(_FMRow(c.form.scale(-1), False, {i: Fraction(-1)}))
        else:
            rows.append(_FMRow(c.form, c.relation == REL_GT, {i: Fraction(1)}))
    return rows


def _fm_prune(rows: list[_FMRow]) -> list[_FMRow]:
    """Drop duplicates and dominated copies (same direction, weaker).

    Rows are compared up to positive rescaling; among rows with the same
    normalized coefficient vector only the strongest survives (smallest
    normalized constant; strict beats non-strict at equal constants).
    The surviving row itself is kept unrescaled.
    """
    def strength(norm: _FMRow):
        ancestors = sum(1 for w in norm.weights.values() if w != 0)
        return (norm.form.constant, not norm.strict, ancestors)

    best: dict = {}
    order = []
    for row in rows:
        norm = row.normalized()
        key = tuple(sorted(norm.form.coeffs.items()))
        existing = best.get(key)
        if existing is None:
            best[key] = (norm, row)
            order.append(key)
            continue
        if strength(norm) < strength(existing[0]):
            best[key] = (norm, row)
    return [best[k][1] for k in order]


def _fm_contradiction(rows: Sequence[_FMRow]) -> Optional[_FMRow]:
    for row in rows:
        if row.form.is_constant():
            k = row.form.constant
            if k < 0 or (k == 0 and row.strict):
                return row
    return None


def _fm_eliminate_var(rows: list[_FMRow], var: str) -> list[_FMRow]:
    zero, pos, neg = [], [], []
    for row in rows:
        c = row.form.coeff(var)
        if c == 0:
            zero.append(row)
        elif c > 0:
            pos.append(row)
        else:
            neg.append(row)
    out = list(zero)
    for p in pos:
        cp = p.form.coeff(var)
        for q in neg:
            cq = q.form.coeff(var)  # negative
            # Multipliers (-cq) on p and cp on q cancel var exactly.
            mp, mq = -cq, cp
            form = p.form.scale(mp) + q.form.scale(mq)
            weights = dict()
            for src, w in p.weights.items():
                weights[src] = weights.get(src, Fraction(0)) + mp * w
            for src, w in q.weights.items():
                weights[src] = weights.get(src, Fraction(0)) + mq * w
            out.append(_FMRow(form, p.strict or q.strict, weights).normalized())
    return _fm_prune(out)


def eliminate(sys: ConstraintSystem, var: str) -> ConstraintSystem:
    """Project the solution set onto the remaining variables (exact).

    Strictness propagates: a combination involving a strict parent is
    strict.  Equality constraints are expanded into inequality pairs first.
    """
    if var not in sys.variables:
        raise UnknownVariable(f"variable {var!r} not declared")
    rows = _fm_prune(_fm_rows(sys))
    rows = _fm_eliminate_var(rows, var)
    remaining = [v for v in sys.variables if v != var]
    constraints = [Constraint(r.form, REL_GT if r.strict else REL_GE)
                   for r in rows]
    return ConstraintSystem(remaining, constraints)


def _fm_next_var(rows: Sequence[_FMRow], remaining: Sequence[str]) -> str:
    """Greedy elimination order: fewest pos*neg products, then by name.

    The classical min-product heuristic keeps the intermediate row count
    manageable on dense systems; the tie-break keeps runs deterministic.
    """
    best = None
    for var in sorted(remaining):
        pos = neg = 0
        for row in rows:
            c = row.form.coeff(var)
            if c > 0:
                pos += 1
            elif c < 0:
                neg += 1
        cost = pos * neg - (pos + neg)
        if best is None or cost < best[0]:
            best = (cost, var)
    return best[1]


def _fm_feasible(sys: ConstraintSystem) -> FeasibilityResult:
    """Fourier-Motzkin feasibility with witness back-substitution."""
    rows = _fm_prune(_fm_rows(sys))
    stages = []  # (var, rows-before-elimination)
    contra = _fm_contradiction(rows)
    order = list(sys.variables)
    while contra is None and order:
        var = _fm_next_var(rows, order)
        order.remove(var)
        stages.append((var, rows))
        rows = _fm_eliminate_var(rows, var)
        contra = _fm_contradiction(rows)
    if contra is not None:
        cert = _make_certificate(sys, contra.weights)
        return FeasibilityResult(False, certificate=cert)
    # Back-substitute a witness, last-eliminated variable first.  At each
    # stage every other variable appearing in the stage rows has already
    # been assigned, so the rows reduce to an interval for `var`; the
    # interval is nonempty because the projection was feasible.
    assignment: dict[str, Rational] = {}
    for var, stage_rows in reversed(stages):
        lowers = []   # (value, strict)
        uppers = []
        for row in stage_rows:
            c = row.form.coeff(var)
            if c == 0:
                continue
            rest = row.form - LinForm.var(var, c)
            limit = -rest.evaluate(assignment) / c
            if c > 0:   # c*var + rest >= 0  ->  var >= limit
                lowers.append((limit, row.strict))
            else:       # var <= limit
                uppers.append((limit, row.strict))
        lo = max((v for v, _s in lowers), default=None)
        hi = min((v for v, _s in uppers), default=None)
        if lo is None and hi is None:
            assignment[var] = Fraction(0)
        elif lo is None:
            assignment[var] = hi - 1
        elif hi is None:
            assignment[var] = lo + 1
        elif lo < hi:
            assignment[var] = (lo + hi) / 2
        else:
            assignment[var] = lo  # lo == hi, necessarily non-strict ends
    for v in sys.variables:
        assignment.setdefault(v, Fraction(0))
    assert sys.satisfied_by(assignment), \
        "internal: FM witness reconstruction failed"
    return FeasibilityResult(True, witness=assignment)


def fm_bound(sys: ConstraintSystem, f: LinForm, sense: str = MAX) -> BoundResult:
    """Optimum of ``f`` via pure Fourier-Motzkin (test oracle for bound())."""
    feas = _fm_feasible(sys)
    if not feas.feasible:
        return BoundResult("infeasible", certificate=feas.certificate)
    objective_var = "__objective__"
    augmented = sys.with_constraints(
        [eq(f - LinForm.var(objective_var))], new_variables=[objective_var])
    rows = _fm_prune(_fm_rows(augmented))
    order = list(sys.variables)
    while order:
        var = _fm_next_var(rows, order)
        order.remove(var)
        rows = _fm_eliminate_var(rows, var)
    best = None
    for row in rows:
        c = row.form.coeff(objective_var)
        if c == 0:
            continue
        limit = -row.form.constant / c
        if sense == MAX and c < 0:  # c*z + k >= 0 with c<0: z <= limit
            if best is None or limit < best:
                best = limit
        elif sense == MIN and c > 0:
            if best is None or limit > best:
                best = limit
    if best is None:
        return BoundResult("unbounded")
    return BoundResult("optimal", value=best)
