"""Towers of point blow-ups above the minimal resolution.

Tracks, for every divisor in sight, its multiplicity ``m`` in the pullback
of a fixed effective divisor and its log-discrepancy contribution ``a``
over the surface.  The exceptional curves of the minimal resolution are
crepant (``a = 0``); a blow-up at a point creates a curve with

* ``m = sum of the branch multiplicities through the point`` (weighted by
  each curve's local multiplicity there), and
* ``a = 1 + sum of the a-values of the curves through the point``.

The log canonical threshold of the pair is then ``min (a+1)/m`` over all
divisors with ``m > 0`` once the total transform has simple normal
crossings.  Tangency and contact data is fixture input: which curves pass
through which special points is geometric information that cannot be
recovered from intersection numbers alone, so the engine validates its
arithmetic consistency and otherwise takes it on trust.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from .exactlin import Rational, rat_str
from .surface import (AuxCurve, DivisorClass, DeclaredPoint, SurfaceConfig,
                      UnknownCurve, make_divisor)


class BlowupError(Exception):
    pass


class InconsistentTangency(BlowupError):
    pass


class UnknownPoint(BlowupError):
    pass


class BudgetExceeded(BlowupError):
    pass


class ZeroDivisor(BlowupError):
    pass


class NoCandidates(BlowupError):
    pass


@dataclass(frozen=True)
class PointSpec:
    """A point where several tracked curves meet.

    ``contact`` maps unordered curve pairs to their local intersection
    multiplicity (1 = transversal).  ``mult`` gives a curve's local
    multiplicity at the point (2 = an ordinary cusp; higher is out of
    scope).  Both default to 1.
    """

    curves: tuple[str, ...]
    contact: tuple[tuple[frozenset, int], ...] = ()
    mult: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if not self.curves:
            raise InconsistentTangency("a point needs at least one curve")
        for pair, order in self.contact:
            if order < 1:
                raise InconsistentTangency("contact orders are >= 1")
            if not pair <= set(self.curves):
                raise InconsistentTangency(
                    "contact declared for curves not at the point")
        for name, m in self.mult:
            if name not in self.curves:
                raise InconsistentTangency(
                    "multiplicity declared for a curve not at the point")
            if m < 1:
                raise InconsistentTangency("multiplicities are >= 1")

    @classmethod
    def make(cls, curves, contact=None, mult=None) -> "PointSpec":
        contact_items = tuple(sorted(
            ((frozenset(k), v) for k, v in (contact or {}).items()),
            key=lambda it: sorted(it[0])))
        mult_items = tuple(sorted((mult or {}).items()))
        return cls(tuple(sorted(curves)), contact_items, mult_items)

    def contact_of(self, c1: str, c2: str) -> int:
        pair = frozenset({c1, c2})
        for p, v in self.contact:
            if p == pair:
                return v
        return 1

    def mult_of(self, name: str) -> int:
        for n, v in self.mult:
            if n == name:
                return v
        return 1

    def is_snc(self) -> bool:
        if len(self.curves) > 2:
            return False
        if any(v > 1 for _p, v in self.contact):
            return False
        if any(v > 1 for _n, v in self.mult):
            return False
        return True

    def sort_key(self):
        return self.curves


@dataclass(frozen=True)
class CurveInfo:
    m: Rational
    a: Rational
    exceptional: bool


@dataclass
class BlowupState:
    curves: dict[str, CurveInfo]
    points: list[PointSpec]
    history: list[tuple[PointSpec, str]] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    def copy(self) -> "BlowupState":
        return BlowupState(dict(self.curves), list(self.points),
                           list(self.history), list(self.trace))


@dataclass(frozen=True)
class LctResult:
    value: Rational
    witness: str
    resolution_depth: int


def _declared_to_spec(p: DeclaredPoint) -> PointSpec:
    return PointSpec.make(
        p.curves,
        contact={(c1, c2): v for c1, c2, v in p.contacts},
        mult=dict(p.mults))


def init_state(cfg: SurfaceConfig, divisor: DivisorClass,
               points: Optional[list[PointSpec]] = None) -> BlowupState:
    """Initial state on the minimal resolution.

    Strict components carry their weights, exceptional curves carry the
    divisor's pullback coefficients, and all a-values are 0.  Incidences
    are the declared points (defaulting to the config's) plus one
    transversal point for every unit of intersection not consumed by a
    declaration.
    """
    if points is None:
        points = [_declared_to_spec(p) for p in cfg.points]
    weights = dict(divisor.strict_part)
    curves: dict[str, CurveInfo] = {}
    for name, w in weights.items():
        if not cfg.has_curve(name):
            raise UnknownCurve(name)
        curves[name] = CurveInfo(w, Fraction(0), False)
    for label, coeff in zip(cfg.labels, divisor.exceptional_part):
        curves[label] = CurveInfo(coeff, Fraction(0), True)

    # Budget of pairwise intersection units between tracked curves.
    units: dict[frozenset, Fraction] = {}
    offset = 0
    for block in cfg.singularities:
        from .dynkin import edge_index_pairs
        for i, j in edge_index_pairs(block.type):
            units[frozenset({block.labels[i], block.labels[j]})] = Fraction(1)
    for name in weights:
        curve = cfg.curve(name)
        for label, p in zip(cfg.labels, curve.profile):
            if p:
                units[frozenset({name, label})] = p
    for pair, value in cfg.strict_intersections.items():
        if all(n in weights for n in pair) and value:
            units[pair] = value

    kept_points: list[PointSpec] = []
    for spec in points:
        for name in spec.curves:
            if name not in curves and not (cfg.has_curve(name)
                                           or name in cfg.labels):
                raise UnknownCurve(name)
        present = [n for n in spec.curves if n in curves]
        if len(present) < 2 and all(spec.mult_of(n) == 1 for n in present):
            continue
        restricted = PointSpec.make(
            present,
            contact={(c1, c2): spec.contact_of(c1, c2)
                     for i, c1 in enumerate(present)
                     for c2 in present[i + 1:]
                     if spec.contact_of(c1, c2) > 1},
            mult={n: spec.mult_of(n) for n in present
                  if spec.mult_of(n) > 1})
        # Consume intersection units for every pair at this point.
        for i, c1 in enumerate(restricted.curves):
            for c2 in restricted.curves[i + 1:]:
                pair = frozenset({c1, c2})
                need = (restricted.contact_of(c1, c2) *
                        restricted.mult_of(c1) * restricted.mult_of(c2))
                have = units.get(pair, Fraction(0))
                if have < need:
                    raise InconsistentTangency(
                        f"point {sorted(restricted.curves)} needs {need} "
                        f"intersection unit(s) of {sorted(pair)}, only "
                        f"{rat_str(have)} available")
                units[pair] = have - need
        kept_points.append(restricted)

    # Remaining units become generic transversal double points.
    for pair in sorted(units, key=sorted):
        value = units[pair]
        if value < 0 or value != int(value):
            raise InconsistentTangency(
                f"non-integral leftover intersection between {sorted(pair)}")
        for _ in range(int(value)):
            kept_points.append(PointSpec.make(tuple(pair)))

    kept_points.sort(key=PointSpec.sort_key)
    return BlowupState(curves, kept_points)


def blowup(state: BlowupState, p: PointSpec) -> BlowupState:
    """Blow up one point; returns the new state (input unchanged)."""
    if p not in state.points:
        raise UnknownPoint(f"point {sorted(p.curves)} is not a current "
                           "incidence")
    for _name, m in p.mult:
        if m > 2:
            raise BlowupError("local multiplicities above 2 are out of scope")
    new = state.copy()
    new.points.remove(p)
    fname = f"F_{len(state.history) + 1}"
    m_f = sum((state.curves[c].m * p.mult_of(c) for c in p.curves),
              Fraction(0))
    a_f = 1 + sum((state.curves[c].a for c in p.curves), Fraction(0))
    new.curves[fname] = CurveInfo(m_f, a_f, True)

    # Partition the curves at p into tangency classes (union by contact>=2);
    # each class lands on a single point of the new curve.
    classes: list[set[str]] = []
    for c in p.curves:
        merged = {c}
        rest = []
        for cl in classes:
            if any(p.contact_of(c, other) > 1 for other in cl):
                merged |= cl
            else:
                rest.append(cl)
        classes = rest + [merged]
    for cl in sorted(classes, key=sorted):
        members = sorted(cl)
        contact = {}
        mult = {}
        for i, c1 in enumerate(members):
            for c2 in members[i + 1:]:
                order = p.contact_of(c1, c2)
                if order > 2:
                    contact[(c1, c2)] = order - 1
        for c in members:
            if p.mult_of(c) > 1:
                # An ordinary cusp: the strict transform is smooth and
                # tangent to the new exceptional curve.
                contact[(c, fname)] = 2
        new.points.append(PointSpec.make(members + [fname], contact, mult))
    new.points.sort(key=PointSpec.sort_key)
    new.history.append((p, fname))
    new.trace.append(
        "step %d: point {%s} -> %s m=%s a=%s" % (
            len(new.history), ",".join(sorted(p.curves)), fname,
            rat_str(m_f), rat_str(a_f)))
    return new


def _point_weight(state: BlowupState, p: PointSpec) -> Rational:
    return sum((state.curves[c].m * p.mult_of(c) for c in p.curves),
               Fraction(0))


def resolve_to_snc(state: BlowupState, budget: int = 32) -> BlowupState:
    """Blow up until every incidence is a transversal double point.

    Always picks the worst remaining point (largest total multiplicity,
    ties by lexicographic curve names), for a deterministic trace.  The
    budget guards against malformed tangency fixtures; every catalog case
    resolves in a handful of steps.
    """
    if budget < 0:
        raise BudgetExceeded("negative budget")
    steps = 0
    while True:
        bad = [p for p in state.points if not p.is_snc()]
        if not bad:
            return state
        if steps >= budget:
            raise BudgetExceeded(
                f"not SNC after {budget} blow-ups; tangency data is "
                "likely wrong")
        worst = min(bad, key=lambda p: (-_point_weight(state, p),
                                        p.sort_key()))
        state = blowup(state, worst)
        steps += 1


def lct_pair(cfg: SurfaceConfig, divisor: DivisorClass,
             points: Optional[list[PointSpec]] = None,
             budget: int = 32) -> LctResult:
    """lct of the pair: min (a+1)/m over the SNC resolution."""
    state = resolve_to_snc(init_state(cfg, divisor, points), budget)
    best = None
    witness = None
    for name in sorted(state.curves):
        info = state.curves[name]
        if info.m > 0:
            value = (info.a + 1) / info.m
            if best is None or value < best:
                best, witness = value, name
    if best is None:
        raise ZeroDivisor("the divisor has no component with positive "
                          "multiplicity")
    return LctResult(best, witness, len(state.history))


def candidate_divisors(cfg: SurfaceConfig):
    """Declared upper-bound candidates: for every relation
    ``sum coef_i L_i in |-nK|`` the divisor ``sum (coef_i/n) L_i``."""
    seen = set()
    out = []
    for curve in cfg.aux_curves:
        for rel in curve.relations:
            if rel in seen:
                continue
            seen.add(rel)
            n = rel.antican_multiple
            weights: dict[str, Fraction] = {}
            for coef, name in rel.terms:
                weights[name] = (weights.get(name, Fraction(0)) +
                                 Fraction(coef, n))
            lhs = "+".join(nm if c == 1 else f"{c}*{nm}"
                           for c, nm in rel.terms)
            if len(rel.terms) > 1:
                lhs = f"({lhs})"
            label = lhs if n == 1 else f"{lhs}/{n}"
            out.append((label, weights))
    return sorted(out)


def global_lct_upper(cfg: SurfaceConfig,
                     budget: int = 32) -> tuple[Rational, str]:
    """min over declared candidates of lct(X, candidate); returns the
    value and the achieving candidate's label (first on ties)."""
    candidates = candidate_divisors(cfg)
    if not candidates:
        raise NoCandidates(f"surface {cfg.name} declares no candidate "
                           "divisors")
    best = None
    best_label = None
    for label, weights in candidates:
        divisor = make_divisor(cfg, weights)
        result = lct_pair(cfg, divisor, budget=budget)
        if best is None or result.value < best:
            best, best_label = result.value, label
    return best, best_label
