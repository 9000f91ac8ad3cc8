"""Machine replay of the per-surface lower-bound proofs.

Each lower bound ``lct(X) >= t`` is established by contradiction: assuming
an effective anticanonical divisor D with (X, t*D) not log canonical
forces, at every candidate point of the resolution, a set of strict
adjunction inequalities on the coefficient vector.  This module generates
those case systems, certifies every one infeasible (with an independently
verifiable Farkas certificate), and extends the systems along blow-up
towers for the cases that climb infinitely near points.

A lemma is encoded as a structured-text script::

    [lemma] surface=<id> target=<p/q> [override=<p/q>]
    [assume] curve=<name> not-in-support
    [assume] disjunction: <ineq> | <ineq> | ...
    [case] auto
    [case] at=<E_i>[,<E_j>] [tag=<id>] [extra=<ineq>,...] [axiom=<name>]
    [axiom] <name>
    [chain] center=<E_i,E_j> depth=<K> claim(k)=<linform>><expr-in-k>
    [terminal] [at=<E_i>,<E_j>] weights=<curve>=<p/q>,...

Inequalities inside scripts are written without spaces (``2*a1-a2>6/5``).
``override`` is a looser replacement for 1/t used by some printed
arguments; when present every generated case is certified at both
constants.  A ``[chain]`` discharges the case at its center pair by an
inductive tower instead of direct infeasibility; the claim is the printed
per-step lower bound, evaluated at each integer k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from . import surface as surf
from .exactlin import Rational, rat, rat_str
from .linparse import eval_k_expression, parse_inequality, parse_linform
from .polytope import (Constraint, ConstraintSystem, FarkasCertificate,
                       LinForm, ge, gt, implied, is_feasible,
                       verify_certificate)
from .surface import SurfaceConfig


class ScriptError(Exception):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DepthExceeded(ScriptError):
    pass


# ---------------------------------------------------------------------------
# Script model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseSpec:
    """One explicit proof case: a location plus extra derived inequalities."""

    location: tuple[str, ...]
    tag: str = ""
    extras: tuple[Constraint, ...] = ()
    axiom: Optional[str] = None

    @property
    def name(self) -> str:
        base = "&".join(self.location)
        return f"{base}#{self.tag}" if self.tag else base


@dataclass(frozen=True)
class ChainSpec:
    """A tower of blow-ups starting at the intersection of two exceptional
    curves, climbing along the second (the spine)."""

    center: tuple[str, str]
    depth_max: int
    claim_lhs: LinForm
    claim_rhs: str  # rational expression in the symbol k

    def claim_at(self, k: int) -> Constraint:
        """The claim instantiated at integer k: lhs > rhs(k)."""
        return gt(self.claim_lhs - LinForm.const(eval_k_expression(
            self.claim_rhs, k)))


@dataclass(frozen=True)
class TerminalSpec:
    """An explicit log-canonical decomposition check (instead of an
    infeasibility case): the named combination must be numerically
    anticanonical and have pair-lct at least the target.  When a location
    is declared the terminal discharges the adjunction case there (the
    surviving case whose extremal divisor this is)."""

    weights: tuple[tuple[str, Rational], ...]
    location: tuple[str, ...] = ()


@dataclass(frozen=True)
class LemmaScript:
    name: str
    surface: str
    target_t: Rational
    override: Optional[Rational] = None
    not_in_support: tuple[str, ...] = ()
    disjunction_groups: tuple[tuple[Constraint, ...], ...] = ()
    auto_cases: bool = False
    explicit_cases: tuple[CaseSpec, ...] = ()
    chains: tuple[ChainSpec, ...] = ()
    terminals: tuple[TerminalSpec, ...] = ()
    axioms: tuple[str, ...] = ()


def _kv(token: str, line_no: int) -> tuple[str, str]:
    if "=" not in token:
        raise ScriptError(f"expected key=value, got {token!r}", line_no)
    key, value = token.split("=", 1)
    return key, value


def parse_lemma_script(source: str, name_hint: str = "<script>") -> LemmaScript:
    surface_id = None
    target = None
    override = None
    not_in_support: list[str] = []
    groups: list[tuple[Constraint, ...]] = []
    auto_cases = False
    cases: list[CaseSpec] = []
    chains: list[ChainSpec] = []
    terminals: list[TerminalSpec] = []
    axioms: list[str] = []

    for line_no, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        section, rest = tokens[0], tokens[1:]
        if section == "[lemma]":
            fields = dict(_kv(t, line_no) for t in rest)
            if "surface" not in fields or "target" not in fields:
                raise ScriptError("[lemma] needs surface= and target=",
                                  line_no)
            surface_id = fields["surface"]
            target = rat(fields["target"])
            if "override" in fields:
                override = rat(fields["override"])
        elif section == "[assume]":
            body = line[len("[assume]"):].strip()
            if body.startswith("disjunction:"):
                alts = [parse_inequality(alt.strip())
                        for alt in body[len("disjunction:"):].split("|")]
                if len(alts) < 2:
                    raise ScriptError("disjunction needs >= 2 alternatives",
                                      line_no)
                groups.append(tuple(alts))
            else:
                fields = dict(_kv(t, line_no) for t in rest if "=" in t)
                flags = {t for t in rest if "=" not in t}
                if "curve" not in fields or flags != {"not-in-support"}:
                    raise ScriptError(
                        "[assume] takes curve=<name> not-in-support or "
                        "disjunction: ...", line_no)
                not_in_support.append(fields["curve"])
        elif section == "[case]":
            if rest == ["auto"]:
                auto_cases = True
                continue
            fields = dict(_kv(t, line_no) for t in rest)
            if "at" not in fields:
                raise ScriptError("[case] needs at= (or the single word "
                                  "auto)", line_no)
            location = tuple(x.strip() for x in fields["at"].split(","))
            extras = tuple(parse_inequality(e)
                           for e in fields.get("extra", "").split(",") if e)
            cases.append(CaseSpec(location, fields.get("tag", ""),
                                  extras, fields.get("axiom")))
        elif section == "[axiom]":
            if not rest:
                raise ScriptError("[axiom] needs a name", line_no)
            axioms.append(" ".join(rest))
        elif section == "[chain]":
            fields = dict(_kv(t, line_no) for t in rest)
            for needed in ("center", "depth", "claim(k)"):
                if needed not in fields:
                    raise ScriptError(f"[chain] needs {needed}=", line_no)
            center = tuple(x.strip() for x in fields["center"].split(","))
            if len(center) != 2:
                raise ScriptError("[chain] center takes two curves", line_no)
            claim = fields["claim(k)"]
            lhs_text, sep, rhs_text = claim.partition(">")
            if not sep or rhs_text.startswith("="):
                raise ScriptError(
                    f"claim must be <linform>><expr>, got {claim!r}", line_no)
            chains.append(ChainSpec(center, int(fields["depth"]),
                                    parse_linform(lhs_text), rhs_text))
        elif section == "[terminal]":
            fields = dict(_kv(t, line_no) for t in rest)
            if "weights" not in fields:
                raise ScriptError("[terminal] needs weights=", line_no)
            weights = []
            for item in fields["weights"].split(","):
                if "=" not in item:
                    raise ScriptError("weights use curve=p/q", line_no)
                cname, v = item.split("=", 1)
                weights.append((cname.strip(), rat(v)))
            location = tuple(x.strip() for x in fields["at"].split(",")) \
                if "at" in fields else ()
            terminals.append(TerminalSpec(tuple(weights), location))
        else:
            raise ScriptError(f"unknown section {section!r}", line_no)

    if surface_id is None or target is None:
        raise ScriptError("missing [lemma] line")
    if not (0 < target <= 1):
        raise ScriptError(f"target {rat_str(target)} outside (0, 1]")
    return LemmaScript(
        name=name_hint, surface=surface_id, target_t=target,
        override=override, not_in_support=tuple(not_in_support),
        disjunction_groups=tuple(groups), auto_cases=auto_cases,
        explicit_cases=tuple(cases), chains=tuple(chains),
        terminals=tuple(terminals), axioms=tuple(axioms))


# ---------------------------------------------------------------------------
# Case generation
# ---------------------------------------------------------------------------

def _coeff_form(cfg: SurfaceConfig, label: str) -> LinForm:
    """The divisor coefficient on an exceptional curve, as a linear form
    (the block scale times the curve's constraint variable)."""
    i = cfg.label_index(label)
    return LinForm({cfg.var_names[i]: cfg.scales[i]})


def _adjacent_pairs(cfg: SurfaceConfig) -> list[tuple[str, str]]:
    from .dynkin import edge_index_pairs
    pairs = []
    offset = 0
    for block in cfg.singularities:
        for i, j in edge_index_pairs(block.type):
            pairs.append((block.labels[i], block.labels[j]))
        offset += len(block.labels)
    return pairs


def adjunction_cases(cfg: SurfaceConfig, t: Rational,
                     override: Optional[Rational] = None
                     ) -> list[tuple[tuple[str, ...], tuple[Constraint, ...]]]:
    """Adjunction case systems at threshold t (or a looser override).

    One case per candidate non-log-canonical point on the exceptional
    locus: the interior of each curve E gives { D~.E > 1/t }; each
    intersection E∩E' gives { D~.E > 1/t - coeff(E'), D~.E' > 1/t -
    coeff(E) } (restricting the pair to either curve and discarding the
    other's coefficient, which is at most 1 at threshold).
    """
    t = rat(t)
    if not (0 < t <= 1):
        raise ScriptError(f"threshold {rat_str(t)} outside (0, 1]")
    inv = rat(override) if override is not None else 1 / t
    rows = surf.exceptional_rows(cfg)
    out: list[tuple[tuple[str, ...], tuple[Constraint, ...]]] = []
    for i, label in enumerate(cfg.labels):
        out.append(((label,), (gt(rows[i].shift(-inv)),)))
    for la, lb in _adjacent_pairs(cfg):
        ia, ib = cfg.label_index(la), cfg.label_index(lb)
        out.append(((la, lb), (
            gt(rows[ia] + _coeff_form(cfg, lb) - LinForm.const(inv)),
            gt(rows[ib] + _coeff_form(cfg, la) - LinForm.const(inv)))))
    return out


# ---------------------------------------------------------------------------
# Case checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseResult:
    name: str
    status: str  # "infeasible" | "gap" | "axiom"
    constant: Optional[Rational] = None
    certificates: tuple[FarkasCertificate, ...] = ()
    witness: Optional[dict] = None
    axiom: Optional[str] = None
    system_dump: Optional[str] = None

    @property
    def discharged(self) -> bool:
        return self.status in ("infeasible", "axiom")


def check_case(base: ConstraintSystem,
               case_constraints: Sequence[Constraint],
               disjunct_combos: Sequence[Sequence[Constraint]] = ((),),
               name: str = "case",
               constant: Optional[Rational] = None,
               collect_system: bool = False) -> CaseResult:
    """Certify base + case infeasible under every disjunct combination.

    Any feasible combination is a proof gap and is reported with the
    solver's witness point (gaps are data, not errors).
    """
    new_vars = sorted(
        {v for c in list(case_constraints)
         for v in c.form.variables()} - set(base.variables))
    certs = []
    dump = None
    for combo in disjunct_combos:
        combo_vars = sorted(
            {v for c in combo for v in c.form.variables()}
            - set(base.variables) - set(new_vars))
        system = base.with_constraints(
            list(combo) + list(case_constraints),
            new_variables=new_vars + combo_vars)
        if collect_system and dump is None:
            dump = system.dump()
        result = is_feasible(system)
        if result.feasible:
            return CaseResult(name, "gap", constant=constant,
                              witness=result.witness, system_dump=dump)
        assert verify_certificate(system, result.certificate)
        certs.append(result.certificate)
    return CaseResult(name, "infeasible", constant=constant,
                      certificates=tuple(certs), system_dump=dump)


# ---------------------------------------------------------------------------
# Inductive chains
# ---------------------------------------------------------------------------

def _m_vars(k: int) -> list[str]:
    return [f"m{j}" for j in range(1, k + 1)]


def _m_sum(k: int) -> LinForm:
    return LinForm({v: 1 for v in _m_vars(k)})


def extend_chain(cfg: SurfaceConfig, base: ConstraintSystem,
                 spec: ChainSpec, k: int) -> ConstraintSystem:
    """The constraint system after k tower blow-ups at the chain center.

    Adds fresh multiplicity variables m_1..m_k with m_1 >= ... >= m_k >= 0,
    subtracts m_1 from the first center curve's row and m_1+...+m_k from
    the spine's row (the first blow-up separates the tower from the first
    curve; every later center lies on the spine's strict transform).
    """
    if k == 0:
        return base
    if k < 0 or k > spec.depth_max:
        raise DepthExceeded(f"k={k} outside 1..{spec.depth_max}")
    first, spine = spec.center
    rows = surf.exceptional_rows(cfg)
    first_form = rows[cfg.label_index(first)]
    spine_form = rows[cfg.label_index(spine)]
    mvars = _m_vars(k)
    replaced = []
    for c in base.constraints:
        if c.relation == ">=" and c.form == first_form:
            replaced.append(ge(first_form - LinForm.var("m1")))
        elif c.relation == ">=" and c.form == spine_form:
            replaced.append(ge(spine_form - _m_sum(k)))
        else:
            replaced.append(c)
    extra = [ge(LinForm.var(mvars[j]) - LinForm.var(mvars[j + 1]))
             for j in range(k - 1)]
    extra.append(ge(LinForm.var(mvars[-1])))
    return ConstraintSystem(list(base.variables) + mvars, replaced + extra)


@dataclass(frozen=True)
class ChainStep:
    k: int
    side_ok: bool
    crossing: CaseResult      # Q_k on the previous tower curve
    interior: CaseResult      # Q_k away from both
    spine: CaseResult         # claim(k+1) implied by the surviving branch

    @property
    def passed(self) -> bool:
        return (self.side_ok and self.crossing.discharged
                and self.interior.discharged and self.spine.discharged)


@dataclass(frozen=True)
class ChainOutcome:
    center: tuple[str, str]
    depth: int
    constant: Rational
    base_claim_ok: bool       # claim(1) from the center's base case
    steps: tuple[ChainStep, ...]
    monotone_ok: bool         # bound(MAX m_k) non-increasing in k

    @property
    def passed(self) -> bool:
        return (self.base_claim_ok and self.monotone_ok
                and all(s.passed for s in self.steps))


def check_inductive_chain(cfg: SurfaceConfig, base: ConstraintSystem,
                          spec: ChainSpec, target: Rational,
                          inv: Rational, K: int) -> ChainOutcome:
    """Verify the tower at the chain center to depth K.

    For each k = 1..K, with the printed claim at index k assumed (the
    inductive hypothesis, established by the base case for k = 1 and by
    the surviving branch of step k-1 otherwise):

    * the side condition target*(coef of the k-th tower curve) - k <= 1 is
      implied (so dropping that curve's coefficient in the sub-cases is
      legitimate);
    * the crossing case (Q_k on the previous curve's strict transform) and
      the interior case are infeasible;
    * the surviving spine case implies the claim at index k+1.
    """
    from .polytope import MAX, bound
    if K > spec.depth_max:
        raise DepthExceeded(f"requested depth {K} > {spec.depth_max}")
    target = rat(target)
    inv = rat(inv)
    first, spine = spec.center
    rows = surf.exceptional_rows(cfg)
    first_form = rows[cfg.label_index(first)]
    spine_form = rows[cfg.label_index(spine)]
    first_coef = _coeff_form(cfg, first)
    spine_coef = _coeff_form(cfg, spine)

    # claim(1) comes out of the adjunction case at the center intersection.
    base_case = base.with_constraints([
        gt(first_form + spine_coef - LinForm.const(inv)),
        gt(spine_form + first_coef - LinForm.const(inv))])
    base_claim_ok = implied(base_case, spec.claim_at(1))

    steps = []
    prev_max_m = None
    monotone_ok = True
    for k in range(1, K + 1):
        sk = extend_chain(cfg, base, spec, k).with_constraints(
            [spec.claim_at(k)])
        m_k = LinForm.var(f"m{k}")
        cur_coef = first_coef + spine_coef.scale(k) + _m_sum(k)
        # Side condition: target * cur_coef - k <= 1.
        side_ok = implied(
            sk, ge(LinForm.const(k + 1) - cur_coef.scale(target)))
        # Multiplicities are non-increasing along the tower.
        max_m = bound(sk, m_k, MAX)
        if max_m.status == "optimal":
            if prev_max_m is not None and max_m.value > prev_max_m:
                monotone_ok = False
            prev_max_m = max_m.value
        # Case: Q_k on the previous curve's strict transform.
        if k == 1:
            prev_row = first_form - LinForm.var("m1")
            prev_coef = first_coef
        else:
            prev_row = LinForm.var(f"m{k - 1}") - m_k
            prev_coef = first_coef + spine_coef.scale(k - 1) + _m_sum(k - 1)
        crossing = check_case(sk, [
            gt(prev_row + cur_coef - LinForm.const(inv * (k + 1))),
            gt(m_k + prev_coef - LinForm.const(inv * k))],
            name=f"k={k} crossing", constant=inv)
        # Case: Q_k away from both curves.
        interior = check_case(sk, [gt(m_k - LinForm.const(inv))],
                              name=f"k={k} interior", constant=inv)
        # Surviving case: Q_k on the spine; it must force the next claim.
        spine_row_k = spine_form - _m_sum(k)
        surviving = sk.with_constraints([
            gt(spine_row_k + cur_coef - LinForm.const(inv * (k + 1))),
            gt(m_k + spine_coef - LinForm.const(inv))])
        claim_next_ok = implied(surviving, spec.claim_at(k + 1))
        spine_res = CaseResult(f"k={k} spine",
                               "infeasible" if claim_next_ok else "gap",
                               constant=inv)
        steps.append(ChainStep(k, side_ok, crossing, interior, spine_res))
    return ChainOutcome(spec.center, K, inv, base_claim_ok,
                        tuple(steps), monotone_ok)


# ---------------------------------------------------------------------------
# Terminal decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TerminalResult:
    label: str
    decomposition_ok: bool
    lct_value: Optional[Rational]
    lct_witness: Optional[str]
    passed: bool


def check_terminal(cfg: SurfaceConfig, spec: TerminalSpec,
                   target: Rational) -> TerminalResult:
    """The explicit-divisor escape hatch: the declared combination must be
    numerically anticanonical and log canonical at the target threshold."""
    from .blowup import lct_pair
    from .exactlin import QVector
    from .surface import decompose_anticanonical, make_divisor
    names = [n for n, _w in spec.weights]
    want = QVector([w for _n, w in spec.weights])
    got = decompose_anticanonical(cfg, names)
    decomposition_ok = got == want
    label = "+".join(f"{rat_str(w)}*{n}" for n, w in spec.weights)
    result = lct_pair(cfg, make_divisor(cfg, dict(spec.weights)))
    passed = decomposition_ok and result.value >= rat(target)
    return TerminalResult(label, decomposition_ok, result.value,
                          result.witness, passed)


# ---------------------------------------------------------------------------
# Replay
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    script: str
    surface: str
    target: Rational
    override: Optional[Rational]
    cases: list[CaseResult] = field(default_factory=list)
    chains: list[ChainOutcome] = field(default_factory=list)
    terminals: list[TerminalResult] = field(default_factory=list)
    axioms: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (all(c.discharged for c in self.cases)
                and all(ch.passed for ch in self.chains)
                and all(t.passed for t in self.terminals))

    def lines(self) -> list[str]:
        out = [f"lemma {self.script}: surface {self.surface} "
               f"target {rat_str(self.target)}"
               + (f" override {rat_str(self.override)}"
                  if self.override is not None else "")]
        for c in self.cases:
            detail = ""
            if c.status == "infeasible":
                detail = f" ({len(c.certificates)} certificate(s))"
            elif c.status == "gap":
                witness = " ".join(
                    f"{k}={rat_str(v)}" for k, v in sorted(c.witness.items()))
                detail = f" witness: {witness}"
            elif c.status == "axiom":
                detail = f" [{c.axiom}]"
            constant = (f" at {rat_str(c.constant)}"
                        if c.constant is not None else "")
            out.append(f"  case {c.name}{constant}: {c.status}{detail}")
        for ch in self.chains:
            status = "verified" if ch.passed else "FAILED"
            out.append(f"  chain {','.join(ch.center)} at "
                       f"{rat_str(ch.constant)}: depth {ch.depth} {status}")
            if not ch.base_claim_ok:
                out.append("    base claim not implied")
            for s in ch.steps:
                if not s.passed:
                    out.append(
                        f"    k={s.k}: side={'ok' if s.side_ok else 'FAIL'}"
                        f" crossing={s.crossing.status}"
                        f" interior={s.interior.status}"
                        f" claim={s.spine.status}")
        for t in self.terminals:
            status = "log canonical" if t.passed else "FAILED"
            out.append(f"  terminal {t.label}: {status} "
                       f"(lct {rat_str(t.lct_value)} at {t.lct_witness})")
        for a in self.axioms:
            out.append(f"  axiom: {a}")
        out.append(f"  result: {'PASS' if self.passed else 'FAIL'}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines())


def _base_system(cfg: SurfaceConfig,
                 script: LemmaScript) -> ConstraintSystem:
    base = surf.nonneg_constraints(cfg)
    extra = []
    existing = set(base.constraints)
    for name in script.not_in_support:
        row = ge(surf.curve_row(cfg, cfg.curve(name)))
        if row not in existing:
            extra.append(row)
            existing.add(row)
    return base.with_constraints(extra)


def replay_lemma(script: LemmaScript,
                 cfg: Optional[SurfaceConfig] = None,
                 chain_depth: Optional[int] = None,
                 collect_systems: bool = False) -> VerificationReport:
    """Run every proof obligation of one lemma script."""
    if cfg is None:
        from .fixtures import load_surface_fixture
        cfg = load_surface_fixture(script.surface)
    base = _base_system(cfg, script)
    combos = list(product(*script.disjunction_groups)) or [()]
    inv_t = 1 / script.target_t
    constants = [script.override, inv_t] if script.override is not None \
        else [inv_t]
    chain_by_center = {frozenset(ch.center): ch for ch in script.chains}
    terminal_locations = {frozenset(t.location)
                          for t in script.terminals if t.location}
    explicit_by_loc: dict[frozenset, list[CaseSpec]] = {}
    for cs in script.explicit_cases:
        explicit_by_loc.setdefault(frozenset(cs.location), []).append(cs)

    report = VerificationReport(script.name, cfg.name, script.target_t,
                                script.override,
                                axioms=list(script.axioms))

    def run_explicit(cs: CaseSpec, auto_constraints=(),
                     constant: Optional[Rational] = None):
        if cs.axiom is not None:
            report.cases.append(CaseResult(cs.name, "axiom", axiom=cs.axiom))
            if cs.axiom not in report.axioms:
                report.axioms.append(cs.axiom)
            return
        report.cases.append(check_case(
            base, list(auto_constraints) + list(cs.extras), combos,
            name=cs.name, constant=constant,
            collect_system=collect_systems))

    handled: set[frozenset] = set()
    if script.auto_cases:
        for constant in constants:
            for location, constraints in adjunction_cases(
                    cfg, script.target_t, override=(
                        constant if constant != inv_t else None)):
                key = frozenset(location)
                if key in chain_by_center and len(location) == 2:
                    handled.add(key)
                    continue  # discharged by the tower below
                if key in terminal_locations:
                    handled.add(key)
                    continue  # discharged by the terminal decomposition
                if key in explicit_by_loc:
                    handled.add(key)
                    if constant == constants[0]:
                        for cs in explicit_by_loc[key]:
                            run_explicit(cs, constraints, constant)
                    continue
                report.cases.append(check_case(
                    base, constraints, combos, name="&".join(location),
                    constant=constant, collect_system=collect_systems))
    # Explicit cases at locations outside the auto enumeration.
    for key, specs in explicit_by_loc.items():
        if key in handled:
            continue
        for cs in specs:
            run_explicit(cs, (), constants[0])

    for chain in script.chains:
        depth = chain.depth_max if chain_depth is None \
            else min(chain_depth, chain.depth_max)
        for constant in constants:
            report.chains.append(check_inductive_chain(
                cfg, base, chain, script.target_t, constant, depth))

    for term in script.terminals:
        report.terminals.append(check_terminal(cfg, term, script.target_t))

    return report
