"""Combinatorial model of a del Pezzo surface with Du Val singularities.

A :class:`SurfaceConfig` records the resolution data of one surface:
degree (K^2), the ADE singularities with their labeled exceptional curves,
and curated auxiliary curves with their intersection profiles.  From this
the module derives pullback coefficients (a Cartan-matrix solve), the
nonnegativity constraint system on the divisor coefficients, pushforward
intersection numbers, and anticanonical decompositions.

Variable conventions
--------------------

Exceptional labels come in blocks ``E1..En`` (first singularity),
``F1..Fn`` (second), ``G1..Gn`` (third); the corresponding constraint
variables are ``a1..an``, ``b1..bn``, ``c1..cn``.

A block may declare ``scales=``: the divisor is then written with
coefficient ``scale_i * var_i`` on the i-th curve, so that the constraint
variables match the printed coefficient bounds for the surfaces whose
formulas are stated in scaled form.

Config file format (UTF-8, line oriented; ``#`` starts a comment)::

    [surface] name=<id> degree=<p/q>
    [singularity] type=<A|D|E><rank> labels=<l1,l2,...> [scales=<p/q>,...]
    [curve] name=<id> antican=<p/q> [selfint=<p/q>] profile=<label>=<int>,...
            [coeffs=<label>=<p/q>,...] [not-in-support] [relation=<expr>]
            [asserted-relation=<expr>]
    [anticanonical] through=<label> [name=<id>] [profile=...] [coeffs=...]
    [flag] <tag>
    [point] curves=<c1,c2,...> [contact=<ci>:<cj>=<n>,...] [mult=<c>=<n>,...]
    [intersect] pair=<c1>:<c2> value=<p/q>

Relations use ``~``: ``relation=C~-2K`` declares ``C`` a member of
``|-2K|``; ``relation=L3+L6~-2K`` declares the sum Cartier of that class.
An ``asserted-relation`` is a membership taken on faith from the source
tables rather than derived from the configuration: it is still checked
for anticanonical degree, but it is exempt from the self-intersection
cross-check (which would require intersection data the configuration
does not certify).  Rationals are ``p/q`` or integers; floats are
rejected everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import dynkin
from .exactlin import (DimensionMismatch, QMatrix, QVector, Rational, rat,
                       rat_str, solve_linear, is_negative_definite)
from .polytope import Constraint, ConstraintSystem, LinForm, ge


class ParseError(Exception):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(Exception):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class UnknownCurve(KeyError):
    pass


class SingularGram(Exception):
    pass


_PREFIX_TO_VAR = {"E": "a", "F": "b", "G": "c"}


@dataclass(frozen=True)
class SingularityBlock:
    """One singular point: its ADE type and labeled exceptional curves."""

    type: dynkin.SingularityType
    labels: tuple[str, ...]
    scales: tuple[Rational, ...]
    diag_override: Optional[Rational] = None

    @property
    def var_names(self) -> tuple[str, ...]:
        prefix = _PREFIX_TO_VAR.get(self.labels[0][0])
        if prefix is None:
            raise ParseError(
                f"labels must start with E, F or G, got {self.labels[0]!r}")
        # Use the numeral carried by each label (F4 -> b4) so that several
        # blocks sharing a letter (e.g. three A1 points F1, F2, F4) get
        # distinct variables.
        return tuple(f"{prefix}{lbl[1:]}" for lbl in self.labels)


@dataclass(frozen=True)
class Relation:
    """``sum coef_i * curve_i`` is a member of ``|-nK|``."""

    terms: tuple[tuple[int, str], ...]
    antican_multiple: int
    #: True for memberships copied from the source tables without an
    #: independent derivation; these skip the self-intersection check.
    asserted: bool = False

    def render(self) -> str:
        lhs = "+".join(name if c == 1 else f"{c}*{name}"
                       for c, name in self.terms)
        return f"{lhs}~-{self.antican_multiple}K"


@dataclass(frozen=True)
class AuxCurve:
    """A curated curve on the surface with its resolution profile."""

    name: str
    antican_degree: Rational
    profile: QVector                   # strict transform . E_i, per label
    self_int_strict: Rational = Fraction(-1)
    relations: tuple[Relation, ...] = ()
    assume_not_in_support: bool = False
    declared_coeffs: Optional[QVector] = None
    is_anticanonical_member: bool = False


@dataclass(frozen=True)
class DeclaredPoint:
    """Raw tangency data for a special point of the configuration."""

    curves: tuple[str, ...]
    contacts: tuple[tuple[str, str, int], ...] = ()
    mults: tuple[tuple[str, int], ...] = ()


@dataclass
class SurfaceConfig:
    name: str
    degree: Rational
    singularities: list[SingularityBlock]
    aux_curves: list[AuxCurve]
    flags: set[str] = field(default_factory=set)
    points: list[DeclaredPoint] = field(default_factory=list)
    strict_intersections: dict[frozenset, Rational] = field(
        default_factory=dict)

    # -- derived structure -------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l for b in self.singularities for l in b.labels)

    @property
    def var_names(self) -> tuple[str, ...]:
        return tuple(v for b in self.singularities for v in b.var_names)

    @property
    def scales(self) -> tuple[Rational, ...]:
        return tuple(s for b in self.singularities for s in b.scales)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownCurve(label)

    @property
    def exceptional_matrix(self) -> QMatrix:
        """Block-diagonal intersection matrix over all singularities."""
        n = len(self.labels)
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for block in self.singularities:
            m = dynkin.intersection_matrix(block.type)
            k = len(block.labels)
            for i in range(k):
                for j in range(k):
                    rows[offset + i][offset + j] = m.entry(i, j)
                if block.diag_override is not None:
                    rows[offset + i][offset + i] = block.diag_override
            offset += k
        return QMatrix(rows)

    def curve(self, name: str) -> AuxCurve:
        for c in self.aux_curves:
            if c.name == name:
                return c
        raise UnknownCurve(name)

    def has_curve(self, name: str) -> bool:
        return any(c.name == name for c in self.aux_curves)

    def block_of_label(self, label: str) -> SingularityBlock:
        for b in self.singularities:
            if label in b.labels:
                return b
        raise UnknownCurve(label)

    def singularity_names(self) -> list[str]:
        return [str(b.type) for b in self.singularities]


@dataclass(frozen=True)
class DivisorClass:
    """An effective combination of named curves plus its exceptional part.

    ``exceptional_part`` is the full pullback coefficient vector of the
    divisor on the exceptional curves, consistent with the strict part by
    construction.
    """

    strict_part: tuple[tuple[str, Rational], ...]
    exceptional_part: QVector


def make_divisor(cfg: SurfaceConfig,
                 weights: dict[str, Rational]) -> DivisorClass:
    total = [Fraction(0)] * len(cfg.labels)
    items = []
    for name, w in weights.items():
        w = rat(w)
        curve = cfg.curve(name)  # raises UnknownCurve
        coeffs = solve_pullback(cfg, curve.profile)
        for i, c in enumerate(coeffs):
            total[i] += w * c
        items.append((name, w))
    return DivisorClass(tuple(sorted(items)), QVector(total))


# ---------------------------------------------------------------------------
# Core calculus
# ---------------------------------------------------------------------------

def solve_pullback(cfg: SurfaceConfig, profile: QVector) -> QVector:
    """Coefficients c with  M c = -profile  (so the pullback is orthogonal
    to every exceptional curve)."""
    if len(profile) != len(cfg.labels):
        raise DimensionMismatch(
            f"profile length {len(profile)} != exceptional count "
            f"{len(cfg.labels)}")
    return solve_linear(cfg.exceptional_matrix, -QVector(profile))


def exceptional_rows(cfg: SurfaceConfig) -> list[LinForm]:
    """The linear form of (strict transform of D) . E_j per label, in the
    constraint variables (scales applied)."""
    m = cfg.exceptional_matrix
    names = cfg.var_names
    scales = cfg.scales
    forms = []
    for j in range(len(names)):
        coeffs = {}
        for i in range(len(names)):
            v = -scales[i] * m.entry(i, j)
            if v:
                coeffs[names[i]] = v
        forms.append(LinForm(coeffs))
    return forms


def curve_row(cfg: SurfaceConfig, curve: AuxCurve) -> LinForm:
    """The linear form of (strict transform of D) . (strict transform of
    the curve): antican_degree - sum scale_i * var_i * profile_i."""
    scales = cfg.scales
    names = cfg.var_names
    coeffs = {}
    for i, p in enumerate(curve.profile):
        v = -scales[i] * p
        if v:
            coeffs[names[i]] = v
    return LinForm(coeffs, curve.antican_degree)


def nonneg_constraints(cfg: SurfaceConfig,
                       curves: str = "all") -> ConstraintSystem:
    """The base constraint system on the divisor coefficients:

    * one row per exceptional curve E_j:  D~ . E_j >= 0;
    * one row per curve assumed not in the support:  D~ . L~ >= 0;
    * every variable >= 0.

    ``curves`` selects which not-in-support rows participate: ``"all"``,
    ``"anticanonical"`` (members of |-K| only -- the system the printed
    per-variable upper bounds are computed on), or ``"none"``.
    """
    if curves not in ("all", "anticanonical", "none"):
        raise ValueError(f"unknown curve selection {curves!r}")
    names = cfg.var_names
    constraints = [ge(f) for f in exceptional_rows(cfg)]
    for curve in cfg.aux_curves:
        if not curve.assume_not_in_support:
            continue
        if curves == "none":
            continue
        if curves == "anticanonical" and not curve.is_anticanonical_member:
            continue
        constraints.append(ge(curve_row(cfg, curve)))
    constraints.extend(ge(LinForm.var(v)) for v in names)
    return ConstraintSystem(names, constraints)


def pushforward_intersection(cfg: SurfaceConfig, l1: AuxCurve | str,
                             l2: AuxCurve | str) -> Rational:
    """Intersection of the pushed-forward curve classes on the surface:
    strict . strict + correction through the exceptional locus."""
    if isinstance(l1, str):
        l1 = cfg.curve(l1)
    if isinstance(l2, str):
        l2 = cfg.curve(l2)
    if not cfg.has_curve(l1.name) or not cfg.has_curve(l2.name):
        raise UnknownCurve(l1.name if not cfg.has_curve(l1.name) else l2.name)
    if l1.name == l2.name:
        strict = l1.self_int_strict
    else:
        strict = cfg.strict_intersections.get(
            frozenset({l1.name, l2.name}), Fraction(0))
    coeffs2 = solve_pullback(cfg, l2.profile)
    return strict + sum((c * p for c, p in zip(coeffs2, l1.profile)),
                        Fraction(0))


def decompose_anticanonical(cfg: SurfaceConfig,
                            curves: list[AuxCurve | str]) -> QVector:
    """Weights w with  sum w_i L_i  numerically anticanonical: solves
    Gram . w = (antican degrees)."""
    resolved = [cfg.curve(c) if isinstance(c, str) else c for c in curves]
    gram = QMatrix([[pushforward_intersection(cfg, a, b) for b in resolved]
                    for a in resolved])
    if gram.determinant() == 0:
        raise SingularGram("pushforward Gram matrix is singular")
    rhs = QVector([c.antican_degree for c in resolved])
    return solve_linear(gram, rhs)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate_config(cfg: SurfaceConfig) -> list[str]:
    """Consistency checks; returns a list of violations (empty = valid)."""
    out: list[str] = []
    if cfg.degree <= 0:
        out.append(f"degree must be positive, got {rat_str(cfg.degree)}")
    matrix = cfg.exceptional_matrix
    if not is_negative_definite(matrix):
        out.append("exceptional intersection matrix is not negative definite")
        return out  # pullbacks below would be meaningless
    n = len(cfg.labels)
    seen = set()
    for label in cfg.labels:
        if label in seen:
            out.append(f"duplicate exceptional label {label}")
        seen.add(label)
    for curve in cfg.aux_curves:
        if len(curve.profile) != n:
            out.append(f"curve {curve.name}: profile length mismatch")
            continue
        for label, p in zip(cfg.labels, curve.profile):
            if p < 0 or p.denominator != 1:
                out.append(f"curve {curve.name}: profile entry at {label} "
                           f"must be a nonnegative integer, got {rat_str(p)}")
        if curve.antican_degree <= 0:
            out.append(f"curve {curve.name}: antican degree must be positive")
        if curve.declared_coeffs is not None:
            computed = solve_pullback(cfg, curve.profile)
            for label, got, want in zip(cfg.labels, computed,
                                        curve.declared_coeffs):
                if got != want:
                    out.append(
                        f"curve {curve.name}: pullback mismatch at {label} "
                        f"(declared {rat_str(want)}, computed {rat_str(got)})")
    # Relations: the anticanonical degree of the combination must match the
    # declared multiple (sum coef * (-K . L_i) = n * K^2); when the full
    # strict intersection data is available, the self-intersection must
    # equal n^2 * K^2 as well.
    for rel in sorted({r for c in cfg.aux_curves for r in c.relations},
                      key=lambda r: r.render()):
        try:
            members = [(coef, cfg.curve(name)) for coef, name in rel.terms]
        except UnknownCurve as exc:
            out.append(f"relation {rel.render()}: unknown curve {exc}")
            continue
        deg = sum((coef * c.antican_degree for coef, c in members),
                  Fraction(0))
        expected = rel.antican_multiple * cfg.degree
        if deg != expected:
            out.append(
                f"relation {rel.render()}: anticanonical degree "
                f"{rat_str(deg)} != {rat_str(expected)}")
        pairs_known = all(
            a.name == b.name or
            frozenset({a.name, b.name}) in cfg.strict_intersections
            for _, a in members for _, b in members)
        if pairs_known and not rel.asserted:
            self_int = sum(
                (ca * cb * pushforward_intersection(cfg, a, b)
                 for ca, a in members for cb, b in members), Fraction(0))
            expected_sq = rel.antican_multiple ** 2 * cfg.degree
            if self_int != expected_sq:
                out.append(
                    f"relation {rel.render()}: self-intersection "
                    f"{rat_str(self_int)} != {rat_str(expected_sq)}")
    for point in cfg.points:
        for name in point.curves:
            if name not in cfg.labels and not cfg.has_curve(name):
                out.append(f"point references unknown curve {name}")
    return out


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _split_tokens(body: str) -> list[str]:
    return [tok for tok in body.split() if tok]


def _kv(token: str, line_no: int) -> tuple[str, str]:
    if "=" not in token:
        raise ParseError(f"expected key=value, got {token!r}", line_no)
    key, value = token.split("=", 1)
    return key, value


def _parse_assign_list(value: str, line_no: int) -> list[tuple[str, str]]:
    out = []
    for item in value.split(","):
        if "=" not in item:
            raise ParseError(f"expected name=value in {value!r}", line_no)
        k, v = item.split("=", 1)
        out.append((k.strip(), v.strip()))
    return out


_RELATION_RE = re.compile(r"^(?P<lhs>[^~]+)~-(?P<mult>\d*)K$")
_TERM_RE = re.compile(r"^(?:(\d+)\*)?([A-Za-z]\w*)$")


def _parse_relation(value: str, line_no: int,
                    asserted: bool = False) -> Relation:
    m = _RELATION_RE.match(value)
    if not m:
        raise ParseError(f"cannot parse relation {value!r} "
                         "(expected e.g. C~-2K or L3+L6~-2K)", line_no)
    terms = []
    for part in m.group("lhs").split("+"):
        tm = _TERM_RE.match(part.strip())
        if not tm:
            raise ParseError(f"cannot parse relation term {part!r}", line_no)
        coef = int(tm.group(1)) if tm.group(1) else 1
        terms.append((coef, tm.group(2)))
    return Relation(tuple(terms), int(m.group("mult") or "1"), asserted)


def load_surface(source: str, name_hint: str = "<config>") -> SurfaceConfig:
    """Parse and validate a surface config from its text."""
    name = None
    degree = None
    blocks: list[SingularityBlock] = []
    curve_lines: list[tuple[int, dict, bool]] = []
    antican_specs = []  # (line_no, fields)
    flags: set[str] = set()
    points: list[DeclaredPoint] = []
    intersections: dict[frozenset, Rational] = {}

    for line_no, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = _split_tokens(line)
        section = tokens[0]
        rest = tokens[1:]
        if section == "[surface]":
            fields = dict(_kv(t, line_no) for t in rest)
            name = fields.get("name", name_hint)
            if "degree" not in fields:
                raise ParseError("[surface] needs degree=", line_no)
            degree = rat(fields["degree"])
        elif section == "[singularity]":
            fields = dict(_kv(t, line_no) for t in rest)
            if "type" not in fields or "labels" not in fields:
                raise ParseError("[singularity] needs type= and labels=",
                                 line_no)
            stype = dynkin.SingularityType.parse(fields["type"])
            labels = tuple(l.strip() for l in fields["labels"].split(","))
            if len(labels) != stype.rank:
                raise ParseError(
                    f"type {stype} needs {stype.rank} labels, got "
                    f"{len(labels)}", line_no)
            if "scales" in fields:
                scales = tuple(rat(s) for s in fields["scales"].split(","))
                if len(scales) != stype.rank:
                    raise ParseError("scales length mismatch", line_no)
            else:
                scales = tuple(Fraction(1) for _ in labels)
            diag = rat(fields["selfint"]) if "selfint" in fields else None
            blocks.append(SingularityBlock(stype, labels, scales, diag))
        elif section == "[curve]":
            flags_here = {t for t in rest if "=" not in t}
            fields = dict(_kv(t, line_no) for t in rest if "=" in t)
            unknown_flags = flags_here - {"not-in-support"}
            if unknown_flags:
                raise ParseError(f"unknown curve flags {unknown_flags}",
                                 line_no)
            if "name" not in fields or "antican" not in fields:
                raise ParseError("[curve] needs name= and antican=", line_no)
            curve_lines.append((line_no, fields,
                                "not-in-support" in flags_here))
        elif section == "[anticanonical]":
            fields = dict(_kv(t, line_no) for t in rest)
            if "through" not in fields:
                raise ParseError("[anticanonical] needs through=", line_no)
            antican_specs.append((line_no, fields))
        elif section == "[flag]":
            if len(rest) != 1:
                raise ParseError("[flag] takes exactly one tag", line_no)
            flags.add(rest[0])
        elif section == "[point]":
            fields = dict(_kv(t, line_no) for t in rest)
            if "curves" not in fields:
                raise ParseError("[point] needs curves=", line_no)
            names = tuple(c.strip() for c in fields["curves"].split(","))
            contacts = []
            if "contact" in fields:
                for pair, v in _parse_assign_list(fields["contact"], line_no):
                    if ":" not in pair:
                        raise ParseError("contact pairs use c1:c2=n", line_no)
                    c1, c2 = pair.split(":", 1)
                    contacts.append((c1, c2, int(v)))
            mults = []
            if "mult" in fields:
                for cname, v in _parse_assign_list(fields["mult"], line_no):
                    mults.append((cname, int(v)))
            points.append(DeclaredPoint(names, tuple(contacts), tuple(mults)))
        elif section == "[intersect]":
            fields = dict(_kv(t, line_no) for t in rest)
            if "pair" not in fields or "value" not in fields:
                raise ParseError("[intersect] needs pair= and value=", line_no)
            c1, c2 = (fields["pair"].split(":", 1) + [""])[:2]
            intersections[frozenset({c1, c2})] = rat(fields["value"])
        else:
            raise ParseError(f"unknown section {section!r}", line_no)

    if degree is None:
        raise ParseError("missing [surface] line")
    if not blocks:
        raise ParseError("no [singularity] declared")

    all_labels = [l for b in blocks for l in b.labels]
    label_pos = {l: i for i, l in enumerate(all_labels)}

    def profile_from(value: str, line_no: int) -> QVector:
        vec = [Fraction(0)] * len(all_labels)
        for label, v in _parse_assign_list(value, line_no):
            if label not in label_pos:
                raise ParseError(f"unknown exceptional label {label}",
                                 line_no)
            vec[label_pos[label]] = rat(v)
        return QVector(vec)

    aux: list[AuxCurve] = []
    for line_no, fields, not_in_support in curve_lines:
        relations = []
        if "relation" in fields:
            relations.append(_parse_relation(fields["relation"], line_no))
        if "asserted-relation" in fields:
            relations.append(_parse_relation(
                fields["asserted-relation"], line_no, asserted=True))
        relations = tuple(relations)
        aux.append(AuxCurve(
            name=fields["name"],
            antican_degree=rat(fields["antican"]),
            profile=profile_from(fields.get("profile", ""), line_no)
            if fields.get("profile") else QVector([0] * len(all_labels)),
            self_int_strict=rat(fields.get("selfint", "-1")),
            relations=relations,
            assume_not_in_support=not_in_support,
            declared_coeffs=profile_from(fields["coeffs"], line_no)
            if "coeffs" in fields else None,
        ))

    cfg = SurfaceConfig(
        name=name or name_hint, degree=degree, singularities=blocks,
        aux_curves=aux, flags=flags, points=points,
        strict_intersections=intersections)

    for line_no, fields in antican_specs:
        through = fields["through"]
        if through not in label_pos:
            raise ParseError(f"unknown label {through} in [anticanonical]",
                             line_no)
        block = cfg.block_of_label(through)
        if "profile" in fields:
            profile = profile_from(fields["profile"], line_no)
        else:
            # The member through this singular point: its pullback
            # coefficients are the fundamental cycle, so its profile is
            # -(M z) on the block (zero elsewhere).
            z = dynkin.fundamental_cycle(block.type)
            m = dynkin.intersection_matrix(block.type)
            minus_mz = -m.mul_vector(z)
            vec = [Fraction(0)] * len(all_labels)
            for lbl, v in zip(block.labels, minus_mz):
                vec[label_pos[lbl]] = v
            profile = QVector(vec)
        declared = (profile_from(fields["coeffs"], line_no)
                    if "coeffs" in fields else None)
        zname = fields.get("name", "Z" if len(antican_specs) == 1
                           else f"Z.{through}")
        # Strict self-intersection: Z^2 = K^2 and the pullback is
        # orthogonal to the exceptional curves, so
        # strict^2 = degree - sum coeff_i * profile_i.
        coeffs = solve_pullback(cfg, profile)
        strict_sq = cfg.degree - sum(
            (c * p for c, p in zip(coeffs, profile)), Fraction(0))
        cfg.aux_curves.append(AuxCurve(
            name=zname, antican_degree=cfg.degree, profile=profile,
            self_int_strict=strict_sq,
            relations=(Relation(((1, zname),), 1),),
            assume_not_in_support=True,
            declared_coeffs=declared,
            is_anticanonical_member=True))

    violations = validate_config(cfg)
    if violations:
        raise ValidationError(violations)
    return cfg
