"""Line-oriented filtration spec documents.

Grammar (``#`` starts a comment; blank lines are ignored)::

    document   := block*
    block      := "[" name "]" NEWLINE entry*
    name       := ring | ideals | filtration | reductions | analysis
    entry      := key "=" value NEWLINE

    [ring]        backend = staircase | semigroup
                  variables = x, y          (staircase; 1 or 2 names)
                  quotient = x^2, x*y       (staircase, optional)
                  generators = 3, 4, 5      (semigroup)
                  dimension = 1 | 2         (required)
                  cm = true | false         (optional; must match the ring)
    [ideals]      NAME = monomial, monomial, ...
    [filtration]  kind = powers | integral-closure | ratliff-rush
                  ideals = NAME, NAME, ...
    [reductions]  NAME = row ; row ; ...    (one row of d monomials per base ideal)
    [analysis]    commands = verify-all | hilbert | reductions | postulation | huneke | h1, ...
                  box = 6   margin = 3   base_offset = 8

Monomials are written ``1``, ``x``, ``x^2*y`` or ``t^7``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .filtration import KINDS, Filtration, NotAdmissibleError
from .ideals import PolyRing, SemigroupRing, is_infinite

COMMANDS = ("verify-all", "hilbert", "reductions", "postulation", "huneke", "h1")
BLOCKS = ("ring", "ideals", "filtration", "reductions", "analysis")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_FACTOR = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


class SpecError(ValueError):
    def __init__(self, message, line=None, field_name=None):
        self.line = line
        self.field = field_name
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field_name:
            where.append(field_name)
        super().__init__((", ".join(where) + ": " if where else "") + message)


@dataclass
class SpecDocument:
    ring: object
    ideals: dict
    kind: str
    filtration_ideals: tuple
    reductions: dict = field(default_factory=dict)
    commands: tuple = ()
    box: int = 6
    margin: int = 3
    base_offset: int = 8
    cm_flag: bool | None = None
    source: str = ""

    def filtration(self) -> Filtration:
        return Filtration([self.ideals[n] for n in self.filtration_ideals], self.kind,
                          names=self.filtration_ideals)


def parse_monomial(text: str, ring, line=None, field_name=None):
    text = text.strip()
    if not text:
        raise SpecError("empty monomial", line, field_name)
    names = ring.names
    exps = [0] * len(names)
    if text != "1":
        for factor in text.split("*"):
            m = _FACTOR.match(factor.strip())
            if not m:
                raise SpecError(f"malformed monomial {text!r}", line, field_name)
            var, exp = m.group(1), m.group(2)
            if var not in names:
                raise SpecError(f"unknown variable {var!r} in {text!r}", line, field_name)
            exps[names.index(var)] += int(exp) if exp is not None else 1
    if isinstance(ring, SemigroupRing):
        v = exps[0]
        if not ring.contains_value(v):
            raise SpecError(f"t^{v} is not in the semigroup ring", line, field_name)
        return v
    return tuple(exps)


def _split_list(value):
    return [p.strip() for p in value.split(",") if p.strip()]


def _int(value, line, key, lo=None):
    try:
        v = int(value)
    except ValueError:
        raise SpecError(f"expected an integer, got {value!r}", line, key) from None
    if lo is not None and v < lo:
        raise SpecError(f"must be >= {lo}", line, key)
    return v


def _read_blocks(text):
    blocks = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise SpecError("unterminated block header", lineno)
            name = line[1:-1].strip()
            if name not in BLOCKS:
                raise SpecError(f"unknown block [{name}]", lineno)
            if name in blocks:
                raise SpecError(f"duplicate block [{name}]", lineno)
            current = blocks[name] = []
            continue
        if current is None:
            raise SpecError("entry outside of any block", lineno)
        if "=" not in line:
            raise SpecError("expected 'key = value'", lineno)
        key, value = (p.strip() for p in line.split("=", 1))
        if not key:
            raise SpecError("empty key", lineno)
        current.append((lineno, key, value))
    return blocks


def _entries(block, name, allowed=None):
    out = {}
    for lineno, key, value in block:
        if allowed is not None and key not in allowed:
            raise SpecError(f"unknown key in [{name}]", lineno, key)
        if key in out:
            raise SpecError("duplicate key", lineno, key)
        out[key] = (lineno, value)
    return out


def _parse_ring(block):
    ent = _entries(block, "ring", {"backend", "variables", "quotient", "generators", "dimension", "cm"})
    if "backend" not in ent:
        raise SpecError("[ring] needs a backend", None, "backend")
    line, backend = ent["backend"]
    if "dimension" not in ent:
        raise SpecError("[ring] needs a declared dimension", None, "dimension")
    dline, dval = ent["dimension"]
    dim = _int(dval, dline, "dimension")
    if dim not in (1, 2):
        raise SpecError("declared dimension must be 1 or 2", dline, "dimension")
    if backend == "semigroup":
        if "generators" not in ent:
            raise SpecError("semigroup backend needs generators", line, "generators")
        gline, gval = ent["generators"]
        try:
            ring = SemigroupRing(tuple(_int(g, gline, "generators") for g in _split_list(gval)))
        except ValueError as exc:
            raise SpecError(str(exc), gline, "generators") from None
    elif backend == "staircase":
        vline, vval = ent.get("variables", (line, "x, y"))
        names = tuple(_split_list(vval))
        if len(names) not in (1, 2) or len(set(names)) != len(names) or not all(_NAME.match(n) for n in names):
            raise SpecError("need one or two distinct variable names", vline, "variables")
        base = PolyRing(len(names), (), names)
        quotient = ()
        if "quotient" in ent:
            qline, qval = ent["quotient"]
            quotient = tuple(parse_monomial(q, base, qline, "quotient") for q in _split_list(qval))
        try:
            ring = PolyRing(len(names), quotient, names)
        except ValueError as exc:
            raise SpecError(str(exc), ent.get("quotient", (line,))[0], "quotient") from None
    else:
        raise SpecError(f"unknown backend {backend!r}", line, "backend")
    if ring.dimension != dim:
        raise SpecError(f"declared dimension {dim} but the ring has dimension {ring.dimension}", dline, "dimension")
    cm = None
    if "cm" in ent:
        cline, cval = ent["cm"]
        if cval.lower() not in ("true", "false"):
            raise SpecError("cm must be true or false", cline, "cm")
        cm = cval.lower() == "true"
        if cm != ring.is_cohen_macaulay:
            raise SpecError(f"cm = {cval} contradicts the ring", cline, "cm")
    return ring, cm


def parse_spec(text: str) -> SpecDocument:
    """Parse and validate a spec document; raises SpecError with a location."""
    blocks = _read_blocks(text)
    for required in ("ring", "ideals", "filtration"):
        if required not in blocks:
            raise SpecError(f"missing [{required}] block")
    ring, cm = _parse_ring(blocks["ring"])

    ideals = {}
    for lineno, name, value in blocks["ideals"]:
        if not _NAME.match(name):
            raise SpecError("bad ideal name", lineno, name)
        if name in ideals:
            raise SpecError("duplicate ideal name", lineno, name)
        gens = [parse_monomial(g, ring, lineno, name) for g in _split_list(value)]
        if not gens:
            raise SpecError("ideal needs generators", lineno, name)
        I = ring.ideal(gens)
        if I.is_unit() or is_infinite(I.colength()):
            raise SpecError(f"ideal {name} is not m-primary", lineno, name)
        ideals[name] = I

    fent = _entries(blocks["filtration"], "filtration", {"kind", "ideals"})
    kline, kind = fent.get("kind", (None, "powers"))
    if kind not in KINDS:
        raise SpecError(f"unknown filtration kind {kind!r}", kline, "kind")
    if "ideals" not in fent:
        raise SpecError("[filtration] needs ideals", None, "ideals")
    iline, ival = fent["ideals"]
    names = tuple(_split_list(ival))
    if not names:
        raise SpecError("[filtration] needs at least one ideal", iline, "ideals")
    for n in names:
        if n not in ideals:
            raise SpecError(f"unresolved ideal name {n!r}", iline, "ideals")

    reductions = {}
    for lineno, name, value in blocks.get("reductions", []):
        rows = [[parse_monomial(m, ring, lineno, name) for m in _split_list(row)] for row in value.split(";")]
        if len(rows) != len(names):
            raise SpecError(f"reduction needs {len(names)} rows, got {len(rows)}", lineno, name)
        if any(len(r) != ring.dimension for r in rows):
            raise SpecError(f"each row needs {ring.dimension} entries", lineno, name)
        for i, row in enumerate(rows):
            for m in row:
                if not ideals[names[i]].member(m):
                    raise SpecError(f"{ring.format_monomial(m)} is not in {names[i]}", lineno, name)
        reductions[name] = tuple(tuple(r) for r in rows)

    aent = _entries(blocks.get("analysis", []), "analysis", {"commands", "box", "margin", "base_offset"})
    commands = ()
    if "commands" in aent:
        cline, cval = aent["commands"]
        commands = tuple(_split_list(cval))
        for c in commands:
            if c not in COMMANDS:
                raise SpecError(f"unknown command {c!r}", cline, "commands")
    box = _int(aent["box"][1], aent["box"][0], "box", 2) if "box" in aent else 6
    margin = _int(aent["margin"][1], aent["margin"][0], "margin", 0) if "margin" in aent else 3
    offset = _int(aent["base_offset"][1], aent["base_offset"][0], "base_offset", 1) if "base_offset" in aent else 8

    doc = SpecDocument(ring, ideals, kind, names, reductions, commands, box, margin, offset, cm, text)
    try:
        doc.filtration()
    except NotAdmissibleError as exc:
        raise SpecError(str(exc), kline, "kind") from None
    return doc
