"""Declarative model files: parser, resolver, and canonical printer.

The format is a small declaration language; frame indices are 1-based in
files (matching the usual e_1, e_2 notation) and 0-based internally, with
this module as the only boundary.  Polynomial expressions use + - * ^ ( )
with rational coefficients written p/q.  Example:

    algebroid A {
      base;
      rank 2;
      bracket [1,2] = e2;
    }
    rep rho A on B { e1 = [[1,0],[0,0]]; e2 = [[0,1],[0,0]]; }
    matchedpair MP { A = A; B = B; rho = rho; sigma = sigma; }
    bialgebroid BI { E = E1; Estar = E2; pairing = [[1,0],[0,-1]]; }
    manin MD { g = g1; gstar = g2; }
    poisson P { vars x y; pi [x,y] = 1; }
    dvb D { dims 2 3 2; sign plus; }

`#` starts a comment.  Parse errors carry line and column.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, poly, ZERO
from .algebroid import LieAlgebroid
from .matched_pair import MatchedPair, Representation
from .bialgebroid import LieBialgebroid, ManinDouble, manin_double
from .poisson import PoissonAlgebra
from .dvb import DecomposedDVB


class ModelError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.line, self.col = line, col
        if line is not None:
            message = "line %d, col %d: %s" % (line, col, message)
        super().__init__(message)


KINDS = ("algebroid", "rep", "matchedpair", "bialgebroid", "manin", "dvb", "poisson")

_PUNCT = "{}[]()=,;+-*^/"


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind, self.value, self.line, self.col = kind, value, line, col

    def __repr__(self):
        return "%s(%r)" % (self.kind, self.value)


def _tokenize(text):
    tokens = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif c.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", int(text[start:i]), line, col))
            col += i - start
        elif c.isalpha() or c == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], line, col))
            col += i - start
        elif c in _PUNCT:
            tokens.append(_Token(c, c, line, col))
            i += 1
            col += 1
        else:
            raise ModelError("unexpected character %r" % c, line, col)
    tokens.append(_Token("eof", None, line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ModelError(message, tok.line, tok.col)

    def expect(self, kind, what=None):
        t = self.next()
        if t.kind != kind:
            self.fail("expected %s, found %r" % (what or kind, t.value), t)
        return t

    def accept(self, kind):
        if self.peek().kind == kind:
            return self.next()
        return None

    # -- polynomial expressions ------------------------------------------

    def parse_expr(self, variables):
        """expr := term (('+'|'-') term)*"""
        p = self.parse_term(variables)
        while self.peek().kind in "+-":
            op = self.next().kind
            q = self.parse_term(variables)
            p = p + q if op == "+" else p - q
        return p

    def parse_term(self, variables):
        p = self.parse_factor(variables)
        while self.peek().kind == "*":
            self.next()
            p = p * self.parse_factor(variables)
        return p

    def parse_factor(self, variables):
        p = self.parse_atom(variables)
        if self.accept("^"):
            t = self.expect("int", "exponent")
            p = p ** t.value
        return p

    def parse_atom(self, variables):
        t = self.peek()
        if t.kind == "-":
            self.next()
            return -self.parse_atom(variables)
        if t.kind == "+":
            self.next()
            return self.parse_atom(variables)
        if t.kind == "(":
            self.next()
            p = self.parse_expr(variables)
            self.expect(")")
            return p
        if t.kind == "int":
            self.next()
            num = t.value
            if self.accept("/"):
                d = self.expect("int", "denominator")
                if d.value == 0:
                    raise ModelError("zero denominator", d.line, d.col)
                return Polynomial.const(Fraction(num, d.value))
            return Polynomial.const(Fraction(num))
        if t.kind == "name":
            self.next()
            if variables is not None and t.value not in variables:
                self.fail("unknown symbol %r" % t.value, t)
            return Polynomial.var(t.value)
        self.fail("expected expression, found %r" % t.value, t)

    def parse_matrix(self, variables):
        """[[expr, ...], ...]"""
        self.expect("[")
        rows = []
        while True:
            self.expect("[")
            row = [self.parse_expr(variables)]
            while self.accept(","):
                row.append(self.parse_expr(variables))
            self.expect("]")
            rows.append(row)
            if not self.accept(","):
                break
        self.expect("]")
        return rows


class ModelFile:
    """Resolved declarations, in order, addressable by unique name."""

    def __init__(self):
        self.order = []           # list of (kind, name)
        self.objects = {}         # name -> resolved object

    def add(self, kind, name, obj, tok=None):
        if name in self.objects:
            raise ModelError("duplicate name %r" % name,
                             tok.line if tok else None, tok.col if tok else None)
        self.order.append((kind, name))
        self.objects[name] = obj

    def kind_of(self, name):
        for kind, nm in self.order:
            if nm == name:
                return kind
        return None

    def __eq__(self, other):
        if not isinstance(other, ModelFile):
            return NotImplemented
        if self.order != other.order:
            return False
        for _, name in self.order:
            a, b = self.objects[name], other.objects[name]
            if isinstance(a, ManinDouble):
                if not (a.g == b.g and a.gstar == b.gstar):
                    return False
            elif isinstance(a, DecomposedDVB):
                if (a.dim_h, a.dim_v, a.dim_k, a.sign) != (b.dim_h, b.dim_v,
                                                           b.dim_k, b.sign):
                    return False
            elif isinstance(a, LieBialgebroid):
                if not (a.E == b.E and a.Estar == b.Estar and a.pairing == b.pairing):
                    return False
            elif a != b:
                return False
        return True


def parse_model(text: str) -> ModelFile:
    p = _Parser(text)
    model = ModelFile()
    while p.peek().kind != "eof":
        kindtok = p.expect("name", "declaration kind")
        kind = kindtok.value
        if kind not in KINDS:
            p.fail("unknown declaration kind %r" % kind, kindtok)
        if kind == "algebroid":
            _parse_algebroid(p, model)
        elif kind == "rep":
            _parse_rep(p, model)
        elif kind == "matchedpair":
            _parse_matchedpair(p, model)
        elif kind == "bialgebroid":
            _parse_bialgebroid(p, model)
        elif kind == "manin":
            _parse_manin(p, model)
        elif kind == "poisson":
            _parse_poisson(p, model)
        elif kind == "dvb":
            _parse_dvb(p, model)
        p.accept(";")
    return model


def _frame_index(p, tok, rank, what="frame index"):
    if not (1 <= tok.value <= rank):
        raise ModelError("%s %d out of range 1..%d" % (what, tok.value, rank),
                         tok.line, tok.col)
    return tok.value - 1


def _parse_algebroid(p, model):
    nametok = p.expect("name", "algebroid name")
    p.expect("{")
    base = None
    rank = None
    anchors = {}
    brackets = {}
    while not p.accept("}"):
        key = p.expect("name", "entry")
        if key.value == "base":
            base = []
            while p.peek().kind == "name":
                base.append(p.next().value)
            p.expect(";")
        elif key.value == "rank":
            rank = p.expect("int", "rank").value
            p.expect(";")
        elif key.value == "anchor":
            p.expect("[")
            idx = p.expect("int", "frame index")
            p.expect("]")
            p.expect("=")
            exprs = [p.parse_expr(set(base or ()))]
            while p.accept(","):
                exprs.append(p.parse_expr(set(base or ())))
            p.expect(";")
            anchors[idx] = exprs
        elif key.value == "bracket":
            p.expect("[")
            i = p.expect("int", "frame index")
            p.expect(",")
            j = p.expect("int", "frame index")
            p.expect("]")
            p.expect("=")
            if rank is None:
                p.fail("rank must be declared before brackets", key)
            symbols = set(base or ()) | {"e%d" % (k + 1) for k in range(rank)}
            expr = p.parse_expr(symbols)
            p.expect(";")
            brackets[(i, j)] = (expr, key)
        else:
            p.fail("unknown algebroid entry %r" % key.value, key)
    if rank is None:
        p.fail("algebroid %s has no rank" % nametok.value, nametok)
    base = tuple(base or ())
    d = len(base)
    anchor = [[ZERO] * d for _ in range(rank)]
    for idx, exprs in anchors.items():
        i = _frame_index(p, idx, rank)
        if len(exprs) != d:
            raise ModelError("anchor row needs %d components" % d, idx.line, idx.col)
        anchor[i] = exprs
    structure = {}
    frame_vars = ["e%d" % (k + 1) for k in range(rank)]
    for (itok, jtok), (expr, keytok) in brackets.items():
        i = _frame_index(p, itok, rank)
        j = _frame_index(p, jtok, rank)
        coeffs = []
        for k, fv in enumerate(frame_vars):
            c = expr.diff(fv)
            if c.degree_in(frame_vars) > 0:
                raise ModelError("bracket value must be linear in frame symbols",
                                 keytok.line, keytok.col)
            coeffs.append(c)
        rest = expr
        for k, fv in enumerate(frame_vars):
            rest = rest - coeffs[k] * Polynomial.var(fv)
        if not rest.is_zero:
            raise ModelError("bracket value has a non-section part",
                             keytok.line, keytok.col)
        structure[(i, j)] = coeffs
    model.add("algebroid", nametok.value,
              LieAlgebroid(base, rank, anchor=anchor, structure=structure,
                           name=nametok.value), nametok)


def _resolve(p, model, tok, kind):
    obj = model.objects.get(tok.value)
    if obj is None:
        raise ModelError("unresolved reference %r" % tok.value, tok.line, tok.col)
    actual = model.kind_of(tok.value)
    if actual != kind:
        raise ModelError("%r is a %s, expected %s" % (tok.value, actual, kind),
                         tok.line, tok.col)
    return obj


def _parse_rep(p, model):
    nametok = p.expect("name", "rep name")
    actortok = p.expect("name", "actor algebroid")
    ontok = p.expect("name", "'on'")
    if ontok.value != "on":
        p.fail("expected 'on'", ontok)
    carriertok = p.expect("name", "carrier algebroid")
    actor = _resolve(p, model, actortok, "algebroid")
    carrier = _resolve(p, model, carriertok, "algebroid")
    p.expect("{")
    mats = {}
    while not p.accept("}"):
        key = p.expect("name", "actor frame (e.g. e1)")
        if not (key.value.startswith("e") and key.value[1:].isdigit()):
            p.fail("rep entries are keyed by actor frame e<i>", key)
        i = int(key.value[1:]) - 1
        if not (0 <= i < actor.rank):
            p.fail("frame index out of range", key)
        p.expect("=")
        mats[i] = p.parse_matrix(set(actor.base_vars))
        p.expect(";")
    m = carrier.rank
    matrices = [mats.get(i, [[ZERO] * m for _ in range(m)]) for i in range(actor.rank)]
    rep = Representation(actor, m, matrices, carrier_names=carrier.frame_names,
                         name=nametok.value)
    rep.carrier_ref = carriertok.value
    model.add("rep", nametok.value, rep, nametok)


def _parse_named_fields(p, fields):
    """{ key = name; ... } or positional { name; name; ... }"""
    p.expect("{")
    out = {}
    pos = 0
    while not p.accept("}"):
        tok = p.expect("name", "field")
        if p.accept("="):
            if tok.value not in fields:
                raise ModelError("unknown field %r" % tok.value, tok.line, tok.col)
            val = p.expect("name", "reference")
            out[tok.value] = val
        else:
            if pos >= len(fields):
                raise ModelError("too many positional references", tok.line, tok.col)
            out[fields[pos]] = tok
            pos += 1
        p.expect(";")
    missing = [f for f in fields if f not in out]
    if missing:
        p.fail("missing field %r" % missing[0])
    return out


def _parse_matchedpair(p, model):
    nametok = p.expect("name", "matchedpair name")
    refs = _parse_named_fields(p, ("A", "B", "rho", "sigma"))
    A = _resolve(p, model, refs["A"], "algebroid")
    B = _resolve(p, model, refs["B"], "algebroid")
    rho = _resolve(p, model, refs["rho"], "rep")
    sigma = _resolve(p, model, refs["sigma"], "rep")
    model.add("matchedpair", nametok.value,
              MatchedPair(A, B, rho, sigma, name=nametok.value), nametok)


def _parse_bialgebroid(p, model):
    nametok = p.expect("name", "bialgebroid name")
    p.expect("{")
    refs = {}
    pairing = None
    fields = ("E", "Estar")
    pos = 0
    while not p.accept("}"):
        tok = p.expect("name", "field")
        if tok.value == "pairing":
            p.expect("=")
            rows = p.parse_matrix(set())
            pairing = [[c.constant_value() for c in row] for row in rows]
        elif p.accept("="):
            if tok.value not in fields:
                raise ModelError("unknown field %r" % tok.value, tok.line, tok.col)
            refs[tok.value] = p.expect("name", "reference")
        else:
            if pos >= len(fields):
                raise ModelError("too many positional references", tok.line, tok.col)
            refs[fields[pos]] = tok
            pos += 1
        p.expect(";")
    for f in fields:
        if f not in refs:
            p.fail("missing field %r" % f)
    E = _resolve(p, model, refs["E"], "algebroid")
    Es = _resolve(p, model, refs["Estar"], "algebroid")
    model.add("bialgebroid", nametok.value,
              LieBialgebroid(E, Es, pairing=pairing, name=nametok.value), nametok)


def _parse_manin(p, model):
    nametok = p.expect("name", "manin name")
    refs = _parse_named_fields(p, ("g", "gstar"))
    g = _resolve(p, model, refs["g"], "algebroid")
    gs = _resolve(p, model, refs["gstar"], "algebroid")
    model.add("manin", nametok.value, manin_double(g, gs, name=nametok.value),
              nametok)


def _parse_poisson(p, model):
    nametok = p.expect("name", "poisson name")
    p.expect("{")
    variables = None
    table = {}
    while not p.accept("}"):
        key = p.expect("name", "entry")
        if key.value == "vars":
            variables = []
            while p.peek().kind == "name":
                variables.append(p.next().value)
            p.expect(";")
        elif key.value == "pi":
            if variables is None:
                p.fail("vars must come before pi entries", key)
            p.expect("[")
            a = p.expect("name", "coordinate")
            p.expect(",")
            b = p.expect("name", "coordinate")
            p.expect("]")
            p.expect("=")
            expr = p.parse_expr(set(variables))
            p.expect(";")
            for t in (a, b):
                if t.value not in variables:
                    raise ModelError("unknown coordinate %r" % t.value, t.line, t.col)
            table[(a.value, b.value)] = expr
        else:
            p.fail("unknown poisson entry %r" % key.value, key)
    model.add("poisson", nametok.value,
              PoissonAlgebra(tuple(variables or ()), table, name=nametok.value),
              nametok)


def _parse_dvb(p, model):
    nametok = p.expect("name", "dvb name")
    p.expect("{")
    dims = None
    sign = "plus"
    while not p.accept("}"):
        key = p.expect("name", "entry")
        if key.value == "dims":
            dims = [p.expect("int", "dimension").value for _ in range(3)]
            p.expect(";")
        elif key.value == "sign":
            s = p.expect("name", "plus|minus")
            if s.value not in ("plus", "minus"):
                p.fail("sign must be plus or minus", s)
            sign = s.value
            p.expect(";")
        else:
            p.fail("unknown dvb entry %r" % key.value, key)
    if dims is None:
        p.fail("dvb %s has no dims" % nametok.value, nametok)
    model.add("dvb", nametok.value,
              DecomposedDVB(dims[0], dims[1], dims[2], sign=sign), nametok)


# -- printing --------------------------------------------------------------

def _section_str(coeffs, frame_prefix="e"):
    parts = []
    for k, c in enumerate(coeffs):
        if not c.is_zero:
            parts.append("(%s)*%s%d" % (c, frame_prefix, k + 1))
    return " + ".join(parts) if parts else "0"


def _print_algebroid(name, A):
    lines = ["algebroid %s {" % name]
    lines.append("  base%s;" % ("".join(" " + v for v in A.base_vars)))
    lines.append("  rank %d;" % A.rank)
    for i in range(A.rank):
        if any(not c.is_zero for c in A.anchor[i]):
            lines.append("  anchor [%d] = %s;" % (i + 1,
                         ", ".join(str(c) for c in A.anchor[i])))
    for i in range(A.rank):
        for j in range(i + 1, A.rank):
            br = A.struct(i, j)
            if any(not c.is_zero for c in br):
                lines.append("  bracket [%d,%d] = %s;" % (i + 1, j + 1,
                                                          _section_str(br)))
    lines.append("}")
    return "\n".join(lines)


def _matrix_str(rows):
    return "[" + ", ".join("[" + ", ".join(str(c) for c in row) + "]"
                           for row in rows) + "]"


def print_model(model: ModelFile) -> str:
    """Canonical text for a model; parsing it back gives an equal model."""
    chunks = []
    names_of = {id(obj): nm for nm, obj in model.objects.items()}
    for kind, name in model.order:
        obj = model.objects[name]
        if kind == "algebroid":
            chunks.append(_print_algebroid(name, obj))
        elif kind == "rep":
            actor_name = names_of.get(id(obj.actor), "?")
            carrier_name = getattr(obj, "carrier_ref", None) or next(
                (nm for (k2, nm) in model.order
                 if k2 == "algebroid"
                 and model.objects[nm].rank == obj.carrier_rank
                 and model.objects[nm].frame_names == obj.carrier_names),
                "?")
            lines = ["rep %s %s on %s {" % (name, actor_name, carrier_name)]
            for i, M in enumerate(obj.matrices):
                if any(not c.is_zero for row in M for c in row):
                    lines.append("  e%d = %s;" % (i + 1, _matrix_str(M)))
            lines.append("}")
            chunks.append("\n".join(lines))
        elif kind == "matchedpair":
            chunks.append("matchedpair %s { A = %s; B = %s; rho = %s; sigma = %s; }"
                          % (name, names_of.get(id(obj.A), "?"),
                             names_of.get(id(obj.B), "?"),
                             names_of.get(id(obj.rho), "?"),
                             names_of.get(id(obj.sigma), "?")))
        elif kind == "bialgebroid":
            chunks.append("bialgebroid %s { E = %s; Estar = %s; pairing = %s; }"
                          % (name, names_of.get(id(obj.E), "?"),
                             names_of.get(id(obj.Estar), "?"),
                             _matrix_str([[poly(x) for x in row]
                                          for row in obj.pairing])))
        elif kind == "manin":
            chunks.append("manin %s { g = %s; gstar = %s; }"
                          % (name, names_of.get(id(obj.g), "?"),
                             names_of.get(id(obj.gstar), "?")))
        elif kind == "poisson":
            lines = ["poisson %s {" % name]
            lines.append("  vars%s;" % ("".join(" " + v for v in obj.vars)))
            for (a, b), val in sorted(obj.table.items()):
                lines.append("  pi [%s,%s] = %s;" % (a, b, val))
            lines.append("}")
            chunks.append("\n".join(lines))
        elif kind == "dvb":
            chunks.append("dvb %s { dims %d %d %d; sign %s; }"
                          % (name, obj.dim_h, obj.dim_v, obj.dim_k, obj.sign))
    return "\n\n".join(chunks) + ("\n" if chunks else "")
