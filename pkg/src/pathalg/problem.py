"""Line-oriented problem files: quiver, order, field, ideal, named modules.

The format is meant to be hand-written and diffable:

    # one loop algebra
    [quiver]
    vertex e
    arrow x : e -> e

    [order]
    arrows x > y
    vertices e

    [field]
    Q            # or: Fp 7

    [ideal]
    x*x*x - y*y*y

    [module A0]
    generator g : e @ 0
    relation g*x

    [params]
    max-n 5

Paths are '*'-joined identifiers (vertices are usable as length-0 paths);
scalars are integers or fractions p/q.  Parsing reports every diagnostic it
can find, each with a line, a column, and a stable code.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import AlgebraElement, ModuleElement
from .errors import CompositionError, PathAlgError
from .fields import Field
from .order import OrderSpec
from .presentation import Generator, ModulePresentation
from .quiver import Quiver

E_SYNTAX = "E_SYNTAX"
E_UNKNOWN_ID = "E_UNKNOWN_ID"
E_NON_COMPOSABLE = "E_NON_COMPOSABLE"
E_INHOMOGENEOUS = "E_INHOMOGENEOUS"
E_NOT_PARALLEL = "E_NOT_PARALLEL"
E_BAD_FIELD = "E_BAD_FIELD"
E_BAD_SCALAR = "E_BAD_SCALAR"
E_DUPLICATE = "E_DUPLICATE"
E_SECTION = "E_SECTION"
E_ORDER = "E_ORDER"


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    code: str
    message: str

    def render(self) -> str:
        return f"{self.line}:{self.col}: {self.code}: {self.message}"


class ParseError(PathAlgError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(d.render() for d in diagnostics))


@dataclass
class ProblemFile:
    quiver: Quiver
    order: OrderSpec
    field: Field
    ideal: list[AlgebraElement]
    modules: dict[str, ModulePresentation]
    params: dict[str, int] = dc_field(default_factory=dict)


def _split_terms(expr: str) -> list[tuple[int, str]]:
    """Split on top-level + and -, returning (sign, term-text) pairs."""
    out = []
    sign, buf = 1, ""
    for ch in expr:
        if ch in "+-":
            if buf.strip():
                out.append((sign, buf.strip()))
            sign = 1 if ch == "+" else -1
            buf = ""
        else:
            buf += ch
    if buf.strip():
        out.append((sign, buf.strip()))
    return out


def _is_scalar_token(tok: str) -> bool:
    body = tok.split("/")
    return all(part and (part.isdigit() or (part[0] in "+-" and part[1:].isdigit())) for part in body)


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.diags: list[Diagnostic] = []

    def err(self, line_no: int, col: int, code: str, message: str) -> None:
        self.diags.append(Diagnostic(line_no, col, code, message))

    def col_of(self, line_no: int, token: str) -> int:
        line = self.lines[line_no - 1]
        at = line.find(token)
        return at + 1 if at >= 0 else 1

    def parse(self) -> ProblemFile:
        sections: list[tuple[str, str, int, list[tuple[int, str]]]] = []
        current: list[tuple[int, str]] | None = None
        for no, raw in enumerate(self.lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("["):
                if not line.endswith("]"):
                    self.err(no, 1, E_SYNTAX, "unterminated section header")
                    current = None
                    continue
                header = line[1:-1].strip()
                parts = header.split(None, 1)
                kind = parts[0]
                name = parts[1].strip() if len(parts) > 1 else ""
                if kind not in ("quiver", "order", "field", "ideal", "module", "params"):
                    self.err(no, 1, E_SECTION, f"unknown section [{header}]")
                    current = None
                    continue
                if kind == "module" and not name:
                    self.err(no, 1, E_SECTION, "module sections need a name: [module <name>]")
                    current = None
                    continue
                current = []
                sections.append((kind, name, no, current))
            else:
                if current is None:
                    self.err(no, 1, E_SECTION, "content outside any section")
                else:
                    current.append((no, line))

        quiver = self._parse_quiver(sections)
        field = self._parse_field(sections)
        order = self._parse_order(sections, quiver)
        ideal = self._parse_ideal(sections, quiver, field) if quiver else []
        modules = self._parse_modules(sections, quiver, field) if quiver else {}
        params = self._parse_params(sections)
        if self.diags:
            raise ParseError(self.diags)
        assert quiver is not None and order is not None and field is not None
        return ProblemFile(quiver, order, field, ideal, modules, params)

    def _sections(self, sections, kind):
        return [s for s in sections if s[0] == kind]

    def _parse_quiver(self, sections) -> Quiver | None:
        secs = self._sections(sections, "quiver")
        if not secs:
            self.err(1, 1, E_SECTION, "missing [quiver] section")
            return None
        vertices: list[str] = []
        arrows: list[tuple[str, str, str]] = []
        for _, _, _, body in secs:
            for no, line in body:
                words = line.split()
                if words[0] == "vertex":
                    for v in words[1:]:
                        if v in vertices:
                            self.err(no, self.col_of(no, v), E_DUPLICATE, f"duplicate vertex {v}")
                        else:
                            vertices.append(v)
                    if len(words) == 1:
                        self.err(no, 1, E_SYNTAX, "vertex line needs at least one identifier")
                elif words[0] == "arrow":
                    rest = line[len("arrow"):].strip()
                    # arrow x : u -> v
                    if ":" not in rest or "->" not in rest:
                        self.err(no, 1, E_SYNTAX, "expected: arrow <name> : <source> -> <target>")
                        continue
                    name, ends = (part.strip() for part in rest.split(":", 1))
                    src, tgt = (part.strip() for part in ends.split("->", 1))
                    if not name or not src or not tgt:
                        self.err(no, 1, E_SYNTAX, "expected: arrow <name> : <source> -> <target>")
                        continue
                    if any(a[0] == name for a in arrows) or name in vertices:
                        self.err(no, self.col_of(no, name), E_DUPLICATE, f"duplicate identifier {name}")
                        continue
                    arrows.append((name, src, tgt))
                else:
                    self.err(no, 1, E_SYNTAX, f"unknown quiver line {words[0]!r}")
        for name, src, tgt in arrows:
            for endpoint in (src, tgt):
                if endpoint not in vertices:
                    self.err(1, 1, E_UNKNOWN_ID, f"arrow {name} uses undeclared vertex {endpoint}")
        if self.diags:
            return None
        try:
            return Quiver.build(vertices, arrows)
        except PathAlgError as exc:
            self.err(1, 1, E_SYNTAX, str(exc))
            return None

    def _parse_field(self, sections) -> Field | None:
        secs = self._sections(sections, "field")
        if not secs:
            return Field(0)
        _, _, hdr_no, body = secs[-1]
        if not body:
            self.err(hdr_no, 1, E_BAD_FIELD, "[field] section is empty; expected Q or Fp <prime>")
            return Field(0)
        no, line = body[0]
        words = line.split()
        if words[0] == "Q" and len(words) == 1:
            return Field(0)
        if words[0] == "Fp" and len(words) == 2 and words[1].isdigit():
            try:
                return Field(int(words[1]))
            except PathAlgError as exc:
                self.err(no, self.col_of(no, words[1]), E_BAD_FIELD, str(exc))
                return Field(0)
        self.err(no, 1, E_BAD_FIELD, f"bad field spec {line!r}; expected Q or Fp <prime>")
        return Field(0)

    def _parse_order(self, sections, quiver: Quiver | None) -> OrderSpec | None:
        if quiver is None:
            return None
        arrow_prec: list[str] | None = None
        vertex_prec: list[str] | None = None
        for _, _, _, body in self._sections(sections, "order"):
            for no, line in body:
                words = line.replace(">", " ").split()
                if not words:
                    continue
                kind, names = words[0], words[1:]
                if kind == "arrows":
                    arrow_prec = names
                elif kind == "vertices":
                    vertex_prec = names
                else:
                    self.err(no, 1, E_SYNTAX, f"unknown order line {kind!r}")
                    continue
                for ident in names:
                    known = {a.name for a in quiver.arrows} if kind == "arrows" else set(quiver.vertices)
                    if ident not in known:
                        self.err(no, self.col_of(no, ident), E_UNKNOWN_ID, f"unknown identifier {ident}")
        if arrow_prec is None:
            arrow_prec = [a.name for a in quiver.arrows]
        if vertex_prec is None:
            vertex_prec = list(quiver.vertices)
        try:
            spec = OrderSpec(tuple(arrow_prec), tuple(vertex_prec))
            spec.validate(quiver)
            return spec
        except PathAlgError as exc:
            self.err(1, 1, E_ORDER, str(exc))
            return None

    def _parse_scalar(self, field: Field, tok: str, no: int):
        try:
            return field.of(tok)
        except (ValueError, ZeroDivisionError, PathAlgError):
            self.err(no, self.col_of(no, tok), E_BAD_SCALAR, f"bad scalar {tok!r}")
            return None

    def _parse_algebra_element(self, quiver: Quiver, field: Field, expr: str, no: int) -> AlgebraElement | None:
        terms: dict = {}
        ok = True
        for sign, text in _split_terms(expr):
            toks = [t.strip() for t in text.split("*") if t.strip()]
            if not toks:
                self.err(no, 1, E_SYNTAX, "empty term")
                ok = False
                continue
            coeff = field.of(sign)
            if _is_scalar_token(toks[0]):
                sc = self._parse_scalar(field, toks[0], no)
                if sc is None:
                    ok = False
                    continue
                coeff = coeff * sc
                toks = toks[1:]
            if not toks:
                self.err(no, 1, E_SYNTAX, "a term needs a path (vertices act as length-0 paths)")
                ok = False
                continue
            known = set(quiver.vertices) | {a.name for a in quiver.arrows}
            bad = [t for t in toks if t not in known]
            if bad:
                self.err(no, self.col_of(no, bad[0]), E_UNKNOWN_ID, f"unknown identifier {bad[0]}")
                ok = False
                continue
            try:
                p = quiver.path(toks)
            except CompositionError as exc:
                self.err(no, self.col_of(no, toks[0]), E_NON_COMPOSABLE, str(exc))
                ok = False
                continue
            prev = terms.get(p)
            terms[p] = coeff if prev is None else prev + coeff
        if not ok:
            return None
        try:
            return AlgebraElement(terms)
        except PathAlgError as exc:
            self.err(no, 1, E_NOT_PARALLEL, str(exc))
            return None

    def _parse_ideal(self, sections, quiver: Quiver, field: Field) -> list[AlgebraElement]:
        out = []
        for _, _, _, body in self._sections(sections, "ideal"):
            for no, line in body:
                elem = self._parse_algebra_element(quiver, field, line, no)
                if elem is None:
                    continue
                if not elem.is_homogeneous():
                    self.err(no, 1, E_INHOMOGENEOUS, f"inhomogeneous relation {line!r}")
                    continue
                if elem:
                    out.append(elem)
        return out

    def _parse_modules(self, sections, quiver: Quiver, field: Field) -> dict[str, ModulePresentation]:
        out: dict[str, ModulePresentation] = {}
        for _, name, hdr_no, body in self._sections(sections, "module"):
            if name in out:
                self.err(hdr_no, 1, E_DUPLICATE, f"duplicate module {name}")
                continue
            gens: list[Generator] = []
            rel_lines: list[tuple[int, str]] = []
            for no, line in body:
                words = line.split(None, 1)
                if words[0] == "generator":
                    # generator g : v @ d
                    rest = words[1] if len(words) > 1 else ""
                    if ":" not in rest or "@" not in rest:
                        self.err(no, 1, E_SYNTAX, "expected: generator <name> : <vertex> @ <degree>")
                        continue
                    gname, tail = (part.strip() for part in rest.split(":", 1))
                    vtx, deg = (part.strip() for part in tail.split("@", 1))
                    if any(g.name == gname for g in gens):
                        self.err(no, self.col_of(no, gname), E_DUPLICATE, f"duplicate generator {gname}")
                        continue
                    if vtx not in quiver.vertices:
                        self.err(no, self.col_of(no, vtx), E_UNKNOWN_ID, f"unknown vertex {vtx}")
                        continue
                    try:
                        gens.append(Generator(gname, vtx, int(deg)))
                    except ValueError:
                        self.err(no, self.col_of(no, deg), E_SYNTAX, f"bad degree {deg!r}")
                elif words[0] == "relation":
                    rel_lines.append((no, words[1] if len(words) > 1 else ""))
                else:
                    self.err(no, 1, E_SYNTAX, f"unknown module line {words[0]!r}")
            gen_index = {g.name: i for i, g in enumerate(gens)}
            rels: list[ModuleElement] = []
            for no, expr in rel_lines:
                rel = self._parse_module_element(quiver, field, gens, gen_index, expr, no)
                if rel is not None and rel:
                    rels.append(rel)
            pres = ModulePresentation(tuple(gens), tuple(rels))
            try:
                pres.validate(quiver)
            except PathAlgError as exc:
                self.err(hdr_no, 1, E_INHOMOGENEOUS, str(exc))
                continue
            out[name] = pres
        return out

    def _parse_module_element(
        self, quiver: Quiver, field: Field, gens, gen_index, expr: str, no: int
    ) -> ModuleElement | None:
        if not expr.strip():
            self.err(no, 1, E_SYNTAX, "empty relation")
            return None
        terms: dict = {}
        ok = True
        for sign, text in _split_terms(expr):
            toks = [t.strip() for t in text.split("*") if t.strip()]
            coeff = field.of(sign)
            if toks and _is_scalar_token(toks[0]):
                sc = self._parse_scalar(field, toks[0], no)
                if sc is None:
                    ok = False
                    continue
                coeff = coeff * sc
                toks = toks[1:]
            if not toks or toks[0] not in gen_index:
                self.err(no, 1, E_UNKNOWN_ID, "module term must start with a generator name")
                ok = False
                continue
            gname, path_toks = toks[0], toks[1:]
            gi = gen_index[gname]
            if path_toks:
                known = set(quiver.vertices) | {a.name for a in quiver.arrows}
                bad = [t for t in path_toks if t not in known]
                if bad:
                    self.err(no, self.col_of(no, bad[0]), E_UNKNOWN_ID, f"unknown identifier {bad[0]}")
                    ok = False
                    continue
                try:
                    p = quiver.path(path_toks)
                except CompositionError as exc:
                    self.err(no, self.col_of(no, path_toks[0]), E_NON_COMPOSABLE, str(exc))
                    ok = False
                    continue
            else:
                p = quiver.vertex_path(gens[gi].vertex)
            if p.source != gens[gi].vertex:
                self.err(no, 1, E_NON_COMPOSABLE, f"path {p} does not start at {gname}'s vertex")
                ok = False
                continue
            key = (gi, p)
            prev = terms.get(key)
            terms[key] = coeff if prev is None else prev + coeff
        if not ok:
            return None
        elem = ModuleElement(terms)
        if elem:
            degs = {gens[i].degree + p.length for (i, p) in elem.terms}
            if len(degs) > 1:
                self.err(no, 1, E_INHOMOGENEOUS, f"inhomogeneous relation {expr!r}")
                return None
        return elem

    def _parse_params(self, sections) -> dict[str, int]:
        out: dict[str, int] = {}
        for _, _, _, body in self._sections(sections, "params"):
            for no, line in body:
                words = line.split()
                if len(words) != 2 or words[0] not in ("max-n", "max-degree", "seed"):
                    self.err(no, 1, E_SYNTAX, f"unknown params line {line!r}")
                    continue
                try:
                    out[words[0]] = int(words[1])
                except ValueError:
                    self.err(no, self.col_of(no, words[1]), E_SYNTAX, f"bad integer {words[1]!r}")
        return out


def parse(text: str) -> ProblemFile:
    return _Parser(text).parse()


def render(pf: ProblemFile) -> str:
    """Canonical text for a ProblemFile; parse(render(pf)) round-trips."""
    lines = ["[quiver]"]
    lines.append("vertex " + " ".join(pf.quiver.vertices))
    for a in pf.quiver.arrows:
        lines.append(f"arrow {a.name} : {a.source} -> {a.target}")
    lines.append("")
    lines.append("[order]")
    lines.append("arrows " + " > ".join(pf.order.arrow_precedence))
    lines.append("vertices " + " > ".join(pf.order.vertex_precedence))
    lines.append("")
    lines.append("[field]")
    lines.append("Q" if pf.field.characteristic == 0 else f"Fp {pf.field.characteristic}")
    lines.append("")
    lines.append("[ideal]")
    for elem in pf.ideal:
        lines.append(elem.render())
    for name, pres in pf.modules.items():
        lines.append("")
        lines.append(f"[module {name}]")
        for g in pres.generators:
            lines.append(f"generator {g.name} : {g.vertex} @ {g.degree}")
        for r in pres.relations:
            lines.append("relation " + r.render(pres.gen_names()))
    if pf.params:
        lines.append("")
        lines.append("[params]")
        for key in sorted(pf.params):
            lines.append(f"{key} {pf.params[key]}")
    return "\n".join(lines) + "\n"
