"""Elements of kQ and of free right kQ-modules, normal forms, and Groebner bases.

An AlgebraElement is a finite map from parallel paths to nonzero scalars.
A ModuleElement is a finite map from (generator index, path) pairs to
nonzero scalars; generator metadata lives with the module presentation.

The reduced Groebner basis of a homogeneous ideal I inside (kQ_{>0})^2 is
computed by overlap completion, truncated at a caller-supplied degree; the
completeness status is part of the result.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import PathAlgError, TruncatedBasisError
from .order import OrderSpec
from .quiver import Path, Quiver, divides, factorizations


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


class AlgebraElement:
    """A k-linear combination of parallel paths (or the zero element)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Path, object] | None = None):
        self.terms: dict[Path, object] = _clean(terms or {})
        endpoints = {(p.source, p.target) for p in self.terms}
        if len(endpoints) > 1:
            raise PathAlgError("support paths must be parallel")

    @classmethod
    def from_path(cls, p: Path, coeff) -> "AlgebraElement":
        return cls({p: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p)
            out[p] = c if s is None else s + c
        return AlgebraElement(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        if not c:
            return AlgebraElement()
        return AlgebraElement({p: coeff * c for p, coeff in self.terms.items()})

    def left_mul(self, u: Path) -> "AlgebraElement":
        return AlgebraElement({u * p: c for p, c in self.terms.items() if u.target == p.source})

    def right_mul(self, v: Path) -> "AlgebraElement":
        return AlgebraElement({p * v: c for p, c in self.terms.items() if p.target == v.source})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        out: dict[Path, object] = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                if p.target == q.source:
                    key = p * q
                    prev = out.get(key)
                    val = c * d
                    out[key] = val if prev is None else prev + val
        return AlgebraElement(out)

    def degree(self) -> int:
        """Common length of the support paths; raises if inhomogeneous or zero."""
        lengths = {p.length for p in self.terms}
        if len(lengths) != 1:
            raise PathAlgError("element is zero or inhomogeneous")
        return lengths.pop()

    def is_homogeneous(self) -> bool:
        return len({p.length for p in self.terms}) <= 1

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for p, c in sorted(self.terms.items(), key=lambda kv: str(kv[0])):
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            piece = str(p) if cs == "1" else f"{cs}*{p}"
            if not out:
                out = ("-" if neg else "") + piece
            else:
                out += (" - " if neg else " + ") + piece
        return out

    def __repr__(self):
        return f"AlgebraElement({self.render()})"


class ModuleElement:
    """An element of a free right kQ-module: map (generator index, path) -> scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, Path], object] | None = None):
        self.terms: dict[tuple[int, Path], object] = _clean(terms or {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self.terms == other.terms

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return ModuleElement(out)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + other.scale(-1)

    def scale(self, c) -> "ModuleElement":
        if not c:
            return ModuleElement()
        return ModuleElement({k: coeff * c for k, coeff in self.terms.items()})

    def right_mul(self, v: Path) -> "ModuleElement":
        return ModuleElement({(i, p * v): c for (i, p), c in self.terms.items() if p.target == v.source})

    def right_mul_elem(self, x: AlgebraElement) -> "ModuleElement":
        out = ModuleElement()
        for q, d in x.terms.items():
            out = out + self.right_mul(q).scale(d)
        return out

    def target_vertices(self) -> set[str]:
        return {p.target for _, p in self.terms}

    def render(self, gen_names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"

        def name(i: int) -> str:
            return gen_names[i] if gen_names else f"g{i}"

        out = ""
        for (i, p), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            word = name(i) if p.is_vertex else f"{name(i)}*{p}"
            piece = word if cs == "1" else f"{cs}*{word}"
            if not out:
                out = ("-" if neg else "") + piece
            else:
                out += (" - " if neg else " + ") + piece
        return out

    def __repr__(self):
        return f"ModuleElement({self.render()})"


def tip(x: AlgebraElement | ModuleElement, order: OrderSpec):
    """The maximal support item; a Path for algebra elements, (i, Path) for module ones."""
    if not x.terms:
        raise PathAlgError("the zero element has no tip")
    if isinstance(x, AlgebraElement):
        return max(x.terms, key=order.path_key)
    return max(x.terms, key=order.module_key)


def monic(x, order: OrderSpec):
    c = x.terms[tip(x, order)]
    one = c / c
    return x if c == one else x.scale(one / c)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[AlgebraElement, ...]
    tips: tuple[Path, ...]
    complete: bool
    degree_bound: int
    order: OrderSpec
    # Largest proper-overlap degree among the final tips (informational).
    max_overlap_degree: int = 0

    @property
    def status(self) -> str:
        return "complete" if self.complete else f"truncated-at-degree-{self.degree_bound}"

    def require_complete(self) -> None:
        if not self.complete:
            raise TruncatedBasisError(
                f"a complete Groebner basis is required; this one is {self.status}"
            )


def _find_reduction(p: Path, elems: list[AlgebraElement], tips_: list[Path]):
    for g, t in zip(elems, tips_):
        occ = factorizations(t, p)
        if occ:
            u, v = occ[0]
            return g, u, v
    return None


def normal_form(x: AlgebraElement, basis, order: OrderSpec) -> AlgebraElement:
    """Rewrite x until no support path is divisible by a basis tip.

    `basis` may be a GroebnerBasis or any iterable of monic elements; x minus
    the result lies in the two-sided ideal generated by the basis.
    Termination follows from the order being a well-order.
    """
    elems = list(basis.elements) if isinstance(basis, GroebnerBasis) else [g for g in basis if g]
    tips_ = [tip(g, order) for g in elems]
    terms = dict(x.terms)
    while True:
        hit = None
        for p in sorted(terms, key=order.path_key, reverse=True):
            red = _find_reduction(p, elems, tips_)
            if red is not None:
                hit = (p, red)
                break
        if hit is None:
            return AlgebraElement(terms)
        p, (g, u, v) = hit
        c = terms[p]
        for q, d in g.left_mul(u).right_mul(v).scale(c).terms.items():
            s = terms.get(q)
            val = -d if s is None else s - d
            if val:
                terms[q] = val
            else:
                terms.pop(q, None)


def module_normal_form(m: ModuleElement, gb: GroebnerBasis) -> ModuleElement:
    """Componentwise reduction; zero exactly when m lies in (free module) * I."""
    by_gen: dict[int, dict[Path, object]] = {}
    for (i, p), c in m.terms.items():
        by_gen.setdefault(i, {})[p] = c
    out: dict[tuple[int, Path], object] = {}
    for i, terms in by_gen.items():
        red = normal_form(AlgebraElement(terms), gb, gb.order)
        for p, c in red.terms.items():
            out[(i, p)] = c
    return ModuleElement(out)


def _overlap_sites(ta: Path, tb: Path) -> list[tuple[str, int]]:
    """Proper overlap sites between two tips.

    ("suffix", k): the length-k suffix of ta equals the length-k proper
    prefix of tb (k <= len(ta), k < len(tb)); the ambiguity word is
    ta glued with tb sharing k arrows.
    ("contain", i): tb occurs inside ta at offset i with tb != ta.
    """
    out: list[tuple[str, int]] = []
    for k in range(1, min(ta.length, tb.length - 1) + 1):
        if ta.arrows[ta.length - k:] == tb.arrows[:k]:
            out.append(("suffix", k))
    if tb.length < ta.length:
        for i in range(ta.length - tb.length + 1):
            if ta.arrows[i:i + tb.length] == tb.arrows:
                out.append(("contain", i))
    return out


def _s_element(a: AlgebraElement, b: AlgebraElement, ta: Path, tb: Path, kind: str, pos: int) -> AlgebraElement:
    if kind == "suffix":
        k = pos
        vtail = tb.suffix(tb.length - k)
        uhead = ta.prefix(ta.length - k)
        return a.right_mul(vtail) - b.left_mul(uhead)
    u = ta.prefix(pos)
    v = ta.suffix(ta.length - pos - tb.length)
    return a - b.left_mul(u).right_mul(v)


def _validate_generators(generators: Iterable[AlgebraElement]) -> list[AlgebraElement]:
    gens = [g for g in generators if g]
    for g in gens:
        if not g.is_homogeneous():
            raise PathAlgError(f"inhomogeneous generator: {g.render()}")
        if g.degree() < 2:
            raise PathAlgError("ideal generators must have degree >= 2")
    return gens


def _pair_list(basis: list[AlgebraElement], order: OrderSpec):
    pairs = []
    for ia, a in enumerate(basis):
        ta = tip(a, order)
        for ib, b in enumerate(basis):
            tb = tip(b, order)
            for kind, pos in _overlap_sites(ta, tb):
                deg = ta.length + tb.length - pos if kind == "suffix" else ta.length
                pairs.append((deg, ia, ib, kind, pos))
    pairs.sort()
    return pairs


def groebner_basis(generators: Iterable[AlgebraElement], order: OrderSpec, max_degree: int) -> GroebnerBasis:
    """Overlap completion up to max_degree, returning the reduced basis.

    The status is `complete` exactly when every proper overlap among the
    final tips has degree <= max_degree (each such S-element is known to
    reduce to zero when the loop exits); all-monomial bases are certified
    complete outright since their S-elements vanish identically.
    """
    gens = _validate_generators(generators)
    if gens and max_degree < max(g.degree() for g in gens):
        raise PathAlgError("max_degree must be at least the largest generator degree")

    basis: list[AlgebraElement] = []
    for g in gens:
        h = normal_form(g, basis, order)
        if h:
            basis.append(monic(h, order))

    for _round in range(10000):
        added = False
        processed: set[tuple] = set()
        scanning = True
        while scanning:
            scanning = False
            for deg, ia, ib, kind, pos in _pair_list(basis, order):
                key = (ia, ib, kind, pos)
                if key in processed:
                    continue
                processed.add(key)
                if deg > max_degree:
                    continue
                a, b = basis[ia], basis[ib]
                h = normal_form(_s_element(a, b, tip(a, order), tip(b, order), kind, pos), basis, order)
                if h:
                    if h.degree() < 2:
                        raise PathAlgError("completion produced an element of degree < 2")
                    basis.append(monic(h, order))
                    added = True
                    scanning = True
                    break

        reduced = False
        shrinking = True
        while shrinking:
            shrinking = False
            for i in range(len(basis)):
                rest = basis[:i] + basis[i + 1:]
                h = normal_form(basis[i], rest, order)
                if not h:
                    basis.pop(i)
                    reduced = shrinking = True
                    break
                h = monic(h, order)
                if h != basis[i]:
                    basis[i] = h
                    reduced = shrinking = True
                    break

        if not (added or reduced):
            break
    else:
        raise PathAlgError("completion did not stabilize")

    basis.sort(key=lambda g: order.path_key(tip(g, order)))
    tips_ = tuple(tip(g, order) for g in basis)
    all_monomial = all(len(g.terms) == 1 for g in basis)
    max_overlap = max((deg for deg, *_ in _pair_list(basis, order)), default=0)
    complete = all_monomial or max_overlap <= max_degree
    return GroebnerBasis(tuple(basis), tips_, complete, max_degree, order, max_overlap)


def contains_tip_factor(p: Path, tips: Iterable[Path]) -> bool:
    return any(divides(t, p) for t in tips)


def normal_words(quiver: Quiver, tips: Iterable[Path], d: int) -> list[Path]:
    """All length-d paths containing no tip as a factor (a basis of A_d)."""
    tips = list(tips)
    if d == 0:
        return [quiver.vertex_path(v) for v in quiver.vertices]

    def clean_end(word: Path) -> bool:
        # Only suffixes can newly contain a tip after extending by one arrow.
        for t in tips:
            if t.length <= word.length and word.arrows[word.length - t.length:] == t.arrows:
                return False
        return True

    frontier = [w for w in (Path((a,)) for a in quiver.arrows) if clean_end(w)]
    for _ in range(d - 1):
        nxt = []
        for w in frontier:
            for a in quiver.arrows:
                if a.source == w.target:
                    ext = Path(w.arrows + (a,))
                    if clean_end(ext):
                        nxt.append(ext)
        frontier = nxt
    return frontier
