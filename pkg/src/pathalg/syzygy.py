"""First syzygies in right-multiple-reduced form and degree windows for resolution terms.

The kernel of (free module over kQ) -> P_0 -> X is generated, degree by
degree, by two kinds of elements: the survivors, whose normal form is
nonzero in P_0 (found as new leading coordinates of the relation
submodule), and the absorbed ones lying in (free module) * I (of the
shape generator * u * g for a basis element g).  The combined tip set is
normalized so that no tip path is a left divisor of another within the
same generator component; rewriting by right multiples is then confluent
and representations are unique.

Windows: the n-th term of the minimal resolution of X is generated in
degrees inside [dmin + min quasi length, dmax + max quasi length] read at
chain level n-1 (and inside the wider overlap-derived interval), where
dmin and dmax are the extreme survivor degrees.  Level n-1 is the
convention validated by the oracle; the literal level-n reading is
available for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import inf

from .algebra import AlgebraElement, ModuleElement, module_normal_form, tip
from .errors import PathAlgError
from .oracle import CoverSpace, FreeSummand, GradedAlgebraModel, span_from_seeds
from .overlaps import OverlapTable
from .presentation import ModulePresentation
from .order import OrderSpec
from .quiver import Path, divides, divides_left


@dataclass(frozen=True)
class FirstSyzygy:
    """Right-multiple-reduced kernel generators of the presentation cover."""

    survivors: tuple[ModuleElement, ...]
    survivor_tips: tuple[tuple[int, Path], ...]
    absorbed: tuple[ModuleElement, ...]
    min_degree: int | None
    max_degree: int | None
    degree_cap: int
    alive_at_cap: bool

    def combined(self) -> tuple[ModuleElement, ...]:
        return self.survivors + self.absorbed


def first_syzygy(pres: ModulePresentation, model: GradedAlgebraModel, degree_cap: int) -> FirstSyzygy:
    """Kernel generators of V -> P_0 -> X through degree_cap, split by survival.

    Survivor tips are the orbit-minimal leading coordinates of the relation
    submodule inside P_0 (normal-word coordinates); absorbed elements have
    the explicit shape f_i * (u * g) with g in the basis, their tips being
    the words u*tip(g) whose only reducible prefix is the whole word.
    """
    quiver = model.quiver
    order = model.order
    gb = model.gb
    pres.validate(quiver)
    summands = tuple(FreeSummand(g.vertex, g.degree) for g in pres.generators)
    cover = CoverSpace(model, summands)

    rel_vecs = []
    for r in pres.relations:
        nf = module_normal_form(r, gb)
        if nf:
            rel_vecs.append(dict(nf.terms))
    pieces = span_from_seeds(cover, rel_vecs, quiver, degree_cap, [s.degree for s in summands])

    kept_tips: list[tuple[int, Path]] = []
    kept_elems: list[ModuleElement] = []
    for d in range(degree_cap + 1):
        for v in quiver.vertices:
            sub = pieces.get(d, v)
            if not sub or sub.dim == 0:
                continue
            cols = cover.coords(d, v)
            for row, piv in zip(sub.rows, sub.pivot_of_row):
                i, p = cols[piv]
                if any(j == i and divides_left(q, p) for (j, q) in kept_tips):
                    continue
                kept_tips.append((i, p))
                kept_elems.append(ModuleElement(cover.to_dict(d, v, row)))

    absorbed: list[ModuleElement] = []
    for j, g in enumerate(pres.generators):
        for length_u in range(0, min(degree_cap, model.degree_cap) + 1):
            for u in model.basis[length_u]:
                if u.source != g.vertex:
                    continue
                for elem in gb.elements:
                    t = tip(elem, order)
                    if t.source != u.target:
                        continue
                    d = g.degree + length_u + t.length
                    if d > degree_cap:
                        continue
                    w = u * t
                    if any(_contains_any(w.prefix(m), gb.tips) for m in range(1, w.length)):
                        continue
                    if any(jj == j and divides_left(q, w) for (jj, q) in kept_tips):
                        continue
                    lifted = elem.left_mul(u)
                    absorbed.append(ModuleElement({(j, p): c for p, c in lifted.terms.items()}))

    degs = [pres.generators[i].degree + p.length for (i, p) in kept_tips]
    alive = any(pieces.dim(degree_cap, v) > 0 for v in quiver.vertices)
    return FirstSyzygy(
        survivors=tuple(kept_elems),
        survivor_tips=tuple(kept_tips),
        absorbed=tuple(absorbed),
        min_degree=min(degs) if degs else None,
        max_degree=max(degs) if degs else None,
        degree_cap=degree_cap,
        alive_at_cap=bool(alive),
    )


def _contains_any(p: Path, tips) -> bool:
    return any(divides(t, p) for t in tips)


def is_tip_orbit_disjoint(elems, pres: ModulePresentation, order: OrderSpec) -> bool:
    """No element's tip extends another's by a right factor (same component)."""
    tips = [tip(e, order) for e in elems]
    for a, (ia, pa) in enumerate(tips):
        for b, (ib, pb) in enumerate(tips):
            if a != b and ia == ib and divides_left(pa, pb):
                return False
    return True


def reduce_by_right_multiples(
    h: ModuleElement, gens, order: OrderSpec
) -> tuple[dict[int, AlgebraElement], ModuleElement]:
    """Rewrite h by subtracting right multiples gens[i] * w until stuck.

    Returns ({generator index: accumulated kQ coefficient}, remainder); the
    remainder is zero exactly when h lies in the right kQ-span of the
    generators, and with orbit-disjoint tips at most one rewrite applies at
    each step, so the decomposition is unique.
    """
    gens = list(gens)
    gen_tips = [tip(g, order) for g in gens]
    coeffs: dict[int, AlgebraElement] = {}
    remainder = ModuleElement()
    work = h
    while work:
        i, p = tip(work, order)
        c = work.terms[(i, p)]
        hits = [idx for idx, (gi, gq) in enumerate(gen_tips) if gi == i and divides_left(gq, p)]
        if not hits:
            remainder = remainder + ModuleElement({(i, p): c})
            work = work - ModuleElement({(i, p): c})
            continue
        idx = hits[0]
        w = p.drop_prefix(gen_tips[idx][1])
        work = work - gens[idx].right_mul(w).scale(c)
        add = AlgebraElement({w: c})
        coeffs[idx] = coeffs.get(idx, AlgebraElement()) + add
    return coeffs, remainder


@dataclass(frozen=True)
class DegreeWindow:
    """Certified interval of generating degrees for the n-th resolution term."""

    n: int
    lo: object
    hi: object
    method: str  # "quasi" | "overlap"

    @property
    def empty(self) -> bool:
        return self.lo > self.hi  # type: ignore[operator]

    def contains(self, d: int) -> bool:
        return not self.empty and self.lo <= d <= self.hi  # type: ignore[operator]

    def as_tuple(self) -> tuple:
        return (self.lo, self.hi)


def degree_window(
    n: int,
    dmin: int | None,
    dmax: int | None,
    table: OverlapTable,
    method: str = "quasi",
    literal_level: bool = False,
) -> DegreeWindow:
    """Window for P_n from the chain table of the basis tips.

    dmin and dmax are the extreme survivor degrees of the first syzygy.
    The default pairing reads chain level n-1 (n = 1 gives exactly
    [dmin, dmax], the tautology of the presentation); `literal_level` reads
    level n instead, for comparison.  No survivors (dmin is None) predicts
    the zero module for all n >= 1.
    """
    if n < 1:
        raise PathAlgError("windows are defined for n >= 1")
    if method not in ("quasi", "overlap"):
        raise PathAlgError(f"unknown window method {method!r}")
    if dmin is None or dmax is None:
        return DegreeWindow(n, inf, -inf, method)
    level = n if literal_level else n - 1
    if level > table.depth:
        raise PathAlgError(f"table depth {table.depth} is too shallow for n={n}")
    if not literal_level and n == 1:
        return DegreeWindow(n, dmin, dmax, method)
    mino, maxo, minq, maxq = table.extrema(level)
    if method == "quasi":
        lo, hi = dmin + minq, dmax + maxq
    else:
        lo, hi = dmin + mino - table.pattern_length + 1, dmax + maxo - 1
    if hi == -inf or lo == inf:
        return DegreeWindow(n, inf, -inf, method)
    return DegreeWindow(n, lo, hi, method)


def window_consistency(qo_window: DegreeWindow, o_window: DegreeWindow) -> bool:
    """The quasi-chain window always sits inside the overlap window."""
    if qo_window.empty:
        return True
    if o_window.empty:
        return False
    return o_window.lo <= qo_window.lo and qo_window.hi <= o_window.hi
