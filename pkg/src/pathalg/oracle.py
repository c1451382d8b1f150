"""Ground truth by exact graded linear algebra.

A GradedAlgebraModel holds normal-word bases of A = kQ/I per degree and the
right action of each arrow on them.  Minimal graded projective resolutions
are computed degreewise: pick minimal generators (a complement of the
radical part), map a shifted free cover onto them, take exact kernels, and
repeat.  Everything runs per (degree, target-vertex) block, with vectors
over exact scalars.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .algebra import AlgebraElement, GroebnerBasis, module_normal_form, normal_form, normal_words
from .errors import PathAlgError
from .fields import Field
from .linalg import Subspace, left_nullspace
from .presentation import ModulePresentation
from .quiver import Arrow, Path, Quiver


class GradedAlgebraModel:
    """Normal-word bases of A up to a degree cap, with cached arrow action."""

    def __init__(self, quiver: Quiver, gb: GroebnerBasis, field: Field, degree_cap: int):
        self.quiver = quiver
        self.gb = gb
        self.order = gb.order
        self.field = field
        self.degree_cap = degree_cap
        self.exact = gb.complete
        self.basis: list[list[Path]] = [normal_words(quiver, gb.tips, d) for d in range(degree_cap + 1)]
        self.index: list[dict[Path, int]] = [{w: i for i, w in enumerate(level)} for level in self.basis]
        self._act: dict[tuple[Path, str], dict[Path, object]] = {}

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.degree_cap:
            raise PathAlgError(f"degree {d} beyond the model cap {self.degree_cap}")
        return len(self.basis[d])

    def dims(self) -> list[int]:
        return [len(level) for level in self.basis]

    def act(self, w: Path, a: Arrow) -> dict[Path, object]:
        """Expansion of the class of w*a in the normal-word basis."""
        key = (w, a.name)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        if w.target != a.source:
            out: dict[Path, object] = {}
        else:
            elem = AlgebraElement({w * Path((a,)): self.field.one})
            out = dict(normal_form(elem, self.gb, self.order).terms)
        self._act[key] = out
        return out


def build_model(quiver: Quiver, gb: GroebnerBasis, field: Field, degree_cap: int) -> GradedAlgebraModel:
    return GradedAlgebraModel(quiver, gb, field, degree_cap)


@dataclass(frozen=True)
class FreeSummand:
    vertex: str
    degree: int


def _split_by_vertex(vec: dict) -> dict[str, dict]:
    out: dict[str, dict] = {}
    for (j, w), c in vec.items():
        out.setdefault(w.target, {})[(j, w)] = c
    return out


class CoverSpace:
    """Graded pieces of a shifted free module over A, blocked by target vertex."""

    def __init__(self, model: GradedAlgebraModel, summands: Sequence[FreeSummand]):
        self.model = model
        self.summands = tuple(summands)
        self._coords: dict[tuple[int, str], list[tuple[int, Path]]] = {}

    def coords(self, d: int, v: str) -> list[tuple[int, Path]]:
        key = (d, v)
        hit = self._coords.get(key)
        if hit is not None:
            return hit
        order = self.model.order
        out: list[tuple[int, Path]] = []
        for j, s in enumerate(self.summands):
            length = d - s.degree
            if 0 <= length <= self.model.degree_cap:
                for w in self.model.basis[length]:
                    if w.source == s.vertex and w.target == v:
                        out.append((j, w))
        out.sort(key=lambda jw: (order.path_key(jw[1]), jw[0]), reverse=True)
        self._coords[key] = out
        return out

    def dim(self, d: int, v: str) -> int:
        return len(self.coords(d, v))

    def act(self, vec: dict, a: Arrow) -> dict:
        out: dict[tuple[int, Path], object] = {}
        for (j, w), c in vec.items():
            if w.target != a.source:
                continue
            for w2, c2 in self.model.act(w, a).items():
                key = (j, w2)
                prev = out.get(key)
                val = c * c2
                out[key] = val if prev is None else prev + val
        return {k: c for k, c in out.items() if c}

    def to_dense(self, d: int, v: str, vec: dict) -> list:
        cols = self.coords(d, v)
        zero = self.model.field.zero
        idx = {key: i for i, key in enumerate(cols)}
        row = [zero] * len(cols)
        for key, c in vec.items():
            row[idx[key]] = c
        return row

    def to_dict(self, d: int, v: str, row: Sequence) -> dict:
        cols = self.coords(d, v)
        return {cols[i]: c for i, c in enumerate(row) if c}


class QuotientSpace:
    """A graded quotient of a CoverSpace by a degreewise subspace container.

    Coordinates of a piece are the ambient cover coordinates away from the
    subspace's pivots; the projection is echelon residue restricted there.
    """

    def __init__(self, cover: CoverSpace, sub: "GradedPieces"):
        self.cover = cover
        self.sub = sub
        self._coords: dict[tuple[int, str], list[tuple[int, Path]]] = {}

    @property
    def model(self) -> GradedAlgebraModel:
        return self.cover.model

    def coords(self, d: int, v: str) -> list[tuple[int, Path]]:
        key = (d, v)
        hit = self._coords.get(key)
        if hit is not None:
            return hit
        ambient = self.cover.coords(d, v)
        space = self.sub.get(d, v)
        pivots = set(space.row_of_pivot) if space is not None else set()
        out = [c for i, c in enumerate(ambient) if i not in pivots]
        self._coords[key] = out
        return out

    def dim(self, d: int, v: str) -> int:
        return len(self.coords(d, v))

    def project(self, d: int, v: str, vec: dict) -> dict:
        """Ambient dict vector -> quotient dict vector (residue on transversal coords)."""
        space = self.sub.get(d, v)
        if space is None or space.dim == 0:
            return dict(vec)
        dense = self.cover.to_dense(d, v, vec)
        res = space.residue(dense)
        amb = self.cover.coords(d, v)
        return {amb[i]: c for i, c in enumerate(res) if c}

    def act(self, vec: dict, a: Arrow) -> dict:
        if not vec:
            return {}
        (j0, w0) = next(iter(vec))
        d = self.cover.summands[j0].degree + w0.length
        image = self.cover.act(vec, a)
        if not image:
            return {}
        return self.project(d + 1, a.target, image)

    def to_dense(self, d: int, v: str, vec: dict) -> list:
        cols = self.coords(d, v)
        zero = self.model.field.zero
        idx = {key: i for i, key in enumerate(cols)}
        row = [zero] * len(cols)
        for key, c in vec.items():
            row[idx[key]] = c
        return row

    def to_dict(self, d: int, v: str, row: Sequence) -> dict:
        cols = self.coords(d, v)
        return {cols[i]: c for i, c in enumerate(row) if c}


class GradedPieces:
    """Per-(degree, vertex) subspaces of some graded space."""

    def __init__(self):
        self.spaces: dict[tuple[int, str], Subspace] = {}

    def get(self, d: int, v: str) -> Subspace | None:
        return self.spaces.get((d, v))

    def dim(self, d: int, v: str) -> int:
        s = self.get(d, v)
        return s.dim if s else 0

    def total_dim(self, d: int, vertices: Iterable[str]) -> int:
        return sum(self.dim(d, v) for v in vertices)

    def ensure(self, d: int, v: str, ncols: int) -> Subspace:
        key = (d, v)
        if key not in self.spaces:
            self.spaces[key] = Subspace(ncols)
        return self.spaces[key]


def span_from_seeds(space, seeds: Iterable[dict], quiver: Quiver, D: int, summand_degrees: Sequence[int]) -> GradedPieces:
    """Degreewise span of seed vectors under the right arrow action, up to degree D.

    `space` is a CoverSpace or QuotientSpace; seeds are dict vectors over
    its coordinates (mixed target vertices allowed, they are split).
    """
    by_slot: dict[tuple[int, str], list[dict]] = {}
    for vec in seeds:
        if not vec:
            continue
        (j0, w0) = next(iter(vec))
        d = summand_degrees[j0] + w0.length
        for v, part in _split_by_vertex(vec).items():
            by_slot.setdefault((d, v), []).append(part)

    pieces = GradedPieces()
    min_d = min((d for (d, _v) in by_slot), default=D + 1)
    for d in range(min_d, D + 1):
        for v in quiver.vertices:
            ncols = space.dim(d, v)
            sub = pieces.ensure(d, v, ncols)
            # Propagate from the previous degree.
            for a in quiver.arrows:
                if a.target != v:
                    continue
                prev = pieces.get(d - 1, a.source)
                if not prev or prev.dim == 0:
                    continue
                for row in prev.rows:
                    vec = space.to_dict(d - 1, a.source, row)
                    img = space.act(vec, a)
                    if img:
                        sub.add(space.to_dense(d, v, img))
            for vec in by_slot.get((d, v), []):
                sub.add(space.to_dense(d, v, vec))
    return pieces


def minimal_generators_of_pieces(space, pieces: GradedPieces, quiver: Quiver, D: int) -> list[tuple[int, str, dict]]:
    """Minimal generators of a degreewise-spanned submodule: per block, a
    complement of the image of the previous degree under the arrows, chosen
    by pivoting in the stored basis order (deterministic)."""
    gens: list[tuple[int, str, dict]] = []
    degrees = sorted({d for (d, _v) in pieces.spaces})
    for d in degrees:
        if d > D:
            continue
        for v in quiver.vertices:
            sub = pieces.get(d, v)
            if not sub or sub.dim == 0:
                continue
            rad = Subspace(sub.ncols)
            for a in quiver.arrows:
                if a.target != v:
                    continue
                prev = pieces.get(d - 1, a.source)
                if not prev or prev.dim == 0:
                    continue
                for row in prev.rows:
                    vec = space.to_dict(d - 1, a.source, row)
                    img = space.act(vec, a)
                    if img:
                        rad.add(space.to_dense(d, v, img))
            for row in sub.rows:
                if rad.add(list(row)):
                    gens.append((d, v, space.to_dict(d, v, row)))
    return gens


def full_space_pieces(space, quiver: Quiver, D: int) -> GradedPieces:
    """The whole graded space as a GradedPieces container (identity basis)."""
    pieces = GradedPieces()
    one = space.model.field.one
    zero = space.model.field.zero
    for d in range(D + 1):
        for v in quiver.vertices:
            n = space.dim(d, v)
            sub = pieces.ensure(d, v, n)
            for i in range(n):
                row = [zero] * n
                row[i] = one
                sub.add(row)
    return pieces


def kernel_pieces(
    domain: CoverSpace,
    images: Sequence[dict],
    ambient,
    quiver: Quiver,
    D: int,
) -> GradedPieces:
    """ker(free cover -> ambient) degreewise, with f_j mapping to images[j].

    Kernel vectors live over the domain coordinates.  Raises if a kernel
    vector touches a generator-top coordinate, which would mean the chosen
    generators were not minimal.
    """
    model = domain.model
    one = model.field.one
    phi: dict[tuple[int, Path], dict] = {}
    out = GradedPieces()
    if not domain.summands:
        return out
    dmin = min(s.degree for s in domain.summands)
    for d in range(dmin, D + 1):
        for v in quiver.vertices:
            cols = domain.coords(d, v)
            for (j, w) in cols:
                if w.is_vertex:
                    phi[(j, w)] = images[j]
                else:
                    prev = phi[(j, w.prefix(w.length - 1))]
                    phi[(j, w)] = ambient.act(prev, w.arrows[-1])
            if not cols:
                continue
            rows = [ambient.to_dense(d, v, phi[key]) for key in cols]
            combos = left_nullspace(rows, ambient.dim(d, v), one)
            if not combos:
                continue
            sub = out.ensure(d, v, len(cols))
            for combo in combos:
                for i, c in enumerate(combo):
                    if c and cols[i][1].is_vertex:
                        raise AssertionError("kernel meets a generator top: cover was not minimal")
                sub.add(combo)
    return out


@dataclass
class ResolutionReport:
    """Generating degrees per homological index, with the certified envelope."""

    degrees: list[list[int]]
    hilbert: list[int]
    max_n: int
    degree_cap: int
    covers: list[tuple[FreeSummand, ...]]
    syzygy_dims: list[list[int]] = dc_field(default_factory=list)
    alive_at_cap: list[bool] = dc_field(default_factory=list)
    zero_tail_from: int | None = None

    @property
    def truncated(self) -> bool:
        return any(self.alive_at_cap)

    def truncation_point(self) -> tuple[int, int] | None:
        for n, alive in enumerate(self.alive_at_cap):
            if alive:
                return (n + 1, self.degree_cap)
        return None


def minimal_resolution(pres: ModulePresentation, model: GradedAlgebraModel, N: int, D: int) -> ResolutionReport:
    """Minimal graded projective resolution of coker(relations) out to P_N, degrees <= D."""
    if D > model.degree_cap:
        raise PathAlgError("resolution degree cap exceeds the model cap")
    quiver = model.quiver
    pres.validate(quiver)
    summands = tuple(FreeSummand(g.vertex, g.degree) for g in pres.generators)
    pres_cover = CoverSpace(model, summands)
    sum_degrees = [s.degree for s in summands]

    rel_vecs = []
    for r in pres.relations:
        nf = module_normal_form(r, model.gb)
        if nf:
            rel_vecs.append(dict(nf.terms))
    rel_pieces = span_from_seeds(pres_cover, rel_vecs, quiver, D, sum_degrees)
    X = QuotientSpace(pres_cover, rel_pieces)
    hilbert = [sum(X.dim(d, v) for v in quiver.vertices) for d in range(D + 1)]

    # Homological step 0: minimal generators of X itself.
    x_pieces = full_space_pieces(X, quiver, D)
    gens = minimal_generators_of_pieces(X, x_pieces, quiver, D)

    degrees: list[list[int]] = []
    covers: list[tuple[FreeSummand, ...]] = []
    syzygy_dims: list[list[int]] = []
    alive: list[bool] = []

    ambient = X
    degrees.append(sorted(d for d, _v, _vec in gens))
    zero_tail_from = None

    for n in range(N + 1):
        cover = tuple(FreeSummand(v, d) for d, v, _vec in gens)
        covers.append(cover)
        images = [vec for _d, _v, vec in gens]
        domain = CoverSpace(model, cover)
        if not cover:
            if zero_tail_from is None:
                zero_tail_from = n
            degrees.extend([[]] * (N - n))
            alive.extend([False] * (N - n + 1))
            syzygy_dims.extend([[0] * (D + 1)] * (N - n + 1))
            break
        ker = kernel_pieces(domain, images, ambient, quiver, D)
        syzygy_dims.append([ker.total_dim(d, quiver.vertices) for d in range(D + 1)])
        alive.append(ker.total_dim(D, quiver.vertices) > 0)
        if n == N:
            break
        gens = minimal_generators_of_pieces(domain, ker, quiver, D)
        degrees.append(sorted(d for d, _v, _vec in gens))
        ambient = domain

    return ResolutionReport(
        degrees=degrees,
        hilbert=hilbert,
        max_n=N,
        degree_cap=D,
        covers=covers,
        syzygy_dims=syzygy_dims,
        alive_at_cap=alive,
        zero_tail_from=zero_tail_from,
    )


def module_hilbert(pres: ModulePresentation, model: GradedAlgebraModel, D: int) -> list[int]:
    """Graded dimensions of coker(relations) up to degree D."""
    quiver = model.quiver
    pres.validate(quiver)
    summands = tuple(FreeSummand(g.vertex, g.degree) for g in pres.generators)
    cover = CoverSpace(model, summands)
    rel_vecs = []
    for r in pres.relations:
        nf = module_normal_form(r, model.gb)
        if nf:
            rel_vecs.append(dict(nf.terms))
    rel_pieces = span_from_seeds(cover, rel_vecs, quiver, D, [s.degree for s in summands])
    X = QuotientSpace(cover, rel_pieces)
    return [sum(X.dim(d, v) for v in quiver.vertices) for d in range(D + 1)]


def ideal_membership(x: AlgebraElement, generators: Sequence[AlgebraElement], quiver: Quiver, field: Field) -> bool:
    """Exact degreewise membership of x in the two-sided ideal the generators produce.

    Brute force over all paths of the relevant degree; independent of any
    Groebner data, so it can cross-check normal-form reductions.
    """
    if not x:
        return True
    if not x.is_homogeneous():
        raise PathAlgError("membership oracle expects a homogeneous element")
    d = x.degree()
    paths = quiver.paths_of_length(d)
    idx = {p: i for i, p in enumerate(paths)}
    span = Subspace(len(paths))

    def dense(elem: AlgebraElement) -> list:
        row = [field.zero] * len(paths)
        for p, c in elem.terms.items():
            row[idx[p]] = c
        return row

    for g in generators:
        if not g:
            continue
        dg = g.degree()
        if dg > d:
            continue
        src = next(iter(g.terms)).source
        tgt = next(iter(g.terms)).target
        for i in range(d - dg + 1):
            for u in quiver.paths_of_length(i):
                if u.target != src:
                    continue
                left = g.left_mul(u)
                for v in quiver.paths_of_length(d - dg - i):
                    if v.source != tgt:
                        continue
                    span.add(dense(left.right_mul(v)))
    return span.contains(dense(x))


@dataclass(frozen=True)
class WindowVerdict:
    n: int
    method: str
    lo: object
    hi: object
    degrees: tuple[int, ...]
    ok: bool
    violations: tuple[int, ...]


def verify_windows(report: ResolutionReport, windows) -> tuple[bool, list[WindowVerdict]]:
    """PASS iff every oracle generating degree of P_n lies inside its window."""
    verdicts = []
    for w in windows:
        if w.n > report.max_n:
            continue
        degs = tuple(report.degrees[w.n])
        if w.empty:
            bad = degs
        else:
            bad = tuple(d for d in degs if not (w.lo <= d <= w.hi))
        verdicts.append(WindowVerdict(w.n, w.method, w.lo, w.hi, degs, not bad, bad))
    return all(v.ok for v in verdicts), verdicts
