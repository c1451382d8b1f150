"""Overlap chains of a reduced set of paths and their left-context variants.

Level 0 overlaps are the arrows and level 1 overlaps are the pattern set S
itself; a level-n word extends its unique level-(n-1) predecessor so that
the new pattern occurrence sticks out past the predecessor's end and no
stray pattern occurrence appears in between.  The "quasi" side carries a
nonempty phantom left context v: level 1 entries are the proper splits
v*w of patterns, and deeper levels extend w while v stays fixed.

Cut decompositions are searched by brute force over segmentations and
serve as an independent membership oracle for the recursive enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import inf
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotReducedError, PathAlgError
from .quiver import Path, Quiver, divides, divides_left, divides_right, is_reduced


def tail_is_pattern_free(q: Path, p: Path, patterns: Sequence[Path]) -> bool:
    """With p = q * u, true when no pattern divides the tail u."""
    u = p.drop_prefix(q)
    return not any(divides(s, u) for s in patterns)


def tail_first_hit_at_end(q: Path, p: Path, patterns: Sequence[Path]) -> bool:
    """With p = q * u: u contains a pattern, but every proper prefix of u is clean.

    Equivalently the earliest pattern occurrence in u ends exactly at the end
    of p; for a reduced pattern set this means a unique pattern is a suffix
    of u and nothing shorter hits.
    """
    u = p.drop_prefix(q)
    if tail_is_pattern_free(q, p, patterns):
        return False
    for k in range(u.length):
        prefix = u.prefix(k)
        if any(divides(s, prefix) for s in patterns):
            return False
    return True


@dataclass
class OverlapTable:
    """Levelwise overlap and quasi-overlap words with predecessor links."""

    quiver: Quiver
    patterns: tuple[Path, ...]
    # levels[n] maps word -> its level-(n-1) predecessor; level 0 maps to None.
    levels: list[dict[Path, Optional[Path]]] = field(default_factory=list)
    # quasi_levels[n] maps (word, context) -> predecessor word (same context).
    quasi_levels: list[dict[tuple[Path, Path], Optional[Path]]] = field(default_factory=list)
    has_quasi: bool = True
    word_capped: bool = False

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def pattern_length(self) -> int:
        return max((s.length for s in self.patterns), default=0)

    def overlaps(self, n: int) -> list[Path]:
        return sorted(self.levels[n], key=lambda p: (p.length, str(p)))

    def quasi(self, n: int) -> list[tuple[Path, Path]]:
        return sorted(self.quasi_levels[n], key=lambda wv: (wv[0].length, str(wv[0]), str(wv[1])))

    def predecessor(self, n: int, w: Path) -> Optional[Path]:
        return self.levels[n][w]

    def quasi_predecessor(self, n: int, w: Path, v: Path) -> Optional[Path]:
        return self.quasi_levels[n][(w, v)]

    def chain(self, n: int, w: Path, i: int) -> Path:
        """The unique level-i left divisor of the level-n word w (0 <= i <= n)."""
        cur, level = w, n
        while level > i:
            cur = self.levels[level][cur]  # type: ignore[assignment]
            level -= 1
        return cur

    def quasi_chain(self, n: int, w: Path, v: Path, i: int) -> Path:
        cur, level = w, n
        while level > i:
            cur = self.quasi_levels[level][(cur, v)]  # type: ignore[assignment]
            level -= 1
        return cur

    def extrema(self, n: int) -> tuple:
        """(min overlap len, max overlap len, min quasi len, max quasi len) with +-inf on empty levels."""
        if n > self.depth:
            raise PathAlgError(f"table depth {self.depth} < requested level {n}")
        olens = [w.length for w in self.levels[n]]
        qlens = [w.length for (w, _v) in self.quasi_levels[n]] if self.has_quasi else []
        mino = min(olens) if olens else inf
        maxo = max(olens) if olens else -inf
        minq = min(qlens) if qlens else inf
        maxq = max(qlens) if qlens else -inf
        return (mino, maxo, minq, maxq)

    def quasi_length_bound(self, n: int) -> tuple:
        """Certified interval containing every level-n quasi-overlap length.

        Derived from the overlap extrema: [mino_n - len(S) + 1, maxo_n - 1],
        empty (lo > hi) when the overlap level is empty.
        """
        mino, maxo, _, _ = self.extrema(n)
        return (mino - self.pattern_length + 1, maxo - 1)


def compose_bounds(extrema_n: tuple, extrema_m: tuple, pattern_length: int) -> tuple:
    """Bounds at level n+m from overlap extrema at levels n and m.

    Returns (lower bound for min length, upper bound for max length), with
    saturating +-inf arithmetic on empty levels.
    """
    mino_n, maxo_n = extrema_n[0], extrema_n[1]
    mino_m, maxo_m = extrema_m[0], extrema_m[1]
    return (mino_n + mino_m - pattern_length + 1, maxo_n + maxo_m - 1)


def _check_patterns(patterns: Iterable[Path]) -> tuple[Path, ...]:
    pats = tuple(patterns)
    if not is_reduced(pats):
        raise NotReducedError("the pattern set must be reduced")
    return pats


def _candidates(w1: Path, patterns: Sequence[Path]) -> Iterable[tuple[Path, Path]]:
    """Extensions of w1 by a pattern ending at least one arrow past w1's end."""
    for s in patterns:
        for k in range(1, min(s.length - 1, w1.length) + 1):
            if w1.arrows[w1.length - k:] == s.arrows[:k]:
                yield Path(w1.arrows + s.arrows[k:]), s


def enumerate_overlaps(
    quiver: Quiver,
    patterns: Iterable[Path],
    max_level: int,
    quasi: bool = True,
    max_word_length: int | None = None,
) -> OverlapTable:
    """Exact level-by-level enumeration up to max_level.

    Each level-n candidate extends a level-(n-1) word w1 by a pattern
    aligned to end strictly beyond w1's end, and is kept iff w1's tail in
    the candidate is pattern-free while the level-(n-2) predecessor's tail
    hits a pattern only at the very end.  Predecessor uniqueness is
    asserted on every level.
    """
    pats = _check_patterns(patterns)
    table = OverlapTable(quiver, pats, has_quasi=quasi)

    table.levels.append({Path((a,)): None for a in quiver.arrows})
    if max_level >= 1:
        table.levels.append({s: s.prefix(1) for s in pats})
    for n in range(2, max_level + 1):
        prev = table.levels[n - 1]
        found: dict[Path, Path] = {}
        for w1 in prev:
            w2 = prev[w1]
            assert w2 is not None
            for w, _s in _candidates(w1, pats):
                if max_word_length is not None and w.length > max_word_length:
                    table.word_capped = True
                    continue
                if not tail_is_pattern_free(w1, w, pats):
                    continue
                if not tail_first_hit_at_end(w2, w, pats):
                    continue
                if w in found and found[w] != w1:
                    raise AssertionError(f"predecessor uniqueness violated at level {n} for {w}")
                found[w] = w1
        table.levels.append(dict(found))

    if quasi:
        seeds: dict[tuple[Path, Path], Optional[Path]] = {}
        for s in pats:
            for j in range(1, s.length):
                v = s.prefix(j)
                seeds[(Path(vertex=v.target), v)] = None
        table.quasi_levels.append(seeds)
        if max_level >= 1:
            q1: dict[tuple[Path, Path], Optional[Path]] = {}
            for s in pats:
                for j in range(1, s.length):
                    v, w = s.prefix(j), s.suffix(s.length - j)
                    q1[(w, v)] = Path(vertex=v.target)
            table.quasi_levels.append(q1)
        for n in range(2, max_level + 1):
            prev_q = table.quasi_levels[n - 1]
            found_q: dict[tuple[Path, Path], Path] = {}
            for (w1, v) in prev_q:
                w2 = prev_q[(w1, v)]
                assert w2 is not None
                for w, _s in _candidates(w1, pats):
                    if max_word_length is not None and w.length > max_word_length:
                        table.word_capped = True
                        continue
                    if not tail_is_pattern_free(w1, w, pats):
                        continue
                    if not tail_first_hit_at_end(w2, w, pats):
                        continue
                    key = (w, v)
                    if key in found_q and found_q[key] != w1:
                        raise AssertionError(f"predecessor uniqueness violated at quasi level {n} for {key}")
                    found_q[key] = w1
            table.quasi_levels.append(dict(found_q))
    else:
        table.quasi_levels = [dict() for _ in table.levels]

    return table


@dataclass(frozen=True)
class Partition:
    """Cut pieces w = u1 v1 u2 ... v_{n-1} un (contexts v0 and the final vertex implicit)."""

    u: tuple[Path, ...]
    v: tuple[Path, ...]

    def u_names(self) -> tuple[str, ...]:
        return tuple(str(p) for p in self.u)

    def v_names(self) -> tuple[str, ...]:
        return tuple(str(p) for p in self.v)


def check_partition(
    w: Path,
    n: int,
    patterns: Sequence[Path],
    u_parts: Sequence[Path],
    v_parts: Sequence[Path],
    context: Path | None = None,
) -> bool:
    """Validate the cut conditions for the given pieces.

    `context` None means the plain overlap reading (v0 is the source
    vertex; the first piece must be nonempty when n <= 2); a nonempty
    context means the quasi reading (first piece must be nonempty only
    when n == 1).
    """
    if len(u_parts) != n or len(v_parts) != n - 1:
        return False
    v0 = context if context is not None else Path(vertex=w.source)
    pieces: list[Path] = []
    for i in range(n - 1):
        pieces += [u_parts[i], v_parts[i]]
    pieces.append(u_parts[n - 1])
    # The pieces must reassemble w.
    try:
        whole = pieces[0]
        for piece in pieces[1:]:
            whole = whole * piece
    except PathAlgError:
        return False
    if whole != w:
        return False
    if any(v.length < 1 for v in v_parts):
        return False
    min_n_for_nonempty_head = 2 if context is None else 1
    if n <= min_n_for_nonempty_head and u_parts[0].length == 0:
        return False
    vs = [v0] + list(v_parts) + [Path(vertex=w.target)]
    for i in range(1, n + 1):
        try:
            s = (vs[i - 1] * u_parts[i - 1]) * vs[i]
        except PathAlgError:
            return False
        if s not in patterns:
            return False
    # No stray pattern may straddle an interior v_i from both sides.
    for i in range(1, n):
        vi = vs[i]
        ui = u_parts[i - 1]
        next_block = u_parts[i] * vs[i + 1]
        for s in patterns:
            for split in range(1, s.length - vi.length):
                vpart = s.prefix(split)
                mid = Path(s.arrows[split:split + vi.length])
                upart = s.suffix(s.length - split - vi.length)
                if mid != vi:
                    continue
                if divides_left(upart, next_block) and divides_right(vpart, ui):
                    return False
    return True


def _segment(w: Path, start: int, stop: int) -> Path:
    if start == stop:
        at = w.arrows[start].source if start < w.length else w.target
        return Path(vertex=at)
    return Path(w.arrows[start:stop])


def all_partitions(
    w: Path,
    n: int,
    patterns: Iterable[Path],
    context: Path | None = None,
) -> Iterator[Partition]:
    """Every segmentation of w satisfying the cut conditions.

    Independent of the recursive enumeration: membership at level n is
    equivalent to a partition existing.  The search consumes w left to
    right, forcing each block v_{i-1} u_i v_i to be a pattern, so dead
    branches die immediately.
    """
    pats = _check_patterns(patterns)
    if n < 1:
        raise PathAlgError("partitions are defined for levels n >= 1")
    v0 = context if context is not None else Path(vertex=w.source)
    head_min = 2 if context is None else 1

    def rec(pos: int, i: int, prev_v: Path, u_acc: list[Path], v_acc: list[Path]):
        remaining = w.length - pos
        if i == n:
            u_n = _segment(w, pos, w.length)
            if n <= head_min and i == 1 and u_n.length == 0:
                return
            try:
                s = prev_v * u_n
            except PathAlgError:
                return
            if s in pats:
                cand_u, cand_v = tuple(u_acc + [u_n]), tuple(v_acc)
                if check_partition(w, n, pats, cand_u, cand_v, context):
                    yield Partition(cand_u, cand_v)
            return
        for lu in range(0, remaining):
            if i == 1 and n <= head_min and lu == 0:
                continue
            u_i = _segment(w, pos, pos + lu)
            try:
                base = prev_v * u_i
            except PathAlgError:
                continue
            for lv in range(1, remaining - lu + 1):
                v_i = _segment(w, pos + lu, pos + lu + lv)
                try:
                    s = base * v_i
                except PathAlgError:
                    continue
                if s in pats:
                    yield from rec(pos + lu + lv, i + 1, v_i, u_acc + [u_i], v_acc + [v_i])

    yield from rec(0, 1, v0, [], [])


def find_partition(
    w: Path,
    n: int,
    patterns: Iterable[Path],
    context: Path | None = None,
) -> Partition | None:
    """First partition found, or None when no valid segmentation exists."""
    for part in all_partitions(w, n, patterns, context):
        return part
    return None
