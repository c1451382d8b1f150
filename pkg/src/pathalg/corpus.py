"""Seeded random instances for property suites: quivers, reduced monomial
pattern sets, and module presentations.  Everything is driven by a
random.Random so corpora are reproducible from a single seed."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import AlgebraElement, ModuleElement, normal_words
from .fields import Field
from .presentation import Generator, ModulePresentation
from .quiver import Arrow, Path, Quiver, divides


def random_quiver(rng: random.Random, max_vertices: int = 3, max_arrows: int = 4) -> Quiver:
    nv = rng.randint(1, max_vertices)
    vertices = tuple(f"v{i}" for i in range(nv))
    na = rng.randint(1, max_arrows)
    arrows = []
    for i in range(na):
        src = rng.choice(vertices)
        tgt = rng.choice(vertices)
        arrows.append(Arrow(f"a{i}", src, tgt))
    return Quiver(vertices, tuple(arrows))


def random_walk(rng: random.Random, quiver: Quiver, length: int) -> Path | None:
    starts = [a for a in quiver.arrows]
    if not starts:
        return None
    word = [rng.choice(starts)]
    while len(word) < length:
        nxt = [a for a in quiver.arrows if a.source == word[-1].target]
        if not nxt:
            return None
        word.append(rng.choice(nxt))
    return Path(tuple(word))


def random_reduced_patterns(
    rng: random.Random,
    quiver: Quiver,
    max_size: int = 5,
    min_length: int = 2,
    max_length: int = 4,
    attempts: int = 60,
) -> list[Path]:
    """A nonempty reduced set of paths with lengths in [min_length, max_length]."""
    target = rng.randint(1, max_size)
    chosen: list[Path] = []
    for _ in range(attempts):
        if len(chosen) >= target:
            break
        p = random_walk(rng, quiver, rng.randint(min_length, max_length))
        if p is None:
            continue
        if any(divides(p, q) or divides(q, p) for q in chosen):
            continue
        chosen.append(p)
    return chosen


@dataclass(frozen=True)
class CorpusInstance:
    seed: int
    quiver: Quiver
    patterns: tuple[Path, ...]


def instances(seed: int, count: int, **kwargs) -> list[CorpusInstance]:
    """Deterministic corpus: quivers with a reduced monomial pattern set each."""
    out = []
    rng = random.Random(seed)
    while len(out) < count:
        sub_seed = rng.randrange(1 << 30)
        sub = random.Random(sub_seed)
        quiver = random_quiver(sub, kwargs.get("max_vertices", 3), kwargs.get("max_arrows", 4))
        pats = random_reduced_patterns(
            sub,
            quiver,
            kwargs.get("max_size", 5),
            kwargs.get("min_length", 2),
            kwargs.get("max_length", 4),
        )
        if not pats:
            continue
        out.append(CorpusInstance(sub_seed, quiver, tuple(pats)))
    return out


def normal_word_dims_ok(quiver: Quiver, patterns, degree_cap: int, block_cap: int = 220) -> bool:
    """Reject instances whose graded pieces would outgrow desk scale."""
    for d in range(degree_cap + 1):
        if len(normal_words(quiver, list(patterns), d)) > block_cap:
            return False
    return True


def random_homogeneous_element(
    rng: random.Random, quiver: Quiver, field: Field, degree: int, terms: int = 2
) -> AlgebraElement:
    """A random homogeneous element (possibly zero if no parallel paths exist)."""
    paths = quiver.paths_of_length(degree)
    rng.shuffle(paths)
    if not paths:
        return AlgebraElement()
    anchor = paths[0]
    parallel = [p for p in paths if (p.source, p.target) == (anchor.source, anchor.target)]
    combo = {}
    for p in parallel[:terms]:
        combo[p] = field.of(rng.randint(-3, 3)) if rng.random() < 0.8 else field.of(1)
    return AlgebraElement(combo)


def random_presentation(
    rng: random.Random,
    quiver: Quiver,
    field: Field,
    max_generators: int = 3,
    max_relations: int = 3,
    max_gen_degree: int = 1,
    max_rel_degree: int = 4,
) -> ModulePresentation:
    """A random graded presentation with relations inside the radical."""
    ngens = rng.randint(1, max_generators)
    gens = tuple(
        Generator(f"m{i}", rng.choice(quiver.vertices), rng.randint(0, max_gen_degree))
        for i in range(ngens)
    )
    rels = []
    for _ in range(rng.randint(1, max_relations)):
        deg = rng.randint(max(g.degree for g in gens) + 1, max(g.degree for g in gens) + max_rel_degree)
        terms: dict[tuple[int, Path], object] = {}
        for i, g in enumerate(gens):
            length = deg - g.degree
            if length < 1:
                continue
            for p in quiver.paths_of_length(length):
                if p.source != g.vertex:
                    continue
                if rng.random() < 0.35:
                    terms[(i, p)] = field.of(rng.choice([-2, -1, 1, 2, 3]))
        if terms:
            rels.append(ModuleElement(terms))
    return ModulePresentation(gens, tuple(rels))
