"""Finite elements, the way-below oracle, and the density decomposition.

A soft set with finite domain is a finite (compact) element exactly when
each of its values has a finite complement in U.  Over a countable universe
those are the soft sets whose values are all cofinite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels, setrep
from .errors import InfiniteMode, MixedDomains, NotDirected, NotFiniteElement, SliceTooLarge
from .lattice import DEFAULT_SLICE_LIMIT, enumerate_slice, slice_size, sup
from .setrep import Atom, Kind, SubsetRep, UniverseCtx
from .softset import SoftSet, _raw, combine, leq

# 2**16 subsets of the slice is the default budget for the brute-force oracle
DEFAULT_SUBSET_BITS = 16


def is_finite_element(phi: SoftSet) -> bool:
    return all(setrep.complement_is_finite(v, phi.ctx) for _, v in phi.items)


@lru_cache(maxsize=64)
def _slice_way_below(domain: tuple, ctx: UniverseCtx) -> tuple[dict, np.ndarray]:
    elems = enumerate_slice(domain, ctx)
    index = {s: i for i, s in enumerate(elems)}
    # definitional order: a <= b iff a ⊗ b = b
    order = np.array([[combine(a, b) == b for b in elems] for a in elems], dtype=bool)
    return index, _kernels.way_below_matrix(order)


def way_below_bruteforce(
    phi: SoftSet,
    psi: SoftSet,
    *,
    slice_limit: int = DEFAULT_SLICE_LIMIT,
    max_subset_bits: int = DEFAULT_SUBSET_BITS,
) -> bool:
    """Decide phi ≪ psi in the slice S_A by enumerating its directed subsets.

    Every non-empty subset X of the slice is tested for directedness, its
    supremum is located as the least upper bound inside the slice, and the
    way-below condition is checked directly.  Exponential in |S_A|.
    """
    setrep.check_same_ctx(phi.ctx, psi.ctx)
    ctx = phi.ctx
    if not ctx.is_finite:
        raise InfiniteMode("way-below brute force needs a finite universe")
    if phi.domain != psi.domain:
        raise MixedDomains(f"labels differ: {list(phi.domain)} vs {list(psi.domain)}")
    n = slice_size(phi.domain, ctx)
    if n > slice_limit:
        raise SliceTooLarge(f"|S_A| = {n} exceeds slice limit {slice_limit}")
    if n > max_subset_bits:
        raise SliceTooLarge(f"2**{n} subsets exceeds the 2**{max_subset_bits} guard")
    index, wb = _slice_way_below(phi.domain, ctx)
    return bool(wb[index[phi], index[psi]])


class Approximant(NamedTuple):
    param: Atom | None
    excluded: tuple[Atom, ...]
    value: SoftSet


def _finite_subsets(atoms: Sequence[Atom]) -> Iterator[tuple[Atom, ...]]:
    # by size, then lexicographically in canonical atom order; empty set skipped
    for r in range(1, len(atoms) + 1):
        yield from itertools.combinations(atoms, r)


def _singletons_outside(members: frozenset) -> Iterator[tuple[Atom, ...]]:
    n = 0
    while True:
        a = str(n)
        if a not in members:
            yield (a,)
        n += 1


@dataclass(frozen=True)
class DecompositionStream:
    """Finite approximants of ``base`` whose supremum is ``base``.

    For each parameter e and each finite B ⊆ U - F(e), the approximant maps e
    to U - B and every other parameter to U.  The all-U approximant (B = ∅)
    comes first and only once; the parameters then take turns round-robin in
    canonical order, each walking its B sets by size and then
    lexicographically.  When U - F(e) is infinite that walk never leaves the
    singletons, which is still enough for the prefix suprema to converge to
    ``base`` pointwise.
    """

    base: SoftSet

    @property
    def is_complete(self) -> bool:
        """True when the stream is finite (every value has finite complement)."""
        return is_finite_element(self.base)

    def _candidates(self, e: Atom) -> Iterator[tuple[Atom, ...]]:
        v = self.base[e]
        ctx = self.base.ctx
        if ctx.is_finite or v.is_cofinite:
            return _finite_subsets(ctx.complement(v).atoms)
        return _singletons_outside(frozenset(v.atoms))

    def _approximant(self, e: Atom | None, excluded: tuple[Atom, ...]) -> SoftSet:
        ctx = self.base.ctx
        u = ctx.universe()
        h = {p: u for p in self.base.domain}
        if e is not None:
            h[e] = ctx.complement(SubsetRep(Kind.FINITE, excluded))
        return _raw(ctx, h)

    def approximants(self) -> Iterator[Approximant]:
        yield Approximant(None, (), self._approximant(None, ()))
        walks = [(e, self._candidates(e)) for e in self.base.domain]
        while walks:
            alive = []
            for e, walk in walks:
                b = next(walk, None)
                if b is None:
                    continue
                alive.append((e, walk))
                yield Approximant(e, b, self._approximant(e, b))
            walks = alive

    def __iter__(self) -> Iterator[SoftSet]:
        return (a.value for a in self.approximants())

    def take(self, k: int) -> list[SoftSet]:
        return list(itertools.islice(iter(self), k))


def density_decomposition(phi: SoftSet) -> DecompositionStream:
    return DecompositionStream(phi)


def decomposition_prefix_sup(stream: DecompositionStream, k: int) -> SoftSet:
    """Supremum of the first ``k`` approximants (all of them if fewer exist)."""
    if k < 1:
        raise ValueError("prefix length must be at least 1")
    return sup(stream.take(k))


def exclusion_chain(phi: SoftSet, param) -> Iterator[SoftSet]:
    """Approximants that keep phi elsewhere and exclude finite B at ``param``.

    This is the family used to show that a value with infinite complement
    breaks compactness: it is directed, its supremum is phi, and (when
    U - phi(param) is infinite) no member dominates phi.  B grows through
    the prefixes of U - phi(param) in canonical order, so the family is a chain.
    """
    param = setrep.normalize_atom(param)
    v = phi[param]
    ctx = phi.ctx
    f = phi.as_dict()
    if ctx.is_finite or v.is_cofinite:
        outside = ctx.complement(v).atoms
    else:
        members = set(v.atoms)
        outside = (a for a in ctx.iter_atoms() if a not in members)
    excluded: list[Atom] = []
    yield _raw(ctx, {**f, param: ctx.universe()})
    for a in outside:
        excluded.append(a)
        yield _raw(ctx, {**f, param: ctx.complement(SubsetRep(Kind.FINITE, tuple(excluded)))})


def is_directed(fam: Sequence[SoftSet]) -> bool:
    return all(
        any(leq(a, c) and leq(b, c) for c in fam)
        for a, b in itertools.combinations(fam, 2)
    )


def compactness_witness(fam: Sequence[SoftSet], phi: SoftSet) -> int | None:
    """Index of a member dominating phi, given phi ≤ sup(fam); None otherwise."""
    fam = list(fam)
    if not fam:
        raise NotDirected("the empty family is not directed")
    setrep.check_same_ctx(phi.ctx, *(m.ctx for m in fam))
    if any(m.domain != phi.domain for m in fam):
        raise MixedDomains("family members and phi must share one domain")
    if not is_finite_element(phi):
        raise NotFiniteElement(repr(phi))
    if not is_directed(fam):
        raise NotDirected("some pair has no upper bound in the family")
    if not leq(phi, sup(fam)):
        return None
    for i, m in enumerate(fam):
        if leq(phi, m):
            return i
    return None


def window_agrees(a: SoftSet, b: SoftSet, window: Iterable) -> bool:
    """Pointwise agreement of two same-domain soft sets on a finite atom window."""
    window = list(window)
    return a.domain == b.domain and all(
        (x in a[e]) == (x in b[e]) for e in a.domain for x in window
    )
