"""Suprema, per-domain bounds and meets, plus enumeration used by the oracles."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from . import setrep
from .errors import EmptyFamily, InfiniteMode, MixedDomains, SliceTooLarge
from .setrep import Kind, SubsetRep, UniverseCtx, atom_key, check_same_ctx
from .softset import SoftSet, _raw, absolute, leq, null

DEFAULT_SLICE_LIMIT = 4096


def _members(fam: Iterable[SoftSet]) -> list[SoftSet]:
    members = list(fam)
    if not members:
        raise EmptyFamily("the family is empty")
    check_same_ctx(*(m.ctx for m in members))
    return members


def sup(fam: Iterable[SoftSet]) -> SoftSet:
    """Least upper bound of a finite non-empty family.

    The domain is the union of the member domains; each parameter takes the
    intersection of the values of exactly those members that define it.
    """
    members = _members(fam)
    h: dict[str, SubsetRep] = {}
    for m in members:
        for e, v in m.items:
            h[e] = setrep.intersect(h[e], v) if e in h else v
    return _raw(members[0].ctx, h)


def is_upper_bound(psi: SoftSet, fam: Iterable[SoftSet]) -> bool:
    return all(leq(m, psi) for m in fam)


def bounds(domain: Iterable, ctx: UniverseCtx) -> tuple[SoftSet, SoftSet]:
    """(top, bottom) of the slice S_A: the null soft set and the absolute one."""
    return null(domain, ctx), absolute(domain, ctx)


def meet_fixed_domain(fam: Iterable[SoftSet]) -> SoftSet:
    members = _members(fam)
    dom = members[0].domain
    if any(m.domain != dom for m in members):
        raise MixedDomains(f"members have domains {sorted({m.domain for m in members})}")
    h = {}
    for e in dom:
        acc = members[0][e]
        for m in members[1:]:
            acc = setrep.union(acc, m[e])
        h[e] = acc
    return _raw(members[0].ctx, h)


def all_subsets(ctx: UniverseCtx) -> list[SubsetRep]:
    """Every subset of a finite universe, ordered by size then lexicographically."""
    if not ctx.is_finite:
        raise InfiniteMode("cannot enumerate P(U) over a countable universe")
    out = []
    for r in range(len(ctx.elements) + 1):
        out.extend(SubsetRep(Kind.FINITE, c) for c in itertools.combinations(ctx.elements, r))
    return out


def slice_size(domain: Sequence, ctx: UniverseCtx) -> int:
    if not ctx.is_finite:
        raise InfiniteMode("the slice is infinite over a countable universe")
    return (2 ** len(ctx.elements)) ** len(domain)


def enumerate_slice(domain: Iterable, ctx: UniverseCtx, limit: int = DEFAULT_SLICE_LIMIT) -> list[SoftSet]:
    """All soft sets with the given domain over a finite universe."""
    dom = ctx.check_params(domain)
    n = slice_size(dom, ctx)
    if n > limit:
        raise SliceTooLarge(f"|S_A| = {n} exceeds the limit {limit}")
    values = all_subsets(ctx)
    return [_raw(ctx, dict(zip(dom, combo))) for combo in itertools.product(values, repeat=len(dom))]


def subdomains(params: Sequence) -> Iterator[tuple]:
    params = sorted(params, key=atom_key)
    for r in range(len(params) + 1):
        yield from itertools.combinations(params, r)


def enumerate_system(ctx: UniverseCtx, limit: int = DEFAULT_SLICE_LIMIT) -> list[SoftSet]:
    """Every soft set over every subdomain of E (finite mode)."""
    out = []
    for dom in subdomains(ctx.param_space):
        out.extend(enumerate_slice(dom, ctx, limit))
        if len(out) > limit:
            raise SliceTooLarge(f"system has more than {limit} soft sets")
    return out


def lub_bruteforce(fam: Sequence[SoftSet], candidates: Sequence[SoftSet]) -> SoftSet | None:
    """The least element among the upper bounds of ``fam`` found in ``candidates``."""
    ubs = [c for c in candidates if is_upper_bound(c, fam)]
    least = [u for u in ubs if all(leq(u, v) for v in ubs)]
    return least[0] if least else None


def glb_bruteforce(fam: Sequence[SoftSet], candidates: Sequence[SoftSet]) -> SoftSet | None:
    lbs = [c for c in candidates if all(leq(c, m) for m in fam)]
    greatest = [u for u in lbs if all(leq(v, u) for v in lbs)]
    return greatest[0] if greatest else None
