"""Soft sets and the labeling / combination / projection operations on them.

A soft set ``(F, A)`` pairs a finite parameter domain ``A`` with a total map
``F: A -> P(U)``.  Combination is the extended intersection; projection
restricts the map to a subdomain.  The order induced by combination puts
*more* information higher, which means *smaller* sets pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import setrep
from .errors import DomainMismatch, NotASubdomain
from .setrep import Atom, SubsetRep, UniverseCtx, atom_key, check_same_ctx

ParamSet = tuple[Atom, ...]


@dataclass(frozen=True)
class SoftSet:
    """Immutable soft set; build it with :func:`make_softset`."""

    ctx: UniverseCtx
    items: tuple[tuple[Atom, SubsetRep], ...]

    @property
    def domain(self) -> ParamSet:
        return tuple(p for p, _ in self.items)

    def __getitem__(self, param) -> SubsetRep:
        param = setrep.normalize_atom(param)
        for p, v in self.items:
            if p == param:
                return v
        raise KeyError(param)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.domain)

    def __len__(self) -> int:
        return len(self.items)

    def as_dict(self) -> dict[Atom, SubsetRep]:
        return dict(self.items)

    def __repr__(self):
        body = ", ".join(f"{p}↦{v!r}" for p, v in self.items)
        return f"SoftSet({body})"


def _raw(ctx: UniverseCtx, assignment: Mapping[Atom, SubsetRep]) -> SoftSet:
    # trusted constructor: keys and values already canonical and valid
    keys = sorted(assignment, key=atom_key)
    return SoftSet(ctx, tuple((k, assignment[k]) for k in keys))


def make_softset(domain: Iterable, assignment: Mapping, ctx: UniverseCtx) -> SoftSet:
    dom = ctx.check_params(domain)
    given = {setrep.normalize_atom(k): v for k, v in assignment.items()}
    missing = [p for p in dom if p not in given]
    extra = sorted(set(given) - set(dom), key=atom_key)
    if missing or extra:
        raise DomainMismatch(f"domain {list(dom)}: missing {missing}, extra {extra}")
    return _raw(ctx, {p: setrep.validate(given[p], ctx) for p in dom})


def label(phi: SoftSet) -> ParamSet:
    return phi.domain


def null(domain: Iterable, ctx: UniverseCtx) -> SoftSet:
    """(∅, A): every parameter mapped to the empty set."""
    return _raw(ctx, {p: ctx.empty() for p in ctx.check_params(domain)})


def absolute(domain: Iterable, ctx: UniverseCtx) -> SoftSet:
    """Ã: every parameter mapped to the whole universe."""
    return _raw(ctx, {p: ctx.universe() for p in ctx.check_params(domain)})


def canonical_softset(domain: Iterable, kind: str, ctx: UniverseCtx) -> SoftSet:
    if kind == "null":
        return null(domain, ctx)
    if kind == "absolute":
        return absolute(domain, ctx)
    raise ValueError(f"kind must be 'null' or 'absolute', got {kind!r}")


def combine(phi: SoftSet, psi: SoftSet) -> SoftSet:
    ctx = check_same_ctx(phi.ctx, psi.ctx)
    f, g = phi.as_dict(), psi.as_dict()
    h = dict(f)
    for e, v in g.items():
        h[e] = setrep.intersect(f[e], v) if e in f else v
    return _raw(ctx, h)


def project(phi: SoftSet, onto: Iterable) -> SoftSet:
    target = setrep.canonical_atoms(onto)
    f = phi.as_dict()
    outside = [p for p in target if p not in f]
    if outside:
        raise NotASubdomain(f"{outside} not in domain {list(phi.domain)}")
    return _raw(phi.ctx, {p: f[p] for p in target})


def leq(phi: SoftSet, psi: SoftSet) -> bool:
    """phi ≤ psi: psi's domain covers phi's and psi is pointwise contained in phi."""
    check_same_ctx(phi.ctx, psi.ctx)
    g = psi.as_dict()
    for e, v in phi.items:
        if e not in g or not setrep.is_subset(g[e], v):
            return False
    return True


def eq(phi: SoftSet, psi: SoftSet) -> bool:
    return phi == psi


def combine_all(softsets: Iterable[SoftSet]) -> SoftSet:
    it = iter(softsets)
    acc = next(it)
    for s in it:
        acc = combine(acc, s)
    return acc
