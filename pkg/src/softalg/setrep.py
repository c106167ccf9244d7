"""Subsets of a possibly infinite universe, kept as finite or cofinite atom sets.

A :class:`SubsetRep` is either ``Fin(atoms)`` (exactly those atoms) or
``Cof(atoms)`` (everything except those atoms).  Over a finite universe only
the ``Fin`` kind is legal, so each set has exactly one representation and
structural equality is extensional equality.

The countable universe is the set of decimal numerals ``"0", "1", "2", ...``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CofiniteInFiniteMode, CtxMismatch, UnknownAtom, UnknownParameter

_NUMERAL = re.compile(r"0|[1-9][0-9]*\Z")

Atom = str


def is_numeral(atom: str) -> bool:
    return bool(_NUMERAL.fullmatch(atom))


def atom_key(atom: str):
    """Canonical order: numerals numerically, then everything else by code point."""
    if is_numeral(atom):
        return (0, int(atom), "")
    return (1, 0, atom)


def normalize_atom(atom) -> Atom:
    if isinstance(atom, bool):
        raise UnknownAtom(f"not an atom: {atom!r}")
    if isinstance(atom, int):
        if atom < 0:
            raise UnknownAtom(f"negative integer atom {atom}")
        return str(atom)
    if isinstance(atom, str):
        return atom
    raise UnknownAtom(f"not an atom: {atom!r}")


def canonical_atoms(atoms: Iterable) -> tuple[Atom, ...]:
    return tuple(sorted({normalize_atom(a) for a in atoms}, key=atom_key))


class Mode(str, enum.Enum):
    FINITE = "finite"
    COUNTABLE = "countable"


class Kind(str, enum.Enum):
    FINITE = "finite"
    COFINITE = "cofinite"


@dataclass(frozen=True)
class UniverseCtx:
    """The universe U and the parameter space E shared by a family of soft sets."""

    mode: Mode
    elements: tuple[Atom, ...] | None
    param_space: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        params = tuple(normalize_atom(p) for p in self.param_space)
        if not params:
            raise UnknownParameter("parameter space must be non-empty")
        if len(set(params)) != len(params):
            raise UnknownParameter(f"duplicate parameters in {params}")
        object.__setattr__(self, "param_space", tuple(sorted(params, key=atom_key)))
        if self.mode is Mode.FINITE:
            if self.elements is None:
                raise UnknownAtom("finite universe needs an element list")
            elems = tuple(normalize_atom(a) for a in self.elements)
            if not elems:
                raise UnknownAtom("finite universe must be non-empty")
            if len(set(elems)) != len(elems):
                raise UnknownAtom(f"duplicate universe elements in {elems}")
            object.__setattr__(self, "elements", tuple(sorted(elems, key=atom_key)))
        else:
            if self.elements is not None:
                raise UnknownAtom("countable universe takes no element list")

    @classmethod
    def finite(cls, elements: Iterable, params: Iterable) -> UniverseCtx:
        return cls(Mode.FINITE, tuple(elements), tuple(params))

    @classmethod
    def countable(cls, params: Iterable) -> UniverseCtx:
        return cls(Mode.COUNTABLE, None, tuple(params))

    @property
    def is_finite(self) -> bool:
        return self.mode is Mode.FINITE

    def check_atom(self, atom) -> Atom:
        atom = normalize_atom(atom)
        if self.is_finite:
            if atom not in self._element_set:
                raise UnknownAtom(f"{atom!r} is not in the universe {list(self.elements)}")
        elif not is_numeral(atom):
            raise UnknownAtom(f"{atom!r} is not a decimal numeral (countable universe)")
        return atom

    def check_params(self, params: Iterable) -> tuple[Atom, ...]:
        """Validate a parameter set against E and return it in canonical order."""
        out = canonical_atoms(params)
        known = set(self.param_space)
        for p in out:
            if p not in known:
                raise UnknownParameter(f"{p!r} is not in the parameter space {list(self.param_space)}")
        return out

    @property
    def _element_set(self) -> frozenset:
        # cached lazily; dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_elements_cache"]
        except KeyError:
            s = frozenset(self.elements or ())
            object.__setattr__(self, "_elements_cache", s)
            return s

    def universe(self) -> SubsetRep:
        """U itself in canonical form."""
        if self.is_finite:
            return SubsetRep(Kind.FINITE, self.elements)
        return SubsetRep(Kind.COFINITE, ())

    def empty(self) -> SubsetRep:
        return SubsetRep(Kind.FINITE, ())

    def complement(self, s: SubsetRep) -> SubsetRep:
        """U - s.  Only meaningful where the result is representable."""
        if s.kind is Kind.COFINITE:
            return SubsetRep(Kind.FINITE, s.atoms)
        if self.is_finite:
            members = set(s.atoms)
            return SubsetRep(Kind.FINITE, tuple(a for a in self.elements if a not in members))
        return SubsetRep(Kind.COFINITE, s.atoms)

    def iter_atoms(self) -> Iterator[Atom]:
        """Enumerate U in canonical order (infinite in countable mode)."""
        if self.is_finite:
            yield from self.elements
        else:
            n = 0
            while True:
                yield str(n)
                n += 1


@dataclass(frozen=True)
class SubsetRep:
    kind: Kind
    atoms: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "atoms", canonical_atoms(self.atoms))

    @property
    def is_cofinite(self) -> bool:
        return self.kind is Kind.COFINITE

    def __contains__(self, x) -> bool:
        x = normalize_atom(x)
        return (x in self.atoms) != self.is_cofinite

    def __and__(self, other: SubsetRep) -> SubsetRep:
        return intersect(self, other)

    def __or__(self, other: SubsetRep) -> SubsetRep:
        return union(self, other)

    def __le__(self, other: SubsetRep) -> bool:
        return is_subset(self, other)

    def __repr__(self):
        tag = "Cof" if self.is_cofinite else "Fin"
        return f"{tag}{{{','.join(self.atoms)}}}"


def Fin(*atoms) -> SubsetRep:
    """Shorthand constructor without universe validation (see :func:`make`)."""
    return SubsetRep(Kind.FINITE, atoms)


def Cof(*atoms) -> SubsetRep:
    return SubsetRep(Kind.COFINITE, atoms)


def make(kind, atoms: Iterable, ctx: UniverseCtx) -> SubsetRep:
    kind = Kind(kind)
    if kind is Kind.COFINITE and ctx.is_finite:
        raise CofiniteInFiniteMode("cofinite subsets are not allowed over a finite universe")
    return SubsetRep(kind, tuple(ctx.check_atom(a) for a in atoms))


def validate(s: SubsetRep, ctx: UniverseCtx) -> SubsetRep:
    """Check that an already-built subset is legal under ``ctx``."""
    return make(s.kind, s.atoms, ctx)


def contains(s: SubsetRep, x, ctx: UniverseCtx | None = None) -> bool:
    if ctx is not None:
        x = ctx.check_atom(x)
    return x in s


def intersect(s: SubsetRep, t: SubsetRep) -> SubsetRep:
    if not s.is_cofinite and not t.is_cofinite:
        keep = set(t.atoms)
        return SubsetRep(Kind.FINITE, tuple(a for a in s.atoms if a in keep))
    if s.is_cofinite and t.is_cofinite:
        return SubsetRep(Kind.COFINITE, s.atoms + t.atoms)
    fin, cof = (t, s) if s.is_cofinite else (s, t)
    drop = set(cof.atoms)
    return SubsetRep(Kind.FINITE, tuple(a for a in fin.atoms if a not in drop))


def union(s: SubsetRep, t: SubsetRep) -> SubsetRep:
    if not s.is_cofinite and not t.is_cofinite:
        return SubsetRep(Kind.FINITE, s.atoms + t.atoms)
    if s.is_cofinite and t.is_cofinite:
        keep = set(t.atoms)
        return SubsetRep(Kind.COFINITE, tuple(a for a in s.atoms if a in keep))
    fin, cof = (t, s) if s.is_cofinite else (s, t)
    members = set(fin.atoms)
    return SubsetRep(Kind.COFINITE, tuple(a for a in cof.atoms if a not in members))


def is_subset(s: SubsetRep, t: SubsetRep) -> bool:
    if not s.is_cofinite:
        if not t.is_cofinite:
            return set(s.atoms) <= set(t.atoms)
        return set(s.atoms).isdisjoint(t.atoms)
    if not t.is_cofinite:
        # an infinite set never fits inside a finite one
        return False
    return set(t.atoms) <= set(s.atoms)


def complement_is_finite(s: SubsetRep, ctx: UniverseCtx) -> bool:
    return ctx.is_finite or s.is_cofinite


def check_same_ctx(*ctxs: UniverseCtx) -> UniverseCtx:
    first = ctxs[0]
    for c in ctxs[1:]:
        if c != first:
            raise CtxMismatch("operands belong to different universes")
    return first
