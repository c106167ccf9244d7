"""JSON documents for soft sets.

A document looks like::

    {
      "domain": ["e1"],
      "map": {"e1": {"atoms": ["5"], "kind": "cofinite"}},
      "universe": {"mode": "countable"}
    }

The universe block carries ``elements`` in finite mode.  It carries
``params`` (the parameter space E) only when E differs from the domain;
otherwise E is taken to be the domain.  Canonical text is ``json.dumps``
with sorted keys, two-space indentation and a trailing newline.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from . import setrep
from .errors import CtxConflict, DocumentSyntaxError, SoftAlgebraError
from .setrep import Kind, Mode, SubsetRep, UniverseCtx
from .softset import SoftSet, make_softset

_TOP_KEYS = {"universe", "domain", "map"}


def universe_block(ctx: UniverseCtx, domain: Sequence[str] | None = None) -> dict:
    block: dict[str, Any] = {"mode": ctx.mode.value}
    if ctx.is_finite:
        block["elements"] = list(ctx.elements)
    if domain is None or tuple(domain) != ctx.param_space:
        block["params"] = list(ctx.param_space)
    return block


def subset_to_obj(s: SubsetRep) -> dict:
    return {"kind": s.kind.value, "atoms": list(s.atoms)}


def softset_to_obj(phi: SoftSet) -> dict:
    return {
        "universe": universe_block(phi.ctx, phi.domain),
        "domain": list(phi.domain),
        "map": {p: subset_to_obj(v) for p, v in phi.items},
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_softset_doc(phi: SoftSet) -> str:
    return dumps(softset_to_obj(phi))


def _fail(where: str, msg: str, exc=DocumentSyntaxError):
    raise exc(f"{where}: {msg}" if where else msg)


def _string_list(value, where: str) -> list[str]:
    if not isinstance(value, list):
        _fail(where, "expected a list of strings")
    for i, a in enumerate(value):
        if not isinstance(a, str):
            _fail(f"{where}[{i}]", f"expected a string, got {a!r}")
    if len(set(value)) != len(value):
        _fail(where, "duplicate entries")
    return value


def ctx_from_block(block, where: str = "universe", domain: Sequence[str] = ()) -> UniverseCtx:
    if not isinstance(block, dict):
        _fail(where, "expected an object")
    extra = set(block) - {"mode", "elements", "params"}
    if extra:
        _fail(where, f"unknown fields {sorted(extra)}")
    try:
        mode = Mode(block.get("mode"))
    except ValueError:
        _fail(f"{where}.mode", f"expected 'finite' or 'countable', got {block.get('mode')!r}")
    if "params" in block:
        params = _string_list(block["params"], f"{where}.params")
    else:
        params = list(domain)
        if not params:
            _fail(where, "params must be declared when the domain is empty")
    try:
        if mode is Mode.FINITE:
            if "elements" not in block:
                _fail(where, "finite mode requires elements")
            return UniverseCtx.finite(_string_list(block["elements"], f"{where}.elements"), params)
        if "elements" in block:
            _fail(where, "countable mode takes no elements")
        return UniverseCtx.countable(params)
    except DocumentSyntaxError:
        raise
    except SoftAlgebraError as exc:
        raise type(exc)(f"{where}: {exc.args[0] if exc.args else ''}") from None


def softset_from_obj(obj, where: str = "") -> SoftSet:
    if not isinstance(obj, dict):
        _fail(where, "expected a JSON object")
    missing = _TOP_KEYS - set(obj)
    if missing:
        _fail(where, f"missing fields {sorted(missing)}")
    extra = set(obj) - _TOP_KEYS
    if extra:
        _fail(where, f"unknown fields {sorted(extra)}")
    prefix = f"{where}." if where else ""
    domain = _string_list(obj["domain"], f"{prefix}domain")
    ctx = ctx_from_block(obj["universe"], f"{prefix}universe", domain)
    if not isinstance(obj["map"], dict):
        _fail(f"{prefix}map", "expected an object")
    assignment = {}
    for key, entry in obj["map"].items():
        at = f"{prefix}map.{key}"
        if not isinstance(entry, dict) or set(entry) != {"kind", "atoms"}:
            _fail(at, "expected an object with exactly 'kind' and 'atoms'")
        try:
            kind = Kind(entry["kind"])
        except ValueError:
            _fail(f"{at}.kind", f"expected 'finite' or 'cofinite', got {entry['kind']!r}")
        atoms = _string_list(entry["atoms"], f"{at}.atoms")
        try:
            assignment[key] = setrep.make(kind, atoms, ctx)
        except SoftAlgebraError as exc:
            raise type(exc)(f"{at}: {exc.args[0] if exc.args else ''}") from None
    try:
        return make_softset(domain, assignment, ctx)
    except SoftAlgebraError as exc:
        raise type(exc)(f"{prefix}map: {exc.args[0] if exc.args else ''}") from None


def parse_softset_doc(text: str, source: str = "") -> tuple[SoftSet, UniverseCtx]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        where = f"{source}:" if source else ""
        raise DocumentSyntaxError(f"{where}line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    phi = softset_from_obj(obj, source)
    return phi, phi.ctx


def rebind(phi: SoftSet, ctx: UniverseCtx) -> SoftSet:
    """The same soft set placed in a (compatible, larger-E) context."""
    return make_softset(phi.domain, phi.as_dict(), ctx)


def merge_contexts(ctxs: Iterable[UniverseCtx]) -> UniverseCtx:
    ctxs = list(ctxs)
    first = ctxs[0]
    for c in ctxs[1:]:
        if c.mode != first.mode or c.elements != first.elements:
            raise CtxConflict(
                f"universe {{mode: {c.mode.value}, elements: {c.elements}}} differs from "
                f"{{mode: {first.mode.value}, elements: {first.elements}}}"
            )
    params = {p for c in ctxs for p in c.param_space}
    return UniverseCtx(first.mode, first.elements, tuple(params))


def load_documents(texts: Sequence[str], sources: Sequence[str] | None = None) -> list[SoftSet]:
    """Parse several documents and place them in one shared context."""
    sources = list(sources) if sources is not None else [""] * len(texts)
    parsed = [parse_softset_doc(t, s)[0] for t, s in zip(texts, sources)]
    ctx = merge_contexts(p.ctx for p in parsed)
    return [p if p.ctx == ctx else rebind(p, ctx) for p in parsed]
