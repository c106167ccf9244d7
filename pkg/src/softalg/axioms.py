"""Conformance harness for the soft set information algebra.

Random cases are drawn from a seeded generator and pushed through the seven
information-algebra axioms, the order characterization, supremum checks and
(over a countable universe) the compact-algebra properties.  Failing cases
are shrunk before they are reported.  The whole suite is a pure function of
:class:`GenConfig`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

import numpy as np

from . import compact, lattice, setrep
from .document import dumps, softset_from_obj, softset_to_obj, universe_block, ctx_from_block
from .errors import SoftAlgebraError
from .setrep import Kind, Mode, SubsetRep, UniverseCtx, atom_key
from .softset import SoftSet, _raw, absolute, combine, label, leq, project

AXIOMS = (
    "Semigroup",
    "Labeling",
    "Marginalization",
    "Transitivity",
    "Combination",
    "Stability",
    "Idempotency",
)
EXTRA_CHECKS = ("OrderEquivalence", "Supremum")
COMPACT_CHECKS = ("FiniteElements", "Density", "Compactness")

PROBE_WINDOW = tuple(str(i) for i in range(21))


@dataclass(frozen=True)
class GenConfig:
    seed: int = 42
    trials: int = 1000
    mode: str = "finite"
    max_universe: int = 5
    atom_pool: int = 10
    max_params: int = 4
    max_set_size: int = 4

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode).value)
        for name in ("trials", "max_universe", "atom_pool", "max_params"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.max_set_size < 0:
            raise ValueError("max_set_size must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class Ops:
    """The operations under test; swapped out wholesale by the mutants."""

    combine: Callable[[SoftSet, SoftSet], SoftSet] = combine
    project: Callable[[SoftSet, Iterable], SoftSet] = project
    leq: Callable[[SoftSet, SoftSet], bool] = leq


DEFAULT_OPS = Ops()


def _combine_drops_intersection(phi, psi):
    h = psi.as_dict()
    h.update(phi.as_dict())
    return _raw(phi.ctx, h)


def _project_returns_full(phi, onto):
    phi.ctx.check_params(onto)
    return phi


def _leq_ignores_pointwise(phi, psi):
    return set(phi.domain) <= set(psi.domain)


MUTANTS = {
    "combine-drops-intersection": Ops(combine=_combine_drops_intersection),
    "project-returns-full": Ops(project=_project_returns_full),
    "leq-ignores-pointwise": Ops(leq=_leq_ignores_pointwise),
}


# -- generation ---------------------------------------------------------------


def gen_ctx(rng: np.random.Generator, cfg: GenConfig) -> UniverseCtx:
    params = [f"e{i}" for i in range(1, int(rng.integers(1, cfg.max_params + 1)) + 1)]
    if cfg.mode == Mode.FINITE.value:
        n = int(rng.integers(1, cfg.max_universe + 1))
        return UniverseCtx.finite([f"u{i}" for i in range(1, n + 1)], params)
    return UniverseCtx.countable(params)


def _pick(rng, pool: Sequence[str], k: int) -> tuple:
    k = min(k, len(pool))
    idx = rng.choice(len(pool), size=k, replace=False) if k else []
    return tuple(pool[i] for i in idx)


def gen_subset(rng: np.random.Generator, cfg: GenConfig, ctx: UniverseCtx) -> SubsetRep:
    pool = ctx.elements if ctx.is_finite else tuple(str(i) for i in range(cfg.atom_pool))
    shape = int(rng.integers(4))
    if shape == 0:
        return ctx.empty()
    if shape == 1:
        return ctx.universe()
    if shape == 2:
        return SubsetRep(Kind.FINITE, _pick(rng, pool, 1))
    atoms = _pick(rng, pool, int(rng.integers(0, cfg.max_set_size + 1)))
    if not ctx.is_finite and rng.integers(2):
        return SubsetRep(Kind.COFINITE, atoms)
    return SubsetRep(Kind.FINITE, atoms)


def gen_domain(rng: np.random.Generator, params: Sequence[str]) -> tuple:
    r = rng.random()
    if r < 0.125:
        return ()
    if r < 0.25:
        return tuple(params)
    return tuple(p for p in params if rng.random() < 0.5)


def gen_softset(
    rng: np.random.Generator,
    cfg: GenConfig,
    ctx: UniverseCtx,
    domain_hint: Iterable | None = None,
) -> SoftSet:
    dom = ctx.check_params(domain_hint) if domain_hint is not None else gen_domain(rng, ctx.param_space)
    return _raw(ctx, {p: gen_subset(rng, cfg, ctx) for p in dom})


def gen_finite_element(rng, cfg: GenConfig, ctx: UniverseCtx, domain) -> SoftSet:
    """A soft set whose every value is cofinite (finite elements, countable mode)."""
    pool = tuple(str(i) for i in range(cfg.atom_pool))
    return _raw(ctx, {
        p: SubsetRep(Kind.COFINITE, _pick(rng, pool, int(rng.integers(0, cfg.max_set_size + 1))))
        for p in domain
    })


@dataclass(frozen=True)
class Case:
    """One trial's inputs.  x ⊆ y ⊆ d(phi) and d(phi) ⊆ s ⊆ d(phi) ∪ d(psi)."""

    phi: SoftSet
    psi: SoftSet
    chi: SoftSet
    x: tuple
    y: tuple
    s: tuple
    chain: tuple = ()
    target: SoftSet | None = None

    @property
    def ctx(self) -> UniverseCtx:
        return self.phi.ctx

    def softsets(self) -> list[SoftSet]:
        out = [self.phi, self.psi, self.chi, *self.chain]
        if self.target is not None:
            out.append(self.target)
        return out

    def to_dict(self) -> dict:
        d = {
            "universe": universe_block(self.ctx),
            "phi": _bare(self.phi),
            "psi": _bare(self.psi),
            "chi": _bare(self.chi),
            "x": list(self.x),
            "y": list(self.y),
            "s": list(self.s),
        }
        if self.chain:
            d["chain"] = [_bare(c) for c in self.chain]
        if self.target is not None:
            d["target"] = _bare(self.target)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Case:
        ctx = ctx_from_block(d["universe"])
        block = universe_block(ctx)

        def load(o):
            return softset_from_obj({"universe": block, **o})

        return cls(
            load(d["phi"]), load(d["psi"]), load(d["chi"]),
            ctx.check_params(d["x"]), ctx.check_params(d["y"]), ctx.check_params(d["s"]),
            tuple(load(c) for c in d.get("chain", ())),
            load(d["target"]) if "target" in d else None,
        )


def _bare(phi: SoftSet) -> dict:
    obj = softset_to_obj(phi)
    del obj["universe"]
    return obj


def _subset_of(rng, items: Sequence) -> tuple:
    return tuple(p for p in items if rng.random() < 0.5)


def gen_case(rng: np.random.Generator, cfg: GenConfig) -> Case:
    ctx = gen_ctx(rng, cfg)
    phi, psi, chi = (gen_softset(rng, cfg, ctx) for _ in range(3))
    y = _subset_of(rng, phi.domain)
    x = _subset_of(rng, y)
    s = tuple(sorted(set(phi.domain) | set(_subset_of(rng, psi.domain)), key=atom_key))
    chain: tuple = ()
    target = None
    if not ctx.is_finite:
        dom = phi.domain
        links = [gen_finite_element(rng, cfg, ctx, dom)]
        for _ in range(int(rng.integers(0, 6))):
            links.append(combine(links[-1], gen_finite_element(rng, cfg, ctx, dom)))
        top = lattice.sup(links)
        widen = {p: SubsetRep(Kind.FINITE, _pick(rng, tuple(str(i) for i in range(cfg.atom_pool)), 2)) for p in dom}
        target = _raw(ctx, {p: setrep.union(top[p], widen[p]) for p in dom})
        order = rng.permutation(len(links))
        chain = tuple(links[i] for i in order)
    return Case(phi, psi, chi, x, y, s, chain, target)


# -- checks -------------------------------------------------------------------
# Each check returns None when its preconditions do not hold for the case,
# otherwise a (possibly empty) list of failure descriptions.


def _eq_or(msgs: list, name: str, lhs, rhs):
    if lhs != rhs:
        msgs.append(f"{name}: {lhs!r} != {rhs!r}")


def _safe(fn):
    def wrapped(case, ops):
        try:
            return fn(case, ops)
        except SoftAlgebraError as exc:
            return [f"raised {exc}"]
    wrapped.__name__ = fn.__name__
    return wrapped


def _preconditions_hold(case: Case) -> bool:
    x, y, a = set(case.x), set(case.y), set(case.phi.domain)
    return x <= y <= a and a <= set(case.s) <= a | set(case.psi.domain)


@_safe
def _check_semigroup(case, ops):
    phi, psi, chi = case.phi, case.psi, case.chi
    msgs: list[str] = []
    _eq_or(msgs, "φ⊗ψ = ψ⊗φ", ops.combine(phi, psi), ops.combine(psi, phi))
    _eq_or(msgs, "(φ⊗ψ)⊗χ = φ⊗(ψ⊗χ)",
           ops.combine(ops.combine(phi, psi), chi), ops.combine(phi, ops.combine(psi, chi)))
    _eq_or(msgs, "Ã⊗φ = φ", ops.combine(absolute(phi.domain, phi.ctx), phi), phi)
    return msgs


@_safe
def _check_labeling(case, ops):
    msgs: list[str] = []
    got = label(ops.combine(case.phi, case.psi))
    want = tuple(sorted(set(case.phi.domain) | set(case.psi.domain), key=atom_key))
    _eq_or(msgs, "d(φ⊗ψ) = d(φ)∪d(ψ)", got, want)
    return msgs


@_safe
def _check_marginalization(case, ops):
    msgs: list[str] = []
    _eq_or(msgs, "d(φ↓x) = x", label(ops.project(case.phi, case.x)), case.x)
    return msgs


@_safe
def _check_transitivity(case, ops):
    msgs: list[str] = []
    _eq_or(msgs, "(φ↓y)↓x = φ↓x",
           ops.project(ops.project(case.phi, case.y), case.x), ops.project(case.phi, case.x))
    return msgs


@_safe
def _check_combination(case, ops):
    phi, psi = case.phi, case.psi
    a, b = set(phi.domain), set(psi.domain)
    msgs: list[str] = []
    _eq_or(msgs, "(φ⊗ψ)↓d(φ) = φ⊗ψ↓(d(φ)∩d(ψ))",
           ops.project(ops.combine(phi, psi), phi.domain), ops.combine(phi, ops.project(psi, a & b)))
    _eq_or(msgs, "(φ⊗ψ)↓S = φ⊗ψ↓(S∩d(ψ))",
           ops.project(ops.combine(phi, psi), case.s), ops.combine(phi, ops.project(psi, set(case.s) & b)))
    return msgs


@_safe
def _check_stability(case, ops):
    ctx = case.ctx
    msgs: list[str] = []
    _eq_or(msgs, "ẽ_y↓x = ẽ_x", ops.project(absolute(case.y, ctx), case.x), absolute(case.x, ctx))
    return msgs


@_safe
def _check_idempotency(case, ops):
    msgs: list[str] = []
    _eq_or(msgs, "φ⊗φ↓x = φ", ops.combine(case.phi, ops.project(case.phi, case.x)), case.phi)
    return msgs


def check_order_equivalence(phi: SoftSet, psi: SoftSet, ops: Ops = DEFAULT_OPS) -> bool:
    """leq agrees with the order defined by combination: phi ≤ psi iff phi⊗psi = psi."""
    return ops.leq(phi, psi) == (ops.combine(phi, psi) == psi)


@_safe
def _check_order(case, ops):
    phi, psi, chi = case.phi, case.psi, case.chi
    pairs = [
        (phi, psi), (psi, phi), (phi, chi),
        (phi, combine(phi, psi)),
        (project(phi, case.x), phi),
        (absolute(phi.domain, phi.ctx), phi),
    ]
    msgs = []
    for a, b in pairs:
        if not check_order_equivalence(a, b, ops):
            msgs.append(f"leq({a!r}, {b!r}) = {ops.leq(a, b)} but a⊗b = b is {ops.combine(a, b) == b}")
    return msgs


@_safe
def _check_supremum(case, ops):
    fam = [case.phi, case.psi, case.chi]
    s = lattice.sup(fam)
    msgs = []
    for i, m in enumerate(fam):
        if not ops.leq(m, s):
            msgs.append(f"member {i} {m!r} not below sup {s!r}")
    # anything combined on top of the family is an upper bound, so sup must sit below it
    beta = ops.combine(ops.combine(ops.combine(case.phi, case.psi), case.chi), case.phi)
    if all(ops.leq(m, beta) for m in fam) and not ops.leq(s, beta):
        msgs.append(f"sup {s!r} not below upper bound {beta!r}")
    _eq_or(msgs, "sup = φ⊗ψ⊗χ", s, ops.combine(ops.combine(case.phi, case.psi), case.chi))
    return msgs


def window_bound(phi: SoftSet, window: Sequence[str] = PROBE_WINDOW) -> int:
    """A prefix length after which the decomposition's prefix sup agrees with phi on ``window``."""
    ctx = phi.ctx
    if not phi.domain:
        return 1
    needed, lengths = [], []
    top = max((int(a) for a in window), default=-1) if not ctx.is_finite else None
    for e in phi.domain:
        v = phi[e]
        if ctx.is_finite or v.is_cofinite:
            c = len(ctx.complement(v).atoms)
            needed.append(c)
            lengths.append(2**c - 1)
        else:
            needed.append(sum(1 for i in range(top + 1) if str(i) not in v.atoms))
            lengths.append(None)
    rounds = max(needed)
    return 1 + sum(rounds if n is None else min(rounds, n) for n in lengths)


def _check_finite_elements(case, ops):
    if case.ctx.is_finite:
        return None
    msgs = []
    for i, psi in enumerate(compact.density_decomposition(case.phi).take(20)):
        if not compact.is_finite_element(psi):
            msgs.append(f"approximant {i} {psi!r} is not a finite element")
        if not ops.leq(psi, case.phi):
            msgs.append(f"approximant {i} {psi!r} is not below φ")
    return msgs


def _check_density(case, ops):
    phi = case.phi
    if phi.ctx.is_finite:
        return None
    stream = compact.density_decomposition(phi)
    msgs = []
    if compact.is_finite_element(phi):
        _eq_or(msgs, "sup(decomposition) = φ", lattice.sup(list(stream)), phi)
        return msgs
    k = window_bound(phi)
    prefix = stream.take(max(k, 50))
    acc = prefix[0]
    for i, psi in enumerate(prefix[1:], start=2):
        nxt = lattice.sup([acc, psi])
        if not ops.leq(acc, nxt):
            msgs.append(f"prefix sups not a chain at {i}")
        acc = nxt
        if i >= k and not compact.window_agrees(acc, phi, PROBE_WINDOW):
            msgs.append(f"prefix sup {i} disagrees with φ on the probe window")
            break
    for i, psi in enumerate(prefix[:50]):
        if ops.leq(phi, psi):
            msgs.append(f"approximant {i} {psi!r} dominates φ")
    return msgs


def _check_compactness(case, ops):
    if not case.chain or case.target is None:
        return None
    chain, target = list(case.chain), case.target
    if not compact.is_directed(chain) or not compact.is_finite_element(target):
        return None
    if not ops.leq(target, lattice.sup(chain)):
        return None
    if compact.compactness_witness(chain, target) is None:
        return [f"no member of {chain!r} dominates {target!r}"]
    return []


CHECKS: dict[str, Callable[[Case, Ops], list | None]] = {
    "Semigroup": _check_semigroup,
    "Labeling": _check_labeling,
    "Marginalization": _check_marginalization,
    "Transitivity": _check_transitivity,
    "Combination": _check_combination,
    "Stability": _check_stability,
    "Idempotency": _check_idempotency,
    "OrderEquivalence": _check_order,
    "Supremum": _check_supremum,
    "FiniteElements": _check_finite_elements,
    "Density": _check_density,
    "Compactness": _check_compactness,
}


@dataclass(frozen=True)
class Violation:
    axiom: str
    detail: str


def check_information_axioms(
    phi: SoftSet,
    psi: SoftSet,
    chi: SoftSet,
    x: Iterable,
    y: Iterable,
    s: Iterable | None = None,
    ops: Ops = DEFAULT_OPS,
) -> list[Violation]:
    """Every violated instance of the seven axioms on these inputs.

    ``s`` is the intermediate domain for the combination axiom; it defaults
    to d(phi).  Inputs breaking x ⊆ y ⊆ d(phi) are reported as kind "generator".
    """
    ctx = phi.ctx
    x, y = ctx.check_params(x), ctx.check_params(y)
    s = phi.domain if s is None else ctx.check_params(s)
    case = Case(phi, psi, chi, x, y, s)
    if not _preconditions_hold(case):
        return [Violation("generator", f"need x ⊆ y ⊆ d(φ) ⊆ S ⊆ d(φ)∪d(ψ), got x={x} y={y} S={s}")]
    out = []
    for name in AXIOMS:
        for msg in CHECKS[name](case, ops) or []:
            out.append(Violation(name, msg))
    return out


# -- shrinking ----------------------------------------------------------------


def _drop_param(case: Case, p: str) -> Case:
    def cut(phi):
        return _raw(phi.ctx, {e: v for e, v in phi.items if e != p})

    def cut_t(t):
        return tuple(e for e in t if e != p)

    return replace(
        case,
        phi=cut(case.phi), psi=cut(case.psi), chi=cut(case.chi),
        x=cut_t(case.x), y=cut_t(case.y), s=cut_t(case.s),
        chain=tuple(cut(c) for c in case.chain),
        target=cut(case.target) if case.target is not None else None,
    )


def _slots(case: Case):
    for name in ("phi", "psi", "chi", "target"):
        phi = getattr(case, name)
        if phi is not None:
            yield phi, lambda new, name=name: replace(case, **{name: new})
    for i, phi in enumerate(case.chain):
        def put(new, i=i):
            chain = list(case.chain)
            chain[i] = new
            return replace(case, chain=tuple(chain))
        yield phi, put


def _single_param_drops(case: Case):
    for phi, put in _slots(case):
        for e in phi.domain:
            yield put(_raw(phi.ctx, {p: v for p, v in phi.items if p != e}))


def _atom_drops(case: Case):
    for phi, put in _slots(case):
        for e, v in phi.items:
            for a in v.atoms:
                smaller = SubsetRep(v.kind, tuple(b for b in v.atoms if b != a))
                yield put(_raw(phi.ctx, {**phi.as_dict(), e: smaller}))


def _fails(check, case: Case, ops: Ops) -> bool:
    if not _preconditions_hold(case):
        return False
    result = check(case, ops)
    return bool(result)


def shrink(case: Case, check, ops: Ops = DEFAULT_OPS) -> Case:
    """Greedy minimization: drop parameters, then atoms, while the check still fails."""
    improved = True
    while improved:
        improved = False
        params = sorted({e for phi in case.softsets() for e in phi.domain}, key=atom_key)
        candidates = itertools.chain(
            (_drop_param(case, p) for p in params),
            _single_param_drops(case),
            _atom_drops(case),
        )
        for cand in candidates:
            if _fails(check, cand, ops):
                case, improved = cand, True
                break
    return case


# -- suite --------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    skipped: int = 0
    counterexample: dict | None = None
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        d = {"name": self.name, "trials": self.trials, "skipped": self.skipped, "passed": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
            d["detail"] = self.detail
        return d


@dataclass
class AxiomReport:
    config: GenConfig
    checks: list[CheckResult]
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "seed": cfg.seed, "trials": cfg.trials, "mode": cfg.mode,
                "max_universe": cfg.max_universe, "atom_pool": cfg.atom_pool,
                "max_params": cfg.max_params, "max_set_size": cfg.max_set_size,
            },
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "info": self.info,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def trial_rng(cfg: GenConfig, trial: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, trial])


def _acts_neutrally(case: Case) -> bool:
    """Some generated ψ other than Ã acts as a unit on φ (informational only)."""
    phi, psi = case.phi, case.psi
    return (
        psi.domain == phi.domain
        and psi != absolute(phi.domain, phi.ctx)
        and combine(psi, phi) == phi
    )


def run_suite(cfg: GenConfig, ops: Ops = DEFAULT_OPS, minimize: bool = True) -> AxiomReport:
    names = list(AXIOMS) + list(EXTRA_CHECKS)
    if cfg.mode == Mode.COUNTABLE.value:
        names += list(COMPACT_CHECKS)
    results = {n: CheckResult(n) for n in names}
    neutral_hits = 0
    for t in range(cfg.trials):
        case = gen_case(trial_rng(cfg, t), cfg)
        neutral_hits += _acts_neutrally(case)
        for n in names:
            res = results[n]
            if res.counterexample is not None:
                res.trials += 1
                continue
            try:
                out = CHECKS[n](case, ops)
            except RecursionError:  # pragma: no cover - resource guard
                out = None
            res.trials += 1
            if out is None:
                res.skipped += 1
            elif out:
                small = shrink(case, CHECKS[n], ops) if minimize else case
                res.counterexample = {"trial": t, **small.to_dict()}
                res.detail = (CHECKS[n](small, ops) or out)[0]
    info = {"non_absolute_neutral_on_sample": neutral_hits}
    return AxiomReport(cfg, [results[n] for n in names], info)


def replay(name: str, counterexample: dict, ops: Ops = DEFAULT_OPS) -> list | None:
    """Re-run one check on a serialized counterexample."""
    return CHECKS[name](Case.from_dict(counterexample), ops)


def run_exhaustive(ctx: UniverseCtx, ops: Ops = DEFAULT_OPS) -> dict:
    """All soft sets over a tiny finite system; every triple, every conforming (x, y, S).

    Returns per-axiom counts of instances checked and violations found.
    """
    elems = lattice.enumerate_system(ctx)
    counts = {n: [0, 0] for n in ("Associativity",) + AXIOMS}
    for phi, psi, chi in itertools.product(elems, repeat=3):
        counts["Associativity"][0] += 1
        if ops.combine(ops.combine(phi, psi), chi) != ops.combine(phi, ops.combine(psi, chi)):
            counts["Associativity"][1] += 1
        a = phi.domain
        extra = [p for p in psi.domain if p not in a]
        for y in lattice.subdomains(a):
            for x in lattice.subdomains(y):
                for more in lattice.subdomains(extra):
                    s = tuple(sorted(set(a) | set(more), key=atom_key))
                    case = Case(phi, psi, chi, x, y, s)
                    for n in AXIOMS:
                        counts[n][0] += 1
                        if CHECKS[n](case, ops):
                            counts[n][1] += 1
    return {n: {"checked": c, "violations": v} for n, (c, v) in counts.items()}
