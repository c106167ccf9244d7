"""Exit criteria for the build, one test per criterion.

Run on its own with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import contextlib
import itertools
import json
import time
from pathlib import Path

import numpy as np
import pytest

from softalg import axioms, compact, lattice
from softalg.axioms import MUTANTS, GenConfig, check_order_equivalence, run_exhaustive, run_suite
from softalg.cli import run_command
from softalg.document import emit_softset_doc, load_documents, parse_softset_doc
from softalg.setrep import Cof, Fin, UniverseCtx
from softalg.softset import combine, leq, make_softset

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance

FIX = Path(__file__).parent / "fixtures"
WINDOW = [str(i) for i in range(21)]
SEED = 42


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {number:>2}. {title}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {number:>2}. {title} ({time.perf_counter() - start:.2f}s)")


def test_01_information_algebra_suite():
    with criterion(1, "information-algebra suite, 1000 trials/axiom, both modes, < 60 s"):
        start = time.perf_counter()
        finite = run_suite(GenConfig(seed=SEED, trials=1000, mode="finite", max_universe=5, max_params=4))
        countable = run_suite(GenConfig(seed=SEED, trials=1000, mode="countable", atom_pool=10,
                                        max_set_size=4, max_params=4))
        elapsed = time.perf_counter() - start
        for report in (finite, countable):
            for name in axioms.AXIOMS:
                res = report[name]
                assert res.trials == 1000
                assert res.passed, res.to_dict()
            assert report.passed
        assert elapsed < 60


def test_02_exhaustive_micro_model():
    with criterion(2, "exhaustive micro-model |U|=1, |E|=2: 9 soft sets, 729 triples, < 5 s"):
        ctx = UniverseCtx.finite(["u1"], ["e1", "e2"])
        start = time.perf_counter()
        assert len(lattice.enumerate_system(ctx)) == 9
        counts = run_exhaustive(ctx)
        elapsed = time.perf_counter() - start
        assert counts["Associativity"] == {"checked": 729, "violations": 0}
        for name in axioms.AXIOMS:
            assert counts[name]["checked"] > 0 and counts[name]["violations"] == 0
        assert elapsed < 5


def test_03_order_equivalence():
    with criterion(3, "order characterization vs combination order, 1000 pairs"):
        rng = np.random.default_rng(SEED)
        mismatches, related = 0, 0
        for t in range(1000):
            cfg = GenConfig(mode="finite" if t % 2 else "countable")
            ctx = axioms.gen_ctx(rng, cfg)
            phi = axioms.gen_softset(rng, cfg, ctx)
            psi = axioms.gen_softset(rng, cfg, ctx)
            if rng.random() < 0.5:
                psi = combine(phi, psi)
            related += leq(phi, psi)
            mismatches += not check_order_equivalence(phi, psi)
        assert mismatches == 0
        assert 0 < related < 1000


def test_04_supremum_is_least():
    with criterion(4, "sup is the least upper bound, 200 families, exhaustive upper bounds"):
        rng = np.random.default_rng(SEED)
        systems = {}
        bounds_seen = 0
        for _ in range(200):
            n_u, n_e = int(rng.integers(1, 3)), int(rng.integers(1, 3))
            key = (n_u, n_e)
            if key not in systems:
                ctx = UniverseCtx.finite([f"u{i}" for i in range(n_u)], [f"e{i}" for i in range(n_e)])
                systems[key] = lattice.enumerate_system(ctx)
            system = systems[key]
            fam = [system[i] for i in rng.integers(0, len(system), size=int(rng.integers(1, 5)))]
            s = lattice.sup(fam)
            ubs = [b for b in system if lattice.is_upper_bound(b, fam)]
            bounds_seen += len(ubs)
            assert s in ubs
            assert all(leq(s, b) for b in ubs)
        assert bounds_seen > 200


def test_05_way_below_oracle_agreement():
    with criterion(5, "way-below brute force agrees with finite-element test, |U|<=2, |A|<=2, < 120 s"):
        start = time.perf_counter()
        checked = 0
        for n_u in (1, 2):
            ctx = UniverseCtx.finite([f"u{i}" for i in range(n_u)], ["e1", "e2"])
            for dom in lattice.subdomains(ctx.param_space):
                for phi in lattice.enumerate_slice(dom, ctx):
                    wb = compact.way_below_bruteforce(phi, phi)
                    assert wb is True
                    assert wb == compact.is_finite_element(phi)
                    checked += 1
        # |U|=1: 1 + 2 + 2 + 4 soft sets; |U|=2: 1 + 4 + 4 + 16
        assert checked == 9 + 25
        assert time.perf_counter() - start < 120


def _cofinite_phi(rng, ctx, pool):
    return make_softset(ctx.param_space, {
        p: Cof(*rng.choice(pool, size=int(rng.integers(0, 4)), replace=False)) for p in ctx.param_space
    }, ctx)


def test_06_density_exact():
    with criterion(6, "density, all-cofinite φ: sup of full decomposition equals φ (100 cases)"):
        rng = np.random.default_rng(SEED)
        pool = [str(i) for i in range(10)]
        for _ in range(100):
            ctx = UniverseCtx.countable([f"e{i}" for i in range(1, int(rng.integers(1, 4)) + 1)])
            phi = _cofinite_phi(rng, ctx, pool)
            stream = compact.density_decomposition(phi)
            assert stream.is_complete
            assert lattice.sup(list(stream)) == phi


def test_07_density_convergent_and_falsification():
    with criterion(7, "density, some Finite value: chain, window convergence, no dominating approximant (50 cases)"):
        rng = np.random.default_rng(SEED)
        cfg = GenConfig(mode="countable", atom_pool=10, max_set_size=4)
        done = 0
        while done < 50:
            ctx = UniverseCtx.countable([f"e{i}" for i in range(1, int(rng.integers(1, 4)) + 1)])
            phi = axioms.gen_softset(rng, cfg, ctx, domain_hint=ctx.param_space)
            if all(v.is_cofinite for _, v in phi.items):
                continue
            done += 1
            stream = compact.density_decomposition(phi)
            bound = axioms.window_bound(phi, WINDOW)
            first = stream.take(max(bound + 5, 50))
            acc = first[0]
            for k, psi in enumerate(first[1:], start=2):
                nxt = lattice.sup([acc, psi])
                assert leq(acc, nxt)
                acc = nxt
                if k >= bound:
                    assert compact.window_agrees(acc, phi, WINDOW)
            assert acc == compact.decomposition_prefix_sup(stream, len(first))
            assert not any(leq(phi, psi) for psi in first[:50])
            e = next(p for p, v in phi.items if not v.is_cofinite)
            lemma_family = list(itertools.islice(compact.exclusion_chain(phi, e), 50))
            assert not any(leq(phi, h) for h in lemma_family)


def test_08_compactness_witness():
    with criterion(8, "compactness witness found on 100 directed chains of finite elements"):
        rng = np.random.default_rng(SEED)
        pool = [str(i) for i in range(10)]
        ctx = UniverseCtx.countable(["e1", "e2", "e3"])
        for _ in range(100):
            chain = [_cofinite_phi(rng, ctx, pool)]
            for _ in range(int(rng.integers(0, 6))):
                chain.append(combine(chain[-1], _cofinite_phi(rng, ctx, pool)))
            order = rng.permutation(len(chain))
            chain = [chain[i] for i in order]
            top = lattice.sup(chain)
            phi = make_softset(ctx.param_space, {
                p: top[p] | Fin(*rng.choice(pool, size=int(rng.integers(0, 3)), replace=False))
                for p in ctx.param_space
            }, ctx)
            assert leq(phi, top)
            i = compact.compactness_witness(chain, phi)
            assert i is not None and leq(phi, chain[i])


def test_09_mutation_sensitivity():
    with criterion(9, "each documented mutant detected within 1000 trials at seed 42"):
        for name, ops in MUTANTS.items():
            report = run_suite(GenConfig(seed=SEED, trials=1000, mode="finite"), ops, minimize=False)
            assert not report.passed, name


def test_10_cli():
    with criterion(10, "CLI: 50 golden round-trips, subcommands match library, axioms exit codes"):
        docs = sorted((FIX / "docs").glob("*.json"))
        assert len(docs) == 50
        for path in docs:
            text = path.read_text(encoding="utf-8")
            assert emit_softset_doc(parse_softset_doc(text)[0]) == text
            code, out, _ = run_command(["combine", str(path)])
            assert (code, out) == (0, text)
        a, b = str(FIX / "docs" / "00.json"), str(FIX / "docs" / "01.json")
        phi, psi = load_documents([Path(a).read_text(), Path(b).read_text()])
        assert run_command(["combine", a, b])[1] == emit_softset_doc(combine(phi, psi))
        assert run_command(["sup", a, b])[1] == emit_softset_doc(lattice.sup([phi, psi]))
        assert run_command(["leq", a, b])[1] == f"{str(leq(phi, psi)).lower()}\n"
        for name in sorted((FIX / "golden").glob("*.txt")):
            assert name.read_text(encoding="utf-8")  # non-empty golden outputs
        code, out, _ = run_command(["axioms", "--seed", "42", "--trials", "1000", "--mode", "finite"])
        assert code == 0 and json.loads(out)["passed"] is True
        code, _, _ = run_command(["axioms", "--trials", "100", "--mutant", "project-returns-full"])
        assert code == 3
        code, _, _ = run_command(["axioms", "--trials", "0"])
        assert code == 2


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
