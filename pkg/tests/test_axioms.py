import numpy as np
import pytest

from softalg import axioms
from softalg.axioms import (
    MUTANTS, Case, GenConfig, check_information_axioms, check_order_equivalence,
    gen_case, gen_softset, replay, run_exhaustive, run_suite, shrink, trial_rng,
)
from softalg.document import emit_softset_doc, parse_softset_doc
from softalg.setrep import UniverseCtx
from softalg.softset import absolute, make_softset
from softalg.setrep import Fin

CTX = UniverseCtx.finite(["u1", "u2"], ["e1", "e2"])


class TestGenConfig:
    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            GenConfig(trials=0)

    def test_rejects_bad_mode(self):
        with pytest.raises(ValueError):
            GenConfig(mode="uncountable")


class TestGeneration:
    def test_valid_and_deterministic(self):
        cfg = GenConfig(seed=1)
        a = gen_softset(np.random.default_rng(1), cfg, CTX)
        b = gen_softset(np.random.default_rng(1), cfg, CTX)
        assert a == b
        again, _ = parse_softset_doc(emit_softset_doc(a))
        assert make_softset(a.domain, a.as_dict(), CTX) == a
        assert again.as_dict() == a.as_dict()

    def test_hint(self):
        phi = gen_softset(np.random.default_rng(0), GenConfig(), CTX, domain_hint=["e1"])
        assert phi.domain == ("e1",)

    def test_case_preconditions(self):
        for mode in ("finite", "countable"):
            cfg = GenConfig(mode=mode)
            for t in range(200):
                assert axioms._preconditions_hold(gen_case(trial_rng(cfg, t), cfg))


class TestChecks:
    def test_generated_cases_pass(self):
        cfg = GenConfig(mode="countable")
        for t in range(100):
            c = gen_case(trial_rng(cfg, t), cfg)
            assert check_information_axioms(c.phi, c.psi, c.chi, c.x, c.y, c.s) == []

    def test_degenerate(self):
        e = absolute([], CTX)
        assert check_information_axioms(e, e, e, [], []) == []

    def test_generator_violation(self):
        phi = absolute(["e1"], CTX)
        out = check_information_axioms(phi, phi, phi, ["e2"], ["e1"])
        assert [v.axiom for v in out] == ["generator"]

    def test_mutant_combine(self):
        phi = make_softset(["e1"], {"e1": Fin("u1")}, CTX)
        psi = make_softset(["e1"], {"e1": Fin("u2")}, CTX)
        out = check_information_axioms(phi, psi, phi, [], [], ops=MUTANTS["combine-drops-intersection"])
        assert {"Semigroup", "Combination"} & {v.axiom for v in out}

    def test_order_equivalence(self):
        phi = make_softset(["e1"], {"e1": Fin("u1")}, CTX)
        psi = make_softset(["e1", "e2"], {"e1": Fin(), "e2": Fin()}, CTX)
        assert check_order_equivalence(phi, psi)
        assert check_order_equivalence(phi, phi)
        assert check_order_equivalence(psi, phi)
        bad = MUTANTS["leq-ignores-pointwise"]
        assert not check_order_equivalence(make_softset(["e1"], {"e1": Fin()}, CTX), phi, bad)


class TestSuite:
    @pytest.mark.parametrize("mode", ["finite", "countable"])
    def test_passes(self, mode):
        report = run_suite(GenConfig(seed=7, trials=200, mode=mode))
        assert report.passed, [c.to_dict() for c in report.checks if not c.passed]

    def test_deterministic_bytes(self):
        cfg = GenConfig(seed=5, trials=100, mode="countable")
        assert run_suite(cfg).to_json() == run_suite(cfg).to_json()

    @pytest.mark.parametrize("name", sorted(MUTANTS))
    def test_counterexample_replays(self, name):
        ops = MUTANTS[name]
        report = run_suite(GenConfig(seed=42, trials=100), ops)
        failed = [c for c in report.checks if not c.passed]
        assert failed
        for c in failed:
            assert replay(c.name, c.counterexample, ops)
            assert not replay(c.name, c.counterexample)

    def test_shrink_reduces(self):
        ops = MUTANTS["combine-drops-intersection"]
        cfg = GenConfig(seed=3, mode="countable")
        for t in range(50):
            case = gen_case(trial_rng(cfg, t), cfg)
            if axioms.CHECKS["Semigroup"](case, ops):
                small = shrink(case, axioms.CHECKS["Semigroup"], ops)
                size = lambda c: sum(len(v.atoms) + 1 for p in c.softsets() for _, v in p.items)
                assert size(small) <= size(case)
                assert axioms.CHECKS["Semigroup"](small, ops)
                break
        else:
            pytest.fail("mutant never triggered")

    def test_case_round_trip(self):
        cfg = GenConfig(mode="countable")
        case = gen_case(trial_rng(cfg, 4), cfg)
        assert Case.from_dict(case.to_dict()) == case


def test_exhaustive_micro_model():
    counts = run_exhaustive(UniverseCtx.finite(["u1"], ["e1", "e2"]))
    assert counts["Associativity"] == {"checked": 729, "violations": 0}
    assert all(v["violations"] == 0 for v in counts.values())


def test_exhaustive_catches_mutant():
    counts = run_exhaustive(UniverseCtx.finite(["u1"], ["e1", "e2"]), MUTANTS["combine-drops-intersection"])
    assert counts["Semigroup"]["violations"] > 0
