import dataclasses

import numpy as np
import pytest

from capacities import (
    AXIOM_NAMES,
    AxiomCheckConfig,
    CapacitiesError,
    DomainMismatch,
    UnknownAxiom,
    as_capacity,
    certify,
    check_axiom,
    check_equivalence,
    check_pseudo_product,
    compare_extensions,
    make_extension,
    mle,
    mobius,
)
from helpers import random_additive_capacity, random_capacity

OVERLAP = as_capacity([0.0, 0.9, 0.9, 1.0])
CFG = AxiomCheckConfig(samples=300, seed=42)
UNIT_CFG = AxiomCheckConfig(
    samples=300, seed=42, score_bounds=(0.0, 1.0), alpha_bounds=(1e-3, 1.0)
)


def run_row(name, mu, cfg=None):
    ext = make_extension(name, mu)
    if cfg is None:
        cfg = UNIT_CFG if ext.domain == "unit" else CFG
    return {ax: check_axiom(ax, ext, mu, cfg) for ax in AXIOM_NAMES}


class TestConfig:
    def test_rejects_bad_values(self):
        with pytest.raises(CapacitiesError):
            AxiomCheckConfig(samples=0)
        with pytest.raises(CapacitiesError):
            AxiomCheckConfig(tol=0.0)
        with pytest.raises(CapacitiesError):
            AxiomCheckConfig(score_bounds=(2.0, 1.0))
        with pytest.raises(CapacitiesError):
            AxiomCheckConfig(alpha_bounds=(0.0, 1.0))

    def test_defaults(self):
        cfg = AxiomCheckConfig()
        assert cfg.samples == 1000
        assert cfg.seed == 42
        assert cfg.tol == 1e-9


class TestPropertyTable:
    def test_sipos_row(self):
        row = run_row("sipos", OVERLAP)
        for ax in ("HE", "A", "M", "M1", "I", "A1", "A2", "S1"):
            assert row[ax].passed, ax
        assert not row["C1"].passed

    def test_choquet_row(self):
        row = run_row("choquet", OVERLAP)
        for ax in ("HE", "A2", "M", "M1", "I", "C1"):
            assert row[ax].passed, ax
        for ax in ("A", "A1", "S1"):
            assert not row[ax].passed, ax

    def test_multilinear_row_on_unit_cube(self):
        row = run_row("mle", OVERLAP)
        for ax in ("A", "M", "M1", "A1"):
            assert row[ax].passed, ax
        for ax in ("HE", "I", "A2"):
            assert not row[ax].passed, ax

    def test_multilinear_monotone_fails_on_reals(self):
        ext = make_extension("mle", OVERLAP)
        cfg = dataclasses.replace(CFG, allow_out_of_domain=True)
        rep = check_axiom("M", ext, OVERLAP, cfg)
        assert not rep.passed
        ce = rep.counterexample
        assert ce is not None
        lo = np.array(ce.inputs["t"])
        hi = np.array(ce.inputs["t_above"])
        m = mobius(OVERLAP)
        assert mle(m, lo) > mle(m, hi)

    def test_additive_capacity_passes_everything_linear(self):
        mu = random_additive_capacity(np.random.default_rng(0), 3)
        row = run_row("choquet", mu)
        for ax in AXIOM_NAMES:
            assert row[ax].passed, ax


class TestCounterexamples:
    def test_choquet_asymmetry_witness_reevaluates(self):
        ext = make_extension("choquet", OVERLAP)
        rep = check_axiom("A", ext, OVERLAP, CFG)
        ce = rep.counterexample
        assert ce is not None
        got = ext(ce.inputs["t"])
        assert got == pytest.approx(ce.got, abs=1e-12)
        assert ce.discrepancy == pytest.approx(abs(ce.got - ce.expected), abs=1e-12)
        # negative singleton weighted by the conjugate, not mu itself
        i = ce.inputs["criterion"]
        a = ce.inputs["value"]
        assert a < 0
        assert ce.got == pytest.approx(a * (1.0 - 0.9), abs=1e-9)
        assert ce.expected == pytest.approx(a * 0.9, abs=1e-9)
        assert i in (1, 2)

    def test_choquet_ratio_witness_straddles_zero(self):
        ext = make_extension("choquet", OVERLAP)
        rep = check_axiom("A1", ext, OVERLAP, CFG)
        ce = rep.counterexample
        assert ce is not None
        points = ce.inputs["points"]
        assert min(points) < 0 < max(points)

    def test_mle_homogeneity_witness(self):
        ext = make_extension("mle", OVERLAP)
        rep = check_axiom("HE", ext, OVERLAP, UNIT_CFG)
        ce = rep.counterexample
        assert ce is not None
        assert ce.expected == pytest.approx(ce.inputs["alpha"] * OVERLAP[0b11], abs=1e-9)

    def test_to_dict_shape(self):
        ext = make_extension("choquet", OVERLAP)
        d = check_axiom("S1", ext, OVERLAP, CFG).to_dict()
        assert d["axiom"] == "S1"
        assert d["extension"] == "choquet"
        assert d["passed"] is False
        assert d["counterexample"]["discrepancy"] > 0
        passing = check_axiom("M", ext, OVERLAP, CFG).to_dict()
        assert passing["passed"] is True
        assert passing["counterexample"] is None


class TestHarness:
    def test_unknown_axiom(self):
        ext = make_extension("choquet", OVERLAP)
        with pytest.raises(UnknownAxiom):
            check_axiom("Z9", ext, OVERLAP, CFG)

    def test_dimension_guard(self):
        ext = make_extension("choquet", OVERLAP)
        mu3 = random_capacity(np.random.default_rng(1), 3)
        with pytest.raises(CapacitiesError):
            check_axiom("M", ext, mu3, CFG)

    def test_unit_domain_guard(self):
        ext = make_extension("mle", OVERLAP)
        with pytest.raises(DomainMismatch):
            check_axiom("M", ext, OVERLAP, CFG)

    def test_deterministic_given_seed(self):
        ext = make_extension("choquet", OVERLAP)
        a = check_axiom("A1", ext, OVERLAP, CFG)
        b = check_axiom("A1", ext, OVERLAP, CFG)
        assert a.to_dict() == b.to_dict()

    def test_ratio_checks_report_skips(self):
        # sampled quadruples with a tiny denominator are skipped, not failed
        mu = random_additive_capacity(np.random.default_rng(2), 2)
        ext = make_extension("choquet", mu)
        rep = check_axiom("A2", ext, mu, AxiomCheckConfig(samples=500, seed=7))
        assert rep.passed
        assert rep.skipped > 0
        assert rep.samples_tested > 0


class TestEquivalence:
    def test_sipos_bundles_both_pass(self):
        ext = make_extension("sipos", OVERLAP)
        rep = check_equivalence(ext, OVERLAP, CFG)
        assert rep.ratio_passed and rep.homogeneity_passed
        assert rep.consistent
        assert rep.monotone.passed
        assert set(rep.ratio_bundle) == {"A1", "A2", "I"}
        assert set(rep.homogeneity_bundle) == {"HE", "A"}

    def test_choquet_bundles_both_fail(self):
        ext = make_extension("choquet", OVERLAP)
        rep = check_equivalence(ext, OVERLAP, CFG)
        assert not rep.ratio_passed
        assert not rep.homogeneity_passed
        assert rep.consistent
        assert not rep.ratio_bundle["A1"].passed
        assert not rep.homogeneity_bundle["A"].passed

    def test_to_dict_round_trips_flags(self):
        ext = make_extension("sipos", OVERLAP)
        d = check_equivalence(ext, OVERLAP, CFG).to_dict()
        assert d["consistent"] is True
        assert d["monotone"]["passed"] is True


class TestPseudoProductChecker:
    def test_min_satisfies_all_conditions(self):
        rep = check_pseudo_product(certify(min, "min"))
        assert all(rep.conditions.values())
        assert rep.witnesses == {}
        assert rep.acts_as_min
        assert rep.max_min_gap <= 1e-12

    def test_product_fails_idempotence(self):
        rep = check_pseudo_product(certify(lambda a, b: a * b, "product"))
        assert rep.conditions["commutative"]
        assert rep.conditions["associative"]
        assert rep.conditions["one_neutral"]
        assert not rep.conditions["idempotent"]
        w = rep.witnesses["idempotent"]
        assert w["alpha"] == pytest.approx(0.5)
        assert w["value"] == pytest.approx(0.25)
        assert not rep.acts_as_min

    def test_lukasiewicz_fails_idempotence(self):
        rep = check_pseudo_product(
            certify(lambda a, b: max(0.0, a + b - 1.0), "lukasiewicz")
        )
        assert not rep.conditions["idempotent"]
        w = rep.witnesses["idempotent"]
        assert w["alpha"] == pytest.approx(0.5)
        assert w["value"] == pytest.approx(0.0)
        assert not rep.acts_as_min

    def test_accepts_raw_callable(self):
        rep = check_pseudo_product(min)
        assert rep.acts_as_min

    def test_non_commutative_witness(self):
        rep = check_pseudo_product(certify(lambda a, b: a, "left-projection"))
        assert not rep.conditions["commutative"]
        assert rep.witnesses["commutative"]["max_gap"] == pytest.approx(1.0)


class TestCompareExtensions:
    def test_table_and_verdicts(self):
        points = [(1.0, 1.0), (3.0, 3.0), (0.0, 0.0)]
        cmpres = compare_extensions(OVERLAP, points, CFG)
        assert "cpt" not in cmpres.operators
        assert len(cmpres.operators) == 5
        assert cmpres.table.shape == (3, 5)
        for val in cmpres.table[0]:
            assert val == pytest.approx(1.0, abs=1e-9)
        for val in cmpres.table[2]:
            assert val == pytest.approx(0.0, abs=1e-9)
        col = cmpres.operators.index("mle")
        assert cmpres.table[1][col] == pytest.approx(-1.8, abs=1e-12)
        assert cmpres.verdicts["choquet"]["M"]
        assert not cmpres.verdicts["mle"]["M"]
        assert cmpres.verdicts["sipos"]["A1"]
        assert not cmpres.verdicts["choquet"]["A1"]

    def test_to_dict_is_json_friendly(self):
        import json

        cmpres = compare_extensions(OVERLAP, [(0.5, 0.2)], CFG)
        json.dumps(cmpres.to_dict())
