"""
Regression tests for the four-network replication and the probes run on it
"""

import json
from itertools import combinations

import numpy as np
import pandas as pd
import pytest

from src.cli.commands import cli
from src.core.constants import PROBE_FREQUENCIES
from src.nnet.serialization import load_model
from src.probe.audit import equivalence_audit
from src.probe.regions import Box, enumerate_regions
from src.probe.response import ProbeSignal, empirical_frequency_response
from src.signals.fir import moving_average
from src.signals.spectrum import magnitude_response
from src.train.suite import SUITE_NETWORKS, replicate_reference_suite

PIECEWISE_LINEAR = ("relu_2_2_1", "leaky_2_2_1", "leaky_2_3_3_2_1")


@pytest.mark.regression
@pytest.mark.slow
class TestSuiteReplication:
    """Every suite network learns the two-tap average"""

    def test_piecewise_linear_networks_converge(self, suite_result):
        assert [entry.spec.name for entry in suite_result.entries] == [spec.name for spec in SUITE_NETWORKS]
        for name in PIECEWISE_LINEAR:
            report = suite_result.entry(name).report
            assert report.converged, f"{name} did not converge: {report}"
            assert report.final_train_mse <= 1e-4
            assert report.final_test_mse <= 2e-4
            assert abs(report.final_train_mse - report.final_test_mse) <= 1e-4
            assert report.restarts_used <= 10

    def test_sigmoid_network_plateaus_near_tolerance(self, suite_result):
        """Without biases the sigmoid output at the origin is fixed away from zero"""
        report = suite_result.entry("sigmoid_2_2_1").report
        assert report.final_train_mse <= 5e-4
        assert report.final_test_mse <= 1e-3
        assert report.converged == (report.final_train_mse <= 1e-4)

    def test_every_network_trains(self, suite_result):
        for entry in suite_result.entries:
            assert entry.report.steps_used > 0, entry.spec.name

    def test_refinement_tightens_training_error(self, suite_result):
        for name in PIECEWISE_LINEAR:
            assert suite_result.entry(name).report.final_train_mse <= 2e-5, name

    def test_relu_network_has_six_weights(self, suite_result):
        assert suite_result.entry("relu_2_2_1").model.parameter_count == 6

    def test_deep_network_shapes(self, suite_result):
        model = suite_result.entry("leaky_2_3_3_2_1").model
        assert [w.shape for w in model.weights] == [(2, 3), (3, 3), (3, 2), (2, 1)]

    def test_summary_table(self, suite_result):
        summary = suite_result.summary()
        assert list(summary.columns) == ["model", "activation", "L", "widths", "train_mse", "test_mse", "steps", "converged"]
        assert summary["L"].tolist() == [1, 1, 1, 3]
        assert summary.set_index("model").loc[list(PIECEWISE_LINEAR), "converged"].all()
        assert (summary["converged"] == (summary["train_mse"] <= 1e-4)).all()

    @pytest.mark.parametrize("name", PIECEWISE_LINEAR)
    def test_empirical_gain_tracks_analytic(self, suite_result, name):
        analytic = magnitude_response(moving_average(2), PROBE_FREQUENCIES).magnitude
        probe = ProbeSignal(0.5, 0.25, 256)
        measured = empirical_frequency_response(suite_result.entry(name).model, PROBE_FREQUENCIES, probe).gain
        np.testing.assert_allclose(measured, analytic, atol=0.05)

    def test_sigmoid_gain_is_low_pass(self, suite_result):
        analytic = magnitude_response(moving_average(2), PROBE_FREQUENCIES).magnitude
        probe = ProbeSignal(0.5, 0.25, 256)
        measured = empirical_frequency_response(suite_result.entry("sigmoid_2_2_1").model, PROBE_FREQUENCIES, probe).gain
        np.testing.assert_allclose(measured, analytic, atol=0.1)
        assert np.all(np.diff(measured) < 0)

    @pytest.mark.parametrize("name", PIECEWISE_LINEAR)
    def test_dominant_region_reads_as_the_average(self, suite_result, name):
        regions = enumerate_regions(suite_result.entry(name).model, Box.cube(2), 101)
        np.testing.assert_allclose(regions[0].taps, [0.5, 0.5], atol=0.1)


@pytest.mark.regression
@pytest.mark.slow
class TestNonUniqueness:
    """Equivalent functions, distinct parameters"""

    def test_piecewise_linear_outputs_agree(self, suite_result):
        for a, b in combinations(PIECEWISE_LINEAR, 2):
            result = equivalence_audit(suite_result.entry(a).model, suite_result.entry(b).model, Box.cube(2), 101)
            assert result.sup_output_diff <= 0.02, f"{a} vs {b}"
            assert result.equivalent

    def test_sigmoid_outputs_stay_close(self, suite_result):
        sigmoid = suite_result.entry("sigmoid_2_2_1").model
        for name in PIECEWISE_LINEAR:
            result = equivalence_audit(sigmoid, suite_result.entry(name).model, Box.cube(2), 101)
            assert result.sup_output_diff <= 0.2, name

    def test_same_shape_pairs_differ_in_weights(self, suite_result):
        shallow = [e for e in suite_result.entries if e.model.widths == (2, 2, 1)]
        assert len(shallow) == 3
        for a, b in combinations(shallow, 2):
            result = equivalence_audit(a.model, b.model, Box.cube(2), 101)
            assert result.weight_distance >= 0.05, f"{a.spec.name} vs {b.spec.name}"

    def test_deep_network_is_not_comparable(self, suite_result):
        result = equivalence_audit(
            suite_result.entry("relu_2_2_1").model,
            suite_result.entry("leaky_2_3_3_2_1").model,
            Box.cube(2),
            101,
        )
        assert result.to_dict()["weight_distance"] == "not-comparable"


@pytest.mark.regression
@pytest.mark.slow
class TestDeterminism:
    """Same seed, same trained weights"""

    def test_repeat_run_is_bit_identical(self):
        networks = SUITE_NETWORKS[1:3]
        first = replicate_reference_suite(7, networks=networks, threads=2)
        second = replicate_reference_suite(7, networks=networks, threads=1)
        pd.testing.assert_frame_equal(first.summary(), second.summary())
        assert first.models() == second.models()


@pytest.mark.regression
@pytest.mark.slow
class TestSuiteCommand:
    """Full `filterlab suite` run"""

    def test_writes_every_artifact(self, cli_runner, tmp_path, suite_seed):
        result = cli_runner.invoke(cli, ["suite", "--seed", str(suite_seed), "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        for spec in SUITE_NETWORKS:
            model = load_model(tmp_path / f"{spec.name}.json")
            assert model.widths == spec.widths
            report = json.loads((tmp_path / f"{spec.name}.report.json").read_text())
            assert report["converged"] == (report["final_train_mse"] <= 1e-4)
        summary = pd.read_csv(tmp_path / "suite_summary.csv")
        assert len(summary) == 4
        assert summary.set_index("model").loc[list(PIECEWISE_LINEAR), "converged"].all()
        audit = pd.read_csv(tmp_path / "suite_audit.csv")
        assert len(audit) == 6
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        assert manifest["command"] == "suite"
        assert len(manifest["artifacts"]) == 10
