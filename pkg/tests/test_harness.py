import json
import math

import pandas as pd
import pytest
from pydantic import ValidationError
from scipy import stats

from gfflab import __version__
from gfflab.errors import ConfigError, RecordFormatError
from gfflab.harness import (
    EstimateRecord,
    ExperimentConfig,
    append_records,
    completed_cells,
    linear_slope,
    load_experiment_config,
    loglog_slope,
    mean_estimate,
    proportion,
    read_records,
    resolve_workers,
    run_experiment,
    summarize,
    wilson_interval,
)


def _config(tmp_path, **fields):
    fields.setdefault("id", "test")
    fields.setdefault("out", tmp_path / "results.jsonl")
    return ExperimentConfig(**fields)


def _record(**fields):
    base = dict(
        experiment="test",
        command="one-arm-bulk",
        cell="test|one-arm-bulk|N=16|h=0|mode=discrete|replicas=0:10",
        N=16,
        h=0.0,
        mode="discrete",
        event="one_arm_bulk",
        replicas=10,
        successes=4,
        estimate=0.4,
        se=0.15,
        ci_low=0.17,
        ci_high=0.69,
        seed=0,
        kappa=4.0,
        artifact_version=__version__,
    )
    base.update(fields)
    return EstimateRecord(**base)


def _by_key(records):
    return {(r.cell, r.event, r.mode): (r.successes, r.estimate) for r in records}


def test_config_validation(tmp_path):
    with pytest.raises(ValidationError):
        _config(tmp_path, experiment="one-arm-bulk", replicas=0)
    with pytest.raises(ValidationError):
        _config(tmp_path, experiment="chem-dist", mode="metric")
    with pytest.raises(ValidationError):
        _config(tmp_path, experiment="circuit", alpha=0.5, beta=0.25)
    with pytest.raises(ValidationError):
        _config(tmp_path, experiment="one-arm-bulk", r=0.75)
    with pytest.raises(ValidationError):
        _config(tmp_path, experiment="martingale-audit", N=[16], layers=[4, 2])
    with pytest.raises(ValidationError):
        _config(tmp_path, experiment="green-audit", colour="blue")
    assert _config(tmp_path, experiment="gap", mode="discrete").mode == "coupled"


def test_replica_budget(tmp_path):
    boundary = _config(tmp_path, experiment="one-arm-boundary")
    assert boundary.replica_budget(0.5) == 1_000_000
    assert boundary.replica_budget(-0.5) == 100_000
    assert _config(tmp_path, experiment="green-audit").replica_budget() == 1
    assert _config(tmp_path, experiment="gap", replicas=7).replica_budget(1.0) == 7


def test_config_echo_leaves_out_execution_fields(tmp_path):
    echo = _config(tmp_path, experiment="one-arm-bulk", workers=3).echo()
    for key in ("workers", "out", "trace_export", "chunk_size"):
        assert key not in echo
    assert echo["experiment"] == "one-arm-bulk"
    assert echo["envelope"]["rho"] == 0.25


def test_default_layers(tmp_path):
    config = _config(tmp_path, experiment="martingale-audit", N=[64])
    assert config.layers_for(64) == [8, 16, 32]


def test_record_checks_counts():
    with pytest.raises(ValidationError):
        _record(successes=11)
    with pytest.raises(ValidationError):
        _record(ci_high=1.2)
    assert _record(successes=None, estimate=2.5, ci_low=2.5, ci_high=2.5).estimate == 2.5


def test_record_json_line_key_order():
    line = _record(details={"b": 1, "a": 2}).to_json_line()
    payload = json.loads(line)
    assert list(payload)[:8] == ["experiment", "command", "cell", "N", "h", "mode", "event", "replicas"]
    assert list(payload)[-2:] == ["details", "config"]
    assert list(payload["details"]) == ["a", "b"]
    assert "wall_time" not in payload
    assert json.loads(_record(wall_time=1.5).to_json_line())["wall_time"] == 1.5


def test_proportion_and_wilson():
    low, high = wilson_interval(5, 10)
    assert low == pytest.approx(0.23659, abs=1e-4)
    assert high == pytest.approx(0.76341, abs=1e-4)
    assert wilson_interval(0, 10)[0] == 0.0
    assert wilson_interval(10, 10)[1] == 1.0
    assert wilson_interval(3, 3) == (pytest.approx(0.43850, abs=1e-4), 1.0)
    assert proportion(50, 50).ci_high == 1.0
    estimate = proportion(30, 100)
    assert estimate.estimate == 0.3
    assert estimate.se == pytest.approx(math.sqrt(0.21 / 100))
    assert proportion(0, 0) == (0.0, 0.0, 0.0, 1.0)


def test_mean_estimate():
    estimate = mean_estimate([1.0, 2.0, 3.0])
    assert estimate.estimate == 2.0
    assert estimate.se == pytest.approx(1.0 / math.sqrt(3))
    assert math.isnan(mean_estimate([]).estimate)


def test_planted_loglog_slope():
    sizes = [16, 32, 64, 128]
    fit = loglog_slope(sizes, [3.0 * n**-0.5 for n in sizes])
    assert fit.slope == pytest.approx(-0.5, abs=1e-12)
    assert fit.intercept == pytest.approx(math.log(3.0), abs=1e-12)
    assert fit.points == 4
    with pytest.raises(ValueError):
        linear_slope([1.0], [2.0])


def test_read_records_reports_line(tmp_path):
    path = tmp_path / "results.jsonl"
    append_records(path, [_record()])
    with open(path, "a", encoding="utf-8") as handle:
        handle.write("{broken\n")
    with pytest.raises(RecordFormatError) as excinfo:
        read_records(path)
    assert excinfo.value.line_number == 2


def test_read_records_rejects_invalid_record(tmp_path):
    path = tmp_path / "results.jsonl"
    path.write_text('{"experiment": "x"}\n', encoding="utf-8")
    with pytest.raises(RecordFormatError):
        read_records(path)


def test_completed_cells(tmp_path):
    path = tmp_path / "results.jsonl"
    assert completed_cells(path) == set()
    append_records(path, [_record(), _record(event="other")])
    assert completed_cells(path) == {_record().cell}


def test_small_coupled_run(tmp_path):
    config = _config(tmp_path, experiment="one-arm-bulk", N=[8], h=[-0.5, 0.5], mode="coupled", replicas=40, chunk_size=16)
    records = run_experiment(config)
    assert len(records) == 4
    assert read_records(config.out) == records
    by_mode = {(r.h, r.mode): r for r in records}
    for h in (-0.5, 0.5):
        assert by_mode[(h, "metric")].successes <= by_mode[(h, "discrete")].successes
        assert by_mode[(h, "metric")].details["coupled_violations"] == 0
    assert by_mode[(-0.5, "discrete")].successes >= by_mode[(0.5, "discrete")].successes
    assert all(r.config["experiment"] == "one-arm-bulk" for r in records)
    assert config.out.with_name("results.jsonl.metrics.log").exists()


def test_results_independent_of_workers(tmp_path):
    fields = dict(experiment="one-arm-bulk", N=[6], h=[0.0], mode="coupled", replicas=30, chunk_size=7)
    serial = _config(tmp_path, out=tmp_path / "serial.jsonl", workers=1, **fields)
    parallel = _config(tmp_path, out=tmp_path / "parallel.jsonl", workers=2, **fields)
    run_experiment(serial)
    run_experiment(parallel)
    assert serial.out.read_bytes() == parallel.out.read_bytes()


def test_resume_skips_completed_cells(tmp_path):
    fields = dict(experiment="one-arm-bulk", N=[6], mode="discrete", replicas=20, out=tmp_path / "r.jsonl")
    full = run_experiment(_config(tmp_path, h=[-0.5, 0.5], **{**fields, "out": tmp_path / "full.jsonl"}))

    run_experiment(_config(tmp_path, h=[-0.5], **fields))
    resumed = run_experiment(_config(tmp_path, h=[-0.5, 0.5], **fields))
    assert {r.h for r in resumed} == {0.5}
    assert run_experiment(_config(tmp_path, h=[-0.5, 0.5], **fields)) == []
    assert _by_key(read_records(tmp_path / "r.jsonl")) == _by_key(full)


def test_gap_records(tmp_path):
    config = _config(tmp_path, experiment="gap", N=[8], h=[0.0], replicas=30)
    (record,) = run_experiment(config)
    details = record.details
    assert record.mode == "coupled"
    assert details["coupled_violations"] == 0
    assert details["diff"] == pytest.approx(details["p_disc"] - details["p_metric"])
    assert details["diff"] >= 0
    assert record.estimate == pytest.approx(details["diff"])


def test_boundary_oracle_only_below_zero(tmp_path):
    config = _config(tmp_path, experiment="one-arm-boundary", N=[6], h=[-0.5, 0.5], mode="metric", replicas=20)
    records = run_experiment(config)
    assert {r.event for r in records} == {"one_arm_boundary", "one_arm_outer"}
    for record in records:
        if record.h < 0:
            assert 0 < record.oracle < 1
        else:
            assert record.oracle is None


def test_circuit_records(tmp_path):
    config = _config(tmp_path, experiment="circuit", N=[8], h=[-0.5, 0.5], replicas=20, audit_replicas=10)
    records = run_experiment(config)
    assert len(records) == 2
    for record in records:
        assert record.details["audited"] == 10
        assert record.details["audit_disagreements"] == 0


def test_psi_audit(tmp_path):
    config = _config(tmp_path, experiment="psi-audit", psi_grid=[{"m": 0.0, "b": 1.0, "T": 1.0}], replicas=2_500)
    (record,) = run_experiment(config)
    assert record.mode == "brownian"
    assert record.replicas == 2_500
    assert record.N is None and record.h is None
    assert abs(record.estimate - record.oracle) <= 4 * record.se
    assert record.details["steps"] == 64


def test_green_audit(tmp_path):
    config = _config(tmp_path, experiment="green-audit", N=[4, 16])
    records = run_experiment(config)
    events = [(r.N, r.event) for r in records]
    assert events == [
        (4, "green_origin"),
        (4, "beurling_escape"),
        (16, "green_origin"),
        (16, "beurling_escape"),
        (16, "hitting_estimate"),
    ]
    origins = [r.estimate for r in records if r.event == "green_origin"]
    assert 1 < origins[0] < origins[1]
    assert all(r.replicas == 0 and r.mode == "exact" for r in records)


def test_green_audit_brackets(tmp_path):
    records = run_experiment(_config(tmp_path, experiment="green-audit", N=[16, 32, 64]))
    by_event = {}
    for record in records:
        by_event.setdefault(record.event, []).append(record)

    for record in by_event["green_origin"]:
        assert 0.6 <= record.details["ratio_log_N"] <= 1.2
        assert 0.9 <= record.estimate - 2 / math.pi * math.log(record.N) <= 1.4

    escapes = [r.details["sqrt_n_scaled"] for r in by_event["beurling_escape"]]
    assert all(0.1 <= value <= 10 for value in escapes)
    assert max(escapes) / min(escapes) <= 1.5

    hits = [r.details["scaled"] for r in by_event["hitting_estimate"]]
    assert all(0.05 <= value <= math.log(4) for value in hits)
    assert max(hits) / min(hits) <= 1.5


def test_conditional_arm(tmp_path):
    config = _config(
        tmp_path, experiment="conditional-arm", N=[8], h=[-0.5], x_values=[0.5, 2.0], mode="coupled", replicas=30
    )
    records = run_experiment(config)
    assert len(records) == 4
    by_cell = {(r.details["x"], r.mode): r for r in records}
    for x in (0.5, 2.0):
        assert by_cell[(x, "metric")].successes <= by_cell[(x, "discrete")].successes
        assert by_cell[(x, "discrete")].details["g_lower"] is not None
    assert by_cell[(2.0, "discrete")].successes >= by_cell[(0.5, "discrete")].successes


def test_martingale_audit_exports_traces(tmp_path):
    config = _config(
        tmp_path,
        experiment="martingale-audit",
        N=[8],
        h=[-0.5, 0.0],
        replicas=20,
        layers=[1, 2, 4],
        trace_export=tmp_path / "traces" / "trace.csv",
        trace_export_replicas=3,
    )
    records = run_experiment(config)
    assert len(records) == 10
    events = {r.event for r in records}
    assert events == {"increment_max_z", "optional_stopping", "qv_ratio_1_2", "qv_ratio_2_4", "terminal_below_level"}
    terminal = [r for r in records if r.event == "terminal_below_level"]
    assert all(r.replicas <= r.details["attempted"] == 20 for r in terminal)

    frame = pd.read_csv(tmp_path / "traces" / "trace_N8_h-0.5.csv")
    assert set(frame["replica"]) == {0, 1, 2}
    assert list(frame.columns) == ["replica", "step", "explored", "martingale", "harmonic"]
    assert (tmp_path / "traces" / "trace_N8_h0.csv").exists()


def test_martingale_audit_statistics_across_seeds(tmp_path):
    ratios = []
    for seed in (2, 3):
        config = _config(
            tmp_path,
            experiment="martingale-audit",
            N=[12],
            h=[0.0],
            replicas=3_000,
            seed=seed,
            workers=2,
            out=tmp_path / f"seed{seed}.jsonl",
        )
        by_event = {r.event: r for r in run_experiment(config)}

        increments = by_event["increment_max_z"]
        n_strata = increments.details["n_strata"]
        assert n_strata > 0
        assert increments.estimate <= stats.norm.isf(5e-5 / n_strata)

        stopping = by_event["optional_stopping"]
        assert stopping.details["z"] is not None
        assert abs(stopping.details["z"]) <= 4

        ratios.append({e: r for e, r in by_event.items() if e.startswith("qv_ratio_")})

    first, second = ratios
    assert set(first) == {"qv_ratio_1_3", "qv_ratio_3_6"}
    for event, record in first.items():
        other = second[event]
        assert record.estimate > 0 and other.estimate > 0
        assert abs(record.estimate - other.estimate) <= 4 * math.hypot(record.se, other.se)


def test_chemical_distance_records(tmp_path):
    config = _config(
        tmp_path, experiment="chem-dist", N=[16], h=[-0.5], alpha=0.125, beta=0.25, gamma=0.5, replicas=20
    )
    (record,) = run_experiment(config)
    assert record.details["attempted"] == 20
    assert record.replicas == record.details["conditioned"] <= 20
    if record.replicas:
        assert record.details["min_normalized"] > 0


def test_summarize_empty_file(tmp_path):
    source = tmp_path / "empty.jsonl"
    source.write_text("", encoding="utf-8")
    summary = summarize(source, tmp_path / "summary")
    assert summary.warnings
    for name in ("estimates.csv", "claims.csv", "slopes.csv"):
        assert (tmp_path / "summary" / name).exists()
    assert summary.slopes.empty


def test_summarize_recovers_planted_slope(tmp_path):
    source = tmp_path / "planted.jsonl"
    records = [
        _record(cell=f"test|one-arm-bulk|N={n}|h=0|mode=discrete|replicas=0:10", N=n, estimate=2.0 * n**-0.25)
        for n in (16, 32, 64, 128)
    ]
    append_records(source, records)
    summary = summarize(source, tmp_path / "summary")
    assert not summary.warnings
    assert len(summary.claims) == 4
    assert summary.claims["normalized"].iloc[0] == pytest.approx(2.0 * 16**-0.25 * math.sqrt(math.log(16)))
    (slope,) = summary.slopes["slope"]
    assert slope == pytest.approx(-0.25, abs=1e-12)


def test_load_experiment_config(tmp_path):
    path = tmp_path / "run.yml"
    path.write_text("id: demo\nexperiment: green-audit\nN: [4]\n", encoding="utf-8")
    config = load_experiment_config(path, {"experiment": "green-audit", "seed": 9, "out": None})
    assert config.seed == 9
    assert config.out.name == "results.jsonl"
    with pytest.raises(ConfigError):
        load_experiment_config(path, {"experiment": "gap"})
    with pytest.raises(FileNotFoundError):
        load_experiment_config(tmp_path / "missing.yml")
    listing = tmp_path / "list.yml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_experiment_config(listing)


def test_resolve_workers(isolated_settings):
    assert resolve_workers(3, 1) == 3
    assert resolve_workers(None, 2) == 2
    isolated_settings.workers = 5
    assert resolve_workers(None, 2) == 5
    assert resolve_workers(1, 2) == 1
