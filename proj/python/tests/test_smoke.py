import math

import pytest

import ntn_offload as sim


def test_defaults_and_overrides():
    cfg = sim.load_config()
    assert cfg.edge_class == "HAP"
    assert cfg.num_uavs == 20
    assert cfg.bandwidth == pytest.approx(20e6)

    leo = sim.load_config(overrides={"edge_class": "LEO", "num_uavs": 4})
    assert leo.edge_class == "LEO"
    assert leo.num_uavs == 4
    assert sim.load_config(leo.to_json()) == leo


def test_invalid_config_raises_value_error():
    with pytest.raises(ValueError, match="num_uavs"):
        sim.load_config(overrides={"num_uavs": 0})
    with pytest.raises(sim.ConfigError):
        sim.load_config('{"warp": 1}')
    with pytest.raises(ValueError):
        sim.load_config("{not json")


def test_local_delay_reference_points():
    fast = sim.load_config(overrides={"offload_factor": 0, "frame_rate": 1})
    assert sim.local_delay(fast) == pytest.approx(0.0900013453, rel=1e-9)
    busy = sim.load_config(overrides={"offload_factor": 0, "frame_rate": 10})
    assert sim.local_delay(busy) == pytest.approx(0.466079348, rel=1e-9)
    overloaded = sim.load_config(overrides={"offload_factor": 0, "frame_rate": 12})
    assert sim.local_delay(overloaded) is None


def test_queue_helpers():
    assert sim.load_factor(arrival_rate=9, service_rate=10) == pytest.approx(0.9)
    d = sim.solve_delta(arrival_rate=0.9, service_rate=1.0)
    assert d == pytest.approx(0.8068998328558028, rel=1e-12)
    assert d == pytest.approx(math.exp(-(1 - d) / 0.9), rel=1e-12)
    assert sim.bisect_delta(arrival_rate=0.9, service_rate=1.0) == pytest.approx(d, abs=1e-10)
    assert sim.sojourn_time(arrival_rate=0, service_rate=20) == pytest.approx(0.05)
    assert sim.sojourn_time(arrival_rate=20, service_rate=20) is None


def test_evaluate_row():
    row = sim.evaluate(sim.load_config(overrides={"offload_factor": 1, "num_uavs": 15, "frame_rate": 1}))
    assert row["edge_class"] == "HAP"
    assert row["edge_delay"] == pytest.approx(0.2234858329, rel=1e-9)
    assert row["avg_delay"] == row["edge_delay"]
    parts = row["uav_energy"]
    assert parts["total"] == pytest.approx(parts["movement"] + parts["processing"] + parts["offloading"])
    assert 0 < row["autonomy"] < 1


def test_physics_helpers():
    assert sim.hover_power(3.0, 0.3, 1.0) == pytest.approx(212.3118, abs=1e-3)
    assert sim.slant_range_leo(90, 600e3) == pytest.approx(600e3)
    assert sim.slant_range_leo(10, 600e3) > sim.slant_range_leo(70, 600e3)
    assert sim.shannon_capacity(20e6, 1.0) == pytest.approx(20e6)
    assert sim.path_loss_db(19.9e3, 30e9) == pytest.approx(147.967, abs=1e-3)
    with pytest.raises(ValueError):
        sim.slant_range_leo(95, 600e3)


def test_sweep_and_figures():
    csv = sim.sweep_csv([("offload_factor", ["0", "1"]), ("frame_rate", ["1", "5", "10"])])
    lines = csv.splitlines()
    assert lines[0] == "# ntn-offload-sim 1.0.0"
    body = [l for l in lines if not l.startswith("#")]
    assert len(body) == 1 + 6
    assert body[0].startswith("edge_class,offload_factor,num_uavs,frame_rate")

    ids = sim.figure_ids()
    assert "stability" in ids and "edge-energy" in ids
    assert sim.figure_csv("leo-delay") == sim.figure_csv("leo-delay")
    with pytest.raises(ValueError):
        sim.figure_csv("nope")


def test_simulation_matches_analysis():
    r = sim.simulate_dm1(arrival_rate=5.0, service_rate=10.0, arrivals=200_000, seed=3)
    analytic = sim.sojourn_time(arrival_rate=5.0, service_rate=10.0)
    assert abs(r["mean_sojourn"] - analytic) <= r["confidence_halfwidth"] + 0.01 * analytic
