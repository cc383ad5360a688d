import math

import pytest

import fairfront as ff


def close(a, b):
    return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def test_gaussian_generator():
    ds = ff.gen_gaussian(40, 2, [0.5, 0.5], seed=7)
    assert ds.n() == 40
    assert ds.dim() == 2
    assert ds.l() == 2
    assert sum(ds.attr_counts()) == 40
    again = ff.gen_gaussian(40, 2, [0.5, 0.5], seed=7)
    assert again.points == ds.points
    assert again.attrs == ds.attrs


def test_vanilla_cluster_trace_monotone():
    ds = ff.gen_gaussian(60, 3, [0.5, 0.5], seed=11)
    res = ff.vanilla_cluster(ds, 3, p="2", seed=4)
    trace = res.cost_trace
    assert len(trace) >= 1
    assert all(trace[i + 1] <= trace[i] + 1e-9 for i in range(len(trace) - 1))
    assert close(res.cost, trace[-1])


def test_dp_front_matches_brute():
    ds = ff.gen_gaussian(8, 2, [0.5, 0.5], seed=3)
    centers = ff.kmeanspp_seed(ds, 2, seed=5)
    dp = ff.solve(ds, centers, objective="balance", algorithm="dp")
    brute = ff.solve(ds, centers, objective="balance", algorithm="brute")
    assert len(dp) == len(brute)
    for a, b in zip(dp.entries, brute.entries):
        assert a.fairness == b.fairness
        assert close(a.cost, b.cost)
        assert a.pattern.counts == b.pattern.counts


def test_imbalance_matching_agrees_with_dp():
    ds = ff.gen_gaussian(10, 2, [0.5, 0.5], seed=9)
    centers = ff.kmeanspp_seed(ds, 2, seed=2)
    via_dp = ff.solve(ds, centers, objective="sum-imbalance", algorithm="dp")
    via_matching = ff.solve(ds, centers, objective="sum-imbalance",
                            algorithm="matching", threads=2)
    assert [(float(e.fairness)) for e in via_dp.entries] == \
           [(float(e.fairness)) for e in via_matching.entries]
    for a, b in zip(via_dp.entries, via_matching.entries):
        assert close(a.cost, b.cost)


def test_non_mergeable_requires_opt_in():
    ds = ff.gen_gaussian(6, 2, [0.5, 0.5], seed=1)
    centers = ff.kmeanspp_seed(ds, 2, seed=1)
    with pytest.raises(ff.ConfigError):
        ff.solve(ds, centers, objective="max-imbalance", algorithm="dp")
    front = ff.solve(ds, centers, objective="max-imbalance",
                     algorithm="dp-modified")
    assert len(front) >= 1


def test_run_writes_deterministic_artifacts(tmp_path):
    data = tmp_path / "data.csv"
    ds = ff.gen_gaussian(12, 2, [0.5, 0.5], seed=21)
    lines = ["x0,x1,group"]
    for pt, a in zip(ds.points, ds.attrs):
        lines.append(f"{pt[0]!r},{pt[1]!r},{ds.attr_values[a]}")
    data.write_text("\n".join(lines) + "\n")

    def one_run():
        cfg = ff.RunConfig()
        cfg.input = str(data)
        cfg.features = ["x0", "x1"]
        cfg.attr_col = "group"
        cfg.k = 2
        cfg.objective = "balance"
        cfg.algorithm = "dp"
        cfg.seed = 5
        cfg.out_front = str(tmp_path / "front.csv")
        cfg.out_json = str(tmp_path / "front.json")
        res = ff.run(cfg)
        assert len(res.front) >= 1
        return (
            (tmp_path / "front.csv").read_bytes(),
            (tmp_path / "front.json").read_bytes(),
        )

    first = one_run()
    second = one_run()
    assert first[0] == second[0]
    assert first[1] == second[1]
