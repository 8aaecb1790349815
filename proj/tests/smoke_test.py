"""Smoke checks for the python bindings and the command line tool.

Run under ctest with PERMLAB_MODULE_DIR and PERMLAB_CLI set; both fall back
to a local build tree layout for manual runs.
"""

import json
import math
import os
import subprocess
import sys
import tempfile

MODULE_DIR = os.environ.get("PERMLAB_MODULE_DIR")
if MODULE_DIR:
    sys.path.insert(0, MODULE_DIR)

import _permlab as pl  # noqa: E402

CLI = os.environ.get("PERMLAB_CLI")


def check(cond, msg):
    if not cond:
        raise SystemExit("smoke test failure: " + msg)


def test_bindings():
    lat = pl.build_lattice(1, 3)
    check(lat.N == 3 and len(lat.edges) == 3, "ring lattice shape")

    K = pl.heat_kernel(lat, 100.0)
    for i in range(3):
        for j in range(3):
            check(abs(K.entry(i, j) - 1.0 / 3.0) <= 1e-10, "kernel equilibrium")

    dist = pl.evolve_group(lat, 50.0)
    check(all(abs(w - 1.0 / 6.0) <= 1e-8 for w in dist.weights), "group equilibrium")

    marg = pl.marginal_of_vertex(lat, pl.evolve_group(lat, 1.0), 0)
    col = pl.heat_kernel(lat, 1.0).column(0)
    check(max(abs(a - b) for a, b in zip(marg, col)) <= 1e-8, "marginal law")

    b1 = pl.sample_walk(lat, 1.0, 100, 42, 1)
    b2 = pl.sample_walk(lat, 1.0, 100, 42, 3)
    check(b1.samples == b2.samples, "sampler determinism")
    first = json.loads(b1.to_jsonl().splitlines()[0])
    check(first["index"] == 0 and len(first["tuple"]) == 3, "jsonl record shape")

    pot = pl.PairPotential()
    space = pl.ConfigurationSpace(lat)
    field = pl.evolve_extended(pot, space, 1.0, 0.005)
    restricted = pl.restrict_to_distinct(space, field)
    exact = pl.evolve_group(lat, 1.0)
    gap = max(abs(a - b) for a, b in zip(restricted.weights, exact.weights))
    check(gap <= 1e-6, "restriction identity, gap %g" % gap)

    check(pl.catalan(4) == ["1", "1", "2", "5", "14"], "catalan table")
    series, closed, _ = pl.generating_function(3.0 / 16.0, 64)
    check(abs(closed - 1.0 / 3.0) <= 1e-12 and abs(series - closed) <= 1e-9,
          "generating function routes")

    pt = pl.thinned_exponent(0.3, 64)
    check(abs(pt["difference"]) <= 1e-8, "thinned exponent identity")
    check(pt["p_equation_residual"] <= 1e-10, "p equation residual")

    lat5 = pl.build_lattice(1, 5)
    check(abs(pl.permanent(pl.heat_kernel(lat5, 0.0)) - 1.0) <= 1e-12, "permanent at t=0")

    t2 = pl.tree_sum_lower_limits(lat5, 2, 50.0)
    check(abs(t2 - (1.0 - 1.0 / 5.0)) <= 1e-8, "pair tree sum limit")

    try:
        pl.build_lattice(1, 2)
    except ValueError:
        pass
    else:
        raise SystemExit("L=2 should raise")


def test_cli():
    if not CLI:
        print("PERMLAB_CLI not set; skipping CLI checks")
        return
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "catalan.json")
        subprocess.run([CLI, "--task", "catalan", "--order", "10", "--out", out], check=True)
        with open(out) as f:
            env = json.load(f)
        check(env["task"] == "catalan", "envelope task echo")
        check(env["values"]["A"][-1] == "16796", "catalan CLI value")

        r = subprocess.run([CLI, "--task", "heat-kernel", "--edge", "2"],
                           capture_output=True, text=True)
        check(r.returncode == 3, "L=2 must exit 3, got %d" % r.returncode)

        r = subprocess.run([CLI, "--task", "group-walk", "--edge", "9", "--time", "1"],
                           capture_output=True, text=True)
        check(r.returncode == 4, "group cap: expected exit 4, got %d" % r.returncode)


def main():
    test_bindings()
    test_cli()
    print("smoke tests passed")


if __name__ == "__main__":
    main()
