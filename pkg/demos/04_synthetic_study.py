"""The synthetic-shapes study behind acceptance criteria 4, 6, 7 and 8.

Three desk-scale runs share seed and schedule: clean background with ReLU,
cluttered background with ReLU, and clean background with leaky ReLU (slope
0.01). Runs are cached in results/ (or $ISLB_RESULTS_DIR), about 45 minutes
each on one core when missing.

    python demos/04_synthetic_study.py
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "tests"))
from test_acceptance import SYNTH_RUNS, cached  # noqa: E402

from islb import experiment  # noqa: E402

reports = {name: cached(cfg) for name, cfg in SYNTH_RUNS.items()}
for name, rep in reports.items():
    print(f"{name:<22} gamma {rep.gamma_sparsity:6.2f}%  act {rep.act_sparsity:6.2f}%  "
          f"test error {rep.final.test_error_before:5.2f}%")

clean = [reports["synth-clean-relu"], reports["synth-clean-leaky"]]
print("\nlayer-wise filters pruned, clean background")
print(experiment.emit_table(clean, layout="layerwise"))
print("clean vs cluttered (summary tables are per dataset)")
for name in ("synth-clean-relu", "synth-cluttered-relu"):
    print(experiment.emit_table([reports[name]]), end="")
