"""Train a small BasicNet on the synthetic shapes and look at which features died.

By default this is a shortened desk-synth run (20 + 5 epochs, a few minutes on
one core). Pass --full for the 80 + 20 epoch preset used by the acceptance suite.

    python demos/02_train.py [--full] [--background cluttered] [--out runs/demo]
"""
import argparse
import logging

import numpy as np
from threadpoolctl import threadpool_limits

from islb import experiment, metrics
from islb.nn import load_network

ap = argparse.ArgumentParser()
ap.add_argument("--full", action="store_true")
ap.add_argument("--background", default="clean", choices=("clean", "cluttered"))
ap.add_argument("--out", default="runs/demo")
args = ap.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

cfg = experiment.preset("desk-synth", background=args.background, out=args.out)
if not args.full:
    cfg = cfg.with_(plan="20x1.0,5x0.1")

with threadpool_limits(1):
    rep = experiment.run(cfg)

print(f"\n{rep.total_steps} steps, test error {rep.final.test_error_before:.2f}%")
print(f"{'layer':<6}{'features':>9}{'dead (act)':>12}{'|gamma|<1e-3':>14}")
for l in rep.final.layers:
    print(f"{l.layer:<6}{l.feature_count:>9}{l.inactive_act:>12}{l.inactive_gamma:>14}")
print(f"total: {rep.act_sparsity:.1f}% by activation, {rep.gamma_sparsity:.1f}% by gamma")
print(f"zeroing every never-active feature: test error {rep.final.test_error_before:.2f}% -> "
      f"{rep.final.test_error_after:.2f}%")

# Universality: on what share of training images does each feature fire at all?
net = load_network(f"{cfg.out}/final.islb")
train, _ = experiment.load_data(cfg)
univ = metrics.universality(net, train.images[:1000])
print("\nuniversality histogram (share of images a feature responds to)")
edges = [0, 1e-9, 10, 50, 90, 100.1]
for name, u in univ.items():
    counts = np.histogram(u, bins=edges)[0]
    print(f"  {name}: never {counts[0]:>3}  <10% {counts[1]:>3}  10-50% {counts[2]:>3}  "
          f"50-90% {counts[3]:>3}  >90% {counts[4]:>3}")
