"""Cut the dead filters out of a trained checkpoint and confirm nothing changed.

    python demos/03_prune.py runs/demo/final.islb [--background clean]

The gamma criterion flags filters whose BatchNorm scale is below 1e-3. Such a
filter emits (almost) the constant act(beta); fold pruning deletes it and adds
that constant to whatever consumes it, so the smaller network computes the
same logits.
"""
import argparse

from threadpoolctl import threadpool_limits

from islb import experiment, metrics, prune
from islb.nn import load_network

ap = argparse.ArgumentParser()
ap.add_argument("checkpoint")
ap.add_argument("--background", default="clean", choices=("clean", "cluttered"))
args = ap.parse_args()

cfg = experiment.preset("desk-synth", background=args.background)
net = load_network(args.checkpoint)
_, test = experiment.load_data(cfg)

report = metrics.sparsity_report(net, test.images)
mask = prune.select_prunable(report, "gamma")
print(f"flagged {mask.count()} of {report.feature_count} filters")

with threadpool_limits(1):
    for strict in (True, False):
        pruned = prune.prune_fold(net, mask, strict=strict)
        eq = prune.verify_equivalence(net, pruned, test.images, test.labels)
        label = "strict (gamma zeroed first)" if strict else "as trained"
        print(f"{label:<28} params {net.param_count()} -> {pruned.param_count()}, "
              f"max logit change {eq.max_deviation:.2e}, "
              f"error {eq.error_orig:.2f}% -> {eq.error_pruned:.2f}%")
    print(f"non-strict deviation bound: {prune.fold_error_bound(net, mask, test.images):.2e}")

before, after = prune.conv_param_accounting(net, mask)
print(f"conv parameters pruned: {100 * (before - after) / before:.1f}%")
for name, m in mask.masks.items():
    print(f"  {name}: {int(m.sum())}/{m.size}")
