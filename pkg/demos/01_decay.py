"""How regularization acts on a parameter that stops receiving useful gradient.

A scalar starts at 1.0. For 100 steps it sees gradient noise with std 1e-3, then
only 1e-5: roughly what a BatchNorm scale of a feature that rarely fires sees.
We then compare how far L2 and decoupled weight decay pull it towards zero
under each optimizer.

    python demos/01_decay.py [iterations]
"""
import sys

from islb import decay
from islb.optim import FAMILIES, OptimizerConfig

iterations = int(sys.argv[1]) if len(sys.argv) > 1 else decay.DEFAULT_ITERATIONS
lam = 1e-4

print(f"terminal theta after {iterations} steps, lambda={lam}\n")
print(f"{'optimizer':<14}{'L2':>12}{'weight decay':>16}")
for family in FAMILIES:
    row = []
    for mode in ("l2", "weight_decay"):
        tr = decay.simulate(OptimizerConfig(family=family, reg_mode=mode, lam=lam),
                            iterations=iterations)
        row.append(tr.terminal)
    print(f"{family:<14}{row[0]:>12.4f}{row[1]:>16.4f}")

# Adam normalizes the L2 term by its own running magnitude, so once the data
# gradient is gone the parameter moves by about lr per step whatever lambda is.
print("\nsteps until |theta| < 0.1 without any noise, Adam + L2:")
for lam in decay.LAMBDA_GRID:
    cfg = OptimizerConfig(family="adam", lam=lam)
    tr = decay.simulate(cfg, decay.GradientRegime.zero_noise(), iterations=3000)
    below = (abs(tr.theta) < 0.1).nonzero()[0]
    print(f"  lambda={lam:<8g} {below[0] if below.size else '>3000':>6}"
          f"   (bound {decay.adam_l2_crossing_bound(cfg):.0f})")

# Plain SGD has a closed form, so we can check the simulator exactly.
sgd = OptimizerConfig(family="sgd_momentum", momentum=0.0, lam=1e-4)
tr = decay.simulate(sgd, decay.GradientRegime.zero_noise(), iterations=iterations)
ok, err = decay.oracle_compare(tr)
print(f"\nplain SGD + L2 vs (1 - lr*lambda)^t: max error {err:.1e} ({'ok' if ok else 'MISMATCH'})")
