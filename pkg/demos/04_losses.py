#!/usr/bin/env python3
"""The three training objectives and the duration weighting curve.

Plots per-frame loss against predicted probability for a positive frame
(BCE vs focal: the focal term flattens once the frame is easy), and the
duration-weight multiplier in both normalization modes.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from tsdkit import DurationWeightConfig, FocalConfig, bce_loss, duration_weight, focal_loss

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

p = np.linspace(0.01, 0.99, 200)
bce = [bce_loss(np.array([x]), np.array([1.0])).item() for x in p]
focal = [focal_loss(np.array([x]), np.array([1.0]), FocalConfig(beta=0.65, gamma=2.0)).item() for x in p]

w = np.linspace(0, 10, 200)
intent = [duration_weight(x, DurationWeightConfig(alpha=1.5, mode="intent")) for x in w]
literal = [duration_weight(x, DurationWeightConfig(alpha=1.5, mode="literal")) for x in w]

print("focal loss at p=0.9, y=1 (beta=0.65, gamma=2):",
      f"{focal_loss(np.array([0.9]), np.array([1.0])).item():.3e}")
print("duration weight, intent mode:  w=0 ->", duration_weight(0.0), " w=10 ->", duration_weight(10.0))
print("duration weight, literal mode: w=0 ->",
      duration_weight(0.0, DurationWeightConfig(mode="literal")),
      " w=10 ->", duration_weight(10.0, DurationWeightConfig(mode="literal")))

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 3.5))
ax1.plot(p, bce, label="BCE")
ax1.plot(p, focal, label="focal (beta=0.65, gamma=2)")
ax1.set_xlabel("predicted probability (label = 1)")
ax1.set_ylabel("per-frame loss")
ax1.legend()
ax2.plot(w, intent, label="intent (transients up-weighted)")
ax2.plot(w, literal, label="literal (printed formula)")
ax2.set_xlabel("class mean event duration (s)")
ax2.set_ylabel("loss multiplier")
ax2.legend()
fig.tight_layout()
fig.savefig(OUT / "losses.png", dpi=120)
print(f"wrote {OUT / 'losses.png'}")
