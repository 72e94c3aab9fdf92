#!/usr/bin/env python3
"""Log-mel front end on a synthetic clip.

Builds a 10-second clip holding a 1 kHz tone burst, extracts the
1001 x 64 log-mel matrix, and plots it next to the rendered frame
labels at detector resolution (250 frames, 40 ms each).
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from tsdkit import AudioClip, Event, extract_logmel, render_frame_labels

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

SR = 32_000

# A tone burst between 2 s and 4 s over light noise.
rng = np.random.default_rng(0)
samples = 0.01 * rng.standard_normal(10 * SR)
t = np.arange(2 * SR) / SR
samples[2 * SR : 4 * SR] += 0.4 * np.sin(2 * np.pi * 1000 * t)
clip = AudioClip(samples)

mel = extract_logmel(clip)
print(f"log-mel shape: {mel.values.shape} (frames x mel bands)")
print(f"frame hop: {mel.frame_hop} samples = {mel.frame_resolution * 1000:.0f} ms")

# Frame labels at the detector's time base: 250 frames for a 10 s clip.
labels = render_frame_labels([Event(2.0, 4.0, "tone")], clip_duration=10.0, t_prime=250)
print(f"labels: {int(labels.values.sum())} of {labels.values.size} frames active")

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(9, 5), height_ratios=(4, 1), sharex=False)
ax1.imshow(mel.values.T, aspect="auto", origin="lower", extent=[0, 10, 0, 64])
ax1.set_ylabel("mel band")
ax1.set_title("log-mel spectrogram")
ax2.step(np.arange(250) * labels.resolution, labels.values, where="post")
ax2.set_xlabel("time (s)")
ax2.set_ylabel("label")
ax2.set_xlim(0, 10)
fig.tight_layout()
fig.savefig(OUT / "logmel_features.png", dpi=120)
print(f"wrote {OUT / 'logmel_features.png'}")
