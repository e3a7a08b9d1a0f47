"""
Scoring separated speech
========================

SI-SDR, permutation-invariant scoring and STOI on hand-made signals.
Run with ``python demos/01_scores.py``; each cell prints what it checks.
"""

# %%
import numpy as np

from sepx.metrics import stoi
from sepx.objectives import si_sdr, upit_loss

rng = np.random.default_rng(0)
s = rng.standard_normal(16000)

# %% [markdown]
# SI-SDR ignores gain: rescaling the estimate leaves the score where it was.
# A little added noise sets the level.

# %%
est = 0.7 * s + 0.1 * rng.standard_normal(16000)
for gain in (1.0, 0.01, 50.0):
    print(f"gain {gain:6.2f}: {si_sdr(s, gain * est):7.3f} dB")

# a perfect copy hits the +60 dB reporting ceiling
print("identical:", si_sdr(s, s))

# %% [markdown]
# With two outputs and two speakers we do not know which output belongs to whom.
# The exhaustive search picks the assignment with the best total score.

# %%
a, b = rng.standard_normal((2, 8000))
outputs = [b + 0.05 * rng.standard_normal(8000), a + 0.2 * rng.standard_normal(8000)]
res = upit_loss([a, b], outputs)
print("output -> target:", res.permutation)
print("per-pair SI-SDR:", np.round(res.per_pair_scores, 2))
print("loss (negative sum):", round(res.loss, 2))

# %% [markdown]
# STOI compares short-time envelopes in third-octave bands.
# An amplitude-modulated harmonic tone up to about 4 kHz stands in for voiced speech.

# %%
t = np.arange(3 * 16000) / 16000
voiced = (1 + 0.5 * np.sin(2 * np.pi * 4 * t)) * sum(np.sin(2 * np.pi * 150 * k * t) / k for k in range(1, 27))
for snr in (20, 5, -5):
    noise = rng.standard_normal(len(t))
    noise *= np.std(voiced) / np.std(noise) * 10 ** (-snr / 20)
    print(f"SNR {snr:>3} dB: STOI {stoi(voiced, voiced + noise):.3f}")
print("noise only:", round(stoi(voiced, rng.standard_normal(len(t))), 3))
