"""
Building mixtures
=================

Generate a small synthetic corpus, draw training-style mixtures and
the long overlap-pattern mixtures used for evaluation.
Writes ``demos/out/patterns.png``.
"""

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from sepx.corpus import SynthSpec, split_by_speaker, synth_corpus
from sepx.mixgen import MixSpec, OverlapPattern, build_pattern_mixture, measured_sir, sample_example, worker_rng

out = Path(__file__).parent / "out"
corpus = synth_corpus(SynthSpec(num_speakers=6, utterances_per_speaker=4, duration_s=4.0), out / "corpus", seed=1)
train, valid, test = split_by_speaker(corpus.records, (0.5, 0.25, 0.25), seed=1)
print(f"{len(corpus.records)} utterances; speakers per split:",
      [len(p.speakers) for p in (train, valid, test)])

# %% [markdown]
# A short mixture: the target plus one interferer at a random SIR.
# The audio reference is a different utterance of the target speaker.

# %%
rng = worker_rng(seed=0, worker=0)
spec = MixSpec(num_speakers=2, duration_s=3.0, with_visual=True)
ex = sample_example(corpus, spec, rng)
print("utterances:", ex.utterance_ids, "reference:", ex.reference_utterance_id)
print(f"requested SIR {ex.sirs_db[0]:.2f} dB, measured {measured_sir(ex.target, ex.interferers[0]):.2f} dB")
print("lip frames:", ex.visual_reference.frames.shape, "(D, H, W, frames)")

# %% [markdown]
# Overlap patterns: each digit is a 3 s segment, 1 means the speaker talks.
# ``101/111`` has a target pause in the middle while the interferer keeps going.

# %%
fig, axes = plt.subplots(3, 1, figsize=(8, 5), sharex=True)
for ax, name in zip(axes, ("111/111", "101/111", "110/011")):
    pm = build_pattern_mixture(corpus, OverlapPattern.parse(name), 0.0, rng)
    t = np.arange(len(pm.mixture)) / pm.mixture.sample_rate
    ax.plot(t, np.asarray(pm.interferers[0]), lw=0.3, label="interferer")
    ax.plot(t, np.asarray(pm.target), lw=0.3, label="target")
    ax.set_title(name, fontsize=9)
axes[0].legend(loc="upper right", fontsize=7)
axes[-1].set_xlabel("time (s)")
fig.tight_layout()
fig.savefig(out / "patterns.png", dpi=100)
print("wrote", out / "patterns.png")
