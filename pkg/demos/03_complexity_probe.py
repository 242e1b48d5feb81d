"""Count transformer MACs for growing scenes with the magnifier on and off.

Run: ``python demos/03_complexity_probe.py``
"""
from scenemag import harness as H
from scenemag import scenegen as sg
from scenemag.config import ModelConfig

cfg = ModelConfig(point_feature_dim=sg.FEATURE_DIM, vocab_size=len(sg.Vocab()), max_text_len=16)
r = H.complexity_probe(cfg, sizes=(10_000, 40_000, 160_000))
for row in r["rows"]:
    print(row)
print(f"magnifier on / off: {r['ratio']:.3f}; constant across sizes: {r['constant_across_sizes']}")
