"""Walk one generated scene through tokenization, selection and a forward pass.

The model is untrained, so the selected regions are arbitrary; the point is to
see the shapes and the masks line up.  Run: ``python demos/01_tokenize_and_select.py``
"""
import numpy as np

from scenemag import model as M
from scenemag import scenegen as sg
from scenemag.config import ModelConfig
from scenemag.selector import SequenceLayout
from scenemag.tokenizer import plan_scene

field, rooms = sg.generate_scene(seed=3, n_rooms=4)
print(f"scene {field.scene_id}: {field.M} points, {len(rooms)} rooms, {sg.scene_area(rooms):.1f} m2")

qa = sg.generate_qa(field, rooms, seed=3, kinds=("attribute",))
q = qa[0]
print(f"question: {' '.join(q.question)} -> {' '.join(q.answer)} (split {q.split})")

vocab = sg.Vocab()
cfg = ModelConfig(point_feature_dim=sg.FEATURE_DIM, vocab_size=len(vocab), max_text_len=16)
plan = plan_scene(field, cfg)
params = M.init_params(cfg, np.random.default_rng(0))

layout = SequenceLayout(cfg.vision_token_num, vocab.encode(q.question), vocab.encode(q.answer))
res = M.forward(plan, layout, cfg, params)
print(f"sequence length {layout.length}, logits {res.logits.data.shape}")
for layer, sel in res.selections.items():
    n_dense = res.dense[layer].tokens.shape[0]
    print(f"layer {layer}: {len(sel.selected)} of {cfg.vision_token_num} regions selected, "
          f"{n_dense} dense tokens appended as keys and values")

answer = M.generate(plan, vocab.encode(q.question), cfg, params, max_len=3, eos_id=vocab.eos)
print("untrained greedy answer:", " ".join(vocab.decode(answer)))
