"""Train the desk-scale model on four questions about one scene until it recites them.

Run: ``python demos/02_overfit_four_questions.py`` (about half a minute).
"""
from scenemag import model as M
from scenemag import scenegen as sg
from scenemag.config import ModelConfig
from scenemag.tokenizer import plan_scene

field, rooms = sg.generate_scene(seed=8, n_rooms=4)
qa = sg.generate_qa(field, rooms, seed=8, kinds=("attribute",))[:4]
vocab = sg.Vocab()
cfg = ModelConfig(point_feature_dim=sg.FEATURE_DIM, vocab_size=len(vocab), max_text_len=16, dtype="float32")
plan = plan_scene(field, cfg)

data = [M.TrainExample(plan, vocab.encode(q.question), vocab.encode(q.answer)) for q in qa]
params, history = M.train(data, cfg, M.TrainSettings(steps=2000, stop_loss=0.05))
print(f"stopped after {len(history)} steps at loss {history[-1]['loss']:.4f}")

for q in qa:
    out = M.generate(plan, vocab.encode(q.question), cfg, params, max_len=4, eos_id=vocab.eos)
    print(f"{' '.join(q.question):<50} expected {' '.join(q.answer):<16} got {' '.join(vocab.decode(out))}")
