"""A compact end-to-end run: train a small shape space, observe a new bottle from one side,
transfer grasps through the template, refine, and compare with naive bounding-box mapping.

Takes under two minutes on one core.  Run: python3 demos/03_transfer_pipeline.py
"""
import warnings

from grasp_transfer.ablation import AblationConfig, run_ablation
from grasp_transfer.dif import DifModel, ModelConfig, TrainConfig, train
from grasp_transfer.family import ShapeFamilySpec, generate_family
from grasp_transfer.grasp import author_source_grasps
from grasp_transfer.store import format_table

family = generate_family(ShapeFamilySpec("bottle-like", 8, seed=7))
seen, unseen = family[:6], family[6:]

# default network, half the default schedule
model = DifModel(ModelConfig(), "bottle-like")
res = train(model, seen, TrainConfig(steps=1500, lr_decay_every=500))
print(f"trained on {len(seen)} bottles, final loss {res.trace[-1][1]:.4f}")

source = family[0]
grasps = author_source_grasps(source.shape, 20, seed=0)
print(f"{len(grasps)} grasps authored on {source.id}")

# each unseen bottle is seen as half a point cloud; its code is fitted, then every method is evaluated
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    reports = run_ablation(source, unseen, model, grasps, config=AblationConfig(correspondence_points=2048))
print(format_table(reports))
