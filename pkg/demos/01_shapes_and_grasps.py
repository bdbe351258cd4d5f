"""Procedural bottles, authored grasps, and the grasp <-> gripper-pose conversion.

Run: python3 demos/01_shapes_and_grasps.py
"""
import numpy as np

from grasp_transfer.evaluate import evaluate_grasp
from grasp_transfer.family import ShapeFamilySpec, generate_family
from grasp_transfer.grasp import GripperModel, author_source_grasps, grasp_from_matrix, matrix_from_grasp

# a small bottle family; every instance is an exact analytic SDF
family = generate_family(ShapeFamilySpec("bottle-like", 4, seed=7))
for inst in family:
    lo, hi = inst.shape.bounds()
    print(f"{inst.id}: height {hi[2] - lo[2]:.3f} m, scale {inst.scale:.4f}")

# antipodal grasps that pass the quasi-static check on the first bottle
gripper = GripperModel()
bottle = family[0]
grasps = author_source_grasps(bottle.shape, 10, seed=0, gripper=gripper)
widths = np.array([g.width for g in grasps])
print(f"\n{len(grasps)} grasps, widths {widths.min():.4f} to {widths.max():.4f} m")

# a grasp becomes a gripper pose [R, t]; closing the fingers on the object reads it back
g = grasps[0]
m = matrix_from_grasp(g)
back = grasp_from_matrix(m, bottle.shape, gripper)
print("R =\n", np.round(m.R, 4))
print("t =", np.round(m.t, 4))
print(f"contacts moved by {max(np.linalg.norm(g.p1 - back.p1), np.linalg.norm(g.p2 - back.p2)):.2e} m")

# the same grasp judged on the other bottles without any adaptation
for inst in family[1:]:
    v = evaluate_grasp(g, inst.shape, gripper)
    print(f"on {inst.id}: {'success' if v.success else v.reason}")
