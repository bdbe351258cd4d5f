"""Refining a grasp against an SDF: the four loss terms over ten Adam steps.

Run: python3 demos/02_refinement.py
"""
import numpy as np

from grasp_transfer.grasp import GraspPose, GripperModel
from grasp_transfer.refine import RefineConfig, refine_grasp
from grasp_transfer.sdf import Sphere

# unit sphere in normalized units, gripper scaled to match a 3 cm object
sphere = Sphere(1.0)
gripper = GripperModel().scaled(1 / 0.03)


def show(title, cfg):
    g = GraspPose([-1.02, 0, 0], [1.02, 0, 0], 1.5, [0, 0, 1.0])  # contacts lifted 0.02 off the surface
    r, st = refine_grasp(g, sphere, gripper, cfg)
    print(title)
    print(" it   anti    coll   touch    reg    total")
    for t in st.trace:
        print(f"{t['iteration']:3d} {t['anti']:6.3f} {t['collision']:7.4f} {t['touch']:7.4f} "
              f"{t['reg']:6.4f} {t['total']:8.3f}")
    print(f"final |sdf| at contacts: {np.abs(sphere.sdf(np.stack([r.p1, r.p2]))).max():.4f}\n")


show("default weights (100, 10, 20, 200)", RefineConfig())
# without the regularizer the touch term pulls the contacts onto the surface
show("touch only, 30 steps", RefineConfig(weights=(0, 0, 1, 0), iterations=30))
