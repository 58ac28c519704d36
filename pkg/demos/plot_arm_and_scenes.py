"""
The planar arm, its scenes and the classical baseline
=====================================================

A tour of the geometry: forward kinematics of the default four-link arm,
self and environment collision checks, a scene raster as the encoder sees
it, and damped least-squares IK followed by collision checking.
"""

import warnings

import numpy as np

from flowik.evaluator import BudgetExhausted, angular_error, position_error, solve_classical, uniform_rates
from flowik.robot import RobotModel, forward_kinematics, joint_positions, sample_config, self_collision
from flowik.world import Scene, env_collision, random_scene, rasterize

robot = RobotModel()
print(robot.to_text())
print("reach", robot.reach, "m")

###############################################################################
# Forward kinematics returns (x, y, heading).  Straight out along x, then a
# quarter turn at the base.

print(forward_kinematics(robot, np.zeros(4)))
print(forward_kinematics(robot, [np.pi / 2, 0, 0, 0]).round(12))
print("joint positions\n", joint_positions(robot, [0.4, -0.9, 1.1, 0.3]).round(3))

###############################################################################
# Folding the arm back on itself makes non-adjacent links overlap.

print("folded arm collides with itself:", bool(self_collision(robot, [0.0, np.pi, np.pi, 0.0])))

###############################################################################
# Scenes are circles placed around the base.  Three clutter levels change
# how many obstacles are drawn and how much of the uniform C-space collides.

rng = np.random.default_rng(3)
for level in ("low", "medium", "high"):
    scene = random_scene(11, level, robot)
    rates = uniform_rates(robot, scene, 20_000, rng)
    print(f"{level:6s} {len(scene.obstacles)} obstacles, uniform env rate {rates['env_rate']:.3f}, "
          f"self rate {rates['self_rate']:.3f}")

###############################################################################
# The encoder input: a square occupancy raster covering the reachable disc,
# printed with +y up.

scene = random_scene(11, "high", robot)
image = rasterize(scene, robot.reach, 24)
for row in image:  # row 0 is the top edge
    print("".join("#" if v else "." for v in row))

###############################################################################
# The baseline.  DLS from random restarts until k solutions pass the
# tolerance, then a collision check.  An unreachable target uses up the
# restart budget and raises a warning instead of looping forever.

q_true = sample_config(robot, rng)
target = forward_kinematics(robot, q_true)
sols = solve_classical(robot, target, scene, 20, 1e-3, rng)
print(f"{len(sols)} solutions, max position error {position_error(robot, sols.configs, target).max():.2e} m, "
      f"max angular error {angular_error(robot, sols.configs, target).max():.2e} rad")
print("env collisions among them:", int(sols.truth[:, 1].sum()))
print("timings (s):", {k: round(v, 4) for k, v in sols.timings.items()})

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    far = solve_classical(robot, [1.5, 0.0, 0.0], Scene(()), 1, 1e-3, rng, max_iters=20)
print("unreachable target:", len(far), "solutions;",
      [str(w.message) for w in caught if issubclass(w.category, BudgetExhausted)])
print("uniform samples colliding:", int(env_collision(robot, sample_config(robot, rng, 1000), scene).sum()), "/ 1000")
