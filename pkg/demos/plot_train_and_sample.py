"""
Training a small solver and sampling collision-aware IK solutions
=================================================================

Two scenes, a few thousand labeled configurations each, and a reduced
model trained for a handful of epochs.  This is far below the scale of
``scripts/reproduce.sh``, so the numbers are only indicative; the point is
the workflow from dataset to labeled samples.  Runs in about a minute.
"""

import logging

import numpy as np

from flowik.dataset import generate
from flowik.evaluator import FlowSolver, evaluate_scene, solve_flow, target_poses, uniform_rates
from flowik.robot import RobotModel
from flowik.trainer import TrainConfig, train
from flowik.world import random_scene

logging.basicConfig(level=logging.INFO, format="%(message)s")
robot = RobotModel()
scenes = [random_scene(0, "low", robot, scene_id=0), random_scene(1, "high", robot, scene_id=1)]

###############################################################################
# Uniform joint samples, each stored with its tip pose and both collision
# labels.  Generation is a pure function of the seed.

data = generate(robot, scenes, 8000, seed=0)
for s in scenes:
    print(f"scene {s.id}: {len(s.obstacles)} obstacles, env-collision share in data "
          f"{data.flags(s.id)[:, 1].mean():.3f}")

###############################################################################
# Mode p3 models the joints together with the two flags and a padding
# coordinate, so a single draw yields a configuration and its predicted
# labels.  Batches never mix scenes; each batch encodes its scene once.

config = TrainConfig(mode="p3", epochs=8, batch_size=128, learning_rate=2e-3, gamma=0.9,
                     n_blocks=6, hidden=64, latent_dim=4, latent_blocks=2, image_size=16)
ckpt = train(config, data)

###############################################################################
# Sample 500 solutions for one reachable target in the cluttered scene.
# Kept solutions are those whose decoded flags say collision-free.

rng = np.random.default_rng(5)
solver = FlowSolver(ckpt)
target = target_poses(robot, 1, rng)[0]
sols = solve_flow(solver, target, scenes[1], 500, rng)
kept = sols.emitted
print(f"target {target.round(3)}: {kept.sum()} of {len(sols)} draws predicted collision-free")
print("true env-collision rate among kept:", round(float(sols.truth[kept, 1].mean()), 3),
      "| among all draws:", round(float(sols.truth[:, 1].mean()), 3),
      "| uniform C-space:", round(uniform_rates(robot, scenes[1], 20_000, rng)["env_rate"], 3))

###############################################################################
# The per-scene metric row used by the CLI's ``eval`` subcommand.

row = evaluate_scene(solver, scenes[1], target_poses(robot, 20, rng), 100, rng)
print({k: (round(v, 3) if isinstance(v, float) else v) for k, v in row.items()})
