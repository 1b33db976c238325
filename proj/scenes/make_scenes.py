"""Writes the scenes whose multifunction tables are too long to keep by hand."""
import json
from pathlib import Path

HERE = Path(__file__).resolve().parent


def strip2d():
    # L = {0} x [0, 1]; Phi(0, t) is a 0.02-grid of [0, t].
    entries = [
        {"key": [0, i / 100], "value": {"grid": {"lo": [0], "hi": [i / 100], "step": 0.02}}}
        for i in range(101)
    ]
    return {
        "dimension": 2,
        "metric": "euclidean",
        "x_box": {"lo": [0, 0], "hi": [1, 1]},
        "x_resolution": 0.05,
        "L": {"box": {"lo": [0, 0], "hi": [0, 1]}, "step": 0.01},
        "value_space": {"lo": [0], "hi": [1]},
        "value_resolution": 0.02,
        "y_dense_step": 0.01,
        "phi": {"entries": entries},
        "D": {"grid": {"lo": [0, 0], "hi": [1, 1], "step": 0.005}, "exclude_L": True},
        "depths": {"n_max": 10, "k_max": 48, "K": 6},
        "seed": 11,
        "usc": {"delta": 0.05, "epsilon": 0.1},
        "verify": {"delta_min": 0.02, "steps": 8, "probe_set": "anchors", "probes": 20},
    }


def bad_usc():
    # Jump at t = 0.5: keys 0.45 and 0.5 are closer than delta but their values are 1 apart.
    entries = [
        {"key": [i / 20, 0], "value": {"points": [[0.0 if i / 20 < 0.5 else 1.0]]}}
        for i in range(21)
    ]
    return {
        "dimension": 2,
        "x_box": {"lo": [0, 0], "hi": [1, 1]},
        "L": {"box": {"lo": [0, 0], "hi": [1, 0]}, "step": 0.05},
        "value_space": {"lo": [0], "hi": [1]},
        "value_resolution": 0.01,
        "phi": {"entries": entries},
        "depths": {"n_max": 4, "k_max": 16, "K": 4},
        "usc": {"delta": 0.1, "epsilon": 0.5},
    }


def write(name, scene):
    (HERE / name).write_text(json.dumps(scene, indent=1) + "\n")


if __name__ == "__main__":
    write("strip2d.json", strip2d())
    write("bad_usc.json", bad_usc())
