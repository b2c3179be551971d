# Copyright 2026 The v2r Authors
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the separable linear-probe fixture (5 classes, 100 points each).

Usage: python tools/make_probe_fixture.py tests/fixtures/probe
"""

import pathlib
import struct
import sys

import numpy as np

CLASSES = ["circle", "square", "triangle", "star", "arrow"]
DIM = 8
PER_CLASS = 100


def write_vmat(path: pathlib.Path, x: np.ndarray) -> None:
    x = np.ascontiguousarray(x, dtype="<f4")
    header = b"VMAT1\n" + f"{x.shape[0]} {x.shape[1]}\n".encode()
    path.write_bytes(header + x.tobytes())


def make_split(rng: np.random.Generator, centers: np.ndarray) -> tuple[np.ndarray, list[str]]:
    rows, labels = [], []
    for k, name in enumerate(CLASSES):
        rows.append(centers[k] + rng.normal(0.0, 0.5, size=(PER_CLASS, DIM)))
        labels += [name] * PER_CLASS
    x = np.concatenate(rows)
    order = rng.permutation(len(labels))
    return x[order], [labels[i] for i in order]


def main() -> None:
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/probe")
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(20240607)
    centers = 4.0 * np.eye(len(CLASSES), DIM)
    for split in ("train", "test"):
        x, labels = make_split(rng, centers)
        write_vmat(out / f"{split}.vmat", x)
        (out / f"{split}_labels.txt").write_text("\n".join(labels) + "\n")


if __name__ == "__main__":
    main()
