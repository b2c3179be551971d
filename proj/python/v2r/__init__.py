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

"""Python interface to the v2r benchmark core."""

import json

from ._v2r import (
    EndpointError,
    InvalidArgument,
    IoError,
    Probe,
    __version__,
    alignment_gap,
    cluster_stats,
    consistency,
    decode,
    path_metrics,
    point_accuracy,
    principal_projection,
    read_vmat,
    read_vocab,
    region_bias,
    remap_direction_label,
    semantic_stability,
    token_stability,
    train_probe,
    write_vmat,
)
from . import _v2r

__all__ = [
    "EndpointError",
    "InvalidArgument",
    "IoError",
    "Probe",
    "__version__",
    "alignment_gap",
    "cluster_stats",
    "consistency",
    "decode",
    "generate",
    "path_metrics",
    "point_accuracy",
    "principal_projection",
    "read_manifest",
    "read_vmat",
    "read_vocab",
    "region_bias",
    "remap_direction_label",
    "score",
    "semantic_stability",
    "token_stability",
    "train_probe",
    "write_vmat",
]


def generate(tasks, out_dir, config=None, presets=None, threads=1):
    """Render the given tasks into out_dir; returns manifest path and counts."""
    if isinstance(tasks, str):
        tasks = [tasks]
    return json.loads(
        _v2r.generate_json(
            list(tasks),
            str(out_dir),
            json.dumps(config) if config is not None else "",
            json.dumps(presets) if presets is not None else "",
            threads,
        )
    )


def read_manifest(path):
    """Returns {"header": ..., "records": [...]}."""
    return json.loads(_v2r.read_manifest_json(str(path)))


def score(manifest, outputs, out_dir=None, weights=(1.0, 1.0, 1.0)):
    """Scores an outputs file against its manifest. Writes the report bundle when out_dir is given."""
    return json.loads(
        _v2r.score_json(str(manifest), str(outputs), str(out_dir) if out_dir else None, tuple(weights))
    )
