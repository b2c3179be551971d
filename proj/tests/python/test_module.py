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

import math

import numpy as np
import pytest

v2r = pytest.importorskip("v2r")
from conftest import FIXTURES


def test_stability_metrics():
    assert v2r.consistency([0.4, 0.4, 0.4]) == 1.0
    assert v2r.consistency([1.0, 0.0]) == pytest.approx(0.5)
    assert v2r.token_stability(["x y", "y z"]) == pytest.approx(2 / 3)
    assert v2r.token_stability(["a", "b", "c"]) == pytest.approx(1 / 3)
    assert v2r.semantic_stability([[1.0, 0.0], [0.0, 1.0]]) == pytest.approx(0.5)


def test_path_and_point_metrics():
    m = v2r.path_metrics([(1, 1), (3, 3), (2, 2)], [(1, 1), (2, 2), (3, 3)])
    assert m == pytest.approx({"EMA": 0.0, "PM_IA": 1.0, "PM_SA": 1 / 3})
    assert v2r.path_metrics(None, [(0, 0)]) == {"EMA": 0.0, "PM_IA": 0.0, "PM_SA": 0.0}
    assert v2r.point_accuracy([[1, 2], None], [[1, 2], [0, 0]]) == 0.5


def test_region_bias_and_direction():
    values = [0.0] * 9
    values[4] = 1.0
    assert v2r.region_bias(values, 3) == (1.0, 0.0)
    middle, _ = v2r.region_bias([math.nan] * 9, 3)
    assert math.isnan(middle)
    assert v2r.remap_direction_label("up", 90) == "right"
    with pytest.raises(ValueError):
        v2r.remap_direction_label("sideways", 0)


def test_vmat_roundtrip_and_errors(tmp_path):
    a = np.arange(12, dtype=np.float32).reshape(3, 4)
    v2r.write_vmat(a, tmp_path / "a.vmat")
    np.testing.assert_array_equal(v2r.read_vmat(tmp_path / "a.vmat"), a)
    (tmp_path / "bad.vmat").write_bytes(b"nope")
    with pytest.raises(OSError):
        v2r.read_vmat(tmp_path / "bad.vmat")
    with pytest.raises(OSError):
        v2r.read_vmat(tmp_path / "missing.vmat")


def test_decode_identity_embeddings():
    h = np.array([0.1, 3.0, -1.0, 2.0], dtype=np.float32)
    top = v2r.decode(h, np.eye(4, dtype=np.float32), ["a", "b", "c", "d"], k=3)
    assert [t[1] for t in top] == ["b", "d", "a"]
    logits = h.astype(np.float64)
    p = np.exp(logits - logits.max())
    p /= p.sum()
    assert [t[2] for t in top] == pytest.approx([p[1], p[3], p[0]])


def test_probe_on_fixture():
    x = v2r.read_vmat(FIXTURES / "probe" / "train.vmat")
    labels = (FIXTURES / "probe" / "train_labels.txt").read_text().split()
    tx = v2r.read_vmat(FIXTURES / "probe" / "test.vmat")
    tlabels = (FIXTURES / "probe" / "test_labels.txt").read_text().split()
    probe = v2r.train_probe(x, labels)
    assert probe.classes == sorted(set(labels))
    assert probe.accuracy(tx, tlabels) >= 0.99
    assert probe.predict(tx[:3]) == tlabels[:3]


def test_alignment_and_clusters():
    h = np.eye(3, dtype=np.float32)
    matched, mismatched, gap = v2r.alignment_gap(h, h)
    assert (matched, mismatched, gap) == pytest.approx((1.0, 0.0, 1.0))
    x = np.array([[0, 0], [0, 1], [10, 0], [10, 1]], dtype=np.float32)
    intra, inter, ratio = v2r.cluster_stats(x, ["a", "a", "b", "b"])
    assert intra == pytest.approx(1.0)
    assert inter == pytest.approx((10 + 10 + 2 * math.sqrt(101)) / 4)
    assert v2r.principal_projection(x).shape == (4, 2)
