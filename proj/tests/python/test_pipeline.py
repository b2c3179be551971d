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

import json
import random

import pytest

v2r = pytest.importorskip("v2r")
import score_oracle

SMALL_PRESETS = {
    "coordinate": {"ranges": [[-5, 5], [0, 10]], "dimensions": [1, 2], "grid": [False],
                   "reference_lines": [True], "per_config": 3},
    "path": {"point_counts": [2, 4], "ranges": [[0, 10]], "per_config": 4},
    "text-matrix": {"sizes": [8, 16], "words": ["dog", "tiger"], "backgrounds": ["asterisks", "random-words"],
                    "per_config": 1},
    "ocr": {"blur_levels": ["B0", "B2"], "replacements": 2, "texts": ["the quick brown fox", "a quiet library"]},
}
CONFIG = {"seed": 11, "grid": 3, "scales": [0.2, 0.1], "rotations": [0, 90, 225],
          "contexts": ["solid/ffffff", "solid/202020"], "canvas": [192, 192]}
TASKS = ["object", "direction", "coordinate", "path", "text-matrix", "ocr"]


def wrong_answer(expected, rng):
    if isinstance(expected, str):
        return expected + "x"
    if isinstance(expected, int):
        return expected + 1
    if expected and isinstance(expected[0], list):
        out = [list(p) for p in expected]
        rng.shuffle(out)
        return out[: rng.randint(1, len(out))] + ([[99, 99]] if rng.random() < 0.3 else [])
    return [v + 1 for v in expected]


def scripted_outputs(records, rng):
    lines = []
    for rec in records:
        roll = rng.random()
        if roll < 0.05:
            continue  # missing
        expected = score_oracle.expected(rec)
        if roll < 0.1:
            lines.append({"id": rec["id"], "model": "m", "status": "failed", "raw": "", "parsed": None})
            continue
        if roll < 0.2:
            parsed, raw = None, "no idea"
        elif roll < 0.6:
            parsed, raw = expected, f"answer {json.dumps(expected)}"
        else:
            parsed = wrong_answer(expected, rng)
            raw = f"I think {json.dumps(parsed)}"
        lines.append({"id": rec["id"], "model": "m", "status": "ok", "raw": raw, "parsed": parsed})
    return lines


@pytest.fixture(scope="module")
def generated(tmp_path_factory):
    out = tmp_path_factory.mktemp("gen")
    summary = v2r.generate(TASKS, out, config=CONFIG, presets=SMALL_PRESETS)
    return out, summary


def test_generate_counts_and_manifest(generated):
    out, summary = generated
    manifest = v2r.read_manifest(summary["manifest"])
    assert manifest["header"]["seed"] == 11
    assert manifest["header"]["canvas"] == [192, 192]
    counts = {}
    for rec in manifest["records"]:
        counts[rec["task"]] = counts.get(rec["task"], 0) + 1
        if "image_path" in rec:
            assert (out / rec["image_path"]).is_file()
    assert counts == summary["counts"]
    assert counts["coordinate"] == 2 * 2 * 3
    assert counts["path"] == 2 * 4
    assert counts["text-matrix"] == 2 * 2 * 2 * 3
    assert counts["ocr"] == 2 * 2


def test_generate_is_deterministic(generated, tmp_path):
    out, summary = generated
    again = v2r.generate(["direction", "path"], tmp_path, config=CONFIG, presets=SMALL_PRESETS)
    first = {r["id"]: r for r in v2r.read_manifest(summary["manifest"])["records"]}
    for rec in v2r.read_manifest(again["manifest"])["records"]:
        assert rec == first[rec["id"]]
        assert (tmp_path / rec["image_path"]).read_bytes() == (out / rec["image_path"]).read_bytes()


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_report_matches_python_oracle(generated, tmp_path, seed):
    out, summary = generated
    records = v2r.read_manifest(summary["manifest"])["records"]
    outputs = tmp_path / "outputs.jsonl"
    outputs.write_text("".join(json.dumps(o) + "\n" for o in scripted_outputs(records, random.Random(seed))))
    report = v2r.score(summary["manifest"], outputs, out_dir=tmp_path / "report")
    assert (tmp_path / "report" / "report.json").is_file()
    ours = score_oracle.score(summary["manifest"], outputs)
    assert set(ours) == set(report["tasks"])
    assert score_oracle.compare(ours, report) == []


def test_score_rejects_unknown_output_id(generated, tmp_path):
    _, summary = generated
    bad = tmp_path / "outputs.jsonl"
    bad.write_text(json.dumps({"id": "nope", "model": "m", "status": "ok", "raw": "", "parsed": None}) + "\n")
    with pytest.raises(OSError):
        v2r.score(summary["manifest"], bad)


def test_bad_arguments_raise_value_error(tmp_path):
    with pytest.raises(ValueError):
        v2r.generate(["not-a-task"], tmp_path)
    with pytest.raises(ValueError):
        v2r.generate(["direction"], tmp_path, config={"grid": 3, "bogus": 1})
