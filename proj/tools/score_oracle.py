#!/usr/bin/env python3
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
"""Reference scorer written from the metric definitions, independent of the C++ code.

Reads a manifest and an outputs file and recomputes the headline report
numbers. Semantic stability and OCR fidelity are left out. The parsed answers
in the outputs file are trusted.

    python tools/score_oracle.py manifest.jsonl outputs.jsonl [report.json]

With a report, exits 1 when any recomputed number differs by more than 1e-9.
"""

import json
import math
import re
import statistics
import sys
from collections import OrderedDict

DIMS = ("position", "scale", "rotation", "context")


def read_jsonl(path):
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def expected(rec):
    gt = rec["ground_truth"]
    task, prompt = rec["task"], rec.get("prompt_id", "")
    if task == "text-matrix":
        if prompt == "text-position":
            return [gt["row"], gt["col"]]
        if prompt == "text-count":
            return gt["count"]
        return gt["word"]
    if task == "ocr":
        chars = list(gt["text"])
        for index, _orig, repl in gt["replacements"]:
            if 0 <= index < len(chars):
                chars[index] = repl
        return " ".join("".join(chars).split())
    return gt


def tokens(text):
    return set(t.lower() for t in re.findall(r"[A-Za-z0-9\x80-\U0010ffff]+", text))


def consistency(values):
    return 1.0 - statistics.pstdev(values)


def token_stability(texts):
    sets = [tokens(t) for t in texts]
    n = len(sets)
    total = 0.0
    for i in range(n):
        for j in range(n):
            a, b = sets[i], sets[j]
            total += 1.0 if not a and not b else len(a & b) / len(a | b)
    return total / (n * n)


def mean(values):
    return sum(values) / len(values) if values else float("nan")


def group(items, key):
    out = OrderedDict()
    for it in items:
        out.setdefault(key(it), []).append(it)
    return out


def asset_key(rec):
    p = rec.get("params", {})
    for k in ("asset_index", "asset", "base_id"):
        if k in p:
            return json.dumps(p[k])
    return ""


def var_value(rec, dim):
    v = rec["variation"]
    return json.dumps(v[dim])


def score(manifest_path, outputs_path):
    records = [r for r in read_jsonl(manifest_path) if "manifest_header" not in r]
    outputs = {o["id"]: o for o in read_jsonl(outputs_path)}
    items = []
    for rec in records:
        out = outputs.get(rec["id"])
        ok = out is not None and out.get("status") == "ok"
        parsed = out.get("parsed") if ok else None
        items.append({
            "rec": rec,
            "present": out is not None,
            "failed": out is not None and not ok,
            "parsed": parsed,
            "raw": out.get("raw", "") if ok else "",
            "correct": parsed is not None and parsed == expected(rec),
        })

    report = {}
    for task, its in group(items, lambda it: it["rec"]["task"]).items():
        acc = lambda xs: mean([1.0 if x["correct"] else 0.0 for x in xs])
        t = {
            "n": len(its),
            "correct": sum(x["correct"] for x in its),
            "accuracy": acc(its),
            "missing": sum(not x["present"] for x in its),
            "failed": sum(x["failed"] for x in its),
            "unparseable": sum(x["present"] and not x["failed"] and x["parsed"] is None for x in its),
        }
        varied = [x for x in its if x["rec"].get("variation")]
        if varied:
            per_var = group(varied, lambda x: tuple(var_value(x["rec"], d) for d in DIMS))
            per_asset = group(varied, lambda x: asset_key(x["rec"]))
            t["C_m"] = consistency([acc(g) for g in per_var.values()])
            t["S_t"] = mean([token_stability([x["raw"] for x in g]) for g in per_asset.values()])
            for d in DIMS:
                slices = group(varied, lambda x: var_value(x["rec"], d))
                t[d + ".C_m"] = consistency([acc(g) for g in slices.values()])
                others = group(varied, lambda x: (asset_key(x["rec"]),) +
                               tuple(var_value(x["rec"], e) for e in DIMS if e != d))
                t[d + ".S_t"] = mean([token_stability([x["raw"] for x in g]) for g in others.values()])
        celled = [x for x in its if "cell" in x["rec"].get("params", {})]
        if celled:
            grid = celled[0]["rec"]["params"]["grid"]
            cells = group(celled, lambda x: tuple(x["rec"]["params"]["cell"]))
            middle, surrounding = [], []
            for (col, row), g in cells.items():
                # Middle when the cell centre lies in the closed central third on both axes.
                inside = all(grid <= 3 * (2 * i + 1) / 2 <= 2 * grid for i in (col, row))
                (middle if inside else surrounding).append(acc(g))
            t["region.middle"] = mean(middle)
            t["region.surrounding"] = mean(surrounding)
        if task == "path":
            ema, ia, sa = [], [], []
            for x in its:
                gt = [tuple(p) for p in x["rec"]["ground_truth"]]
                pred = [tuple(p) for p in x["parsed"]] if x["parsed"] is not None else None
                if pred is None:
                    ema.append(0.0), ia.append(0.0), sa.append(0.0)
                    continue
                pairs = list(zip(pred, gt))
                ema.append(1.0 if pred == gt else 0.0)
                ia.append(sum(p in gt for p, _ in pairs) / len(gt))
                sa.append(sum(p == g for p, g in pairs) / len(gt))
            t["path.EMA"], t["path.PM_IA"], t["path.PM_SA"] = mean(ema), mean(ia), mean(sa)
        report[task] = t
    return report


def lookup(report, task, key):
    t = report["tasks"][task]
    if key in ("n", "correct", "accuracy", "missing", "failed", "unparseable"):
        return t[key]
    if key in ("C_m", "S_t"):
        return t["robustness"][key]
    if key.startswith("region."):
        return t["region_bias"][key.split(".")[1]]
    if key.startswith("path."):
        return t["path"][key.split(".")[1]]
    dim, metric = key.split(".")
    return t["dimensions"][dim][metric]


def compare(ours, report):
    bad = []
    for task, t in ours.items():
        for key, want in t.items():
            got = lookup(report, task, key)
            got = float("nan") if got is None else got
            if isinstance(want, float) and math.isnan(want):
                ok = isinstance(got, float) and math.isnan(got)
            else:
                ok = abs(got - want) <= 1e-9
            if not ok:
                bad.append(f"{task}.{key}: report {got}, oracle {want}")
    return bad


def main(argv):
    if len(argv) not in (3, 4):
        print(__doc__.strip(), file=sys.stderr)
        return 2
    ours = score(argv[1], argv[2])
    if len(argv) == 3:
        json.dump(ours, sys.stdout, indent=2)
        print()
        return 0
    with open(argv[3], encoding="utf-8") as f:
        report = json.load(f)
    bad = compare(ours, report)
    for line in bad:
        print("MISMATCH " + line)
    checked = sum(len(t) for t in ours.values())
    print(f"{checked - len(bad)}/{checked} values agree")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
