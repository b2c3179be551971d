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

import os
import shutil
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "tests" / "fixtures"
sys.path.insert(0, str(ROOT / "tools"))


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("V2R_CLI") or shutil.which("v2r")
    if not path:
        candidate = ROOT / "build" / "v2r"
        path = str(candidate) if candidate.exists() else None
    if not path:
        pytest.skip("v2r CLI not built")
    return path
