"""Classifying root-vector and Cartan-matrix files, as the CLI does.

Writes small JSON files and runs the command-line classifier on them: a
valid rank-2 root system, a Cartan matrix with a double edge, and a
negative control (the affine 3-cycle pattern, whose quadratic form is only
positive semidefinite and is therefore rejected).
"""

import json
import tempfile
from pathlib import Path

from liealg.cli import main

workdir = Path(tempfile.mkdtemp(prefix="liealg-demo-"))

a2_roots = {
    "vectors": [
        ["1", "-1", "0"], ["-1", "1", "0"],
        ["1", "0", "-1"], ["-1", "0", "1"],
        ["0", "1", "-1"], ["0", "-1", "1"],
    ]
}
cartan_c3 = {"cartan": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]}
affine_cycle = {"cartan": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]}

for name, payload in [
    ("a2_roots.json", a2_roots),
    ("c3_cartan.json", cartan_c3),
    ("affine_cycle.json", affine_cycle),
]:
    path = workdir / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    print(f"== classify {name}")
    code = main(["classify", str(path)])
    print(f"   exit code {code}\n")
