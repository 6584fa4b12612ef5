"""
Working with the command line
=============================

Cascades and matrices travel as JSON documents.  This script writes a
few documents to a temporary directory and runs ``liftkit`` on them
through its Python entry point.
"""

import json
import tempfile
from pathlib import Path

from liftkit import product
from liftkit import fixtures
from liftkit.cli import main
from liftkit.serialize import cascade_to_doc, matrix_to_json

work = Path(tempfile.mkdtemp())
(work / "legall.json").write_text(json.dumps(cascade_to_doc(fixtures.legall())))
(work / "legall-matrix.json").write_text(json.dumps(matrix_to_json(product(fixtures.legall()))))
a, b = fixtures.example1()
(work / "a.json").write_text(json.dumps(cascade_to_doc(a)))
(work / "b.json").write_text(json.dumps(cascade_to_doc(b)))

print(json.dumps(cascade_to_doc(fixtures.legall()), indent=2))

for argv in (
    ["multiply", str(work / "legall.json")],
    ["factor", str(work / "legall-matrix.json"), "--structure", "ws-reversible"],
    ["check", str(work / "legall.json"), "--structure", "ws-reversible"],
    ["equiv", str(work / "a.json"), str(work / "b.json")],
):
    print("$ liftkit", " ".join(argv))
    code = main(argv)
    print(f"(exit {code})\n")
