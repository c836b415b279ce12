"""
JSON reports and the command line
=================================

The same suites that the tests run are available as a JSON report, either
from Python or through the ``lnq`` command.
"""

import json
import tempfile
from pathlib import Path

from lnq import cli, report

data = report.verify(2, 2, "3/2", suite="qpoly")
print(json.dumps(report.strip_timing(data), indent=2)[:600])

with tempfile.TemporaryDirectory() as tmp:
    cache = Path(tmp) / "l3_2.json"
    out = Path(tmp) / "report.json"
    cli.main(["enumerate", "--n", "3", "--q", "2", "--cache", str(cache)])
    code = cli.main(["verify", "--n", "3", "--q", "2", "--phi", "3/2", "--cache", str(cache), "--report", str(out)])
    print("exit code:", code)
    print("summary:", json.loads(out.read_text())["summary"])
