"""File formats and the command line.

Writes a generated instance to disk, then drives the ``iib`` subcommands
through their Python entry point.
"""
# %%
import tempfile
from pathlib import Path

from iib.cli import main
from iib.gadgets.sources import HittingSetInstance
from iib.io import serialize_hs

work = Path(tempfile.mkdtemp())
(work / "src.hs").write_text(serialize_hs(HittingSetInstance(3, ((0, 1), (2,)), 2)))
main(["gen", "--reduction", "hs", "--src", str(work / "src.hs"), "--out", str(work / "hs.iib")])
print((work / "hs.iib").read_text())

# %%
main(["params", "--in", str(work / "hs.iib")])
code = main(["solve", "--algo", "auto", "--in", str(work / "hs.iib"), "--out", str(work / "r.json")])
print("exit code", code)
print((work / "r.json").read_text())

# %% check the witness and compare all solvers on the directory
main(["check", "--in", str(work / "hs.iib"), "--witness", str(work / "r.json")])
main(["bench", "--dir", str(work), "--timeout", "10"])
