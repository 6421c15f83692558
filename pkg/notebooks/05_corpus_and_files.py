"""
Witness corpus and game files
=============================

The corpus re-checks every stored fact through the public API; bundles can
be exported in the same JSON format the CLI reads, e.g.

    tuaxioms compute --game W1_v.json --solution egalitarian --alpha 1/2
"""

# %%
import tempfile
from pathlib import Path

from tuaxioms.corpus import bundle_ids, export_bundle, run_all_witnesses, witness
from tuaxioms.gamefile import dump_game, read_game

report = run_all_witnesses()
print("\n".join(report.lines()[-6:]))

# %%
b = witness("W1")
print(b.title)
print(dump_game(b.games["v"]))

# %%
with tempfile.TemporaryDirectory() as d:
    paths = [p for bid in bundle_ids() for p in export_bundle(bid, d)]
    assert all(read_game(p) for p in paths)
    print(len(paths), "files, e.g.", sorted(Path(p).name for p in paths)[:4])
