"""
Running the pipeline from the command line
==========================================

The ``overlaydyn`` command reads a basemap CSV and a JSON-lines corpus and
writes CSV, SVG and GraphML files. Here the synthetic corpus is written to a
scratch directory and every subcommand is run on it through ``main``; the
shell equivalents are printed alongside.
"""

import pathlib
import shlex
import tempfile

from overlaydyn.cli import main
from overlaydyn.corpus import write_corpus
from overlaydyn.synthetic import two_phase_corpus

store, basemap = two_phase_corpus()
work = pathlib.Path(tempfile.mkdtemp(prefix="overlaydyn-"))
write_corpus(store, work / "corpus.jsonl")

with open(work / "basemap.csv", "w") as fh:
    fh.write("cat_a,cat_b,value\n")
    for i, a in enumerate(basemap.categories):
        for b in basemap.categories[i + 1:]:
            if basemap.distance(a, b) < 1:
                fh.write(f"{a},{b},{basemap.distance(a, b)!r}\n")
(work / "seeds.txt").write_text("\n".join(i for i in store if i.startswith("2014-0")) + "\n")

common = ["--basemap", str(work / "basemap.csv"), "--basemap-mode", "distance",
          "--corpus", str(work / "corpus.jsonl"), "--out", str(work / "out")]
commands = [
    ["expand", "--corpus", str(work / "corpus.jsonl"), "--seeds", str(work / "seeds.txt"),
     "--thresholds", "1,2", "--out", str(work / "out")],
    ["series", "--mode", "typeA-cumulative", *common],
    ["series", "--mode", "typeA-cross", *common],
    ["overlay-export", "--year", "2005", "--side", "cited", *common],
    ["overlay-export", "--year", "2005", "--side", "citing", *common],
]
for cmd in commands:
    print("$ overlaydyn", shlex.join(cmd))
    print("exit", main(cmd))

print()
for path in sorted((work / "out").iterdir()):
    print(path.name)
print((work / "out" / "overlay_citing_2005.csv").read_text())
