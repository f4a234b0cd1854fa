"""
Growing a corpus by snowballing references
==========================================

Start from a few seed papers, follow references cited often enough, and
stop once no new reference clears the threshold.
"""

from overlaydyn import Corpus, DocumentRecord, snowball_expand

def paper(doc_id, refs):
    return DocumentRecord(doc_id, 2000, frozenset({"A"}), frozenset(refs))

store = Corpus(
    [
        paper("s1", ["r1", "r2", "r3"]),
        paper("s2", ["r1", "r2"]),
        paper("s3", ["r1", "r4", "outside"]),
        paper("r1", ["q1", "q2"]),
        paper("r2", ["q1"]),
        paper("r3", []),
        paper("r4", []),
        paper("q1", ["r1"]),
        paper("q2", []),
    ]
)

# Thresholds get stricter with each generation; the last one is reused.
corpus, report = snowball_expand(store, {"s1", "s2", "s3"}, thresholds=[2, 2])

print("collected:", sorted(corpus))
print("converged:", report.converged)
for row in report.rows:
    print(row.as_tuple())
print("total:", report.total)

# %%
# The report writes as a CSV with a ``total`` footer.
import tempfile, pathlib

with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "expansion_report.csv"
    report.write_csv(path)
    print(path.read_text())
