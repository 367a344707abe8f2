"""Freeze oracle-computed expected values into tests/golden/.

Run from the repo root.  Coloring counts come from the exhaustive
assignment oracle in tests/oracle_utils.py, which reads raw crossing
records and never touches the library's search or weight code.
"""

import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT))

from qci import corpus  # noqa: E402
from qci.algebra import make_dihedral  # noqa: E402
from tests.oracle_utils import brute_force_colorings  # noqa: E402

GOLDEN = ROOT / "tests" / "golden"


def arc_map_from_raw(records):
    """Semi-arc -> arc id straight from raw records: glue over passes."""
    semiarcs = sorted({sa for rec in records for sa in rec["rot"]})
    parent = {sa: sa for sa in semiarcs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rec in records:
        over_in = rec["rot"][rec["over"]]
        over_out = rec["rot"][(rec["over"] + 2) % 4]
        a, b = find(over_in), find(over_out)
        if a != b:
            parent[a] = b
    classes = {}
    for sa in semiarcs:
        classes.setdefault(find(sa), []).append(sa)
    ordered = sorted((sorted(c) for c in classes.values()), key=lambda c: c[0])
    arc_of = {}
    for i, cls in enumerate(ordered):
        for sa in cls:
            arc_of[sa] = i
    return arc_of, len(ordered)


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    counts = {}
    for name, n in (("trefoil", 3), ("figure_eight", 3), ("figure_eight", 5),
                    ("trefoil", 5), ("hopf_pos", 4), ("link_r3a", 3)):
        raw = corpus.load_json(name)
        records = raw.get("crossings", [])
        arc_of, n_arcs = arc_map_from_raw(records)
        n_arcs += len(raw.get("free_loops", ()))
        q = make_dihedral(n)
        sols = brute_force_colorings(records, arc_of, n_arcs,
                                     [list(r) for r in q.op],
                                     [list(r) for r in q.inv])
        counts[f"{name}/dihedral{n}"] = len(sols)
    path = GOLDEN / "coloring_counts.json"
    path.write_text(json.dumps(counts, indent=2, sort_keys=True) + "\n")
    print(json.dumps(counts, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
