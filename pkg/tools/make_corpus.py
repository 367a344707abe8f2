"""Generate the shipped diagram corpus (run from the repo root).

Braid closures are the one systematic way to get trustworthy rotation
systems: strands run downward, the strand entering a positive letter from
the right passes over, and the closure joins bottom back to top.  The
resulting records are validated by the Diagram constructor (Euler count,
orientation consistency) before being written.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from qci.diagram import Diagram, compute_indices, crossing_geometry  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "qci" / "corpus"


def braid_closure(word, strands):
    """Diagram JSON of the closure of a braid word (letters +-1..+-(k-1))."""
    levels = len(word)
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for lv in range(levels + 1):
        for p in range(1, strands + 1):
            parent[(lv, p)] = (lv, p)
    for lv, letter in enumerate(word):
        i = abs(letter)
        if not 1 <= i < strands:
            raise ValueError(f"letter {letter} out of range")
        for p in range(1, strands + 1):
            if p not in (i, i + 1):
                union((lv, p), (lv + 1, p))
    for p in range(1, strands + 1):
        union((levels, p), (0, p))

    classes = {}
    for lv in range(levels + 1):
        for p in range(1, strands + 1):
            classes.setdefault(find((lv, p)), set()).add((lv, p))
    reps = sorted(classes, key=lambda r: min(classes[r]))
    sa_id = {}
    for idx, rep in enumerate(reps):
        for seg in classes[rep]:
            sa_id[seg] = idx

    crossings = []
    for lv, letter in enumerate(word):
        i = abs(letter)
        nw, ne = sa_id[(lv, i)], sa_id[(lv, i + 1)]
        sw, se = sa_id[(lv + 1, i)], sa_id[(lv + 1, i + 1)]
        if letter > 0:
            crossings.append({"rot": [nw, sw, se, ne], "over": 3})
        else:
            crossings.append({"rot": [ne, nw, sw, se], "over": 1})
    return {"v": 1, "crossings": crossings,
            "exterior": [sa_id[(0, 1)], "right"]}


CORPUS = {
    "unknot": {"v": 1, "crossings": [], "free_loops": [1]},
    "unlink2": {"v": 1, "crossings": [], "free_loops": [1, 1]},
    "trefoil": braid_closure([1, 1, 1], 2),
    "trefoil_mirror": braid_closure([-1, -1, -1], 2),
    "figure_eight": braid_closure([1, -2, 1, -2], 3),
    "hopf_pos": braid_closure([1, 1], 2),
    "hopf_neg": braid_closure([-1, -1], 2),
    "trefoil_r3a": braid_closure([1, 2, 1, 2], 3),
    "trefoil_r3b": braid_closure([2, 1, 2, 2], 3),
    "link_r3a": braid_closure([1, 2, 1], 3),
    "link_r3b": braid_closure([2, 1, 2], 3),
}

EXPECT = {
    # name: (components, regions, crossings, signs-sum)
    "unknot": (1, 2, 0, 0),
    "unlink2": (2, 3, 0, 0),
    "trefoil": (1, 5, 3, 3),
    "trefoil_mirror": (1, 5, 3, -3),
    "figure_eight": (1, 6, 4, 0),
    "hopf_pos": (2, 4, 2, 2),
    "hopf_neg": (2, 4, 2, -2),
    "trefoil_r3a": (1, 6, 4, 4),
    "trefoil_r3b": (1, 6, 4, 4),
    "link_r3a": (2, 5, 3, 3),
    "link_r3b": (2, 5, 3, 3),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, data in CORPUS.items():
        d = Diagram([c for c in data.get("crossings", ())],
                    tuple(data.get("free_loops", ())),
                    tuple(data["exterior"]) if "exterior" in data else None)
        compute_indices(d)
        geo = crossing_geometry(d)
        comps, regions, ncross, signsum = EXPECT[name]
        assert d.n_components == comps, (name, d.n_components)
        assert d.n_regions == regions, (name, d.n_regions)
        assert len(d.crossings) == ncross, name
        assert sum(g.sign for g in geo) == signsum, (name, [g.sign for g in geo])
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(data, sort_keys=True) + "\n")
        print(f"wrote {path.name}: {comps} comps, {regions} regions")


if __name__ == "__main__":
    main()
