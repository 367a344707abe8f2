"""Shipped diagram corpus: unknot, trefoil (both chiralities), figure
eight, Hopf link (both relative orientations), the 2-component unlink, and
two curated pairs related by a third Reidemeister move."""

import json
from importlib import resources

from ..diagram import parse_diagram

BASE_DIAGRAMS = ("unknot", "unlink2", "trefoil", "trefoil_mirror",
                 "figure_eight", "hopf_pos", "hopf_neg")
R3_PAIRS = (("trefoil_r3a", "trefoil_r3b"), ("link_r3a", "link_r3b"))


def names():
    files = resources.files(__name__)
    return sorted(p.name[:-5] for p in files.iterdir()
                  if p.name.endswith(".json"))


def load_json(name):
    data = resources.files(__name__).joinpath(f"{name}.json").read_text()
    return json.loads(data)


def load(name):
    """Parsed corpus diagram by name (no .json suffix)."""
    return parse_diagram(load_json(name))
