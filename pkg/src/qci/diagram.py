"""Oriented link diagrams as 4-valent rotation systems.

Conventions, fixed once; all sign and index logic derives from them:

- A crossing record lists its four incident semi-arc ends counterclockwise
  in ``rot``, starting at the incoming under-strand end, so the under-strand
  leaves at slot 2.  ``over`` in {1, 3} is the slot where the over-strand
  enters; ``sign`` is +1 exactly when ``over == 3``.
- Traveling along an oriented strand its normal points LEFT; crossing a
  strand along its normal raises the region index of its component by 1.
- Faces are traced keeping the face on the left of travel: arriving at
  slot i, leave by slot (i - 1) mod 4.  The face containing the dart that
  arrives at slot i is the sector between slots i-1 and i.
- The source quadrant of a crossing is the one both strand normals point
  away from: the sector between slots 0 and 1 at a positive crossing and
  between slots 1 and 2 at a negative one.
- Crossingless unknot components are carried as ``free_loops`` entries
  (+1 counterclockwise, -1 clockwise), always embedded in the exterior
  region.

Region ids are deterministic: faces of the crossing graph sorted by their
smallest (semi-arc, side) incidence with side left=0 / right=1, followed by
one disk region per free loop in input order.
"""

from dataclasses import dataclass

from .algebra import StructureError

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class Crossing:
    rot: tuple
    over: int

    def __post_init__(self):
        if len(self.rot) != 4:
            raise StructureError("crossing rot needs exactly 4 semi-arc ids")
        if self.over not in (1, 3):
            raise StructureError("crossing over slot must be 1 or 3")

    @property
    def sign(self):
        return 1 if self.over == 3 else -1

    @property
    def under_in(self):
        return self.rot[0]

    @property
    def under_out(self):
        return self.rot[2]

    @property
    def over_in(self):
        return self.rot[self.over]

    @property
    def over_out(self):
        return self.rot[(self.over + 2) % 4]


@dataclass(frozen=True)
class CrossingGeometry:
    """Per-crossing data feeding the weight sums."""
    sign: int
    source_region: int
    a_arc: int        # arc whose color sits in the first cocycle slot
    b_arc: int        # over-strand arc
    quadrants: tuple  # region ids of sectors (0-1, 1-2, 2-3, 3-0)


@dataclass(frozen=True)
class IndexTable:
    """Total and per-component region indices; exterior is all zero."""
    totals: tuple
    per_component: tuple  # per_component[region][component]
    exterior: int


class Diagram:
    """Validated oriented link diagram; immutable after construction."""

    def __init__(self, crossings, free_loops=(), exterior=None):
        self.crossings = tuple(
            c if isinstance(c, Crossing) else Crossing(tuple(c["rot"]), c["over"])
            for c in crossings)
        self.free_loops = tuple(free_loops)
        for o in self.free_loops:
            if o not in (1, -1):
                raise StructureError("free loop orientation must be +1 or -1")
        if not self.crossings and not self.free_loops:
            raise StructureError("empty diagram")
        if not self.crossings:
            exterior = None  # the plane region is the exterior
        self.exterior_spec = tuple(exterior) if exterior is not None else None
        self._build()

    # -- construction -----------------------------------------------------

    def _build(self):
        endpoints = {}
        for ci, x in enumerate(self.crossings):
            for slot, sa in enumerate(x.rot):
                endpoints.setdefault(sa, []).append((ci, slot))
        for sa, eps in endpoints.items():
            if len(eps) != 2:
                raise StructureError(f"semi-arc {sa} has {len(eps)} ends, needs 2")
        self.endpoints = endpoints
        self.semiarcs = tuple(sorted(endpoints))

        # orientation: each semi-arc enters exactly one in-slot (head) and
        # leaves exactly one out-slot (tail)
        self.head = {}
        self.tail = {}
        for sa, eps in endpoints.items():
            for (ci, slot) in eps:
                x = self.crossings[ci]
                if slot == 0 or slot == x.over:
                    if sa in self.head:
                        raise StructureError(f"semi-arc {sa} enters two crossings")
                    self.head[sa] = (ci, slot)
                else:
                    if sa in self.tail:
                        raise StructureError(f"semi-arc {sa} leaves two crossings")
                    self.tail[sa] = (ci, slot)
        for sa in self.semiarcs:
            if sa not in self.head or sa not in self.tail:
                raise StructureError(f"semi-arc {sa} orientation is inconsistent")

        self._trace_faces()
        self._split_components()
        self._assemble_regions()

    def _other_end(self, sa, end):
        a, b = self.endpoints[sa]
        return b if a == end else a

    def _trace_faces(self):
        """Orbits of arrival darts under: arrive at slot i, leave slot i-1."""
        darts = [(ci, s) for ci in range(len(self.crossings)) for s in range(4)]
        face_of = {}
        faces = []
        for start in darts:
            if start in face_of:
                continue
            cycle = []
            d = start
            while d not in face_of:
                face_of[d] = len(faces)
                cycle.append(d)
                ci, slot = d
                j = (slot - 1) % 4
                sa = self.crossings[ci].rot[j]
                d = self._other_end(sa, (ci, j))
            if d != start:
                raise StructureError("face trace does not close")
            faces.append(tuple(cycle))
        if self.crossings:
            v = len(self.crossings)
            e = len(self.semiarcs)
            if e != 2 * v:
                raise StructureError("semi-arc count must be twice the crossings")
            if v - e + len(faces) != 2:
                raise StructureError(
                    "rotation system is not a connected sphere diagram")
        self._raw_faces = faces
        self._raw_face_of = face_of

    def _dart_incidence(self, dart):
        """(semi-arc, side) met by an arrival dart; left=0, right=1."""
        ci, slot = dart
        sa = self.crossings[ci].rot[slot]
        side = 0 if self.head[sa] == (ci, slot) else 1
        return (sa, side)

    def _split_components(self):
        # the successor of sa is the semi-arc leaving the crossing sa enters
        succ = {}
        for sa in self.semiarcs:
            ci, slot = self.head[sa]
            x = self.crossings[ci]
            succ[sa] = x.under_out if slot == 0 else x.over_out
        comps = []
        seen = set()
        for sa in self.semiarcs:
            if sa in seen:
                continue
            cyc = []
            cur = sa
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur = succ[cur]
            if cur != sa:
                raise StructureError("strand walk does not close")
            comps.append(tuple(cyc))
        comps.sort(key=lambda c: min(c))
        self._crossing_components = comps

        # arcs: semi-arcs glued where the strand passes over
        parent = {sa: sa for sa in self.semiarcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in self.crossings:
            a, b = find(x.over_in), find(x.over_out)
            if a != b:
                parent[a] = b
        classes = {}
        for sa in self.semiarcs:
            classes.setdefault(find(sa), []).append(sa)
        arcs = sorted((tuple(sorted(c)) for c in classes.values()),
                      key=lambda c: c[0])
        self._crossing_arcs = arcs

    def _assemble_regions(self):
        n_base = len(self._raw_faces) if self.crossings else 1
        if self.crossings:
            keyed = []
            for fi, cycle in enumerate(self._raw_faces):
                key = min(self._dart_incidence(d) for d in cycle)
                keyed.append((key, fi))
            keyed.sort()
            order = {fi: i for i, (_, fi) in enumerate(keyed)}
            self._face_region = order
            self.region_incidences = tuple(
                tuple(sorted(self._dart_incidence(d)
                             for d in self._raw_faces[fi]))
                for _, fi in keyed)
            if self.exterior_spec is None:
                raise StructureError("diagram with crossings needs an exterior")
            sa, side = self.exterior_spec
            if sa not in self.endpoints or side not in (LEFT, RIGHT):
                raise StructureError("exterior designation is invalid")
            dart = self.head[sa] if side == LEFT else self.tail[sa]
            self.exterior_region = order[self._raw_face_of[dart]]
        else:
            self._face_region = {0: 0}
            self.region_incidences = ((),)
            self.exterior_region = 0

        self.n_regions = n_base + len(self.free_loops)
        self._loop_region = {j: n_base + j for j in range(len(self.free_loops))}

        # components and arcs: crossing strands first, then free loops
        self.components = tuple(self._crossing_components) + tuple(
            () for _ in self.free_loops)
        self.arcs = tuple(self._crossing_arcs) + tuple(
            () for _ in self.free_loops)
        self.comp_of = {}
        for i, comp in enumerate(self._crossing_components):
            for sa in comp:
                self.comp_of[sa] = i
        self.arc_of = {}
        for i, arc in enumerate(self._crossing_arcs):
            for sa in arc:
                self.arc_of[sa] = i
        self._loop_component = {
            j: len(self._crossing_components) + j
            for j in range(len(self.free_loops))}
        self._loop_arc = {
            j: len(self._crossing_arcs) + j for j in range(len(self.free_loops))}

    # -- queries -----------------------------------------------------------

    @property
    def n_components(self):
        return len(self.components)

    @property
    def n_arcs(self):
        return len(self.arcs)

    @property
    def n_crossing_arcs(self):
        return len(self._crossing_arcs)

    def face_of_dart(self, ci, slot):
        return self._face_region[self._raw_face_of[(ci, slot)]]

    def side_region(self, sa, side):
        """Region on a side of a semi-arc (relative to its orientation)."""
        dart = self.head[sa] if side == LEFT else self.tail[sa]
        return self.face_of_dart(*dart)

    def loop_region(self, j):
        return self._loop_region[j]

    def loop_component(self, j):
        return self._loop_component[j]

    def loop_arc(self, j):
        return self._loop_arc[j]

    def arc_component(self, arc_id):
        n = len(self._crossing_arcs)
        if arc_id < n:
            return self.comp_of[self._crossing_arcs[arc_id][0]]
        return self._loop_component[arc_id - n]

    def region_steps(self):
        """Directed adjacency (from, to, arc, component): crossing the
        semi-arc (or loop) along its normal, right side to left side."""
        steps = []
        for sa in self.semiarcs:
            steps.append((self.side_region(sa, RIGHT),
                          self.side_region(sa, LEFT),
                          self.arc_of[sa], self.comp_of[sa]))
        for j, orient in enumerate(self.free_loops):
            disk, ext = self._loop_region[j], self.exterior_region
            if orient == 1:   # ccw: interior on the left
                steps.append((ext, disk, self._loop_arc[j], self._loop_component[j]))
            else:
                steps.append((disk, ext, self._loop_arc[j], self._loop_component[j]))
        return steps

    def to_json(self):
        data = {"v": 1,
                "crossings": [{"rot": list(x.rot), "over": x.over,
                               "orients": [0, x.over]}
                              for x in self.crossings]}
        if self.free_loops:
            data["free_loops"] = list(self.free_loops)
        if self.exterior_spec is not None:
            data["exterior"] = list(self.exterior_spec)
        return data


def parse_diagram(data):
    """Validated Diagram from its JSON form (dict or JSON text)."""
    import json as _json
    if isinstance(data, (str, bytes)):
        data = _json.loads(data)
    if not isinstance(data, dict):
        raise StructureError("diagram json must be an object")
    if data.get("v", 1) != 1:
        raise StructureError("unsupported schema version")
    crossings = []
    for rec in data.get("crossings", ()):
        if "rot" not in rec or "over" not in rec:
            raise StructureError("crossing record needs rot and over")
        if "orients" in rec and list(rec["orients"]) != [0, rec["over"]]:
            raise StructureError("orients disagrees with rot normalization")
        crossings.append(Crossing(tuple(rec["rot"]), rec["over"]))
    exterior = data.get("exterior")
    if exterior is not None:
        exterior = (exterior[0], exterior[1])
    diagram = Diagram(crossings, tuple(data.get("free_loops", ())), exterior)
    hints = data.get("components")
    if hints is not None:
        for sa, comp in hints.items():
            if diagram.comp_of.get(int(sa)) != comp:
                raise StructureError("component hints disagree with the diagram")
    return diagram


def compute_regions(crossings):
    """Faces of a crossing rotation system as (semi-arc, side) incidence
    lists, in canonical region order (side 0 = left, 1 = right)."""
    d = Diagram(crossings, exterior=_any_exterior(crossings))
    return [list(map(list, inc)) for inc in d.region_incidences]


def _any_exterior(crossings):
    first = crossings[0]
    rot = first["rot"] if isinstance(first, dict) else first.rot
    return (rot[0], LEFT)


def compute_indices(diagram):
    """Region indices by propagation from the exterior, with every
    adjacency checked so an inconsistent rotation system cannot slip by."""
    k = diagram.n_components
    steps = diagram.region_steps()
    fwd = {}
    for frm, to, _arc, comp in steps:
        fwd.setdefault(frm, []).append((to, comp, 1))
        fwd.setdefault(to, []).append((frm, comp, -1))
    vecs = {diagram.exterior_region: (0,) * k}
    frontier = [diagram.exterior_region]
    while frontier:
        r = frontier.pop()
        for to, comp, delta in fwd.get(r, ()):
            want = tuple(v + (delta if i == comp else 0)
                         for i, v in enumerate(vecs[r]))
            if to in vecs:
                if vecs[to] != want:
                    raise StructureError("inconsistent region propagation")
            else:
                vecs[to] = want
                frontier.append(to)
    if len(vecs) != diagram.n_regions:
        raise StructureError("region adjacency graph is disconnected")
    for frm, to, _arc, comp in steps:
        diff = tuple(b - a for a, b in zip(vecs[frm], vecs[to]))
        if diff != tuple(1 if i == comp else 0 for i in range(k)):
            raise StructureError("inconsistent region propagation")
    per = tuple(vecs[r] for r in range(diagram.n_regions))
    totals = tuple(sum(v) for v in per)
    return IndexTable(totals=totals, per_component=per,
                      exterior=diagram.exterior_region)


def crossing_geometry(diagram):
    """Signs, source regions, cocycle color slots, and quadrant ids."""
    out = []
    for ci, x in enumerate(diagram.crossings):
        quads = tuple(diagram.face_of_dart(ci, (i + 1) % 4) for i in range(4))
        if x.sign > 0:
            src = quads[0]
            a_sa = x.rot[0]
        else:
            src = quads[1]
            a_sa = x.rot[2]
        out.append(CrossingGeometry(sign=x.sign, source_region=src,
                                    a_arc=diagram.arc_of[a_sa],
                                    b_arc=diagram.arc_of[x.rot[x.over]],
                                    quadrants=quads))
    return out


def checkerboard(diagram, indices=None):
    """Region parity: 0 = white (exterior), 1 = black."""
    if indices is None:
        indices = compute_indices(diagram)
    return tuple(t % 2 for t in indices.totals)


@dataclass(frozen=True)
class RewriteResult:
    diagram: "Diagram"
    arc_origin: dict  # new semi-arc (or loop) -> arc id in the old diagram
    acted: frozenset = frozenset()  # new semi-arcs whose color the move acts on


def _fresh_ids(diagram, count):
    base = max(diagram.semiarcs, default=-1) + 1
    return list(range(base, base + count))


_R1_TABLES = {
    # (chirality, side) -> template over (s, t, u): rot slots and over slot
    (1, LEFT): (("s", "t", "u", "u"), 3),
    (-1, RIGHT): (("s", "u", "u", "t"), 1),
    (1, RIGHT): (("u", "u", "t", "s"), 3),
    (-1, LEFT): (("u", "s", "t", "u"), 1),
}


def r1_insert(diagram, target, chirality=1, side=LEFT):
    """Insert a kink of the given sign on a semi-arc (or ``("loop", j)``).

    The lobe pokes into the region on ``side`` of the strand.  Returns the
    rewritten diagram plus the new-semi-arc -> old-arc correspondence that
    drives the coloring bijection.
    """
    if (chirality, side) not in _R1_TABLES:
        raise StructureError("chirality must be +-1 and side left/right")
    template, over = _R1_TABLES[(chirality, side)]
    records = [{"rot": list(x.rot), "over": x.over} for x in diagram.crossings]
    origin = {sa: diagram.arc_of[sa] for sa in diagram.semiarcs}

    if isinstance(target, tuple) and target and target[0] == "loop":
        j = target[1]
        if not 0 <= j < len(diagram.free_loops):
            raise StructureError(f"no free loop {j}")
        s, u = _fresh_ids(diagram, 2)
        names = {"s": s, "t": s, "u": u}
        old_arc = diagram.loop_arc(j)
        orient = diagram.free_loops[j]
        loops = tuple(o for i, o in enumerate(diagram.free_loops) if i != j)
        exterior = diagram.exterior_spec
        if exterior is None:
            exterior = (s, RIGHT if orient == 1 else LEFT)
        records.append({"rot": [names[t] for t in template], "over": over})
        origin[s] = old_arc
        origin[u] = old_arc
        for new_j, old_j in enumerate(i for i in range(len(diagram.free_loops))
                                      if i != j):
            origin[("loop", new_j)] = diagram.loop_arc(old_j)
        new = Diagram(records, loops, exterior)
        return RewriteResult(new, origin)

    if target not in diagram.endpoints:
        raise StructureError(f"no semi-arc {target}")
    s = target
    t, u = _fresh_ids(diagram, 2)
    ci, slot = diagram.head[s]
    records[ci]["rot"][slot] = t
    names = {"s": s, "t": t, "u": u}
    records.append({"rot": [names[k] for k in template], "over": over})
    old_arc = diagram.arc_of[s]
    origin[t] = old_arc
    origin[u] = old_arc
    for j in range(len(diagram.free_loops)):
        origin[("loop", j)] = diagram.loop_arc(j)
    new = Diagram(records, diagram.free_loops, diagram.exterior_spec)
    return RewriteResult(new, origin)


def _r2_self_poke(diagram, j):
    """Poke one side of a crossingless loop over the other, through the
    loop's interior: the 2-crossing clasp diagram of the unknot."""
    if not 0 <= j < len(diagram.free_loops):
        raise StructureError(f"no free loop {j}")
    a, b, c, dd = _fresh_ids(diagram, 4)
    orient = diagram.free_loops[j]
    records = [{"rot": list(x.rot), "over": x.over} for x in diagram.crossings]
    if orient == 1:
        # strands run west on top / east below; both face the interior left
        records.append({"rot": [dd, b, a, a], "over": 3})
        records.append({"rot": [c, b, dd, c], "over": 1})
        ext_side = RIGHT
    else:
        records.append({"rot": [dd, a, a, b], "over": 1})
        records.append({"rot": [c, c, dd, b], "over": 3})
        ext_side = LEFT
    loops = tuple(o for i, o in enumerate(diagram.free_loops) if i != j)
    exterior = diagram.exterior_spec
    if exterior is None:
        exterior = (a, ext_side)
    origin = {sa: diagram.arc_of[sa] for sa in diagram.semiarcs}
    old_arc = diagram.loop_arc(j)
    for sa in (a, b, c, dd):
        origin[sa] = old_arc
    for new_j, old_j in enumerate(i for i in range(len(diagram.free_loops))
                                  if i != j):
        origin[("loop", new_j)] = diagram.loop_arc(old_j)
    new = Diagram(records, loops, exterior)
    return RewriteResult(new, origin, frozenset({dd}))


def _r2_rots(sigma2, desc_strand2, asc_strand2, p0, p1, p2):
    """Crossing records for the two new crossings of a poke; strand 1
    descends across strand 2 first (positive crossing on the left-facing
    configuration), then ascends back."""
    (d_in, d_out), (a_in, a_out) = desc_strand2, asc_strand2
    if sigma2 == LEFT:
        desc = {"rot": [d_in, p1, d_out, p0], "over": 3}
        asc = {"rot": [a_in, p1, a_out, p2], "over": 1}
    else:
        desc = {"rot": [d_in, p0, d_out, p1], "over": 1}
        asc = {"rot": [a_in, p2, a_out, p1], "over": 3}
    return desc, asc


def r2_insert(diagram, target1, target2):
    """Poke strand 1 over strand 2 across a region they both border.

    Targets are semi-arc ids, or ``("loop", j)`` entries when the diagram
    is crossingless.  The two new crossings have opposite signs.
    """
    is_loop1 = isinstance(target1, tuple) and target1 and target1[0] == "loop"
    is_loop2 = isinstance(target2, tuple) and target2 and target2[0] == "loop"
    if is_loop1 != is_loop2:
        raise StructureError("mixed loop/semi-arc pokes are not supported")
    if is_loop1 and target1 == target2:
        return _r2_self_poke(diagram, target1[1])
    if target1 == target2:
        raise StructureError("cannot poke a segment across itself")

    if is_loop1:
        j1, j2 = target1[1], target2[1]
        for j in (j1, j2):
            if not 0 <= j < len(diagram.free_loops):
                raise StructureError(f"no free loop {j}")
        p_main, p1, q_main, q1 = _fresh_ids(diagram, 4)
        o1, o2 = diagram.free_loops[j1], diagram.free_loops[j2]
        sigma1 = RIGHT if o1 == 1 else LEFT
        sigma2 = RIGHT if o2 == 1 else LEFT
        desc_first = sigma1 != sigma2
        desc2 = (q_main, q1) if desc_first else (q1, q_main)
        asc2 = (q1, q_main) if desc_first else (q_main, q1)
        desc, asc = _r2_rots(sigma2, desc2, asc2, p_main, p1, p_main)
        records = [{"rot": list(x.rot), "over": x.over} for x in diagram.crossings]
        records += [desc, asc]
        loops = tuple(o for i, o in enumerate(diagram.free_loops)
                      if i not in (j1, j2))
        exterior = diagram.exterior_spec
        if exterior is None:
            exterior = (p_main, sigma1)
        origin = {sa: diagram.arc_of[sa] for sa in diagram.semiarcs}
        origin[p_main] = origin[p1] = diagram.loop_arc(j1)
        origin[q_main] = origin[q1] = diagram.loop_arc(j2)
        for new_j, old_j in enumerate(i for i in range(len(diagram.free_loops))
                                      if i not in (j1, j2)):
            origin[("loop", new_j)] = diagram.loop_arc(old_j)
        new = Diagram(records, loops, exterior)
        return RewriteResult(new, origin, frozenset({q1}))

    for sa in (target1, target2):
        if sa not in diagram.endpoints:
            raise StructureError(f"no semi-arc {sa}")
    common = None
    for sigma1 in (LEFT, RIGHT):
        for sigma2 in (LEFT, RIGHT):
            if (diagram.side_region(target1, sigma1)
                    == diagram.side_region(target2, sigma2)):
                common = (sigma1, sigma2)
                break
        if common:
            break
    if common is None:
        raise StructureError("segments do not border a common region")
    sigma1, sigma2 = common
    p0, q0 = target1, target2
    p1, p2, q1, q2 = _fresh_ids(diagram, 4)
    records = [{"rot": list(x.rot), "over": x.over} for x in diagram.crossings]
    ci, slot = diagram.head[p0]
    records[ci]["rot"][slot] = p2
    ci, slot = diagram.head[q0]
    records[ci]["rot"][slot] = q2
    desc_first = sigma1 != sigma2
    desc2 = (q0, q1) if desc_first else (q1, q2)
    asc2 = (q1, q2) if desc_first else (q0, q1)
    desc, asc = _r2_rots(sigma2, desc2, asc2, p0, p1, p2)
    records += [desc, asc]
    origin = {sa: diagram.arc_of[sa] for sa in diagram.semiarcs}
    for sa in (p1, p2):
        origin[sa] = diagram.arc_of[p0]
    for sa in (q1, q2):
        origin[sa] = diagram.arc_of[q0]
    for j in range(len(diagram.free_loops)):
        origin[("loop", j)] = diagram.loop_arc(j)
    new = Diagram(records, diagram.free_loops, diagram.exterior_spec)
    return RewriteResult(new, origin, frozenset({q1}))
