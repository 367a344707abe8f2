"""Weight sums over colored diagrams and the invariant multisets.

Every flavor is a signed sum over crossings of cocycle values at the local
colors; the flavors differ in the sign rule and in the twisting factor:

- classical:      sign(x) * w(a, b)
- shadow:         sign(x) * w(m(x), a, b), m(x) the source-region color
- positive:       sign_pos(x) * w(a, b), sign_pos from the checkerboard
- twisted:        sign(x) * alpha^-i(x) * w(a, b)
- shadow_twisted: sign(x) * alpha^-i(x) * w(m(x), a, b)
- link_twisted:   sign(x) * prod_j alpha_{orbit(j)}^-i_j(x) * w(a, b)

Here a is the under color on the source-region side, b the over color,
i(x) the index of the source region.  The invariant is the multiset of
weights over all colorings (with the exterior region color pinned for
shadow flavors).
"""

import os
from dataclasses import dataclass, field

from .algebra import (IntegerShadowModule, IntUnit, ProductModule, Scalar,
                      StructureError, orbits)
from .cohomology import (DifferentialSpec, is_cocycle,
                         is_link_twisted_cocycle,
                         shadow_twisted_product_cochain)
from .coloring import (component_orbits, enumerate_colorings,
                       propagate_shadow)
from .diagram import checkerboard, compute_indices, crossing_geometry

FLAVORS = ("classical", "shadow", "positive", "twisted", "shadow_twisted",
           "link_twisted")


class CocycleError(ValueError):
    """The supplied cochain fails the cocycle condition its flavor needs."""

    def __init__(self, flavor, report):
        self.flavor = flavor
        self.report = report
        super().__init__(
            f"{flavor}: {report.axiom} fails at {report.witness}")


@dataclass(frozen=True)
class WeightMultiset:
    """Canonical multiset of coefficient-group elements."""
    weights: tuple  # sorted ((element tuple, multiplicity), ...)
    meta: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_values(cls, values, meta=None):
        counts = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls(tuple(sorted(counts.items())), meta or {})

    def total(self):
        return sum(m for _, m in self.weights)

    def scaled(self, scalar, power=1):
        return WeightMultiset.from_values(
            [scalar.apply(v, power) for v, m in self.weights for _ in range(m)],
            dict(self.meta))

    def negated(self, coeff):
        return WeightMultiset.from_values(
            [coeff.neg(v) for v, m in self.weights for _ in range(m)],
            dict(self.meta))

    def to_json(self):
        data = {"v": 1, "weights": [[list(v), m] for v, m in self.weights]}
        if self.meta:
            data["meta"] = self.meta
        return data

    @classmethod
    def from_json(cls, data):
        return cls(tuple((tuple(v), m) for v, m in data["weights"]),
                   data.get("meta", {}))


# -- flavor-matched cocycle validation --------------------------------------

def validate_cocycle(flavor, omega, *, alpha=None, alphas=None,
                     orbit_map=None):
    """Raise CocycleError unless omega satisfies the flavor's condition."""
    coeff = omega.coeff
    if flavor == "classical":
        report = is_cocycle(DifferentialSpec.quandle(coeff), omega)
    elif flavor == "shadow":
        report = is_cocycle(DifferentialSpec.quandle(coeff), omega)
    elif flavor == "positive":
        report = is_cocycle(DifferentialSpec.positive(coeff), omega)
    elif flavor == "twisted":
        report = is_cocycle(DifferentialSpec.twisted(coeff, alpha), omega)
    elif flavor == "shadow_twisted":
        report = is_cocycle(DifferentialSpec.twisted(coeff, alpha), omega)
    elif flavor == "link_twisted":
        report = is_link_twisted_cocycle(omega, alphas, orbit_map)
    else:
        raise StructureError(f"unknown flavor {flavor!r}")
    if not report:
        raise CocycleError(flavor, report)


def _as_scalar(coeff, alpha):
    if isinstance(alpha, Scalar):
        return alpha
    return IntUnit(coeff, alpha)


# -- per-coloring weights ----------------------------------------------------

def _geometry(diagram):
    return crossing_geometry(diagram)


def weight_classical(diagram, coloring, omega, check=True):
    """Signed sum of w(a, b) over the crossings."""
    if check:
        validate_cocycle("classical", omega)
    coeff = omega.coeff
    total = coeff.zero()
    for g in _geometry(diagram):
        term = omega.at(0, (coloring[g.a_arc], coloring[g.b_arc]))
        total = coeff.add(total, term if g.sign > 0 else coeff.neg(term))
    return total


def weight_shadow(diagram, shadow, omega, check=True):
    """Signed sum of w(source color, a, b)."""
    if check and not isinstance(omega.module, (IntegerShadowModule,
                                               ProductModule)):
        validate_cocycle("shadow", omega)
    coeff = omega.coeff
    total = coeff.zero()
    for g in _geometry(diagram):
        term = omega.at(shadow.regions[g.source_region],
                        (shadow.arcs[g.a_arc], shadow.arcs[g.b_arc]))
        total = coeff.add(total, term if g.sign > 0 else coeff.neg(term))
    return total


def positive_signs(diagram, indices=None):
    """Checkerboard sign per crossing: + where the quadrant pair flanking
    the over-strand is white."""
    colors = checkerboard(diagram, indices)
    return tuple(1 if colors[g.quadrants[0]] == 0 else -1
                 for g in _geometry(diagram))


def weight_positive(diagram, coloring, omega, check=True):
    """Sum of sign_pos(x) * w(a, b) with checkerboard-based signs."""
    if check:
        validate_cocycle("positive", omega)
    coeff = omega.coeff
    total = coeff.zero()
    signs = positive_signs(diagram)
    for g, s in zip(_geometry(diagram), signs):
        term = omega.at(0, (coloring[g.a_arc], coloring[g.b_arc]))
        total = coeff.add(total, term if s > 0 else coeff.neg(term))
    return total


def weight_twisted(diagram, coloring, omega, alpha, check=True):
    """Sum of sign(x) * alpha^-i(x) * w(a, b)."""
    alpha = _as_scalar(omega.coeff, alpha)
    if check:
        validate_cocycle("twisted", omega, alpha=alpha)
    coeff = omega.coeff
    idx = compute_indices(diagram)
    total = coeff.zero()
    for g in _geometry(diagram):
        term = omega.at(0, (coloring[g.a_arc], coloring[g.b_arc]))
        term = alpha.apply(term, -idx.totals[g.source_region])
        total = coeff.add(total, term if g.sign > 0 else coeff.neg(term))
    return total


def weight_shadow_twisted(diagram, shadow, omega, alpha, check=True):
    """Twisted shadow weight, computed twice: by the direct formula and
    through the product module M x Z, which must agree."""
    alpha = _as_scalar(omega.coeff, alpha)
    if check:
        validate_cocycle("shadow_twisted", omega, alpha=alpha)
    coeff = omega.coeff
    idx = compute_indices(diagram)
    total = coeff.zero()
    for g in _geometry(diagram):
        term = omega.at(shadow.regions[g.source_region],
                        (shadow.arcs[g.a_arc], shadow.arcs[g.b_arc]))
        term = alpha.apply(term, -idx.totals[g.source_region])
        total = coeff.add(total, term if g.sign > 0 else coeff.neg(term))

    product = ProductModule(omega.module, IntegerShadowModule(omega.quandle))
    paired = shadow.__class__(
        arcs=shadow.arcs,
        regions=tuple((m, idx.totals[r])
                      for r, m in enumerate(shadow.regions)),
        module=product)
    lifted = shadow_twisted_product_cochain(omega, alpha, product)
    cross = weight_shadow(diagram, paired, lifted, check=False)
    if cross != total:
        raise StructureError("product-module route disagrees with the "
                             "direct twisted shadow weight")
    return total


def weight_link_twisted(diagram, coloring, omega, alphas, orbit_map=None,
                        check=True):
    """Per-component twisted weight with one unit per quandle orbit."""
    coeff = omega.coeff
    if orbit_map is None:
        orbit_map = orbits(omega.quandle)
    alphas = [_as_scalar(coeff, a) for a in alphas]
    if len(alphas) != orbit_map.count:
        raise StructureError("need one unit per quandle orbit")
    if check:
        validate_cocycle("link_twisted", omega, alphas=alphas,
                         orbit_map=orbit_map)
    idx = compute_indices(diagram)
    comp_orbs = component_orbits(diagram, coloring, orbit_map)
    total = coeff.zero()
    for g in _geometry(diagram):
        term = omega.at(0, (coloring[g.a_arc], coloring[g.b_arc]))
        for j, orb in enumerate(comp_orbs):
            e = idx.per_component[g.source_region][j]
            if e:
                term = alphas[orb].apply(term, -e)
        total = coeff.add(total, term if g.sign > 0 else coeff.neg(term))
    return total


# -- invariant multisets ------------------------------------------------------

def _threads():
    try:
        return max(1, int(os.environ.get("QCI_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items):
    n = _threads()
    if n <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def invariant_multiset(diagram, quandle, flavor, omega, *, module=None,
                       alpha=None, alphas=None, exterior=None, check=True):
    """The flavor's weight multiset over all (shadow) colorings.

    Shadow flavors pin the exterior region color to ``exterior`` and extend
    each arc coloring to the unique compatible region coloring.
    """
    if flavor not in FLAVORS:
        raise StructureError(f"unknown flavor {flavor!r}")
    coeff = omega.coeff
    orbit_map = None
    if flavor == "link_twisted":
        orbit_map = orbits(quandle)
        alphas = [_as_scalar(coeff, a) for a in alphas]
    if flavor in ("twisted", "shadow_twisted"):
        alpha = _as_scalar(coeff, alpha)
    if check:
        validate_cocycle(flavor, omega, alpha=alpha, alphas=alphas,
                         orbit_map=orbit_map)

    shadow_flavor = flavor in ("shadow", "shadow_twisted")
    if shadow_flavor:
        mod = module if module is not None else omega.module
        if mod is None:
            raise StructureError(f"{flavor} needs a module")
        if exterior is None:
            raise StructureError(f"{flavor} needs an exterior region color")

    colorings = enumerate_colorings(diagram, quandle)

    def one(coloring):
        if flavor == "classical":
            return weight_classical(diagram, coloring, omega, check=False)
        if flavor == "positive":
            return weight_positive(diagram, coloring, omega, check=False)
        if flavor == "twisted":
            return weight_twisted(diagram, coloring, omega, alpha, check=False)
        if flavor == "link_twisted":
            return weight_link_twisted(diagram, coloring, omega, alphas,
                                       orbit_map, check=False)
        shadow = propagate_shadow(diagram, coloring, mod, exterior)
        if flavor == "shadow":
            return weight_shadow(diagram, shadow, omega, check=False)
        return weight_shadow_twisted(diagram, shadow, omega, alpha,
                                     check=False)

    meta = {"flavor": flavor, "colorings": len(colorings),
            "crossings": len(diagram.crossings), "quandle": quandle.n}
    if alpha is not None and isinstance(alpha, IntUnit):
        meta["alpha"] = alpha.value
    if alphas is not None:
        meta["alphas"] = [a.value for a in alphas if isinstance(a, IntUnit)]
    if exterior is not None:
        meta["exterior"] = list(exterior) if isinstance(exterior, tuple) \
            else exterior
    return WeightMultiset.from_values(_map(one, colorings), meta)


def orbit_refined_multisets(diagram, quandle, flavor, omega, *, alpha=None,
                            alphas=None, check=True):
    """The flavor multiset split by the tuple of component color orbits."""
    if flavor not in ("classical", "twisted", "link_twisted", "positive"):
        raise StructureError("orbit refinement applies to arc-coloring flavors")
    coeff = omega.coeff
    orbit_map = orbits(quandle)
    if flavor == "link_twisted":
        alphas = [_as_scalar(coeff, a) for a in alphas]
    if flavor == "twisted":
        alpha = _as_scalar(coeff, alpha)
    if check:
        validate_cocycle(flavor, omega, alpha=alpha, alphas=alphas,
                         orbit_map=orbit_map)
    buckets = {}
    for coloring in enumerate_colorings(diagram, quandle):
        key = component_orbits(diagram, coloring, orbit_map)
        if flavor == "classical":
            w = weight_classical(diagram, coloring, omega, check=False)
        elif flavor == "positive":
            w = weight_positive(diagram, coloring, omega, check=False)
        elif flavor == "twisted":
            w = weight_twisted(diagram, coloring, omega, alpha, check=False)
        else:
            w = weight_link_twisted(diagram, coloring, omega, alphas,
                                    orbit_map, check=False)
        buckets.setdefault(key, []).append(w)
    return {key: WeightMultiset.from_values(vals, {"flavor": flavor,
                                                   "orbits": list(key)})
            for key, vals in sorted(buckets.items())}
