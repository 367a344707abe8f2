"""The qci command: file-based access to every operation.

All I/O is JSON with schema version "v": 1.  Output is canonical (sorted
keys, compact separators), so identical inputs give identical bytes.  Exit
codes: 0 success, 1 a validation failure with a witness, 2 malformed or
unsupported input.  QCI_THREADS caps internal parallelism; --seed only
randomizes test-harness data (random cochains in corpus-verify), never an
invariant computation.
"""

import argparse
import hashlib
import json
import random
import sys
import time

from . import __version__
from . import corpus as corpus_pkg
from .algebra import (CoeffGroup, IntUnit, IntegerShadowModule,
                      OrbitShadowModule, Quandle, StructureError,
                      check_module, check_quandle, cyclic_shadow_module,
                      module_from_json, orbits)
from .cohomology import (Cochain, DifferentialSpec, cohomology_basis,
                         is_cocycle, is_in_span, random_cochain,
                         transport_twisted_to_shadow)
from .coloring import enumerate_colorings, propagate_shadow
from .diagram import (checkerboard, compute_indices, parse_diagram,
                      r1_insert, r2_insert)
from .invariants import (CocycleError, invariant_multiset,
                         orbit_refined_multisets, weight_shadow,
                         weight_twisted)


class _Inputs:
    """Tracks files read, for the reproducibility manifest.

    Paths of the form ``corpus:<name>`` resolve to the shipped corpus.
    """

    def __init__(self):
        self.digests = {}

    def read_json(self, path):
        if path.startswith("corpus:"):
            from importlib import resources
            raw = resources.files("qci.corpus").joinpath(
                f"{path[7:]}.json").read_bytes()
        else:
            with open(path, "rb") as fh:
                raw = fh.read()
        self.digests[path] = hashlib.sha256(raw).hexdigest()
        return json.loads(raw)


def _dump(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _parse_spec(text, coeff):
    try:
        l, r = (int(x) for x in text.split(","))
    except ValueError:
        raise StructureError("--spec expects two integers like 1,-1")
    return DifferentialSpec(IntUnit(coeff, l), IntUnit(coeff, r))


def _parse_module(text, inputs, quandle):
    if text == "Z":
        return IntegerShadowModule(quandle)
    if text == "orbitZ":
        return OrbitShadowModule(quandle)
    if text.startswith("Z/"):
        return cyclic_shadow_module(quandle, int(text[2:]))
    return module_from_json(inputs.read_json(text), quandle)


def _parse_exterior(text, module):
    parts = [int(x) for x in text.split(",")]
    if isinstance(module, OrbitShadowModule):
        if len(parts) != module.dims:
            raise StructureError(
                f"exterior vector needs {module.dims} entries")
        return tuple(parts)
    if len(parts) != 1:
        raise StructureError("exterior color must be a single integer")
    if module.is_finite and not 0 <= parts[0] < module.size:
        raise StructureError("exterior color out of range for the module")
    return parts[0]


def _parse_target(text):
    if text.startswith("loop:"):
        return ("loop", int(text[5:]))
    return int(text)


# -- subcommands -------------------------------------------------------------

def cmd_check(args, inputs):
    data = inputs.read_json(args.file)
    if args.kind != "quandle" and not args.quandle:
        raise StructureError(f"checking a {args.kind} needs --quandle")
    if args.kind == "quandle":
        report = check_quandle(data["op"], data.get("inv"))
        payload = {"v": 1, "kind": "quandle", "passed": report.passed}
    elif args.kind == "module":
        q = Quandle.from_json(inputs.read_json(args.quandle))
        mod = module_from_json(data, q)
        report = check_module(mod, q)
        payload = {"v": 1, "kind": "module", "passed": report.passed}
    elif args.kind == "cocycle":
        q = Quandle.from_json(inputs.read_json(args.quandle))
        phi = Cochain.from_json(data, q)
        spec = _parse_spec(args.spec, phi.coeff)
        report = is_cocycle(spec, phi, quandle_flag=not args.no_quandle_flag)
        payload = {"v": 1, "kind": "cocycle", "passed": report.passed}
    else:
        raise StructureError(f"unknown check kind {args.kind!r}")
    if not report.passed:
        payload["axiom"] = report.axiom
        payload["witness"] = list(report.witness)
    return (0 if report.passed else 1), payload


def cmd_orbits(args, inputs):
    q = Quandle.from_json(inputs.read_json(args.quandle))
    om = orbits(q)
    return 0, {"v": 1, "count": om.count,
               "orbits": [list(o) for o in om.orbits]}


def cmd_regions(args, inputs):
    d = parse_diagram(inputs.read_json(args.diagram))
    return 0, {"v": 1, "count": d.n_regions,
               "exterior": d.exterior_region,
               "incidences": [[list(i) for i in inc]
                              for inc in d.region_incidences],
               "free_loop_disks": [d.loop_region(j)
                                   for j in range(len(d.free_loops))]}


def cmd_indices(args, inputs):
    d = parse_diagram(inputs.read_json(args.diagram))
    idx = compute_indices(d)
    return 0, {"v": 1, "exterior": idx.exterior,
               "totals": list(idx.totals),
               "per_component": [list(v) for v in idx.per_component],
               "checkerboard": list(checkerboard(d, idx))}


def cmd_colorings(args, inputs):
    d = parse_diagram(inputs.read_json(args.diagram))
    q = Quandle.from_json(inputs.read_json(args.quandle))
    cols = enumerate_colorings(d, q)
    return 0, {"v": 1, "count": len(cols),
               "colorings": [list(c) for c in cols]}


def cmd_cohomology(args, inputs):
    q = Quandle.from_json(inputs.read_json(args.quandle))
    coeff = CoeffGroup(tuple(int(x) for x in args.coeff.split(",")))
    module = None
    if args.module:
        module = _parse_module(args.module, inputs, q)
    spec = _parse_spec(args.spec, coeff)
    basis = cohomology_basis(spec, q, module, coeff, args.degree,
                             quandle_flag=not args.no_quandle_flag)
    payload = {"v": 1, "degree": args.degree,
               "cocycle_count": len(basis.cocycles),
               "coboundary_count": len(basis.coboundaries),
               "torsion": basis.torsion, "free_rank": basis.free_rank,
               "cocycles": [[list(v) for v in c.values]
                            for c in basis.cocycles],
               "coboundaries": [[list(v) for v in c.values]
                                for c in basis.coboundaries]}
    if args.contains:
        phi = Cochain.from_json(inputs.read_json(args.contains), q, module)
        payload["contains"] = {
            "cocycle": is_in_span(basis.cocycles, phi),
            "coboundary": is_in_span(basis.coboundaries, phi)}
    return 0, payload


def cmd_invariant(args, inputs):
    d = parse_diagram(inputs.read_json(args.diagram))
    q = Quandle.from_json(inputs.read_json(args.quandle))
    module = _parse_module(args.module, inputs, q) if args.module else None
    symbolic = module is not None and not module.is_finite
    omega = Cochain.from_json(inputs.read_json(args.cocycle), q,
                              None if symbolic else module)
    if symbolic and args.flavor == "shadow":
        # a dense table cannot carry a symbolic-module cochain, so the file
        # holds a twisted cocycle and twisting is folded into the transport
        if isinstance(module, IntegerShadowModule):
            if args.alpha is None:
                raise StructureError("--module Z needs --alpha to transport")
            omega = transport_twisted_to_shadow(
                omega, IntUnit(omega.coeff, args.alpha))
        elif isinstance(module, OrbitShadowModule):
            if not args.alpha_per_orbit:
                raise StructureError(
                    "--module orbitZ needs --alpha-per-orbit to transport")
            units = [IntUnit(omega.coeff, int(x))
                     for x in args.alpha_per_orbit.split(",")]
            from .cohomology import transport_link_twisted_to_shadow
            omega = transport_link_twisted_to_shadow(omega, units,
                                                     module.orbit_map)
        else:
            raise StructureError("unsupported symbolic module")
    kwargs = {"check": not args.force}
    if args.flavor in ("shadow", "shadow_twisted"):
        if module is None:
            module = omega.module
        if module is None:
            raise StructureError(f"--flavor {args.flavor} needs --module")
        kwargs["module"] = module
        kwargs["exterior"] = _parse_exterior(args.exterior or "0", module)
    if args.flavor in ("twisted", "shadow_twisted"):
        if args.alpha is None:
            raise StructureError("twisted flavors need --alpha")
        kwargs["alpha"] = args.alpha
    if args.flavor == "link_twisted":
        if not args.alpha_per_orbit:
            raise StructureError("link_twisted needs --alpha-per-orbit")
        kwargs["alphas"] = [int(x) for x in args.alpha_per_orbit.split(",")]
    ms = invariant_multiset(d, q, args.flavor, omega, **kwargs)
    # flavor-specific arguments stay out of the payload so that flavors
    # that provably coincide produce identical bytes
    payload = {"v": 1, "total": ms.total(),
               "weights": ms.to_json()["weights"]}
    if args.refine_orbits:
        parts = orbit_refined_multisets(
            d, q, args.flavor, omega, alpha=kwargs.get("alpha"),
            alphas=kwargs.get("alphas"), check=False)
        payload["refined"] = [
            {"orbits": list(key), "weights": part.to_json()["weights"]}
            for key, part in parts.items()]
    return 0, payload


def cmd_rmove(args, inputs):
    d = parse_diagram(inputs.read_json(args.diagram))
    if args.move == "r1":
        res = r1_insert(d, _parse_target(args.target), args.chirality,
                        args.side)
    elif args.move == "r2":
        if not args.target2:
            raise StructureError("r2 needs --target2")
        res = r2_insert(d, _parse_target(args.target),
                        _parse_target(args.target2))
    else:
        raise StructureError(f"unknown move {args.move!r}")
    return 0, res.diagram.to_json()


def cmd_corpus_verify(args, inputs):
    from .algebra import make_dihedral
    from .cohomology import cocycle_basis, differential
    rng = random.Random(args.seed)
    q = make_dihedral(3)
    A = CoeffGroup((5,))
    alpha = IntUnit(A, 2)
    omega = cocycle_basis(DifferentialSpec.twisted(A, 2), q, None, A, 2)[0]
    lazy = transport_twisted_to_shadow(omega, alpha)
    z = IntegerShadowModule(q)
    failures = []
    checks = 0
    for name in corpus_pkg.BASE_DIAGRAMS:
        base = corpus_pkg.load(name)
        ms = invariant_multiset(base, q, "twisted", omega, alpha=2,
                                check=False)
        variants = []
        if base.crossings:
            variants.append(r1_insert(base, base.semiarcs[0], 1, "left"))
            variants.append(r1_insert(base, base.semiarcs[0], -1, "right"))
        else:
            variants.append(r1_insert(base, ("loop", 0), 1, "left"))
            if len(base.free_loops) > 1:
                variants.append(r2_insert(base, ("loop", 0), ("loop", 1)))
        for res in variants:
            other = invariant_multiset(res.diagram, q, "twisted", omega,
                                       alpha=2, check=False)
            checks += 1
            if other.weights != ms.weights:
                failures.append(f"{name}: r-move changed the twisted multiset")
        # twisted = shadow-of-transport, spot check per coloring
        for col in enumerate_colorings(base, q):
            ind = propagate_shadow(base, col, z, 0)
            checks += 1
            if weight_twisted(base, col, omega, alpha, check=False) != \
                    weight_shadow(base, ind, lazy, check=False):
                failures.append(f"{name}: twisted/shadow identity broke")
        # random coboundaries weigh zero
        for _ in range(args.samples):
            theta = random_cochain(rng, q, None, A, 1)
            db = differential(DifferentialSpec.twisted(A, 2), theta)
            dms = invariant_multiset(base, q, "twisted", db, alpha=2,
                                     check=False)
            checks += 1
            if any(v != A.zero() for v, _ in dms.weights):
                failures.append(f"{name}: coboundary weight is nonzero")
    for a, b in corpus_pkg.R3_PAIRS:
        checks += 1
        ma = invariant_multiset(corpus_pkg.load(a), q, "twisted", omega,
                                alpha=2, check=False)
        mb = invariant_multiset(corpus_pkg.load(b), q, "twisted", omega,
                                alpha=2, check=False)
        if ma.weights != mb.weights:
            failures.append(f"{a}/{b}: R3 pair disagrees")
    payload = {"v": 1, "checks": checks, "failures": failures,
               "passed": not failures}
    return (0 if not failures else 1), payload


def build_parser():
    p = argparse.ArgumentParser(prog="qci",
                                description="quandle cocycle invariants")
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifest",
                        help="write a reproducibility manifest to this path")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    c = add("check", "validate a quandle/module/cocycle file")
    c.add_argument("--kind", required=True,
                   choices=["quandle", "module", "cocycle"])
    c.add_argument("--file", required=True)
    c.add_argument("--quandle", help="quandle file (module/cocycle checks)")
    c.add_argument("--spec", default="1,1", help="l,r differential weights")
    c.add_argument("--quandle-flag", action="store_true",
                   help="degenerate-vanishing condition (the default)")
    c.add_argument("--no-quandle-flag", action="store_true")
    c.set_defaults(fn=cmd_check)

    c = add("orbits", "orbit decomposition of a quandle")
    c.add_argument("--quandle", required=True)
    c.set_defaults(fn=cmd_orbits)

    c = add("regions", "faces of a diagram")
    c.add_argument("--diagram", required=True)
    c.set_defaults(fn=cmd_regions)

    c = add("indices", "region index tables")
    c.add_argument("--diagram", required=True)
    c.set_defaults(fn=cmd_indices)

    c = add("colorings", "enumerate arc colorings")
    c.add_argument("--diagram", required=True)
    c.add_argument("--quandle", required=True)
    c.set_defaults(fn=cmd_colorings)

    c = add("cohomology", "cocycle/coboundary bases")
    c.add_argument("--quandle", required=True)
    c.add_argument("--module", help="module file, or Z, Z/k, orbitZ")
    c.add_argument("--coeff", required=True, help="moduli like 3 or 2,4")
    c.add_argument("--spec", default="1,1")
    c.add_argument("--degree", type=int, default=2)
    c.add_argument("--quandle-flag", action="store_true",
                   help="degenerate-vanishing condition (the default)")
    c.add_argument("--no-quandle-flag", action="store_true")
    c.add_argument("--contains", help="cochain file to test for membership")
    c.set_defaults(fn=cmd_cohomology)

    c = add("invariant", "weight multiset of a diagram")
    c.add_argument("--flavor", required=True,
                   choices=["classical", "shadow", "positive", "twisted",
                            "shadow_twisted", "link_twisted"])
    c.add_argument("--diagram", required=True)
    c.add_argument("--quandle", required=True)
    c.add_argument("--cocycle", required=True)
    c.add_argument("--module", help="module file, or Z, Z/k, orbitZ")
    c.add_argument("--alpha", type=int)
    c.add_argument("--alpha-per-orbit")
    c.add_argument("--exterior", help="exterior region color (vector)")
    c.add_argument("--refine-orbits", action="store_true")
    c.add_argument("--force", action="store_true",
                   help="skip the cocycle gate (shows non-invariance)")
    c.set_defaults(fn=cmd_invariant)

    c = add("rmove", "apply a Reidemeister rewrite")
    c.add_argument("--diagram", required=True)
    c.add_argument("--move", required=True, choices=["r1", "r2"])
    c.add_argument("--target", required=True, help="semi-arc id or loop:j")
    c.add_argument("--target2", help="second target (r2)")
    c.add_argument("--chirality", type=int, default=1, choices=[1, -1])
    c.add_argument("--side", default="left", choices=["left", "right"])
    c.set_defaults(fn=cmd_rmove)

    c = add("corpus-verify",
            "run the identity suite over the shipped corpus")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=3,
                   help="random coboundaries per diagram")
    c.set_defaults(fn=cmd_corpus_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = _Inputs()
    start = time.monotonic()
    try:
        code, payload = args.fn(args, inputs)
    except CocycleError as exc:
        out = _dump({"v": 1, "passed": False, "error": "cocycle",
                     "flavor": exc.flavor, "axiom": exc.report.axiom,
                     "witness": list(exc.report.witness)})
        sys.stdout.write(out)
        return 1
    except (StructureError, KeyError, json.JSONDecodeError, OSError,
            ValueError, TypeError) as exc:
        sys.stderr.write(_dump({"v": 1, "error": str(exc)}))
        return 2
    text = _dump(payload)
    sys.stdout.write(text)
    if getattr(args, "manifest", None):
        manifest = {"v": 1, "command": argv if argv is not None else sys.argv[1:],
                    "inputs": inputs.digests,
                    "library_version": __version__,
                    "output_sha256": hashlib.sha256(text.encode()).hexdigest(),
                    "wall_time_s": round(time.monotonic() - start, 6)}
        with open(args.manifest, "w") as fh:
            fh.write(_dump(manifest))
    return code


if __name__ == "__main__":
    sys.exit(main())
