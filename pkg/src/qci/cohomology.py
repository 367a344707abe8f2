"""Two-term distributive cochain complexes and their cohomology.

A degree-k cochain is a map M x Q^k -> A stored as a dense table in
lexicographic order of (m, a_1, ..., a_k); a trivial module (module=None)
drops the m slot.  The two anti-commuting differentials d_left and d_right
combine into alpha_l * d_left - alpha_r * d_right; the classical quandle,
positive, and twisted theories are the specs (1,1), (1,-1) and (1,alpha).

Shadow cochains over the symbolic integer module cannot be tabulated, so
they are wrapped lazily and cocycle conditions are checked on a window of
region colors; invertibility of the unit makes a single value sufficient,
the window is defensive.
"""

from dataclasses import dataclass

from .algebra import (AxiomReport, CoeffGroup, IntegerShadowModule, IntUnit,
                      OrbitShadowModule, Scalar, StructureError,
                      UnsupportedCarrierError)
from . import modlinalg

DEFAULT_WINDOW = range(-2, 3)


class DifferentialSpec:
    """The pair of unit scalars weighting the left and right differentials."""

    def __init__(self, alpha_l, alpha_r):
        if not isinstance(alpha_l, Scalar) or not isinstance(alpha_r, Scalar):
            raise StructureError("spec coefficients must be Scalars")
        if alpha_l.group != alpha_r.group:
            raise StructureError("spec coefficients act on different groups")
        self.alpha_l = alpha_l
        self.alpha_r = alpha_r
        self.group = alpha_l.group

    @classmethod
    def quandle(cls, group):
        return cls(IntUnit(group, 1), IntUnit(group, 1))

    @classmethod
    def positive(cls, group):
        return cls(IntUnit(group, 1), IntUnit(group, -1))

    @classmethod
    def twisted(cls, group, alpha):
        if isinstance(alpha, int):
            alpha = IntUnit(group, alpha)
        return cls(IntUnit(group, 1), alpha)

    def __repr__(self):
        return f"DifferentialSpec({self.alpha_l!r}, {self.alpha_r!r})"


def _mod_size(module):
    return 1 if module is None else module.size


def _require_finite(module):
    if module is not None and not module.is_finite:
        raise UnsupportedCarrierError(
            "dense cochain tables need a finite module carrier")


class Cochain:
    """Dense cochain table over a finite (or trivial) module."""

    def __init__(self, quandle, module, coeff, degree, values):
        _require_finite(module)
        if degree < 0:
            raise StructureError("degree must be >= 0")
        self.quandle = quandle
        self.module = module
        self.coeff = coeff
        self.degree = degree
        size = _mod_size(module) * quandle.n ** degree
        values = [coeff.reduce(tuple(v)) for v in values]
        if len(values) != size:
            raise StructureError(f"expected {size} values, got {len(values)}")
        self.values = values

    def index(self, m, args):
        n = self.quandle.n
        idx = m if self.module is not None else 0
        for a in args:
            idx = idx * n + a
        return idx

    def at(self, m, args=()):
        return self.values[self.index(m, args)]

    def domain(self):
        """All (m, args) pairs in table order."""
        n = self.quandle.n
        mods = range(_mod_size(self.module))
        args_space = [()]
        for _ in range(self.degree):
            args_space = [t + (a,) for t in args_space for a in range(n)]
        for m in mods:
            for args in args_space:
                yield m, args

    def is_zero(self):
        zero = self.coeff.zero()
        return all(v == zero for v in self.values)

    def add(self, other):
        vals = [self.coeff.add(x, y) for x, y in zip(self.values, other.values)]
        return Cochain(self.quandle, self.module, self.coeff, self.degree, vals)

    def sub(self, other):
        vals = [self.coeff.sub(x, y) for x, y in zip(self.values, other.values)]
        return Cochain(self.quandle, self.module, self.coeff, self.degree, vals)

    def scale(self, scalar, power=1):
        vals = [scalar.apply(v, power) for v in self.values]
        return Cochain(self.quandle, self.module, self.coeff, self.degree, vals)

    def to_json(self):
        return {"v": 1, "degree": self.degree,
                "module": None if self.module is None else self.module.describe(),
                "coeff": self.coeff.to_json(),
                "values": [list(v) for v in self.values]}

    @classmethod
    def from_json(cls, data, quandle, module=None):
        from .algebra import module_from_json
        coeff = CoeffGroup.from_json(data["coeff"])
        if module is None and data.get("module") is not None:
            module = module_from_json(data["module"], quandle)
        values = [tuple(v) if isinstance(v, (list, tuple)) else (v,)
                  for v in data["values"]]
        return cls(quandle, module, coeff, data["degree"], values)

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.values == other.values and self.coeff == other.coeff)


class LazyCochain:
    """Cochain evaluated on demand; carrier may be symbolic."""

    def __init__(self, quandle, module, coeff, degree, fn):
        self.quandle = quandle
        self.module = module
        self.coeff = coeff
        self.degree = degree
        self.fn = fn

    def at(self, m, args=()):
        return self.fn(m, tuple(args))


def zero_cochain(quandle, module, coeff, degree):
    size = _mod_size(module) * quandle.n ** degree
    return Cochain(quandle, module, coeff, degree, [coeff.zero()] * size)


def random_cochain(rng, quandle, module, coeff, degree):
    size = _mod_size(module) * quandle.n ** degree
    vals = [coeff.random_element(rng) for _ in range(size)]
    return Cochain(quandle, module, coeff, degree, vals)


def _act(module, m, a):
    return m if module is None else module.act(m, a)


def d_left_at(phi, module, m, args):
    """(d_l phi)(m, a_1..a_{k+1}): the i-th term acts everything to the
    left of position i by a_i and drops a_i, with alternating signs."""
    q = phi.quandle
    coeff = phi.coeff
    total = coeff.zero()
    k1 = len(args)
    for i in range(1, k1 + 1):
        ai = args[i - 1]
        new_m = _act(module, m, ai)
        new_args = tuple(q.apply(args[j], ai) for j in range(i - 1)) + args[i:]
        term = phi.at(new_m, new_args)
        total = coeff.add(total, term if i % 2 else coeff.neg(term))
    return total


def d_right_at(phi, module, m, args):
    """(d_r phi)(m, a_1..a_{k+1}): the i-th term deletes a_i."""
    coeff = phi.coeff
    total = coeff.zero()
    k1 = len(args)
    for i in range(1, k1 + 1):
        new_args = args[:i - 1] + args[i:]
        term = phi.at(m, new_args)
        total = coeff.add(total, term if i % 2 else coeff.neg(term))
    return total


def differential_at(spec, phi, module, m, args):
    left = spec.alpha_l.apply(d_left_at(phi, module, m, args))
    right = spec.alpha_r.apply(d_right_at(phi, module, m, args))
    return phi.coeff.sub(left, right)


def _domain(quandle, module, degree):
    n = quandle.n
    args_space = _args_space(n, degree)
    for m in range(_mod_size(module)):
        for args in args_space:
            yield m, args


def _dense_map(phi, point_fn):
    if isinstance(phi, LazyCochain):
        raise UnsupportedCarrierError("dense differential of a lazy cochain")
    values = [point_fn(phi, phi.module, m, args)
              for m, args in _domain(phi.quandle, phi.module, phi.degree + 1)]
    return Cochain(phi.quandle, phi.module, phi.coeff, phi.degree + 1, values)


def d_left(phi):
    """Dense left differential; raises on symbolic carriers."""
    return _dense_map(phi, d_left_at)


def d_right(phi):
    """Dense right differential; raises on symbolic carriers."""
    return _dense_map(phi, d_right_at)


def differential(spec, phi):
    """alpha_l * d_left(phi) - alpha_r * d_right(phi), dense."""
    if isinstance(phi, LazyCochain):
        raise UnsupportedCarrierError("dense differential of a lazy cochain")
    values = [differential_at(spec, phi, phi.module, m, args)
              for m, args in _domain(phi.quandle, phi.module, phi.degree + 1)]
    return Cochain(phi.quandle, phi.module, phi.coeff, phi.degree + 1, values)


def lazy_differential(spec, phi):
    """Differential of a lazy cochain, evaluated on demand."""
    def fn(m, args):
        return differential_at(spec, phi, phi.module, m, args)
    return LazyCochain(phi.quandle, phi.module, phi.coeff, phi.degree + 1, fn)


def _degenerate_args(args):
    return any(args[i] == args[i + 1] for i in range(len(args) - 1))


def is_degenerate_free(phi, window=DEFAULT_WINDOW):
    """True iff phi vanishes whenever two adjacent quandle arguments agree."""
    zero = phi.coeff.zero()
    if isinstance(phi, LazyCochain):
        n = phi.quandle.n
        if phi.degree < 2:
            return True, ()
        for m in _lazy_window(phi.module, window):
            for args in _args_space(n, phi.degree):
                if _degenerate_args(args) and phi.at(m, args) != zero:
                    return False, (m,) + args
        return True, ()
    for m, args in phi.domain():
        if _degenerate_args(args) and phi.at(m, args) != zero:
            return False, (m,) + args
    return True, ()


def _args_space(n, k):
    space = [()]
    for _ in range(k):
        space = [t + (a,) for t in space for a in range(n)]
    return space


def _lazy_window(module, window):
    if isinstance(module, IntegerShadowModule):
        return list(window)
    if isinstance(module, OrbitShadowModule):
        zero = module.zero()
        out = [zero]
        for w in window:
            if w == 0:
                continue
            for i in range(module.dims):
                out.append(tuple(w if j == i else 0 for j in range(module.dims)))
        return out
    if module is None:
        return [0]
    if module.is_finite:
        return list(module.elements())
    raise UnsupportedCarrierError("no evaluation window for this carrier")


def is_cocycle(spec, phi, quandle_flag=True, window=DEFAULT_WINDOW):
    """Does the spec differential kill phi (plus the degeneracy condition)?

    Dense cochains are checked exhaustively; lazy shadow cochains on the
    window of region colors.  Returns an AxiomReport whose witness is the
    offending (m, a_1, ..., a_{k+1}) tuple.
    """
    if spec.group != phi.coeff:
        raise StructureError("spec and cochain coefficient groups differ")
    zero = phi.coeff.zero()
    if quandle_flag:
        ok, wit = is_degenerate_free(phi, window)
        if not ok:
            return AxiomReport(False, "degenerate-vanishing", wit)
    n = phi.quandle.n
    if isinstance(phi, LazyCochain):
        ms = _lazy_window(phi.module, window)
    else:
        ms = range(_mod_size(phi.module))
    for m in ms:
        for args in _args_space(n, phi.degree + 1):
            if differential_at(spec, phi, phi.module, m, args) != zero:
                return AxiomReport(False, "cocycle", (m,) + args)
    return AxiomReport(True)


def is_link_twisted_cocycle(phi, alphas, orbit_map, quandle_flag=True):
    """Cocycle condition for the orbit-indexed twisted theory.

    ``alphas`` maps each quandle orbit id to a unit scalar; the condition
    weights each term by the inverse unit of the acting color's orbit.
    """
    if phi.degree != 2 or phi.module is not None:
        raise StructureError("orbit-twisted cocycles are degree-2 with trivial module")
    coeff = phi.coeff
    zero = coeff.zero()
    q = phi.quandle
    if quandle_flag:
        for a in range(q.n):
            if phi.at(0, (a, a)) != zero:
                return AxiomReport(False, "degenerate-vanishing", (a, a))

    def inv(o, x):
        return alphas[o].apply(x, -1)

    for a in range(q.n):
        for b in range(q.n):
            for c in range(q.n):
                total = inv(orbit_map.of(c), phi.at(0, (q.apply(a, c), q.apply(b, c))))
                total = coeff.sub(total, phi.at(0, (a, b)))
                total = coeff.sub(total, inv(orbit_map.of(b), phi.at(0, (q.apply(a, b), c))))
                total = coeff.add(total, phi.at(0, (a, c)))
                extra = coeff.sub(inv(orbit_map.of(a), phi.at(0, (b, c))), phi.at(0, (b, c)))
                total = coeff.add(total, extra)
                if total != zero:
                    return AxiomReport(False, "cocycle", (a, b, c))
    return AxiomReport(True)


def link_twisted_coboundary(theta, alphas, orbit_map):
    """Degree-2 coboundary of theta: Q -> A in the orbit-twisted theory."""
    if theta.degree != 1 or theta.module is not None:
        raise StructureError("need a degree-1 cochain with trivial module")
    q = theta.quandle
    coeff = theta.coeff

    def inv(o, x):
        return alphas[o].apply(x, -1)

    values = []
    for a in range(q.n):
        for b in range(q.n):
            v = inv(orbit_map.of(a), theta.at(0, (b,)))
            v = coeff.sub(v, inv(orbit_map.of(b), theta.at(0, (q.apply(a, b),))))
            v = coeff.sub(v, theta.at(0, (b,)))
            v = coeff.add(v, theta.at(0, (a,)))
            values.append(v)
    return Cochain(q, None, coeff, 2, values)


def transport_to_shadow(phi, alpha):
    """Shadow cochain over the integer module: (m, args) -> alpha^-m phi(args)."""
    if phi.module is not None:
        raise StructureError("transport starts from a trivial-module cochain")
    if not isinstance(alpha, Scalar):
        raise StructureError("alpha must be a unit scalar")
    module = IntegerShadowModule(phi.quandle)

    def fn(m, args):
        return alpha.apply(phi.at(0, args), -m)

    return LazyCochain(phi.quandle, module, phi.coeff, phi.degree, fn)


def transport_twisted_to_shadow(omega, alpha):
    """Degree-2 version of the transport; the shadow face of twisting."""
    if omega.degree != 2:
        raise StructureError("expected a degree-2 cochain")
    return transport_to_shadow(omega, alpha)


def transport_link_twisted_to_shadow(omega, alphas, orbit_map):
    """Shadow cochain over the orbit-counting module with per-orbit units."""
    if omega.degree != 2 or omega.module is not None:
        raise StructureError("expected a degree-2 cochain with trivial module")
    module = OrbitShadowModule(omega.quandle, orbit_map)

    def fn(m, args):
        v = omega.at(0, args)
        for o, exp in enumerate(m):
            if exp:
                v = alphas[o].apply(v, -exp)
        return v

    return LazyCochain(omega.quandle, module, omega.coeff, 2, fn)


def shadow_twisted_product_cochain(omega, alpha, product_module):
    """Lazy cochain on M x Z pairing a dense shadow cochain with twisting."""
    def fn(m, args):
        mm, j = m
        return alpha.apply(omega.at(mm, args), -j)
    return LazyCochain(omega.quandle, product_module, omega.coeff, omega.degree, fn)


# ---------------------------------------------------------------------------
# linear-algebra backend: cocycle and coboundary bases, cohomology groups

def _flat_dim(quandle, module, degree, d):
    return _mod_size(module) * quandle.n ** degree * d


def _flat_index(quandle, module, degree, d, m, args, coord):
    n = quandle.n
    idx = m if module is not None else 0
    for a in args:
        idx = idx * n + a
    return idx * d + coord


def _vector_to_cochain(quandle, module, coeff, degree, vec):
    d = coeff.d
    values = [tuple(vec[i * d + c] for c in range(d))
              for i in range(len(vec) // d)]
    return Cochain(quandle, module, coeff, degree, values)


def _cochain_to_vector(phi):
    return [x for v in phi.values for x in v]


def _differential_rows(spec, quandle, module, coeff, degree):
    """Integer matrix of the spec differential C^degree -> C^{degree+1},
    acting on flattened (index, coordinate) vectors."""
    n = quandle.n
    d = coeff.d
    in_dim = _flat_dim(quandle, module, degree, d)
    ml = spec.alpha_l.int_matrix()
    mr = spec.alpha_r.int_matrix()
    rows = []
    out = zero_cochain(quandle, module, coeff, degree + 1)
    for m, args in out.domain():
        block_rows = [[0] * in_dim for _ in range(d)]

        def add_block(mat, sign, mm, aa):
            for ci in range(d):
                for cj in range(d):
                    if mat[ci][cj]:
                        j = _flat_index(quandle, module, degree, d, mm, aa, cj)
                        block_rows[ci][j] += sign * mat[ci][cj]

        k1 = len(args)
        for i in range(1, k1 + 1):
            sign = 1 if i % 2 else -1
            ai = args[i - 1]
            lm = _act(module, m, ai)
            largs = tuple(quandle.apply(args[j], ai) for j in range(i - 1)) + args[i:]
            add_block(ml, sign, lm, largs)
            rargs = args[:i - 1] + args[i:]
            add_block(mr, -sign, m, rargs)
        rows.extend(block_rows)
    return rows


def _degenerate_rows(quandle, module, coeff, degree):
    """Unit rows pinning cochain values on degenerate argument tuples."""
    d = coeff.d
    in_dim = _flat_dim(quandle, module, degree, d)
    rows = []
    probe = zero_cochain(quandle, module, coeff, degree)
    for m, args in probe.domain():
        if _degenerate_args(args):
            for c in range(d):
                row = [0] * in_dim
                row[_flat_index(quandle, module, degree, d, m, args, c)] = 1
                rows.append(row)
    return rows


def _split_by_modulus(coeff):
    """Groups of coordinate indices sharing a modulus requirement."""
    return list(enumerate(coeff.moduli))


def _kernel_vectors(rows, dim, coeff, uniform_ok=True):
    """Kernel of integer rows acting on Z_{n_1} x ... vectors (flattened).

    When the moduli are uniform the system is solved in one piece (this is
    what coordinate-mixing shift units need); otherwise coordinate blocks
    are solved separately, which is valid exactly when rows never mix
    coordinates with different moduli.
    """
    mods = set(coeff.moduli)
    if len(mods) == 1:
        n = coeff.moduli[0]
        if n == 0:
            return modlinalg.kernel_int(rows, dim)
        return modlinalg.kernel_mod([[v % n for v in r] for r in rows], dim, n)
    # mixed moduli: solve per coordinate class
    d = coeff.d
    base = dim // d
    out = []
    for coord, n in _split_by_modulus(coeff):
        sub_rows = []
        for r_i in range(0, len(rows), d):
            row = rows[r_i + coord]
            sub = [row[j * d + coord] for j in range(base)]
            for j in range(base):
                for c2 in range(d):
                    if c2 != coord and rows[r_i + coord][j * d + c2]:
                        raise StructureError(
                            "mixed-modulus system with coordinate mixing")
            sub_rows.append(sub)
        if n == 0:
            vecs = modlinalg.kernel_int(sub_rows, base)
        else:
            vecs = modlinalg.kernel_mod([[v % n for v in r] for r in sub_rows],
                                        base, n)
        for v in vecs:
            big = [0] * dim
            for j, x in enumerate(v):
                big[j * d + coord] = x
            out.append(big)
    return out


@dataclass
class CohomologyBasis:
    """Cocycle/coboundary generating sets and the quotient's shape."""
    cocycles: list
    coboundaries: list
    torsion: list
    free_rank: int

    @property
    def cocycle_count(self):
        return len(self.cocycles)

    @property
    def coboundary_count(self):
        return len(self.coboundaries)


def _merge_factors(factor_lists):
    """Canonical invariant-factor chain of a direct sum of cyclic groups."""
    primary = {}
    for factors in factor_lists:
        for f in factors:
            x = f
            p = 2
            while x > 1:
                if x % p == 0:
                    e = 0
                    while x % p == 0:
                        x //= p
                        e += 1
                    primary.setdefault(p, []).append(e)
                p += 1
    if not primary:
        return []
    depth = max(len(v) for v in primary.values())
    chain = []
    for i in range(depth):
        f = 1
        for p, exps in primary.items():
            exps_sorted = sorted(exps, reverse=True)
            if i < len(exps_sorted):
                f *= p ** exps_sorted[i]
        chain.append(f)
    return sorted(chain)


def cohomology_basis(spec, quandle, module, coeff, degree, quandle_flag=True):
    """Cocycles, coboundaries, and invariant factors in one degree.

    The cocycle basis spans the kernel of the spec differential (restricted
    to the degenerate-free subspace when flagged); the coboundary basis is
    the canonical form of the image from one degree down.  Invariant
    factors describe the quotient group.
    """
    _require_finite(module)
    if degree < 1:
        raise StructureError("cohomology is computed in degree >= 1")
    d = coeff.d
    dim = _flat_dim(quandle, module, degree, d)
    rows = _differential_rows(spec, quandle, module, coeff, degree)
    if quandle_flag:
        rows = rows + _degenerate_rows(quandle, module, coeff, degree)
    kernel = _kernel_vectors(rows, dim, coeff)
    cocycles = [_vector_to_cochain(quandle, module, coeff, degree, v)
                for v in kernel]

    # image of the previous differential
    lower = degree - 1
    image_rows = []
    probe = zero_cochain(quandle, module, coeff, lower)
    for m, args in _domain(quandle, module, lower):
        if quandle_flag and _degenerate_args(args):
            continue
        for c in range(d):
            basis_vec = [coeff.zero()] * len(probe.values)
            e = [0] * d
            e[c] = 1
            basis_vec[probe.index(m, args)] = tuple(e)
            theta = Cochain(quandle, module, coeff, lower, basis_vec)
            image_rows.append(_cochain_to_vector(differential(spec, theta)))

    mods = set(coeff.moduli)
    cob_vectors = []
    factor_lists = []
    free_rank = 0
    if len(mods) == 1:
        n = coeff.moduli[0]
        if n == 0:
            cob_basis = modlinalg.hnf(image_rows, width=dim)
            cob_vectors = cob_basis
            fr, tor = modlinalg.quotient_over_int(kernel, cob_basis, dim)
            free_rank, factor_lists = fr, [tor]
        else:
            cob_vectors = modlinalg.howell(image_rows, n, width=dim)
            factor_lists = [modlinalg.quotient_invariant_factors(
                kernel, cob_vectors, n, dim)]
    else:
        base = dim // d
        for coord, n in _split_by_modulus(coeff):
            sub_img = [[r[j * d + coord] for j in range(base)] for r in image_rows]
            sub_ker = [[v[j * d + coord] for j in range(base)] for v in kernel]
            if n == 0:
                cb = modlinalg.hnf(sub_img, width=base)
                fr, tor = modlinalg.quotient_over_int(sub_ker, cb, base)
                free_rank += fr
                factor_lists.append(tor)
            else:
                cb = modlinalg.howell([[v % n for v in r] for r in sub_img],
                                      n, width=base)
                factor_lists.append(modlinalg.quotient_invariant_factors(
                    sub_ker, cb, n, base))
            for v in cb:
                big = [0] * dim
                for j, x in enumerate(v):
                    big[j * d + coord] = x
                cob_vectors.append(big)

    coboundaries = [_vector_to_cochain(quandle, module, coeff, degree, v)
                    for v in cob_vectors]
    return CohomologyBasis(cocycles=cocycles, coboundaries=coboundaries,
                           torsion=_merge_factors(factor_lists),
                           free_rank=free_rank)


def cocycle_basis(spec, quandle, module, coeff, degree=2, quandle_flag=True):
    """Just the kernel side of cohomology_basis."""
    return cohomology_basis(spec, quandle, module, coeff, degree,
                            quandle_flag).cocycles


def is_in_span(basis_cochains, phi):
    """Membership of phi in the Z-span of dense cochains (same shape)."""
    if not basis_cochains:
        return phi.is_zero()
    coeff = phi.coeff
    mods = set(coeff.moduli)
    rows = [_cochain_to_vector(b) for b in basis_cochains]
    target = _cochain_to_vector(phi)
    if len(mods) == 1 and coeff.moduli[0] != 0:
        n = coeff.moduli[0]
        hb = modlinalg.howell(rows, n, width=len(target))
        return modlinalg.howell_member(hb, target, n)
    if len(mods) == 1:
        hb = modlinalg.hnf(rows, width=len(target))
        try:
            modlinalg.solve_in_hnf(hb, target)
            return True
        except ValueError:
            return False
    d = coeff.d
    base = len(target) // d
    for coord, n in _split_by_modulus(coeff):
        sub_rows = [[r[j * d + coord] for j in range(base)] for r in rows]
        sub_t = [target[j * d + coord] for j in range(base)]
        if n == 0:
            hb = modlinalg.hnf(sub_rows, width=base)
            try:
                modlinalg.solve_in_hnf(hb, sub_t)
            except ValueError:
                return False
        else:
            hb = modlinalg.howell([[v % n for v in r] for r in sub_rows],
                                  n, width=base)
            if not modlinalg.howell_member(hb, sub_t, n):
                return False
    return True


def link_twisted_cocycle_basis(quandle, coeff, alphas, orbit_map):
    """Kernel basis of the orbit-twisted degree-2 condition (plus the
    degeneracy rows); alphas maps orbit id -> unit scalar."""
    d = coeff.d
    n = quandle.n
    dim = n * n * d
    inv_mats = {o: alphas[o].int_matrix(-1) for o in range(orbit_map.count)}
    ident = [[1 if i == j else 0 for j in range(d)] for i in range(d)]

    def idx(a, b, c):
        return (a * n + b) * d + c

    rows = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                block_rows = [[0] * dim for _ in range(d)]

                def add(mat, sign, aa, bb):
                    for ci in range(d):
                        for cj in range(d):
                            if mat[ci][cj]:
                                block_rows[ci][idx(aa, bb, cj)] += sign * mat[ci][cj]

                add(inv_mats[orbit_map.of(c)], 1,
                    quandle.apply(a, c), quandle.apply(b, c))
                add(ident, -1, a, b)
                add(inv_mats[orbit_map.of(b)], -1, quandle.apply(a, b), c)
                add(ident, 1, a, c)
                add(inv_mats[orbit_map.of(a)], 1, b, c)
                add(ident, -1, b, c)
                rows.extend(block_rows)
    for a in range(n):
        for c in range(d):
            row = [0] * dim
            row[idx(a, a, c)] = 1
            rows.append(row)
    kernel = _kernel_vectors(rows, dim, coeff)
    return [_vector_to_cochain(quandle, None, coeff, 2, v) for v in kernel]
