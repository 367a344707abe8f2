"""Finite quandles, quandle modules, orbits, and coefficient groups.

Elements of every finite carrier are the integers 0..n-1 and tables are
dense row-major lists, so ``op[a][b]`` is a right-translated by b.  The two
infinite carriers used for region colorings (the integer shadow module with
m |> a = m + 1, and the free orbit-counting module with m |> a = m + e_O(a))
are never enumerated: their elements are plain ints / int tuples and only
the action is exposed.
"""

from dataclasses import dataclass, field
from math import gcd


class StructureError(ValueError):
    """Malformed input: wrong shape, out-of-range entry, not a group, ..."""


class UnsupportedCarrierError(StructureError):
    """Operation needs a finite carrier but received a symbolic one."""


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check: pass, or the first violation found."""
    passed: bool
    axiom: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.passed


def _check_table(table, nrows, ncols, what):
    if not isinstance(table, (list, tuple)) or len(table) != nrows:
        raise StructureError(f"{what}: expected {nrows} rows")
    for row in table:
        if not isinstance(row, (list, tuple)) or len(row) != ncols:
            raise StructureError(f"{what}: expected {ncols} columns per row")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise StructureError(f"{what}: non-integer entry {v!r}")


def _check_entries(table, bound, what):
    for row in table:
        for v in row:
            if not 0 <= v < bound:
                raise StructureError(f"{what}: entry {v} out of range 0..{bound - 1}")


def _invert_columns(table, nrows, ncols, what):
    """Per-column inverse of b -> table[.][b]; None where not bijective."""
    inv = [[None] * ncols for _ in range(nrows)]
    for b in range(ncols):
        seen = {}
        for a in range(nrows):
            v = table[a][b]
            if v in seen:
                return None, (seen[v], a, b)
            seen[v] = a
            inv[v][b] = a
    return inv, None


def check_quandle(op, inv=None):
    """Validate quandle axioms for dense tables; malformed input raises.

    Returns a passing report or the first violated axiom with a witness:
    ``(a,)`` for idempotence, ``(a, b)`` for invertibility, ``(a, b, c)``
    for self-distributivity.
    """
    n = len(op)
    if n == 0:
        raise StructureError("op: empty table")
    _check_table(op, n, n, "op")
    _check_entries(op, n, "op")
    if inv is not None:
        _check_table(inv, n, n, "inv")
        _check_entries(inv, n, "inv")
    for a in range(n):
        if op[a][a] != a:
            return AxiomReport(False, "idempotence", (a,))
    if inv is None:
        inv, clash = _invert_columns(op, n, n, "op")
        if inv is None:
            a1, a2, b = clash
            return AxiomReport(False, "invertibility", (a1, b))
    for a in range(n):
        for b in range(n):
            if inv[op[a][b]][b] != a or op[inv[a][b]][b] != a:
                return AxiomReport(False, "invertibility", (a, b))
    for a in range(n):
        for b in range(n):
            ab = op[a][b]
            for c in range(n):
                if op[ab][c] != op[op[a][c]][op[b][c]]:
                    return AxiomReport(False, "self-distributivity", (a, b, c))
    return AxiomReport(True)


class Quandle:
    """Finite quandle on 0..n-1 with dense op / inverse-op tables."""

    def __init__(self, op, inv=None, labels=None, check=True):
        n = len(op)
        if n == 0:
            raise StructureError("op: empty table")
        _check_table(op, n, n, "op")
        _check_entries(op, n, "op")
        self.n = n
        self.op = tuple(tuple(row) for row in op)
        if inv is None:
            derived, clash = _invert_columns(op, n, n, "op")
            if derived is None:
                raise StructureError(
                    f"op column {clash[2]} is not a bijection; cannot derive inverse")
            self.inv = tuple(tuple(row) for row in derived)
        else:
            _check_table(inv, n, n, "inv")
            _check_entries(inv, n, "inv")
            self.inv = tuple(tuple(row) for row in inv)
        self.labels = tuple(labels) if labels else None
        if check:
            report = check_quandle(self.op, self.inv)
            if not report:
                raise StructureError(
                    f"not a quandle: {report.axiom} fails at {report.witness}")

    def apply(self, a, b):
        return self.op[a][b]

    def unapply(self, a, b):
        return self.inv[a][b]

    def __eq__(self, other):
        return isinstance(other, Quandle) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def __repr__(self):
        return f"Quandle(n={self.n})"

    def to_json(self):
        data = {"v": 1, "size": self.n,
                "op": [list(r) for r in self.op],
                "inv": [list(r) for r in self.inv]}
        if self.labels:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "op" not in data:
            raise StructureError("quandle json needs an 'op' table")
        if data.get("v", 1) != 1:
            raise StructureError("unsupported schema version")
        op = data["op"]
        if "size" in data and data["size"] != len(op):
            raise StructureError("size field disagrees with op table")
        return cls(op, data.get("inv"), data.get("labels"))


def make_trivial(n):
    """Trivial quandle: a |> b = a."""
    return Quandle([[a] * n for a in range(n)])


def make_dihedral(n):
    """Dihedral quandle on Z/n: a |> b = 2b - a."""
    if n < 1:
        raise StructureError("dihedral size must be >= 1")
    op = [[(2 * b - a) % n for b in range(n)] for a in range(n)]
    return Quandle(op)


def make_alexander(n, t):
    """Alexander quandle on Z/n: a |> b = t*a + (1-t)*b, t a unit mod n."""
    if gcd(t % n, n) != 1:
        raise StructureError("t must be a unit mod n")
    op = [[(t * a + (1 - t) * b) % n for b in range(n)] for a in range(n)]
    return Quandle(op)


def _group_inverses(mul):
    n = len(mul)
    _check_table(mul, n, n, "group")
    _check_entries(mul, n, "group")
    e = None
    for cand in range(n):
        if all(mul[cand][a] == a and mul[a][cand] == a for a in range(n)):
            e = cand
            break
    if e is None:
        raise StructureError("group: no identity element")
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise StructureError(f"group: not associative at {(a, b, c)}")
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if mul[a][b] == e and mul[b][a] == e:
                inv[a] = b
                break
        if inv[a] is None:
            raise StructureError(f"group: element {a} has no inverse")
    return e, inv


def make_conjugation(mul):
    """Conjugation quandle of a finite group table: a |> b = b^-1 a b."""
    n = len(mul)
    if n == 0:
        raise StructureError("group: empty table")
    _, inv = _group_inverses(mul)
    op = [[mul[mul[inv[b]][a]][b] for b in range(n)] for a in range(n)]
    return Quandle(op)


class QModule:
    """Right quandle action on a carrier; subclasses fix the carrier."""

    is_finite = False
    size = None

    def __init__(self, quandle):
        self.quandle = quandle

    def act(self, m, a):
        raise NotImplementedError

    def unact(self, m, a):
        raise NotImplementedError

    def elements(self):
        raise UnsupportedCarrierError(f"{type(self).__name__} is not finite")

    def sample_elements(self):
        """Finite probe set; the whole carrier when it is finite."""
        return list(self.elements())

    def describe(self):
        raise NotImplementedError


class TableModule(QModule):
    """Finite module given by a dense size x n action table."""

    is_finite = True

    def __init__(self, quandle, action, inv_action=None):
        super().__init__(quandle)
        m = len(action)
        if m == 0:
            raise StructureError("action: empty table")
        _check_table(action, m, quandle.n, "action")
        for row in action:
            for v in row:
                if not 0 <= v < m:
                    raise StructureError(f"action: entry {v} out of range 0..{m - 1}")
        self.size = m
        self.action = tuple(tuple(row) for row in action)
        if inv_action is None:
            inv = [[None] * quandle.n for _ in range(m)]
            for b in range(quandle.n):
                seen = set()
                for x in range(m):
                    v = action[x][b]
                    if v in seen:
                        raise StructureError(
                            f"action column {b} is not a bijection")
                    seen.add(v)
                    inv[v][b] = x
            self.inv_action = tuple(tuple(row) for row in inv)
        else:
            _check_table(inv_action, m, quandle.n, "inv_action")
            self.inv_action = tuple(tuple(row) for row in inv_action)

    def act(self, m, a):
        return self.action[m][a]

    def unact(self, m, a):
        return self.inv_action[m][a]

    def elements(self):
        return range(self.size)

    def describe(self):
        return {"v": 1, "kind": "table", "size": self.size,
                "action": [list(r) for r in self.action]}

    def __eq__(self, other):
        return (isinstance(other, TableModule) and self.action == other.action
                and self.quandle == other.quandle)

    def __hash__(self):
        return hash((self.action, self.quandle))


def quandle_as_module(q):
    """The quandle acting on itself by its own operation."""
    return TableModule(q, [list(r) for r in q.op], [list(r) for r in q.inv])


def trivial_module(q):
    """One-point module: the shadow data of plain arc colorings."""
    return TableModule(q, [[0] * q.n])


def cyclic_shadow_module(q, k):
    """Z/k with m |> a = m + 1: index colors counted modulo k."""
    if k < 1:
        raise StructureError("cyclic shadow modulus must be >= 1")
    return TableModule(q, [[(m + 1) % k] * q.n for m in range(k)])


class IntegerShadowModule(QModule):
    """Z with m |> a = m + 1; region colors become crossing counts."""

    def act(self, m, a):
        return m + 1

    def unact(self, m, a):
        return m - 1

    def zero(self):
        return 0

    def sample_elements(self):
        return list(range(-3, 4))

    def describe(self):
        return {"v": 1, "kind": "int_shadow"}

    def __eq__(self, other):
        return isinstance(other, IntegerShadowModule) and self.quandle == other.quandle

    def __hash__(self):
        return hash(("int_shadow", self.quandle))


class OrbitShadowModule(QModule):
    """Free abelian group on the quandle orbits, m |> a = m + e_O(a)."""

    def __init__(self, quandle, orbit_map=None):
        super().__init__(quandle)
        self.orbit_map = orbit_map if orbit_map is not None else orbits(quandle)
        self.dims = self.orbit_map.count

    def _bump(self, m, a, step):
        o = self.orbit_map.of(a)
        return tuple(v + step if i == o else v for i, v in enumerate(m))

    def act(self, m, a):
        return self._bump(m, a, 1)

    def unact(self, m, a):
        return self._bump(m, a, -1)

    def zero(self):
        return (0,) * self.dims

    def sample_elements(self):
        out = [self.zero()]
        for i in range(self.dims):
            for s in (1, -1):
                out.append(tuple(s if j == i else 0 for j in range(self.dims)))
        return out

    def describe(self):
        return {"v": 1, "kind": "orbit_shadow", "orbits": self.dims}

    def __eq__(self, other):
        return isinstance(other, OrbitShadowModule) and self.quandle == other.quandle

    def __hash__(self):
        return hash(("orbit_shadow", self.quandle))


class ProductModule(QModule):
    """Direct product of two modules with the diagonal action."""

    def __init__(self, first, second):
        if first.quandle.n != second.quandle.n:
            raise StructureError("product factors live over different quandles")
        super().__init__(first.quandle)
        self.first = first
        self.second = second
        self.is_finite = first.is_finite and second.is_finite
        if self.is_finite:
            self.size = first.size * second.size

    def act(self, m, a):
        return (self.first.act(m[0], a), self.second.act(m[1], a))

    def unact(self, m, a):
        return (self.first.unact(m[0], a), self.second.unact(m[1], a))

    def elements(self):
        if not self.is_finite:
            raise UnsupportedCarrierError("product of symbolic modules is not finite")
        return [(x, y) for x in self.first.elements() for y in self.second.elements()]

    def sample_elements(self):
        return [(x, y) for x in self.first.sample_elements()
                for y in self.second.sample_elements()]

    def describe(self):
        return {"v": 1, "kind": "product",
                "factors": [self.first.describe(), self.second.describe()]}


def product_module(m1, m2):
    """Diagonal-action product (m, m') |> a = (m |> a, m' |> a)."""
    return ProductModule(m1, m2)


def check_module(module, quandle=None):
    """Check the two action identities; exhaustive on finite carriers."""
    q = quandle if quandle is not None else module.quandle
    if quandle is not None and quandle.n != module.quandle.n:
        raise StructureError("module quandle size mismatch")
    probe = module.sample_elements()
    for m in probe:
        for b in range(q.n):
            mb = module.act(m, b)
            if module.unact(mb, b) != m or module.act(module.unact(m, b), b) != m:
                return AxiomReport(False, "invertibility", (m, b))
            for c in range(q.n):
                if module.act(mb, c) != module.act(module.act(m, c), q.apply(b, c)):
                    return AxiomReport(False, "self-distributivity", (m, b, c))
    return AxiomReport(True)


@dataclass(frozen=True)
class OrbitMap:
    """Partition of a carrier into orbits of the right action."""
    count: int
    orbits: tuple = None
    index: dict = field(default=None, compare=False)

    def of(self, x):
        if self.index is None:
            return 0
        return self.index[x]


def _closure_orbits(elements, step_targets):
    """Union-find closure of x ~ step(x, b); deterministic orbit ids."""
    parent = {x: x for x in elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in elements:
        for y in step_targets(x):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx
    classes = {}
    for x in elements:
        classes.setdefault(find(x), []).append(x)
    ordered = sorted(classes.values(), key=lambda c: min(c))
    index = {}
    for i, cls in enumerate(ordered):
        for x in cls:
            index[x] = i
    return OrbitMap(count=len(ordered),
                    orbits=tuple(tuple(sorted(c)) for c in ordered),
                    index=index)


def orbits(obj):
    """Orbit decomposition of a quandle or module carrier.

    Symbolic shadow carriers form a single orbit: every element is reached
    from every other by repeatedly acting and unacting.
    """
    if isinstance(obj, Quandle):
        n = obj.n
        return _closure_orbits(range(n), lambda a: (obj.op[a][b] for b in range(n)))
    if isinstance(obj, (IntegerShadowModule, OrbitShadowModule)):
        return OrbitMap(count=1)
    if isinstance(obj, QModule):
        if not obj.is_finite:
            raise UnsupportedCarrierError("orbits of a symbolic product module")
        n = obj.quandle.n
        return _closure_orbits(list(obj.elements()),
                               lambda m: (obj.act(m, b) for b in range(n)))
    raise StructureError(f"cannot take orbits of {type(obj).__name__}")


def module_from_json(data, quandle):
    """Rebuild a module from its describe()/JSON form."""
    if not isinstance(data, dict) or "kind" not in data:
        raise StructureError("module json needs a 'kind'")
    kind = data["kind"]
    if kind == "table":
        return TableModule(quandle, data["action"], data.get("inv_action"))
    if kind == "int_shadow":
        return IntegerShadowModule(quandle)
    if kind == "cyclic_shadow":
        return cyclic_shadow_module(quandle, data["modulus"])
    if kind == "orbit_shadow":
        return OrbitShadowModule(quandle)
    if kind == "product":
        f1, f2 = data["factors"]
        return ProductModule(module_from_json(f1, quandle),
                             module_from_json(f2, quandle))
    raise StructureError(f"unknown module kind {kind!r}")


class CoeffGroup:
    """Finite abelian group Z/n1 x ... x Z/nd; modulus 0 marks a free Z
    summand (allowed for cohomology ranks, rejected by twisted weights)."""

    def __init__(self, moduli):
        moduli = tuple(moduli)
        if not moduli:
            raise StructureError("coefficient group needs at least one modulus")
        for n in moduli:
            if not isinstance(n, int) or (n != 0 and n < 2):
                raise StructureError(f"modulus {n!r} must be 0 or >= 2")
        self.moduli = moduli
        self.d = len(moduli)

    @property
    def is_finite(self):
        return 0 not in self.moduli

    def zero(self):
        return (0,) * self.d

    def reduce(self, v):
        return tuple(x % n if n else x for x, n in zip(v, self.moduli))

    def add(self, x, y):
        return tuple((a + b) % n if n else a + b
                     for a, b, n in zip(x, y, self.moduli))

    def neg(self, x):
        return tuple((-a) % n if n else -a for a, n in zip(x, self.moduli))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, k, x):
        return tuple((k * a) % n if n else k * a
                     for a, n in zip(x, self.moduli))

    def is_element(self, v):
        return (isinstance(v, tuple) and len(v) == self.d
                and all(isinstance(a, int) and (n == 0 or 0 <= a < n)
                        for a, n in zip(v, self.moduli)))

    def elements(self):
        if not self.is_finite:
            raise UnsupportedCarrierError("free summand is not enumerable")
        out = [()]
        for n in self.moduli:
            out = [t + (r,) for t in out for r in range(n)]
        return out

    def size(self):
        if not self.is_finite:
            raise UnsupportedCarrierError("free summand is not enumerable")
        s = 1
        for n in self.moduli:
            s *= n
        return s

    def random_element(self, rng):
        return tuple(rng.randrange(n) if n else rng.randrange(-9, 10)
                     for n in self.moduli)

    def to_json(self):
        return {"moduli": list(self.moduli)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["moduli"]))

    def __eq__(self, other):
        return isinstance(other, CoeffGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return f"CoeffGroup{self.moduli}"


class Scalar:
    """Invertible scalar acting on a coefficient group."""

    def __init__(self, group):
        self.group = group

    def apply(self, x, power=1):
        raise NotImplementedError

    def int_matrix(self, power=1):
        """Action on residue vectors as a d x d integer matrix."""
        raise NotImplementedError


class IntUnit(Scalar):
    """Multiplication by an integer coprime to every modulus."""

    def __init__(self, group, value):
        super().__init__(group)
        if not isinstance(value, int) or isinstance(value, bool):
            raise StructureError("unit must be an integer")
        for n in group.moduli:
            if n == 0:
                if value not in (1, -1):
                    raise StructureError(
                        f"{value} is not a unit on a free Z summand")
            elif gcd(value % n, n) != 1:
                raise StructureError(f"{value} is not a unit mod {n}")
        self.value = value

    def _component(self, n, power):
        if n == 0:
            return self.value if power % 2 else 1
        return pow(self.value, power, n)

    def apply(self, x, power=1):
        return tuple((a * self._component(n, power)) % n if n
                     else a * self._component(n, power)
                     for a, n in zip(x, self.group.moduli))

    def int_matrix(self, power=1):
        d = self.group.d
        mat = [[0] * d for _ in range(d)]
        for i, n in enumerate(self.group.moduli):
            mat[i][i] = self._component(n, power)
        return mat

    def __repr__(self):
        return f"IntUnit({self.value})"

    def __eq__(self, other):
        return (isinstance(other, IntUnit) and self.value == other.value
                and self.group == other.group)

    def __hash__(self):
        return hash(("int_unit", self.value, self.group))


class ShiftUnit(Scalar):
    """Cyclic coordinate shift: multiplication by t on Z_n[t]/(t^d - 1)."""

    def __init__(self, group, step=1):
        super().__init__(group)
        mods = set(group.moduli)
        if len(mods) != 1 or 0 in mods:
            raise StructureError("shift unit needs uniform finite moduli")
        self.step = step % group.d

    def apply(self, x, power=1):
        d = self.group.d
        s = (self.step * power) % d
        return tuple(x[(i - s) % d] for i in range(d))

    def int_matrix(self, power=1):
        d = self.group.d
        s = (self.step * power) % d
        mat = [[0] * d for _ in range(d)]
        for j in range(d):
            mat[(j + s) % d][j] = 1
        return mat

    def __repr__(self):
        return f"ShiftUnit(step={self.step})"

    def __eq__(self, other):
        return (isinstance(other, ShiftUnit) and self.step == other.step
                and self.group == other.group)

    def __hash__(self):
        return hash(("shift_unit", self.step, self.group))


def unit(group, value):
    """Shorthand for IntUnit."""
    return IntUnit(group, value)
