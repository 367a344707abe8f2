"""Exact linear algebra over Z/nZ (composite n allowed) and over Z.

Matrices are plain lists of int rows.  Over a composite modulus, ordinary
row echelon is not enough: the Howell form is the canonical strong echelon
form whose rows generate every span vector supported on a coordinate
suffix, which is exactly what kernel extraction and membership tests need.
Integer Hermite and Smith forms cover lattice quotients (invariant factors
of cohomology groups).

Everything here is written for desk-scale matrices (a few hundred rows);
clarity and exactness win over speed.
"""

from math import gcd


def xgcd(a, b):
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _unit_for(a, n):
    """A unit u mod n with u*a == gcd(a, n) mod n (a nonzero mod n)."""
    g = gcd(a % n, n)
    m = n // g
    h = (a // g) % n
    u0 = pow(h % m, -1, m) if m > 1 else 1
    for k in range(n + 1):
        u = (u0 + m * k) % n
        if u and gcd(u, n) == 1:
            return u
    raise AssertionError("unit lift must exist")


def _first_nonzero(row):
    for j, v in enumerate(row):
        if v:
            return j
    return None


def howell(rows, n, width=None):
    """Canonical Howell basis of the Z/n row span of `rows`.

    Returned rows have strictly increasing pivot columns, pivot values
    dividing n, and entries above each pivot reduced modulo it.  The form
    is unique for a given span, so it doubles as a span fingerprint.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if width is None:
        width = max((len(r) for r in rows), default=0)
    piv = {}
    queue = []
    for r in rows:
        rr = [v % n for v in r] + [0] * (width - len(r))
        if any(rr):
            queue.append(rr)

    def install(row, j):
        # normalize pivot to gcd(row[j], n), record, and queue the
        # annihilator row that witnesses torsion below this pivot
        u = _unit_for(row[j], n)
        row = [(u * v) % n for v in row]
        piv[j] = row
        t = n // gcd(row[j], n)
        ann = [(t * v) % n for v in row]
        if any(ann):
            queue.append(ann)

    while queue:
        r = queue.pop()
        j = _first_nonzero(r)
        while j is not None:
            if j not in piv:
                install(r, j)
                break
            p = piv[j]
            a, b = p[j], r[j]
            if b % a == 0:
                q = b // a
                r = [(rv - q * pv) % n for rv, pv in zip(r, p)]
            else:
                g, x, y = xgcd(a, b)
                newp = [(x * pv + y * rv) % n for pv, rv in zip(p, r)]
                r = [((a // g) * rv - (b // g) * pv) % n
                     for pv, rv in zip(p, r)]
                install(newp, j)
            j = _first_nonzero(r)

    cols = sorted(piv)
    basis = [piv[j] for j in cols]
    # back-reduce entries sitting above later pivots
    for i, row in enumerate(basis):
        for j2, p2 in zip(cols[i + 1:], basis[i + 1:]):
            q = row[j2] // p2[j2]
            if q:
                basis[i] = row = [(rv - q * pv) % n for rv, pv in zip(row, p2)]
    return basis


def howell_member(basis, v, n):
    """True iff v lies in the Z/n span described by a Howell basis."""
    v = [x % n for x in v]
    for row in basis:
        j = _first_nonzero(row)
        if v[j] % row[j] == 0:
            q = v[j] // row[j]
            v = [(a - q * b) % n for a, b in zip(v, row)]
    return not any(v)


def kernel_mod(rows, ncols, n):
    """Basis of {x in (Z/n)^ncols : M x == 0} for the matrix with `rows`."""
    nr = len(rows)
    aug = []
    for c in range(ncols):
        row = [rows[r][c] for r in range(nr)] + [0] * ncols
        row[nr + c] = 1
        aug.append(row)
    basis = howell(aug, n, width=nr + ncols)
    out = []
    for row in basis:
        if any(row[:nr]):
            continue
        out.append(row[nr:])
    return out


def hnf(rows, width=None):
    """Row-style Hermite normal form of an integer row span.

    Pivots are positive with zeros below and reduced entries above; rows
    are ordered by pivot column.
    """
    if width is None:
        width = max((len(r) for r in rows), default=0)
    work = [list(r) + [0] * (width - len(r)) for r in rows if any(r)]
    result = []
    for col in range(width):
        live = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not live:
            work = rest
            continue
        pivot = live.pop()
        while live:
            r = live.pop()
            a, b = pivot[col], r[col]
            if b % a == 0:
                q = b // a
                r = [rv - q * pv for rv, pv in zip(r, pivot)]
            else:
                g, x, y = xgcd(a, b)
                newp = [x * pv + y * rv for pv, rv in zip(pivot, r)]
                r = [(a // g) * rv - (b // g) * pv for pv, rv in zip(pivot, r)]
                pivot = newp
            if any(r):
                rest.append(r)
        if pivot[col] < 0:
            pivot = [-v for v in pivot]
        result.append(pivot)
        work = rest
    # reduce entries above each pivot
    for i in range(len(result) - 1, -1, -1):
        col = _first_nonzero(result[i])
        for k in range(i):
            q = result[k][col] // result[i][col]
            if q:
                result[k] = [a - q * b for a, b in zip(result[k], result[i])]
    return result


def solve_in_hnf(basis, v):
    """Express v as an integer combination of HNF basis rows.

    Returns the coefficient list; raises ValueError if v is outside the
    lattice they span.
    """
    v = list(v)
    coeffs = []
    for row in basis:
        j = _first_nonzero(row)
        if v[j] % row[j]:
            raise ValueError("vector not in lattice")
        q = v[j] // row[j]
        coeffs.append(q)
        v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        raise ValueError("vector not in lattice")
    return coeffs


def kernel_int(rows, ncols):
    """Basis of the integer kernel {x in Z^ncols : M x == 0}."""
    nr = len(rows)
    aug = []
    for c in range(ncols):
        row = [rows[r][c] for r in range(nr)] + [0] * ncols
        row[nr + c] = 1
        aug.append(row)
    basis = hnf(aug, width=nr + ncols)
    return [row[nr:] for row in basis if not any(row[:nr])]


def snf_diagonal(rows, width=None):
    """Diagonal of the Smith normal form (nonneg, divisibility chain)."""
    if width is None:
        width = max((len(r) for r in rows), default=0)
    a = [list(r) + [0] * (width - len(r)) for r in rows]
    diag = []
    top = 0
    ncols = width
    col0 = 0
    while True:
        entries = [(abs(a[i][j]), i, j)
                   for i in range(top, len(a))
                   for j in range(col0, ncols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[top], a[pi] = a[pi], a[top]
        for r in a:
            r[col0], r[pj] = r[pj], r[col0]
        # clear column and row below/right of the pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, len(a)):
                b = a[i][col0]
                if not b:
                    continue
                p = a[top][col0]
                if b % p == 0:
                    q = b // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                else:
                    g, x, y = xgcd(p, b)
                    newt = [x * u + y * v for u, v in zip(a[top], a[i])]
                    a[i] = [(p // g) * v - (b // g) * u
                            for u, v in zip(a[top], a[i])]
                    a[top] = newt
                    dirty = True
            for j in range(col0 + 1, ncols):
                b = a[top][j]
                if not b:
                    continue
                p = a[top][col0]
                if b % p == 0:
                    q = b // p
                    for r in a:
                        r[j] -= q * r[col0]
                else:
                    g, x, y = xgcd(p, b)
                    for r in a:
                        u, v = r[col0], r[j]
                        r[col0] = x * u + y * v
                        r[j] = (p // g) * v - (b // g) * u
                    dirty = True
        # enforce divisibility: pivot must divide every remaining entry
        p = abs(a[top][col0])
        offender = None
        for i in range(top + 1, len(a)):
            for j in range(col0 + 1, ncols):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[top] = [x + y for x, y in zip(a[top], a[offender])]
            continue
        diag.append(p)
        top += 1
        col0 += 1
        if top >= len(a) or col0 >= ncols:
            break
    return diag


def quotient_invariant_factors(ker_rows, im_rows, n, dim):
    """Invariant factors (> 1) of (<ker> + nZ^dim) / (<im> + nZ^dim)."""
    stack = [list(r) for r in ker_rows]
    for i in range(dim):
        e = [0] * dim
        e[i] = n
        stack.append(e)
    basis = hnf(stack, width=dim)
    gens = [list(r) for r in im_rows]
    for i in range(dim):
        e = [0] * dim
        e[i] = n
        gens.append(e)
    coeffs = [solve_in_hnf(basis, g) for g in gens]
    diag = snf_diagonal(coeffs, width=len(basis))
    return [d for d in diag if d > 1]


def quotient_over_int(ker_rows, im_rows, dim):
    """(free_rank, torsion factors) of <ker>/<im> as abelian groups."""
    basis = hnf([list(r) for r in ker_rows], width=dim)
    if not basis:
        return 0, []
    coeffs = [solve_in_hnf(basis, list(g)) for g in im_rows]
    if not coeffs:
        return len(basis), []
    diag = snf_diagonal(coeffs, width=len(basis))
    nz = [d for d in diag if d]
    return len(basis) - len(nz), [d for d in nz if d > 1]
