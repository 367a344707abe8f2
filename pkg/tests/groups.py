"""Multiplication tables of the groups of order <= 8 (test fixtures)."""

from itertools import permutations


def cyclic_group(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def direct_product(t1, t2):
    n1, n2 = len(t1), len(t2)

    def idx(a, b):
        return a * n2 + b

    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for b1 in range(n2):
            for a2 in range(n1):
                for b2 in range(n2):
                    table[idx(a1, b1)][idx(a2, b2)] = idx(t1[a1][a2], t2[b1][b2])
    return table


def symmetric_3():
    elems = sorted(permutations(range(3)))
    pos = {p: i for i, p in enumerate(elems)}
    # (p * q)(x) = p(q(x))
    return [[pos[tuple(p[q[x]] for x in range(3))] for q in elems]
            for p in elems]


def dihedral_group(n):
    """Order-2n dihedral group; element (i, j) is rotation^i * flip^j."""
    size = 2 * n

    def idx(i, j):
        return i + n * j

    table = [[0] * size for _ in range(size)]
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2)
    return table


def quaternion_8():
    """The quaternion group {+-1, +-i, +-j, +-k}."""
    # letters: 0=e, 1=i, 2=j, 3=k ; element index = letter + 4*(sign bit)
    letter_mul = {}
    for x in range(4):
        letter_mul[(0, x)] = (1, x)
        letter_mul[(x, 0)] = (1, x)
    for x in (1, 2, 3):
        letter_mul[(x, x)] = (-1, 0)
    letter_mul[(1, 2)] = (1, 3)
    letter_mul[(2, 3)] = (1, 1)
    letter_mul[(3, 1)] = (1, 2)
    letter_mul[(2, 1)] = (-1, 3)
    letter_mul[(3, 2)] = (-1, 1)
    letter_mul[(1, 3)] = (-1, 2)

    def mul(a, b):
        sa, la = 1 - 2 * (a // 4), a % 4
        sb, lb = 1 - 2 * (b // 4), b % 4
        s, l = letter_mul[(la, lb)]
        s *= sa * sb
        return l + (4 if s < 0 else 0)

    return [[mul(a, b) for b in range(8)] for a in range(8)]


def all_groups_up_to_8():
    """(name, table) for every isomorphism class of order <= 8."""
    z2 = cyclic_group(2)
    z4 = cyclic_group(4)
    return [
        ("Z1", cyclic_group(1)),
        ("Z2", z2),
        ("Z3", cyclic_group(3)),
        ("Z4", z4),
        ("Z2xZ2", direct_product(z2, z2)),
        ("Z5", cyclic_group(5)),
        ("Z6", cyclic_group(6)),
        ("S3", symmetric_3()),
        ("Z7", cyclic_group(7)),
        ("Z8", cyclic_group(8)),
        ("Z4xZ2", direct_product(z4, z2)),
        ("Z2xZ2xZ2", direct_product(direct_product(z2, z2), z2)),
        ("D4", dihedral_group(4)),
        ("Q8", quaternion_8()),
    ]
