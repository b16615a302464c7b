#!/usr/bin/env python3
"""Writes data/small_groups.hmcat: every group of order <= 16 plus a few named
larger groups, each as right-regular permutation generators of a normal-form
model (abelian tuples, semidirect products with a cyclic top, and metacyclic
a^i b^j groups). Ids follow the SmallGroup numbering for these orders."""

import itertools
import json
import sys


class Model:
    def __init__(self, elements, mul, gens):
        self.elements = elements
        self.mul = mul
        self.gens = gens


def abelian(*moduli):
    elements = list(itertools.product(*[range(m) for m in moduli]))
    def mul(x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, moduli))
    gens = []
    for i, m in enumerate(moduli):
        if m > 1:
            gens.append(tuple(1 if j == i else 0 for j in range(len(moduli))))
    return Model(elements, mul, gens)


def metacyclic(m, twist, square):
    """{a^i b^j}, j in {0,1}: b a b^-1 = a^twist, b^2 = a^square."""
    elements = [(i, j) for j in range(2) for i in range(m)]
    def mul(x, y):
        i, j = x
        k, l = y
        r = (i + (twist * k if j else k) + (square if j and l else 0)) % m
        return (r, j ^ l)
    return Model(elements, mul, [(1, 0), (0, 1)])


def semidirect(base, k, action):
    """base (abelian Model) x| C_k where the top generator acts by `action`."""
    def act(t, v):
        for _ in range(t):
            v = action(v)
        return v
    elements = [(v, t) for t in range(k) for v in base.elements]
    def mul(x, y):
        v, t = x
        w, s = y
        return (base.mul(v, act(t, w)), (t + s) % k)
    identity = base.elements[0]
    gens = [(g, 0) for g in base.gens] + [(identity, 1)]
    return Model(elements, mul, gens)


def product(a, b):
    elements = [(x, y) for x in a.elements for y in b.elements]
    def mul(p, q):
        return (a.mul(p[0], q[0]), b.mul(p[1], q[1]))
    gens = [(g, b.elements[0]) for g in a.gens] + [(a.elements[0], g) for g in b.gens]
    return Model(elements, mul, gens)


def dihedral(order):
    n = order // 2
    return metacyclic(n, n - 1, 0) if n > 1 else abelian(2)


def a4():
    def rot(v):
        x, y = v
        return (y, (x + y) % 2)
    return semidirect(abelian(2, 2), 3, rot)


def s4():
    # S4 as permutations of 4 points.
    elements = list(itertools.permutations(range(4)))
    def mul(p, q):
        return tuple(q[p[i]] for i in range(4))
    return Model(elements, mul, [(1, 2, 3, 0), (1, 0, 2, 3)])


def sl23():
    def matmul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)
    elements = [m for m in itertools.product(range(3), repeat=4)
                if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]
    elements.remove((1, 0, 0, 1))
    elements.insert(0, (1, 0, 0, 1))
    return Model(elements, matmul, [(1, 1, 0, 1), (1, 0, 1, 1)])


def regular(model):
    """Right-regular generator images with the identity at point 0."""
    elements = list(model.elements)
    index = {e: i for i, e in enumerate(elements)}
    return [[index[model.mul(e, g)] for e in elements] for g in model.gens]


CATALOG = [
    (1, 1, "1", None),
    (2, 1, "C2", abelian(2)),
    (3, 1, "C3", abelian(3)),
    (4, 1, "C4", abelian(4)),
    (4, 2, "C2 x C2", abelian(2, 2)),
    (5, 1, "C5", abelian(5)),
    (6, 1, "S3", dihedral(6)),
    (6, 2, "C6", abelian(6)),
    (7, 1, "C7", abelian(7)),
    (8, 1, "C8", abelian(8)),
    (8, 2, "C4 x C2", abelian(4, 2)),
    (8, 3, "D8", dihedral(8)),
    (8, 4, "Q8", metacyclic(4, 3, 2)),
    (8, 5, "C2 x C2 x C2", abelian(2, 2, 2)),
    (9, 1, "C9", abelian(9)),
    (9, 2, "C3 x C3", abelian(3, 3)),
    (10, 1, "D10", dihedral(10)),
    (10, 2, "C10", abelian(10)),
    (11, 1, "C11", abelian(11)),
    (12, 1, "Dic3", metacyclic(6, 5, 3)),
    (12, 2, "C12", abelian(12)),
    (12, 3, "A4", a4()),
    (12, 4, "D12", dihedral(12)),
    (12, 5, "C6 x C2", abelian(6, 2)),
    (13, 1, "C13", abelian(13)),
    (14, 1, "D14", dihedral(14)),
    (14, 2, "C14", abelian(14)),
    (15, 1, "C15", abelian(15)),
    (16, 1, "C16", abelian(16)),
    (16, 2, "C4 x C4", abelian(4, 4)),
    # a -> ab, b -> b on <a> x <b> = C4 x C2
    (16, 3, "(C4 x C2) : C2", semidirect(abelian(4, 2), 2, lambda v: (v[0], (v[1] + v[0]) % 2))),
    (16, 4, "C4 : C4", semidirect(abelian(4), 4, lambda v: ((-v[0]) % 4,))),
    (16, 5, "C8 x C2", abelian(8, 2)),
    (16, 6, "M16", metacyclic(8, 5, 0)),
    (16, 7, "D16", dihedral(16)),
    (16, 8, "SD16", metacyclic(8, 3, 0)),
    (16, 9, "Q16", metacyclic(8, 7, 4)),
    (16, 10, "C4 x C2 x C2", abelian(4, 2, 2)),
    (16, 11, "C2 x D8", product(abelian(2), dihedral(8))),
    (16, 12, "C2 x Q8", product(abelian(2), metacyclic(4, 3, 2))),
    # a -> a, b -> a^2 b on C4 x C2: the central product C4 o D8
    (16, 13, "C4 o D8", semidirect(abelian(4, 2), 2, lambda v: ((v[0] + 2 * v[1]) % 4, v[1]))),
    (16, 14, "C2 x C2 x C2 x C2", abelian(2, 2, 2, 2)),
    (24, 3, "SL(2,3)", sl23()),
    (24, 12, "S4", s4()),
]


def main(out):
    out.write("# hmcat v1\n")
    out.write("# Every group of order <= 16 (42 groups) plus SL(2,3) and S4.\n")
    out.write("# (order, id) follows SmallGroup numbering; generators are right-regular\n")
    out.write("# images of a normal-form model, identity at point 0.\n")
    for order, gid, name, model in CATALOG:
        if model is None:
            degree, gens = 1, []
        else:
            assert len(model.elements) == order, name
            degree, gens = order, regular(model)
        line = '{"order":%d,"id":%d,"name":%s,"degree":%d,"gens":%s}' % (
            order, gid, json.dumps(name), degree, json.dumps(gens, separators=(",", ":")))
        out.write(line + "\n")


if __name__ == "__main__":
    main(sys.stdout)
