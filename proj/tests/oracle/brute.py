"""Brute-force reference computations used to freeze expected values in the C++ tests.

Deliberately naive: every search is exhaustive over raw functions or subsets, with no
generator tricks and no shared code with the library.
"""
import itertools
import sys


def sugihara(k, monoid=False):
    n = k // 2
    carrier = [a for a in range(-n, n + 1) if not (k % 2 == 0 and a == 0)]
    ops = {
        "meet": lambda a, b: min(a, b),
        "join": lambda a, b: max(a, b),
        "neg": lambda a: -a,
        "arrow": lambda a, b: max(-a, b) if a <= b else min(-a, b),
    }
    consts = {}
    if monoid:
        consts["t"] = 0 if k % 2 else 1
    return carrier, ops, consts


def kleene(lattice=False):
    carrier = [-1, 0, 1]  # 0, a, 1
    ops = {"meet": min, "join": max, "neg": lambda a: -a}
    consts = {} if lattice else {"zero": -1, "one": 1}
    return carrier, ops, consts


ARITY = {"meet": 2, "join": 2, "arrow": 2, "neg": 1}


def is_sub(alg, s):
    carrier, ops, consts = alg
    s = set(s)
    if any(c not in s for c in consts.values()):
        return False
    for name, f in ops.items():
        if ARITY[name] == 1:
            if any(f(a) not in s for a in s):
                return False
        else:
            if any(f(a, b) not in s for a in s for b in s):
                return False
    return True


def subuniverses(alg):
    carrier = alg[0]
    out = []
    for r in range(1, len(carrier) + 1):
        for c in itertools.combinations(carrier, r):
            if is_sub(alg, c):
                out.append(c)
    return out


def product(a, b):
    ca, oa, ka = a
    cb, ob, kb = b
    carrier = [(x, y) for x in ca for y in cb]
    ops = {}
    for name in oa:
        if ARITY[name] == 1:
            ops[name] = (lambda fa, fb: lambda p: (fa(p[0]), fb(p[1])))(oa[name], ob[name])
        else:
            ops[name] = (lambda fa, fb: lambda p, q: (fa(p[0], q[0]), fb(p[1], q[1])))(oa[name], ob[name])
    consts = {c: (ka[c], kb[c]) for c in ka}
    return carrier, ops, consts


def is_hom(a, b, dom, f):
    _, oa, ka = a
    _, ob, kb = b
    for c in ka:
        if ka[c] not in f or f[ka[c]] != kb[c]:
            return False
    for name, g in oa.items():
        h = ob[name]
        if ARITY[name] == 1:
            if any(f[g(x)] != h(f[x]) for x in dom):
                return False
        else:
            if any(f[g(x, y)] != h(f[x], f[y]) for x in dom for y in dom):
                return False
    return True


def partial_homs(a, b):
    out = []
    for s in subuniverses(a):
        for img in itertools.product(b[0], repeat=len(s)):
            f = dict(zip(s, img))
            if is_hom(a, b, s, f):
                out.append(f)
    return out


def homs(a, b):
    return [f for f in partial_homs(a, b) if len(f) == len(a[0])]


def partitions(xs):
    if not xs:
        yield []
        return
    first, rest = xs[0], xs[1:]
    for p in partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def congruences(alg):
    carrier, ops, _ = alg
    out = []
    for p in partitions(carrier):
        blk = {x: i for i, b in enumerate(p) for x in b}
        ok = True
        for name, f in ops.items():
            if ARITY[name] == 1:
                ok = all(blk[f(x)] == blk[f(y)] for x in carrier for y in carrier if blk[x] == blk[y])
            else:
                ok = all(blk[f(x, z)] == blk[f(y, w)]
                         for x in carrier for y in carrier if blk[x] == blk[y]
                         for z in carrier for w in carrier if blk[z] == blk[w])
            if not ok:
                break
        if ok:
            out.append(sorted(sorted(b) for b in p))
    return out


def free_size(sort_algebras, s):
    """Subalgebra of prod_i M_i^(M_i^s) generated by the projections."""
    coords = []
    for alg in sort_algebras:
        for pt in itertools.product(alg[0], repeat=s):
            coords.append((alg, pt))
    gens = [tuple(pt[j] for (_, pt) in coords) for j in range(s)]
    _, ops0, consts0 = sort_algebras[0]
    elems = set(gens)
    for c in consts0:
        elems.add(tuple(alg[2][c] for (alg, _) in coords))
    while True:
        new = set(elems)
        for name in ops0:
            if ARITY[name] == 1:
                for x in elems:
                    new.add(tuple(alg[1][name](x[i]) for i, (alg, _) in enumerate(coords)))
            else:
                for x in elems:
                    for y in elems:
                        new.add(tuple(alg[1][name](x[i], y[i]) for i, (alg, _) in enumerate(coords)))
        if new == elems:
            return len(elems)
        elems = new


if __name__ == "__main__":
    Z = lambda k: sugihara(k)
    W = lambda k: sugihara(k, True)
    print("subuniverses Z3:", subuniverses(Z(3)))
    print("|Sub(3^2)| kleene:", len(subuniverses(product(kleene(), kleene()))))
    print("|PE(Z3)|:", len(partial_homs(Z(3), Z(3))))
    for k in range(2, 9):
        print(f"|PE(Z{k})| = {len(partial_homs(Z(k), Z(k)))}  |End(Z{k})| = {len(homs(Z(k), Z(k)))}"
              f"  |PE(W{k})| = {len(partial_homs(W(k), W(k)))}  |End(W{k})| = {len(homs(W(k), W(k)))}")
    print("congruences Z5:", congruences(Z(5)))
    print("congruences Z4:", congruences(Z(4)))
    print("homs Z3->Z4:", homs(Z(3), Z(4)), " homs W3->W4:", homs(W(3), W(4)))
    for s in range(0, 3):
        print(f"|F_KA({s})| =", free_size([kleene()], s), f" |F_Klu({s})| =", free_size([kleene(True)], s))
    print("|F_oddalg m=2 s=1| =", free_size([Z(3), Z(3)], 1))
    print("|F_evenalg m=2 s=1| =", free_size([Z(3), Z(3), Z(4)], 1))
    print("|F_oddmon m=2 s=1| =", free_size([W(3), W(3)], 1))
    print("|F_evenmon m=2 s=1| =", free_size([W(3), W(3), W(4)], 1))
    for m in (2, 3):
        print(f"|PE(Z{2*m-1})|, cross counts m={m}:",
              len(partial_homs(Z(2*m), Z(2*m-1))), len(partial_homs(Z(2*m-1), Z(2*m))))
    # D sort sizes
    print("|homs(Z3,Z3)| =", len(homs(Z(3), Z(3))), "|homs(Z5,Z5)| =", len(homs(Z(5), Z(5))))
