"""Cross-validation of the automorphism machinery against a dumb reference.

The reference knows nothing about relations or forced central maps: it
ranges over all generator-image tuples, extends each to a candidate map via
normal forms, and keeps those that are bijective homomorphisms by direct
inspection of the multiplication table.  Slow, but a complete and
independent ground truth for small orders.
"""

import random

from orbit3 import group as gp
from orbit3 import squaring as sqm
from orbit3.classify import homocyclic_spec


def reference_automorphisms(spec):
    """All automorphisms as value tuples, by exhaustive search over images
    of the m + n standard generators."""
    els = list(spec.elements())
    gens = [(1 << i, 0) for i in range(spec.m)] + [(0, 1 << k) for k in range(spec.n)]

    def extend(images):
        table = {}
        for u, v in els:
            acc = (0, 0)
            for i in range(spec.m):
                if (u >> i) & 1:
                    acc = spec.multiply(acc, images[i])
            for k in range(spec.n):
                if (v >> k) & 1:
                    acc = spec.multiply(acc, images[spec.m + k])
            table[(u, v)] = acc
        return table

    out = []
    stack = [[]]
    while stack:
        partial = stack.pop()
        if len(partial) == len(gens):
            table = extend(partial)
            if len(set(table.values())) != spec.order:
                continue
            if all(
                table[spec.multiply(g1, g2)] == spec.multiply(table[g1], table[g2])
                for g1 in els
                for g2 in els
            ):
                out.append(tuple(table[g] for g in els))
            continue
        for cand in els:
            stack.append(partial + [cand])
    return out


def reference_orbits(spec):
    els = list(spec.elements())
    autos = reference_automorphisms(spec)
    parent = {g: g for g in els}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for values in autos:
        for g, img in zip(els, values):
            ra, rb = find(g), find(img)
            if ra != rb:
                parent[ra] = rb
    return sorted(
        len([g for g in els if find(g) == root])
        for root in {find(g) for g in els}
    )


def test_reference_agrees_on_order_8():
    q8 = gp.from_squaring(sqm.singer_squaring(2, 1, "b").squaring)
    z2z4 = gp.GroupSpec(2, 1, [0, 1], {})
    ea8 = gp.GroupSpec(2, 1, [0, 0], {})
    ea8b = gp.GroupSpec(1, 2, [0], {})
    for spec in (q8, z2z4, ea8, ea8b):
        ref = reference_automorphisms(spec)
        assert len(ref) == len(gp.enumerate_automorphisms(spec, max_size=8))
        partition = gp.brute_force_orbit_partition(spec, max_size=8)
        assert sorted(map(len, partition)) == reference_orbits(spec)


def test_reference_agrees_on_random_order_8():
    rng = random.Random(31)
    seen = 0
    while seen < 6:
        m, n = rng.choice([(1, 2), (2, 1)])
        sigma = [rng.randrange(1 << n) for _ in range(m)]
        pi = {}
        if m == 2 and rng.random() < 0.7:
            pi = {(1, 2): rng.randrange(1 << n)}
        spec = gp.GroupSpec(m, n, sigma, {k: v for k, v in pi.items() if v})
        ref = reference_automorphisms(spec)
        assert len(ref) == len(gp.enumerate_automorphisms(spec, max_size=8)), spec
        partition = gp.brute_force_orbit_partition(spec, max_size=8)
        assert sorted(map(len, partition)) == reference_orbits(spec), spec
        seen += 1


def test_reference_agrees_on_homocyclic_16():
    spec = homocyclic_spec(2)
    ref = reference_automorphisms(spec)
    assert len(ref) == 96  # 2^4 * |GL_2(2)| scaled: the order-16 homocyclic group
    assert len(gp.enumerate_automorphisms(spec, max_size=16)) == 96
    partition = gp.brute_force_orbit_partition(spec, max_size=16)
    assert sorted(map(len, partition)) == reference_orbits(spec) == [1, 3, 12]
