"""Explicit group models on F_2^m x F_2^n built from squarings.

An element is a pair (u, v) of bit-packed vectors; the product twists the
central part by a cocycle assembled from the squares sigma_i of the coset
generators and their commutators pi_ij:

    (u1,v1)(u2,v2) = (u1+u2, v1+v2 + sum u1_i u2_i sigma_i
                                   + sum_{i<j} u1_j u2_i pi_ij).

All groups here have class <= 2 and exponent <= 4; {0} x F_2^n is central
and contains every square and commutator.  The module provides the model
arithmetic, the matrix pair group S of a spec (pairs (psi1, psi2) with
sigma o psi1 = psi2 o sigma), automorphism-orbit counting through S, and an
independent brute-force oracle that works directly with generator images.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf2 import PartialLinearMap, mat_rank, vecmat
from .squaring import Squaring, is_biadditive

__all__ = [
    "GroupSpec",
    "AutPairGroup",
    "from_squaring",
    "squaring_of_group",
    "aut_pair_group",
    "orbit_count",
    "brute_force_orbits",
    "brute_force_orbit_partition",
    "enumerate_automorphisms",
    "invariant_profile",
    "export_pc_presentation",
    "parse_pc_presentation",
    "SizeBudgetExceeded",
]


class SizeBudgetExceeded(RuntimeError):
    pass


class GroupSpec:
    """Structure constants of one group model: sigma_vec[i] and pi[(i, j)]
    are n-bit ints, pi keyed by 1-based generator indices i < j."""

    def __init__(self, m: int, n: int, sigma_vec, pi):
        self.m = m
        self.n = n
        self.sigma_vec = tuple(sigma_vec)
        self.pi = {tuple(k): v for k, v in dict(pi).items()}
        if len(self.sigma_vec) != m:
            raise ValueError("need one sigma per coset generator")
        for (i, j), v in self.pi.items():
            if not (1 <= i < j <= m) or not 0 <= v < 1 << n:
                raise ValueError(f"bad commutator entry ({i},{j})")
        if any(not 0 <= v < 1 << n for v in self.sigma_vec):
            raise ValueError("sigma entries must be n-bit")
        self._cocycle = None
        self._comm = None

    # -- tables ----------------------------------------------------------

    def cocycle(self):
        """c[u1][u2], the central twist of the product."""
        if self._cocycle is None:
            m, size = self.m, 1 << self.m
            sig = self.sigma_vec
            hi = [[0] * size for _ in range(m)]
            for i in range(m):
                row = hi[i]
                for u in range(size):
                    acc = 0
                    bits = u >> (i + 1)
                    j = i + 1
                    while bits:
                        if bits & 1:
                            acc ^= self.pi.get((i + 1, j + 1), 0)
                        bits >>= 1
                        j += 1
                    row[u] = acc
            table = []
            for u1 in range(size):
                row = [0] * size
                for u2 in range(size):
                    acc = 0
                    bits = u2
                    i = 0
                    while bits:
                        if bits & 1:
                            acc ^= hi[i][u1]
                            if (u1 >> i) & 1:
                                acc ^= sig[i]
                        bits >>= 1
                        i += 1
                    row[u2] = acc
                table.append(row)
            self._cocycle = table
        return self._cocycle

    def comm_table(self):
        if self._comm is None:
            c = self.cocycle()
            size = 1 << self.m
            self._comm = [[c[u1][u2] ^ c[u2][u1] for u2 in range(size)] for u1 in range(size)]
        return self._comm

    # -- arithmetic --------------------------------------------------------

    @property
    def order(self):
        return 1 << (self.m + self.n)

    @property
    def identity(self):
        return (0, 0)

    def elements(self):
        return ((u, v) for u in range(1 << self.m) for v in range(1 << self.n))

    def multiply(self, g1, g2):
        u1, v1 = g1
        u2, v2 = g2
        return (u1 ^ u2, v1 ^ v2 ^ self.cocycle()[u1][u2])

    def inverse(self, g):
        u, v = g
        return (u, v ^ self.cocycle()[u][u])

    def square(self, g):
        return (0, self.cocycle()[g[0]][g[0]])

    def commutator(self, g1, g2):
        return (0, self.comm_table()[g1[0]][g2[0]])

    def element_order(self, g):
        if g == (0, 0):
            return 1
        return 2 if self.cocycle()[g[0]][g[0]] == 0 else 4

    def pack(self, g):
        return g[0] | (g[1] << self.m)

    def unpack(self, x):
        return (x & ((1 << self.m) - 1), x >> self.m)

    # -- structure ---------------------------------------------------------

    def squares_span_rank(self):
        return mat_rank([self.cocycle()[u][u] for u in range(1 << self.m)])

    def generated_central_part(self):
        """Span V of all squares and commutators; {0} x V is the Frattini
        subgroup of the model."""
        vals = list(self.sigma_vec) + list(self.pi.values())
        basis = []
        for v in vals:
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return basis

    # -- serialization -------------------------------------------------------

    def to_dict(self):
        return {
            "m": self.m,
            "n": self.n,
            "sigma": list(self.sigma_vec),
            "pi": {f"{i},{j}": v for (i, j), v in sorted(self.pi.items())},
        }

    @classmethod
    def from_dict(cls, data):
        pi = {}
        for key, v in data.get("pi", {}).items():
            i, j = (int(t) for t in key.split(","))
            pi[(i, j)] = v
        return cls(data["m"], data["n"], data["sigma"], pi)

    def __eq__(self, other):
        return (
            isinstance(other, GroupSpec)
            and (self.m, self.n, self.sigma_vec) == (other.m, other.n, other.sigma_vec)
            and {k: v for k, v in self.pi.items() if v}
            == {k: v for k, v in other.pi.items() if v}
        )

    def __repr__(self):
        return f"GroupSpec(m={self.m}, n={self.n}, sigma={self.sigma_vec}, pi={self.pi})"


def from_squaring(sq: Squaring) -> GroupSpec:
    """Structure constants from a table: sigma_i = s(e_i),
    pi_ij = s(e_i+e_j)+s(e_i)+s(e_j).  The induced form must be biadditive
    (it may be trivial, which yields an abelian model)."""
    if sq.table[0] != 0:
        raise ValueError("a squaring table must vanish at 0")
    if not is_biadditive(sq):
        raise ValueError("induced form is not biadditive")
    t = sq.table
    sigma = [t[1 << i] for i in range(sq.m)]
    pi = {}
    for j in range(sq.m):
        for i in range(j):
            val = t[(1 << i) | (1 << j)] ^ t[1 << i] ^ t[1 << j]
            if val:
                pi[(i + 1, j + 1)] = val
    return GroupSpec(sq.m, sq.n, sigma, pi)


def squaring_of_group(spec: GroupSpec) -> Squaring:
    """The common square of each coset {u} x F_2^n, as a table."""
    c = spec.cocycle()
    return Squaring(spec.m, spec.n, tuple(c[u][u] for u in range(1 << spec.m)))


# ---------------------------------------------------------------------------
# the matrix pair group


@dataclass(frozen=True)
class AutPairGroup:
    """All pairs (psi1, psi2) in GL_m(2) x GL_n(2) with
    sigma(x psi1) = sigma(x) psi2; psi1 determines psi2."""

    m: int
    n: int
    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def a_projection(self):
        return tuple(p[0] for p in self.pairs)

    @property
    def b_projection(self):
        return tuple(sorted({p[1] for p in self.pairs}))

    def phi(self):
        return {p[0]: p[1] for p in self.pairs}

    def __len__(self):
        return len(self.pairs)


def _forced_psi2(sig, m, n, psi1_rows):
    """psi2 recovered on the first-found (by index order) preimage basis of
    F_2^n under sigma, then verified on every point; None when the pair law
    fails."""
    solver = PartialLinearMap()
    count = 0
    for x in range(1 << m):
        val = sig[x]
        if val and solver.image(val) is None:
            if not solver.add(val, sig[vecmat(x, psi1_rows)]):
                return None
            count += 1
            if count == n:
                break
    if count < n:
        return None  # sigma not surjective
    try:
        psi2 = solver.completion(n)
    except ValueError:
        return None
    for x in range(1 << m):
        if sig[vecmat(x, psi1_rows)] != vecmat(sig[x], psi2):
            return None
    return psi2


def aut_pair_group(spec: GroupSpec) -> AutPairGroup:
    """Scan GL_m(2) for sigma-compatible matrices, organized as a row-by-row
    depth-first search: each new row adds the constraints
    sigma(x psi1) = sigma(x) psi2 on the fresh span slice, which force psi2
    as an injective partial linear map and prune incompatible subtrees.
    Every surviving candidate is re-verified through the fixed
    preimage-basis route.

    Requires the squares to span the central part (commutator values are
    sums of squares, so this is the span of all squares and commutators):
    that makes {0} x F_2^n characteristic, psi1 well defined and psi2 forced."""
    if spec.squares_span_rank() != spec.n:
        raise ValueError("squares do not span the central part; use the brute-force oracle")
    m, n = spec.m, spec.n
    sig = squaring_of_group(spec).table
    size = 1 << m
    plm = PartialLinearMap()
    plm.add(sig[0], sig[0])
    images = [0] * size
    rows: list[int] = []
    row_basis: list[int] = []
    found = []

    def dfs(k):
        if k == m:
            psi1 = tuple(rows)
            psi2 = _forced_psi2(sig, m, n, psi1)
            if psi2 is None:
                raise AssertionError("search candidate failed the global verification")
            found.append((psi1, psi2))
            return
        for w in range(1, size):
            red = w
            for b in row_basis:
                red = min(red, red ^ b)
            if not red:
                continue
            mark = plm.mark()
            ok = True
            for y in range(1 << k):
                x = y | (1 << k)
                images[x] = images[y] ^ w
                if not plm.add(sig[x], sig[images[x]]):
                    ok = False
                    break
            if ok:
                rows.append(w)
                row_basis.append(red)
                dfs(k + 1)
                rows.pop()
                row_basis.pop()
            plm.rewind(mark)

    dfs(0)
    phi = {}
    for psi1, psi2 in found:
        if phi.setdefault(psi1, psi2) != psi2:
            raise AssertionError("psi1 does not determine psi2")
    return AutPairGroup(m, n, tuple(sorted(found)))


def _matrix_orbit_count(mats, dim):
    """Orbits of a set of invertible matrices on the nonzero vectors."""
    remaining = set(range(1, 1 << dim))
    count = 0
    while remaining:
        x = min(remaining)
        orb = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for rows in mats:
                z = vecmat(y, rows)
                if z not in orb:
                    orb.add(z)
                    frontier.append(z)
        remaining -= orb
        count += 1
    return count


def orbit_count(spec: GroupSpec) -> int:
    """Automorphism orbits on the group, via the pair group.

    Justification of the formula 1 + (psi2 orbits) + (psi1 orbits): the maps
    fixing every y and sending each x_i to x_i w2(v_i) are automorphisms for
    any choice of the v_i, and they move w1(u) through its entire central
    coset when u != 0; hence orbits outside {0} x F_2^n biject with the
    psi1-orbits on nonzero u-parts.  {0} x F_2^n is characteristic (the
    squares span it), automorphisms act on it exactly through the psi2's, so
    the orbits inside biject with the psi2-orbits on nonzero v-parts.  The
    identity is its own orbit.  Cross-validated against the brute-force
    oracle wherever both run."""
    pairs = aut_pair_group(spec)
    a_orbits = _matrix_orbit_count([p[0] for p in pairs.pairs], spec.m)
    b_orbits = _matrix_orbit_count([p[1] for p in pairs.pairs], spec.n)
    return 1 + b_orbits + a_orbits


# ---------------------------------------------------------------------------
# brute-force oracle: automorphisms from generator images


class _AutSearch:
    """Backtracking over images of the generators.

    The generating set is x_1..x_m plus a basis of a complement C of
    V = span(squares, commutators) inside the central part; the Frattini
    subgroup of the model is {0} x V.  An automorphism is a choice of
    images h_i = eps(x_i) and w_j = eps(complement basis vector) such that

      * the h_i and w_j are independent modulo {0} x V,
      * each w_j is a central element of order <= 2,
      * the central map L on V driven by h_i^2 = (0, L sigma_i) and
        [h_i, h_j] = (0, L pi_ij) is consistent and injective,
      * (degenerate specs only) the assembled map is bijective.

    When V = F_2^n (every spec with surjective squares+commutators span, in
    particular all specs of interest) the first and third conditions are
    already sufficient.  A pin ((u,v) -> (u',v')) restricts the search to
    automorphisms moving the first element to the second and exits on the
    first witness; orbit queries drive the search through pins only, so no
    automorphism list is ever materialized."""

    def __init__(self, spec: GroupSpec, node_budget=None):
        self.spec = spec
        self.m, self.n = spec.m, spec.n
        self.c = spec.cocycle()
        self.comm = spec.comm_table()
        self.v_basis = spec.generated_central_part()
        self.full_v = len(self.v_basis) == spec.n
        self.node_budget = node_budget
        self.nodes = 0
        self._echelon()

    def _echelon(self):
        """Reduced echelon basis of V and the complement coordinates."""
        rows = []
        for v in self.v_basis:
            for r in rows:
                v = min(v, v ^ r)
            if v:
                rows.append(v)
        rows.sort(reverse=True)
        for i in range(len(rows)):
            for j in range(i):
                if (rows[j] >> (rows[i].bit_length() - 1)) & 1:
                    rows[j] ^= rows[i]
        self.v_rows = rows
        pivots = {r.bit_length() - 1 for r in rows}
        self.comp_coords = [k for k in range(self.n) if k not in pivots]

    def reduce_central(self, v):
        """(v_V, complement coefficients) with v = v_V + sum a_j c_j."""
        r = v
        for row in self.v_rows:
            if (r >> (row.bit_length() - 1)) & 1:
                r ^= row
        coeffs = 0
        for idx, k in enumerate(self.comp_coords):
            if (r >> k) & 1:
                coeffs |= 1 << idx
        return v ^ r, coeffs

    def qcoord(self, u, v):
        """Coordinates of (u, v) modulo the Frattini part {0} x V."""
        if self.full_v:
            return u
        return u | (self.reduce_central(v)[1] << self.m)

    def _tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise SizeBudgetExceeded(f"automorphism search exceeded {self.node_budget} nodes")

    def _central_involutions(self):
        out = []
        for u in range(1 << self.m):
            if any(self.comm[u][u2] for u2 in range(1 << self.m)) or self.c[u][u]:
                continue
            out.extend((u, v) for v in range(1 << self.n))
        return out

    def search(self, pin=None, collect=None):
        """True on the first completed assignment, False after certified
        exhaustion.  With collect a list, every assignment is appended as
        (h images, forced central rows or None, complement images) and the
        search exhausts."""
        spec = self.spec
        m, n = self.m, self.n
        if pin is not None:
            (u_src, v_src), (u_tgt, v_tgt) = pin
            supp = [i for i in range(m) if (u_src >> i) & 1]
            order = supp + [i for i in range(m) if i not in supp]
        else:
            u_src = v_src = u_tgt = v_tgt = 0
            supp = []
            order = list(range(m))
        supp_set = set(supp)
        plm = PartialLinearMap()
        h: list = [None] * m
        q_rows: list[int] = []
        w_candidates = [] if self.full_v else self._central_involutions()
        w_imgs: list = []

        def pin_check():
            prod = (0, 0)
            for i in supp:
                prod = spec.multiply(prod, h[i])
            v_v, coeffs = self.reduce_central(v_src)
            for idx in range(len(self.comp_coords)):
                if (coeffs >> idx) & 1:
                    prod = spec.multiply(prod, w_imgs[idx])
            rhs = spec.multiply(spec.inverse(prod), (u_tgt, v_tgt))
            if rhs[0] != 0:
                return False
            return plm.add(v_v, rhs[1])

        def independent(u, v):
            red = self.qcoord(u, v)
            for b in q_rows:
                red = min(red, red ^ b)
            return red

        def assign_h(pos):
            self._tick()
            if pos == m:
                if not self.full_v and not self._leaf_bijective(h, w_imgs, plm):
                    return False
                if collect is not None:
                    rows = tuple(plm.image(1 << k) for k in range(n)) if self.full_v else None
                    collect.append((tuple(h), rows, tuple(w_imgs)))
                    return False
                return True
            i = order[pos]
            pinned_here = supp and i == supp[-1]
            forced_u = None
            if pinned_here and self.full_v:
                forced_u = u_tgt
                for j in supp:
                    if j != i:
                        forced_u ^= h[j][0]
            u_range = range(1, 1 << m) if self.full_v else range(1 << m)
            # with independent u-parts, shifting a generator image centrally
            # composes with an automorphism fixing the pinned image, so
            # off-pin positions can fix v = 0; unsound when V is proper
            # (u-parts need not be independent then), so only under full_v
            full_v_loop = collect is not None or i in supp_set or not self.full_v
            for u in u_range:
                if forced_u is not None and u != forced_u:
                    continue
                squ = self.c[u][u]
                for v in range(1 << n) if full_v_loop else (0,):
                    red = independent(u, v)
                    if not red:
                        continue
                    mark = plm.mark()
                    ok = plm.add(spec.sigma_vec[i], squ)
                    if ok:
                        for j in range(m):
                            if h[j] is None or j == i:
                                continue
                            lo, hi_ = (j, i) if j < i else (i, j)
                            if not plm.add(spec.pi.get((lo + 1, hi_ + 1), 0), self.comm[h[j][0]][u]):
                                ok = False
                                break
                    if ok:
                        h[i] = (u, v)
                        q_rows.append(red)
                        done = (not pinned_here or pin_check()) and assign_h(pos + 1)
                        if done:
                            return True
                        h[i] = None
                        q_rows.pop()
                    plm.rewind(mark)
            return False

        def assign_w(pos):
            self._tick()
            if pos == len(self.comp_coords):
                if pin is not None and not supp:
                    # central source: its image is (0, L v_V) shifted by the
                    # complement images, all computable now
                    if v_src == 0:
                        return (u_tgt, v_tgt) == (0, 0)
                    mark = plm.mark()
                    if not pin_check():
                        plm.rewind(mark)
                        return False
                    if assign_h(0):
                        return True
                    plm.rewind(mark)
                    return False
                return assign_h(0)
            for cand in w_candidates:
                red = independent(*cand)
                if not red:
                    continue
                w_imgs.append(cand)
                q_rows.append(red)
                if assign_w(pos + 1):
                    return True
                w_imgs.pop()
                q_rows.pop()
            return False

        return assign_w(0)

    def _leaf_bijective(self, h, w_imgs, plm):
        spec = self.spec
        seen = set()
        for u in range(1 << self.m):
            base = (0, 0)
            for i in range(self.m):
                if (u >> i) & 1:
                    base = spec.multiply(base, h[i])
            for v in range(1 << self.n):
                v_v, coeffs = self.reduce_central(v)
                lv = plm.image(v_v)
                if lv is None:
                    return False
                g = spec.multiply(base, (0, lv))
                for idx in range(len(self.comp_coords)):
                    if (coeffs >> idx) & 1:
                        g = spec.multiply(g, w_imgs[idx])
                seen.add(g)
        return len(seen) == spec.order


def brute_force_orbit_partition(spec: GroupSpec, max_size: int = 512, node_budget=5_000_000):
    """Orbit partition of the automorphism group, computed by testing which
    elements a representative can be mapped to by some homomorphism-
    respecting choice of generator images (certified by exhausted search)."""
    if spec.order > max_size:
        raise SizeBudgetExceeded(f"group of order {spec.order} exceeds the oracle cap {max_size}")
    search = _AutSearch(spec, node_budget=node_budget)
    packed = [spec.unpack(x) for x in range(spec.order)]
    unassigned = [g for g in packed if g != (0, 0)]
    orbits = [[(0, 0)]]
    while unassigned:
        rep = unassigned[0]
        orbit = [rep]
        rest = []
        for g in unassigned[1:]:
            if search.search(pin=(rep, g)):
                orbit.append(g)
            else:
                rest.append(g)
        orbits.append(orbit)
        unassigned = rest
    return orbits


def brute_force_orbits(spec: GroupSpec, max_size: int = 512, node_budget=5_000_000) -> int:
    return len(brute_force_orbit_partition(spec, max_size, node_budget))


def enumerate_automorphisms(spec: GroupSpec, max_size: int = 64, node_budget=5_000_000):
    """Every automorphism, as (generator images, central map rows,
    complement images); intended for small groups."""
    if spec.order > max_size:
        raise SizeBudgetExceeded(f"group of order {spec.order} exceeds the enumeration cap {max_size}")
    search = _AutSearch(spec, node_budget=node_budget)
    if search.full_v:
        out: list = []
        search.search(collect=out)
        return out
    out = []
    search.search(collect=out)
    return out


# ---------------------------------------------------------------------------
# invariants and interchange formats


def invariant_profile(spec: GroupSpec) -> dict:
    """Isomorphism-invariant fingerprint: order, element-order histogram,
    center size, derived subgroup size, commuting-pair count."""
    size_u, size_v = 1 << spec.m, 1 << spec.n
    c = spec.cocycle()
    comm = spec.comm_table()
    histogram = {1: 1, 2: 0, 4: 0}
    for u in range(size_u):
        if c[u][u] == 0:
            histogram[2] += size_v
        else:
            histogram[4] += size_v
    histogram[2] -= 1
    central_u = [u for u in range(size_u) if not any(comm[u])]
    commuting = sum(
        size_v * size_v for u1 in range(size_u) for u2 in range(size_u) if comm[u1][u2] == 0
    )
    derived_rank = mat_rank([comm[u1][u2] for u1 in range(size_u) for u2 in range(size_u)])
    return {
        "order": spec.order,
        "order_histogram": {k: v for k, v in histogram.items() if v},
        "center": len(central_u) * size_v,
        "derived": 1 << derived_rank,
        "commuting_pairs": commuting,
    }


def _w2(v, n):
    if v == 0:
        return "1"
    return "*".join(f"y{k + 1}" for k in range(n) if (v >> k) & 1)


def export_pc_presentation(spec: GroupSpec) -> str:
    """Text form of the power-commutator presentation; one relation per
    line: the generator squares, the coset commutators, the centrality and
    exponent relations of the y's."""
    m, n = spec.m, spec.n
    lines = [f"# generators: {' '.join(f'x{i+1}' for i in range(m))} {' '.join(f'y{k+1}' for k in range(n))}"]
    for i in range(m):
        lines.append(f"x{i + 1}^2 = {_w2(spec.sigma_vec[i], n)}")
    for j in range(m):
        for i in range(j):
            lines.append(f"[x{i + 1}, x{j + 1}] = {_w2(spec.pi.get((i + 1, j + 1), 0), n)}")
    for i in range(m):
        for k in range(n):
            lines.append(f"[x{i + 1}, y{k + 1}] = 1")
    for k in range(n):
        lines.append(f"y{k + 1}^2 = 1")
    for l in range(n):
        for k in range(l):
            lines.append(f"[y{k + 1}, y{l + 1}] = 1")
    return "\n".join(lines) + "\n"


_SQ_RE = re.compile(r"^x(\d+)\^2 = (.+)$")
_COMM_RE = re.compile(r"^\[x(\d+), x(\d+)\] = (.+)$")
_Y_RE = re.compile(r"^y(\d+)\^2 = 1$")


def _parse_w2(expr, n):
    expr = expr.strip()
    if expr == "1":
        return 0
    v = 0
    for term in expr.split("*"):
        if not re.fullmatch(r"y\d+", term):
            raise ValueError(f"bad central word {expr!r}")
        k = int(term[1:])
        if not 1 <= k <= n:
            raise ValueError(f"generator {term} out of range")
        v |= 1 << (k - 1)
    return v


def parse_pc_presentation(text: str) -> GroupSpec:
    """Inverse of export_pc_presentation."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    m = sum(1 for ln in lines if _SQ_RE.match(ln))
    n = sum(1 for ln in lines if _Y_RE.match(ln))
    if m == 0 or n == 0:
        raise ValueError("presentation must declare x and y generators")
    sigma = [0] * m
    pi = {}
    for ln in lines:
        if mt := _SQ_RE.match(ln):
            sigma[int(mt.group(1)) - 1] = _parse_w2(mt.group(2), n)
        elif mt := _COMM_RE.match(ln):
            i, j = int(mt.group(1)), int(mt.group(2))
            val = _parse_w2(mt.group(3), n)
            if val:
                pi[(i, j)] = val
    return GroupSpec(m, n, sigma, pi)
