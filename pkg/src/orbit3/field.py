"""Arithmetic in GF(p^m) for small p^m.

Elements are plain non-negative integers encoding the residue polynomial in
the generator: for p = 2 the little-endian bit vector of the coefficients,
for odd p the little-endian base-p digit vector.  Every field is built on a
primitive modulus so that the residue class of X is itself a generator omega
of the unit group; multiplication runs through exp/log tables.

The modulus for GF(2^6) is fixed to X^6 + X^4 + X^3 + X + 1; other binary
degrees use the classic primitive polynomials from LFSR tables, odd
characteristics use the lexicographically first primitive polynomial.  All
moduli are re-validated at construction (irreducibility via gcd with
X^(p^k) - X for k <= m/2, then the multiplicative order of X).
"""

from __future__ import annotations

import functools

from .numtheory import prime_divisors

__all__ = ["Field", "SubfieldEmbedding", "get_field", "get_embedding"]

# primitive polynomials over GF(2), little-endian bit encoding; degree 6 is pinned
_BINARY_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,  # X^6 + X^4 + X^3 + X + 1
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, low to high)


def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    while len(f) - 1 >= dg and f:
        if f[-1]:
            c = f[-1] * inv_lead % p
            off = len(f) - 1 - dg
            for i, gi in enumerate(g):
                f[off + i] = (f[off + i] - c * gi) % p
        f.pop()
    return _poly_trim(f)


def _poly_mulmod(a, b, g, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, g, p)


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a = _poly_mod(a, b, p)
        a, b = b, a
    return a


def _poly_powmod(a, e, g, p):
    r = [1]
    while e:
        if e & 1:
            r = _poly_mulmod(r, a, g, p)
        a = _poly_mulmod(a, a, g, p)
        e >>= 1
    return r


def _is_irreducible(modulus, p):
    """Degree-m modulus has no irreducible factor of degree <= m/2."""
    m = len(modulus) - 1
    if m == 1:
        return True
    frob = [0, 1]  # X^(p^k) mod modulus, iterated over k
    for _ in range(m // 2):
        frob = _poly_powmod(frob, p, modulus, p)
        diff = list(frob) + [0] * max(0, 2 - len(frob))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(list(modulus), _poly_trim(diff), p)
        if len(g) != 1:
            return False
    return True


class Field:
    """GF(p^m) with omega = residue class of X; elements are ints."""

    def __init__(self, p: int, m: int, modulus=None):
        if p < 2 or m < 1:
            raise ValueError("need a prime p and m >= 1")
        if len(factor := prime_divisors(p)) != 1 or factor[0] != p:
            raise ValueError(f"p = {p} is not prime")
        if p == 2:
            if m > 16:
                raise ValueError("binary fields supported up to m = 16")
        elif p**m > 10**4:
            raise ValueError("odd-characteristic fields supported up to p^m = 10^4")
        self.p = p
        self.m = m
        self.order = p**m
        if modulus is None:
            modulus = self._default_modulus()
        self.modulus = tuple(int(c) % p for c in modulus)
        if len(self.modulus) != m + 1 or self.modulus[m] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not _is_irreducible(list(self.modulus), p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{p}")
        self.omega = self._encode([0, 1] if m > 1 else [(-self.modulus[0]) % p])
        self._build_tables()
        self._check_generator()

    # -- construction helpers ------------------------------------------------

    def _default_modulus(self):
        p, m = self.p, self.m
        if p == 2:
            bits = _BINARY_MODULI[m]
            return [(bits >> i) & 1 for i in range(m + 1)]
        if m == 1:
            for g in range(2, p):
                if all(pow(g, (p - 1) // ell, p) != 1 for ell in prime_divisors(p - 1)):
                    return [(-g) % p, 1]  # X - g, so that X maps to a generator
            return [p - 1, 1]
        # lexicographically first monic primitive polynomial
        for tail in range(p**m):
            coeffs = [(tail // p**i) % p for i in range(m)] + [1]
            if coeffs[0] == 0 or not _is_irreducible(coeffs, p):
                continue
            if self._x_is_primitive(coeffs):
                return coeffs
        raise RuntimeError("no primitive polynomial found")  # unreachable

    def _x_is_primitive(self, coeffs):
        p, q1 = self.p, self.order - 1
        x = [0, 1]
        return all(_poly_powmod(x, q1 // ell, coeffs, p) != [1] for ell in prime_divisors(q1))

    def _encode(self, coeffs):
        return sum(int(c) % self.p * self.p**i for i, c in enumerate(coeffs))

    def _decode(self, a):
        coeffs = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            coeffs.append(c)
        return coeffs

    def _build_tables(self):
        p, m, q = self.p, self.m, self.order
        exp = [0] * max(q - 1, 1)
        log = [-1] * q
        if q == 2:
            exp[0] = 1
            log[1] = 0
        elif p == 2:
            # shift-and-reduce walk through the powers of X
            mod_bits = sum(c << i for i, c in enumerate(self.modulus))
            acc = 1
            for i in range(q - 1):
                exp[i] = acc
                if log[acc] != -1:
                    raise ValueError("residue class of X is not a generator")
                log[acc] = i
                acc <<= 1
                if acc >> m:
                    acc ^= mod_bits
        else:
            acc = [1]
            mod = list(self.modulus)
            omega_poly = self._decode(self.omega)
            for i in range(q - 1):
                val = self._encode(acc)
                exp[i] = val
                if log[val] != -1:
                    raise ValueError("residue class of X is not a generator")
                log[val] = i
                acc = _poly_mulmod(acc, omega_poly, mod, p)
        self._exp = exp
        self._log = log

    def _check_generator(self):
        if self._log.count(-1) != 1:  # only 0 has no discrete log
            raise ValueError("omega does not generate the unit group")

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out, mul = 0, 1
        for _ in range(self.m):
            out += (a % self.p + b % self.p) % self.p * mul
            a //= self.p
            b //= self.p
            mul *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out, mul = 0, 1
        for _ in range(self.m):
            out += (-a % self.p) % self.p * mul
            a //= self.p
            mul *= self.p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverting 0")
        return self._exp[-self._log[a] % (self.order - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError("0 to a negative power")
        return self._exp[self._log[a] * k % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log base omega; a must be nonzero."""
        if a == 0:
            raise ZeroDivisionError("log of 0")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.order - 1)]

    def frobenius(self, a: int, i: int = 1) -> int:
        return self.pow(a, self.p ** (i % self.m))

    def subfield_member(self, a: int, n: int) -> bool:
        """Whether a lies in the subfield of order p^n (requires n | m)."""
        if self.m % n:
            raise ValueError(f"no subfield of degree {n} in degree {self.m}")
        return self.pow(a, self.p**n) == a

    def elements(self):
        return range(self.order)

    def units(self):
        return (self._exp[i] for i in range(self.order - 1))

    # -- polynomial view -----------------------------------------------------

    def evaluate(self, coeffs, x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def interpolate(self, values) -> list[int]:
        """Coefficients of the unique polynomial of degree < p^m matching the
        full value table; verified by re-evaluation at every point."""
        q = self.order
        if len(values) != q:
            raise ValueError("need one value per field element")
        coeffs = [0] * q
        coeffs[0] = values[0]
        # c_i = -sum_{x != 0} f(x) x^(-i) for 0 < i < q-1, via discrete logs
        nonzero = [(self._log[x], values[x]) for x in self.units() if values[x]]
        for i in range(1, q - 1):
            acc = 0
            for t, fx in nonzero:
                acc = self.add(acc, self.mul(fx, self._exp[(-i * t) % (q - 1)]))
            coeffs[i] = self.neg(acc)
        total = 0
        for _, fx in nonzero:
            total = self.add(total, fx)
        coeffs[q - 1] = self.sub(self.neg(total), coeffs[0])
        for x in self.elements():
            if self.evaluate(coeffs, x) != values[x]:
                raise AssertionError("interpolation failed re-evaluation")
        return coeffs

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, modulus={self.modulus})"

    def to_dict(self):
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus), "omega": self.omega}

    @classmethod
    def from_dict(cls, data):
        fld = cls(data["p"], data["m"], data["modulus"])
        if fld.omega != data["omega"]:
            raise ValueError("serialized omega does not match the modulus")
        return fld


@functools.lru_cache(maxsize=None)
def get_field(p: int, m: int) -> Field:
    """Shared Field instances with the pinned default moduli."""
    return Field(p, m)


class SubfieldEmbedding:
    """The pinned embedding of GF(p^n) into GF(p^m) for n | m.

    omega_n is sent to the first root of the subfield's modulus found while
    walking the big field's subfield of order p^n in power order, which makes
    the map a field homomorphism and deterministic.
    """

    def __init__(self, sub: Field, sup: Field):
        if sub.p != sup.p or sup.m % sub.m:
            raise ValueError("subfield degree must divide the big degree")
        self.sub = sub
        self.sup = sup
        if sub.m == sup.m:
            self._table = {a: a for a in sub.elements()}
        elif sub.order == 2:
            self._table = {0: 0, 1: 1}
        else:
            step = (sup.order - 1) // (sub.order - 1)
            mod_coeffs = [c % sup.p for c in sub.modulus]
            root = None
            for k in range(sub.order - 1):
                cand = sup.exp(step * k)
                if sup.evaluate(mod_coeffs, cand) == 0:
                    root = cand
                    break
            if root is None:
                raise AssertionError("no root of the subfield modulus found")
            self._table = {0: 0}
            for k in range(sub.order - 1):
                self._table[sub.exp(k)] = sup.pow(root, k)
            # multiplicative by construction; additivity on a basis certifies
            # the rest (every element is a sum of basis vectors)
            basis = [sub.pow(sub.omega, j) for j in range(sub.m)]
            for a in sub.elements():
                for b in basis:
                    if self._table[sub.add(a, b)] != sup.add(self._table[a], self._table[b]):
                        raise AssertionError("embedding is not additive")
        self._inverse = {v: k for k, v in self._table.items()}

    def embed(self, a: int) -> int:
        return self._table[a]

    def in_image(self, a: int) -> bool:
        return a in self._inverse

    def project(self, a: int) -> int:
        try:
            return self._inverse[a]
        except KeyError:
            raise ValueError(f"{a} is not in the embedded subfield") from None


@functools.lru_cache(maxsize=None)
def get_embedding(p: int, n: int, m: int) -> SubfieldEmbedding:
    return SubfieldEmbedding(get_field(p, n), get_field(p, m))
