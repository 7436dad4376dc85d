"""Bit-packed linear algebra over GF(2).

Vectors are ints (bit i = coordinate i), matrices are tuples of row ints; a
vector acts on the right by x -> xor of the rows selected by its bits.
"""

from __future__ import annotations

__all__ = [
    "vecmat",
    "mat_identity",
    "mat_inverse",
    "mat_rank",
    "is_invertible",
    "PartialLinearMap",
]


def vecmat(x: int, rows) -> int:
    out = 0
    i = 0
    while x:
        if x & 1:
            out ^= rows[i]
        x >>= 1
        i += 1
    return out


def mat_identity(m: int):
    return tuple(1 << i for i in range(m))


def mat_rank(rows) -> int:
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)


def is_invertible(rows) -> bool:
    return all(rows) and mat_rank(rows) == len(rows)


def mat_inverse(rows):
    m = len(rows)
    aug = [rows[i] | (1 << (m + i)) for i in range(m)]
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, m) if (aug[i] >> col) & 1), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(m):
            if i != r and (aug[i] >> col) & 1:
                aug[i] ^= aug[r]
        r += 1
    return tuple(row >> m for row in aug)


class PartialLinearMap:
    """An injective linear map on GF(2)-spaces constrained pair by pair.

    add(a, b) records the constraint "a maps to b" if it is still satisfiable
    by some injective linear map, else returns False and changes nothing.  A
    pair whose input reduces to zero must have matching output; a pair whose
    input is new must have output independent of the image span (otherwise
    some nonzero vector would be forced to zero).  Search code snapshots with
    mark() and backtracks with rewind().
    """

    def __init__(self):
        self.pivots: dict[int, tuple[int, int]] = {}  # lead bit of input -> (a, b)
        self.image_basis: dict[int, int] = {}  # lead bit -> reduced image vector
        self._trail: list[tuple[int, int]] = []

    def _reduce(self, a: int, b: int):
        while a:
            hit = self.pivots.get(a.bit_length() - 1)
            if hit is None:
                break
            a ^= hit[0]
            b ^= hit[1]
        return a, b

    def _reduce_image(self, b: int) -> int:
        while b:
            hit = self.image_basis.get(b.bit_length() - 1)
            if hit is None:
                break
            b ^= hit
        return b

    def add(self, a: int, b: int) -> bool:
        a, b = self._reduce(a, b)
        if a == 0:
            if b == 0:
                self._trail.append((-1, -1))
                return True
            return False
        b_red = self._reduce_image(b)
        if b_red == 0:
            return False
        la, lb = a.bit_length() - 1, b_red.bit_length() - 1
        self.pivots[la] = (a, b)
        self.image_basis[lb] = b_red
        self._trail.append((la, lb))
        return True

    def mark(self) -> int:
        return len(self._trail)

    def rewind(self, mark: int):
        while len(self._trail) > mark:
            la, lb = self._trail.pop()
            if la >= 0:
                del self.pivots[la]
            if lb >= 0:
                del self.image_basis[lb]

    def image(self, a: int):
        """Forced image of a, or None when a is outside the constrained span."""
        a, b = self._reduce(a, 0)
        return b if a == 0 else None

    def completion(self, n: int):
        """Images of the n unit vectors under the lexicographically first
        invertible extension of the constraints."""
        mark = self.mark()
        try:
            for i in range(n):
                if self.image(1 << i) is not None:
                    continue
                for v in range(1, 1 << n):
                    if self._reduce_image(v) and self.add(1 << i, v):
                        break
                else:
                    raise ValueError("no invertible completion")
            return tuple(self.image(1 << i) for i in range(n))
        finally:
            self.rewind(mark)
