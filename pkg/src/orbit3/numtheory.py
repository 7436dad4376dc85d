"""Binary-digit combinatorics and divisor arithmetic.

Everything here is exact integer arithmetic: p-adic valuations, primitive
prime divisors of p^m - 1, 1-block statistics of binary representations,
cyclic digit shifts, and the exhaustive verification suites that certify the
digit lemmas on their full stated ranges.  Factorization is plain trial
division (inputs stay below 2^40).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

__all__ = [
    "nu_p",
    "p_part",
    "factorize",
    "prime_divisors",
    "ppd_list",
    "no_ppd_divides_m",
    "DigitProfile",
    "digit_profile",
    "block_count",
    "digit_sum",
    "max_block_len",
    "shift_m",
    "complement_m",
    "lambda_m",
    "delta_set",
    "delta_set_witnesses",
    "verify_unexpected",
    "block_lemma_checks",
    "gcd_bound_check",
    "singer_parameter_equivalence",
    "make_report",
]


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


_small_prime_cache: list[int] = []


def _small_primes() -> list[int]:
    if not _small_prime_cache:
        _small_prime_cache.extend(_sieve(1 << 20))  # covers trial division to 2^40
    return _small_prime_cache


def factorize(n: int) -> dict[int, int]:
    """Factor n <= 2^40 by trial division; returns {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    if n >= 1 << 41:
        raise ValueError("factorize is limited to n < 2^41")
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@functools.lru_cache(maxsize=4096)
def _prime_divisors_cached(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n)))


def prime_divisors(n: int) -> list[int]:
    return list(_prime_divisors_cached(n))


def nu_p(k: int, p: int) -> int:
    """p-adic valuation of k (k >= 1)."""
    if k < 1:
        raise ValueError("nu_p expects k >= 1")
    v = 0
    while k % p == 0:
        k //= p
        v += 1
    return v


def p_part(k, p):
    return p ** nu_p(k, p)


def ppd_list(p: int, m: int) -> list[int]:
    """Primitive prime divisors of p^m - 1: primes dividing p^m - 1 but no
    p^d - 1 with d < m."""
    if m < 1:
        raise ValueError("ppd_list expects m >= 1")
    out = []
    for ell in prime_divisors(p**m - 1):
        if all((p**d - 1) % ell for d in range(1, m)):
            out.append(ell)
    return out


def no_ppd_divides_m(p: int, m: int) -> bool:
    """m is never divisible by a primitive prime divisor of p^m - 1."""
    return all(m % ell for ell in ppd_list(p, m))


# ---------------------------------------------------------------------------
# digit blocks


@dataclass(frozen=True)
class DigitProfile:
    """1/0-block decomposition of the binary representation of k.

    blocks lists the finite maximal runs as (position, length, digit) from the
    least significant bit upward; the infinite leading 0-block is omitted.
    """

    k: int
    s2: int
    beta: int
    blocks: tuple[tuple[int, int, int], ...] = field(default_factory=tuple)


def digit_profile(k: int) -> DigitProfile:
    if k < 0:
        raise ValueError("digit_profile expects k >= 0")
    blocks = []
    pos = 0
    width = k.bit_length()
    while pos < width:
        digit = (k >> pos) & 1
        length = 1
        while pos + length < width and ((k >> (pos + length)) & 1) == digit:
            length += 1
        blocks.append((pos, length, digit))
        pos += length
    s2 = sum(length for _, length, digit in blocks if digit)
    beta = sum(1 for _, _, digit in blocks if digit)
    return DigitProfile(k, s2, beta, tuple(blocks))


def digit_sum(k: int) -> int:
    return bin(k).count("1")


def block_count(k: int) -> int:
    """Number of maximal 1-runs in the binary representation of k."""
    return bin(k & ~(k >> 1)).count("1")


def max_block_len(k: int) -> int:
    """Length of the longest 1-run of k (0 for k = 0)."""
    length = 0
    while k:
        k &= k >> 1
        length += 1
    return length


def _check_range(delta, m):
    if not 0 <= delta < (1 << m):
        raise ValueError(f"delta={delta} out of range for m={m}")


def shift_m(delta: int, m: int) -> int:
    """Left cyclic shift of the m low binary digits of delta."""
    _check_range(delta, m)
    top = (delta >> (m - 1)) & 1
    return ((delta << 1) & ((1 << m) - 1)) | top


def complement_m(delta: int, m: int) -> int:
    """Digitwise complement on m digits, i.e. 2^m - 1 - delta."""
    _check_range(delta, m)
    return (1 << m) - 1 - delta


def lambda_m(delta: int, m: int) -> int:
    """Longest run of equal digits when the m digits of delta sit on a circle."""
    _check_range(delta, m)
    bits = [(delta >> i) & 1 for i in range(m)]
    if all(b == bits[0] for b in bits):
        return m
    best = run = 1
    doubled = bits + bits
    for i in range(1, 2 * m):
        run = run + 1 if doubled[i] == doubled[i - 1] else 1
        best = max(best, min(run, m))
    return best


# ---------------------------------------------------------------------------
# the difference sets


def delta_set_witnesses(m: int) -> dict[int, list[tuple[int, int]]]:
    """All |a-b| with a (exactly two binary digits) and b (at most two) in
    {1,..,2^m-1}, a != b, and (2^m-1)/gcd(m, 2^m-1) dividing a - b; keyed by
    the difference, values list the (a, b) pairs."""
    if m < 1:
        raise ValueError("m >= 1 required")
    q1 = (1 << m) - 1
    quo = q1 // math.gcd(m, q1)
    out: dict[int, list[tuple[int, int]]] = {}
    two_digit = [(1 << i) | (1 << j) for j in range(m) for i in range(j)]
    at_most_two = [1 << i for i in range(m)] + two_digit
    for a in two_digit:
        for b in at_most_two:
            if a != b and (a - b) % quo == 0:
                out.setdefault(abs(a - b), []).append((a, b))
    return out


def delta_set(m: int) -> set[int]:
    return set(delta_set_witnesses(m))


def make_report(claim: str, range_desc: str, violations: list) -> dict:
    return {"claim": claim, "range": range_desc, "violations": violations}


def verify_unexpected(max_m: int = 37) -> dict:
    """Certify that the difference set is empty for every m <= max_m except
    m = 6, and re-derive the supporting bounds on each member found."""
    violations = []
    for m in range(1, max_m + 1):
        wit = delta_set_witnesses(m)
        if (m == 6) != bool(wit):
            violations.append({"m": m, "deltas": sorted(wit)})
            continue
        q1 = (1 << m) - 1
        for delta in wit:
            if block_count(delta) > 3:
                violations.append({"m": m, "delta": delta, "beta": block_count(delta)})
            # gcd(delta, 2^m-1) <= 2^(5m/6) - 1, compared exactly
            g = math.gcd(delta, q1)
            if (g + 1) ** 6 > 1 << (5 * m):
                violations.append({"m": m, "delta": delta, "gcd": g})
    if max_m >= 6:
        wit6 = delta_set_witnesses(6)
        if 21 not in wit6 or (24, 3) not in wit6[21]:
            violations.append({"m": 6, "missing_witness": (24, 3)})
    # numeric re-check of the cutoff: 2^(m-6) < m^6 holds up to exactly m = 37
    for m in range(1, 60):
        holds = (1 << m) < 64 * m**6
        if holds != (m <= 37):
            violations.append({"bound_check_m": m})
    return make_report(
        "difference set empty except m=6; members have beta<=3 and small gcd",
        f"m <= {max_m}",
        violations,
    )


def block_lemma_checks(max_k: int = 1 << 20, max_t: int = 24) -> dict:
    """Exhaustively assert, for all k < max_k and t < max_t, that adding 2^t
    changes the 1-block count by at most one and that
    s(k + 2^t) >= s(k) - l1 + 1 >= beta(k), l1 the longest 1-run of k."""
    import numpy as np

    hi = max_k + (1 << (max_t - 1))
    ks = np.arange(hi, dtype=np.uint32)
    s = np.bitwise_count(ks).astype(np.int16)
    beta = np.bitwise_count(ks & ~(ks >> 1)).astype(np.int16)
    # longest 1-run, only needed below max_k
    base = np.arange(max_k, dtype=np.uint32)
    l1 = np.zeros(max_k, dtype=np.int16)
    cur = base.copy()
    while cur.any():
        l1 += cur != 0
        cur &= cur >> 1
    violations = []
    idx = np.arange(max_k)
    for t in range(max_t):
        shifted = idx + (1 << t)
        bad1 = np.abs(beta[shifted] - beta[idx]) > 1
        lower = s[idx] - l1 + 1
        bad2 = (s[shifted] < lower) | (lower < beta[idx])
        bad2[0] = False  # beta(0) = 0, second chain assumes beta(k) >= 1
        for k in np.flatnonzero(bad1)[:5]:
            violations.append({"k": int(k), "t": t, "law": "block-count step"})
        for k in np.flatnonzero(bad2)[:5]:
            violations.append({"k": int(k), "t": t, "law": "digit-sum lower bound"})
    return make_report(
        "1-block count changes by <=1 and digit-sum chain holds under adding 2^t",
        f"k < {max_k}, t < {max_t}",
        violations,
    )


def gcd_bound_check(max_m: int = 16) -> dict:
    """gcd(delta, 2^m-1) <= 2^(m - lambda_m(delta)) - 1, exhaustively."""
    violations = []
    for m in range(2, max_m + 1):
        q1 = (1 << m) - 1
        for delta in range(1, q1):
            if math.gcd(delta, q1) > (1 << (m - lambda_m(delta, m))) - 1:
                violations.append({"m": m, "delta": delta})
    return make_report(
        "gcd(delta, 2^m-1) <= 2^(m-lambda) - 1",
        f"2 <= m <= {max_m}, 1 <= delta <= 2^m-2",
        violations,
    )


def _two_digit_parameter_direct(m, n, u):
    q1 = (1 << m) - 1
    return (
        u % 2 == 1
        and math.gcd(u, (1 << n) - 1) == 1
        and digit_sum(u * q1 // ((1 << n) - 1)) == 2
    )


def _two_digit_parameter_closed(m, n, u):
    if m == n and m >= 2 and u >= 3:
        k = (u - 1).bit_length() - 1
        if u == 1 + (1 << k) and 1 <= k <= m - 1 and nu_p(k, 2) >= nu_p(m, 2):
            return True
    return m % 2 == 0 and n == m // 2 and u == 1


def singer_parameter_equivalence(max_m: int = 20) -> dict:
    """The direct two-binary-digit test on u*(2^m-1)/(2^n-1) agrees with its
    closed form, over all n | m <= max_m and u in {1,..,2^n-1}."""
    violations = []
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            if m % n:
                continue
            for u in range(1, 1 << n):
                if _two_digit_parameter_direct(m, n, u) != _two_digit_parameter_closed(m, n, u):
                    violations.append({"m": m, "n": n, "u": u})
                    if len(violations) > 20:
                        return make_report("two-digit parameter closed form", f"m <= {max_m}", violations)
    return make_report(
        "two-digit parameter test matches closed form",
        f"n | m <= {max_m}, all u",
        violations,
    )
