"""Prime field GF(p) arithmetic.

Elements are plain ints in [0, p); the modulus and all derived data
(binomial caches, NTT roots) live on a shared PrimeField context object.
"""

from __future__ import annotations


def _is_prime(n: int) -> bool:
    """Trial division; fine for word-sized moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# Pascal rows are cached only for small upper index; larger arguments go
# through Lucas digits, so the cache never grows with the modulus.
_PASCAL_CACHE_MAX = 256


class PrimeField:
    """Context for GF(p); immutable after construction."""

    __slots__ = ("p", "two_adicity", "_pascal", "_generator", "_root_cache")

    def __init__(self, p: int):
        if not isinstance(p, int):
            raise ValueError("modulus must be an integer")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        m, v = p - 1, 0
        while m % 2 == 0 and m > 0:
            m //= 2
            v += 1
        self.two_adicity = v
        self._pascal = [[1]]
        self._generator = None
        self._root_cache = {}

    # -- element construction ------------------------------------------------

    def element(self, v: int) -> int:
        return v % self.p

    def rand(self, rng) -> int:
        return rng.randrange(self.p)

    def rand_nonzero(self, rng) -> int:
        if self.p == 2:
            return 1
        return rng.randrange(1, self.p)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    # -- binomial coefficients -----------------------------------------------

    def _pascal_row(self, i: int) -> list[int]:
        rows = self._pascal
        p = self.p
        while len(rows) <= i:
            prev = rows[-1]
            row = [1] * (len(prev) + 1)
            for k in range(1, len(prev)):
                row[k] = (prev[k - 1] + prev[k]) % p
            rows.append(row)
        return rows[i]

    def _binom_digit(self, a: int, b: int) -> int:
        # both digits < p, so every factor below is invertible
        if b > a:
            return 0
        if b > a - b:
            b = a - b
        if a <= _PASCAL_CACHE_MAX:
            return self._pascal_row(a)[b]
        p = self.p
        num, den = 1, 1
        for t in range(1, b + 1):
            num = num * ((a - b + t) % p) % p
            den = den * t % p
        return num * pow(den, p - 2, p) % p

    def binom(self, i: int, k: int) -> int:
        """C(i, k) mod p via Lucas' theorem; 0 when k > i or k < 0."""
        if i < 0:
            raise ValueError("binomial upper index must be nonnegative")
        if k < 0 or k > i:
            return 0
        p = self.p
        out = 1
        while i > 0 or k > 0:
            out = out * self._binom_digit(i % p, k % p) % p
            if out == 0:
                return 0
            i //= p
            k //= p
        return out

    def binom_column(self, k: int, top: int) -> list[int]:
        """[C(0,k), ..., C(top,k)] mod p, built additively (safe in any characteristic)."""
        col = [1] * (top + 1)
        p = self.p
        for _ in range(k):
            nxt = [0] * (top + 1)
            for i in range(1, top + 1):
                nxt[i] = (nxt[i - 1] + col[i - 1]) % p
            col = nxt
        return col

    # -- NTT support (optional; only when p has enough 2-adic roots) ----------

    def _find_generator(self) -> int:
        if self._generator is not None:
            return self._generator
        p = self.p
        m = p - 1
        factors = []
        d = 2
        while d * d <= m:
            if m % d == 0:
                factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.append(m)
        g = 2
        while True:
            if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
                self._generator = g
                return g
            g += 1

    def supports_ntt(self, size: int) -> bool:
        """size must be a power of two dividing p - 1."""
        return size > 0 and size & (size - 1) == 0 and size <= (1 << self.two_adicity)

    def ntt_root(self, size: int) -> int:
        """Primitive size-th root of unity; size a power of two ≤ 2^two_adicity."""
        if not self.supports_ntt(size):
            raise ValueError(f"no order-{size} root of unity in GF({self.p})")
        if size not in self._root_cache:
            g = self._find_generator()
            self._root_cache[size] = pow(g, (self.p - 1) // size, self.p)
        return self._root_cache[size]

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"
