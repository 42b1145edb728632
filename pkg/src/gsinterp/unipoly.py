"""Dense univariate polynomials over GF(p).

Coefficients are stored low-to-high as plain ints with no trailing zeros;
the zero polynomial has an empty coefficient list and degree NEG_INF.

Multiplication tiers: schoolbook for tiny operands, then Kronecker
substitution (coefficients packed into one big integer so CPython's
C-level integer multiply does the convolution). A classic Karatsuba
kernel and an NTT kernel (usable when p - 1 has enough 2-adic factors)
are kept alongside: both are exact, and `USE_NTT` routes large products
through the NTT when enabled. Correctness never depends on which tier
runs. Remainders use synthetic division for small quotients and Newton
series inversion above NEWTON_REM_MIN.
"""

from __future__ import annotations

from contextlib import contextmanager

from .field import PrimeField

NEG_INF = float("-inf")

SCHOOLBOOK_MAX = 8  # below this, packing overhead beats the double loop
KARATSUBA_CUTOFF = 32  # leaf size inside the Karatsuba kernel
NEWTON_REM_MIN = 48  # modulus/quotient degree where Newton division takes over

# The NTT tier is exact whenever the field supports the transform size, but
# on CPython the packed-integer path below outruns it at desk scale, so it
# is off by default and exercised explicitly by tests.
USE_NTT = False
NTT_MIN_RESULT = 128


class ScalarMultCounter:
    """Tallies the per-coefficient work of the executed kernels: products for
    schoolbook/Karatsuba, butterflies and pointwise products for the NTT,
    unpacked result slots for the packed-integer path."""

    __slots__ = ("mults",)

    def __init__(self):
        self.mults = 0


_COUNTER: ScalarMultCounter | None = None


@contextmanager
def count_scalar_mults():
    global _COUNTER
    prev = _COUNTER
    _COUNTER = counter = ScalarMultCounter()
    try:
        yield counter
    finally:
        _COUNTER = prev


# ---------------------------------------------------------------------------
# raw-list kernels
# ---------------------------------------------------------------------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul_school(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if len(a) > len(b):
        a, b = b, a
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    if _COUNTER is not None:
        _COUNTER.mults += len(a) * len(b)
    return _trim([v % p for v in out])


def _add_raw(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return out


def _mul_kara(a: list[int], b: list[int], p: int) -> list[int]:
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        return _mul_school(a, b, p)
    h = (max(len(a), len(b)) + 1) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_kara(a0, b0, p)
    z2 = _mul_kara(a1, b1, p)
    z1 = _mul_kara(_add_raw(a0, a1, p), _add_raw(b0, b1, p), p)
    # z1's top terms only cancel after recombination, so size the scratch
    # list for the intermediate, not the final degree
    out = [0] * max(len(a) + len(b) - 1, h + len(z1), 2 * h + len(z2))
    for i, v in enumerate(z0):
        out[i] = v
    for i, v in enumerate(z1):
        out[i + h] = (out[i + h] + v) % p
    for i, v in enumerate(z0):
        out[i + h] = (out[i + h] - v) % p
    for i, v in enumerate(z2):
        out[i + h] = (out[i + h] - v) % p
        out[i + 2 * h] = (out[i + 2 * h] + v) % p
    return _trim(out)


def _mul_kron(a: list[int], b: list[int], p: int) -> list[int]:
    """Convolution by packing into machine integers: each coefficient gets a
    byte-aligned slot wide enough for the largest column sum, the two packed
    integers are multiplied once, and the slots are read back out."""
    nterms = len(a) + len(b) - 1
    width = ((min(len(a), len(b)) * (p - 1) * (p - 1)).bit_length() + 7) >> 3
    packed_a = int.from_bytes(b"".join(v.to_bytes(width, "little") for v in a), "little")
    packed_b = int.from_bytes(b"".join(v.to_bytes(width, "little") for v in b), "little")
    raw = (packed_a * packed_b).to_bytes(width * (len(a) + len(b)), "little")
    mv = memoryview(raw)
    from_bytes = int.from_bytes
    if _COUNTER is not None:
        _COUNTER.mults += nterms
    return _trim(
        [from_bytes(mv[i : i + width], "little") % p for i in range(0, nterms * width, width)]
    )


def _ntt(vec: list[int], root: int, p: int) -> None:
    """In-place iterative NTT; length a power of two, root of that order."""
    n = len(vec)
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            vec[i], vec[j] = vec[j], vec[i]
    length = 2
    while length <= n:
        w_len = pow(root, n // length, p)
        half = length // 2
        for start in range(0, n, length):
            w = 1
            for k in range(start, start + half):
                u = vec[k]
                v = vec[k + half] * w % p
                vec[k] = (u + v) % p
                vec[k + half] = (u - v) % p
                w = w * w_len % p
        length <<= 1
    if _COUNTER is not None:
        _COUNTER.mults += (n // 2) * max(1, n.bit_length() - 1) + n


def ntt_size(result_len: int) -> int:
    n = 1
    while n < result_len:
        n <<= 1
    return n


def ntt_forward(field: PrimeField, coeffs: list[int], size: int) -> list[int]:
    vec = coeffs + [0] * (size - len(coeffs))
    _ntt(vec, field.ntt_root(size), field.p)
    return vec


def ntt_inverse(field: PrimeField, vec: list[int], size: int) -> list[int]:
    p = field.p
    _ntt(vec, field.inv(field.ntt_root(size)), p)
    inv_n = field.inv(size)
    if _COUNTER is not None:
        _COUNTER.mults += size
    return _trim([v * inv_n % p for v in vec])


def _mul_ntt(a: list[int], b: list[int], field: PrimeField) -> list[int] | None:
    rlen = len(a) + len(b) - 1
    size = ntt_size(rlen)
    if not field.supports_ntt(size):
        return None
    p = field.p
    fa = ntt_forward(field, a, size)
    fb = ntt_forward(field, b, size)
    for i in range(size):
        fa[i] = fa[i] * fb[i] % p
    if _COUNTER is not None:
        _COUNTER.mults += size
    return ntt_inverse(field, fa, size)


def _mul_raw(a: list[int], b: list[int], field: PrimeField) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= SCHOOLBOOK_MAX:
        return _mul_school(a, b, field.p)
    if USE_NTT and len(a) + len(b) - 1 >= NTT_MIN_RESULT:
        out = _mul_ntt(a, b, field)
        if out is not None:
            return out
    return _mul_kron(a, b, field.p)


def _series_inv(f: list[int], n: int, field: PrimeField) -> list[int]:
    """Inverse of f mod x^n by Newton iteration; requires f[0] != 0."""
    p = field.p
    g = [field.inv(f[0])]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        fg = _mul_raw(f[:prec], g, field)[:prec]
        # g <- g*(2 - f*g) mod x^prec
        two_minus = [(-v) % p for v in fg] + [0] * (prec - len(fg))
        two_minus[0] = (two_minus[0] + 2) % p
        g = _mul_raw(g, _trim(two_minus), field)[:prec]
    return _trim(g)


# ---------------------------------------------------------------------------
# the polynomial value type
# ---------------------------------------------------------------------------


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs=(), normalized: bool = False):
        self.field = field
        if normalized:
            self.coeffs = coeffs
        else:
            p = field.p
            c = [v % p for v in coeffs]
            while c and c[-1] == 0:
                c.pop()
            self.coeffs = c

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: PrimeField) -> "UniPoly":
        return cls(field, [], normalized=True)

    @classmethod
    def one(cls, field: PrimeField) -> "UniPoly":
        return cls(field, [1], normalized=True)

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> "UniPoly":
        c %= field.p
        return cls(field, [c] if c else [], normalized=True)

    @classmethod
    def monomial(cls, field: PrimeField, k: int, c: int = 1) -> "UniPoly":
        c %= field.p
        if c == 0:
            return cls.zero(field)
        return cls(field, [0] * k + [c], normalized=True)

    @classmethod
    def x_minus(cls, field: PrimeField, x0: int) -> "UniPoly":
        return cls(field, [-x0 % field.p, 1], normalized=True)

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, tuple(self.coeffs)))

    def _check(self, other: "UniPoly") -> None:
        if self.field != other.field:
            raise ValueError("polynomials from different fields")

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        return UniPoly(self.field, _trim(_add_raw(self.coeffs, other.coeffs, self.field.p)), normalized=True)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
        return UniPoly(self.field, _trim(out), normalized=True)

    def __neg__(self) -> "UniPoly":
        p = self.field.p
        return UniPoly(self.field, [-v % p for v in self.coeffs], normalized=True)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        return UniPoly(self.field, _mul_raw(self.coeffs, other.coeffs, self.field), normalized=True)

    def scale(self, c: int) -> "UniPoly":
        c %= self.field.p
        if c == 0:
            return UniPoly.zero(self.field)
        p = self.field.p
        return UniPoly(self.field, [v * c % p for v in self.coeffs], normalized=True)

    def sub_scaled(self, c: int, other: "UniPoly") -> "UniPoly":
        """self - c*other in one pass (the row operation of the solvers)."""
        self._check(other)
        c %= self.field.p
        if c == 0 or other.is_zero():
            return self
        p = self.field.p
        a, b = self.coeffs, other.coeffs
        if len(a) >= len(b):
            out = list(a)
            for i, v in enumerate(b):
                out[i] = (out[i] - c * v) % p
        else:
            out = [(-c * v) % p for v in b]
            for i, v in enumerate(a):
                out[i] = (out[i] + v) % p
        return UniPoly(self.field, _trim(out), normalized=True)

    def mul_linear(self, x0: int) -> "UniPoly":
        """(x - x0) * self in one pass."""
        if self.is_zero():
            return self
        p = self.field.p
        a = self.coeffs
        out = [0] * (len(a) + 1)
        for i, v in enumerate(a):
            out[i] = (out[i] - x0 * v) % p
            out[i + 1] = v
        return UniPoly(self.field, _trim(out), normalized=True)

    def shift_up(self, k: int) -> "UniPoly":
        """x^k * self."""
        if self.is_zero() or k == 0:
            return self
        return UniPoly(self.field, [0] * k + self.coeffs, normalized=True)

    def pow(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        out = UniPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # -- division --------------------------------------------------------------

    def divmod(self, m: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(m)
        if m.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        da, dm = len(self.coeffs) - 1, len(m.coeffs) - 1
        if da < dm:
            return UniPoly.zero(self.field), self
        field, p = self.field, self.field.p
        qlen = da - dm + 1
        if dm >= NEWTON_REM_MIN and qlen >= NEWTON_REM_MIN:
            rev_m = m.coeffs[::-1]
            inv = _series_inv(rev_m, qlen, field)
            rev_q = _mul_raw(self.coeffs[::-1][:qlen], inv, field)[:qlen]
            rev_q += [0] * (qlen - len(rev_q))
            q = _trim(rev_q[::-1])
            qm = _mul_raw(q, m.coeffs, field)
            r = [(self.coeffs[i] - (qm[i] if i < len(qm) else 0)) % p for i in range(dm)]
            return (
                UniPoly(field, q, normalized=True),
                UniPoly(field, _trim(r), normalized=True),
            )
        # synthetic long division
        lead_inv = field.inv(m.coeffs[-1])
        rem = list(self.coeffs)
        q = [0] * qlen
        mc = m.coeffs
        for i in range(da, dm - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = c * lead_inv % p
            q[i - dm] = c
            base = i - dm
            for j in range(dm):
                rem[base + j] = (rem[base + j] - c * mc[j]) % p
            rem[i] = 0
        if _COUNTER is not None:
            _COUNTER.mults += qlen * (dm + 1)
        return (
            UniPoly(field, _trim(q), normalized=True),
            UniPoly(field, _trim(rem[:dm]), normalized=True),
        )

    def __mod__(self, m: "UniPoly") -> "UniPoly":
        return self.divmod(m)[1]

    def __floordiv__(self, m: "UniPoly") -> "UniPoly":
        return self.divmod(m)[0]

    # -- evaluation and shifts ---------------------------------------------------

    def eval(self, c: int) -> int:
        p = self.field.p
        acc = 0
        for v in reversed(self.coeffs):
            acc = (acc * c + v) % p
        return acc

    def __call__(self, c: int) -> int:
        return self.eval(c)

    def taylor_shift(self, c: int) -> "UniPoly":
        """self(x + c), by the synthetic-division cascade; O(d^2)."""
        c %= self.field.p
        if c == 0 or self.is_zero():
            return self
        p = self.field.p
        b = list(self.coeffs)
        n = len(b)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                b[j] = (b[j] + c * b[j + 1]) % p
        return UniPoly(self.field, _trim(b), normalized=True)

    def taylor_coeffs(self, x0: int, s: int) -> list[int]:
        """First s coefficients of self(x + x0): s synthetic-division passes
        by (x - x0), i.e. reduce mod (x - x0)^s and shift, fused. O(s*d)."""
        p = self.field.p
        work = list(self.coeffs)
        out = [0] * s
        top = len(work) - 1
        for k in range(min(s, len(work))):
            acc = 0
            for i in range(top, k - 1, -1):
                acc = (acc * x0 + work[i]) % p
                work[i] = acc
            out[k] = acc
        return out

    def hasse_deriv(self, k: int, x0: int) -> int:
        """Coefficient of x^k in self(x + x0), via the explicit binomial sum."""
        a = self.coeffs
        if k >= len(a):
            return 0
        p = self.field.p
        col = self.field.binom_column(k, len(a) - 1)
        acc = 0
        xpow = 1
        for i in range(k, len(a)):
            acc = (acc + col[i] * a[i] % p * xpow) % p
            xpow = xpow * x0 % p
        return acc

    # -- display -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"UniPoly(GF({self.field.p}), {self.coeffs})"

    def pretty(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, v in enumerate(self.coeffs):
            if v == 0:
                continue
            if i == 0:
                terms.append(str(v))
            else:
                head = "" if v == 1 else f"{v}*"
                terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        return " + ".join(reversed(terms))
