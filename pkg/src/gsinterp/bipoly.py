"""Bivariate polynomials with bounded y-degree, weighted orders, Hasse derivatives.

A BiPoly is a vector of exactly ell+1 univariate rows, row j holding the
x-polynomial multiplying y^j. The (1,w)-weighted order compares monomials
by x_deg + w*y_deg, ties going to the larger x power.

Two evaluation routes for Hasse derivatives exist on purpose:
  * hasse_matrix — reduce mod (x-x0)^s first, then shift; the production path.
  * hasse_derivative — the direct binomial-sum formula on the full
    coefficients; slower, used as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import PrimeField
from .unipoly import NEG_INF, UniPoly


@dataclass(frozen=True)
class Monomial:
    """x^xdeg * y^ydeg under the weight w."""

    xdeg: int
    ydeg: int
    w: int

    @property
    def wdeg(self) -> int:
        return self.xdeg + self.w * self.ydeg

    def key(self) -> tuple[int, int]:
        return (self.wdeg, self.xdeg)


def compare_monomials(m1: Monomial, m2: Monomial) -> int:
    """-1/0/1 for m1 </=/> m2; ties in weighted degree go to the larger x power."""
    if m1.w != m2.w:
        raise ValueError("monomials carry different weights")
    k1, k2 = m1.key(), m2.key()
    return (k1 > k2) - (k1 < k2)


def derivative_orders(s: int) -> list[tuple[int, int]]:
    """All (dx, dy) with dx+dy < s, in lexicographic order."""
    if s < 1:
        raise ValueError("multiplicity must be positive")
    return [(dx, dy) for dx in range(s) for dy in range(s - dx)]


class BiPoly:
    __slots__ = ("field", "ell", "rows")

    def __init__(self, field: PrimeField, ell: int, rows: list[UniPoly]):
        if len(rows) != ell + 1:
            raise ValueError(f"need exactly {ell + 1} rows, got {len(rows)}")
        for r in rows:
            if r.field != field:
                raise ValueError("row from a different field")
        self.field = field
        self.ell = ell
        self.rows = rows

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: PrimeField, ell: int) -> "BiPoly":
        return cls(field, ell, [UniPoly.zero(field) for _ in range(ell + 1)])

    @classmethod
    def y_power(cls, field: PrimeField, ell: int, j: int) -> "BiPoly":
        rows = [UniPoly.zero(field) for _ in range(ell + 1)]
        rows[j] = UniPoly.one(field)
        return cls(field, ell, rows)

    @classmethod
    def from_monomials(cls, field: PrimeField, ell: int, terms) -> "BiPoly":
        """terms: iterable of (xdeg, ydeg, coeff)."""
        acc: list[dict[int, int]] = [dict() for _ in range(ell + 1)]
        for a, j, c in terms:
            if not 0 <= j <= ell:
                raise ValueError(f"y-degree {j} out of range 0..{ell}")
            acc[j][a] = (acc[j].get(a, 0) + c) % field.p
        rows = []
        for d in acc:
            if d:
                top = max(d)
                rows.append(UniPoly(field, [d.get(i, 0) for i in range(top + 1)]))
            else:
                rows.append(UniPoly.zero(field))
        return cls(field, ell, rows)

    def monomials(self) -> list[tuple[int, int, int]]:
        """Sorted (xdeg, ydeg, coeff) triples of the nonzero terms."""
        out = []
        for j, row in enumerate(self.rows):
            for a, c in enumerate(row.coeffs):
                if c:
                    out.append((a, j, c))
        return out

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.rows)

    @property
    def x_degree(self):
        return max((r.degree for r in self.rows), default=NEG_INF)

    def weighted_degree(self, w: int):
        """Max of xdeg + w*ydeg over nonzero monomials; NEG_INF for zero."""
        best = NEG_INF
        for j, row in enumerate(self.rows):
            if row.coeffs:
                d = row.degree + w * j
                if d > best:
                    best = d
        return best

    def leading_monomial(self, w: int) -> Monomial:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        best = None
        for j, row in enumerate(self.rows):
            if row.coeffs:
                cand = Monomial(row.degree, j, w)
                if best is None or cand.key() > best.key():
                    best = cand
        return best

    def leading_position(self, w: int) -> int:
        return self.leading_monomial(w).ydeg

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiPoly)
            and other.field == self.field
            and other.ell == self.ell
            and other.rows == self.rows
        )

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "BiPoly") -> None:
        if self.field != other.field or self.ell != other.ell:
            raise ValueError("bivariate operands are incompatible")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.field, self.ell, [a + b for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.field, self.ell, [a - b for a, b in zip(self.rows, other.rows)])

    def scale(self, c: int) -> "BiPoly":
        return BiPoly(self.field, self.ell, [r.scale(c) for r in self.rows])

    def sub_scaled(self, c: int, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(
            self.field, self.ell,
            [a.sub_scaled(c, b) for a, b in zip(self.rows, other.rows)],
        )

    def mul_uni(self, a: UniPoly) -> "BiPoly":
        return BiPoly(self.field, self.ell, [r * a for r in self.rows])

    def mul_linear(self, x0: int) -> "BiPoly":
        """(x - x0) * self."""
        return BiPoly(self.field, self.ell, [r.mul_linear(x0) for r in self.rows])

    def reduce_mod(self, m: UniPoly) -> "BiPoly":
        """Each row replaced by its remainder mod m."""
        if m.is_zero():
            raise ZeroDivisionError("reduction modulo zero")
        return BiPoly(self.field, self.ell, [r % m for r in self.rows])

    def eval_y(self, f: UniPoly) -> UniPoly:
        """self(x, f(x)) as a univariate polynomial."""
        acc = UniPoly.zero(self.field)
        for row in reversed(self.rows):
            acc = acc * f + row
        return acc

    def eval_point(self, x0: int, y0: int) -> int:
        p = self.field.p
        acc = 0
        for row in reversed(self.rows):
            acc = (acc * y0 + row.eval(x0)) % p
        return acc

    # -- Hasse derivatives ---------------------------------------------------------

    def hasse_matrix(self, x0: int, y0: int, s: int) -> list[list[int]]:
        """s x s matrix H[dx][dy] of Hasse derivatives at (x0, y0), dx+dy < s.

        Entries outside the anti-triangle are stored as zeros. Each row is
        reduced mod (x-x0)^s and Taylor-shifted by x0 in one fused pass
        (repeated synthetic division), then the rows are recombined across y
        with binomial weights; the full shifted polynomial is never expanded.
        """
        field, p = self.field, self.field.p
        # shifted[j][dx] = coeff of x^dx in row_j(x + x0), dx < s
        shifted = [row.taylor_coeffs(x0, s) for row in self.rows]
        H = [[0] * s for _ in range(s)]
        ypow = [1] * (self.ell + 1)
        for t in range(1, self.ell + 1):
            ypow[t] = ypow[t - 1] * y0 % p
        for dy in range(s):
            for j in range(dy, self.ell + 1):
                b = field.binom(j, dy)
                if b == 0:
                    continue
                c = b * ypow[j - dy] % p
                if c == 0:
                    continue
                srow = shifted[j]
                for dx in range(s - dy):
                    H[dx][dy] = (H[dx][dy] + c * srow[dx]) % p
        return H

    def hasse_derivative(self, x0: int, y0: int, dx: int, dy: int) -> int:
        """One Hasse derivative by the direct binomial-sum formula (no reduction)."""
        field, p = self.field, self.field.p
        acc = 0
        ypow = 1
        ybin = field.binom_column(dy, self.ell) if self.ell >= dy else []
        for j in range(dy, self.ell + 1):
            cy = ybin[j] * ypow % p
            if cy:
                acc = (acc + cy * self.rows[j].hasse_deriv(dx, x0)) % p
            ypow = ypow * y0 % p
        return acc

    def has_multiplicity(self, x0: int, y0: int, s: int) -> bool:
        """True iff all Hasse derivatives with dx+dy < s vanish at (x0, y0)."""
        H = self.hasse_matrix(x0, y0, s)
        return all(H[dx][dy] == 0 for dx, dy in derivative_orders(s))

    # -- display -----------------------------------------------------------------

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for a, j, c in sorted(self.monomials(), key=lambda t: (t[0] + t[1], t[0]))[::-1]:
            part = []
            if c != 1 or (a == 0 and j == 0):
                part.append(str(c))
            if a:
                part.append("x" + (f"^{a}" if a > 1 else ""))
            if j:
                part.append("y" + (f"^{j}" if j > 1 else ""))
            terms.append("*".join(part))
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"BiPoly(GF({self.field.p}), ell={self.ell}, {self.pretty()})"
