"""Exact arithmetic in Q(q) and exact linear algebra over it.

Elements of Q(q) are stored as normalized fractions of integer Laurent
polynomials in q.  All computations are exact; an optional evaluation
shortcut (at a rational point q0) is used only to guide pivot selection,
never to certify a result.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _intgcd
from typing import Iterable, Iterator


class Laurent:
    """Integer-coefficient Laurent polynomial in q, stored sparsely."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[int, int] | Iterable[tuple[int, int]] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, v in items:
                if v:
                    nv = c.get(e, 0) + v
                    if nv:
                        c[e] = nv
                    else:
                        c.pop(e, None)
        self.c = c

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def const(n: int) -> "Laurent":
        return Laurent({0: n})

    @staticmethod
    def q(e: int = 1, coeff: int = 1) -> "Laurent":
        return Laurent({e: coeff})

    def is_zero(self) -> bool:
        return not self.c

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.c.items()))

    def valuation(self) -> int:
        if not self.c:
            raise ValueError("valuation of zero")
        return min(self.c)

    def degree(self) -> int:
        if not self.c:
            raise ValueError("degree of zero")
        return max(self.c)

    def leading_coeff(self) -> int:
        return self.c[self.degree()]

    def content(self) -> int:
        g = 0
        for v in self.c.values():
            g = _intgcd(g, abs(v))
        return g

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def shift(self, k: int) -> "Laurent":
        return Laurent({e + k: v for e, v in self.c.items()})

    def scale_int(self, n: int) -> "Laurent":
        if n == 0:
            return Laurent()
        return Laurent({e: v * n for e, v in self.c.items()})

    def divexact_int(self, n: int) -> "Laurent":
        out = {}
        for e, v in self.c.items():
            if v % n:
                raise ArithmeticError("inexact integer division")
            out[e] = v // n
        return Laurent(out)

    def bar(self) -> "Laurent":
        """Substitute q -> q^-1."""
        return Laurent({-e: v for e, v in self.c.items()})

    def __add__(self, other: "Laurent") -> "Laurent":
        c = dict(self.c)
        for e, v in other.c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            else:
                c.pop(e, None)
        out = Laurent()
        out.c = c
        return out

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -v for e, v in self.c.items()})

    def __mul__(self, other: "Laurent") -> "Laurent":
        c: dict[int, int] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                nv = c.get(e, 0) + v1 * v2
                if nv:
                    c[e] = nv
                else:
                    c.pop(e, None)
        out = Laurent()
        out.c = c
        return out

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = Laurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.c.items())))

    def evaluate(self, q0: Fraction) -> Fraction:
        return sum((Fraction(v) * q0 ** e for e, v in self.c.items()), Fraction(0))

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e, v in sorted(self.c.items()):
            if e == 0:
                term = str(abs(v))
            else:
                qs = "q" if e == 1 else ("q^%d" % e if e > 0 else "q^%d" % e)
                term = qs if abs(v) == 1 else "%d*%s" % (abs(v), qs)
            parts.append(("- " if v < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def _poly_divmod_rational(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Division with remainder for dense coefficient lists over Q (low to high)."""
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, bv in enumerate(b):
            a[k + i] -= f * bv
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _to_dense(p: Laurent) -> tuple[int, list[Fraction]]:
    v = p.valuation()
    d = p.degree()
    dense = [Fraction(p.c.get(e, 0)) for e in range(v, d + 1)]
    return v, dense


def _from_dense(val: int, dense: list[Fraction]) -> Laurent:
    out: dict[int, int] = {}
    for i, co in enumerate(dense):
        if co:
            if co.denominator != 1:
                raise ArithmeticError("inexact division")
            out[val + i] = co.numerator
    return Laurent(out)


def laurent_divexact(a: Laurent, b: Laurent) -> Laurent:
    """Exact division a / b in Z[q, q^-1]; raises if not exact."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if a.is_zero():
        return Laurent()
    if b.is_monomial():
        e, v = next(iter(b.c.items()))
        out = {}
        for ea, va in a.c.items():
            if va % v:
                raise ArithmeticError("inexact division")
            out[ea - e] = va // v
        return Laurent(out)
    va, da = _to_dense(a)
    vb, db = _to_dense(b)
    quo, rem = _poly_divmod_rational(da, db)
    if rem:
        raise ArithmeticError("inexact Laurent division")
    return _from_dense(va - vb, quo)


def laurent_gcd(a: Laurent, b: Laurent) -> Laurent:
    """Gcd in Z[q, q^-1], primitive, lowest exponent 0, positive leading coeff."""
    if a.is_zero() and b.is_zero():
        return Laurent()
    if a.is_zero():
        return _normalize_gcd(b)
    if b.is_zero():
        return _normalize_gcd(a)
    _, da = _to_dense(a)
    _, db = _to_dense(b)
    while db and any(db):
        _, r = _poly_divmod_rational(da, db)
        da, db = db, r
    # clear rational content, return primitive integer polynomial
    den_lcm = 1
    for co in da:
        den_lcm = den_lcm * co.denominator // _intgcd(den_lcm, co.denominator)
    ints = [int(co * den_lcm) for co in da]
    g = 0
    for v in ints:
        g = _intgcd(g, abs(v))
    ints = [v // g for v in ints]
    out = Laurent({i: v for i, v in enumerate(ints)})
    return _normalize_gcd(out)


def _normalize_gcd(p: Laurent) -> Laurent:
    p = p.shift(-p.valuation())
    g = p.content()
    p = p.divexact_int(g)
    if p.leading_coeff() < 0:
        p = -p
    return p


class RatFunc:
    """Normalized fraction of integer Laurent polynomials: an element of Q(q)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: Laurent | None = None, _normalized: bool = False):
        if den is None:
            den = Laurent.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: Laurent, den: Laurent) -> tuple[Laurent, Laurent]:
        if num.is_zero():
            return Laurent(), Laurent.const(1)
        # shift denominator so its lowest exponent is 0
        v = den.valuation()
        num, den = num.shift(-v), den.shift(-v)
        if not den.is_monomial():
            g = laurent_gcd(num, den)
            if g.degree() > 0 or not g.is_monomial():
                num = laurent_divexact(num, g)
                den = laurent_divexact(den, g)
                v = den.valuation()
                num, den = num.shift(-v), den.shift(-v)
        cg = _intgcd(num.content(), den.content())
        if cg > 1:
            num = num.divexact_int(cg)
            den = den.divexact_int(cg)
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return num, den

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(Laurent(), _normalized=True)

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(Laurent.const(1), _normalized=True)

    @staticmethod
    def from_int(n: int) -> "RatFunc":
        return RatFunc(Laurent.const(n), _normalized=True)

    @staticmethod
    def q_power(e: int, coeff: int = 1) -> "RatFunc":
        return RatFunc(Laurent.q(e, coeff), _normalized=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_monomial()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _normalized=True)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        return RatFunc.one() / self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, q0: Fraction) -> Fraction:
        d = self.den.evaluate(q0)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(q0) / d

    def __str__(self) -> str:
        if self.den == Laurent.const(1):
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    __repr__ = __str__


def qint(n: int, d: int = 1) -> RatFunc:
    """Quantum integer [n] at q^d: (q^{dn} - q^{-dn}) / (q^d - q^{-d})."""
    if d <= 0:
        raise ValueError("d must be positive")
    if n == 0:
        return RatFunc.zero()
    sign = 1
    if n < 0:
        n, sign = -n, -1
    # [n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
    out = Laurent({d * (n - 1 - 2 * k): 1 for k in range(n)})
    return RatFunc(out.scale_int(sign), _normalized=True)


def qfactorial(n: int, d: int = 1) -> RatFunc:
    out = RatFunc.one()
    for k in range(2, n + 1):
        out = out * qint(k, d)
    return out


def qbinomial(n: int, k: int, d: int = 1) -> RatFunc:
    """Gaussian binomial coefficient at q^d; always a Laurent polynomial."""
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    num = Laurent.const(1)
    den = Laurent.const(1)
    for j in range(k):
        num = num * qint(n - j, d).num
        den = den * qint(j + 1, d).num
    return RatFunc(laurent_divexact(num, den), _normalized=True)


# ---------------------------------------------------------------------------
# exact linear algebra


class SolveInconsistent(Exception):
    """The linear system has no solution."""


class SolveUnderdetermined(Exception):
    """The linear system has more than one solution."""


class QMatrix:
    """Dense matrix over Q(q)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: list[list[RatFunc]] | None = None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[RatFunc.zero() for _ in range(cols)] for _ in range(rows)]
        assert len(entries) == rows and all(len(r) == cols for r in entries)
        self.entries = entries

    @staticmethod
    def identity(n: int) -> "QMatrix":
        m = QMatrix(n, n)
        for i in range(n):
            m.entries[i][i] = RatFunc.one()
        return m

    @staticmethod
    def from_rows(rows: list[list[RatFunc]], cols: int | None = None) -> "QMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return QMatrix(len(rows), cols, [list(r) for r in rows])

    def row(self, i: int) -> list[RatFunc]:
        return self.entries[i]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def matmul(self, other: "QMatrix") -> "QMatrix":
        assert self.cols == other.rows
        out = QMatrix(self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entries[i][k]
                if a.is_zero():
                    continue
                for j in range(other.cols):
                    b = other.entries[k][j]
                    if not b.is_zero():
                        out.entries[i][j] = out.entries[i][j] + a * b
        return out

    def apply(self, vec: list[RatFunc]) -> list[RatFunc]:
        assert len(vec) == self.cols
        out = [RatFunc.zero() for _ in range(self.rows)]
        for i in range(self.rows):
            acc = RatFunc.zero()
            for j, v in enumerate(vec):
                if not v.is_zero():
                    acc = acc + self.entries[i][j] * v
            out[i] = acc
        return out

    def evaluate(self, q0: Fraction) -> list[list[Fraction]]:
        return [[e.evaluate(q0) for e in row] for row in self.entries]


_EVAL_POINTS = (Fraction(7, 3), Fraction(5, 2), Fraction(11, 4))


def _clear_row_denominators(rows: list[list[RatFunc]]) -> list[list[Laurent]]:
    out = []
    for r in rows:
        den = Laurent.const(1)
        for e in r:
            if not e.is_zero():
                den = laurent_divexact(den * e.den, laurent_gcd(den, e.den))
        out.append([laurent_divexact(e.num * den, e.den) if not e.is_zero() else Laurent()
                    for e in r])
    return out


def _echelon_laurent(mat: list[list[Laurent]], cols: int, assist: Fraction | None):
    """Fraction-free (Bareiss) forward elimination.

    Returns (echelon rows, pivot column list).  Pivot rows are chosen in a
    deterministic order; with `assist` set, rows whose candidate pivot does not
    vanish at the evaluation point are preferred (still verified symbolically).
    """
    rows = [list(r) for r in mat]
    n = len(rows)
    piv_cols: list[int] = []
    prev = Laurent.const(1)
    r0 = 0
    for col in range(cols):
        pick = -1
        if assist is not None:
            for i in range(r0, n):
                if not rows[i][col].is_zero() and rows[i][col].evaluate(assist) != 0:
                    pick = i
                    break
        if pick < 0:
            for i in range(r0, n):
                if not rows[i][col].is_zero():
                    pick = i
                    break
        if pick < 0:
            continue
        rows[r0], rows[pick] = rows[pick], rows[r0]
        p = rows[r0][col]
        for i in range(r0 + 1, n):
            if all(rows[i][j].is_zero() for j in range(col, cols)):
                continue
            ri = rows[i]
            head = ri[col]
            one = Laurent.const(1)
            for j in range(col, cols):
                val = p * ri[j] - head * rows[r0][j]
                ri[j] = val if prev == one else laurent_divexact(val, prev)
            ri[col] = Laurent()
        prev = p
        piv_cols.append(col)
        r0 += 1
        if r0 == n:
            break
    return rows[:r0], piv_cols


def rank(m: QMatrix, assist: Fraction | None = None) -> int:
    """Exact rank over Q(q)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    lrows = _clear_row_denominators(m.entries)
    _, piv = _echelon_laurent(lrows, m.cols, assist)
    return len(piv)


def normalize_vector(vec: list[RatFunc]) -> list[RatFunc]:
    """Clear denominators, remove content, make the first nonzero entry have
    positive leading coefficient."""
    den = Laurent.const(1)
    for e in vec:
        if not e.is_zero():
            den = laurent_divexact(den * e.den, laurent_gcd(den, e.den))
    pols = [laurent_divexact(e.num * den, e.den) if not e.is_zero() else Laurent() for e in vec]
    g = Laurent()
    for p in pols:
        g = laurent_gcd(g, p)
    if not g.is_zero():
        pols = [laurent_divexact(p, g) if not p.is_zero() else p for p in pols]
    for p in pols:
        if not p.is_zero():
            if p.leading_coeff() < 0:
                pols = [-x for x in pols]
            break
    return [RatFunc(p, _normalized=True) for p in pols]


def kernel_basis(m: QMatrix, assist: Fraction | None = None) -> list[list[RatFunc]]:
    """Basis of the right null space, denominator-cleared and content-free."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = []
        for j in range(m.cols):
            v = [RatFunc.zero() for _ in range(m.cols)]
            v[j] = RatFunc.one()
            basis.append(v)
        return basis
    lrows = _clear_row_denominators(m.entries)
    ech, piv = _echelon_laurent(lrows, m.cols, assist)
    piv_set = set(piv)
    free = [j for j in range(m.cols) if j not in piv_set]
    basis = []
    for f in free:
        sol = [RatFunc.zero() for _ in range(m.cols)]
        sol[f] = RatFunc.one()
        for r in range(len(piv) - 1, -1, -1):
            pc = piv[r]
            acc = RatFunc.zero()
            for j in range(pc + 1, m.cols):
                if not sol[j].is_zero() and not ech[r][j].is_zero():
                    acc = acc + RatFunc(ech[r][j], _normalized=False) * sol[j]
            sol[pc] = -(acc / RatFunc(ech[r][pc], _normalized=False))
        basis.append(normalize_vector(sol))
    return basis


def solve(m: QMatrix, b: list[RatFunc], assist: Fraction | None = None) -> list[RatFunc]:
    """Solve m x = b; raises SolveInconsistent / SolveUnderdetermined."""
    aug_rows = [list(r) + [b[i]] for i, r in enumerate(m.entries)]
    lrows = _clear_row_denominators(aug_rows)
    ech, piv = _echelon_laurent(lrows, m.cols + 1, assist)
    if m.cols in piv:
        raise SolveInconsistent("right-hand side not in column span")
    if len(piv) < m.cols:
        raise SolveUnderdetermined("solution space has positive dimension")
    sol = [RatFunc.zero() for _ in range(m.cols)]
    for r in range(len(piv) - 1, -1, -1):
        pc = piv[r]
        acc = RatFunc(ech[r][m.cols], _normalized=False)
        for j in range(pc + 1, m.cols):
            if not sol[j].is_zero() and not ech[r][j].is_zero():
                acc = acc - RatFunc(ech[r][j], _normalized=False) * sol[j]
        sol[pc] = acc / RatFunc(ech[r][pc], _normalized=False)
    return sol


def solve_in_span(basis_vectors: list[list[RatFunc]], target: list[RatFunc],
                  assist: Fraction | None = None) -> list[RatFunc] | None:
    """Express target as a combination of the given (independent) vectors.

    Returns the coefficient vector, or None if target is outside the span.
    """
    if not basis_vectors:
        return [] if all(t.is_zero() for t in target) else None
    n = len(target)
    m = QMatrix(n, len(basis_vectors),
                [[basis_vectors[j][i] for j in range(len(basis_vectors))] for i in range(n)])
    try:
        return solve(m, list(target), assist)
    except SolveInconsistent:
        return None
