"""Weyl groups, minimal coset representatives, and the arrow graph.

Group elements act on root coordinates; they are stored as integer matrices
(columns = images of the simple roots) together with a reduced word.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import ParabolicData, RootSystem, Weight

Matrix = tuple[tuple[int, ...], ...]


class GroupTooLarge(Exception):
    pass


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """Element given by its action on root coordinates and a reduced word."""

    matrix: Matrix
    word: tuple[int, ...]  # 1-based simple reflection indices
    inv_matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return "e" if not self.word else "s" + "s".join(str(i) for i in self.word)


class WeylGroup:
    """The Weyl group of a root system, generated breadth-first."""

    def __init__(self, rs: RootSystem, cap: int = 1000000,
                 generators: tuple[int, ...] | None = None):
        self.rs = rs
        r = rs.rank
        if generators is None:
            generators = tuple(range(1, r + 1))
        self.generators = generators
        self.simple_mats = {i: self._simple_matrix(i) for i in generators}
        elements: dict[Matrix, WeylElement] = {}
        e = WeylElement(_identity(r), (), _identity(r))
        elements[e.matrix] = e
        frontier = [e]
        while frontier:
            new_frontier = []
            for w in frontier:
                for i in generators:
                    m = _mat_mul(w.matrix, self.simple_mats[i])
                    if m not in elements:
                        nw = WeylElement(m, w.word + (i,),
                                         _mat_mul(self.simple_mats[i], w.inv_matrix))
                        elements[m] = nw
                        new_frontier.append(nw)
                        if len(elements) > cap:
                            raise GroupTooLarge("Weyl group exceeds cap %d" % cap)
            frontier = new_frontier
        self.elements = sorted(elements.values(), key=lambda w: (w.length, w.word))
        self._by_matrix = elements
        self._fund_mats: dict[Matrix, Matrix] = {}

    def _simple_matrix(self, i: int) -> Matrix:
        # s_i(alpha_j) = alpha_j - a_ij alpha_i, columns in root coordinates
        r = self.rs.rank
        a = self.rs.cartan
        cols = []
        for j in range(r):
            col = [int(k == j) for k in range(r)]
            col[i - 1] -= a[i - 1][j]
            cols.append(col)
        return tuple(tuple(cols[j][k] for j in range(r)) for k in range(r))

    def simple(self, i: int) -> WeylElement:
        return self._by_matrix[self.simple_mats[i]]

    def product(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._by_matrix[_mat_mul(a.matrix, b.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._by_matrix[w.inv_matrix]

    def from_word(self, word: tuple[int, ...]) -> WeylElement:
        out = _identity(self.rs.rank)
        for i in word:
            out = _mat_mul(out, self.simple_mats[i])
        return self._by_matrix[out]

    def act_root(self, w: WeylElement, beta: tuple[int, ...]) -> tuple[int, ...]:
        r = self.rs.rank
        return tuple(sum(w.matrix[i][j] * beta[j] for j in range(r)) for i in range(r))

    def _fund_matrix(self, w: WeylElement) -> Matrix:
        """Action matrix on fundamental-weight coordinates (integral)."""
        m = self._fund_mats.get(w.matrix)
        if m is None:
            rs = self.rs
            r = rs.rank
            # columns: image of omega_j in fundamental coordinates
            cols = []
            for j in range(r):
                rc = [rs.cartan_inv[i][j] for i in range(r)]  # omega_j in root coords
                img = [sum(Fraction(w.matrix[i][k]) * rc[k] for k in range(r))
                       for i in range(r)]
                fc = [sum(Fraction(rs.cartan[i][k]) * img[k] for k in range(r))
                      for i in range(r)]
                assert all(f.denominator == 1 for f in fc)
                cols.append([int(f) for f in fc])
            m = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
            self._fund_mats[w.matrix] = m
        return m

    def act(self, w: WeylElement, lam: Weight) -> Weight:
        m = self._fund_matrix(w)
        r = self.rs.rank
        return Weight(tuple(sum(m[i][j] * lam.coords[j] for j in range(r))
                            for i in range(r)))

    def shifted_act(self, w: WeylElement, lam: Weight) -> Weight:
        """Dot action w.lam = w(lam + rho) - rho."""
        return self.act(w, lam + self.rs.rho) - self.rs.rho

    def length_by_inversions(self, w: WeylElement) -> int:
        neg = 0
        for b in self.rs.positive_roots:
            img = self.act_root(w, b)
            if any(c < 0 for c in img):
                assert all(c <= 0 for c in img)
                neg += 1
        return neg

    def reflections(self) -> dict[Matrix, tuple[int, ...]]:
        """Map from reflection matrices to the positive root they reflect."""
        rs = self.rs
        r = rs.rank
        out = {}
        for beta in rs.positive_roots:
            norm2 = rs.root_norm2(beta)
            cols = []
            for j in range(r):
                # s_beta(alpha_j) = alpha_j - (2(alpha_j,beta)/(beta,beta)) beta
                ip = sum(beta[k] * rs.bform[k][j] for k in range(r))
                coef = Fraction(2 * ip, norm2)
                assert coef.denominator == 1
                col = [int(k == j) - int(coef) * beta[k] for k in range(r)]
                cols.append(col)
            m = tuple(tuple(cols[j][k] for j in range(r)) for k in range(r))
            out[m] = beta
        return out


_WEYL_CACHE: dict[str, "WeylGroup"] = {}


def weyl_group(rs: RootSystem, cap: int = 1000000) -> "WeylGroup":
    key = str(rs.ctype)
    if key not in _WEYL_CACHE:
        _WEYL_CACHE[key] = WeylGroup(rs, cap=cap)
    return _WEYL_CACHE[key]


@dataclass(frozen=True)
class Arrow:
    source: WeylElement  # length l
    target: WeylElement  # length l + 1
    root: tuple[int, ...]  # positive root with target = s_root * source


class BruhatGraph:
    """Minimal coset representatives W^S with arrows and a sign assignment."""

    def __init__(self, P: ParabolicData, cap: int = 1000000,
                 W: WeylGroup | None = None):
        self.P = P
        self.W = W if W is not None else weyl_group(P.rs, cap=cap)
        self.cosets = self._minimal_reps()
        self.levels: list[list[WeylElement]] = []
        for w in self.cosets:
            while len(self.levels) <= w.length:
                self.levels.append([])
            self.levels[w.length].append(w)
        self.arrows = self._find_arrows()
        self.squares = self._find_squares()
        self.signs = self._assign_signs()

    def _minimal_reps(self) -> list[WeylElement]:
        # w is minimal in W_S w iff w^{-1}(alpha_i) > 0 for every i in S
        r = self.P.rs.rank
        S0 = [i - 1 for i in sorted(self.P.S)]
        out = []
        for w in self.W.elements:
            inv = w.inv_matrix
            if all(all(inv[k][j] >= 0 for k in range(r)) for j in S0):
                out.append(w)
        return out

    def _find_arrows(self) -> list[Arrow]:
        refl = self.W.reflections()
        out = []
        for lvl in range(len(self.levels) - 1):
            for w in self.levels[lvl]:
                for w2 in self.levels[lvl + 1]:
                    t = _mat_mul(w2.matrix, w.inv_matrix)
                    if t in refl:
                        out.append(Arrow(w, w2, refl[t]))
        return out

    def _find_squares(self) -> list[tuple[WeylElement, WeylElement, WeylElement, WeylElement]]:
        """Quadruples (w1, w2, w3, w4): w1->w2->w4, w1->w3->w4, w2 != w3."""
        arr = {(a.source.matrix, a.target.matrix) for a in self.arrows}
        out = []
        for lvl in range(len(self.levels) - 2):
            for w1 in self.levels[lvl]:
                mids = [m for m in self.levels[lvl + 1] if (w1.matrix, m.matrix) in arr]
                for w4 in self.levels[lvl + 2]:
                    through = [m for m in mids if (m.matrix, w4.matrix) in arr]
                    for i in range(len(through)):
                        for j in range(i + 1, len(through)):
                            out.append((w1, through[i], through[j], w4))
        return out

    def _assign_signs(self) -> dict[tuple[Matrix, Matrix], int]:
        """Signs on arrows with product -1 around every square (GF(2) solve)."""
        arrows = self.arrows
        idx = {(a.source.matrix, a.target.matrix): k for k, a in enumerate(arrows)}
        n = len(arrows)
        rows = []
        for (w1, w2, w3, w4) in self.squares:
            vec = 0
            for pair in ((w1, w2), (w2, w4), (w1, w3), (w3, w4)):
                vec ^= 1 << idx[(pair[0].matrix, pair[1].matrix)]
            rows.append((vec, 1))  # sum of the four sign bits must be odd
        # GF(2) elimination
        pivots: dict[int, tuple[int, int]] = {}
        for vec, rhs in rows:
            for p in sorted(pivots):
                if vec >> p & 1:
                    pv, pr = pivots[p]
                    vec ^= pv
                    rhs ^= pr
            if vec == 0:
                if rhs:
                    raise AssertionError("square sign constraints are inconsistent")
                continue
            p = (vec & -vec).bit_length() - 1
            pivots[p] = (vec, rhs)
        bits = [0] * n
        for p in sorted(pivots, reverse=True):
            vec, rhs = pivots[p]
            val = rhs
            for j in range(p + 1, n):
                if vec >> j & 1:
                    val ^= bits[j]
            bits[p] = val
        signs = {}
        for k, a in enumerate(arrows):
            signs[(a.source.matrix, a.target.matrix)] = -1 if bits[k] else 1
        for (w1, w2, w3, w4) in self.squares:
            prod = (signs[(w1.matrix, w2.matrix)] * signs[(w2.matrix, w4.matrix)]
                    * signs[(w1.matrix, w3.matrix)] * signs[(w3.matrix, w4.matrix)])
            assert prod == -1
        return signs

    def sign(self, a: WeylElement, b: WeylElement) -> int:
        return self.signs[(a.matrix, b.matrix)]

    def arrows_from(self, w: WeylElement) -> list[Arrow]:
        return [a for a in self.arrows if a.source.matrix == w.matrix]

    def arrows_into(self, w: WeylElement) -> list[Arrow]:
        return [a for a in self.arrows if a.target.matrix == w.matrix]


def kostant_decompose(P: ParabolicData, W: WeylGroup, w: WeylElement,
                      cosets: list[WeylElement]) -> tuple[WeylElement, WeylElement]:
    """Write w = w_S * w^S with w_S in W_S, lengths adding up."""
    coset_mats = {c.matrix for c in cosets}
    WS = WeylGroup(P.rs, generators=tuple(sorted(P.S)))
    for ws in WS.elements:
        rest = _mat_mul(ws.inv_matrix, w.matrix)  # ws^{-1} * w
        if rest in coset_mats:
            wS = W._by_matrix[ws.matrix]
            wup = W._by_matrix[rest]
            if wS.length + wup.length == w.length:
                return wS, wup
    raise AssertionError("no Kostant decomposition found")


def incomparability_report(G: BruhatGraph, mu: Weight | None = None) -> dict:
    """Check pairwise differences of dot-orbit points for equal-length pairs,
    and the arrow coefficient condition, for the flag of G."""
    P = G.P
    rs = P.rs
    if mu is None:
        mu = Weight((0,) * rs.rank)
    ok = True
    pair_records = []
    for lvl in G.levels:
        for i in range(len(lvl)):
            for j in range(i + 1, len(lvl)):
                d = G.W.shifted_act(lvl[i], mu) - G.W.shifted_act(lvl[j], mu)
                in_qs = P.in_QS(d)
                good = in_qs and not P.in_QS_plus(d) and not P.in_QS_plus(-d)
                ok = ok and good
                pair_records.append({
                    "pair": [str(lvl[i]), str(lvl[j])],
                    "difference_in_QS": in_qs,
                    "difference_root_coords": [str(c) for c in rs.weight_root_coords(d)],
                    "ok": good,
                })
    arrow_records = []
    if P.s is not None:
        for a in G.arrows:
            d = G.W.shifted_act(a.source, mu) - G.W.shifted_act(a.target, mu)
            coef = P.alpha_s_coefficient(d)
            good = coef == 1
            ok = ok and good
            arrow_records.append({"arrow": [str(a.source), str(a.target)],
                                  "alpha_s_coefficient": str(coef), "ok": good})
    return {"ok": ok, "pairs": pair_records, "arrows": arrow_records}
