"""Weight slices of (parabolic) Verma modules, singular vectors, and the
normalized intertwiner family.

A slice at offset beta is the free span of F-words of content beta modulo
the Serre slice and, in the parabolic case, the images of the powers
F_i^{<lam, alpha_i^vee> + 1} for i in S.  Raising operators act through the
normal-form engine and kill the highest weight vector.
"""
from __future__ import annotations

from .cartan import ParabolicData, RootSystem, Weight
from .qfield import QMatrix, RatFunc, kernel_basis, normalize_vector
from .uqalg import (AlgElement, NMinusWeightSpace, UqAlgebra,
                    _echelon_ratfunc, _words_of_content)


def _offset_coords(rs: RootSystem, lam: Weight, nu: Weight) -> tuple[int, ...] | None:
    """Root coordinates of lam - nu if in Q^+, else None."""
    try:
        rc = rs.weight_root_coords_int(lam - nu)
    except ValueError:
        return None
    if any(c < 0 for c in rc):
        return None
    return rc


class ModuleSlice:
    """Weight-offset slice of a highest-weight module induced from a Levi
    simple module (plain Verma when S is empty)."""

    def __init__(self, uq: UqAlgebra, lam: Weight, beta: tuple[int, ...],
                 S: frozenset[int] = frozenset(), check_dim: bool = True):
        self.uq = uq
        self.lam = lam
        self.beta = beta
        self.S = frozenset(S)
        self.ws = NMinusWeightSpace(uq, beta)
        extra_rows: list[list[RatFunc]] = []
        rs = uq.rs
        for i in sorted(self.S):
            m = lam.coords[i - 1] + 1
            if m < 1:
                raise ValueError("lam is not S-dominant")
            rest = list(beta)
            rest[i - 1] -= m
            if any(c < 0 for c in rest):
                continue
            tail = (i,) * m
            for u in _words_of_content(tuple(rest)):
                coords = self.ws.reduce_coords({u + tail: RatFunc.one()})
                extra_rows.append(coords)
        self._ech, self._piv = _echelon_ratfunc(extra_rows, self.ws.dim)
        piv_set = set(self._piv)
        self.basis_words = [w for k, w in enumerate(self.ws.basis_words)
                            if k not in piv_set]
        self._basis_pos = [k for k in range(self.ws.dim) if k not in piv_set]
        if check_dim and self.S:
            from .reps import gvm_char
            ht = sum(beta)
            P = ParabolicData(rs, self.S)
            ch = gvm_char(P, lam, ht)
            target = lam - rs.root_to_weight(beta)
            expect = ch.get(target, 0)
            assert self.dim == expect, (
                "induced module slice dim %d != character value %d at %s"
                % (self.dim, expect, beta))

    @property
    def dim(self) -> int:
        return len(self.basis_words)

    def reduce_coords(self, vec_by_word) -> list[RatFunc]:
        coords = self.ws.reduce_coords(vec_by_word)
        for row, pc in zip(self._ech, self._piv):
            if not coords[pc].is_zero():
                f = coords[pc] / row[pc]
                for j in range(len(coords)):
                    if not row[j].is_zero():
                        coords[j] = coords[j] - f * row[j]
        return [coords[k] for k in self._basis_pos]

    def reduce_element(self, x: AlgElement) -> list[RatFunc]:
        by_word: dict[tuple[int, ...], RatFunc] = {}
        for (fw, kv, ew), c in x.items():
            assert not ew and all(e == 0 for e in kv)
            by_word[fw] = by_word.get(fw, RatFunc.zero()) + c
        return self.reduce_coords(by_word)


class SliceFamily:
    """Cache of module slices for a fixed highest weight."""

    def __init__(self, uq: UqAlgebra, lam: Weight, S: frozenset[int] = frozenset()):
        self.uq = uq
        self.lam = lam
        self.S = frozenset(S)
        self._slices: dict[tuple[int, ...], ModuleSlice] = {}

    def get(self, beta: tuple[int, ...]) -> ModuleSlice:
        sl = self._slices.get(beta)
        if sl is None:
            sl = ModuleSlice(self.uq, self.lam, beta, self.S)
            self._slices[beta] = sl
        return sl


def evaluate_on_highest(uq: UqAlgebra, lam: Weight, x: AlgElement) -> dict[tuple[int, ...], RatFunc]:
    """Apply an algebra element to the highest weight vector: E-parts vanish,
    K-parts become q-power scalars, F-words remain."""
    rs = uq.rs
    out: dict[tuple[int, ...], RatFunc] = {}
    for (fw, kv, ew), c in x.items():
        if ew:
            continue
        exp = sum(kv[j] * rs.d[j] * lam.coords[j] for j in range(rs.rank))
        v = c * RatFunc.q_power(exp)
        cur = out.get(fw, RatFunc.zero()) + v
        if cur.is_zero():
            out.pop(fw, None)
        else:
            out[fw] = cur
    return out


def e_action_matrix(family: SliceFamily, beta: tuple[int, ...], i: int) -> QMatrix:
    """Matrix of E_i from the beta-slice to the (beta - alpha_i)-slice."""
    uq = family.uq
    src = family.get(beta)
    tgt_beta = list(beta)
    tgt_beta[i - 1] -= 1
    if tgt_beta[i - 1] < 0:
        return QMatrix(0, src.dim)
    tgt = family.get(tuple(tgt_beta))
    cols = []
    ei = uq.E(i)
    for u in src.basis_words:
        prod = uq.multiply(ei, uq.fword(u))
        vec = evaluate_on_highest(uq, family.lam, prod)
        cols.append(tgt.reduce_coords(vec))
    m = QMatrix(tgt.dim, src.dim)
    for cidx, col in enumerate(cols):
        for ridx, v in enumerate(col):
            m.entries[ridx][cidx] = v
    return m


def singular_vectors(family: SliceFamily, beta: tuple[int, ...]) -> list[AlgElement]:
    """Vectors of the beta-slice killed by every E_i, as F-word combinations,
    denominator-free and content-free with a sign convention."""
    uq = family.uq
    src = family.get(beta)
    if src.dim == 0:
        return []
    rows: list[list[RatFunc]] = []
    for i in range(1, uq.r + 1):
        m = e_action_matrix(family, beta, i)
        rows.extend(m.entries)
    if not rows:
        coords_list = [[RatFunc.one() if k == j else RatFunc.zero()
                        for k in range(src.dim)] for j in range(src.dim)]
    else:
        coords_list = kernel_basis(QMatrix.from_rows(rows, src.dim))
    out = []
    for coords in coords_list:
        coords = normalize_vector(coords)
        x: AlgElement = {}
        for w, c in zip(src.basis_words, coords):
            if not c.is_zero():
                x[(w, (0,) * uq.r, ())] = c
        out.append(x)
    return out


class LowestSliceFamily:
    """Weight slices of the mirrored (lowest-weight) module: E-words acting on
    a vector ksi with F_i ksi = 0 and K_j ksi = q^{-(alpha_j, lam)} ksi."""

    def __init__(self, uq: UqAlgebra, lam: Weight):
        self.uq = uq
        self.lam = lam
        self._spaces: dict[tuple[int, ...], NMinusWeightSpace] = {}

    def space(self, beta: tuple[int, ...]) -> NMinusWeightSpace:
        sp = self._spaces.get(beta)
        if sp is None:
            sp = NMinusWeightSpace(self.uq, beta)
            self._spaces[beta] = sp
        return sp

    def _k_scalar(self, kv: tuple[int, ...], eword_content: tuple[int, ...]) -> RatFunc:
        # weight of (E-word) ksi is -lam + sum of alphas in the word
        rs = self.uq.rs
        exp = 0
        for j in range(rs.rank):
            if kv[j]:
                wt_j = -rs.d[j] * self.lam.coords[j]
                wt_j += sum(eword_content[k] * rs.bform[j][k] for k in range(rs.rank))
                exp += kv[j] * wt_j
        return RatFunc.q_power(exp)

    def f_apply(self, i: int, word: tuple[int, ...]) -> dict[tuple[int, ...], RatFunc]:
        """F_i applied to (E-word) ksi, recursively via the commutator."""
        if not word:
            return {}
        uq = self.uq
        rs = uq.rs
        head, rest = word[0], word[1:]
        out: dict[tuple[int, ...], RatFunc] = {}
        for w2, c in self.f_apply(i, rest).items():
            key = (head,) + w2
            cur = out.get(key, RatFunc.zero()) + c
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur
        if head == i:
            # F_i E_i = E_i F_i - (K_i - K_i^{-1}) / (q^{d_i} - q^{-d_i})
            content = [0] * rs.rank
            for j in rest:
                content[j - 1] += 1
            kvp = tuple(int(k == i - 1) for k in range(rs.rank))
            kvm = tuple(-int(k == i - 1) for k in range(rs.rank))
            den = uq._efden[i]
            scal = (self._k_scalar(kvp, tuple(content))
                    - self._k_scalar(kvm, tuple(content))) / den
            cur = out.get(rest, RatFunc.zero()) - scal
            if cur.is_zero():
                out.pop(rest, None)
            else:
                out[rest] = cur
        return out

    def f_action_matrix(self, beta: tuple[int, ...], i: int) -> QMatrix:
        src = self.space(beta)
        tgt_beta = list(beta)
        tgt_beta[i - 1] -= 1
        if tgt_beta[i - 1] < 0:
            return QMatrix(0, src.dim)
        tgt = self.space(tuple(tgt_beta))
        m = QMatrix(tgt.dim, src.dim)
        for cidx, u in enumerate(src.basis_words):
            col = tgt.reduce_coords(self.f_apply(i, u))
            for ridx, v in enumerate(col):
                m.entries[ridx][cidx] = v
        return m

    def annihilated_by_all_f(self, beta: tuple[int, ...]) -> list[list[RatFunc]]:
        src = self.space(beta)
        if src.dim == 0:
            return []
        rows: list[list[RatFunc]] = []
        for i in range(1, self.uq.r + 1):
            rows.extend(self.f_action_matrix(beta, i).entries)
        if not rows:
            return [[RatFunc.one()]] if src.dim == 1 else []
        return [normalize_vector(v) for v in kernel_basis(QMatrix.from_rows(rows, src.dim))]

    def coords_of(self, x: AlgElement, beta: tuple[int, ...]) -> list[RatFunc]:
        """Coordinates of a pure E-word element in the beta-slice basis."""
        by_word: dict[tuple[int, ...], RatFunc] = {}
        for (fw, kv, ew), c in x.items():
            assert not fw and all(e == 0 for e in kv)
            by_word[ew] = by_word.get(ew, RatFunc.zero()) + c
        return self.space(beta).reduce_coords(by_word)


def arrow_offset(G, a) -> tuple[int, ...]:
    """Content of the intertwiner for an arrow: source dot-weight minus
    target dot-weight in root coordinates (for mu = 0)."""
    return dot_offset(G, a.source, a.target, Weight((0,) * G.P.rs.rank))


def dot_offset(G, w_short, w_long, mu: Weight) -> tuple[int, ...]:
    """Root coordinates of w_short.mu - w_long.mu (nonnegative when
    w_short is below w_long in the Bruhat order)."""
    rs = G.P.rs
    d = G.W.shifted_act(w_short, mu) - G.W.shifted_act(w_long, mu)
    return rs.weight_root_coords_int(d)


class StandardMapFamily:
    """Intertwiners y for every arrow of a Bruhat graph, scaled so both
    composites agree exactly around every square, with the sign assignment
    carried separately."""

    def __init__(self, G, mu: Weight | None = None, uq: UqAlgebra | None = None):
        self.G = G
        rs = G.P.rs
        self.mu = mu if mu is not None else Weight((0,) * rs.rank)
        self.uq = uq if uq is not None else UqAlgebra(rs)
        self.families: dict[tuple[int, ...], SliceFamily] = {}
        self.raw: dict[tuple, AlgElement] = {}
        self.scaled: dict[tuple, AlgElement] = {}
        self._solve_arrows()
        self._normalize_squares()

    def _family(self, lam: Weight) -> SliceFamily:
        key = lam.coords
        fam = self.families.get(key)
        if fam is None:
            fam = SliceFamily(self.uq, lam, self.G.P.S)
            self.families[key] = fam
        return fam

    def _solve_arrows(self) -> None:
        for a in self.G.arrows:
            lam = self.G.W.shifted_act(a.source, self.mu)
            beta = dot_offset(self.G, a.source, a.target, self.mu)
            fam = self._family(lam)
            sv = singular_vectors(fam, beta)
            if len(sv) != 1:
                raise AssertionError(
                    "singular space at arrow %s -> %s has dimension %d"
                    % (a.source, a.target, len(sv)))
            self.raw[(a.source.matrix, a.target.matrix)] = sv[0]

    def _key(self, a) -> tuple:
        return (a.source.matrix, a.target.matrix)

    def _normalize_squares(self) -> None:
        uq = self.uq
        scale: dict[tuple, RatFunc] = {}
        # spanning tree over the arrow set: fix arrows from a BFS tree to 1,
        # then force equality square by square
        for a in self.G.arrows:
            scale[self._key(a)] = RatFunc.one()
        squares = list(self.G.squares)
        # BFS spanning tree over the coset graph; tree arrows keep scale 1
        fixed: set[tuple] = set()
        adj: dict[tuple, list] = {}
        for a in self.G.arrows:
            adj.setdefault(a.source.matrix, []).append(a)
            adj.setdefault(a.target.matrix, []).append(a)
        visited = set()
        if self.G.cosets:
            start = self.G.cosets[0].matrix
            visited.add(start)
            queue = [start]
            while queue:
                v = queue.pop(0)
                for a in adj.get(v, []):
                    other = a.target.matrix if a.source.matrix == v else a.source.matrix
                    if other not in visited:
                        visited.add(other)
                        fixed.add(self._key(a))
                        queue.append(other)
        changed = True
        # iterate: any square with exactly one unfixed arrow determines it
        while changed:
            changed = False
            for (w1, w2, w3, w4) in squares:
                keys = [(w1.matrix, w2.matrix), (w2.matrix, w4.matrix),
                        (w1.matrix, w3.matrix), (w3.matrix, w4.matrix)]
                unfixed = [k for k in keys if k not in fixed]
                if len(unfixed) == 0 or len(unfixed) > 1:
                    continue
                c = self._square_ratio(w1, w2, w3, w4, scale)
                k = unfixed[0]
                # composite(w1->w2->w4) = c * composite(w1->w3->w4) currently;
                # adjust the unfixed arrow to make them equal
                if k in (keys[0], keys[1]):
                    scale[k] = scale[k] / c
                else:
                    scale[k] = scale[k] * c
                fixed.add(k)
                changed = True
        for a in self.G.arrows:
            k = self._key(a)
            self.scaled[k] = {nw: c * scale[k] for nw, c in self.raw[k].items()}
            fixed.add(k)
        # final verification: both composites of every square agree exactly
        for (w1, w2, w3, w4) in squares:
            r = self._square_ratio_scaled(w1, w2, w3, w4)
            assert r == RatFunc.one(), "square normalization failed"

    def _composite(self, y_first: AlgElement, y_second: AlgElement,
                   w1, w4) -> list[RatFunc]:
        # map V^{M(w4.mu)} -> V^{M(w1.mu)}: generator goes to
        # y_second * y_first applied to the w1 highest weight vector
        uq = self.uq
        prod = uq.multiply(y_second, y_first)
        lam = self.G.W.shifted_act(w1, self.mu)
        beta = dot_offset(self.G, w1, w4, self.mu)
        fam = self._family(lam)
        return fam.get(beta).reduce_element(prod)

    def _square_ratio(self, w1, w2, w3, w4, scale) -> RatFunc:
        k12 = (w1.matrix, w2.matrix)
        k24 = (w2.matrix, w4.matrix)
        k13 = (w1.matrix, w3.matrix)
        k34 = (w3.matrix, w4.matrix)
        c1 = self._composite(self.raw[k12], self.raw[k24], w1, w4)
        c2 = self._composite(self.raw[k13], self.raw[k34], w1, w4)
        s1 = scale[k12] * scale[k24]
        s2 = scale[k13] * scale[k34]
        return _proportionality(c1, c2) * s1 / s2

    def _square_ratio_scaled(self, w1, w2, w3, w4) -> RatFunc:
        c1 = self._composite(self.scaled[(w1.matrix, w2.matrix)],
                             self.scaled[(w2.matrix, w4.matrix)], w1, w4)
        c2 = self._composite(self.scaled[(w1.matrix, w3.matrix)],
                             self.scaled[(w3.matrix, w4.matrix)], w1, w4)
        return _proportionality(c1, c2)

    def y(self, source, target) -> AlgElement:
        """Scaled intertwiner for the arrow source -> target (no sign)."""
        return self.scaled[(source.matrix, target.matrix)]

    def y_signed(self, source, target) -> AlgElement:
        s = self.G.sign(source, target)
        y = self.y(source, target)
        return y if s == 1 else {nw: -c for nw, c in y.items()}


def _proportionality(a: list[RatFunc], b: list[RatFunc]) -> RatFunc:
    """The scalar c with a = c * b for proportional nonzero vectors."""
    ratio = None
    for x, y in zip(a, b):
        if x.is_zero() != y.is_zero():
            raise AssertionError("vectors are not proportional")
        if not y.is_zero():
            r = x / y
            if ratio is None:
                ratio = r
            elif ratio != r:
                raise AssertionError("vectors are not proportional")
    if ratio is None:
        raise AssertionError("zero composite in a square")
    return ratio
