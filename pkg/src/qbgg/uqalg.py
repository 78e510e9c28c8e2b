"""Normal-form arithmetic in the quantized enveloping algebra.

Elements are finite sums of normal monomials F-word * K-monomial * E-word
with coefficients in Q(q).  The defining relations are

    K_i E_j = q^{(alpha_i, alpha_j)} E_j K_i
    K_i F_j = q^{-(alpha_i, alpha_j)} F_j K_i
    E_i F_j - F_j E_i = delta_ij (K_i - K_i^{-1}) / (q^{d_i} - q^{-d_i})

The quantum Serre relations are not used as rewriting rules; weight
components of the lower/upper triangular parts are handled as quotients of
free word spaces in wordspace.py style helpers below.
"""
from __future__ import annotations

from .cartan import RootSystem
from .qfield import Laurent, RatFunc, qbinomial

# normal monomial: (F indices, K exponent vector, E indices), all 1-based indices
NormalWord = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
AlgElement = dict[NormalWord, RatFunc]


def add_into(acc: AlgElement, other: AlgElement, scale: RatFunc | None = None) -> None:
    for nw, c in other.items():
        v = c if scale is None else c * scale
        cur = acc.get(nw)
        s = v if cur is None else cur + v
        if s.is_zero():
            acc.pop(nw, None)
        else:
            acc[nw] = s


def scaled(x: AlgElement, c: RatFunc) -> AlgElement:
    if c.is_zero():
        return {}
    return {nw: v * c for nw, v in x.items()}


class UqAlgebra:
    """Normal-form engine for the quantized enveloping algebra of a root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.r = rs.rank
        self._zero_k = (0,) * self.r
        self._mul_letter_cache: dict[tuple[NormalWord, tuple], AlgElement] = {}
        self._word_cache: dict[tuple[tuple, ...], AlgElement] = {}
        # (alpha_i, alpha_j) as integers
        self._aa = rs.bform
        # denominators (q^{d_i} - q^{-d_i}) for the E-F commutator
        self._efden = {i: RatFunc(Laurent({rs.d[i - 1]: 1, -rs.d[i - 1]: -1}), _normalized=True)
                       for i in range(1, self.r + 1)}

    # -- constructors -----------------------------------------------------

    def one(self) -> AlgElement:
        return {((), self._zero_k, ()): RatFunc.one()}

    def F(self, i: int) -> AlgElement:
        return {(((i,), self._zero_k, ())): RatFunc.one()}

    def E(self, i: int) -> AlgElement:
        return {(((), self._zero_k, (i,))): RatFunc.one()}

    def K(self, i: int, e: int = 1) -> AlgElement:
        kv = [0] * self.r
        kv[i - 1] = e
        return {(((), tuple(kv), ())): RatFunc.one()}

    # -- multiplication ---------------------------------------------------

    def _mul_letter(self, nw: NormalWord, letter: tuple) -> AlgElement:
        key = (nw, letter)
        out = self._mul_letter_cache.get(key)
        if out is not None:
            return out
        fw, kv, ew = nw
        kind = letter[0]
        if kind == "E":
            out = {(fw, kv, ew + (letter[1],)): RatFunc.one()}
        elif kind == "K":
            i, e = letter[1], letter[2]
            exp = -e * sum(self._aa[i - 1][j - 1] for j in ew)
            nkv = list(kv)
            nkv[i - 1] += e
            out = {(fw, tuple(nkv), ew): RatFunc.q_power(exp)}
        else:  # F
            j = letter[1]
            if not ew:
                exp = -sum(kv[i] * self._aa[i][j - 1] for i in range(self.r))
                out = {(fw + (j,), kv, ()): RatFunc.q_power(exp)}
            else:
                i = ew[-1]
                head = (fw, kv, ew[:-1])
                out = {}
                t1 = self._mul_letter(head, ("F", j))
                for nw2, c in t1.items():
                    f2, k2, e2 = nw2
                    add_into(out, {(f2, k2, e2 + (i,)): c})
                if i == j:
                    den = self._efden[i]
                    tp = self._mul_letter(head, ("K", i, 1))
                    tm = self._mul_letter(head, ("K", i, -1))
                    add_into(out, tp, RatFunc.one() / den)
                    add_into(out, tm, -(RatFunc.one() / den))
        self._mul_letter_cache[key] = out
        return out

    @staticmethod
    def letters_of(nw: NormalWord) -> list[tuple]:
        fw, kv, ew = nw
        out: list[tuple] = [("F", j) for j in fw]
        for i, e in enumerate(kv):
            if e:
                out.append(("K", i + 1, e))
        out.extend(("E", i) for i in ew)
        return out

    def mul_nw(self, a: NormalWord, b: NormalWord) -> AlgElement:
        out = {a: RatFunc.one()}
        for letter in self.letters_of(b):
            nxt: AlgElement = {}
            for nw, c in out.items():
                add_into(nxt, self._mul_letter(nw, letter), c)
            out = nxt
        return out

    def multiply(self, x: AlgElement, y: AlgElement) -> AlgElement:
        out: AlgElement = {}
        for nwx, cx in x.items():
            for nwy, cy in y.items():
                add_into(out, self.mul_nw(nwx, nwy), cx * cy)
        return out

    def multiply_all(self, parts: list[AlgElement]) -> AlgElement:
        out = self.one()
        for p in parts:
            out = self.multiply(out, p)
        return out

    def from_letters(self, letters: list[tuple], coeff: RatFunc | None = None) -> AlgElement:
        out = {((), self._zero_k, ()): coeff if coeff is not None else RatFunc.one()}
        for letter in letters:
            nxt: AlgElement = {}
            for nw, c in out.items():
                add_into(nxt, self._mul_letter(nw, letter), c)
            out = nxt
        return out

    def fword(self, word: tuple[int, ...]) -> AlgElement:
        return {(tuple(word), self._zero_k, ()): RatFunc.one()}

    # -- structure maps ---------------------------------------------------

    def weight_of(self, nw: NormalWord) -> tuple[int, ...]:
        """Root coordinates of the Q-weight (E letters count +, F letters -)."""
        out = [0] * self.r
        for j in nw[0]:
            out[j - 1] -= 1
        for i in nw[2]:
            out[i - 1] += 1
        return tuple(out)

    def counit(self, x: AlgElement) -> RatFunc:
        out = RatFunc.zero()
        for (fw, kv, ew), c in x.items():
            if not fw and not ew:
                out = out + c
        return out

    def eta(self, x: AlgElement) -> AlgElement:
        """Algebra isomorphism swapping E_i <-> F_i and inverting K_i."""
        out: AlgElement = {}
        for (fw, kv, ew), c in x.items():
            letters: list[tuple] = [("E", j) for j in fw]
            letters += [("K", i + 1, -e) for i, e in enumerate(kv) if e]
            letters += [("F", i) for i in ew]
            add_into(out, self.from_letters(letters), c)
        return out

    def antipode(self, x: AlgElement) -> AlgElement:
        """kappa: anti-homomorphism with kappa(E) = -EK^{-1}, kappa(F) = -KF,
        kappa(K) = K^{-1}."""
        out: AlgElement = {}
        for nw, c in x.items():
            letters = self.letters_of(nw)
            sign = 1
            mapped: list[tuple] = []
            for letter in reversed(letters):
                if letter[0] == "E":
                    i = letter[1]
                    mapped += [("E", i), ("K", i, -1)]
                    sign = -sign
                elif letter[0] == "F":
                    i = letter[1]
                    mapped += [("K", i, 1), ("F", i)]
                    sign = -sign
                else:
                    mapped.append(("K", letter[1], -letter[2]))
            add_into(out, self.from_letters(mapped), c * RatFunc.from_int(sign))
        return out

    def coproduct(self, x: AlgElement) -> dict[tuple[NormalWord, NormalWord], RatFunc]:
        """Two-fold coproduct, with Delta(E) = E x K + 1 x E,
        Delta(F) = F x 1 + K^{-1} x F, Delta(K) = K x K."""
        out: dict[tuple[NormalWord, NormalWord], RatFunc] = {}
        unit = ((), self._zero_k, ())
        for nw, c in x.items():
            cur: dict[tuple[NormalWord, NormalWord], RatFunc] = {(unit, unit): c}
            for letter in self.letters_of(nw):
                if letter[0] == "E":
                    i = letter[1]
                    parts = [(("E", i), ("K", i, 1)), (None, ("E", i))]
                elif letter[0] == "F":
                    i = letter[1]
                    parts = [(("F", i), None), (("K", i, -1), ("F", i))]
                else:
                    parts = [(letter, letter)]
                nxt: dict[tuple[NormalWord, NormalWord], RatFunc] = {}
                for (a, b), cc in cur.items():
                    for la, lb in parts:
                        ea = {a: RatFunc.one()} if la is None else self._mul_letter(a, la)
                        for nwa, ca in ea.items():
                            eb = {b: RatFunc.one()} if lb is None else self._mul_letter(b, lb)
                            for nwb, cb in eb.items():
                                key = (nwa, nwb)
                                v = nxt.get(key, RatFunc.zero()) + cc * ca * cb
                                if v.is_zero():
                                    nxt.pop(key, None)
                                else:
                                    nxt[key] = v
                cur = nxt
            for key, v in cur.items():
                tot = out.get(key, RatFunc.zero()) + v
                if tot.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = tot
        return out

    def adjoint(self, u: AlgElement, x: AlgElement) -> AlgElement:
        """(ad u) x = sum u_(1) x kappa(u_(2))."""
        out: AlgElement = {}
        for (nw1, nw2), c in self.coproduct(u).items():
            kap = self.antipode({nw2: RatFunc.one()})
            term = self.multiply(self.multiply({nw1: RatFunc.one()}, x), kap)
            add_into(out, term, c)
        return out

    # -- Serre relations and weight spaces of the triangular parts --------

    def serre_fword_elements(self, i: int, j: int) -> dict[tuple[int, ...], RatFunc]:
        """Coefficients of the F-side quantum Serre relation for i != j."""
        a = self.rs.cartan[i - 1][j - 1]
        n = 1 - a
        di = self.rs.d[i - 1]
        out: dict[tuple[int, ...], RatFunc] = {}
        for k in range(n + 1):
            word = (i,) * (n - k) + (j,) + (i,) * k
            coef = qbinomial(n, k, di)
            if k % 2:
                coef = -coef
            cur = out.get(word, RatFunc.zero()) + coef
            if not cur.is_zero():
                out[word] = cur
        return out


class NMinusWeightSpace:
    """The weight-beta component of the lower triangular part as a quotient of
    the free span of F-words by the Serre ideal slice."""

    def __init__(self, uq: UqAlgebra, beta: tuple[int, ...], check_dim: bool = True):
        self.uq = uq
        self.beta = beta
        rs = uq.rs
        self.words = sorted(_words_of_content(beta))
        self.index = {w: k for k, w in enumerate(self.words)}
        rel_rows: list[list[RatFunc]] = []
        n = len(self.words)
        r = rs.rank
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if i == j:
                    continue
                serre = uq.serre_fword_elements(i, j)
                scontent = [0] * r
                some = next(iter(serre))
                for idx in some:
                    scontent[idx - 1] += 1
                rest = tuple(b - c for b, c in zip(beta, scontent))
                if any(c < 0 for c in rest):
                    continue
                for left_content in _split_contents(rest):
                    right_content = tuple(a - b for a, b in zip(rest, left_content))
                    for left in _words_of_content(left_content):
                        for right in _words_of_content(right_content):
                            row = [RatFunc.zero()] * n
                            for sword, c in serre.items():
                                row[self.index[left + sword + right]] = c
                            rel_rows.append(row)
        self.rel_rows = rel_rows
        self._ech, self._piv = _echelon_ratfunc(rel_rows, n)
        piv_set = set(self._piv)
        self.basis_words = [w for k, w in enumerate(self.words) if k not in piv_set]
        self.basis_index = {w: k for k, w in enumerate(self.basis_words)}
        if check_dim:
            from .reps import kostant_partition
            expect = kostant_partition(rs, beta)
            assert len(self.basis_words) == expect, (
                "weight space dimension %d != partition count %d at %s"
                % (len(self.basis_words), expect, beta))

    @property
    def dim(self) -> int:
        return len(self.basis_words)

    def reduce_coords(self, vec_by_word: dict[tuple[int, ...], RatFunc]) -> list[RatFunc]:
        """Reduce a free-word vector modulo the relation span; coordinates in
        the basis words."""
        vec = [RatFunc.zero()] * len(self.words)
        for w, c in vec_by_word.items():
            vec[self.index[w]] = vec[self.index[w]] + c
        for row, pc in zip(self._ech, self._piv):
            if not vec[pc].is_zero():
                f = vec[pc] / row[pc]
                for j in range(pc, len(self.words)):
                    if not row[j].is_zero():
                        vec[j] = vec[j] - f * row[j]
        return [vec[self.index[w]] for w in self.basis_words]

    def reduce_element(self, x: AlgElement) -> list[RatFunc]:
        """Reduce an element supported on pure F-words of weight beta."""
        by_word: dict[tuple[int, ...], RatFunc] = {}
        for (fw, kv, ew), c in x.items():
            assert not ew and all(e == 0 for e in kv), "element is not in the F-part"
            by_word[fw] = by_word.get(fw, RatFunc.zero()) + c
        return self.reduce_coords(by_word)


def _words_of_content(content: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All words using letter i exactly content[i-1] times."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: list[int], acc: tuple[int, ...]) -> None:
        if all(c == 0 for c in remaining):
            out.append(acc)
            return
        for i, c in enumerate(remaining):
            if c:
                remaining[i] -= 1
                rec(remaining, acc + (i + 1,))
                remaining[i] += 1

    rec(list(content), ())
    return out


def _split_contents(content: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All componentwise splittings low <= content."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, acc: tuple[int, ...]) -> None:
        if pos == len(content):
            out.append(acc)
            return
        for c in range(content[pos] + 1):
            rec(pos + 1, acc + (c,))

    rec(0, ())
    return out


def _echelon_ratfunc(rows: list[list[RatFunc]], cols: int):
    """Row echelon over Q(q) (first nonzero pivot), returning (rows, pivots)."""
    ech: list[list[RatFunc]] = []
    piv: list[int] = []
    for row in rows:
        vec = list(row)
        for erow, pc in zip(ech, piv):
            if not vec[pc].is_zero():
                f = vec[pc] / erow[pc]
                for j in range(len(vec)):
                    if not erow[j].is_zero():
                        vec[j] = vec[j] - f * erow[j]
        pc = next((j for j in range(cols) if not vec[j].is_zero()), None)
        if pc is not None:
            ech.append(vec)
            piv.append(pc)
    order = sorted(range(len(piv)), key=lambda k: piv[k])
    return [ech[k] for k in order], [piv[k] for k in order]


class _WeightSpaceCache:
    def __init__(self, uq: UqAlgebra):
        self.uq = uq
        self._spaces: dict[tuple[int, ...], NMinusWeightSpace] = {}

    def get(self, beta: tuple[int, ...]) -> NMinusWeightSpace:
        ws = self._spaces.get(beta)
        if ws is None:
            ws = NMinusWeightSpace(self.uq, beta)
            self._spaces[beta] = ws
        return ws


def _canonical_coords(uq: UqAlgebra, cache: _WeightSpaceCache, x: AlgElement,
                      side: str) -> tuple[tuple[int, ...], list[RatFunc]] | None:
    """Serre-reduced coordinates of a homogeneous triangular element.

    Side "F": element must be supported on pure F-monomials.  Side "E":
    element must be of the form (E-word combination) * K_{-beta}, the
    K-dressing carried by generators of the form E_i K_i^{-1}.
    Returns (beta, coords) or None when the element reduces to zero.
    """
    if not x:
        return None
    by_word: dict[tuple[int, ...], RatFunc] = {}
    beta = None
    for (fw, kv, ew), c in x.items():
        if side == "F":
            if ew or any(kv):
                raise AssertionError("saturation left the lower triangular part")
            word = fw
            content = [0] * uq.r
            for j in fw:
                content[j - 1] += 1
        else:
            if fw:
                raise AssertionError("saturation left the upper triangular part")
            word = ew
            content = [0] * uq.r
            for j in ew:
                content[j - 1] += 1
            if tuple(kv) != tuple(-c2 for c2 in content):
                raise AssertionError("unexpected K-dressing in saturation")
        if beta is None:
            beta = tuple(content)
        elif beta != tuple(content):
            raise AssertionError("saturation produced a non-homogeneous element")
        by_word[word] = by_word.get(word, RatFunc.zero()) + c
    ws = cache.get(beta)
    coords = ws.reduce_coords(by_word)
    if all(c.is_zero() for c in coords):
        return None
    return beta, coords


def tangent_space(uq: UqAlgebra, S: frozenset[int] | set[int], s: int,
                  side: str = "F", max_dim: int = 500) -> list[AlgElement]:
    """Saturate the span of (ad of the Levi generators) applied to F_s
    (side "F") or to E_s K_s^{-1} (side "E").

    Elements are canonicalized modulo Serre relations per weight component,
    which makes the saturation terminate.
    """
    if side == "F":
        seed = uq.F(s)
    elif side == "E":
        seed = uq.multiply(uq.E(s), uq.K(s, -1))
    else:
        raise ValueError("side must be 'F' or 'E'")
    gens = []
    for i in sorted(S):
        gens.append(uq.E(i))
        gens.append(uq.F(i))
    cache = _WeightSpaceCache(uq)
    span: list[AlgElement] = []
    ech_rows: list[tuple[dict, object]] = []  # (coord dict keyed (beta, idx), lead key)

    def insert(x: AlgElement) -> bool:
        can = _canonical_coords(uq, cache, x, side)
        if can is None:
            return False
        beta, coords = can
        vec = {(beta, k): c for k, c in enumerate(coords) if not c.is_zero()}
        for row, lead in ech_rows:
            if lead in vec:
                f = vec[lead] / row[lead]
                for key, c in row.items():
                    cur = vec.get(key, RatFunc.zero()) - f * c
                    if cur.is_zero():
                        vec.pop(key, None)
                    else:
                        vec[key] = cur
        if not vec:
            return False
        lead = sorted(vec)[0]
        ech_rows.append((vec, lead))
        span.append(x)
        return True

    frontier = [seed]
    insert(seed)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = uq.adjoint(g, x)
                if y and insert(y):
                    nxt.append(y)
                    if len(span) > max_dim:
                        raise AssertionError("tangent space saturation exceeded cap")
        frontier = nxt
    return span
