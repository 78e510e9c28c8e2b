"""The parabolic resolution complex and the induced-module double complex.

The resolution terms are parabolic highest-weight modules indexed by minimal
coset representatives; differentials act by right multiplication with the
normalized intertwiners.  All identities (squared differential, slicewise
exactness, anticommutation of the double complex) are certified by exact
linear algebra on weight slices.
"""
from __future__ import annotations

from .cartan import ParabolicData, RootSystem, Weight
from .qfield import QMatrix, RatFunc, rank
from .reps import levi_irrep
from .uqalg import AlgElement, UqAlgebra, add_into
from .verma import (SliceFamily, StandardMapFamily, dot_offset)


class TruncationError(Exception):
    """A verification window was too small to contain all needed relations."""


def _enumerate_offsets(rs: RootSystem, max_height: int) -> list[tuple[int, ...]]:
    """All nonzero vectors in Q^+ of height <= max_height, plus zero."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, left: int, acc: tuple[int, ...]) -> None:
        if pos == rs.rank:
            out.append(acc)
            return
        for c in range(left + 1):
            rec(pos + 1, left - c, acc + (c,))

    rec(0, max_height, ())
    return sorted(out, key=lambda b: (sum(b), b))


class BGGComplex:
    """The resolution of the simple module with highest weight mu."""

    def __init__(self, G, mu: Weight | None = None, uq: UqAlgebra | None = None):
        self.G = G
        rs = G.P.rs
        self.rs = rs
        self.mu = mu if mu is not None else Weight((0,) * rs.rank)
        self.uq = uq if uq is not None else UqAlgebra(rs)
        self.maps = StandardMapFamily(G, self.mu, self.uq)

    def level_offsets(self, beta: tuple[int, ...]) -> list[list[tuple[tuple[int, ...], object] | None]]:
        """For the weight mu - beta: per level, per coset, the module offset
        (or None when the slice is empty)."""
        rs = self.rs
        nu = self.mu - rs.root_to_weight(beta)
        out = []
        for lvl in self.G.levels:
            row = []
            for w in lvl:
                lam = self.G.W.shifted_act(w, self.mu)
                try:
                    off = rs.weight_root_coords_int(lam - nu)
                except ValueError:
                    row.append(None)
                    continue
                row.append(off if all(c >= 0 for c in off) else None)
            out.append(row)
        return out

    def slice_dims(self, beta: tuple[int, ...]) -> list[int]:
        offs = self.level_offsets(beta)
        dims = []
        for j, lvl in enumerate(self.G.levels):
            total = 0
            for w, off in zip(lvl, offs[j]):
                if off is not None:
                    fam = self.maps._family(self.G.W.shifted_act(w, self.mu))
                    total += fam.get(off).dim
            dims.append(total)
        return dims

    def differential_matrix(self, j: int, beta: tuple[int, ...]) -> QMatrix:
        """Matrix of the level-j differential C_j -> C_{j-1} on the mu - beta
        weight slice."""
        G = self.G
        offs = self.level_offsets(beta)
        src_slices = []
        for w, off in zip(G.levels[j], offs[j]):
            fam = self.maps._family(G.W.shifted_act(w, self.mu))
            src_slices.append((w, fam.get(off) if off is not None else None))
        tgt_slices = []
        for w, off in zip(G.levels[j - 1], offs[j - 1]):
            fam = self.maps._family(G.W.shifted_act(w, self.mu))
            tgt_slices.append((w, fam.get(off) if off is not None else None))
        src_dim = sum(s.dim for _, s in src_slices if s is not None)
        tgt_dim = sum(s.dim for _, s in tgt_slices if s is not None)
        m = QMatrix(tgt_dim, src_dim)
        col0 = 0
        for w_long, src in src_slices:
            if src is None:
                continue
            row0 = 0
            for w_short, tgt in tgt_slices:
                if tgt is None:
                    continue
                key = (w_short.matrix, w_long.matrix)
                if key in self.maps.scaled:
                    y = self.maps.y_signed(w_short, w_long)
                    for cidx, u in enumerate(src.basis_words):
                        prod = self.uq.multiply(self.uq.fword(u), y)
                        coords = tgt.reduce_element(prod)
                        for ridx, v in enumerate(coords):
                            if not v.is_zero():
                                m.entries[row0 + ridx][col0 + cidx] = v
                row0 += tgt.dim
            col0 += src.dim
        return m

    def verify_squared_zero(self) -> dict:
        """The composite of consecutive differentials vanishes, checked as
        algebra identities against each target module."""
        G = self.G
        checks = []
        ok = True
        for j in range(2, len(G.levels)):
            for w_a in G.levels[j]:
                for w_c in G.levels[j - 2]:
                    acc: AlgElement = {}
                    found = False
                    for w_b in G.levels[j - 1]:
                        k1 = (w_c.matrix, w_b.matrix)
                        k2 = (w_b.matrix, w_a.matrix)
                        if k1 in self.maps.scaled and k2 in self.maps.scaled:
                            found = True
                            term = self.uq.multiply(self.maps.y_signed(w_b, w_a),
                                                    self.maps.y_signed(w_c, w_b))
                            add_into(acc, term)
                    if not found:
                        continue
                    lam = G.W.shifted_act(w_c, self.mu)
                    beta = dot_offset(G, w_c, w_a, self.mu)
                    fam = self.maps._family(lam)
                    coords = fam.get(beta).reduce_element(acc)
                    is_zero = all(c.is_zero() for c in coords)
                    ok = ok and is_zero
                    checks.append({"from": str(w_a), "to": str(w_c), "zero": is_zero})
        return {"ok": ok, "composites": checks}

    def verify_exactness(self, max_height: int, assist=None) -> dict:
        """Slicewise rank-exactness against the simple module with highest
        weight mu, for all offsets up to the given height."""
        rs = self.rs
        P_full = ParabolicData(rs, frozenset(range(1, rs.rank + 1)))
        full_char, _ = levi_irrep(P_full, self.mu)
        ok = True
        records = []
        for beta in _enumerate_offsets(rs, max_height):
            nu = self.mu - rs.root_to_weight(beta)
            m_nu = full_char.get(nu, 0)
            dims = self.slice_dims(beta)
            top = len(dims) - 1
            euler = sum((-1) ** j * d for j, d in enumerate(dims))
            euler_ok = euler == m_nu
            ranks = []
            for j in range(1, len(dims)):
                if dims[j] == 0 and dims[j - 1] == 0:
                    ranks.append(0)
                    continue
                ranks.append(rank(self.differential_matrix(j, beta), assist))
            # exactness: at top ker = 0; interior ker phi_j = im phi_{j+1};
            # at level 0 the augmentation absorbs m_nu dimensions
            good = True
            if dims:
                if len(dims) > 1:
                    good = good and (ranks[top - 1] == dims[top])
                    for j in range(1, top):
                        good = good and (dims[j] - ranks[j - 1] == ranks[j])
                    good = good and (ranks[0] == dims[0] - m_nu)
                else:
                    good = dims[0] == m_nu
            ok = ok and good and euler_ok
            records.append({"offset": list(beta), "dims": dims, "ranks": ranks,
                            "target_mult": m_nu, "euler_ok": euler_ok, "exact": good})
        return {"ok": ok, "max_height": max_height, "slices": records}


# ---------------------------------------------------------------------------
# induced modules with a Levi tensor fiber, and the double complex


class LeviModuleData:
    """Explicit matrices for a finite-dimensional simple Levi module."""

    def __init__(self, uq: UqAlgebra, P: ParabolicData, lam: Weight):
        self.uq = uq
        self.P = P
        self.lam = lam
        rs = uq.rs
        ch, dim = levi_irrep(P, lam)
        self.dim = dim
        fam = SliceFamily(uq, lam, P.S)
        offsets = []
        for wt in ch:
            off = rs.weight_root_coords_int(lam - wt)
            offsets.append(off)
        offsets.sort(key=lambda b: (sum(b), b))
        self.basis: list[tuple[tuple[int, ...], int]] = []
        self.slices = {}
        for off in offsets:
            sl = fam.get(off)
            self.slices[off] = sl
            for k in range(sl.dim):
                self.basis.append((off, k))
        assert len(self.basis) == dim
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.weights = [lam - rs.root_to_weight(off) for off, _ in self.basis]
        self._fam = fam

    def matrix_F(self, i: int) -> list[list[RatFunc]]:
        rs = self.uq.rs
        n = self.dim
        m = [[RatFunc.zero()] * n for _ in range(n)]
        for cidx, (off, k) in enumerate(self.basis):
            src = self.slices[off]
            word = src.basis_words[k]
            noff = list(off)
            noff[i - 1] += 1
            noff = tuple(noff)
            if noff not in self.slices:
                continue
            tgt = self.slices[noff]
            coords = tgt.reduce_coords({(i,) + word: RatFunc.one()})
            for ridx, v in enumerate(coords):
                if not v.is_zero():
                    m[self.index[(noff, ridx)]][cidx] = v
        return m

    def matrix_E(self, i: int) -> list[list[RatFunc]]:
        from .verma import evaluate_on_highest
        n = self.dim
        m = [[RatFunc.zero()] * n for _ in range(n)]
        ei = self.uq.E(i)
        for cidx, (off, k) in enumerate(self.basis):
            src = self.slices[off]
            word = src.basis_words[k]
            noff = list(off)
            noff[i - 1] -= 1
            noff = tuple(noff)
            if noff not in self.slices:
                continue
            tgt = self.slices[noff]
            prod = self.uq.multiply(ei, self.uq.fword(word))
            vec = evaluate_on_highest(self.uq, self.lam, prod)
            coords = tgt.reduce_coords(vec)
            for ridx, v in enumerate(coords):
                if not v.is_zero():
                    m[self.index[(noff, ridx)]][cidx] = v
        return m

    def k_exponents(self, j: int) -> list[int]:
        """Exponent of the K_j eigenvalue q^{(alpha_j, wt)} per basis vector."""
        rs = self.uq.rs
        return [rs.d[j - 1] * wt.coords[j - 1] for wt in self.weights]


class TensorFiber:
    """M(mu) tensor the dual of M(nu) with explicit generator actions and a
    cyclic lift from the vector v_mu (x) ksi_{-nu}."""

    def __init__(self, uq: UqAlgebra, P: ParabolicData, mu: Weight, nu: Weight):
        self.uq = uq
        self.P = P
        self.mu_data = LeviModuleData(uq, P, mu)
        self.nu_data = LeviModuleData(uq, P, nu)
        self.dim = self.mu_data.dim * self.nu_data.dim
        rs = uq.rs
        # tensor basis index: p * nu_dim + r
        self.weights: list[Weight] = []
        for p in range(self.mu_data.dim):
            for r in range(self.nu_data.dim):
                self.weights.append(self.mu_data.weights[p] - self.nu_data.weights[r])
        # generator of the fiber: highest of M(mu) (x) dual of highest of M(nu)
        p0 = self.mu_data.index[((0,) * rs.rank, 0)]
        r0 = self.nu_data.index[((0,) * rs.rank, 0)]
        self.gen_index = p0 * self.nu_data.dim + r0
        self._gen_mats: dict[tuple, list[list[RatFunc]]] = {}
        self._lift: list[AlgElement] | None = None

    def _dual_matrix(self, letter: tuple) -> list[list[RatFunc]]:
        """Action on the dual module: transpose of the antipode image."""
        nd = self.nu_data
        n = nd.dim
        if letter[0] == "F":
            i = letter[1]
            # kappa(F_i) = -K_i F_i
            base = nd.matrix_F(i)
            kexp = nd.k_exponents(i)
            out = [[RatFunc.zero()] * n for _ in range(n)]
            for rr in range(n):
                for cc in range(n):
                    v = base[rr][cc]
                    if not v.is_zero():
                        # transpose of -K_i F_i
                        out[cc][rr] = -(RatFunc.q_power(kexp[rr]) * v)
            return out
        if letter[0] == "E":
            i = letter[1]
            # kappa(E_i) = -E_i K_i^{-1}
            base = nd.matrix_E(i)
            kexp = nd.k_exponents(i)
            out = [[RatFunc.zero()] * n for _ in range(n)]
            for rr in range(n):
                for cc in range(n):
                    v = base[rr][cc]
                    if not v.is_zero():
                        out[cc][rr] = -(v * RatFunc.q_power(-kexp[cc]))
            return out
        raise ValueError(letter)

    def generator_matrix(self, letter: tuple) -> list[list[RatFunc]]:
        """Matrix of F_i or E_i on the tensor fiber via the coproduct."""
        key = letter
        m = self._gen_mats.get(key)
        if m is not None:
            return m
        md, nd = self.mu_data, self.nu_data
        rs = self.uq.rs
        n = self.dim
        out = [[RatFunc.zero()] * n for _ in range(n)]
        if letter[0] == "F":
            i = letter[1]
            mf = md.matrix_F(i)
            kinv = md.k_exponents(i)
            df = self._dual_matrix(("F", i))
            # Delta(F) = F (x) 1 + K^{-1} (x) F
            for p in range(md.dim):
                for p2 in range(md.dim):
                    v = mf[p2][p]
                    if not v.is_zero():
                        for r in range(nd.dim):
                            out[p2 * nd.dim + r][p * nd.dim + r] = v
            for p in range(md.dim):
                scal = RatFunc.q_power(-kinv[p])
                for r in range(nd.dim):
                    for r2 in range(nd.dim):
                        v = df[r2][r]
                        if not v.is_zero():
                            cur = out[p * nd.dim + r2][p * nd.dim + r]
                            out[p * nd.dim + r2][p * nd.dim + r] = cur + scal * v
        elif letter[0] == "E":
            i = letter[1]
            me = md.matrix_E(i)
            de = self._dual_matrix(("E", i))
            # K exponents on the dual factor: -(exponent on M(nu))
            dk = [-x for x in nd.k_exponents(i)]
            # Delta(E) = E (x) K + 1 (x) E
            for p in range(md.dim):
                for p2 in range(md.dim):
                    v = me[p2][p]
                    if not v.is_zero():
                        for r in range(nd.dim):
                            out[p2 * nd.dim + r][p * nd.dim + r] = v * RatFunc.q_power(dk[r])
            for p in range(md.dim):
                for r in range(nd.dim):
                    for r2 in range(nd.dim):
                        v = de[r2][r]
                        if not v.is_zero():
                            cur = out[p * nd.dim + r2][p * nd.dim + r]
                            out[p * nd.dim + r2][p * nd.dim + r] = cur + v
        else:
            raise ValueError(letter)
        self._gen_mats[key] = out
        return out

    def k_exponent(self, j: int, idx: int) -> int:
        rs = self.uq.rs
        return rs.d[j - 1] * self.weights[idx].coords[j - 1]

    def cyclic_lift(self) -> list[AlgElement]:
        """For each basis vector an element of the Levi subalgebra carrying
        the generator to it."""
        if self._lift is not None:
            return self._lift
        uq = self.uq
        n = self.dim
        letters = []
        for i in sorted(self.P.S):
            letters.append(("F", i))
            letters.append(("E", i))
        # echelonized reached vectors with their algebra expressions
        basis_vecs: list[list[RatFunc]] = []
        basis_elts: list[AlgElement] = []
        piv: list[int] = []

        def insert(vec: list[RatFunc], elt: AlgElement) -> bool:
            vec = list(vec)
            elt = dict(elt)
            for bv, be, pc in zip(basis_vecs, basis_elts, piv):
                if not vec[pc].is_zero():
                    f = vec[pc] / bv[pc]
                    for k in range(n):
                        if not bv[k].is_zero():
                            vec[k] = vec[k] - f * bv[k]
                    add_into(elt, be, -f)
            pc = next((k for k in range(n) if not vec[k].is_zero()), None)
            if pc is None:
                return False
            basis_vecs.append(vec)
            basis_elts.append(elt)
            piv.append(pc)
            return True

        gen_vec = [RatFunc.zero()] * n
        gen_vec[self.gen_index] = RatFunc.one()
        insert(gen_vec, self.uq.one())
        frontier = [(gen_vec, self.uq.one())]
        while frontier and len(basis_vecs) < n:
            nxt = []
            for vec, elt in frontier:
                for letter in letters:
                    mat = self.generator_matrix(letter)
                    nv = [RatFunc.zero()] * n
                    for c in range(n):
                        if not vec[c].is_zero():
                            for r in range(n):
                                if not mat[r][c].is_zero():
                                    nv[r] = nv[r] + mat[r][c] * vec[c]
                    gelt = uq.F(letter[1]) if letter[0] == "F" else uq.E(letter[1])
                    nelt = uq.multiply(gelt, elt)
                    if any(not x.is_zero() for x in nv) and insert(nv, nelt):
                        nxt.append((nv, nelt))
            frontier = nxt
        assert len(basis_vecs) == n, "fiber is not cyclic over the Levi part"
        # solve for each standard basis vector
        lift: list[AlgElement] = [None] * n  # type: ignore[list-item]
        for idx in range(n):
            vec = [RatFunc.one() if k == idx else RatFunc.zero() for k in range(n)]
            elt: AlgElement = {}
            for bv, be, pc in zip(basis_vecs, basis_elts, piv):
                if not vec[pc].is_zero():
                    f = vec[pc] / bv[pc]
                    for k in range(n):
                        if not bv[k].is_zero():
                            vec[k] = vec[k] - f * bv[k]
                    add_into(elt, be, f)
            assert all(x.is_zero() for x in vec), "cyclic solve failed"
            lift[idx] = elt
        self._lift = lift
        return lift


class WSlice:
    """Fixed-weight slice of an induced module with tensor fiber.

    Coordinates are cells (F-content, E-content, fiber index) with both word
    factors already reduced through the cached Serre quotients; on top of
    that only the fiber-absorption relations are eliminated.  Every relation
    is a true one, so reducing an element to zero certifies that it
    vanishes; dimension claims are certified against the character oracle.
    """

    def __init__(self, fiber: TensorFiber, omega: Weight,
                 k1cap: int, k2cap: int, levi_slack: int = 2,
                 ws_cache=None):
        from .uqalg import _WeightSpaceCache
        self.fiber = fiber
        self.uq = fiber.uq
        self.P = fiber.P
        self.omega = omega
        self.k1cap = k1cap
        self.k2cap = k2cap
        self.ws = ws_cache if ws_cache is not None else _WeightSpaceCache(self.uq)
        rs = self.uq.rs
        s = self.P.s
        if s is None and self.P.S:
            raise ValueError("window caps need a single crossed node")
        hr = rs.highest_root()
        slack = [levi_slack if (i + 1) in self.P.S else 0 for i in range(rs.rank)]
        self.capF = tuple(k1cap * hr[i] + slack[i] for i in range(rs.rank))
        self.capE = tuple(k2cap * hr[i] + slack[i] for i in range(rs.rank))
        self._scount = (lambda c: sum(c)) if s is None else (lambda c: c[s - 1])
        self.cells = self._cells(omega)
        # flat coordinate layout: per cell a block of fdim * edim entries
        self._offset: dict[tuple, int] = {}
        pos = 0
        for cf, ce, t in self.cells:
            self._offset[(cf, ce, t)] = pos
            pos += self.ws.get(cf).dim * self.ws.get(ce).dim
        self.total = pos
        self._pivrows: dict[int, dict[int, RatFunc]] = {}
        for row in self._absorption_rows():
            self._insert_row(row)
        piv_set = set(self._pivrows)
        self._basis_pos = [k for k in range(self.total) if k not in piv_set]

    @property
    def dim(self) -> int:
        return len(self._basis_pos)

    def basis_monomials(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Representative free monomials for the residual basis positions."""
        info = []
        for cf, ce, t in self.cells:
            fsp = self.ws.get(cf)
            esp = self.ws.get(ce)
            for u in fsp.basis_words:
                for v in esp.basis_words:
                    info.append((u, v, t))
        return [info[k] for k in self._basis_pos]

    def _cells(self, omega: Weight) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Window cells of the given total weight, largest first so that
        elimination keeps the smallest spanning cells as the basis."""
        rs = self.uq.rs
        cells = []
        for t in range(self.fiber.dim):
            try:
                delta = rs.weight_root_coords_int(omega - self.fiber.weights[t])
            except ValueError:
                continue
            for cf in self._boxed(self.capF):
                ce = tuple(cf[i] + delta[i] for i in range(rs.rank))
                if any(x < 0 for x in ce) or any(x > y for x, y in zip(ce, self.capE)):
                    continue
                if self._scount(cf) > self.k1cap or self._scount(ce) > self.k2cap:
                    continue
                cells.append((cf, ce, t))
        cells.sort(key=lambda c: (-(sum(c[0]) + sum(c[1])), c))
        return cells

    def _boxed(self, cap: tuple[int, ...]):
        rs = self.uq.rs
        out = [()]
        for i in range(rs.rank):
            out = [c + (v,) for c in out for v in range(cap[i] + 1)]
        return out

    def _insert_row(self, row: dict[int, RatFunc]) -> bool:
        row = {k: v for k, v in row.items() if not v.is_zero()}
        while row:
            pc = min(row)
            pr = self._pivrows.get(pc)
            if pr is None:
                inv = row[pc].inverse()
                self._pivrows[pc] = {k: v * inv for k, v in row.items()}
                return True
            f = row.pop(pc)
            for k, v in pr.items():
                if k == pc:
                    continue
                cur = row.get(k, RatFunc.zero()) - f * v
                if cur.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = cur
        return False

    def _absorb_k(self, kv: tuple[int, ...], ce: tuple[int, ...], t: int) -> RatFunc:
        """Scalar from moving K^kv rightward past an E-word of content ce
        onto the fiber vector."""
        rs = self.uq.rs
        exp = 0
        for j in range(rs.rank):
            if kv[j]:
                w = self.fiber.k_exponent(j + 1, t)
                for i in range(rs.rank):
                    w += ce[i] * rs.bform[j][i]
                exp += kv[j] * w
        return RatFunc.q_power(exp)

    def _free_vector(self, x: AlgElement, t: int) -> dict[int, RatFunc] | None:
        """Flat sparse coordinates of (algebra element) applied to fiber
        vector t, Serre-reducing both word factors; None when some monomial
        leaves the window."""
        rs = self.uq.rs
        vec: dict[int, RatFunc] = {}
        for (fw, kv, ew), c in x.items():
            cf = [0] * rs.rank
            ce = [0] * rs.rank
            for i in fw:
                cf[i - 1] += 1
            for i in ew:
                ce[i - 1] += 1
            cf = tuple(cf)
            ce = tuple(ce)
            off = self._offset.get((cf, ce, t))
            if off is None:
                return None
            scal = c * self._absorb_k(kv, ce, t)
            fsp = self.ws.get(cf)
            esp = self.ws.get(ce)
            fc = fsp.reduce_coords({fw: RatFunc.one()})
            ec = esp.reduce_coords({ew: RatFunc.one()})
            edim = esp.dim
            for fi, a in enumerate(fc):
                if a.is_zero():
                    continue
                for ei, b in enumerate(ec):
                    if b.is_zero():
                        continue
                    k = off + fi * edim + ei
                    cur = vec.get(k, RatFunc.zero()) + scal * a * b
                    if cur.is_zero():
                        vec.pop(k, None)
                    else:
                        vec[k] = cur
        return vec

    def _absorption_rows(self) -> list[dict[int, RatFunc]]:
        uq = self.uq
        rs = uq.rs
        rows: list[dict[int, RatFunc]] = []
        for i in sorted(self.P.S):
            for letter in (("F", i), ("E", i)):
                lw = rs.simple_root(i)
                base_omega = self.omega + (lw if letter[0] == "F" else -lw)
                gelt = uq.F(i) if letter[0] == "F" else uq.E(i)
                mat = self.fiber.generator_matrix(letter)
                for cf, ce, t in self._cells(base_omega):
                    fsp = self.ws.get(cf)
                    esp = self.ws.get(ce)
                    for u in fsp.basis_words:
                        for v in esp.basis_words:
                            base = {(u, (0,) * uq.r, v): RatFunc.one()}
                            prod = uq.multiply(base, gelt)
                            row = self._free_vector(prod, t)
                            if row is None:
                                continue
                            full = True
                            for t2 in range(self.fiber.dim):
                                w = mat[t2][t]
                                if w.is_zero():
                                    continue
                                sub = self._free_vector(base, t2)
                                if sub is None:
                                    full = False
                                    break
                                for k, val in sub.items():
                                    cur = row.get(k, RatFunc.zero()) - w * val
                                    if cur.is_zero():
                                        row.pop(k, None)
                                    else:
                                        row[k] = cur
                            if full:
                                rows.append(row)
        return rows

    def reduce_sparse(self, vec: dict[int, RatFunc]) -> dict[int, RatFunc]:
        for pc in sorted(self._pivrows):
            f = vec.get(pc)
            if f is None or f.is_zero():
                continue
            for k, v in self._pivrows[pc].items():
                cur = vec.get(k, RatFunc.zero()) - f * v
                if cur.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = cur
        return vec

    def reduce_applied(self, x: AlgElement, t: int) -> list[RatFunc]:
        """Coordinates of (algebra element) acting on fiber basis vector t."""
        vec = self._free_vector(x, t)
        if vec is None:
            raise TruncationError("element leaves the window")
        vec = self.reduce_sparse(vec)
        return [vec.get(k, RatFunc.zero()) for k in self._basis_pos]

    def oracle_dim(self) -> int:
        """Product-character dimension of the same filtration piece."""
        rs = self.uq.rs
        qroots = self.P.quotient_roots if self.P.S else rs.positive_roots

        # symmetric powers of the (abelian) quotient on both sides
        def sym(cap: int) -> dict[tuple[int, tuple[int, ...]], int]:
            out = {(0, (0,) * rs.rank): 1}
            for r in qroots:
                new = dict(out)
                frontier = dict(out)
                k = 1
                while k <= cap and frontier:
                    nxt: dict = {}
                    for (deg, c), m in frontier.items():
                        if deg + 1 > cap:
                            continue
                        key = (deg + 1, tuple(c[i] + r[i] for i in range(rs.rank)))
                        nxt[key] = nxt.get(key, 0) + m
                    for key, m in nxt.items():
                        new[key] = new.get(key, 0) + m
                    frontier = nxt
                    k += 1
                out = new
            return out

        sm = sym(self.k1cap)
        sp = sym(self.k2cap)
        total = 0
        for t in range(self.fiber.dim):
            try:
                delta = rs.weight_root_coords_int(self.omega - self.fiber.weights[t])
            except ValueError:
                continue
            for (d1, c1), m1 in sm.items():
                need = tuple(c1[i] + delta[i] for i in range(rs.rank))
                for (d2, c2), m2 in sp.items():
                    if c2 == need:
                        total += m1 * m2
        return total


class DoubleComplex:
    """Bigraded family of induced modules with tensor fiber indexed by pairs
    of minimal coset representatives, with row maps from the intertwiners and
    column maps from their images under the algebra involution.

    With the row maps twisted by (-1)^(column index) the total differential
    squares to zero; the checkable core is that untwisted row and column maps
    commute, which reduces to commutator identities against the generator.
    """

    def __init__(self, G, uq: UqAlgebra | None = None, levi_slack: int = 2):
        self.G = G
        rs = G.P.rs
        self.rs = rs
        self.uq = uq if uq is not None else UqAlgebra(rs)
        self.maps = StandardMapFamily(G, Weight((0,) * rs.rank), self.uq)
        self.levi_slack = levi_slack
        from .uqalg import _WeightSpaceCache
        self.wscache = _WeightSpaceCache(self.uq)
        self._fibers: dict[tuple, TensorFiber] = {}
        self._slices: dict[tuple, WSlice] = {}
        zero = Weight((0,) * rs.rank)
        self.dots = {w.matrix: G.W.shifted_act(w, zero) for lvl in G.levels for w in lvl}

    def fiber(self, w1, w2) -> TensorFiber:
        key = (w1.matrix, w2.matrix)
        fb = self._fibers.get(key)
        if fb is None:
            fb = TensorFiber(self.uq, self.G.P, self.dots[w1.matrix], self.dots[w2.matrix])
            self._fibers[key] = fb
        return fb

    def wslice(self, w1, w2, omega: Weight, k1cap: int, k2cap: int) -> WSlice:
        key = (w1.matrix, w2.matrix, omega.coords, k1cap, k2cap)
        sl = self._slices.get(key)
        if sl is None:
            sl = WSlice(self.fiber(w1, w2), omega, k1cap, k2cap, self.levi_slack,
                        ws_cache=self.wscache)
            self._slices[key] = sl
        return sl

    def x_element(self, w2_short, w2_long) -> AlgElement:
        """Column intertwiner: involution image of the row intertwiner."""
        return self.uq.eta(self.maps.y(w2_short, w2_long))

    def verify_anticommute(self, k1cap: int = 2, k2cap: int = 2) -> dict:
        """For every pair of a row arrow and a column arrow, the commutator of
        the two intertwiners kills the generator of the target module; also
        checked after left multiplication by window monomials up to the box."""
        uq = self.uq
        rs = self.rs
        G = self.G
        ok = True
        records = []
        for a1 in G.arrows:
            for a2 in G.arrows:
                y = self.maps.y(a1.source, a1.target)
                x = self.x_element(a2.source, a2.target)
                comm: AlgElement = {}
                add_into(comm, uq.multiply(y, x))
                add_into(comm, uq.multiply(x, y), RatFunc.from_int(-1))
                fb = self.fiber(a1.source, a2.source)
                gen_wt = self.dots[a1.source.matrix] - self.dots[a2.source.matrix]
                ycont = dot_offset(G, a1.source, a1.target, Weight((0,) * rs.rank))
                xcont = dot_offset(G, a2.source, a2.target, Weight((0,) * rs.rank))
                omega = (gen_wt - rs.root_to_weight(ycont)
                         + rs.root_to_weight(xcont))
                sl = self.wslice(a1.source, a2.source, omega, k1cap, k2cap)
                coords = sl.reduce_applied(comm, fb.gen_index)
                base_zero = all(c.is_zero() for c in coords)
                # left multiples filling the box: monomials of bidegree
                # (k1cap - 1, k2cap - 1)
                extra_ok = True
                tested = 0
                hr = rs.highest_root()
                for cf, ce, t in sl.cells:
                    if t != fb.gen_index:
                        continue
                    if sl._scount(cf) >= k1cap or sl._scount(ce) >= k2cap:
                        continue
                    # multipliers from the genuine box: content bounded by
                    # sums of quotient roots, no surplus Levi letters
                    if any(cf[i] > (k1cap - 1) * hr[i] for i in range(rs.rank)):
                        continue
                    if any(ce[i] > (k2cap - 1) * hr[i] for i in range(rs.rank)):
                        continue
                    fw = self.wscache.get(cf).basis_words[0]
                    ew = self.wscache.get(ce).basis_words[0]
                    u = uq.multiply(uq.fword(fw),
                                    uq.from_letters([("E", i) for i in ew]))
                    prod = uq.multiply(u, comm)
                    om2 = (omega - rs.root_to_weight(cf)
                           + rs.root_to_weight(ce))
                    sk1 = k1cap + sl._scount(cf)
                    sk2 = k2cap + sl._scount(ce)
                    sl2 = self.wslice(a1.source, a2.source, om2, sk1, sk2)
                    c2 = sl2.reduce_applied(prod, fb.gen_index)
                    if not all(c.is_zero() for c in c2):
                        extra_ok = False
                    tested += 1
                    if tested >= 6:
                        break
                good = base_zero and extra_ok
                ok = ok and good
                records.append({
                    "row_arrow": [str(a1.source), str(a1.target)],
                    "col_arrow": [str(a2.source), str(a2.target)],
                    "generator_zero": base_zero,
                    "box_multiples_zero": extra_ok,
                    "box_multiples_tested": tested,
                })
        return {"ok": ok, "k1cap": k1cap, "k2cap": k2cap, "pairs": records}

    def _map_matrix(self, src: WSlice, tgt: WSlice, elt: AlgElement,
                    tgt_fiber: TensorFiber) -> QMatrix:
        """Matrix of the module map sending the source generator to
        elt (x) target generator, on the given slices."""
        uq = self.uq
        lift = src.fiber.cyclic_lift()
        m = QMatrix(tgt.dim, src.dim)
        for cidx, (fw, ew, t) in enumerate(src.basis_monomials()):
            u = uq.multiply(uq.fword(fw), uq.from_letters([("E", i) for i in ew]))
            u = uq.multiply(u, lift[t])
            prod = uq.multiply(u, elt)
            coords = tgt.reduce_applied(prod, tgt_fiber.gen_index)
            for ridx, v in enumerate(coords):
                if not v.is_zero():
                    m.entries[ridx][cidx] = v
        return m

    def _scount(self, c: tuple[int, ...]) -> int:
        s = self.G.P.s
        return c[s - 1] if s is not None else sum(c)

    def _intrinsic_caps(self, fb: TensorFiber, omega: Weight,
                        mode: str, cap: int) -> tuple[int, int]:
        """Window caps making the slice the full fixed-weight piece of the
        filtration by the capped side."""
        rs = self.rs
        other = 0
        found = False
        for t in range(fb.dim):
            try:
                delta = rs.weight_root_coords_int(omega - fb.weights[t])
            except ValueError:
                continue
            found = True
            if mode == "row":
                other = max(other, cap - self._scount(delta))
            else:
                other = max(other, cap + self._scount(delta))
        if not found:
            return (0, 0) if mode == "row" else (0, 0)
        return (other, cap) if mode == "row" else (cap, other)

    def _line_exactness(self, mods: list, omega: Weight, mode: str, cap: int,
                        elt_for, assist=None) -> dict | None:
        """Rank-exactness of one row or column on a fixed-weight window.

        mods: list of (w1, w2) pairs ordered from the top of the line down;
        the map at step k sends the module of mods[k] to that of mods[k + 1].
        mode "row" caps the raising side, mode "col" the lowering side."""
        slices = []
        for (w1, w2) in mods:
            k1, k2 = self._intrinsic_caps(self.fiber(w1, w2), omega, mode, cap)
            sl = self.wslice(w1, w2, omega, k1, k2)
            if sl.dim != sl.oracle_dim():
                raise TruncationError(
                    "slice dim %d differs from oracle %d" % (sl.dim, sl.oracle_dim()))
            slices.append(sl)
        dims = [sl.dim for sl in slices]
        if all(d == 0 for d in dims):
            return None
        ranks = []
        for k in range(len(mods) - 1):
            if dims[k] == 0 or dims[k + 1] == 0:
                ranks.append(0)
                continue
            elt, tgt_fb = elt_for(k)
            mm = self._map_matrix(slices[k], slices[k + 1], elt, tgt_fb)
            ranks.append(rank(mm, assist))
        # exact at every position except the last (the augmentation end)
        good = dims[0] - ranks[0] == 0 if ranks else True
        for k in range(1, len(ranks)):
            good = good and (dims[k] - ranks[k] == ranks[k - 1])
        return {"omega": list(omega.coords), "dims": dims, "ranks": ranks, "exact": good}

    def _chain(self) -> list:
        levels = self.G.levels
        if any(len(lvl) != 1 for lvl in levels):
            raise ValueError("line verification needs one coset per length")
        return [lvl[0] for lvl in reversed(levels)]

    def _window_weights(self, w1_end, w2_end, k1lim: int, k2lim: int) -> list[Weight]:
        """Weights where the terminal module of a line has nonzero slices."""
        fb = self.fiber(w1_end, w2_end)
        rs = self.rs
        qroots = self.G.P.quotient_roots if self.G.P.S else rs.positive_roots
        sums_m = {(0,) * rs.rank}
        for _ in range(k1lim):
            sums_m |= {tuple(c[i] + r[i] for i in range(rs.rank))
                       for c in sums_m for r in qroots}
        sums_p = {(0,) * rs.rank}
        for _ in range(k2lim):
            sums_p |= {tuple(c[i] + r[i] for i in range(rs.rank))
                       for c in sums_p for r in qroots}
        out = set()
        for t in range(fb.dim):
            for b1 in sums_m:
                for b2 in sums_p:
                    wt = (fb.weights[t] - rs.root_to_weight(b1)
                          + rs.root_to_weight(b2))
                    out.add(wt)
        return sorted(out, key=lambda w: w.coords)

    def verify_rows(self, k2cap: int, k1lim: int, assist=None) -> dict:
        """Interior exactness of every row on all slices of a finite window,
        with every slice dimension certified against the character oracle."""
        G = self.G
        ok = True
        rows = []
        chain = self._chain()
        for w2 in chain:
            recs = []
            mods = [(w1, w2) for w1 in chain]

            def elt_for(k, mods=mods):
                y = self.maps.y_signed(mods[k + 1][0], mods[k][0])
                return y, self.fiber(*mods[k + 1])

            for omega in self._window_weights(chain[-1], w2, k1lim, k2cap):
                rec = self._line_exactness(mods, omega, "row", k2cap, elt_for, assist)
                if rec is not None:
                    ok = ok and rec["exact"]
                    recs.append(rec)
            rows.append({"fixed_col": str(w2), "slices": recs})
        return {"ok": ok, "direction": "rows", "lines": rows}

    def verify_columns(self, k1cap: int, k2lim: int, assist=None) -> dict:
        """Interior exactness of every column, mirrored through the algebra
        involution."""
        G = self.G
        ok = True
        cols = []
        chain = self._chain()
        for w1 in chain:
            recs = []
            mods = [(w1, w2) for w2 in chain]

            def elt_for(k, mods=mods):
                x = self.x_element(mods[k + 1][1], mods[k][1])
                s = G.sign(mods[k + 1][1], mods[k][1])
                if s == -1:
                    x = {nw: -c for nw, c in x.items()}
                return x, self.fiber(*mods[k + 1])

            for omega in self._window_weights(w1, chain[-1], k1cap, k2lim):
                rec = self._line_exactness(mods, omega, "col", k1cap, elt_for, assist)
                if rec is not None:
                    ok = ok and rec["exact"]
                    recs.append(rec)
            cols.append({"fixed_row": str(w1), "slices": recs})
        return {"ok": ok, "direction": "columns", "lines": cols}
