"""The rank-one quantum coordinate algebra, its weight-zero subalgebra (the
quantum sphere), and the associated two-sided differential calculus.

The coordinate algebra is presented by generators a, b, c, d; every relation
used by the normal-form multiplication is certified against the dual pairing
with the rank-one quantized enveloping algebra, computed through tensor
powers of the two-dimensional representation.  Differentials are the dual
actions of the raising and lowering generators on column indices.
"""
from __future__ import annotations

from .qfield import (QMatrix, RatFunc, kernel_basis, normalize_vector, rank)

# normal monomial: exponents (i, j, k, l) of a^i b^j c^k d^l with i*l == 0
Mono = tuple[int, int, int, int]
Elem = dict[Mono, RatFunc]

_LETTERS = "abcd"
# matrix-coefficient index pair (row, column) of each generator
_IJ = {"a": (1, 1), "b": (1, 2), "c": (2, 1), "d": (2, 2)}


def one() -> Elem:
    return {(0, 0, 0, 0): RatFunc.one()}


def gen(x: str) -> Elem:
    m = [0, 0, 0, 0]
    m[_LETTERS.index(x)] = 1
    return {tuple(m): RatFunc.one()}


def add_into(acc: Elem, other: Elem, scale: RatFunc | None = None) -> None:
    for m, c in other.items():
        v = c if scale is None else c * scale
        cur = acc.get(m, RatFunc.zero()) + v
        if cur.is_zero():
            acc.pop(m, None)
        else:
            acc[m] = cur


def _normalize(m: Mono, coeff: RatFunc, out: Elem) -> None:
    """Resolve mixed a/d monomials with ad = 1 + q^{-1} bc."""
    i, j, k, l = m
    if i == 0 or l == 0:
        cur = out.get(m, RatFunc.zero()) + coeff
        if cur.is_zero():
            out.pop(m, None)
        else:
            out[m] = cur
        return
    # a^i b^j c^k d^l = q^{-(j+k)} a^{i-1} b^j c^k (1 + q^{-1} b c) d^{l-1}
    f = coeff * RatFunc.q_power(-(j + k))
    _normalize((i - 1, j, k, l - 1), f, out)
    _normalize((i - 1, j + 1, k + 1, l - 1), f * RatFunc.q_power(-1), out)


def _mul_letter(m: Mono, x: str, coeff: RatFunc, out: Elem) -> None:
    """Append one generator on the right of a normal monomial."""
    i, j, k, l = m
    if x == "a":
        if l == 0:
            # b a = q a b and c a = q a c
            _normalize((i + 1, j, k, 0), coeff * RatFunc.q_power(j + k), out)
        else:
            # d a = a d + (q - q^{-1}) b c
            _mul_letter((i, j, k, l - 1), "a", coeff, _tmp := {})
            for m2, c2 in _tmp.items():
                _mul_letter(m2, "d", c2, out)
            gap = RatFunc.q_power(1) - RatFunc.q_power(-1)
            _mul_letter((i, j, k, l - 1), "b", coeff * gap, _tmp2 := {})
            for m2, c2 in _tmp2.items():
                _mul_letter(m2, "c", c2, out)
    elif x == "b":
        # d b = q b d
        _normalize((i, j + 1, k, l), coeff * RatFunc.q_power(l), out)
    elif x == "c":
        # d c = q c d
        _normalize((i, j, k + 1, l), coeff * RatFunc.q_power(l), out)
    else:
        _normalize((i, j, k, l + 1), coeff, out)


def mul(x: Elem, y: Elem) -> Elem:
    out: Elem = {}
    for m2, c2 in y.items():
        word = _word(m2)
        for m1, c1 in x.items():
            cur = {m1: c1 * c2}
            for letter in word:
                nxt: Elem = {}
                for m, c in cur.items():
                    _mul_letter(m, letter, c, nxt)
                cur = nxt
            add_into(out, cur)
    return out


def mul_all(parts: list[Elem]) -> Elem:
    out = one()
    for p in parts:
        out = mul(out, p)
    return out


def _word(m: Mono) -> str:
    i, j, k, l = m
    return "a" * i + "b" * j + "c" * k + "d" * l


def weight(m: Mono) -> int:
    """Right weight: the column-index grading (a, c count +1; b, d count -1)."""
    i, j, k, l = m
    return i - j + k - l


def degree(m: Mono) -> int:
    return sum(m)


# ---------------------------------------------------------------------------
# dual pairing through tensor powers of the two-dimensional representation

def _apply_E(vec: dict) -> dict:
    out: dict = {}
    for J, c in vec.items():
        for s in range(len(J)):
            if J[s] == 2:
                f = c
                for t in range(s + 1, len(J)):
                    f = f * RatFunc.q_power(1 if J[t] == 1 else -1)
                K = J[:s] + (1,) + J[s + 1:]
                cur = out.get(K, RatFunc.zero()) + f
                if cur.is_zero():
                    out.pop(K, None)
                else:
                    out[K] = cur
    return out


def _apply_F(vec: dict) -> dict:
    out: dict = {}
    for J, c in vec.items():
        for s in range(len(J)):
            if J[s] == 1:
                f = c
                for t in range(s):
                    f = f * RatFunc.q_power(-1 if J[t] == 1 else 1)
                K = J[:s] + (2,) + J[s + 1:]
                cur = out.get(K, RatFunc.zero()) + f
                if cur.is_zero():
                    out.pop(K, None)
                else:
                    out[K] = cur
    return out


def _apply_K(vec: dict, e: int) -> dict:
    out: dict = {}
    for J, c in vec.items():
        exp = sum(1 if x == 1 else -1 for x in J) * e
        out[J] = c * RatFunc.q_power(exp)
    return out


def pair_word(letters: str, u: list) -> RatFunc:
    """Value of a product of matrix coefficients on an enveloping-algebra
    word (entries "E", "F" or ("K", exponent))."""
    I = tuple(_IJ[x][0] for x in letters)
    J = tuple(_IJ[x][1] for x in letters)
    vec = {J: RatFunc.one()}
    for letter in reversed(u):
        if letter == "E":
            vec = _apply_E(vec)
        elif letter == "F":
            vec = _apply_F(vec)
        else:
            vec = _apply_K(vec, letter[1])
    return vec.get(I, RatFunc.zero())


def pair_elem(x: Elem, u: list) -> RatFunc:
    out = RatFunc.zero()
    for m, c in x.items():
        out = out + c * pair_word(_word(m), u)
    return out


def _spanning_words(max_step: int) -> list[list]:
    out = []
    for i in range(max_step + 1):
        for e in range(-max_step, max_step + 1):
            for k in range(max_step + 1):
                out.append(["F"] * i + ([("K", e)] if e else []) + ["E"] * k)
    return out


def verify_relations() -> dict:
    """Certify the multiplication against the pairing: the degree-two
    relation space has dimension six, every normal-form rewrite is a pairing
    identity, and products agree with concatenation on samples."""
    words = _spanning_words(3)
    from itertools import product as iproduct
    monos2 = ["".join(p) for p in iproduct(_LETTERS, repeat=2)]
    rows = [[pair_word(m, u) for u in words] for m in monos2]
    image_rank = rank(QMatrix.from_rows(rows, len(words)))
    kernel_dim = len(monos2) - image_rank
    # the six rewriting relations and the determinant identity
    gap = RatFunc.q_power(1) - RatFunc.q_power(-1)
    relations = [
        ("ba", [("ab", RatFunc.q_power(1))]),
        ("ca", [("ac", RatFunc.q_power(1))]),
        ("cb", [("bc", RatFunc.one())]),
        ("db", [("bd", RatFunc.q_power(1))]),
        ("dc", [("cd", RatFunc.q_power(1))]),
        ("da", [("ad", RatFunc.one()), ("bc", gap)]),
        ("ad", [("", RatFunc.one()), ("bc", RatFunc.q_power(-1))]),
    ]
    rel_ok = True
    for lhs, rhs in relations:
        for u in words:
            v = pair_word(lhs, u)
            for mono, c in rhs:
                v = v - c * pair_word(mono, u)
            if not v.is_zero():
                rel_ok = False
    # normal-form products match concatenated words on samples
    samples = ["da", "dc", "add", "dda", "abcd", "dcba", "bdac", "ddaa"]
    prod_ok = True
    for s in samples:
        prod = mul_all([gen(x) for x in s])
        for u in _spanning_words(len(s)):
            v = pair_elem(prod, u) - pair_word(s, u)
            if not v.is_zero():
                prod_ok = False
    ok = kernel_dim == 6 and rel_ok and prod_ok
    return {"ok": ok, "degree2_kernel_dim": kernel_dim,
            "rewrites_match_pairing": rel_ok,
            "products_match_pairing": prod_ok}


# ---------------------------------------------------------------------------
# differential operators: dual action on column indices

def _column_action(x: Elem, mode: str) -> Elem:
    """Apply the raising ("E"), lowering ("F") or grading ("K", with
    exponent packed as mode "K<e>") generator to the column indices."""
    out: Elem = {}
    for m, c in x.items():
        word = _word(m)
        n = len(word)
        cols = [_IJ[ch][1] for ch in word]
        if mode == "E":
            # Delta(E) = E (x) K + 1 (x) E: K factors after the acting slot
            for s in range(n):
                if cols[s] == 2:
                    f = c
                    for t in range(s + 1, n):
                        f = f * RatFunc.q_power(1 if cols[t] == 1 else -1)
                    repl = {"b": "a", "d": "c"}[word[s]]
                    nw = word[:s] + repl + word[s + 1:]
                    add_into(out, mul_all([gen(ch) for ch in nw]), f)
        elif mode == "F":
            # Delta(F) = F (x) 1 + K^{-1} (x) F: inverse K factors before
            for s in range(n):
                if cols[s] == 1:
                    f = c
                    for t in range(s):
                        f = f * RatFunc.q_power(-1 if cols[t] == 1 else 1)
                    repl = {"a": "b", "c": "d"}[word[s]]
                    nw = word[:s] + repl + word[s + 1:]
                    add_into(out, mul_all([gen(ch) for ch in nw]), f)
        else:
            e = int(mode[1:])
            add_into(out, {m: c * RatFunc.q_power(weight(m) * e)})
    return out


def del_hol(x: Elem) -> Elem:
    """Holomorphic differential: lowers the right weight by two."""
    return _column_action(x, "F")


def del_antihol(x: Elem) -> Elem:
    """Antiholomorphic differential: raises the right weight by two."""
    return _column_action(x, "E")


# the sphere subalgebra: weight-zero part, generated in degree two
B_GENS = {"x_minus": ("ab",), "x_zero": ("bc",), "x_plus": ("cd",)}


def b_gen(name: str) -> Elem:
    return mul_all([gen(ch) for ch in B_GENS[name][0]])


def monomials_of_weight(w: int, max_degree: int) -> list[Mono]:
    out = []
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            for k in range(max_degree + 1 - i - j):
                for l in range(max_degree + 1 - i - j - k):
                    if i * l == 0 and i - j + k - l == w:
                        out.append((i, j, k, l))
    out.sort(key=lambda m: (degree(m), m))
    return out


def _span_dim(vectors: list[Elem], basis: list[Mono]) -> int:
    idx = {m: p for p, m in enumerate(basis)}
    rows = []
    for v in vectors:
        row = [RatFunc.zero()] * len(basis)
        for m, c in v.items():
            row[idx[m]] = c
        rows.append(row)
    if not rows:
        return 0
    return rank(QMatrix.from_rows(rows, len(basis)))


def component_fiber_dims(max_degree: int) -> dict:
    """Dimension of each form component modulo the augmentation ideal of the
    sphere subalgebra, computed on a degree window.

    The two-column complexes have componentwise fibers of dimension one:
    binomial(1, k) per column and binomial(2, k) in total degree k."""
    gens = [b_gen(n) for n in B_GENS]
    comps = {}
    for (n, m) in [(0, 0), (1, 0), (0, 1), (1, 1)]:
        w = 2 * (m - n)
        window = monomials_of_weight(w, max_degree)
        inner = [mm for mm in window if degree(mm) <= max_degree - 2]
        prods = []
        for g in gens:
            for mm in inner:
                prods.append(mul(g, {mm: RatFunc.one()}))
        sub = _span_dim(prods, window)
        comps[(n, m)] = len(window) - sub
    total = {0: comps[(0, 0)],
             1: comps[(1, 0)] + comps[(0, 1)],
             2: comps[(1, 1)]}
    ok = (comps[(0, 0)] == 1 and comps[(1, 0)] == 1
          and comps[(0, 1)] == 1 and comps[(1, 1)] == 1)
    return {"ok": ok, "components": {f"{n},{m}": v for (n, m), v in comps.items()},
            "total_by_degree": total, "max_degree": max_degree}


def b_window(max_degree: int) -> list[Elem]:
    """Products of sphere generators up to the given degree."""
    out = [one()]
    frontier = [one()]
    for _ in range(max_degree // 2):
        nxt = []
        for f in frontier:
            for name in B_GENS:
                nxt.append(mul(f, b_gen(name)))
        out.extend(nxt)
        frontier = nxt
    return out


def verify_leibniz(max_degree: int = 3) -> dict:
    """Both differentials satisfy the plain Leibniz rule on products of
    sphere elements (the grading twist is trivial in weight zero)."""
    elems = []
    for name in B_GENS:
        elems.append(b_gen(name))
    pairs_ok = True
    checked = 0
    pool = list(elems)
    if max_degree >= 3:
        pool += [mul(elems[0], elems[1]), mul(elems[2], elems[1])]
    for f in pool:
        for g in elems:
            for D in (del_hol, del_antihol):
                lhs = D(mul(f, g))
                rhs: Elem = {}
                add_into(rhs, mul(D(f), g))
                add_into(rhs, mul(f, D(g)))
                diff = dict(lhs)
                add_into(diff, rhs, RatFunc.from_int(-1))
                if diff:
                    pairs_ok = False
                checked += 1
    return {"ok": pairs_ok, "products_checked": checked}


def verify_d_squared(max_degree: int = 4) -> dict:
    """The total differential squares to zero: with the sign twist on the
    antiholomorphic family this reduces to the two differentials commuting
    on weight-zero elements."""
    ok = True
    checked = 0
    for m in monomials_of_weight(0, max_degree):
        x = {m: RatFunc.one()}
        lhs = del_hol(del_antihol(x))
        rhs = del_antihol(del_hol(x))
        diff = dict(lhs)
        add_into(diff, rhs, RatFunc.from_int(-1))
        if diff:
            ok = False
        checked += 1
    return {"ok": ok, "elements_checked": checked}


def verify_volume_form(max_degree: int = 4) -> dict:
    """The unit of the top component is a volume form: it is coinvariant,
    the grading twist fixes the sphere subalgebra so it is central, and it
    generates the top component over the subalgebra on the window."""
    # twist acts trivially on weight-zero elements
    twist_ok = True
    for name in B_GENS:
        g = b_gen(name)
        for e in (2, -2):
            t = _column_action(g, "K%d" % e)
            diff = dict(t)
            add_into(diff, g, RatFunc.from_int(-1))
            if diff:
                twist_ok = False
    # centrality: left and twisted right multiples of the unit agree
    central_ok = True
    for name in B_GENS:
        g = b_gen(name)
        lhs = mul(g, one())
        rhs = mul(one(), _column_action(g, "K0"))
        diff = dict(lhs)
        add_into(diff, rhs, RatFunc.from_int(-1))
        if diff:
            central_ok = False
    # generation: the window of the top component equals the subalgebra window
    window = monomials_of_weight(0, max_degree)
    multiples = [mul(f, one()) for f in b_window(max_degree)]
    gen_dim = _span_dim(multiples, window)
    sub_dim = _span_dim([{m: RatFunc.one()} for f in b_window(max_degree)
                         for m in f], window)
    gen_ok = gen_dim == sub_dim and gen_dim > 0
    ok = twist_ok and central_ok and gen_ok
    return {"ok": ok, "twist_fixes_subalgebra": twist_ok,
            "central": central_ok, "generated_dim": gen_dim,
            "subalgebra_window_dim": sub_dim}


def sphere_relation() -> dict:
    """Among the unit, the three sphere generators and their six ordered
    pairwise products there is exactly one linear relation."""
    names = list(B_GENS)
    elems: list[tuple[str, Elem]] = [("1", one())]
    for n in names:
        elems.append((n, b_gen(n)))
    for p in range(3):
        for r in range(p, 3):
            elems.append((names[p] + "*" + names[r],
                          mul(b_gen(names[p]), b_gen(names[r]))))
    basis = monomials_of_weight(0, 4)
    idx = {m: p for p, m in enumerate(basis)}
    rows = []
    for _, e in elems:
        row = [RatFunc.zero()] * len(basis)
        for m, c in e.items():
            row[idx[m]] = c
        rows.append(row)
    ker = kernel_basis(QMatrix.from_rows(
        [[rows[i][j] for i in range(len(rows))] for j in range(len(basis))],
        len(rows)))
    out = {"ok": len(ker) == 1, "kernel_dim": len(ker)}
    if len(ker) == 1:
        v = normalize_vector(ker[0])
        out["relation"] = {elems[i][0]: str(c) for i, c in enumerate(v)
                          if not c.is_zero()}
    return out


def verify_calculus(max_degree: int = 4) -> dict:
    """Run every check of the quantum-sphere calculus."""
    rel = verify_relations()
    dims = component_fiber_dims(max_degree + 2)
    lei = verify_leibniz(3)
    dsq = verify_d_squared(max_degree)
    vol = verify_volume_form(max_degree)
    sph = sphere_relation()
    ok = all(r["ok"] for r in (rel, dims, lei, dsq, vol, sph))
    return {"ok": ok, "relations": rel, "fiber_dims": dims, "leibniz": lei,
            "d_squared": dsq, "volume_form": vol, "sphere_relation": sph}
