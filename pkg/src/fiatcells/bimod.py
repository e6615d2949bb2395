"""Projective-bimodule calculus over basic weakly symmetric algebras, the
2-category they generate, and verification of its dimension, surjectivity
and separation properties.

Bimodules are finite-dimensional with exact rational action matrices held
column-sparse.  Tensor products over the middle algebra are computed as
honest cokernels of the balancing map, so they provide an independent check
of the closed-form composition rule used for the multisemigroup table.

Everything is pure computation over immutable values; the randomized
isomorphism search takes its seed as a call argument, so there is no shared
state and per-fixture verifications can run concurrently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra as alg
from . import linalg
from .linalg import Q0, Q1, SparseEchelon, Subspace
from .mscell import (
    DataInconsistencyError,
    MultiSemigroup,
    OneMorphism,
    cells,
    duflo,
    identity_products_clean,
    is_strongly_regular,
)
from .report import CheckRecord


class BimoduleError(ValueError):
    pass


class IsoTestInconclusive(RuntimeError):
    """The isomorphism search exhausted both strategies without a certificate."""


# -- column-sparse matrices ----------------------------------------------


def sp_identity(n: int):
    return tuple({i: Q1} for i in range(n))


def sp_apply(cols, svec: dict) -> dict:
    out: dict[int, Fraction] = {}
    for q, c in svec.items():
        if not c:
            continue
        for r, v in cols[q].items():
            val = out.get(r, Q0) + c * v
            if val:
                out[r] = val
            else:
                out.pop(r, None)
    return out


def sp_compose(a_cols, b_cols):
    """Matrix product a*b of column-sparse matrices."""
    return tuple(sp_apply(a_cols, col) for col in b_cols)


def sp_lincomb(coeffs, mats):
    n = len(mats[0]) if mats else 0
    out = [dict() for _ in range(n)]
    for c, mat in zip(coeffs, mats):
        if not c:
            continue
        for q, col in enumerate(mat):
            acc = out[q]
            for r, v in col.items():
                val = acc.get(r, Q0) + c * v
                if val:
                    acc[r] = val
                else:
                    acc.pop(r, None)
    return tuple(out)


def sp_rows(cols, nrows: int):
    rows = [dict() for _ in range(nrows)]
    for q, col in enumerate(cols):
        for r, v in col.items():
            rows[r][q] = v
    return rows


def sp_eq(a_cols, b_cols) -> bool:
    return all(x == y for x, y in zip(a_cols, b_cols, strict=True))


# -- bimodules ------------------------------------------------------------


class Bimodule:
    """An (A, B)-bimodule: commuting left A-action and right B-action.

    left_action[i] is the column-sparse matrix of the i-th basis element of
    A acting on the left; right_action[j] likewise on the right (so the
    right action is an anti-homomorphism).  degrees, when present, grade
    the underlying space; a shifted copy has all degrees lowered.
    """

    def __init__(
        self,
        left_algebra: alg.FinDimAlgebra,
        right_algebra: alg.FinDimAlgebra,
        dim: int,
        left_action,
        right_action,
        labels=None,
        degrees=None,
        name: str = "",
        check: bool = True,
    ):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = tuple(left_action)
        self.right_action = tuple(right_action)
        self.labels = tuple(labels) if labels else tuple(f"m{i}" for i in range(dim))
        self.degrees = tuple(degrees) if degrees is not None else None
        self.name = name
        if check:
            self.validate(full=dim <= 40)

    def __repr__(self):
        return f"Bimodule({self.name or 'unnamed'}, dim={self.dim})"

    def left_of(self, vec):
        return sp_lincomb(vec, self.left_action)

    def right_of(self, vec):
        return sp_lincomb(vec, self.right_action)

    def shifted(self, c: int) -> "Bimodule":
        """Grading shift: an element of degree d gets degree d - c."""
        if self.degrees is None:
            raise BimoduleError("cannot shift an ungraded bimodule")
        out = Bimodule(
            self.left_algebra,
            self.right_algebra,
            self.dim,
            self.left_action,
            self.right_action,
            labels=self.labels,
            degrees=tuple(d - c for d in self.degrees),
            name=f"{self.name}<{c}>",
            check=False,
        )
        return out

    def validate(self, full: bool = True) -> None:
        A, B = self.left_algebra, self.right_algebra
        ident = sp_identity(self.dim)
        if not sp_eq(self.left_of(A.unit), ident):
            raise BimoduleError(f"{self.name}: left action is not unital")
        if not sp_eq(self.right_of(B.unit), ident):
            raise BimoduleError(f"{self.name}: right action is not unital")
        if not full:
            return
        for i in range(A.dim):
            li = self.left_action[i]
            for j in range(A.dim):
                prod = self.left_of(A.mult[i][j])
                if not sp_eq(sp_compose(li, self.left_action[j]), prod):
                    raise BimoduleError(
                        f"{self.name}: left action not multiplicative at "
                        f"({A.basis[i]}, {A.basis[j]})"
                    )
        for i in range(B.dim):
            ri = self.right_action[i]
            for j in range(B.dim):
                prod = self.right_of(B.mult[j][i])
                if not sp_eq(sp_compose(ri, self.right_action[j]), prod):
                    raise BimoduleError(
                        f"{self.name}: right action not anti-multiplicative at "
                        f"({B.basis[i]}, {B.basis[j]})"
                    )
        for i in range(A.dim):
            for j in range(B.dim):
                lr = sp_compose(self.left_action[i], self.right_action[j])
                rl = sp_compose(self.right_action[j], self.left_action[i])
                if not sp_eq(lr, rl):
                    raise BimoduleError(
                        f"{self.name}: actions do not commute at "
                        f"({A.basis[i]}, {B.basis[j]})"
                    )


def regular_bimodule(A: alg.FinDimAlgebra, degrees=None, name=None) -> Bimodule:
    d = A.dim
    left = []
    right = []
    for i in range(d):
        left.append(
            tuple({r: v for r, v in enumerate(A.mult[i][q]) if v} for q in range(d))
        )
        right.append(
            tuple({r: v for r, v in enumerate(A.mult[q][i]) if v} for q in range(d))
        )
    return Bimodule(
        A,
        A,
        d,
        left,
        right,
        labels=A.basis,
        degrees=degrees,
        name=name or f"reg({A.name})",
    )


def _action_on_subspace_factor(algebra_: alg.FinDimAlgebra, sub: Subspace, left: bool):
    """Per-basis action matrices of the algebra on a left (right) ideal,
    written in the canonical basis of the ideal."""
    basis = list(sub)
    mats = []
    for i in range(algebra_.dim):
        b = linalg.unit(algebra_.dim, i)
        cols = []
        for u in basis:
            img = algebra_.mul(b, u) if left else algebra_.mul(u, b)
            coords = alg._coords_in(sub, img)
            if coords is None:
                raise BimoduleError("ideal is not stable under the action")
            cols.append({r: v for r, v in enumerate(coords) if v})
        mats.append(tuple(cols))
    return basis, mats


def proj_bimodule(
    A: alg.FinDimAlgebra,
    s: int,
    B: alg.FinDimAlgebra,
    t: int,
    deg_a=None,
    deg_b=None,
    name=None,
) -> Bimodule:
    """The projective bimodule (A e_s) tensor (e_t B) with the outer actions."""
    left_ideal = alg.left_ideal(A, A.idempotents[s])
    right_ideal = Subspace.from_vectors(
        [B.mul(B.idempotents[t], linalg.unit(B.dim, k)) for k in range(B.dim)],
        B.dim,
    )
    ubasis, left_mats = _action_on_subspace_factor(A, left_ideal, left=True)
    vbasis, right_mats = _action_on_subspace_factor(B, right_ideal, left=False)
    p, q = len(ubasis), len(vbasis)
    dim = p * q

    def pair_index(iu, iv):
        return iu * q + iv

    left_action = []
    for i in range(A.dim):
        src = left_mats[i]
        cols = [dict() for _ in range(dim)]
        for iu in range(p):
            col = src[iu]
            for iv in range(q):
                cols[pair_index(iu, iv)] = {
                    pair_index(r, iv): v for r, v in col.items()
                }
        left_action.append(tuple(cols))
    right_action = []
    for j in range(B.dim):
        src = right_mats[j]
        cols = [dict() for _ in range(dim)]
        for iv in range(q):
            col = src[iv]
            for iu in range(p):
                cols[pair_index(iu, iv)] = {
                    pair_index(iu, r): v for r, v in col.items()
                }
        right_action.append(tuple(cols))

    labels = [
        f"{A.describe(u)}(x){B.describe(v)}" for u in ubasis for v in vbasis
    ]
    degrees = None
    if deg_a is not None and deg_b is not None:
        du = [_homogeneous_degree(u, deg_a) for u in ubasis]
        dv = [_homogeneous_degree(v, deg_b) for v in vbasis]
        degrees = [x + y for x in du for y in dv]
    return Bimodule(
        A,
        B,
        dim,
        left_action,
        right_action,
        labels=labels,
        degrees=degrees,
        name=name or f"P({A.name}e{s + 1}|e{t + 1}{B.name})",
    )


def _homogeneous_degree(v, degs) -> int:
    found = {degs[i] for i, x in enumerate(v) if x}
    if len(found) != 1:
        raise BimoduleError("basis vector is not homogeneous for the grading")
    return found.pop()


def direct_sum(bims, name=None) -> Bimodule:
    first = bims[0]
    A, B = first.left_algebra, first.right_algebra
    if any(m.left_algebra is not A or m.right_algebra is not B for m in bims):
        raise BimoduleError("direct summands must share the algebra pair")
    dim = sum(m.dim for m in bims)
    offsets = []
    acc = 0
    for m in bims:
        offsets.append(acc)
        acc += m.dim

    def block(action_index, left: bool):
        cols = []
        for off, m in zip(offsets, bims):
            mats = m.left_action if left else m.right_action
            for col in mats[action_index]:
                cols.append({r + off: v for r, v in col.items()})
        return tuple(cols)

    left_action = [block(i, True) for i in range(A.dim)]
    right_action = [block(j, False) for j in range(B.dim)]
    labels = [
        f"{k}.{lab}" for k, m in enumerate(bims) for lab in m.labels
    ]
    degrees = None
    if all(m.degrees is not None for m in bims):
        degrees = [d for m in bims for d in m.degrees]
    return Bimodule(
        A,
        B,
        dim,
        left_action,
        right_action,
        labels=labels,
        degrees=degrees,
        name=name or "(+)".join(m.name for m in bims),
        check=False,
    )


def tensor_over(M: Bimodule, N: Bimodule, name=None) -> Bimodule:
    """M tensor_B N as the cokernel of the balancing map.

    The relation space is spanned by (m.g)(x)n - m(x)(g.n) with g running
    over a unital generating set (idempotents plus arrows) of the middle
    algebra; this spans the full balancing subspace.
    """
    B = M.right_algebra
    if N.left_algebra is not B:
        raise BimoduleError("tensor factors do not share the middle algebra")
    dm, dn = M.dim, N.dim
    total = dm * dn

    def pair(i, j):
        return i * dn + j

    ech = SparseEchelon(total)
    for g in alg.algebra_generators(B):
        right_g = M.right_of(g)
        left_g = N.left_of(g)
        for i in range(dm):
            mg = right_g[i]  # column: (e_i . g) in M coordinates
            for j in range(dn):
                gn = left_g[j]
                rel = {pair(r, j): v for r, v in mg.items()}
                for r, v in gn.items():
                    key = pair(i, r)
                    rel[key] = rel.get(key, Q0) - v
                if rel:
                    ech.insert(rel)

    pivots = set(ech.rows)
    free = [k for k in range(total) if k not in pivots]
    index_of = {k: pos for pos, k in enumerate(free)}

    def project(svec: dict) -> dict:
        red = ech.reduce(svec)
        return {index_of[k]: v for k, v in red.items()}

    def induced(mats_source, left_side: bool):
        out = []
        for mat in mats_source:
            cols = []
            for k in free:
                i, j = divmod(k, dn)
                if left_side:
                    img = {pair(r, j): v for r, v in mat[i].items()}
                else:
                    img = {pair(i, r): v for r, v in mat[j].items()}
                cols.append(project(img))
            out.append(tuple(cols))
        return out

    left_action = induced(M.left_action, True)
    right_action = induced(N.right_action, False)
    labels = []
    degrees = [] if (M.degrees is not None and N.degrees is not None) else None
    for k in free:
        i, j = divmod(k, dn)
        labels.append(f"[{M.labels[i]}(x){N.labels[j]}]")
        if degrees is not None:
            degrees.append(M.degrees[i] + N.degrees[j])
    return Bimodule(
        M.left_algebra,
        N.right_algebra,
        len(free),
        left_action,
        right_action,
        labels=labels,
        degrees=degrees,
        name=name or f"({M.name})(x)_{B.name}({N.name})",
        check=False,
    )


# -- hom spaces and isomorphism testing ------------------------------------


def hom_space(M: Bimodule, N: Bimodule):
    """Basis of bimodule homomorphisms M -> N as dense matrices (N.dim x M.dim),
    in the canonical order produced by the echelon solver."""
    if M.left_algebra is not N.left_algebra or M.right_algebra is not N.right_algebra:
        raise BimoduleError("hom space needs a common algebra pair")
    A, B = M.left_algebra, M.right_algebra
    dm, dn = M.dim, N.dim
    unknowns = dn * dm

    def x_index(p, q):
        return p * dm + q

    eqs = []

    def add_constraints(m_mat, n_mat):
        # X . m_mat = n_mat . X
        n_rows = sp_rows(n_mat, dn)
        for q in range(dm):
            mcol = m_mat[q]
            for p in range(dn):
                row = {x_index(p, k): v for k, v in mcol.items()}
                for k, v in n_rows[p].items():
                    key = x_index(k, q)
                    row[key] = row.get(key, Q0) - v
                if row:
                    eqs.append(row)

    for g in alg.algebra_generators(A):
        add_constraints(M.left_of(g), N.left_of(g))
    for g in alg.algebra_generators(B):
        add_constraints(M.right_of(g), N.right_of(g))

    basis = linalg.nullspace(eqs, unknowns)
    mats = []
    for vec_ in basis:
        mats.append(tuple(tuple(vec_[x_index(p, q)] for q in range(dm)) for p in range(dn)))
    return mats


def hom_dim(M: Bimodule, N: Bimodule) -> int:
    return len(hom_space(M, N))


def _random_invertible_combo(homs, dim, rng, tries):
    for attempt in range(tries):
        bound = 1 + attempt // 8
        coeffs = [rng.randint(-bound, bound) for _ in homs]
        if not any(coeffs):
            continue
        mat = [
            tuple(
                sum((c * h[p][q] for c, h in zip(coeffs, homs) if c), Q0)
                for q in range(dim)
            )
            for p in range(dim)
        ]
        if linalg.rank(mat, dim) == dim:
            return mat
    return None


def _identity_in_composition_span(homs_ab, homs_ba, dim) -> bool:
    """Is id in span{g . f : f in Hom(A,B), g in Hom(B,A)}?"""
    span = SparseEchelon(dim * dim)
    for f in homs_ab:
        for g in homs_ba:
            comp = linalg.mat_mul(g, f)
            span.insert(
                {p * dim + q: v for p, row in enumerate(comp) for q, v in enumerate(row) if v}
            )
    ident = {p * dim + p: Q1 for p in range(dim)}
    return span.contains(ident)


def iso_test(M: Bimodule, N: Bimodule, seed: int = 0, tries: int = 48) -> bool:
    """Exact isomorphism test: seeded random invertible combinations with a
    deterministic composition-span fallback for the negative certificate."""
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    homs = hom_space(M, N)
    if not homs:
        return False
    rng = random.Random(seed)
    if _random_invertible_combo(homs, M.dim, rng, tries) is not None:
        return True
    homs_back = hom_space(N, M)
    if not homs_back:
        return False
    if not _identity_in_composition_span(homs, homs_back, M.dim):
        return False
    if not _identity_in_composition_span(homs_back, homs, N.dim):
        return False
    raise IsoTestInconclusive(
        f"iso test inconclusive for {M.name} vs {N.name} (dim {M.dim})"
    )


def iso_to_direct_power(T: Bimodule, B: Bimodule, k: int, seed: int = 0, tries: int = 48) -> bool:
    """Exact test of T isomorphic to B^{(+)k}, exploiting the power structure:
    a candidate isomorphism is assembled from k random elements of Hom(T, B)."""
    if T.dim != k * B.dim:
        return False
    if T.dim == 0:
        return True
    into = hom_space(T, B)
    if not into:
        return False
    rng = random.Random(seed)
    for attempt in range(tries):
        bound = 1 + attempt // 8
        stacked = []
        for _ in range(k):
            coeffs = [rng.randint(-bound, bound) for _ in into]
            block = [
                tuple(
                    sum((c * h[p][q] for c, h in zip(coeffs, into) if c), Q0)
                    for q in range(T.dim)
                )
                for p in range(B.dim)
            ]
            stacked.extend(block)
        if linalg.rank(stacked, T.dim) == T.dim:
            return True
    back = hom_space(B, T)
    if not back:
        return False
    # negative certificates via the composition span (sound for "not isomorphic")
    power = direct_sum([B] * k) if k != 1 else B
    homs = hom_space(T, power)
    homs_back = hom_space(power, T)
    if not _identity_in_composition_span(homs_back, homs, power.dim):
        return False
    if not _identity_in_composition_span(homs, homs_back, T.dim):
        return False
    raise IsoTestInconclusive(f"direct-power iso test inconclusive for {T.name}")


# -- Loewy structure of bimodules ------------------------------------------


def _radical_action_mats(M: Bimodule):
    rad_a = alg.radical(M.left_algebra)
    rad_b = alg.radical(M.right_algebra)
    return [M.left_of(r) for r in rad_a] + [M.right_of(r) for r in rad_b]


def loewy_length(M: Bimodule) -> int:
    """Smallest k with rad^k M = 0 over the enveloping algebra."""
    mats = _radical_action_mats(M)
    current = [{i: Q1} for i in range(M.dim)]
    k = 0
    while current:
        k += 1
        ech = SparseEchelon(M.dim)
        for mat in mats:
            for v in current:
                ech.insert(sp_apply(mat, v))
        current = [dict((i, x) for i, x in enumerate(row) if x) for row in ech.basis_fraction_rows()]
    return k


def socle(M: Bimodule) -> Subspace:
    """Joint annihilator of both radicals inside the bimodule."""
    mats = _radical_action_mats(M)
    eqs = []
    for mat in mats:
        rows = sp_rows(mat, M.dim)
        eqs.extend(r for r in rows if r)
    if not eqs:
        return Subspace.full(M.dim)
    return Subspace.from_vectors(linalg.nullspace(eqs, M.dim), M.dim)


def top_dim(M: Bimodule) -> int:
    """Dimension of M / rad M over the enveloping algebra."""
    mats = _radical_action_mats(M)
    ech = SparseEchelon(M.dim)
    for mat in mats:
        for col in mat:
            ech.insert(col)
    return M.dim - ech.dim


# -- the center through projective bimodules -------------------------------


def projective_center(A: alg.FinDimAlgebra) -> Subspace:
    """Subalgebra of the center spanned by 1 and all endomorphisms of the
    regular bimodule that factor through the projective bimodules
    (A e_s)(x)(e_t A), closed under multiplication."""
    reg = regular_bimodule(A)
    through = [A.unit]
    for s in range(len(A.idempotents)):
        for t in range(len(A.idempotents)):
            P = proj_bimodule(A, s, A, t)
            into = hom_space(reg, P)
            back = hom_space(P, reg)
            for f in into:
                fu = linalg.mat_vec(f, A.unit)
                for g in back:
                    z = linalg.mat_vec(g, fu)
                    if not linalg.is_zero(z):
                        through.append(z)
    sub = alg.subalgebra_closure(A, through)
    centre = alg.center(A)
    if not centre.contains_subspace(sub):
        raise DataInconsistencyError("through-maps left the center")
    return sub


# -- the 2-category built from weakly symmetric algebras -------------------


@dataclass
class CcxData:
    """Input to the construction: basic connected weakly symmetric algebras,
    one per object, with optional central subalgebras X_i (default: the full
    center; must contain the projective-center and be unital subalgebras)."""

    algebras: tuple
    x_subalgebras: tuple = None
    name: str = "ccx"

    def __post_init__(self):
        self.algebras = tuple(self.algebras)
        if self.x_subalgebras is None:
            self.x_subalgebras = (None,) * len(self.algebras)
        self.x_subalgebras = tuple(self.x_subalgebras)
        if len(self.x_subalgebras) != len(self.algebras):
            raise BimoduleError("one X subalgebra per object required")


@dataclass
class CellRepData:
    """Decategorified cell representation: integer action matrices of every
    1-morphism on the basis of simple classes, for a chosen left cell."""

    left_cell: tuple
    simple_labels: tuple
    projective_labels: tuple
    actions: dict

    def __post_init__(self):
        n = len(self.simple_labels)
        for name, mat in self.actions.items():
            for row in mat:
                if len(row) != n or any((not isinstance(x, int)) or x < 0 for x in row):
                    raise DataInconsistencyError(
                        f"action of {name} is not a nonnegative integer matrix"
                    )


@dataclass
class CcxBuild:
    data: CcxData
    ms: MultiSemigroup
    cellrep: CellRepData
    x_spaces: tuple
    morphism_info: dict
    _bimodules: dict = field(default_factory=dict)
    gradings: tuple = None  # per-object basis degree tuples (graded layer)
    shifts: dict = None  # per-morphism grading shifts (graded layer)

    def algebra_at(self, i: int) -> alg.FinDimAlgebra:
        return self.data.algebras[i]

    def bimodule(self, name: str) -> Bimodule:
        if name not in self._bimodules:
            info = self.morphism_info[name]
            graded = self.gradings is not None
            if info[0] == "I":
                _, i = info
                deg = self.gradings[i] if graded else None
                bim = regular_bimodule(self.algebra_at(i), degrees=deg, name=name)
            else:
                _, i, j, s, t = info
                A, B = self.algebra_at(i), self.algebra_at(j)
                bim = proj_bimodule(
                    A,
                    s,
                    B,
                    t,
                    deg_a=self.gradings[i] if graded else None,
                    deg_b=self.gradings[j] if graded else None,
                    name=name,
                )
            if graded and self.shifts:
                shift = self.shifts.get(name, 0)
                if shift:
                    bim = bim.shifted(shift)
            self._bimodules[name] = bim
        return self._bimodules[name]

    def info(self, name: str):
        return self.morphism_info[name]


def build_ccx(data: CcxData, validated: bool = False) -> CcxBuild:
    """Construct the multisemigroup and decategorified cell representation.

    Composition multiplicities follow the closed form dim(e_t A_j e_u); the
    star sends F^{(i,j)}_{st} to F^{(j,i)}_{ts}.
    """
    n = len(data.algebras)
    if n == 0 or n > 9:
        raise BimoduleError("between 1 and 9 algebras supported")
    problems = []
    x_spaces = []
    for i, A in enumerate(data.algebras):
        label = A.name or f"algebra {i + 1}"
        if len(A.idempotents) > 9:
            raise BimoduleError("at most 9 idempotents per algebra supported")
        try:
            if not validated:
                alg.validate(A)
        except alg.AlgebraValidationError as exc:
            problems.append(f"{label}: {exc}")
            x_spaces.append(None)
            continue
        if not alg.is_weakly_symmetric(A):
            problems.append(f"{label}: not weakly symmetric")
        if not alg.is_connected(A):
            problems.append(f"{label}: not connected")
        centre = alg.center(A)
        zprime = projective_center(A)
        x = data.x_subalgebras[i]
        if x is None:
            x = centre
        if not centre.contains_subspace(x):
            problems.append(f"{label}: X is not contained in the center")
        if not x.contains_subspace(zprime):
            problems.append(f"{label}: X does not contain the projective center")
        closed = alg.subalgebra_closure(A, list(x.rows))
        if closed != x:
            problems.append(f"{label}: X is not a unital subalgebra")
        x_spaces.append(x)
    if problems:
        raise BimoduleError("; ".join(problems))

    objects = [str(i + 1) for i in range(n)]
    morphisms = []
    info = {}
    for i in range(n):
        name = f"I{i + 1}"
        morphisms.append(OneMorphism(name, objects[i], objects[i], is_identity=True))
        info[name] = ("I", i)
    for i in range(n):
        for j in range(n):
            for s in range(len(data.algebras[i].idempotents)):
                for t in range(len(data.algebras[j].idempotents)):
                    name = f"F{i + 1}{j + 1}_{s + 1}{t + 1}"
                    # tensoring with A_i e_s (x) e_t A_j maps rep(j) to rep(i)
                    morphisms.append(OneMorphism(name, objects[j], objects[i]))
                    info[name] = ("F", i, j, s, t)

    corner_dims = {}
    for j in range(n):
        A = data.algebras[j]
        k = len(A.idempotents)
        corner_dims[j] = [[alg.corner_dim(A, t, u) for u in range(k)] for t in range(k)]

    table = {}
    star = {}
    for m in morphisms:
        if m.is_identity:
            star[m.name] = m.name
        else:
            _, i, j, s, t = info[m.name]
            star[m.name] = f"F{j + 1}{i + 1}_{t + 1}{s + 1}"
    for f in morphisms:
        for g in morphisms:
            if f.src != g.tgt:
                continue
            if f.is_identity and g.is_identity:
                table[(f.name, g.name)] = {f.name: 1}
            elif f.is_identity:
                table[(f.name, g.name)] = {g.name: 1}
            elif g.is_identity:
                table[(f.name, g.name)] = {f.name: 1}
            else:
                _, i, j, s, t = info[f.name]
                _, j2, k, u, v = info[g.name]
                mult = corner_dims[j][t][u]
                target = f"F{i + 1}{k + 1}_{s + 1}{v + 1}"
                table[(f.name, g.name)] = {target: mult} if mult else {}

    ms = MultiSemigroup(objects, morphisms, table, star)
    if not identity_products_clean(ms):
        raise DataInconsistencyError("an identity appeared in a non-identity product")
    struct = cells(ms)
    non_identity = [c for c in struct.two_sided_cells if len(c) > 1 or not ms.morphisms[c[0]].is_identity]
    for cell in non_identity:
        if not is_strongly_regular(ms, cell):
            raise DataInconsistencyError(f"cell {cell!r} is not strongly regular")

    cellrep = _build_cellrep(data, info, corner_dims, morphisms)
    return CcxBuild(
        data=data,
        ms=ms,
        cellrep=cellrep,
        x_spaces=tuple(x_spaces),
        morphism_info=info,
    )


def _build_cellrep(data: CcxData, info, corner_dims, morphisms) -> CellRepData:
    """Action matrices on simple classes for the left cell of F^{(i,1)}_{s,1}."""
    n = len(data.algebras)
    simple_index = {}
    simple_labels = []
    for i in range(n):
        for u in range(len(data.algebras[i].idempotents)):
            simple_index[(i, u)] = len(simple_labels)
            simple_labels.append(f"L{i + 1}.{u + 1}")
    total = len(simple_labels)
    left_cell = tuple(
        sorted(
            name
            for name, inf in info.items()
            if inf[0] == "F" and inf[2] == 0 and inf[4] == 0
        )
    )
    projective_labels = tuple(f"P({name})" for name in left_cell)
    cartan = {
        i: [[corner_dims[i][w][s] for s in range(len(data.algebras[i].idempotents))]
            for w in range(len(data.algebras[i].idempotents))]
        for i in range(n)
    }
    actions = {}
    for m in morphisms:
        mat = [[0] * total for _ in range(total)]
        if m.is_identity:
            _, i = info[m.name]
            for u in range(len(data.algebras[i].idempotents)):
                k = simple_index[(i, u)]
                mat[k][k] = 1
        else:
            _, i, j, s, t = info[m.name]
            col = simple_index[(j, t)]
            for w in range(len(data.algebras[i].idempotents)):
                mat[simple_index[(i, w)]][col] = cartan[i][w][s]
        actions[m.name] = tuple(tuple(row) for row in mat)
    return CellRepData(
        left_cell=left_cell,
        simple_labels=tuple(simple_labels),
        projective_labels=projective_labels,
        actions=actions,
    )


def commutant_dimension(rep: CellRepData) -> int:
    """Dimension of the joint commutant of all action matrices."""
    nsim = len(rep.simple_labels)
    eqs = []
    for mat in rep.actions.values():
        for p in range(nsim):
            for q in range(nsim):
                row = {}
                for k in range(nsim):
                    if mat[k][q]:
                        row[p * nsim + k] = row.get(p * nsim + k, 0) + mat[k][q]
                    if mat[p][k]:
                        key = k * nsim + q
                        row[key] = row.get(key, 0) - mat[p][k]
                row = {k: v for k, v in row.items() if v}
                if row:
                    eqs.append(row)
    if not eqs:
        return nsim * nsim
    return len(linalg.nullspace(eqs, nsim * nsim))


# -- verification suites ----------------------------------------------------


def verify_closed_form_composition(build: CcxBuild, seed: int = 0) -> list:
    """Check every composable pair: the honest tensor product is isomorphic
    to the table's closed-form multiple dim(e_t A e_u) of the predicted
    projective bimodule."""
    records = []
    ms = build.ms
    for f, g in sorted(ms.table):
        expected = ms.table[(f, g)]
        T = tensor_over(build.bimodule(f), build.bimodule(g))
        values = {"pair": f"{f} o {g}"}
        if not expected:
            ok = T.dim == 0
            values.update({"closed_form": "0", "tensor_dim": T.dim})
        else:
            ((h, k),) = expected.items()
            base = build.bimodule(h)
            values.update(
                {
                    "closed_form": f"{k}*{h}",
                    "closed_form_dim": k * base.dim,
                    "tensor_dim": T.dim,
                }
            )
            ok = iso_to_direct_power(T, base, k, seed=seed)
            values["isomorphic"] = ok
        records.append(
            CheckRecord(
                name=f"closed_form[{f} o {g}]",
                anchor="composition-closed-form",
                values=values,
                passed=ok,
            )
        )
    return records


def verify_dimension_identities(build: CcxBuild, left_cell=None) -> list:
    """For H, K in a left cell of the non-identity cell: the 2-morphism space
    dimension factors as dim Hom(P_H, P_K) * dim End(P_G), and the adjoint
    composites K* o H = b G and H o K* = a F carry b = dim Hom(P_H, P_K),
    a = dim End(P_G).  (Here G is the Duflo involution of H and K's own left
    cell; the multiplicity function is read with that normalization.)"""
    ms = build.ms
    cell = tuple(left_cell) if left_cell else build.cellrep.left_cell
    g_name = duflo(ms, cell)
    _, gi, gj, gs, gt = build.info(g_name)
    end_pg = alg.corner_dim(build.algebra_at(gi), gs, gs)
    records = []
    for h in cell:
        _, hi, hj, hs, ht = build.info(h)
        for k in cell:
            _, ki, kj, ks, kt = build.info(k)
            if hi != ki:
                continue  # the 2-morphism space is empty across objects
            A = build.algebra_at(hi)
            hom = hom_dim(build.bimodule(h), build.bimodule(k))
            hom_proj = alg.corner_dim(A, hs, ks)
            b_mult = ms.compose(ms.star[k], h).get(g_name, 0)
            hk_star = ms.compose(h, ms.star[k])
            a_mult = next(iter(hk_star.values()), 0)
            ok = (
                hom == hom_proj * end_pg
                and b_mult == hom_proj
                and a_mult == end_pg
            )
            records.append(
                CheckRecord(
                    name=f"dimension_identity[{h},{k}]",
                    anchor="hom-dimension-product-law",
                    values={
                        "dim_hom": hom,
                        "dim_hom_projectives": hom_proj,
                        "dim_end_duflo": end_pg,
                        "b_multiplicity": b_mult,
                        "a_multiplicity": a_mult,
                    },
                    passed=ok,
                )
            )
    return records


def verify_duflo_hom_dimension(build: CcxBuild) -> list:
    """dim Hom(G, identity) = dim End(P_G) for every Duflo involution
    G = F^{(i,i)}_{ss}, computed by the generic hom-space solver."""
    records = []
    for i, A in enumerate(build.data.algebras):
        for s in range(len(A.idempotents)):
            g = f"F{i + 1}{i + 1}_{s + 1}{s + 1}"
            hom = hom_dim(build.bimodule(g), build.bimodule(f"I{i + 1}"))
            corner = alg.corner_dim(A, s, s)
            records.append(
                CheckRecord(
                    name=f"duflo_hom_dimension[{g}]",
                    anchor="duflo-hom-equals-corner",
                    values={"dim_hom_to_identity": hom, "dim_end_projective": corner},
                    passed=hom == corner,
                )
            )
    return records


def verify_center_surjectivity(build: CcxBuild, expect_surjective=None) -> list:
    """Does X_i, acting by central multiplication, surject onto End(P_G) for
    the Duflo involution of the default cell?  Reports both dimensions; when
    an expectation is given the record asserts it (predicted negatives are
    counterexample fixtures, not regressions)."""
    ms = build.ms
    g_name = duflo(ms, build.cellrep.left_cell)
    _, gi, _, gs, _ = build.info(g_name)
    A = build.algebra_at(gi)
    e = A.idempotents[gs]
    x_space = build.x_spaces[gi]
    image = Subspace.from_vectors(
        [A.mul(e, A.mul(z, e)) for z in x_space], A.dim
    )
    corner = alg.corner_dim(A, gs, gs)
    surjective = image.dim == corner
    values = {
        "object": gi + 1,
        "dim_image": image.dim,
        "dim_end_projective": corner,
        "surjective": surjective,
    }
    if expect_surjective is None:
        passed, negative = True, False
    else:
        passed = surjective == expect_surjective
        negative = not expect_surjective
    return [
        CheckRecord(
            name=f"center_surjectivity[{g_name}]",
            anchor="center-action-on-duflo-projective",
            values=values,
            passed=passed,
            negative=negative,
        )
    ]


def _projective_pair_coords(A: alg.FinDimAlgebra, s: int, t: int, u, v):
    """Coordinates of the simple tensor u (x) v in the basis used by
    proj_bimodule(A, s, A, t)."""
    left_ideal = alg.left_ideal(A, A.idempotents[s])
    right_ideal = Subspace.from_vectors(
        [A.mul(A.idempotents[t], linalg.unit(A.dim, k)) for k in range(A.dim)],
        A.dim,
    )
    cu = alg._coords_in(left_ideal, u)
    cv = alg._coords_in(right_ideal, v)
    if cu is None or cv is None:
        raise BimoduleError("tensor factors outside the projective bimodule")
    q = right_ideal.dim
    return {
        iu * q + iv: a * b
        for iu, a in enumerate(cu)
        if a
        for iv, b in enumerate(cv)
        if b
    }


def verify_center_separation(build: CcxBuild) -> list:
    """For every object, primitive idempotent e and nonzero z in a basis of
    e rad(Z) e: the tensors e (x) z and z (x) e are linearly independent in
    (A e)(x)(e A), so central multiplication on the two sides differs."""
    records = []
    for i, A in enumerate(build.data.algebras):
        centre = alg.center(A)
        rad = alg.radical(A)
        rad_centre = centre.intersect(rad)
        for s, e in enumerate(A.idempotents):
            gens = [A.mul(e, A.mul(z, e)) for z in rad_centre]
            corner_rad = Subspace.from_vectors(gens, A.dim)
            if corner_rad.dim == 0:
                records.append(
                    CheckRecord(
                        name=f"center_separation[object {i + 1},e{s + 1}]",
                        anchor="central-radical-separation",
                        values={"central_radical_dim": 0, "note": "vacuous"},
                        passed=True,
                    )
                )
                continue
            for z in corner_rad:
                c1 = _projective_pair_coords(A, s, s, e, z)
                c2 = _projective_pair_coords(A, s, s, z, e)
                independent = _rank2(c1, c2)
                records.append(
                    CheckRecord(
                        name=f"center_separation[object {i + 1},e{s + 1},z={A.describe(z)}]",
                        anchor="central-radical-separation",
                        values={
                            "element": A.describe(z),
                            "independent": independent,
                        },
                        passed=independent,
                    )
                )
    return records


def _rank2(c1: dict, c2: dict) -> bool:
    ech = SparseEchelon(1 + max(list(c1) + list(c2)))
    ech.insert(c1)
    ech.insert(c2)
    return ech.dim == 2


def verify_commutant(build: CcxBuild) -> list:
    """Decategorified Schur check: the joint commutant of the cell
    representation's action matrices is one-dimensional."""
    dim = commutant_dimension(build.cellrep)
    return [
        CheckRecord(
            name="commutant_dimension",
            anchor="decategorified-schur",
            values={"dim": dim},
            passed=dim == 1,
        )
    ]
