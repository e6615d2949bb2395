"""Graded layer: gradings on the fixture algebras, the induced grading on
the 2-category they generate, positivity, the minimal-hom-degree and
top-corner-degree invariants, the dual-shift identity and the Hilbert-series
transfer identity.

Gradings are required non-negative with degree-0 part spanned by the
idempotents.  Grading shifts follow the convention (M<1>)_i = M_{i+1}: an
element of degree d has degree d - c in the copy shifted by c.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import algebra as alg
from . import bimod, linalg
from .bimod import Bimodule, CcxBuild, CcxData, IsoTestInconclusive
from .laurent import LaurentPoly
from .linalg import Q0, Subspace
from .mscell import duflo, duflo_multiplicity, cells
from .report import CheckRecord


class GradedError(ValueError):
    pass


@dataclass
class GradedAlgebra:
    """A validated algebra with a degree for each basis element."""

    base: alg.FinDimAlgebra
    degrees: tuple

    def __post_init__(self):
        self.degrees = tuple(int(d) for d in self.degrees)
        A = self.base
        if len(self.degrees) != A.dim:
            raise GradedError("one degree per basis element required")
        if any(d < 0 for d in self.degrees):
            raise GradedError("gradings must be non-negative")
        for i in range(A.dim):
            for j in range(A.dim):
                target = self.degrees[i] + self.degrees[j]
                for r, c in enumerate(A.mult[i][j]):
                    if c and self.degrees[r] != target:
                        raise GradedError(
                            f"product {A.basis[i]}*{A.basis[j]} is not homogeneous "
                            f"of degree {target}"
                        )
        degree_zero = [k for k, d in enumerate(self.degrees) if d == 0]
        idem_span = Subspace.from_vectors(A.idempotents, A.dim)
        if idem_span.dim != len(degree_zero):
            raise GradedError("degree-0 part must be spanned by the idempotents")
        for e in A.idempotents:
            if any(c and self.degrees[k] != 0 for k, c in enumerate(e)):
                raise GradedError("idempotents must be homogeneous of degree 0")

    def hilbert(self, subspace: Subspace) -> LaurentPoly:
        """Hilbert series of a homogeneous subspace (canonical bases of
        homogeneous subspaces are homogeneous, so degrees are read off)."""
        counts: dict[int, int] = {}
        for v in subspace:
            degs = {self.degrees[k] for k, c in enumerate(v) if c}
            if len(degs) != 1:
                raise GradedError("subspace is not homogeneous")
            d = degs.pop()
            counts[d] = counts.get(d, 0) + 1
        return LaurentPoly(counts)

    def corner_hilbert(self, s: int, t: int | None = None) -> LaurentPoly:
        return self.hilbert(alg.corner_subspace(self.base, s, s if t is None else t))


def build_graded_ccx(
    graded_algebras,
    x_subalgebras=None,
    shifts=None,
    name: str = "graded-ccx",
) -> CcxBuild:
    """Construct the 2-category data with gradings and representative shifts.

    shifts maps morphism names to integers (identities are pinned at 0);
    when omitted, the default symmetrizing rule assigns F^{(i,j)}_{st} the
    shift top_degree(e_t A_j e_t)/2 and rejects odd top degrees."""
    graded_algebras = list(graded_algebras)
    data = CcxData(
        algebras=tuple(g.base for g in graded_algebras),
        x_subalgebras=x_subalgebras,
        name=name,
    )
    build = bimod.build_ccx(data)
    build.gradings = tuple(g.degrees for g in graded_algebras)
    if shifts is None:
        shifts = default_shifts(build, graded_algebras)
    else:
        shifts = dict(shifts)
        for nm, info in build.morphism_info.items():
            if info[0] == "I" and shifts.get(nm, 0) != 0:
                raise GradedError("identity morphisms must have shift 0")
            shifts.setdefault(nm, 0)
    build.shifts = shifts
    return build


def default_shifts(build: CcxBuild, graded_algebras) -> dict:
    shifts = {}
    for nm, info in build.morphism_info.items():
        if info[0] == "I":
            shifts[nm] = 0
            continue
        _, i, j, s, t = info
        series = graded_algebras[j].corner_hilbert(t)
        top = series.degree
        if top % 2:
            raise GradedError(
                f"no symmetric shift for {nm}: corner top degree {top} is odd"
            )
        shifts[nm] = top // 2
    return shifts


# -- graded hom series ------------------------------------------------------


def _hom_degree_split(M: Bimodule, N: Bimodule, homs):
    """Split hom matrices into homogeneous components keyed by degree."""
    if M.degrees is None or N.degrees is None:
        raise GradedError("graded hom series needs graded bimodules")
    split: dict[int, list] = {}
    for mat in homs:
        parts: dict[int, dict] = {}
        for p in range(N.dim):
            for q in range(M.dim):
                v = mat[p][q]
                if v:
                    d = N.degrees[p] - M.degrees[q]
                    parts.setdefault(d, {})[p * M.dim + q] = v
        for d, vecs in parts.items():
            split.setdefault(d, []).append(vecs)
    return split


def graded_hom_series(M: Bimodule, N: Bimodule, homs=None) -> LaurentPoly:
    """Coefficient at i = dimension of the homs shifting degree by i."""
    homs = bimod.hom_space(M, N) if homs is None else homs
    split = _hom_degree_split(M, N, homs)
    coeffs = {}
    total = 0
    for d, vecs in split.items():
        r = linalg.rank(vecs, N.dim * M.dim)
        coeffs[d] = r
        total += r
    if total != len(homs):
        raise GradedError("graded decomposition lost hom dimensions")
    return LaurentPoly(coeffs)


def _degree_zero_homs(M: Bimodule, N: Bimodule, homs):
    zero = _hom_degree_split(M, N, homs).get(0, [])
    mats = []
    for svec in zero:
        mats.append(
            tuple(
                tuple(svec.get(p * M.dim + q, Q0) for q in range(M.dim))
                for p in range(N.dim)
            )
        )
    return mats


def graded_iso_test(M: Bimodule, N: Bimodule, seed: int = 0, tries: int = 48) -> bool:
    """Graded isomorphism: a degree-0 invertible intertwiner exists."""
    if M.dim != N.dim:
        return False
    if sorted(M.degrees) != sorted(N.degrees):
        return False
    if M.dim == 0:
        return True
    homs = bimod.hom_space(M, N)
    zero_homs = _degree_zero_homs(M, N, homs)
    if not zero_homs:
        return False
    rng = random.Random(seed)
    if bimod._random_invertible_combo(zero_homs, M.dim, rng, tries) is not None:
        return True
    back = _degree_zero_homs(N, M, bimod.hom_space(N, M))
    if not back:
        return False
    if not bimod._identity_in_composition_span(zero_homs, back, M.dim):
        return False
    if not bimod._identity_in_composition_span(back, zero_homs, N.dim):
        return False
    raise IsoTestInconclusive(f"graded iso test inconclusive for {M.name} vs {N.name}")


# -- star (adjoint) of a graded bimodule ------------------------------------


def star_bimodule(M: Bimodule, left_degrees=None) -> Bimodule:
    """The adjoint bimodule Hom_{A-left}(M, A) with actions
    (b . phi . a)(m) = phi(m b) a, computed by the generic solver.

    left_degrees grades the codomain algebra A; when both gradings are
    present the result is graded by hom degree.  For a projective bimodule
    (A e_s)(x)(e_t B) shifted by c this realizes the expected dual
    (B e_t)(x)(e_s A) shifted by top(e_t B e_t) - c, but nothing of that
    closed form is used here."""
    A = M.left_algebra
    B = M.right_algebra
    dm, da = M.dim, A.dim

    # solve phi . L^M(a) = L^A(a) . phi (left A-linearity only)
    def y_index(p, q):
        return p * dm + q

    eqs = []
    for g in alg.algebra_generators(A):
        g_on_m = M.left_of(g)
        lmat = A.left_mult_matrix(g)
        for q in range(dm):
            mcol = g_on_m[q]
            for p in range(da):
                row = {y_index(p, k): v for k, v in mcol.items()}
                for k in range(da):
                    if lmat[p][k]:
                        key = y_index(k, q)
                        row[key] = row.get(key, Q0) - lmat[p][k]
                if row:
                    eqs.append(row)
    basis_vecs = linalg.nullspace(eqs, da * dm)
    mats = [
        tuple(tuple(v[y_index(p, q)] for q in range(dm)) for p in range(da))
        for v in basis_vecs
    ]
    n = len(mats)

    degrees = None
    if M.degrees is not None and left_degrees is not None:
        left_degrees = tuple(left_degrees)
        degrees = []
        for mat in mats:
            degs = {
                left_degrees[p] - M.degrees[q]
                for p in range(da)
                for q in range(dm)
                if mat[p][q]
            }
            if len(degs) != 1:
                raise GradedError("dual basis element is not homogeneous")
            degrees.append(degs.pop())

    def coords(target_mat):
        rows = []
        rhs = []
        for p in range(da):
            for q in range(dm):
                rows.append(tuple(m[p][q] for m in mats))
                rhs.append(target_mat[p][q])
        sol = linalg.solve(rows, rhs)
        if sol is None:
            raise GradedError("action left the dual hom space")
        return sol

    left_action = []
    for jb in range(B.dim):
        rb = M.right_action[jb]  # columns of (x -> x . b_j) on M
        cols = []
        for m in mats:
            composed = [
                tuple(
                    sum((m[p][k] * v for k, v in rb[q].items()), Q0)
                    for q in range(dm)
                )
                for p in range(da)
            ]
            sol = coords(composed)
            cols.append({r: v for r, v in enumerate(sol) if v})
        left_action.append(tuple(cols))

    right_action = []
    for ia in range(da):
        rmat = A.right_mult_matrix(linalg.unit(da, ia))
        cols = []
        for m in mats:
            composed = [
                tuple(
                    sum((rmat[p][k] * m[k][q] for k in range(da) if rmat[p][k]), Q0)
                    for q in range(dm)
                )
                for p in range(da)
            ]
            sol = coords(composed)
            cols.append({r: v for r, v in enumerate(sol) if v})
        right_action.append(tuple(cols))

    return Bimodule(
        B,
        A,
        n,
        left_action,
        right_action,
        labels=tuple(f"phi{r}" for r in range(n)),
        degrees=degrees,
        name=f"dual({M.name})",
    )


# -- positivity and the graded invariants ------------------------------------


def _same_pair_names(build: CcxBuild):
    """Morphism names grouped by their (target, source) algebra pair."""
    groups: dict = {}
    for nm, info in build.morphism_info.items():
        key = (info[1], info[1]) if info[0] == "I" else (info[1], info[2])
        groups.setdefault(key, []).append(nm)
    return groups


def positivity_check(build: CcxBuild) -> list:
    """Positive grading: homs between distinct shifted indecomposables live in
    strictly positive degrees, and degree-0 endomorphisms are scalars."""
    if build.gradings is None or build.shifts is None:
        raise GradedError("positivity check needs graded data with shifts")
    records = []
    for _, names in sorted(_same_pair_names(build).items()):
        for f in sorted(names):
            for g in sorted(names):
                series = graded_hom_series(build.bimodule(f), build.bimodule(g))
                values = {"pair": f"{f} -> {g}", "series": series.format("t")}
                if f == g:
                    ok = series.coeff(0) == 1
                    values["end_degree_zero"] = series.coeff(0)
                    name = f"scalar_degree_zero_end[{f}]"
                else:
                    ok = (not series) or series.valuation > 0
                    values["min_degree"] = (
                        series.valuation if series else "empty"
                    )
                    name = f"positive_hom[{f} -> {g}]"
                records.append(
                    CheckRecord(
                        name=name,
                        anchor="positive-grading",
                        values=values,
                        passed=ok,
                    )
                )
    return records


def min_hom_degree_to_identity(build: CcxBuild, left_cell=None) -> int:
    """Smallest degree of a nonzero graded hom from the (shifted) Duflo
    bimodule to the identity bimodule."""
    cell = tuple(left_cell) if left_cell else build.cellrep.left_cell
    g_name = duflo(build.ms, cell)
    _, gi, _, _, _ = build.info(g_name)
    series = graded_hom_series(
        build.bimodule(g_name), build.bimodule(f"I{gi + 1}")
    )
    if not series:
        raise GradedError(
            "hom space from the Duflo involution to the identity is zero"
        )
    return series.valuation


def top_corner_degree(build: CcxBuild, left_cell=None) -> int:
    """Top degree of the graded local algebra e_G A e_G of the Duflo corner."""
    cell = tuple(left_cell) if left_cell else build.cellrep.left_cell
    g_name = duflo(build.ms, cell)
    _, gi, _, gs, _ = build.info(g_name)
    ga = GradedAlgebra(build.algebra_at(gi), build.gradings[gi])
    return ga.corner_hilbert(gs).degree


def verify_dual_shift_identity(build: CcxBuild, left_cell=None, seed: int = 0) -> list:
    """The adjoint of the shifted Duflo bimodule is the same bimodule shifted
    by l - 2a (graded isomorphism via a degree-0 invertible intertwiner)."""
    cell = tuple(left_cell) if left_cell else build.cellrep.left_cell
    g_name = duflo(build.ms, cell)
    _, gi, _, _, _ = build.info(g_name)
    a_val = min_hom_degree_to_identity(build, cell)
    l_val = top_corner_degree(build, cell)
    g_bim = build.bimodule(g_name)
    dual = star_bimodule(g_bim, left_degrees=build.gradings[gi])
    target = g_bim.shifted(l_val - 2 * a_val)
    ok = graded_iso_test(dual, target, seed=seed)
    values = {
        "duflo": g_name,
        "min_hom_degree": a_val,
        "top_corner_degree": l_val,
        "shift": l_val - 2 * a_val,
        "dual_degrees": sorted(dual.degrees),
        "target_degrees": sorted(target.degrees),
        "isomorphic": ok,
    }
    return [
        CheckRecord(
            name=f"dual_shift_identity[{g_name}]",
            anchor="dual-shift-identity",
            values=values,
            passed=ok,
        )
    ]


def verify_hilbert_transfer(build: CcxBuild, left_cell=None, other_cell=None) -> list:
    """Hilbert-series transfer between two left cells of one two-sided cell:
    chi_G = chi_F * psi with psi an exact nonnegative quotient, constant term
    one, and psi(1) consistent with the constancy of the Duflo multiplicity."""
    struct = cells(build.ms)
    cell = tuple(left_cell) if left_cell else build.cellrep.left_cell
    g_name = duflo(build.ms, cell)
    if other_cell is None:
        two_sided = struct.two_sided_cell_of(g_name)
        candidates = [
            c for c in struct.left_cells if set(c) <= set(two_sided)
        ]
        other_cell = candidates[-1] if len(candidates) > 1 else cell
    other_cell = tuple(other_cell)
    right_of_g = set(struct.right_cell_of(g_name))
    inter = sorted(set(other_cell) & right_of_g)
    if len(inter) != 1:
        raise GradedError("cells do not intersect in a single element")
    f_name = inter[0]
    _, gi, _, gs, _ = build.info(g_name)
    _, fi, _, fs, _ = build.info(f_name)
    ga_g = GradedAlgebra(build.algebra_at(gi), build.gradings[gi])
    ga_f = GradedAlgebra(build.algebra_at(fi), build.gradings[fi])
    chi_g = ga_g.corner_hilbert(gs)
    chi_f = ga_f.corner_hilbert(fs)
    psi = chi_g.divide_exact(chi_f)
    m_g = duflo_multiplicity(build.ms, g_name)
    m_f = duflo_multiplicity(build.ms, f_name)
    checks = {
        "division_exact": psi is not None,
        "nonnegative": psi is not None and psi.is_nonnegative(),
        "constant_term_one": psi is not None and psi.coeff(0) == 1,
        "no_negative_powers": psi is not None and (not psi or psi.valuation >= 0),
        "chi_g_constant_term_one": chi_g.coeff(0) == 1,
        "top_degrees_match": chi_g.degree == chi_f.degree,
        "multiplicity_ratio": psi is not None and psi(1) * m_f == m_g,
    }
    values = {
        "duflo": g_name,
        "transfer_element": f_name,
        "chi_G": chi_g.format("t"),
        "chi_F": chi_f.format("t"),
        "psi": psi.format("t") if psi is not None else "undefined",
        "psi_at_one": psi(1) if psi is not None else "undefined",
        "m_G": m_g,
        "m_F": m_f,
    }
    values.update(checks)
    return [
        CheckRecord(
            name=f"hilbert_transfer[{g_name},{f_name}]",
            anchor="hilbert-series-transfer",
            values=values,
            passed=all(checks.values()),
        )
    ]
