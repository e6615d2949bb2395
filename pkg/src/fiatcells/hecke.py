"""Kazhdan-Lusztig combinatorics for small Coxeter groups, and the
Robinson-Schensted oracle for type A.

The Hecke algebra is taken over Z[v, v^-1] with T_s^2 = (v^-1 - v) T_s + T_e,
and the canonical basis is the positive one determined by b_s = T_s + v T_e
(so b_s b_s = (v + v^-1) b_s and all structure constants specialize to
non-negative integers at v = 1).  Multisemigroup export swaps sides so that
the computed left cells match the convention in which left cells of the
2-category are Kazhdan-Lusztig right cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterGroup, coxeter_group
from .laurent import LaurentPoly
from .mscell import MultiSemigroup, OneMorphism, CellStructure

DEFAULT_SIZE_BOUND = 24

_V = LaurentPoly.monomial(1, 1)
_VINV = LaurentPoly.monomial(1, -1)


class SizeLimitError(ValueError):
    """Group too large for the Kazhdan-Lusztig computation bound."""


class HeckeDataError(ValueError):
    """Computed Hecke data violates a structural guarantee."""


@dataclass(frozen=True)
class HeckeElement:
    """An element of the Hecke algebra in the standard (T) basis."""

    group: CoxeterGroup
    coeffs: tuple  # sorted tuple of (element, LaurentPoly)

    @classmethod
    def from_dict(cls, group: CoxeterGroup, data: dict) -> "HeckeElement":
        items = tuple(sorted((x, c) for x, c in data.items() if c))
        return cls(group, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def coeff(self, x: int) -> LaurentPoly:
        return dict(self.coeffs).get(x, LaurentPoly.zero())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for x, c in other.coeffs:
            out[x] = out.get(x, LaurentPoly.zero()) + c
        return HeckeElement.from_dict(self.group, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for x, c in other.coeffs:
            out[x] = out.get(x, LaurentPoly.zero()) - c
        return HeckeElement.from_dict(self.group, out)

    def scaled(self, poly: LaurentPoly) -> "HeckeElement":
        return HeckeElement.from_dict(
            self.group, {x: c * poly for x, c in self.coeffs}
        )


def _left_product(group: CoxeterGroup, s: int, x: int) -> int:
    # s * x = (x^-1 * s)^-1
    return group.inverse[group.mult_gen[group.inverse[x]][s]]


def _t_gen_left(group: CoxeterGroup, data: dict, s: int) -> dict:
    """T_s * (element in T coordinates)."""
    out: dict[int, LaurentPoly] = {}
    quad = _VINV - _V
    for x, c in data.items():
        sx = _left_product(group, s, x)
        if group.length(sx) > group.length(x):
            out[sx] = out.get(sx, LaurentPoly.zero()) + c
        else:
            out[sx] = out.get(sx, LaurentPoly.zero()) + c
            out[x] = out.get(x, LaurentPoly.zero()) + quad * c
    return {x: c for x, c in out.items() if c}


def _t_gen_right(group: CoxeterGroup, data: dict, s: int) -> dict:
    """(element in T coordinates) * T_s."""
    out: dict[int, LaurentPoly] = {}
    quad = _VINV - _V
    for x, c in data.items():
        xs = group.mult_gen[x][s]
        if group.length(xs) > group.length(x):
            out[xs] = out.get(xs, LaurentPoly.zero()) + c
        else:
            out[xs] = out.get(xs, LaurentPoly.zero()) + c
            out[x] = out.get(x, LaurentPoly.zero()) + quad * c
    return {x: c for x, c in out.items() if c}


def _scale(data: dict, poly: LaurentPoly) -> dict:
    return {x: c * poly for x, c in data.items() if c * poly}


def _add_into(acc: dict, data: dict, factor: LaurentPoly | None = None) -> None:
    for x, c in data.items():
        if factor is not None:
            c = c * factor
        if c:
            acc[x] = acc.get(x, LaurentPoly.zero()) + c
            if not acc[x]:
                del acc[x]


def _t_word_left(group: CoxeterGroup, data: dict, word) -> dict:
    for s in reversed(word):
        data = _t_gen_left(group, data, s)
    return data


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the Hecke algebra (T-basis coordinates)."""
    group = a.group
    bd = b.as_dict()
    acc: dict[int, LaurentPoly] = {}
    for x, c in a.coeffs:
        _add_into(acc, _t_word_left(group, bd, group.words[x]), c)
    return HeckeElement.from_dict(group, acc)


def _bar_t_basis(group: CoxeterGroup) -> list[dict]:
    """bar(T_w) for every w, via bar(T_w) = T_{s1}^-1 ... T_{sk}^-1."""
    bar = [dict() for _ in range(group.order)]
    bar[group.identity] = {group.identity: LaurentPoly.one()}
    vminus = _V - _VINV
    for x in sorted(range(group.order), key=group.length):
        if x == group.identity:
            continue
        word = group.words[x]
        prefix = group.identity
        for s in word[:-1]:
            prefix = group.mult_gen[prefix][s]
        s = word[-1]
        # bar(T_x) = bar(T_prefix) * T_s^-1,  T_s^-1 = T_s + (v - v^-1)
        base = bar[prefix]
        out = _t_gen_right(group, base, s)
        _add_into(out, base, vminus)
        bar[x] = {w: c for w, c in out.items() if c}
    return bar


def bar_involution(elem: HeckeElement) -> HeckeElement:
    """The bar involution: v -> v^-1 and T_w -> T_{w^-1}^-1."""
    group = elem.group
    bar_t = _bar_t_basis(group)
    acc: dict[int, LaurentPoly] = {}
    for x, c in elem.coeffs:
        _add_into(acc, bar_t[x], c.bar())
    return HeckeElement.from_dict(group, acc)


def kl_basis(group: CoxeterGroup, bound: int = DEFAULT_SIZE_BOUND) -> list[HeckeElement]:
    """The canonical (Kazhdan-Lusztig) basis {b_w} in T coordinates.

    Computed by the standard recursion b_w = b_s b_{sw} - sum mu(x, sw) b_x,
    peeling correction terms by constant coefficients from the top down.
    """
    if group.order > bound:
        raise SizeLimitError(
            f"group of order {group.order} exceeds the bound {bound}"
        )
    basis: list[HeckeElement | None] = [None] * group.order
    basis[group.identity] = HeckeElement.from_dict(
        group, {group.identity: LaurentPoly.one()}
    )
    for w in sorted(range(group.order), key=group.length):
        if w == group.identity:
            continue
        word = group.words[w]
        s = word[0]
        rest = group.identity
        for g in word[1:]:
            rest = group.mult_gen[rest][g]
        sub = basis[rest].as_dict()
        # b_s * b_{sw} = (T_s + v) * b_{sw}
        prod = _t_gen_left(group, sub, s)
        _add_into(prod, sub, _V)
        # corrections may create support at shorter elements, so scan them all
        for x in sorted(range(group.order), key=group.length, reverse=True):
            if x == w:
                continue
            c = prod.get(x)
            if not c:
                continue
            m = c.coeff(0)
            if m:
                _add_into(prod, basis[x].as_dict(), LaurentPoly.monomial(-m, 0))
        elem = HeckeElement.from_dict(group, prod)
        if elem.coeff(w) != LaurentPoly.one():
            raise HeckeDataError(f"canonical basis recursion failed at {group.name(w)}")
        for x, c in elem.coeffs:
            if x != w and (c.coeff(0) or (c.valuation is not None and c.valuation < 0)):
                raise HeckeDataError(
                    f"coefficient of T_{group.name(x)} in b_{group.name(w)} is "
                    f"not in v*Z[v]: {c.format('v')}"
                )
        basis[w] = elem
    return basis


def kl_expand(group: CoxeterGroup, element: HeckeElement, basis=None) -> dict:
    """Coordinates of a Hecke element in the canonical basis."""
    if basis is None:
        basis = kl_basis(group)
    acc = element.as_dict()
    out: dict[int, LaurentPoly] = {}
    for x in sorted(range(group.order), key=group.length, reverse=True):
        c = acc.get(x)
        if not c:
            continue
        out[x] = c
        _add_into(acc, basis[x].as_dict(), -c)
    if any(acc.values()):
        raise HeckeDataError("canonical-basis expansion left a nonzero remainder")
    return {x: c for x, c in out.items() if c}


def kl_product_at_one(group: CoxeterGroup, x: int, y: int, basis=None) -> dict:
    """Multiset expansion of b_x b_y in the canonical basis, specialized at v=1."""
    if basis is None:
        basis = kl_basis(group)
    prod = multiply(basis[x], basis[y])
    out = {}
    for z, poly in kl_expand(group, prod, basis).items():
        val = poly(1)
        if val < 0 or any(c < 0 for c in poly.coeffs.values()):
            raise HeckeDataError(
                f"negative canonical structure constant at {group.name(z)}: "
                f"{poly.format('v')}"
            )
        if val:
            out[z] = val
    return out


def export_multisemigroup(
    group: CoxeterGroup, bound: int = DEFAULT_SIZE_BOUND
) -> MultiSemigroup:
    """The multisemigroup of the projective-functor 2-category of the group.

    Morphism labels are the canonical words ('e' for the identity).  The
    table entry for (th_x, th_y) is the canonical-basis expansion of
    b_y b_x at v=1: the side swap makes the computed left cells match the
    convention in which they are Kazhdan-Lusztig right cells.
    """
    basis = kl_basis(group, bound)
    obj = "i"
    morphisms = [
        OneMorphism(group.name(x), obj, obj, is_identity=(x == group.identity))
        for x in range(group.order)
    ]
    table = {}
    for x in range(group.order):
        for y in range(group.order):
            prod = kl_product_at_one(group, y, x, basis)
            table[(group.name(x), group.name(y))] = {
                group.name(z): k for z, k in prod.items()
            }
    star = {group.name(x): group.name(group.inverse[x]) for x in range(group.order)}
    return MultiSemigroup([obj], morphisms, table, star)


# -- Robinson-Schensted -------------------------------------------------


@dataclass(frozen=True)
class TableauPair:
    """A pair (P, Q) of standard Young tableaux of the same shape."""

    p_rows: tuple
    q_rows: tuple

    def __post_init__(self):
        for rows in (self.p_rows, self.q_rows):
            if not _is_standard(rows):
                raise ValueError(f"not a standard tableau: {rows!r}")
        if self.shape != tuple(len(r) for r in self.q_rows):
            raise ValueError("P and Q must have equal shapes")

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.p_rows)


def _is_standard(rows) -> bool:
    n = sum(len(r) for r in rows)
    entries = [x for r in rows for x in r]
    if sorted(entries) != list(range(1, n + 1)):
        return False
    for r in rows:
        if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
            return False
    for i in range(len(rows) - 1):
        if len(rows[i + 1]) > len(rows[i]):
            return False
        if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
            return False
    return True


def rsk(perm) -> TableauPair:
    """Row-insertion Robinson-Schensted pair of a permutation of {1..n}.

    >>> rsk((2, 1, 3)).shape
    (2, 1)
    """
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm!r} is not a permutation of 1..{n}")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(perm, start=1):
        x = value
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            bumped = next((j for j, y in enumerate(p_rows[row]) if y > x), None)
            if bumped is None:
                p_rows[row].append(x)
                q_rows[row].append(step)
                break
            p_rows[row][bumped], x = x, p_rows[row][bumped]
            row += 1
    return TableauPair(
        tuple(tuple(r) for r in p_rows), tuple(tuple(r) for r in q_rows)
    )


def rsk_inverse(pair: TableauPair) -> tuple:
    """The permutation with the given insertion/recording pair."""
    p_rows = [list(r) for r in pair.p_rows]
    q_rows = [list(r) for r in pair.q_rows]
    n = sum(len(r) for r in p_rows)
    out = []
    for step in range(n, 0, -1):
        row = next(i for i, r in enumerate(q_rows) if r and r[-1] == step)
        q_rows[row].pop()
        x = p_rows[row].pop()
        for r in range(row - 1, -1, -1):
            j = max(j for j, y in enumerate(p_rows[r]) if y < x)
            p_rows[r][j], x = x, p_rows[r][j]
        out.append(x)
    return tuple(reversed(out))


def rsk_cells(n: int) -> CellStructure:
    """Cell structure of S_n from the Robinson-Schensted correspondence.

    Two-sided cells are fibers of the shape; left cells are fibers of the
    insertion tableau P (so that they agree with the multisemigroup export,
    whose left cells are Kazhdan-Lusztig right cells); right cells are
    fibers of Q.  The returned preorders only record the cell equivalences:
    the oracle fixes the partitions, not the full composition preorders.
    """
    if n < 2 or n > 5:
        raise ValueError("rsk_cells supports 2 <= n <= 5")
    group = coxeter_group(f"A{n - 1}")
    by_p: dict = {}
    by_q: dict = {}
    by_shape: dict = {}
    for x in range(group.order):
        pair = rsk(group.reps[x])
        by_p.setdefault(pair.p_rows, []).append(group.name(x))
        by_q.setdefault(pair.q_rows, []).append(group.name(x))
        by_shape.setdefault(pair.shape, []).append(group.name(x))

    def partition(groups: dict) -> tuple:
        return tuple(sorted(tuple(sorted(names)) for names in groups.values()))

    def equivalence(cells: tuple) -> frozenset:
        return frozenset((a, b) for cell in cells for a in cell for b in cell)

    left = partition(by_p)
    right = partition(by_q)
    two = partition(by_shape)
    return CellStructure(
        leq_left=equivalence(left),
        leq_right=equivalence(right),
        leq_two_sided=equivalence(two),
        left_cells=left,
        right_cells=right,
        two_sided_cells=two,
    )
