"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction.  The elimination engine works on sparse
integer rows (incoming rational rows are scaled to primitive integer rows),
keeps a fully reduced echelon form at all times and normalizes stored rows
to primitive integers with positive leading coefficient, so the echelon
form of a subspace is canonical and subspace equality is syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[Fraction, ...]

Q0 = Fraction(0)
Q1 = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries) -> Vec:
    return tuple(frac(x) for x in entries)


def zeros(n: int) -> Vec:
    return (Q0,) * n


def unit(n: int, i: int) -> Vec:
    return tuple(Q1 if j == i else Q0 for j in range(n))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(c, v: Vec) -> Vec:
    c = frac(c)
    return tuple(c * a for a in v)


def is_zero(v: Vec) -> bool:
    return all(a == 0 for a in v)


def dot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Q0)


def mat_vec(rows, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in rows)


def mat_mul(a, b):
    bt = list(zip(*b))
    return [tuple(dot(row, col) for col in bt) for row in a]


def identity_rows(n: int):
    return [unit(n, i) for i in range(n)]


def transpose(rows):
    return [tuple(col) for col in zip(*rows)]


def _sparse_int(row) -> dict[int, int]:
    """Scale a row (dense sequence or sparse dict) to a primitive integer dict."""
    if isinstance(row, dict):
        items = [(j, frac(x)) for j, x in row.items() if x != 0]
    else:
        items = [(j, frac(x)) for j, x in enumerate(row) if x != 0]
    if not items:
        return {}
    denom = 1
    for _, x in items:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = {j: int(x * denom) for j, x in items}
    g = 0
    for val in ints.values():
        g = gcd(g, val)
    if g > 1:
        ints = {j: val // g for j, val in ints.items()}
    return ints


def _content_reduce(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for val in row.values():
        g = gcd(g, val)
    if g > 1:
        return {j: val // g for j, val in row.items()}
    return row


class SparseEchelon:
    """Incrementally maintained reduced echelon form of a row span.

    Rows are stored as primitive integer dicts keyed by the pivot column;
    every stored row has a positive pivot entry and zero entries at all
    other pivot columns, which makes the form canonical.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def _forward_reduce(self, row: dict[int, int]) -> dict[int, int]:
        # stored rows are zero at every other pivot column, so eliminating the
        # pivot columns present at entry never introduces new pivot columns
        for c in sorted(set(row) & set(self.rows)):
            b = row.get(c)
            if not b:
                continue
            piv = self.rows[c]
            a = piv[c]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {j: val * mb for j, val in row.items()}
            for j, val in piv.items():
                new[j] = new.get(j, 0) - val * ma
            row = _content_reduce({j: val for j, val in new.items() if val != 0})
        return row

    def insert(self, row) -> bool:
        """Add a row to the span; return True if the dimension grew."""
        row = self._forward_reduce(_sparse_int(row))
        if not row:
            return False
        c = min(row)
        if row[c] < 0:
            row = {j: -v for j, v in row.items()}
        # eliminate the new pivot column from previously stored rows
        for p, stored in list(self.rows.items()):
            val = stored.get(c)
            if not val:
                continue
            a, b = row[c], val
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {j: v * mb for j, v in stored.items()}
            for j, v in row.items():
                new[j] = new.get(j, 0) - v * ma
            new = _content_reduce({j: v for j, v in new.items() if v != 0})
            if new[min(new)] < 0:
                new = {j: -v for j, v in new.items()}
            self.rows[p] = new
        self.rows[c] = row
        return True

    def extend(self, rows) -> None:
        for row in rows:
            self.insert(row)

    def reduce(self, row) -> dict[int, Fraction]:
        """Residual of a row after eliminating all pivot coordinates (exact)."""
        if isinstance(row, dict):
            cur = {j: frac(x) for j, x in row.items() if x != 0}
        else:
            cur = {j: frac(x) for j, x in enumerate(row) if x != 0}
        for c in sorted(cur):
            val = cur.get(c)
            if not val:
                continue
            piv = self.rows.get(c)
            if piv is None:
                continue
            coef = val / piv[c]
            for j, v in piv.items():
                cur[j] = cur.get(j, Q0) - coef * v
        return {j: v for j, v in cur.items() if v != 0}

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def basis_fraction_rows(self) -> list[Vec]:
        """Canonical dense basis: rows sorted by pivot, pivot entries scaled to 1."""
        out = []
        for c in sorted(self.rows):
            row = self.rows[c]
            lead = Fraction(row[c])
            dense = [Q0] * self.ncols
            for j, v in row.items():
                dense[j] = v / lead
            out.append(tuple(dense))
        return out


def rref(rows, ncols: int | None = None) -> list[Vec]:
    """Canonical reduced row echelon basis of the row span."""
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty row list")
        first = rows[0]
        ncols = (max(first) + 1) if isinstance(first, dict) else len(first)
    ech = SparseEchelon(ncols)
    ech.extend(rows)
    return ech.basis_fraction_rows()


def rank(rows, ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        first = rows[0]
        ncols = (max(first, default=-1) + 1) if isinstance(first, dict) else len(first)
    ech = SparseEchelon(ncols)
    ech.extend(rows)
    return ech.dim


def nullspace(rows, ncols: int) -> list[Vec]:
    """Canonical basis of {x : row . x = 0 for every row}, ordered by free column."""
    ech = SparseEchelon(ncols)
    ech.extend(rows)
    pivot_rows = {c: ech.rows[c] for c in ech.rows}
    pivots = set(pivot_rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Q0] * ncols
        v[f] = Q1
        for c, row in pivot_rows.items():
            val = row.get(f)
            if val:
                v[c] = Fraction(-val, row[c])
        basis.append(tuple(v))
    return basis


def solve(rows, rhs) -> Vec | None:
    """One solution x of rows . x = rhs, or None if inconsistent (free vars set to 0)."""
    rows = [list(r) for r in rows]
    n = len(rows[0]) if rows else len(list(rhs)) * 0
    if not rows:
        return None
    aug = [row + [b] for row, b in zip(rows, rhs, strict=True)]
    ech = SparseEchelon(n + 1)
    ech.extend(aug)
    if n in ech.rows:  # pivot in the rhs column
        return None
    x = [Q0] * n
    for c, row in ech.rows.items():
        x[c] = Fraction(row.get(n, 0), row[c])
    return tuple(x)


def invertible(rows) -> bool:
    rows = list(rows)
    n = len(rows)
    return n > 0 and all(len(r) == n for r in rows) and rank(rows, n) == n


def inverse(rows) -> list[Vec] | None:
    """Inverse of a square matrix, or None if singular."""
    rows = [list(map(frac, r)) for r in rows]
    n = len(rows)
    aug = [rows[i] + list(unit(n, i)) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [tuple(row[n:]) for row in aug]


class Subspace:
    """A subspace of Q^n held as a canonical reduced echelon basis."""

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: int, canonical_rows: tuple[Vec, ...]):
        self.ambient = ambient
        self.rows = canonical_rows

    @classmethod
    def from_vectors(cls, vectors, ambient: int) -> "Subspace":
        ech = SparseEchelon(ambient)
        ech.extend(vectors)
        return cls(ambient, tuple(ech.basis_fraction_rows()))

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.from_vectors(identity_rows(ambient), ambient)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def _echelon(self) -> SparseEchelon:
        ech = SparseEchelon(self.ambient)
        ech.extend(self.rows)
        return ech

    def contains(self, v) -> bool:
        return self._echelon().contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        ech = self._echelon()
        return all(ech.contains(r) for r in other.rows)

    def reduce(self, v) -> Vec:
        """Residual of v modulo the subspace (zero at all pivot coordinates)."""
        red = self._echelon().reduce(v)
        dense = [Q0] * self.ambient
        for j, val in red.items():
            dense[j] = val
        return tuple(dense)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(list(self.rows) + list(other.rows), self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        k, l = self.dim, other.dim
        if k == 0 or l == 0:
            return Subspace.zero(self.ambient)
        # coefficient vectors (c, d) with sum c_i u_i = sum d_j w_j
        eqs = []
        for coord in range(self.ambient):
            row = {}
            for i in range(k):
                if self.rows[i][coord]:
                    row[i] = self.rows[i][coord]
            for j in range(l):
                if other.rows[j][coord]:
                    row[k + j] = -other.rows[j][coord]
            if row:
                eqs.append(row)
        sols = nullspace(eqs, k + l)
        vectors = []
        for s in sols:
            v = zeros(self.ambient)
            for i in range(k):
                if s[i]:
                    v = add(v, scale(s[i], self.rows[i]))
            vectors.append(v)
        return Subspace.from_vectors(vectors, self.ambient)
