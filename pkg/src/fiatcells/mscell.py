"""Finite multisemigroups of 1-morphism classes: Green's preorders, cells,
regularity, Duflo involutions and the Duflo multiplicity function.

A multisemigroup here is the composition combinatorics of a finitary
2-category: a finite set of labelled 1-morphism classes between objects, a
composition table with multiplicities in N (defined exactly for composable
pairs), and an involution * that reverses composition.  All values are
immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

# multiplicities are "machine-size": anything at or above this cap is an error
MAX_MULTIPLICITY = 1 << 28
_DIGIT_BITS = 64


class MultiSemigroupError(ValueError):
    """Invalid multisemigroup data; carries a witness description."""


class NotComposableError(MultiSemigroupError):
    """Composition requested for a pair with mismatched objects."""


class CellArgumentError(ValueError):
    """Argument is not a cell of the given multisemigroup."""


class UnsupportedCellError(ValueError):
    """Operation only defined for strongly regular cells."""


class DataInconsistencyError(ValueError):
    """Computed data contradicts a structural guarantee."""


@dataclass(frozen=True)
class OneMorphism:
    name: str
    src: str
    tgt: str
    is_identity: bool = False


@dataclass(frozen=True)
class CellStructure:
    """Reflexive-transitive left/right/two-sided preorders and their cells.

    Each partition lists cells as name-sorted tuples, and the list of cells
    is itself sorted, so the output order is stable.
    """

    leq_left: frozenset
    leq_right: frozenset
    leq_two_sided: frozenset
    left_cells: tuple
    right_cells: tuple
    two_sided_cells: tuple

    def left_cell_of(self, name: str) -> tuple:
        return _cell_of(self.left_cells, name)

    def right_cell_of(self, name: str) -> tuple:
        return _cell_of(self.right_cells, name)

    def two_sided_cell_of(self, name: str) -> tuple:
        return _cell_of(self.two_sided_cells, name)


def _cell_of(cells: tuple, name: str) -> tuple:
    for cell in cells:
        if name in cell:
            return cell
    raise CellArgumentError(f"no cell contains morphism {name!r}")


class MultiSemigroup:
    def __init__(
        self,
        objects: Iterable[str],
        morphisms: Iterable[OneMorphism],
        table: Mapping,
        star: Mapping[str, str],
        validate: bool = True,
    ):
        self.objects = tuple(sorted(set(objects)))
        morphs = list(morphisms)
        self.morphisms = {m.name: m for m in morphs}
        if len(self.morphisms) != len(morphs):
            raise MultiSemigroupError("duplicate morphism names")
        self.names = sorted(self.morphisms)
        self._index = {n: i for i, n in enumerate(self.names)}
        self.star = dict(star)
        self.table = {}
        for (f, g), summands in table.items():
            entry = {h: int(k) for h, k in summands.items() if int(k) != 0}
            self.table[(f, g)] = entry
        # composable pairs missing from the input are empty compositions
        for f in self.names:
            for g in self.names:
                if self.morphisms[f].src == self.morphisms[g].tgt:
                    self.table.setdefault((f, g), {})
        self._cells_cache = None
        if validate:
            self._validate()

    # -- basic access ---------------------------------------------------

    def identity_of(self, obj: str) -> OneMorphism:
        for m in self.morphisms.values():
            if m.is_identity and m.src == obj:
                return m
        raise MultiSemigroupError(f"object {obj!r} has no identity morphism")

    def star_of(self, name: str) -> str:
        return self.star[name]

    def composable(self, f: str, g: str) -> bool:
        return self.morphisms[f].src == self.morphisms[g].tgt

    def compose(self, f: str, g: str) -> dict:
        """The multiset F o G as a dict name -> multiplicity."""
        if f not in self.morphisms or g not in self.morphisms:
            raise KeyError(f"unknown morphism in pair ({f!r}, {g!r})")
        if not self.composable(f, g):
            raise NotComposableError(
                f"cannot compose {f!r} (src {self.morphisms[f].src!r}) with "
                f"{g!r} (tgt {self.morphisms[g].tgt!r})"
            )
        return dict(self.table[(f, g)])

    def renamed(self, mapping: Mapping[str, str]) -> "MultiSemigroup":
        """The same multisemigroup with morphisms relabelled by `mapping`."""
        def relabel(m: OneMorphism) -> OneMorphism:
            return OneMorphism(mapping[m.name], m.src, m.tgt, m.is_identity)

        table = {
            (mapping[f], mapping[g]): {mapping[h]: k for h, k in entry.items()}
            for (f, g), entry in self.table.items()
        }
        star = {mapping[f]: mapping[g] for f, g in self.star.items()}
        return MultiSemigroup(
            self.objects, [relabel(m) for m in self.morphisms.values()], table, star
        )

    # -- validation -----------------------------------------------------

    def _validate(self) -> None:
        for m in self.morphisms.values():
            if m.src not in self.objects or m.tgt not in self.objects:
                raise MultiSemigroupError(f"morphism {m.name!r} uses unknown object")
        for obj in self.objects:
            ids = [
                m for m in self.morphisms.values() if m.is_identity and m.src == obj
            ]
            if len(ids) != 1 or ids[0].tgt != obj:
                raise MultiSemigroupError(
                    f"object {obj!r} must have exactly one identity endomorphism"
                )
        for m in self.morphisms.values():
            if m.is_identity and m.src != m.tgt:
                raise MultiSemigroupError(f"identity {m.name!r} must be an endomorphism")

        for f, g in self.star.items():
            if self.star.get(g) != f:
                raise MultiSemigroupError(f"star is not involutive at {f!r}")
        for name, m in self.morphisms.items():
            s = self.star.get(name)
            if s is None or s not in self.morphisms:
                raise MultiSemigroupError(f"star undefined at {name!r}")
            sm = self.morphisms[s]
            if (sm.src, sm.tgt) != (m.tgt, m.src):
                raise MultiSemigroupError(f"star of {name!r} must swap source and target")
            if m.is_identity and s != name:
                raise MultiSemigroupError(f"star must fix the identity {name!r}")

        for (f, g), entry in self.table.items():
            if not self.composable(f, g):
                raise MultiSemigroupError(f"table entry for non-composable pair ({f!r}, {g!r})")
            for h, k in entry.items():
                if h not in self.morphisms:
                    raise MultiSemigroupError(f"unknown summand {h!r} in {f!r} o {g!r}")
                if k < 0 or k >= MAX_MULTIPLICITY:
                    raise MultiSemigroupError(
                        f"multiplicity {k} of {h!r} in {f!r} o {g!r} out of range"
                    )
                hm = self.morphisms[h]
                if hm.src != self.morphisms[g].src or hm.tgt != self.morphisms[f].tgt:
                    raise MultiSemigroupError(
                        f"summand {h!r} of {f!r} o {g!r} has wrong source or target"
                    )

        for name, m in self.morphisms.items():
            lid = self.identity_of(m.tgt).name
            rid = self.identity_of(m.src).name
            if self.table[(lid, name)] != {name: 1}:
                raise MultiSemigroupError(f"identity {lid!r} is not left-neutral on {name!r}")
            if self.table[(name, rid)] != {name: 1}:
                raise MultiSemigroupError(f"identity {rid!r} is not right-neutral on {name!r}")

        for (f, g), entry in self.table.items():
            starred = {self.star[h]: k for h, k in entry.items()}
            if self.table.get((self.star[g], self.star[f]), {}) != starred:
                raise MultiSemigroupError(
                    f"star is not an anti-map on the table at ({f!r}, {g!r})"
                )

        self._check_associativity()

    def _check_associativity(self) -> None:
        """All-triples check of the N-weighted associativity law.

        Rows of the table are packed into big integers (base 2^64 digits);
        both sides of the law become small sums of scaled row integers.  The
        multiplicity cap guarantees digits cannot overflow into each other.
        """
        idx = self._index
        n = len(self.names)
        supports = {}
        packed = {}
        for (f, g), entry in self.table.items():
            key = (idx[f], idx[g])
            supports[key] = [(idx[h], k) for h, k in entry.items()]
            acc = 0
            for h, k in entry.items():
                acc += k << (_DIGIT_BITS * idx[h])
            packed[key] = acc

        def row_int(a: int, b: int) -> int:
            return packed.get((a, b), 0)

        for (fi, gi), supp_fg in supports.items():
            for ki in range(n):
                supp_gk = supports.get((gi, ki))
                lhs = sum(m * row_int(hi, ki) for hi, m in supp_fg)
                rhs = 0
                if supp_gk:
                    rhs = sum(m * row_int(fi, hi) for hi, m in supp_gk)
                if lhs != rhs:
                    raise MultiSemigroupError(
                        "associativity fails at triple "
                        f"({self.names[fi]!r}, {self.names[gi]!r}, {self.names[ki]!r})"
                    )

    # -- preorders ------------------------------------------------------

    def _one_step_masks(self):
        idx = self._index
        n = len(self.names)
        left = [1 << i for i in range(n)]
        right = [1 << i for i in range(n)]
        for (f, g), entry in self.table.items():
            for h in entry:
                # g <=_L h via f o g, and f <=_R h via f o g
                left[idx[g]] |= 1 << idx[h]
                right[idx[f]] |= 1 << idx[h]
        return left, right

    @staticmethod
    def _closure(masks):
        n = len(masks)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = masks[i]
                scan = acc
                while scan:
                    j = (scan & -scan).bit_length() - 1
                    scan &= scan - 1
                    acc |= masks[j]
                if acc != masks[i]:
                    masks[i] = acc
                    changed = True
        return masks

    def _reach(self):
        left, right = self._one_step_masks()
        two = [l | r for l, r in zip(left, right)]
        return (
            self._closure(left),
            self._closure(right),
            self._closure(two),
        )


def _relation_from_masks(names, masks) -> frozenset:
    pairs = set()
    for i, mask in enumerate(masks):
        scan = mask
        while scan:
            j = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            pairs.add((names[i], names[j]))
    return frozenset(pairs)


def _partition_from_masks(names, masks) -> tuple:
    n = len(names)
    seen = set()
    cells = []
    for i in range(n):
        if i in seen:
            continue
        cell = [j for j in range(n) if (masks[i] >> j) & 1 and (masks[j] >> i) & 1]
        seen.update(cell)
        cells.append(tuple(sorted(names[j] for j in cell)))
    return tuple(sorted(cells))


def cells(ms: MultiSemigroup) -> CellStructure:
    """Green's cell structure of the multisemigroup (cached on the value)."""
    if ms._cells_cache is None:
        left, right, two = ms._reach()
        ms._cells_cache = CellStructure(
            leq_left=_relation_from_masks(ms.names, left),
            leq_right=_relation_from_masks(ms.names, right),
            leq_two_sided=_relation_from_masks(ms.names, two),
            left_cells=_partition_from_masks(ms.names, left),
            right_cells=_partition_from_masks(ms.names, right),
            two_sided_cells=_partition_from_masks(ms.names, two),
        )
    return ms._cells_cache


def leq_left(ms: MultiSemigroup, f: str, g: str) -> bool:
    """True iff some H o F contains G (reflexive-transitive)."""
    return (f, g) in cells(ms).leq_left


def leq_right(ms: MultiSemigroup, f: str, g: str) -> bool:
    return (f, g) in cells(ms).leq_right


def leq_two_sided(ms: MultiSemigroup, f: str, g: str) -> bool:
    return (f, g) in cells(ms).leq_two_sided


def _require_two_sided_cell(ms: MultiSemigroup, cell) -> tuple:
    cell = tuple(sorted(cell))
    if cell not in cells(ms).two_sided_cells:
        raise CellArgumentError(f"{cell!r} is not a two-sided cell")
    return cell


def is_regular(ms: MultiSemigroup, two_sided_cell) -> bool:
    """No two distinct left (right) cells inside the cell are order-comparable."""
    cell = _require_two_sided_cell(ms, two_sided_cell)
    struct = cells(ms)
    members = set(cell)
    for kind, relation in (("left", struct.leq_left), ("right", struct.leq_right)):
        sub = [c for c in getattr(struct, f"{kind}_cells") if set(c) <= members]
        for a in sub:
            for b in sub:
                if a != b and (a[0], b[0]) in relation:
                    return False
    return True


def is_strongly_regular(ms: MultiSemigroup, two_sided_cell) -> bool:
    """Regular, and every left-cell/right-cell intersection inside is a singleton."""
    cell = _require_two_sided_cell(ms, two_sided_cell)
    if not is_regular(ms, cell):
        return False
    struct = cells(ms)
    members = set(cell)
    lefts = [set(c) for c in struct.left_cells if set(c) <= members]
    rights = [set(c) for c in struct.right_cells if set(c) <= members]
    return all(len(l & r) == 1 for l in lefts for r in rights)


def duflo(ms: MultiSemigroup, left_cell) -> str:
    """The Duflo involution of a left cell in a strongly regular two-sided cell.

    For strongly regular cells this is the unique element of L intersected
    with {F* : F in L}; general Duflo detection is out of scope.
    """
    left_cell = tuple(sorted(left_cell))
    struct = cells(ms)
    if left_cell not in struct.left_cells:
        raise CellArgumentError(f"{left_cell!r} is not a left cell")
    two_sided = struct.two_sided_cell_of(left_cell[0])
    if not is_strongly_regular(ms, two_sided):
        raise UnsupportedCellError(
            "Duflo involutions are only computed in strongly regular cells"
        )
    starred = {ms.star[f] for f in left_cell}
    inter = sorted(set(left_cell) & starred)
    if len(inter) != 1:
        raise DataInconsistencyError(
            f"L intersect L* = {inter!r} is not a singleton for {left_cell!r}"
        )
    g = inter[0]
    if ms.star[g] not in struct.right_cell_of(g):
        raise DataInconsistencyError(
            f"star of Duflo candidate {g!r} left its right cell"
        )
    return g


def duflo_multiplicity(ms: MultiSemigroup, f: str) -> int:
    """Multiplicity of the Duflo involution of F's left cell in F* o F."""
    struct = cells(ms)
    g = duflo(ms, struct.left_cell_of(f))
    return ms.compose(ms.star[f], f).get(g, 0)


def duflo_multiplicity_constant_on_right_cells(ms: MultiSemigroup, two_sided_cell) -> bool:
    """True iff the Duflo multiplicity is constant on each right cell of the cell."""
    cell = _require_two_sided_cell(ms, two_sided_cell)
    if not is_strongly_regular(ms, cell):
        raise UnsupportedCellError("the multiplicity condition needs a strongly regular cell")
    struct = cells(ms)
    members = set(cell)
    for right in struct.right_cells:
        if not set(right) <= members:
            continue
        values = {duflo_multiplicity(ms, f) for f in right}
        if len(values) != 1:
            return False
    return True


def identity_products_clean(ms: MultiSemigroup) -> bool:
    """True iff identities only ever appear in products of two identities."""
    for (f, g), entry in ms.table.items():
        if ms.morphisms[f].is_identity and ms.morphisms[g].is_identity:
            continue
        if any(ms.morphisms[h].is_identity for h in entry):
            return False
    return True
