"""Finite concrete dagger compact closed categories: FinRel and FinMat.

FinRel has finite labelled sets as objects and binary relations as arrows,
stored as boolean incidence matrices.  FinMat has natural-number dimensions
as objects and matrices of exact rationals as arrows.  Both are indexed
(target, source), so composition is the ordinary matrix product (boolean
"or of ands" for relations).

Both categories are self-dual compact closed with the dagger given by the
relational converse / matrix transpose.  Tensor products of objects are
kept in strict row-major order, so the structural isomorphisms (associator,
unitors) all have identity matrices and only relabel; ``relabeling`` builds
them explicitly so that law checks can compose across bracketings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import CompositionError, ShapeError

_FORBIDDEN = set("|\n")


@dataclass(frozen=True)
class FinSetObj:
    """A finite set with a label and an ordered tuple of element labels."""

    label: str
    elements: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"duplicate element labels in object {self.label!r}")
        for name in (self.label, *self.elements):
            if _FORBIDDEN & set(name):
                raise ValueError(f"label {name!r} contains a reserved character")

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element: str) -> int:
        return self.elements.index(element)


@dataclass(frozen=True)
class MatObj:
    """An object of FinMat: just a dimension."""

    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")

    def __len__(self) -> int:
        return self.dim

    @property
    def label(self) -> str:
        return str(self.dim)


UNIT_REL = FinSetObj("I", ("*",))
UNIT_MAT = MatObj(1)


def finset(label: str, elements) -> FinSetObj:
    return FinSetObj(label, tuple(str(e) for e in elements))


def unit_like(obj):
    """The monoidal unit of the base category ``obj`` lives in."""
    return UNIT_MAT if isinstance(obj, MatObj) else UNIT_REL


def tensor_obj(a, b):
    """Tensor product of objects; FinRel elements are pair labels "(x,y)"."""
    if isinstance(a, MatObj) and isinstance(b, MatObj):
        return MatObj(a.dim * b.dim)
    if isinstance(a, FinSetObj) and isinstance(b, FinSetObj):
        elements = tuple(f"({x},{y})" for x in a.elements for y in b.elements)
        return FinSetObj(f"({a.label}⊗{b.label})", elements)
    raise CompositionError(f"cannot tensor objects from different bases: {a!r}, {b!r}")


def tensor_obj_all(objs, unit=None):
    """Left fold of ``tensor_obj``; the unit object for an empty sequence."""
    objs = list(objs)
    if not objs:
        if unit is None:
            raise ValueError("empty tensor needs an explicit unit object")
        return unit
    return reduce(tensor_obj, objs)


@dataclass(frozen=True)
class RelMorphism:
    """A relation src -> tgt as a boolean matrix indexed (tgt, src)."""

    src: FinSetObj
    tgt: FinSetObj
    matrix: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != len(self.tgt):
            raise ValueError("relation matrix has wrong number of rows")
        if any(len(row) != len(self.src) for row in self.matrix):
            raise ValueError("relation matrix has wrong number of columns")

    @property
    def key(self) -> str:
        bits = "".join("1" if cell else "0" for row in self.matrix for cell in row)
        return f"{self.src.label}|{self.tgt.label}|{bits}"

    def pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(
            (self.src.elements[j], self.tgt.elements[i])
            for i, row in enumerate(self.matrix)
            for j, cell in enumerate(row)
            if cell
        )

    def __repr__(self):
        return f"RelMorphism<{self.key}>"


@dataclass(frozen=True)
class MatMorphism:
    """A rational matrix src -> tgt indexed (tgt, src)."""

    src: MatObj
    tgt: MatObj
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.tgt.dim:
            raise ValueError("matrix has wrong number of rows")
        if any(len(row) != self.src.dim for row in self.matrix):
            raise ValueError("matrix has wrong number of columns")

    @property
    def key(self) -> str:
        entries = ",".join(str(cell) for row in self.matrix for cell in row)
        return f"{self.src.dim}|{self.tgt.dim}|{entries}"

    def __repr__(self):
        return f"MatMorphism<{self.key}>"


BaseMorphism = RelMorphism | MatMorphism


def rel(src: FinSetObj, tgt: FinSetObj, matrix) -> RelMorphism:
    rows = tuple(tuple(bool(c) for c in row) for row in matrix)
    return RelMorphism(src, tgt, rows)


def rel_from_pairs(src: FinSetObj, tgt: FinSetObj, pairs) -> RelMorphism:
    """Relation from (source element, target element) pairs."""
    wanted = {(str(a), str(b)) for a, b in pairs}
    for a, b in wanted:
        if a not in src.elements or b not in tgt.elements:
            raise ValueError(f"pair ({a!r}, {b!r}) outside {src.label} x {tgt.label}")
    matrix = tuple(
        tuple((a, b) in wanted for a in src.elements) for b in tgt.elements
    )
    return RelMorphism(src, tgt, matrix)


def rel_from_fn(src: FinSetObj, tgt: FinSetObj, fn) -> RelMorphism:
    """Graph of a function on element labels, as a relation."""
    return rel_from_pairs(src, tgt, [(a, fn(a)) for a in src.elements])


def mat(src_dim: int, tgt_dim: int, matrix) -> MatMorphism:
    rows = tuple(tuple(Fraction(c) for c in row) for row in matrix)
    return MatMorphism(MatObj(src_dim), MatObj(tgt_dim), rows)


def identity(obj) -> BaseMorphism:
    n = len(obj)
    if isinstance(obj, MatObj):
        rows = tuple(
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        )
        return MatMorphism(obj, obj, rows)
    rows = tuple(tuple(i == j for j in range(n)) for i in range(n))
    return RelMorphism(obj, obj, rows)


def compose(g: BaseMorphism, f: BaseMorphism) -> BaseMorphism:
    """g after f.  Requires f.tgt == g.src (syntactic object equality)."""
    if type(g) is not type(f):
        raise CompositionError("cannot compose morphisms from different bases")
    if f.tgt != g.src:
        raise CompositionError(
            f"object mismatch: {f.tgt.label} -> | -> {g.src.label}"
        )
    inner = range(len(f.tgt))
    if isinstance(f, MatMorphism):
        rows = tuple(
            tuple(
                sum((g.matrix[i][k] * f.matrix[k][j] for k in inner), Fraction(0))
                for j in range(len(f.src))
            )
            for i in range(len(g.tgt))
        )
        return MatMorphism(f.src, g.tgt, rows)
    rows = tuple(
        tuple(
            any(g.matrix[i][k] and f.matrix[k][j] for k in inner)
            for j in range(len(f.src))
        )
        for i in range(len(g.tgt))
    )
    return RelMorphism(f.src, g.tgt, rows)


def tensor(f: BaseMorphism, g: BaseMorphism) -> BaseMorphism:
    """Kronecker-style tensor product, row-major on both sides."""
    if type(g) is not type(f):
        raise CompositionError("cannot tensor morphisms from different bases")
    src = tensor_obj(f.src, g.src)
    tgt = tensor_obj(f.tgt, g.tgt)
    gm, gn = len(g.tgt), len(g.src)
    if isinstance(f, MatMorphism):
        rows = tuple(
            tuple(
                f.matrix[i // gm][j // gn] * g.matrix[i % gm][j % gn]
                for j in range(len(src))
            )
            for i in range(len(tgt))
        )
        return MatMorphism(src, tgt, rows)
    rows = tuple(
        tuple(
            f.matrix[i // gm][j // gn] and g.matrix[i % gm][j % gn]
            for j in range(len(src))
        )
        for i in range(len(tgt))
    )
    return RelMorphism(src, tgt, rows)


def dagger(f: BaseMorphism) -> BaseMorphism:
    """Relational converse / matrix transpose."""
    rows = tuple(
        tuple(f.matrix[i][j] for i in range(len(f.tgt))) for j in range(len(f.src))
    )
    if isinstance(f, MatMorphism):
        return MatMorphism(f.tgt, f.src, rows)
    return RelMorphism(f.tgt, f.src, rows)


def cup(obj) -> BaseMorphism:
    """unit -> obj ⊗ obj, relating the unit element to every diagonal pair."""
    n = len(obj)
    aa = tensor_obj(obj, obj)
    if isinstance(obj, MatObj):
        rows = tuple(
            (Fraction(1) if i // n == i % n else Fraction(0),) for i in range(n * n)
        )
        return MatMorphism(UNIT_MAT, aa, rows)
    rows = tuple((i // n == i % n,) for i in range(n * n))
    return RelMorphism(UNIT_REL, aa, rows)


def cap(obj) -> BaseMorphism:
    """obj ⊗ obj -> unit; the dagger of the cup."""
    return dagger(cup(obj))


def relabeling(src, tgt) -> BaseMorphism:
    """The identity-matrix isomorphism between equal-size objects.

    Used for the coherence isomorphisms (associator, unitors): tensoring is
    strictly row-major, so these only rename elements.
    """
    if len(src) != len(tgt):
        raise ShapeError(
            f"relabeling needs equal sizes, got {len(src)} and {len(tgt)}"
        )
    n = len(src)
    if isinstance(src, MatObj):
        rows = tuple(
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        )
        return MatMorphism(src, tgt, rows)
    rows = tuple(tuple(i == j for j in range(n)) for i in range(n))
    return RelMorphism(src, tgt, rows)


def associator(a, b, c) -> BaseMorphism:
    """(a⊗b)⊗c -> a⊗(b⊗c)."""
    return relabeling(tensor_obj(tensor_obj(a, b), c), tensor_obj(a, tensor_obj(b, c)))


def left_unitor(a) -> BaseMorphism:
    """I⊗a -> a."""
    return relabeling(tensor_obj(unit_like(a), a), a)


def right_unitor(a) -> BaseMorphism:
    """a⊗I -> a."""
    return relabeling(tensor_obj(a, unit_like(a)), a)


def rel_scalar(value: bool) -> RelMorphism:
    """The two scalars of FinRel: the full and the empty relation on the unit."""
    return RelMorphism(UNIT_REL, UNIT_REL, ((bool(value),),))


def snake_left(obj) -> BaseMorphism:
    """(ρ ∘ (id⊗cap) ∘ α ∘ (cup⊗id) ∘ λ⁻¹) : obj -> obj; equals id if snakes hold."""
    lam_inv = dagger(left_unitor(obj))
    step1 = tensor(cup(obj), identity(obj))
    alpha = associator(obj, obj, obj)
    step2 = tensor(identity(obj), cap(obj))
    rho = right_unitor(obj)
    return compose(rho, compose(step2, compose(alpha, compose(step1, lam_inv))))


def snake_right(obj) -> BaseMorphism:
    """(λ ∘ (cap⊗id) ∘ α⁻¹ ∘ (id⊗cup) ∘ ρ⁻¹) : obj -> obj."""
    rho_inv = dagger(right_unitor(obj))
    step1 = tensor(identity(obj), cup(obj))
    alpha_inv = dagger(associator(obj, obj, obj))
    step2 = tensor(cap(obj), identity(obj))
    lam = left_unitor(obj)
    return compose(lam, compose(step2, compose(alpha_inv, compose(step1, rho_inv))))
