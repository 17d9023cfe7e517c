"""Quadratic relations of Cox(S_r) from a concrete point configuration.

For each (n)-ruling with monomials m_1..m_k, the product forms of the
monomials span an (n+1)-dimensional space; the left kernel of the k x M
product matrix gives the k-(n+1) relations of that Picard degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from . import linalg
from .fields import Field
from .picard import DivisorClass, generators
from .plane import (
    DegenerateConfigurationError,
    PlaneForm,
    PointConfiguration,
    generator_forms,
    multiply,
    validate_general_position,
)
from .rulings import Ruling, all_rulings


@dataclass(frozen=True)
class QuadraticRelation:
    ruling: Ruling
    coeffs: tuple

    @property
    def cls(self) -> DivisorClass:
        return self.ruling.cls

    def terms(self) -> Iterator[tuple[object, tuple[int, int]]]:
        for c, m in zip(self.coeffs, self.ruling.representations):
            if c != 0:
                yield c, m


@dataclass
class RelationBlock:
    ruling: Ruling
    relations: list[QuadraticRelation]
    rank: int


@dataclass
class RelationSet:
    r: int
    cfg: PointConfiguration | None
    field: Field
    blocks: list[RelationBlock] = field(default_factory=list)

    @property
    def relations(self) -> list[QuadraticRelation]:
        return [q for b in self.blocks for q in b.relations]

    def __len__(self) -> int:
        return sum(len(b.relations) for b in self.blocks)

    def block_for(self, cls: DivisorClass) -> RelationBlock:
        for b in self.blocks:
            if b.ruling.cls == cls:
                return b
        raise KeyError(f"no relation block in degree {cls}")

    def counts_by_order(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for b in self.blocks:
            out[b.ruling.order] = out.get(b.ruling.order, 0) + len(b.relations)
        return out


def product_matrix(R: Ruling, forms: Sequence[PlaneForm]) -> list[list]:
    """Rows: coefficient vectors of f_a * f_b for each monomial (a, b) of R."""
    rows = []
    for a, b in R.representations:
        p = multiply(forms[a], forms[b])
        if p.degree != R.cls.degree:
            raise ValueError(f"monomial ({a},{b}) does not have degree {R.cls}")
        rows.append(list(p.coeffs))
    return rows


def _block(R: Ruling, forms: Sequence[PlaneForm], F: Field) -> RelationBlock:
    M = product_matrix(R, forms)
    kernel = linalg.left_kernel(M, F)
    k = len(R.representations)
    rank = k - len(kernel)
    if rank != R.order + 1:
        raise DegenerateConfigurationError(
            f"products in degree {R.cls} span dimension {rank}, expected {R.order + 1}", R.cls)
    return RelationBlock(R, [QuadraticRelation(R, tuple(v)) for v in kernel], rank)


def relations_for_ruling(R: Ruling, cfg: PointConfiguration,
                         forms: Sequence[PlaneForm] | None = None) -> list[QuadraticRelation]:
    """Reduced echelon basis of the relations in degree ``R.cls``."""
    if R.r != cfg.r:
        raise ValueError(f"ruling has r={R.r} but configuration has r={cfg.r}")
    if forms is None:
        forms = generator_forms(cfg)
    return _block(R, forms, cfg.field).relations


def full_ideal(r: int, cfg: PointConfiguration,
               forms: Sequence[PlaneForm] | None = None, validate: bool = True) -> RelationSet:
    """All ruling relations: 5, 20, 81, 529, 17399 for r = 4..8.

    Points in special position raise DegenerateConfigurationError carrying the
    witness; ``validate=False`` skips that check and relies on the per-block
    rank assertions only.
    """
    if not 4 <= r <= 8:
        raise ValueError(f"relations are generated for 4 <= r <= 8, got {r}")
    if cfg.r != r:
        raise ValueError(f"configuration has {cfg.r} points, expected {r}")
    if validate:
        w = validate_general_position(cfg)
        if w is not None:
            raise DegenerateConfigurationError(
                f"points not in general position: {w.condition} {list(w.indices)}")
    if forms is None:
        forms = generator_forms(cfg)
    F = cfg.field
    return RelationSet(r, cfg, F, [_block(R, forms, F) for R in all_rulings(r)])


def ruling_ranks(r: int, cfg: PointConfiguration,
                 forms: Sequence[PlaneForm] | None = None) -> list[tuple[Ruling, int]]:
    """Measured rank of the product matrix of every ruling (no kernels)."""
    if forms is None:
        forms = generator_forms(cfg)
    return [(R, linalg.rank(product_matrix(R, forms), cfg.field)) for R in all_rulings(r)]


def span_contains(R: Ruling, candidate: Sequence, cfg: PointConfiguration,
                  forms: Sequence[PlaneForm] | None = None) -> bool:
    """True iff ``candidate`` (indexed like ``R.representations``) is a relation."""
    if len(candidate) != len(R.representations):
        raise ValueError(f"candidate has {len(candidate)} entries, ruling has "
                         f"{len(R.representations)} monomials")
    if forms is None:
        forms = generator_forms(cfg)
    F = cfg.field
    M = product_matrix(R, forms)
    c = [F(x) if not isinstance(x, int) else F.norm(x) for x in candidate]
    return all(F.norm(sum(ci * row[j] for ci, row in zip(c, M))) == 0 for j in range(len(M[0])))


def evaluate_relation(q: QuadraticRelation, values: Sequence | Mapping[int, object], F: Field):
    """Value of the relation at a generator valuation (sequence or id->value map)."""
    total = F.zero
    for c, (a, b) in q.terms():
        try:
            va, vb = values[a], values[b]
        except (KeyError, IndexError):
            raise KeyError(f"valuation has no value for generator {a} or {b}") from None
        total = total + c * va * vb
    return F.norm(total)


def relation_string(q: QuadraticRelation, F: Field) -> str:
    """Human-readable form, e.g. ``E2*m12 - 3*E3*m13``."""
    gens = generators(q.ruling.r)
    parts = []
    for c, (a, b) in q.terms():
        mon = f"{gens[a].name}*{gens[b].name}" if a != b else f"{gens[a].name}^2"
        parts.append(f"{F.to_str(c)}*{mon}")
    return " + ".join(parts)
