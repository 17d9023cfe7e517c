"""JSON / JSON Lines serialization of configurations, rulings and relations.

A points file is ``{"field": "Q" | "Fp:<p>", "r": r, "points": [[x, y, z], ...]}``
with coordinates as integers or fraction strings.  A relation file is JSON
Lines: one header ``{"r", "field", "points"}`` followed by one record per
relation ``{"ruling_class", "n", "monomials", "coeffs"}``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable, Iterator

from .fields import Field, parse_field
from .picard import DivisorClass
from .plane import PointConfiguration
from .relations import QuadraticRelation, RelationBlock, RelationSet
from .rulings import all_rulings


def read_points(path: str | Path) -> PointConfiguration:
    data = json.loads(Path(path).read_text())
    return points_from_record(data)


def points_from_record(data: dict) -> PointConfiguration:
    try:
        F = parse_field(str(data.get("field", "Q")))
        pts = data["points"]
    except KeyError as e:
        raise ValueError(f"points record lacks {e}") from None
    cfg = PointConfiguration(F, tuple(tuple(str(c) for c in p) for p in pts))
    if "r" in data and int(data["r"]) != cfg.r:
        raise ValueError(f"points record says r={data['r']} but lists {cfg.r} points")
    return cfg


def write_points(cfg: PointConfiguration, path: str | Path) -> None:
    Path(path).write_text(json.dumps(cfg.to_record()) + "\n")


def relation_record(q: QuadraticRelation, F: Field) -> dict:
    return {
        "ruling_class": q.cls.to_list(),
        "n": q.ruling.order,
        "monomials": [list(m) for m in q.ruling.representations],
        "coeffs": [F.to_str(c) for c in q.coeffs],
    }


def iter_relation_lines(rs: RelationSet) -> Iterator[str]:
    header = {"r": rs.r, "field": rs.field.spec(),
              "points": rs.cfg.to_record()["points"] if rs.cfg is not None else None}
    yield json.dumps(header)
    for q in rs.relations:
        yield json.dumps(relation_record(q, rs.field))


def write_relations(rs: RelationSet, out: IO[str]) -> None:
    for line in iter_relation_lines(rs):
        out.write(line + "\n")


def read_relations(lines: Iterable[str]) -> RelationSet:
    """Inverse of :func:`write_relations`; rulings are matched by class and order."""
    it = (ln for ln in lines if ln.strip())
    try:
        header = json.loads(next(it))
    except StopIteration:
        raise ValueError("empty relation stream") from None
    r = int(header["r"])
    F = parse_field(header["field"])
    cfg = None
    if header.get("points") is not None:
        cfg = PointConfiguration(F, tuple(tuple(p) for p in header["points"]))
    rulings = {(R.cls, R.order): R for R in all_rulings(r)}
    grouped: dict[tuple, list] = {}
    for ln in it:
        rec = json.loads(ln)
        key = (DivisorClass(tuple(rec["ruling_class"])), int(rec["n"]))
        R = rulings.get(key)
        if R is None:
            raise ValueError(f"unknown ruling {rec['ruling_class']} (n={rec['n']})")
        if [tuple(m) for m in rec["monomials"]] != list(R.representations):
            raise ValueError(f"monomial order for ruling {rec['ruling_class']} does not match")
        grouped.setdefault(key, []).append(QuadraticRelation(R, tuple(F(c) for c in rec["coeffs"])))
    blocks = [RelationBlock(rulings[k], qs, len(rulings[k].representations) - len(qs))
              for k, qs in grouped.items()]
    return RelationSet(r, cfg, F, blocks)
