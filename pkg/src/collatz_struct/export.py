"""CSV / JSON / text serialization. Output is byte-stable for equal inputs."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable

from .classify import TypeCounts
from .structure import render_chromatic
from .tables import ChromoformMatrix, FractionalChromologue, StructuralMatrix


def render_decimal(q: Fraction, digits: int = 20) -> str:
    """Round-half-even decimal rendering of an exact rational; display only."""
    scaled = round(Fraction(q) * 10**digits)  # Fraction.__round__ is exact half-even
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    if not digits:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def rational(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _header(n: int) -> list[str]:
    return ["generator", *(f"T{k}" for k in range(1, n + 1))]


def matrix_csv(m: ChromoformMatrix) -> str:
    return _csv([_header(m.order), *([g, *(int(t) for t in m.terms[j])] for j, g in enumerate(m.generators))])


def matrix_dict(m: ChromoformMatrix) -> dict:
    return {
        "order": m.order,
        "first": int(m.first),
        "rows": [{"generator": r.generator, "terms": list(r.terms), "preterm": r.preterm} for r in m],
    }


def matrix_json(m: ChromoformMatrix) -> str:
    return dumps(matrix_dict(m))


def _gens(s: StructuralMatrix) -> list:
    return list(s.generators) if s.generators is not None else [""] * len(s)


def structural_csv(s: StructuralMatrix) -> str:
    bits = s.bits()
    header = ["generator", *(f"i{k}" for k in range(1, s.order + 1))]
    return _csv([header, *([g, *bits[j].tolist()] for j, g in enumerate(_gens(s)))])


def structural_json(s: StructuralMatrix) -> str:
    return dumps({
        "order": s.order,
        "rows": [{"generator": g if g != "" else None, "word": w.bitstring} for g, w in zip(_gens(s), s.rows)],
    })


def chromatic_text(s: StructuralMatrix, glyphs: str = "#.") -> str:
    gens = _gens(s)
    width = max((len(str(g)) for g in gens), default=0)
    return "".join(f"{str(g):>{width}} | {render_chromatic(s.word(j), glyphs)}\n" for j, g in enumerate(gens))


def chromologue_csv(c: FractionalChromologue) -> str:
    return _csv([_header(c.order), *([r.generator, *r.terms] for r in c.rows)])


def chromologue_json(c: FractionalChromologue) -> str:
    return dumps({
        "fundamental_generator": c.fundamental_generator,
        "order": c.order,
        "row_count": c.row_count,
        "word": c.characteristic_word().bitstring,
        "rows": [{"generator": r.generator, "terms": list(r.terms), "preterm": r.preterm} for r in c.rows],
    })


def counts_report(c: TypeCounts, digits: int = 20) -> dict:
    return {
        "order": c.order,
        "a": c.a,
        "b": c.b,
        "r_A": rational(c.r_A),
        "r_B": rational(c.r_B),
        "decimal_r_A": render_decimal(c.r_A, digits),
    }


def trend_csv(counts: Iterable[TypeCounts], digits: int = 20) -> str:
    rows = [["order", "a", "b", "r_A_decimal"]]
    rows += [[c.order, c.a, c.b, render_decimal(c.r_A, digits)] for c in counts]
    return _csv(rows)


def growth_csv(rows) -> str:
    return _csv([["k", "length", "minimal_generator"]] + [[r.k, r.length, r.minimal_generator] for r in rows])
