"""Per-property usage counts and their TSV / JSON renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from . import __version__
from .corpus import Library, PropertyKind
from .elicitor import NeedSet


@dataclass(frozen=True)
class PropertyRow:
    property: PropertyKind
    direct: int
    indirect: int


@dataclass(frozen=True)
class PairRow:
    constructor: str
    property: PropertyKind
    direct: int
    indirect: int


@dataclass(frozen=True)
class UsageReport:
    corpus: str
    version: str
    properties: tuple[PropertyRow, ...]
    pairs: tuple[PairRow, ...]


def property_usage_table(
    lib: Library,
    direct: Mapping[str, NeedSet],
    indirect: Mapping[str, NeedSet],
    corpus: str = "",
) -> UsageReport:
    """Count distinct items needing each property (any constructor) and each pair."""
    ids = lib.item_ids()

    def count(needs: Mapping[str, NeedSet], pred) -> int:
        return sum(1 for i in ids if any(pred(a) for a in needs[i].pairs))

    props = tuple(
        PropertyRow(
            p,
            count(direct, lambda a, p=p: a.property is p),
            count(indirect, lambda a, p=p: a.property is p),
        )
        for p in PropertyKind
    )
    pairs = tuple(
        PairRow(
            att.constructor,
            att.property,
            count(direct, lambda a, att=att: a == att),
            count(indirect, lambda a, att=att: a == att),
        )
        for att in lib.environment.sorted()
    )
    return UsageReport(corpus, __version__, props, pairs)


def emit(report: UsageReport, fmt: str = "tsv") -> bytes:
    if fmt == "tsv":
        lines = ["property\tdirect\tindirect"]
        lines += [f"{r.property.value}\t{r.direct}\t{r.indirect}" for r in report.properties]
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        doc = {
            "corpus": report.corpus,
            "tool_version": report.version,
            "properties": [
                {"property": r.property.value, "direct": r.direct, "indirect": r.indirect}
                for r in report.properties
            ],
            "pairs": [
                {
                    "constructor": r.constructor,
                    "property": r.property.value,
                    "direct": r.direct,
                    "indirect": r.indirect,
                }
                for r in report.pairs
            ],
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")
