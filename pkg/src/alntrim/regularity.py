"""Regularity statistics over inferred correspondence patterns."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping

from .corrpat import PatternAssignment

log = logging.getLogger(__name__)


class UnassignedSite(KeyError):
    pass


class InconsistentInputs(ValueError):
    pass


@dataclass(frozen=True)
class RegularityConfig:
    pattern_threshold: int = 3
    cognate_threshold: float = 0.75

    def __post_init__(self):
        if self.pattern_threshold < 1:
            raise ValueError("pattern threshold must be at least 1")
        if not 0.0 <= self.cognate_threshold <= 1.0:
            raise ValueError("cognate threshold must lie in [0, 1]")


def proportion(part, whole):
    return part / whole if whole else 0.0


def round2(value) -> str:
    """Two-decimal display, rounding halves away from zero."""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class RegularityReport:
    frequent_patterns: int = 0
    rare_patterns: int = 0
    regular_words: int = 0
    irregular_words: int = 0
    regular_cogids: frozenset = frozenset()
    excluded_cogsets: int = 0
    excluded_words: int = 0

    @property
    def all_patterns(self):
        return self.frequent_patterns + self.rare_patterns

    @property
    def all_words(self):
        return self.regular_words + self.irregular_words

    @property
    def p_regular_patterns(self):
        return proportion(self.frequent_patterns, self.all_patterns)

    @property
    def w_regular_words(self):
        return proportion(self.regular_words, self.all_words)

    def record(self, label=""):
        """Flat record of counts and proportions, ready to serialize."""
        return {
            "strategy": label,
            "frequent_patterns": self.frequent_patterns,
            "rare_patterns": self.rare_patterns,
            "all_patterns": self.all_patterns,
            "regular_words": self.regular_words,
            "irregular_words": self.irregular_words,
            "all_words": self.all_words,
            "p": self.p_regular_patterns,
            "w": self.w_regular_words,
            "excluded_cogsets": self.excluded_cogsets,
            "excluded_words": self.excluded_words,
        }


REPORT_COLUMNS = (
    "strategy", "frequent_patterns", "rare_patterns", "all_patterns",
    "regular_words", "irregular_words", "all_words", "p", "w",
    "excluded_cogsets", "excluded_words",
)


def format_cell(value):
    if isinstance(value, float):
        return round2(value)
    return str(value)


def write_reports_tsv(records, stream, columns=REPORT_COLUMNS):
    stream.write("\t".join(c.upper() for c in columns) + "\n")
    for rec in records:
        stream.write("\t".join(format_cell(rec.get(c, "")) for c in columns) + "\n")


def write_reports_json(records, stream):
    json.dump(list(records), stream, indent=2, sort_keys=True, ensure_ascii=False)
    stream.write("\n")


def classify_patterns(assignment: PatternAssignment, config: RegularityConfig = RegularityConfig()):
    """Split pattern ids into (regular, irregular) by the pattern threshold."""
    regular, irregular = [], []
    for p in assignment.patterns:
        (regular if p.size >= config.pattern_threshold else irregular).append(p.pattern_id)
    return regular, irregular


def classify_cognates(
    sites_by_cogid: Mapping[str, list],
    assignment: PatternAssignment,
    regular_ids,
    config: RegularityConfig = RegularityConfig(),
) -> frozenset:
    """Cognate sets whose share of sites in regular patterns meets the threshold."""
    regular_ids = set(regular_ids)
    result = set()
    for cogid, site_ids in sites_by_cogid.items():
        hits = 0
        for sid in site_ids:
            try:
                pid = assignment.site_to_pattern[sid]
            except KeyError:
                raise UnassignedSite(sid) from None
            hits += pid in regular_ids
        if site_ids and hits / len(site_ids) >= config.cognate_threshold:
            result.add(cogid)
    return frozenset(result)


def report(wordlist, trims: Mapping, assignment: PatternAssignment, config: RegularityConfig = RegularityConfig()) -> RegularityReport:
    """Pattern and word counts for one analysed wordlist.

    ``trims`` maps every analysed (non-singleton) cognate set to its trim
    result; sets flagged as excluded are left out of the word counts.
    """
    sets = wordlist.cognate_sets()
    for cogid in trims:
        if cogid not in sets:
            raise InconsistentInputs(f"trim result for unknown cognate set {cogid!r}")
    analysed = [c for c, t in trims.items() if not t.excluded]
    sites_by_cogid = {c: [] for c in analysed}
    for sid in assignment.site_to_pattern:
        if sid[0] not in sites_by_cogid:
            raise InconsistentInputs(f"site {sid[0]}:{sid[1]} outside the analysed cognate sets")
        sites_by_cogid[sid[0]].append(sid)

    regular_ids, irregular_ids = classify_patterns(assignment, config)
    regular_sets = classify_cognates(sites_by_cogid, assignment, regular_ids, config)
    regular_words = sum(len(sets[c]) for c in regular_sets)
    all_words = sum(len(sets[c]) for c in analysed)
    excluded = [c for c, t in trims.items() if t.excluded]
    excluded_words = sum(len(sets[c]) for c in excluded)
    if excluded:
        log.info("excluded %d cognate sets (%d words) lacking a C/V skeleton", len(excluded), excluded_words)
    return RegularityReport(
        frequent_patterns=len(regular_ids),
        rare_patterns=len(irregular_ids),
        regular_words=regular_words,
        irregular_words=all_words - regular_words,
        regular_cogids=regular_sets,
        excluded_cogsets=len(excluded),
        excluded_words=excluded_words,
    )
