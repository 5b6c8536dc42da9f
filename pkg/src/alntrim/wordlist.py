"""Reading and writing tab-separated wordlists of aligned cognate sets.

Besides the I/O this module owns the coarse consonant/vowel/gap
classification of tokens, which everything downstream relies on.
"""

from __future__ import annotations

import enum
import unicodedata
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, TextIO

GAP = "-"
MARKERS = ("+", "_")
REQUIRED_COLUMNS = ("ID", "DOCULECT", "CONCEPT", "COGID", "ALIGNMENT")
TRIMMED_ALIGNMENT = "ALIGNMENT_TRIMMED"
TRIMMED_SITES = "TRIMMED_SITES"


class WordlistError(ValueError):
    """Base class for malformed wordlist input."""


class MissingColumn(WordlistError):
    def __init__(self, column):
        super().__init__(f"missing required column {column!r}")
        self.column = column


class DuplicateId(WordlistError):
    def __init__(self, row_id):
        super().__init__(f"duplicate row id {row_id!r}")
        self.row_id = row_id


class RaggedAlignment(WordlistError):
    def __init__(self, cogid, row_ids):
        super().__init__(
            f"alignments in cognate set {cogid!r} differ in length "
            f"(rows {', '.join(row_ids)})"
        )
        self.cogid = cogid
        self.row_ids = tuple(row_ids)


class EmptyAlignment(WordlistError):
    def __init__(self, row_id):
        super().__init__(f"row {row_id!r} has an empty alignment")
        self.row_id = row_id


class UnknownCogid(KeyError):
    def __init__(self, cogid):
        super().__init__(cogid)
        self.cogid = cogid

    def __str__(self):
        return f"unknown cognate set {self.cogid!r}"


class SoundClass(enum.Enum):
    CONSONANT = "C"
    VOWEL = "V"
    GAP = "-"

    def __repr__(self):
        return self.value


DEFAULT_VOWELS = frozenset(
    "aeiouy" "æɐɑɒɔəɘɛɜɞɨɪɯɵøœɶʉʊʌʏɤ"
)


@dataclass(frozen=True)
class CvMap:
    """Vowel inventory (base graphemes) plus per-token overrides."""

    vowel_inventory: frozenset = DEFAULT_VOWELS
    overrides: Mapping[str, SoundClass] = field(default_factory=dict)


DEFAULT_CV_MAP = CvMap()


def _base_char(token):
    for char in unicodedata.normalize("NFD", token):
        if not unicodedata.combining(char):
            return char
    return token[0]


def classify_token(token: str, cv_map: CvMap = DEFAULT_CV_MAP) -> SoundClass:
    """Return the sound class of an alignment token.

    Diacritics are stripped via NFD, so ``ã`` and ``aː`` count as
    vowels; anything not recognised is a consonant.
    """
    if token == GAP:
        return SoundClass.GAP
    if token in cv_map.overrides:
        return cv_map.overrides[token]
    if _base_char(token) in cv_map.vowel_inventory:
        return SoundClass.VOWEL
    return SoundClass.CONSONANT


@dataclass(frozen=True)
class WordRow:
    id: str
    doculect: str
    concept: str
    cogid: str
    alignment: tuple
    # opaque extra columns, keyed by their original header name
    extra: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Wordlist:
    rows: tuple
    header: tuple
    provenance: Mapping[str, object] = field(default_factory=dict, compare=False)

    @property
    def doculects(self):
        return tuple(OrderedDict.fromkeys(row.doculect for row in self.rows))

    def __len__(self):
        return len(self.rows)

    def cognate_sets(self):
        """Map cogid to its rows, in first-appearance order."""
        sets = OrderedDict()
        for row in self.rows:
            sets.setdefault(row.cogid, []).append(row)
        return sets

    @property
    def singletons(self):
        return frozenset(c for c, rows in self.cognate_sets().items() if len(rows) == 1)


def normalize_tokens(tokens: Iterable[str]) -> list:
    return [GAP if tok in MARKERS else tok for tok in tokens]


def _resolve_header(header):
    index = {}
    for i, name in enumerate(header):
        index.setdefault(name.strip().upper(), i)
    resolved = {}
    for column in REQUIRED_COLUMNS:
        if column not in index:
            raise MissingColumn(column)
        resolved[column] = index[column]
    return resolved


def _drop_gap_columns(alignments):
    ncols = len(alignments[0])
    keep = [j for j in range(ncols) if any(a[j] != GAP for a in alignments)]
    return [tuple(a[j] for j in keep) for a in alignments]


def parse_wordlist(stream: TextIO, source: str | None = None) -> Wordlist:
    """Parse a tab-separated wordlist.

    Marker tokens ``+`` and ``_`` become gaps and columns that are gaps in
    every row of a cognate set are dropped.
    """
    lines = (line.rstrip("\r\n") for line in stream)
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise MissingColumn(REQUIRED_COLUMNS[0])
    header = tuple(lines[0].split("\t"))
    cols = _resolve_header(header)
    required = set(cols.values())

    raw = []
    seen = set()
    for line in lines[1:]:
        cells = line.split("\t")
        cells += [""] * (len(header) - len(cells))
        row_id = cells[cols["ID"]].strip()
        if not row_id:
            raise WordlistError("row without ID")
        if row_id in seen:
            raise DuplicateId(row_id)
        seen.add(row_id)
        text = cells[cols["ALIGNMENT"]].strip()
        tokens = [t for t in text.split(" ") if t] if text else []
        if not tokens:
            raise EmptyAlignment(row_id)
        extra = {
            header[i]: cells[i] for i in range(len(header)) if i not in required
        }
        raw.append((row_id, cells, normalize_tokens(tokens), extra))

    by_cogid = OrderedDict()
    for item in raw:
        by_cogid.setdefault(item[1][cols["COGID"]].strip(), []).append(item)

    alignments = {}
    for cogid, items in by_cogid.items():
        lengths = {len(item[2]) for item in items}
        if len(lengths) > 1:
            raise RaggedAlignment(cogid, [item[0] for item in items])
        trimmed = _drop_gap_columns([item[2] for item in items])
        if not trimmed[0]:
            raise EmptyAlignment(items[0][0])
        for item, alm in zip(items, trimmed):
            alignments[item[0]] = alm

    rows = tuple(
        WordRow(
            id=row_id,
            doculect=cells[cols["DOCULECT"]].strip(),
            concept=cells[cols["CONCEPT"]].strip(),
            cogid=cells[cols["COGID"]].strip(),
            alignment=alignments[row_id],
            extra=extra,
        )
        for row_id, cells, _, extra in raw
    )
    return Wordlist(rows=rows, header=header, provenance={"source": source})


def read_wordlist(path) -> Wordlist:
    with open(path, encoding="utf-8", newline="") as handle:
        return parse_wordlist(handle, source=str(path))


def write_wordlist(wordlist: Wordlist, stream: TextIO, trims: Mapping | None = None) -> None:
    """Write ``wordlist`` as TSV; with ``trims``, add the trimmed alignment columns."""
    header = list(wordlist.header)
    if trims is not None:
        cogids = {row.cogid for row in wordlist.rows}
        for cogid in trims:
            if cogid not in cogids:
                raise UnknownCogid(cogid)
        header = [h for h in header if h.upper() not in (TRIMMED_ALIGNMENT, TRIMMED_SITES)]
        header += [TRIMMED_ALIGNMENT, TRIMMED_SITES]
    cols = _resolve_header(header)
    fields = {i: name for name, i in cols.items()}

    stream.write("\t".join(header) + "\n")
    for row in wordlist.rows:
        cells = []
        for i, name in enumerate(header):
            if i in fields:
                key = fields[i]
                value = " ".join(row.alignment) if key == "ALIGNMENT" else getattr(row, key.lower())
            elif trims is not None and name == TRIMMED_ALIGNMENT:
                trim = trims.get(row.cogid)
                kept = trim.kept if trim is not None else range(len(row.alignment))
                value = " ".join(row.alignment[j] for j in kept)
            elif trims is not None and name == TRIMMED_SITES:
                trim = trims.get(row.cogid)
                value = ",".join(str(j) for j in sorted(trim.removed)) if trim is not None else ""
            else:
                value = row.extra.get(name, "")
            cells.append(value)
        stream.write("\t".join(cells) + "\n")
