"""Alignment matrices for single cognate sets and their column profiles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .wordlist import DEFAULT_CV_MAP, GAP, CvMap, SoundClass, classify_token


@dataclass(frozen=True)
class AlignmentMatrix:
    cogid: str
    row_ids: tuple
    doculects: tuple
    grid: tuple

    def __post_init__(self):
        if not self.grid or not self.grid[0]:
            raise ValueError(f"cognate set {self.cogid!r}: empty alignment")
        if not len(self.row_ids) == len(self.doculects) == len(self.grid):
            raise ValueError(f"cognate set {self.cogid!r}: row labels do not match grid")
        width = len(self.grid[0])
        if any(len(row) != width for row in self.grid):
            raise ValueError(f"cognate set {self.cogid!r}: ragged grid")
        for j in range(width):
            if all(row[j] == GAP for row in self.grid):
                raise ValueError(f"cognate set {self.cogid!r}: column {j} is all gaps")

    @property
    def ncols(self):
        return len(self.grid[0])

    @property
    def nrows(self):
        return len(self.grid)

    def column(self, j):
        return tuple(row[j] for row in self.grid)

    @classmethod
    def from_rows(cls, cogid, rows):
        """Build a matrix from the ``WordRow`` objects of one cognate set."""
        return cls(
            cogid=cogid,
            row_ids=tuple(r.id for r in rows),
            doculects=tuple(r.doculect for r in rows),
            grid=tuple(tuple(r.alignment) for r in rows),
        )

    @classmethod
    def from_strings(cls, alignments, cogid="1", doculects=None):
        """Convenience constructor from space-separated alignment strings."""
        grid = tuple(tuple(a.split()) for a in alignments)
        if doculects is None:
            doculects = tuple(f"L{i}" for i in range(len(grid)))
        return cls(
            cogid=cogid,
            row_ids=tuple(f"{cogid}-{i}" for i in range(len(grid))),
            doculects=tuple(doculects),
            grid=grid,
        )


def gap_profile(matrix: AlignmentMatrix) -> tuple:
    """Fraction of gap tokens per column."""
    n = matrix.nrows
    return tuple(
        sum(tok == GAP for tok in matrix.column(j)) / n for j in range(matrix.ncols)
    )


def site_classes(matrix: AlignmentMatrix, cv_map: CvMap = DEFAULT_CV_MAP) -> tuple:
    """Majority class of each column; vowel only on a strict majority."""
    classes = []
    for j in range(matrix.ncols):
        sounds = [classify_token(t, cv_map) for t in matrix.column(j) if t != GAP]
        vowels = sum(c is SoundClass.VOWEL for c in sounds)
        classes.append(SoundClass.VOWEL if 2 * vowels > len(sounds) else SoundClass.CONSONANT)
    return tuple(classes)


class Skeleton:
    """Unordered multiset of sound classes a trimmed alignment must retain."""

    __slots__ = ("required",)

    def __init__(self, consonants=1, vowels=1):
        if consonants < 0 or vowels < 0 or consonants + vowels < 1:
            raise ValueError("skeleton must require at least one site")
        self.required = {SoundClass.CONSONANT: consonants, SoundClass.VOWEL: vowels}

    @classmethod
    def parse(cls, text: str) -> "Skeleton":
        """Read a string such as ``"CV"`` or ``"CVC"``; order is ignored."""
        text = text.strip().upper()
        if not text or set(text) - {"C", "V"}:
            raise ValueError(f"invalid skeleton {text!r}: use letters C and V")
        return cls(text.count("C"), text.count("V"))

    def __eq__(self, other):
        return isinstance(other, Skeleton) and self.required == other.required

    def __hash__(self):
        return hash(tuple(sorted((k.value, v) for k, v in self.required.items())))

    def __str__(self):
        return "C" * self.required[SoundClass.CONSONANT] + "V" * self.required[SoundClass.VOWEL]

    def __repr__(self):
        return f"Skeleton({str(self)!r})"


DEFAULT_SKELETON = Skeleton()


def satisfies_skeleton(classes, kept, skeleton: Skeleton = DEFAULT_SKELETON) -> bool:
    counts = Counter(classes[j] for j in kept)
    return all(counts[cls] >= n for cls, n in skeleton.required.items())
