"""Trimming strategies for alignment matrices.

Both targeted strategies build an ordered candidate list from the gap
profile and then delete candidates one at a time, stopping as soon as a
deletion would leave less than the skeleton.  The random strategy mirrors
the per-class deletion counts of a targeted result.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .alignment import (
    DEFAULT_SKELETON,
    AlignmentMatrix,
    Skeleton,
    gap_profile,
    satisfies_skeleton,
    site_classes,
)
from .wordlist import DEFAULT_CV_MAP, CvMap, SoundClass

MAX_REJECTIONS = 1000


class Strategy(enum.Enum):
    NONE = "none"
    CORE = "core"
    GAP = "gap"

    def __str__(self):
        return self.value


class ClassCountImpossible(ValueError):
    pass


@dataclass(frozen=True)
class TrimConfig:
    strategy: Strategy = Strategy.GAP
    gap_threshold: float = 0.5
    skeleton: Skeleton = field(default_factory=lambda: DEFAULT_SKELETON)

    def __post_init__(self):
        if not 0.0 <= self.gap_threshold <= 1.0:
            raise ValueError(f"gap threshold must lie in [0, 1], got {self.gap_threshold}")


@dataclass(frozen=True)
class TrimResult:
    cogid: str
    kept: tuple
    removed: tuple  # in removal order
    profile: tuple
    classes: tuple
    excluded: bool = False

    def removed_by_class(self):
        counts = {SoundClass.CONSONANT: 0, SoundClass.VOWEL: 0}
        for j in self.removed:
            counts[self.classes[j]] += 1
        return counts


def candidate_sites(profile, classes, config: TrimConfig) -> list:
    """Ordered list of columns that may be trimmed under ``config``."""
    if len(profile) != len(classes):
        raise ValueError("profile and classes differ in length")
    if config.strategy is Strategy.NONE:
        return []
    is_candidate = [p >= config.gap_threshold for p in profile]
    if config.strategy is Strategy.GAP:
        cands = [j for j, c in enumerate(is_candidate) if c]
        return sorted(cands, key=lambda j: (-profile[j], j))

    right = []
    for j in reversed(range(len(profile))):
        if not is_candidate[j]:
            break
        right.append(j)
    left = []
    for j in range(len(profile)):
        if not is_candidate[j] or j in right:
            break
        left.append(j)
    return right + left


def _result(matrix, kept, removed, profile, classes, excluded=False):
    return TrimResult(
        cogid=matrix.cogid,
        kept=tuple(sorted(kept)),
        removed=tuple(removed),
        profile=profile,
        classes=classes,
        excluded=excluded,
    )


def trim(matrix: AlignmentMatrix, config: TrimConfig = TrimConfig(), cv_map: CvMap = DEFAULT_CV_MAP) -> TrimResult:
    profile = gap_profile(matrix)
    classes = site_classes(matrix, cv_map)
    kept = set(range(matrix.ncols))
    if not satisfies_skeleton(classes, kept, config.skeleton):
        return _result(matrix, kept, (), profile, classes, excluded=True)
    removed = []
    for j in candidate_sites(profile, classes, config):
        if not satisfies_skeleton(classes, kept - {j}, config.skeleton):
            break
        kept.discard(j)
        removed.append(j)
    return _result(matrix, kept, removed, profile, classes)


def trim_random(
    matrix: AlignmentMatrix,
    reference: TrimResult,
    config: TrimConfig,
    rng: random.Random,
    cv_map: CvMap = DEFAULT_CV_MAP,
) -> TrimResult:
    """Delete as many consonant and vowel columns as ``reference`` did, at random.

    Draws are rejected until the survivors still hold the skeleton; after
    ``MAX_REJECTIONS`` failures the lowest-index columns needed for the
    skeleton are protected and the draw is made from the rest.
    """
    if reference.excluded:
        raise ValueError(f"cognate set {reference.cogid!r} is excluded; nothing to mirror")
    profile = gap_profile(matrix)
    classes = site_classes(matrix, cv_map)
    if reference.cogid != matrix.cogid or len(reference.classes) != matrix.ncols:
        raise ValueError("reference does not belong to this matrix")
    wanted = reference.removed_by_class()
    pools = {
        cls: [j for j, c in enumerate(classes) if c is cls]
        for cls in (SoundClass.CONSONANT, SoundClass.VOWEL)
    }
    for cls, n in wanted.items():
        if n > len(pools[cls]):
            raise ClassCountImpossible(
                f"cognate set {matrix.cogid!r}: cannot remove {n} {cls.name.lower()} "
                f"columns out of {len(pools[cls])}"
            )
    everything = set(range(matrix.ncols))
    if not any(wanted.values()):
        return _result(matrix, everything, (), profile, classes)

    for _ in range(MAX_REJECTIONS):
        removed = []
        for cls in (SoundClass.CONSONANT, SoundClass.VOWEL):
            removed += rng.sample(pools[cls], wanted[cls])
        kept = everything.difference(removed)
        if satisfies_skeleton(classes, kept, config.skeleton):
            return _result(matrix, kept, sorted(removed), profile, classes)

    removed = []
    for cls in (SoundClass.CONSONANT, SoundClass.VOWEL):
        protected = config.skeleton.required.get(cls, 0)
        removed += rng.sample(pools[cls][protected:], wanted[cls])
    return _result(matrix, everything.difference(removed), sorted(removed), profile, classes)
