"""Trimming of phonetic alignments and regularity of sound correspondence patterns."""

from .alignment import AlignmentMatrix, Skeleton, gap_profile, satisfies_skeleton, site_classes
from .corrpat import (
    CorrespondencePattern,
    PatternAssignment,
    Site,
    compatible,
    infer_patterns,
    pattern_sizes,
    sites_from_matrix,
)
from .pipeline import (
    ExperimentConfig,
    compare,
    export_distribution,
    run_pipeline,
    run_random_baseline,
)
from .regularity import RegularityConfig, RegularityReport, classify_cognates, classify_patterns, report
from .trimming import Strategy, TrimConfig, TrimResult, candidate_sites, trim, trim_random
from .wordlist import CvMap, SoundClass, Wordlist, WordRow, classify_token, parse_wordlist, read_wordlist, write_wordlist

__version__ = "0.1.0"
