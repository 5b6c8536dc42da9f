"""End-to-end runs: trimming, pattern inference, regularity and the random baseline."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from statistics import fmean

from .alignment import AlignmentMatrix
from .corrpat import PatternAssignment, cogid_key, infer_patterns, pattern_sizes, sites_from_matrix
from .regularity import RegularityConfig, RegularityReport, report
from .trimming import Strategy, TrimConfig, trim, trim_random
from .wordlist import DEFAULT_CV_MAP, CvMap, Wordlist

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(base_seed: int, iteration: int) -> int:
    """Independent 64-bit seed for one Monte Carlo iteration."""
    return splitmix64(splitmix64(base_seed & MASK64) ^ (iteration & MASK64))


@dataclass(frozen=True)
class ExperimentConfig:
    trim: TrimConfig = field(default_factory=TrimConfig)
    regularity: RegularityConfig = field(default_factory=RegularityConfig)
    random_iterations: int = 100
    base_seed: int = 42
    strategies: tuple = (Strategy.NONE, Strategy.CORE, Strategy.GAP)
    cv_map: CvMap = DEFAULT_CV_MAP

    def __post_init__(self):
        if self.random_iterations < 0:
            raise ValueError("random_iterations must be non-negative")
        if not self.strategies:
            raise ValueError("at least one strategy is required")


@dataclass(frozen=True)
class PipelineResult:
    strategy: Strategy
    trims: dict
    assignment: PatternAssignment
    report: RegularityReport


@dataclass(frozen=True)
class BaselineResult:
    strategy: Strategy
    targeted_w: float
    ps: tuple
    ws: tuple

    @property
    def mean_p(self):
        return fmean(self.ps) if self.ps else 0.0

    @property
    def mean_w(self):
        return fmean(self.ws) if self.ws else 0.0

    @property
    def exceed_fraction(self):
        return exceed_fraction(self.ws, self.targeted_w)


def exceed_fraction(ws, targeted_w):
    """Share of iterations whose W is strictly above the targeted W."""
    if not ws:
        return 0.0
    return sum(w > targeted_w for w in ws) / len(ws)


def build_matrices(wordlist: Wordlist) -> dict:
    """Alignment matrices of all non-singleton cognate sets, by cogid."""
    return {
        cogid: AlignmentMatrix.from_rows(cogid, rows)
        for cogid, rows in sorted(wordlist.cognate_sets().items(), key=lambda kv: cogid_key(kv[0]))
        if len(rows) > 1
    }


def _analyse(wordlist, matrices, trims, config):
    sites = []
    for cogid, result in trims.items():
        if not result.excluded:
            sites += sites_from_matrix(matrices[cogid], result.kept)
    assignment = infer_patterns(sites)
    return assignment, report(wordlist, trims, assignment, config.regularity)


def run_pipeline(wordlist: Wordlist, strategy: Strategy, config: ExperimentConfig = ExperimentConfig()) -> PipelineResult:
    matrices = build_matrices(wordlist)
    trim_config = replace(config.trim, strategy=strategy)
    trims = {c: trim(m, trim_config, config.cv_map) for c, m in matrices.items()}
    assignment, rep = _analyse(wordlist, matrices, trims, config)
    return PipelineResult(strategy, trims, assignment, rep)


def _random_iteration(wordlist, matrices, targeted, config, iteration):
    rng = random.Random(derive_seed(config.base_seed, iteration))
    trims = {}
    for cogid, reference in targeted.trims.items():
        if reference.excluded:
            trims[cogid] = reference
        else:
            trims[cogid] = trim_random(matrices[cogid], reference, config.trim, rng, config.cv_map)
    _, rep = _analyse(wordlist, matrices, trims, config)
    return iteration, rep.p_regular_patterns, rep.w_regular_words


def run_random_baseline(
    wordlist: Wordlist,
    strategy: Strategy,
    config: ExperimentConfig = ExperimentConfig(),
    targeted: PipelineResult | None = None,
    jobs: int = 1,
) -> BaselineResult:
    """Compare a targeted strategy against random deletion of as many sites.

    Iteration ``i`` draws from a stream seeded by ``derive_seed(base_seed, i)``,
    so results do not depend on ``jobs`` or scheduling.
    """
    if strategy is Strategy.NONE:
        raise ValueError("the random baseline mirrors core or gap trimming only")
    if config.random_iterations < 1:
        raise ValueError("random_iterations must be at least 1")
    if targeted is None:
        targeted = run_pipeline(wordlist, strategy, config)
    matrices = build_matrices(wordlist)
    iterations = range(config.random_iterations)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_random_iteration, wordlist, matrices, targeted, config, i)
                for i in iterations
            ]
            results = [f.result() for f in futures]
    else:
        results = [_random_iteration(wordlist, matrices, targeted, config, i) for i in iterations]
    results.sort(key=lambda r: r[0])
    return BaselineResult(
        strategy=strategy,
        targeted_w=targeted.report.w_regular_words,
        ps=tuple(r[1] for r in results),
        ws=tuple(r[2] for r in results),
    )


@dataclass(frozen=True)
class ComparisonReport:
    reports: dict  # Strategy -> RegularityReport
    baselines: dict  # Strategy -> BaselineResult

    def records(self):
        out = []
        for strategy, rep in self.reports.items():
            rec = rep.record(str(strategy))
            base = self.baselines.get(strategy)
            if base is not None:
                rec.update(
                    random_p=base.mean_p,
                    random_w=base.mean_w,
                    exceed_fraction=base.exceed_fraction,
                    random_iterations=len(base.ws),
                )
            out.append(rec)
        return out


def compare(wordlist: Wordlist, config: ExperimentConfig = ExperimentConfig(), jobs: int = 1) -> ComparisonReport:
    reports, baselines = {}, {}
    for strategy in config.strategies:
        result = run_pipeline(wordlist, strategy, config)
        reports[strategy] = result.report
        if strategy is not Strategy.NONE and config.random_iterations > 0:
            baselines[strategy] = run_random_baseline(wordlist, strategy, config, result, jobs)
    return ComparisonReport(reports, baselines)


def export_distribution(assignments) -> list:
    """Rows of (label, rank, size) with sizes descending within each label."""
    rows = []
    for label, assignment in assignments.items():
        for rank, size in enumerate(pattern_sizes(assignment), start=1):
            rows.append((str(label), rank, size))
    return rows


def write_distribution(rows, stream):
    stream.write("STRATEGY\tRANK\tSIZE\n")
    for label, rank, size in rows:
        stream.write(f"{label}\t{rank}\t{size}\n")
