"""Correspondence patterns: clusters of mutually compatible alignment sites.

Two sites are compatible when they agree on every doculect both of them
attest.  Doculects missing from a cognate set are wildcards; a gap is an
ordinary value.  Sites are clustered greedily into the largest compatible
pattern and the clustering is then refined by repeated reassignment.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .alignment import AlignmentMatrix
from .wordlist import GAP

MAX_REFINEMENTS = 10
MISSING = "Ø"


class DuplicateSiteId(ValueError):
    pass


def cogid_key(cogid):
    """Sort key that orders numeric cognate ids numerically."""
    return (0, int(cogid), "") if cogid.isdigit() else (1, 0, cogid)


@dataclass(frozen=True)
class Site:
    cogid: str
    column: int
    values: Mapping[str, str]

    @property
    def site_id(self):
        return (self.cogid, self.column)

    def sort_key(self):
        return (-len(self.values), cogid_key(self.cogid), self.column)


@dataclass(frozen=True)
class CorrespondencePattern:
    pattern_id: int
    values: Mapping[str, str]
    members: tuple

    @property
    def size(self):
        return len(self.members)


@dataclass(frozen=True)
class PatternAssignment:
    patterns: tuple = ()
    site_to_pattern: Mapping[tuple, int] = field(default_factory=dict)

    def pattern(self, pattern_id):
        return self.patterns[pattern_id - 1]


def compatible(a: Mapping[str, str], b: Mapping[str, str]) -> bool:
    if len(b) < len(a):
        a, b = b, a
    for doculect, token in a.items():
        other = b.get(doculect)
        if other is not None and other != token:
            return False
    return True


def sites_from_matrix(matrix: AlignmentMatrix, columns: Iterable[int] | None = None) -> list:
    """Extract sites for ``columns`` (all columns by default).

    When a doculect has several rows, the row with the smallest id supplies
    the value.  Columns that are gaps in every such row carry nothing and
    are skipped.
    """
    first = {}
    for i in sorted(range(matrix.nrows), key=lambda i: matrix.row_ids[i]):
        first.setdefault(matrix.doculects[i], i)
    order = sorted(first, key=first.get)
    if columns is None:
        columns = range(matrix.ncols)
    sites = []
    for j in columns:
        values = {d: matrix.grid[first[d]][j] for d in order}
        if any(v != GAP for v in values.values()):
            sites.append(Site(matrix.cogid, j, values))
    return sites


class _Cluster:
    __slots__ = ("members", "values")

    def __init__(self):
        self.members = []
        self.values = {}

    def add(self, site):
        self.members.append(site)
        self.values.update(site.values)

    def discard(self, site):
        self.members.remove(site)
        self.values = {}
        for member in self.members:
            self.values.update(member.values)


def _best(clusters, site):
    best, best_size = None, 0
    for cid, cluster in clusters.items():
        size = len(cluster.members)
        if size > best_size and compatible(site.values, cluster.values):
            best, best_size = cid, size
    return best


def infer_patterns(sites: Iterable[Site], max_refinements: int = MAX_REFINEMENTS) -> PatternAssignment:
    """Partition ``sites`` into correspondence patterns.

    Sites are visited by decreasing number of attested doculects, then by
    cognate id and column.  Each joins the compatible pattern with most
    members (lowest id on ties) or opens a new one.  Refinement passes take
    every site out and reassign it by the same rule until nothing moves.
    """
    sites = list(sites)
    ids = [s.site_id for s in sites]
    if len(set(ids)) != len(ids):
        seen = set()
        dup = next(i for i in ids if i in seen or seen.add(i))
        raise DuplicateSiteId(f"duplicate site {dup[0]}:{dup[1]}")
    sites.sort(key=Site.sort_key)

    clusters = OrderedDict()
    where = {}
    next_id = 0
    for site in sites:
        cid = _best(clusters, site)
        if cid is None:
            cid = next_id
            next_id += 1
            clusters[cid] = _Cluster()
        clusters[cid].add(site)
        where[site.site_id] = cid

    for _ in range(max_refinements):
        changed = False
        for site in sites:
            home = where[site.site_id]
            clusters[home].discard(site)
            cid = _best(clusters, site)
            if cid is None:
                if clusters[home].members:
                    cid = next_id
                    next_id += 1
                    clusters[cid] = _Cluster()
                else:
                    cid = home
            clusters[cid].add(site)
            where[site.site_id] = cid
            if cid != home:
                changed = True
                if not clusters[home].members:
                    del clusters[home]
        if not changed:
            break

    patterns = []
    mapping = {}
    for number, cluster in enumerate(clusters.values(), start=1):
        members = tuple(s.site_id for s in sorted(cluster.members, key=Site.sort_key))
        patterns.append(CorrespondencePattern(number, dict(cluster.values), members))
        for sid in members:
            mapping[sid] = number
    return PatternAssignment(tuple(patterns), mapping)


def pattern_sizes(assignment: PatternAssignment) -> list:
    return sorted((p.size for p in assignment.patterns), reverse=True)


def write_patterns(assignment: PatternAssignment, doculects, stream) -> None:
    """Write patterns as TSV: id, size, one column per doculect, member sites."""
    doculects = list(doculects)
    stream.write("\t".join(["PATTERN_ID", "SIZE", *doculects, "MEMBERS"]) + "\n")
    for p in assignment.patterns:
        cells = [str(p.pattern_id), str(p.size)]
        cells += [p.values.get(d, MISSING) for d in doculects]
        cells.append(",".join(f"{c}:{j}" for c, j in p.members))
        stream.write("\t".join(cells) + "\n")
