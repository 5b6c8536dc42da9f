"""Hypothesis strategies for alignments, sites and wordlists."""

from hypothesis import strategies as st

from alntrim.alignment import AlignmentMatrix, Skeleton
from alntrim.corrpat import Site
from alntrim.trimming import Strategy, TrimConfig

TOKENS = ["a", "i", "u", "ə", "t", "k", "p", "tʰ", "s", "n", "-"]


@st.composite
def matrices(draw, max_rows=6, max_cols=9):
    nrows = draw(st.integers(1, max_rows))
    ncols = draw(st.integers(1, max_cols))
    grid = [list(draw(st.lists(st.sampled_from(TOKENS), min_size=ncols, max_size=ncols))) for _ in range(nrows)]
    for j in range(ncols):
        if all(row[j] == "-" for row in grid):
            grid[draw(st.integers(0, nrows - 1))][j] = draw(st.sampled_from(TOKENS[:-1]))
    return AlignmentMatrix(
        cogid="m",
        row_ids=tuple(str(i) for i in range(nrows)),
        doculects=tuple(f"L{i}" for i in range(nrows)),
        grid=tuple(tuple(r) for r in grid),
    )


skeletons = st.sampled_from(["CV", "C", "V", "CVC", "CVV", "CCVV"]).map(Skeleton.parse)

trim_configs = st.builds(
    TrimConfig,
    strategy=st.sampled_from(list(Strategy)),
    gap_threshold=st.sampled_from([0.0, 0.25, 0.3, 0.5, 0.6, 0.75, 1.0]),
    skeleton=skeletons,
)

value_maps = st.dictionaries(
    st.sampled_from("ABCD"), st.sampled_from(["a", "b", "t", "-"]), min_size=1
).filter(lambda v: any(t != "-" for t in v.values()))


@st.composite
def site_lists(draw, max_size=25):
    maps = draw(st.lists(value_maps, max_size=max_size))
    return [Site(str(i // 3), i % 3, v) for i, v in enumerate(maps)]


@st.composite
def wordlist_sets(draw, max_sets=6):
    """``{cogid: {doculect: alignment}}`` with aligned, non-empty columns."""
    sets = {}
    for c in range(draw(st.integers(1, max_sets))):
        m = draw(matrices(max_rows=4, max_cols=6))
        doculects = draw(st.permutations(["A", "B", "C", "D"]))[: m.nrows]
        sets[str(c + 1)] = {d: " ".join(row) for d, row in zip(doculects, m.grid)}
    return sets
