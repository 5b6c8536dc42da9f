"""Invariants of the trimming and profile operations beyond the acceptance suite."""

from hypothesis import given, settings
from hypothesis import strategies as st

from alntrim.alignment import AlignmentMatrix, gap_profile, satisfies_skeleton, site_classes
from alntrim.trimming import Strategy, TrimConfig, candidate_sites, trim

from strategies import matrices, skeletons, trim_configs


@settings(max_examples=200)
@given(matrices(), st.randoms(use_true_random=False))
def test_profile_and_classes_ignore_row_order(m, rnd):
    order = list(range(m.nrows))
    rnd.shuffle(order)
    shuffled = AlignmentMatrix(m.cogid, tuple(m.row_ids[i] for i in order),
                               tuple(m.doculects[i] for i in order), tuple(m.grid[i] for i in order))
    assert gap_profile(shuffled) == gap_profile(m)
    assert site_classes(shuffled) == site_classes(m)


@settings(max_examples=200)
@given(matrices(), st.data())
def test_removing_a_column_drops_one_profile_entry(m, data):
    if m.ncols < 2:
        return
    j = data.draw(st.integers(0, m.ncols - 1))
    grid = tuple(row[:j] + row[j + 1:] for row in m.grid)
    if any(all(row[k] == "-" for row in grid) for k in range(m.ncols - 1)):
        return
    smaller = AlignmentMatrix(m.cogid, m.row_ids, m.doculects, grid)
    full = list(gap_profile(m))
    del full[j]
    assert list(gap_profile(smaller)) == full


@settings(max_examples=200)
@given(matrices(), skeletons, st.data())
def test_skeleton_is_monotone(m, skeleton, data):
    classes = site_classes(m)
    kept = data.draw(st.sets(st.integers(0, m.ncols - 1)))
    more = kept | data.draw(st.sets(st.integers(0, m.ncols - 1)))
    if satisfies_skeleton(classes, kept, skeleton):
        assert satisfies_skeleton(classes, more, skeleton)


@settings(max_examples=300)
@given(matrices(), trim_configs)
def test_gap_oriented_completeness(m, config):
    if config.strategy is not Strategy.GAP:
        return
    r = trim(m, config)
    if r.excluded:
        return
    cands = candidate_sites(r.profile, r.classes, config)
    if len(r.removed) == len(cands):
        assert all(r.profile[j] < config.gap_threshold for j in r.kept)
    else:
        # the walk stopped at the first candidate it could not remove
        blocker = cands[len(r.removed)]
        assert not satisfies_skeleton(r.classes, set(r.kept) - {blocker}, config.skeleton)


@settings(max_examples=300)
@given(matrices(), trim_configs)
def test_core_oriented_locality(m, config):
    if config.strategy is not Strategy.CORE:
        return
    removed = set(trim(m, config).removed)
    left = 0
    while left in removed:
        left += 1
    right = m.ncols - 1
    while right in removed:
        right -= 1
    assert removed == set(range(left)) | set(range(right + 1, m.ncols))


@settings(max_examples=200)
@given(matrices(), trim_configs)
def test_strategy_none_is_identity(m, config):
    r = trim(m, TrimConfig(Strategy.NONE, config.gap_threshold, config.skeleton))
    assert r.kept == tuple(range(m.ncols)) and r.removed == ()
