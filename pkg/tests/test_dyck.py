import math
from fractions import Fraction

import pytest

from posicat import (
    BoundedAffinePerm,
    ConcaveProfile,
    compute_C,
    count_avoiding_paths,
    enumerate_avoiding_paths,
    inversion_multiset,
    is_repetition_free,
    profile_forbidden_set,
    profile_to_perm,
    small_path,
    synthesize_perm,
    synthesize_profile,
    validate_profile,
)
from posicat.errors import (
    InvalidProfile,
    NotCentrallySymmetric,
    NotConvex,
    TooManyPaths,
)

F = Fraction


# -- counting ---------------------------------------------------------------------

def test_counts_named():
    assert count_avoiding_paths(3, 7, set()) == 5
    assert count_avoiding_paths(3, 7, {(1, 2), (2, 5)}) == 3
    for n in range(2, 9):
        assert count_avoiding_paths(1, n, set()) == 1


def test_counts_rational_catalan():
    for n in range(2, 10):
        for k in range(1, n):
            if math.gcd(k, n) == 1:
                assert count_avoiding_paths(k, n, set()) == math.comb(n, k) // n


def test_forbidden_below_diagonal_never_reached():
    # the sheared point (2, 5) lies strictly below the (3, 7) diagonal
    assert count_avoiding_paths(3, 7, {(2, 5)}) == 5


def test_enumerate_matches_count():
    paths = enumerate_avoiding_paths(3, 7, set())
    assert len(paths) == 5
    for path in paths:
        assert path[0] == (0, 0) and path[-1] == (3, 7)
        for (a1, b1), (a2, b2) in zip(path, path[1:]):
            assert b2 == b1 + 1 and a2 - a1 in (0, 1)
    assert len(enumerate_avoiding_paths(1, 3, set())) == 1


def test_enumerate_cap():
    with pytest.raises(TooManyPaths):
        enumerate_avoiding_paths(5, 11, set(), cap=10)


# -- profiles ----------------------------------------------------------------------

SAMPLE_PROFILE_25 = (F(0), F(9, 20), F(9, 10), F(13, 10), F(83, 50), F(2))


def test_validate_profile_valid_cases():
    ok, problems = validate_profile(SAMPLE_PROFILE_25, 2, 5)
    assert ok and problems == []
    ok, _ = validate_profile((F(0), F(2, 3), F(4, 3), F(2)), 2, 3)
    assert ok  # equal increments are allowed, fractional parts distinct


def test_validate_profile_rejects_fig3_path():
    # small paths of arbitrary permutations need not be concave
    verticals = small_path(BoundedAffinePerm.from_cycle([0, 3, 2, 5, 1, 4])).verticals
    ok, problems = validate_profile(verticals, 3, 6)
    assert not ok
    assert any("rises" in p for p in problems)


def test_validate_profile_violations():
    ok, problems = validate_profile((F(0), F(3, 2), F(2)), 2, 2)
    assert not ok and any("outside" in p for p in problems)
    ok, problems = validate_profile((F(0), F(1, 2), F(1), F(3, 2), F(2)), 2, 4)
    assert not ok and any("collide" in p for p in problems)


def test_profile_to_perm_named():
    assert profile_to_perm(SAMPLE_PROFILE_25).window == (2, 3, 4, 5, 6)
    assert profile_to_perm((F(0), F(2, 3), F(4, 3), F(2))).window == (2, 3, 4)
    assert profile_to_perm((F(0), F(1, 2), F(1))).window == (1, 2)
    with pytest.raises(InvalidProfile):
        profile_to_perm((F(0), F(3, 2), F(2)))


def test_profile_forbidden_set():
    profile = ConcaveProfile(SAMPLE_PROFILE_25)
    assert profile_forbidden_set(profile) == set()


# -- synthesis ----------------------------------------------------------------------

def test_synthesize_profile_empty_2_5():
    profile = synthesize_profile(set(), 2, 5)
    ok, problems = validate_profile(profile.heights, 2, 5)
    assert ok, problems
    assert profile_forbidden_set(profile) == set()
    assert is_repetition_free(profile_to_perm(profile))


def test_synthesize_profile_diagonal_2_4():
    profile = synthesize_profile({(1, 2)}, 2, 4)
    assert profile_forbidden_set(profile) == {(1, 2)}
    floors = [math.floor(h) for h in profile.heights]
    assert floors == [0, 0, 1, 1, 2]


def test_synthesize_profile_3_7():
    profile = synthesize_profile({(1, 2), (2, 5)}, 3, 7)
    assert profile_forbidden_set(profile) == {(1, 2), (2, 5)}


def test_synthesize_perm_empty():
    perm = synthesize_perm(set(), 2, 5)
    assert is_repetition_free(perm)
    assert inversion_multiset(perm).entries == {}


def test_synthesize_perm_fig2_set():
    perm = synthesize_perm({(1, 1), (2, 3)}, 3, 7)
    assert inversion_multiset(perm).entries == {(1, 1): 1, (2, 3): 1}
    assert compute_C(perm) == 3
    assert count_avoiding_paths(3, 7, {(1, 2), (2, 5)}) == 3


def test_synthesize_perm_rejects_asymmetric():
    with pytest.raises(NotCentrallySymmetric):
        synthesize_perm({(1, 1)}, 3, 7)


def test_synthesize_perm_rejects_nonconvex():
    # gcd(2, 4) = 2: the empty set misses the forced diagonal point
    with pytest.raises(NotConvex):
        synthesize_perm(set(), 2, 4)


def test_double_move_path_identity():
    # removing a double crossing adds the two factor frames to the forbidden
    # set; every avoiding path either passes through the new point (splitting
    # into a path pair for the factors) or avoids the bigger set
    from posicat import enumerate_theta
    from posicat.invsets import SHEARED

    checked = 0
    for n in range(2, 8):
        for f in enumerate_theta(None, n):
            if not is_repetition_free(f):
                continue
            for i in range(n):
                if not f.has_double_crossing_at(i):
                    continue
                f1, f2, _ = f.resolve_crossing((i, i + 1))
                conj = f.conjugate_s(i).perm

                def paths(p):
                    return count_avoiding_paths(
                        p.k, p.n, inversion_multiset(p, SHEARED).points()
                    )

                assert paths(conj) == paths(f1) * paths(f2) + paths(f)
                checked += 1
    assert checked == 324


def test_profile_json():
    profile = synthesize_profile(set(), 2, 5)
    data = profile.as_json()
    assert data[0] == [0, 1] and data[-1] == [2, 1]
    assert all(len(pair) == 2 for pair in data)


def test_enumerate_cap_boundary():
    assert len(enumerate_avoiding_paths(3, 7, set(), cap=5)) == 5
    with pytest.raises(TooManyPaths):
        enumerate_avoiding_paths(3, 7, set(), cap=4)
