import random
from itertools import combinations

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from helpers import random_all_crossing_small, random_two_two, two_two_oracle
from planeweave.arrangements import (ColoredSegmentFamily, GridCertificate, TwoTwo, canonical_grid,
                                     classify_two_two, crossing_vector, exhaustive_grid, find_k_grid,
                                     generate_no_grid_family, is_grid_equivalent, pigeonhole_grid)
from planeweave.errors import NotAllCrossing, PreconditionError
from planeweave.exactgeom import Point, Segment, segment


def seg(x1, y1, x2, y2):
    return segment((x1, y1), (x2, y2))


def _grid_oracle(f, red_idx, blue_idx):
    """Face oracle: every 2x2 sub-arrangement has the convex cell of the axis grid."""
    for (r1, r2) in combinations(red_idx, 2):
        for (b1, b2) in combinations(blue_idx, 2):
            if two_two_oracle(f.red[r1], f.red[r2], f.blue[b1], f.blue[b2]) != "TypeI":
                return False
    return True


def test_canonical_grid_two_two():
    f = canonical_grid(2)
    assert classify_two_two(*f.red, *f.blue) is TwoTwo.TYPE_I


def test_spec_two_two_example():
    r1, r2 = seg(0, 0, 10, 4), seg(0, 2, 10, 6)
    b1, b2 = seg(2, -1, 3, 7), seg(6, 7, 7, -1)
    kind = classify_two_two(r1, r2, b1, b2)
    assert kind.value == two_two_oracle(r1, r2, b1, b2)


def test_invalid_two_two():
    f = canonical_grid(2)
    assert classify_two_two(seg(0, 0, 3, 3), seg(0, 3, 3, 0), *f.blue) is TwoTwo.INVALID
    assert classify_two_two(*f.red, f.blue[0], seg(10, 0, 10, 3)) is TwoTwo.INVALID


def test_type_two_example():
    # pinwheel around the reflex corner (1, 1)
    r1, b1 = seg(-1, 0, 5, 0), seg(0, -1, 0, 5)
    r2 = seg("-1/2", "11/2", "7/6", "1/2")
    b2 = seg("11/2", "-1/2", "1/2", "7/6")
    assert classify_two_two(r1, r2, b1, b2) is TwoTwo.TYPE_II
    assert two_two_oracle(r1, r2, b1, b2) == "TypeII"


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_classification_matches_face_oracle(seed):
    segs = random_two_two(random.Random(seed))
    if segs is None:
        return
    kind = classify_two_two(*segs)
    if kind is not TwoTwo.INVALID:
        assert kind.value == two_two_oracle(*segs)
        # orientation of the input segments never matters
        flipped = [s.reversed() for s in segs]
        assert classify_two_two(*flipped) is kind


def test_family_rejects_intersecting_same_colour():
    with pytest.raises(PreconditionError):
        ColoredSegmentFamily([seg(0, 0, 2, 2), seg(0, 2, 2, 0)], [])
    ColoredSegmentFamily([seg(0, 0, 2, 2), seg(0, 2, 2, 0)], [], require_disjoint=False)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_canonical_grid_found_whole(k):
    f = canonical_grid(k)
    cert = find_k_grid(f, k)
    assert cert.red_idx == tuple(range(k)) and cert.blue_idx == tuple(range(k))
    assert is_grid_equivalent(cert, f)


def test_certificate_with_inconsistent_orders_rejected():
    f = canonical_grid(3)
    good = find_k_grid(f, 3)
    bad = GridCertificate(good.red_idx, good.blue_idx, (0, 2, 1), good.cross_order_blue)
    assert not is_grid_equivalent(bad, f)
    # tilting or reversing a red keeps the combinatorics
    red = list(f.red)
    red[1] = seg(0, 2, 4, "5/2")
    assert is_grid_equivalent(good, ColoredSegmentFamily(red, f.blue))
    red[1] = Segment(Point(mpq(4), mpq(2)), Point(mpq(0), mpq(2)))
    assert is_grid_equivalent(good, ColoredSegmentFamily(red, f.blue))
    # the pinwheel is all-crossing but not a grid, whatever orders are claimed
    pin = ColoredSegmentFamily([seg(-1, 0, 5, 0), seg("-1/2", "11/2", "7/6", "1/2")],
                               [seg(0, -1, 0, 5), seg("11/2", "-1/2", "1/2", "7/6")])
    for orders in ((0, 1), (1, 0)):
        assert not is_grid_equivalent(GridCertificate((0, 1), (0, 1), orders, orders), pin)
    assert exhaustive_grid(pin, 2) is None


def test_not_all_crossing():
    f = ColoredSegmentFamily([seg(0, 0, 1, 0)], [seg(5, -1, 5, 1)])
    with pytest.raises(NotAllCrossing):
        find_k_grid(f, 1)


def test_crossing_vector_on_grid():
    f = canonical_grid(3)
    vecs = {crossing_vector(f, i, (0, 1, 2)) for i in range(3)}
    assert len(vecs) == 1


def test_pigeonhole_four_two_always():
    rng = random.Random(40)
    for _ in range(100):
        f = random_all_crossing_small(rng, 4, 2)
        cert = find_k_grid(f, 2)
        assert cert is not None and is_grid_equivalent(cert, f)
        assert pigeonhole_grid(f, 2) is not None


def test_certificates_match_face_oracle():
    rng = random.Random(41)
    for _ in range(100):
        f = random_all_crossing_small(rng, 4, 2)
        cert = find_k_grid(f, 2)
        assert _grid_oracle(f, cert.red_idx, cert.blue_idx)
        for r1, r2 in combinations(cert.red_idx, 2):
            b1, b2 = cert.blue_idx
            assert classify_two_two(f.red[r1], f.red[r2], f.blue[b1], f.blue[b2]) is TwoTwo.TYPE_I


def test_exhaustive_agrees_with_subset_oracle():
    rng = random.Random(42)
    for _ in range(40):
        f = random_all_crossing_small(rng, 3, 2)
        found = exhaustive_grid(f, 2)
        expected = any(_grid_oracle(f, reds, (0, 1)) for reds in combinations(range(3), 2))
        assert (found is not None) == expected


@pytest.mark.parametrize("k", [1, 2])
def test_no_grid_family(k):
    f = generate_no_grid_family(k)
    assert len(f.red) == len(f.blue) == 3 * k
    assert f.is_all_crossing()
    assert exhaustive_grid(f, k + 1) is None
    cert = find_k_grid(f, k)
    assert cert is not None and is_grid_equivalent(cert, f)


def test_no_grid_family_larger_is_all_crossing():
    f = generate_no_grid_family(4)
    assert f.is_all_crossing()


def test_bad_k():
    with pytest.raises(PreconditionError):
        generate_no_grid_family(0)
    with pytest.raises(PreconditionError):
        find_k_grid(canonical_grid(2), 0)
