import numpy as np
import pytest
from hypothesis import given

from seasmooth.series import Series, as_series, reverse

from conftest import finite_arrays


def test_reverse_examples():
    assert reverse([1, 2, 3]).values.tolist() == [3, 2, 1]
    assert reverse([5]).values.tolist() == [5]


@given(finite_arrays())
def test_reverse_is_involution(v):
    np.testing.assert_array_equal(reverse(reverse(v)).values, v)


@pytest.mark.parametrize("bad", [[], [1.0, np.nan], [np.inf], [[1, 2], [3, 4]]])
def test_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Series(bad)


def test_negative_offset_rejected():
    with pytest.raises(ValueError):
        Series([1.0], offset=-1)


def test_values_are_read_only_copy():
    src = np.array([1.0, 2.0])
    s = Series(src)
    src[0] = 99
    assert s[0] == 1.0
    with pytest.raises(ValueError):
        s.values[0] = 3


def test_indices_and_array_protocol():
    s = Series([4.0, 5.0, 6.0], offset=2)
    assert s.indices().tolist() == [2, 3, 4]
    assert np.asarray(s).tolist() == [4.0, 5.0, 6.0]
    assert len(s) == 3 and list(s) == [4.0, 5.0, 6.0]
    assert as_series(s) is s
