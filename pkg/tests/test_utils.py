"""Tests for the bitset helpers."""

from cospec.utils import (
    bit,
    bits_list,
    full_mask,
    iter_bits,
    lowest_bit,
    mask_of,
    members,
    popcount,
)


class TestBits:
    """Test single-mask helpers."""

    def test_bit(self):
        """Test single-vertex masks."""
        assert bit(0) == 1
        assert bit(5) == 32

    def test_popcount(self):
        """Test counting members."""
        assert popcount(0) == 0
        assert popcount(0b10110) == 3
        assert popcount(full_mask(70)) == 70

    def test_iteration(self):
        """Test ascending iteration."""
        assert list(iter_bits(0b10110)) == [1, 2, 4]
        assert bits_list(0) == []
        assert bits_list(bit(64) | bit(3)) == [3, 64]

    def test_lowest_bit(self):
        """Test the smallest member."""
        assert lowest_bit(0b10100) == 2
        assert lowest_bit(bit(40)) == 40


class TestSets:
    """Test conversion between masks and vertex sets."""

    def test_mask_of(self):
        """Test building masks from vertices."""
        assert mask_of([]) == 0
        assert mask_of([0, 2, 2]) == 0b101

    def test_full_mask(self):
        """Test the all-vertices mask."""
        assert full_mask(0) == 0
        assert full_mask(4) == 0b1111

    def test_members(self):
        """Test the frozenset view agrees with the mask."""
        vertices = {1, 7, 9}
        assert members(mask_of(vertices)) == frozenset(vertices)
        assert isinstance(members(0), frozenset)
