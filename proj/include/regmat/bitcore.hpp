#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

// Bit conventions used throughout the library:
//   - a matrix row is an unsigned integer of n significant bits
//   - bits are numbered right to left, the rightmost bit is bit 0
//   - matrix column m (1-based, left to right) lives at bit index n-m
namespace regmat {

using BitMask = std::uint64_t;

// Masks and packed column values must fit one unsigned word with headroom.
inline constexpr int kMaxWidth = 62;

inline int popcount(BitMask x) noexcept { return std::popcount(x); }

// Bit i of x; i must lie in [0, kMaxWidth).
int bit_value(BitMask x, int i);

// Fixed-width binary rendering, most significant bit first, zero padded.
std::string to_binary_string(BitMask x, int width);

// All n-bit masks with exactly k set bits, ascending, no duplicates.
// Holds C(n,k) masks.
struct MaskPool {
    int n = 0;
    int k = 0;
    std::vector<BitMask> masks;

    std::size_t size() const noexcept { return masks.size(); }
};

// Builds the pool recursively by splitting on the top bit: masks with
// bit n-1 clear come from (n-1, k), masks with it set from (n-1, k-1).
MaskPool k_subset_masks(int n, int k);

}  // namespace regmat
