#include "regmat/bitcore.hpp"

#include <stdexcept>

namespace regmat {

int bit_value(BitMask x, int i) {
    if (i < 0 || i >= kMaxWidth)
        throw std::invalid_argument("bit_value: bit index " + std::to_string(i) +
                                    " outside [0, " + std::to_string(kMaxWidth) + ")");
    return static_cast<int>((x >> i) & BitMask(1));
}

std::string to_binary_string(BitMask x, int width) {
    if (width < 1 || width > kMaxWidth)
        throw std::invalid_argument("to_binary_string: width " + std::to_string(width) +
                                    " outside [1, " + std::to_string(kMaxWidth) + "]");
    if (x >= (BitMask(1) << width))
        throw std::invalid_argument("to_binary_string: value does not fit in width " +
                                    std::to_string(width));
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if ((x >> i) & BitMask(1)) s[static_cast<std::size_t>(width - 1 - i)] = '1';
    return s;
}

namespace {

// Masks with the top bit clear come first (they are all smaller); the
// second batch gets bit n-1 set after its recursive call, which keeps the
// whole list ascending without a merge step.
void fill_pool(int n, int k, std::vector<BitMask>& out) {
    if (k == 0) {
        out.push_back(0);
        return;
    }
    if (k == n) {
        out.push_back((BitMask(1) << n) - 1);
        return;
    }
    fill_pool(n - 1, k, out);
    const std::size_t second = out.size();
    fill_pool(n - 1, k - 1, out);
    const BitMask top = BitMask(1) << (n - 1);
    for (std::size_t i = second; i < out.size(); ++i) out[i] |= top;
}

}  // namespace

MaskPool k_subset_masks(int n, int k) {
    if (n < 0 || n > kMaxWidth)
        throw std::invalid_argument("k_subset_masks: n=" + std::to_string(n) +
                                    " outside [0, " + std::to_string(kMaxWidth) + "]");
    if (k < 0 || k > n)
        throw std::invalid_argument("k_subset_masks: k=" + std::to_string(k) +
                                    " outside [0, n]");
    MaskPool pool{n, k, {}};
    fill_pool(n, k, pool.masks);
    return pool;
}

}  // namespace regmat
