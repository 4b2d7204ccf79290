#pragma once

#include <span>
#include <string>
#include <vector>

#include "regmat/bitcore.hpp"

namespace regmat {

// Row-tuple image of an n x n binary matrix: entry i is row i read as a
// binary number, top row first.
struct RowTuple {
    int n = 0;
    std::vector<BitMask> rows;

    friend bool operator==(const RowTuple&, const RowTuple&) = default;
};

// Rows of the transpose, i.e. the columns left to right. Column value y_m
// packs row i at bit n-i, so the top row sits at the most significant bit.
RowTuple transpose(const RowTuple& t);

// Every row and every column has exactly k ones.
bool is_member(const RowTuple& t, int k);

// Rows nondecreasing, columns nondecreasing, all column popcounts equal k.
// Row popcounts are the caller's business: rows are drawn from a MaskPool.
bool is_canonical(const RowTuple& t, int k);
bool is_canonical(std::span<const BitMask> rows, int n, int k);

// n lines of n characters, '0'/'1', one row per line.
std::string render(const RowTuple& t);

}  // namespace regmat
