#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "atomlat/context.hpp"

namespace atomlat::testing {

inline constexpr int kInstances = 1000;

// Fixed seeds keep failures reproducible; the seed is mixed with a
// per-property tag so suites do not share streams.
inline std::mt19937_64 rng(std::uint64_t tag) { return std::mt19937_64(0x5eed0000ULL ^ tag); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline Word random_word(std::mt19937_64& g, int bits) { return g() & full_mask(bits); }

/// Random rows x cols context, each cell incident with probability `density`.
inline FormalContext random_context(std::mt19937_64& g, int rows, int cols, double density = 0.5) {
    std::bernoulli_distribution cell(density);
    std::vector<BitVec> columns;
    for (int c = 0; c < cols; ++c) {
        BitVec col(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) col.assign(static_cast<std::size_t>(r), cell(g));
        columns.push_back(std::move(col));
    }
    return FormalContext(static_cast<std::size_t>(rows), std::move(columns));
}

inline BitVec bits_of(std::size_t size, Word w) { return BitVec::from_word(size, w); }

/// Strictly increasing random column tuple over [n] with values in [1, 2^n - 2].
inline std::vector<Word> random_tuple(std::mt19937_64& g, int n, int max_len) {
    std::vector<Word> cols;
    if (n < 2) return cols;
    const Word hi = full_mask(n) - 1;
    const int len = uniform(g, 0, max_len);
    for (int i = 0; i < len; ++i) cols.push_back(1 + g() % hi);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

}  // namespace atomlat::testing
