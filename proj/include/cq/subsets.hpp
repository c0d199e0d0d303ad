#pragma once

#include <cstdint>
#include <vector>

namespace cq {

// Exact binomial coefficients for n <= 64 (C(64,32) still fits in 64 bits).
std::uint64_t binomial(unsigned n, unsigned k);

// k-subsets of {0,...,63} as bit masks, ordered colexicographically
// (equivalently: by increasing numeric value of the mask).  Rank is the
// combinatorial number system: rank(m) = sum_i C(pos_i, i+1) over the set
// bit positions pos_0 < pos_1 < ... of m.
std::uint64_t colex_rank(std::uint64_t mask);
std::uint64_t colex_unrank(std::uint64_t rank, unsigned k);

// Next mask with the same popcount (Gosper); the colex successor.
inline std::uint64_t next_same_popcount(std::uint64_t m) {
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    return r | ((((m ^ r) >> 2) / c));
}

struct RankRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;  // half-open
};

// Split [0, total) into at most 'parts' contiguous near-equal ranges.
std::vector<RankRange> partition_ranks(std::uint64_t total, unsigned parts);

}  // namespace cq
