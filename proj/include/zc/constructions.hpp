#pragma once

#include <cstdint>
#include <vector>

#include "zc/code.hpp"
#include "zc/exact.hpp"

namespace zc {

// Code whose codewords are the R rows of the R x C(R,k) matrix holding every
// weight-k column exactly once. Shared skeleton of the constructions below.
Code all_columns_code(std::uint32_t rows, std::uint32_t col_weight,
                      std::uint64_t max_columns = 10'000'000);

struct BalancedParams {
    std::uint32_t m = 1;
    BigRat w = BigRat(1, 2);  // in (0,1), with m/w an integer
};

struct BalancedInfo {
    std::uint32_t rows = 0;       // m/w
    std::uint64_t columns = 0;    // C(m/w, m)
    std::uint64_t row_weight = 0; // columns * w
};

BalancedInfo balanced_info(const BalancedParams& p, std::uint64_t max_columns = 10'000'000);

// Rows of the matrix with all weight-m columns of height m/w; every row has
// relative weight w.
Code balanced_code(const BalancedParams& p, std::uint64_t max_columns = 10'000'000);

// Exact minimum L-subset radius of the balanced code:
//   n*w - n*C(m,L)/C(m/w,L)
// which is an integer for every valid parameter set.
BigRat balanced_radius_formula(const BalancedParams& p, int L);

// Rows of the 2m x C(2m, m-j) matrix with all weight-(m-j) columns; any two
// rows disagree in exactly C(2m-2, m-j-1) positions in each direction.
Code unique_block_code(std::uint32_t m, int j, std::uint64_t max_columns = 10'000'000);

BigInt block_pairwise_delta(std::uint32_t m, int j);

// Fraction of erased ones the block code corrects, in three algebraically
// equal printed forms (all exact rationals):
//   (C(2m-2,m-j-1) - 1) / C(2m,m-j)
//   (m-j)(m+j)/(2m(2m-1)) - 1/C(2m,m-j)
//   1/4 + (m/2 - j^2)/(4m^2-2m) - 1/C(2m,m-j)
struct BlockTau {
    BigRat from_delta;
    BigRat product_form;
    BigRat plotkin_offset_form;
};
BlockTau block_tau(std::uint32_t m, int j);

enum class StackedMode { unique_blocks, list_blocks };

struct StackedParams {
    std::uint32_t m = 2;
    StackedMode mode = StackedMode::unique_blocks;
    int L = 2;  // list_blocks only: base column weight is round(m * L^{-1/(L-1)})
    std::vector<int> j_offsets = {0};
    // z_j per block; empty means the smallest equalizing counts
    // (lcm of the block widths divided by each width).
    std::vector<std::uint64_t> replication;
    std::uint64_t seed = 0;
    std::uint64_t max_total_length = 1'000'000;
};

struct StackedBlock {
    int j = 0;
    std::uint32_t rows = 0;
    std::uint32_t col_weight = 0;
    std::uint64_t base_columns = 0;
    std::uint64_t replication = 0;
    std::uint64_t row_weight = 0;
};

// Replicated blocks, each with its columns shuffled by an independent stream
// derived from the top-level seed and the block index, stacked one below the
// other. All blocks end up with the same width z_j * n_j.
struct StackedCode {
    Code code;
    std::vector<StackedBlock> blocks;
    std::uint64_t total_length = 0;
    std::uint64_t seed = 0;

    // The rows contributed by block b (distinguished by their weight).
    Code block_rows(std::size_t b) const;
};

StackedCode stacked_code(const StackedParams& p);

// Analytic tail bound: for L independent uniformly permuted words of relative
// weights w_1..w_L and length N, the fraction of coordinates covered by all
// of them exceeds prod(w_i) + gamma with probability at most
// (L+1) * exp(-N * gamma^2 / 2^(2L-1)). Can exceed 1 for small N.
double overlap_tail_bound(const std::vector<double>& weights, double gamma,
                          std::uint64_t N);

// Parameter schedule mapping a radius excess eps over 1/4 to the stacked
// construction that attains it asymptotically: m = floor(3/(32 eps)), block
// offsets |j| <= floor(2^(-3/2) * sqrt(m)), giving 2m(2*floor(..)+1) rows.
struct UniqueProfile {
    double eps = 0;
    std::uint32_t m = 0;
    int j_span = 0;
    std::uint64_t rows = 0;
};
UniqueProfile unique_construction_profile(double eps);

}  // namespace zc
