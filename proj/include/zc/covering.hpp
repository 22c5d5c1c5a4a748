#pragma once

#include <cstdint>
#include <optional>

#include "zc/code.hpp"
#include "zc/exact.hpp"

namespace zc {

// Joint single-letter type for covering designs: targets of weight nw are to
// be covered by centers of weight nv, where a center covers a target when
// their supports overlap in exactly na positions. All four cell counts
// (n - nw - nv + na, nw - na, nv - na, na) must be nonnegative integers.
struct CoveringParams {
    std::uint32_t n = 0;
    BigRat w, v, a;
    std::uint32_t nw = 0, nv = 0, na = 0;

    double info_bits() const;  // mutual information of the (target, center) pair
};

CoveringParams covering_params(std::uint32_t n, const BigRat& w, const BigRat& v,
                               const BigRat& a);

// ceil(2^(n (I + eps))) random distinct centers of weight nv.
Code sample_covering(const CoveringParams& p, double eps, std::uint64_t seed,
                     std::uint64_t max_centers = 10'000'000);

std::uint64_t covering_size(const CoveringParams& p, double eps);

struct CoveringReport {
    std::uint64_t targets = 0;
    std::uint64_t uncovered = 0;
    std::optional<Word> first_uncovered;  // smallest uncovered target
    bool covered() const { return uncovered == 0; }
};

// Exhaustive check over all weight-nw targets (n <= 24, OpenMP).
CoveringReport verify_covering(const Code& centers, const CoveringParams& p);
CoveringReport verify_covering_serial(const Code& centers, const CoveringParams& p);

// Number of weight-nw targets covered by one fixed center:
// C(nv, na) C(n - nv, nw - na).
BigInt single_center_coverage(const CoveringParams& p);

// ceil(C(n, nw) / single_center_coverage): no covering can be smaller.
BigInt covering_converse_lower(const CoveringParams& p);

}  // namespace zc
