#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zc/code.hpp"
#include "zc/exact.hpp"
#include "zc/word.hpp"

namespace zc {

// Chebyshev center of a list under the asymmetric distance: the bitwise AND.
// Every list member contains the center, so its distance to the center is
// its weight minus the center weight.
Word chebyshev_center(std::span<const Word> list);
std::uint32_t chebyshev_radius(std::span<const Word> list);

// Reference implementation: scan every center candidate in {0,1}^n whose
// support lies inside every list member (the only centers a one-sided channel
// can produce from all of them) and minimize the worst distance. Dropping the
// containment constraint would give a genuinely smaller minimax value for
// some lists (e.g. {1100, 0011}), but such centers certify nothing about
// one-sided confusability. Exponential; n <= 20.
std::uint32_t chebyshev_radius_exhaustive(std::span<const Word> list);

struct RadiusCertificate {
    std::uint32_t radius = 0;
    std::vector<std::uint32_t> witness_indices;  // ascending
    std::vector<Word> witness;
    Word center;
};

// Exact minimum Chebyshev radius over all L-subsets of the code. Subsets are
// scanned in colexicographic order with an early exit when a partial AND
// already forces the radius above the best value seen; ties are broken toward
// the colexicographically smallest witness, so the certificate does not
// depend on how the scan was partitioned across threads.
RadiusCertificate list_decoding_radius(const Code& code, int L);

// Plain full enumeration without pruning or incremental state; kept as the
// reference the parallel scan is tested (and benchmarked) against.
RadiusCertificate list_decoding_radius_serial(const Code& code, int L);

// Largest number of codewords captured by a single asymmetric ball of radius
// t, scanning all 2^n centers; the returned center is the smallest one
// achieving the maximum. n <= 24.
struct BallOccupancy {
    std::uint32_t count = 0;
    Word center;
};
BallOccupancy max_zball_occupancy(const Code& code, std::uint32_t t);
BallOccupancy max_zball_occupancy_serial(const Code& code, std::uint32_t t);

// A code is (L-1)-list-decodable at fraction tau when no ball of radius
// ceil(tau*n) holds L codewords, which happens exactly when the minimum
// L-subset radius exceeds ceil(tau*n).
bool is_list_decodable(const Code& code, int L, const BigRat& tau);
// Independent oracle for the same question via the full center scan; n <= 24.
bool is_list_decodable_exhaustive(const Code& code, int L, const BigRat& tau);

// All pairwise asymmetric distances exceed t (unique decoding under at most
// t erased ones).
bool unique_decoding_check(const Code& code, std::uint32_t t);

// For constant-weight codes only: the minimum L-subset radius equals the
// common weight minus the largest number of coordinates shared by L
// codewords, and that maximum can be counted by streaming over coordinates
// instead of subsets. Returns nullopt when sum_i C(col_weight_i, L) exceeds
// work_cap. Rows are indexed as in code order; L <= 4 keys packed in 64 bits.
std::optional<std::uint32_t> list_radius_constant_weight_by_columns(
    const Code& code, int L, std::uint64_t work_cap = 200'000'000ull);

}  // namespace zc
