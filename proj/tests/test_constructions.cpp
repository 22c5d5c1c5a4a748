#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "zc/code.hpp"
#include "zc/constructions.hpp"
#include "zc/exact.hpp"
#include "zc/radius.hpp"
#include "zc/rng.hpp"
#include "zc/word.hpp"

using namespace zc;

namespace {

Word w(const char* bits) { return Word::from_string(bits); }

// Sorted multiset of all within-code one-directional discrepancies.
std::multiset<std::uint32_t> delta_multiset(const Code& c) {
    std::multiset<std::uint32_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = 0; k < c.size(); ++k)
            if (i != k) out.insert(asym_delta(c[i], c[k]));
    return out;
}

}  // namespace

TEST_CASE("all-columns matrix: every column pattern appears exactly once") {
    Code c = all_columns_code(4, 2);
    REQUIRE(c.size() == 4);
    REQUIRE(c.length() == 6);
    // collect the 6 column vectors and check they are the 6 distinct
    // weight-2 patterns over 4 rows
    std::set<std::vector<bool>> cols;
    for (std::uint32_t pos = 0; pos < c.length(); ++pos) {
        std::vector<bool> col;
        int weight = 0;
        for (const auto& row : c) {
            col.push_back(row.get(pos));
            weight += row.get(pos);
        }
        CHECK(weight == 2);
        cols.insert(col);
    }
    CHECK(cols.size() == 6);

    CHECK_THROWS_AS(all_columns_code(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(all_columns_code(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(all_columns_code(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(all_columns_code(40, 20, 1000), std::invalid_argument);
}

TEST_CASE("balanced code small shapes") {
    BalancedParams p{2, BigRat(1, 2)};
    BalancedInfo info = balanced_info(p);
    CHECK(info.rows == 4);
    CHECK(info.columns == 6);
    CHECK(info.row_weight == 3);

    Code c = balanced_code(p);
    REQUIRE(c.size() == 4);
    REQUIRE(c.length() == 6);
    for (const auto& word : c) CHECK(word.weight() == 3);

    // height-2 all-ones matrix: the identity-like pair of weight-1 words
    BalancedParams tiny{1, BigRat(1, 2)};
    Code id = balanced_code(tiny);
    REQUIRE(id.size() == 2);
    CHECK(id[0] == w("01"));
    CHECK(id[1] == w("10"));
}

TEST_CASE("balanced parameter validation") {
    CHECK_THROWS_AS(balanced_info({0, BigRat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(balanced_info({2, BigRat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(balanced_info({2, BigRat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(balanced_info({2, BigRat(3, 2)}), std::invalid_argument);
    // m/w = 14/3 is not an integer
    CHECK_THROWS_AS(balanced_info({2, BigRat(3, 7)}), std::invalid_argument);
    // but m/w = 5 is fine even though w itself is not 1/k
    CHECK(balanced_info({2, BigRat(2, 5)}).rows == 5);
    CHECK_THROWS_AS(balanced_code({3, BigRat(1, 10)}, 500), std::invalid_argument);
}

TEST_CASE("balanced radius formula matches the exhaustive subset scan") {
    for (std::uint32_t m = 1; m <= 4; ++m) {
        for (std::uint32_t M = m + 1; M <= 14; ++M) {
            auto cols = binomial_capped(M, m, 300);
            if (!cols) continue;
            BalancedParams p{m, BigRat(m, M)};
            Code c = balanced_code(p);
            for (std::uint32_t L = 2; L <= std::min<std::uint32_t>(4, M); ++L) {
                BigRat formula = balanced_radius_formula(p, L);
                REQUIRE(denominator(formula) == 1);
                auto cert = list_decoding_radius(c, L);
                CHECK(BigRat(cert.radius) == formula);
            }
        }
    }
}

TEST_CASE("balanced radius formula edge lists") {
    BalancedParams p{2, BigRat(1, 2)};
    // a single word is recovered exactly: zero erased ones tolerated beyond it
    CHECK(balanced_radius_formula(p, 1) == BigRat(0));
    // lists larger than m share no common column, so the radius is the full
    // row weight
    CHECK(balanced_radius_formula(p, 3) == BigRat(3));
    CHECK(balanced_radius_formula(p, 4) == BigRat(3));
    CHECK_THROWS_AS(balanced_radius_formula(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(balanced_radius_formula(p, 5), std::invalid_argument);
}

TEST_CASE("unique block: equidistant rows") {
    Code c = unique_block_code(3, 0);
    REQUIRE(c.size() == 6);
    REQUIRE(c.length() == 20);
    BigInt delta = block_pairwise_delta(3, 0);
    CHECK(delta == 6);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (i == k) continue;
            CHECK(asym_delta(c[i], c[k]) == 6);
            CHECK(asym_delta(c[k], c[i]) == 6);
        }

    // off-center block: weight-1 columns give the 4x4 identity
    Code thin = unique_block_code(2, 1);
    REQUIRE(thin.size() == 4);
    REQUIRE(thin.length() == 4);
    for (const auto& word : thin) CHECK(word.weight() == 1);
    CHECK(block_pairwise_delta(2, 1) == 1);

    // negative offset raises the column weight instead
    Code fat = unique_block_code(2, -1);
    REQUIRE(fat.size() == 4);
    REQUIRE(fat.length() == 4);
    for (const auto& word : fat) CHECK(word.weight() == 3);
    CHECK(block_pairwise_delta(2, -1) == 1);

    CHECK_THROWS_AS(unique_block_code(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(unique_block_code(2, -2), std::invalid_argument);
    CHECK_THROWS_AS(unique_block_code(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(block_pairwise_delta(3, 3), std::invalid_argument);
}

TEST_CASE("block tau: the three printed forms agree exactly") {
    for (std::uint32_t m = 1; m <= 6; ++m)
        for (int j = -static_cast<int>(m) + 1; j < static_cast<int>(m); ++j) {
            BlockTau t = block_tau(m, j);
            CHECK(t.from_delta == t.product_form);
            CHECK(t.from_delta == t.plotkin_offset_form);

            // and from_delta really is (delta - 1) / n
            Code c = unique_block_code(m, j);
            BigRat direct(block_pairwise_delta(m, j) - 1, BigInt(c.length()));
            CHECK(t.from_delta == direct);
        }
    // centered block of height six: exactly one quarter
    CHECK(block_tau(3, 0).from_delta == BigRat(1, 4));
}

TEST_CASE("stacked single block is a replicated shuffle") {
    StackedParams p;
    p.m = 2;
    p.j_offsets = {0};
    p.replication = {3};
    p.seed = 7;
    StackedCode sc = stacked_code(p);

    REQUIRE(sc.blocks.size() == 1);
    CHECK(sc.blocks[0].base_columns == 6);
    CHECK(sc.blocks[0].replication == 3);
    CHECK(sc.total_length == 18);
    CHECK(sc.code.length() == 18);
    REQUIRE(sc.code.size() == 4);
    // row weight scales with the replication count
    CHECK(sc.blocks[0].row_weight == 9);
    for (const auto& word : sc.code) CHECK(word.weight() == 9);

    // pairwise discrepancies scale the same way
    Code base = unique_block_code(2, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k)
            if (i != k) CHECK(asym_delta(sc.code[i], sc.code[k]) == 3 * 2);

    // ... and so does the exact list radius
    auto base_cert = list_decoding_radius(base, 2);
    auto cert = list_decoding_radius(sc.block_rows(0), 2);
    CHECK(cert.radius == 3 * base_cert.radius);

    // the single block accounts for the whole code
    Code rows = sc.block_rows(0);
    CHECK(rows.size() == sc.code.size());
}

TEST_CASE("stacked construction is reproducible and permutation-invariant") {
    StackedParams p;
    p.m = 3;
    p.j_offsets = {0, 1};
    p.seed = 42;
    StackedCode a = stacked_code(p);
    StackedCode b = stacked_code(p);
    CHECK(code_to_json(a.code, {}) == code_to_json(b.code, {}));

    p.seed = 43;
    StackedCode c = stacked_code(p);
    CHECK(code_to_json(a.code, {}) != code_to_json(c.code, {}));

    // different column shuffles never change within-block geometry
    for (std::size_t blk = 0; blk < a.blocks.size(); ++blk) {
        Code ra = a.block_rows(blk);
        Code rc = c.block_rows(blk);
        CHECK(delta_multiset(ra) == delta_multiset(rc));
        auto certa = list_decoding_radius(ra, 2);
        auto certc = list_decoding_radius(rc, 2);
        CHECK(certa.radius == certc.radius);
    }
}

TEST_CASE("stacked equalization picks the smallest common width") {
    StackedParams p;
    p.m = 3;
    p.j_offsets = {0, 1};
    p.seed = 1;
    StackedCode sc = stacked_code(p);
    REQUIRE(sc.blocks.size() == 2);
    CHECK(sc.blocks[0].base_columns == 20);
    CHECK(sc.blocks[1].base_columns == 15);
    CHECK(sc.blocks[0].replication == 3);
    CHECK(sc.blocks[1].replication == 4);
    CHECK(sc.total_length == 60);
    CHECK(sc.code.size() == 12);
    CHECK(sc.blocks[0].row_weight == 30);
    CHECK(sc.blocks[1].row_weight == 20);
    CHECK(sc.block_rows(0).size() == 6);
    CHECK(sc.block_rows(1).size() == 6);
}

TEST_CASE("stacked cross-block distances concentrate around the product overlap") {
    // two independently shuffled blocks of relative weights 1/2 and 1/3 on 60
    // columns: the overlap of a heavy and a light row is hypergeometric with
    // mean 10, so their one-sided distance averages 30 - 10 = 20
    const int kSeeds = 60;
    double sum_mean = 0, sum_min = 0;
    for (int s = 0; s < kSeeds; ++s) {
        StackedParams p;
        p.m = 3;
        p.j_offsets = {0, 1};
        p.seed = 1000 + static_cast<std::uint64_t>(s);
        StackedCode sc = stacked_code(p);
        Code heavy = sc.block_rows(0);
        Code light = sc.block_rows(1);
        double total = 0;
        std::uint32_t lo = 60;
        for (const auto& x : heavy)
            for (const auto& y : light) {
                std::uint32_t d = z_distance(x, y);
                total += d;
                lo = std::min(lo, d);
            }
        sum_mean += total / (heavy.size() * light.size());
        sum_min += lo;
    }
    double avg_mean = sum_mean / kSeeds;
    double avg_min = sum_min / kSeeds;
    CHECK(avg_mean > 19.0);
    CHECK(avg_mean < 21.0);
    // the minimum over the 36 pairs sits a couple of deviations below
    CHECK(avg_min > 12.0);
    CHECK(avg_min <= avg_mean);
}

TEST_CASE("stacked list mode uses the fractional-weight columns") {
    StackedParams p;
    p.m = 6;
    p.mode = StackedMode::list_blocks;
    p.L = 2;
    p.j_offsets = {0};
    p.seed = 5;
    StackedCode sc = stacked_code(p);
    REQUIRE(sc.blocks.size() == 1);
    // column weight round(6 * 2^-1) = 3 on 6 rows
    CHECK(sc.blocks[0].rows == 6);
    CHECK(sc.blocks[0].col_weight == 3);
    CHECK(sc.blocks[0].base_columns == 20);
    CHECK(sc.code.size() == 6);

    StackedParams bad = p;
    bad.L = 1;
    CHECK_THROWS_AS(stacked_code(bad), std::invalid_argument);
}

TEST_CASE("stacked parameter validation") {
    StackedParams p;
    p.m = 3;

    StackedParams empty = p;
    empty.j_offsets = {};
    CHECK_THROWS_AS(stacked_code(empty), std::invalid_argument);

    StackedParams dup = p;
    dup.j_offsets = {0, 0};
    CHECK_THROWS_AS(stacked_code(dup), std::invalid_argument);

    StackedParams off = p;
    off.j_offsets = {3};
    CHECK_THROWS_AS(stacked_code(off), std::invalid_argument);

    StackedParams mismatch = p;
    mismatch.j_offsets = {0, 1};
    mismatch.replication = {1};
    CHECK_THROWS_AS(stacked_code(mismatch), std::invalid_argument);

    StackedParams zero = p;
    zero.j_offsets = {0};
    zero.replication = {0};
    CHECK_THROWS_AS(stacked_code(zero), std::invalid_argument);

    StackedParams uneven = p;
    uneven.j_offsets = {0, 1};
    uneven.replication = {1, 1};  // widths 20 and 15 stay different
    CHECK_THROWS_AS(stacked_code(uneven), std::invalid_argument);

    StackedParams huge = p;
    huge.j_offsets = {0};
    huge.max_total_length = 10;
    CHECK_THROWS_AS(stacked_code(huge), std::invalid_argument);
}

TEST_CASE("overlap tail bound value and shape") {
    double b = overlap_tail_bound({0.5, 0.5}, 0.1, 1000);
    CHECK(b == doctest::Approx(3.0 * std::exp(-1.25)).epsilon(1e-12));

    // monotone in the length and the slack
    CHECK(overlap_tail_bound({0.5, 0.5}, 0.1, 2000) < b);
    CHECK(overlap_tail_bound({0.5, 0.5}, 0.2, 1000) < b);
    // trivial (above one) for short words: still a valid bound
    CHECK(overlap_tail_bound({0.5, 0.5}, 0.1, 4) > 1.0);

    CHECK_THROWS_AS(overlap_tail_bound({}, 0.1, 100), std::invalid_argument);
    CHECK_THROWS_AS(overlap_tail_bound({0.5}, 0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(overlap_tail_bound({1.5}, 0.1, 100), std::invalid_argument);
    CHECK_THROWS_AS(overlap_tail_bound({-0.1}, 0.1, 100), std::invalid_argument);
}

TEST_CASE("overlap tail bound dominates sampled overlaps") {
    // empirical tail of the all-words overlap for two random weight-N/2 words
    const std::uint32_t N = 1000;
    const int kTrials = 4000;
    const double gamma = 0.05;
    Rng rng(99);
    int exceed = 0;
    for (int t = 0; t < kTrials; ++t) {
        Word a = random_word_of_weight(N, N / 2, rng);
        Word b = random_word_of_weight(N, N / 2, rng);
        double frac = static_cast<double>((a & b).weight()) / N;
        if (frac >= 0.25 + gamma) ++exceed;
    }
    double empirical = static_cast<double>(exceed) / kTrials;
    CHECK(empirical <= overlap_tail_bound({0.5, 0.5}, gamma, N));
}

TEST_CASE("radius-excess schedule") {
    UniqueProfile u = unique_construction_profile(0.04);
    CHECK(u.m == 2);
    CHECK(u.j_span == 0);
    CHECK(u.rows == 4);

    CHECK(unique_construction_profile(0.02).rows == 8);

    u = unique_construction_profile(0.01);
    CHECK(u.m == 9);
    CHECK(u.j_span == 1);
    CHECK(u.rows == 54);

    u = unique_construction_profile(0.005);
    CHECK(u.m == 18);
    CHECK(u.j_span == 1);
    CHECK(u.rows == 108);

    // the schedule stays buildable: every offset is a legal block
    for (double eps : {0.04, 0.02, 0.01, 0.005}) {
        UniqueProfile prof = unique_construction_profile(eps);
        CHECK(prof.j_span < static_cast<int>(prof.m));
        CHECK(prof.rows == 2ull * prof.m * (2ull * prof.j_span + 1));
    }

    CHECK_THROWS_AS(unique_construction_profile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(unique_construction_profile(-0.3), std::invalid_argument);
    CHECK_THROWS_AS(unique_construction_profile(0.2), std::invalid_argument);
}
