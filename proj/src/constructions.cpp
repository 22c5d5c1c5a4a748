#include "zc/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zc/rng.hpp"

namespace zc {

Code all_columns_code(std::uint32_t rows, std::uint32_t col_weight,
                      std::uint64_t max_columns) {
    if (rows == 0) throw std::invalid_argument("matrix needs at least one row");
    if (col_weight == 0 || col_weight > rows)
        throw std::invalid_argument("column weight out of range");
    auto cols = binomial_capped(rows, col_weight, max_columns);
    if (!cols) throw std::invalid_argument("too many columns");
    const std::uint64_t n = *cols;

    std::vector<Word> words(rows, Word(static_cast<std::uint32_t>(n)));
    std::vector<std::uint32_t> comb(col_weight);
    for (std::uint32_t i = 0; i < col_weight; ++i) comb[i] = i;
    for (std::uint64_t c = 0; c < n; ++c) {
        for (auto r : comb) words[r].set(static_cast<std::uint32_t>(c), true);
        // next k-subset of the rows, lexicographic
        std::int64_t k = col_weight - 1;
        while (k >= 0 && comb[k] == rows - col_weight + static_cast<std::uint32_t>(k)) --k;
        if (k < 0) break;
        ++comb[k];
        for (std::uint32_t j = static_cast<std::uint32_t>(k) + 1; j < col_weight; ++j)
            comb[j] = comb[j - 1] + 1;
    }
    return Code(static_cast<std::uint32_t>(n), std::move(words));
}

BalancedInfo balanced_info(const BalancedParams& p, std::uint64_t max_columns) {
    if (p.m == 0) throw std::invalid_argument("m must be positive");
    if (p.w <= 0 || p.w >= 1) throw std::invalid_argument("w must lie in (0,1)");
    BigRat rows_r = BigRat(p.m) / p.w;
    if (denominator(rows_r) != 1) throw std::invalid_argument("m/w must be an integer");
    BigInt rows_b = numerator(rows_r);
    if (rows_b > 1'000'000) throw std::invalid_argument("too many rows");
    BalancedInfo info;
    info.rows = rows_b.convert_to<std::uint32_t>();
    auto cols = binomial_capped(info.rows, p.m, max_columns);
    if (!cols) throw std::invalid_argument("too many columns");
    info.columns = *cols;
    BigRat rw = BigRat(info.columns) * p.w;
    info.row_weight = numerator(rw).convert_to<std::uint64_t>() /
                      denominator(rw).convert_to<std::uint64_t>();
    return info;
}

Code balanced_code(const BalancedParams& p, std::uint64_t max_columns) {
    BalancedInfo info = balanced_info(p, max_columns);
    return all_columns_code(info.rows, p.m, max_columns);
}

BigRat balanced_radius_formula(const BalancedParams& p, int L) {
    BalancedInfo info = balanced_info(p);
    if (L < 1) throw std::invalid_argument("list size must be positive");
    if (static_cast<std::uint32_t>(L) > info.rows)
        throw std::invalid_argument("list size exceeds code size");
    BigRat n(info.columns);
    return n * p.w - n * BigRat(binomial(p.m, L), binomial(info.rows, L));
}

Code unique_block_code(std::uint32_t m, int j, std::uint64_t max_columns) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (j <= -static_cast<int>(m) || j >= static_cast<int>(m))
        throw std::invalid_argument("|j| must be smaller than m");
    return all_columns_code(2 * m, static_cast<std::uint32_t>(static_cast<int>(m) - j),
                            max_columns);
}

BigInt block_pairwise_delta(std::uint32_t m, int j) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (j <= -static_cast<int>(m) || j >= static_cast<int>(m))
        throw std::invalid_argument("|j| must be smaller than m");
    return binomial(2 * static_cast<std::int64_t>(m) - 2,
                    static_cast<std::int64_t>(m) - j - 1);
}

BlockTau block_tau(std::uint32_t m, int j) {
    const std::int64_t mi = m, ji = j;
    BigInt n_j = binomial(2 * mi, mi - ji);
    BlockTau t;
    t.from_delta = BigRat(block_pairwise_delta(m, j) - 1, n_j);
    t.product_form =
        BigRat(BigInt(mi - ji) * (mi + ji), BigInt(2 * mi) * (2 * mi - 1)) - BigRat(1, n_j);
    t.plotkin_offset_form = BigRat(1, 4) +
                            BigRat(BigInt(2 * mi) - BigInt(4) * ji * ji,
                                   BigInt(8) * (2 * mi * mi - mi)) -
                            BigRat(1, n_j);
    return t;
}

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (b != 0 && q > cap / b) throw std::invalid_argument("equalized width exceeds guard");
    return q * b;
}

}  // namespace

StackedCode stacked_code(const StackedParams& p) {
    if (p.j_offsets.empty()) throw std::invalid_argument("need at least one block");
    if (p.m == 0) throw std::invalid_argument("m must be positive");
    std::vector<int> offsets = p.j_offsets;
    std::sort(offsets.begin(), offsets.end());
    if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end())
        throw std::invalid_argument("duplicate block offset");
    if (!p.replication.empty() && p.replication.size() != offsets.size())
        throw std::invalid_argument("replication list does not match block count");

    std::uint32_t block_rows;
    std::uint32_t base_weight;
    if (p.mode == StackedMode::unique_blocks) {
        block_rows = 2 * p.m;
        base_weight = p.m;
    } else {
        if (p.L < 2) throw std::invalid_argument("list size must be at least 2");
        block_rows = p.m;
        double wmax = std::pow(static_cast<double>(p.L), -1.0 / (p.L - 1));
        base_weight = static_cast<std::uint32_t>(std::llround(wmax * p.m));
    }

    std::vector<StackedBlock> blocks;
    for (int j : offsets) {
        std::int64_t k = static_cast<std::int64_t>(base_weight) - j;
        if (k < 1 || k >= block_rows)
            throw std::invalid_argument("block column weight out of range");
        StackedBlock b;
        b.j = j;
        b.rows = block_rows;
        b.col_weight = static_cast<std::uint32_t>(k);
        auto cols = binomial_capped(block_rows, b.col_weight, p.max_total_length);
        if (!cols) throw std::invalid_argument("block width exceeds guard");
        b.base_columns = *cols;
        blocks.push_back(b);
    }

    std::uint64_t width = 0;
    if (p.replication.empty()) {
        width = 1;
        for (const auto& b : blocks) width = checked_lcm(width, b.base_columns, p.max_total_length);
        for (auto& b : blocks) b.replication = width / b.base_columns;
    } else {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (p.replication[i] == 0) throw std::invalid_argument("replication must be positive");
            std::uint64_t w = blocks[i].base_columns * p.replication[i];
            if (i == 0) width = w;
            if (w != width)
                throw std::invalid_argument("blocks must replicate to a common width");
            blocks[i].replication = p.replication[i];
        }
    }
    if (width > p.max_total_length) throw std::invalid_argument("total length exceeds guard");

    Rng root(p.seed);
    std::vector<Word> rows;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto& blk = blocks[b];
        Code base = all_columns_code(blk.rows, blk.col_weight);
        // independent stream per block, derived from the top-level seed and
        // the block position
        Rng rng = root.derive(static_cast<std::uint64_t>(b));
        std::vector<std::uint32_t> perm(width);
        for (std::uint64_t c = 0; c < width; ++c)
            perm[c] = static_cast<std::uint32_t>(c % blk.base_columns);
        rng.shuffle(perm);
        for (std::uint32_t r = 0; r < blk.rows; ++r) {
            Word w(static_cast<std::uint32_t>(width));
            for (std::uint64_t c = 0; c < width; ++c)
                if (base[r].get(perm[c])) w.set(static_cast<std::uint32_t>(c), true);
            rows.push_back(std::move(w));
        }
        blk.row_weight = static_cast<std::uint64_t>(rows.back().weight());
    }

    StackedCode sc;
    sc.blocks = std::move(blocks);
    sc.total_length = width;
    sc.seed = p.seed;
    sc.code = Code(static_cast<std::uint32_t>(width), std::move(rows));
    return sc;
}

Code StackedCode::block_rows(std::size_t b) const {
    const auto& blk = blocks.at(b);
    std::vector<Word> rows;
    for (const auto& w : code)
        if (w.weight() == blk.row_weight) rows.push_back(w);
    if (rows.size() != blk.rows) throw std::logic_error("block rows not recoverable by weight");
    return Code(code.length(), std::move(rows));
}

double overlap_tail_bound(const std::vector<double>& weights, double gamma,
                          std::uint64_t N) {
    if (weights.empty()) throw std::invalid_argument("need at least one weight");
    for (double w : weights)
        if (w < 0 || w > 1) throw std::invalid_argument("weights must lie in [0,1]");
    if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
    const double L = static_cast<double>(weights.size());
    return (L + 1) * std::exp(-static_cast<double>(N) * gamma * gamma *
                              std::exp2(-(2.0 * L - 1.0)));
}

UniqueProfile unique_construction_profile(double eps) {
    if (eps <= 0 || eps > 3.0 / 32.0)
        throw std::invalid_argument("eps must lie in (0, 3/32]");
    UniqueProfile u;
    u.eps = eps;
    u.m = static_cast<std::uint32_t>(std::floor(3.0 / (32.0 * eps)));
    if (u.m == 0) u.m = 1;
    u.j_span = static_cast<int>(std::floor(std::pow(2.0, -1.5) * std::sqrt(u.m)));
    u.rows = 2ull * u.m * (2ull * static_cast<std::uint64_t>(u.j_span) + 1ull);
    return u;
}

}  // namespace zc
