#include "zc/covering.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zc/capacity.hpp"
#include "zc/rng.hpp"

namespace zc {

namespace {

std::uint32_t integral_part(const BigRat& frac, std::uint32_t n, const char* name) {
    BigRat scaled = frac * n;
    if (boost::multiprecision::denominator(scaled) != 1) {
        throw std::invalid_argument(std::string("n * ") + name + " must be an integer");
    }
    BigInt num = boost::multiprecision::numerator(scaled);
    if (num < 0 || num > n) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
    return static_cast<std::uint32_t>(num);
}

std::vector<Word> all_of_weight(std::uint32_t n, std::uint32_t k) {
    std::vector<Word> out;
    std::vector<std::uint32_t> pos(k);
    for (std::uint32_t i = 0; i < k; ++i) pos[i] = i;
    while (true) {
        out.push_back(Word::from_support(n, pos));
        if (k == 0) break;
        int i = int(k) - 1;
        while (i >= 0 && pos[i] == n - k + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (std::uint32_t j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
    return out;
}

bool covers(const Word& target, const Code& centers, std::uint32_t na) {
    for (std::size_t c = 0; c < centers.size(); ++c) {
        if ((target & centers[c]).weight() == na) return true;
    }
    return false;
}

}  // namespace

double CoveringParams::info_bits() const {
    return mutual_info(to_double(w), to_double(v), to_double(a));
}

CoveringParams covering_params(std::uint32_t n, const BigRat& w, const BigRat& v,
                               const BigRat& a) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    CoveringParams p;
    p.n = n;
    p.w = w;
    p.v = v;
    p.a = a;
    p.nw = integral_part(w, n, "w");
    p.nv = integral_part(v, n, "v");
    p.na = integral_part(a, n, "a");
    if (p.na > p.nw || p.na > p.nv) {
        throw std::invalid_argument("overlap exceeds a weight");
    }
    if (p.nw + p.nv > n + p.na) {
        throw std::invalid_argument("cell n - nw - nv + na is negative");
    }
    return p;
}

std::uint64_t covering_size(const CoveringParams& p, double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
    double m = std::ceil(std::exp2(p.n * (p.info_bits() + eps)));
    if (!(m >= 1.0) || m > 1e18) throw std::invalid_argument("covering size out of range");
    return static_cast<std::uint64_t>(m);
}

Code sample_covering(const CoveringParams& p, double eps, std::uint64_t seed,
                     std::uint64_t max_centers) {
    std::uint64_t m = covering_size(p, eps);
    if (m > max_centers) throw std::invalid_argument("covering size exceeds max_centers");
    auto pool = binomial_capped(p.n, p.nv, std::numeric_limits<std::uint64_t>::max());
    if (pool && *pool < m) {
        throw std::invalid_argument("fewer distinct centers exist than requested");
    }
    Rng rng(seed);
    std::vector<Word> centers;
    centers.reserve(m);
    std::set<Word> seen;
    while (centers.size() < m) {
        Word cand = random_word_of_weight(p.n, p.nv, rng);
        if (seen.insert(cand).second) centers.push_back(cand);
    }
    return Code(p.n, std::move(centers));
}

CoveringReport verify_covering(const Code& centers, const CoveringParams& p) {
    if (p.n > 24) throw std::invalid_argument("n must be at most 24 for exhaustive checks");
    if (centers.length() != p.n) throw std::invalid_argument("center length mismatch");
    std::vector<Word> targets = all_of_weight(p.n, p.nw);
    CoveringReport rep;
    rep.targets = targets.size();
    std::int64_t first = -1;
    std::uint64_t uncovered = 0;
#pragma omp parallel
    {
        std::uint64_t local_miss = 0;
        std::int64_t local_first = -1;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < std::int64_t(targets.size()); ++i) {
            if (!covers(targets[i], centers, p.na)) {
                ++local_miss;
                if (local_first < 0) local_first = i;
            }
        }
#pragma omp critical
        {
            uncovered += local_miss;
            if (local_first >= 0 && (first < 0 || local_first < first)) first = local_first;
        }
    }
    rep.uncovered = uncovered;
    if (first >= 0) rep.first_uncovered = targets[first];
    return rep;
}

CoveringReport verify_covering_serial(const Code& centers, const CoveringParams& p) {
    if (p.n > 24) throw std::invalid_argument("n must be at most 24 for exhaustive checks");
    if (centers.length() != p.n) throw std::invalid_argument("center length mismatch");
    std::vector<Word> targets = all_of_weight(p.n, p.nw);
    CoveringReport rep;
    rep.targets = targets.size();
    for (const Word& u : targets) {
        if (!covers(u, centers, p.na)) {
            ++rep.uncovered;
            if (!rep.first_uncovered) rep.first_uncovered = u;
        }
    }
    return rep;
}

BigInt single_center_coverage(const CoveringParams& p) {
    return binomial(p.nv, p.na) * binomial(p.n - p.nv, p.nw - p.na);
}

BigInt covering_converse_lower(const CoveringParams& p) {
    BigInt single = single_center_coverage(p);
    if (single == 0) throw std::invalid_argument("a single center covers nothing");
    BigInt total = binomial(p.n, p.nw);
    return (total + single - 1) / single;
}

}  // namespace zc
