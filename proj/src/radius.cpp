#include "zc/radius.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zc {

namespace {

void require_list(std::span<const Word> list) {
    if (list.empty()) throw std::invalid_argument("empty list");
    for (const auto& w : list)
        if (w.length() != list[0].length())
            throw std::invalid_argument("word length mismatch");
}

std::uint32_t max_weight_of(std::span<const Word> list) {
    std::uint32_t m = 0;
    for (const auto& w : list) m = std::max(m, w.weight());
    return m;
}

}  // namespace

Word chebyshev_center(std::span<const Word> list) {
    require_list(list);
    Word c = list[0];
    for (std::size_t i = 1; i < list.size(); ++i) c = c & list[i];
    return c;
}

std::uint32_t chebyshev_radius(std::span<const Word> list) {
    return max_weight_of(list) - chebyshev_center(list).weight();
}

std::uint32_t chebyshev_radius_exhaustive(std::span<const Word> list) {
    require_list(list);
    const std::uint32_t n = list[0].length();
    if (n > 20) throw std::invalid_argument("exhaustive center scan needs n <= 20");
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Word y(n);
        for (std::uint32_t i = 0; i < n; ++i)
            if ((bits >> i) & 1) y.set(i, true);
        std::uint32_t worst = 0;
        bool feasible = true;
        for (const auto& x : list) {
            if (!x.contains(y)) {
                feasible = false;
                break;
            }
            worst = std::max(worst, z_distance(x, y));
        }
        if (feasible) best = std::min(best, worst);
    }
    return best;
}

namespace {

struct ScanResult {
    std::uint32_t radius = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> tuple;  // indices in descending order (colex key)

    // Prefer the smaller radius; among equals the colexicographically
    // smallest subset, which is lexicographic order on the descending tuple.
    bool better_than(const ScanResult& o) const {
        if (radius != o.radius) return radius < o.radius;
        return std::lexicographical_compare(tuple.begin(), tuple.end(),
                                            o.tuple.begin(), o.tuple.end());
    }
};

// Depth-first over the remaining (smaller) indices; `limit` is the exclusive
// upper bound for the next index. The prune keeps strictly worse branches
// only, so every subset attaining the final minimum is still visited and the
// tie break stays deterministic under any thread scheduling.
void descend(const Code& code, int remaining, std::uint32_t limit, const Word& acc,
             std::uint32_t maxwt, std::vector<std::uint32_t>& tuple,
             std::atomic<std::uint32_t>& shared_best, ScanResult& local) {
    if (remaining == 0) {
        std::uint32_t rad = maxwt - acc.weight();
        ScanResult cand{rad, tuple};
        if (cand.better_than(local)) {
            local = std::move(cand);
            std::uint32_t cur = shared_best.load(std::memory_order_relaxed);
            while (rad < cur &&
                   !shared_best.compare_exchange_weak(cur, rad, std::memory_order_relaxed)) {
            }
        }
        return;
    }
    for (std::uint32_t i = remaining - 1; i < limit; ++i) {
        Word next = acc & code[i];
        std::uint32_t wt = std::max(maxwt, code[i].weight());
        if (wt - next.weight() > shared_best.load(std::memory_order_relaxed)) continue;
        tuple.push_back(i);
        descend(code, remaining - 1, i, next, wt, tuple, shared_best, local);
        tuple.pop_back();
    }
}

RadiusCertificate finish(const Code& code, const ScanResult& best) {
    RadiusCertificate cert;
    cert.radius = best.radius;
    cert.witness_indices.assign(best.tuple.rbegin(), best.tuple.rend());
    for (auto i : cert.witness_indices) cert.witness.push_back(code[i]);
    cert.center = chebyshev_center(cert.witness);
    return cert;
}

void validate_scan_args(const Code& code, int L) {
    if (L < 2) throw std::invalid_argument("list size must be at least 2");
    if (L > 16) throw std::invalid_argument("list size limited to 16");
    if (code.size() < static_cast<std::uint32_t>(L))
        throw std::invalid_argument("code smaller than list size");
}

}  // namespace

RadiusCertificate list_decoding_radius(const Code& code, int L) {
    validate_scan_args(code, L);
    const std::uint32_t M = code.size();
    std::atomic<std::uint32_t> shared_best{std::numeric_limits<std::uint32_t>::max()};
    std::vector<ScanResult> per_top(M);

#pragma omp parallel for schedule(dynamic)
    for (std::uint32_t top = L - 1; top < M; ++top) {
        std::vector<std::uint32_t> tuple{top};
        descend(code, L - 1, top, code[top], code[top].weight(), tuple, shared_best,
                per_top[top]);
    }

    const ScanResult* best = nullptr;
    for (const auto& r : per_top)
        if (!r.tuple.empty() && (!best || r.better_than(*best))) best = &r;
    return finish(code, *best);
}

RadiusCertificate list_decoding_radius_serial(const Code& code, int L) {
    validate_scan_args(code, L);
    const std::uint32_t M = code.size();
    std::vector<std::uint32_t> comb(L);
    for (int i = 0; i < L; ++i) comb[i] = i;
    ScanResult best;
    std::vector<Word> list(L, Word(code.length()));
    while (true) {
        for (int i = 0; i < L; ++i) list[i] = code[comb[i]];
        std::uint32_t rad = chebyshev_radius(list);
        ScanResult cand{rad, std::vector<std::uint32_t>(comb.rbegin(), comb.rend())};
        if (cand.better_than(best)) best = std::move(cand);
        int k = L - 1;
        while (k >= 0 && comb[k] == M - static_cast<std::uint32_t>(L - k)) --k;
        if (k < 0) break;
        ++comb[k];
        for (int j = k + 1; j < L; ++j) comb[j] = comb[j - 1] + 1;
    }
    return finish(code, best);
}

namespace {

BallOccupancy occupancy_scan(const Code& code, std::uint32_t t, bool parallel) {
    const std::uint32_t n = code.length();
    if (n > 24) throw std::invalid_argument("center scan needs n <= 24");
    if (code.size() == 0) throw std::invalid_argument("empty code");
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint32_t M = code.size();
    std::vector<std::uint64_t> mask(M);
    std::vector<std::uint32_t> wt(M);
    for (std::uint32_t i = 0; i < M; ++i) {
        mask[i] = code[i].blocks()[0];
        wt[i] = code[i].weight();
    }

    std::uint32_t best_count = 0;
    std::uint64_t best_center = 0;
#pragma omp parallel if (parallel)
    {
        std::uint32_t my_count = 0;
        std::uint64_t my_center = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(total); ++c) {
            const std::uint64_t cm = static_cast<std::uint64_t>(c);
            const std::uint32_t cw = static_cast<std::uint32_t>(std::popcount(cm));
            std::uint32_t cnt = 0;
            for (std::uint32_t i = 0; i < M; ++i)
                cnt += ((cm & ~mask[i]) == 0 && wt[i] - cw <= t);
            if (cnt > my_count) {
                my_count = cnt;
                my_center = cm;
            }
        }
#pragma omp critical
        {
            if (my_count > best_count ||
                (my_count == best_count && my_center < best_center)) {
                best_count = my_count;
                best_center = my_center;
            }
        }
    }

    BallOccupancy occ;
    occ.count = best_count;
    occ.center = Word(n);
    for (std::uint32_t i = 0; i < n; ++i)
        if ((best_center >> i) & 1) occ.center.set(i, true);
    return occ;
}

}  // namespace

BallOccupancy max_zball_occupancy(const Code& code, std::uint32_t t) {
    return occupancy_scan(code, t, true);
}

BallOccupancy max_zball_occupancy_serial(const Code& code, std::uint32_t t) {
    return occupancy_scan(code, t, false);
}

namespace {

std::uint32_t ceil_tau_n(const BigRat& tau, std::uint32_t n) {
    if (tau < 0 || tau > 1) throw std::invalid_argument("tau must lie in [0, 1]");
    return ceil_rat(tau * n).convert_to<std::uint32_t>();
}

}  // namespace

bool is_list_decodable(const Code& code, int L, const BigRat& tau) {
    const std::uint32_t t = ceil_tau_n(tau, code.length());
    return list_decoding_radius(code, L).radius > t;
}

bool is_list_decodable_exhaustive(const Code& code, int L, const BigRat& tau) {
    if (L < 2) throw std::invalid_argument("list size must be at least 2");
    const std::uint32_t t = ceil_tau_n(tau, code.length());
    return max_zball_occupancy(code, t).count <= static_cast<std::uint32_t>(L) - 1;
}

bool unique_decoding_check(const Code& code, std::uint32_t t) {
    const std::uint32_t M = code.size();
    for (std::uint32_t i = 0; i < M; ++i)
        for (std::uint32_t j = i + 1; j < M; ++j)
            if (z_distance(code[i], code[j]) <= t) return false;
    return true;
}

std::optional<std::uint32_t> list_radius_constant_weight_by_columns(const Code& code, int L,
                                                                    std::uint64_t work_cap) {
    if (!code.constant_weight())
        throw std::invalid_argument("column counting needs a constant-weight code");
    if (L < 2 || L > 4) throw std::invalid_argument("column counting supports 2 <= L <= 4");
    if (code.size() < static_cast<std::uint32_t>(L))
        throw std::invalid_argument("code smaller than list size");
    if (code.size() > (1u << 13)) throw std::invalid_argument("too many rows to pack keys");

    const std::uint32_t n = code.length();
    const std::uint32_t M = code.size();

    std::vector<std::vector<std::uint32_t>> columns(n);
    for (std::uint32_t r = 0; r < M; ++r)
        for (std::uint32_t p : code[r].support()) columns[p].push_back(r);

    std::uint64_t work = 0;
    for (const auto& col : columns) {
        std::uint64_t c = col.size();
        std::uint64_t subsets = 1;
        for (int i = 0; i < L; ++i) subsets = subsets * (c > static_cast<std::uint64_t>(i) ? c - i : 0);
        for (int i = 2; i <= L; ++i) subsets /= i;
        work += subsets;
        if (work > work_cap) return std::nullopt;
    }

    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    counts.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(work, 1u << 22)));
    std::uint32_t best = 0;
    auto bump = [&](std::uint64_t key) { best = std::max(best, ++counts[key]); };

    for (const auto& col : columns) {
        const std::size_t c = col.size();
        if (c < static_cast<std::size_t>(L)) continue;
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = a + 1; b < c; ++b) {
                std::uint64_t key2 = (std::uint64_t{col[a]} << 13) | col[b];
                if (L == 2) {
                    bump(key2);
                    continue;
                }
                for (std::size_t d = b + 1; d < c; ++d) {
                    std::uint64_t key3 = (key2 << 13) | col[d];
                    if (L == 3) {
                        bump(key3);
                        continue;
                    }
                    for (std::size_t e = d + 1; e < c; ++e) bump((key3 << 13) | col[e]);
                }
            }
    }

    return code.max_weight() - best;
}

}  // namespace zc
