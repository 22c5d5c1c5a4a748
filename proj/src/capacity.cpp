#include "zc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zc/rng.hpp"
#include "zc/word.hpp"

namespace zc {

namespace {

constexpr double kZero = 1e-15;
const double kLn2 = std::log(2.0);

double psi(double w, int L) { return w - std::pow(w, L); }

void check_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

double neg_plog2(double x) {
    if (x < kZero) return 0.0;
    return -x * std::log2(x);
}

double binary_entropy(double w) {
    check_unit(w, "w");
    return neg_plog2(w) + neg_plog2(1.0 - w);
}

double mutual_info(double w, double v, double a) {
    check_unit(w, "w");
    check_unit(v, "v");
    double lo = std::max(0.0, w + v - 1.0);
    double hi = std::min(w, v);
    if (a < lo - 1e-12 || a > hi + 1e-12) {
        throw std::invalid_argument("overlap a outside [max(0,w+v-1), min(w,v)]");
    }
    a = std::clamp(a, lo, hi);
    const double cell[4] = {1.0 - w - v + a, w - a, v - a, a};
    const double px[2] = {1.0 - w, w};
    const double pu[2] = {1.0 - v, v};
    double bits = 0.0;
    for (int u = 0; u < 2; ++u) {
        for (int x = 0; x < 2; ++x) {
            double p = cell[2 * u + x];
            if (p < kZero) continue;
            bits += p * std::log2(p / (pu[u] * px[x]));
        }
    }
    return std::max(bits, 0.0);
}

UpperCurvePoint eb_upper_bound(int L, double w, double tau, int grid) {
    if (L < 2) throw std::invalid_argument("L must be at least 2");
    if (!(w > 0.0 && w < 1.0)) throw std::invalid_argument("w must lie in (0, 1)");
    if (!(tau >= 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in [0, 1)");
    if (grid < 8) throw std::invalid_argument("grid too small");

    if (tau >= psi(w, L) - 1e-15) return {0.0, 0.0, 0.0};

    auto feasible = [&](double v, double a) {
        double p = (1.0 - v > kZero) ? (w - a) / (1.0 - v) : 0.0;
        double q = (v > kZero) ? a / v : 0.0;
        p = std::clamp(p, 0.0, 1.0);
        q = std::clamp(q, 0.0, 1.0);
        return (1.0 - v) * psi(p, L) + v * psi(q, L) <= tau + 1e-12;
    };

    // v = a = w (the auxiliary copies the input's ones) is always feasible.
    UpperCurvePoint best{binary_entropy(w), w, w};

    auto scan = [&](double vlo, double vhi) {
        vlo = std::max(vlo, 0.0);
        vhi = std::min(vhi, 1.0);
        for (int i = 0; i < grid; ++i) {
            double v = vlo + (vhi - vlo) * (i + 0.5) / grid;
            double alo = std::max(0.0, w + v - 1.0);
            double ahi = std::min(w, v);
            for (int j = 0; j <= grid; ++j) {
                double a = alo + (ahi - alo) * j / grid;
                if (!feasible(v, a)) continue;
                double bits = mutual_info(w, v, a);
                if (bits < best.value) best = {bits, v, a};
            }
        }
    };

    scan(0.0, 1.0);
    double half = 1.0 / grid;
    for (int round = 0; round < 2; ++round) {
        scan(best.v - half, best.v + half);
        half *= 2.0 / grid;
    }
    return best;
}

RareListExponent rc_exponent(int L, double w, double tau, double tol) {
    if (L < 2 || L > 30) throw std::invalid_argument("L must lie in [2, 30]");
    if (!(w > 0.0 && w < 1.0)) throw std::invalid_argument("w must lie in (0, 1)");
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");

    std::vector<double> logB(L + 1);
    for (int k = 0; k <= L; ++k) {
        logB[k] = std::lgamma(L + 1.0) - std::lgamma(k + 1.0) - std::lgamma(L - k + 1.0) +
                  k * std::log(w) + (L - k) * std::log(1.0 - w);
    }

    RareListExponent out;
    out.class_mass.assign(L + 1, 0.0);

    if (std::pow(w, L) >= w - tau) {
        for (int k = 0; k <= L; ++k) out.class_mass[k] = std::exp(logB[k]);
        return out;
    }
    out.constraint_active = true;
    out.class_mass[L] = w - tau;
    double s = 1.0 - w + tau;

    if (tau < 1e-300) {
        out.class_mass[0] = s;
    } else {
        double mu = L * tau / s;  // target mean over classes 0..L-1
        auto mean_of = [&](double lam) {
            double m = -std::numeric_limits<double>::infinity();
            std::vector<double> t(L);
            for (int k = 0; k < L; ++k) {
                t[k] = logB[k] + lam * k;
                m = std::max(m, t[k]);
            }
            double z = 0.0, num = 0.0;
            for (int k = 0; k < L; ++k) {
                double e = std::exp(t[k] - m);
                z += e;
                num += k * e;
            }
            return num / z;
        };
        double lo = 0.0, hi = 0.0;
        if (mean_of(0.0) < mu) {
            double step = 1.0;
            while (mean_of(hi) < mu && step < 1e6) {
                lo = hi;
                hi += step;
                step *= 2.0;
            }
        } else {
            double step = 1.0;
            while (mean_of(lo) > mu && step < 1e6) {
                hi = lo;
                lo -= step;
                step *= 2.0;
            }
        }
        for (int it = 0; it < 500 && hi - lo > tol; ++it) {
            double mid = 0.5 * (lo + hi);
            (mean_of(mid) < mu ? lo : hi) = mid;
        }
        double lam = 0.5 * (lo + hi);
        double m = -std::numeric_limits<double>::infinity();
        std::vector<double> t(L);
        for (int k = 0; k < L; ++k) {
            t[k] = logB[k] + lam * k;
            m = std::max(m, t[k]);
        }
        double z = 0.0;
        for (int k = 0; k < L; ++k) z += std::exp(t[k] - m);
        for (int k = 0; k < L; ++k) out.class_mass[k] = s * std::exp(t[k] - m) / z;
    }

    double kl = 0.0;
    for (int k = 0; k <= L; ++k) {
        double p = out.class_mass[k];
        if (p < 1e-300) continue;
        kl += p * (std::log(p) - logB[k]);
    }
    out.exponent = std::max(kl / kLn2, 0.0);
    return out;
}

double rc_exponent_full_table(int L, double w, double tau, int iters) {
    if (L < 2 || L > 20) throw std::invalid_argument("L must lie in [2, 20]");
    if (!(w > 0.0 && w < 1.0)) throw std::invalid_argument("w must lie in (0, 1)");
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");

    const std::size_t n = std::size_t{1} << L;
    std::vector<double> q(n), p(n);
    for (std::size_t x = 0; x < n; ++x) {
        int ones = std::popcount(x);
        q[x] = std::pow(w, ones) * std::pow(1.0 - w, L - ones);
    }
    p = q;
    double atom_floor = w - tau;
    for (int it = 0; it < iters; ++it) {
        double change = 0.0;
        for (int i = 0; i < L; ++i) {
            double m1 = 0.0;
            for (std::size_t x = 0; x < n; ++x)
                if (x >> i & 1) m1 += p[x];
            if (m1 < 1e-300 || m1 > 1.0 - 1e-300) continue;
            double f1 = w / m1, f0 = (1.0 - w) / (1.0 - m1);
            for (std::size_t x = 0; x < n; ++x) {
                double next = p[x] * ((x >> i & 1) ? f1 : f0);
                change = std::max(change, std::abs(next - p[x]));
                p[x] = next;
            }
        }
        if (p[n - 1] < atom_floor) {
            double rest = (1.0 - atom_floor) / (1.0 - p[n - 1]);
            for (std::size_t x = 0; x + 1 < n; ++x) {
                double next = p[x] * rest;
                change = std::max(change, std::abs(next - p[x]));
                p[x] = next;
            }
            change = std::max(change, std::abs(atom_floor - p[n - 1]));
            p[n - 1] = atom_floor;
        }
        if (change < 1e-15) break;
    }
    double kl = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        if (p[x] < 1e-300) continue;
        kl += p[x] * std::log(p[x] / q[x]);
    }
    return std::max(kl / kLn2, 0.0);
}

double rc_lower_bound(int L, double w, double tau) {
    return rc_exponent(L, w, tau).exponent / (L - 1);
}

double cld(double w, double tau) {
    check_unit(w, "w");
    if (!(tau >= 0.0 && tau <= w + 1e-12)) {
        throw std::invalid_argument("tau must lie in [0, w]");
    }
    tau = std::min(tau, w);
    double u = 1.0 - (w - tau);
    return neg_plog2(u) - neg_plog2(tau) + neg_plog2(w);
}

double stochastic_capacity(double w, double tau) {
    check_unit(w, "w");
    check_unit(tau, "tau");
    return binary_entropy(w * (1.0 - tau)) - w * binary_entropy(tau);
}

double stochastic_optimal_weight(double tau) {
    if (!(tau >= 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in [0, 1)");
    if (tau < kZero) return 0.5;
    double boost = std::pow(tau, -tau / (1.0 - tau));
    return 1.0 / (1.0 - tau + boost);
}

double stochastic_capacity_opt(double tau) {
    return stochastic_capacity(stochastic_optimal_weight(tau), tau);
}

CldUpperProbe cld_mc_upper(double w, double tau, std::uint32_t n, std::uint32_t trials,
                           double delta, std::uint64_t seed) {
    if (n == 0 || n > 40) throw std::invalid_argument("n must lie in [1, 40]");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    auto k = static_cast<std::uint32_t>(std::llround(n * w));
    auto t = static_cast<std::uint32_t>(std::llround(n * tau));
    if (k == 0 || k > n || t > k) throw std::invalid_argument("nw, ntau must give 0 < k <= n, t <= k");

    double rate = cld(double(k) / n, double(t) / n);
    double m_real = std::ceil(std::exp2(n * (rate + delta)));
    if (!(m_real >= 1.0 && m_real <= 1e6)) throw std::invalid_argument("code size out of range");
    auto m = static_cast<std::uint64_t>(m_real);

    Word y = Word::from_support(n, [&] {
        std::vector<std::uint32_t> sup(k - t);
        for (std::uint32_t i = 0; i < k - t; ++i) sup[i] = i;
        return sup;
    }());

    BigRat p_exact(binomial(n - (k - t), t), binomial(n, k));
    CldUpperProbe probe;
    probe.code_size = m;
    probe.expected_count = to_double(p_exact) * double(m);

    Rng root(seed);
    double total = 0.0;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        Rng rng = root.derive(trial);
        std::uint64_t count = 0;
        for (std::uint64_t i = 0; i < m; ++i) {
            if (random_word_of_weight(n, k, rng).contains(y)) ++count;
        }
        total += double(count);
    }
    probe.mean_count = total / trials;
    probe.growth_exponent = std::log2(std::max(probe.mean_count, 0x1p-60)) / n;
    return probe;
}

CldLowerProbe cld_mc_lower(double w, double tau, std::uint32_t n, double delta,
                           std::uint64_t seed) {
    if (n == 0 || n > 24) throw std::invalid_argument("n must lie in [1, 24]");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    auto k = static_cast<std::uint32_t>(std::llround(n * w));
    auto t = static_cast<std::uint32_t>(std::llround(n * tau));
    if (k == 0 || k > n || t > k) throw std::invalid_argument("nw, ntau must give 0 < k <= n, t <= k");

    double rate = cld(double(k) / n, double(t) / n) - delta;
    double m_real = std::floor(std::exp2(n * rate));
    auto m = static_cast<std::uint64_t>(std::clamp(m_real, 2.0, 4096.0));

    auto centers = binomial_capped(n, k - t, 2'000'000);
    if (!centers) throw std::invalid_argument("too many centers to scan");

    Rng rng(seed);
    std::vector<Word> words;
    while (words.size() < m) {
        Word cand = random_word_of_weight(n, k, rng);
        if (std::find(words.begin(), words.end(), cand) == words.end()) {
            words.push_back(cand);
        }
    }

    CldLowerProbe probe;
    probe.code_size = m;
    probe.list_threshold = 1.0 / delta;

    std::vector<std::uint32_t> pos(k - t);
    for (std::uint32_t i = 0; i < k - t; ++i) pos[i] = i;
    bool more = !pos.empty() || (k - t) == 0;
    while (more) {
        Word center = Word::from_support(n, pos);
        std::uint32_t hits = 0;
        for (const Word& x : words) {
            if (x.contains(center)) ++hits;
        }
        probe.max_list = std::max(probe.max_list, hits);
        if (pos.empty()) break;
        // next combination in lexicographic order
        int i = int(pos.size()) - 1;
        while (i >= 0 && pos[i] == n - pos.size() + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (std::size_t j = i + 1; j < pos.size(); ++j) pos[j] = pos[j - 1] + 1;
    }
    probe.ok = probe.max_list < probe.list_threshold;
    return probe;
}

}  // namespace zc
