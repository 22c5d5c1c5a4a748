#include "zc/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_ok(const BoundReport& r) {
    for (const auto& c : r.checks)
        if (!c.ok) return false;
    return true;
}

void seal(BoundReport& r, std::optional<double> value, std::optional<BigInt> exact = {}) {
    r.preconditions_met = all_ok(r);
    if (!r.preconditions_met) return;
    r.value = value;
    r.exact = std::move(exact);
    if (value && std::isinf(*value)) r.infinite = true;
}

}  // namespace

BoundReport plotkin_classic(std::uint32_t n, std::uint32_t t) {
    BoundReport r;
    r.name = "plotkin_classic";
    r.inputs = {{"n", static_cast<double>(n)}, {"t", static_cast<double>(t)}};
    r.checks.push_back({"n >= 1", n >= 1});
    r.checks.push_back({"t > n/4", 4ull * t > n});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    BigInt num = 2ull * t + 2;
    BigInt den = 4ull * t + 3 - n;
    BigInt m = 2 * (num / den);
    seal(r, m.convert_to<double>(), m);
    return r;
}

BoundReport bassalygo_cw(std::uint32_t n, std::uint32_t t, std::uint32_t w) {
    BoundReport r;
    r.name = "bassalygo_cw";
    r.inputs = {{"n", static_cast<double>(n)},
                {"t", static_cast<double>(t)},
                {"w", static_cast<double>(w)}};
    const std::int64_t ni = n, ti = t, wi = w;
    const std::int64_t den = wi * wi - (wi - ti) * ni;
    r.checks.push_back({"t+1 <= w", ti + 1 <= wi});
    r.checks.push_back({"window exists (4t <= n)", 4 * ti <= ni});
    r.checks.push_back({"w below window edge", 2 * wi <= ni && den >= 0});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    if (den == 0) {
        r.note = "denominator vanishes at the window edge";
        seal(r, kInf);
        return r;
    }
    BigInt m = BigInt(ti) * ni / den;
    seal(r, m.convert_to<double>(), m);
    return r;
}

BoundReport unique_above_plotkin(std::uint32_t n, double eps) {
    BoundReport r;
    r.name = "unique_above_plotkin";
    r.inputs = {{"n", static_cast<double>(n)}, {"eps", eps}};
    r.checks.push_back({"n > 36", n > 36});
    r.checks.push_back({"eps > 0", eps > 0});
    r.checks.push_back({"eps < 1/12 - 3/n", eps < 1.0 / 12.0 - 3.0 / n});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    const double nn = n, se = std::sqrt(eps);
    double v = (1 + 7 / nn + 2 * se + 4 * eps + 16 * se / nn) / (eps * se) + 10;
    seal(r, v);
    return r;
}

double list_plotkin_fraction(int L, double w) {
    return w - std::pow(w, static_cast<double>(L));
}

PlotkinPoint plotkin_point(int L) {
    if (L < 2) throw std::invalid_argument("list size must be at least 2");
    PlotkinPoint p;
    p.L = L;
    p.w_max = std::pow(static_cast<double>(L), -1.0 / (L - 1));
    p.tau = p.w_max - std::pow(p.w_max, static_cast<double>(L));
    return p;
}

namespace {

// Largest M >= L with M^L / (M (M-1) ... (M-L+1)) >= target; the left side
// decreases to 1, so feasibility is monotone. Rational comparisons keep the
// search exact for any double target. Returns nullopt when even M = L fails.
std::optional<BigInt> largest_ratio_feasible(int L, const BigRat& target) {
    auto feasible = [&](const BigInt& m) {
        return BigRat(pow_int(m, L), falling_factorial(m, L)) >= target;
    };
    BigInt lo = L;
    if (!feasible(lo)) return std::nullopt;
    BigInt hi = lo + 1;
    while (feasible(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

void finish_ratio_bound(BoundReport& r, int L, const BigRat& target) {
    if (target <= 1) {
        r.note = "ratio threshold at or below 1 constrains nothing";
        seal(r, kInf);
        return;
    }
    auto m = largest_ratio_feasible(L, target);
    if (!m) {
        r.note = "no M >= L satisfies the ratio; only trivial sizes below the list size";
        seal(r, static_cast<double>(L - 1), BigInt(L - 1));
        return;
    }
    seal(r, m->convert_to<double>(), *m);
}

}  // namespace

BoundReport cw_list_upper(int L, double w, double eps) {
    BoundReport r;
    r.name = "cw_list_upper";
    r.inputs = {{"L", static_cast<double>(L)}, {"w", w}, {"eps", eps}};
    r.checks.push_back({"L >= 2", L >= 2});
    r.checks.push_back({"0 < w < 1", w > 0 && w < 1});
    r.checks.push_back({"eps > 0", eps > 0});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    const double psi = list_plotkin_fraction(L, w);
    r.extras["tau"] = psi + eps;
    r.extras["asymptotic"] =
        psi * (L * (L - 1) / 2.0) / eps;
    BigRat target = (BigRat(psi) + BigRat(eps)) / BigRat(psi);
    finish_ratio_bound(r, L, target);
    return r;
}

BoundReport apx_cw_ratio_bound(int L, double w, double delta, double tau) {
    BoundReport r;
    r.name = "apx_cw_ratio_bound";
    r.inputs = {{"L", static_cast<double>(L)}, {"w", w}, {"delta", delta}, {"tau", tau}};
    r.checks.push_back({"L >= 2", L >= 2});
    r.checks.push_back({"0 < w < 1", w > 0 && w < 1});
    r.checks.push_back({"0 <= delta < tau/(2w)", delta >= 0 && 2 * w * delta < tau});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    const double num = tau - 2 * w * delta;
    const double den = w * (1 + delta) - std::pow(w * (1 - delta), static_cast<double>(L));
    r.extras["ratio"] = num / den;
    if (den <= 0) {
        r.note = "denominator not positive; no constraint";
        seal(r, kInf);
        return r;
    }
    finish_ratio_bound(r, L, BigRat(num) / BigRat(den));
    return r;
}

BoundReport augmented_weight_band_bound(int L, double w1, double w2, double tau) {
    BoundReport r;
    r.name = "augmented_weight_band_bound";
    r.inputs = {{"L", static_cast<double>(L)}, {"w1", w1}, {"w2", w2}, {"tau", tau}};
    r.checks.push_back({"L >= 2", L >= 2});
    r.checks.push_back({"0 <= w1 <= w2 <= 1", w1 >= 0 && w1 <= w2 && w2 <= 1});
    r.checks.push_back({"tau > 0", tau > 0});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    const double stretch = 1 + w2 - w1;
    const double w2p = w2 / stretch;
    const double taup = tau / stretch;
    const double ratio = (w2p - std::pow(w2p, static_cast<double>(L))) / taup;
    r.extras["ratio"] = ratio;
    if (ratio >= 1) {
        r.note = "band too wide for this radius; ratio reached 1";
        seal(r, kInf);
        return r;
    }
    seal(r, (L - 1) / (1 - std::pow(ratio, 1.0 / (L - 1))));
    return r;
}

BoundReport close_weights_bound(int L, double eps) {
    BoundReport r;
    r.name = "close_weights_bound";
    r.inputs = {{"L", static_cast<double>(L)}, {"eps", eps}};
    r.checks.push_back({"L >= 2", L >= 2});
    r.checks.push_back({"eps > 0", eps > 0});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return r;
    }
    const double tau_l = plotkin_point(L).tau;
    r.extras["max_band_width_factor"] = (1 - tau_l) / (2 * tau_l);
    seal(r, static_cast<double>(L - 1) * (L - 1) / eps);
    return r;
}

GeneralBound general_upper_bound(int L, double eps) {
    GeneralBound g;
    BoundReport& r = g.report;
    r.name = "general_upper_bound";
    r.inputs = {{"L", static_cast<double>(L)}, {"eps", eps}};
    r.checks.push_back({"L >= 2", L >= 2});
    r.checks.push_back({"0 < eps < 1/4", eps > 0 && eps < 0.25});
    if (!all_ok(r)) {
        seal(r, std::nullopt);
        return g;
    }

    const PlotkinPoint pp = plotkin_point(L);
    const double tau = pp.tau + eps;
    const double threshold = static_cast<double>(L - 1) / eps;
    const double fallback_width = eps * (1 - pp.tau) / (2 * pp.tau);

    auto band_value = [&](double w1, double w2) {
        BoundReport b = augmented_weight_band_bound(L, w1, w2, tau);
        return b.value ? *b.value : kInf;
    };

    double total = 0;
    double w1 = 0;
    while (w1 < 1) {
        double w2;
        if (band_value(w1, w1) <= threshold) {
            if (band_value(w1, 1) <= threshold) {
                w2 = 1;
            } else {
                double lo = w1, hi = 1;
                while (hi - lo > 1e-9) {
                    double mid = 0.5 * (lo + hi);
                    (band_value(w1, mid) <= threshold ? lo : hi) = mid;
                }
                w2 = lo;
            }
        } else {
            w2 = w1;  // stalled at the start; fall through to the width floor
        }
        if (w2 - w1 < 1e-12) w2 = std::min(1.0, w1 + fallback_width);
        double b = band_value(w1, w2);
        if (std::isinf(b)) {
            r.note = "slicing stalled; eps too large for this list size";
            r.checks.push_back({"slicing converged", false});
            seal(r, std::nullopt);
            return g;
        }
        g.bands.push_back({w1, w2, b});
        total += b;
        w1 = w2;
        if (g.bands.size() > 2'000'000) throw std::runtime_error("band schedule exploded");
    }
    r.extras["bands"] = static_cast<double>(g.bands.size());
    seal(r, total);
    return g;
}

namespace {

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string bounds_csv(std::span<const BoundReport> reports) {
    std::string out = "name,inputs,value,exact,preconditions_met,failed_checks,note\r\n";
    for (const auto& r : reports) {
        std::string inputs;
        for (const auto& [k, v] : r.inputs) {
            if (!inputs.empty()) inputs += ' ';
            inputs += k + "=" + format_double(v);
        }
        std::string failed;
        for (const auto& c : r.checks)
            if (!c.ok) {
                if (!failed.empty()) failed += "; ";
                failed += c.name;
            }
        out += csv_quote(r.name) + ',' + csv_quote(inputs) + ',';
        if (r.value) out += r.infinite ? "inf" : format_double(*r.value);
        out += ',';
        if (r.exact) out += r.exact->convert_to<std::string>();
        out += ',';
        out += r.preconditions_met ? "true" : "false";
        out += ',' + csv_quote(failed) + ',' + csv_quote(r.note) + "\r\n";
    }
    return out;
}

}  // namespace zc
