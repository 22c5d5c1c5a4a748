#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zc/exact.hpp"

namespace zc {

struct Precondition {
    std::string name;
    bool ok = false;
};

// Every size bound reports its inputs, each precondition with its own
// verdict, and a value only when all preconditions hold. Bounds that blow up
// on a boundary (zero denominator, ratio reaching 1) report +infinity with
// the `infinite` flag instead of failing. Integer-valued bounds also carry
// the exact integer.
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<Precondition> checks;
    bool preconditions_met = false;
    std::optional<double> value;
    bool infinite = false;
    std::optional<BigInt> exact;
    std::map<std::string, double> extras;
    std::string note;
};

// Code size limit 2*floor((2t+2)/(4t+3-n)) for codes correcting t symmetric
// errors; meaningful above the Plotkin range t > n/4.
BoundReport plotkin_classic(std::uint32_t n, std::uint32_t t);

// Constant-weight refinement floor(tn / (w^2 - (w-t)n)) for absolute weight
// w inside the window t+1 <= w <= (n - sqrt(n^2-4tn))/2.
BoundReport bassalygo_cw(std::uint32_t n, std::uint32_t t, std::uint32_t w);

// Size of codes correcting a (1/4 + eps) fraction of erased ones:
// (1 + 7/n + 2 sqrt(eps) + 4 eps + 16 sqrt(eps)/n) / eps^(3/2) + 10.
BoundReport unique_above_plotkin(std::uint32_t n, double eps);

// Critical fraction w - w^L for weight-w codes and L-lists.
double list_plotkin_fraction(int L, double w);

struct PlotkinPoint {
    int L = 2;
    double w_max = 0;  // L^(-1/(L-1)), the weight maximizing w - w^L
    double tau = 0;    // its value (L-1) L^(-L/(L-1)); exactly 1/4 for L=2
};
PlotkinPoint plotkin_point(int L);

// Double-counting bound for w-constant-weight codes whose minimum L-subset
// radius fraction is tau = (w - w^L) + eps: the exact largest M satisfying
//   M^L / (M (M-1) ... (M-L+1)) >= tau / (w - w^L),
// found by bisection on the monotone left side (exact rational compares),
// plus the asymptotic form (w - w^L) C(L,2) / eps in extras["asymptotic"].
BoundReport cw_list_upper(int L, double w, double eps);

// Same counting argument when weights are only within [w(1-delta), w(1+delta)]:
// ratio threshold (tau - 2 w delta) / (w(1+delta) - (w(1-delta))^L). A ratio
// at or below 1 constrains nothing and reports +infinity.
BoundReport apx_cw_ratio_bound(int L, double w, double delta, double tau);

// Band bound for codes with weights in [w1, w2] and radius fraction tau:
//   (L-1) / (1 - ((w2' - w2'^L) / tau')^(1/(L-1)))
// where w2' = w2/(1+w2-w1) and tau' = tau/(1+w2-w1).
BoundReport augmented_weight_band_bound(int L, double w1, double w2, double tau);

// (L-1)^2 / eps for a band of width at most phi_L * eps around any weight,
// phi_L <= (1 - tau_L) / (2 tau_L); the factor is reported in
// extras["max_band_width_factor"].
BoundReport close_weights_bound(int L, double eps);

struct WeightBand {
    double w1 = 0;
    double w2 = 0;
    double bound = 0;
};

// Greedy weight slicing of [0,1]: each band extends as far as the band bound
// stays within (L-1)/eps (bisection, tolerance 1e-9), and the per-band bounds
// are summed. Any slicing gives a rigorous size bound for radius fraction
// tau_L + eps; this schedule makes the total scale like eps^(-3/2).
struct GeneralBound {
    BoundReport report;
    std::vector<WeightBand> bands;
};
GeneralBound general_upper_bound(int L, double eps);

// One row per report: name, inputs, value, exact, preconditions, note.
// RFC 4180 (quoted fields, CRLF).
std::string bounds_csv(std::span<const BoundReport> reports);

}  // namespace zc
