#pragma once

#include <cstdint>
#include <vector>

#include "zc/code.hpp"
#include "zc/exact.hpp"

namespace zc {

// -x log2 x with the 0 log 0 = 0 convention; inputs below 1e-15 are treated
// as zero before the log.
double neg_plog2(double x);
double binary_entropy(double w);

// Mutual information in bits of the pair (U, X) with joint cells
//   P(0,0) = 1-w-v+a, P(0,1) = w-a, P(1,0) = v-a, P(1,1) = a
// so X ~ Ber(w) and U ~ Ber(v). Equals
//   H(w) - (1-v) H((w-a)/(1-v)) - v H(a/v).
double mutual_info(double w, double v, double a);

// Smallest mutual information over auxiliary weights v and overlaps a whose
// induced sub-block weights p = (w-a)/(1-v), q = a/v stay decodable:
//   (1-v)(p - p^L) + v(q - q^L) <= tau.
// Grid search with two 10x refinements around the incumbent; collapses to 0
// once tau reaches w - w^L.
struct UpperCurvePoint {
    double value = 0;
    double v = 0;
    double a = 0;
};
UpperCurvePoint eb_upper_bound(int L, double w, double tau, int grid = 200);

// Minimum KL divergence (bits) from Ber(w)^L of an exchangeable joint
// distribution of L coordinates with Ber(w) marginals and
// P(all ones) >= w - tau. Solved in the L+1 weight-class masses: either the
// product measure is feasible (exponent 0) or the all-ones constraint binds
// and the remaining classes form an exponentially tilted binomial whose tilt
// is found by bisection.
struct RareListExponent {
    double exponent = 0;              // bits
    std::vector<double> class_mass;   // mass on weight classes 0..L
    bool constraint_active = false;
};
RareListExponent rc_exponent(int L, double w, double tau, double tol = 1e-8);

// Independent check: the same minimization over the full 2^L-cell table by
// iterative proportional fitting onto the marginal slices and the all-ones
// atom. Returns the KL divergence in bits.
double rc_exponent_full_table(int L, double w, double tau, int iters = 20000);

// exponent / (L-1); zero exactly when tau >= w - w^L.
double rc_lower_bound(int L, double w, double tau);

// -(1-w+tau) log2 (1-w+tau) + tau log2 tau - w log2 w. Equals H(w) at tau=0
// and 0 at tau=w.
double cld(double w, double tau);

// H(w(1-tau)) - w H(tau): rate at input weight w when each transmitted one
// is erased independently with probability tau.
double stochastic_capacity(double w, double tau);
// Weight (1 - tau + tau^(-tau/(1-tau)))^(-1) maximizing the rate.
double stochastic_optimal_weight(double tau);
double stochastic_capacity_opt(double tau);

// Monte-Carlo rate checks for cld. The ub probe draws random codes of rate
// cld + delta and counts codewords compatible with a random received word of
// weight n(w - tau): the count should grow like 2^(n delta). The lb probe
// draws codes of rate cld - delta and scans all centers for the largest
// captured list, which should stay below 1/delta.
struct CldUpperProbe {
    std::uint64_t code_size = 0;
    double mean_count = 0;
    double expected_count = 0;  // exact expectation of the count
    double growth_exponent = 0; // log2(mean_count) / n
};
CldUpperProbe cld_mc_upper(double w, double tau, std::uint32_t n, std::uint32_t trials,
                           double delta, std::uint64_t seed);

struct CldLowerProbe {
    std::uint64_t code_size = 0;
    std::uint32_t max_list = 0;
    double list_threshold = 0;  // 1/delta
    bool ok = false;            // max_list < 1/delta
};
CldLowerProbe cld_mc_lower(double w, double tau, std::uint32_t n, double delta,
                           std::uint64_t seed);

}  // namespace zc
