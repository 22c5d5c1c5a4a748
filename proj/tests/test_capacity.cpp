#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "zc/capacity.hpp"
#include "zc/rng.hpp"

using namespace zc;

TEST_CASE("entropy helpers") {
    CHECK(neg_plog2(0.0) == 0.0);
    CHECK(neg_plog2(1.0) == 0.0);
    CHECK(neg_plog2(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(0.2) == doctest::Approx(0.7219280948873623).epsilon(1e-14));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(binary_entropy(1.1), std::invalid_argument);
}

TEST_CASE("pair information: corners and the chain rule") {
    // independent cells carry nothing
    CHECK(mutual_info(0.3, 0.6, 0.18) == doctest::Approx(0.0).epsilon(1e-12));
    // perfectly correlated fair bits carry one bit
    CHECK(mutual_info(0.5, 0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    // half-coupled pair: the light marginal is fully determined by the heavy
    // one, so I = H(1/4) - 1/2
    CHECK(mutual_info(0.5, 0.25, 0.25) ==
          doctest::Approx(binary_entropy(0.25) - 0.5).epsilon(1e-12));

    // I = H(w) - (1-v) H((w-a)/(1-v)) - v H(a/v) on random feasible cells
    Rng rng(31);
    for (int round = 0; round < 2000; ++round) {
        double w = 0.02 + 0.96 * rng.uniform();
        double v = 0.02 + 0.96 * rng.uniform();
        double lo = std::max(0.0, w + v - 1.0);
        double hi = std::min(w, v);
        double a = lo + (hi - lo) * rng.uniform();
        double chain = binary_entropy(w) - (1.0 - v) * binary_entropy((w - a) / (1.0 - v)) -
                       v * binary_entropy(a / v);
        CHECK(mutual_info(w, v, a) == doctest::Approx(std::max(chain, 0.0)).epsilon(1e-10));
        CHECK(mutual_info(w, v, a) >= 0.0);
    }

    CHECK_THROWS_AS(mutual_info(0.5, 0.25, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(mutual_info(0.5, 0.25, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(mutual_info(1.5, 0.25, 0.1), std::invalid_argument);
}

TEST_CASE("upper rate curve") {
    // past the critical fraction the auxiliary can copy the input: zero rate
    CHECK(eb_upper_bound(2, 0.5, 0.26).value == 0.0);
    CHECK(eb_upper_bound(3, 0.5, 0.38).value == 0.0);

    // tiny tau: bounded by the unconstrained entropy
    UpperCurvePoint tight = eb_upper_bound(2, 0.5, 0.001);
    CHECK(tight.value > 0.0);
    CHECK(tight.value <= 1.0);

    UpperCurvePoint mid = eb_upper_bound(2, 0.5, 0.1);
    CHECK(mid.value == doctest::Approx(0.492014).epsilon(1e-3));
    CHECK(mid.value > 0.0);
    CHECK(mid.value < 1.0);
    // the reported argmin is feasible and reproduces the value
    double p = (0.5 - mid.a) / (1.0 - mid.v);
    double q = mid.a / mid.v;
    CHECK((1.0 - mid.v) * (p - p * p) + mid.v * (q - q * q) <= 0.1 + 1e-9);
    CHECK(mutual_info(0.5, mid.v, mid.a) == doctest::Approx(mid.value).epsilon(1e-12));

    // refinement only improves on a coarse scan
    CHECK(mid.value <= eb_upper_bound(2, 0.5, 0.1, 32).value + 1e-9);

    CHECK_THROWS_AS(eb_upper_bound(1, 0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(eb_upper_bound(2, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(eb_upper_bound(2, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eb_upper_bound(2, 0.5, 0.1, 4), std::invalid_argument);
}

TEST_CASE("rare-list exponent: closed form at the fair point") {
    RareListExponent e = rc_exponent(2, 0.5, 0.2);
    REQUIRE(e.constraint_active);
    // active constraint pins the table to (0.3, 0.2, 0.2, 0.3)
    REQUIRE(e.class_mass.size() == 3);
    CHECK(e.class_mass[0] == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(e.class_mass[1] == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(e.class_mass[2] == doctest::Approx(0.3).epsilon(1e-8));
    double closed = 2.0 * (0.3 * std::log2(1.2) + 0.2 * std::log2(0.8));
    CHECK(e.exponent == doctest::Approx(closed).epsilon(1e-8));
    CHECK(e.exponent == doctest::Approx(0.0290494).epsilon(1e-5));

    // the product measure is feasible exactly at the critical fraction
    RareListExponent flat = rc_exponent(2, 0.5, 0.25);
    CHECK(flat.exponent == 0.0);
    CHECK_FALSE(flat.constraint_active);

    CHECK_THROWS_AS(rc_exponent(1, 0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(rc_exponent(2, 0.5, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(rc_exponent(2, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("rare-list exponent: solution is a valid distribution with Ber(w) marginals") {
    Rng rng(77);
    for (int round = 0; round < 200; ++round) {
        int L = 2 + static_cast<int>(rng.below(4));
        double w = 0.05 + 0.9 * rng.uniform();
        double tau = w * rng.uniform();
        RareListExponent e = rc_exponent(L, w, tau);
        double sum = 0, mean = 0;
        for (int k = 0; k <= L; ++k) {
            CHECK(e.class_mass[k] >= -1e-12);
            sum += e.class_mass[k];
            mean += k * e.class_mass[k];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        // exchangeability with Ber(w) marginals forces mean weight L*w
        CHECK(mean == doctest::Approx(L * w).epsilon(1e-7));
        if (e.constraint_active) {
            CHECK(e.class_mass[L] == doctest::Approx(w - tau).epsilon(1e-12));
        } else {
            CHECK(e.exponent == 0.0);
        }
    }
}

TEST_CASE("rare-list exponent vanishes exactly in the decodable region") {
    for (int L : {2, 3}) {
        for (int i = 1; i < 20; ++i) {
            double w = i / 20.0;
            double crit = w - std::pow(w, L);
            for (int j = 0; j < 20; ++j) {
                double tau = w * j / 20.0;
                if (std::abs(tau - crit) < 1e-3) continue;  // straddles the boundary
                double e = rc_exponent(L, w, tau).exponent;
                if (crit <= tau) {
                    CHECK(e <= 1e-6);
                } else {
                    CHECK(e > 1e-6);
                }
            }
        }
    }
}

TEST_CASE("exchangeable solve matches the full-table fit") {
    for (int L : {2, 3}) {
        for (double w : {0.3, 0.5, 0.6}) {
            for (double tau : {0.02, 0.1}) {
                double tilt = rc_exponent(L, w, tau).exponent;
                double ipf = rc_exponent_full_table(L, w, tau);
                CHECK(tilt == doctest::Approx(ipf).epsilon(1e-6));
            }
        }
    }
    // inactive constraint: both spot the product measure
    CHECK(rc_exponent_full_table(2, 0.5, 0.3) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("exponent shrinks to zero toward the critical fraction") {
    double w3 = 1.0 / std::sqrt(3.0);
    double prev = 1e9;
    for (double tau : {0.30, 0.34, 0.37, 0.384}) {
        double e = rc_exponent(3, w3, tau).exponent;
        CHECK(e > 0.0);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < 1e-4);
    CHECK(rc_exponent(3, w3, 0.3849 + 1e-3).exponent == 0.0);
}

TEST_CASE("lower rate sits under the upper curve") {
    CHECK(rc_lower_bound(2, 0.5, 0.2) == doctest::Approx(0.0290494).epsilon(1e-5));
    CHECK(rc_lower_bound(2, 0.5, 0.26) == 0.0);

    for (double w : {0.35, 0.5, 0.65}) {
        for (double tau : {0.05, 0.1, 0.15, 0.2}) {
            double upper = eb_upper_bound(2, w, tau, 48).value;
            double lower = rc_lower_bound(2, w, tau);
            CHECK(lower >= 0.0);
            CHECK(upper >= lower - 1e-9);
            double crit = w - w * w;
            if (tau >= crit) {
                CHECK(upper == 0.0);
                CHECK(lower == 0.0);
            }
        }
    }
}

TEST_CASE("large-list rate curve") {
    CHECK(cld(0.6, 0.2) == doctest::Approx(0.4199731).epsilon(1e-6));
    CHECK(cld(0.5, 0.1) == doctest::Approx(0.6099865).epsilon(1e-6));

    for (double w : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(cld(w, 0.0) == binary_entropy(w));
        CHECK(cld(w, w) == 0.0);
    }

    // decreasing in tau, maximized over w at (1+tau)/2
    double prev = 1e9;
    for (double tau : {0.0, 0.05, 0.1, 0.2, 0.3, 0.5}) {
        double c = cld(0.6, std::min(tau, 0.6));
        CHECK(c < prev + 1e-15);
        prev = c;
    }
    CHECK(cld(0.6, 0.2) >= cld(0.59, 0.2));
    CHECK(cld(0.6, 0.2) >= cld(0.61, 0.2));

    // dominates the finite-list lower rates at a shared point
    for (int L = 2; L <= 8; ++L) {
        CHECK(cld(0.5, 0.1) >= rc_lower_bound(L, 0.5, 0.1) - 1e-9);
    }

    CHECK_THROWS_AS(cld(0.5, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(cld(1.2, 0.1), std::invalid_argument);
}

TEST_CASE("stochastic erasing rate") {
    for (double w : {0.2, 0.5, 0.8}) {
        CHECK(stochastic_capacity(w, 0.0) == binary_entropy(w));
    }
    CHECK(stochastic_capacity(0.4, 0.5) ==
          doctest::Approx(binary_entropy(0.2) - 0.4).epsilon(1e-14));
    CHECK(stochastic_capacity(0.4, 0.5) == doctest::Approx(0.3219281).epsilon(1e-6));
    CHECK(stochastic_capacity(0.5, 0.5) == doctest::Approx(0.3112781).epsilon(1e-6));

    CHECK(stochastic_optimal_weight(0.5) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(stochastic_optimal_weight(0.0) == 0.5);

    // the optimal weight beats its neighbors
    for (double tau : {0.1, 0.3, 0.5, 0.7}) {
        double wopt = stochastic_optimal_weight(tau);
        double best = stochastic_capacity_opt(tau);
        CHECK(best == doctest::Approx(stochastic_capacity(wopt, tau)).epsilon(1e-14));
        for (double w = 0.05; w < 1.0; w += 0.05) {
            CHECK(best >= stochastic_capacity(w, tau) - 1e-12);
        }
    }
    CHECK(stochastic_capacity_opt(0.0) == 1.0);
    CHECK_THROWS_AS(stochastic_optimal_weight(1.0), std::invalid_argument);
}

TEST_CASE("sampled list growth above the rate curve") {
    // a random code of rate cld + delta: the number of codewords containing a
    // fixed weight-n(w-tau) word should track its exact expectation
    CldUpperProbe probe = cld_mc_upper(0.5, 0.25, 16, 400, 0.15, 7);
    CHECK(probe.code_size == 167);
    double sigma = std::sqrt(probe.expected_count / 400.0);
    CHECK(std::abs(probe.mean_count - probe.expected_count) < 5.0 * sigma);

    // the count grows with n at a rate compatible with delta
    CldUpperProbe p12 = cld_mc_upper(0.5, 0.25, 12, 400, 0.15, 7);
    CldUpperProbe p20 = cld_mc_upper(0.5, 0.25, 20, 400, 0.15, 7);
    double slope = (std::log2(p20.mean_count) - std::log2(p12.mean_count)) / 8.0;
    CHECK(slope > 0.15 / 2.0);
    CHECK(slope < 2.0 * 0.15);

    // tau = 0: only the codewords equal to the received word count
    CldUpperProbe same = cld_mc_upper(0.5, 0.0, 12, 50, 0.0, 3);
    CHECK(same.code_size == 4096);
    CHECK(same.expected_count == doctest::Approx(4096.0 / 924.0).epsilon(1e-12));
    double sig0 = std::sqrt(same.expected_count / 50.0);
    CHECK(std::abs(same.mean_count - same.expected_count) < 5.0 * sig0);

    CHECK_THROWS_AS(cld_mc_upper(0.5, 0.25, 0, 10, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cld_mc_upper(0.5, 0.25, 16, 0, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cld_mc_upper(0.5, 0.6, 16, 10, 0.1, 1), std::invalid_argument);
}

TEST_CASE("sampled list stays small below the rate curve") {
    CldLowerProbe probe = cld_mc_lower(0.5, 0.2, 20, 0.15, 9);
    CHECK(probe.code_size == 30);
    CHECK(probe.list_threshold == doctest::Approx(1.0 / 0.15));
    CHECK(probe.max_list >= 1);
    CHECK(probe.ok);
    CHECK((probe.max_list < probe.list_threshold) == probe.ok);

    CHECK_THROWS_AS(cld_mc_lower(0.5, 0.2, 30, 0.15, 1), std::invalid_argument);
    CHECK_THROWS_AS(cld_mc_lower(0.5, 0.2, 20, 0.0, 1), std::invalid_argument);
}
