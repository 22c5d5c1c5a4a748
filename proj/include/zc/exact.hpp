#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Binomial with an early-out cap: returns nullopt as soon as the exact value
// is known to exceed `cap`, so C(5000, 2500) never gets materialized.
inline std::optional<std::uint64_t> binomial_capped(std::int64_t n, std::int64_t k,
                                                    std::uint64_t cap) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
        // lower bound on the final value: remaining factors are all >= 1
        if (r > cap) return std::nullopt;
    }
    if (r > cap) return std::nullopt;
    return static_cast<std::uint64_t>(r);
}

inline BigInt falling_factorial(const BigInt& n, std::int64_t k) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < k; ++i) r *= n - i;
    return r;
}

inline BigInt pow_int(const BigInt& b, std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= b;
    return r;
}

// Smallest integer t with t >= r.
inline BigInt ceil_rat(const BigRat& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

// Parses "3/4", "0.25" or "2" into an exact rational.
inline BigRat parse_ratio(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("not a ratio: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) bad();
            return BigRat(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return BigRat(BigInt(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        BigInt den = pow_int(10, static_cast<std::int64_t>(s.size() - dot - 1));
        return BigRat(BigInt(digits), den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return BigRat(0);
}

inline std::string ratio_to_string(const BigRat& r) {
    std::string s = numerator(r).convert_to<std::string>();
    if (denominator(r) != 1) s += "/" + denominator(r).convert_to<std::string>();
    return s;
}

}  // namespace zc
