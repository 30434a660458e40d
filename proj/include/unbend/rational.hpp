#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace unbend {

/// Exact arbitrary-precision rational number.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

using RationalVector = std::vector<Rational>;

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

/// Numerator as a 64-bit integer; throws std::overflow_error if it does not fit.
inline std::int64_t numerator_i64(const Rational& r) {
    const auto n = boost::multiprecision::numerator(r);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational numerator exceeds 64 bits");
    return static_cast<std::int64_t>(n);
}

inline std::int64_t denominator_i64(const Rational& r) {
    const auto d = boost::multiprecision::denominator(r);
    if (d > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational denominator exceeds 64 bits");
    return static_cast<std::int64_t>(d);
}

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace unbend
