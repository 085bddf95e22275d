// Exact rational arithmetic helpers shared by the solver and the oracle.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace vpgmis {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Formats as "p" for integers, "p/q" otherwise (canonical, q > 0).
inline std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p", "p/q", or a decimal literal like "-12.5e-3" into an exact rational.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace vpgmis
