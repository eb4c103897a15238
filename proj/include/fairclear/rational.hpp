#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fairclear {

// Exact arbitrary-precision rational.  cpp_rational keeps values canonical
// (reduced, positive denominator), which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer ratNum(const Rational& r) { return numerator(r); }
inline Integer ratDen(const Rational& r) { return denominator(r); }

inline std::string ratToString(const Rational& r) {
    if (ratDen(r) == 1) return ratNum(r).str();
    return ratNum(r).str() + "/" + ratDen(r).str();
}

// Parses "n", "-n", or "n/d" (optionally signed numerator).  Returns nullopt
// on malformed text or zero denominator.
std::optional<Rational> ratFromString(const std::string& s);

}  // namespace fairclear
