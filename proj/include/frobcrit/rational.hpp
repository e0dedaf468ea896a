#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed `int == rational` recurses forever under C++20's
// reversed-operator rules. These overloads win overload resolution.
namespace boost {
template <class I>
constexpr bool operator==(int b, const rational<I>& a) { return a.operator==(b); }
template <class I>
constexpr bool operator==(long b, const rational<I>& a) { return a.operator==(b); }
template <class I>
constexpr bool operator==(long long b, const rational<I>& a) { return a.operator==(b); }
}  // namespace boost

namespace frobcrit {

using Rational = boost::rational<std::int64_t>;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Canonical text form: "a" when the denominator is 1, otherwise "a/b"
/// in lowest terms with b > 0.
std::string to_string(const Rational& q);

/// Accepts "a", "a/b", optionally signed. Throws frobcrit::Error on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::int64_t ceil(const Rational& q);
bool is_integral(const Rational& q);

inline RatVec to_rational(const IntVec& v) {
  return RatVec(v.begin(), v.end());
}

}  // namespace frobcrit
