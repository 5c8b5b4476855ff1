#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace fairhouse {

// Arbitrary-precision exact rational. Expression templates are disabled so
// the type behaves like a plain value inside Eigen containers.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Parses "p/q", a plain integer, or a decimal such as "0.125" into an exact
// rational. Returns nullopt on malformed text. A leading '-' is accepted so
// that callers can report negativity separately from syntax.
std::optional<Rational> parse_rational(std::string_view text);

// Integer when the denominator is 1, a terminating decimal when the
// denominator has no prime factors other than 2 and 5, otherwise "p/q".
std::string format_rational(const Rational& value);

BigInt lcm_of_denominators(const Rational* first, const Rational* last);

// Exact conversion to int64 when the value is integral and in range.
std::optional<std::int64_t> to_int64(const Rational& value);

inline double to_double(const Rational& value) {
  return static_cast<double>(value);
}

}  // namespace fairhouse

namespace Eigen {

template <>
struct NumTraits<fairhouse::Rational>
    : GenericNumTraits<fairhouse::Rational> {
  using Real = fairhouse::Rational;
  using NonInteger = fairhouse::Rational;
  using Literal = fairhouse::Rational;
  using Nested = fairhouse::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
