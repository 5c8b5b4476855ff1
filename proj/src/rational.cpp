#include "fairhouse/rational.hpp"

#include <cctype>
#include <limits>

namespace fairhouse {
namespace {

std::optional<BigInt> parse_digits(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  BigInt out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_digits(text.substr(0, slash));
    auto den = parse_digits(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    value = Rational(*num, *den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    auto whole = int_part.empty() ? std::optional<BigInt>(0) : parse_digits(int_part);
    auto frac = frac_part.empty() ? std::optional<BigInt>(0) : parse_digits(frac_part);
    if (!whole || !frac) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(*whole) + Rational(*frac, scale);
  } else {
    auto whole = parse_digits(text);
    if (!whole) return std::nullopt;
    value = Rational(*whole);
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  BigInt rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  // Terminating decimal: scale to a power of ten.
  int digits = std::max(twos, fives);
  BigInt pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  BigInt scaled = num * (pow10 / den);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + s : s;
}

BigInt lcm_of_denominators(const Rational* first, const Rational* last) {
  BigInt out = 1;
  for (; first != last; ++first) {
    BigInt den = boost::multiprecision::denominator(*first);
    out = boost::multiprecision::lcm(out, den);
  }
  return out;
}

std::optional<std::int64_t> to_int64(const Rational& value) {
  if (boost::multiprecision::denominator(value) != 1) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(value);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(num);
}

}  // namespace fairhouse
