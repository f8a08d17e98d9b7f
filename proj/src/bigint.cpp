#include "closefact/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace closefact {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer literal: " + std::string(text));
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  BigInt v(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-v) : v;
}

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    return std::nullopt;
  return static_cast<std::int64_t>(v);
}

std::optional<std::uint64_t> to_uint64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace closefact
