#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace closefact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses an optionally signed decimal integer. Throws std::invalid_argument
// on anything else (including empty input and embedded whitespace).
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v);

// Narrowing helpers; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const BigInt& v);
std::optional<std::uint64_t> to_uint64(const BigInt& v);

}  // namespace closefact
