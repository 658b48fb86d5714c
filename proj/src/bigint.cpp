#include "addcomp/bigint.hpp"

#include <limits>

namespace addcomp {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return "parse";
    case ErrorKind::cap:
      return "cap";
    case ErrorKind::precondition:
      return "precondition";
    case ErrorKind::span:
      return "span";
  }
  return "unknown";
}

BigInt parse_bigint(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) {
    throw Error(ErrorKind::parse, "empty integer literal");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::parse, "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt numerator_of(const Rational& value) {
  return boost::multiprecision::numerator(value);
}

BigInt denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

std::string to_string(const Rational& value) {
  BigInt den = denominator_of(value);
  if (den == 1) return to_decimal(numerator_of(value));
  return to_decimal(numerator_of(value)) + "/" + to_decimal(den);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt r = a % b;
  if (r < 0) r += b;
  return r;
}

std::uint64_t to_u64(const BigInt& value, std::string_view what) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::cap, std::string(what) + " does not fit in 64 bits: " + to_decimal(value));
  }
  return static_cast<std::uint64_t>(value);
}

std::int64_t to_i64(const BigInt& value, std::string_view what) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorKind::cap, std::string(what) + " does not fit in 64 bits: " + to_decimal(value));
  }
  return static_cast<std::int64_t>(value);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace addcomp
