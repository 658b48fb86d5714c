#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind { parse, cap, precondition, span };

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the four categories the
// CLI reports on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Decimal digits only, optional leading '-'. Throws ErrorKind::parse.
BigInt parse_bigint(std::string_view text);
std::string to_decimal(const BigInt& value);

// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& value);

BigInt numerator_of(const Rational& value);
BigInt denominator_of(const Rational& value);

// Floor division for b > 0; correct for negative a.
BigInt floor_div(const BigInt& a, const BigInt& b);
// Least nonnegative residue of a modulo b > 0.
BigInt mod_floor(const BigInt& a, const BigInt& b);

// Narrowing with a cap error when the value does not fit.
std::uint64_t to_u64(const BigInt& value, std::string_view what);
std::int64_t to_i64(const BigInt& value, std::string_view what);

// Nearest double; used only for plotting.
double to_double(const Rational& value);

}  // namespace addcomp
