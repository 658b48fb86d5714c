#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "addcomp/bigint.hpp"

namespace addcomp {

// The divergent factor f(m) in the growth requirement a_{m+1} >= f(m) m^e a_m.
enum class GrowthRule { linear, quadratic, exponential };

std::string_view growth_rule_name(GrowthRule rule);
GrowthRule parse_growth_rule(std::string_view name);
BigInt growth_factor(GrowthRule rule, std::size_t m);

// Finite prefix a_1 < a_2 < ... < a_N of an increasing integer sequence.
//
// The constructor enforces strict increase, positivity, and the growth
// requirement for every consecutive pair. Counting queries are exact on
// [1, a_N] and rejected above it: nothing past the stored prefix is
// extrapolated.
class Sequence {
 public:
  explicit Sequence(std::vector<BigInt> terms, int growth_exponent = 4,
                    GrowthRule rule = GrowthRule::linear);

  const std::vector<BigInt>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // One-based, matching a_1, a_2, ...
  const BigInt& term(std::size_t index) const;
  const BigInt& back() const { return terms_.back(); }

  int growth_exponent() const noexcept { return growth_exponent_; }
  GrowthRule growth_rule() const noexcept { return rule_; }

  // f(m) * m^e * a_m, the value a_{m+1} must reach.
  BigInt growth_threshold(std::size_t m) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<BigInt> terms_;
  int growth_exponent_;
  GrowthRule rule_;
};

// A(x) = |{i : a_i <= x}|. Span error when x exceeds the last stored term,
// precondition error when x < 1.
std::size_t count(const Sequence& seq, const BigInt& x);

// a*(x) = max{a_i <= x}. Precondition error when x < a_1.
BigInt largest_le(const Sequence& seq, const BigInt& x);

struct GrowthRatio {
  std::size_t m;
  Rational linear;  // a_{m+1} / (m a_m)
  Rational scaled;  // a_{m+1} / (m^e a_m)
};

std::vector<GrowthRatio> growth_ratios(const Sequence& seq);

struct CountingSnapshot {
  BigInt x;
  std::size_t a_count = 0;
  std::optional<BigInt> a_star;
  std::optional<BigInt> b_count;
};

CountingSnapshot snapshot(const Sequence& seq, const BigInt& x);

}  // namespace addcomp
