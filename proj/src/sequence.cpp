#include "addcomp/sequence.hpp"

#include <algorithm>

namespace addcomp {

std::string_view growth_rule_name(GrowthRule rule) {
  switch (rule) {
    case GrowthRule::linear:
      return "linear";
    case GrowthRule::quadratic:
      return "quadratic";
    case GrowthRule::exponential:
      return "exponential";
  }
  return "linear";
}

GrowthRule parse_growth_rule(std::string_view name) {
  if (name == "linear") return GrowthRule::linear;
  if (name == "quadratic") return GrowthRule::quadratic;
  if (name == "exponential") return GrowthRule::exponential;
  throw Error(ErrorKind::parse, "unknown growth rule '" + std::string(name) +
                                    "' (expected linear, quadratic or exponential)");
}

BigInt growth_factor(GrowthRule rule, std::size_t m) {
  BigInt mm = m;
  switch (rule) {
    case GrowthRule::linear:
      return mm;
    case GrowthRule::quadratic:
      return mm * mm;
    case GrowthRule::exponential:
      return BigInt(1) << m;
  }
  return mm;
}

Sequence::Sequence(std::vector<BigInt> terms, int growth_exponent, GrowthRule rule)
    : terms_(std::move(terms)), growth_exponent_(growth_exponent), rule_(rule) {
  if (growth_exponent_ < 0) {
    throw Error(ErrorKind::precondition, "growth exponent must be nonnegative");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1) {
      throw Error(ErrorKind::precondition, "term a_" + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && terms_[i] <= terms_[i - 1]) {
      throw Error(ErrorKind::precondition,
                  "terms not strictly increasing at a_" + std::to_string(i + 1));
    }
  }
  for (std::size_t m = 1; m < terms_.size(); ++m) {
    if (terms_[m] < growth_threshold(m)) {
      throw Error(ErrorKind::precondition,
                  "growth requirement fails between a_" + std::to_string(m) + " and a_" +
                      std::to_string(m + 1));
    }
  }
}

const BigInt& Sequence::term(std::size_t index) const {
  if (index < 1 || index > terms_.size()) {
    throw Error(ErrorKind::span, "term a_" + std::to_string(index) + " is not stored (N = " +
                                     std::to_string(terms_.size()) + ")");
  }
  return terms_[index - 1];
}

BigInt Sequence::growth_threshold(std::size_t m) const {
  BigInt power = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(growth_exponent_));
  return growth_factor(rule_, m) * power * term(m);
}

std::size_t count(const Sequence& seq, const BigInt& x) {
  if (x < 1) throw Error(ErrorKind::precondition, "count requires x >= 1");
  if (seq.empty() || x > seq.back()) {
    throw Error(ErrorKind::span, "x = " + to_decimal(x) + " lies beyond the stored prefix");
  }
  const auto& t = seq.terms();
  return static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), x) - t.begin());
}

BigInt largest_le(const Sequence& seq, const BigInt& x) {
  if (seq.empty() || x < seq.terms().front()) {
    throw Error(ErrorKind::precondition, "no term is <= " + to_decimal(x));
  }
  return seq.term(count(seq, x));
}

std::vector<GrowthRatio> growth_ratios(const Sequence& seq) {
  if (seq.size() < 2) {
    throw Error(ErrorKind::precondition, "growth ratios need at least two terms");
  }
  std::vector<GrowthRatio> out;
  out.reserve(seq.size() - 1);
  const auto e = static_cast<unsigned>(seq.growth_exponent());
  for (std::size_t m = 1; m < seq.size(); ++m) {
    BigInt bm = m;
    Rational next(seq.term(m + 1));
    out.push_back({m, next / Rational(bm * seq.term(m)),
                   next / Rational(boost::multiprecision::pow(bm, e) * seq.term(m))});
  }
  return out;
}

CountingSnapshot snapshot(const Sequence& seq, const BigInt& x) {
  CountingSnapshot s;
  s.x = x;
  s.a_count = count(seq, x);
  if (s.a_count > 0) s.a_star = seq.term(s.a_count);
  return s;
}

}  // namespace addcomp
