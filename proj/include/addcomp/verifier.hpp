#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "addcomp/bigint.hpp"
#include "addcomp/complement.hpp"
#include "addcomp/sequence.hpp"

namespace addcomp {

struct CoverageReport {
  BigInt limit;              // X
  BigInt threshold;          // N0: every n in [N0, X] is some a + b
  std::vector<BigInt> gaps;  // uncovered n in [1, X], all below N0
};

// Bit sieve of A + B over [1, X]. Gaps above the truncation bound cannot be
// trusted (later blocks would add sums there) and raise a span error.
CoverageReport sumset_coverage(const Sequence& seq, const ComplementBlocks& blocks, const BigInt& limit,
                               std::uint64_t sieve_cap = 100'000'000);

// Some (a, b) with a in A, b in B, a + b = n, if one exists.
std::optional<std::pair<BigInt, BigInt>> coverage_witness(const Sequence& seq, const ComplementBlocks& blocks,
                                                          const BigInt& n);

// Windowed pair statistics: a, b <= x.
struct PairStats {
  BigInt x;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;
  std::map<std::int64_t, std::uint64_t> sigma;  // n -> #{a + b = n}
  std::map<std::int64_t, std::uint64_t> delta;  // n -> #{b - a = n}
};

PairStats pair_stats(std::span<const BigInt> a_terms, std::span<const BigInt> b_members, const BigInt& x,
                     std::uint64_t enum_cap = 10'000'000);

// Unwindowed sum/difference excess of finite sets U, V:
//   lhs = sum_{sigma(n) > 1} (sigma(n) - 1),  rhs = (1/|U|) sum_{delta(n) > 1} (delta(n) - 1).
struct LemmaCheck {
  std::uint64_t lhs = 0;
  Rational rhs;
  bool holds = false;
};

LemmaCheck lemma_check(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

struct LemmaTally {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
};

// Every pair of nonempty subsets of {1, ..., max_element}.
LemmaTally lemma_exhaustive(int max_element);
// `pairs` random pairs of nonempty subsets of {1, ..., max_element}.
LemmaTally lemma_random(std::uint64_t pairs, int max_element, std::uint64_t seed);

struct CriterionReport {
  BigInt x;
  BigInt a_count;
  BigInt b_count;
  BigInt a_star;
  Rational excess;                     // A(x)B(x) - x - a*(x)/A(x)
  Rational scale;                      // a*(x)/A(x)^2
  std::optional<Rational> normalized;  // excess / scale
  Rational exactness;                  // A(x)B(x)/x
};

// Requires a_1 <= x <= truncation_bound(seq, blocks).
CriterionReport criterion(const Sequence& seq, const ComplementBlocks& blocks, const BigInt& x);

// Sorted by x, duplicates removed.
std::vector<CriterionReport> criterion_sweep(const Sequence& seq, const ComplementBlocks& blocks,
                                             std::vector<BigInt> points);

// Ladder points x_k and block starts q_k a_k that lie in the safe window.
std::vector<BigInt> default_sweep_points(const Sequence& seq, const ComplementBlocks& blocks);

struct TrendStep {
  std::size_t level = 0;  // compares x_level with x_{level+1}
  BigInt from_x;
  BigInt to_x;
  Rational from_r;
  Rational to_r;
  bool decreasing = false;
};

// Consecutive ladder points x_k present among the reports.
std::vector<TrendStep> ladder_trend(const Sequence& seq, const std::vector<CriterionReport>& reports);

// x,A,B,a_star,T_num,T_den,scale_num,scale_den,R_num,R_den,exactness_num,exactness_den
std::string criterion_csv(const std::vector<CriterionReport>& reports);

}  // namespace addcomp
