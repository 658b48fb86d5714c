#include "addcomp/verifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "addcomp/greedy_builder.hpp"

namespace addcomp {

CoverageReport sumset_coverage(const Sequence& seq, const ComplementBlocks& blocks, const BigInt& limit,
                               std::uint64_t sieve_cap) {
  if (limit < 1) throw Error(ErrorKind::precondition, "coverage limit must be positive");
  if (limit > sieve_cap) {
    throw Error(ErrorKind::cap, "coverage limit " + to_decimal(limit) + " exceeds the sieve cap " +
                                    std::to_string(sieve_cap));
  }
  if (limit > seq.back()) {
    throw Error(ErrorKind::span, "coverage limit lies beyond the stored sequence prefix");
  }
  const std::uint64_t X = to_u64(limit, "coverage limit");
  const BigInt trusted = truncation_bound(seq, blocks);

  std::vector<std::uint64_t> a_small;
  for (const auto& a : seq.terms()) {
    if (a > limit) break;
    a_small.push_back(static_cast<std::uint64_t>(a));
  }

  std::vector<std::uint64_t> bits(X / 64 + 1, 0);
  auto mark_sums = [&](std::uint64_t b) {
    for (std::uint64_t a : a_small) {
      std::uint64_t n = a + b;
      if (n > X) break;
      bits[n >> 6] |= std::uint64_t{1} << (n & 63);
    }
  };

  bool any_b = false;
  for (const auto& block : blocks.blocks()) {
    if (block.min_element() > limit) break;
    if (block.a > limit) {
      for (const auto& u : block.translates) {
        BigInt b = u + block.j_min * block.a;
        if (b > limit) break;
        any_b = true;
        mark_sums(static_cast<std::uint64_t>(b));
      }
      continue;
    }
    const auto a = static_cast<std::uint64_t>(block.a);
    const BigInt j_cap = std::min(block.j_max, BigInt(X / a));
    const auto j_lo = static_cast<std::uint64_t>(block.j_min);
    const auto j_hi = static_cast<std::uint64_t>(j_cap);
    std::vector<std::uint64_t> us;
    us.reserve(block.translates.size());
    for (const auto& u : block.translates) us.push_back(static_cast<std::uint64_t>(u));
    for (std::uint64_t j = j_lo; j <= j_hi; ++j) {
      const std::uint64_t base = j * a;
      for (std::uint64_t u : us) {
        if (base + u > X) break;
        any_b = true;
        mark_sums(base + u);
      }
    }
  }
  if (!any_b) {
    throw Error(ErrorKind::precondition, "no complement element lies in [1, " + to_decimal(limit) + "]");
  }

  CoverageReport report;
  report.limit = limit;
  for (std::uint64_t n = 1; n <= X; ++n) {
    if (((bits[n >> 6] >> (n & 63)) & 1U) == 0) report.gaps.emplace_back(n);
  }
  report.threshold = report.gaps.empty() ? BigInt(1) : report.gaps.back() + 1;
  if (!report.gaps.empty() && report.gaps.back() > trusted) {
    throw Error(ErrorKind::span, "uncovered " + to_decimal(report.gaps.back()) +
                                     " lies above the truncation bound " + to_decimal(trusted) +
                                     "; build more blocks");
  }
  return report;
}

std::optional<std::pair<BigInt, BigInt>> coverage_witness(const Sequence& seq, const ComplementBlocks& blocks,
                                                          const BigInt& n) {
  for (const auto& a : seq.terms()) {
    if (a >= n) break;
    if (blocks.contains(n - a)) return std::make_pair(a, n - a);
  }
  return std::nullopt;
}

PairStats pair_stats(std::span<const BigInt> a_terms, std::span<const BigInt> b_members, const BigInt& x,
                     std::uint64_t enum_cap) {
  std::vector<std::int64_t> as;
  std::vector<std::int64_t> bs;
  for (const auto& a : a_terms) {
    if (a <= x) as.push_back(to_i64(a, "element of A"));
  }
  for (const auto& b : b_members) {
    if (b <= x) bs.push_back(to_i64(b, "element of B"));
  }
  if (BigInt(as.size()) * bs.size() > enum_cap) {
    throw Error(ErrorKind::cap, "pair enumeration exceeds the cap " + std::to_string(enum_cap));
  }
  PairStats stats;
  stats.x = x;
  stats.a_count = as.size();
  stats.b_count = bs.size();
  for (std::int64_t a : as) {
    for (std::int64_t b : bs) {
      ++stats.sigma[a + b];
      ++stats.delta[b - a];
    }
  }
  return stats;
}

namespace {

std::vector<std::int64_t> distinct(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t excess(const std::map<std::int64_t, std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [n, c] : counts) {
    if (c > 1) total += c - 1;
  }
  return total;
}

std::vector<std::int64_t> subset_from_mask(std::uint64_t mask) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

LemmaCheck lemma_check(std::span<const std::int64_t> u_in, std::span<const std::int64_t> v_in) {
  const auto u = distinct(u_in);
  const auto v = distinct(v_in);
  if (u.empty() || v.empty()) throw Error(ErrorKind::precondition, "lemma check needs nonempty sets");
  std::map<std::int64_t, std::uint64_t> sums;
  std::map<std::int64_t, std::uint64_t> diffs;
  for (std::int64_t a : u) {
    for (std::int64_t b : v) {
      ++sums[a + b];
      ++diffs[b - a];
    }
  }
  LemmaCheck check;
  check.lhs = excess(sums);
  check.rhs = Rational(BigInt(excess(diffs)), BigInt(u.size()));
  check.holds = Rational(BigInt(check.lhs)) >= check.rhs;
  return check;
}

LemmaTally lemma_exhaustive(int max_element) {
  if (max_element < 1 || max_element > 10) {
    throw Error(ErrorKind::cap, "exhaustive lemma sweep supports 1 <= max <= 10");
  }
  const std::uint64_t limit = std::uint64_t{1} << max_element;
  std::vector<std::vector<std::int64_t>> subsets;
  for (std::uint64_t mask = 1; mask < limit; ++mask) subsets.push_back(subset_from_mask(mask));
  LemmaTally tally;
  for (const auto& u : subsets) {
    for (const auto& v : subsets) {
      ++tally.checked;
      if (lemma_check(u, v).holds) ++tally.held;
    }
  }
  return tally;
}

LemmaTally lemma_random(std::uint64_t pairs, int max_element, std::uint64_t seed) {
  if (max_element < 1 || max_element > 62) {
    throw Error(ErrorKind::cap, "random lemma sweep supports 1 <= max <= 62");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t limit = (std::uint64_t{1} << max_element) - 1;
  std::uniform_int_distribution<std::uint64_t> pick(1, limit);
  LemmaTally tally;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    auto u = subset_from_mask(pick(rng));
    auto v = subset_from_mask(pick(rng));
    ++tally.checked;
    if (lemma_check(u, v).holds) ++tally.held;
  }
  return tally;
}

CriterionReport criterion(const Sequence& seq, const ComplementBlocks& blocks, const BigInt& x) {
  const BigInt trusted = truncation_bound(seq, blocks);
  if (x > trusted) {
    throw Error(ErrorKind::span, "x = " + to_decimal(x) + " exceeds the truncation bound " + to_decimal(trusted));
  }
  CriterionReport r;
  r.x = x;
  r.a_star = largest_le(seq, x);
  r.a_count = count(seq, x);
  r.b_count = blocks.count(x);
  const BigInt product = r.a_count * r.b_count;
  r.excess = Rational(product - x) - Rational(r.a_star, r.a_count);
  r.scale = Rational(r.a_star, r.a_count * r.a_count);
  if (r.scale > 0) r.normalized = r.excess / r.scale;
  r.exactness = Rational(product, x);
  return r;
}

std::vector<CriterionReport> criterion_sweep(const Sequence& seq, const ComplementBlocks& blocks,
                                             std::vector<BigInt> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<CriterionReport> out;
  out.reserve(points.size());
  for (const auto& x : points) out.push_back(criterion(seq, blocks, x));
  return out;
}

std::vector<BigInt> default_sweep_points(const Sequence& seq, const ComplementBlocks& blocks) {
  const BigInt trusted = truncation_bound(seq, blocks);
  std::vector<BigInt> points;
  for (const auto& level : level_ladder(seq).levels) {
    if (level.x && *level.x <= trusted) points.push_back(*level.x);
  }
  for (std::size_t k = 1; k <= blocks.size(); ++k) {
    BigInt start = q_of(seq, k) * seq.term(k);
    if (start <= trusted) points.push_back(start);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<TrendStep> ladder_trend(const Sequence& seq, const std::vector<CriterionReport>& reports) {
  std::vector<std::pair<std::size_t, const CriterionReport*>> at_ladder;
  for (const auto& level : level_ladder(seq).levels) {
    if (!level.x) continue;
    auto it = std::find_if(reports.begin(), reports.end(),
                           [&](const CriterionReport& r) { return r.x == *level.x; });
    if (it != reports.end() && it->normalized) at_ladder.emplace_back(level.k, &*it);
  }
  std::vector<TrendStep> steps;
  for (std::size_t i = 0; i + 1 < at_ladder.size(); ++i) {
    const auto& [k, from] = at_ladder[i];
    const auto* to = at_ladder[i + 1].second;
    steps.push_back({k, from->x, to->x, *from->normalized, *to->normalized,
                     *to->normalized < *from->normalized});
  }
  return steps;
}

std::string criterion_csv(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  out << "x,A,B,a_star,T_num,T_den,scale_num,scale_den,R_num,R_den,exactness_num,exactness_den\n";
  for (const auto& r : reports) {
    out << r.x << ',' << r.a_count << ',' << r.b_count << ',' << r.a_star << ',' << numerator_of(r.excess) << ','
        << denominator_of(r.excess) << ',' << numerator_of(r.scale) << ',' << denominator_of(r.scale) << ',';
    if (r.normalized) {
      out << numerator_of(*r.normalized) << ',' << denominator_of(*r.normalized);
    } else {
      out << ',';
    }
    out << ',' << numerator_of(r.exactness) << ',' << denominator_of(r.exactness) << '\n';
  }
  return out.str();
}

}  // namespace addcomp
