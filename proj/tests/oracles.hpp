#pragma once

// Independent brute-force oracles. Nothing here calls into the library's
// search or counting code; the tests compare the two.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::uint32_t rotate(std::uint32_t mask, unsigned t, unsigned m) {
  const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  t %= m;
  if (t == 0) return mask;
  return ((mask << t) | (mask >> (m - t))) & full;
}

// Least translate of the residue mask; translating residues leaves L(m) unchanged.
inline std::uint32_t normalize(std::uint32_t mask, unsigned m) {
  std::uint32_t best = mask;
  for (unsigned t = 1; t < m; ++t) best = std::min(best, rotate(mask, t, m));
  return best;
}

// Minimum number of translates covering Z_m, m <= 20. Translating a cover
// keeps it a cover, so one translate can be taken to be 0.
inline unsigned min_cover(std::uint32_t residue_mask, unsigned m) {
  static std::map<std::pair<unsigned, std::uint32_t>, unsigned> cache;
  const std::uint32_t key = normalize(residue_mask, m);
  if (auto it = cache.find({m, key}); it != cache.end()) return it->second;

  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::uint32_t> shifted(m);
  for (unsigned t = 0; t < m; ++t) shifted[t] = rotate(key, t, m);

  unsigned answer = m;
  for (unsigned l = 1; l <= m && answer == m; ++l) {
    // subsets of {1..m-1} of size l-1, by Gosper's hack
    const unsigned free_bits = m - 1;
    const unsigned pick = l - 1;
    if (pick == 0) {
      if (shifted[0] == full) answer = 1;
      continue;
    }
    std::uint32_t s = (1u << pick) - 1;
    while (s < (1u << free_bits)) {
      std::uint32_t cov = shifted[0];
      for (std::uint32_t bits = s; bits; bits &= bits - 1) cov |= shifted[std::countr_zero(bits) + 1];
      if (cov == full) {
        answer = l;
        break;
      }
      const std::uint32_t c = s & -s;
      const std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  cache[{m, key}] = answer;
  return answer;
}

struct BlockSpec {
  std::int64_t a;
  std::vector<std::int64_t> u;
  std::int64_t j_min;
  std::int64_t j_max;
};

// Every element of B <= limit, straight from the block definition.
inline std::set<std::int64_t> enumerate_b(const std::vector<BlockSpec>& blocks, std::int64_t limit) {
  std::set<std::int64_t> out;
  for (const auto& b : blocks) {
    for (std::int64_t j = b.j_min; j <= b.j_max; ++j) {
      for (std::int64_t u : b.u) {
        const std::int64_t v = u + j * b.a;
        if (v <= limit) out.insert(v);
      }
    }
  }
  return out;
}

// Lemma quantities by direct pair enumeration.
struct LemmaSides {
  std::int64_t lhs;
  std::int64_t rhs_times_u;  // |U| * rhs, an integer
};

inline LemmaSides lemma_sides(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
  std::map<std::int64_t, std::int64_t> sums, diffs;
  for (auto x : u)
    for (auto y : v) {
      ++sums[x + y];
      ++diffs[y - x];
    }
  LemmaSides s{0, 0};
  for (auto [n, c] : sums)
    if (c > 1) s.lhs += c - 1;
  for (auto [n, c] : diffs)
    if (c > 1) s.rhs_times_u += c - 1;
  return s;
}

}  // namespace oracle
