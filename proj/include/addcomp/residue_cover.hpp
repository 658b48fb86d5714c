#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "addcomp/bigint.hpp"

namespace addcomp {

// How a cover was obtained: a proven minimum, a heuristic upper bound, or the
// arithmetic-progression construction used at ladder moduli.
enum class CoverKind { exact_minimum, upper_bound, structured };

std::string_view cover_kind_name(CoverKind kind);

// Residues mod m of a finite element list, together with the number k of
// elements behind them (distinct elements may share a residue).
struct CoverInstance {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues;  // sorted, distinct, each < modulus
  std::size_t k = 0;

  static CoverInstance from_elements(const BigInt& modulus, std::span<const BigInt> elements);
  static CoverInstance from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues,
                                    std::size_t k);
};

struct CoverSolution {
  std::vector<std::uint64_t> translates;  // sorted ascending, each in [0, m)
  CoverKind kind = CoverKind::upper_bound;

  std::size_t size() const noexcept { return translates.size(); }
};

struct CoverCheck {
  bool complete = false;
  std::vector<std::uint64_t> uncovered;  // sorted
};

struct ExactSearchLimits {
  std::uint64_t modulus_cap = std::uint64_t{1} << 14;
  // Search nodes across both phases before giving up with a cap error.
  std::uint64_t node_limit = 50'000'000;
};

// Translates are ordered by their representative in [1, m], so residue 0
// sorts last; this matches block translates U_k taken from [1, a_k].
inline std::uint64_t translate_key(std::uint64_t t, std::uint64_t m) { return t == 0 ? m : t; }

// Minimum cover. Among all minimum covers, returns the one whose translate
// set is lexicographically least under translate_key.
CoverSolution cover_exact(const CoverInstance& inst, const ExactSearchLimits& limits = {});

// Repeatedly takes the translate covering the most uncovered residues,
// breaking ties by the smallest translate value.
CoverSolution cover_greedy(const CoverInstance& inst);

// Translates {j n mod m : 1 <= j <= ceil(m/n)}, repaired greedily by at most
// extras_cap further translates (default ceil(k/2) + 2) when gaps remain.
// The element representatives in [1, m] must cover every class mod n.
CoverSolution cover_structured(std::uint64_t n, const CoverInstance& inst,
                               std::optional<std::size_t> extras_cap = std::nullopt);

std::size_t default_extras_cap(const CoverInstance& inst);

CoverCheck cover_validate(const CoverInstance& inst, std::span<const std::uint64_t> translates);

// k * l / m; at least 1 for every valid cover.
Rational covering_ratio(const CoverInstance& inst, const CoverSolution& solution);

}  // namespace addcomp
