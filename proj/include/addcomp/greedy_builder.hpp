#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "addcomp/bigint.hpp"
#include "addcomp/sequence.hpp"

namespace addcomp {

struct Level {
  std::size_t k = 0;
  BigInt n;                // n_1 = 2, n_{k+1} = a_{n_k}
  std::optional<BigInt> x; // a_{n_k + 1}, once built
};

struct LevelLadder {
  std::vector<Level> levels;
};

// Levels whose n_k lies within the stored prefix.
LevelLadder level_ladder(const Sequence& seq);

struct BuildLimits {
  // Level three alone needs 31591 terms of ~10^5 digits; raise deliberately.
  std::size_t max_terms = 64;
};

// Incremental state of the greedy construction: seeds a_1 = 1, a_2 = 4, then
// each new term is the least integer above f(m) m^e a_m whose residue modulo
// the current ladder modulus is the smallest one not yet taken.
class GreedyState {
 public:
  explicit GreedyState(GrowthRule rule = GrowthRule::linear, int growth_exponent = 4);

  const std::vector<BigInt>& terms() const noexcept { return terms_; }
  const BigInt& target_modulus() const noexcept { return modulus_; }
  const std::set<BigInt>& used_residues() const noexcept { return used_; }
  // n_1, n_2, ... as far as they are determined by the stored terms.
  const std::vector<BigInt>& ladder() const noexcept { return ladder_; }

  // Appends and returns a_{N+1}.
  const BigInt& next_term();

  Sequence sequence() const { return Sequence(terms_, exponent_, rule_); }

 private:
  void enter_level_if_complete();

  GrowthRule rule_;
  int exponent_;
  std::vector<BigInt> terms_;
  std::vector<BigInt> ladder_;
  BigInt modulus_;
  std::set<BigInt> used_;
  BigInt cursor_;
};

struct BuildResult {
  Sequence seq;
  LevelLadder ladder;
};

// Terms a_1 .. a_{n_K}: every level up to K complete.
BuildResult build_sequence(std::size_t levels, GrowthRule rule = GrowthRule::linear,
                           const BuildLimits& limits = {}, int growth_exponent = 4);

// Exactly `count` terms (count >= 2).
BuildResult build_terms(std::size_t count, GrowthRule rule = GrowthRule::linear,
                        const BuildLimits& limits = {}, int growth_exponent = 4);

}  // namespace addcomp
