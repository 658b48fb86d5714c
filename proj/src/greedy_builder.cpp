#include "addcomp/greedy_builder.hpp"

namespace addcomp {

LevelLadder level_ladder(const Sequence& seq) {
  LevelLadder ladder;
  if (seq.size() < 2) return ladder;
  BigInt n = 2;
  for (std::size_t k = 1; n <= seq.size(); ++k) {
    const auto idx = static_cast<std::size_t>(n);
    Level level{k, n, std::nullopt};
    if (idx + 1 <= seq.size()) level.x = seq.term(idx + 1);
    ladder.levels.push_back(level);
    n = seq.term(idx);
  }
  return ladder;
}

GreedyState::GreedyState(GrowthRule rule, int growth_exponent)
    : rule_(rule), exponent_(growth_exponent), terms_{BigInt(1), BigInt(4)}, ladder_{BigInt(2)} {
  enter_level_if_complete();
}

// Once a_1 .. a_{n_k} exist, the next modulus is n_{k+1} = a_{n_k}; the
// residues of all stored terms are distinct modulo it because they lie in
// [1, a_{n_k}].
void GreedyState::enter_level_if_complete() {
  if (ladder_.back() != terms_.size()) return;
  modulus_ = terms_.back();
  ladder_.push_back(modulus_);
  used_.clear();
  for (const auto& a : terms_) used_.insert(a % modulus_);
  cursor_ = 0;
}

const BigInt& GreedyState::next_term() {
  const std::size_t m = terms_.size();
  while (used_.count(cursor_) != 0) ++cursor_;
  if (cursor_ >= modulus_) {
    throw Error(ErrorKind::precondition, "no unused residue left modulo " + to_decimal(modulus_));
  }
  BigInt power = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(exponent_));
  BigInt floor_value = growth_factor(rule_, m) * power * terms_.back() + 1;
  BigInt next = floor_value + mod_floor(cursor_ - floor_value, modulus_);
  used_.insert(cursor_);
  terms_.push_back(std::move(next));
  enter_level_if_complete();
  return terms_.back();
}

namespace {

BuildResult finish(const GreedyState& state) {
  Sequence seq = state.sequence();
  LevelLadder ladder = level_ladder(seq);
  return BuildResult{std::move(seq), std::move(ladder)};
}

}  // namespace

BuildResult build_terms(std::size_t count, GrowthRule rule, const BuildLimits& limits,
                        int growth_exponent) {
  if (count < 2) throw Error(ErrorKind::precondition, "the construction starts from two seed terms");
  if (count > limits.max_terms) {
    throw Error(ErrorKind::cap, std::to_string(count) + " terms requested, cap is " +
                                    std::to_string(limits.max_terms));
  }
  GreedyState state(rule, growth_exponent);
  while (state.terms().size() < count) state.next_term();
  return finish(state);
}

BuildResult build_sequence(std::size_t levels, GrowthRule rule, const BuildLimits& limits,
                           int growth_exponent) {
  if (levels < 1) throw Error(ErrorKind::precondition, "at least one level is required");
  GreedyState state(rule, growth_exponent);
  // ladder()[K-1] is n_K; it becomes known once level K-1 is complete.
  while (state.ladder().size() < levels ||
         state.terms().size() < state.ladder()[levels - 1]) {
    if (state.ladder().size() >= levels) {
      const BigInt& target = state.ladder()[levels - 1];
      if (target > limits.max_terms) {
        throw Error(ErrorKind::cap, "level " + std::to_string(levels) + " needs " + to_decimal(target) +
                                        " terms, cap is " + std::to_string(limits.max_terms));
      }
    }
    if (state.terms().size() >= limits.max_terms) {
      throw Error(ErrorKind::cap, "term cap " + std::to_string(limits.max_terms) + " reached");
    }
    state.next_term();
  }
  return finish(state);
}

}  // namespace addcomp
