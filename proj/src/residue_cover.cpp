#include "addcomp/residue_cover.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace addcomp {

std::string_view cover_kind_name(CoverKind kind) {
  switch (kind) {
    case CoverKind::exact_minimum:
      return "exact-minimum";
    case CoverKind::upper_bound:
      return "upper-bound";
    case CoverKind::structured:
      return "structured";
  }
  return "upper-bound";
}

CoverInstance CoverInstance::from_residues(std::uint64_t modulus,
                                           std::vector<std::uint64_t> residues, std::size_t k) {
  if (modulus == 0) throw Error(ErrorKind::precondition, "modulus must be positive");
  if (residues.empty()) throw Error(ErrorKind::precondition, "residue set is empty");
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  if (residues.back() >= modulus) {
    throw Error(ErrorKind::precondition, "residue " + std::to_string(residues.back()) +
                                             " is not reduced mod " + std::to_string(modulus));
  }
  if (k < residues.size()) {
    throw Error(ErrorKind::precondition, "k is smaller than the number of distinct residues");
  }
  return CoverInstance{modulus, std::move(residues), k};
}

CoverInstance CoverInstance::from_elements(const BigInt& modulus, std::span<const BigInt> elements) {
  if (modulus < 1) throw Error(ErrorKind::precondition, "modulus must be positive");
  const std::uint64_t m = to_u64(modulus, "modulus");
  std::vector<std::uint64_t> residues;
  // only A ∩ [1, m] takes part
  for (const auto& e : elements) {
    if (e < 1) throw Error(ErrorKind::precondition, "elements must be positive");
    if (e <= modulus) residues.push_back(static_cast<std::uint64_t>(e % modulus));
  }
  const std::size_t k = residues.size();
  if (k == 0) throw Error(ErrorKind::precondition, "no element lies in [1, m]");
  return from_residues(m, std::move(residues), k);
}

CoverCheck cover_validate(const CoverInstance& inst, std::span<const std::uint64_t> translates) {
  const std::uint64_t m = inst.modulus;
  std::vector<char> hit(m, 0);
  for (std::uint64_t t : translates) {
    if (t >= m) {
      throw Error(ErrorKind::precondition, "translate " + std::to_string(t) + " is not reduced mod " +
                                               std::to_string(m));
    }
    for (std::uint64_t r : inst.residues) {
      std::uint64_t c = r + t;
      if (c >= m) c -= m;
      hit[c] = 1;
    }
  }
  CoverCheck check;
  for (std::uint64_t c = 0; c < m; ++c) {
    if (!hit[c]) check.uncovered.push_back(c);
  }
  check.complete = check.uncovered.empty();
  return check;
}

Rational covering_ratio(const CoverInstance& inst, const CoverSolution& solution) {
  return Rational(BigInt(inst.k) * solution.size(), BigInt(inst.modulus));
}

namespace {

template <typename Gain>
std::vector<std::uint64_t> greedy_cover(const CoverInstance& inst) {
  const std::uint64_t m = inst.modulus;
  const auto& R = inst.residues;
  std::vector<char> covered(m, 0);
  std::vector<Gain> gain(m, static_cast<Gain>(R.size()));
  std::uint64_t uncovered = m;
  std::vector<std::uint64_t> picked;

  auto take = [&](std::uint64_t t) {
    picked.push_back(t);
    for (std::uint64_t r : R) {
      std::uint64_t c = (t + r) % m;
      if (covered[c]) continue;
      covered[c] = 1;
      --uncovered;
      // Every translate that would have covered c loses one unit of gain.
      for (std::uint64_t r2 : R) --gain[(c + m - r2) % m];
    }
  };

  // Gains never increase, so one ascending pass per gain level visits the
  // smallest translate of maximal gain first.
  for (std::size_t level = R.size(); level >= 1 && uncovered > 0; --level) {
    for (std::uint64_t t = 0; t < m && uncovered > 0; ++t) {
      if (gain[t] == level) take(t);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

// Coverage state of the exact search, with an undo log.
class CoverState {
 public:
  explicit CoverState(const CoverInstance& inst)
      : inst_(inst), words_((inst.modulus + 63) / 64, 0), uncovered_(inst.modulus) {}

  std::uint64_t uncovered() const { return uncovered_; }

  bool test(std::uint64_t c) const { return (words_[c >> 6] >> (c & 63)) & 1U; }

  std::uint64_t first_uncovered() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t free = ~words_[w];
      if (free != 0) {
        std::uint64_t c = w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(free));
        if (c < inst_.modulus) return c;
      }
    }
    return inst_.modulus;
  }

  // Applies translate t; returns the number of residues newly covered.
  std::size_t apply(std::uint64_t t) {
    std::size_t added = 0;
    for (std::uint64_t r : inst_.residues) {
      std::uint64_t c = (t + r) % inst_.modulus;
      if (!test(c)) {
        words_[c >> 6] |= std::uint64_t{1} << (c & 63);
        log_.push_back(c);
        ++added;
      }
    }
    uncovered_ -= added;
    return added;
  }

  void undo(std::size_t added) {
    for (std::size_t i = 0; i < added; ++i) {
      std::uint64_t c = log_.back();
      log_.pop_back();
      words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
    }
    uncovered_ += added;
  }

  std::string key() const {
    return std::string(reinterpret_cast<const char*>(words_.data()), words_.size() * sizeof(std::uint64_t));
  }

 private:
  const CoverInstance& inst_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> log_;
  std::uint64_t uncovered_;
};

class ExactSearch {
 public:
  ExactSearch(const CoverInstance& inst, const ExactSearchLimits& limits)
      : inst_(inst), limits_(limits), state_(inst) {
    const std::size_t key_bytes = ((inst.modulus + 63) / 64) * sizeof(std::uint64_t);
    table_capacity_ = std::max<std::size_t>(1024, (std::size_t{512} << 20) / (key_bytes + 64));
  }

  std::vector<std::uint64_t> run(std::size_t upper) {
    best_ = upper;
    minimize(0);
    return lexicographic_cover(best_);
  }

 private:
  // Translates covering residue c, ordered by translate_key.
  std::vector<std::uint64_t> candidates(std::uint64_t c, std::uint64_t min_key) const {
    const std::uint64_t m = inst_.modulus;
    std::vector<std::uint64_t> out;
    out.reserve(inst_.residues.size());
    for (std::uint64_t r : inst_.residues) {
      std::uint64_t t = (c + m - r) % m;
      if (translate_key(t, m) > min_key) out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [m](std::uint64_t a, std::uint64_t b) {
      return translate_key(a, m) < translate_key(b, m);
    });
    return out;
  }

  std::size_t lower_bound() const {
    const std::size_t per = inst_.residues.size();
    return static_cast<std::size_t>((state_.uncovered() + per - 1) / per);
  }

  void count_node() {
    if (++nodes_ > limits_.node_limit) {
      throw Error(ErrorKind::cap, "exact cover search exceeded " + std::to_string(limits_.node_limit) +
                                      " nodes for modulus " + std::to_string(inst_.modulus));
    }
  }

  // Phase one: the minimum size, branching on the smallest uncovered residue.
  void minimize(std::size_t depth) {
    count_node();
    if (state_.uncovered() == 0) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + lower_bound() >= best_) return;
    std::string key = state_.key();
    auto it = seen_depth_.find(key);
    if (it != seen_depth_.end() && it->second <= depth) return;
    if (it != seen_depth_.end()) {
      it->second = depth;
    } else if (seen_depth_.size() < table_capacity_) {
      seen_depth_.emplace(std::move(key), depth);
    }
    for (std::uint64_t t : candidates(state_.first_uncovered(), 0)) {
      std::size_t added = state_.apply(t);
      minimize(depth + 1);
      state_.undo(added);
    }
  }

  // Can the current gaps be closed with at most `budget` translates whose keys
  // all exceed min_key_?
  bool feasible(std::size_t budget) {
    count_node();
    if (state_.uncovered() == 0) return true;
    if (lower_bound() > budget) return false;
    std::string key = state_.key();
    auto it = failed_budget_.find(key);
    if (it != failed_budget_.end() && it->second >= budget) return false;
    for (std::uint64_t t : candidates(state_.first_uncovered(), min_key_)) {
      std::size_t added = state_.apply(t);
      bool ok = feasible(budget - 1);
      state_.undo(added);
      if (ok) return true;
    }
    if (it != failed_budget_.end()) {
      it->second = budget;
    } else if (failed_budget_.size() < table_capacity_) {
      failed_budget_.emplace(std::move(key), budget);
    }
    return false;
  }

  // Phase two: fix translates one at a time in key order, keeping the first
  // that still admits a completion of the optimal size.
  std::vector<std::uint64_t> lexicographic_cover(std::size_t size) {
    const std::uint64_t m = inst_.modulus;
    std::vector<std::uint64_t> chosen;
    std::uint64_t last_key = 0;
    for (std::size_t slot = 0; slot < size; ++slot) {
      bool placed = false;
      for (std::uint64_t key = last_key + 1; key <= m && !placed; ++key) {
        std::uint64_t t = key % m;
        std::size_t added = state_.apply(t);
        min_key_ = key;
        failed_budget_.clear();
        if (added > 0 && feasible(size - slot - 1)) {
          chosen.push_back(t);
          last_key = key;
          placed = true;
        } else {
          state_.undo(added);
        }
      }
      if (!placed) {
        throw Error(ErrorKind::precondition, "exact cover reconstruction failed");
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  const CoverInstance& inst_;
  ExactSearchLimits limits_;
  CoverState state_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t min_key_ = 0;
  std::size_t table_capacity_ = 0;
  std::unordered_map<std::string, std::size_t> seen_depth_;
  std::unordered_map<std::string, std::size_t> failed_budget_;
};

}  // namespace

CoverSolution cover_greedy(const CoverInstance& inst) {
  if (inst.modulus > (std::uint64_t{1} << 34)) {
    throw Error(ErrorKind::cap, "greedy cover modulus " + std::to_string(inst.modulus) + " is too large");
  }
  CoverSolution sol;
  sol.kind = CoverKind::upper_bound;
  if (inst.residues.size() <= std::numeric_limits<std::uint8_t>::max()) {
    sol.translates = greedy_cover<std::uint8_t>(inst);
  } else {
    sol.translates = greedy_cover<std::uint32_t>(inst);
  }
  return sol;
}

CoverSolution cover_exact(const CoverInstance& inst, const ExactSearchLimits& limits) {
  if (inst.modulus > limits.modulus_cap) {
    throw Error(ErrorKind::cap, "modulus " + std::to_string(inst.modulus) +
                                    " exceeds the exact-search cap " + std::to_string(limits.modulus_cap));
  }
  CoverSolution greedy = cover_greedy(inst);
  ExactSearch search(inst, limits);
  CoverSolution sol;
  sol.translates = search.run(greedy.size());
  sol.kind = CoverKind::exact_minimum;
  return sol;
}

std::size_t default_extras_cap(const CoverInstance& inst) { return (inst.k + 1) / 2 + 2; }

CoverSolution cover_structured(std::uint64_t n, const CoverInstance& inst,
                               std::optional<std::size_t> extras_cap) {
  const std::uint64_t m = inst.modulus;
  if (n == 0) throw Error(ErrorKind::precondition, "structured cover needs n >= 1");
  if (n > m) {
    throw Error(ErrorKind::precondition, "structured cover needs n <= m");
  }

  // Classes mod n of the element representatives in [1, m].
  std::vector<char> seen(n, 0);
  for (std::uint64_t r : inst.residues) seen[translate_key(r, m) % n] = 1;
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::precondition, "elements do not cover every residue class mod " + std::to_string(n));
  }

  std::vector<std::uint64_t> translates;
  const std::uint64_t steps = (m + n - 1) / n;
  translates.reserve(steps);
  for (std::uint64_t j = 1; j <= steps; ++j) {
    // j * n <= m + n - 1 < 2m, so one subtraction reduces it.
    std::uint64_t t = j * n;
    if (t >= m) t -= m;
    translates.push_back(t);
  }
  std::sort(translates.begin(), translates.end());
  translates.erase(std::unique(translates.begin(), translates.end()), translates.end());

  CoverCheck check = cover_validate(inst, translates);
  if (!check.complete) {
    const std::size_t cap = extras_cap.value_or(default_extras_cap(inst));
    std::vector<char> covered(m, 1);
    for (std::uint64_t c : check.uncovered) covered[c] = 0;
    std::uint64_t remaining = check.uncovered.size();
    for (std::size_t extra = 0; extra < cap && remaining > 0; ++extra) {
      std::uint64_t best_t = 0;
      std::size_t best_gain = 0;
      for (std::uint64_t t = 0; t < m; ++t) {
        std::size_t g = 0;
        for (std::uint64_t r : inst.residues) g += covered[(t + r) % m] ? 0 : 1;
        if (g > best_gain) {
          best_gain = g;
          best_t = t;
        }
      }
      for (std::uint64_t r : inst.residues) {
        char& c = covered[(best_t + r) % m];
        if (!c) {
          c = 1;
          --remaining;
        }
      }
      translates.push_back(best_t);
    }
    if (remaining > 0) {
      throw Error(ErrorKind::cap, "structured cover mod " + std::to_string(m) + " with step " +
                                      std::to_string(n) + " leaves " + std::to_string(remaining) +
                                      " residues uncovered after " + std::to_string(cap) +
                                      " repair translates");
    }
    std::sort(translates.begin(), translates.end());
    translates.erase(std::unique(translates.begin(), translates.end()), translates.end());
  }
  return CoverSolution{std::move(translates), CoverKind::structured};
}

}  // namespace addcomp
