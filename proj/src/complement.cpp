#include "addcomp/complement.hpp"

#include <algorithm>

#include "addcomp/greedy_builder.hpp"

namespace addcomp {

bool Block::contains(const BigInt& value) const {
  if (value < min_element() || value > max_element()) return false;
  BigInt u = mod_floor(value - 1, a) + 1;
  BigInt j = (value - u) / a;
  if (j < j_min || j > j_max) return false;
  return std::binary_search(translates.begin(), translates.end(), u);
}

BigInt Block::count_le(const BigInt& x) const {
  if (x < min_element()) return 0;
  const BigInt per_translate = j_max - j_min + 1;
  if (x >= max_element()) return per_translate * translates.size();
  BigInt total = 0;
  for (const auto& u : translates) {
    if (u > x) break;
    BigInt top = floor_div(x - u, a);
    if (top > j_max) top = j_max;
    if (top >= j_min) total += top - j_min + 1;
  }
  return total;
}

ComplementBlocks::ComplementBlocks(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorKind::precondition, "no blocks");
  std::vector<BigInt> a_prefix;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    const std::string where = "block " + std::to_string(i + 1);
    if (b.k != i + 1) throw Error(ErrorKind::precondition, where + " has index " + std::to_string(b.k));
    if (b.a < 1 || (i > 0 && b.a <= blocks_[i - 1].a)) {
      throw Error(ErrorKind::precondition, where + ": moduli must be positive and increasing");
    }
    if (b.translates.empty()) throw Error(ErrorKind::precondition, where + ": U_k is empty");
    for (std::size_t t = 0; t < b.translates.size(); ++t) {
      const BigInt& u = b.translates[t];
      if (u < 1 || u > b.a || (t > 0 && u <= b.translates[t - 1])) {
        throw Error(ErrorKind::precondition, where + ": U_k must be sorted, distinct, within [1, a_k]");
      }
    }
    if (b.j_min < 0 || b.j_max < b.j_min) {
      throw Error(ErrorKind::precondition, where + ": empty or negative multiplier range");
    }
    a_prefix.push_back(b.a);
    CoverInstance inst = block_instance(a_prefix);
    std::vector<std::uint64_t> translates;
    translates.reserve(b.translates.size());
    for (const auto& u : b.translates) translates.push_back(static_cast<std::uint64_t>(u % b.a));
    if (!cover_validate(inst, translates).complete) {
      throw Error(ErrorKind::precondition, where + ": U_k does not cover every residue mod a_k");
    }
  }
  for (std::size_t i = 0; i + 2 < blocks_.size(); ++i) {
    if (blocks_[i].max_element() >= blocks_[i + 2].min_element()) {
      throw Error(ErrorKind::precondition,
                  "blocks " + std::to_string(i + 1) + " and " + std::to_string(i + 3) + " overlap");
    }
  }
}

const Block& ComplementBlocks::block(std::size_t k) const {
  if (k < 1 || k > blocks_.size()) {
    throw Error(ErrorKind::span, "block " + std::to_string(k) + " is not stored");
  }
  return blocks_[k - 1];
}

BigInt ComplementBlocks::extent() const {
  BigInt top = 0;
  for (const auto& b : blocks_) top = std::max(top, b.max_element());
  return top;
}

bool ComplementBlocks::contains(const BigInt& value) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return b.contains(value); });
}

BigInt ComplementBlocks::count(const BigInt& x) const {
  if (x > extent()) {
    throw Error(ErrorKind::span, "x = " + to_decimal(x) + " exceeds the stored blocks (extent " +
                                     to_decimal(extent()) + ")");
  }
  BigInt total = 0;
  for (const auto& b : blocks_) total += b.count_le(x);
  // Elements lie in at most two blocks, and only adjacent ones can share:
  // walk V_{k+1} across the short overlap window and test membership in V_k.
  for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
    const Block& lower = blocks_[i];
    const Block& upper = blocks_[i + 1];
    BigInt hi = std::min(lower.max_element(), x);
    if (upper.min_element() > hi) continue;
    for (const auto& u : upper.translates) {
      for (BigInt j = upper.j_min; j <= upper.j_max; ++j) {
        BigInt w = u + j * upper.a;
        if (w > hi) break;
        if (lower.contains(w)) --total;
      }
    }
  }
  return total;
}

std::vector<BigInt> ComplementBlocks::members(const BigInt& lo, const BigInt& hi, std::uint64_t cap) const {
  std::vector<BigInt> out;
  if (hi < lo) return out;
  if (hi - lo + 1 > cap) {
    throw Error(ErrorKind::cap, "enumeration window of " + to_decimal(hi - lo + 1) +
                                    " integers exceeds the cap " + std::to_string(cap));
  }
  for (const auto& b : blocks_) {
    if (b.min_element() > hi || b.max_element() < lo) continue;
    for (const auto& u : b.translates) {
      BigInt first = std::max(b.j_min, -floor_div(u - lo, b.a));
      BigInt last = std::min(b.j_max, floor_div(hi - u, b.a));
      for (BigInt j = first; j <= last; ++j) out.push_back(u + j * b.a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt q_of(const Sequence& seq, std::size_t k) {
  const BigInt& a_k = seq.term(k);
  const BigInt& a_next = seq.term(k + 1);
  BigInt scale = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(seq.growth_exponent())) * a_k;
  BigInt q = a_next / scale;
  if (!(q * scale <= a_next && a_next < (q + 1) * scale)) {
    throw Error(ErrorKind::precondition, "multiplier sandwich fails at k = " + std::to_string(k));
  }
  return q;
}

CoverInstance block_instance(std::span<const BigInt> a_prefix) {
  return CoverInstance::from_elements(a_prefix.back(), a_prefix);
}

namespace {

BigInt j_upper(const Sequence& seq, std::size_t k) {
  return (q_of(seq, k + 1) * seq.term(k + 1)) / seq.term(k);
}

std::optional<BigInt> ladder_step_for(const LevelLadder& ladder, std::size_t k) {
  for (const auto& level : ladder.levels) {
    if (level.n == k) return level.n;
  }
  return std::nullopt;
}

}  // namespace

ComplementBuild build_blocks(const Sequence& seq, std::size_t count, const BlockOptions& options) {
  if (count < 1) throw Error(ErrorKind::precondition, "at least one block is required");
  if (seq.size() < count + 2) {
    throw Error(ErrorKind::precondition, std::to_string(count) + " blocks need a_1 .. a_" +
                                             std::to_string(count + 2) + ", only " +
                                             std::to_string(seq.size()) + " terms stored");
  }
  const LevelLadder ladder = level_ladder(seq);
  std::vector<Block> blocks;
  std::vector<BlockDiagnostic> diagnostics;
  for (std::size_t k = 1; k <= count; ++k) {
    const BigInt& a_k = seq.term(k);
    std::span<const BigInt> prefix(seq.terms().data(), k);
    CoverInstance inst = block_instance(prefix);

    BlockDiagnostic diag;
    diag.k = k;
    CoverSolution sol;
    if (options.strategy == CoverStrategy::greedy) {
      sol = cover_greedy(inst);
    } else if (inst.modulus <= options.exact.modulus_cap) {
      sol = cover_exact(inst, options.exact);
    } else if (auto step = ladder_step_for(ladder, k)) {
      try {
        sol = cover_structured(static_cast<std::uint64_t>(*step), inst, options.extras_cap);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::cap) throw;
        diag.fallback_reason = e.what();
        sol = cover_greedy(inst);
      }
    } else {
      sol = cover_greedy(inst);
    }
    diag.kind = sol.kind;
    diag.ratio = covering_ratio(inst, sol);

    Block block;
    block.k = k;
    block.a = a_k;
    block.translates.reserve(sol.size());
    for (std::uint64_t t : sol.translates) block.translates.emplace_back(translate_key(t, inst.modulus));
    std::sort(block.translates.begin(), block.translates.end());
    block.j_min = q_of(seq, k) - 1;
    block.j_max = j_upper(seq, k);
    blocks.push_back(std::move(block));
    diagnostics.push_back(std::move(diag));
  }
  return ComplementBuild{ComplementBlocks(std::move(blocks)), std::move(diagnostics)};
}

void check_blocks_match(const Sequence& seq, const ComplementBlocks& blocks) {
  const std::size_t K = blocks.size();
  if (seq.size() < K + 2) {
    throw Error(ErrorKind::precondition, "sequence too short for " + std::to_string(K) + " blocks");
  }
  for (const auto& b : blocks.blocks()) {
    if (b.a != seq.term(b.k) || b.j_min != q_of(seq, b.k) - 1 || b.j_max != j_upper(seq, b.k)) {
      throw Error(ErrorKind::precondition, "block " + std::to_string(b.k) + " does not match the sequence");
    }
  }
}

BigInt truncation_bound(const Sequence& seq, const ComplementBlocks& blocks) {
  const std::size_t next = blocks.size() + 1;
  return (q_of(seq, next) - 1) * seq.term(next);
}

std::pair<BigInt, BigInt> bound_window(const Sequence& seq, std::size_t k) {
  return {q_of(seq, k) * seq.term(k), (q_of(seq, k + 1) - 1) * seq.term(k + 1)};
}

BigInt b_count_bound(const Sequence& seq, const ComplementBlocks& blocks, const BigInt& x, std::size_t k) {
  if (k < 1 || k > blocks.size()) {
    throw Error(ErrorKind::span, "bound index k = " + std::to_string(k) + " outside the stored blocks");
  }
  auto [lo, hi] = bound_window(seq, k);
  if (x < lo || x > hi) {
    throw Error(ErrorKind::span, "x = " + to_decimal(x) + " outside [" + to_decimal(lo) + ", " +
                                     to_decimal(hi) + "] for k = " + std::to_string(k));
  }
  auto size_of = [&](std::size_t i) { return BigInt(blocks.block(i).translates.size()); };
  BigInt bound = (x / seq.term(k) - q_of(seq, k) + 2) * size_of(k);
  for (std::size_t i = 2; i <= k; ++i) {
    bound += ((q_of(seq, i) * seq.term(i)) / seq.term(i - 1) - q_of(seq, i - 1) + 2) * size_of(i - 1);
  }
  return bound;
}

}  // namespace addcomp
