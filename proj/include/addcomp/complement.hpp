#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "addcomp/bigint.hpp"
#include "addcomp/residue_cover.hpp"
#include "addcomp/sequence.hpp"

namespace addcomp {

// V_k = { u + j a_k : u in U_k, j_min <= j <= j_max }.
struct Block {
  std::size_t k = 0;
  BigInt a;
  std::vector<BigInt> translates;  // U_k, sorted, in [1, a_k]
  BigInt j_min;
  BigInt j_max;

  BigInt min_element() const { return translates.front() + j_min * a; }
  BigInt max_element() const { return translates.back() + j_max * a; }
  bool contains(const BigInt& value) const;
  // |V_k ∩ [1, x]|; elements of one block are pairwise distinct.
  BigInt count_le(const BigInt& x) const;

  friend bool operator==(const Block&, const Block&) = default;
};

// Finite truncation B = V_1 ∪ ... ∪ V_K of the constructed complement.
class ComplementBlocks {
 public:
  ComplementBlocks() = default;
  // Checks block shape, that every U_k covers Z_{a_k} with a_1..a_k, and that
  // non-adjacent blocks are disjoint.
  explicit ComplementBlocks(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const Block& block(std::size_t k) const;  // one-based

  // Largest stored element; counting is defined on [1, extent()].
  BigInt extent() const;

  bool contains(const BigInt& value) const;

  // b_count: |B ∩ [1, x]| with adjacent-block overlaps counted once.
  BigInt count(const BigInt& x) const;

  // b_members: sorted distinct members in [lo, hi]; hi - lo + 1 <= cap.
  std::vector<BigInt> members(const BigInt& lo, const BigInt& hi, std::uint64_t cap = 10'000'000) const;


  friend bool operator==(const ComplementBlocks&, const ComplementBlocks&) = default;

 private:
  std::vector<Block> blocks_;
};

// q_k = floor(a_{k+1} / (k^e a_k)) with q_k k^e a_k <= a_{k+1} < (q_k + 1) k^e a_k.
BigInt q_of(const Sequence& seq, std::size_t k);

enum class CoverStrategy { automatic, greedy };

struct BlockOptions {
  CoverStrategy strategy = CoverStrategy::automatic;
  ExactSearchLimits exact;
  std::optional<std::size_t> extras_cap;
};

struct BlockDiagnostic {
  std::size_t k = 0;
  CoverKind kind = CoverKind::upper_bound;
  Rational ratio;  // A(a_k) |U_k| / a_k
  // Set when the structured rule failed at a ladder modulus and the greedy
  // cover was used instead.
  std::string fallback_reason;
};

struct ComplementBuild {
  ComplementBlocks blocks;
  std::vector<BlockDiagnostic> diagnostics;
};

// Blocks 1..K; needs a_1 .. a_{K+2} (j_max(K) involves q_{K+1}).
// U_k comes from the exact solver when a_k is within the exact cap, from the
// structured rule at ladder moduli a_{n_j} (step n_j), and from greedy
// otherwise.
ComplementBuild build_blocks(const Sequence& seq, std::size_t blocks, const BlockOptions& options = {});

// Residue cover instance of A ∩ [1, a_k] modulo a_k.
CoverInstance block_instance(std::span<const BigInt> a_prefix);

// Checks that the blocks are the ones the sequence determines (a_k, j range).
void check_blocks_match(const Sequence& seq, const ComplementBlocks& blocks);

// Largest x for which B ∩ [1, x] does not depend on blocks beyond K:
// V_{K+1} starts above (q_{K+1} - 1) a_{K+1}.
BigInt truncation_bound(const Sequence& seq, const ComplementBlocks& blocks);

// (floor(x/a_k) - q_k + 2) L(a_k) + sum_{i=2..k} (floor(q_i a_i / a_{i-1}) - q_{i-1} + 2) L(a_{i-1}),
// with L(a_i) = |U_i|. Valid for q_k a_k <= x <= (q_{k+1} - 1) a_{k+1}.
BigInt b_count_bound(const Sequence& seq, const ComplementBlocks& blocks, const BigInt& x, std::size_t k);

// The window [q_k a_k, (q_{k+1} - 1) a_{k+1}] on which b_count_bound applies.
std::pair<BigInt, BigInt> bound_window(const Sequence& seq, std::size_t k);

}  // namespace addcomp
