#include "doctest.h"

#include <random>

#include "addcomp/residue_cover.hpp"
#include "oracles.hpp"

using namespace addcomp;

namespace {

CoverInstance inst(std::uint64_t m, std::vector<std::uint64_t> r, std::size_t k = 0) {
  const std::size_t kk = k ? k : r.size();
  return CoverInstance::from_residues(m, std::move(r), kk);
}

std::uint32_t mask_of(const CoverInstance& c) {
  std::uint32_t mask = 0;
  for (auto r : c.residues) mask |= 1u << r;
  return mask;
}

}  // namespace

TEST_CASE("exact cover examples") {
  auto s = cover_exact(inst(1, {0}));
  CHECK(s.translates == std::vector<std::uint64_t>{0});
  CHECK(s.kind == CoverKind::exact_minimum);

  s = cover_exact(inst(4, {0, 1}));
  CHECK(s.size() == 2);
  CHECK(s.translates == std::vector<std::uint64_t>{1, 3});

  CHECK(cover_exact(inst(5, {0, 1, 2, 3, 4})).size() == 1);
}

TEST_CASE("exact cover respects its cap") {
  ExactSearchLimits limits;
  limits.modulus_cap = 16;
  try {
    cover_exact(inst(17, {0}), limits);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::cap);
  }
}

TEST_CASE("greedy cover examples") {
  auto s = cover_greedy(inst(4, {0, 1}));
  CHECK(s.size() == 2);
  CHECK(s.kind == CoverKind::upper_bound);
  CHECK(cover_greedy(inst(1, {0})).size() == 1);
  s = cover_greedy(inst(6, {0}));
  CHECK(s.size() == 6);
  CHECK(s.translates == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("structured cover examples") {
  auto s = cover_structured(2, inst(4, {0, 1}));
  CHECK(s.translates == std::vector<std::uint64_t>{0, 2});
  CHECK(s.kind == CoverKind::structured);
  CHECK(cover_validate(inst(4, {0, 1}), s.translates).complete);

  s = cover_structured(1, inst(3, {0, 1, 2}));
  CHECK(s.size() == 3);

  // residues {0, 2} miss class 1 mod 2
  try {
    cover_structured(2, inst(4, {0, 2}));
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("cover_validate") {
  auto c = cover_validate(inst(4, {0, 1}), std::vector<std::uint64_t>{1, 3});
  CHECK(c.complete);
  CHECK(c.uncovered.empty());
  c = cover_validate(inst(4, {0, 1}), std::vector<std::uint64_t>{1});
  CHECK_FALSE(c.complete);
  CHECK(c.uncovered == std::vector<std::uint64_t>{0, 3});
  CHECK(cover_validate(inst(2, {0, 1}), std::vector<std::uint64_t>{0}).complete);
  CHECK_THROWS_AS(cover_validate(inst(2, {0, 1}), std::vector<std::uint64_t>{2}), Error);
}

TEST_CASE("instances from elements") {
  std::vector<BigInt> a{1, 4};
  auto c = CoverInstance::from_elements(4, a);
  CHECK(c.modulus == 4);
  CHECK(c.residues == std::vector<std::uint64_t>{0, 1});
  CHECK(c.k == 2);
  std::vector<BigInt> b{1, 4, 130, 31591};
  c = CoverInstance::from_elements(130, b);  // elements above m are dropped
  CHECK(c.k == 3);
  CHECK(c.residues == std::vector<std::uint64_t>{0, 1, 4});
  std::vector<BigInt> dup{1, 6};  // distinct elements sharing a residue
  c = CoverInstance::from_elements(5, std::vector<BigInt>{1, 3, 5});
  CHECK(c.k == 3);
  c = CoverInstance::from_elements(5, dup);
  CHECK(c.k == 1);
  CHECK_THROWS_AS(CoverInstance::from_elements(5, std::vector<BigInt>{7}), Error);
  CHECK_THROWS_AS(CoverInstance::from_residues(4, {}, 0), Error);
  CHECK_THROWS_AS(CoverInstance::from_residues(4, {4}, 1), Error);
}

TEST_CASE("exact equals brute force on random instances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned m = 2 + rng() % 15;
    std::vector<std::uint64_t> r;
    for (unsigned i = 0; i < m; ++i)
      if (rng() % 3 == 0) r.push_back(i);
    if (r.empty()) r.push_back(rng() % m);
    auto c = inst(m, r);
    auto exact = cover_exact(c);
    auto greedy = cover_greedy(c);
    CHECK(exact.size() == oracle::min_cover(mask_of(c), m));
    CHECK(cover_validate(c, exact.translates).complete);
    CHECK(cover_validate(c, greedy.translates).complete);
    CHECK(exact.size() <= greedy.size());
    CHECK(exact.size() * c.k >= m);
    CHECK(covering_ratio(c, exact) >= 1);
  }
}

TEST_CASE("exact cover is the least optimal set under the translate order") {
  // m = 6, residues {0, 1, 2}: optimal covers have size 2; under the order
  // 1 < 2 < ... < m-1 < 0 the least is {1, 4}.
  auto s = cover_exact(inst(6, {0, 1, 2}));
  CHECK(s.translates == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("medium exact instance") {
  std::vector<BigInt> a{1, 4, 130};
  auto c = CoverInstance::from_elements(130, a);
  auto s = cover_exact(c);
  CHECK(cover_validate(c, s.translates).complete);
  CHECK(s.size() * 3 >= 130);
  CHECK(s.size() <= cover_greedy(c).size());
}
