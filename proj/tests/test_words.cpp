#include <functional>
#include <random>
#include <set>

#include "bsgw/errors.hpp"
#include "bsgw/oracles.hpp"
#include "bsgw/words.hpp"
#include "doctest.h"

using namespace bsgw;

namespace {

RootVec root(std::vector<int> c) { return RootVec(std::move(c)); }

// Every word of length `len` over `n` letters.
void for_each_word(int n, std::size_t len, const std::function<void(const Word&)>& f) {
  Word w(std::vector<int>(len, 1));
  while (true) {
    f(w);
    std::size_t p = 0;
    while (p < len && ++w.letters[p] > n) w.letters[p++] = 1;
    if (p == len) return;
  }
}

}  // namespace

TEST_CASE("beta sequences") {
  auto a2 = RootSystem::parse("A2");
  auto b = betas(a2, {1, 2, 1});
  CHECK(b.roots == std::vector<RootVec>{root({1, 0}), root({1, 1}), root({0, 1})});

  auto g2 = RootSystem::parse("G2");
  for (int i : {1, 2}) CHECK(betas(g2, {i}).roots == std::vector<RootVec>{g2.simple_root(i)});

  auto a3 = RootSystem::parse("A3");
  CHECK(betas(a3, {1, 3}).roots == std::vector<RootVec>{root({1, 0, 0}), root({0, 0, 1})});

  CHECK(betas(a2, {}).roots.empty());
  CHECK_THROWS_AS(betas(a2, {1, 3}), InputError);
}

TEST_CASE("reducedness with certificates") {
  auto a2 = RootSystem::parse("A2");
  CHECK(is_reduced(a2, {1, 2, 1}).reduced);
  auto r11 = is_reduced(a2, {1, 1});
  CHECK_FALSE(r11.reduced);
  CHECK(r11.failing_position == 2u);
  CHECK(betas(a2, {1, 1}).roots[1] == root({-1, 0}));

  auto r1212 = is_reduced(a2, {1, 2, 1, 2});
  CHECK_FALSE(r1212.reduced);
  CHECK(r1212.failing_position == 4u);
  CHECK(betas(a2, {1, 2, 1, 2}).roots[3] == root({-1, 0}));

  CHECK(is_reduced(a2, {}).reduced);
  CHECK_THROWS_WITH_AS(require_reduced(a2, {1, 1}), "word not reduced at position 2", InputError);
}

TEST_CASE("is_reduced agrees with the orbit-counting length oracle") {
  for (const char* t : {"A3", "G2"}) {
    auto rs = RootSystem::parse(t);
    std::size_t checked = 0;
    for (std::size_t len = 0; len <= 8; ++len)
      for_each_word(rs.rank(), len, [&](const Word& w) {
        ++checked;
        const bool reduced = is_reduced(rs, w).reduced;
        CHECK_MESSAGE(reduced == (oracle::weyl_length(rs, w) == w.size()), t, " ", w.to_string());
        if (reduced) {
          auto b = betas(rs, w);
          std::set<RootVec> distinct(b.roots.begin(), b.roots.end());
          CHECK(distinct.size() == w.size());
        }
      });
    CHECK(checked > 0);
  }
}

TEST_CASE("reversal preserves reducedness") {
  std::mt19937_64 rng(7);
  for (const char* t : {"A4", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::parse(t);
    for (int trial = 0; trial < 200; ++trial) {
      Word w;
      const std::size_t len = rng() % 10;
      for (std::size_t j = 0; j < len; ++j) w.letters.push_back(1 + static_cast<int>(rng() % rs.rank()));
      CHECK(is_reduced(rs, w).reduced == is_reduced(rs, w.reversed()).reduced);
    }
  }
}

TEST_CASE("random reduced words") {
  auto a2 = RootSystem::parse("A2");
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    auto w = random_reduced_word(a2, 3, seed);
    CHECK(w.size() == 3);
    CHECK(is_reduced(a2, w).reduced);
  }
  auto a1 = RootSystem::parse("A1");
  CHECK(random_reduced_word(a1, 1, 5) == Word{1});
  CHECK_THROWS_AS(random_reduced_word(a1, 2, 5), InputError);

  // deterministic in the seed, and reaches the longest element
  for (const char* t : {"B4", "E6", "F4", "G2"}) {
    auto rs = RootSystem::parse(t);
    const auto n = static_cast<std::size_t>(rs.positive_root_count());
    auto w = random_reduced_word(rs, n, 123);
    CHECK(w == random_reduced_word(rs, n, 123));
    CHECK(is_reduced(rs, w).reduced);
    CHECK(oracle::weyl_length(rs, w) == n);
  }
}
