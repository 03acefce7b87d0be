#pragma once

// Words in simple reflections. In every chain s_a ... s_b (v) the rightmost
// reflection acts first.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsgw/rootsys.hpp"

namespace bsgw {

struct Word {
  std::vector<int> letters;  // 1-based node indices

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  // 1-based position access: letter i_j.
  int at(std::size_t j) const { return letters[j - 1]; }

  Word reversed() const;
  std::string to_string() const;

  bool operator==(const Word&) const = default;
};

void check_word(const RootSystem& rs, const Word& w);

struct BetaSequence {
  std::vector<RootVec> roots;      // beta_j = s_{i_1} ... s_{i_{j-1}} (alpha_{i_j})
  std::vector<CorootVec> coroots;  // same chain applied to alpha_{i_j}^v
};

BetaSequence betas(const RootSystem& rs, const Word& w);

struct ReducedCheck {
  bool reduced = true;
  // 1-based position of the first non-positive beta_j when not reduced.
  std::optional<std::size_t> failing_position;

  explicit operator bool() const { return reduced; }
};

// Reduced iff every beta_j is positive. On success the beta_j are also checked
// to be pairwise distinct (InvariantViolation otherwise).
ReducedCheck is_reduced(const RootSystem& rs, const Word& w);

// Throws InputError("word not reduced at position j") when w is not reduced.
void require_reduced(const RootSystem& rs, const Word& w);

// Greedy seeded generator: each step picks uniformly among the letters that
// keep the word reduced. Throws InputError when length exceeds |R^+|.
Word random_reduced_word(const RootSystem& rs, std::size_t length, std::uint64_t seed);

}  // namespace bsgw
