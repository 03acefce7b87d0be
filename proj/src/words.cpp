#include "bsgw/words.hpp"

#include <random>
#include <set>

#include "bsgw/errors.hpp"

namespace bsgw {

namespace {

// s_{i_1} ... s_{i_{j-1}} (v): apply letters j-1 down to 1.
template <class V>
V apply_prefix(const RootSystem& rs, const Word& w, std::size_t j, V v) {
  for (std::size_t p = j - 1; p >= 1; --p) v = rs.reflect(w.at(p), v);
  return v;
}

}  // namespace

Word Word::reversed() const { return Word(std::vector<int>(letters.rbegin(), letters.rend())); }

std::string Word::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(letters[j]);
  }
  return s + ")";
}

void check_word(const RootSystem& rs, const Word& w) {
  for (std::size_t j = 1; j <= w.size(); ++j) {
    int i = w.at(j);
    if (i < 1 || i > rs.rank())
      throw InputError("letter " + std::to_string(i) + " at position " + std::to_string(j) +
                       " out of range 1.." + std::to_string(rs.rank()));
  }
}

BetaSequence betas(const RootSystem& rs, const Word& w) {
  check_word(rs, w);
  BetaSequence b;
  b.roots.reserve(w.size());
  b.coroots.reserve(w.size());
  for (std::size_t j = 1; j <= w.size(); ++j) {
    b.roots.push_back(apply_prefix(rs, w, j, rs.simple_root(w.at(j))));
    b.coroots.push_back(apply_prefix(rs, w, j, rs.simple_coroot(w.at(j))));
  }
  return b;
}

ReducedCheck is_reduced(const RootSystem& rs, const Word& w) {
  auto b = betas(rs, w);
  for (std::size_t j = 0; j < b.roots.size(); ++j) {
    if (!b.roots[j].is_positive()) return {false, j + 1};
  }
  std::set<RootVec> distinct(b.roots.begin(), b.roots.end());
  if (distinct.size() != b.roots.size())
    throw InvariantViolation("positive beta sequence of " + w.to_string() + " has repeated roots");
  return {};
}

void require_reduced(const RootSystem& rs, const Word& w) {
  auto check = is_reduced(rs, w);
  if (!check)
    throw InputError("word not reduced at position " + std::to_string(*check.failing_position));
}

Word random_reduced_word(const RootSystem& rs, std::size_t length, std::uint64_t seed) {
  const auto max_len = static_cast<std::size_t>(rs.positive_root_count());
  if (length > max_len)
    throw InputError("requested length " + std::to_string(length) + " exceeds the " +
                     std::to_string(max_len) + " positive roots of " + rs.type().to_string());
  std::mt19937_64 rng(seed);
  Word w;
  // prefix = s_{i_1} ... s_{i_j}; the new beta is prefix(alpha_i).
  std::vector<int> candidates;
  while (w.size() < length) {
    candidates.clear();
    for (int i = 1; i <= rs.rank(); ++i) {
      RootVec beta = rs.simple_root(i);
      for (std::size_t p = w.size(); p >= 1; --p) beta = rs.reflect(w.at(p), beta);
      if (beta.is_positive()) candidates.push_back(i);
    }
    if (candidates.empty())
      throw InvariantViolation("no reduced extension of " + w.to_string() + " below the longest length");
    w.letters.push_back(candidates[rng() % candidates.size()]);
  }
  return w;
}

}  // namespace bsgw
