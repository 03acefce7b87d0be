#pragma once

// T-stable curves C_1..C_r through the base point of a Bott-Samelson variety
// Z_w, their degrees against the line bundles L_1..L_r, and the Gromov width
// of (Z_w, L_{w,m}).
//
// Matrices are 0-based: deg[k-1][j-1] = L_k . C_j. Index sets are 1-based.

#include <cstddef>
#include <vector>

#include "bsgw/rootsys.hpp"
#include "bsgw/words.hpp"

namespace bsgw {

using IntMatrix = std::vector<std::vector<int>>;
using IndexSet = std::vector<std::size_t>;

// A reduced word with positive rational weights m_1..m_r.
struct BSInput {
  RootSystem rs;
  Word word;
  std::vector<Rational> m;

  // Validates letters, reducedness, |m| = r and m_j > 0 (InputError).
  static BSInput make(RootSystem rs, Word word, std::vector<Rational> m);

  std::size_t length() const { return word.size(); }
  BSInput scaled(const Rational& factor) const;
};

// deg[k][j] = <varpi_{i_k}, s_{i_k} ... s_{i_{j+1}} (alpha_{i_j}^v)> for j <= k, else 0.
IntMatrix deg_matrix(const BSInput& in);

// -K . C_j = height of s_{i_r} ... s_{i_{j+1}} (alpha_{i_j}^v) + 1, summing over every node.
std::vector<int> antican_degrees(const BSInput& in);

// j such that s_{i_r} ... s_{i_{j+1}} (alpha_{i_j}) is a simple root.
IndexSet minimal_curves(const BSInput& in);

// j such that deg[k][j] = 0 for every k > j.
IndexSet lines(const BSInput& in);

// l_j = sum_k m_k deg[k][j] = m_j + sum_{k > j} m_k deg[k][j].
std::vector<Rational> areas(const BSInput& in);

struct CurveReport {
  IntMatrix deg;
  std::vector<Rational> areas;
  std::vector<int> antican;
  IndexSet minimal_set;
  IndexSet line_set;
  Rational width;
  std::size_t witness = 0;  // smallest j attaining the width
  Rational minimal_min;     // min of l_j over minimal_set
  std::size_t minimal_witness = 0;
};

// Width = min_j l_j. Also computes the minimum over minimal curves and throws
// InvariantViolation if the two differ. Empty word -> InputError.
CurveReport gromov_width(const BSInput& in);

}  // namespace bsgw
