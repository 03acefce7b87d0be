#pragma once

// Generalized Bott manifolds as fans, their primitive collections and toric
// Gromov width, and the Bott tower attached to a Bott-Samelson input.
//
// Stages l = 1..m have dimensions n_l. Vector coordinates are ordered
// e_1^1..e_1^{n_1}, ..., e_m^1..e_m^{n_m}. Rays (and divisor coefficients) are
// ordered stage by stage as u_l^0, u_l^1, ..., u_l^{n_l}.

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "bsgw/bscurve.hpp"
#include "bsgw/gkpoly.hpp"

namespace bsgw {

using IntVec = std::vector<Integer>;

struct BottCollection {
  std::vector<int> dims;  // n_1..n_m
  // a_{j,l}^{(k)} keyed by (j, l, k) with 2 <= j <= m, 1 <= l < j, 1 <= k <= n_j.
  // Missing keys are zero.
  std::map<std::tuple<int, int, int>, Integer> twists;

  int stages() const { return static_cast<int>(dims.size()); }
  int total_dim() const;
  int ray_count() const { return total_dim() + stages(); }
  Integer twist(int j, int l, int k) const;
  // Throws InputError on nonpositive dims or out-of-range twist keys.
  void validate() const;

  // Global positions, 0-based.
  std::size_t ray_index(int stage, int k) const;
  std::size_t coord_index(int stage, int k) const;  // k >= 1
};

struct BottFan {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> max_cones;  // ray indices, sorted
};

BottFan build_fan(const BottCollection& c);

// Every maximal cone is generated by exactly `dim` rays with determinant +-1.
bool check_smooth(const BottFan& f);

struct DivisorClass {
  std::vector<Rational> coeffs;  // lambda per ray, global ray order
};

struct PrimRelation {
  int stage = 0;
  std::vector<std::size_t> members;  // ray indices of u_l^0..u_l^{n_l}
  IntVec u_sum;
  Rational lambda_sum;
  // u_sum = sum a_i y_i with a_i > 0 over generators of the containing cone.
  std::vector<std::pair<std::size_t, Integer>> cone_coeffs;
  Integer degree;  // (n_l + 1) - sum a_i

  bool zero_sum() const;
};

// How the cone containing a nonzero u(l) is located. Descent walks the stages
// in order, where each stage is a projective-space fan and the nonnegative
// expression is forced; Exhaustive solves over every maximal cone.
enum class ConeSearch { Descent, Exhaustive };

std::vector<PrimRelation> primitive_relations(const BottCollection& c, const DivisorClass& d,
                                              ConeSearch search = ConeSearch::Descent);

struct HlsWidth {
  Rational width;
  int stage = 0;  // smallest stage attaining it
};

// min { lambda(l) : u(l) = 0 }.
HlsWidth hls_width(const BottCollection& c, const DivisorClass& d);

// sum_rho lambda_rho b_rho with b the indicator of the collection; cross-checked
// against rel.lambda_sum. InputError unless rel.u_sum == 0.
Rational relation_pairing(const DivisorClass& d, const PrimRelation& rel);

struct DegenerateTower {
  BottCollection collection;  // all dims 1
  DivisorClass divisor;       // a_j on u_j^0, 0 on u_j^1
  std::vector<Rational> a;
  ConditionPReport condition_p;
  bool hypothesis_violated = false;
};

// Bott tower with u_j^0 = -e_j - sum_{k>j} <alpha_{i_k}, alpha_{i_j}^v> e_k and
// divisor a_j = <m_j varpi_{i_j} + ... + m_r varpi_{i_r}, alpha_{i_j}^v> on D_j^0.
// Refuses (PreconditionError) when condition (P) fails unless `force`.
DegenerateTower degenerate_bott_tower(const BSInput& in, bool force = false);

// min { m_j : <alpha_{i_k}, alpha_{i_j}^v> = 0 for all k > j } without any
// cross-checks.
std::pair<Rational, std::size_t> caseline_min(const BSInput& in);

// caseline_min, and when condition (P) holds asserts it equals both the
// Bott-Samelson width and the toric width of the degenerate tower.
Rational caseline_width(const BSInput& in);

}  // namespace bsgw
