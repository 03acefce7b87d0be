#pragma once

// The chain polytope P_{w,m} = { x in R^r : 0 <= x_j <= A_j(x_{j+1}, ..., x_r) }
// and condition (P).
//
// Variables are 1-based: x_1..x_r. A_k only involves x_{k+1}..x_r.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bsgw/bscurve.hpp"

namespace bsgw {

struct AffineForm {
  std::size_t first_var = 1;   // smallest variable index allowed to appear
  std::vector<Rational> coeffs;  // coeffs[v-1] for x_v; zero below first_var
  Rational constant;

  static AffineForm constant_form(std::size_t r, std::size_t first_var, Rational c);

  const Rational& coeff(std::size_t var) const { return coeffs[var - 1]; }
  bool is_constant() const;
  // x is 1-based through x[v-1]; entries below first_var are ignored.
  Rational evaluate(const std::vector<Rational>& x) const;
};

struct GKChain {
  std::size_t r = 0;
  std::vector<AffineForm> forms;  // forms[k-1] = A_k

  const AffineForm& A(std::size_t k) const { return forms[k - 1]; }
};

// A_k = <sum_{l >= k} m_l varpi_{i_l} - sum_{l > k} x_l alpha_{i_l}, alpha_{i_k}^v>
GKChain build_chain(const BSInput& in);

struct ChainMinimum {
  Rational value;
  // Attaining point (x_{k+1}, ..., x_r).
  std::vector<Rational> point;
};

// Exact minimum of A_k over { 0 <= x_j <= A_j, j > k } by backward
// substitution. Requires 1 <= k <= r-1 (k == r gives the constant A_r with an
// empty point) and conditions (P-j) for j > k; otherwise PreconditionError.
ChainMinimum min_affine_over_chain(const GKChain& c, std::size_t k);

struct ConditionPReport {
  bool holds = true;
  // per_k[k-1] for k = 1..r-1; nullopt below the first failing k, where the
  // region is not certified.
  std::vector<std::optional<ChainMinimum>> per_k;
  std::optional<std::size_t> failing_k;
  std::optional<std::vector<Rational>> witness;  // (x_{k+1}, ..., x_r) at failing_k
};

ConditionPReport check_condition_p(const GKChain& c);

struct LatticeResult {
  std::uint64_t count = 0;
  std::vector<std::vector<Integer>> points;  // (x_1, ..., x_r), only when requested
};

// Enumerates integer points with x_r outermost, each x_j in 0..floor(A_j);
// negative bounds give empty ranges. Points come out ordered
// lexicographically on (x_r, ..., x_1). When `sink` is set every point is
// passed to it instead of being stored. Throws ResourceError once the count
// exceeds cap.
LatticeResult lattice_points(const GKChain& c, std::uint64_t cap, bool collect = false,
                             const std::function<void(const std::vector<Integer>&)>& sink = {});

}  // namespace bsgw
