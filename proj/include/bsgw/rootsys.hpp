#pragma once

// Finite root systems through their Cartan matrices.
//
// Convention: cartan(i, j) = <alpha_j, alpha_i^v>, i.e. the row is the coroot
// and the column the root. Nodes are numbered 1..n (Bourbaki order inside each
// component, components in input order). Roots are stored in the simple-root
// basis, coroots in the simple-coroot basis and weights in the
// fundamental-weight basis, so <varpi_i, alpha_j^v> = delta_ij and pairing a
// weight with a coroot is a plain dot product.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bsgw/arith.hpp"

namespace bsgw {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinComponent {
  Family family;
  int rank;

  auto operator<=>(const DynkinComponent&) const = default;
};

struct DynkinType {
  std::vector<DynkinComponent> components;

  // Parses "A2", "G2", "A3+B2". Low-rank aliases (B1, C2, D3, D2, C1, ...)
  // are canonicalized. Throws InputError on unknown families or ranks.
  static DynkinType parse(std::string_view text);

  // Canonical form, e.g. D3 -> A3, D2 -> A1+A1.
  DynkinType canonical() const;
  int rank() const;
  std::string to_string() const;

  bool operator==(const DynkinType&) const = default;
};

// Integer lattice vectors tagged by basis. Coordinates stay small for every
// vector in a reflection orbit of a finite root system.
template <class Tag>
struct LatticeVec {
  std::vector<int> coords;

  LatticeVec() = default;
  explicit LatticeVec(std::vector<int> c) : coords(std::move(c)) {}
  static LatticeVec zero(int n) { return LatticeVec(std::vector<int>(n, 0)); }
  static LatticeVec unit(int n, int node) {
    LatticeVec v = zero(n);
    v.coords[node - 1] = 1;
    return v;
  }

  int size() const { return static_cast<int>(coords.size()); }
  // 1-based node access.
  int operator[](int node) const { return coords[node - 1]; }

  bool is_positive() const;
  bool is_negative() const;
  // A unit vector: a simple (co)root.
  bool is_simple() const;
  int height() const;

  LatticeVec operator-() const {
    LatticeVec r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
  }

  auto operator<=>(const LatticeVec&) const = default;
};

struct RootTag {};
struct CorootTag {};
using RootVec = LatticeVec<RootTag>;
using CorootVec = LatticeVec<CorootTag>;

struct WeightVec {
  std::vector<Rational> coords;

  WeightVec() = default;
  explicit WeightVec(std::vector<Rational> c) : coords(std::move(c)) {}
  static WeightVec zero(int n) { return WeightVec(std::vector<Rational>(n)); }
  static WeightVec fundamental(int n, int node);

  int size() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int node) const { return coords[node - 1]; }

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  WeightVec operator*(const Rational& s) const;

  bool operator==(const WeightVec&) const = default;
};

using CartanMatrix = std::vector<std::vector<int>>;

// Cartan matrix of a single irreducible type, already canonical.
CartanMatrix cartan_matrix(const DynkinComponent& c);

// Number of positive roots, from the classification table.
int positive_root_count(const DynkinType& t);

class RootSystem {
 public:
  explicit RootSystem(const DynkinType& t);
  static RootSystem parse(std::string_view text) { return RootSystem(DynkinType::parse(text)); }

  int rank() const { return n_; }
  const DynkinType& type() const { return type_; }
  const CartanMatrix& cartan() const { return cartan_; }
  // <alpha_root, alpha_coroot^v>, 1-based nodes.
  int cartan(int coroot, int root) const { return cartan_[coroot - 1][root - 1]; }

  RootVec simple_root(int node) const;
  CorootVec simple_coroot(int node) const;

  // s_i(alpha) = alpha - <alpha, alpha_i^v> alpha_i
  RootVec reflect(int node, const RootVec& alpha) const;
  // s_i(gamma) = gamma - <alpha_i, gamma> alpha_i^v
  CorootVec reflect(int node, const CorootVec& gamma) const;
  // s_i(lambda) = lambda - <lambda, alpha_i^v> alpha_i
  WeightVec reflect(int node, const WeightVec& lambda) const;

  // alpha_j in weight coordinates is column j of the Cartan matrix.
  WeightVec weight_of_root(const RootVec& alpha) const;

  // <alpha, gamma> for a root and a coroot.
  int pair(const RootVec& alpha, const CorootVec& gamma) const;

  // Orbit of the simple roots, restricted to positive vectors, sorted.
  std::vector<RootVec> positive_roots() const;
  std::vector<CorootVec> positive_coroots() const;
  int positive_root_count() const { return bsgw::positive_root_count(type_); }

  void check_node(int node) const;

 private:
  DynkinType type_;
  int n_;
  CartanMatrix cartan_;
};

// <lambda, gamma> = sum_i lambda_i gamma_i. Throws InputError on rank mismatch.
Rational pair(const WeightVec& lambda, const CorootVec& gamma);

}  // namespace bsgw
