#include "bsgw/oracles.hpp"

#include <optional>

#include "bsgw/errors.hpp"

namespace bsgw::oracle {

std::size_t weyl_length(const RootSystem& rs, const Word& w) {
  std::size_t inversions = 0;
  for (auto alpha : rs.positive_roots()) {
    for (std::size_t p = w.size(); p >= 1; --p) alpha = rs.reflect(w.at(p), alpha);
    if (alpha.is_negative()) ++inversions;
  }
  return inversions;
}

Rational vertex_min(const GKChain& c, std::size_t k) {
  const std::size_t free_vars = c.r - k;
  if (free_vars >= 63) throw InputError("vertex enumeration too large");
  std::optional<Rational> best;
  std::vector<Rational> x(c.r);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << free_vars); ++pattern) {
    for (std::size_t j = c.r; j > k; --j) {
      bool upper = (pattern >> (j - k - 1)) & 1U;
      x[j - 1] = upper ? c.A(j).evaluate(x) : Rational(0);
    }
    Rational v = c.A(k).evaluate(x);
    if (!best || v < *best) best = v;
  }
  return *best;
}

namespace {

// Upper bound on A_j over the region, from the sign of each coefficient.
std::vector<Integer> box_bounds(const GKChain& c) {
  std::vector<Integer> bound(c.r, 0);
  for (std::size_t j = c.r; j >= 1; --j) {
    Rational b = c.A(j).constant;
    for (std::size_t l = j + 1; l <= c.r; ++l)
      if (sgn(c.A(j).coeff(l)) > 0) b += c.A(j).coeff(l) * bound[l - 1];
    bound[j - 1] = sgn(b) > 0 ? floor(b) : Integer(0);
  }
  return bound;
}

}  // namespace

std::uint64_t box_lattice_count(const GKChain& c) {
  auto bound = box_bounds(c);
  std::vector<Integer> cur(c.r, 0);
  std::vector<Rational> x(c.r);
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t v = 0; v < c.r; ++v) x[v] = cur[v];
    bool inside = true;
    for (std::size_t j = 1; j <= c.r && inside; ++j) inside = x[j - 1] <= c.A(j).evaluate(x);
    if (inside) ++count;
    std::size_t v = 0;
    while (v < c.r && ++cur[v] > bound[v]) cur[v++] = 0;
    if (v == c.r) break;
  }
  return count;
}

}  // namespace bsgw::oracle
