#include "bsgw/bscurve.hpp"

#include "bsgw/errors.hpp"

namespace bsgw {

BSInput BSInput::make(RootSystem rs, Word word, std::vector<Rational> m) {
  check_word(rs, word);
  require_reduced(rs, word);
  if (m.size() != word.size())
    throw InputError("expected " + std::to_string(word.size()) + " weights m_j, got " +
                     std::to_string(m.size()));
  for (std::size_t j = 0; j < m.size(); ++j) {
    m[j].canonicalize();
    if (sgn(m[j]) <= 0)
      throw InputError("m_" + std::to_string(j + 1) + " = " + to_string(m[j]) + " is not positive");
  }
  return BSInput{std::move(rs), std::move(word), std::move(m)};
}

BSInput BSInput::scaled(const Rational& factor) const {
  Rational a = factor;
  a.canonicalize();
  auto out = *this;
  for (auto& q : out.m) q *= a;
  return make(out.rs, out.word, out.m);
}

IntMatrix deg_matrix(const BSInput& in) {
  const auto& rs = in.rs;
  const auto& w = in.word;
  const std::size_t r = w.size();
  require_reduced(rs, w);
  IntMatrix deg(r, std::vector<int>(r, 0));
  for (std::size_t j = 1; j <= r; ++j) {
    CorootVec gamma = rs.simple_coroot(w.at(j));
    deg[j - 1][j - 1] = gamma[w.at(j)];
    for (std::size_t k = j + 1; k <= r; ++k) {
      gamma = rs.reflect(w.at(k), gamma);
      deg[k - 1][j - 1] = gamma[w.at(k)];
    }
  }
  return deg;
}

std::vector<int> antican_degrees(const BSInput& in) {
  const auto& rs = in.rs;
  const auto& w = in.word;
  require_reduced(rs, w);
  std::vector<int> out;
  out.reserve(w.size());
  for (std::size_t j = 1; j <= w.size(); ++j) {
    CorootVec gamma = rs.simple_coroot(w.at(j));
    for (std::size_t k = j + 1; k <= w.size(); ++k) gamma = rs.reflect(w.at(k), gamma);
    out.push_back(gamma.height() + 1);
  }
  return out;
}

IndexSet minimal_curves(const BSInput& in) {
  const auto& rs = in.rs;
  const auto& w = in.word;
  require_reduced(rs, w);
  IndexSet out;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    RootVec alpha = rs.simple_root(w.at(j));
    for (std::size_t k = j + 1; k <= w.size(); ++k) alpha = rs.reflect(w.at(k), alpha);
    if (alpha.is_simple()) out.push_back(j);
  }
  return out;
}

namespace {

IndexSet lines_from(const IntMatrix& deg) {
  IndexSet out;
  const std::size_t r = deg.size();
  for (std::size_t j = 0; j < r; ++j) {
    bool line = true;
    for (std::size_t k = j + 1; k < r && line; ++k) line = deg[k][j] == 0;
    if (line) out.push_back(j + 1);
  }
  return out;
}

std::vector<Rational> areas_from(const IntMatrix& deg, const std::vector<Rational>& m) {
  const std::size_t r = deg.size();
  std::vector<Rational> out(r);
  for (std::size_t j = 0; j < r; ++j) {
    Rational s = m[j];
    for (std::size_t k = j + 1; k < r; ++k) s += m[k] * deg[k][j];
    out[j] = s;
  }
  return out;
}

// Smallest index attaining the minimum over `indices` (1-based).
std::size_t argmin(const std::vector<Rational>& values, const IndexSet& indices) {
  std::size_t best = 0;
  for (std::size_t j : indices)
    if (best == 0 || values[j - 1] < values[best - 1]) best = j;
  return best;
}

}  // namespace

IndexSet lines(const BSInput& in) { return lines_from(deg_matrix(in)); }

std::vector<Rational> areas(const BSInput& in) {
  if (in.m.size() != in.word.size()) throw InputError("weight count does not match word length");
  for (const auto& q : in.m)
    if (sgn(q) <= 0) throw InputError("weights m_j must be positive");
  return areas_from(deg_matrix(in), in.m);
}

CurveReport gromov_width(const BSInput& in) {
  if (in.word.empty()) throw InputError("Gromov width of the empty word (a point) is undefined");
  CurveReport rep;
  rep.deg = deg_matrix(in);
  rep.areas = areas(in);
  rep.antican = antican_degrees(in);
  rep.minimal_set = minimal_curves(in);
  rep.line_set = lines_from(rep.deg);

  IndexSet all(in.length());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j + 1;
  rep.witness = argmin(rep.areas, all);
  rep.width = rep.areas[rep.witness - 1];

  if (rep.minimal_set.empty())
    throw InvariantViolation("no minimal curve found for " + in.word.to_string());
  rep.minimal_witness = argmin(rep.areas, rep.minimal_set);
  rep.minimal_min = rep.areas[rep.minimal_witness - 1];
  if (rep.minimal_min != rep.width)
    throw InvariantViolation("min over minimal curves " + to_string(rep.minimal_min) +
                             " differs from min over all T-stable curves " + to_string(rep.width) +
                             " for " + in.rs.type().to_string() + " " + in.word.to_string());
  return rep;
}

}  // namespace bsgw
