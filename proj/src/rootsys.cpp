#include "bsgw/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "bsgw/errors.hpp"

namespace bsgw {

namespace {

void link(CartanMatrix& c, int i, int j, int to_i = -1, int to_j = -1) {
  // c[i][j] = <alpha_j, alpha_i^v>
  c[i - 1][j - 1] = to_i;
  c[j - 1][i - 1] = to_j;
}

void canonicalize_into(const DynkinComponent& c, std::vector<DynkinComponent>& out) {
  auto bad = [&] {
    return InputError(std::string("unsupported Dynkin type ") +
                      static_cast<char>(c.family) + std::to_string(c.rank));
  };
  if (c.rank < 1) throw bad();
  switch (c.family) {
    case Family::A:
      out.push_back(c);
      return;
    case Family::B:
      out.push_back(c.rank == 1 ? DynkinComponent{Family::A, 1} : c);
      return;
    case Family::C:
      if (c.rank == 1) out.push_back({Family::A, 1});
      else if (c.rank == 2) out.push_back({Family::B, 2});
      else out.push_back(c);
      return;
    case Family::D:
      if (c.rank == 1) throw bad();
      if (c.rank == 2) {
        out.push_back({Family::A, 1});
        out.push_back({Family::A, 1});
      } else if (c.rank == 3) {
        out.push_back({Family::A, 3});
      } else {
        out.push_back(c);
      }
      return;
    case Family::E:
      if (c.rank < 6 || c.rank > 8) throw bad();
      out.push_back(c);
      return;
    case Family::F:
      if (c.rank != 4) throw bad();
      out.push_back(c);
      return;
    case Family::G:
      if (c.rank != 2) throw bad();
      out.push_back(c);
      return;
  }
  throw bad();
}

template <class Tag>
std::vector<LatticeVec<Tag>> positive_orbit(const RootSystem& rs) {
  std::set<LatticeVec<Tag>> seen;
  std::vector<LatticeVec<Tag>> frontier;
  for (int i = 1; i <= rs.rank(); ++i) {
    auto v = LatticeVec<Tag>::unit(rs.rank(), i);
    if (seen.insert(v).second) frontier.push_back(v);
  }
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= rs.rank(); ++i) {
      auto w = rs.reflect(i, v);
      if (w.is_positive() && seen.insert(w).second) frontier.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

DynkinType DynkinType::parse(std::string_view text) {
  DynkinType t;
  std::size_t pos = 0;
  while (true) {
    auto plus = text.find('+', pos);
    std::string_view part = text.substr(pos, plus == std::string_view::npos ? plus : plus - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.size() < 2) throw InputError("malformed Dynkin type \"" + std::string(text) + "\"");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(part.front())));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
      throw InputError(std::string("unknown Dynkin family '") + part.front() + "'");
    int rank = 0;
    auto digits = part.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InputError("malformed Dynkin rank in \"" + std::string(part) + "\"");
    t.components.push_back({static_cast<Family>(f), rank});
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return t.canonical();
}

DynkinType DynkinType::canonical() const {
  DynkinType out;
  for (const auto& c : components) canonicalize_into(c, out.components);
  if (out.components.empty()) throw InputError("empty Dynkin type");
  return out;
}

int DynkinType::rank() const {
  int n = 0;
  for (const auto& c : components) n += c.rank;
  return n;
}

std::string DynkinType::to_string() const {
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += '+';
    s += static_cast<char>(c.family);
    s += std::to_string(c.rank);
  }
  return s;
}

CartanMatrix cartan_matrix(const DynkinComponent& c) {
  const int n = c.rank;
  CartanMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  switch (c.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      // alpha_n short
      link(m, n - 1, n, -1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      // alpha_n long
      link(m, n - 1, n, -2, -1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      link(m, n - 2, n);
      break;
    case Family::E:
      link(m, 1, 3);
      link(m, 2, 4);
      for (int i = 3; i < n; ++i) link(m, i, i + 1);
      break;
    case Family::F:
      link(m, 1, 2);
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(m, 2, 3, -1, -2);
      link(m, 3, 4);
      break;
    case Family::G:
      // <alpha_2, alpha_1^v> = -1, <alpha_1, alpha_2^v> = -3
      link(m, 1, 2, -1, -3);
      break;
  }
  return m;
}

int positive_root_count(const DynkinType& t) {
  int total = 0;
  for (const auto& c : t.components) {
    const int n = c.rank;
    switch (c.family) {
      case Family::A: total += n * (n + 1) / 2; break;
      case Family::B:
      case Family::C: total += n * n; break;
      case Family::D: total += n * (n - 1); break;
      case Family::E: total += n == 6 ? 36 : n == 7 ? 63 : 120; break;
      case Family::F: total += 24; break;
      case Family::G: total += 6; break;
    }
  }
  return total;
}

template <class Tag>
bool LatticeVec<Tag>::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any |= c > 0;
  }
  return any;
}

template <class Tag>
bool LatticeVec<Tag>::is_negative() const {
  return (-*this).is_positive();
}

template <class Tag>
bool LatticeVec<Tag>::is_simple() const {
  int ones = 0;
  for (int c : coords) {
    if (c == 1) ++ones;
    else if (c != 0) return false;
  }
  return ones == 1;
}

template <class Tag>
int LatticeVec<Tag>::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

template struct LatticeVec<RootTag>;
template struct LatticeVec<CorootTag>;

WeightVec WeightVec::fundamental(int n, int node) {
  WeightVec w = zero(n);
  w.coords[node - 1] = 1;
  return w;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (o.size() != size()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (o.size() != size()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

WeightVec WeightVec::operator*(const Rational& s) const {
  WeightVec r = *this;
  for (auto& c : r.coords) c *= s;
  return r;
}

RootSystem::RootSystem(const DynkinType& t) : type_(t.canonical()), n_(type_.rank()) {
  cartan_.assign(n_, std::vector<int>(n_, 0));
  int offset = 0;
  for (const auto& comp : type_.components) {
    auto block = cartan_matrix(comp);
    for (int i = 0; i < comp.rank; ++i)
      for (int j = 0; j < comp.rank; ++j) cartan_[offset + i][offset + j] = block[i][j];
    offset += comp.rank;
  }
}

void RootSystem::check_node(int node) const {
  if (node < 1 || node > n_)
    throw InputError("node index " + std::to_string(node) + " out of range 1.." + std::to_string(n_));
}

RootVec RootSystem::simple_root(int node) const {
  check_node(node);
  return RootVec::unit(n_, node);
}

CorootVec RootSystem::simple_coroot(int node) const {
  check_node(node);
  return CorootVec::unit(n_, node);
}

RootVec RootSystem::reflect(int node, const RootVec& alpha) const {
  check_node(node);
  if (alpha.size() != n_) throw InputError("root rank mismatch");
  int p = 0;
  for (int j = 0; j < n_; ++j) p += alpha.coords[j] * cartan_[node - 1][j];
  RootVec r = alpha;
  r.coords[node - 1] -= p;
  return r;
}

CorootVec RootSystem::reflect(int node, const CorootVec& gamma) const {
  check_node(node);
  if (gamma.size() != n_) throw InputError("coroot rank mismatch");
  int p = 0;
  for (int j = 0; j < n_; ++j) p += gamma.coords[j] * cartan_[j][node - 1];
  CorootVec r = gamma;
  r.coords[node - 1] -= p;
  return r;
}

WeightVec RootSystem::reflect(int node, const WeightVec& lambda) const {
  check_node(node);
  if (lambda.size() != n_) throw InputError("weight rank mismatch");
  Rational p = lambda.coords[node - 1];
  WeightVec r = lambda;
  for (int k = 0; k < n_; ++k) r.coords[k] -= p * cartan_[k][node - 1];
  return r;
}

WeightVec RootSystem::weight_of_root(const RootVec& alpha) const {
  if (alpha.size() != n_) throw InputError("root rank mismatch");
  WeightVec w = WeightVec::zero(n_);
  for (int k = 0; k < n_; ++k) {
    long s = 0;
    for (int j = 0; j < n_; ++j) s += static_cast<long>(cartan_[k][j]) * alpha.coords[j];
    w.coords[k] = s;
  }
  return w;
}

int RootSystem::pair(const RootVec& alpha, const CorootVec& gamma) const {
  if (alpha.size() != n_ || gamma.size() != n_) throw InputError("rank mismatch");
  int s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += gamma.coords[i] * cartan_[i][j] * alpha.coords[j];
  return s;
}

std::vector<RootVec> RootSystem::positive_roots() const { return positive_orbit<RootTag>(*this); }

std::vector<CorootVec> RootSystem::positive_coroots() const {
  return positive_orbit<CorootTag>(*this);
}

Rational pair(const WeightVec& lambda, const CorootVec& gamma) {
  if (lambda.size() != gamma.size())
    throw InputError("pairing rank mismatch: " + std::to_string(lambda.size()) + " vs " +
                     std::to_string(gamma.size()));
  Rational s = 0;
  for (int i = 0; i < lambda.size(); ++i) s += lambda.coords[i] * gamma.coords[i];
  return s;
}

}  // namespace bsgw
