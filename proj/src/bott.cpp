#include "bsgw/bott.hpp"

#include <algorithm>
#include <numeric>

#include "bsgw/errors.hpp"

namespace bsgw {

int BottCollection::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Integer BottCollection::twist(int j, int l, int k) const {
  auto it = twists.find({j, l, k});
  return it == twists.end() ? Integer(0) : it->second;
}

void BottCollection::validate() const {
  if (dims.empty()) throw InputError("Bott collection needs at least one stage");
  for (std::size_t l = 0; l < dims.size(); ++l)
    if (dims[l] < 1)
      throw InputError("stage " + std::to_string(l + 1) + " has nonpositive dimension " +
                       std::to_string(dims[l]));
  const int m = stages();
  for (const auto& [key, value] : twists) {
    auto [j, l, k] = key;
    if (j < 2 || j > m || l < 1 || l >= j || k < 1 || k > dims[j - 1])
      throw InputError("twist index (" + std::to_string(j) + "," + std::to_string(l) + "," +
                       std::to_string(k) + ") outside 2<=j<=m, 1<=l<j, 1<=k<=n_j");
  }
}

std::size_t BottCollection::ray_index(int stage, int k) const {
  std::size_t idx = 0;
  for (int l = 1; l < stage; ++l) idx += static_cast<std::size_t>(dims[l - 1]) + 1;
  return idx + static_cast<std::size_t>(k);
}

std::size_t BottCollection::coord_index(int stage, int k) const {
  std::size_t idx = 0;
  for (int l = 1; l < stage; ++l) idx += static_cast<std::size_t>(dims[l - 1]);
  return idx + static_cast<std::size_t>(k) - 1;
}

BottFan build_fan(const BottCollection& c) {
  c.validate();
  const int m = c.stages();
  BottFan f;
  f.dim = c.total_dim();
  for (int l = 1; l <= m; ++l) {
    IntVec u0(f.dim, 0);
    for (int k = 1; k <= c.dims[l - 1]; ++k) u0[c.coord_index(l, k)] = -1;
    for (int j = l + 1; j <= m; ++j)
      for (int k = 1; k <= c.dims[j - 1]; ++k) u0[c.coord_index(j, k)] += c.twist(j, l, k);
    f.rays.push_back(std::move(u0));
    for (int k = 1; k <= c.dims[l - 1]; ++k) {
      IntVec e(f.dim, 0);
      e[c.coord_index(l, k)] = 1;
      f.rays.push_back(std::move(e));
    }
  }
  // One maximal cone per omitted tuple (k_1, ..., k_m).
  std::vector<int> omit(m, 0);
  while (true) {
    std::vector<std::size_t> cone;
    for (int l = 1; l <= m; ++l)
      for (int k = 0; k <= c.dims[l - 1]; ++k)
        if (k != omit[l - 1]) cone.push_back(c.ray_index(l, k));
    f.max_cones.push_back(std::move(cone));
    int l = 0;
    while (l < m && ++omit[l] > c.dims[l]) omit[l++] = 0;
    if (l == m) break;
  }
  return f;
}

namespace {

// Fraction-free Gaussian elimination.
Integer determinant(std::vector<IntVec> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t piv = p;
    while (piv < n && a[piv][p] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != p) {
      std::swap(a[piv], a[p]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[n - 1][n - 1];
}

// Columns are the cone generators.
std::vector<IntVec> generator_matrix(const BottFan& f, const std::vector<std::size_t>& cone) {
  std::vector<IntVec> a(f.dim, IntVec(cone.size()));
  for (std::size_t col = 0; col < cone.size(); ++col)
    for (int row = 0; row < f.dim; ++row) a[row][col] = f.rays[cone[col]][row];
  return a;
}

// Solves A x = b exactly; nullopt when A is singular.
std::optional<std::vector<Rational>> solve(const std::vector<IntVec>& a, const IntVec& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t piv = p;
    while (piv < n && sgn(m[piv][p]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p || sgn(m[i][p]) == 0) continue;
      Rational factor = m[i][p] / m[p][p];
      for (std::size_t j = p; j <= n; ++j) m[i][j] -= factor * m[p][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

IntVec stage_sum(const BottFan& f, const BottCollection& c, int stage) {
  IntVec s(f.dim, 0);
  for (int k = 0; k <= c.dims[stage - 1]; ++k) {
    const auto& u = f.rays[c.ray_index(stage, k)];
    for (int i = 0; i < f.dim; ++i) s[i] += u[i];
  }
  return s;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

Rational stage_lambda(const BottCollection& c, const DivisorClass& d, int stage) {
  Rational s = 0;
  for (int k = 0; k <= c.dims[stage - 1]; ++k) s += d.coeffs[c.ray_index(stage, k)];
  return s;
}

void check_divisor(const BottCollection& c, const DivisorClass& d) {
  if (d.coeffs.size() != static_cast<std::size_t>(c.ray_count()))
    throw InputError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, fan has " +
                     std::to_string(c.ray_count()) + " rays");
}

}  // namespace

bool check_smooth(const BottFan& f) {
  for (const auto& cone : f.max_cones) {
    if (cone.size() != static_cast<std::size_t>(f.dim)) return false;
    Integer det = determinant(generator_matrix(f, cone));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

bool PrimRelation::zero_sum() const { return is_zero(u_sum); }

namespace {

using Support = std::vector<std::pair<std::size_t, Integer>>;

// Nonnegative solution over one cone, as its strictly positive support.
std::optional<Support> cone_support(const BottFan& f, const std::vector<std::size_t>& cone, const IntVec& v,
                                    int stage) {
  auto x = solve(generator_matrix(f, cone), v);
  if (!x || std::any_of(x->begin(), x->end(), [](const Rational& q) { return sgn(q) < 0; }))
    return std::nullopt;
  Support support;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (sgn((*x)[i]) == 0) continue;
    if ((*x)[i].get_den() != 1)
      throw InvariantViolation("non-integral primitive relation at stage " + std::to_string(stage));
    support.emplace_back(cone[i], (*x)[i].get_num());
  }
  std::sort(support.begin(), support.end());
  return support;
}

Support exhaustive_search(const BottFan& f, const IntVec& v, int stage) {
  std::optional<Support> found;
  for (const auto& cone : f.max_cones) {
    auto s = cone_support(f, cone, v, stage);
    if (!s) continue;
    if (found && *found != *s)
      throw InvariantViolation("primitive relation at stage " + std::to_string(stage) +
                               " has two different cone expressions");
    found = std::move(s);
  }
  if (!found) throw InvariantViolation("no cone contains u(" + std::to_string(stage) + ")");
  return *found;
}

// Stage l coordinates only meet rays of stages <= l, so after clearing stages
// 1..l-1 the stage-l block must be written over u_l^0..u_l^{n_l} alone: the
// projective-space fan, where the nonnegative expression is unique.
Support descent_search(const BottCollection& c, const BottFan& f, const IntVec& v, int stage) {
  IntVec t = v;
  std::vector<std::size_t> cone;
  for (int l = 1; l <= c.stages(); ++l) {
    Integer c0 = 0;
    for (int k = 1; k <= c.dims[l - 1]; ++k) c0 = std::max(c0, Integer(-t[c.coord_index(l, k)]));
    std::vector<Integer> coeff(c.dims[l - 1] + 1);
    coeff[0] = c0;
    for (int k = 1; k <= c.dims[l - 1]; ++k) coeff[k] = t[c.coord_index(l, k)] + c0;
    int omitted = 0;
    while (coeff[omitted] != 0) ++omitted;
    for (int k = 0; k <= c.dims[l - 1]; ++k) {
      const auto ray = c.ray_index(l, k);
      if (k != omitted) cone.push_back(ray);
      for (int i = 0; i < f.dim; ++i) t[i] -= coeff[k] * f.rays[ray][i];
    }
  }
  if (!is_zero(t)) throw InvariantViolation("stage descent left a remainder for u(" + std::to_string(stage) + ")");
  auto s = cone_support(f, cone, v, stage);
  if (!s) throw InvariantViolation("descent cone does not contain u(" + std::to_string(stage) + ")");
  return *s;
}

}  // namespace

std::vector<PrimRelation> primitive_relations(const BottCollection& c, const DivisorClass& d,
                                              ConeSearch search) {
  check_divisor(c, d);
  const BottFan f = build_fan(c);
  std::vector<PrimRelation> out;
  for (int l = 1; l <= c.stages(); ++l) {
    PrimRelation rel;
    rel.stage = l;
    for (int k = 0; k <= c.dims[l - 1]; ++k) rel.members.push_back(c.ray_index(l, k));
    rel.u_sum = stage_sum(f, c, l);
    rel.lambda_sum = stage_lambda(c, d, l);
    Integer coeff_total = 0;
    if (!rel.zero_sum()) {
      rel.cone_coeffs = search == ConeSearch::Exhaustive ? exhaustive_search(f, rel.u_sum, l)
                                                         : descent_search(c, f, rel.u_sum, l);
      for (const auto& [ray, a] : rel.cone_coeffs) coeff_total += a;
    }
    rel.degree = Integer(c.dims[l - 1] + 1) - coeff_total;
    out.push_back(std::move(rel));
  }
  return out;
}

HlsWidth hls_width(const BottCollection& c, const DivisorClass& d) {
  check_divisor(c, d);
  const BottFan f = build_fan(c);
  std::optional<HlsWidth> best;
  for (int l = 1; l <= c.stages(); ++l) {
    if (!is_zero(stage_sum(f, c, l))) continue;
    Rational lam = stage_lambda(c, d, l);
    if (!best || lam < best->width) best = HlsWidth{lam, l};
  }
  if (!best) throw InvariantViolation("no stage with u(l) = 0");
  return *best;
}

Rational relation_pairing(const DivisorClass& d, const PrimRelation& rel) {
  if (!rel.zero_sum())
    throw InputError("stage " + std::to_string(rel.stage) + " relation has u(l) != 0");
  std::vector<int> indicator(d.coeffs.size(), 0);
  for (auto ray : rel.members) {
    if (ray >= indicator.size()) throw InputError("relation ray outside divisor range");
    indicator[ray] = 1;
  }
  Rational s = 0;
  for (std::size_t rho = 0; rho < d.coeffs.size(); ++rho) s += d.coeffs[rho] * indicator[rho];
  if (s != rel.lambda_sum)
    throw InvariantViolation("indicator pairing " + to_string(s) + " differs from lambda(" +
                             std::to_string(rel.stage) + ") = " + to_string(rel.lambda_sum));
  return s;
}

DegenerateTower degenerate_bott_tower(const BSInput& in, bool force) {
  const auto& rs = in.rs;
  const auto& w = in.word;
  const std::size_t r = w.size();
  if (r == 0) throw InputError("degeneration of the empty word is undefined");
  DegenerateTower t;
  t.condition_p = check_condition_p(build_chain(in));
  if (!t.condition_p.holds) {
    if (!force) {
      std::string msg = "condition (P) fails at k=" + std::to_string(*t.condition_p.failing_k) +
                        ", witness (";
      const auto& pt = *t.condition_p.witness;
      for (std::size_t i = 0; i < pt.size(); ++i) msg += (i ? "," : "") + to_string(pt[i]);
      throw PreconditionError(msg + "); pass --force-degeneration to build it anyway");
    }
    t.hypothesis_violated = true;
  }
  t.collection.dims.assign(r, 1);
  for (std::size_t j = 1; j <= r; ++j)
    for (std::size_t k = j + 1; k <= r; ++k) {
      int pairing = rs.cartan(w.at(j), w.at(k));  // <alpha_{i_k}, alpha_{i_j}^v>
      if (pairing != 0)
        t.collection.twists[{static_cast<int>(k), static_cast<int>(j), 1}] = -pairing;
    }
  for (std::size_t j = 1; j <= r; ++j) {
    WeightVec lambda = WeightVec::zero(rs.rank());
    Rational same_node = 0;
    for (std::size_t l = j; l <= r; ++l) {
      lambda += WeightVec::fundamental(rs.rank(), w.at(l)) * in.m[l - 1];
      if (w.at(l) == w.at(j)) same_node += in.m[l - 1];
    }
    Rational a = pair(lambda, rs.simple_coroot(w.at(j)));
    if (a != same_node)
      throw InvariantViolation("divisor coefficient a_" + std::to_string(j) + " mismatch");
    t.a.push_back(a);
    t.divisor.coeffs.push_back(a);
    t.divisor.coeffs.push_back(0);
  }
  return t;
}

std::pair<Rational, std::size_t> caseline_min(const BSInput& in) {
  const auto& w = in.word;
  const std::size_t r = w.size();
  if (r == 0) throw InputError("caseline width of the empty word is undefined");
  std::optional<std::pair<Rational, std::size_t>> best;
  for (std::size_t j = 1; j <= r; ++j) {
    bool qualifies = true;
    for (std::size_t k = j + 1; k <= r && qualifies; ++k) qualifies = in.rs.cartan(w.at(j), w.at(k)) == 0;
    if (qualifies && (!best || in.m[j - 1] < best->first)) best = std::make_pair(in.m[j - 1], j);
  }
  return *best;
}

Rational caseline_width(const BSInput& in) {
  auto [value, index] = caseline_min(in);
  if (!check_condition_p(build_chain(in)).holds) return value;
  const Rational gw = gromov_width(in).width;
  auto tower = degenerate_bott_tower(in);
  const Rational hls = hls_width(tower.collection, tower.divisor).width;
  if (gw != value || hls != value)
    throw InvariantViolation("under condition (P): caseline " + to_string(value) + ", Gromov width " +
                             to_string(gw) + ", toric width " + to_string(hls) + " for " +
                             in.rs.type().to_string() + " " + in.word.to_string());
  return value;
}

}  // namespace bsgw
