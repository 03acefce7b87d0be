#include "bsgw/gkpoly.hpp"

#include "bsgw/errors.hpp"

namespace bsgw {

AffineForm AffineForm::constant_form(std::size_t r, std::size_t first_var, Rational c) {
  AffineForm f;
  f.first_var = first_var;
  f.coeffs.assign(r, Rational(0));
  f.constant = std::move(c);
  return f;
}

bool AffineForm::is_constant() const {
  for (const auto& q : coeffs)
    if (sgn(q) != 0) return false;
  return true;
}

Rational AffineForm::evaluate(const std::vector<Rational>& x) const {
  Rational s = constant;
  for (std::size_t v = first_var; v <= coeffs.size(); ++v)
    if (sgn(coeffs[v - 1]) != 0) s += coeffs[v - 1] * x[v - 1];
  return s;
}

GKChain build_chain(const BSInput& in) {
  const auto& rs = in.rs;
  const auto& w = in.word;
  require_reduced(rs, w);
  const std::size_t r = w.size();
  GKChain c;
  c.r = r;
  c.forms.reserve(r);
  for (std::size_t k = 1; k <= r; ++k) {
    const CorootVec target = rs.simple_coroot(w.at(k));
    WeightVec lambda = WeightVec::zero(rs.rank());
    for (std::size_t l = k; l <= r; ++l) lambda += WeightVec::fundamental(rs.rank(), w.at(l)) * in.m[l - 1];
    AffineForm f = AffineForm::constant_form(r, k + 1, pair(lambda, target));
    for (std::size_t l = k + 1; l <= r; ++l)
      f.coeffs[l - 1] = -pair(rs.weight_of_root(rs.simple_root(w.at(l))), target);
    c.forms.push_back(std::move(f));
  }
  return c;
}

namespace {

ChainMinimum minimize(const GKChain& c, std::size_t k) {
  const std::size_t r = c.r;
  AffineForm f = c.A(k);
  // at_upper[j-1]: x_j sits at its upper bound A_j rather than at 0.
  std::vector<bool> at_upper(r, false);
  for (std::size_t j = k + 1; j <= r; ++j) {
    Rational a = f.coeff(j);
    if (sgn(a) >= 0) {
      f.coeffs[j - 1] = 0;
      continue;
    }
    at_upper[j - 1] = true;
    const AffineForm& bound = c.A(j);
    f.coeffs[j - 1] = 0;
    f.constant += a * bound.constant;
    for (std::size_t l = j + 1; l <= r; ++l) f.coeffs[l - 1] += a * bound.coeff(l);
  }
  ChainMinimum out;
  out.value = f.constant;
  std::vector<Rational> x(r);
  for (std::size_t j = r; j > k; --j) x[j - 1] = at_upper[j - 1] ? c.A(j).evaluate(x) : Rational(0);
  out.point.assign(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  return out;
}

}  // namespace

ChainMinimum min_affine_over_chain(const GKChain& c, std::size_t k) {
  if (k < 1 || k > c.r)
    throw InputError("chain index " + std::to_string(k) + " out of range 1.." + std::to_string(c.r));
  if (k == c.r) return {c.A(k).constant, {}};
  if (sgn(c.A(c.r).constant) < 0)
    throw PreconditionError("chain region is empty: A_" + std::to_string(c.r) + " < 0");
  for (std::size_t j = c.r - 1; j > k; --j) {
    auto mj = minimize(c, j);
    if (sgn(mj.value) < 0)
      throw PreconditionError("chain region for A_" + std::to_string(k) + " is malformed: A_" +
                              std::to_string(j) + " reaches " + to_string(mj.value));
  }
  return minimize(c, k);
}

ConditionPReport check_condition_p(const GKChain& c) {
  ConditionPReport rep;
  if (c.r == 0) return rep;
  rep.per_k.resize(c.r - 1);
  if (sgn(c.A(c.r).constant) < 0) {
    rep.holds = false;
    rep.failing_k = c.r;
    rep.witness = std::vector<Rational>{};
    return rep;
  }
  for (std::size_t k = c.r - 1; k >= 1; --k) {
    auto mk = minimize(c, k);
    const bool negative = sgn(mk.value) < 0;
    rep.per_k[k - 1] = mk;
    if (negative) {
      rep.holds = false;
      rep.failing_k = k;
      rep.witness = mk.point;
      break;
    }
  }
  return rep;
}

namespace {

struct Enumerator {
  const GKChain& c;
  std::uint64_t cap;
  bool collect;
  const std::function<void(const std::vector<Integer>&)>& sink;
  LatticeResult result;
  std::vector<Rational> x;

  void run(std::size_t j) {
    if (j == 0) {
      if (++result.count > cap)
        throw ResourceError("lattice point count exceeds cap " + std::to_string(cap), result.count - 1);
      if (sink || collect) {
        std::vector<Integer> p(x.size());
        for (std::size_t v = 0; v < x.size(); ++v) p[v] = x[v].get_num();
        if (sink) sink(p);
        if (collect) result.points.push_back(std::move(p));
      }
      return;
    }
    Integer upper = floor(c.A(j).evaluate(x));
    for (Integer v = 0; v <= upper; ++v) {
      x[j - 1] = v;
      run(j - 1);
    }
    x[j - 1] = 0;
  }
};

}  // namespace

LatticeResult lattice_points(const GKChain& c, std::uint64_t cap, bool collect,
                             const std::function<void(const std::vector<Integer>&)>& sink) {
  if (cap == 0) throw InputError("lattice point cap must be positive");
  Enumerator e{c, cap, collect, sink, {}, std::vector<Rational>(c.r)};
  e.run(c.r);
  return std::move(e.result);
}

}  // namespace bsgw
