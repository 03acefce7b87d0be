#include "bsgw/selftest.hpp"

#include <algorithm>
#include <functional>

#include "bsgw/errors.hpp"
#include "bsgw/oracles.hpp"

namespace bsgw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

using Check = std::function<std::optional<std::string>(const BSInput&)>;

std::optional<std::string> guarded(const Check& check, const BSInput& in) {
  try {
    return check(in);
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

// Greedy shrinking: shorter words (prefixes and suffixes stay reduced) and
// smaller weights, as long as the check keeps failing.
BSInput shrink(BSInput in, const Check& check) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<BSInput> candidates;
    if (in.length() > 1) {
      auto m = in.m;
      Word prefix(std::vector<int>(in.word.letters.begin(), in.word.letters.end() - 1));
      candidates.push_back(BSInput::make(in.rs, prefix, std::vector<Rational>(m.begin(), m.end() - 1)));
      Word suffix(std::vector<int>(in.word.letters.begin() + 1, in.word.letters.end()));
      candidates.push_back(BSInput::make(in.rs, suffix, std::vector<Rational>(m.begin() + 1, m.end())));
    }
    for (std::size_t j = 0; j < in.m.size(); ++j) {
      if (in.m[j] == 1) continue;
      auto m = in.m;
      m[j] = 1;
      candidates.push_back(BSInput::make(in.rs, in.word, m));
    }
    for (auto& c : candidates) {
      if (guarded(check, c)) {
        in = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return in;
}

SuiteResult run_input_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                            std::size_t max_len, const Check& check,
                            const std::function<void(const BSInput&, SuiteResult&)>& tally = {}) {
  SuiteResult res;
  res.name = name;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    BSInput in = random_trial(rng, max_len);
    ++res.trials;
    auto err = guarded(check, in);
    if (tally) tally(in, res);
    if (!err) continue;
    if (res.failures++ == 0) {
      res.first_error = "trial " + std::to_string(t) + ": " + *err;
      res.repro = JobSpec::from_input(shrink(in, check)).to_json();
    }
  }
  return res;
}

std::string fail(const std::string& what, const BSInput& in) {
  return what + " for " + in.rs.type().to_string() + " " + in.word.to_string();
}

std::optional<std::string> check_cor25(const BSInput& in) {
  if (oracle::weyl_length(in.rs, in.word) != in.length()) return fail("orbit-count length disagrees", in);
  const auto deg = deg_matrix(in);
  const auto ell = areas(in);
  const std::size_t r = in.length();
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      if (deg[k][j] < 0) return fail("negative deg entry", in);
      if (k == j && deg[k][j] != 1) return fail("deg diagonal != 1", in);
      if (k < j && deg[k][j] != 0) return fail("deg not triangular", in);
    }
  for (std::size_t j = 0; j < r; ++j) {
    Rational s = 0;
    for (std::size_t k = 0; k < r; ++k) s += in.m[k] * deg[k][j];
    if (s != ell[j]) return fail("area differs from sum_k m_k deg[k][j]", in);
  }
  if (ell[r - 1] != in.m[r - 1]) return fail("l_r != m_r", in);
  Rational all = *std::min_element(ell.begin(), ell.end());
  std::optional<Rational> minimal;
  for (auto j : minimal_curves(in))
    if (!minimal || ell[j - 1] < *minimal) minimal = ell[j - 1];
  if (!minimal || *minimal != all) return fail("min over minimal curves != min over all curves", in);
  if (gromov_width(in).width != all) return fail("gromov_width disagrees", in);
  return std::nullopt;
}

std::optional<std::string> check_antican2(const BSInput& in) {
  const auto minimal = minimal_curves(in);
  const auto antican = antican_degrees(in);
  IndexSet deg2;
  for (std::size_t j = 0; j < antican.size(); ++j) {
    if (antican[j] < 2) return fail("anticanonical degree below 2", in);
    if (antican[j] == 2) deg2.push_back(j + 1);
  }
  if (deg2 != minimal) return fail("minimal curves != {j : -K.C_j = 2}", in);
  for (auto j : lines(in))
    if (!std::binary_search(minimal.begin(), minimal.end(), j)) return fail("line that is not minimal", in);
  return std::nullopt;
}

std::optional<std::string> check_caseline(const BSInput& in) {
  const Rational gw = gromov_width(in).width;
  const Rational cl = caseline_min(in).first;
  if (cl < gw) return fail("caseline minimum below Gromov width", in);
  if (!check_condition_p(build_chain(in)).holds) return std::nullopt;
  auto tower = degenerate_bott_tower(in);
  const Rational hls = hls_width(tower.collection, tower.divisor).width;
  if (gw != cl || hls != cl)
    return fail("under (P): width " + to_string(gw) + ", caseline " + to_string(cl) + ", toric " +
                    to_string(hls),
                in);
  caseline_width(in);
  return std::nullopt;
}

std::optional<std::string> check_pmin(const BSInput& in) {
  const auto chain = build_chain(in);
  if (sgn(chain.A(chain.r).constant) < 0) return std::nullopt;
  for (std::size_t k = chain.r - 1; k >= 1; --k) {
    const auto got = min_affine_over_chain(chain, k);
    const auto want = oracle::vertex_min(chain, k);
    if (got.value != want)
      return fail("A_" + std::to_string(k) + " minimum " + to_string(got.value) + " != oracle " + to_string(want), in);
    std::vector<Rational> x(chain.r);
    std::copy(got.point.begin(), got.point.end(), x.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t j = k + 1; j <= chain.r; ++j)
      if (sgn(x[j - 1]) < 0 || x[j - 1] > chain.A(j).evaluate(x)) return fail("minimizer outside region", in);
    if (chain.A(k).evaluate(x) != got.value) return fail("minimizer value mismatch", in);
    if (sgn(got.value) < 0) break;  // region for smaller k is not certified
  }
  return std::nullopt;
}

std::optional<std::string> check_scaling(const BSInput& in, const Rational& a) {
  const auto base = gromov_width(in);
  const auto scaled_in = in.scaled(a);
  const auto scaled = gromov_width(scaled_in);
  if (scaled.width != a * base.width) return fail("width not homogeneous", in);
  if (scaled.witness != base.witness) return fail("witness changed under scaling", in);
  const auto p0 = check_condition_p(build_chain(in));
  const auto p1 = check_condition_p(build_chain(scaled_in));
  if (p0.holds != p1.holds || p0.failing_k != p1.failing_k) return fail("condition (P) not scale invariant", in);
  for (std::size_t k = 0; k < p0.per_k.size(); ++k) {
    if (p0.per_k[k].has_value() != p1.per_k[k].has_value()) return fail("per-k certification changed", in);
    if (!p0.per_k[k]) continue;
    if (p1.per_k[k]->value != a * p0.per_k[k]->value) return fail("per-k minimum not homogeneous", in);
    for (std::size_t i = 0; i < p0.per_k[k]->point.size(); ++i)
      if (p1.per_k[k]->point[i] != a * p0.per_k[k]->point[i]) return fail("minimizer did not scale", in);
  }
  return std::nullopt;
}

SuiteResult run_smoothfan(std::uint64_t trials, std::uint64_t seed) {
  SuiteResult res;
  res.name = "smoothfan";
  auto check = [](const BottCollection& c, const DivisorClass& d) -> std::optional<std::string> {
    try {
      if (!check_smooth(build_fan(c))) return "fan not smooth";
      auto rels = primitive_relations(c, d);
      if (rels.size() != static_cast<std::size_t>(c.stages())) return "wrong number of primitive relations";
      if (!rels.back().zero_sum()) return "last stage has u(m) != 0";
      for (const auto& rel : rels) {
        if (!rel.zero_sum()) continue;
        if (relation_pairing(d, rel) != rel.lambda_sum) return "relation pairing != lambda(l)";
        if (rel.degree != c.dims[rel.stage - 1] + 1) return "zero-sum relation degree != n_l + 1";
      }
      hls_width(c, d);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    auto [c, d] = random_collection(rng);
    ++res.trials;
    auto err = check(c, d);
    if (!err) continue;
    if (res.failures++ == 0) {
      res.first_error = "trial " + std::to_string(t) + ": " + *err;
      // Drop twists while the failure persists.
      std::vector<std::tuple<int, int, int>> keys;
      for (const auto& kv : c.twists) keys.push_back(kv.first);
      for (const auto& key : keys) {
        auto saved = c.twists.at(key);
        c.twists.erase(key);
        if (!check(c, d)) c.twists[key] = saved;
      }
      json div = json::array();
      for (const auto& q : d.coeffs) div.push_back(to_string(q));
      res.repro = {{"collection", collection_json(c)}, {"divisor", div}};
    }
  }
  return res;
}

}  // namespace

const std::vector<std::string>& trial_types() {
  static const std::vector<std::string> types = {"A2", "A3", "A4", "A5", "B2", "B3",
                                                 "B4", "C3", "D4", "G2", "F4"};
  return types;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

BSInput random_trial(std::mt19937_64& rng, std::size_t max_len) {
  const auto& types = trial_types();
  RootSystem rs = RootSystem::parse(types[uniform(rng, 0, types.size() - 1)]);
  const std::size_t cap = std::min<std::size_t>(max_len, rs.positive_root_count());
  const std::size_t len = uniform(rng, 1, cap);
  Word w = random_reduced_word(rs, len, rng());
  std::vector<Rational> m;
  for (std::size_t j = 0; j < len; ++j) m.emplace_back(static_cast<long>(uniform(rng, 1, 10)));
  return BSInput::make(std::move(rs), std::move(w), std::move(m));
}

std::pair<BottCollection, DivisorClass> random_collection(std::mt19937_64& rng) {
  BottCollection c;
  const int stages = static_cast<int>(uniform(rng, 1, 4));
  for (int l = 0; l < stages; ++l) c.dims.push_back(static_cast<int>(uniform(rng, 1, 3)));
  for (int j = 2; j <= stages; ++j)
    for (int l = 1; l < j; ++l)
      for (int k = 1; k <= c.dims[j - 1]; ++k) {
        long a = static_cast<long>(uniform(rng, 0, 6)) - 3;
        if (a != 0) c.twists[{j, l, k}] = a;
      }
  DivisorClass d;
  for (int i = 0; i < c.ray_count(); ++i) d.coeffs.emplace_back(static_cast<long>(uniform(rng, 0, 5)));
  return {std::move(c), std::move(d)};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cor25", "antican2", "caseline", "pmin-oracle", "scaling",
                                                 "smoothfan"};
  return names;
}

std::vector<SuiteResult> run_selftest(const std::string& suite, std::uint64_t trials, std::uint64_t seed) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw InputError("unknown selftest suite \"" + suite + "\"");
  std::vector<SuiteResult> out;
  auto wanted = [&](const char* n) { return suite == "all" || suite == n; };

  if (wanted("cor25")) out.push_back(run_input_suite("cor25", trials, seed, 12, check_cor25));
  if (wanted("antican2")) out.push_back(run_input_suite("antican2", trials, seed, 12, check_antican2));
  if (wanted("caseline")) {
    std::uint64_t with_p = 0;
    auto res = run_input_suite("caseline", trials, seed, 12, check_caseline,
                               [&](const BSInput& in, SuiteResult&) {
                                 try {
                                   with_p += check_condition_p(build_chain(in)).holds;
                                 } catch (const Error&) {
                                 }
                               });
    res.note = "condition (P) held in " + std::to_string(with_p) + "/" + std::to_string(res.trials) + " trials";
    out.push_back(std::move(res));
  }
  if (wanted("pmin-oracle")) out.push_back(run_input_suite("pmin-oracle", trials, seed, 10, check_pmin));
  if (wanted("scaling")) {
    SuiteResult res;
    res.name = "scaling";
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(trial_seed(seed, t));
      BSInput in = random_trial(rng, 12);
      Rational a(static_cast<long>(uniform(rng, 1, 20)), static_cast<long>(uniform(rng, 1, 20)));
      a.canonicalize();
      Check check = [a](const BSInput& x) { return check_scaling(x, a); };
      ++res.trials;
      auto err = guarded(check, in);
      if (!err) continue;
      if (res.failures++ == 0) {
        res.first_error = "trial " + std::to_string(t) + " (a=" + to_string(a) + "): " + *err;
        res.repro = JobSpec::from_input(shrink(in, check)).to_json();
      }
    }
    out.push_back(std::move(res));
  }
  if (wanted("smoothfan")) out.push_back(run_smoothfan(trials, seed));
  return out;
}

json selftest_json(const std::vector<SuiteResult>& results, std::uint64_t trials, std::uint64_t seed) {
  json suites = json::array();
  bool all = true;
  for (const auto& r : results) {
    json s = {{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"passed", r.passed()}};
    s["error"] = r.first_error ? json(*r.first_error) : json(nullptr);
    s["repro"] = r.repro ? *r.repro : json(nullptr);
    if (!r.note.empty()) s["note"] = r.note;
    suites.push_back(std::move(s));
    all &= r.passed();
  }
  json warnings = json::array();
  if (trials == 0) warnings.push_back("zero trials requested: suites pass vacuously");
  return {{"schema", kSchema}, {"command", "selftest"}, {"seed", seed},      {"trials", trials},
          {"suites", suites},  {"passed", all},         {"warnings", warnings}};
}

}  // namespace bsgw
