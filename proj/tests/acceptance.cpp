// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "bsgw/bott.hpp"
#include "bsgw/errors.hpp"
#include "bsgw/oracles.hpp"
#include "bsgw/selftest.hpp"

using namespace bsgw;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr int kTrials = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

BSInput trial_input(int t, std::size_t max_len = 12) {
  std::mt19937_64 rng(trial_seed(kSeed, static_cast<std::uint64_t>(t)));
  return random_trial(rng, max_len);
}

std::string describe(const BSInput& in) {
  return in.rs.type().to_string() + " " + in.word.to_string();
}

// 1. Running example family: A2, (1,2,1), m1 + m2 < m3.
Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  auto a2 = RootSystem::parse("A2");
  for (int t = 0; t < 20; ++t) {
    const long m1 = 1 + static_cast<long>(rng() % 10), m2 = 1 + static_cast<long>(rng() % 10);
    const long m3 = m1 + m2 + 1 + static_cast<long>(rng() % 10);
    auto in = BSInput::make(a2, {1, 2, 1}, {Rational(m1), Rational(m2), Rational(m3)});
    const std::string tag = "m=(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) + ")";
    if (areas(in) != std::vector<Rational>{Rational(m1 + m2), Rational(m2 + m3), Rational(m3)}) o.fail(tag + " areas");
    if (gromov_width(in).width != m1 + m2) o.fail(tag + " width");
    auto chain = build_chain(in);
    auto cp = check_condition_p(chain);
    if (cp.holds || !cp.witness) {
      o.fail(tag + " (P) did not fail");
      continue;
    }
    const std::size_t k = *cp.failing_k;
    const auto& f = chain.A(k);
    // evaluate() takes the full x_1..x_r; the witness covers x_{k+1}..x_r
    std::vector<Rational> x(chain.r, Rational(0)), ref(chain.r, Rational(0));
    std::copy(cp.witness->begin(), cp.witness->end(), x.begin() + static_cast<long>(k));
    ref.back() = m3;
    const Rational at_witness = f.evaluate(x);
    if (at_witness >= 0) o.fail(tag + " witness value not negative");
    if (k == 1 && at_witness > f.evaluate(ref)) o.fail(tag + " witness worse than (0, m3)");
  }
  return o;
}

// 2, 3, 6 share trials.
Outcome criterion2() {
  Outcome o;
  for (int t = 0; t < kTrials; ++t) {
    auto in = trial_input(t);
    auto ell = areas(in);
    Rational all = *std::min_element(ell.begin(), ell.end());
    auto minimal = minimal_curves(in);
    if (minimal.empty()) {
      o.fail(describe(in) + " no minimal curve");
      continue;
    }
    Rational over_minimal = ell[minimal[0] - 1];
    for (auto j : minimal) over_minimal = std::min(over_minimal, ell[j - 1]);
    if (over_minimal != all) o.fail(describe(in));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int t = 0; t < kTrials; ++t) {
    auto in = trial_input(t);
    auto ac = antican_degrees(in);
    IndexSet deg2;
    for (std::size_t j = 0; j < ac.size(); ++j)
      if (ac[j] == 2) deg2.push_back(j + 1);
    if (minimal_curves(in) != deg2) o.fail(describe(in));
  }
  return o;
}

Outcome criterion4(std::string& fraction) {
  Outcome o;
  int held = 0;
  for (int t = 0; t < kTrials; ++t) {
    auto in = trial_input(t);
    if (!check_condition_p(build_chain(in)).holds) continue;
    ++held;
    const Rational gw = gromov_width(in).width;
    const Rational cl = caseline_min(in).first;
    auto tower = degenerate_bott_tower(in);
    const Rational hw = hls_width(tower.collection, tower.divisor).width;
    if (!(gw == cl && cl == hw)) o.fail(describe(in) + " gw=" + to_string(gw) + " caseline=" + to_string(cl) +
                                        " hls=" + to_string(hw));
  }
  fraction = std::to_string(held) + "/" + std::to_string(kTrials);
  if (held == 0) o.fail("(P) never held");
  return o;
}

Outcome criterion5() {
  Outcome o;
  int compared = 0;
  for (int t = 0; t < 500; ++t) {
    std::mt19937_64 rng(trial_seed(kSeed + 5, static_cast<std::uint64_t>(t)));
    auto in = random_trial(rng, 10);
    auto chain = build_chain(in);
    // levels below the first negative minimum have no certified region
    for (std::size_t k = chain.r; k >= 1; --k) {
      auto got = min_affine_over_chain(chain, k);
      ++compared;
      if (got.value != oracle::vertex_min(chain, k)) o.fail(describe(in) + " k=" + std::to_string(k));
      if (got.value < 0) break;
    }
  }
  o.detail = o.ok ? std::to_string(compared) + " minima" : o.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int t = 0; t < kTrials; ++t) {
    auto in = trial_input(t);
    auto deg = deg_matrix(in);
    const std::size_t r = in.length();
    auto ell = areas(in);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) {
        const bool good = deg[k][j] >= 0 && (k != j || deg[k][j] == 1) && (k >= j || deg[k][j] == 0);
        if (!good) o.fail(describe(in) + " deg entry");
      }
    for (std::size_t j = 0; j < r; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < r; ++k) s += in.m[k] * deg[k][j];
      if (s != ell[j]) o.fail(describe(in) + " area sum");
    }
    if (ell.back() != in.m.back()) o.fail(describe(in) + " last area");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  for (int t = 0; t < kTrials; ++t) {
    auto in = trial_input(t);
    Rational a(static_cast<long>(1 + rng() % 20), static_cast<long>(1 + rng() % 20));
    a.canonicalize();
    auto base = gromov_width(in);
    auto scaled = gromov_width(in.scaled(a));
    if (scaled.width != a * base.width || scaled.witness != base.witness) o.fail(describe(in) + " a=" + to_string(a));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  for (int t = 0; t < 200; ++t) {
    auto [c, d] = random_collection(rng);
    if (!check_smooth(build_fan(c))) o.fail("collection " + std::to_string(t) + " not smooth");
    auto rels = primitive_relations(c, d);
    if (!rels.back().zero_sum()) o.fail("collection " + std::to_string(t) + " u(m) != 0");
    for (const auto& rel : rels)
      if (rel.zero_sum() && relation_pairing(d, rel) != rel.lambda_sum)
        o.fail("collection " + std::to_string(t) + " pairing");
  }
  auto in = BSInput::make(RootSystem::parse("A2"), {1, 2}, {Rational(1), Rational(1)});
  const auto n = lattice_points(build_chain(in), 1000).count;
  if (n != 5) o.fail("lattice count " + std::to_string(n));
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto in = BSInput::make(RootSystem::parse("A2"), {1, 2, 1}, {Rational(1), Rational(1), Rational(3)});
  const Rational cl = caseline_min(in).first;
  const Rational gw = gromov_width(in).width;
  if (cl != 3 || gw != 2 || !(cl > gw)) o.fail("caseline=" + to_string(cl) + " width=" + to_string(gw));
  if (check_condition_p(build_chain(in)).holds) o.fail("(P) unexpectedly holds");
  return o;
}

}  // namespace

int main() {
  std::string fraction;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 running example family, 20 triples", criterion1},
      {"2 minimum over minimal curves equals minimum over all", criterion2},
      {"3 minimal curves are exactly the anticanonical-degree-2 curves", criterion3},
      {"4 width = caseline = toric width under (P)", [&] { return criterion4(fraction); }},
      {"5 chain minimum matches vertex enumeration, 500 inputs", criterion5},
      {"6 intersection matrix structure", criterion6},
      {"7 homogeneity under rational scaling", criterion7},
      {"8 toric side: smoothness, pairings, u(m) = 0, lattice count 5", criterion8},
      {"9 strict inequality without (P)", criterion9},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (name[0] == '4' && o.ok) o.detail = "(P) held in " + fraction + " trials";
    std::printf("%s  %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
    failed += !o.ok;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
