#include <algorithm>
#include <random>

#include "bsgw/errors.hpp"
#include "bsgw/rootsys.hpp"
#include "doctest.h"

using namespace bsgw;

namespace {

RootVec root(std::vector<int> c) { return RootVec(std::move(c)); }
CorootVec coroot(std::vector<int> c) { return CorootVec(std::move(c)); }
WeightVec weight(std::vector<long> c) {
  WeightVec w;
  for (long x : c) w.coords.emplace_back(x);
  return w;
}

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "A7", "B2", "B3", "B5", "C3", "C4", "C6",
                                            "D4", "D5", "D7", "E6", "E7", "E8", "F4", "G2", "A3+B2", "A1+A1+G2"};

}  // namespace

TEST_CASE("cartan matrices of small types") {
  CHECK(RootSystem::parse("A2").cartan() == CartanMatrix{{2, -1}, {-1, 2}});
  CHECK(RootSystem::parse("A1+A1").cartan() == CartanMatrix{{2, 0}, {0, 2}});
  // c[1][2] = <alpha_2, alpha_1^v> = -1, c[2][1] = <alpha_1, alpha_2^v> = -3
  CHECK(RootSystem::parse("G2").cartan() == CartanMatrix{{2, -1}, {-3, 2}});
  // alpha_n short in B_n, long in C_n
  auto b3 = RootSystem::parse("B3");
  CHECK(b3.cartan(3, 2) == -2);
  CHECK(b3.cartan(2, 3) == -1);
  auto c3 = RootSystem::parse("C3");
  CHECK(c3.cartan(3, 2) == -1);
  CHECK(c3.cartan(2, 3) == -2);
  auto d4 = RootSystem::parse("D4");
  CHECK(d4.cartan(2, 4) == -1);
  CHECK(d4.cartan(3, 4) == 0);
  auto e6 = RootSystem::parse("E6");
  CHECK(e6.cartan(2, 4) == -1);
  CHECK(e6.cartan(1, 3) == -1);
  CHECK(e6.cartan(1, 2) == 0);
}

TEST_CASE("reducible types are block diagonal in input order") {
  auto rs = RootSystem::parse("A2+G2");
  CHECK(rs.rank() == 4);
  CHECK(rs.cartan() == CartanMatrix{{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -3, 2}});
}

TEST_CASE("low-rank aliases canonicalize") {
  CHECK(DynkinType::parse("B1").to_string() == "A1");
  CHECK(DynkinType::parse("C2").to_string() == "B2");
  CHECK(DynkinType::parse("D3").to_string() == "A3");
  CHECK(DynkinType::parse("D2").to_string() == "A1+A1");
  CHECK(DynkinType::parse("A3+B2").to_string() == "A3+B2");
  CHECK(DynkinType::parse("a2").to_string() == "A2");
}

TEST_CASE("bad type strings are input errors") {
  for (const char* bad : {"", "X2", "A0", "E5", "E9", "F3", "G3", "D1", "A", "A2+", "A-1", "A2x"})
    CHECK_THROWS_AS(DynkinType::parse(bad), InputError);
}

TEST_CASE("pairing weights with coroots") {
  CHECK(pair(weight({1, 0}), coroot({1, 1})) == 1);
  CHECK(pair(weight({1, 0}), coroot({0, 1})) == 0);
  CHECK(pair(weight({1, 1}), coroot({1, 0})) == 1);
  CHECK_THROWS_AS(pair(weight({1, 0, 0}), coroot({1, 1})), InputError);
}

TEST_CASE("simple reflections on roots and coroots") {
  auto a2 = RootSystem::parse("A2");
  CHECK(a2.reflect(1, root({0, 1})) == root({1, 1}));
  CHECK(a2.reflect(1, root({1, 0})) == root({-1, 0}));
  CHECK(a2.reflect(1, coroot({0, 1})) == coroot({1, 1}));
  CHECK(a2.reflect(2, coroot({1, 0})) == coroot({1, 1}));

  auto g2 = RootSystem::parse("G2");
  CHECK(g2.reflect(2, root({1, 0})) == root({1, 3}));
  CHECK(g2.reflect(1, coroot({0, 1})) == coroot({3, 1}));

  CHECK_THROWS_AS(a2.reflect(3, root({1, 0})), InputError);
  CHECK_THROWS_AS(a2.reflect(0, coroot({1, 0})), InputError);
}

TEST_CASE("roots in weight coordinates") {
  auto a2 = RootSystem::parse("A2");
  CHECK(a2.weight_of_root(root({1, 0})) == weight({2, -1}));
  CHECK(a2.weight_of_root(root({1, 1})) == weight({1, 1}));
  CHECK(RootSystem::parse("A1+A1").weight_of_root(root({1, 0})) == weight({2, 0}));
}

TEST_CASE("cartan sign pattern for every supported type") {
  for (const auto& t : kAllTypes) {
    CAPTURE(t);
    auto rs = RootSystem::parse(t);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        if (i == j) CHECK(rs.cartan(i, j) == 2);
        else {
          CHECK(rs.cartan(i, j) <= 0);
          CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
        }
      }
  }
}

TEST_CASE("positive root orbits match the classification table") {
  for (const auto& t : kAllTypes) {
    CAPTURE(t);
    auto rs = RootSystem::parse(t);
    auto roots = rs.positive_roots();
    CHECK(static_cast<int>(roots.size()) == rs.positive_root_count());
    CHECK(static_cast<int>(rs.positive_coroots().size()) == rs.positive_root_count());
    for (const auto& a : roots) CHECK(a.is_positive());
  }
  CHECK(positive_root_count(DynkinType::parse("A5")) == 15);
  CHECK(positive_root_count(DynkinType::parse("G2")) == 6);
  CHECK(positive_root_count(DynkinType::parse("F4")) == 24);
  CHECK(positive_root_count(DynkinType::parse("E8")) == 120);
}

TEST_CASE("G2 highest root under the pinned node order") {
  // alpha_1 long: the highest root is 2 alpha_1 + 3 alpha_2.
  auto roots = RootSystem::parse("G2").positive_roots();
  CHECK(std::find(roots.begin(), roots.end(), root({2, 3})) != roots.end());
}

TEST_CASE("reflections are involutions and the pairing is W-invariant") {
  std::mt19937_64 rng(20261016);
  for (const auto& t : kAllTypes) {
    auto rs = RootSystem::parse(t);
    const int n = rs.rank();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> a(n), g(n);
      std::vector<long> l(n);
      for (int i = 0; i < n; ++i) {
        a[i] = static_cast<int>(rng() % 9) - 4;
        g[i] = static_cast<int>(rng() % 9) - 4;
        l[i] = static_cast<long>(rng() % 9) - 4;
      }
      const int node = 1 + static_cast<int>(rng() % n);
      CAPTURE(t);
      CAPTURE(node);
      CHECK(rs.reflect(node, rs.reflect(node, root(a))) == root(a));
      CHECK(rs.reflect(node, rs.reflect(node, coroot(g))) == coroot(g));
      CHECK(pair(weight(l), rs.reflect(node, coroot(g))) == pair(rs.reflect(node, weight(l)), coroot(g)));
      CHECK(rs.reflect(node, root(a)).coords.size() == static_cast<std::size_t>(n));
      // only coordinate `node` changes
      auto r = rs.reflect(node, root(a));
      for (int i = 1; i <= n; ++i)
        if (i != node) CHECK(r[i] == a[i - 1]);
      // alpha_i in weight coordinates agrees with the pairing <alpha, gamma>
      CHECK(pair(rs.weight_of_root(root(a)), coroot(g)) == rs.pair(root(a), coroot(g)));
    }
  }
}
