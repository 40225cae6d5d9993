#include "doctest.h"

#include "bgg/error.hpp"
#include "bgg/rootspace.hpp"

#include <functional>
#include <set>

using namespace bgg;

namespace {

// Independent oracle: the root system is the Weyl orbit of the simple roots,
// reflections acting on simple-root coordinates.
std::set<RootCoeffs> orbit_roots(const CartanMatrix& c) {
  int n = c.rank();
  std::set<RootCoeffs> all;
  std::vector<RootCoeffs> frontier;
  for (int i = 0; i < n; ++i) {
    RootCoeffs r(n, 0);
    r[i] = 1;
    all.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<RootCoeffs> next;
    for (const auto& r : frontier)
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += c(i, j) * r[j];
        RootCoeffs s = r;
        s[i] -= pairing;
        if (all.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::set<RootCoeffs> pos;
  for (const auto& r : all) {
    bool p = true;
    for (int x : r) p = p && x >= 0;
    if (p) pos.insert(r);
  }
  return pos;
}

// Number of semistandard tableaux of shape given by an sl(n+1) weight, entries 1..n+1.
long long count_ssyt(const Weight& w) {
  int n = static_cast<int>(w.size()) + 1;
  std::vector<int> shape;
  for (int r = 0; r < n - 1; ++r) {
    int len = 0;
    for (int k = r; k < n - 1; ++k) len += w[k];
    if (len) shape.push_back(len);
  }
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(build_root_system(CartanMatrix::from_label("A1")).size() == 1);
  auto a2 = build_root_system(CartanMatrix::from_label("A2"));
  CHECK(a2.size() == 3);
  CHECK(a2.index_of({1, 1}) == 2);
  CHECK(build_root_system(CartanMatrix::from_label("A3")).size() == 6);
  for (std::string lab : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    auto c = CartanMatrix::from_label(lab);
    auto rs = build_root_system(c);
    auto oracle = orbit_roots(c);
    CHECK_MESSAGE(std::set<RootCoeffs>(rs.positive.begin(), rs.positive.end()) == oracle, lab);
  }
  CHECK(build_root_system(CartanMatrix::from_label("E8")).size() == 120);
}

TEST_CASE("root ordering is by height then lexicographic") {
  auto rs = build_root_system(CartanMatrix::from_label("B3"));
  for (int k = 1; k < rs.size(); ++k) {
    bool ok = rs.height[k - 1] < rs.height[k] || (rs.height[k - 1] == rs.height[k] && rs.positive[k - 1] < rs.positive[k]);
    CHECK(ok);
  }
}

TEST_CASE("cartan conventions and validation") {
  auto b2 = CartanMatrix::from_label("B2");
  CHECK(b2.a == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  auto g2 = CartanMatrix::from_label("g 2");
  CHECK(g2.a == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  CHECK_THROWS_AS(CartanMatrix::from_entries({{2, 0}, {0, 2}}), Error);
  try {
    CartanMatrix::from_entries({{2, 0}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrreducible);
  }
  try {
    CartanMatrix::from_entries({{2, -2}, {-2, 2}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteType);
  }
  CHECK_THROWS(CartanMatrix::from_label("Q7"));
}

TEST_CASE("sigma heights and grading depth") {
  auto c = CartanMatrix::from_label("A3");
  auto rs = build_root_system(c);
  auto p = make_parabolic(3, {1, 3});
  CHECK(sigma_height(rs, {0, 1, 0}, p) == 0);
  CHECK(sigma_height(rs, {1, 1, 1}, p) == 2);
  CHECK(sigma_height(rs, {1, 1, 0}, p) == 1);
  CHECK_THROWS_AS(sigma_height(rs, {1, 0, 1}, p), Error);
  CHECK(grading_depth(CartanMatrix::from_label("A1"), make_parabolic(1, {1})) == 1);
  CHECK(grading_depth(c, p) == 2);
  CHECK(grading_depth(c, make_parabolic(3, {2})) == 1);
  CHECK_THROWS_AS(make_parabolic(3, {0}), Error);
  CHECK_THROWS_AS(make_parabolic(3, {}), Error);
}

TEST_CASE("weyl dimension") {
  auto a1 = CartanMatrix::from_label("A1");
  for (int m = 0; m < 6; ++m) CHECK(weyl_dimension(a1, {m}) == m + 1);
  auto a3 = CartanMatrix::from_label("A3");
  CHECK(weyl_dimension(a3, {1, 0, 0}) == 4);
  CHECK(weyl_dimension(a3, {1, 0, 1}) == 15);
  for (Weight w : {Weight{2, 1, 0}, Weight{0, 2, 1}, Weight{1, 1, 1}, Weight{3, 0, 2}})
    CHECK(weyl_dimension(a3, w) == count_ssyt(w));
  CHECK(weyl_dimension(CartanMatrix::from_label("G2"), {1, 0}) == 7);
  CHECK(weyl_dimension(CartanMatrix::from_label("E8"), {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK_THROWS_AS(weyl_dimension(a3, {1, -1, 0}), Error);
  // dual has the same dimension
  auto b3 = CartanMatrix::from_label("A4");
  Weight w{2, 0, 1, 0};
  CHECK(weyl_dimension(b3, w) == weyl_dimension(b3, dual_weight(b3, w)));
  CHECK(dual_weight(a3, {1, 2, 3}) == Weight{3, 2, 1});
}

TEST_CASE("dot action") {
  auto a1 = CartanMatrix::from_label("A1");
  CHECK(affine_dot_action(a1, WeylElement{}, {4}) == Weight{4});
  for (int m = 0; m < 5; ++m) CHECK(affine_dot_action(a1, WeylElement{{0}}, {m}) == Weight{-m - 2});
  auto a2 = CartanMatrix::from_label("A2");
  CHECK(affine_dot_action(a2, WeylElement{{0}}, {0, 0}) == Weight{-2, 1});
  // twisted group action: w1.(w2.l) = (w1 w2).l
  Weight l{1, 2};
  WeylElement w1{{0, 1}}, w2{{1}}, w12{{0, 1, 1}};
  CHECK(affine_dot_action(a2, w1, affine_dot_action(a2, w2, l)) == affine_dot_action(a2, w12, l));
}

TEST_CASE("parabolic hasse diagrams") {
  auto a1 = CartanMatrix::from_label("A1");
  auto h1 = parabolic_hasse(a1, make_parabolic(1, {1}));
  REQUIRE(h1.by_length.size() == 2);
  CHECK(h1.by_length[0][0].length() == 0);
  CHECK(h1.by_length[1][0].word == std::vector<int>{0});

  auto a3 = CartanMatrix::from_label("A3");
  auto h = parabolic_hasse(a3, make_parabolic(3, {1, 3}));
  std::vector<int> sizes;
  for (const auto& l : h.by_length) sizes.push_back(static_cast<int>(l.size()));
  CHECK(sizes == std::vector<int>{1, 2, 3, 3, 2, 1});
  CHECK(h.size() * weyl_group_order(a3, {1}) == weyl_group_order(a3, {0, 1, 2}));

  auto h2 = parabolic_hasse(CartanMatrix::from_label("A2"), make_parabolic(2, {1}));
  sizes.clear();
  for (const auto& l : h2.by_length) sizes.push_back(static_cast<int>(l.size()));
  CHECK(sizes == std::vector<int>{1, 1, 1});
}

TEST_CASE("hasse diagram agrees with brute-force coset enumeration") {
  for (auto [lab, sig] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"A3", {2}}, {"B3", {1}}, {"C3", {3}}, {"G2", {2}}, {"D4", {1, 4}}, {"B2", {1, 2}}}) {
    auto c = CartanMatrix::from_label(lab);
    auto p = make_parabolic(c.rank(), sig);
    auto rs = build_root_system(c);
    // whole orbit of rho = whole Weyl group
    Weight rho(c.rank(), 1);
    std::set<Weight> orbit{rho};
    std::vector<Weight> fr{rho};
    while (!fr.empty()) {
      std::vector<Weight> nx;
      for (auto& mu : fr)
        for (int i = 0; i < c.rank(); ++i) {
          auto nu = reflect(c, i, mu);
          if (orbit.insert(nu).second) nx.push_back(nu);
        }
      fr = nx;
    }
    std::map<int, int> expected;
    for (const auto& mu : orbit) {
      bool pdom = true;
      for (int j = 0; j < c.rank(); ++j)
        if (!p.crossed0(j) && mu[j] <= 0) pdom = false;
      if (!pdom) continue;
      int len = 0;
      for (const auto& b : rs.positive)
        if (rs.pair(mu, b).sign() < 0) ++len;
      expected[len]++;
    }
    auto h = parabolic_hasse(c, p);
    std::map<int, int> got;
    for (int l = 0; l < static_cast<int>(h.by_length.size()); ++l) {
      got[l] = static_cast<int>(h.by_length[l].size());
      for (const auto& w : h.by_length[l]) CHECK(w.length() == l);
    }
    CHECK_MESSAGE(got == expected, lab);
  }
}
