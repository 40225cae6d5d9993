#include "bgg/rootspace.hpp"

#include "bgg/error.hpp"
#include "bgg/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace bgg {
namespace {

const char* kMod = "rootspace";

// Builds a Cartan matrix from a bond list. For a multiple bond the first node is short.
CartanMatrix from_bonds(int n, const std::vector<std::pair<int, int>>& simple,
                        const std::vector<std::tuple<int, int, int>>& multiple) {
  CartanMatrix c;
  c.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c.a[i][i] = 2;
  for (auto [i, j] : simple) c.a[i][j] = c.a[j][i] = -1;
  for (auto [s, l, m] : multiple) {
    c.a[s][l] = -m;  // alpha_l(h_s) with s short
    c.a[l][s] = -1;
  }
  return c;
}

}  // namespace

CartanMatrix CartanMatrix::from_label(const std::string& label) {
  std::string s;
  for (char ch : label)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s.size() < 2) throw Error(ErrorKind::ParseError, kMod, "bad algebra label '" + label + "'");
  char series = s[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, kMod, "bad rank in algebra label '" + label + "'");
  }
  std::vector<std::pair<int, int>> simple;
  std::vector<std::tuple<int, int, int>> multiple;
  auto path = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) simple.emplace_back(i, i + 1);
  };
  switch (series) {
    case 'A':
      if (n < 1) break;
      path(0, n - 1);
      break;
    case 'B':
      if (n < 2) break;
      path(0, n - 2);
      multiple.emplace_back(n - 1, n - 2, 2);
      break;
    case 'C':
      if (n < 2) break;
      path(0, n - 2);
      multiple.emplace_back(n - 2, n - 1, 2);
      break;
    case 'D':
      if (n < 4) break;
      path(0, n - 2);
      simple.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) break;
      simple.emplace_back(0, 2);
      simple.emplace_back(1, 3);
      path(2, n - 1);
      break;
    case 'F':
      if (n != 4) break;
      simple.emplace_back(0, 1);
      multiple.emplace_back(2, 1, 2);
      simple.emplace_back(2, 3);
      break;
    case 'G':
      if (n != 2) break;
      multiple.emplace_back(0, 1, 3);
      break;
    default:
      break;
  }
  bool ok = (series == 'A' && n >= 1) || (series == 'B' && n >= 2) || (series == 'C' && n >= 2) ||
            (series == 'D' && n >= 4) || (series == 'E' && n >= 6 && n <= 8) || (series == 'F' && n == 4) ||
            (series == 'G' && n == 2);
  if (!ok) throw Error(ErrorKind::ParseError, kMod, "unknown algebra label '" + label + "'");
  CartanMatrix c = from_bonds(n, simple, multiple);
  c.label = std::string(1, series) + std::to_string(n);
  validate_cartan(c);
  return c;
}

CartanMatrix CartanMatrix::from_entries(std::vector<std::vector<int>> entries) {
  CartanMatrix c;
  c.a = std::move(entries);
  validate_cartan(c);
  return c;
}

std::vector<Rational> symmetrizer(const CartanMatrix& c) {
  int n = c.rank();
  std::vector<Rational> d(n);
  std::vector<bool> seen(n, false);
  if (n == 0) return d;
  d[0] = 1;
  seen[0] = true;
  std::deque<int> q{0};
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || c.a[i][j] == 0) continue;
      // (alpha_i, alpha_j) = d_i a_ij = d_j a_ji
      Rational dj = d[i] * Rational(c.a[i][j]) / Rational(c.a[j][i]);
      if (!seen[j]) {
        seen[j] = true;
        d[j] = dj;
        q.push_back(j);
      } else if (d[j] != dj) {
        throw Error(ErrorKind::NotFiniteType, kMod, "matrix is not symmetrizable");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw Error(ErrorKind::NotIrreducible, kMod, "Dynkin diagram is disconnected");
  Rational mn = d[0];
  for (const auto& x : d) mn = std::min(mn, x);
  for (auto& x : d) x /= mn;
  return d;
}

void validate_cartan(const CartanMatrix& c) {
  int n = c.rank();
  if (n == 0) throw Error(ErrorKind::ValidationError, kMod, "empty Cartan matrix");
  for (const auto& row : c.a)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::ValidationError, kMod, "Cartan matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && c.a[i][j] != 2) throw Error(ErrorKind::ValidationError, kMod, "diagonal entry is not 2");
      if (i != j && c.a[i][j] > 0) throw Error(ErrorKind::ValidationError, kMod, "positive off-diagonal entry");
      if (i != j && (c.a[i][j] == 0) != (c.a[j][i] == 0))
        throw Error(ErrorKind::ValidationError, kMod, "a_ij = 0 but a_ji != 0");
    }
  // connectivity first, so a disconnected input reports NotIrreducible
  std::vector<bool> seen(n, false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && c.a[i][j] != 0) {
        seen[j] = true;
        q.push_back(j);
      }
  }
  for (bool s : seen)
    if (!s) throw Error(ErrorKind::NotIrreducible, kMod, "Dynkin diagram is disconnected (semisimple input)");
  auto d = symmetrizer(c);
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = d[i] * Rational(c.a[i][j]);
  for (int k = 1; k <= n; ++k) {
    Matrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = s(i, j);
    if (m.determinant().sign() <= 0) throw Error(ErrorKind::NotFiniteType, kMod, "symmetrized matrix is not positive definite");
  }
}

int RootSystem::index_of(const RootCoeffs& r) const {
  auto it = lookup.find(r);
  return it == lookup.end() ? -1 : it->second;
}

int RootSystem::simple_index(int i) const {
  RootCoeffs r(rank(), 0);
  r[i] = 1;
  return index_of(r);
}

Weight RootSystem::to_weight(const RootCoeffs& r) const {
  int n = rank();
  Weight w(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += cartan.a[i][j] * r[j];
  return w;
}

Rational RootSystem::pair(const Weight& mu, const RootCoeffs& beta) const {
  Rational s;
  for (int i = 0; i < rank(); ++i) s += Rational(mu[i]) * d[i] * Rational(beta[i]);
  return s;
}

RootSystem build_root_system(const CartanMatrix& c) {
  validate_cartan(c);
  RootSystem rs;
  rs.cartan = c;
  rs.d = symmetrizer(c);
  int n = c.rank();
  std::set<RootCoeffs> roots;
  std::vector<RootCoeffs> layer;
  for (int i = 0; i < n; ++i) {
    RootCoeffs r(n, 0);
    r[i] = 1;
    roots.insert(r);
    layer.push_back(r);
  }
  while (!layer.empty()) {
    std::set<RootCoeffs> next;
    for (const auto& beta : layer) {
      Weight w(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] += c.a[i][j] * beta[j];
      for (int i = 0; i < n; ++i) {
        int p = 0;
        RootCoeffs down = beta;
        while (true) {
          down[i] -= 1;
          if (roots.count(down) == 0) break;
          ++p;
        }
        int q = p - w[i];
        if (q > 0) {
          RootCoeffs up = beta;
          up[i] += 1;
          if (roots.count(up) == 0) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) roots.insert(r);
  }
  rs.positive.assign(roots.begin(), roots.end());
  auto ht = [](const RootCoeffs& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::sort(rs.positive.begin(), rs.positive.end(), [&](const RootCoeffs& a, const RootCoeffs& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (int k = 0; k < static_cast<int>(rs.positive.size()); ++k) {
    rs.height.push_back(ht(rs.positive[k]));
    rs.lookup[rs.positive[k]] = k;
  }
  return rs;
}

bool ParabolicSpec::crossed0(int i) const { return std::binary_search(sigma.begin(), sigma.end(), i + 1); }

ParabolicSpec make_parabolic(int rank, std::vector<int> sigma) {
  if (sigma.empty()) throw Error(ErrorKind::ValidationError, kMod, "set of crossed nodes is empty");
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  for (int s : sigma)
    if (s < 1 || s > rank)
      throw Error(ErrorKind::ValidationError, kMod,
                  "crossed node " + std::to_string(s) + " out of range 1.." + std::to_string(rank));
  return ParabolicSpec{std::move(sigma)};
}

int sigma_height(const RootSystem& rs, const RootCoeffs& root, const ParabolicSpec& p) {
  if (static_cast<int>(root.size()) != rs.rank() || rs.index_of(root) < 0)
    throw Error(ErrorKind::UnknownRoot, kMod, "not a positive root: " + weight_str(root));
  int h = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (p.crossed0(i)) h += root[i];
  return h;
}

int grading_depth(const CartanMatrix& c, const ParabolicSpec& p) {
  RootSystem rs = build_root_system(c);
  int k = 0;
  for (const auto& r : rs.positive) k = std::max(k, sigma_height(rs, r, p));
  return k;
}

bool is_dominant(const Weight& w) {
  for (int x : w)
    if (x < 0) return false;
  return true;
}

std::int64_t weyl_dimension(const CartanMatrix& c, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != c.rank())
    throw Error(ErrorKind::DimensionMismatch, kMod, "weight length does not match rank");
  if (!is_dominant(lambda)) throw Error(ErrorKind::NonDominant, kMod, "weight " + weight_str(lambda) + " is not dominant");
  RootSystem rs = build_root_system(c);
  Weight rho(c.rank(), 1), lr(c.rank());
  for (int i = 0; i < c.rank(); ++i) lr[i] = lambda[i] + 1;
  Rational prod = 1;
  for (const auto& b : rs.positive) prod *= rs.pair(lr, b) / rs.pair(rho, b);
  return prod.to_int();
}

Weight reflect(const CartanMatrix& c, int i, Weight mu) {
  // s_i(mu) = mu - mu(h_i) alpha_i, and alpha_i has coordinates a[k][i]
  int m = mu[i];
  for (int k = 0; k < c.rank(); ++k) mu[k] -= m * c.a[k][i];
  return mu;
}

Weight WeylElement::apply(const CartanMatrix& c, Weight mu) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) mu = reflect(c, *it, std::move(mu));
  return mu;
}

std::string WeylElement::str() const {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

Weight affine_dot_action(const CartanMatrix& c, const WeylElement& w, const Weight& lambda) {
  Weight mu(lambda);
  for (auto& x : mu) x += 1;
  mu = w.apply(c, mu);
  for (auto& x : mu) x -= 1;
  return mu;
}

int HasseDiagram::size() const {
  int n = 0;
  for (const auto& l : by_length) n += static_cast<int>(l.size());
  return n;
}

HasseDiagram parabolic_hasse(const CartanMatrix& c, const ParabolicSpec& p) {
  validate_cartan(c);
  int n = c.rank();
  HasseDiagram h;
  std::map<Weight, WeylElement> seen;
  Weight rho(n, 1);
  std::vector<std::pair<Weight, WeylElement>> layer{{rho, WeylElement{}}};
  seen[rho] = WeylElement{};
  while (!layer.empty()) {
    std::vector<WeylElement> elems;
    for (const auto& [mu, w] : layer) elems.push_back(w);
    h.by_length.push_back(elems);
    std::map<Weight, WeylElement> next;
    for (const auto& [mu, w] : layer) {
      for (int i = 0; i < n; ++i) {
        // right multiplication w s_i; the new element sends rho to w(s_i rho)
        WeylElement nw = w;
        nw.word.push_back(i);
        Weight nu = nw.apply(c, rho);
        bool ok = true;
        for (int j = 0; j < n; ++j)
          if (!p.crossed0(j) && nu[j] <= 0) ok = false;
        if (!ok || seen.count(nu) || next.count(nu)) continue;
        next[nu] = nw;
      }
    }
    layer.clear();
    for (auto& [nu, w] : next) {
      seen[nu] = w;
      layer.emplace_back(nu, w);
    }
    // deterministic order within a length: by reduced word
    std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) { return a.second.word < b.second.word; });
  }
  return h;
}

Weight dual_weight(const CartanMatrix& c, const Weight& lambda) {
  Weight mu(lambda);
  bool changed = true;
  // drive to the antidominant element of the orbit, which is w0(lambda)
  while (changed) {
    changed = false;
    for (int i = 0; i < c.rank(); ++i)
      if (mu[i] > 0) {
        mu = reflect(c, i, mu);
        changed = true;
      }
  }
  for (auto& x : mu) x = -x;
  return mu;
}

std::int64_t weyl_group_order(const CartanMatrix& c, const std::vector<int>& nodes) {
  Weight rho(c.rank(), 1);
  std::set<Weight> orbit{rho};
  std::vector<Weight> frontier{rho};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (int i : nodes) {
        Weight nu = reflect(c, i, mu);
        if (orbit.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(orbit.size());
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

}  // namespace bgg
