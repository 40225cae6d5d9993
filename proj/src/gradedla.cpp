#include "bgg/gradedla.hpp"

#include "bgg/error.hpp"
#include "bgg/repmod.hpp"

#include <sstream>

namespace bgg {
namespace {

const char* kMod = "gradedla";

RootCoeffs add(const RootCoeffs& a, const RootCoeffs& b) {
  RootCoeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero_root(const RootCoeffs& r) {
  for (int x : r)
    if (x != 0) return false;
  return true;
}

// First nonzero entry of a matrix, as (row, col).
std::pair<int, int> first_entry(const SparseMatrix& m) {
  for (int j = 0; j < m.cols(); ++j)
    if (!m.col(j).is_zero()) return {m.col(j).entries().front().first, j};
  return {-1, -1};
}

}  // namespace

int GradedLieAlgebra::index_of_root(const RootCoeffs& r) const {
  if (is_zero_root(r)) return -1;
  bool neg = false;
  for (int x : r)
    if (x < 0) neg = true;
  if (!neg) {
    int t = rs.index_of(r);
    return t < 0 ? -1 : pos_index(t);
  }
  RootCoeffs m(r);
  for (auto& x : m) x = -x;
  int t = rs.index_of(m);
  return t < 0 ? -1 : neg_index(t);
}

int GradedLieAlgebra::dim_grade(int j) const {
  int c = 0;
  for (int x : grade)
    if (x == j) ++c;
  return c;
}

std::vector<int> GradedLieAlgebra::grade_basis(int j) const {
  std::vector<int> out;
  for (int a = 0; a < dim; ++a)
    if (grade[a] == j) out.push_back(a);
  return out;
}

std::string GradedLieAlgebra::basis_name(int a) const {
  if (cartan[a] >= 0) return "h" + std::to_string(cartan[a] + 1);
  std::ostringstream os;
  bool neg = a < rs.size();
  os << (neg ? "f" : "e");
  for (int x : root[a]) os << (neg ? -x : x);
  return os.str();
}

SparseVec GradedLieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  VecBuilder b;
  for (const auto& [i, u] : x.entries()) {
    if (i < 0 || i >= dim) throw Error(ErrorKind::DimensionMismatch, kMod, "element outside the algebra");
    for (const auto& [j, v] : y.entries()) {
      if (j < 0 || j >= dim) throw Error(ErrorKind::DimensionMismatch, kMod, "element outside the algebra");
      b.add(table[i][j], u * v);
    }
  }
  return b.finish();
}

SparseMatrix GradedLieAlgebra::ad(const SparseVec& x) const {
  SparseMatrix m(dim, dim);
  for (int b = 0; b < dim; ++b) m.set_col(b, bracket(x, SparseVec::unit(b)));
  return m;
}

Rational GradedLieAlgebra::killing_of(const SparseVec& x, const SparseVec& y) const {
  Rational s;
  for (const auto& [i, u] : x.entries())
    for (const auto& [j, v] : y.entries()) s.add_product(u * v, killing(i, j));
  return s;
}

SparseVec GradedLieAlgebra::grading_element() const {
  VecBuilder b;
  for (int i = 0; i < rank(); ++i) b.add(cartan_index(i), e_coeffs[i]);
  return b.finish();
}

Rational GradedLieAlgebra::e_value(const Weight& mu) const {
  Rational s;
  for (int i = 0; i < rank(); ++i) s.add_product(e_coeffs[i], Rational(mu[i]));
  return s;
}

Weight GradedLieAlgebra::weight_of(int a) const {
  if (cartan[a] >= 0) return Weight(rank(), 0);
  return rs.to_weight(root[a]);
}

std::shared_ptr<const GradedLieAlgebra> build_graded_algebra(const CartanMatrix& c, const ParabolicSpec& p0) {
  auto g = std::make_shared<GradedLieAlgebra>();
  g->rs = build_root_system(c);
  g->p = make_parabolic(c.rank(), p0.sigma);
  const int n = c.rank();
  const int P = g->rs.size();
  g->dim = 2 * P + n;
  const int N = g->dim;

  g->root.assign(N, RootCoeffs(n, 0));
  g->grade.assign(N, 0);
  g->cartan.assign(N, -1);
  for (int r = 0; r < P; ++r) {
    int ht = sigma_height(g->rs, g->rs.positive[r], g->p);
    g->root[g->pos_index(r)] = g->rs.positive[r];
    g->grade[g->pos_index(r)] = ht;
    RootCoeffs m = g->rs.positive[r];
    for (auto& x : m) x = -x;
    g->root[g->neg_index(r)] = m;
    g->grade[g->neg_index(r)] = -ht;
    g->k = std::max(g->k, ht);
  }
  for (int i = 0; i < n; ++i) g->cartan[g->cartan_index(i)] = i;
  g->steps = root_steps(g->rs);

  // Structure constants are read off the adjoint module, which is faithful.
  HighestWeightData adj = build_highest_weight(c, g->rs.to_weight(g->rs.highest()), N);
  std::vector<SparseMatrix> X = chevalley_actions(g->rs, g->steps, adj.e, adj.f);

  // diagonal weights solve the Cartan part of [x_beta, x_-beta]
  Matrix wmat(adj.weights.size(), n);
  for (int k = 0; k < static_cast<int>(adj.weights.size()); ++k)
    for (int j = 0; j < n; ++j) wmat(k, j) = adj.weights[k][j];

  g->table.assign(N, std::vector<SparseVec>(N));
  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      SparseVec v;
      if (g->cartan[a] >= 0 && g->cartan[b] >= 0) {
        // abelian
      } else if (g->cartan[a] >= 0 || g->cartan[b] >= 0) {
        int h = g->cartan[a] >= 0 ? a : b;
        int x = h == a ? b : a;
        int val = g->rs.to_weight(g->root[x])[g->cartan[h]];
        v = SparseVec::unit(x, Rational(h == a ? val : -val));
      } else {
        RootCoeffs sum = add(g->root[a], g->root[b]);
        if (is_zero_root(sum)) {
          SparseMatrix cm = commutator(X[a], X[b]);
          Matrix rhs(static_cast<int>(adj.weights.size()), 1);
          for (int k = 0; k < rhs.rows(); ++k) rhs(k, 0) = cm.get(k, k);
          auto sol = wmat.solve(rhs);
          if (!sol) throw Error(ErrorKind::CertificationFailure, kMod, "bracket of opposite root vectors not in h");
          VecBuilder vb;
          for (int j = 0; j < n; ++j) vb.add(g->cartan_index(j), (*sol)(j, 0));
          v = vb.finish();
        } else {
          int t = g->index_of_root(sum);
          if (t >= 0) {
            SparseMatrix cm = commutator(X[a], X[b]);
            auto [row, col] = first_entry(X[t]);
            v = SparseVec::unit(t, cm.get(row, col) / X[t].get(row, col));
          }
        }
      }
      g->table[b][a] = v.scaled(-1);
      g->table[a][b] = std::move(v);
    }
  }

  // Killing form; only opposite-root and Cartan pairs can be nonzero.
  std::vector<SparseMatrix> adm(N);
  for (int a = 0; a < N; ++a) {
    adm[a] = SparseMatrix(N, N);
    for (int b = 0; b < N; ++b) adm[a].set_col(b, g->table[a][b]);
  }
  g->killing = Matrix(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      if (!is_zero_root(add(g->root[a], g->root[b]))) continue;
      Rational s;
      for (int m = 0; m < N; ++m)
        for (const auto& [k, v] : adm[a].col(m).entries()) s.add_product(v, adm[b].get(m, k));
      g->killing(a, b) = s;
      g->killing(b, a) = s;
    }

  // alpha_i(E) = [i crossed]; alpha_i(h_j) = a[j][i]
  Matrix at(n, n), rhs(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = c.a[j][i];
    rhs(i, 0) = g->p.crossed0(i) ? 1 : 0;
  }
  auto ec = at.solve(rhs);
  if (!ec) throw Error(ErrorKind::CertificationFailure, kMod, "grading element does not exist");
  for (int i = 0; i < n; ++i) g->e_coeffs.push_back((*ec)(i, 0));

  g->p_index.assign(N, -1);
  for (int a = 0; a < N; ++a)
    if (g->grade[a] == 0) {
      g->p_index[a] = static_cast<int>(g->p_basis.size());
      g->p_basis.push_back(a);
    }
  g->eta_index.assign(N, -1);
  for (int a = 0; a < N; ++a)
    if (g->grade[a] > 0) {
      g->p_index[a] = static_cast<int>(g->p_basis.size());
      g->p_basis.push_back(a);
      int r = a - g->pos_root_offset();
      Rational norm = g->killing(a, g->neg_index(r));
      g->eta_index[a] = static_cast<int>(g->eta.size());
      g->eta.push_back(a);
      g->eta_grade.push_back(g->grade[a]);
      g->eta_norm.push_back(norm);
      g->xi.push_back(SparseVec::unit(g->neg_index(r), Rational(1) / norm));
    }
  return g;
}

}  // namespace bgg
