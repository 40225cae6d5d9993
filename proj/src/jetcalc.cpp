#include "bgg/jetcalc.hpp"

#include "bgg/error.hpp"

#include <algorithm>

namespace bgg {
namespace {

const char* kMod = "jetcalc";

Weight add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// [z, xi_c] for every c with |eta_c| <= grade z, the footpoint correction of the J^1 action
std::vector<std::pair<int, SparseVec>> footpoint_terms(const GradedLieAlgebra& g, int z) {
  std::vector<std::pair<int, SparseVec>> out;
  for (int c = 0; c < g.dim_pplus(); ++c)
    if (g.eta_grade[c] <= g.grade[z]) {
      SparseVec br = g.bracket(SparseVec::unit(z), g.xi[c]);
      if (!br.is_zero()) out.emplace_back(c, std::move(br));
    }
  return out;
}

// [z, eta_a] in eta coordinates
SparseVec eta_bracket(const GradedLieAlgebra& g, int z, int a) {
  VecBuilder b;
  for (const auto& [t, v] : g.table[z][g.eta[a]].entries()) b.add(g.eta_index[t], v);
  return b.finish();
}

void check_budget(std::int64_t d, std::int64_t max_dim, const std::string& what) {
  if (d > max_dim)
    throw Error(ErrorKind::DimensionOverBudget, kMod, what + " has dimension " + std::to_string(d) + " > " + std::to_string(max_dim));
}

}  // namespace

SparseMatrix JetModule::projection() const {
  SparseMatrix p(base.dim, module.dim);
  for (int w = 0; w < base.dim; ++w) p.set_col(foot(w), SparseVec::unit(w));
  return p;
}

JetModule jet1(const PModule& W, int max_dim) {
  const GradedLieAlgebra& g = *W.g;
  JetModule j;
  j.base = W;
  j.m = g.dim_pplus();
  const int dw = W.dim;
  check_budget(static_cast<std::int64_t>(1 + j.m) * dw, max_dim, "first jet module");
  PModule& M = j.module;
  M.g = W.g;
  M.dim = (1 + j.m) * dw;
  M.weights = W.weights;
  M.eig = W.eig;
  for (int a = 0; a < j.m; ++a)
    for (int w = 0; w < dw; ++w) {
      M.weights.push_back(add(g.weight_of(g.eta[a]), W.weights[w]));
      M.eig.push_back(W.eig[w] + g.eta_grade[a]);
    }
  M.act.assign(g.dim, SparseMatrix());
  for (int z : g.p_basis) {
    const SparseMatrix& Z = W.action(z);
    auto foot_terms = footpoint_terms(g, z);
    std::vector<SparseMatrix> corr;
    for (const auto& [c, br] : foot_terms) corr.push_back(W.action_of(br));
    std::vector<SparseVec> brk(j.m);
    for (int a = 0; a < j.m; ++a) brk[a] = eta_bracket(g, z, a);
    SparseMatrix out(M.dim, M.dim);
    for (int w = 0; w < dw; ++w) {
      VecBuilder b;
      for (const auto& [k, v] : Z.col(w).entries()) b.add(j.foot(k), v);
      for (std::size_t t = 0; t < foot_terms.size(); ++t)
        for (const auto& [k, v] : corr[t].col(w).entries()) b.add(j.slot(foot_terms[t].first, k), v);
      out.set_col(j.foot(w), b.finish());
    }
    for (int a = 0; a < j.m; ++a)
      for (int w = 0; w < dw; ++w) {
        VecBuilder b;
        for (const auto& [k, v] : Z.col(w).entries()) b.add(j.slot(a, k), v);
        for (const auto& [t, v] : brk[a].entries()) b.add(j.slot(t, w), v);
        out.set_col(j.slot(a, w), b.finish());
      }
    M.act[z] = std::move(out);
  }
  return j;
}

bool is_equivariant(const PModule& src, const PModule& dst, const SparseMatrix& f) {
  if (f.rows() != dst.dim || f.cols() != src.dim)
    throw Error(ErrorKind::ShapeMismatch, kMod,
                "map is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ", expected " +
                    std::to_string(dst.dim) + "x" + std::to_string(src.dim));
  const GradedLieAlgebra& g = *src.g;
  for (int z : g.p_basis) {
    if (g.grade[z] > 1) continue;
    if (!(f * src.action(z) == dst.action(z) * f)) return false;
  }
  return true;
}

SparseMatrix jet1_prolong(int m, const SparseMatrix& f) {
  const int rows = f.rows(), cols = f.cols();
  SparseMatrix out((1 + m) * rows, (1 + m) * cols);
  for (int t = 0; t <= m; ++t)
    for (int w = 0; w < cols; ++w) {
      VecBuilder b;
      for (const auto& [k, v] : f.col(w).entries()) b.add(t * rows + k, v);
      out.set_col(t * cols + w, b.finish());
    }
  return out;
}

SparseMatrix jet1_of_map(const PModule& src, const PModule& dst, const SparseMatrix& f) {
  if (!is_equivariant(src, dst, f)) throw Error(ErrorKind::UncertifiedInput, kMod, "map is not a p-homomorphism");
  return jet1_prolong(src.g->dim_pplus(), f);
}

SparseMatrix SemiHolonomicJets::truncation(int k2) const {
  if (k2 < 0 || k2 > order) throw Error(ErrorKind::DegreeOverflow, kMod, "truncation order out of range");
  std::int64_t n = 0;
  for (const auto& s : words)
    if (static_cast<int>(s.size()) <= k2) ++n;
  const int dw = base.dim;
  SparseMatrix t(static_cast<int>(n) * dw, dim());
  // words are sorted by length, so the short ones keep their indices
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int w = 0; w < dw; ++w) t.set_col(i * dw + w, SparseVec::unit(i * dw + w));
  return t;
}

SemiHolonomicJets semiholonomic(const PModule& W, int k, int max_dim) {
  if (k < 0) throw Error(ErrorKind::DegreeOverflow, kMod, "negative jet order");
  const GradedLieAlgebra& g = *W.g;
  SemiHolonomicJets J;
  J.base = W;
  J.order = k;
  J.m = g.dim_pplus();
  const int m = J.m, dw = W.dim;
  std::int64_t count = 0, pw = 1;
  for (int i = 0; i <= k; ++i, pw *= m) count += pw;
  check_budget(count * dw, max_dim, "semi-holonomic jets of order " + std::to_string(k));

  J.words.push_back({});
  for (std::size_t lo = 0, len = 0; len < static_cast<std::size_t>(k); ++len) {
    std::size_t hi = J.words.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int a = 0; a < m; ++a) {
        auto s = J.words[i];
        s.push_back(a);
        J.words.push_back(std::move(s));
      }
    lo = hi;
  }
  std::sort(J.words.begin(), J.words.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (int i = 0; i < static_cast<int>(J.words.size()); ++i) J.word_index[J.words[i]] = i;

  PModule& M = J.module;
  M.g = W.g;
  M.dim = static_cast<int>(J.words.size()) * dw;
  for (const auto& s : J.words) {
    Weight ws(g.rank(), 0);
    Rational es;
    for (int a : s) {
      ws = add(ws, g.weight_of(g.eta[a]));
      es += g.eta_grade[a];
    }
    for (int w = 0; w < dw; ++w) {
      M.weights.push_back(add(ws, W.weights[w]));
      M.eig.push_back(es + W.eig[w]);
    }
  }

  // A(z, s): operator W -> (words of any length) (x) W, before truncation
  using Jet = std::map<std::vector<int>, SparseMatrix>;
  std::map<std::pair<int, std::vector<int>>, Jet> memo;
  auto accumulate = [](Jet& into, const Jet& from, const Rational& c, int prefix) {
    for (const auto& [s, mat] : from) {
      std::vector<int> t;
      if (prefix >= 0) t.push_back(prefix);
      t.insert(t.end(), s.begin(), s.end());
      auto it = into.find(t);
      if (it == into.end())
        into.emplace(std::move(t), mat.scaled(c));
      else
        it->second = it->second + mat.scaled(c);
    }
  };
  auto A = [&](auto&& self, int z, const std::vector<int>& s) -> const Jet& {
    auto key = std::make_pair(z, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Jet out;
    if (s.empty()) {
      out.emplace(std::vector<int>{}, W.action(z));
    } else {
      std::vector<int> tail(s.begin() + 1, s.end());
      SparseVec head = eta_bracket(g, z, s[0]);
      for (const auto& [b, c] : head.entries()) {
        std::vector<int> t(s);
        t[0] = b;
        Jet single;
        single.emplace(std::move(t), SparseMatrix::identity(dw));
        accumulate(out, single, c, -1);
      }
      accumulate(out, self(self, z, tail), 1, s[0]);
    }
    for (const auto& [c, br] : footpoint_terms(g, z))
      for (const auto& [y, v] : br.entries()) accumulate(out, self(self, y, s), v, c);
    return memo.emplace(key, std::move(out)).first->second;
  };

  M.act.assign(g.dim, SparseMatrix());
  for (int z : g.p_basis) {
    SparseMatrix out(M.dim, M.dim);
    for (int i = 0; i < static_cast<int>(J.words.size()); ++i) {
      const Jet& a = A(A, z, J.words[i]);
      for (int w = 0; w < dw; ++w) {
        VecBuilder b;
        for (const auto& [s, mat] : a) {
          if (static_cast<int>(s.size()) > k) continue;
          int si = J.word_index.at(s);
          for (const auto& [u, v] : mat.col(w).entries()) b.add(si * dw + u, v);
        }
        out.set_col(i * dw + w, b.finish());
      }
    }
    M.act[z] = std::move(out);
  }
  return J;
}

SparseMatrix semiholonomic_embedding(const SemiHolonomicJets& jk, const SemiHolonomicJets& jk1, const JetModule& outer) {
  if (jk1.order + 1 != jk.order || outer.base.dim != jk1.dim())
    throw Error(ErrorKind::ShapeMismatch, kMod, "embedding needs consecutive orders");
  const int dw = jk.base.dim;
  SparseMatrix e(outer.module.dim, jk.dim());
  for (const auto& s : jk.words)
    for (int w = 0; w < dw; ++w) {
      VecBuilder b;
      if (static_cast<int>(s.size()) < jk.order) b.add(outer.foot(jk1.index(s, w)), 1);
      if (!s.empty()) b.add(outer.slot(s[0], jk1.index(std::vector<int>(s.begin() + 1, s.end()), w)), 1);
      e.set_col(jk.index(s, w), b.finish());
    }
  return e;
}

std::vector<SparseVec> semiholonomic_equalizer(const PModule& W, int k, int max_dim) {
  if (k < 1) throw Error(ErrorKind::DegreeOverflow, kMod, "equalizer needs order at least one");
  if (k == 1) {
    JetModule j = jet1(W, max_dim);
    std::vector<SparseVec> all;
    for (int i = 0; i < j.module.dim; ++i) all.push_back(SparseVec::unit(i));
    return all;
  }
  SemiHolonomicJets a = semiholonomic(W, k - 1, max_dim);
  SemiHolonomicJets b = semiholonomic(W, k - 2, max_dim);
  JetModule outer = jet1(a.module, max_dim);
  JetModule lower = jet1(b.module, max_dim);
  SparseMatrix via_trunc = jet1_of_map(a.module, b.module, a.truncation(k - 2));
  SparseMatrix via_foot = semiholonomic_embedding(a, b, lower) * outer.projection();
  SparseMatrix diff = via_trunc - via_foot;
  std::vector<SparseVec> images;
  for (int i = 0; i < diff.cols(); ++i) images.push_back(diff.col(i));
  return kernel_of(images);
}

}  // namespace bgg
