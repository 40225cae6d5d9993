#include "bgg/repmod.hpp"

#include "bgg/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bgg {
namespace {

const char* kMod = "repmod";

Weight simple_root_weight(const CartanMatrix& c, int i) {
  Weight w(c.rank());
  for (int k = 0; k < c.rank(); ++k) w[k] = c.a[k][i];
  return w;
}

Weight plus(const Weight& a, const Weight& b, int s = 1) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

// Incremental echelon form used to test independence one vector at a time.
class Echelon {
public:
  bool add(SparseVec v) {
    while (!v.is_zero()) {
      int lead = v.entries().front().first;
      auto it = piv_.find(lead);
      if (it == piv_.end()) {
        v.scale(Rational(1) / v.entries().front().second);
        piv_.emplace(lead, std::move(v));
        return true;
      }
      v.axpy(-v.entries().front().second, it->second);
    }
    return false;
  }

private:
  std::map<int, SparseVec> piv_;
};

}  // namespace

HighestWeightData build_highest_weight(const CartanMatrix& c, const Weight& lambda, int max_dim) {
  const int n = c.rank();
  if (static_cast<int>(lambda.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, kMod, "weight length does not match rank");
  if (!is_dominant(lambda)) throw Error(ErrorKind::NonDominant, kMod, "weight " + weight_str(lambda) + " is not dominant");
  const std::int64_t wd = weyl_dimension(c, lambda);
  if (wd > max_dim)
    throw Error(ErrorKind::DimensionOverBudget, kMod,
                "module " + weight_str(lambda) + " has dimension " + std::to_string(wd) + " > budget " +
                    std::to_string(max_dim));
  const int S = static_cast<int>(wd) + 1;  // block stride for the stacked images under e_j
  std::vector<Weight> alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = simple_root_weight(c, i);

  HighestWeightData out;
  out.highest = lambda;
  std::vector<Weight>& weights = out.weights;
  weights.push_back(lambda);
  std::vector<std::vector<SparseVec>> ecol(n, std::vector<SparseVec>(1));
  std::vector<std::vector<SparseVec>> fcol(n);
  std::vector<SparseVec> grow{SparseVec::unit(0)};
  std::map<Weight, std::vector<int>> at{{lambda, {0}}};

  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    for (int i = 0; i < n; ++i) fcol[i].resize(weights.size());
    std::set<Weight> cand;
    for (const auto& nu : level)
      for (int i = 0; i < n; ++i) cand.insert(plus(nu, alpha[i], -1));
    std::vector<Weight> next;
    for (const auto& mu : cand) {
      struct Cand {
        int i, b;
        SparseVec phi;
      };
      std::vector<Cand> cs;
      for (int i = 0; i < n; ++i) {
        Weight nu = plus(mu, alpha[i]);
        auto it = at.find(nu);
        if (it == at.end()) continue;
        for (int b : it->second) {
          // e_j f_i b = f_i e_j b + delta_ij nu(h_i) b
          VecBuilder pb;
          for (int j = 0; j < n; ++j) {
            for (const auto& [k, v] : ecol[j][b].entries())
              for (const auto& [m, u] : fcol[i][k].entries()) pb.add(j * S + m, v * u);
            if (i == j) pb.add(j * S + b, Rational(nu[i]));
          }
          cs.push_back({i, b, pb.finish()});
        }
      }
      Echelon ech;
      std::vector<int> chosen;
      for (int t = 0; t < static_cast<int>(cs.size()); ++t)
        if (ech.add(cs[t].phi)) chosen.push_back(t);
      if (chosen.empty()) continue;
      std::vector<int> ids;
      std::vector<SparseVec> phis;
      for (int t : chosen) {
        int id = static_cast<int>(weights.size());
        ids.push_back(id);
        weights.push_back(mu);
        phis.push_back(cs[t].phi);
        for (int j = 0; j < n; ++j) {
          std::vector<SparseVec::Entry> es;
          for (const auto& [k, v] : cs[t].phi.entries())
            if (k / S == j) es.emplace_back(k - j * S, v);
          ecol[j].push_back(SparseVec::from_entries(std::move(es)));
        }
      }
      at[mu] = ids;
      next.push_back(mu);
      CoordinateChart chart(n * S, phis);
      for (const auto& cd : cs) {
        auto co = chart.coords(cd.phi);
        if (!co) throw Error(ErrorKind::CertificationFailure, kMod, "candidate outside the chosen weight space");
        VecBuilder fb;
        for (std::size_t k = 0; k < ids.size(); ++k) fb.add(ids[k], (*co)[k]);
        fcol[cd.i][cd.b] = fb.finish();
      }
      // <f_i b, y> = <b, e_i y>
      for (std::size_t k = 0; k < ids.size(); ++k) {
        const Cand& ck = cs[chosen[k]];
        VecBuilder gb;
        for (std::size_t l = 0; l < ids.size(); ++l) {
          Rational s = dot(grow[ck.b], ecol[ck.i][ids[l]]);
          gb.add(ids[l], s);
        }
        grow.push_back(gb.finish());
      }
    }
    level = std::move(next);
  }
  const int dim = static_cast<int>(weights.size());
  if (dim != wd)
    throw Error(ErrorKind::CertificationFailure, kMod,
                "constructed dimension " + std::to_string(dim) + " differs from Weyl dimension " + std::to_string(wd));
  for (int i = 0; i < n; ++i) {
    fcol[i].resize(dim);
    ecol[i].resize(dim);
    out.e.push_back(SparseMatrix::from_columns(dim, ecol[i]));
    out.f.push_back(SparseMatrix::from_columns(dim, fcol[i]));
  }
  out.gram = SparseMatrix::from_columns(dim, grow);
  return out;
}

std::vector<RootStep> root_steps(const RootSystem& rs) {
  std::vector<RootStep> steps;
  for (int r = 0; r < rs.size(); ++r) {
    if (rs.height[r] == 1) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      RootCoeffs b = rs.positive[r];
      b[i] -= 1;
      int t = rs.index_of(b);
      if (t < 0) continue;
      int p = 0;
      RootCoeffs down = b;
      while (true) {
        down[i] -= 1;
        if (rs.index_of(down) < 0) break;
        ++p;
      }
      steps.push_back({r, i, t, p + 1});
      break;
    }
  }
  return steps;
}

std::vector<SparseMatrix> chevalley_actions(const RootSystem& rs, const std::vector<RootStep>& steps,
                                            const std::vector<SparseMatrix>& e, const std::vector<SparseMatrix>& f) {
  const int P = rs.size(), n = rs.rank();
  std::vector<SparseMatrix> E(P), F(P);
  for (int i = 0; i < n; ++i) {
    E[rs.simple_index(i)] = e[i];
    F[rs.simple_index(i)] = f[i];
  }
  for (const auto& s : steps) {
    int si = rs.simple_index(s.simple);
    E[s.root] = commutator(E[si], E[s.rest]).scaled(Rational(1, s.divisor));
    F[s.root] = commutator(F[si], F[s.rest]).scaled(Rational(-1, s.divisor));
  }
  std::vector<SparseMatrix> X(2 * P + n);
  for (int r = 0; r < P; ++r) {
    X[P - 1 - r] = F[r];
    X[P + n + r] = E[r];
  }
  for (int i = 0; i < n; ++i) X[P + i] = commutator(e[i], f[i]);
  return X;
}

GModule build_irrep(const AlgebraPtr& g, const Weight& lambda, int max_dim) {
  HighestWeightData hw = build_highest_weight(g->rs.cartan, lambda, max_dim);
  GModule m;
  m.g = g;
  m.highest = lambda;
  m.dim = static_cast<int>(hw.weights.size());
  m.weights = hw.weights;
  m.act = chevalley_actions(g->rs, g->steps, hw.e, hw.f);
  m.gram = hw.gram;
  return m;
}

const SparseMatrix& contravariant_form(const GModule& m) { return m.gram; }

// ---- PModule ----

bool PModule::has_action(int a) const { return act[a].cols() == dim && act[a].rows() == dim; }

const SparseMatrix& PModule::action(int a) const {
  if (!has_action(a))
    throw Error(ErrorKind::ValidationError, kMod, "action of " + g->basis_name(a) + " is not available on this module");
  return act[a];
}

SparseMatrix PModule::action_of(const SparseVec& x) const {
  SparseMatrix m(dim, dim);
  for (const auto& [a, c] : x.entries()) m = m + action(a).scaled(c);
  return m;
}

std::vector<Rational> PModule::eigenvalues() const {
  std::vector<Rational> v(eig);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

PModule restrict_to_parabolic(const GModule& m) {
  PModule p;
  p.g = m.g;
  p.dim = m.dim;
  p.weights = m.weights;
  for (const auto& w : m.weights) p.eig.push_back(m.g->e_value(w));
  p.act = m.act;
  p.full_g = true;
  p.form = m.gram;
  return p;
}

PModule trivial_module(const AlgebraPtr& g) {
  PModule p;
  p.g = g;
  p.dim = 1;
  p.weights = {Weight(g->rank(), 0)};
  p.eig = {Rational(0)};
  p.act.assign(g->dim, SparseMatrix(1, 1));
  p.full_g = true;
  p.form = SparseMatrix::identity(1);
  return p;
}

PModule pplus_module(const AlgebraPtr& g) {
  PModule p;
  p.g = g;
  p.dim = g->dim_pplus();
  for (int a = 0; a < p.dim; ++a) {
    p.weights.push_back(g->weight_of(g->eta[a]));
    p.eig.push_back(Rational(g->eta_grade[a]));
  }
  p.act.assign(g->dim, SparseMatrix());
  for (int z : g->p_basis) {
    SparseMatrix m(p.dim, p.dim);
    for (int a = 0; a < p.dim; ++a) {
      std::vector<SparseVec::Entry> es;
      for (const auto& [t, v] : g->table[z][g->eta[a]].entries()) es.emplace_back(g->eta_index[t], v);
      m.set_col(a, SparseVec::from_entries(std::move(es)));
    }
    p.act[z] = std::move(m);
  }
  return p;
}

WedgeBasis::WedgeBasis(int m, int k) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      lookup_[cur] = static_cast<int>(sets_.size());
      sets_.push_back(cur);
      return;
    }
    for (int x = start; x < m; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && k <= m) rec(rec, 0);
}

int WedgeBasis::index(const std::vector<int>& s) const {
  auto it = lookup_.find(s);
  return it == lookup_.end() ? -1 : it->second;
}

int sort_with_sign(std::vector<int>& s) {
  int sign = 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
      if (s[j - 1] == s[j]) return 0;
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  return sign;
}

PModule exterior_power(const PModule& m, int n) {
  if (n < 0 || n > m.dim) throw Error(ErrorKind::DegreeOverflow, kMod, "exterior degree out of range");
  WedgeBasis wb(m.dim, n);
  PModule p;
  p.g = m.g;
  p.dim = wb.size();
  p.full_g = m.full_g;
  for (int s = 0; s < p.dim; ++s) {
    Weight w(m.g->rank(), 0);
    Rational e;
    for (int x : wb.set(s)) {
      w = plus(w, m.weights[x]);
      e += m.eig[x];
    }
    p.weights.push_back(w);
    p.eig.push_back(e);
  }
  p.act.assign(m.g->dim, SparseMatrix());
  for (int a = 0; a < m.g->dim; ++a) {
    if (!m.has_action(a)) continue;
    SparseMatrix out(p.dim, p.dim);
    for (int s = 0; s < p.dim; ++s) {
      VecBuilder b;
      const auto& S = wb.set(s);
      for (int i = 0; i < n; ++i)
        for (const auto& [k, v] : m.act[a].col(S[i]).entries()) {
          std::vector<int> T(S);
          T[i] = k;
          int sg = sort_with_sign(T);
          if (sg == 0) continue;
          b.add(wb.index(T), sg == 1 ? v : -v);
        }
      out.set_col(s, b.finish());
    }
    p.act[a] = std::move(out);
  }
  return p;
}

PModule tensor(const PModule& x, const PModule& y) {
  PModule p;
  p.g = x.g;
  p.dim = x.dim * y.dim;
  p.full_g = x.full_g && y.full_g;
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j) {
      p.weights.push_back(plus(x.weights[i], y.weights[j]));
      p.eig.push_back(x.eig[i] + y.eig[j]);
    }
  p.act.assign(x.g->dim, SparseMatrix());
  for (int a = 0; a < x.g->dim; ++a) {
    if (!x.has_action(a) || !y.has_action(a)) continue;
    SparseMatrix out(p.dim, p.dim);
    for (int i = 0; i < x.dim; ++i)
      for (int j = 0; j < y.dim; ++j) {
        VecBuilder b;
        for (const auto& [k, v] : x.act[a].col(i).entries()) b.add(k * y.dim + j, v);
        for (const auto& [k, v] : y.act[a].col(j).entries()) b.add(i * y.dim + k, v);
        out.set_col(i * y.dim + j, b.finish());
      }
    p.act[a] = std::move(out);
  }
  return p;
}

PModule dual_module(const PModule& m) {
  PModule p;
  p.g = m.g;
  p.dim = m.dim;
  p.full_g = m.full_g;
  for (const auto& w : m.weights) p.weights.push_back(plus(Weight(w.size(), 0), w, -1));
  for (const auto& e : m.eig) p.eig.push_back(-e);
  p.act.assign(m.g->dim, SparseMatrix());
  for (int a = 0; a < m.g->dim; ++a)
    if (m.has_action(a)) p.act[a] = m.act[a].transpose().scaled(-1);
  return p;
}

PModule sub_module(const PModule& m, const std::vector<SparseVec>& basis) {
  PModule p;
  p.g = m.g;
  p.dim = static_cast<int>(basis.size());
  p.full_g = m.full_g;
  for (const auto& v : basis) {
    if (v.is_zero()) throw Error(ErrorKind::ValidationError, kMod, "zero vector in submodule basis");
    int i0 = v.entries().front().first;
    for (const auto& [i, c] : v.entries())
      if (m.weights[i] != m.weights[i0] || m.eig[i] != m.eig[i0])
        throw Error(ErrorKind::ValidationError, kMod, "submodule basis vector is not a weight vector");
    p.weights.push_back(m.weights[i0]);
    p.eig.push_back(m.eig[i0]);
  }
  CoordinateChart chart(m.dim, basis);
  p.act.assign(m.g->dim, SparseMatrix());
  for (int a = 0; a < m.g->dim; ++a) {
    if (!m.has_action(a)) continue;
    SparseMatrix out(p.dim, p.dim);
    bool ok = true;
    for (int j = 0; j < p.dim && ok; ++j) {
      auto co = chart.coords(m.act[a].apply(basis[j]));
      if (!co) {
        // a p-submodule need not be stable under g_-; then only p acts
        if (m.g->grade[a] >= 0)
          throw Error(ErrorKind::ValidationError, kMod, "subspace is not invariant under " + m.g->basis_name(a));
        ok = false;
        break;
      }
      out.set_col(j, SparseVec::from_dense(*co));
    }
    if (ok)
      p.act[a] = std::move(out);
    else
      p.full_g = false;
  }
  if (!p.full_g)
    for (int a = 0; a < m.g->dim; ++a)
      if (m.g->grade[a] < 0) p.act[a] = SparseMatrix();
  return p;
}

// ---- labels and decomposition ----

std::string IrrepLabel::str() const { return weight_str(coords); }

IrrepLabel label_from_highest(const GradedLieAlgebra& g, const Weight& mu) {
  const CartanMatrix& c = g.rs.cartan;
  Weight low(mu);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < c.rank(); ++j)
      if (!g.p.crossed0(j) && low[j] > 0) {
        low = reflect(c, j, low);
        changed = true;
      }
  }
  IrrepLabel l;
  for (auto& x : low) x = -x;
  l.coords = low;
  l.e_eigenvalue = g.e_value(mu);
  return l;
}

std::int64_t levi_dimension(const GradedLieAlgebra& g, const Weight& mu) {
  Weight shifted(mu);
  for (auto& x : shifted) x += 1;
  Weight rho(mu.size(), 1);
  Rational prod = 1;
  for (int r = 0; r < g.rs.size(); ++r) {
    if (g.grade[g.pos_index(r)] != 0) continue;
    prod *= g.rs.pair(shifted, g.rs.positive[r]) / g.rs.pair(rho, g.rs.positive[r]);
  }
  return prod.to_int();
}

std::vector<IrrepComponent> decompose_completely_reducible(const PModule& m) {
  const GradedLieAlgebra& g = *m.g;
  for (int a : g.eta)
    if (!m.action(a).is_zero())
      throw Error(ErrorKind::NotCompletelyReducibleInput, kMod, "p_+ acts nontrivially (" + g.basis_name(a) + ")");
  std::vector<int> raise, lower;
  for (int j = 0; j < g.rank(); ++j)
    if (!g.p.crossed0(j)) {
      raise.push_back(g.pos_index(g.rs.simple_index(j)));
      lower.push_back(g.neg_index(g.rs.simple_index(j)));
    }
  std::map<Weight, std::vector<int>> by_weight;
  for (int i = 0; i < m.dim; ++i) by_weight[m.weights[i]].push_back(i);

  std::vector<IrrepComponent> out;
  for (const auto& [mu, idx] : by_weight) {
    std::vector<SparseVec> images;
    for (int i : idx) {
      VecBuilder b;
      for (std::size_t t = 0; t < raise.size(); ++t)
        for (const auto& [k, v] : m.act[raise[t]].col(i).entries()) b.add(static_cast<int>(t) * m.dim + k, v);
      images.push_back(b.finish());
    }
    for (const auto& kv : kernel_of(images)) {
      SparseVec hw;
      {
        VecBuilder b;
        for (const auto& [t, v] : kv.entries()) b.add(idx[t], v);
        hw = b.finish();
      }
      IrrepComponent comp;
      comp.highest = mu;
      comp.label = label_from_highest(g, mu);
      Echelon ech;
      ech.add(hw);
      comp.basis.push_back(hw);
      std::deque<SparseVec> q{hw};
      while (!q.empty()) {
        SparseVec v = q.front();
        q.pop_front();
        for (int f : lower) {
          SparseVec w = m.act[f].apply(v);
          if (ech.add(w)) {
            comp.basis.push_back(w);
            q.push_back(w);
          }
        }
      }
      if (static_cast<std::int64_t>(comp.basis.size()) != levi_dimension(g, mu))
        throw Error(ErrorKind::CertificationFailure, kMod, "component generated by " + weight_str(mu) + " has wrong dimension");
      out.push_back(std::move(comp));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const IrrepComponent& a, const IrrepComponent& b) { return a.label < b.label; });
  return out;
}

std::vector<std::pair<IrrepLabel, int>> multiplicities(const std::vector<IrrepComponent>& comps) {
  std::vector<std::pair<IrrepLabel, int>> out;
  for (const auto& c : comps) {
    if (!out.empty() && out.back().first == c.label)
      ++out.back().second;
    else
      out.emplace_back(c.label, 1);
  }
  return out;
}

}  // namespace bgg
