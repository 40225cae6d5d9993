#include "bgg/hodge.hpp"

#include "bgg/error.hpp"

#include <algorithm>

namespace bgg {
namespace {

const char* kMod = "hodge";

std::map<Weight, std::vector<int>> weight_classes(const PModule& m) {
  std::map<Weight, std::vector<int>> out;
  for (int i = 0; i < m.dim; ++i) out[m.weights[i]].push_back(i);
  return out;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Restriction of a vector to the rows of one block.
SparseVec localize(const SparseVec& x, const std::vector<int>& pos) {
  VecBuilder b;
  for (const auto& [i, v] : x.entries()) b.add(pos[i], v);
  return b.finish();
}

}  // namespace

CochainComplex build_cochain_complex(const AlgebraPtr& gp, const PModule& V, int max_dim, int max_level) {
  const GradedLieAlgebra& g = *gp;
  if (!V.full_g)
    throw Error(ErrorKind::ValidationError, kMod, "coefficient module must carry the action of all of g");
  const int m = g.dim_pplus();
  CochainComplex cc;
  cc.g = gp;
  cc.V = V;
  cc.top = m;
  int last = max_level < 0 ? m : std::min(max_level, m);
  cc.levels = last + 1;

  PModule pp = pplus_module(gp);
  for (int n = 0; n <= last; ++n) {
    WedgeBasis wb(m, n);
    std::int64_t d = static_cast<std::int64_t>(wb.size()) * V.dim;
    if (d > max_dim)
      throw Error(ErrorKind::DimensionOverBudget, kMod,
                  "C^" + std::to_string(n) + " has dimension " + std::to_string(d) + " > " + std::to_string(max_dim));
    cc.wedge.push_back(std::move(wb));
  }
  for (int n = 0; n <= last; ++n) cc.spaces.push_back(tensor(exterior_power(pp, n), V));

  cc.eta_bracket.assign(static_cast<std::size_t>(m) * m, {});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (const auto& [t, v] : g.table[g.eta[a]][g.eta[b]].entries())
        cc.eta_bracket[a * m + b].emplace_back(g.eta_index[t], v);

  // coefficient of xi_c in [xi_p, xi_q], p < q
  struct Triple {
    int p, q;
    Rational y;
  };
  std::vector<std::vector<Triple>> xi_br(m);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      SparseVec br = g.bracket(g.xi[p], g.xi[q]);
      if (br.is_zero()) continue;
      for (int c = 0; c < m; ++c) {
        Rational y = g.killing_of(SparseVec::unit(g.eta[c]), br);
        if (!y.is_zero()) xi_br[c].push_back({p, q, y});
      }
    }
  std::vector<SparseMatrix> xi_act, eta_act;
  for (int a = 0; a < m; ++a) {
    xi_act.push_back(V.action_of(g.xi[a]));
    eta_act.push_back(V.action(g.eta[a]));
  }

  const int dv = V.dim;
  for (int n = 0; n < last; ++n) {
    const WedgeBasis& src = cc.wedge[n];
    const WedgeBasis& dst = cc.wedge[n + 1];
    const Rational np1 = n + 1;

    SparseMatrix del(dst.size() * dv, src.size() * dv);
    for (int s = 0; s < src.size(); ++s) {
      const auto& S = src.set(s);
      std::vector<char> in(m, 0);
      for (int x : S) in[x] = 1;
      // scalar part: sets B with coefficients, independent of v
      VecBuilder scal;
      for (int ci = 0; ci < n; ++ci) {
        int c = S[ci];
        std::vector<int> rest(S);
        rest.erase(rest.begin() + ci);
        int sc = ci % 2 ? -1 : 1;
        for (const auto& t : xi_br[c]) {
          if ((in[t.p] && t.p != c) || (in[t.q] && t.q != c)) continue;
          std::vector<int> B(rest);
          B.push_back(t.p);
          B.push_back(t.q);
          std::sort(B.begin(), B.end());
          int i = static_cast<int>(std::find(B.begin(), B.end(), t.p) - B.begin());
          int j = static_cast<int>(std::find(B.begin(), B.end(), t.q) - B.begin());
          int sg = ((i + j) % 2 ? -1 : 1) * sc;
          scal.add(dst.index(B), t.y * np1 * sg);
        }
      }
      SparseVec sv = scal.finish();
      for (int v = 0; v < dv; ++v) {
        VecBuilder b;
        for (const auto& [B, c] : sv.entries()) b.add(B * dv + v, c);
        for (int x = 0; x < m; ++x) {
          if (in[x]) continue;
          std::vector<int> B(S);
          B.push_back(x);
          std::sort(B.begin(), B.end());
          int i = static_cast<int>(std::find(B.begin(), B.end(), x) - B.begin());
          Rational c = np1 * (i % 2 ? -1 : 1);
          int bi = dst.index(B);
          for (const auto& [w, u] : xi_act[x].col(v).entries()) b.add(bi * dv + w, c * u);
        }
        del.set_col(s * dv + v, b.finish());
      }
    }
    cc.del.push_back(std::move(del));

    SparseMatrix ds(src.size() * dv, dst.size() * dv);
    for (int s = 0; s < dst.size(); ++s) {
      const auto& B = dst.set(s);
      VecBuilder scal;  // bracket terms, set index -> coefficient
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::vector<int> rest;
          for (int t = 0; t <= n; ++t)
            if (t != i && t != j) rest.push_back(B[t]);
          int sij = (i + j) % 2 ? -1 : 1;
          for (const auto& [t, v] : cc.eta_bracket[B[i] * m + B[j]]) {
            std::vector<int> T{t};
            T.insert(T.end(), rest.begin(), rest.end());
            int sg = sort_with_sign(T);
            if (sg == 0) continue;
            scal.add(src.index(T), v * (sg * sij));
          }
        }
      SparseVec sv = scal.finish();
      for (int v = 0; v < dv; ++v) {
        VecBuilder b;
        for (const auto& [T, c] : sv.entries()) b.add(T * dv + v, c);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> rest(B);
          rest.erase(rest.begin() + i);
          int ri = src.index(rest);
          int sg = i % 2 ? 1 : -1;
          for (const auto& [w, u] : eta_act[B[i]].col(v).entries()) b.add(ri * dv + w, u * sg);
        }
        ds.set_col(s * dv + v, b.finish());
      }
    }
    cc.delstar.push_back(std::move(ds));
  }
  return cc;
}

SparseMatrix CochainComplex::inner_product(int n) const {
  if (V.form.rows() != V.dim) throw Error(ErrorKind::ValidationError, kMod, "coefficient module has no invariant form");
  const GradedLieAlgebra& gg = *g;
  const WedgeBasis& wb = wedge[n];
  const int dv = V.dim;
  SparseMatrix out(dim(n), dim(n));
  Rational inv = Rational(1) / factorial(n);
  for (int s = 0; s < wb.size(); ++s) {
    Rational c = inv;
    for (int x : wb.set(s)) c *= gg.eta_norm[x];
    for (int v = 0; v < dv; ++v) {
      VecBuilder b;
      for (const auto& [w, u] : V.form.col(v).entries()) b.add(s * dv + w, c * u);
      out.set_col(s * dv + v, b.finish());
    }
  }
  return out;
}

SparseMatrix CochainComplex::pairing(int n) const { return inner_product(n).scaled(n % 2 ? -1 : 1); }

SparseMatrix laplacian(const CochainComplex& cc, int n) {
  if (n < 0 || n >= cc.levels) throw Error(ErrorKind::DegreeOverflow, kMod, "no such level");
  SparseMatrix box(cc.dim(n), cc.dim(n));
  if (n > 0) box = box + cc.del[n - 1] * cc.delstar[n - 1];
  if (n < cc.top) {
    if (n + 1 >= cc.levels) throw Error(ErrorKind::DegreeOverflow, kMod, "complex truncated below level " + std::to_string(n + 1));
    box = box + cc.delstar[n] * cc.del[n];
  }
  return box;
}

HodgeLevel hodge_decompose(const CochainComplex& cc, int n) {
  if (n < 0 || n >= cc.levels) throw Error(ErrorKind::DegreeOverflow, kMod, "no such level");
  if (n < cc.top && n + 1 >= cc.levels)
    throw Error(ErrorKind::DegreeOverflow, kMod, "complex truncated below level " + std::to_string(n + 1));
  HodgeLevel h;
  h.n = n;
  const int D = cc.dim(n);
  h.block_at.assign(D, -1);
  h.pos_at.assign(D, -1);
  auto here = weight_classes(cc.spaces[n]);
  std::map<Weight, std::vector<int>> below, above;
  if (n > 0) below = weight_classes(cc.spaces[n - 1]);
  if (n < cc.top) above = weight_classes(cc.spaces[n + 1]);
  const int dn1 = n < cc.top ? cc.dim(n + 1) : 0;

  for (const auto& [mu, idx] : here) {
    HodgeBlock blk;
    blk.mu = mu;
    blk.idx = idx;
    int bi = static_cast<int>(h.blocks.size());
    for (int t = 0; t < static_cast<int>(idx.size()); ++t) {
      h.block_at[idx[t]] = bi;
      h.pos_at[idx[t]] = t;
    }
    // kernel of del and delstar together
    std::vector<SparseVec> images;
    for (int i : idx) {
      VecBuilder b;
      if (n < cc.top) b.add(cc.del[n].col(i));
      if (n > 0)
        for (const auto& [k, v] : cc.delstar[n - 1].col(i).entries()) b.add(dn1 + k, v);
      images.push_back(b.finish());
    }
    for (const auto& kv : kernel_of(images)) {
      VecBuilder b;
      for (const auto& [t, v] : kv.entries()) b.add(idx[t], v);
      blk.harmonic.push_back(b.finish());
    }
    std::vector<SparseVec> ex, co;
    if (n > 0)
      if (auto it = below.find(mu); it != below.end())
        for (int i : it->second) ex.push_back(cc.del[n - 1].col(i));
    if (n < cc.top)
      if (auto it = above.find(mu); it != above.end())
        for (int i : it->second) co.push_back(cc.delstar[n].col(i));
    blk.exact = span_basis(D, ex);
    blk.coexact = span_basis(D, co);

    const int nb = static_cast<int>(idx.size());
    const int nh = static_cast<int>(blk.harmonic.size()), ne = static_cast<int>(blk.exact.size()),
              nc = static_cast<int>(blk.coexact.size());
    if (nh + ne + nc != nb)
      throw Error(ErrorKind::CertificationFailure, kMod,
                  "Hodge dimensions do not add up on weight " + weight_str(mu) + " at level " + std::to_string(n));
    std::vector<SparseVec> cols;
    for (const auto* part : {&blk.harmonic, &blk.exact, &blk.coexact})
      for (const auto& v : *part) cols.push_back(localize(v, h.pos_at));
    auto inv = Matrix::from_columns(nb, cols).inverse();
    if (!inv) throw Error(ErrorKind::CertificationFailure, kMod, "harmonic, exact and coexact parts are not independent");
    blk.inverse = std::move(*inv);

    if (nc > 0) {
      // box R = R K, read K off through the coordinate inverse
      Matrix K(nc, nc);
      for (int j = 0; j < nc; ++j) {
        SparseVec y = cc.delstar[n].apply(cc.del[n].apply(blk.coexact[j]));
        if (n > 0) y = y + cc.del[n - 1].apply(cc.delstar[n - 1].apply(blk.coexact[j]));
        SparseVec c = blk.inverse.apply(localize(y, h.pos_at));
        for (const auto& [k, v] : c.entries()) {
          if (k < nh + ne) throw Error(ErrorKind::CertificationFailure, kMod, "Laplacian leaves the coexact part");
          K(k - nh - ne, j) = v;
        }
      }
      auto kinv = K.inverse();
      if (!kinv) throw Error(ErrorKind::SingularLaplacianBlock, kMod, "Laplacian is singular on the coexact part of " + weight_str(mu));
      blk.box_on_coexact_inv = std::move(*kinv);
    }
    h.dim_harmonic += nh;
    h.dim_exact += ne;
    h.dim_coexact += nc;
    h.block_of[mu] = bi;
    h.blocks.push_back(std::move(blk));
  }
  return h;
}

std::vector<SparseVec> HodgeLevel::harmonic_basis() const {
  std::vector<SparseVec> out;
  for (const auto& b : blocks) out.insert(out.end(), b.harmonic.begin(), b.harmonic.end());
  return out;
}

std::array<SparseVec, 3> HodgeLevel::split(const SparseVec& x) const {
  std::map<int, VecBuilder> per_block;
  for (const auto& [i, v] : x.entries()) per_block[block_at.at(i)].add(pos_at[i], v);
  std::array<VecBuilder, 3> parts;
  for (auto& [bi, vb] : per_block) {
    const HodgeBlock& blk = blocks[bi];
    SparseVec c = blk.inverse.apply(vb.finish());
    const int nh = static_cast<int>(blk.harmonic.size()), ne = static_cast<int>(blk.exact.size());
    for (const auto& [k, v] : c.entries()) {
      if (k < nh)
        parts[0].add(blk.harmonic[k], v);
      else if (k < nh + ne)
        parts[1].add(blk.exact[k - nh], v);
      else
        parts[2].add(blk.coexact[k - nh - ne], v);
    }
  }
  return {parts[0].finish(), parts[1].finish(), parts[2].finish()};
}

SparseVec HodgeLevel::project_harmonic(const SparseVec& x) const { return split(x)[0]; }

SparseVec HodgeLevel::box_inverse(const SparseVec& x) const {
  std::map<int, VecBuilder> per_block;
  for (const auto& [i, v] : x.entries()) per_block[block_at.at(i)].add(pos_at[i], v);
  VecBuilder out;
  for (auto& [bi, vb] : per_block) {
    const HodgeBlock& blk = blocks[bi];
    SparseVec c = blk.inverse.apply(vb.finish());
    const int off = static_cast<int>(blk.harmonic.size() + blk.exact.size());
    VecBuilder y;
    for (const auto& [k, v] : c.entries()) {
      if (k < off)
        throw Error(ErrorKind::SingularLaplacianBlock, kMod, "argument is not in the image of the codifferential");
      y.add(k - off, v);
    }
    SparseVec z = blk.box_on_coexact_inv.apply(y.finish());
    for (const auto& [k, v] : z.entries()) out.add(blk.coexact[k], v);
  }
  return out.finish();
}

Cohomology cohomology_module(const CochainComplex& cc, const HodgeLevel& h) {
  const GradedLieAlgebra& g = *cc.g;
  const PModule& C = cc.spaces[h.n];
  Cohomology out;
  out.embedding = h.harmonic_basis();
  PModule& m = out.module;
  m.g = cc.g;
  m.dim = static_cast<int>(out.embedding.size());
  for (const auto& v : out.embedding) {
    int i0 = v.entries().front().first;
    m.weights.push_back(C.weights[i0]);
    m.eig.push_back(C.eig[i0]);
  }
  m.act.assign(g.dim, SparseMatrix());
  CoordinateChart chart(C.dim, out.embedding);
  for (int a : g.p_basis) {
    SparseMatrix act(m.dim, m.dim);
    if (g.grade[a] == 0)
      for (int j = 0; j < m.dim; ++j) {
        auto co = chart.coords(C.action(a).apply(out.embedding[j]));
        if (!co) throw Error(ErrorKind::CertificationFailure, kMod, "harmonic space is not stable under " + g.basis_name(a));
        act.set_col(j, SparseVec::from_dense(*co));
      }
    m.act[a] = std::move(act);
  }
  for (auto& comp : decompose_completely_reducible(m)) {
    CohomologyComponent c;
    c.level = h.n;
    c.label = comp.label;
    c.highest = comp.highest;
    for (const auto& v : comp.basis) {
      VecBuilder b;
      for (const auto& [k, u] : v.entries()) b.add(out.embedding[k], u);
      c.harmonic_basis.push_back(b.finish());
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

SparseVec wedge_insert(const CochainComplex& cc, const SparseVec& z, int n, const SparseVec& f) {
  if (n >= cc.top) throw Error(ErrorKind::DegreeOverflow, kMod, "wedge product beyond the top degree");
  if (n + 1 >= cc.levels) throw Error(ErrorKind::DegreeOverflow, kMod, "complex truncated below level " + std::to_string(n + 1));
  const WedgeBasis& src = cc.wedge[n];
  const WedgeBasis& dst = cc.wedge[n + 1];
  const int dv = cc.V.dim;
  VecBuilder b;
  for (const auto& [i, v] : f.entries()) {
    const auto& S = src.set(i / dv);
    for (const auto& [a, za] : z.entries()) {
      std::vector<int> T{a};
      T.insert(T.end(), S.begin(), S.end());
      int sg = sort_with_sign(T);
      if (sg == 0) continue;
      b.add(dst.index(T) * dv + i % dv, v * za * sg);
    }
  }
  return b.finish();
}

SparseVec act_on_cochain(const CochainComplex& cc, int n, const SparseVec& z, const SparseVec& f) {
  VecBuilder b;
  for (const auto& [a, c] : z.entries()) b.add(cc.spaces[n].action(a).apply(f), c);
  return b.finish();
}

std::vector<std::vector<IrrepLabel>> kostant_oracle(const AlgebraPtr& gp, const Weight& lambda) {
  const GradedLieAlgebra& g = *gp;
  const CartanMatrix& c = g.rs.cartan;
  Weight dual = dual_weight(c, lambda);
  HasseDiagram hd = parabolic_hasse(c, g.p);
  std::vector<std::vector<IrrepLabel>> out;
  for (const auto& level : hd.by_length) {
    std::vector<IrrepLabel> labels;
    for (const auto& w : level) {
      IrrepLabel l;
      l.coords = affine_dot_action(c, w, dual);
      l.e_eigenvalue = -g.e_value(l.coords);
      labels.push_back(l);
    }
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  return out;
}

SparseMatrix curvature_codifferential(const AlgebraPtr& g) {
  PModule adj = restrict_to_parabolic(build_irrep(g, g->rs.to_weight(g->rs.highest())));
  CochainComplex cc = build_cochain_complex(g, adj, kDefaultCochainBudget * 10, 2);
  if (cc.delstar.size() < 2) throw Error(ErrorKind::DegreeOverflow, kMod, "grading too shallow for curvature forms");
  return cc.delstar[1];
}

}  // namespace bgg
