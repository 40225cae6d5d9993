#pragma once

#include "bgg/repmod.hpp"

#include <array>
#include <map>
#include <vector>

namespace bgg {

inline constexpr int kDefaultCochainBudget = 20000;

/// C^n = Lambda^n p_+ (x) V for n = 0..dim g_-. Basis index of eta_S (x) v is
/// (lexicographic rank of S) * dim V + v. An n-form eta_S (x) v corresponds to
/// the alternating map (1/n!) det(B(eta_s, X_t)) v.
struct CochainComplex {
  AlgebraPtr g;
  PModule V;
  int top = 0;    // dim g_-
  int levels = 0; // number of levels built, top + 1 unless truncated
  std::vector<WedgeBasis> wedge;
  std::vector<PModule> spaces;        // C^n as p-modules
  std::vector<SparseMatrix> del;      // del[n] : C^n -> C^{n+1}
  std::vector<SparseMatrix> delstar;  // delstar[n] : C^{n+1} -> C^n
  std::vector<std::vector<std::pair<int, Rational>>> eta_bracket;  // [eta_a, eta_b] in eta coordinates, a*m+b

  int dim(int n) const { return spaces[n].dim; }
  int index(int set, int v) const { return set * V.dim + v; }
  /// Positive-definite inner product on C^n: (1/n!) prod B(eta_s, x_{-s}) tensor the contravariant form.
  SparseMatrix inner_product(int n) const;
  /// The same product built from B(eta, sigma(eta')) with sigma(x_alpha) = -x_{-alpha}: (-1)^n inner_product.
  SparseMatrix pairing(int n) const;
};

/// Levels above max_level (default: all) are left out; throws DimensionOverBudget when a level exceeds max_dim.
CochainComplex build_cochain_complex(const AlgebraPtr& g, const PModule& V, int max_dim = kDefaultCochainBudget,
                                     int max_level = -1);

SparseMatrix laplacian(const CochainComplex& cc, int n);

/// Hodge data on one weight space of C^n.
struct HodgeBlock {
  Weight mu;
  std::vector<int> idx;                 // basis indices of C^n with this weight
  std::vector<SparseVec> harmonic;      // ker box
  std::vector<SparseVec> exact;         // im del_{n-1}
  std::vector<SparseVec> coexact;       // im delstar_n
  Matrix inverse;                       // inverse of [harmonic | exact | coexact] on idx
  Matrix box_on_coexact_inv;            // inverse of box restricted to im delstar, coexact coordinates
};

struct HodgeLevel {
  int n = 0;
  std::vector<HodgeBlock> blocks;
  std::map<Weight, int> block_of;
  int dim_exact = 0, dim_harmonic = 0, dim_coexact = 0;
  std::vector<int> block_at, pos_at;  // per basis index of C^n: its block and row inside it

  std::vector<SparseVec> harmonic_basis() const;
  /// Harmonic projection pi_H.
  SparseVec project_harmonic(const SparseVec& x) const;
  /// Components along (harmonic, exact, coexact).
  std::array<SparseVec, 3> split(const SparseVec& x) const;
  /// box^{-1} on im delstar; throws SingularLaplacianBlock outside it.
  SparseVec box_inverse(const SparseVec& x) const;
};

HodgeLevel hodge_decompose(const CochainComplex& cc, int n);

struct CohomologyComponent {
  int level = 0;
  IrrepLabel label;
  Weight highest;
  std::vector<SparseVec> harmonic_basis;  // vectors in C^n, first one is the highest weight vector
  int dim() const { return static_cast<int>(harmonic_basis.size()); }
};

struct Cohomology {
  PModule module;  // harmonic space with p_+ acting by zero
  std::vector<SparseVec> embedding;
  std::vector<CohomologyComponent> components;
};

Cohomology cohomology_module(const CochainComplex& cc, const HodgeLevel& h);

/// Exterior product Z ^ f for Z in p_+ (eta coordinates) and f in C^n.
SparseVec wedge_insert(const CochainComplex& cc, const SparseVec& z, int n, const SparseVec& f);
/// Action of an element of p on a cochain.
SparseVec act_on_cochain(const CochainComplex& cc, int n, const SparseVec& z, const SparseVec& f);

/// Predicted labels per level from the ranked Weyl coset representatives.
std::vector<std::vector<IrrepLabel>> kostant_oracle(const AlgebraPtr& g, const Weight& lambda);

/// delstar on Lambda^2 p_+ (x) g, the map whose kernel defines normal curvatures.
SparseMatrix curvature_codifferential(const AlgebraPtr& g);

}  // namespace bgg
