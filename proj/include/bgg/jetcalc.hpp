#pragma once

#include "bgg/repmod.hpp"

#include <map>
#include <vector>

namespace bgg {

inline constexpr int kDefaultJetBudget = 20000;

/// First jet module of a p-module W: W + p_+ (x) W. Basis index t * dim W + w,
/// t = 0 for the footpoint and t = 1 + a for eta_a (x) w.
struct JetModule {
  PModule base;
  PModule module;
  int m = 0;  // dim p_+

  int foot(int w) const { return w; }
  int slot(int a, int w) const { return (1 + a) * base.dim + w; }
  /// Projection to the footpoint, a p-homomorphism.
  SparseMatrix projection() const;
};

JetModule jet1(const PModule& W, int max_dim = kDefaultJetBudget);

/// True iff f : src -> dst commutes with g_0 and g_1 (which generate p). Throws ShapeMismatch
/// when the matrix has the wrong size.
bool is_equivariant(const PModule& src, const PModule& dst, const SparseMatrix& f);

/// J^1 of a p-homomorphism; throws UncertifiedInput unless f is equivariant.
SparseMatrix jet1_of_map(const PModule& src, const PModule& dst, const SparseMatrix& f);
/// The same block formula without the check, for maps that are only equivariant on a submodule.
SparseMatrix jet1_prolong(int m, const SparseMatrix& f);

/// Semi-holonomic jets of order k. Basis (s, w) with s a word in {0..m-1} of
/// length at most k, ordered by length then lexicographically; index
/// word_index(s) * dim W + w. (s, w) sits in J^1 of the order k-1 jets as
/// [|s| < k] (s, w) at the footpoint plus (s[1:], w) in slot s[0].
struct SemiHolonomicJets {
  PModule base;
  int order = 0;
  int m = 0;
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> word_index;
  PModule module;

  int index(const std::vector<int>& s, int w) const { return word_index.at(s) * base.dim + w; }
  int dim() const { return module.dim; }
  /// Truncation to order k2 <= order, a p-homomorphism.
  SparseMatrix truncation(int k2) const;
};

SemiHolonomicJets semiholonomic(const PModule& W, int k, int max_dim = kDefaultJetBudget);

/// Inclusion of order-k jets into J^1 of order k-1 jets (both given), in the basis of `outer.module`.
SparseMatrix semiholonomic_embedding(const SemiHolonomicJets& jk, const SemiHolonomicJets& jk1, const JetModule& outer);

/// Order-k semi-holonomic jets computed directly as the subspace of J^1(order k-1) where
/// J^1 of the truncation agrees with the footpoint re-embedded; basis vectors in J^1(order k-1).
std::vector<SparseVec> semiholonomic_equalizer(const PModule& W, int k, int max_dim = kDefaultJetBudget);

}  // namespace bgg
