#pragma once

#include "bgg/gradedla.hpp"
#include "bgg/linalg.hpp"
#include "bgg/rootspace.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bgg {

inline constexpr int kDefaultModuleBudget = 500;

/// Irreducible module described only through the simple generators.
struct HighestWeightData {
  Weight highest;
  std::vector<Weight> weights;
  std::vector<SparseMatrix> e, f;  // one per simple root
  SparseMatrix gram;               // contravariant form, block diagonal by weight
};

/// Highest-weight construction: each new weight space is cut out of the span of
/// f_i applied to the previous level, modulo the radical of the contravariant form.
HighestWeightData build_highest_weight(const CartanMatrix& c, const Weight& lambda, int max_dim = kDefaultModuleBudget);

/// Recursion for root vectors; valid in every module.
std::vector<RootStep> root_steps(const RootSystem& rs);
/// Matrices of every basis element of g (g-basis order) from the simple generators.
std::vector<SparseMatrix> chevalley_actions(const RootSystem& rs, const std::vector<RootStep>& steps,
                                            const std::vector<SparseMatrix>& e, const std::vector<SparseMatrix>& f);

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

struct GModule {
  AlgebraPtr g;
  Weight highest;
  int dim = 0;
  std::vector<Weight> weights;
  std::vector<SparseMatrix> act;  // one per g basis element
  SparseMatrix gram;
};

GModule build_irrep(const AlgebraPtr& g, const Weight& lambda, int max_dim = kDefaultModuleBudget);
const SparseMatrix& contravariant_form(const GModule& m);

/// Module over p. Actions of g_- are present only when the module came from a g-module.
struct PModule {
  AlgebraPtr g;
  int dim = 0;
  std::vector<Weight> weights;  // weight of each basis vector (fundamental coordinates)
  std::vector<Rational> eig;    // eigenvalue of the grading element
  std::vector<SparseMatrix> act;
  bool full_g = false;
  SparseMatrix form;  // contravariant form when known (modules restricted from g), else empty

  const SparseMatrix& action(int a) const;
  bool has_action(int a) const;
  /// Action of an arbitrary element of p (or g when full_g).
  SparseMatrix action_of(const SparseVec& x) const;
  SparseVec apply(int a, const SparseVec& v) const { return action(a).apply(v); }
  /// Distinct eigenvalues of the grading element, increasing.
  std::vector<Rational> eigenvalues() const;
};

PModule restrict_to_parabolic(const GModule& m);
PModule trivial_module(const AlgebraPtr& g);
/// p_+ with the adjoint action of p, basis eta.
PModule pplus_module(const AlgebraPtr& g);
PModule exterior_power(const PModule& m, int n);
/// Basis of the tensor product: index i1 * dim2 + i2.
PModule tensor(const PModule& a, const PModule& b);
PModule dual_module(const PModule& m);
/// Module structure on an invariant subspace spanned by `basis` (checked).
PModule sub_module(const PModule& m, const std::vector<SparseVec>& basis);

/// Strictly increasing k-subsets of {0..m-1} in lexicographic order.
class WedgeBasis {
public:
  WedgeBasis() = default;
  WedgeBasis(int m, int k);
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& set(int i) const { return sets_[i]; }
  /// Index of a sorted subset, or -1.
  int index(const std::vector<int>& s) const;

private:
  std::vector<std::vector<int>> sets_;
  std::map<std::vector<int>, int> lookup_;
};

/// Sorts `s` in place and returns the permutation sign, or 0 on a repeated entry.
int sort_with_sign(std::vector<int>& s);

/// Label of an irreducible g_0-module: highest weight of the dual module, so
/// crossed coordinates may be negative.
struct IrrepLabel {
  Weight coords;
  Rational e_eigenvalue;
  std::string str() const;
  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
    return a.coords == b.coords && a.e_eigenvalue == b.e_eigenvalue;
  }
  friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
    if (a.e_eigenvalue != b.e_eigenvalue) return a.e_eigenvalue < b.e_eigenvalue;
    return a.coords < b.coords;
  }
};

/// Label of the irreducible g_0-module with highest weight mu.
IrrepLabel label_from_highest(const GradedLieAlgebra& g, const Weight& mu);
/// Dimension of the irreducible g_0-module with highest weight mu.
std::int64_t levi_dimension(const GradedLieAlgebra& g, const Weight& mu);

struct IrrepComponent {
  IrrepLabel label;
  Weight highest;                 // weight of the highest-weight vector
  std::vector<SparseVec> basis;   // embedding, vectors over the decomposed module
};

/// Decomposition of a module on which p_+ acts by zero; one entry per copy.
std::vector<IrrepComponent> decompose_completely_reducible(const PModule& m);
/// (label, multiplicity) pairs in component order.
std::vector<std::pair<IrrepLabel, int>> multiplicities(const std::vector<IrrepComponent>& comps);

}  // namespace bgg
