#pragma once

#include "bgg/hodge.hpp"
#include "bgg/jetcalc.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bgg {

/// Span of weight vectors, with coordinates computed one weight space at a time.
class WeightedSpan {
public:
  WeightedSpan() = default;
  /// `weights[i]` is the weight of ambient basis vector i; every basis vector must be a weight vector.
  WeightedSpan(const std::vector<Weight>& weights, std::vector<SparseVec> basis);

  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  /// Coordinates over basis(), or nullopt when x is outside the span.
  std::optional<SparseVec> coords(const SparseVec& x) const;
  bool contains(const SparseVec& x) const { return coords(x).has_value(); }

private:
  std::vector<Weight> weights_;
  std::vector<SparseVec> basis_;
  std::map<Weight, std::pair<std::vector<int>, CoordinateChart>> charts_;
};

/// Kernel of a weight-preserving linear map, computed per weight space of the domain.
std::vector<SparseVec> weighted_kernel(const std::vector<Weight>& domain_weights, const std::vector<SparseVec>& images);

struct Budgets {
  int module_dim = kDefaultModuleBudget;
  int cochain_dim = kDefaultCochainBudget;
  int jet_dim = kDefaultJetBudget;
  friend bool operator==(const Budgets&, const Budgets&) = default;
};

/// Everything that depends only on (g, p, V): the cochain complex, Hodge data and cohomology per level.
struct BGGContext {
  AlgebraPtr g;
  Weight lambda;
  PModule V;
  CochainComplex cc;
  std::vector<HodgeLevel> hodge;
  std::vector<Cohomology> coh;
  std::vector<SparseMatrix> box;
  Budgets budgets;

  int levels() const { return static_cast<int>(coh.size()); }
  const CohomologyComponent& component(int level, int idx) const { return coh[level].components[idx]; }
};

using ContextPtr = std::shared_ptr<const BGGContext>;

ContextPtr make_context(const AlgebraPtr& g, const Weight& lambda, const Budgets& budgets = {});

/// The p-submodule E of C^n generated by one cohomology component, with its
/// filtration by eigenvalues of the grading element. Basis vectors are sorted by
/// slice; slice 0 is the harmonic component itself.
struct GeneratedSubmodule {
  ContextPtr ctx;
  int level = 0;
  int comp = 0;
  Rational i0;
  int r = 0;
  std::vector<SparseVec> basis;  // in C^n
  std::vector<int> slice;        // slice of each basis vector
  std::vector<int> prefix;       // prefix[i] = dim E/E^i, i = 0..r+1
  PModule module;                // E
  std::vector<PModule> quotient; // quotient[i] = E/E^i
  WeightedSpan span;             // coordinates of C^n vectors over basis
  SparseMatrix box;              // Laplacian in basis coordinates, one block per slice
  SparseMatrix box_inv;          // its inverse on slices >= 1, zero on slice 0

  int dim() const { return module.dim; }
  int quotient_dim(int i) const { return prefix[i]; }
  /// pi^j_i : E/E^j -> E/E^i
  SparseMatrix projection(int j, int i) const;
  /// j_i : E/E^i -> E/E^{i+1}, the inclusion of slices (not a p-map)
  SparseMatrix inclusion(int i) const;
  /// Coordinates of a vector of C^n lying in E; throws CertificationFailure otherwise.
  SparseVec coords(const SparseVec& x) const;
  SparseVec to_cochain(const SparseVec& c) const;
};

GeneratedSubmodule generate_submodule(const ContextPtr& ctx, int level, int comp);

/// L_i : J^1(E/E^i) -> E/E^{i+1} for 1 <= i <= r.
SparseMatrix build_Li(const GeneratedSubmodule& gs, int i);

struct SplitterChain {
  std::vector<SparseMatrix> L;                 // L[i], i = 1..r; L[0] is the zero map from J^1(0)
  std::vector<JetModule> jets;                 // jets[i] = J^1(E/E^i), i = 0..r+1
  std::vector<std::vector<SparseVec>> tilde;   // basis of the distinguished submodule of jets[i], i = 1..r+1
  bool has_composite = false;
  SemiHolonomicJets source;                    // order-r jets of E/E^1 (when has_composite)
  SparseMatrix composite;                      // L : source -> E, basis coordinates
};

/// Distinguished submodule of J^1(E/E^{i+1}) cut out by L_1..L_i; i = 0 gives everything.
std::vector<SparseVec> tilde_jet_submodule(const GeneratedSubmodule& gs, const SplitterChain& chain, int i);

/// Builds L_1..L_r, the distinguished submodules and (within the jet budget) the composite L.
SplitterChain compose_splitter(const GeneratedSubmodule& gs);

/// Independent evaluation of L on one semi-holonomic basis vector, as a cochain in C^n,
/// by recursion on the word; memoized.
class FastSplitter {
public:
  explicit FastSplitter(const GeneratedSubmodule& gs) : gs_(&gs) {}
  SparseVec value(const std::vector<int>& word, int w);
  /// d_V of J^1(L) on the order r+1 basis vector (word, w), a cochain in C^{n+1}.
  SparseVec twisted(const std::vector<int>& word, int w);

private:
  const GeneratedSubmodule* gs_;
  std::map<std::pair<std::vector<int>, int>, SparseVec> memo_;
};

/// d_V on jets: J^1(C^n) -> C^{n+1}, (f0, Z (x) f1) -> del f0 + (n+1) Z ^ f1.
SparseMatrix twisted_d_hom(const CochainComplex& cc, int n);

struct BGGArrow {
  int from_level = 0, from_idx = 0, to_level = 0, to_idx = 0;
  int order = 0;
  std::vector<std::pair<std::vector<int>, int>> inputs;  // (word, w) sources of weight = target highest weight
  SparseVec block;                                       // coefficient on the target highest weight vector per input
  bool certified = false;                                // full D^V checked as a p-homomorphism
};

/// E-eigenvalue difference; throws NonAdjacentLevels unless the target sits one level higher.
int operator_order(const BGGContext& ctx, int from_level, int from_idx, int to_level, int to_idx);

/// Arrows from one component into the next level, detected on the highest weight space of each target.
std::vector<BGGArrow> bgg_operator(const GeneratedSubmodule& gs);

/// Full D^V : order r+1 jets of E/E^1 -> H^{n+1} in harmonic coordinates; nullopt over the jet budget.
struct FullOperator {
  SemiHolonomicJets source;
  SparseMatrix matrix;
  bool lands_in_kernel = true;  // del* of d_V J^1(L) vanishes
};
std::optional<FullOperator> full_bgg_operator(const GeneratedSubmodule& gs);

struct BGGDiagram {
  ContextPtr ctx;
  std::vector<BGGArrow> arrows;
  std::vector<std::string> notes;  // components whose arrows could only be partly certified
};

BGGDiagram build_bgg_diagram(const AlgebraPtr& g, const Weight& lambda, const Budgets& budgets = {}, bool certify = true);

/// Seeded random selection of basis elements instead of exhaustive loops.
struct Sampling {
  unsigned seed = 1;
  int count = 100;
};

/// Identities of the complex itself: nilpotency, adjointness, Hodge dimensions, the wedge
/// formula for the codifferential, the defect of del, agreement with the Weyl group prediction.
std::map<std::string, bool> verify_complex(const BGGContext& ctx, std::optional<Sampling> sample = std::nullopt);

/// Named identity checks for one component, for the verification battery.
std::map<std::string, bool> verify_component(const GeneratedSubmodule& gs, const SplitterChain& chain);

}  // namespace bgg
