#pragma once

#include "bgg/linalg.hpp"
#include "bgg/rootspace.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bgg {

/// One step of the root-vector recursion: x_beta = [x_{alpha_i}, x_{beta - alpha_i}] / divisor.
struct RootStep {
  int root = 0;     // positive root index of beta
  int simple = 0;   // i
  int rest = 0;     // positive root index of beta - alpha_i
  int divisor = 1;  // p + 1, p the length of the alpha_i-string below beta - alpha_i
};

/// Simple Lie algebra in a Chevalley basis together with the grading given by crossed nodes.
///
/// Basis order: negative roots (highest first), then the Cartan elements h_1..h_n,
/// then positive roots (by height, then lexicographic).
struct GradedLieAlgebra {
  RootSystem rs;
  ParabolicSpec p;
  int k = 0;    // depth of the grading
  int dim = 0;  // dim g

  std::vector<RootCoeffs> root;  // signed root of each basis element, zero for Cartan elements
  std::vector<int> grade;
  std::vector<int> cartan;       // Cartan index of a basis element or -1
  std::vector<RootStep> steps;   // recursion used to build root vectors in any module

  std::vector<std::vector<SparseVec>> table;  // table[a][b] = [x_a, x_b]
  Matrix killing;
  std::vector<Rational> e_coeffs;  // grading element as sum_j e_coeffs[j] h_j

  // p = g_0 + p_+; p_basis lists g-indices, g_0 first
  std::vector<int> p_basis;
  std::vector<int> p_index;  // g-index -> position in p_basis, or -1
  // Killing-dual bases: eta[a] in p_+, xi[a] in g_-, B(eta_a, xi_b) = delta
  std::vector<int> eta;        // g-indices
  std::vector<SparseVec> xi;   // over the g basis
  std::vector<int> eta_grade;
  std::vector<Rational> eta_norm;  // B(eta_a, x_{-beta}) for the matching negative root vector
  std::vector<int> eta_index;      // g-index -> position in eta, or -1

  int rank() const { return rs.rank(); }
  int pos_root_offset() const { return rs.size() + rank(); }
  int neg_index(int r) const { return rs.size() - 1 - r; }
  int pos_index(int r) const { return pos_root_offset() + r; }
  int cartan_index(int i) const { return rs.size() + i; }
  /// Basis element with the given signed root, or -1.
  int index_of_root(const RootCoeffs& r) const;
  int dim_grade(int j) const;
  int dim_p() const { return static_cast<int>(p_basis.size()); }
  int dim_pplus() const { return static_cast<int>(eta.size()); }
  /// g-indices of g_1 (generators of p_+) and of g_0.
  std::vector<int> grade_basis(int j) const;
  std::string basis_name(int a) const;

  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  SparseMatrix ad(const SparseVec& x) const;
  Rational killing_of(const SparseVec& x, const SparseVec& y) const;
  SparseVec grading_element() const;
  /// Value of a weight (fundamental coordinates) on the grading element.
  Rational e_value(const Weight& mu) const;
  /// Weight of basis element a in fundamental coordinates.
  Weight weight_of(int a) const;
};

std::shared_ptr<const GradedLieAlgebra> build_graded_algebra(const CartanMatrix& c, const ParabolicSpec& p);

}  // namespace bgg
