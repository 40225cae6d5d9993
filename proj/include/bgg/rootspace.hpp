#pragma once

#include "bgg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bgg {

/// Integer vector in fundamental-weight coordinates.
using Weight = std::vector<int>;
/// Integer vector of coefficients over the simple roots.
using RootCoeffs = std::vector<int>;

/// Cartan matrix with entries a[i][j] = alpha_j(h_i) = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
struct CartanMatrix {
  std::vector<std::vector<int>> a;
  std::string label;  // "A3", "B2", ... or empty for explicit input

  int rank() const { return static_cast<int>(a.size()); }
  int operator()(int i, int j) const { return a[i][j]; }
  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a == y.a; }

  /// Series label such as "A3", "A 3", "E8", "G2" (Bourbaki node order).
  static CartanMatrix from_label(const std::string& label);
  /// Explicit matrix; validated.
  static CartanMatrix from_entries(std::vector<std::vector<int>> entries);
};

/// Throws unless the matrix is a Cartan matrix of a simple Lie algebra.
void validate_cartan(const CartanMatrix& c);

/// Symmetrizing factors d_i = (alpha_i, alpha_i)/2 with short roots scaled to 1.
std::vector<Rational> symmetrizer(const CartanMatrix& c);

struct RootSystem {
  CartanMatrix cartan;
  std::vector<Rational> d;               // symmetrizer
  std::vector<RootCoeffs> positive;      // ordered by height, then lexicographically
  std::vector<int> height;

  int rank() const { return cartan.rank(); }
  int size() const { return static_cast<int>(positive.size()); }
  /// Index of a positive root, or -1.
  int index_of(const RootCoeffs& r) const;
  /// Index of the simple root alpha_i.
  int simple_index(int i) const;
  /// Fundamental-weight coordinates beta(h_i) of a root.
  Weight to_weight(const RootCoeffs& r) const;
  /// Highest root.
  const RootCoeffs& highest() const { return positive.back(); }
  /// Symmetric form (mu, beta) for mu in fundamental coordinates, beta in root coordinates.
  Rational pair(const Weight& mu, const RootCoeffs& beta) const;

  std::map<RootCoeffs, int> lookup;
};

RootSystem build_root_system(const CartanMatrix& c);

/// Crossed nodes, 1-based, sorted, nonempty.
struct ParabolicSpec {
  std::vector<int> sigma;

  bool crossed0(int i) const;  // 0-based query
  friend bool operator==(const ParabolicSpec& a, const ParabolicSpec& b) { return a.sigma == b.sigma; }
};

/// Validates sigma against the rank (1-based, nonempty, in range) and normalizes order.
ParabolicSpec make_parabolic(int rank, std::vector<int> sigma);

int sigma_height(const RootSystem& rs, const RootCoeffs& root, const ParabolicSpec& p);
int grading_depth(const CartanMatrix& c, const ParabolicSpec& p);

/// Weyl dimension of the irreducible module with highest weight lambda.
std::int64_t weyl_dimension(const CartanMatrix& c, const Weight& lambda);
bool is_dominant(const Weight& w);

/// Weyl group element as a reduced word of 0-based simple reflections,
/// word[0] applied last (w = s_{word[0]} ... s_{word[k-1]}).
struct WeylElement {
  std::vector<int> word;
  int length() const { return static_cast<int>(word.size()); }
  Weight apply(const CartanMatrix& c, Weight mu) const;
  std::string str() const;
};

/// Simple reflection on a weight in fundamental coordinates.
Weight reflect(const CartanMatrix& c, int i, Weight mu);

/// w(lambda + rho) - rho.
Weight affine_dot_action(const CartanMatrix& c, const WeylElement& w, const Weight& lambda);

/// Minimal-length coset representatives, grouped by length.
struct HasseDiagram {
  std::vector<std::vector<WeylElement>> by_length;
  int size() const;
};
HasseDiagram parabolic_hasse(const CartanMatrix& c, const ParabolicSpec& p);

/// -w0(lambda): highest weight of the dual module.
Weight dual_weight(const CartanMatrix& c, const Weight& lambda);

/// Order of the Weyl group of the sub-diagram on the given 0-based nodes (brute force orbit count).
std::int64_t weyl_group_order(const CartanMatrix& c, const std::vector<int>& nodes);

std::string weight_str(const Weight& w);

}  // namespace bgg
