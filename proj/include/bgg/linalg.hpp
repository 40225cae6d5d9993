#pragma once

#include "bgg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bgg {

/// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
public:
  using Entry = std::pair<int, Rational>;

  SparseVec() = default;
  static SparseVec unit(int i, Rational v = 1);
  /// Builds from unsorted entries with possible repeats.
  static SparseVec from_entries(std::vector<Entry> entries);
  static SparseVec from_dense(const std::vector<Rational>& d);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  bool is_zero() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  Rational get(int i) const;
  std::vector<Rational> to_dense(int n) const;

  /// this += c * x
  void axpy(const Rational& c, const SparseVec& x);
  void scale(const Rational& c);
  SparseVec scaled(const Rational& c) const;
  /// Keeps only entries whose index passes the predicate.
  template <class Pred>
  SparseVec filtered(Pred p) const {
    SparseVec r;
    for (const auto& [i, v] : e_)
      if (p(i)) r.e_.emplace_back(i, v);
    return r;
  }
  /// Re-indexes entries through `map` (map[i] < 0 drops the entry).
  SparseVec remapped(const std::vector<int>& map) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);

private:
  std::vector<Entry> e_;
};

Rational dot(const SparseVec& a, const SparseVec& b);

/// Collects scattered contributions, then produces a canonical SparseVec.
class VecBuilder {
public:
  void add(int i, const Rational& v) {
    if (!v.is_zero()) buf_.emplace_back(i, v);
  }
  void add(const SparseVec& x, const Rational& c = 1);
  SparseVec finish();
  bool empty() const { return buf_.empty(); }

private:
  std::vector<SparseVec::Entry> buf_;
};

class Matrix;

/// Column-major sparse matrix; column j is the image of basis vector j.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}
  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix from_columns(int rows, std::vector<SparseVec> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& col(int j) const { return col_[j]; }
  SparseVec& col(int j) { return col_[j]; }
  void set_col(int j, SparseVec v) { col_[j] = std::move(v); }
  Rational get(int i, int j) const { return col_[j].get(i); }
  std::size_t nnz() const;

  SparseVec apply(const SparseVec& x) const;
  bool is_zero() const;
  Matrix to_dense() const;
  SparseMatrix transpose() const;
  /// Submatrix on the given row/column index lists.
  SparseMatrix block(const std::vector<int>& rows, const std::vector<int>& cols) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix scaled(const Rational& c) const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> col_;
};

/// [A, B] = AB - BA
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Dense row-major rational matrix, used for small blocks.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);
  /// Columns given as sparse vectors of length `rows`.
  static Matrix from_columns(int rows, const std::vector<SparseVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

  SparseVec column(int j) const;
  std::vector<SparseVec> columns() const;
  Matrix transpose() const;
  bool is_zero() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  SparseVec apply(const SparseVec& x) const;
  /// Horizontal concatenation.
  static Matrix hcat(const Matrix& a, const Matrix& b);

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref_inplace();
  int rank() const;
  /// Basis of the null space, one column per vector.
  Matrix kernel() const;
  /// Solves this * X = B; nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;
  /// Inverse of a square nonsingular matrix; nullopt otherwise.
  std::optional<Matrix> inverse() const;
  Rational determinant() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> d_;
};

/// Subset of column indices forming a basis of the column span, chosen greedily left to right.
std::vector<int> independent_columns(const Matrix& m);

/// Coordinates of vectors relative to a fixed independent family.
///
/// The family is stored together with a set of pivot rows on which it is
/// invertible, so coordinates are read off with one small product.
class CoordinateChart {
public:
  CoordinateChart() = default;
  /// `basis` must be linearly independent vectors in an ambient space of dimension `ambient`.
  CoordinateChart(int ambient, std::vector<SparseVec> basis);

  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  /// Coordinates c with basis * c == x; nullopt when x is outside the span.
  std::optional<std::vector<Rational>> coords(const SparseVec& x) const;
  bool contains(const SparseVec& x) const { return coords(x).has_value(); }

private:
  int ambient_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<int> pivots_;
  Matrix pivot_inverse_;
};

/// Row-reduced basis of the span of `vecs` (drops dependent vectors).
std::vector<SparseVec> span_basis(int ambient, const std::vector<SparseVec>& vecs);
/// Basis of the intersection of two spans.
std::vector<SparseVec> intersect_spans(int ambient, const std::vector<SparseVec>& a, const std::vector<SparseVec>& b);
/// Dimension of span.
int span_rank(int ambient, const std::vector<SparseVec>& vecs);
/// Kernel of the map sending domain basis vector j to images[j]; vectors over the domain.
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& images);

}  // namespace bgg
