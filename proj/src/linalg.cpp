#include "bgg/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bgg {

// ---- SparseVec ----

SparseVec SparseVec::unit(int i, Rational v) {
  SparseVec r;
  if (!v.is_zero()) r.e_.emplace_back(i, std::move(v));
  return r;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec r;
  r.e_.reserve(entries.size());
  for (auto& [i, v] : entries) {
    if (!r.e_.empty() && r.e_.back().first == i) {
      r.e_.back().second += v;
      if (r.e_.back().second.is_zero()) r.e_.pop_back();
    } else if (!v.is_zero()) {
      r.e_.emplace_back(i, std::move(v));
    }
  }
  return r;
}

SparseVec SparseVec::from_dense(const std::vector<Rational>& d) {
  SparseVec r;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (!d[i].is_zero()) r.e_.emplace_back(i, d[i]);
  return r;
}

Rational SparseVec::get(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return Rational();
}

std::vector<Rational> SparseVec::to_dense(int n) const {
  std::vector<Rational> d(n);
  for (const auto& [i, v] : e_) d.at(i) = v;
  return d;
}

void SparseVec::axpy(const Rational& c, const SparseVec& x) {
  if (c.is_zero() || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto a = e_.begin(), ae = e_.end();
  auto b = x.e_.begin(), be = x.e_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == ae || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational v = std::move(a->second);
      v.add_product(c, b->second);
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const Rational& c) {
  if (c.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& [i, v] : e_) v *= c;
}

SparseVec SparseVec::scaled(const Rational& c) const {
  SparseVec r(*this);
  r.scale(c);
  return r;
}

SparseVec SparseVec::remapped(const std::vector<int>& map) const {
  std::vector<Entry> out;
  out.reserve(e_.size());
  for (const auto& [i, v] : e_) {
    int j = map.at(i);
    if (j >= 0) out.emplace_back(j, v);
  }
  return from_entries(std::move(out));
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec r(a);
  r.axpy(1, b);
  return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec r(a);
  r.axpy(-1, b);
  return r;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational s;
  auto x = a.entries().begin(), xe = a.entries().end();
  auto y = b.entries().begin(), ye = b.entries().end();
  while (x != xe && y != ye) {
    if (x->first < y->first)
      ++x;
    else if (y->first < x->first)
      ++y;
    else {
      s.add_product(x->second, y->second);
      ++x;
      ++y;
    }
  }
  return s;
}

void VecBuilder::add(const SparseVec& x, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [i, v] : x.entries()) buf_.emplace_back(i, c.is_one() ? v : c * v);
}

SparseVec VecBuilder::finish() {
  SparseVec r = SparseVec::from_entries(std::move(buf_));
  buf_.clear();
  return r;
}

// ---- SparseMatrix ----

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.col_[i] = SparseVec::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (int j = 0; j < d.cols(); ++j) m.col_[j] = d.column(j);
  return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, std::vector<SparseVec> cols) {
  SparseMatrix m(rows, static_cast<int>(cols.size()));
  m.col_ = std::move(cols);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.nnz();
  return n;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  if (x.nnz() == 1) {
    const auto& [j, v] = x.entries().front();
    return col_.at(j).scaled(v);
  }
  VecBuilder b;
  for (const auto& [j, v] : x.entries()) b.add(col_.at(j), v);
  return b.finish();
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : col_)
    if (!c.is_zero()) return false;
  return true;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(rows_, cols_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : col_[j].entries()) d(i, j) = v;
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> rows(rows_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : col_[j].entries()) rows[i].emplace_back(j, v);
  SparseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) t.col_[i] = SparseVec::from_entries(std::move(rows[i]));
  return t;
}

SparseMatrix SparseMatrix::block(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<int> map(rows_, -1);
  for (int k = 0; k < static_cast<int>(rows.size()); ++k) map[rows[k]] = k;
  SparseMatrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int k = 0; k < static_cast<int>(cols.size()); ++k) b.col_[k] = col_.at(cols[k]).remapped(map);
  return b;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  SparseMatrix r(a.rows_, b.cols_);
  for (int j = 0; j < b.cols_; ++j) r.col_[j] = a.apply(b.col_[j]);
  return r;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("SparseMatrix sum: shape mismatch");
  SparseMatrix r(a);
  for (int j = 0; j < a.cols_; ++j) r.col_[j].axpy(1, b.col_[j]);
  return r;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("SparseMatrix difference: shape mismatch");
  SparseMatrix r(a);
  for (int j = 0; j < a.cols_; ++j) r.col_[j].axpy(-1, b.col_[j]);
  return r;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix r(*this);
  for (auto& v : r.col_) v.scale(c);
  return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

// ---- Matrix ----

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<SparseVec>& cols) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j)
    for (const auto& [i, v] : cols[j].entries()) m(i, j) = v;
  return m;
}

SparseVec Matrix::column(int j) const {
  SparseVec r;
  std::vector<SparseVec::Entry> e;
  for (int i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) e.emplace_back(i, (*this)(i, j));
  return SparseVec::from_entries(std::move(e));
}

std::vector<SparseVec> Matrix::columns() const {
  std::vector<SparseVec> c(cols_);
  for (int j = 0; j < cols_; ++j) c[j] = column(j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : d_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j).add_product(x, b(k, j));
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix r(a);
  for (std::size_t k = 0; k < r.d_.size(); ++k) r.d_[k] += b.d_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix r(a);
  for (std::size_t k = 0; k < r.d_.size(); ++k) r.d_[k] -= b.d_[k];
  return r;
}

SparseVec Matrix::apply(const SparseVec& x) const {
  std::vector<Rational> out(rows_);
  for (const auto& [j, v] : x.entries())
    for (int i = 0; i < rows_; ++i) out[i].add_product((*this)(i, j), v);
  return SparseVec::from_dense(out);
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("Matrix::hcat: row mismatch");
  Matrix r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
  }
  return r;
}

std::vector<int> Matrix::rref_inplace() {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (!(*this)(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    Rational inv = Rational(1) / (*this)(r, c);
    for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rational f = (*this)(i, c);
      if (f.is_zero()) continue;
      Rational nf = -f;
      for (int j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(i, j).add_product(nf, (*this)(r, j));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int Matrix::rank() const {
  Matrix t(*this);
  return static_cast<int>(t.rref_inplace().size());
}

Matrix Matrix::kernel() const {
  Matrix t(*this);
  auto piv = t.rref_inplace();
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  int nfree = cols_ - static_cast<int>(piv.size());
  Matrix k(cols_, nfree);
  int f = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_piv[c]) continue;
    k(c, f) = 1;
    for (int r = 0; r < static_cast<int>(piv.size()); ++r) k(piv[r], f) = -t(r, c);
    ++f;
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("Matrix::solve: row mismatch");
  Matrix aug = hcat(*this, b);
  auto piv = aug.rref_inplace();
  for (int c : piv)
    if (c >= cols_) return std::nullopt;
  Matrix x(cols_, b.cols_);
  for (int r = 0; r < static_cast<int>(piv.size()); ++r)
    for (int j = 0; j < b.cols_; ++j) x(piv[r], j) = aug(r, cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(identity(rows_));
  if (!x) return std::nullopt;
  if (rank() != rows_) return std::nullopt;
  return x;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
  Matrix t(*this);
  Rational det = 1;
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (!t(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational();
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(t(p, j), t(c, j));
      det = -det;
    }
    det *= t(c, c);
    Rational inv = Rational(1) / t(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      Rational f = t(i, c) * inv;
      if (f.is_zero()) continue;
      Rational nf = -f;
      for (int j = c; j < cols_; ++j) t(i, j).add_product(nf, t(c, j));
    }
  }
  return det;
}

std::vector<int> independent_columns(const Matrix& m) {
  Matrix t(m);
  return t.rref_inplace();
}

// ---- helpers over sparse families ----

namespace {

/// Compresses the rows touched by `vecs` into a dense matrix; `rows` receives the original indices.
Matrix compress(const std::vector<SparseVec>& vecs, std::vector<int>& rows) {
  std::vector<int> idx;
  for (const auto& v : vecs)
    for (const auto& e : v.entries()) idx.push_back(e.first);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  rows = idx;
  std::map<int, int> pos;
  for (int k = 0; k < static_cast<int>(idx.size()); ++k) pos[idx[k]] = k;
  Matrix m(static_cast<int>(idx.size()), static_cast<int>(vecs.size()));
  for (int j = 0; j < static_cast<int>(vecs.size()); ++j)
    for (const auto& [i, v] : vecs[j].entries()) m(pos[i], j) = v;
  return m;
}

}  // namespace

CoordinateChart::CoordinateChart(int ambient, std::vector<SparseVec> basis) : ambient_(ambient), basis_(std::move(basis)) {
  if (basis_.empty()) return;
  std::vector<int> rows;
  Matrix m = compress(basis_, rows);
  Matrix t = m.transpose();
  auto piv = t.rref_inplace();
  if (static_cast<int>(piv.size()) != static_cast<int>(basis_.size()))
    throw std::invalid_argument("CoordinateChart: basis vectors are dependent");
  pivots_.reserve(piv.size());
  Matrix sub(static_cast<int>(piv.size()), static_cast<int>(basis_.size()));
  for (int k = 0; k < static_cast<int>(piv.size()); ++k) {
    pivots_.push_back(rows[piv[k]]);
    for (int j = 0; j < static_cast<int>(basis_.size()); ++j) sub(k, j) = m(piv[k], j);
  }
  auto inv = sub.inverse();
  if (!inv) throw std::logic_error("CoordinateChart: pivot block singular");
  pivot_inverse_ = *inv;
}

std::optional<std::vector<Rational>> CoordinateChart::coords(const SparseVec& x) const {
  int n = size();
  std::vector<Rational> c(n);
  if (n == 0) {
    if (x.is_zero()) return c;
    return std::nullopt;
  }
  std::vector<Rational> xp(n);
  for (int k = 0; k < n; ++k) xp[k] = x.get(pivots_[k]);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) c[i].add_product(pivot_inverse_(i, k), xp[k]);
  VecBuilder b;
  for (int i = 0; i < n; ++i) b.add(basis_[i], c[i]);
  SparseVec rec = b.finish();
  if (!(rec == x)) return std::nullopt;
  return c;
}

std::vector<SparseVec> span_basis(int ambient, const std::vector<SparseVec>& vecs) {
  (void)ambient;
  // Sparse echelon reduction keyed by leading index.
  std::map<int, SparseVec> pivots;
  for (const auto& v0 : vecs) {
    SparseVec v = v0;
    while (!v.is_zero()) {
      int lead = v.entries().front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rational inv = Rational(1) / v.entries().front().second;
        v.scale(inv);
        pivots.emplace(lead, std::move(v));
        break;
      }
      v.axpy(-v.entries().front().second, it->second);
    }
  }
  std::vector<SparseVec> out;
  out.reserve(pivots.size());
  for (auto& [k, v] : pivots) out.push_back(std::move(v));
  return out;
}

int span_rank(int ambient, const std::vector<SparseVec>& vecs) { return static_cast<int>(span_basis(ambient, vecs).size()); }

std::vector<SparseVec> intersect_spans(int ambient, const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<SparseVec> all(a);
  for (const auto& v : b) all.push_back(v.scaled(-1));
  std::vector<int> rows;
  Matrix m = compress(all, rows);
  Matrix k = m.kernel();
  std::vector<SparseVec> out;
  for (int j = 0; j < k.cols(); ++j) {
    VecBuilder vb;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) vb.add(a[i], k(i, j));
    out.push_back(vb.finish());
  }
  return span_basis(ambient, out);
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& images) {
  std::vector<int> rows;
  Matrix m = compress(images, rows);
  if (m.rows() == 0) {
    std::vector<SparseVec> all;
    for (int j = 0; j < static_cast<int>(images.size()); ++j) all.push_back(SparseVec::unit(j));
    return all;
  }
  return m.kernel().columns();
}

}  // namespace bgg
