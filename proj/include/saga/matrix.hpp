#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "saga/errors.hpp"
#include "saga/field.hpp"

namespace saga {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t size) {
    Matrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Element> column(std::size_t c) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, std::span<const Element> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  Matrix transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    }
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Result of Gauss-Jordan elimination: the reduced row echelon form (nonzero
/// rows only) and the pivot column of each row.
template <ExactField F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <ExactField F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  const F& K = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && K.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    auto inv = K.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = K.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || K.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!K.is_zero(m(r, j))) m(i, j) = K.sub(m(i, j), K.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<F> reduced(K, pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

namespace detail {

/// Rank by forward elimination only.
template <ExactField F>
std::size_t elimination_rank(Matrix<F> m) {
  const F& K = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && K.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    auto inv = K.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (K.is_zero(m(i, c))) continue;
      auto factor = K.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = K.sub(m(i, j), K.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

/// Prime used for the modular pre-pass of rational rank computations.
inline constexpr std::uint64_t kShadowPrime = 4294967291ULL;

/// Reduction of a rational matrix modulo kShadowPrime, or nullopt when some
/// denominator vanishes there.
std::optional<Matrix<PrimeField>> reduce_modulo_shadow_prime(const Matrix<Rationals>& m);

}  // namespace detail

/// Exact rank.  Over Q a modular pre-pass runs first: the rank modulo a prime
/// never exceeds the rational rank, so a full-rank shadow settles the answer
/// without rational elimination.
template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, Rationals>) {
    const std::size_t full = std::min(m.rows(), m.cols());
    if (auto shadow = detail::reduce_modulo_shadow_prime(m)) {
      if (detail::elimination_rank(std::move(*shadow)) == full) return full;
    }
  }
  return detail::elimination_rank(m);
}

/// Basis of the right nullspace {v : m v = 0}, one vector per free column,
/// normalized to 1 at its free column (echelonized basis).
template <ExactField F>
std::vector<std::vector<typename F::Element>> nullspace(const Matrix<F>& m) {
  const F& K = m.field();
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), K.zero());
    v[free] = K.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = K.neg(ech.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose rows are the given vectors (all of length `cols`).
template <ExactField F>
Matrix<F> rows_matrix(const F& field, std::span<const std::vector<typename F::Element>> vectors,
                      std::size_t cols) {
  Matrix<F> m(field, vectors.size(), cols);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != cols) fail(ErrorKind::InvalidArgument, "vector length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = vectors[i][j];
  }
  return m;
}

template <ExactField F>
std::size_t span_dimension(const F& field, std::span<const std::vector<typename F::Element>> vectors,
                           std::size_t length) {
  if (vectors.empty()) return 0;
  return rank(rows_matrix(field, vectors, length));
}

template <ExactField F>
bool same_span(const F& field, std::span<const std::vector<typename F::Element>> a,
               std::span<const std::vector<typename F::Element>> b, std::size_t length) {
  std::size_t da = span_dimension(field, a, length);
  if (da != span_dimension(field, b, length)) return false;
  std::vector<std::vector<typename F::Element>> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return span_dimension<F>(field, both, length) == da;
}

/// Row echelon basis grown one vector at a time.  Rows stay sorted by pivot
/// column; each new vector is reduced against them before insertion.
template <ExactField F>
class IncrementalEchelon {
 public:
  using Element = typename F::Element;

  IncrementalEchelon(F field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  /// Returns true when the vector enlarged the span.
  bool add(std::vector<Element> v) {
    const F& K = field_;
    if (full()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = pivots_[i];
      if (K.is_zero(v[c])) continue;
      auto factor = v[c];
      const auto& row = rows_[i];
      for (std::size_t j = c; j < cols_; ++j) {
        if (!K.is_zero(row[j])) v[j] = K.sub(v[j], K.mul(factor, row[j]));
      }
    }
    std::size_t lead = 0;
    while (lead < cols_ && K.is_zero(v[lead])) ++lead;
    if (lead == cols_) return false;
    auto inv = K.inv(v[lead]);
    for (std::size_t j = lead; j < cols_; ++j) v[j] = K.mul(v[j], inv);
    // keep rows ordered by pivot; earlier rows may need reducing by the new one
    // only for full reduction, which finish() performs
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

  /// Back-substitutes so that every pivot column is a unit column.
  void finish() {
    const F& K = field_;
    for (std::size_t i = rows_.size(); i-- > 0;) {
      const auto c = pivots_[i];
      for (std::size_t k = 0; k < i; ++k) {
        if (K.is_zero(rows_[k][c])) continue;
        auto factor = rows_[k][c];
        for (std::size_t j = c; j < cols_; ++j) {
          if (!K.is_zero(rows_[i][j])) rows_[k][j] = K.sub(rows_[k][j], K.mul(factor, rows_[i][j]));
        }
      }
    }
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<Element>>& rows() const { return rows_; }

 private:
  F field_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Element>> rows_;
};

}  // namespace saga
