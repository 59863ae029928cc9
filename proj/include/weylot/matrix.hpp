#pragma once

// Small dense exact linear algebra: rational Gaussian elimination, integer kernels,
// and integer matrices for lattice automorphisms.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "weylot/rational.hpp"

namespace weylot {

/// Row-major dense matrix over Q. Rows are RationalVectors so that geometric code can
/// pass point lists straight in.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows, RationalVector(cols)), cols_(cols) {}
  explicit RationalMatrix(std::vector<RationalVector> rows)
      : rows_(std::move(rows)), cols_(rows_.empty() ? 0 : rows_.front().size()) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const RationalVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<RationalVector>& row_vectors() const { return rows_; }

  RationalVector column(std::size_t j) const {
    RationalVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
    return t;
  }

  RationalVector operator*(const RationalVector& x) const {
    RationalVector y(rows());
    for (std::size_t i = 0; i < rows(); ++i) y[i] = bracket(rows_[i], x);
    return y;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<RationalVector> rows_;
  std::size_t cols_ = 0;
};

namespace detail {

/// In-place reduced row echelon form with pivots searched in the first `cols` columns;
/// returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RationalVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    a[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  return detail::rref(rows, rows.front().size()).size();
}

inline std::size_t rank(const RationalMatrix& m) { return rank(m.row_vectors()); }

/// Affine dimension of a point set (−1 for the empty set).
inline int affine_dimension(const std::vector<RationalVector>& pts) {
  if (pts.empty()) return -1;
  std::vector<RationalVector> d;
  d.reserve(pts.size());
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(pts[i] - pts[0]);
  return static_cast<int>(rank(std::move(d)));
}

inline Rational determinant(const RationalMatrix& m) {
  std::vector<RationalVector> a = m.row_vectors();
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  auto piv = detail::rref(a, n);
  if (piv.size() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
  return inv;
}

/// One solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.cols();
  std::vector<RationalVector> aug(a.rows(), RationalVector(n + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  auto piv = detail::rref(aug, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][n];
  return x;
}

/// Basis of {x : A x = 0}.
inline std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<RationalVector> r = a.row_vectors();
  auto piv = detail::rref(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Z-basis of ker(A) ∩ Z^n for an integer matrix A, via unimodular column reduction.
inline std::vector<std::vector<Integer>> integer_kernel(std::vector<std::vector<Integer>> a,
                                                        std::size_t n) {
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  std::size_t pc = 0;
  for (std::size_t i = 0; i < a.size() && pc < n; ++i) {
    for (std::size_t j = pc + 1; j < n; ++j) {
      while (a[i][j] != 0) {
        if (a[i][pc] == 0) {
          col_swap(pc, j);
          continue;
        }
        Integer q = a[i][j] / a[i][pc];
        col_axpy(j, pc, q);
        if (a[i][j] != 0) col_swap(pc, j);
      }
    }
    if (a[i][pc] != 0) ++pc;
  }
  std::vector<std::vector<Integer>> kernel;
  for (std::size_t j = pc; j < n; ++j) {
    std::vector<Integer> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = u[i][j];
    kernel.push_back(std::move(col));
  }
  return kernel;
}

/// Z-basis of span_R(dirs) ∩ Z^n (the saturation of the direction lattice).
inline std::vector<RationalVector> saturated_lattice_basis(const std::vector<RationalVector>& dirs,
                                                           std::size_t n) {
  std::vector<RationalVector> independent;
  {
    std::vector<RationalVector> r = dirs;
    auto piv = detail::rref(r, n);
    if (piv.empty()) return {};
    if (piv.size() == n) {
      std::vector<RationalVector> id;
      for (std::size_t i = 0; i < n; ++i) id.push_back(RationalVector::unit(n, i));
      return id;
    }
  }
  // Rows of `perp` span the orthogonal complement; the lattice is its integer kernel.
  auto perp = nullspace(RationalMatrix(dirs));
  std::vector<std::vector<Integer>> rows;
  for (const auto& v : perp) rows.push_back(primitive_integer(v).first);
  std::vector<RationalVector> basis;
  for (const auto& k : integer_kernel(rows, n)) basis.push_back(to_rational(k));
  return basis;
}

/// An integer square matrix acting on lattice coordinates (column vectors).
class UnimodularMap {
 public:
  UnimodularMap() = default;
  UnimodularMap(std::size_t dim, std::vector<std::int64_t> entries)
      : dim_(dim), a_(std::move(entries)) {}

  static UnimodularMap identity(std::size_t dim) {
    std::vector<std::int64_t> e(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
    return {dim, std::move(e)};
  }

  static UnimodularMap from_rational(const RationalMatrix& m) {
    std::vector<std::int64_t> e;
    e.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!is_integral(m(i, j))) throw Error(ErrorCode::NotLatticePoint, "non-integral map");
        e.push_back(to_int64(numerator_of(m(i, j))));
      }
    return {m.rows(), std::move(e)};
  }

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  const std::vector<std::int64_t>& entries() const noexcept { return a_; }

  RationalMatrix to_rational() const {
    RationalMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = a_[i * dim_ + j];
    return m;
  }

  RationalVector apply(const RationalVector& x) const {
    RationalVector y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        if (a_[i * dim_ + j] != 0) s += x[j] * a_[i * dim_ + j];
      y[i] = s;
    }
    return y;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
    std::vector<std::int64_t> y(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      __int128 s = 0;
      for (std::size_t j = 0; j < dim_; ++j) s += static_cast<__int128>(a_[i * dim_ + j]) * x[j];
      if (s > INT64_MAX || s < INT64_MIN) throw Error(ErrorCode::ArithmeticOverflow, "map apply");
      y[i] = static_cast<std::int64_t>(s);
    }
    return y;
  }

  UnimodularMap transpose() const {
    std::vector<std::int64_t> e(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) e[j * dim_ + i] = a_[i * dim_ + j];
    return {dim_, std::move(e)};
  }

  UnimodularMap inverse() const {
    auto inv = weylot::inverse(to_rational());
    if (!inv) throw Error(ErrorCode::InvalidArgument, "singular map");
    return from_rational(*inv);
  }

  std::int64_t determinant() const {
    return to_int64(numerator_of(weylot::determinant(to_rational())));
  }

  friend UnimodularMap operator*(const UnimodularMap& a, const UnimodularMap& b) {
    const std::size_t n = a.dim_;
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t x = a.a_[i * n + k];
        if (x == 0) continue;
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] += x * b.a_[k * n + j];
      }
    return {n, std::move(e)};
  }

  friend bool operator==(const UnimodularMap& a, const UnimodularMap& b) = default;
  friend auto operator<=>(const UnimodularMap& a, const UnimodularMap& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const UnimodularMap& m) {
    os << '[';
    for (std::size_t i = 0; i < m.dim_; ++i) {
      if (i) os << ';';
      for (std::size_t j = 0; j < m.dim_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> a_;
};

struct UnimodularMapHash {
  std::size_t operator()(const UnimodularMap& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.entries()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

struct Int64VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace weylot
