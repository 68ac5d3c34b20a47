#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bkclab/exactalg/matrix.hpp"
#include "bkclab/exactalg/prime_field.hpp"

namespace bkclab::exactalg {

struct RationalOps {
  using value_type = Rational;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational sub(const Rational& a, const Rational& b) { return a - b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational neg(const Rational& a) { return -a; }
  static Rational inv(const Rational& a) { return 1 / a; }
};

struct ModOps {
  using value_type = std::uint64_t;
  PrimeField field;
  bool is_zero(std::uint64_t x) const { return x == 0; }
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return field.add(a, b); }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return field.sub(a, b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return field.mul(a, b); }
  std::uint64_t neg(std::uint64_t a) const { return field.neg(a); }
  std::uint64_t inv(std::uint64_t a) const { return field.inv(a); }
};

namespace detail {

/// Reduced row echelon form in place; pivots only in columns < col_limit.
template <class V, class Ops>
std::vector<std::size_t> rref_in_place(Matrix<V>& a, const Ops& ops, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && ops.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const V inv = ops.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = ops.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || ops.is_zero(a(i, c))) continue;
      const V f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!ops.is_zero(a(r, j))) a(i, j) = ops.sub(a(i, j), ops.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class V, class Ops>
Matrix<V> kernel_from_rref(const Matrix<V>& reduced, const std::vector<std::size_t>& pivots, std::size_t ncols,
                           const Ops& ops) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<V> kernel(ncols, ncols - pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    kernel(f, k) = ops.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) kernel(pivots[r], k) = ops.neg(reduced(r, f));
    ++k;
  }
  return kernel;
}

template <class V, class Ops>
std::optional<Matrix<V>> solve_impl(const Matrix<V>& a, const Matrix<V>& b, const Ops& ops) {
  if (a.rows() != b.rows()) throw InvalidArgument("solve: row mismatch");
  Matrix<V> aug = hconcat(a, b);
  auto pivots = rref_in_place(aug, ops, a.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = a.cols(); j < aug.cols(); ++j)
      if (!ops.is_zero(aug(i, j))) return std::nullopt;
  Matrix<V> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

inline MatrixFp wrap(std::uint64_t p, const Matrix<std::uint64_t>& raw) {
  MatrixFp m(p, raw.rows(), raw.cols());
  for (std::size_t i = 0; i < raw.rows(); ++i)
    for (std::size_t j = 0; j < raw.cols(); ++j) m.set(i, j, raw(i, j));
  return m;
}

}  // namespace detail

template <class M>
struct RankKernel {
  std::size_t rank = 0;
  M kernel;  // columns span the null space
};

/// Rank and null-space basis over Q.
inline RankKernel<MatrixQ> rank_kernel_Q(const MatrixQ& m) {
  MatrixQ a = m;
  RationalOps ops;
  auto pivots = detail::rref_in_place(a, ops, a.cols());
  return {pivots.size(), detail::kernel_from_rref(a, pivots, m.cols(), ops)};
}

/// Rank and null-space basis over F_p.
inline RankKernel<MatrixFp> rank_kernel_Fp(const MatrixFp& m) {
  Matrix<std::uint64_t> a = m.raw();
  ModOps ops{m.field()};
  auto pivots = detail::rref_in_place(a, ops, a.cols());
  return {pivots.size(), detail::wrap(m.p(), detail::kernel_from_rref(a, pivots, m.cols(), ops))};
}

inline std::size_t rank(const MatrixQ& m) {
  MatrixQ a = m;
  return detail::rref_in_place(a, RationalOps{}, a.cols()).size();
}

inline std::size_t rank(const MatrixFp& m) {
  Matrix<std::uint64_t> a = m.raw();
  return detail::rref_in_place(a, ModOps{m.field()}, a.cols()).size();
}

/// Indices of a maximal set of independent columns, greedy from the left.
inline std::vector<std::size_t> pivot_columns(const MatrixQ& m) {
  MatrixQ a = m;
  return detail::rref_in_place(a, RationalOps{}, a.cols());
}

inline std::vector<std::size_t> pivot_columns(const MatrixFp& m) {
  Matrix<std::uint64_t> a = m.raw();
  return detail::rref_in_place(a, ModOps{m.field()}, a.cols());
}

/// Some X with A X = B, or nullopt when inconsistent.
inline std::optional<MatrixQ> solve(const MatrixQ& a, const MatrixQ& b) {
  return detail::solve_impl(a, b, RationalOps{});
}

inline std::optional<MatrixFp> solve(const MatrixFp& a, const MatrixFp& b) {
  auto x = detail::solve_impl(a.raw(), b.raw(), ModOps{a.field()});
  if (!x) return std::nullopt;
  return detail::wrap(a.p(), *x);
}

inline MatrixQ inverse(const MatrixQ& a) {
  if (!a.square()) throw InvalidArgument("inverse of non-square matrix");
  auto x = solve(a, MatrixQ::identity(a.rows()));
  if (!x || rank(a) != a.rows()) throw InvalidArgument("singular matrix");
  return *x;
}

inline MatrixFp inverse(const MatrixFp& a) {
  if (!a.square()) throw InvalidArgument("inverse of non-square matrix");
  if (rank(a) != a.rows()) throw InvalidArgument("singular matrix");
  return *solve(a, MatrixFp::identity(a.p(), a.rows()));
}

inline Rational determinant(const MatrixQ& m) {
  if (!m.square()) throw InvalidArgument("determinant of non-square matrix");
  MatrixQ a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Coordinates with respect to a fixed set of independent column vectors.
template <class M>
class CoordinateSolver;

template <>
class CoordinateSolver<MatrixFp> {
 public:
  explicit CoordinateSolver(MatrixFp basis) : basis_(std::move(basis)) {
    rows_ = pivot_columns(basis_.transpose());
    if (rows_.size() != basis_.cols()) throw InvalidArgument("coordinate basis is dependent");
    std::vector<std::size_t> all(basis_.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    inverse_ = inverse(basis_.select(rows_, all));
  }

  std::size_t dim() const { return basis_.cols(); }
  const MatrixFp& basis() const { return basis_; }

  std::optional<std::vector<std::uint64_t>> coordinates(const std::vector<std::uint64_t>& v) const {
    std::vector<std::uint64_t> sub(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) sub[k] = v[rows_[k]];
    auto c = inverse_ * sub;
    if (basis_ * c != v) return std::nullopt;
    return c;
  }

 private:
  MatrixFp basis_;
  std::vector<std::size_t> rows_;
  MatrixFp inverse_;
};

template <>
class CoordinateSolver<MatrixQ> {
 public:
  explicit CoordinateSolver(MatrixQ basis) : basis_(std::move(basis)) {
    rows_ = pivot_columns(basis_.transpose());
    if (rows_.size() != basis_.cols()) throw InvalidArgument("coordinate basis is dependent");
    std::vector<std::size_t> all(basis_.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    inverse_ = inverse(basis_.select(rows_, all));
  }

  std::size_t dim() const { return basis_.cols(); }

  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const {
    std::vector<Rational> sub(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) sub[k] = v[rows_[k]];
    auto c = inverse_ * sub;
    if (basis_ * c != v) return std::nullopt;
    return c;
  }

 private:
  MatrixQ basis_;
  std::vector<std::size_t> rows_;
  MatrixQ inverse_;
};

}  // namespace bkclab::exactalg
