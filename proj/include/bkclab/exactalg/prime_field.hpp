#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "bkclab/exactalg/matrix.hpp"

namespace bkclab::exactalg {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in Z/p for a prime p < 2^31.
struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime) || prime >= (std::uint64_t{1} << 31))
      throw InvalidArgument("modulus must be a prime below 2^31, got " + std::to_string(prime));
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p == 0) throw InvalidArgument("inverse of zero mod p");
    return pow(a, p - 2);
  }

  std::uint64_t from_signed(std::int64_t a) const {
    auto m = static_cast<std::int64_t>(p);
    auto r = a % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

  std::uint64_t from_integer(const Integer& a) const {
    Integer r = a % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }

  std::int64_t centered(std::uint64_t a) const {
    auto v = static_cast<std::int64_t>(a);
    return v > static_cast<std::int64_t>(p / 2) ? v - static_cast<std::int64_t>(p) : v;
  }
};

/// Dense matrix over F_p; entries kept in [0, p).
class MatrixFp {
 public:
  MatrixFp() : field_(2) {}
  MatrixFp(std::uint64_t p, std::size_t rows, std::size_t cols) : field_(p), m_(rows, cols) {}
  MatrixFp(std::uint64_t p, std::initializer_list<std::initializer_list<std::int64_t>> init) : field_(p) {
    std::size_t rows = init.size();
    std::size_t cols = rows ? init.begin()->size() : 0;
    m_ = Matrix<std::uint64_t>(rows, cols);
    std::size_t i = 0;
    for (const auto& row : init) {
      if (row.size() != cols) throw InvalidArgument("ragged matrix initializer");
      std::size_t j = 0;
      for (auto x : row) m_(i, j++) = field_.from_signed(x);
      ++i;
    }
  }

  static MatrixFp identity(std::uint64_t p, std::size_t n) {
    MatrixFp m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.m_(i, i) = 1 % p;
    return m;
  }

  std::uint64_t p() const noexcept { return field_.p; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  bool square() const noexcept { return m_.square(); }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { m_(i, j) = v % field_.p; }
  void add_to(std::size_t i, std::size_t j, std::uint64_t v) { m_(i, j) = field_.add(m_(i, j), v % field_.p); }

  const Matrix<std::uint64_t>& raw() const noexcept { return m_; }

  std::vector<std::uint64_t> column(std::size_t j) const { return m_.column(j); }
  std::vector<std::uint64_t> row(std::size_t i) const { return m_.row(i); }

  bool is_zero() const { return m_.is_zero(); }

  MatrixFp transpose() const { return wrap(m_.transpose()); }
  MatrixFp block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    return wrap(m_.block(r0, c0, nr, nc));
  }
  MatrixFp select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    return wrap(m_.select(rows, cols));
  }
  MatrixFp select_columns(std::span<const std::size_t> cols) const { return wrap(m_.select_columns(cols)); }

  static MatrixFp from_columns(std::uint64_t p, std::size_t rows,
                               std::span<const std::vector<std::uint64_t>> columns) {
    MatrixFp m(p, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    return m;
  }

  friend bool operator==(const MatrixFp& a, const MatrixFp& b) { return a.p() == b.p() && a.m_ == b.m_; }

  friend MatrixFp operator+(const MatrixFp& a, const MatrixFp& b) {
    a.check_compatible(b);
    MatrixFp c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) c.m_(i, j) = a.field_.add(a.m_(i, j), b.m_(i, j));
    return c;
  }

  friend MatrixFp operator-(const MatrixFp& a, const MatrixFp& b) {
    a.check_compatible(b);
    MatrixFp c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) c.m_(i, j) = a.field_.sub(a.m_(i, j), b.m_(i, j));
    return c;
  }

  friend MatrixFp operator*(std::uint64_t s, const MatrixFp& a) {
    MatrixFp c = a;
    s %= a.p();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) c.m_(i, j) = a.field_.mul(s, a.m_(i, j));
    return c;
  }

  friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
    if (a.p() != b.p()) throw InvalidArgument("mixed characteristics in product");
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
    const std::uint64_t p = a.p();
    MatrixFp c(p, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const std::uint64_t aik = a.m_(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const std::uint64_t bkj = b.m_(k, j);
          if (bkj) c.m_(i, j) = (c.m_(i, j) + aik * bkj) % p;
        }
      }
    return c;
  }

  friend std::vector<std::uint64_t> operator*(const MatrixFp& a, const std::vector<std::uint64_t>& v) {
    if (a.cols() != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<std::uint64_t> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) out[i] = (out[i] + a.m_(i, k) * v[k]) % a.p();
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const MatrixFp& m) { return os << m.m_; }

 private:
  MatrixFp wrap(Matrix<std::uint64_t> raw) const {
    MatrixFp r(field_.p, 0, 0);
    r.m_ = std::move(raw);
    return r;
  }

  void check_compatible(const MatrixFp& o) const {
    if (p() != o.p()) throw InvalidArgument("mixed characteristics");
    if (rows() != o.rows() || cols() != o.cols()) throw InvalidArgument("matrix shape mismatch");
  }

  PrimeField field_;
  Matrix<std::uint64_t> m_;
};

/// Kronecker product a ⊗ b; index (i*rows(b)+k, j*cols(b)+l).
inline MatrixFp kron(const MatrixFp& a, const MatrixFp& b) {
  if (a.p() != b.p()) throw InvalidArgument("mixed characteristics in kron");
  const std::uint64_t p = a.p();
  MatrixFp c(p, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint64_t aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l)) c.set(i * b.rows() + k, j * b.cols() + l, (aij * b(k, l)) % p);
    }
  return c;
}

inline MatrixFp hconcat(const MatrixFp& a, const MatrixFp& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("hconcat row mismatch");
  MatrixFp m(a.p(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b(i, j));
  }
  return m;
}

inline MatrixFp vconcat(const MatrixFp& a, const MatrixFp& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw InvalidArgument("vconcat column mismatch");
  MatrixFp m(a.p(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b(i, j));
  return m;
}

inline MatrixFp reduce_integral(const MatrixZ& m, std::uint64_t p) {
  MatrixFp r(p, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, r.field().from_integer(m(i, j)));
  return r;
}

}  // namespace bkclab::exactalg
