#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bkclab/exactalg/linear_algebra.hpp"
#include "bkclab/exactalg/prime_field.hpp"

namespace bkclab::exactalg {

/// Polynomial over F_p, coefficients from degree 0 upward, trailing zeros trimmed.
class PolyFp {
 public:
  explicit PolyFp(std::uint64_t p) : field_(p) {}
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : field_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p;
    trim();
  }

  static PolyFp monomial(std::uint64_t p, std::size_t degree, std::uint64_t coeff = 1) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return PolyFp(p, std::move(c));
  }
  static PolyFp constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }

  std::uint64_t p() const noexcept { return field_.p; }
  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  PolyFp monic() const {
    if (is_zero()) return *this;
    const std::uint64_t inv = field_.inv(leading());
    PolyFp r = *this;
    for (auto& x : r.c_) x = field_.mul(x, inv);
    return r;
  }

  PolyFp derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.mul(i % field_.p, c_[i]));
    return PolyFp(p(), std::move(d));
  }

  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p() == b.p() && a.c_ == b.c_; }

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.add(a[i], b[i]);
    return PolyFp(a.p(), std::move(r));
  }
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.sub(a[i], b[i]);
    return PolyFp(a.p(), std::move(r));
  }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() || b.is_zero()) return PolyFp(a.p());
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % a.p();
    return PolyFp(a.p(), std::move(r));
  }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    const PrimeField& f = a.field_;
    std::vector<std::uint64_t> rem = a.c_;
    const long db = b.degree();
    const std::uint64_t inv = f.inv(b.leading());
    std::vector<std::uint64_t> quo(rem.size() > static_cast<std::size_t>(db) ? rem.size() - db : 0, 0);
    for (long k = static_cast<long>(rem.size()) - 1; k >= db; --k) {
      const std::uint64_t coef = f.mul(rem[k], inv);
      if (coef == 0) continue;
      quo[k - db] = coef;
      for (long j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(coef, b.c_[j]));
    }
    return {PolyFp(a.p(), std::move(quo)), PolyFp(a.p(), std::move(rem))};
  }

  friend PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }
  friend PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }

  static PolyFp gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
      PolyFp r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  static PolyFp pow_mod(PolyFp base, std::uint64_t e, const PolyFp& mod) {
    PolyFp r = constant(base.p(), 1) % mod;
    base = base % mod;
    while (e) {
      if (e & 1) r = (r * base) % mod;
      base = (base * base) % mod;
      e >>= 1;
    }
    return r;
  }

  /// Evaluate at a square matrix (Horner).
  MatrixFp evaluate(const MatrixFp& m) const {
    MatrixFp acc(p(), m.rows(), m.cols());
    const MatrixFp id = MatrixFp::identity(p(), m.rows());
    for (long k = degree(); k >= 0; --k) acc = acc * m + c_[k] * id;
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long k = degree(); k >= 0; --k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      if (k == 0 || c_[k] != 1) s += std::to_string(c_[k]);
      if (k >= 1) s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const PolyFp& f) { return os << f.to_string(); }

  friend bool operator<(const PolyFp& a, const PolyFp& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField field_;
  std::vector<std::uint64_t> c_;
};

/// Monic characteristic polynomial det(x I - m), via Hessenberg reduction.
inline PolyFp char_poly_Fp(const MatrixFp& m) {
  if (!m.square()) throw InvalidArgument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  const std::uint64_t p = m.p();
  const PrimeField& f = m.field();
  Matrix<std::uint64_t> h = m.raw();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const std::uint64_t inv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const std::uint64_t u = f.mul(h(k, j), inv);
      for (std::size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  std::vector<PolyFp> chars;
  chars.push_back(PolyFp::constant(p, 1));
  const PolyFp x = PolyFp::monomial(p, 1);
  for (std::size_t mm = 1; mm <= n; ++mm) {
    PolyFp next = (x - PolyFp::constant(p, h(mm - 1, mm - 1))) * chars[mm - 1];
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < mm; ++i) {
      t = f.mul(t, h(mm - i, mm - i - 1));
      const std::uint64_t coef = f.mul(t, h(mm - i - 1, mm - 1));
      if (coef) next = next - PolyFp::constant(p, coef) * chars[mm - i - 1];
    }
    chars.push_back(std::move(next));
  }
  return chars.back();
}

struct Factor {
  PolyFp poly;
  int multiplicity;
};

namespace detail {

inline void squarefree_into(const PolyFp& f, int scale, std::vector<Factor>& out) {
  const std::uint64_t p = f.p();
  PolyFp c = PolyFp::gcd(f, f.derivative());
  PolyFp w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PolyFp y = PolyFp::gcd(w, c);
    PolyFp z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    std::vector<std::uint64_t> root;
    for (std::size_t k = 0; k < c.coefficients().size(); k += p) root.push_back(c[k]);
    squarefree_into(PolyFp(p, std::move(root)).monic(), scale * static_cast<int>(p), out);
  }
}

/// Irreducible factors of a monic squarefree polynomial (Berlekamp).
inline std::vector<PolyFp> berlekamp(const PolyFp& f) {
  const std::uint64_t p = f.p();
  const auto n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  MatrixFp q(p, n, n);
  const PolyFp xp = PolyFp::pow_mod(PolyFp::monomial(p, 1), p, f);
  PolyFp power = PolyFp::constant(p, 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) q.set(i, k, power[i]);
    power = (power * xp) % f;
  }
  auto rk = rank_kernel_Fp(q - MatrixFp::identity(p, n));
  const std::size_t r = rk.kernel.cols();
  std::vector<PolyFp> factors{f};
  if (r == 1) return factors;
  for (std::size_t k = 0; k < r && factors.size() < r; ++k) {
    PolyFp v(p, rk.kernel.column(k));
    if (v.degree() <= 0) continue;
    std::vector<PolyFp> next;
    for (const auto& u : factors) {
      if (u.degree() <= 1) {
        next.push_back(u);
        continue;
      }
      PolyFp rest = u;
      for (std::uint64_t s = 0; s < p && rest.degree() > 1; ++s) {
        PolyFp g = PolyFp::gcd(rest, v - PolyFp::constant(p, s));
        if (g.degree() > 0 && g.degree() < rest.degree()) {
          next.push_back(g);
          rest = (rest / g).monic();
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  require(factors.size() == r, "berlekamp: factor count mismatch");
  return factors;
}

}  // namespace detail

/// Factorization of a nonzero polynomial into powers of distinct monic irreducibles.
inline std::vector<Factor> factor_squarefree_Fp(const PolyFp& poly) {
  if (poly.is_zero()) throw InvalidArgument("factorization of zero polynomial");
  std::vector<Factor> sqf;
  if (poly.degree() > 0) detail::squarefree_into(poly.monic(), 1, sqf);
  std::vector<Factor> out;
  for (const auto& [part, mult] : sqf)
    for (auto& irr : detail::berlekamp(part)) out.push_back({irr.monic(), mult});
  // Merge equal irreducibles produced by different squarefree layers.
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  std::vector<Factor> merged;
  for (auto& f : out) {
    if (!merged.empty() && merged.back().poly == f.poly)
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(std::move(f));
  }
  return merged;
}

}  // namespace bkclab::exactalg
