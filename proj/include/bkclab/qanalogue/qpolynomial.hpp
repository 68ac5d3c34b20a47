#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bkclab/errors.hpp"

namespace bkclab::qanalogue {

/// Polynomial in q with int64 coefficients, lowest exponent first, trailing zeros trimmed.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial one() { return QPolynomial({1}); }
  static QPolynomial monomial(std::size_t exponent, std::int64_t coeff = 1) {
    std::vector<std::int64_t> c(exponent + 1, 0);
    c[exponent] = coeff;
    return QPolynomial(std::move(c));
  }

  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::int64_t operator[](std::size_t e) const { return e < c_.size() ? c_[e] : 0; }

  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto x : c_) s = checked_add(s, x);
    return s;
  }

  bool nonnegative() const {
    for (auto x : c_)
      if (x < 0) return false;
    return true;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t e = 0; e < o.c_.size(); ++e) c_[e] = checked_add(c_[e], o.c_[e]);
    trim();
    return *this;
  }

  QPolynomial& operator-=(const QPolynomial& o) { return *this += o * -1; }

  QPolynomial operator*(std::int64_t s) const {
    QPolynomial r = *this;
    for (auto& x : r.c_) x = checked_mul(x, s);
    r.trim();
    return r;
  }

  QPolynomial operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t a = 0; a < c_.size(); ++a)
      for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] = checked_add(r[a + b], checked_mul(c_[a], o.c_[b]));
    return QPolynomial(std::move(r));
  }

  /// Multiplication by q^k.
  QPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return QPolynomial(std::move(r));
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  bool operator==(const QPolynomial&) const = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (c_[e] == 0) continue;
      std::int64_t a = c_[e];
      if (!s.empty()) s += a < 0 ? " - " : " + ";
      else if (a < 0) s += "-";
      const std::int64_t mag = a < 0 ? -a : a;
      if (e == 0 || mag != 1) s += std::to_string(mag);
      if (e >= 1) s += "q";
      if (e >= 2) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("q-polynomial coefficient overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("q-polynomial coefficient overflow");
    return r;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

}  // namespace bkclab::qanalogue
