#pragma once

#include <cstddef>
#include <vector>

#include "bkclab/exactalg/linear_algebra.hpp"
#include "bkclab/exactalg/matrix.hpp"
#include "bkclab/exactalg/prime_field.hpp"

namespace bkclab::exactalg {

/// A full-rank sublattice of Q^ambient given by (basis / denominator).
///
/// The basis is in column Hermite normal form: the first nonzero entry of
/// column j sits in pivot_rows[j] (strictly increasing), is positive, and
/// every earlier column has its entry in that row reduced into [0, pivot).
struct LatticeBasis {
  std::size_t ambient = 0;
  MatrixZ basis;
  std::vector<std::size_t> pivot_rows;
  Integer denominator = 1;

  std::size_t rank() const { return basis.cols(); }

  MatrixQ rational_basis() const {
    MatrixQ q = to_rational(basis);
    if (denominator != 1) q /= Rational(denominator);
    return q;
  }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient == b.ambient && a.basis == b.basis && a.denominator == b.denominator;
  }
};

namespace detail {

inline void column_combine(MatrixZ& h, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                           const Integer& u, const Integer& v) {
  // (col_a, col_b) <- (s col_a + t col_b, u col_a + v col_b)
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Integer x = h(i, a), y = h(i, b);
    h(i, a) = s * x + t * y;
    h(i, b) = u * x + v * y;
  }
}

inline void column_axpy(MatrixZ& h, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, dst) -= q * h(i, src);
}

}  // namespace detail

/// Column Hermite normal form of the lattice spanned by the columns of m.
inline LatticeBasis hnf(const MatrixZ& m) {
  MatrixZ h = m;
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t i = 0; i < h.rows() && next < h.cols(); ++i) {
    for (std::size_t j = next + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(i, next).get_mpz_t(), h(i, j).get_mpz_t());
      Integer u = -h(i, j) / g;
      Integer v = h(i, next) / g;
      detail::column_combine(h, next, j, s, t, u, v);
    }
    if (h(i, next) == 0) continue;
    if (h(i, next) < 0)
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, next) = -h(r, next);
    const Integer piv = h(i, next);
    for (std::size_t l = 0; l < next; ++l) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, l).get_mpz_t(), piv.get_mpz_t());
      if (q != 0) detail::column_axpy(h, l, next, q);
    }
    pivots.push_back(i);
    ++next;
  }
  if (next == 0) throw InvalidArgument("hnf: columns span the zero lattice");
  for (std::size_t j = next; j < h.cols(); ++j)
    for (std::size_t i = 0; i < h.rows(); ++i) require(h(i, j) == 0, "hnf: residual column not cleared");
  LatticeBasis out;
  out.ambient = m.rows();
  out.basis = h.block(0, 0, h.rows(), next);
  out.pivot_rows = std::move(pivots);
  return out;
}

/// Lattice spanned by rational column vectors, in canonical (HNF, minimal denominator) form.
inline LatticeBasis lattice_from_rational(const MatrixQ& generators) {
  Integer den = 1;
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      const Integer d = generators(i, j).get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
  MatrixZ scaled(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      Rational x = generators(i, j) * den;
      scaled(i, j) = x.get_num();
    }
  LatticeBasis l = hnf(scaled);
  Integer g = den;
  for (std::size_t i = 0; i < l.basis.rows(); ++i)
    for (std::size_t j = 0; j < l.basis.cols(); ++j)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.basis(i, j).get_mpz_t());
  if (g != 1) {
    for (std::size_t i = 0; i < l.basis.rows(); ++i)
      for (std::size_t j = 0; j < l.basis.cols(); ++j) l.basis(i, j) /= g;
    den /= g;
  }
  l.denominator = den;
  return l;
}

/// Entrywise reduction mod p; throws NonIntegral when a denominator is divisible by p.
inline MatrixFp p_integral_reduce(const MatrixQ& m, std::uint64_t p) {
  MatrixFp r(p, m.rows(), m.cols());
  const PrimeField& f = r.field();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      const Integer den = x.get_den();
      const std::uint64_t d = f.from_integer(den);
      if (d == 0) throw NonIntegral(i, j, den.get_str(), p);
      r.set(i, j, f.mul(f.from_integer(x.get_num()), f.inv(d)));
    }
  return r;
}

inline bool is_integral(const MatrixQ& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

inline MatrixZ to_integer(const MatrixQ& m) {
  MatrixZ z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InternalError("to_integer: non-integral entry");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

}  // namespace bkclab::exactalg
