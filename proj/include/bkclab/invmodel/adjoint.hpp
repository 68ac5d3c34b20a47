#pragma once

#include <vector>

#include "bkclab/exactalg/hnf.hpp"
#include "bkclab/repbuild/modular.hpp"
#include "bkclab/rootdata/chevalley.hpp"

namespace bkclab::invmodel {

using exactalg::MatrixFp;
using exactalg::MatrixQ;
using exactalg::MatrixZ;
using exactalg::Rational;
using rootdata::RootDatum;
using rootdata::Weight;

/// Ad(x_i(t)) = sum_m t^m (ad e_i)^m / m! on the Chevalley basis of b (or all of g).
struct AdjointAction {
  std::uint64_t p = 0;
  std::size_t dim = 0;
  std::vector<std::vector<MatrixFp>> coeffs;  // [i][m]
};

inline std::vector<std::size_t> simple_root_indices(const RootDatum& d) {
  std::vector<std::size_t> out;
  for (int i = 0; i < d.rank; ++i) {
    std::vector<std::int64_t> k(d.rank, 0);
    k[i] = 1;
    out.push_back(*d.root_index(k));
  }
  return out;
}

/// Divided powers (ad x)^m / m! over Z, m = 0.. until zero.
inline std::vector<MatrixZ> ad_divided_powers(const MatrixZ& ad) {
  const std::size_t n = ad.rows();
  std::vector<MatrixZ> out;
  MatrixQ power = MatrixQ::identity(n);
  const MatrixQ a = exactalg::to_rational(ad);
  for (std::size_t m = 0;; ++m) {
    if (m > 0) {
      power = power * a;
      power /= Rational(static_cast<unsigned long>(m));
      if (power.is_zero()) break;
    }
    require(exactalg::is_integral(power), "ad divided power is not integral on the Chevalley basis");
    out.push_back(exactalg::to_integer(power));
    require(m <= n, "ad e_i is not nilpotent");
  }
  return out;
}

inline AdjointAction adjoint_action_polynomials(const RootDatum& d, const rootdata::ChevalleyAlgebra& g,
                                                std::uint64_t p, bool whole_algebra = false) {
  AdjointAction act;
  act.p = p;
  act.dim = whole_algebra ? g.dim() : g.borel_dim();
  for (auto r : simple_root_indices(d)) {
    const MatrixZ& full = g.ad[g.e(r)];
    MatrixZ ad(act.dim, act.dim);
    for (std::size_t a = 0; a < act.dim; ++a)
      for (std::size_t b = 0; b < act.dim; ++b) ad(a, b) = full(a, b);
    std::vector<MatrixFp> red;
    for (const auto& x : ad_divided_powers(ad)) red.push_back(exactalg::reduce_integral(x, p));
    repbuild::detail::trim_zero_tail(red);
    // x_i(s) x_i(t) = x_i(s + t).
    for (std::size_t a = 0; a < red.size(); ++a)
      for (std::size_t b = 0; b < red.size(); ++b) {
        exactalg::Integer c;
        mpz_bin_uiui(c.get_mpz_t(), a + b, a);
        const MatrixFp rhs = a + b < red.size() ? c.get_ui() % p * red[a + b] : MatrixFp(p, act.dim, act.dim);
        require(red[a] * red[b] == rhs, "adjoint action fails the homomorphism identity");
      }
    act.coeffs.push_back(std::move(red));
  }
  return act;
}

inline AdjointAction adjoint_action_polynomials(const RootDatum& d, std::uint64_t p, bool whole_algebra = false) {
  return adjoint_action_polynomials(d, rootdata::chevalley_algebra(d), p, whole_algebra);
}

/// beta(h) != 0 mod p for every positive root: ad(h) is invertible on n.
inline bool regularity_check(const RootDatum& d, std::uint64_t p, const std::vector<std::uint64_t>& h) {
  if (h.size() != static_cast<std::size_t>(d.lattice_dim)) throw InvalidArgument("h has the wrong number of coordinates");
  const exactalg::PrimeField f(p);
  for (const auto& beta : d.positive_roots) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < h.size(); ++k) v = f.add(v, f.mul(f.from_signed(beta.weight[k]), h[k] % p));
    if (v == 0) return false;
  }
  return true;
}

}  // namespace bkclab::invmodel
