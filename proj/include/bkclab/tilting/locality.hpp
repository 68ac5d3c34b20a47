#pragma once

#include <vector>

#include "bkclab/tilting/end_algebra.hpp"

namespace bkclab::tilting {

namespace detail {

using Wide = unsigned __int128;

/// Tr(M^e) mod q for an integer matrix with entries in [0, q).
inline std::uint64_t trace_power_mod(std::vector<std::uint64_t> m, std::size_t n, std::uint64_t e, std::uint64_t q) {
  auto mul = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t aik = a[i * n + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          c[i * n + j] = static_cast<std::uint64_t>((Wide(c[i * n + j]) + Wide(aik) * b[k * n + j]) % q);
      }
    return c;
  };
  std::vector<std::uint64_t> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % q;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, m);
    if (e > 1) m = mul(m, m);
  }
  Wide t = 0;
  for (std::size_t i = 0; i < n; ++i) t += r[i * n + i];
  return static_cast<std::uint64_t>(t % q);
}

/// Column basis of the span of the given coordinate vectors.
inline MatrixFp span_basis(std::uint64_t p, std::size_t dim, const std::vector<std::vector<std::uint64_t>>& vecs) {
  if (vecs.empty()) return MatrixFp(p, dim, 0);
  MatrixFp m = MatrixFp::from_columns(p, dim, vecs);
  return m.select_columns(exactalg::pivot_columns(m));
}

inline std::vector<std::vector<std::uint64_t>> columns_of(const MatrixFp& m) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

inline bool in_span(const MatrixFp& basis, const std::vector<std::uint64_t>& v) {
  if (basis.cols() == 0) return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
  return exactalg::rank(exactalg::hconcat(basis, MatrixFp::from_columns(basis.p(), basis.rows(),
                                                                         std::vector<std::vector<std::uint64_t>>{v}))) == basis.cols();
}

/// Coordinates of the product of two algebra elements given in coordinates.
inline std::vector<std::uint64_t> multiply(const EndAlgebra& a, const std::vector<std::uint64_t>& x,
                                           const std::vector<std::uint64_t>& y) {
  const exactalg::PrimeField f(a.p());
  std::vector<std::uint64_t> out(a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t s = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < a.dim(); ++k) out[k] = f.add(out[k], f.mul(s, a.table[i][j][k]));
    }
  }
  return out;
}

inline std::vector<std::uint64_t> unit(std::size_t dim, std::size_t k) {
  std::vector<std::uint64_t> v(dim, 0);
  v[k] = 1;
  return v;
}

}  // namespace detail

/// Radical of the algebra by the trace-form iteration over F_p; columns are coordinate vectors.
inline MatrixFp radical(const EndAlgebra& a) {
  const std::uint64_t p = a.p();
  const std::size_t k = a.dim();
  const std::size_t n = a.module.dim();
  MatrixFp current = MatrixFp::identity(p, k);
  std::uint64_t pi = 1;  // p^i
  for (int i = 0;; ++i) {
    if (i > 0) {
      if (pi > n / p) break;
      pi *= p;
    }
    const std::uint64_t q = pi * p;
    // Row b of the system: x -> g_i(x * y_b) on the current subspace.
    MatrixFp system(p, k, current.cols());
    for (std::size_t j = 0; j < current.cols(); ++j) {
      const MatrixFp x = a.element(current.column(j));
      for (std::size_t b = 0; b < k; ++b) {
        const MatrixFp xy = x * a.basis[b];
        const std::uint64_t t = detail::trace_power_mod(xy.raw().data(), n, pi, q);
        require(t % pi == 0, "trace-form iteration: value not divisible by p^i");
        system.set(b, j, t / pi);
      }
    }
    const auto ker = exactalg::rank_kernel_Fp(system).kernel;
    current = current.cols() == 0 || ker.cols() == 0 ? MatrixFp(p, k, 0) : current * ker;
    if (current.cols() == 0) break;
  }
  return current;
}

/// Whether the endomorphism algebra is local, i.e. the module is indecomposable.
inline bool is_indecomposable(const EndAlgebra& a) {
  const std::uint64_t p = a.p();
  const std::size_t k = a.dim();
  if (k == 0) return false;
  if (k == 1) return true;
  const MatrixFp rad = radical(a);
  const auto rad_vecs = detail::columns_of(rad);

  for (const auto& r : rad_vecs)
    for (std::size_t b = 0; b < k; ++b) {
      require(detail::in_span(rad, detail::multiply(a, r, detail::unit(k, b))), "radical is not a right ideal");
      require(detail::in_span(rad, detail::multiply(a, detail::unit(k, b), r)), "radical is not a left ideal");
    }
  {
    MatrixFp power = rad;
    for (std::size_t step = 0; power.cols() > 0; ++step) {
      require(step <= k, "radical is not nilpotent");
      std::vector<std::vector<std::uint64_t>> prods;
      for (const auto& x : detail::columns_of(power))
        for (const auto& r : rad_vecs) prods.push_back(detail::multiply(a, x, r));
      power = detail::span_basis(p, k, prods);
    }
  }

  if (k - rad.cols() == 1) return true;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y) {
      auto xy = detail::multiply(a, detail::unit(k, x), detail::unit(k, y));
      auto yx = detail::multiply(a, detail::unit(k, y), detail::unit(k, x));
      const exactalg::PrimeField f(p);
      for (std::size_t t = 0; t < k; ++t) xy[t] = f.sub(xy[t], yx[t]);
      if (!detail::in_span(rad, xy)) return false;
    }

  // The quotient is a product of finite fields; Frobenius fixes exactly one copy of F_p in each.
  std::vector<std::vector<std::uint64_t>> frob;
  const exactalg::PrimeField f(p);
  for (std::size_t x = 0; x < k; ++x) {
    auto power = detail::unit(k, x);
    auto base = power;
    for (std::uint64_t e = 1; e < p; ++e) power = detail::multiply(a, power, base);
    power[x] = f.sub(power[x], 1);
    frob.push_back(std::move(power));
  }
  MatrixFp l = MatrixFp::from_columns(p, k, frob);
  if (rad.cols() > 0) l = exactalg::hconcat(l, rad);
  const std::size_t kernel_dim = l.cols() - exactalg::rank(l);
  return kernel_dim == rad.cols() + 1;
}

}  // namespace bkclab::tilting
