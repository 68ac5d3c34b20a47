#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "bkclab/invmodel/adjoint.hpp"

namespace bkclab::invmodel {

using Exponent = std::vector<int>;

inline constexpr std::size_t kDefaultMonomialCap = 4000;

/// Polynomials of degree <= d on h + n in the coordinates y_beta of the root vectors e_beta, centred at h.
struct AffineCoordinateModule {
  std::uint64_t p = 0;
  std::size_t degree_bound = 0;
  std::size_t num_vars = 0;               // dim n
  std::vector<Exponent> monomials;        // sorted by total degree
  std::vector<std::size_t> degrees;
  std::vector<Weight> weights;            // weight of y^a is -sum a_beta beta
  std::map<Exponent, std::size_t> index;
  std::vector<std::vector<MatrixFp>> action;  // [i][s]: coefficient of t^s in x_i(t) acting by substitution

  std::size_t dim() const { return monomials.size(); }

  /// Number of monomials of degree <= n.
  std::size_t filtration_dim(std::size_t n) const {
    return static_cast<std::size_t>(std::count_if(degrees.begin(), degrees.end(), [&](std::size_t k) { return k <= n; }));
  }
};

namespace detail {

using Poly = std::map<Exponent, std::uint64_t>;  // key: (t exponent, y exponents...)

inline Poly multiply(const Poly& a, const Poly& b, const exactalg::PrimeField& f) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Exponent k(ka.size());
      for (std::size_t t = 0; t < k.size(); ++t) k[t] = ka[t] + kb[t];
      auto& slot = out[k];
      slot = f.add(slot, f.mul(ca, cb));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::vector<Exponent> monomials_up_to(std::size_t vars, std::size_t degree) {
  std::vector<Exponent> out;
  Exponent cur(vars, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t left) {
    if (v == vars) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = 0; a <= left; ++a) {
      cur[v] = static_cast<int>(a);
      go(v + 1, left - a);
    }
    cur[v] = 0;
  };
  go(0, degree);
  std::stable_sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;
  });
  return out;
}

/// S_a S_b = C(a+b, a) S_{a+b} and degree monotonicity, column by column.
inline void check_homomorphism(const std::vector<MatrixFp>& fam, const std::vector<std::size_t>& degrees,
                               const exactalg::PrimeField& f) {
  const std::size_t n = degrees.size();
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>> cols(fam.size());
  for (std::size_t a = 0; a < fam.size(); ++a) {
    cols[a].resize(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (fam[a](r, c) != 0) {
          require(degrees[r] <= degrees[c], "substitution raised the degree");
          cols[a][c].emplace_back(r, fam[a](r, c));
        }
  }
  std::vector<std::uint64_t> acc(n);
  for (std::size_t a = 0; a < fam.size(); ++a)
    for (std::size_t b = 0; b < fam.size(); ++b) {
      exactalg::Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), a + b, a);
      const std::uint64_t k = f.from_integer(binom);
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [mid, x] : cols[b][c])
          for (const auto& [r, y] : cols[a][mid]) acc[r] = f.add(acc[r], f.mul(x, y));
        if (a + b < fam.size())
          for (const auto& [r, y] : cols[a + b][c]) acc[r] = f.sub(acc[r], f.mul(k, y));
        require(std::all_of(acc.begin(), acc.end(), [](std::uint64_t x) { return x == 0; }),
                "coordinate action fails the homomorphism identity");
      }
    }
}

}  // namespace detail

/// (x_i(t) f)(x) = f(Ad(x_i(-t)) x); Ad(x_i(-t)) h = h + t alpha_i(h) e_i.
inline AffineCoordinateModule coordinate_module(const RootDatum& d, const rootdata::ChevalleyAlgebra& g,
                                                std::uint64_t p, const std::vector<std::uint64_t>& h,
                                                std::size_t degree_bound,
                                                std::size_t monomial_cap = kDefaultMonomialCap) {
  const exactalg::PrimeField f(p);
  AffineCoordinateModule m;
  m.p = p;
  m.degree_bound = degree_bound;
  const std::size_t nv = d.positive_roots.size();
  m.num_vars = nv;
  exactalg::Integer count;
  mpz_bin_uiui(count.get_mpz_t(), nv + degree_bound, nv);
  if (count > monomial_cap)
    throw CapExceeded("coordinate ring to degree " + std::to_string(degree_bound) + " has " + count.get_str() +
                      " monomials, cap " + std::to_string(monomial_cap));
  m.monomials = detail::monomials_up_to(nv, degree_bound);
  for (std::size_t k = 0; k < m.monomials.size(); ++k) {
    const auto& a = m.monomials[k];
    m.index[a] = k;
    std::size_t deg = 0;
    Weight w = d.zero();
    for (std::size_t b = 0; b < nv; ++b) {
      deg += static_cast<std::size_t>(a[b]);
      w = rootdata::add(w, d.positive_roots[b].weight, -a[b]);
    }
    m.degrees.push_back(deg);
    m.weights.push_back(std::move(w));
  }

  const auto act = adjoint_action_polynomials(d, g, p, false);
  const auto simple = simple_root_indices(d);
  for (int i = 0; i < d.rank; ++i) {
    const auto& powers = act.coeffs[i];
    std::uint64_t alpha_h = 0;
    for (std::size_t k = 0; k < h.size(); ++k)
      alpha_h = f.add(alpha_h, f.mul(f.from_signed(d.simple_roots[i][k]), h[k] % p));
    // y'_gamma = sum_m (-t)^m sum_beta A^(m)[gamma][beta] y_beta + t alpha_i(h) [gamma = alpha_i].
    std::vector<detail::Poly> sub(nv);
    for (std::size_t gam = 0; gam < nv; ++gam) {
      for (std::size_t mm = 0; mm < powers.size(); ++mm)
        for (std::size_t b = 0; b < nv; ++b) {
          std::uint64_t c = powers[mm](g.e(gam), g.e(b));
          if (c == 0) continue;
          if (mm % 2 == 1) c = f.neg(c);
          Exponent key(nv + 1, 0);
          key[0] = static_cast<int>(mm);
          key[1 + b] = 1;
          sub[gam][key] = f.add(sub[gam][key], c);
        }
      if (gam == simple[i] && alpha_h != 0) {
        Exponent key(nv + 1, 0);
        key[0] = 1;
        sub[gam][key] = f.add(sub[gam][key], alpha_h);
      }
    }
    std::vector<MatrixFp> coeffs;
    for (std::size_t col = 0; col < m.dim(); ++col) {
      detail::Poly acc{{Exponent(nv + 1, 0), 1}};
      for (std::size_t gam = 0; gam < nv; ++gam)
        for (int e = 0; e < m.monomials[col][gam]; ++e) acc = detail::multiply(acc, sub[gam], f);
      for (const auto& [key, c] : acc) {
        const auto s = static_cast<std::size_t>(key[0]);
        while (coeffs.size() <= s) coeffs.emplace_back(p, m.dim(), m.dim());
        Exponent y(key.begin() + 1, key.end());
        auto it = m.index.find(y);
        require(it != m.index.end(), "substitution raised the polynomial degree");
        coeffs[s].add_to(it->second, col, c);
      }
    }
    require(!coeffs.empty() && coeffs[0] == MatrixFp::identity(p, m.dim()), "t^0 coefficient is not the identity");
    m.action.push_back(std::move(coeffs));
  }

  for (const auto& fam : m.action) detail::check_homomorphism(fam, m.degrees, f);
  return m;
}

inline AffineCoordinateModule coordinate_module(const RootDatum& d, std::uint64_t p,
                                                const std::vector<std::uint64_t>& h, std::size_t degree_bound,
                                                std::size_t monomial_cap = kDefaultMonomialCap) {
  return coordinate_module(d, rootdata::chevalley_algebra(d), p, h, degree_bound, monomial_cap);
}

}  // namespace bkclab::invmodel
