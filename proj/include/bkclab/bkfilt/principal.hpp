#pragma once

#include <vector>

#include "bkclab/exactalg/linear_algebra.hpp"
#include "bkclab/rootdata/hypotheses.hpp"

namespace bkclab::bkfilt {

using exactalg::MatrixFp;
using exactalg::MatrixQ;
using exactalg::Rational;
using rootdata::RootDatum;

/// e = sum_i c_i e_{alpha_i} and a torus element h with alpha_i(h) = 1, over F_p.
struct PrincipalPair {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coefficients;  // c_i, nonzero residues
  std::vector<std::uint64_t> h;             // cocharacter coordinates mod p

  bool operator==(const PrincipalPair&) const = default;
};

inline PrincipalPair principal_pair(const RootDatum& d, std::uint64_t p, std::vector<std::uint64_t> coefficients = {}) {
  if (p == 0) throw InvalidArgument("principal pair needs a prime");
  if (coefficients.empty()) coefficients.assign(d.rank, 1);
  if (coefficients.size() != static_cast<std::size_t>(d.rank))
    throw InvalidArgument("need one coefficient per simple root");
  for (auto& c : coefficients) {
    c %= p;
    if (c == 0) throw InvalidArgument("coefficients of a principal nilpotent must be nonzero mod p");
  }
  auto h = rootdata::solve_t_adapted(d, p);
  if (!h) throw HypothesisFailure("no t-adapted h exists for " + d.spec.name() + " at p=" + std::to_string(p));
  PrincipalPair pair;
  pair.p = p;
  pair.coefficients = std::move(coefficients);
  for (const auto& x : *h) pair.h.push_back(x.get_num().get_ui() % p);
  return pair;
}

/// Checks [h, e] = e and rank(ad e) = dim g - dim t on the Chevalley basis mod p.
struct PrincipalCheck {
  bool bracket_ok = false;
  bool principal_ok = false;
  std::size_t ad_e_rank = 0;
};

inline PrincipalCheck check_principal_pair(const RootDatum& d, const rootdata::ChevalleyAlgebra& g,
                                           const PrincipalPair& pair) {
  const std::uint64_t p = pair.p;
  const std::size_t n = g.dim();
  MatrixFp ad_e(p, n, n), ad_h(p, n, n);
  std::vector<std::uint64_t> e_vec(n, 0);
  for (int i = 0; i < d.rank; ++i) {
    const auto r = *d.root_index([&] {
      std::vector<std::int64_t> k(d.rank, 0);
      k[i] = 1;
      return k;
    }());
    ad_e = ad_e + pair.coefficients[i] * exactalg::reduce_integral(g.ad[g.e(r)], p);
    e_vec[g.e(r)] = pair.coefficients[i];
  }
  for (std::size_t k = 0; k < g.torus_dim; ++k)
    ad_h = ad_h + pair.h[k] * exactalg::reduce_integral(g.ad[g.torus(k)], p);
  PrincipalCheck c;
  c.bracket_ok = ad_h * e_vec == e_vec;
  c.ad_e_rank = exactalg::rank(ad_e);
  c.principal_ok = c.ad_e_rank == n - g.torus_dim;
  return c;
}

}  // namespace bkclab::bkfilt
