#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "bkclab/exactalg/linear_algebra.hpp"
#include "bkclab/invmodel/coordinate_ring.hpp"
#include "bkclab/repbuild/modular.hpp"

namespace bkclab::invmodel {

/// B-module structure of a G-module: weights plus x_i(t) = sum_m t^m e_i^(m).
struct BorelModule {
  std::uint64_t p = 0;
  std::vector<Weight> weights;
  std::vector<std::vector<MatrixFp>> x;  // [i][m]

  std::size_t dim() const { return weights.size(); }
};

inline BorelModule borel_module(const repbuild::ModularModule& m) {
  BorelModule b{m.p, m.weights, m.raise};
  for (const auto& fam : b.x)
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t c = 0; c < fam.size(); ++c) {
        exactalg::Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), a + c, a);
        const MatrixFp rhs = a + c < fam.size() ? binom.get_ui() % m.p * fam[a + c] : MatrixFp(m.p, b.dim(), b.dim());
        require(fam[a] * fam[c] == rhs, "root subgroup action fails the homomorphism identity");
      }
  return b;
}

/// A basis tensor v (x) y^a of total T-weight zero in M (x) k_{-mu} (x) k[h + n].
struct InvariantColumn {
  std::size_t vector = 0;
  std::size_t monomial = 0;
  std::size_t degree = 0;
};

struct InvariantFiltration {
  Weight mu;
  std::uint64_t p = 0;
  std::size_t degree_bound = 0;
  std::size_t module_dim = 0;
  std::vector<InvariantColumn> columns;  // sorted by degree
  std::vector<std::size_t> dims;         // dims[n], n = 0..degree_bound
  std::vector<MatrixFp> invariants;      // invariants[n]: columns span the invariants of degree <= n

  std::size_t dim(std::size_t n) const { return dims.at(n); }
};

namespace detail {

using SparseColumn = std::vector<std::pair<std::size_t, std::uint64_t>>;

inline std::vector<std::vector<SparseColumn>> sparse_columns(const std::vector<MatrixFp>& fam) {
  std::vector<std::vector<SparseColumn>> out(fam.size());
  for (std::size_t m = 0; m < fam.size(); ++m) {
    out[m].resize(fam[m].cols());
    for (std::size_t c = 0; c < fam[m].cols(); ++c)
      for (std::size_t r = 0; r < fam[m].rows(); ++r)
        if (fam[m](r, c) != 0) out[m][c].emplace_back(r, fam[m](r, c));
  }
  return out;
}

}  // namespace detail

/// Filtration by polynomial degree of (M (x) k_{-mu} (x) k[h + n]_{<= d})^B.
inline InvariantFiltration b_invariant_filtration(const BorelModule& m, const AffineCoordinateModule& coords,
                                                  const Weight& mu) {
  const std::uint64_t p = m.p;
  if (coords.p != p) throw InvalidArgument("module and coordinate ring over different primes");
  if (coords.action.size() != m.x.size()) throw InvalidArgument("module and coordinate ring for different ranks");
  const exactalg::PrimeField f(p);
  InvariantFiltration out;
  out.mu = mu;
  out.p = p;
  out.degree_bound = coords.degree_bound;
  out.module_dim = m.dim();

  for (std::size_t a = 0; a < coords.dim(); ++a)
    for (std::size_t v = 0; v < m.dim(); ++v)
      if (rootdata::add(rootdata::add(m.weights[v], mu, -1), coords.weights[a]) == Weight(mu.size(), 0))
        out.columns.push_back({v, a, coords.degrees[a]});
  std::stable_sort(out.columns.begin(), out.columns.end(),
                   [](const auto& x, const auto& y) { return x.degree < y.degree; });

  // C_{i,m} = sum_{r+s=m} e_i^(r) (x) S_{i,s}, m >= 1.
  std::map<std::array<std::size_t, 4>, std::size_t> row_index;
  std::vector<std::map<std::size_t, std::uint64_t>> rows;
  for (std::size_t i = 0; i < m.x.size(); ++i) {
    const auto left = detail::sparse_columns(m.x[i]);
    const auto right = detail::sparse_columns(coords.action[i]);
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
      const auto& col = out.columns[c];
      for (std::size_t r = 0; r < left.size(); ++r)
        for (std::size_t s = 0; s < right.size(); ++s) {
          if (r + s == 0) continue;
          for (const auto& [v2, x] : left[r][col.vector])
            for (const auto& [a2, y] : right[s][col.monomial]) {
              const std::array<std::size_t, 4> key{i, r + s, v2, a2};
              auto [it, fresh] = row_index.try_emplace(key, rows.size());
              if (fresh) rows.emplace_back();
              auto& slot = rows[it->second][c];
              slot = f.add(slot, f.mul(x, y));
            }
        }
    }
  }
  MatrixFp constraints(p, rows.size(), out.columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, x] : rows[r]) constraints.set(r, c, x);

  std::size_t prefix = 0;
  for (std::size_t n = 0; n <= coords.degree_bound; ++n) {
    while (prefix < out.columns.size() && out.columns[prefix].degree <= n) ++prefix;
    std::vector<std::size_t> cols(prefix);
    for (std::size_t k = 0; k < prefix; ++k) cols[k] = k;
    const auto rk = exactalg::rank_kernel_Fp(constraints.select_columns(cols));
    MatrixFp basis(p, out.columns.size(), rk.kernel.cols());
    for (std::size_t k = 0; k < rk.kernel.cols(); ++k)
      for (std::size_t r = 0; r < prefix; ++r) basis.set(r, k, rk.kernel(r, k));
    require((constraints * basis).is_zero(), "invariant basis violates a constraint");
    out.dims.push_back(basis.cols());
    out.invariants.push_back(std::move(basis));
  }
  return out;
}

/// Lambda: evaluation at h, i.e. the constant-term component in M_mu.
inline MatrixFp evaluation_lambda(const InvariantFiltration& inv, const MatrixFp& invariants) {
  MatrixFp out(inv.p, inv.module_dim, invariants.cols());
  for (std::size_t c = 0; c < inv.columns.size(); ++c) {
    if (inv.columns[c].degree != 0) continue;
    for (std::size_t k = 0; k < invariants.cols(); ++k) out.add_to(inv.columns[c].vector, k, invariants(c, k));
  }
  return out;
}

inline MatrixFp evaluation_lambda(const InvariantFiltration& inv, std::size_t n) {
  return evaluation_lambda(inv, inv.invariants.at(n));
}

/// Builds the coordinate ring to degree d (default ht(lambda - mu) + 1) and checks stabilization.
inline InvariantFiltration b_invariant_filtration(const RootDatum& d, const rootdata::ChevalleyAlgebra& g,
                                                  const repbuild::ModularModule& module, const Weight& lambda,
                                                  const std::vector<std::uint64_t>& h, const Weight& mu,
                                                  std::optional<std::size_t> degree_bound = std::nullopt) {
  const std::uint64_t p = module.p;
  if (!regularity_check(d, p, h)) throw HypothesisFailure("h is not regular on n mod " + std::to_string(p));
  auto ht = d.height(rootdata::add(lambda, mu, -1));
  const std::size_t needed = ht && *ht >= 0 ? static_cast<std::size_t>(*ht) : 0;
  const std::size_t deg = degree_bound.value_or(needed + 1);
  if (deg < needed)
    throw InvalidArgument("degree bound " + std::to_string(deg) + " is below ht(lambda - mu) = " +
                          std::to_string(needed));
  auto inv = b_invariant_filtration(borel_module(module), coordinate_module(d, g, p, h, deg), mu);
  for (std::size_t n = needed; n <= deg; ++n)
    require(inv.dims[n] == inv.dims[needed], "invariant dimensions do not stabilize at ht(lambda - mu)");
  return inv;
}

inline InvariantFiltration b_invariant_filtration(const RootDatum& d, const repbuild::ModularModule& module,
                                                  const Weight& lambda, const std::vector<std::uint64_t>& h,
                                                  const Weight& mu,
                                                  std::optional<std::size_t> degree_bound = std::nullopt) {
  return b_invariant_filtration(d, rootdata::chevalley_algebra(d), module, lambda, h, mu, degree_bound);
}

}  // namespace bkclab::invmodel
