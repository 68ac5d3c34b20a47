#pragma once

#include <random>
#include <string>
#include <vector>

#include "bkclab/exactalg/polynomial_fp.hpp"
#include "bkclab/tilting/locality.hpp"

namespace bkclab::tilting {

using exactalg::PolyFp;

/// Direct summand of a module: inclusion * projection is the projector onto it.
struct Summand {
  ModularModule module;
  MatrixFp inclusion;   // parent dim x summand dim
  MatrixFp projection;  // summand dim x parent dim
  MatrixFp projector() const { return inclusion * projection; }
};

struct Decomposition {
  std::vector<Summand> summands;
  std::vector<std::string> steps;
};

inline constexpr std::size_t kDefaultRandomBudget = 48;

/// Restriction of every structure matrix to the image of an inclusion with left inverse `projection`.
inline ModularModule restrict_module(const ModularModule& m, const MatrixFp& inclusion, const MatrixFp& projection,
                                     const std::vector<Weight>& weights) {
  ModularModule s;
  s.p = m.p;
  s.weights = weights;
  for (const auto* fam : {&m.raise, &m.lower}) {
    auto& out = fam == &m.raise ? s.raise : s.lower;
    for (const auto& per_root : *fam) {
      std::vector<MatrixFp> r;
      for (const auto& x : per_root) r.push_back(projection * x * inclusion);
      repbuild::detail::trim_zero_tail(r);
      out.push_back(std::move(r));
    }
  }
  s.provenance = "summand";
  return s;
}

namespace detail {

/// Kernel of g(phi) computed weight space by weight space, embedded in the module.
inline std::vector<std::pair<std::vector<std::uint64_t>, Weight>> blockwise_kernel(const ModularModule& m,
                                                                                    const MatrixFp& phi,
                                                                                    const PolyFp& g) {
  std::vector<std::pair<std::vector<std::uint64_t>, Weight>> out;
  for (const auto& [w, idx] : m.weight_spaces()) {
    const MatrixFp local = g.evaluate(phi.select(idx, idx));
    const MatrixFp ker = exactalg::rank_kernel_Fp(local).kernel;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      std::vector<std::uint64_t> v(m.dim(), 0);
      for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = ker(k, c);
      out.push_back({std::move(v), w});
    }
  }
  return out;
}

inline PolyFp power(const PolyFp& f, int e) {
  PolyFp r = PolyFp::constant(f.p(), 1);
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

/// Splits m along phi when its characteristic polynomial has two coprime parts.
inline std::optional<std::pair<Summand, Summand>> try_split(const ModularModule& m, const MatrixFp& phi,
                                                            std::string* note) {
  const auto factors = exactalg::factor_squarefree_Fp(exactalg::char_poly_Fp(phi));
  if (factors.size() < 2) return std::nullopt;
  const PolyFp g1 = power(factors[0].poly, factors[0].multiplicity);
  PolyFp g2 = PolyFp::constant(m.p, 1);
  for (std::size_t k = 1; k < factors.size(); ++k) g2 = g2 * power(factors[k].poly, factors[k].multiplicity);
  auto k1 = blockwise_kernel(m, phi, g1);
  auto k2 = blockwise_kernel(m, phi, g2);
  require(k1.size() + k2.size() == m.dim(), "Fitting kernels do not span the module");
  std::vector<std::vector<std::uint64_t>> cols;
  std::vector<Weight> w1, w2;
  for (auto& [v, w] : k1) {
    cols.push_back(v);
    w1.push_back(w);
  }
  for (auto& [v, w] : k2) {
    cols.push_back(v);
    w2.push_back(w);
  }
  const MatrixFp basis = MatrixFp::from_columns(m.p, m.dim(), cols);
  const MatrixFp inv = exactalg::inverse(basis);
  const std::size_t d1 = k1.size(), d2 = k2.size();
  std::vector<std::size_t> first(d1), second(d2), all(m.dim());
  for (std::size_t k = 0; k < d1; ++k) first[k] = k;
  for (std::size_t k = 0; k < d2; ++k) second[k] = d1 + k;
  for (std::size_t k = 0; k < m.dim(); ++k) all[k] = k;
  Summand a, b;
  a.inclusion = basis.select_columns(first);
  b.inclusion = basis.select_columns(second);
  a.projection = inv.select(first, all);
  b.projection = inv.select(second, all);
  a.module = restrict_module(m, a.inclusion, a.projection, w1);
  b.module = restrict_module(m, b.inclusion, b.projection, w2);
  if (note) *note = "factor " + factors[0].poly.to_string() + "^" + std::to_string(factors[0].multiplicity);
  return std::pair{std::move(a), std::move(b)};
}

inline void split_recursive(const ModularModule& m, const MatrixFp& inclusion, const MatrixFp& projection,
                            std::mt19937_64& rng, std::size_t budget, Decomposition& out,
                            const EndAlgebra* known = nullptr) {
  const EndAlgebra end = known ? *known : end_algebra(m);
  const std::size_t k = end.dim();
  std::optional<std::pair<Summand, Summand>> parts;
  std::string note;
  auto attempt = [&](const std::vector<std::uint64_t>& coeffs, const std::string& label) {
    if (parts) return;
    parts = try_split(m, end.element(coeffs), &note);
    if (parts) note = "dim " + std::to_string(m.dim()) + " split by " + label + ", " + note;
  };
  if (k > 1) {
    for (std::size_t a = 0; a < k && !parts; ++a) attempt(detail::unit(k, a), "basis[" + std::to_string(a) + "]");
    for (std::size_t a = 0; a < k && !parts; ++a)
      for (std::size_t b = a + 1; b < k && !parts; ++b) {
        auto c = detail::unit(k, a);
        c[b] = 1;
        attempt(c, "basis[" + std::to_string(a) + "]+basis[" + std::to_string(b) + "]");
      }
    std::uniform_int_distribution<std::uint64_t> coeff(0, m.p - 1);
    for (std::size_t t = 0; t < budget && !parts; ++t) {
      std::vector<std::uint64_t> c(k);
      for (auto& x : c) x = coeff(rng);
      attempt(c, "random[" + std::to_string(t) + "]");
    }
  }
  if (!parts) {
    Summand s{m, inclusion, projection};
    out.summands.push_back(std::move(s));
    return;
  }
  out.steps.push_back(note);
  for (auto* part : {&parts->first, &parts->second})
    split_recursive(part->module, inclusion * part->inclusion, part->projection * projection, rng, budget, out);
}

}  // namespace detail

/// Asserts the projector identities of a decomposition of m.
inline void check_decomposition(const ModularModule& m, const Decomposition& d) {
  const std::size_t n = m.dim();
  MatrixFp total(m.p, n, n);
  std::size_t dims = 0;
  std::vector<MatrixFp> proj;
  for (const auto& s : d.summands) {
    proj.push_back(s.projector());
    dims += s.module.dim();
    total = total + proj.back();
    require(s.projection * s.inclusion == MatrixFp::identity(m.p, s.module.dim()), "summand projection is not a left inverse");
  }
  require(dims == n, "summand dimensions do not add up");
  require(total == MatrixFp::identity(m.p, n), "projectors do not sum to the identity");
  const auto gens = m.generators();
  for (std::size_t a = 0; a < proj.size(); ++a) {
    require(proj[a] * proj[a] == proj[a], "projector is not idempotent");
    for (std::size_t b = 0; b < proj.size(); ++b)
      if (a != b) require((proj[a] * proj[b]).is_zero(), "projectors are not orthogonal");
    for (const auto& g : gens) require(commutes(proj[a], g), "projector does not commute with a generator");
  }
}

/// Fitting decomposition driven by sampled endomorphisms, recursively.
inline Decomposition fitting_split(const ModularModule& m, const EndAlgebra& end, std::mt19937_64& rng,
                                   std::size_t budget = kDefaultRandomBudget) {
  Decomposition d;
  const MatrixFp id = MatrixFp::identity(m.p, m.dim());
  detail::split_recursive(m, id, id, rng, budget, d, &end);
  check_decomposition(m, d);
  return d;
}

inline Decomposition fitting_split(const ModularModule& m, std::mt19937_64& rng,
                                   std::size_t budget = kDefaultRandomBudget) {
  return fitting_split(m, end_algebra(m), rng, budget);
}

}  // namespace bkclab::tilting
