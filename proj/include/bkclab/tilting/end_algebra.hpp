#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bkclab/exactalg/linear_algebra.hpp"
#include "bkclab/repbuild/modular.hpp"

namespace bkclab::tilting {

using exactalg::MatrixFp;
using repbuild::ModularModule;
using rootdata::Weight;

/// Endomorphisms commuting with the torus and every divided-power generator.
struct EndAlgebra {
  ModularModule module;
  std::vector<MatrixFp> basis;
  std::vector<std::vector<std::vector<std::uint64_t>>> table;  // table[a][b]: coordinates of basis[a] * basis[b]

  std::size_t dim() const { return basis.size(); }
  std::uint64_t p() const { return module.p; }

  MatrixFp element(const std::vector<std::uint64_t>& coeffs) const {
    MatrixFp x(module.p, module.dim(), module.dim());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k]) x = x + coeffs[k] * basis[k];
    return x;
  }

  /// Coordinates of a matrix lying in the algebra.
  std::optional<std::vector<std::uint64_t>> coordinates(const MatrixFp& x) const {
    if (basis.empty()) return x.is_zero() ? std::optional(std::vector<std::uint64_t>{}) : std::nullopt;
    return solver().coordinates(x.raw().data());
  }

 private:
  const exactalg::CoordinateSolver<MatrixFp>& solver() const {
    if (!solver_) {
      std::vector<std::vector<std::uint64_t>> flat;
      for (const auto& b : basis) flat.push_back(b.raw().data());
      solver_ = std::make_shared<exactalg::CoordinateSolver<MatrixFp>>(
          MatrixFp::from_columns(module.p, module.dim() * module.dim(), flat));
    }
    return *solver_;
  }
  mutable std::shared_ptr<exactalg::CoordinateSolver<MatrixFp>> solver_;
};

inline bool commutes(const MatrixFp& a, const MatrixFp& b) { return a * b == b * a; }

inline EndAlgebra end_algebra(const ModularModule& m) {
  const std::uint64_t p = m.p;
  const std::size_t n = m.dim();
  EndAlgebra out;
  out.module = m;
  if (n == 0) return out;

  // Unknowns: X(r, c) for r, c in the same weight space.
  std::vector<std::vector<std::size_t>> var(n, std::vector<std::size_t>(n, SIZE_MAX));
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  const auto spaces = m.weight_spaces();
  for (const auto& [w, idx] : spaces)
    for (auto r : idx)
      for (auto c : idx) {
        var[r][c] = entries.size();
        entries.push_back({r, c});
      }
  const exactalg::PrimeField field(p);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  std::vector<std::map<std::size_t, std::uint64_t>> rows;
  auto add = [&](std::size_t r, std::size_t c, std::size_t v, std::uint64_t coeff) {
    auto [it, fresh] = row_of.try_emplace({r, c}, rows.size());
    if (fresh) rows.emplace_back();
    auto& slot = rows[it->second][v];
    slot = field.add(slot, coeff);
  };
  const auto gens = m.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    row_of.clear();
    const MatrixFp& G = gens[g];
    // (G X - X G)(r, c) = 0.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t v = G(r, k);
        if (v == 0) continue;
        for (auto c : spaces.at(m.weights[k])) add(r, c, var[k][c], v);
        for (auto c : spaces.at(m.weights[r])) add(c, k, var[c][r], field.neg(v));
      }
  }
  MatrixFp system(p, rows.size(), entries.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [v, coeff] : rows[i]) system.set(i, v, coeff);
  const auto kernel = exactalg::rank_kernel_Fp(system).kernel;

  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    MatrixFp x(p, n, n);
    for (std::size_t v = 0; v < entries.size(); ++v) x.set(entries[v].first, entries[v].second, kernel(v, k));
    out.basis.push_back(std::move(x));
  }
  for (const auto& x : out.basis)
    for (const auto& G : gens) require(commutes(x, G), "endomorphism fails to commute with a generator");

  const std::size_t dim = out.basis.size();
  out.table.assign(dim, std::vector<std::vector<std::uint64_t>>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      auto c = out.coordinates(out.basis[a] * out.basis[b]);
      require(c.has_value(), "endomorphism algebra not closed under multiplication");
      out.table[a][b] = std::move(*c);
    }
  require(out.coordinates(MatrixFp::identity(p, n)).has_value(), "endomorphism algebra lacks the identity");
  return out;
}

}  // namespace bkclab::tilting
