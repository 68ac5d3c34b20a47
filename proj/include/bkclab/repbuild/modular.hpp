#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkclab/exactalg/prime_field.hpp"
#include "bkclab/repbuild/lattice.hpp"

namespace bkclab::repbuild {

using exactalg::MatrixFp;

/// Finite-dimensional module over F_p with the simple divided powers and torus weights.
struct ModularModule {
  std::uint64_t p = 2;
  std::vector<Weight> weights;                      // weight of each basis vector
  std::vector<std::vector<MatrixFp>> raise, lower;  // [i][m], m = 0 is the identity, trailing zeros trimmed
  std::string provenance;                           // weyl-reduction | tensor | summand
  std::optional<Weight> highest_weight;

  std::size_t dim() const { return weights.size(); }
  int rank() const { return static_cast<int>(raise.size()); }

  MatrixFp raise_power(int i, std::size_t m) const {
    return m < raise[i].size() ? raise[i][m] : MatrixFp(p, dim(), dim());
  }
  MatrixFp lower_power(int i, std::size_t m) const {
    return m < lower[i].size() ? lower[i][m] : MatrixFp(p, dim(), dim());
  }

  /// Basis indices of each weight space.
  std::map<Weight, std::vector<std::size_t>> weight_spaces() const {
    std::map<Weight, std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < weights.size(); ++k) out[weights[k]].push_back(k);
    return out;
  }

  std::vector<std::size_t> weight_space(const Weight& mu) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < weights.size(); ++k)
      if (weights[k] == mu) out.push_back(k);
    return out;
  }

  /// All generator matrices with m >= 1.
  std::vector<MatrixFp> generators() const {
    std::vector<MatrixFp> g;
    for (const auto& fam : {&raise, &lower})
      for (const auto& per_root : *fam)
        for (std::size_t m = 1; m < per_root.size(); ++m) g.push_back(per_root[m]);
    return g;
  }
};

using Character = std::map<Weight, std::size_t>;

inline Character character(const ModularModule& m) {
  Character c;
  for (const auto& w : m.weights) ++c[w];
  return c;
}

inline Character character(const HighestWeightModuleQ& m) {
  Character c;
  for (std::size_t b = 0; b < m.weights.size(); ++b) c[m.weights[b]] = m.size[b];
  return c;
}

namespace detail {

inline void trim_zero_tail(std::vector<MatrixFp>& powers) {
  while (powers.size() > 1 && powers.back().is_zero()) powers.pop_back();
}

}  // namespace detail

/// Reduction of the lattice modulo p: the Weyl module.
inline ModularModule reduce_mod_p(const AdmissibleLattice& l, std::uint64_t p) {
  ModularModule m;
  m.p = p;
  m.weights = l.module.basis_weights();
  for (const auto& fam : l.raise) {
    std::vector<MatrixFp> red;
    for (const auto& x : fam) red.push_back(exactalg::reduce_integral(x, p));
    detail::trim_zero_tail(red);
    m.raise.push_back(std::move(red));
  }
  for (const auto& fam : l.lower) {
    std::vector<MatrixFp> red;
    for (const auto& x : fam) red.push_back(exactalg::reduce_integral(x, p));
    detail::trim_zero_tail(red);
    m.lower.push_back(std::move(red));
  }
  m.provenance = "weyl-reduction";
  m.highest_weight = l.module.lambda;
  return m;
}

/// One-dimensional module of the given weight.
inline ModularModule trivial_module(const RootDatum& d, std::uint64_t p, Weight w = {}) {
  ModularModule m;
  m.p = p;
  m.weights = {w.empty() ? d.zero() : w};
  m.raise.assign(d.rank, {MatrixFp::identity(p, 1)});
  m.lower.assign(d.rank, {MatrixFp::identity(p, 1)});
  m.provenance = "weyl-reduction";
  m.highest_weight = m.weights[0];
  return m;
}

namespace detail {

inline std::vector<MatrixFp> convolve(const std::vector<MatrixFp>& a, const std::vector<MatrixFp>& b, std::size_t da,
                                      std::size_t db, std::uint64_t p) {
  std::vector<MatrixFp> out;
  const std::size_t top = a.size() + b.size() - 2;
  for (std::size_t m = 0; m <= top; ++m) {
    MatrixFp acc(p, da * db, da * db);
    for (std::size_t r = 0; r <= m; ++r) {
      const std::size_t s = m - r;
      if (r < a.size() && s < b.size()) acc = acc + exactalg::kron(a[r], b[s]);
    }
    out.push_back(std::move(acc));
  }
  trim_zero_tail(out);
  return out;
}

}  // namespace detail

/// Tensor product through the comultiplication of divided powers.
inline ModularModule tensor(const ModularModule& a, const ModularModule& b) {
  if (a.p != b.p) throw InvalidArgument("tensor of modules over different primes");
  if (a.rank() != b.rank()) throw InvalidArgument("tensor of modules for different groups");
  ModularModule m;
  m.p = a.p;
  for (const auto& wa : a.weights)
    for (const auto& wb : b.weights) m.weights.push_back(rootdata::add(wa, wb));
  for (int i = 0; i < a.rank(); ++i) {
    m.raise.push_back(detail::convolve(a.raise[i], b.raise[i], a.dim(), b.dim(), a.p));
    m.lower.push_back(detail::convolve(a.lower[i], b.lower[i], a.dim(), b.dim(), a.p));
  }
  m.provenance = "tensor";
  if (a.highest_weight && b.highest_weight) m.highest_weight = rootdata::add(*a.highest_weight, *b.highest_weight);
  return m;
}

/// Full pipeline V(lambda) -> lattice -> F_p.
inline ModularModule weyl_module(const RootDatum& d, const Weight& lambda, std::uint64_t p,
                                 std::size_t dimension_cap = kDefaultDimensionCap) {
  return reduce_mod_p(minimal_lattice(build_irreducible_Q(d, lambda, dimension_cap), d), p);
}

}  // namespace bkclab::repbuild
