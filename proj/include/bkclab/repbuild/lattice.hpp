#pragma once

#include <vector>

#include "bkclab/exactalg/hnf.hpp"
#include "bkclab/repbuild/highest_weight.hpp"

namespace bkclab::repbuild {

/// Minimal admissible lattice U_Z^- v_lambda with all simple divided powers in lattice coordinates.
struct AdmissibleLattice {
  HighestWeightModuleQ module;
  std::vector<exactalg::LatticeBasis> blocks;  // per weight block of `module`
  MatrixQ basis;                               // columns: lattice basis in module coordinates
  MatrixQ basis_inverse;
  std::vector<std::vector<MatrixZ>> raise, lower;  // [i][m] = e_i^(m), f_i^(m); m = 0 is the identity

  std::size_t dim() const { return module.dim(); }

  /// Rational matrix of an operator on the module, expressed in lattice coordinates.
  MatrixQ to_lattice(const MatrixQ& op) const { return basis_inverse * op * basis; }
};

namespace detail {

inline Rational factorial(std::size_t m) {
  exactalg::Integer f = 1;
  for (std::size_t k = 2; k <= m; ++k) f *= static_cast<unsigned long>(k);
  return Rational(f);
}

/// Divided powers op^m / m! in lattice coordinates for m = 0, 1, ... until the power vanishes.
inline std::vector<MatrixZ> divided_powers_in_lattice(const AdmissibleLattice& l, const MatrixQ& op,
                                                      const char* label) {
  std::vector<MatrixZ> out;
  const std::size_t n = l.dim();
  MatrixQ lat = l.to_lattice(op);
  MatrixQ power = MatrixQ::identity(n);
  for (std::size_t m = 0;; ++m) {
    if (m > 0) {
      power = power * lat;
      if (power.is_zero()) break;
    }
    MatrixQ divided = power;
    if (m > 1) divided /= factorial(m);
    if (!exactalg::is_integral(divided))
      throw InternalError(std::string("divided power of ") + label + " not integral on the lattice at m=" +
                          std::to_string(m));
    out.push_back(exactalg::to_integer(divided));
    if (m > n) throw InternalError("divided powers failed to vanish");
  }
  return out;
}

}  // namespace detail

/// Lattice spanned, weight by weight, by f_i^(a) applied to the lattices of higher weights.
inline AdmissibleLattice minimal_lattice(const HighestWeightModuleQ& m, const RootDatum& d) {
  AdmissibleLattice l;
  l.module = m;
  const std::size_t n = m.dim();
  const int r = m.rank;
  l.basis = MatrixQ(n, n);
  l.basis_inverse = MatrixQ(n, n);

  // Lattice basis columns of each processed block, embedded in module coordinates.
  std::vector<MatrixQ> embedded(m.weights.size());
  for (std::size_t b = 0; b < m.weights.size(); ++b) {
    const std::size_t sz = m.size[b];
    MatrixQ gens(n, 0);
    if (b == 0) {
      gens = MatrixQ(n, 1);
      gens(m.offset[0], 0) = 1;
    } else {
      for (int i = 0; i < r; ++i) {
        for (std::int64_t a = 1;; ++a) {
          auto src = m.block_index.find(rootdata::add(m.weights[b], d.simple_roots[i], a));
          if (src == m.block_index.end()) break;
          // f_i^a applied to the lattice of the block a steps up.
          MatrixQ img = embedded[src->second];
          for (std::int64_t s = 0; s < a; ++s) img = m.f[i] * img;
          img /= detail::factorial(static_cast<std::size_t>(a));
          gens = gens.cols() == 0 ? img : exactalg::hconcat(gens, img);
        }
      }
    }
    MatrixQ local(sz, gens.cols());
    for (std::size_t k = 0; k < sz; ++k)
      for (std::size_t c = 0; c < gens.cols(); ++c) local(k, c) = gens(m.offset[b] + k, c);
    auto lb = exactalg::lattice_from_rational(local);
    require(lb.rank() == sz, "lattice rank does not match weight multiplicity");
    MatrixQ rb = lb.rational_basis();
    MatrixQ inv = exactalg::inverse(rb);
    embedded[b] = MatrixQ(n, sz);
    for (std::size_t k = 0; k < sz; ++k)
      for (std::size_t c = 0; c < sz; ++c) {
        embedded[b](m.offset[b] + k, c) = rb(k, c);
        l.basis(m.offset[b] + k, m.offset[b] + c) = rb(k, c);
        l.basis_inverse(m.offset[b] + k, m.offset[b] + c) = inv(k, c);
      }
    l.blocks.push_back(std::move(lb));
  }

  for (int i = 0; i < r; ++i) {
    l.raise.push_back(detail::divided_powers_in_lattice(l, m.e[i], "e"));
    l.lower.push_back(detail::divided_powers_in_lattice(l, m.f[i], "f"));
  }
  return l;
}

}  // namespace bkclab::repbuild
