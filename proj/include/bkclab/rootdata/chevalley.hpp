#pragma once

#include <string>
#include <vector>

#include "bkclab/exactalg/hnf.hpp"
#include "bkclab/repbuild/highest_weight.hpp"
#include "bkclab/rootdata/root_datum.hpp"

namespace bkclab::rootdata {

using exactalg::MatrixZ;

/// Chevalley basis {torus, e_beta, f_beta} of Lie(G) realized in the defining module.
///
/// Basis order: torus coordinates (lattice_dim of them), then e_beta and f_beta for the positive
/// roots in the datum's order. For GL the torus basis is E_kk; otherwise the simple coroots.
struct ChevalleyAlgebra {
  std::size_t torus_dim = 0;
  std::size_t num_positive = 0;
  std::vector<std::string> labels;
  std::vector<MatrixQ> defining;  // matrices of the basis in the defining module
  std::vector<MatrixZ> ad;        // ad[a](c, b): coefficient of x_c in [x_a, x_b]

  std::size_t dim() const { return torus_dim + 2 * num_positive; }
  std::size_t torus(std::size_t k) const { return k; }
  std::size_t e(std::size_t root) const { return torus_dim + root; }
  std::size_t f(std::size_t root) const { return torus_dim + num_positive + root; }
  /// The Borel subalgebra is spanned by the first borel_dim() basis vectors.
  std::size_t borel_dim() const { return torus_dim + num_positive; }

  /// Structure constant c with [x_a, x_b] = ... + c x_c.
  const exactalg::Integer& bracket_coeff(std::size_t a, std::size_t b, std::size_t c) const { return ad[a](c, b); }
};

inline MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

/// Highest weight of the defining module used to realize the Lie algebra.
inline Weight defining_weight(const RootDatum& d) {
  Weight w = d.zero();
  w[0] = 1;
  return w;
}

inline ChevalleyAlgebra chevalley_algebra(const RootDatum& d) {
  const auto v = repbuild::build_irreducible_Q(d, defining_weight(d));
  const std::size_t n = v.dim();
  const auto basis_weights = v.basis_weights();
  ChevalleyAlgebra g;
  g.torus_dim = static_cast<std::size_t>(d.lattice_dim);
  g.num_positive = d.positive_roots.size();
  const std::size_t npos = g.num_positive;

  for (std::size_t k = 0; k < g.torus_dim; ++k) {
    MatrixQ t(n, n);
    if (d.is_gl()) {
      for (std::size_t s = 0; s < n; ++s) t(s, s) = basis_weights[s][k];
      g.labels.push_back("E" + std::to_string(k + 1) + std::to_string(k + 1));
    } else {
      t = v.h[k];
      g.labels.push_back("h" + std::to_string(k + 1));
    }
    g.defining.push_back(std::move(t));
  }

  std::vector<MatrixQ> e(npos), f(npos);
  for (std::size_t r = 0; r < npos; ++r) {
    const auto& beta = d.positive_roots[r];
    if (beta.height == 1) {
      const int i = static_cast<int>(std::find(beta.simple.begin(), beta.simple.end(), 1) - beta.simple.begin());
      e[r] = v.e[i];
      f[r] = v.f[i];
      continue;
    }
    bool done = false;
    for (int i = 0; i < d.rank && !done; ++i) {
      auto gamma = beta.simple;
      if (gamma[i] == 0) continue;
      gamma[i] -= 1;
      auto gi = d.root_index(gamma);
      if (!gi) continue;
      int q = 0;
      for (auto down = gamma;;) {
        down[i] -= 1;
        if (!d.root_index(down)) break;
        ++q;
      }
      const Rational scale(1, q + 1);
      e[r] = commutator(v.e[i], e[*gi]) * scale;
      f[r] = commutator(f[*gi], v.f[i]) * scale;
      done = true;
    }
    require(done, "root has no simple predecessor");
  }
  for (std::size_t r = 0; r < npos; ++r) {
    g.defining.push_back(e[r]);
    g.labels.push_back("e" + std::to_string(r + 1));
  }
  for (std::size_t r = 0; r < npos; ++r) {
    g.defining.push_back(f[r]);
    g.labels.push_back("f" + std::to_string(r + 1));
  }

  // [e_beta, f_beta] = h_beta.
  for (std::size_t r = 0; r < npos; ++r) {
    MatrixQ hb(n, n);
    for (std::size_t k = 0; k < g.torus_dim; ++k)
      if (d.positive_roots[r].coroot[k] != 0) hb += g.defining[k] * Rational(d.positive_roots[r].coroot[k]);
    require(commutator(e[r], f[r]) == hb, "[e_beta, f_beta] differs from the coroot");
  }

  const std::size_t dim = g.dim();
  std::vector<std::vector<Rational>> flat;
  for (const auto& x : g.defining) flat.push_back(x.data());
  exactalg::CoordinateSolver<MatrixQ> solver(MatrixQ::from_columns(n * n, flat));
  g.ad.assign(dim, MatrixZ(dim, dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      auto c = solver.coordinates(commutator(g.defining[a], g.defining[b]).data());
      require(c.has_value(), "basis not closed under the bracket");
      for (std::size_t k = 0; k < dim; ++k) {
        require((*c)[k].get_den() == 1, "non-integral structure constant");
        g.ad[a](k, b) = (*c)[k].get_num();
      }
    }

  // N_{alpha,beta} = +-(q+1) for roots alpha, beta with alpha + beta a root.
  struct Signed {
    std::vector<std::int64_t> k;
    std::size_t index;
  };
  std::vector<Signed> roots;
  for (std::size_t r = 0; r < npos; ++r) {
    roots.push_back({d.positive_roots[r].simple, g.e(r)});
    auto neg = d.positive_roots[r].simple;
    for (auto& x : neg) x = -x;
    roots.push_back({neg, g.f(r)});
  }
  auto find_root = [&](const std::vector<std::int64_t>& k) -> const Signed* {
    for (const auto& s : roots)
      if (s.k == k) return &s;
    return nullptr;
  };
  for (const auto& a : roots)
    for (const auto& b : roots) {
      auto sum = a.k;
      for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += b.k[t];
      const Signed* c = find_root(sum);
      if (!c) continue;
      int q = 0;
      for (auto down = b.k;;) {
        for (std::size_t t = 0; t < down.size(); ++t) down[t] -= a.k[t];
        if (!find_root(down)) break;
        ++q;
      }
      const auto& coeff = g.bracket_coeff(a.index, b.index, c->index);
      require(abs(coeff) == q + 1, "structure constant is not +-(q+1)");
    }
  return g;
}

}  // namespace bkclab::rootdata
