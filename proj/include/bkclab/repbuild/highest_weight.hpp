#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bkclab/exactalg/hnf.hpp"
#include "bkclab/exactalg/linear_algebra.hpp"
#include "bkclab/rootdata/root_datum.hpp"

namespace bkclab::repbuild {

using exactalg::MatrixQ;
using exactalg::MatrixZ;
using exactalg::Rational;
using rootdata::RootDatum;
using rootdata::Weight;

constexpr std::size_t kDefaultDimensionCap = 5000;

/// Irreducible characteristic-zero module V(lambda) with a monomial basis, grouped by weight.
struct HighestWeightModuleQ {
  Weight lambda;
  int rank = 0;
  std::vector<Weight> weights;       // distinct weights in construction order
  std::vector<std::size_t> offset;   // first basis index of each weight block
  std::vector<std::size_t> size;     // multiplicity of each weight
  std::map<Weight, std::size_t> block_index;
  std::vector<MatrixQ> e, f, h;      // simple Chevalley generators and simple coroots
  std::vector<MatrixQ> gram;         // contravariant form on each weight block

  std::size_t dim() const { return offset.empty() ? 0 : offset.back() + size.back(); }

  std::vector<Weight> basis_weights() const {
    std::vector<Weight> w;
    for (std::size_t b = 0; b < weights.size(); ++b)
      for (std::size_t k = 0; k < size[b]; ++k) w.push_back(weights[b]);
    return w;
  }

  std::size_t multiplicity(const Weight& mu) const {
    auto it = block_index.find(mu);
    return it == block_index.end() ? 0 : size[it->second];
  }
};

/// Builds V(lambda) from the contravariant form on lowering monomials.
inline HighestWeightModuleQ build_irreducible_Q(const RootDatum& d, const Weight& lambda,
                                                std::size_t dimension_cap = kDefaultDimensionCap) {
  d.check_weight(lambda);
  if (!d.is_dominant(lambda)) throw InvalidArgument("highest weight " + rootdata::to_string(lambda) + " is not dominant");
  const int r = d.rank;
  HighestWeightModuleQ m;
  m.lambda = lambda;
  m.rank = r;

  // Block-level maps: emap[i][b] : block b -> block of (weight + alpha_i); fmap[i][b] : block b -> weight - alpha_i.
  std::vector<std::map<std::size_t, MatrixQ>> emap(r), fmap(r);
  auto find = [&](const Weight& w) -> std::optional<std::size_t> {
    auto it = m.block_index.find(w);
    if (it == m.block_index.end()) return std::nullopt;
    return it->second;
  };
  std::size_t total = 0;
  auto add_block = [&](const Weight& w, std::size_t sz, MatrixQ gram) {
    m.block_index[w] = m.weights.size();
    m.weights.push_back(w);
    m.offset.push_back(total);
    m.size.push_back(sz);
    m.gram.push_back(std::move(gram));
    total += sz;
    if (total > dimension_cap)
      throw CapExceeded("module dimension exceeds cap " + std::to_string(dimension_cap));
  };

  MatrixQ top(1, 1);
  top(0, 0) = 1;
  add_block(lambda, 1, top);
  for (int i = 0; i < r; ++i) emap[i][0] = MatrixQ(0, 1);

  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    std::vector<Weight> next;
    std::map<Weight, bool> queued;
    for (const auto& nu : level)
      for (int i = 0; i < r; ++i) {
        Weight mu = rootdata::add(nu, d.simple_roots[i], -1);
        if (!queued.count(mu) && !find(mu)) {
          queued[mu] = true;
          next.push_back(mu);
        }
      }
    std::vector<Weight> kept;
    for (const auto& mu : next) {
      // Candidates f_i u for u in the block mu + alpha_i.
      struct Cand {
        int i;
        std::size_t k;
      };
      std::vector<Cand> cands;
      std::vector<std::optional<std::size_t>> up(r);
      for (int i = 0; i < r; ++i) {
        up[i] = find(rootdata::add(mu, d.simple_roots[i]));
        if (up[i])
          for (std::size_t k = 0; k < m.size[*up[i]]; ++k) cands.push_back({i, k});
      }
      if (cands.empty()) continue;
      // ef[i][j] : block(mu + alpha_j) -> block(mu + alpha_i), the operator e_i f_j.
      std::vector<std::vector<MatrixQ>> ef(r, std::vector<MatrixQ>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (!up[i] || !up[j]) continue;
          const std::size_t bi = *up[i], bj = *up[j];
          MatrixQ acc(m.size[bi], m.size[bj]);
          auto both = find(rootdata::add(rootdata::add(mu, d.simple_roots[i]), d.simple_roots[j]));
          if (both) {
            // e_i maps block bj to `both`; f_j maps `both` to bi.
            auto ei = emap[i].find(bj);
            auto fj = fmap[j].find(*both);
            if (ei != emap[i].end() && fj != fmap[j].end()) acc = fj->second * ei->second;
          }
          if (i == j) {
            const Rational c = d.pair(m.weights[bi], i);
            for (std::size_t k = 0; k < m.size[bi]; ++k) acc(k, k) += c;
          }
          ef[i][j] = std::move(acc);
        }
      const std::size_t nc = cands.size();
      MatrixQ gm(nc, nc);
      for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < nc; ++b) {
          const auto& ca = cands[a];
          const auto& cb = cands[b];
          const MatrixQ& g = m.gram[*up[ca.i]];
          const MatrixQ& op = ef[ca.i][cb.i];
          Rational s = 0;
          for (std::size_t t = 0; t < g.cols(); ++t)
            if (sgn(g(ca.k, t)) != 0 && sgn(op(t, cb.k)) != 0) s += g(ca.k, t) * op(t, cb.k);
          gm(a, b) = s;
        }
      require(gm == gm.transpose(), "contravariant form is not symmetric");
      auto basis = exactalg::pivot_columns(gm);
      if (basis.empty()) continue;
      const std::size_t sz = basis.size();
      std::vector<std::size_t> all(nc);
      for (std::size_t a = 0; a < nc; ++a) all[a] = a;
      MatrixQ g_mu = gm.select(basis, basis);
      MatrixQ coords = exactalg::inverse(g_mu) * gm.select(basis, all);  // coordinates of every candidate
      add_block(mu, sz, g_mu);
      const std::size_t b_mu = m.weights.size() - 1;
      for (int j = 0; j < r; ++j) {
        if (!up[j]) continue;
        MatrixQ fj(sz, m.size[*up[j]]);
        for (std::size_t a = 0; a < nc; ++a)
          if (cands[a].i == j)
            for (std::size_t t = 0; t < sz; ++t) fj(t, cands[a].k) = coords(t, a);
        fmap[j][*up[j]] = std::move(fj);
      }
      for (int i = 0; i < r; ++i) {
        if (!up[i]) continue;
        MatrixQ ei(m.size[*up[i]], sz);
        for (std::size_t t = 0; t < sz; ++t) {
          const auto& c = cands[basis[t]];
          for (std::size_t k = 0; k < m.size[*up[i]]; ++k) ei(k, t) = ef[i][c.i](k, c.k);
        }
        emap[i][b_mu] = std::move(ei);
      }
      kept.push_back(mu);
    }
    level = std::move(kept);
  }

  const std::size_t n = m.dim();
  m.e.assign(r, MatrixQ(n, n));
  m.f.assign(r, MatrixQ(n, n));
  m.h.assign(r, MatrixQ(n, n));
  for (int i = 0; i < r; ++i) {
    for (const auto& [b, mat] : emap[i]) {
      auto tgt = find(rootdata::add(m.weights[b], d.simple_roots[i]));
      if (!tgt) continue;
      for (std::size_t s = 0; s < mat.rows(); ++s)
        for (std::size_t t = 0; t < mat.cols(); ++t) m.e[i](m.offset[*tgt] + s, m.offset[b] + t) = mat(s, t);
    }
    for (const auto& [b, mat] : fmap[i]) {
      auto tgt = find(rootdata::add(m.weights[b], d.simple_roots[i], -1));
      if (!tgt) continue;
      for (std::size_t s = 0; s < mat.rows(); ++s)
        for (std::size_t t = 0; t < mat.cols(); ++t) m.f[i](m.offset[*tgt] + s, m.offset[b] + t) = mat(s, t);
    }
    for (std::size_t b = 0; b < m.weights.size(); ++b)
      for (std::size_t k = 0; k < m.size[b]; ++k) m.h[i](m.offset[b] + k, m.offset[b] + k) = d.pair(m.weights[b], i);
  }
  return m;
}

}  // namespace bkclab::repbuild
