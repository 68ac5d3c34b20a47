#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkclab/rootdata/chevalley.hpp"

namespace bkclab::rootdata {

/// Runtime check of the validity conditions for a single group factor at characteristic p.
struct HypothesisReport {
  GroupSpec spec;
  bool p_good = false;
  bool form_nondegenerate = false;
  bool t_adapted_exists = false;
  bool p_at_least_coxeter = false;
  bool verdict = false;
  std::string verdict_label = "artifact validity";
  std::optional<std::vector<Rational>> h;  // cocharacter coordinates; residues in [0, p) when p > 0
};

/// h with alpha_i(h) = 1 for every simple root, free coordinates set to zero.
inline std::optional<std::vector<Rational>> solve_t_adapted(const RootDatum& d, std::uint64_t p) {
  const auto r = static_cast<std::size_t>(d.rank);
  const auto n = static_cast<std::size_t>(d.lattice_dim);
  if (p == 0) {
    MatrixQ a(r, n), b(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < n; ++k) a(i, k) = d.simple_roots[i][k];
      b(i, 0) = 1;
    }
    auto x = exactalg::solve(a, b);
    if (!x) return std::nullopt;
    return x->column(0);
  }
  exactalg::MatrixFp a(p, r, n), b(p, r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < n; ++k) a.set(i, k, a.field().from_signed(d.simple_roots[i][k]));
    b.set(i, 0, 1);
  }
  auto x = exactalg::solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Rational> h;
  for (std::size_t k = 0; k < n; ++k) h.emplace_back(static_cast<unsigned long>((*x)(k, 0)));
  return h;
}

/// Gram matrix of the trace form of the defining module on the Chevalley basis.
inline MatrixQ trace_form_gram(const ChevalleyAlgebra& g) {
  const std::size_t dim = g.dim();
  MatrixQ gram(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) {
      const MatrixQ prod = g.defining[a] * g.defining[b];
      Rational t = 0;
      for (std::size_t k = 0; k < prod.rows(); ++k) t += prod(k, k);
      gram(a, b) = gram(b, a) = t;
    }
  return gram;
}

inline HypothesisReport check_hypotheses(const GroupSpec& spec) {
  const RootDatum d = build_root_datum(spec);
  const ChevalleyAlgebra g = chevalley_algebra(d);
  HypothesisReport rep;
  rep.spec = spec;
  const std::uint64_t p = spec.p;
  const auto bad = bad_primes(spec.family);
  rep.p_good = std::find(bad.begin(), bad.end(), p) == bad.end();
  const MatrixQ gram = trace_form_gram(g);
  if (p == 0)
    rep.form_nondegenerate = exactalg::rank(gram) == gram.rows();
  else
    rep.form_nondegenerate = exactalg::rank(exactalg::p_integral_reduce(gram, p)) == gram.rows();
  rep.h = solve_t_adapted(d, p);
  rep.t_adapted_exists = rep.h.has_value();
  rep.p_at_least_coxeter = p == 0 || p >= static_cast<std::uint64_t>(d.coxeter_number);
  rep.verdict = rep.p_good && rep.form_nondegenerate && rep.t_adapted_exists && rep.p_at_least_coxeter;
  return rep;
}

}  // namespace bkclab::rootdata
