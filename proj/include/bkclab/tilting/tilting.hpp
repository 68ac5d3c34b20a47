#pragma once

#include <random>
#include <string>
#include <vector>

#include "bkclab/tilting/decompose.hpp"

namespace bkclab::tilting {

using rootdata::RootDatum;

/// T(lambda) together with how it was obtained.
struct TiltingModule {
  ModularModule module;
  Weight lambda;
  std::string route;  // lowest-alcove | tensor-split
  std::string label;  // T(lambda)
  // Tensor route only: factors of the ambient tensor product and the summand inside it.
  std::vector<Weight> factors;
  MatrixFp inclusion, projection;
  std::vector<std::string> steps;
};

inline std::string tilting_label(const Weight& lambda) { return "T" + rootdata::to_string(lambda); }

/// Largest value of <lambda + rho, beta^vee> over the positive roots.
inline std::int64_t max_coroot_pairing(const RootDatum& d, const Weight& lambda) {
  const Weight lr = rootdata::add(lambda, d.rho);
  std::int64_t best = 0;
  for (const auto& beta : d.positive_roots) best = std::max(best, rootdata::dot(beta.coroot, lr));
  return best;
}

inline bool in_lowest_alcove(const RootDatum& d, std::uint64_t p, const Weight& lambda) {
  return max_coroot_pairing(d, lambda) <= static_cast<std::int64_t>(p);
}

inline TiltingModule lowest_alcove_tilting(const RootDatum& d, std::uint64_t p, const Weight& lambda,
                                           std::size_t dimension_cap = repbuild::kDefaultDimensionCap) {
  d.check_weight(lambda);
  if (!d.is_dominant(lambda)) throw InvalidArgument("tilting module needs a dominant weight");
  const auto pairing = max_coroot_pairing(d, lambda);
  if (pairing > static_cast<std::int64_t>(p))
    throw RegimeViolated("<lambda+rho, beta^vee> = " + std::to_string(pairing) + " exceeds p = " + std::to_string(p) +
                         " for " + rootdata::to_string(lambda));
  TiltingModule t;
  t.module = repbuild::weyl_module(d, lambda, p, dimension_cap);
  t.lambda = lambda;
  t.route = "lowest-alcove";
  t.label = tilting_label(lambda);
  return t;
}

/// Fundamental weights in increasing index, each repeated by its coefficient, then the determinant twist for GL.
inline std::vector<Weight> tensor_factors(const RootDatum& d, const Weight& lambda) {
  const auto coeffs = rootdata::fundamental_coordinates(d, lambda);
  std::vector<Weight> out;
  for (int i = 0; i < d.rank; ++i)
    for (std::int64_t k = 0; k < coeffs[i]; ++k) out.push_back(d.fundamental_weights[i]);
  if (d.is_gl() && coeffs.back() != 0) out.push_back(Weight(d.lattice_dim, coeffs.back()));
  return out;
}

inline ModularModule tensor_of_factors(const RootDatum& d, std::uint64_t p, const std::vector<Weight>& factors,
                                       std::size_t dimension_cap = repbuild::kDefaultDimensionCap) {
  ModularModule m = repbuild::trivial_module(d, p);
  for (const auto& w : factors) {
    m = repbuild::tensor(m, repbuild::weyl_module(d, w, p, dimension_cap));
    if (m.dim() > dimension_cap) throw CapExceeded("tensor product dimension exceeds cap");
  }
  return m;
}

/// T(lambda) as the indecomposable summand through lambda of a tensor product of fundamentals (GL and type A).
inline TiltingModule extract_tilting(const RootDatum& d, std::uint64_t p, const Weight& lambda, std::mt19937_64& rng,
                                     std::size_t dimension_cap = repbuild::kDefaultDimensionCap) {
  d.check_weight(lambda);
  if (!d.is_dominant(lambda)) throw InvalidArgument("tilting module needs a dominant weight");
  if (d.spec.family != rootdata::Family::GL && d.spec.family != rootdata::Family::A)
    throw RegimeViolated("tensor route only supports GL and type A, got " + d.spec.name());
  if (p < static_cast<std::uint64_t>(d.coxeter_number))
    throw RegimeViolated("tensor route needs p >= h = " + std::to_string(d.coxeter_number));

  TiltingModule t;
  t.lambda = lambda;
  t.route = "tensor-split";
  t.label = tilting_label(lambda);
  t.factors = tensor_factors(d, lambda);
  const ModularModule ambient = tensor_of_factors(d, p, t.factors, dimension_cap);
  require(ambient.weight_space(lambda).size() == 1, "lambda is not a simple weight of the tensor product");

  const Decomposition dec = fitting_split(ambient, rng);
  const Summand* chosen = nullptr;
  for (const auto& s : dec.summands)
    if (!s.module.weight_space(lambda).empty()) chosen = &s;
  require(chosen != nullptr, "no summand contains the highest weight");
  if (!is_indecomposable(end_algebra(chosen->module)))
    throw InternalError("indecomposability certification failed for " + t.label);
  t.module = chosen->module;
  t.module.highest_weight = lambda;
  t.inclusion = chosen->inclusion;
  t.projection = chosen->projection;
  t.steps = dec.steps;
  t.steps.insert(t.steps.begin(), "tensor order:" + [&] {
    std::string s;
    for (const auto& w : t.factors) s += " " + rootdata::to_string(w);
    return s;
  }());
  return t;
}

/// Lowest-alcove reduction when it applies, the tensor route otherwise.
inline TiltingModule build_tilting(const RootDatum& d, std::uint64_t p, const Weight& lambda, std::mt19937_64& rng,
                                   std::size_t dimension_cap = repbuild::kDefaultDimensionCap) {
  if (in_lowest_alcove(d, p, lambda)) return lowest_alcove_tilting(d, p, lambda, dimension_cap);
  return extract_tilting(d, p, lambda, rng, dimension_cap);
}

}  // namespace bkclab::tilting
