#pragma once

#include <map>

#include "bkclab/rootdata/root_datum.hpp"

namespace bkclab::repbuild {

using rootdata::RootDatum;
using rootdata::Weight;

/// Weyl dimension formula.
inline exactalg::Integer weyl_dimension(const RootDatum& d, const Weight& lambda) {
  d.check_weight(lambda);
  if (!d.is_dominant(lambda)) throw InvalidArgument("weyl_dimension needs a dominant weight");
  exactalg::Rational v = 1;
  const Weight shifted = rootdata::add(lambda, d.rho);
  for (const auto& beta : d.positive_roots)
    v *= exactalg::Rational(rootdata::dot(beta.coroot, shifted), rootdata::dot(beta.coroot, d.rho));
  v.canonicalize();
  require(v.get_den() == 1, "Weyl dimension not integral");
  return v.get_num();
}

/// Freudenthal multiplicities of V(lambda), memoized on dominant weights.
class FreudenthalTable {
 public:
  FreudenthalTable(const RootDatum& d, Weight lambda) : d_(d), lambda_(std::move(lambda)) {
    d_.check_weight(lambda_);
    if (!d_.is_dominant(lambda_)) throw InvalidArgument("Freudenthal needs a dominant highest weight");
    shifted_norm_ = d_.inner(rootdata::add(lambda_, d_.rho), rootdata::add(lambda_, d_.rho));
  }

  exactalg::Integer operator()(const Weight& mu) {
    d_.check_weight(mu);
    if (!d_.dominated_by(mu, lambda_)) return 0;
    const Weight nu = d_.dominant_conjugate(mu);
    if (!d_.dominated_by(nu, lambda_)) return 0;
    if (nu == lambda_) return 1;
    if (auto it = memo_.find(nu); it != memo_.end()) return it->second;
    exactalg::Rational sum = 0;
    for (const auto& beta : d_.positive_roots) {
      for (std::int64_t k = 1;; ++k) {
        Weight up = rootdata::add(nu, beta.weight, k);
        if (!d_.dominated_by(up, lambda_)) break;
        const exactalg::Integer m = (*this)(up);
        if (m != 0) sum += exactalg::Rational(m) * d_.inner(up, beta.weight);
      }
    }
    const Weight nr = rootdata::add(nu, d_.rho);
    const exactalg::Rational denom = shifted_norm_ - d_.inner(nr, nr);
    require(sgn(denom) > 0, "Freudenthal denominator vanished");
    exactalg::Rational m = 2 * sum / denom;
    m.canonicalize();
    require(m.get_den() == 1, "Freudenthal multiplicity not integral");
    memo_[nu] = m.get_num();
    return m.get_num();
  }

 private:
  const RootDatum& d_;
  Weight lambda_;
  exactalg::Rational shifted_norm_;
  std::map<Weight, exactalg::Integer> memo_;
};

inline exactalg::Integer freudenthal_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu) {
  return FreudenthalTable(d, lambda)(mu);
}

}  // namespace bkclab::repbuild
