#pragma once

#include "bkclab/qanalogue/kostant.hpp"

namespace bkclab::qanalogue {

/// m^lambda_mu(q) = sum_w (-1)^l(w) P_q(w(lambda + rho) - (mu + rho)).
inline QPolynomial lusztig_q_analogue(const RootDatum& d, const Weight& lambda, const Weight& mu,
                                      std::size_t weyl_cap = 10000) {
  d.check_weight(lambda);
  d.check_weight(mu);
  if (!d.is_dominant(lambda) || !d.is_dominant(mu))
    throw InvalidArgument("q-analogue needs dominant weights, got " + rootdata::to_string(lambda) + " and " +
                          rootdata::to_string(mu));
  auto box = d.simple_coordinates(rootdata::add(lambda, mu, -1));
  if (!box || std::any_of(box->begin(), box->end(), [](std::int64_t x) { return x < 0; })) return {};
  // Every contributing argument is dominated by lambda - mu, so one table covers the whole sum.
  const KostantTable table(d, *box);
  const Weight lr = rootdata::add(lambda, d.rho);
  const Weight mr = rootdata::add(mu, d.rho);
  QPolynomial out;
  for (const auto& w : rootdata::weyl_elements(d, weyl_cap)) {
    const QPolynomial term = table(rootdata::add(w.apply(lr), mr, -1));
    if (term.is_zero()) continue;
    out += term * w.sign;
  }
  return out;
}

}  // namespace bkclab::qanalogue
