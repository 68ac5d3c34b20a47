#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkclab/bkfilt/family.hpp"
#include "bkclab/qanalogue/qpolynomial.hpp"

namespace bkclab::bkfilt {

using qanalogue::QPolynomial;

struct FiltrationReport {
  Weight lambda, mu;
  std::uint64_t p = 0;
  std::vector<std::size_t> dims;     // dims[n + 1] = dim F_n on the mu weight space, n = -1..N
  std::vector<std::size_t> graded;   // g_n, n = 0..N
  QPolynomial jump;                  // sum g_n q^n
  std::map<std::int64_t, std::size_t> costalk;
  std::vector<MatrixFp> bases;       // bases[n + 1]: columns span F_n in module coordinates
  std::map<std::string, bool> flags;

  std::size_t dim_F(long n) const { return dims.at(static_cast<std::size_t>(n + 1)); }
  std::size_t weight_dim() const { return dims.back(); }
};

/// Pairs (2n - dim Gr^mu, g_n) for nonzero g_n; needs dominant mu.
inline std::map<std::int64_t, std::size_t> costalk_prediction(const FiltrationReport& r, const RootDatum& d) {
  std::map<std::int64_t, std::size_t> out;
  if (r.weight_dim() == 0) return out;
  const std::int64_t dg = rootdata::dim_gr(d, r.mu);
  for (std::size_t n = 0; n < r.graded.size(); ++n) {
    if (r.graded[n] == 0) continue;
    const std::int64_t degree = 2 * static_cast<std::int64_t>(n) - dg;
    require(((degree - dg) % 2) == 0, "costalk degree parity differs from dim Gr");
    out[degree] = r.graded[n];
  }
  return out;
}

/// F_n on the mu weight space: joint kernel of X_j for n < j <= N.
inline FiltrationReport bk_filtration(const RootDatum& d, const DividedPowerFamily& f, const Weight& mu) {
  const std::uint64_t p = f.p();
  const auto idx = f.module.weight_space(mu);
  if (idx.empty()) throw InvalidArgument("weight " + rootdata::to_string(mu) + " does not occur in the module");
  const std::size_t n = f.module.dim();
  const std::size_t N = f.N;
  FiltrationReport r;
  r.mu = mu;
  r.p = p;
  if (f.module.highest_weight) r.lambda = *f.module.highest_weight;

  // Beyond ht(lambda - mu) the operators vanish on this weight space.
  std::size_t bound = N;
  if (f.module.highest_weight) {
    auto ht = d.height(rootdata::add(*f.module.highest_weight, mu, -1));
    if (ht && *ht >= 0) bound = std::min<std::size_t>(N, static_cast<std::size_t>(*ht));
  }
  std::vector<std::size_t> cols(idx.begin(), idx.end());
  std::vector<std::size_t> all_rows(n);
  for (std::size_t k = 0; k < n; ++k) all_rows[k] = k;
  for (std::size_t j = bound + 1; j <= N; ++j)
    require(f.X[j].select(all_rows, cols).is_zero(), "divided power nonzero beyond the weight height bound");

  r.dims.assign(N + 2, 0);
  r.bases.assign(N + 2, MatrixFp(p, n, 0));
  MatrixFp stacked(p, 0, idx.size());
  for (long m = static_cast<long>(N); m >= -1; --m) {
    const auto j = static_cast<std::size_t>(m + 1);
    if (j <= N && j <= bound) stacked = exactalg::vconcat(stacked, f.X[j].select(all_rows, cols));
    MatrixFp ker = stacked.rows() == 0 ? MatrixFp::identity(p, idx.size()) : exactalg::rank_kernel_Fp(stacked).kernel;
    MatrixFp embedded(p, n, ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c)
      for (std::size_t k = 0; k < idx.size(); ++k) embedded.set(idx[k], c, ker(k, c));
    r.dims[j] = ker.cols();
    r.bases[j] = std::move(embedded);
  }
  require(r.dims[0] == 0, "F_{-1} is nonzero");
  require(r.dims.back() == idx.size(), "F_N is not the whole weight space");
  std::vector<std::int64_t> jump;
  for (std::size_t m = 0; m <= N; ++m) {
    require(r.dims[m + 1] >= r.dims[m], "filtration is not monotone");
    r.graded.push_back(r.dims[m + 1] - r.dims[m]);
    jump.push_back(static_cast<std::int64_t>(r.graded.back()));
  }
  r.jump = QPolynomial(std::move(jump));
  if (d.is_dominant(mu)) r.costalk = costalk_prediction(r, d);
  return r;
}

}  // namespace bkclab::bkfilt
