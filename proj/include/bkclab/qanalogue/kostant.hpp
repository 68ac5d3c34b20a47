#pragma once

#include <functional>
#include <vector>

#include "bkclab/qanalogue/qpolynomial.hpp"
#include "bkclab/rootdata/root_datum.hpp"

namespace bkclab::qanalogue {

using rootdata::RootDatum;
using rootdata::Weight;

inline constexpr std::int64_t kBruteForceHeightCap = 12;

/// q-Kostant partition function on the box 0 <= beta <= bound (simple-root coordinates).
class KostantTable {
 public:
  KostantTable(const RootDatum& d, std::vector<std::int64_t> bound) : d_(&d), bound_(std::move(bound)) {
    std::size_t total = 1;
    stride_.resize(bound_.size());
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      if (bound_[i] < 0) throw InvalidArgument("Kostant table bound must be nonnegative");
      stride_[i] = total;
      total *= static_cast<std::size_t>(bound_[i] + 1);
      if (total > (std::size_t{1} << 24)) throw CapExceeded("Kostant table box too large");
    }
    table_.assign(total, QPolynomial());
    table_[0] = QPolynomial::one();
    // One unbounded-knapsack pass per positive root: P_new[v] = P_old[v] + q P_new[v - alpha].
    for (const auto& root : d.positive_roots) {
      bool fits = true;
      std::size_t shift = 0;
      for (std::size_t i = 0; i < bound_.size(); ++i) {
        if (root.simple[i] > bound_[i]) fits = false;
        shift += static_cast<std::size_t>(root.simple[i]) * stride_[i];
      }
      if (!fits) continue;
      for (std::size_t idx = 0; idx < total; ++idx) {
        if (!contains_after_subtract(idx, root.simple)) continue;
        const QPolynomial prev = table_[idx - shift];
        if (!prev.is_zero()) table_[idx] += prev.shifted(1);
      }
    }
  }

  /// P_q(beta) for beta in lattice coordinates; zero outside the root cone or the box.
  QPolynomial operator()(const Weight& beta) const {
    auto k = d_->simple_coordinates(beta);
    if (!k) return {};
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      if ((*k)[i] < 0) return {};
      if ((*k)[i] > bound_[i]) throw InvalidArgument("weight outside the Kostant table box");
      idx += static_cast<std::size_t>((*k)[i]) * stride_[i];
    }
    return table_[idx];
  }

 private:
  bool contains_after_subtract(std::size_t idx, const std::vector<std::int64_t>& alpha) const {
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      const auto coord = static_cast<std::int64_t>((idx / stride_[i]) % static_cast<std::size_t>(bound_[i] + 1));
      if (coord < alpha[i]) return false;
    }
    return true;
  }

  const RootDatum* d_;
  std::vector<std::int64_t> bound_;
  std::vector<std::size_t> stride_;
  std::vector<QPolynomial> table_;
};

/// Sum over multisets of positive roots with total beta of q^{number of parts}.
inline QPolynomial q_kostant_partition(const RootDatum& d, const Weight& beta) {
  d.check_weight(beta);
  auto k = d.simple_coordinates(beta);
  if (!k) return {};
  for (auto x : *k)
    if (x < 0) return {};
  return KostantTable(d, *k)(beta);
}

/// Exhaustive multiset enumeration, for ht(beta) <= 12.
inline QPolynomial q_kostant_bruteforce(const RootDatum& d, const Weight& beta) {
  d.check_weight(beta);
  auto k = d.simple_coordinates(beta);
  if (!k) return {};
  std::int64_t ht = 0;
  for (auto x : *k) {
    if (x < 0) return {};
    ht += x;
  }
  if (ht > kBruteForceHeightCap)
    throw CapExceeded("brute-force Kostant partition limited to height " + std::to_string(kBruteForceHeightCap));
  std::vector<std::int64_t> counts(ht + 1, 0);
  std::vector<std::int64_t> rest = *k;
  const auto& roots = d.positive_roots;
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t r, std::int64_t parts) {
    if (std::all_of(rest.begin(), rest.end(), [](std::int64_t x) { return x == 0; })) {
      ++counts[parts];
      return;
    }
    if (r == roots.size()) return;
    go(r + 1, parts);
    std::int64_t used = 0;
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (rest[i] < roots[r].simple[i]) ok = false;
      if (!ok) break;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= roots[r].simple[i];
      ++used;
      go(r + 1, parts + used);
    }
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += used * roots[r].simple[i];
  };
  go(0, 0);
  return QPolynomial(std::move(counts));
}

}  // namespace bkclab::qanalogue
