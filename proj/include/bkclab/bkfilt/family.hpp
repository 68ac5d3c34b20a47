#pragma once

#include <string>
#include <vector>

#include "bkclab/bkfilt/principal.hpp"
#include "bkclab/exactalg/hnf.hpp"
#include "bkclab/tilting/tilting.hpp"

namespace bkclab::bkfilt {

using repbuild::ModularModule;
using rootdata::Weight;

/// Divided powers X_j = e^(j), j = 0..N, of the principal nilpotent on a module.
struct DividedPowerFamily {
  ModularModule module;
  PrincipalPair pair;
  std::vector<MatrixFp> X;
  std::size_t N = 0;
  std::string provenance;  // lattice-lift | tensor-convolution | summand-restriction

  std::uint64_t p() const { return module.p; }
  MatrixFp power(std::size_t j) const { return j < X.size() ? X[j] : MatrixFp(p(), module.dim(), module.dim()); }
};

/// ht(lambda - w0 lambda).
inline std::size_t global_height_bound(const RootDatum& d, const Weight& lambda) {
  const Weight low = rootdata::longest_element(d).apply(lambda);
  auto ht = d.height(rootdata::add(lambda, low, -1));
  require(ht.has_value() && *ht >= 0, "lambda - w0 lambda is not in the root cone");
  return static_cast<std::size_t>(*ht);
}

inline std::uint64_t binomial_mod(std::size_t n, std::size_t k, std::uint64_t p) {
  exactalg::Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return exactalg::PrimeField(p).from_integer(c);
}

/// Exact checks of the one-parameter-subgroup axioms and height homogeneity.
inline void check_family_axioms(const RootDatum& d, const DividedPowerFamily& f) {
  const std::uint64_t p = f.p();
  const std::size_t n = f.module.dim();
  require(f.X.size() == f.N + 1, "family length differs from N + 1");
  require(f.X[0] == MatrixFp::identity(p, n), "X_0 is not the identity");
  for (std::size_t a = 1; a <= f.N; ++a)
    for (std::size_t b = 1; b <= f.N; ++b) {
      const MatrixFp lhs = f.X[a] * f.X[b];
      if (a + b <= f.N)
        require(lhs == binomial_mod(a + b, a, p) * f.X[a + b], "X_a X_b differs from C(a+b,a) X_{a+b}");
      else
        require(lhs.is_zero(), "X_a X_b nonzero beyond N");
    }
  for (std::size_t j = 0; j <= f.N; ++j)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (f.X[j](s, t) == 0) continue;
        auto ht = d.height(rootdata::add(f.module.weights[s], f.module.weights[t], -1));
        require(ht && *ht == static_cast<std::int64_t>(j), "X_j is not homogeneous of height j");
      }
}

/// X_j = E^j / j! reduced mod p, with E = sum c_i e_i in lattice coordinates.
inline DividedPowerFamily divided_family_from_lattice(const RootDatum& d, const repbuild::AdmissibleLattice& l,
                                                      const PrincipalPair& pair, bool bypass_coxeter_check = false) {
  const std::uint64_t p = pair.p;
  if (!bypass_coxeter_check && p < static_cast<std::uint64_t>(d.coxeter_number))
    throw HypothesisFailure("divided powers need p >= h = " + std::to_string(d.coxeter_number) + ", got p = " +
                            std::to_string(p));
  const std::size_t n = l.dim();
  MatrixQ e(n, n);
  for (int i = 0; i < d.rank; ++i)
    e += l.to_lattice(l.module.e[i]) * Rational(static_cast<unsigned long>(pair.coefficients[i]));
  DividedPowerFamily f;
  f.module = repbuild::reduce_mod_p(l, p);
  f.pair = pair;
  f.N = global_height_bound(d, l.module.lambda);
  f.provenance = "lattice-lift";
  MatrixQ divided = MatrixQ::identity(n);
  for (std::size_t j = 0; j <= f.N; ++j) {
    if (j > 0) {
      divided = divided * e;
      divided /= Rational(static_cast<unsigned long>(j));
    }
    try {
      f.X.push_back(exactalg::p_integral_reduce(divided, p));
    } catch (const NonIntegral&) {
      throw DividedPowerUndefined(p, j);
    }
  }
  require((divided * e).is_zero(), "E^(N+1) does not vanish");
  check_family_axioms(d, f);
  return f;
}

/// X_n = sum_{r+s=n} X_r (x) X_s on the tensor product.
inline DividedPowerFamily divided_family_tensor(const RootDatum& d, const DividedPowerFamily& a,
                                                const DividedPowerFamily& b) {
  if (!(a.pair == b.pair)) throw InvalidArgument("tensor of families for different principal pairs");
  DividedPowerFamily f;
  f.module = repbuild::tensor(a.module, b.module);
  f.pair = a.pair;
  f.N = a.N + b.N;
  f.provenance = "tensor-convolution";
  const std::size_t da = a.module.dim(), db = b.module.dim();
  for (std::size_t m = 0; m <= f.N; ++m) {
    MatrixFp acc(a.p(), da * db, da * db);
    for (std::size_t r = 0; r <= std::min(m, a.N); ++r)
      if (m - r <= b.N) acc = acc + exactalg::kron(a.X[r], b.X[m - r]);
    f.X.push_back(std::move(acc));
  }
  check_family_axioms(d, f);
  return f;
}

/// Restriction to a summand given by inclusion and projection; the projector must commute with the family.
inline DividedPowerFamily restrict_family(const RootDatum& d, const DividedPowerFamily& f, const MatrixFp& inclusion,
                                          const MatrixFp& projection) {
  const MatrixFp proj = inclusion * projection;
  for (const auto& x : f.X)
    if (!(proj * x == x * proj)) throw InternalError("projector does not commute with the divided powers");
  std::vector<Weight> weights;
  for (std::size_t c = 0; c < inclusion.cols(); ++c) {
    std::optional<Weight> w;
    for (std::size_t r = 0; r < inclusion.rows(); ++r)
      if (inclusion(r, c) != 0) {
        if (w && *w != f.module.weights[r]) throw InvalidArgument("summand basis is not weight-homogeneous");
        w = f.module.weights[r];
      }
    if (!w) throw InvalidArgument("zero column in summand inclusion");
    weights.push_back(*w);
  }
  DividedPowerFamily out;
  out.module = tilting::restrict_module(f.module, inclusion, projection, weights);
  out.module.highest_weight = f.module.highest_weight;
  out.pair = f.pair;
  out.N = f.N;
  out.provenance = "summand-restriction";
  for (const auto& x : f.X) out.X.push_back(projection * x * inclusion);
  check_family_axioms(d, out);
  return out;
}

/// Restriction to the image of a generator-commuting idempotent.
inline DividedPowerFamily restrict_family(const RootDatum& d, const DividedPowerFamily& f, const MatrixFp& projector) {
  const std::uint64_t p = f.p();
  const std::size_t n = f.module.dim();
  if (!(projector * projector == projector)) throw InvalidArgument("projector is not idempotent");
  std::vector<std::vector<std::uint64_t>> image, complement;
  const MatrixFp rest = MatrixFp::identity(p, n) - projector;
  for (const auto& [w, idx] : f.module.weight_spaces()) {
    for (const auto* m : {&projector, &rest}) {
      const MatrixFp local = m->select(idx, idx);
      for (auto c : exactalg::pivot_columns(local)) {
        std::vector<std::uint64_t> v(n, 0);
        for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local(k, c);
        (m == &projector ? image : complement).push_back(std::move(v));
      }
    }
  }
  auto leading = [](const std::vector<std::uint64_t>& v) {
    return std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; }) - v.begin();
  };
  auto by_leading = [&](const auto& a, const auto& b) { return leading(a) < leading(b); };
  std::stable_sort(image.begin(), image.end(), by_leading);
  std::stable_sort(complement.begin(), complement.end(), by_leading);
  std::vector<std::vector<std::uint64_t>> all = image;
  all.insert(all.end(), complement.begin(), complement.end());
  const MatrixFp inv = exactalg::inverse(MatrixFp::from_columns(p, n, all));
  std::vector<std::size_t> top(image.size()), cols(n);
  for (std::size_t k = 0; k < top.size(); ++k) top[k] = k;
  for (std::size_t k = 0; k < n; ++k) cols[k] = k;
  return restrict_family(d, f, MatrixFp::from_columns(p, n, image), inv.select(top, cols));
}

/// Family on T(lambda) following the route the tilting module was built by.
inline DividedPowerFamily family_for_tilting(const RootDatum& d, const tilting::TiltingModule& t,
                                             const PrincipalPair& pair,
                                             std::size_t dimension_cap = repbuild::kDefaultDimensionCap) {
  auto lattice_family = [&](const Weight& w) {
    return divided_family_from_lattice(
        d, repbuild::minimal_lattice(repbuild::build_irreducible_Q(d, w, dimension_cap), d), pair);
  };
  if (t.route == "lowest-alcove") return lattice_family(t.lambda);
  DividedPowerFamily acc = lattice_family(d.zero());
  for (const auto& w : t.factors) acc = divided_family_tensor(d, acc, lattice_family(w));
  DividedPowerFamily out = restrict_family(d, acc, t.inclusion, t.projection);
  require(out.module.weights == t.module.weights && out.module.raise == t.module.raise &&
              out.module.lower == t.module.lower,
          "restricted family module differs from the tilting module");
  out.module.highest_weight = t.lambda;
  return out;
}

}  // namespace bkclab::bkfilt
