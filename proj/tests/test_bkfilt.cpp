#include <gtest/gtest.h>

#include <random>

#include "bkclab/bkfilt/filtration.hpp"
#include "bkclab/qanalogue/lusztig.hpp"

using namespace bkclab;
using namespace bkclab::bkfilt;
using rootdata::build_root_datum;
using rootdata::GroupSpec;

namespace {

QPolynomial Q(std::vector<std::int64_t> c) { return QPolynomial(std::move(c)); }

DividedPowerFamily lattice_family(const RootDatum& d, const Weight& lambda, std::uint64_t p,
                                  std::vector<std::uint64_t> coeffs = {}) {
  return divided_family_from_lattice(
      d, repbuild::minimal_lattice(repbuild::build_irreducible_Q(d, lambda), d), principal_pair(d, p, coeffs));
}

DividedPowerFamily tilting_family(const RootDatum& d, const Weight& lambda, std::uint64_t p, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  return family_for_tilting(d, tilting::build_tilting(d, p, lambda, rng), principal_pair(d, p));
}

}  // namespace

TEST(PrincipalPair, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto pair = principal_pair(gl2, 2);
  EXPECT_EQ(pair.h, (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(pair.coefficients, (std::vector<std::uint64_t>{1}));
  auto a1 = build_root_datum(GroupSpec::parse("A1"));
  EXPECT_THROW(principal_pair(a1, 2), HypothesisFailure);
  EXPECT_THROW(principal_pair(gl2, 5, {5}), InvalidArgument);
}

TEST(PrincipalPair, BracketAndCentralizer) {
  for (const char* g : {"GL2", "GL3", "GL4", "A2", "A3", "B2", "C3", "G2", "D4"}) {
    auto d = build_root_datum(GroupSpec::parse(g));
    const auto alg = rootdata::chevalley_algebra(d);
    for (std::uint64_t p : {5u, 7u, 11u}) {
      if (p < static_cast<std::uint64_t>(d.coxeter_number)) continue;
      SCOPED_TRACE(std::string(g) + " p=" + std::to_string(p));
      const auto c = check_principal_pair(d, alg, principal_pair(d, p));
      EXPECT_TRUE(c.bracket_ok);
      EXPECT_TRUE(c.principal_ok) << c.ad_e_rank;
    }
  }
  // A non-principal element: zero coefficient is rejected, and e_1 alone has a larger centralizer.
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto pair = principal_pair(a2, 7);
  pair.coefficients = {1, 0};
  EXPECT_FALSE(check_principal_pair(a2, rootdata::chevalley_algebra(a2), pair).principal_ok);
}

TEST(DividedFamily, LatticeExamples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto f = lattice_family(gl2, {2, 0}, 5);
  ASSERT_EQ(f.N, 2u);
  // Basis v, f v, f^(2) v.
  EXPECT_EQ(f.X[1](0, 1), 2u);
  EXPECT_EQ(f.X[1](1, 2), 1u);
  EXPECT_EQ(f.X[2](0, 2), 1u);
  EXPECT_EQ(f.provenance, "lattice-lift");

  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  auto l = repbuild::minimal_lattice(repbuild::build_irreducible_Q(gl3, {1, 0, 0}), gl3);
  try {
    divided_family_from_lattice(gl3, l, principal_pair(gl3, 2), true);
    ADD_FAILURE() << "expected DividedPowerUndefined";
  } catch (const DividedPowerUndefined& e) {
    EXPECT_EQ(e.j(), 2u);
    EXPECT_EQ(e.p(), 2u);
  }
  EXPECT_THROW(divided_family_from_lattice(gl3, l, principal_pair(gl3, 2)), HypothesisFailure);

  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto triv = lattice_family(a2, {0, 0}, 5);
  EXPECT_EQ(triv.N, 0u);
  ASSERT_EQ(triv.X.size(), 1u);
  EXPECT_EQ(triv.X[0], MatrixFp::identity(5, 1));
}

TEST(DividedFamily, TensorExamples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto nat = lattice_family(gl2, {1, 0}, 2);
  auto sq = divided_family_tensor(gl2, nat, nat);
  ASSERT_EQ(sq.N, 2u);
  EXPECT_EQ(sq.X[2], exactalg::kron(nat.X[1], nat.X[1]));
  EXPECT_TRUE((sq.X[1] * sq.X[1]).is_zero());
  EXPECT_EQ(sq.provenance, "tensor-convolution");
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto adj = lattice_family(a2, {1, 1}, 5);
  auto with_unit = divided_family_tensor(a2, adj, lattice_family(a2, {0, 0}, 5));
  EXPECT_EQ(with_unit.X, adj.X);
  EXPECT_EQ(with_unit.N, adj.N);
  EXPECT_THROW(divided_family_tensor(a2, adj, lattice_family(a2, {1, 0}, 7)), InvalidArgument);
}

TEST(DividedFamily, RestrictionExamples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto nat = lattice_family(gl2, {1, 0}, 3);
  auto sq = divided_family_tensor(gl2, nat, nat);
  auto same = restrict_family(gl2, sq, MatrixFp::identity(3, 4));
  EXPECT_EQ(same.X, sq.X);
  EXPECT_EQ(same.provenance, "summand-restriction");

  std::mt19937_64 rng(2);
  auto dec = tilting::fitting_split(sq.module, rng);
  ASSERT_EQ(dec.summands.size(), 2u);
  const auto& big = dec.summands[0].module.dim() == 3 ? dec.summands[0] : dec.summands[1];
  auto sym = restrict_family(gl2, sq, big.projector());
  auto delta = lattice_family(gl2, {2, 0}, 3);
  for (Weight mu : {Weight{2, 0}, Weight{1, 1}, Weight{0, 2}})
    EXPECT_EQ(bk_filtration(gl2, sym, mu).dims, bk_filtration(gl2, delta, mu).dims);

  MatrixFp bad(3, 4, 4);
  bad.set(1, 1, 1);
  EXPECT_THROW(restrict_family(gl2, sq, bad), InternalError);
}

TEST(Filtration, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto f5 = tilting_family(gl2, {2, 0}, 5);
  auto r5 = bk_filtration(gl2, f5, {1, 1});
  EXPECT_EQ(r5.jump, Q({0, 1}));
  EXPECT_EQ(r5.dims, (std::vector<std::size_t>{0, 0, 1, 1}));

  auto f2 = tilting_family(gl2, {2, 0}, 2);
  EXPECT_EQ(f2.module.dim(), 4u);
  auto r2 = bk_filtration(gl2, f2, {1, 1});
  EXPECT_EQ(r2.jump, Q({1, 1}));
  EXPECT_EQ(r2.costalk, (std::map<std::int64_t, std::size_t>{{0, 1}, {2, 1}}));

  auto top = bk_filtration(gl2, f2, {2, 0});
  EXPECT_EQ(top.jump, QPolynomial::one());
  EXPECT_EQ(top.costalk, (std::map<std::int64_t, std::size_t>{{-2, 1}}));
  EXPECT_THROW(bk_filtration(gl2, f2, {3, -1}), InvalidArgument);
}

TEST(Filtration, CharTwoKernelIsSymmetricTensor) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto nat = lattice_family(gl2, {1, 0}, 2);
  auto sq = divided_family_tensor(gl2, nat, nat);
  sq.module.highest_weight = Weight{2, 0};
  auto r = bk_filtration(gl2, sq, {1, 1});
  ASSERT_EQ(r.dim_F(0), 1u);
  // v1 (x) v2 + v2 (x) v1 in the Kronecker basis.
  EXPECT_EQ(r.bases[1].column(0), (std::vector<std::uint64_t>{0, 1, 1, 0}));
}

TEST(Filtration, EmptyCostalk) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  FiltrationReport r;
  r.mu = {1, 1};
  r.dims = {0};
  EXPECT_TRUE(costalk_prediction(r, gl2).empty());
}

TEST(Filtration, PropertySweep) {
  struct Case {
    const char* group;
    std::uint64_t p;
    Weight lambda;
  };
  const std::vector<Case> cases = {
      {"GL2", 2, {2, 0}},    {"GL2", 2, {3, 0}},    {"GL2", 3, {3, 0}},    {"GL2", 3, {4, 0}},
      {"GL2", 5, {4, 0}},    {"GL2", 7, {4, 1}},    {"GL3", 3, {2, 1, 0}}, {"GL3", 5, {2, 1, 0}},
      {"GL3", 7, {1, 1, 0}}, {"GL3", 3, {2, 0, 0}}, {"A2", 7, {1, 1}},     {"A2", 5, {2, 1}},
      {"A2", 3, {1, 1}},     {"B2", 7, {1, 1}},     {"B2", 5, {1, 0}},     {"C2", 5, {0, 1}},
      {"G2", 7, {1, 0}},     {"A3", 5, {1, 0, 1}},  {"GL4", 5, {1, 1, 0, 0}}, {"G2", 13, {0, 1}},
  };
  std::size_t families = 0;
  for (const auto& c : cases) {
    SCOPED_TRACE(std::string(c.group) + " p=" + std::to_string(c.p) + " " + rootdata::to_string(c.lambda));
    auto d = build_root_datum(GroupSpec::parse(c.group));
    const auto f = tilting_family(d, c.lambda, c.p);
    EXPECT_NO_THROW(check_family_axioms(d, f));
    ++families;
    EXPECT_EQ(f.N, global_height_bound(d, c.lambda));
    std::map<Weight, std::size_t> totals;
    for (const auto& [mu, idx] : f.module.weight_spaces()) {
      auto r = bk_filtration(d, f, mu);
      EXPECT_EQ(r.dim_F(-1), 0u);
      EXPECT_EQ(r.weight_dim(), idx.size());
      EXPECT_EQ(static_cast<std::size_t>(r.jump.at_one()), idx.size());
      for (std::size_t n = 1; n < r.dims.size(); ++n) EXPECT_LE(r.dims[n - 1], r.dims[n]);
      totals[mu] = static_cast<std::size_t>(r.jump.at_one());
    }
    for (const auto& [mu, t] : totals) EXPECT_EQ(t, totals.at(d.dominant_conjugate(mu)));
    if (tilting::in_lowest_alcove(d, c.p, c.lambda))
      for (const auto& mu : d.dominant_weights_below(c.lambda))
        EXPECT_EQ(bk_filtration(d, f, mu).jump, qanalogue::lusztig_q_analogue(d, c.lambda, mu))
            << rootdata::to_string(mu);
  }
  EXPECT_GE(families, 20u);
}

TEST(Filtration, RouteIndependenceInLowestAlcove) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  for (const auto& [d, p, lam] : {std::tuple{&gl2, 5u, Weight{3, 0}}, std::tuple{&gl2, 7u, Weight{4, 0}},
                                  std::tuple{&gl3, 7u, Weight{2, 1, 0}}}) {
    std::mt19937_64 rng(4);
    auto direct = family_for_tilting(*d, tilting::lowest_alcove_tilting(*d, p, lam), principal_pair(*d, p));
    auto split = family_for_tilting(*d, tilting::extract_tilting(*d, p, lam, rng), principal_pair(*d, p));
    EXPECT_EQ(split.provenance, "summand-restriction");
    for (const auto& mu : d->dominant_weights_below(lam))
      EXPECT_EQ(bk_filtration(*d, direct, mu).jump, bk_filtration(*d, split, mu).jump);
  }
}

TEST(Filtration, SeedIndependence) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  for (const auto& [d, p, lam] : {std::tuple{&gl2, 3u, Weight{4, 0}}, std::tuple{&gl3, 3u, Weight{2, 1, 0}}}) {
    auto a = tilting_family(*d, lam, p, 1);
    auto b = tilting_family(*d, lam, p, 77);
    for (const auto& mu : d->dominant_weights_below(lam))
      EXPECT_EQ(bk_filtration(*d, a, mu).dims, bk_filtration(*d, b, mu).dims);
  }
}

TEST(Filtration, IndependentOfCoefficientRescaling) {
  std::mt19937_64 rng(21);
  for (const auto& [g, p, lam] : {std::tuple{"A2", 7u, Weight{2, 1}}, std::tuple{"B2", 5u, Weight{1, 1}},
                                  std::tuple{"GL3", 5u, Weight{3, 1, 0}}}) {
    auto d = build_root_datum(GroupSpec::parse(g));
    auto base = lattice_family(d, lam, p);
    std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::uint64_t> c(d.rank);
      for (auto& x : c) x = coeff(rng);
      auto scaled = lattice_family(d, lam, p, c);
      for (const auto& [mu, idx] : base.module.weight_spaces())
        EXPECT_EQ(bk_filtration(d, base, mu).dims, bk_filtration(d, scaled, mu).dims);
    }
  }
}
