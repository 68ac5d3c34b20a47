#include <gtest/gtest.h>

#include <random>

#include "bkclab/bkfilt/filtration.hpp"
#include "bkclab/invmodel/invariants.hpp"

using namespace bkclab;
using namespace bkclab::invmodel;
using rootdata::build_root_datum;
using rootdata::GroupSpec;

namespace {

tilting::TiltingModule tilting_for(const RootDatum& d, std::uint64_t p, const Weight& lambda, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  return tilting::build_tilting(d, p, lambda, rng);
}

bool same_span(const MatrixFp& a, const MatrixFp& b) {
  const auto ra = exactalg::rank(a);
  return ra == exactalg::rank(b) && ra == exactalg::rank(exactalg::hconcat(a, b));
}

}  // namespace

TEST(AdjointAction, GL2Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  const auto g = rootdata::chevalley_algebra(gl2);
  const auto borel = adjoint_action_polynomials(gl2, g, 5);
  ASSERT_EQ(borel.coeffs.size(), 1u);
  EXPECT_EQ(borel.dim, 3u);
  EXPECT_EQ(borel.coeffs[0].size(), 2u);

  // f -> f + t (E11 - E22) - t^2 e on all of gl2.
  const auto full = adjoint_action_polynomials(gl2, g, 5, true);
  ASSERT_EQ(full.coeffs[0].size(), 3u);
  const auto f = g.f(0), e = g.e(0);
  EXPECT_EQ(full.coeffs[0][1](g.torus(0), f), 1u);
  EXPECT_EQ(full.coeffs[0][1](g.torus(1), f), 4u);
  EXPECT_EQ(full.coeffs[0][2](e, f), 4u);
  EXPECT_EQ(full.coeffs[0][2](e, e), 0u);
}

TEST(AdjointAction, IntegralForAllTypes) {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "C4"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(GroupSpec::parse(name));
    const auto act = adjoint_action_polynomials(d, 13, true);
    EXPECT_EQ(act.coeffs.size(), static_cast<std::size_t>(d.rank));
    for (const auto& fam : act.coeffs) EXPECT_LE(fam.size(), 4u);
  }
}

TEST(Regularity, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  EXPECT_TRUE(regularity_check(gl2, 2, {1, 0}));
  EXPECT_TRUE(regularity_check(gl3, 3, {2, 1, 0}));
  EXPECT_FALSE(regularity_check(gl3, 3, {1, 1, 0}));
  EXPECT_FALSE(regularity_check(gl3, 2, {2, 1, 0}));
  EXPECT_THROW(regularity_check(gl3, 3, {1, 0}), InvalidArgument);
}

TEST(CoordinateModule, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  EXPECT_EQ(coordinate_module(gl2, 5, {1, 0}, 0).dim(), 1u);
  EXPECT_EQ(coordinate_module(gl2, 5, {1, 0}, 1).dim(), 2u);
  const auto m = coordinate_module(gl2, 5, {1, 0}, 2);
  EXPECT_EQ(m.filtration_dim(0), 1u);
  EXPECT_EQ(m.filtration_dim(1), 2u);
  EXPECT_EQ(m.filtration_dim(2), 3u);
  EXPECT_EQ(m.weights[m.index.at({1})], (Weight{-1, 1}));
  // y -> y + t, y^2 -> y^2 + 2ty + t^2.
  const auto one = m.index.at({0}), y = m.index.at({1}), y2 = m.index.at({2});
  const auto& s = m.action[0];
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1](one, y), 1u);
  EXPECT_EQ(s[1](y, y2), 2u);
  EXPECT_EQ(s[2](one, y2), 1u);
  EXPECT_EQ(s[1](y, y), 0u);

  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  const auto c = coordinate_module(a2, 7, {1, 1}, 3);
  EXPECT_EQ(c.dim(), 20u);
  EXPECT_THROW(coordinate_module(a2, 7, {1, 1}, 30, 100), CapExceeded);
}

TEST(CoordinateModule, TorusWeightsAreHomogeneous) {
  for (const char* name : {"GL3", "B2", "G2"}) {
    auto d = build_root_datum(GroupSpec::parse(name));
    const auto pair = bkfilt::principal_pair(d, 7);
    const auto m = coordinate_module(d, 7, pair.h, 3);
    for (int i = 0; i < d.rank; ++i)
      for (std::size_t s = 0; s < m.action[i].size(); ++s)
        for (std::size_t r = 0; r < m.dim(); ++r)
          for (std::size_t c = 0; c < m.dim(); ++c)
            if (m.action[i][s](r, c) != 0)
              EXPECT_EQ(m.weights[r], rootdata::add(m.weights[c], d.simple_roots[i], static_cast<std::int64_t>(s)));
  }
}

TEST(InvariantFiltration, GoldenExamples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  const auto t5 = tilting_for(gl2, 5, {2, 0});
  EXPECT_EQ(b_invariant_filtration(gl2, t5.module, {2, 0}, {1, 0}, {1, 1}).dims,
            (std::vector<std::size_t>{0, 1, 1}));
  const auto t2 = tilting_for(gl2, 2, {2, 0});
  const auto inv2 = b_invariant_filtration(gl2, t2.module, {2, 0}, {1, 0}, {1, 1});
  EXPECT_EQ(inv2.dims, (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_EQ(b_invariant_filtration(gl2, t2.module, {2, 0}, {1, 0}, {2, 0}, 3).dims,
            (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(exactalg::rank(evaluation_lambda(inv2, 2)), 2u);
}

TEST(InvariantFiltration, Errors) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  const auto t = tilting_for(gl2, 5, {2, 0});
  EXPECT_THROW(b_invariant_filtration(gl2, t.module, {2, 0}, {1, 0}, {0, 2}, 1), InvalidArgument);
  EXPECT_THROW(b_invariant_filtration(gl2, t.module, {2, 0}, {1, 1}, {1, 1}), HypothesisFailure);
}

TEST(InvariantFiltration, CentralShiftOfHDoesNotMatter) {
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  const auto t = tilting_for(gl3, 5, {2, 1, 0});
  for (const auto& mu : gl3.dominant_weights_below({2, 1, 0}))
    EXPECT_EQ(b_invariant_filtration(gl3, t.module, {2, 1, 0}, {2, 1, 0}, mu).dims,
              b_invariant_filtration(gl3, t.module, {2, 1, 0}, {4, 3, 2}, mu).dims);
}

TEST(InvariantFiltration, MatchesDividedPowerFiltration) {
  struct Case {
    const char* group;
    std::uint64_t p;
    Weight lambda;
    bool all_weights;
  };
  const std::vector<Case> cases = {
      {"GL2", 2, {2, 0}, true},    {"GL2", 2, {3, 0}, true},    {"GL2", 3, {4, 0}, true},
      {"GL2", 5, {4, 0}, true},    {"GL2", 7, {4, 1}, true},    {"GL3", 3, {2, 1, 0}, true},
      {"GL3", 5, {2, 1, 0}, true}, {"GL3", 7, {1, 1, 0}, true}, {"GL3", 3, {2, 0, 0}, true},
      {"A2", 7, {1, 1}, true},     {"A2", 5, {2, 1}, false},    {"A2", 3, {1, 1}, true},
      {"B2", 7, {1, 1}, false},    {"B2", 5, {1, 0}, true},     {"C2", 5, {0, 1}, true},
      {"G2", 7, {1, 0}, false},    {"A3", 5, {1, 0, 1}, false}, {"GL4", 5, {1, 1, 0, 0}, false},
  };
  std::size_t checked = 0;
  for (const auto& c : cases) {
    SCOPED_TRACE(std::string(c.group) + " p=" + std::to_string(c.p) + " " + rootdata::to_string(c.lambda));
    auto d = build_root_datum(GroupSpec::parse(c.group));
    const auto g = rootdata::chevalley_algebra(d);
    const auto pair = bkfilt::principal_pair(d, c.p);
    ASSERT_TRUE(regularity_check(d, c.p, pair.h));
    const auto t = tilting_for(d, c.p, c.lambda);
    const auto fam = bkfilt::family_for_tilting(d, t, pair);
    std::vector<Weight> mus;
    if (c.all_weights)
      for (const auto& [mu, idx] : t.module.weight_spaces()) mus.push_back(mu);
    else
      mus = d.dominant_weights_below(c.lambda);
    for (const auto& mu : mus) {
      SCOPED_TRACE(rootdata::to_string(mu));
      const auto bk = bkfilt::bk_filtration(d, fam, mu);
      const auto inv = b_invariant_filtration(d, g, t.module, c.lambda, pair.h, mu);
      for (std::size_t n = 0; n < inv.dims.size(); ++n) {
        const std::size_t expected = n + 1 < bk.dims.size() ? bk.dims[n + 1] : bk.dims.back();
        EXPECT_EQ(inv.dims[n], expected) << "n=" << n;
        const MatrixFp image = evaluation_lambda(inv, n);
        EXPECT_EQ(exactalg::rank(image), inv.dims[n]) << "n=" << n;
        const MatrixFp& target = n + 1 < bk.bases.size() ? bk.bases[n + 1] : bk.bases.back();
        EXPECT_TRUE(same_span(image, target)) << "n=" << n;
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 60u);
}
