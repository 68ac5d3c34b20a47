#include <gtest/gtest.h>

#include <functional>

#include "bkclab/repbuild/highest_weight.hpp"
#include "bkclab/repbuild/lattice.hpp"
#include "bkclab/repbuild/modular.hpp"
#include "bkclab/repbuild/oracles.hpp"
#include "bkclab/repbuild/serialize.hpp"

using namespace bkclab;
using namespace bkclab::repbuild;
using rootdata::build_root_datum;
using rootdata::GroupSpec;

namespace {

struct Case {
  const char* group;
  Weight lambda;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {"GL2", {1, 0}},    {"GL2", {2, 0}},       {"GL2", {3, 0}},       {"GL2", {4, 0}},    {"GL2", {3, 1}},
      {"GL3", {1, 0, 0}}, {"GL3", {1, 1, 0}},    {"GL3", {2, 1, 0}},    {"GL3", {2, 0, 0}}, {"A1", {3}},
      {"A2", {1, 1}},     {"A2", {2, 0}},        {"A2", {2, 1}},        {"A3", {1, 0, 1}},  {"B2", {1, 0}},
      {"B2", {0, 1}},     {"B2", {1, 1}},        {"C2", {1, 0}},        {"C2", {0, 1}},     {"B3", {0, 0, 1}},
      {"D4", {1, 0, 0, 0}}, {"D4", {0, 1, 0, 0}}, {"G2", {1, 0}},       {"G2", {0, 1}},     {"A2", {0, 0}},
  };
  return c;
}

exactalg::Integer binom(unsigned a, unsigned b) {
  exactalg::Integer r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

// Semistandard tableaux of shape lambda with content mu (rows weakly increasing, columns strictly).
std::size_t count_ssyt(const std::vector<std::int64_t>& shape, const std::vector<std::int64_t>& content) {
  const std::size_t n = content.size();
  std::vector<std::vector<int>> t;
  for (auto len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.push_back({r, c});
  std::vector<std::int64_t> left = content;
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (std::size_t v = 1; v <= n; ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && t[r][c - 1] > static_cast<int>(v)) continue;
      if (r > 0 && t[r - 1][c] >= static_cast<int>(v)) continue;
      t[r][c] = static_cast<int>(v);
      --left[v - 1];
      go(k + 1);
      ++left[v - 1];
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST(BuildIrreducible, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto nat = build_irreducible_Q(gl2, {1, 0});
  EXPECT_EQ(nat.dim(), 2u);
  EXPECT_EQ(nat.weights, (std::vector<Weight>{{1, 0}, {0, 1}}));

  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto adj = build_irreducible_Q(a2, {1, 1});
  EXPECT_EQ(adj.dim(), 8u);
  EXPECT_EQ(adj.multiplicity({0, 0}), 2u);

  auto sym2 = build_irreducible_Q(gl2, {2, 0});
  ASSERT_EQ(sym2.dim(), 3u);
  // e (f v) = 2 v.
  MatrixQ fv = sym2.f[0] * MatrixQ{{1}, {0}, {0}};
  EXPECT_EQ(sym2.e[0] * fv, (MatrixQ{{2}, {0}, {0}}));
}

TEST(BuildIrreducible, RelationsDimensionsAndMultiplicities) {
  for (const auto& c : cases()) {
    SCOPED_TRACE(std::string(c.group) + rootdata::to_string(c.lambda));
    auto d = build_root_datum(GroupSpec::parse(c.group));
    auto m = build_irreducible_Q(d, c.lambda);
    EXPECT_EQ(exactalg::Integer(static_cast<unsigned long>(m.dim())), weyl_dimension(d, c.lambda));
    FreudenthalTable fr(d, c.lambda);
    for (std::size_t b = 0; b < m.weights.size(); ++b) {
      EXPECT_EQ(exactalg::Integer(static_cast<unsigned long>(m.size[b])), fr(m.weights[b]));
      EXPECT_EQ(m.size[b], m.multiplicity(d.dominant_conjugate(m.weights[b])));
    }
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        MatrixQ comm = m.e[i] * m.f[j] - m.f[j] * m.e[i];
        if (i == j)
          EXPECT_EQ(comm, m.h[i]);
        else
          EXPECT_TRUE(comm.is_zero());
      }
    // e_i raises weights by alpha_i.
    const auto w = m.basis_weights();
    for (int i = 0; i < d.rank; ++i)
      for (std::size_t s = 0; s < m.dim(); ++s)
        for (std::size_t t = 0; t < m.dim(); ++t) {
          if (sgn(m.e[i](s, t)) != 0) EXPECT_EQ(w[s], rootdata::add(w[t], d.simple_roots[i]));
          if (sgn(m.f[i](s, t)) != 0) EXPECT_EQ(w[s], rootdata::add(w[t], d.simple_roots[i], -1));
        }
  }
}

TEST(Oracles, FreudenthalExamples) {
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  EXPECT_EQ(freudenthal_multiplicity(a2, {1, 1}, {0, 0}), 2);
  EXPECT_EQ(weyl_dimension(a2, {1, 1}), 8);
  EXPECT_EQ(freudenthal_multiplicity(a2, {1, 1}, {1, 1}), 1);
  EXPECT_EQ(freudenthal_multiplicity(a2, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(freudenthal_multiplicity(a2, {1, 1}, {1, 0}), 0);  // not in the root lattice coset
}

TEST(Oracles, FreudenthalMatchesKostkaNumbers) {
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  for (Weight lam : {Weight{2, 1, 0}, Weight{3, 1, 0}, Weight{2, 2, 0}, Weight{3, 2, 1}, Weight{4, 1, 1}}) {
    FreudenthalTable fr(gl3, lam);
    std::int64_t total = lam[0] + lam[1] + lam[2];
    for (std::int64_t a = 0; a <= total; ++a)
      for (std::int64_t b = 0; a + b <= total; ++b) {
        Weight mu{a, b, total - a - b};
        EXPECT_EQ(fr(mu), static_cast<unsigned long>(count_ssyt(lam, mu))) << rootdata::to_string(mu);
      }
  }
}

TEST(MinimalLattice, Sl2DividedPowers) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto l = minimal_lattice(build_irreducible_Q(gl2, {2, 0}), gl2);
  // Lattice basis v, f v, f^(2) v: f acts as 1 then 2.
  EXPECT_EQ(l.lower[0][1], (MatrixZ{{0, 0, 0}, {1, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(l.lower[0][2], (MatrixZ{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
  EXPECT_EQ(l.raise[0][1], (MatrixZ{{0, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(l.raise[0].size(), 3u);
}

TEST(MinimalLattice, MinusculeAndTrivial) {
  for (int n = 2; n <= 4; ++n) {
    auto d = build_root_datum(GroupSpec{rootdata::Family::GL, n, 0});
    for (int k = 0; k < d.rank; ++k) {
      auto l = minimal_lattice(build_irreducible_Q(d, d.fundamental_weights[k]), d);
      for (int i = 0; i < d.rank; ++i) {
        EXPECT_EQ(l.raise[i].size(), 2u);
        EXPECT_EQ(l.lower[i].size(), 2u);
      }
      for (const auto& b : l.blocks) EXPECT_EQ(b.rank(), 1u);
    }
  }
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto triv = minimal_lattice(build_irreducible_Q(a2, {0, 0}), a2);
  EXPECT_EQ(triv.dim(), 1u);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(triv.raise[i].size(), 1u);
}

TEST(MinimalLattice, DividedPowerCoherenceAndClosure) {
  for (const auto& c : cases()) {
    SCOPED_TRACE(std::string(c.group) + rootdata::to_string(c.lambda));
    auto d = build_root_datum(GroupSpec::parse(c.group));
    auto l = minimal_lattice(build_irreducible_Q(d, c.lambda), d);
    for (int i = 0; i < d.rank; ++i)
      for (const auto* fam : {&l.raise[i], &l.lower[i]}) {
        const std::size_t top = fam->size();
        for (std::size_t a = 0; a < top; ++a)
          for (std::size_t b = 0; b < top; ++b) {
            MatrixZ lhs = (*fam)[a] * (*fam)[b];
            if (a + b < top)
              EXPECT_EQ(lhs, (*fam)[a + b] * binom(static_cast<unsigned>(a + b), static_cast<unsigned>(a)));
            else
              EXPECT_TRUE(lhs.is_zero());
          }
      }
    // Lattice generated by v_lambda: the highest block is spanned by the unit vector.
    EXPECT_EQ(l.blocks[0].basis, (MatrixZ{{1}}));
  }
}

TEST(ReduceModP, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto nat = weyl_module(gl2, {1, 0}, 2);
  EXPECT_EQ(nat.dim(), 2u);
  EXPECT_EQ(nat.raise[0][1], MatrixFp(2, {{0, 1}, {0, 0}}));
  EXPECT_EQ(nat.lower[0][1], MatrixFp(2, {{0, 0}, {1, 0}}));
  EXPECT_EQ(nat.provenance, "weyl-reduction");

  auto sym2 = weyl_module(gl2, {2, 0}, 2);
  EXPECT_EQ(sym2.dim(), 3u);
  // e (f v) = 2 v = 0.
  EXPECT_EQ(sym2.raise[0][1](0, 1), 0u);

  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  EXPECT_EQ(weyl_module(a2, {1, 0}, 5).dim(), 3u);
}

TEST(ReduceModP, CharacterIndependentOfPrime) {
  for (const auto& c : cases()) {
    auto d = build_root_datum(GroupSpec::parse(c.group));
    auto l = minimal_lattice(build_irreducible_Q(d, c.lambda), d);
    EXPECT_EQ(character(reduce_mod_p(l, 2)), character(reduce_mod_p(l, 7)));
    EXPECT_EQ(character(reduce_mod_p(l, 3)), character(l.module));
  }
}

TEST(Tensor, NaturalSquareAtTwo) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto nat = weyl_module(gl2, {1, 0}, 2);
  auto sq = tensor(nat, nat);
  EXPECT_EQ(sq.dim(), 4u);
  Character expect{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
  EXPECT_EQ(character(sq), expect);
  ASSERT_EQ(sq.raise[0].size(), 3u);
  EXPECT_EQ(sq.raise[0][2], exactalg::kron(nat.raise[0][1], nat.raise[0][1]));
  EXPECT_EQ(sq.provenance, "tensor");
}

TEST(Tensor, UnitAndCharacterConvolution) {
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto v = weyl_module(a2, {1, 1}, 3);
  auto t = trivial_module(a2, 3);
  auto vt = tensor(v, t);
  EXPECT_EQ(vt.raise, v.raise);
  EXPECT_EQ(vt.lower, v.lower);
  auto w = weyl_module(a2, {1, 0}, 3);
  auto vw = tensor(v, w);
  Character conv;
  for (const auto& [a, ma] : character(v))
    for (const auto& [b, mb] : character(w)) conv[rootdata::add(a, b)] += ma * mb;
  EXPECT_EQ(character(vw), conv);
  // Comultiplication keeps the divided-power relations.
  for (int i = 0; i < 2; ++i) {
    const auto& fam = vw.raise[i];
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t b = 0; a + b < fam.size(); ++b) {
        const auto c = binom(static_cast<unsigned>(a + b), static_cast<unsigned>(a)).get_ui() % 3;
        EXPECT_EQ(fam[a] * fam[b], c * fam[a + b]);
      }
  }
}

TEST(Serialize, RoundTrip) {
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  auto m = tensor(weyl_module(gl3, {1, 0, 0}, 5), weyl_module(gl3, {1, 1, 0}, 5));
  auto j = module_to_json(m);
  auto back = module_from_json(j);
  EXPECT_EQ(back.weights, m.weights);
  EXPECT_EQ(back.raise, m.raise);
  EXPECT_EQ(back.lower, m.lower);
  EXPECT_EQ(back.provenance, m.provenance);
  EXPECT_EQ(back.highest_weight, m.highest_weight);
  EXPECT_EQ(module_to_json(back).dump(), j.dump());
}

TEST(BuildIrreducible, CapExceeded) {
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  EXPECT_THROW(build_irreducible_Q(a2, {2, 2}, 10), CapExceeded);
  EXPECT_THROW(build_irreducible_Q(a2, {-1, 2}), InvalidArgument);
}
