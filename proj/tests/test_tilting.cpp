#include <gtest/gtest.h>

#include <random>

#include "bkclab/tilting/tilting.hpp"

using namespace bkclab;
using namespace bkclab::tilting;
using repbuild::Character;
using repbuild::character;
using rootdata::build_root_datum;
using rootdata::GroupSpec;

namespace {

ModularModule tensor_power(const RootDatum& d, const Weight& w, std::uint64_t p, int r) {
  ModularModule v = repbuild::weyl_module(d, w, p);
  ModularModule m = v;
  for (int k = 1; k < r; ++k) m = repbuild::tensor(m, v);
  return m;
}

std::vector<std::vector<std::uint64_t>> all_coefficients(std::uint64_t p, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& v : out)
      for (std::uint64_t a = 0; a < p; ++a) {
        auto w = v;
        w.push_back(a);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

bool nilpotent(const MatrixFp& x) {
  MatrixFp pw = x;
  for (std::size_t k = 0; k < x.rows(); ++k) pw = pw * x;
  return pw.is_zero();
}

// Local iff every element is a unit or nilpotent.
bool brute_local(const EndAlgebra& a) {
  for (const auto& c : all_coefficients(a.p(), a.dim())) {
    MatrixFp x = a.element(c);
    if (!nilpotent(x) && exactalg::rank(x) != x.rows()) return false;
  }
  return true;
}

// Number of x with x*y nilpotent for every y.
std::size_t brute_radical_size(const EndAlgebra& a) {
  const auto all = all_coefficients(a.p(), a.dim());
  std::vector<MatrixFp> elems;
  for (const auto& c : all) elems.push_back(a.element(c));
  std::size_t count = 0;
  for (const auto& x : elems) {
    bool in = true;
    for (const auto& y : elems)
      if (!nilpotent(x * y)) {
        in = false;
        break;
      }
    count += in;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Character sum(const std::vector<Character>& cs) {
  Character out;
  for (const auto& c : cs)
    for (const auto& [w, m] : c) out[w] += m;
  return out;
}

std::vector<std::size_t> dims_of(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& s : d.summands) out.push_back(s.module.dim());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(LowestAlcove, Examples) {
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  EXPECT_EQ(max_coroot_pairing(a2, {1, 1}), 4);
  auto t = lowest_alcove_tilting(a2, 7, {1, 1});
  EXPECT_EQ(t.module.dim(), 8u);
  EXPECT_EQ(t.label, "T(1,1)");
  auto triv = lowest_alcove_tilting(a2, 2, {0, 0});
  EXPECT_EQ(triv.module.dim(), 1u);
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  EXPECT_EQ(max_coroot_pairing(gl2, {2, 0}), 3);
  EXPECT_THROW(lowest_alcove_tilting(gl2, 2, {2, 0}), RegimeViolated);
  EXPECT_NO_THROW(lowest_alcove_tilting(gl2, 3, {2, 0}));
}

TEST(EndAlgebra, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  EXPECT_EQ(end_algebra(tensor_power(gl2, {1, 0}, 2, 2)).dim(), 2u);
  EXPECT_EQ(end_algebra(tensor_power(gl2, {1, 0}, 3, 2)).dim(), 2u);
  EXPECT_EQ(end_algebra(repbuild::trivial_module(gl2, 5)).dim(), 1u);
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  EXPECT_EQ(end_algebra(repbuild::weyl_module(a2, {1, 1}, 7)).dim(), 1u);
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  EXPECT_EQ(end_algebra(repbuild::weyl_module(gl3, {2, 1, 0}, 7)).dim(), 1u);
}

TEST(EndAlgebra, SchurWeylDimensions) {
  // Sum of squared standard-tableau counts over partitions of r with at most n rows.
  struct Case {
    const char* group;
    int r;
    std::size_t dim;
  };
  for (const Case& c : {Case{"GL2", 2, 2}, Case{"GL2", 3, 5}, Case{"GL2", 4, 14}, Case{"GL3", 2, 2}, Case{"GL3", 3, 6}}) {
    auto d = build_root_datum(GroupSpec::parse(c.group));
    for (std::uint64_t p : {2u, 3u, 5u}) {
      SCOPED_TRACE(std::string(c.group) + " r=" + std::to_string(c.r) + " p=" + std::to_string(p));
      const auto m = tensor_power(d, d.fundamental_weights[0], p, c.r);
      const auto end = end_algebra(m);
      EXPECT_EQ(end.dim(), c.dim);
      EXPECT_TRUE(end.coordinates(MatrixFp::identity(p, m.dim())).has_value());
      for (const auto& x : end.basis)
        for (const auto& g : m.generators()) EXPECT_TRUE(commutes(x, g));
    }
  }
}

TEST(FittingSplit, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  std::mt19937_64 rng(1);
  auto sq3 = tensor_power(gl2, {1, 0}, 3, 2);
  EXPECT_EQ(dims_of(fitting_split(sq3, rng)), (std::vector<std::size_t>{1, 3}));
  auto sq2 = tensor_power(gl2, {1, 0}, 2, 2);
  EXPECT_EQ(dims_of(fitting_split(sq2, rng)), (std::vector<std::size_t>{4}));
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  auto adj = repbuild::weyl_module(a2, {1, 1}, 7);
  auto d = fitting_split(adj, rng);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_EQ(d.summands[0].module.raise, adj.raise);
  EXPECT_TRUE(d.steps.empty());
}

TEST(FittingSplit, ProjectorsAndCharacterAdditivity) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  std::mt19937_64 rng(11);
  std::vector<ModularModule> modules = {tensor_power(gl2, {1, 0}, 3, 3), tensor_power(gl2, {1, 0}, 5, 4),
                                        tensor_power(gl2, {1, 0}, 2, 4), tensor_power(gl3, {1, 0, 0}, 3, 3),
                                        repbuild::tensor(repbuild::weyl_module(gl3, {1, 0, 0}, 2),
                                                         repbuild::weyl_module(gl3, {1, 1, 0}, 2))};
  for (const auto& m : modules) {
    const auto d = fitting_split(m, rng);
    EXPECT_NO_THROW(check_decomposition(m, d));
    std::vector<Character> parts;
    for (const auto& s : d.summands) {
      parts.push_back(character(s.module));
      EXPECT_TRUE(is_indecomposable(end_algebra(s.module)));
    }
    EXPECT_EQ(sum(parts), character(m));
  }
}

TEST(Locality, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  EXPECT_TRUE(is_indecomposable(end_algebra(repbuild::trivial_module(gl2, 3))));
  EXPECT_TRUE(is_indecomposable(end_algebra(tensor_power(gl2, {1, 0}, 2, 2))));
  EXPECT_FALSE(is_indecomposable(end_algebra(tensor_power(gl2, {1, 0}, 3, 2))));
}

TEST(Locality, AgreesWithEnumeration) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  std::vector<ModularModule> modules = {
      tensor_power(gl2, {1, 0}, 2, 2), tensor_power(gl2, {1, 0}, 3, 2), tensor_power(gl2, {1, 0}, 2, 3),
      tensor_power(gl2, {1, 0}, 3, 3), tensor_power(gl2, {1, 0}, 5, 3), tensor_power(gl3, {1, 0, 0}, 2, 2),
      tensor_power(gl3, {1, 0, 0}, 2, 3), tensor_power(gl3, {1, 0, 0}, 3, 3),
      repbuild::tensor(repbuild::weyl_module(gl2, {2, 0}, 2), repbuild::weyl_module(gl2, {1, 0}, 2)),
      repbuild::tensor(repbuild::weyl_module(gl2, {2, 0}, 3), repbuild::weyl_module(gl2, {1, 0}, 3))};
  std::mt19937_64 rng(3);
  std::size_t checked = 0, local = 0;
  for (const auto& m : modules) {
    std::vector<ModularModule> all{m};
    for (const auto& s : fitting_split(m, rng).summands) all.push_back(s.module);
    for (const auto& x : all) {
      const auto end = end_algebra(x);
      if (ipow(x.p, end.dim()) > 300) continue;
      SCOPED_TRACE("dim " + std::to_string(x.dim()) + " p=" + std::to_string(x.p) + " end " + std::to_string(end.dim()));
      EXPECT_EQ(is_indecomposable(end), brute_local(end));
      EXPECT_EQ(ipow(x.p, radical(end).cols()), brute_radical_size(end));
      ++checked;
      local += is_indecomposable(end);
    }
  }
  EXPECT_GE(checked, 15u);
  EXPECT_GT(local, 0u);
  EXPECT_LT(local, checked);
}

TEST(ExtractTilting, Examples) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  std::mt19937_64 rng(5);
  auto t2 = extract_tilting(gl2, 2, {2, 0}, rng);
  EXPECT_EQ(t2.module.dim(), 4u);
  EXPECT_EQ(character(t2.module), (Character{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
  EXPECT_EQ(t2.route, "tensor-split");
  EXPECT_EQ(t2.factors, (std::vector<Weight>{{1, 0}, {1, 0}}));

  auto t5 = extract_tilting(gl2, 5, {2, 0}, rng);
  EXPECT_EQ(t5.module.dim(), 3u);
  EXPECT_EQ(character(t5.module), character(repbuild::weyl_module(gl2, {2, 0}, 5)));

  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  auto fund = extract_tilting(gl3, 3, {1, 1, 0}, rng);
  auto weyl = repbuild::weyl_module(gl3, {1, 1, 0}, 3);
  EXPECT_EQ(fund.module.weights, weyl.weights);
  EXPECT_EQ(fund.module.raise, weyl.raise);
  EXPECT_EQ(fund.module.lower, weyl.lower);

  // Determinant twist: (3, 1) = (2, 0) + det.
  auto twisted = extract_tilting(gl2, 2, {3, 1}, rng);
  EXPECT_EQ(twisted.factors, (std::vector<Weight>{{1, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(character(twisted.module), (Character{{{3, 1}, 1}, {{2, 2}, 2}, {{1, 3}, 1}}));
}

TEST(ExtractTilting, Sl2TiltingCharacters) {
  // p <= a <= 2p-2: T(a) has Weyl factors Delta(a), Delta(2p-2-a); a = 2p-1 is Steinberg times a Frobenius twist.
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  std::mt19937_64 rng(9);
  auto expect = [&](std::uint64_t p, std::int64_t a, std::vector<std::int64_t> tops) {
    Character c;
    for (auto b : tops)
      for (std::int64_t k = 0; k <= b; ++k) ++c[{b - k + (a - b) / 2, k + (a - b) / 2}];
    auto t = extract_tilting(gl2, p, {a, 0}, rng);
    EXPECT_EQ(character(t.module), c) << "p=" << p << " a=" << a;
  };
  expect(3, 3, {3, 1});
  expect(3, 4, {4, 0});
  expect(2, 3, {3});
  expect(5, 5, {5, 3});
}

TEST(ExtractTilting, SeedIndependenceAndRouteConsistency) {
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  auto gl3 = build_root_datum(GroupSpec::parse("GL3"));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::mt19937_64 a(seed), b(seed + 100);
    EXPECT_EQ(character(extract_tilting(gl2, 3, {4, 0}, a).module),
              character(extract_tilting(gl2, 3, {4, 0}, b).module));
  }
  std::mt19937_64 rng(0);
  for (const auto& [d, p, lam] : {std::tuple{&gl2, 5u, Weight{3, 0}}, std::tuple{&gl2, 7u, Weight{4, 0}},
                                  std::tuple{&gl3, 7u, Weight{2, 1, 0}}, std::tuple{&gl3, 5u, Weight{1, 1, 0}}}) {
    ASSERT_TRUE(in_lowest_alcove(*d, p, lam));
    EXPECT_EQ(character(extract_tilting(*d, p, lam, rng).module), character(lowest_alcove_tilting(*d, p, lam).module));
  }
}

TEST(ExtractTilting, RejectedRegimes) {
  std::mt19937_64 rng(0);
  auto b2 = build_root_datum(GroupSpec::parse("B2"));
  EXPECT_THROW(extract_tilting(b2, 5, {2, 0}, rng), RegimeViolated);
  auto a2 = build_root_datum(GroupSpec::parse("A2"));
  EXPECT_THROW(extract_tilting(a2, 2, {1, 1}, rng), RegimeViolated);
  auto gl2 = build_root_datum(GroupSpec::parse("GL2"));
  EXPECT_THROW(extract_tilting(gl2, 2, {0, 1}, rng), InvalidArgument);
  std::mt19937_64 r2(0);
  EXPECT_EQ(build_tilting(gl2, 2, {2, 0}, r2).route, "tensor-split");
  EXPECT_EQ(build_tilting(gl2, 5, {2, 0}, r2).route, "lowest-alcove");
}
