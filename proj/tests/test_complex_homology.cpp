#include <gtest/gtest.h>

#include "endindex/homology.hpp"
#include "endindex/twisted_l2.hpp"
#include "support.hpp"

using namespace endindex;
using endindex::gen::Rng;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

LaurentMatrix one(const char* s) {
  LaurentMatrix m(1, 1);
  m(0, 0) = P(s);
  return m;
}

ChainComplex circle() { return ChainComplex({1, 1}, {one("t - 1")}); }
ChainComplex s1xs2() { return ChainComplex({1, 1, 1, 1}, {one("t - 1"), one("0"), one("t - 1")}); }

SimplicialInput triangle(long long c02) {
  SimplicialInput x;
  x.vertices = 3;
  x.simplices = {{}, {{0, 1}, {1, 2}, {0, 2}}};
  x.cocycle = {{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, c02}};
  return x;
}

std::vector<std::string> factors(const HomologyDegree& d) {
  std::vector<std::string> out;
  for (const auto& q : d.invariant_factors) out.push_back(q.to_string());
  return out;
}

}  // namespace

TEST(ChainComplex, AcceptsValidData) {
  EXPECT_NO_THROW(s1xs2());
  EXPECT_NO_THROW(circle());
  EXPECT_EQ(s1xs2().top_degree(), 3u);
  EXPECT_EQ(s1xs2().boundary(0).rows(), 0u);
  EXPECT_EQ(s1xs2().boundary(4).cols(), 0u);
}

TEST(ChainComplex, RejectsBadData) {
  // d1 d2 != 0
  EXPECT_THROW(ChainComplex({1, 1, 1}, {one("t - 1"), one("1")}), InvalidComplex);
  // shape mismatch
  EXPECT_THROW(ChainComplex({1, 2}, {one("t - 1")}), InvalidComplex);
  EXPECT_THROW(ChainComplex({1, 1}, {}), InvalidComplex);
  try {
    ChainComplex({1, 1, 1}, {one("t - 1"), one("t")});
    FAIL();
  } catch (const InvalidComplex& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 0)"), std::string::npos) << e.what();
  }
}

TEST(ChainComplex, EmptyComplexIsFinite) {
  ChainComplex empty;
  HomologyModule h = homology(empty);
  EXPECT_TRUE(h.degrees.empty());
  EXPECT_TRUE(finiteness_check(h).finite);
}

TEST(Simplicial, TriangleLift) {
  ChainComplex cc = lift_simplicial(triangle(1));
  ASSERT_EQ(cc.ranks(), (std::vector<std::size_t>{3, 3}));
  const LaurentMatrix& d1 = cc.boundaries()[0];
  // Columns (01), (12), (02): v1 - v0, v2 - v1, t v2 - v0.
  EXPECT_EQ(d1(0, 0), LaurentPoly(-1));
  EXPECT_EQ(d1(1, 0), LaurentPoly(1));
  EXPECT_EQ(d1(1, 1), LaurentPoly(-1));
  EXPECT_EQ(d1(2, 1), LaurentPoly(1));
  EXPECT_EQ(d1(0, 2), LaurentPoly(-1));
  EXPECT_EQ(d1(2, 2), LaurentPoly::t());
  HomologyModule h = homology(cc);
  EXPECT_EQ(factors(h.degrees[0]), std::vector<std::string>{"t - 1"});
  EXPECT_EQ(h.degrees[0].free_rank, 0u);
  EXPECT_EQ(h.degrees[1].free_rank, 0u);
  EXPECT_TRUE(h.degrees[1].invariant_factors.empty());
  EXPECT_EQ(euler_characteristic_X(cc).value, 0);
}

TEST(Simplicial, TrivialCocycleIsInfinite) {
  ChainComplex cc = lift_simplicial(triangle(0));
  for (const auto& e : cc.boundaries()[0].data())
    EXPECT_TRUE(e.is_zero() || e == LaurentPoly(1) || e == LaurentPoly(-1));
  HomologyModule h = homology(cc);
  Finiteness f = finiteness_check(h);
  EXPECT_FALSE(f.finite);
  EXPECT_EQ(f.infinite_degrees, (std::vector<std::size_t>{0, 1}));
  try {
    alexander_polynomials(h);
    FAIL();
  } catch (const NotFinite& e) {
    EXPECT_EQ(e.degrees(), (std::vector<std::size_t>{0, 1}));
  }
}

TEST(Simplicial, ValidationErrors) {
  SimplicialInput bad = triangle(1);
  bad.simplices.push_back({{0, 1, 2}});
  EXPECT_THROW(validate(bad), InvalidComplex);  // cocycle condition fails on (0, 1, 2)
  SimplicialInput open = triangle(1);
  open.simplices.push_back({{0, 1, 3}});
  open.vertices = 4;
  EXPECT_THROW(validate(open), InvalidComplex);  // faces missing
  SimplicialInput missing = triangle(1);
  missing.cocycle.erase({0, 2});
  EXPECT_THROW(validate(missing), InvalidComplex);
  SimplicialInput unordered = triangle(1);
  unordered.simplices[1][0] = {1, 0};
  EXPECT_THROW(validate(unordered), InvalidComplex);
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic_X(circle()).value, 0);
  EXPECT_EQ(euler_characteristic_X(s1xs2()).value, 0);
  LaurentMatrix d(2, 1);
  d(0, 0) = P("t - 1");
  auto e = euler_characteristic_X(ChainComplex({2, 1}, {d}));
  EXPECT_EQ(e.value, 1);
  EXPECT_TRUE(e.warning.has_value());
}

TEST(Homology, Examples) {
  HomologyModule c = homology(circle());
  EXPECT_EQ(factors(c.degrees[0]), std::vector<std::string>{"t - 1"});
  EXPECT_TRUE(c.degrees[1].invariant_factors.empty());

  HomologyModule s = homology(s1xs2());
  ASSERT_EQ(s.degrees.size(), 4u);
  EXPECT_EQ(factors(s.degrees[0]), std::vector<std::string>{"t - 1"});
  EXPECT_TRUE(s.degrees[1].invariant_factors.empty());
  EXPECT_EQ(factors(s.degrees[2]), std::vector<std::string>{"t - 1"});
  EXPECT_TRUE(s.degrees[3].invariant_factors.empty());
  EXPECT_TRUE(finiteness_check(s).finite);
  AlexanderData a = alexander_polynomials(s);
  EXPECT_EQ(a.at(0).to_string(), "t - 1");
  EXPECT_TRUE(a.at(1).is_one());
  EXPECT_EQ(a.at(2).to_string(), "t - 1");
  EXPECT_TRUE(a.at(3).is_one());

  HomologyModule z = homology(ChainComplex({1, 1}, {one("0")}));
  EXPECT_EQ(z.degrees[0].free_rank, 1u);
  EXPECT_EQ(z.degrees[1].free_rank, 1u);
  EXPECT_EQ(finiteness_check(z).infinite_degrees, (std::vector<std::size_t>{0, 1}));
}

TEST(Homology, FoxModule) {
  std::vector<std::vector<LaurentPoly>> fs = {{P("t - 1")}, {P("t - 2")}, {P("t - 1/2")}, {P("t - 1")}};
  AlexanderData direct = alexander_polynomials(HomologyModule::torsion(fs));
  ASSERT_EQ(direct.polys.size(), 4u);
  EXPECT_EQ(direct.at(0).to_string(), "t - 1");
  EXPECT_EQ(direct.at(1).to_string(), "t - 2");
  EXPECT_EQ(direct.at(2).to_string(), "t - 1/2");
  EXPECT_EQ(direct.at(3).to_string(), "t - 1");

  // The realized complex has the same homology.
  ChainComplex cc = realize_torsion_complex(fs);
  AlexanderData realized = alexander_polynomials(homology(cc));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(realized.at(k), direct.at(k));
  EXPECT_TRUE(realized.get(4).is_one());
}

TEST(Homology, InvariantFactorChain) {
  auto h = HomologyModule::torsion({{P("t - 1"), P("t - 1") * P("t - 2"), P("t - 3")}});
  EXPECT_EQ(factors(h.degrees[0]), (std::vector<std::string>{"t - 1", "t^3 - 6*t^2 + 11*t - 6"}));
}

TEST(HomologyProperty, PlantedComplexesKeepTheirFactors) {
  Rng rng(31);
  for (int it = 0; it < 15; ++it) {
    auto pc = gen::planted_complex(rng);
    HomologyModule h = homology(pc.complex);
    ASSERT_TRUE(finiteness_check(h).finite);
    // Σ (-1)^k ℓ_k = χ(X) forces χ(X) = 0 for finite homology.
    EXPECT_EQ(euler_characteristic_X(pc.complex).value, 0);
    // The degree of A_k is the dimension of the torsion, and A_k vanishes at every root.
    AlexanderData a = alexander_polynomials(h);
    for (std::size_t k = 0; k < h.degrees.size(); ++k)
      EXPECT_EQ(static_cast<std::size_t>(a.at(k).degree()), h.degrees[k].torsion_dimension());
    for (const auto& r : pc.rational_roots) {
      bool found = false;
      for (const auto& p : a.polys) found = found || p.poly().evaluate(r) == 0;
      EXPECT_TRUE(found);
    }
  }
}

TEST(HomologyProperty, TwistedDimsVanishOffRoots) {
  Rng rng(32);
  for (int it = 0; it < 10; ++it) {
    auto pc = gen::planted_complex(rng);
    AlexanderData a = alexander_polynomials(homology(pc.complex));
    for (int s = 0; s < 20; ++s) {
      GaussianRational z(gen::small_rational(rng, 7, 5), gen::small_rational(rng, 7, 5));
      bool root = z.is_zero();
      for (const auto& p : a.polys) root = root || p.poly().evaluate(z).is_zero();
      if (root) continue;
      for (auto d : twisted_dims(pc.complex, z).dims) EXPECT_EQ(d, 0u);
    }
  }
}

TEST(SimplicialProperty, LiftSatisfiesBoundarySquaredZero) {
  Rng rng(33);
  for (int it = 0; it < 20; ++it) {
    gen::GridTorus g{static_cast<std::size_t>(gen::uniform(rng, 3, 4)),
                         static_cast<std::size_t>(gen::uniform(rng, 3, 4))};
    auto keep = gen::random_keep(rng, 2 * g.p * g.q, 0.6);
    auto x = gen::torus_subcomplex(g, keep, gen::random_potential(rng, g.p * g.q));
    EXPECT_NO_THROW(lift_simplicial(x));  // the constructor verifies d∘d = 0
  }
}

TEST(SimplicialProperty, CoboundaryShiftPreservesInvariantFactors) {
  Rng rng(34);
  for (int it = 0; it < 20; ++it) {
    gen::GridTorus g{static_cast<std::size_t>(gen::uniform(rng, 3, 4)),
                         static_cast<std::size_t>(gen::uniform(rng, 3, 4))};
    auto keep = gen::random_keep(rng, 2 * g.p * g.q, it % 4 == 0 ? 1.0 : 0.7);
    std::vector<long long> zero(g.p * g.q, 0);
    HomologyModule base = homology(lift_simplicial(gen::torus_subcomplex(g, keep, zero)));
    HomologyModule shifted =
        homology(lift_simplicial(gen::torus_subcomplex(g, keep, gen::random_potential(rng, g.p * g.q))));
    ASSERT_EQ(base.degrees.size(), shifted.degrees.size());
    for (std::size_t k = 0; k < base.degrees.size(); ++k) {
      EXPECT_EQ(base.degrees[k].free_rank, shifted.degrees[k].free_rank);
      EXPECT_EQ(factors(base.degrees[k]), factors(shifted.degrees[k]));
    }
  }
}

TEST(Simplicial, FullTorusIsFinite) {
  gen::GridTorus g{3, 4};
  std::vector<bool> keep(2 * g.p * g.q, true);
  auto x = gen::torus_subcomplex(g, keep, std::vector<long long>(g.p * g.q, 0));
  HomologyModule h = homology(lift_simplicial(x));
  ASSERT_TRUE(finiteness_check(h).finite);
  // The cover is a cylinder: H_0 = H_1 = Λ/(t - 1), H_2 = 0.
  EXPECT_EQ(factors(h.degrees[0]), std::vector<std::string>{"t - 1"});
  EXPECT_EQ(factors(h.degrees[1]), std::vector<std::string>{"t - 1"});
  EXPECT_TRUE(h.degrees[2].invariant_factors.empty());
}
