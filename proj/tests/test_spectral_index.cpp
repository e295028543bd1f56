#include <gtest/gtest.h>

#include <cmath>

#include "endindex/index_engine.hpp"
#include "support.hpp"

using namespace endindex;
using endindex::gen::Rng;

namespace {

CanonicalPoly C(const char* s) { return canonicalize(parse_laurent(s)); }

AlexanderData alex(std::vector<const char*> ps) {
  AlexanderData a;
  for (auto p : ps) a.polys.push_back(C(p));
  return a;
}

AlexanderData fox() { return alex({"t - 1", "t - 2", "t - 1/2", "t - 1"}); }
AlexanderData s1xs2() { return alex({"t - 1", "1", "t - 1", "1"}); }

IndexFunction build(const AlexanderData& a, int n, long long chi) {
  return index_function(a, {n, chi}, exceptional_weights(a, n));
}

}  // namespace

TEST(Roots, Examples) {
  auto a = find_roots(C("t - 2"), 1);
  ASSERT_EQ(a.size(), 1u);
  ASSERT_TRUE(a[0].exact.has_value());
  EXPECT_EQ(*a[0].exact, Rational(2));
  EXPECT_EQ(a[0].multiplicity, 1u);
  EXPECT_EQ(a[0].degree_k, 1u);

  auto b = find_roots(canonicalize(parse_laurent("t - 1") * parse_laurent("t - 1")), 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(*b[0].exact, Rational(1));
  EXPECT_EQ(b[0].multiplicity, 2u);

  auto c = find_roots(C("t^2 + 1"), 0);
  ASSERT_EQ(c.size(), 2u);
  for (const auto& r : c) {
    EXPECT_FALSE(r.exact.has_value());
    EXPECT_NEAR(std::abs(r.approx), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(r.approx.imag()), 1.0, 1e-12);
    EXPECT_LE(r.radius, 1e-10);
  }
  EXPECT_TRUE(find_roots(CanonicalPoly(), 0).empty());
}

TEST(Roots, MultiplicitiesSumToDegree) {
  Rng rng(41);
  for (int it = 0; it < 40; ++it) {
    AlexanderData a = gen::random_alexander(rng, 1);
    for (std::size_t k = 0; k < a.polys.size(); ++k) {
      auto roots = find_roots(a.at(k), k);
      unsigned total = 0;
      for (const auto& r : roots) {
        total += r.multiplicity;
        auto v = r.squarefree_factor.poly().evaluate(r.approx);
        EXPECT_LE(std::abs(v), 1e-8 * (1.0 + r.residual * 1e8));
        if (!r.exact) EXPECT_LE(std::abs(r.approx) - r.modulus, 1e-12);
      }
      EXPECT_EQ(static_cast<int>(total), a.at(k).degree());
    }
  }
}

TEST(Walls, FoxExample) {
  ExceptionalSet w = exceptional_weights(fox(), 4);
  ASSERT_EQ(w.walls.size(), 3u);
  EXPECT_EQ(w.walls[0].delta_exact().value(), "ln(1/2)");
  EXPECT_EQ(w.walls[1].delta_exact().value(), "ln(1)");
  EXPECT_EQ(w.walls[2].delta_exact().value(), "ln(2)");
  EXPECT_EQ(*w.walls[0].exact_modulus, Rational(1, 2));
  EXPECT_DOUBLE_EQ(w.walls[2].delta, std::log(2.0));
  EXPECT_EQ(w.walls[0].jump, -1);
  // λ = 1 appears in A_0 and A_3; both lie in the range k <= n - 1 and cancel.
  EXPECT_EQ(w.walls[1].jump, 0);
  ASSERT_EQ(w.walls[1].contributions.size(), 2u);
  EXPECT_EQ(w.walls[1].contributions[0].k, 0u);
  EXPECT_EQ(w.walls[1].contributions[1].k, 3u);
  EXPECT_EQ(w.walls[2].jump, 1);
}

TEST(Walls, ConstantPolynomialsGiveNoWalls) {
  EXPECT_TRUE(exceptional_weights(alex({"1", "1", "1"}), 3).walls.empty());
}

TEST(Walls, EqualModuliMerge) {
  // i, -i and 1 share modulus 1; sqrt(2) and -sqrt(2) from t^2 - 2 match 1 + i from t^2 - 2t + 2.
  ExceptionalSet a = exceptional_weights(alex({"t^2 + 1", "t - 1"}), 2);
  ASSERT_EQ(a.walls.size(), 1u);
  EXPECT_EQ(a.walls[0].jump, -2 + 1);
  ExceptionalSet b = exceptional_weights(alex({"t^2 - 2", "t^2 - 2*t + 2"}), 2);
  ASSERT_EQ(b.walls.size(), 1u);
  EXPECT_NEAR(b.walls[0].delta, 0.5 * std::log(2.0), 1e-12);
  EXPECT_EQ(b.walls[0].jump, -2 + 2);
  ExceptionalSet c = exceptional_weights(alex({"t^2 - 2", "t^2 - 3"}), 2);
  EXPECT_EQ(c.walls.size(), 2u);
  // Cube roots of unity next to 1, and ±√2, ±i√2 next to 1 + i.
  ExceptionalSet d = exceptional_weights(alex({"t^2 + t + 1", "t - 1"}), 2);
  ASSERT_EQ(d.walls.size(), 1u);
  EXPECT_EQ(d.walls[0].jump, -2 + 1);
  ExceptionalSet e = exceptional_weights(alex({"t^4 - 4", "t^2 - 2*t + 2", "t^2 - 3*t + 3"}), 3);
  ASSERT_EQ(e.walls.size(), 2u);
  EXPECT_EQ(e.walls[0].jump, -4 + 2);
  EXPECT_NEAR(e.walls[1].delta, 0.5 * std::log(3.0), 1e-12);
}

TEST(Walls, ConjugationInvariance) {
  // t^2 - 2t + 5 has roots 1 ± 2i; the real factor (t - 1)^2 + 4 and the
  // product of its conjugate linear factors give the same single wall.
  ExceptionalSet w = exceptional_weights(alex({"t^2 - 2*t + 5"}), 1);
  ASSERT_EQ(w.walls.size(), 1u);
  EXPECT_NEAR(w.walls[0].delta, 0.5 * std::log(5.0), 1e-12);
  EXPECT_EQ(w.walls[0].jump, -2);
}

TEST(Walls, MultiplicityTotals) {
  Rng rng(42);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(gen::uniform(rng, 1, 5));
    AlexanderData a = gen::random_alexander(rng, n);
    ExceptionalSet w = exceptional_weights(a, n);
    long long total = 0, expected = 0;
    for (const auto& wall : w.walls)
      for (const auto& c : wall.contributions) total += c.root.multiplicity;
    for (int k = 0; k < n; ++k) expected += a.get(static_cast<std::size_t>(k)).degree();
    EXPECT_EQ(total, expected);
    for (std::size_t i = 0; i + 1 < w.walls.size(); ++i) EXPECT_LT(w.walls[i].delta, w.walls[i + 1].delta);
  }
}

TEST(Detail, CharacteristicPolynomialAndSturm) {
  Matrix<Rational> m(2, 2, Rational(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  EXPECT_EQ(detail::characteristic_polynomial(m), parse_laurent("t^2 - 5*t - 2"));
  LaurentPoly f = parse_laurent("t^2 - 2");
  EXPECT_EQ(detail::count_real_roots(f, Rational(0), Rational(2)), 1u);
  EXPECT_EQ(detail::count_real_roots(f, Rational(-2), Rational(2)), 2u);
  EXPECT_EQ(detail::count_real_roots(f, Rational(2), Rational(3)), 0u);
  // Products of roots of t^2 + 1: i*i = -1, i*(-i) = 1, (-i)*(-i) = -1.
  LaurentPoly q = detail::product_root_polynomial(C("t^2 + 1"));
  EXPECT_EQ(q.evaluate(Rational(1)), 0);
  EXPECT_EQ(q.evaluate(Rational(-1)), 0);
}

TEST(Index, FoxValues) {
  IndexFunction f = build(fox(), 4, 2);
  EXPECT_EQ(f.values, (std::vector<long long>{2, 1, 1, 2}));
  EXPECT_TRUE(f.consistent());
  EXPECT_EQ(index_at(f, 0.5), 1);
  EXPECT_EQ(index_at(f, -0.5), 1);
  EXPECT_EQ(index_at(f, 1.0), 2);
  EXPECT_EQ(index_at(f, -1.0), 2);
  EXPECT_THROW(index_at(f, std::log(2.0)), OnWall);
  EXPECT_THROW(index_at(f, 0.0), OnWall);
  EXPECT_THROW(index_at(f, -std::log(2.0)), OnWall);
}

TEST(Index, ProductEndValues) {
  IndexFunction f = build(s1xs2(), 3, 1);
  ASSERT_EQ(f.walls.size(), 1u);
  EXPECT_EQ(f.walls[0].delta, 0.0);
  EXPECT_EQ(f.values, (std::vector<long long>{1, -1}));
  EXPECT_TRUE(f.consistent());
  for (double d : {-2.0, -0.1, 0.1, 3.0}) EXPECT_EQ(index_at(f, d), d < 0 ? 1 : -1);
}

TEST(Index, ConstantDataGivesConstantIndex) {
  IndexFunction f = build(alex({"1", "1", "1", "1", "1"}), 4, 7);
  EXPECT_TRUE(f.walls.empty());
  EXPECT_EQ(f.values, std::vector<long long>{7});
  EXPECT_EQ(index_at(f, 123.0), 7);
}

TEST(Index, JumpBreakdown) {
  IndexFunction f = build(fox(), 4, 2);
  JumpBreakdown top = jump_at(f, 2);
  EXPECT_EQ(top.jump, 1);
  ASSERT_EQ(top.per_degree.size(), 1u);
  EXPECT_EQ(top.per_degree[0], (std::pair<std::size_t, long long>{1, 1}));
  JumpBreakdown mid = jump_at(f, 1);
  EXPECT_EQ(mid.jump, 0);
  EXPECT_EQ(mid.per_degree.size(), 2u);
  EXPECT_THROW(jump_at(f, 3), DomainError);
  for (std::size_t i = 0; i < f.walls.size(); ++i) EXPECT_EQ(jump_at(f, i).jump, f.values[i + 1] - f.values[i]);

  // Product end with A_k = (t - 1)^{b_k}: jump Σ (-1)^{k+1} b_k.
  AlexanderData p;
  p.polys = {C("t - 1"), canonicalize(parse_laurent("t^2 - 2*t + 1")), CanonicalPoly(), C("t - 1")};
  IndexFunction g = build(p, 4, 0);
  EXPECT_EQ(jump_at(g, 0).jump, -1 + 2 - 0 + 1);
}

TEST(Excision, FoxExamples) {
  AlexanderData a = fox();
  IndexFunction f = build(a, 4, 2);
  ExcisionResult r = excision_index(f, a, 1.0, 0.5);
  EXPECT_EQ(r.via_index, -1);
  EXPECT_EQ(r.via_lemma, -1);
  ExcisionResult same = excision_index(f, a, 0.3, 0.3);
  EXPECT_EQ(same.via_index, 0);
  EXPECT_EQ(same.via_lemma, 0);
  ExcisionResult empty = excision_index(f, a, 0.2, 0.6);
  EXPECT_EQ(empty.value(), 0);
  EXPECT_TRUE(empty.agree());
  EXPECT_THROW(excision_index(f, a, 0.0, 1.0), OnWall);
}

TEST(Duality, Examples) {
  AlexanderData a = fox();
  IndexFunction f = build(a, 4, 2);
  DualityReport d = duality_check(a, 4, &f);
  ASSERT_EQ(d.pairs.size(), 2u);
  EXPECT_TRUE(d.pairs[0].pass);
  EXPECT_TRUE(d.pairs[1].pass);
  EXPECT_EQ(d.pairs[1].rhs, "t - 2");
  EXPECT_EQ(d.parity.size(), 10u);
  EXPECT_TRUE(d.pass());

  AlexanderData s = s1xs2();
  IndexFunction g = build(s, 3, 1);
  DualityReport e = duality_check(s, 3, &g);
  EXPECT_TRUE(e.pass());
  for (const auto& p : e.parity) EXPECT_EQ(p.mirrored, -p.value);

  DualityReport broken = duality_check(alex({"t - 2", "1", "t - 3"}), 3, nullptr);
  EXPECT_FALSE(broken.roots_pass());
}

TEST(IndexProperty, ClosedFormulaMatchesAccumulation) {
  Rng rng(43);
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(gen::uniform(rng, 1, 5));
    long long chi = gen::uniform(rng, -5, 5);
    AlexanderData a = gen::random_alexander(rng, n);
    IndexFunction f = build(a, n, chi);
    EXPECT_EQ(f.values, f.accumulated) << "instance " << it;
    EXPECT_EQ(f.values.back(), (n % 2 == 0 ? 1 : -1) * chi);
    EXPECT_EQ(f.values.size(), f.walls.size() + 1);
  }
}

TEST(IndexProperty, ExcisionPathsAgree) {
  Rng rng(44);
  int pairs = 0;
  while (pairs < 100) {
    int n = static_cast<int>(gen::uniform(rng, 1, 5));
    AlexanderData a = gen::random_alexander(rng, n);
    IndexFunction f = build(a, n, gen::uniform(rng, -3, 3));
    for (int j = 0; j < 5; ++j) {
      double d1 = gen::uniform_real(rng, -3, 3), d2 = gen::uniform_real(rng, -3, 3);
      try {
        ExcisionResult r = excision_index(f, a, d1, d2);
        EXPECT_EQ(r.via_index, r.via_lemma);
        EXPECT_EQ(excision_index(f, a, d1, d1).value(), 0);
        ++pairs;
      } catch (const OnWall&) {
      }
    }
  }
}

TEST(IndexProperty, DualInputsHaveSymmetricWalls) {
  Rng rng(45);
  for (int it = 0; it < 30; ++it) {
    // Build dual data: A_{n-1-k} = reversal(A_k).
    int n = static_cast<int>(gen::uniform(rng, 1, 5));
    AlexanderData seed = gen::random_alexander(rng, n);
    AlexanderData a;
    a.polys.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
      int partner = n - 1 - k;
      if (partner < k) break;
      a.polys[static_cast<std::size_t>(k)] = seed.get(static_cast<std::size_t>(k));
      a.polys[static_cast<std::size_t>(partner)] = reversal(seed.get(static_cast<std::size_t>(k)));
      if (partner == k) {
        CanonicalPoly sym = seed.get(static_cast<std::size_t>(k)) * reversal(seed.get(static_cast<std::size_t>(k)));
        a.polys[static_cast<std::size_t>(k)] = sym;
      }
    }
    // For odd n the two ends agree only when 2χ = Σ (-1)^k deg A_k.
    long long chi = gen::uniform(rng, -3, 3);
    if (n % 2 == 1) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += (k % 2 == 0 ? 1 : -1) * a.get(static_cast<std::size_t>(k)).degree();
      chi = s / 2;
    }
    IndexFunction f = build(a, n, chi);
    DualityReport d = duality_check(a, n, &f);
    EXPECT_TRUE(d.roots_pass());
    // Wall set symmetric under δ -> -δ, with jumps transformed by -(-1)^n.
    ASSERT_TRUE(d.parity_pass()) << "instance " << it;
    const auto& w = f.walls;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Wall& mirror = w[w.size() - 1 - i];
      EXPECT_NEAR(w[i].delta, -mirror.delta, 1e-9);
      EXPECT_EQ(w[i].jump, (n % 2 == 0 ? -1 : 1) * mirror.jump);
    }
  }
}
