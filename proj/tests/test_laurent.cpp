#include <random>

#include <gtest/gtest.h>

#include "hitchin/error.hpp"
#include "hitchin/laurent.hpp"
#include "hitchin/serialization.hpp"
#include "oracles.hpp"

using namespace hitchin;

namespace {

const LaurentPoly t = LaurentPoly::t();

std::vector<QuotientSpec> all_specs() {
  std::vector<QuotientSpec> s{QuotientSpec::generic(), QuotientSpec::minus_one()};
  for (int k = 2; k <= 6; ++k) {
    s.push_back(QuotientSpec::unit_root(k));
    s.push_back(QuotientSpec::compact(k));
  }
  return s;
}

}  // namespace

TEST(LaurentPoly, CanonicalFormDropsZeros) {
  const LaurentPoly p = (LaurentPoly(1) + t) - t;
  EXPECT_EQ(p, LaurentPoly(1));
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_EQ(LaurentPoly::monomial(0, 5), LaurentPoly());
}

TEST(LaurentPoly, ArithmeticAndPrinting) {
  const LaurentPoly p = LaurentPoly(1) - t;
  const LaurentPoly q = LaurentPoly::monomial(1, -1) + LaurentPoly(1);
  EXPECT_EQ(p * q, LaurentPoly::monomial(1, -1) - t);
  EXPECT_EQ(p.coefficient(1), -1);
  EXPECT_EQ(q.min_exponent(), -1);
  EXPECT_EQ(p.max_exponent(), 1);
  EXPECT_EQ(p.to_string(), "1 - t");
  EXPECT_EQ((LaurentPoly::monomial(3, 2) - LaurentPoly::monomial(1, -1)).to_string(), "-t^-1 + 3t^2");
  EXPECT_EQ(p.evaluate_at_sign(-1), 2);
  EXPECT_EQ(p.evaluate_at_sign(1), 0);
}

TEST(LaurentSpecialize, TCubedModTwo) {
  EXPECT_EQ(laurent_specialize(LaurentPoly::monomial(1, 3), QuotientSpec::unit_root(2)), t);
}

TEST(LaurentSpecialize, OnePlusTVanishesInCompactTwo) {
  EXPECT_TRUE(laurent_specialize(LaurentPoly(1) + t, QuotientSpec::compact(2)).is_zero());
}

TEST(LaurentSpecialize, OneMinusTAtMinusOne) {
  EXPECT_EQ(laurent_specialize(LaurentPoly(1) - t, QuotientSpec::minus_one()), LaurentPoly(2));
}

TEST(LaurentSpecialize, ResidueExponentRanges) {
  std::mt19937 rng(1);
  for (int k = 2; k <= 6; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const LaurentPoly p = oracle::random_laurent(rng, -9, 9, 5);
      const LaurentPoly u = laurent_specialize(p, QuotientSpec::unit_root(k));
      const LaurentPoly c = laurent_specialize(p, QuotientSpec::compact(k));
      if (!u.is_zero()) {
        EXPECT_GE(u.min_exponent(), 0);
        EXPECT_LE(u.max_exponent(), k - 1);
      }
      if (!c.is_zero()) {
        EXPECT_GE(c.min_exponent(), 0);
        EXPECT_LE(c.max_exponent(), k - 2);
      }
    }
  }
}

TEST(LaurentSpecialize, AgreesWithEvaluationAtRootsOfUnityModP) {
  std::mt19937 rng(17);
  for (int k = 2; k <= 6; ++k) {
    const auto [prime, omega] = oracle::prime_with_root_of_unity(k);
    for (int trial = 0; trial < 25; ++trial) {
      const LaurentPoly p = oracle::random_laurent(rng, -12, 12, 50);
      const LaurentPoly u = laurent_specialize(p, QuotientSpec::unit_root(k));
      const LaurentPoly c = laurent_specialize(p, QuotientSpec::compact(k));
      std::uint64_t w = 1;
      for (int j = 0; j < k; ++j) {
        EXPECT_EQ(oracle::evaluate_mod(u, w, prime), oracle::evaluate_mod(p, w, prime));
        if (j > 0) EXPECT_EQ(oracle::evaluate_mod(c, w, prime), oracle::evaluate_mod(p, w, prime));
        w = static_cast<std::uint64_t>(static_cast<unsigned __int128>(w) * omega % prime);
      }
    }
  }
}

TEST(LaurentSpecialize, IsARingHomomorphism) {
  std::mt19937 rng(23);
  for (const auto& spec : all_specs()) {
    for (int trial = 0; trial < 20; ++trial) {
      const LaurentPoly p = oracle::random_laurent(rng, -5, 5, 7);
      const LaurentPoly q = oracle::random_laurent(rng, -4, 6, 7);
      const auto s = [&](const LaurentPoly& x) { return laurent_specialize(x, spec); };
      EXPECT_EQ(s(p * q), s(s(p) * s(q))) << spec.to_string();
      EXPECT_EQ(s(p + q), s(s(p) + s(q))) << spec.to_string();
      EXPECT_EQ(s(s(p)), s(p)) << spec.to_string();
    }
  }
}

TEST(QuotientSpec, ParseAndPrint) {
  EXPECT_EQ(QuotientSpec::parse("generic"), QuotientSpec::generic());
  EXPECT_EQ(QuotientSpec::parse("t=-1"), QuotientSpec::minus_one());
  EXPECT_EQ(QuotientSpec::parse("minus_one"), QuotientSpec::minus_one());
  EXPECT_EQ(QuotientSpec::parse("unit_root:3"), QuotientSpec::unit_root(3));
  EXPECT_EQ(QuotientSpec::parse("t^4=1"), QuotientSpec::unit_root(4));
  EXPECT_EQ(QuotientSpec::parse("compact:3"), QuotientSpec::compact(3));
  for (const auto& s : all_specs()) EXPECT_EQ(QuotientSpec::parse(s.to_string()), s);
  for (const char* bad : {"", "compact:1", "unit_root:0", "t=2", "compact:x", "generic2"}) {
    EXPECT_THROW(QuotientSpec::parse(bad), Error) << bad;
  }
  EXPECT_THROW(QuotientSpec::unit_root(1), Error);
}

TEST(LaurentMatrix, ProductDeterminantAndEvaluation) {
  LaurentMatrix a(2, 2);
  a(0, 0) = LaurentPoly(1) - t;
  a(0, 1) = LaurentPoly(1);
  a(1, 0) = t;
  EXPECT_EQ(determinant(a), -t);
  const LaurentMatrix sq = a * a;
  EXPECT_EQ(determinant(sq), t * t);
  EXPECT_EQ(sq(0, 0), (LaurentPoly(1) - t) * (LaurentPoly(1) - t) + t);
  EXPECT_EQ(a.evaluate_at_sign(1), (IntegerMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(a.evaluate_at_sign(-1), (IntegerMatrix{{2, 1}, {-1, 0}}));
  EXPECT_TRUE((LaurentMatrix::identity(3) * LaurentMatrix::identity(3)) == LaurentMatrix::identity(3));
}

TEST(LaurentMatrix, DeterminantMultiplicativeOnRandomMatrices) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentMatrix a(4, 4), b(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        a(r, c) = oracle::random_laurent(rng, -1, 1, 2);
        b(r, c) = oracle::random_laurent(rng, 0, 2, 2);
      }
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Serialization, LaurentRoundTrip) {
  const LaurentPoly p = LaurentPoly::monomial(Integer("-123456789012345678901"), -2) + t;
  const auto j = to_json(p);
  EXPECT_EQ(j.at("-2"), "-123456789012345678901");
  EXPECT_EQ(j.at("1"), "1");
  EXPECT_EQ(laurent_poly_from_json(j), p);
  LaurentMatrix m(1, 2);
  m(0, 1) = p;
  EXPECT_TRUE(laurent_matrix_from_json(to_json(m)) == m);
}
