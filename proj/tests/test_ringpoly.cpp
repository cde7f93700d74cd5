#include <gtest/gtest.h>

#include <random>

#include "liftenum/error.hpp"
#include "liftenum/ringpoly.hpp"

using namespace liftenum;

namespace {

RingPolynomial random_poly(std::mt19937_64& rng, const ModulusContext& ring, int degree, bool monic) {
  std::vector<Residue> c(degree + 1);
  for (auto& v : c) v = static_cast<Residue>(rng() % static_cast<std::uint64_t>(ring.q()));
  if (monic) c.back() = 1;
  return RingPolynomial(ring, c);
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;  // sentinel: nothing thrown
}

}  // namespace

TEST(ModulusContext, Arithmetic) {
  ModulusContext r(3, 2);
  EXPECT_EQ(r.q(), 9);
  EXPECT_EQ(r.add(7, 5), 3);
  EXPECT_EQ(r.sub(2, 5), 6);
  EXPECT_EQ(r.mul(4, 7), 1);
  EXPECT_EQ(r.neg(0), 0);
  EXPECT_EQ(r.neg(4), 5);
  EXPECT_EQ(r.inverse(4), 7);
  EXPECT_EQ(r.valuation(0), 2);
  EXPECT_EQ(r.valuation(3), 1);
  EXPECT_EQ(r.valuation(5), 0);
  EXPECT_EQ(r.power_of_p(1), 3);
  EXPECT_EQ(r.power_of_p(2), 0);
  EXPECT_TRUE(r.is_unit(8));
  EXPECT_FALSE(r.is_unit(6));
}

TEST(ModulusContext, InverseOfEveryUnit) {
  for (auto [p, m] : {std::pair{2, 5}, {3, 4}, {5, 3}}) {
    ModulusContext r(p, m);
    for (Residue a = 0; a < r.q(); ++a) {
      if (r.is_unit(a)) {
        EXPECT_EQ(r.mul(a, r.inverse(a)), 1);
      } else {
        EXPECT_EQ(code_of([&] { r.inverse(a); }), ErrorCode::DivisorNotMonicUnit);
      }
    }
  }
}

TEST(ModulusContext, RejectsBadModuli) {
  EXPECT_EQ(code_of([] { ModulusContext(4, 1); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { ModulusContext(2, 0); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { ModulusContext(2, 62); }), ErrorCode::InvalidModulus);
  EXPECT_NO_THROW(ModulusContext(2, 61));
  EXPECT_EQ(ModulusContext::max_tower_exponent(2), 29);
  EXPECT_EQ(ModulusContext::max_tower_exponent(3), 18);
}

TEST(RingPolynomial, BasicsAndPrinting) {
  ModulusContext r(2, 2);
  auto f = RingPolynomial::from_integers(r, {-1, 0, 0, 1});
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.coeff(0), 3);
  EXPECT_TRUE(f.is_monic());
  EXPECT_EQ(f, RingPolynomial::x_pow_minus_one(r, 3));
  EXPECT_TRUE(RingPolynomial(r, {0, 0, 4}).is_zero());
  EXPECT_EQ(RingPolynomial(r).degree(), -1);
  EXPECT_EQ(f.shifted(2).degree(), 5);
  EXPECT_EQ(f.scaled(2), RingPolynomial(r, {2, 0, 0, 2}));
  EXPECT_EQ(f.reduce_to(1), RingPolynomial::from_integers(ModulusContext(2, 1), {1, 0, 0, 1}));
}

TEST(RingPolynomial, DivmodProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    ModulusContext r(trial % 2 ? 3 : 2, 1 + trial % 4);
    auto f = random_poly(rng, r, static_cast<int>(rng() % 12), false);
    auto g = random_poly(rng, r, 1 + static_cast<int>(rng() % 5), true);
    auto [q, rem] = divmod(f, g);
    EXPECT_EQ(q * g + rem, f);
    EXPECT_LT(rem.degree(), g.degree());
  }
}

TEST(RingPolynomial, DivmodNeedsUnitLeading) {
  ModulusContext r(2, 2);
  EXPECT_EQ(code_of([&] { divmod(RingPolynomial(r, {1, 1}), RingPolynomial(r, {1, 2})); }),
            ErrorCode::DivisorNotMonicUnit);
  EXPECT_EQ(code_of([&] { divmod(RingPolynomial(r, {1, 1}), RingPolynomial(r)); }), ErrorCode::DivisorNotMonicUnit);
}

TEST(RingPolynomial, XgcdOverField) {
  std::mt19937_64 rng(11);
  ModulusContext f3(3, 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_poly(rng, f3, 1 + static_cast<int>(rng() % 6), true);
    auto h = random_poly(rng, f3, 1 + static_cast<int>(rng() % 6), true);
    auto bz = xgcd_mod_p(g, h);
    EXPECT_EQ(bz.a * g + bz.b * h, bz.gcd);
    EXPECT_TRUE(divmod(g, bz.gcd).remainder.is_zero());
    EXPECT_TRUE(divmod(h, bz.gcd).remainder.is_zero());
  }
  EXPECT_EQ(code_of([] {
              ModulusContext r(2, 2);
              xgcd_mod_p(RingPolynomial(r, {1, 1}), RingPolynomial(r, {1}));
            }),
            ErrorCode::ContextNotPrimeField);
}

TEST(Factorization, XnMinusOne) {
  auto f23 = factor_xn_minus_1(2, 23);
  ASSERT_EQ(f23.size(), 3u);
  EXPECT_EQ(f23[0].degree(), 1);
  EXPECT_EQ(f23[1].degree(), 11);
  EXPECT_EQ(f23[2].degree(), 11);
  RingPolynomial prod = RingPolynomial::monomial(ModulusContext(2, 1), 0);
  for (const auto& f : f23) prod = prod * f;
  EXPECT_EQ(prod, RingPolynomial::x_pow_minus_one(ModulusContext(2, 1), 23));

  auto t23 = factor_xn_minus_1(3, 23);
  ASSERT_EQ(t23.size(), 3u);
  EXPECT_EQ(t23[1].degree(), 11);

  auto f7 = factor_xn_minus_1(2, 7);
  ASSERT_EQ(f7.size(), 3u);
  EXPECT_EQ(f7[1].degree(), 3);
  EXPECT_EQ(f7[2].degree(), 3);

  EXPECT_EQ(code_of([] { factor_xn_minus_1(2, 8); }), ErrorCode::UnsupportedLength);
  EXPECT_EQ(code_of([] { factor_xn_minus_1(3, 0); }), ErrorCode::UnsupportedLength);
}

TEST(Hensel, LiftsGolayFactorization) {
  auto fac = factor_xn_minus_1(2, 23);
  const auto g1 = fac[1];
  const auto h1 = fac[0] * fac[2];
  for (int m : {2, 3, 8, 20}) {
    const auto f = RingPolynomial::x_pow_minus_one(ModulusContext(2, m), 23);
    auto [g, h] = hensel_lift(f, g1, h1, m);
    EXPECT_EQ(g * h, f);
    EXPECT_TRUE(g.is_monic());
    EXPECT_EQ(g.degree(), 11);
    EXPECT_EQ(g.reduce_to(1), g1);
    EXPECT_EQ(h.reduce_to(1), h1);
  }
}

TEST(Hensel, LiftsAreCoherentAcrossLevels) {
  auto fac = factor_xn_minus_1(3, 23);
  const auto h1 = fac[0] * fac[2];
  const auto top = hensel_lift(RingPolynomial::x_pow_minus_one(ModulusContext(3, 6), 23), fac[1], h1, 6).g;
  for (int m = 1; m < 6; ++m) {
    const auto g = hensel_lift(RingPolynomial::x_pow_minus_one(ModulusContext(3, m), 23), fac[1], h1, m).g;
    EXPECT_EQ(top.reduce_to(m), g);
  }
}

TEST(Hensel, Preconditions) {
  auto fac = factor_xn_minus_1(2, 7);
  const auto f = RingPolynomial::x_pow_minus_one(ModulusContext(2, 3), 7);
  EXPECT_EQ(code_of([&] { hensel_lift(f, fac[1], fac[2], 3); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { hensel_lift(f, fac[1], fac[0] * fac[2], 4); }), ErrorCode::PreconditionViolated);
  // x^2 - 1 = (x+1)^2 over Z_2: the factors are not coprime.
  const auto sq = RingPolynomial::from_integers(ModulusContext(2, 2), {-1, 0, 1});
  const auto lin = RingPolynomial::from_integers(ModulusContext(2, 1), {1, 1});
  EXPECT_EQ(code_of([&] { hensel_lift(sq, lin, lin, 2); }), ErrorCode::NotCoprime);
}
