#include <gtest/gtest.h>

#include <random>

#include "liftenum/enumpoly.hpp"
#include "liftenum/error.hpp"

using namespace liftenum;

namespace {

Enumerator random_enumerator(std::mt19937_64& rng, VarLayout layout, int degree, int terms) {
  Enumerator e(layout, degree);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int left = degree;
    for (int s = 1; s < layout.slots(); ++s) {
      const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(left + 1));
      m[s] = static_cast<std::uint8_t>(v);
      left -= v;
    }
    m[0] = static_cast<std::uint8_t>(left);
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = 1 + static_cast<long>(rng() % 3);
    e.add_term(m, Rational(num, den));
  }
  return e;
}

Rational evaluate(const Enumerator& e, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [mono, c] : e.terms()) {
    Rational t = c;
    for (int s = 0; s < e.layout().slots(); ++s) {
      for (int k = 0; k < mono[s]; ++k) t *= point[s];
    }
    total += t;
  }
  return total;
}

}  // namespace

TEST(Layout, Names) {
  VarLayout l{2, 1};
  EXPECT_EQ(l.names(), (std::vector<std::string>{"z", "x0", "x1", "y0"}));
  EXPECT_EQ(l.names(Naming::Display), (std::vector<std::string>{"z", "u", "v", "w"}));
  EXPECT_EQ(l.x_slot(1), 2);
  EXPECT_EQ(l.y_slot(0), 3);
  EXPECT_THROW((VarLayout{4, 4}.names(Naming::Display)), Error);
  EXPECT_THROW((VarLayout{10, 6}.validate()), Error);
}

TEST(Enumerator, TermsAndHomogeneity) {
  Enumerator e(VarLayout{1, 0}, 4);
  e.add_term(make_monomial({4, 0}), 1);
  e.add_term(make_monomial({0, 4}), 3);
  e.add_term(make_monomial({0, 4}), -3);
  EXPECT_EQ(e.size(), 1u);
  EXPECT_THROW(e.add_term(make_monomial({3, 0}), 1), Error);
  EXPECT_THROW(e.add_term(make_monomial({2, 1, 1}), 1), Error);
  EXPECT_EQ(Enumerator::z_power(VarLayout{0, 0}, 8).coefficient(make_monomial({8})), 1);
  EXPECT_THROW(Enumerator(VarLayout{0, 0}, 300), Error);
}

TEST(Enumerator, ArithmeticAndPredicates) {
  auto a = parse_enumerator("z^2 + 2*z*x0 - x0^2", VarLayout{1, 0});
  auto b = parse_enumerator("x0^2 + 1/2*z*x0", VarLayout{1, 0});
  EXPECT_EQ(a + b, parse_enumerator("z^2 + 5/2*z*x0", VarLayout{1, 0}));
  EXPECT_EQ(a - a, Enumerator(VarLayout{1, 0}, 2));
  EXPECT_EQ(a * Rational(2), parse_enumerator("2z^2 + 4z*x0 - 2x0^2", VarLayout{1, 0}));
  EXPECT_TRUE(a.is_integral());
  EXPECT_TRUE(a.has_negative());
  EXPECT_FALSE(b.is_integral());
  EXPECT_EQ(a.coefficient_sum(), 2);
  EXPECT_EQ(multiply(a, b).degree(), 4);
  EXPECT_THROW(a + Enumerator(VarLayout{2, 0}, 2), Error);
  EXPECT_THROW(assert_integral(b), Error);
}

TEST(Enumerator, FromCompositions) {
  std::map<Composition, std::uint64_t> counts;
  counts[Composition{{0, 0}, 4}] = 1;
  counts[Composition{{2, 1}, 1}] = 6;
  auto e = from_compositions(counts, VarLayout{2, 0});
  EXPECT_EQ(e, parse_enumerator("z^4 + 6*z*x0^2*x1", VarLayout{2, 0}));
  EXPECT_THROW(from_compositions(counts, VarLayout{1, 0}), Error);
}

TEST(Text, CanonicalForm) {
  auto e = parse_enumerator("16u^8 + z^8 + 112z^3u^4v", VarLayout{2, 0}, Naming::Display);
  EXPECT_EQ(to_text(e), "+1*z^8*x0^0*x1^0\n+112*z^3*x0^4*x1^1\n+16*z^0*x0^8*x1^0\n");
  EXPECT_EQ(to_text(Enumerator(VarLayout{1, 1}, 3)), "0\n");
  EXPECT_EQ(parse_enumerator(to_text(e), VarLayout{2, 0}), e);
  EXPECT_EQ(parse_enumerator("0", VarLayout{1, 0}, Naming::Canonical, 5), Enumerator(VarLayout{1, 0}, 5));
}

TEST(Text, ParseErrors) {
  const VarLayout l{1, 0};
  for (const char* bad : {"z^2 + ", "2*q^2", "z^", "1/0*z", "z^2 * * x0^2", "z^2 *", "z^2 x0 ^"}) {
    try {
      parse_enumerator(bad, l);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::ParseError || e.code() == ErrorCode::LayoutMismatch) << bad;
    }
  }
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const VarLayout l{static_cast<int>(rng() % 4), static_cast<int>(rng() % 3)};
    const auto e = random_enumerator(rng, l, 6, 10);
    EXPECT_EQ(from_json(to_json(e)), e);
    EXPECT_EQ(to_json(from_json(to_json(e))), to_json(e));
    EXPECT_EQ(parse_enumerator(to_text(e), l, Naming::Canonical, 6), e);
  }
  EXPECT_EQ(to_json(parse_enumerator("-3/4*z*x0", VarLayout{1, 0})),
            R"({"vars":["z","x0"],"degree":2,"terms":[{"coef":"-3/4","exps":[1,1]}]})");
  EXPECT_THROW(from_json("{"), Error);
  EXPECT_THROW(from_json(R"({"vars":["z","q"],"degree":1,"terms":[]})"), Error);
  EXPECT_THROW(from_json(R"({"vars":["z"],"degree":1,"terms":[{"coef":"1/0","exps":[1]}]})"), Error);
}

TEST(Substitution, AgreesWithEvaluation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const VarLayout src{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
    const VarLayout dst{static_cast<int>(rng() % 3), 1};
    const auto e = random_enumerator(rng, src, 5, 8);
    Assignment asg(src.slots());
    for (auto& f : asg) {
      f.terms.clear();
      for (int s = 0; s < dst.slots(); ++s) {
        if (rng() % 2) f.terms.emplace_back(s, Rational(static_cast<long>(rng() % 7) - 3));
      }
      if (f.terms.empty()) f.terms.emplace_back(0, 1);
    }
    const Rational scale(1, 4);
    const auto out = substitute_linear(e, asg, dst, scale);
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> point(dst.slots());
      for (auto& v : point) {
        v = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 2));
        v.canonicalize();
      }
      std::vector<Rational> image(src.slots());
      for (int s = 0; s < src.slots(); ++s) {
        for (const auto& [slot, c] : asg[s].terms) image[s] += c * point[slot];
      }
      EXPECT_EQ(evaluate(out, point), scale * evaluate(e, image));
    }
  }
}

TEST(Substitution, RejectsAffineForms) {
  auto e = parse_enumerator("z*x0", VarLayout{1, 0});
  Assignment asg{LinearForm::var(0), LinearForm::var(1)};
  asg[1].constant = 1;
  EXPECT_THROW(substitute_linear(e, asg, VarLayout{1, 0}), Error);
  EXPECT_THROW(substitute_linear(e, Assignment{LinearForm::var(0)}, VarLayout{1, 0}), Error);
}

TEST(Helpers, ReindexAndExtract) {
  auto e = parse_enumerator("z*x0 + x0*y0", VarLayout{1, 1});
  auto r = reindex(e, VarLayout{2, 2}, 1, 1);
  EXPECT_EQ(r, parse_enumerator("z*x1 + x1*y1", VarLayout{2, 2}));
  EXPECT_THROW(reindex(e, VarLayout{1, 0}, 0, 0), Error);
  EXPECT_EQ(extract_divisible(e, {2}), parse_enumerator("x0*y0", VarLayout{1, 1}));
}

TEST(Specialize, Univariate) {
  auto e = parse_enumerator("z^3 + 2*z*x0^2 + x0^2*x1", VarLayout{2, 0});
  auto u = specialize(e, {0, 2, 3});
  EXPECT_EQ(u.coefficient(0), 1);
  EXPECT_EQ(u.coefficient(4), 2);
  EXPECT_EQ(u.coefficient(7), 1);
  EXPECT_EQ(u.min_positive_exponent(), 4);
  EXPECT_EQ(u.sum(), 4);
  EXPECT_EQ(specialize(Enumerator::z_power(VarLayout{0, 0}, 3), {0}).min_positive_exponent(), -1);
  EXPECT_THROW(specialize(e, {0, 1}), Error);
}
