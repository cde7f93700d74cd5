#include <gtest/gtest.h>

#include <set>

#include "liftenum/codes.hpp"
#include "liftenum/error.hpp"

using namespace liftenum;

namespace {

// Every codeword by direct message expansion, independent of the odometer.
std::vector<std::vector<Residue>> all_words(const CodeMatrix& g) {
  const Residue q = g.ring.q();
  std::uint64_t total = 1;
  for (int i = 0; i < g.rank(); ++i) total *= static_cast<std::uint64_t>(q);
  std::vector<std::vector<Residue>> out;
  for (std::uint64_t msg = 0; msg < total; ++msg) {
    std::vector<Residue> w(g.length(), 0);
    std::uint64_t rest = msg;
    for (int i = 0; i < g.rank(); ++i) {
      const Residue c = static_cast<Residue>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
      for (int j = 0; j < g.length(); ++j) w[j] = g.ring.add(w[j], g.ring.mul(c, g.rows(i, j)));
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool is_zero(const ResidueMatrix& m) { return (m.array() == 0).all(); }

}  // namespace

TEST(Families, BuiltinShapes) {
  auto golay = build_family("qr24-2");
  EXPECT_EQ(golay.p(), 2);
  EXPECT_EQ(golay.length(), 24);
  EXPECT_EQ(golay.rank(), 12);
  EXPECT_TRUE(golay.self_dual());
  EXPECT_EQ(golay.max_exponent(), 29);
  EXPECT_EQ(golay.base_factor(), RingPolynomial::from_integers(ModulusContext(2, 1),
                                                               {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1}));

  auto ternary = build_family("qr24-3");
  EXPECT_EQ(ternary.p(), 3);
  EXPECT_EQ(ternary.rank(), 12);
  EXPECT_EQ(ternary.base_factor(), RingPolynomial::from_integers(ModulusContext(3, 1),
                                                                 {2, 2, 2, 1, 1, 0, 2, 0, 2, 0, 0, 1}));

  auto octa = build_family("octacode");
  EXPECT_EQ(octa.length(), 8);
  EXPECT_EQ(octa.rank(), 4);

  EXPECT_THROW(build_family("qr48-2"), Error);
}

TEST(Families, ExtensionCoefficientsAreCoherent) {
  for (const char* name : {"qr24-2", "qr24-3", "octacode"}) {
    auto fam = build_family(name);
    const int top = std::min(fam.max_exponent(), 12);
    const Residue e_top = fam.extension_coefficient(top);
    for (int m = 1; m < top; ++m) {
      const ModulusContext r(fam.p(), m);
      EXPECT_EQ(r.reduce(e_top), fam.extension_coefficient(m)) << name << " m=" << m;
      EXPECT_EQ(fam.generator_polynomial(top).reduce_to(m), fam.generator_polynomial(m));
    }
  }
  // A constant extension fails for the binary tower from Z_16 on.
  EXPECT_EQ(build_family("qr24-2").extension_coefficient(3), 5);
  EXPECT_EQ(build_family("qr24-3").extension_coefficient(3), 14);
}

TEST(Families, GeneratorDividesXnMinusOne) {
  for (const char* name : {"qr24-2", "qr24-3", "octacode"}) {
    auto fam = build_family(name);
    for (int m : {1, 2, 5, 9}) {
      const auto g = fam.generator_polynomial(m);
      const auto f = RingPolynomial::x_pow_minus_one(ModulusContext(fam.p(), m), fam.cyclic_length());
      EXPECT_TRUE(divmod(f, g).remainder.is_zero()) << name << " m=" << m;
    }
  }
}

TEST(Families, SelfOrthogonalAtEveryLevel) {
  for (const char* name : {"qr24-2", "qr24-3", "octacode"}) {
    auto fam = build_family(name);
    for (int m = 1; m <= std::min(fam.max_exponent(), 16); ++m) {
      const auto g = generator_matrix(fam, m);
      EXPECT_TRUE(is_zero(gram(g, g))) << name << " m=" << m;
    }
  }
}

TEST(Families, CustomSpec) {
  CustomFamilySpec spec;
  spec.p = 2;
  spec.cyclic_length = 7;
  spec.generator_factors = {2};
  auto fam = build_family(spec);
  EXPECT_EQ(fam.rank(), 4);
  EXPECT_TRUE(is_zero(gram(generator_matrix(fam, 3), generator_matrix(fam, 3))));

  spec.generator_factors = {0};  // x+1: rank 6, cannot be self-dual
  EXPECT_THROW(build_family(spec), Error);
  spec.generator_factors = {1, 1};
  EXPECT_THROW(build_family(spec), Error);

  spec.generator_factors = {1};
  spec.extension = 1;
  auto fixed = build_family(spec);
  EXPECT_GE(fixed.max_exponent(), 2);  // e = 1 is self-dual over Z_4

  CustomFamilySpec plain;
  plain.cyclic_length = 7;
  plain.generator_factors = {0};
  plain.self_dual = false;
  EXPECT_EQ(build_family(plain).rank(), 6);
}

TEST(Matrices, ReduceAndDual) {
  auto fam = build_family("qr24-3");
  const auto g3 = generator_matrix(fam, 3);
  EXPECT_EQ(reduce(g3, 2).rows, generator_matrix(fam, 2).rows);
  EXPECT_THROW(reduce(generator_matrix(fam, 1), 2), Error);

  for (int m : {1, 2, 3}) {
    const auto g = generator_matrix(fam, m);
    const auto h = dual_matrix(g);
    EXPECT_EQ(h.rank(), 12);
    EXPECT_TRUE(is_zero(gram(g, h)));
    const auto sf = standard_form(g);
    EXPECT_TRUE(is_zero(gram(sf.matrix, sf.matrix)));
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) EXPECT_EQ(sf.matrix.rows(i, j), i == j ? 1 : 0);
    }
  }
}

TEST(Matrices, NotFree) {
  CodeMatrix g{ModulusContext(2, 2), ResidueMatrix(1, 3)};
  g.rows << 2, 0, 2;
  EXPECT_THROW(standard_form(g), Error);
}

TEST(Enumeration, MatchesDirectExpansion) {
  auto octa = build_family("octacode");
  for (int m : {1, 2, 3}) {
    const auto g = generator_matrix(octa, m);
    std::map<Composition, std::uint64_t> expected;
    for (const auto& w : all_words(g)) ++expected[composition(Codeword{g.ring, w})];
    EXPECT_EQ(enumerate_compositions(g), expected) << "m=" << m;
  }
}

TEST(Enumeration, ThreadCountDoesNotMatter) {
  const auto g = generator_matrix(build_family("qr24-3"), 1);
  const auto one = enumerate_compositions(g, kDefaultBudget, 1);
  EXPECT_EQ(enumerate_compositions(g, kDefaultBudget, 3), one);
  std::uint64_t total = 0;
  for (const auto& [c, n] : one) total += n;
  EXPECT_EQ(total, 531441u);
}

TEST(Enumeration, Budget) {
  const auto g = generator_matrix(build_family("qr24-2"), 3);
  try {
    enumerate_compositions(g);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    EXPECT_EQ(e.required(), "68719476736");
  }
  EXPECT_THROW(enumerate_compositions(generator_matrix(build_family("octacode"), 2), 255), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_compositions(generator_matrix(build_family("octacode"), 2), 256));
}

TEST(Enumeration, CompositionOfWord) {
  Codeword w{ModulusContext(2, 3), {0, 1, 2, 4, 6, 3, 0}};
  const auto c = composition(w);
  EXPECT_EQ(c.counts, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(c.zeros, 2);
  EXPECT_EQ(w.hamming_weight(), 5);
  EXPECT_TRUE(w.reduction_is_nonzero());
  EXPECT_FALSE((Codeword{ModulusContext(2, 3), {0, 2, 4}}).reduction_is_nonzero());
}

TEST(Enumeration, OctacodeMinimumWeight) {
  auto octa = build_family("octacode");
  EXPECT_EQ(min_weight_nonzero_reduction(generator_matrix(octa, 1)), 4);
  EXPECT_EQ(min_weight_nonzero_reduction(generator_matrix(octa, 2)), 5);
  EXPECT_EQ(min_weight_nonzero_reduction(generator_matrix(build_family("qr24-2"), 1)), 8);
}

TEST(Shortening, MatchesFilter) {
  auto octa = build_family("octacode");
  const auto g = generator_matrix(octa, 2);
  const auto words = all_words(g);
  for (const std::vector<int>& allowed : {std::vector<int>{0, 1, 2, 3, 4}, {1, 3, 5, 7}, {}, {0, 1, 2, 3, 4, 5, 6, 7}}) {
    std::set<std::vector<Residue>> expected;
    for (const auto& w : words) {
      bool ok = true;
      for (int j = 0; j < g.length(); ++j) {
        if (w[j] != 0 && std::find(allowed.begin(), allowed.end(), j) == allowed.end()) ok = false;
      }
      if (ok) expected.insert(w);
    }
    std::set<std::vector<Residue>> got;
    for (const auto& c : shortened_words(g, allowed)) got.insert(c.entries);
    EXPECT_EQ(got, expected);
  }
  EXPECT_THROW(shortened_words(g, {9}), Error);
  EXPECT_THROW(shortened_words(g, {0, 1, 2, 3, 4, 5, 6, 7}, 10), BudgetExceeded);
}
