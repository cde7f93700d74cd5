#include <gtest/gtest.h>

#include "liftenum/error.hpp"
#include "liftenum/fixtures.hpp"

using namespace liftenum;

TEST(Tables, LoadAndShape) {
  for (const auto& name : table_names()) {
    const auto t = load_table(name);
    EXPECT_EQ(t.family, name);
    for (const auto& [key, d] : t.table.seeds()) {
      EXPECT_TRUE(d.is_integral());
      for (const auto& [mono, c] : d.terms()) {
        if (key.first > 0) EXPECT_GT(mono[d.layout().x_slot(0)], 0);
        if (key.second > 0) EXPECT_GT(mono[d.layout().y_slot(0)], 0);
      }
    }
  }
  EXPECT_THROW(load_table("golay"), Error);
}

TEST(Tables, EmbeddedValues) {
  const auto golay = load_table("qr24-2");
  EXPECT_EQ(golay.table.cutoff(), 8);
  EXPECT_TRUE(golay.table.diagonal_seed(8).second.is_zero());
  EXPECT_EQ(golay.table.seeds().at({2, 1}),
            parse_enumerator("-759*16*u^8w^8v^2z^6 + 759*32*u^8w^8v^4z^4 - 759*16*u^8w^8v^6z^2", VarLayout{2, 1},
                             Naming::Display));

  const auto ternary = load_table("qr24-3");
  EXPECT_EQ(ternary.table.cutoff(), 6);
  EXPECT_EQ(ternary.table.seeds().at({1, 1}),
            parse_enumerator("-16192z^6u^9v^9 + 12144z^3u^9v^12 + 12144z^3u^12v^9 - 1104u^12v^12", VarLayout{1, 1},
                             Naming::Display));
  EXPECT_EQ(ternary.table.seeds().at({2, 2}),
            parse_enumerator("-4048*117*u^9w^9v^3x^3", VarLayout{2, 2}, Naming::Display));

  const auto octa = load_table("octacode");
  EXPECT_EQ(octa.table.seeds().size(), 3u);
  EXPECT_TRUE(octa.table.diagonal_seed(3).second.is_zero());
  ASSERT_EQ(octa.errata.size(), 1u);
}

TEST(Tables, SerializationRoundTrip) {
  for (const auto& name : table_names()) {
    const auto t = load_table(name);
    const auto json = table_to_json(t);
    const auto back = table_from_json(json);
    EXPECT_EQ(table_to_json(back), json);
    EXPECT_EQ(back.table.cutoff(), t.table.cutoff());
    for (const auto& [key, d] : t.table.seeds()) {
      EXPECT_EQ(back.table.seeds().at(key), d);
      EXPECT_EQ(parse_enumerator(to_text(d), d.layout(), Naming::Canonical, d.degree()), d);
    }
  }
  EXPECT_THROW(table_from_json("{}"), Error);
  EXPECT_THROW(table_from_json(R"({"family":"x","n":8,"cutoff":2,"seeds":[{"i":1,"j":0,"enumerator":)"
                               R"({"vars":["z","x0"],"degree":8,"terms":[{"coef":"1","exps":[8,0]}]}}]})"),
               Error);
}

TEST(ReferencePolynomials, OctacodePrinted) {
  EXPECT_EQ(octacode_reference("A30").coefficient_sum(), 4112);
  EXPECT_EQ(octacode_reference("A20").coefficient_sum(), 256);
  EXPECT_THROW(octacode_reference("A40"), Error);
}

TEST(Verify, OctacodeFlagsOneErratum) {
  VerifyOptions opts;
  opts.max_m = 4;
  const auto r = verify_table(build_family("octacode"), load_table("octacode"), opts);
  EXPECT_TRUE(r.passed()) << r.to_json();
  EXPECT_EQ(r.count(ReportEntry::Status::Erratum), 1u);
  EXPECT_EQ(r.count(ReportEntry::Status::Fail), 0u);
}

TEST(Verify, DetectsABrokenTable) {
  auto t = load_table("octacode");
  DTable bad(8, 3);
  for (const auto& [key, d] : t.table.seeds()) {
    bad.set_seed(key.first, key.second, key == std::make_pair(1, 0) ? d + parse_enumerator("x0^8 - z^4*x0^4", VarLayout{1, 0}) : d);
  }
  t.table = bad;
  VerifyOptions opts;
  opts.max_m = 2;
  const auto r = verify_table(build_family("octacode"), t, opts);
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(verify_table(build_family("qr24-2"), load_table("octacode")), Error);
}

TEST(Verify, TernaryDefaults) {
  VerifyOptions opts;
  opts.max_m = 3;
  const auto r = verify_table(build_family("qr24-3"), load_table("qr24-3"), opts);
  EXPECT_TRUE(r.passed()) << r.to_json();
  EXPECT_EQ(r.count(ReportEntry::Status::Erratum), 1u);
  EXPECT_NE(r.to_json().find("\"status\": \"erratum\""), std::string::npos);
}
