#include "liftenum/fixtures.hpp"

#include <map>
#include <optional>

#include <json.hpp>

#include "liftenum/discovery.hpp"
#include "liftenum/error.hpp"

namespace liftenum {

namespace {

using Json = nlohmann::ordered_json;

Enumerator display(const std::string& text, int i, int j, int n = -1) {
  return parse_enumerator(text, VarLayout{i, j}, Naming::Display, n);
}

void check_seed_support(int i, int j, const Enumerator& d) {
  for (const auto& [mono, c] : d.terms()) {
    const bool ok = (i == 0 || mono[d.layout().x_slot(0)] > 0) && (j == 0 || mono[d.layout().y_slot(0)] > 0);
    if (!ok) {
      throw Error(ErrorCode::PreconditionViolated,
                  "seed D_{" + std::to_string(i) + "," + std::to_string(j) + "} has a term not divisible by x0 y0");
    }
  }
}

struct SeedText {
  int i;
  int j;
  const char* text;
};

NamedTable make_table(const std::string& family, int n, int cutoff, const std::vector<SeedText>& seeds) {
  NamedTable t{family, DTable(n, cutoff), {}, {}};
  for (const auto& s : seeds) {
    Enumerator d = display(s.text, s.i, s.j, n);
    check_seed_support(s.i, s.j, d);
    t.table.set_seed(s.i, s.j, std::move(d));
  }
  return t;
}

NamedTable octacode_table() {
  NamedTable t = make_table("octacode", 8, 3,
                            {{0, 0, "z^8"}, {1, 0, "14u^4z^4 + u^8"}, {1, 1, "-14u^4v^4"}});
  t.notes.push_back("D_{2,1} and every later diagonal vanish (p-adic depth two)");
  t.errata.push_back({"A_{3,0}, coefficient of v^8", "16v^8 listed twice (32 in total)", "16",
                      "duplicated term; the printed coefficient sum is 4112 instead of 4096"});
  return t;
}

NamedTable golay_table() {
  NamedTable t = make_table(
      "qr24-2", 24, 8,
      {
          {0, 0, "z^24"},
          {1, 0, "759z^16u^8 + 2576z^12u^12 + 759z^8u^16 + u^24"},
          {1, 1, "759u^16v^8 - 2576u^12v^12 + 759u^8v^16 - 1518z^8u^8v^8"},
          {2, 1, "-12144u^8w^8v^2z^6 + 24288u^8w^8v^4z^4 - 12144u^8w^8v^6z^2"},
          {2, 2, "-48576u^8w^8v^2x^2z^4 + 48576u^8w^8v^4x^2z^2 + 48576u^8w^8v^2x^4z^2 + 48576u^8w^8v^4x^4"},
          {3, 2,
           "-97152u^8x^8v^4y^2z^2 + 194304u^8x^8v^4wy^2z - 97152u^8x^8v^4w^2y^2 + 97152u^8x^8v^4y^4"
           " - 97152u^8x^8v^2w^2y^4"},
          {3, 3,
           "-194304u^8x^8v^4y^4 + 97152u^8x^8v^4y^2t^2 + 97152u^8x^8v^2w^2y^4 - 97152u^8x^8v^2w^2y^2t^2"},
          {4, 3,
           "-97152u^8y^8v^4t^2s^2 - 97152u^8y^8v^2w^2t^4 - 194304u^8y^8v^2wxt^2sz + 194304u^8y^8v^2wx^2t^2s"},
      });
  t.notes.push_back("D_{4,4} and every later diagonal vanish");
  t.errata.push_back({"code size of the nonlinear binary image", "2^37", "2^36",
                      "the sum of A_{3,0} is 2^36; the factor 2 concerns the external nonlinear construction"});
  return t;
}

NamedTable ternary_table() {
  NamedTable t = make_table(
      "qr24-3", 24, 6,
      {
          {0, 0, "z^24"},
          {1, 0, "4048z^15u^9 + 61824z^12u^12 + 242880z^9u^15 + 198352z^6u^18 + 24288z^3u^21 + 48u^24"},
          {1, 1, "-16192z^6u^9v^9 + 12144z^3u^9v^12 + 12144z^3u^12v^9 - 1104u^12v^12"},
          {2, 1,
           "-72864u^9w^9v^2z^4 + 72864u^9w^9v^3z^3 + 72864u^9w^9v^5z - 72864u^9w^9v^6 - 72864u^12w^9z^3"
           " + 218592u^12vw^9z^2 - 218592u^12v^2w^9z + 72864u^12v^3w^9 - 72864u^9v^3w^12"},
          {2, 2, "-473616u^9w^9v^3x^3"},
          {3, 2, "-655776u^9x^9v^2y^2wz + 655776u^9x^9v^2y^2w^2 - 109296u^9x^9v^3y^3"},
      });
  t.notes.push_back("D_{3,3} and every later diagonal vanish");
  t.errata.push_back({"code size of the nonlinear ternary image", "3^25", "3^24",
                      "the sum of A_{2,0} is 3^24; the factor 3 concerns the external nonlinear construction"});
  return t;
}

}  // namespace

std::vector<std::string> table_names() { return {"octacode", "qr24-2", "qr24-3"}; }

NamedTable load_table(const std::string& name) {
  if (name == "octacode") return octacode_table();
  if (name == "qr24-2") return golay_table();
  if (name == "qr24-3") return ternary_table();
  throw Error(ErrorCode::UnknownTable, "no embedded table named '" + name + "'");
}

Enumerator octacode_reference(const std::string& label) {
  if (label == "A20") return display("z^8 + 112z^3u^4v + 112zu^4v^3 + 16u^8 + 14z^4v^4 + v^8", 2, 0);
  if (label == "A11") return display("z^8 + 14u^4z^4 + u^8 + 14v^4z^4 + v^8 - 14u^4v^4", 1, 1);
  if (label == "D00") return display("z^8", 0, 0);
  if (label == "D01") return parse_enumerator("14*y0^4*z^4 + y0^8", VarLayout{0, 1});
  if (label == "D10") return display("14u^4z^4 + u^8", 1, 0);
  if (label == "D11") return display("-14u^4v^4", 1, 1);
  if (label == "A21") {
    return display("z^8 + 14v^4z^4 + v^8 + 112z^3u^4v + 112zu^4v^3 + 16u^8 + 14w^4z^4 + w^8 - 14v^4w^4", 2, 1);
  }
  if (label == "A30") {
    return display(
        "z^8 + 14w^4z^4 + w^8 + 112z^3v^4w + 112zv^4w^3 + 16v^8"
        " + 224z^3u^4v + 672z^2u^4vw + 896zu^4v^3 + 672zu^4vw^2"
        " + 256u^8 + 896u^4v^3w + 224u^4vw^3 + 16v^8",
        3, 0);
  }
  throw Error(ErrorCode::UnknownTable, "no Octacode reference polynomial '" + label + "'");
}

std::string table_to_json(const NamedTable& t) {
  Json j;
  j["family"] = t.family;
  j["n"] = t.table.length();
  j["cutoff"] = t.table.cutoff();
  Json seeds = Json::array();
  for (const auto& [key, d] : t.table.seeds()) {
    seeds.push_back({{"i", key.first}, {"j", key.second}, {"enumerator", Json::parse(to_json(d))}});
  }
  j["seeds"] = std::move(seeds);
  j["notes"] = t.notes;
  Json errata = Json::array();
  for (const auto& e : t.errata) {
    errata.push_back({{"location", e.location}, {"printed", e.printed}, {"computed", e.computed}, {"note", e.note}});
  }
  j["errata"] = std::move(errata);
  return j.dump(2);
}

NamedTable table_from_json(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
    NamedTable t{j.at("family").get<std::string>(), DTable(j.at("n").get<int>(), j.at("cutoff").get<int>()), {}, {}};
    for (const auto& s : j.at("seeds")) {
      const int i = s.at("i").get<int>();
      const int jj = s.at("j").get<int>();
      Enumerator d = from_json(s.at("enumerator").dump());
      check_seed_support(i, jj, d);
      t.table.set_seed(i, jj, std::move(d));
    }
    if (j.contains("notes")) t.notes = j["notes"].get<std::vector<std::string>>();
    if (j.contains("errata")) {
      for (const auto& e : j["errata"]) {
        t.errata.push_back({e.at("location").get<std::string>(), e.at("printed").get<std::string>(),
                            e.at("computed").get<std::string>(), e.value("note", std::string())});
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("table JSON: ") + e.what());
  }
}

// --- Verification ------------------------------------------------------------

std::string to_string(ReportEntry::Status s) {
  switch (s) {
    case ReportEntry::Status::Pass: return "pass";
    case ReportEntry::Status::Fail: return "fail";
    case ReportEntry::Status::Erratum: return "erratum";
    case ReportEntry::Status::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(ReportEntry::Status::Fail) == 0; }

std::size_t VerificationReport::count(ReportEntry::Status s) const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.status == s;
  return c;
}

std::string VerificationReport::to_json() const {
  Json j;
  j["family"] = family;
  j["passed"] = passed();
  Json list = Json::array();
  for (const auto& e : entries) {
    list.push_back({{"check", e.check},
                    {"status", liftenum::to_string(e.status)},
                    {"expected", e.expected},
                    {"actual", e.actual},
                    {"note", e.note}});
  }
  j["entries"] = std::move(list);
  return j.dump(2);
}

namespace {

std::string label(const char* base, int a, int b) {
  return std::string(base) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string summary(const Enumerator& e) {
  return std::to_string(e.size()) + " terms, sum " + e.coefficient_sum().get_str();
}

// Up to `limit` differing monomials, in canonical text.
std::vector<std::string> differences(const Enumerator& expected, const Enumerator& actual, std::size_t limit = 4) {
  std::vector<std::string> out;
  const Enumerator diff = actual - expected;
  for (const auto& [mono, c] : diff.sorted_terms()) {
    if (out.size() == limit) break;
    Enumerator one(diff.layout(), diff.degree());
    one.add_term(mono, 1);
    std::string m = to_text(one);
    m = m.substr(3, m.find('\n') - 3);  // drop "+1*" and the newline
    out.push_back(m + ": expected " + expected.coefficient(mono).get_str() + ", got " +
                  actual.coefficient(mono).get_str());
  }
  return out;
}

class Reporter {
 public:
  explicit Reporter(VerificationReport& r) : r_(r) {}

  void pass(std::string check, std::string expected, std::string actual, std::string note = {}) {
    r_.entries.push_back({std::move(check), ReportEntry::Status::Pass, std::move(expected), std::move(actual),
                          std::move(note)});
  }
  void fail(std::string check, std::string expected, std::string actual, std::string note = {}) {
    r_.entries.push_back({std::move(check), ReportEntry::Status::Fail, std::move(expected), std::move(actual),
                          std::move(note)});
  }
  void erratum(std::string check, std::string expected, std::string actual, std::string note) {
    r_.entries.push_back({std::move(check), ReportEntry::Status::Erratum, std::move(expected), std::move(actual),
                          std::move(note)});
  }
  void skip(std::string check, std::string note) {
    r_.entries.push_back({std::move(check), ReportEntry::Status::Skipped, "", "", std::move(note)});
  }

  void equal(const std::string& check, const Enumerator& expected, const Enumerator& actual) {
    if (expected == actual) {
      pass(check, summary(expected), summary(actual));
      return;
    }
    std::string note;
    for (const auto& d : differences(expected, actual)) note += (note.empty() ? "" : "; ") + d;
    fail(check, summary(expected), summary(actual), note);
  }

  void check(const std::string& check, bool ok, const std::string& expected, const std::string& actual,
             const std::string& note = {}) {
    ok ? pass(check, expected, actual, note) : fail(check, expected, actual, note);
  }

 private:
  VerificationReport& r_;
};

Integer ipow(int p, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

void check_specialization(Reporter& rep, const std::string& what, const Enumerator& a, const std::vector<int>& powers,
                          int min_exponent, const Integer& total) {
  const auto u = specialize(a, powers);
  rep.check(what + " minimum positive exponent", u.min_positive_exponent() == min_exponent,
            std::to_string(min_exponent), std::to_string(u.min_positive_exponent()));
  rep.check(what + " total", u.sum() == Rational(total), total.get_str(), u.sum().get_str());
  rep.check(what + " constant term", u.coefficient(0) == 1, "1", u.coefficient(0).get_str());
}

}  // namespace

VerificationReport verify_table(const LiftedCodeFamily& family, const NamedTable& table,
                                const VerifyOptions& options) {
  if (table.table.length() != family.length()) {
    throw Error(ErrorCode::LayoutMismatch, "table length " + std::to_string(table.table.length()) +
                                               " does not match family length " + std::to_string(family.length()));
  }
  VerificationReport report{family.name(), {}};
  Reporter rep(report);
  const auto ctx = TransformContext::for_family(family);
  const int p = family.p();
  const int k = family.rank();
  const int max_m = std::max(options.max_m, 1);

  // Seed shape.
  for (const auto& [key, d] : table.table.seeds()) {
    bool ok = true;
    for (const auto& [mono, c] : d.terms()) {
      ok = ok && (key.first == 0 || mono[d.layout().x_slot(0)] > 0) && (key.second == 0 || mono[d.layout().y_slot(0)] > 0);
      ok = ok && c.get_den() == 1;
    }
    rep.check("seed " + label("D", key.first, key.second) + " divisible by x0 y0, integral", ok, "true",
              ok ? "true" : "false");
  }

  // Pipeline.
  std::vector<Enumerator> a;
  try {
    a = pipeline(table.table, ctx, max_m);
    rep.pass("pipeline integral and nonnegative to m=" + std::to_string(max_m), "no failure", "no failure");
  } catch (const PipelineError& e) {
    rep.fail("pipeline integral and nonnegative to m=" + std::to_string(max_m), "no failure",
             "stage " + std::to_string(e.stage()), e.what());
    return report;
  } catch (const Error& e) {
    rep.fail("pipeline to m=" + std::to_string(max_m), "no failure", to_string(e.code()), e.what());
    return report;
  }

  for (int m = 1; m <= max_m; ++m) {
    const Integer expected = ipow(p, m * k);
    rep.check(label("A", m, 0) + " coefficient sum", a[m].coefficient_sum() == Rational(expected), expected.get_str(),
              a[m].coefficient_sum().get_str());
    rep.equal(label("A", m, 0) + " restricted to pC equals " + label("A", m - 1, 0), a[m - 1], project_subcode(a[m]));
    const Enumerator down = down_A(a[m], ctx);
    rep.equal(label("A", m, 0) + " round trip up_A(down_A)", a[m], up_A(down, ctx));
    if (family.self_dual()) {
      Enumerator dual = down;
      while (dual.layout().x_count > 0) dual = down_A(dual, ctx);
      rep.equal(label("A", m, 0) + " self-duality", swap_groups(a[m]), dual);
    }
  }

  // Exhaustive cross-checks while the code fits the budget.
  PartialEnumerators parts(table.table, ctx);
  std::map<int, Enumerator> brute;
  for (int m = 1; m <= max_m; ++m) {
    const CodeMatrix g = generator_matrix(family, m);
    try {
      brute.emplace(m, from_compositions(enumerate_compositions(g, options.budget, options.threads), VarLayout{m, 0}));
    } catch (const BudgetExceeded& e) {
      rep.skip("brute-force " + label("A", m, 0) + " and later",
               std::string("needs ") + e.required() + " codewords, budget " + std::to_string(options.budget));
      break;
    }
    rep.equal("brute-force " + label("A", m, 0) + " equals pipeline", brute.at(m), a[m]);
    for (int j = 0; j <= m; ++j) {
      const int i = m - j;
      Enumerator walked = brute.at(m);
      for (int t = 0; t < j; ++t) walked = down_A(walked, ctx);
      try {
        rep.equal("brute-force " + label("D", i, j) + " equals table", extract_partial(walked, i, j), parts.D(i, j));
      } catch (const Error& e) {
        rep.fail("brute-force " + label("D", i, j) + " equals table", "derivable", to_string(e.code()), e.what());
      }
    }
  }

  // Closed-form identities between table entries.
  if (max_m >= 2) {
    rep.equal("A_{2,0} = up_A(A_{1,1})", a[2], up_A(parts.assemble_A(1, 1), ctx));
  }
  if (family.name() == "qr24-2" && max_m >= 3) {
    const VarLayout l21{2, 1};
    Enumerator a21 = reindex(a[2], l21, 0, 0);
    a21 += reindex(parts.assemble_A(1, 1), l21, 1, 0);
    a21 -= reindex(a[1], l21, 1, 0);
    a21 += parts.D(2, 1);
    rep.equal("A_{3,0} = up_A(A_{2,0} + A_{1,1}(v;w) - A_{1,0}(v) + D_{2,1})", a[3], up_A(a21, ctx));
  }

  // Distance claims.
  if (family.name() == "qr24-2" && max_m >= 3) {
    check_specialization(rep, "A_{3,0} at (z,u,v,w) = (1,t^2,t^2,t^4)", a[3], {0, 2, 2, 4}, 24, ipow(2, 36));
  }
  if (family.name() == "qr24-3" && max_m >= 2) {
    check_specialization(rep, "A_{2,0} at (z,u,v) = (1,t^2,t^3)", a[2], {0, 2, 3}, 24, ipow(3, 24));
  }

  // Reference polynomials.
  if (family.name() == "octacode") {
    if (brute.count(2)) rep.equal("printed A_{2,0}", octacode_reference("A20"), brute.at(2));
    if (max_m >= 2) rep.equal("printed A_{1,1} = down_A(A_{2,0})", octacode_reference("A11"), down_A(a[2], ctx));
    rep.equal("printed A_{1,1} from partial enumerators", octacode_reference("A11"), parts.assemble_A(1, 1));
    rep.equal("printed D_{0,0}", octacode_reference("D00"), parts.D(0, 0));
    rep.equal("printed D_{0,1}", octacode_reference("D01"), parts.D(0, 1));
    rep.equal("printed D_{1,0}", octacode_reference("D10"), parts.D(1, 0));
    rep.equal("printed D_{1,1}", octacode_reference("D11"), parts.D(1, 1));
    rep.equal("printed A_{2,1}", octacode_reference("A21"), parts.assemble_A(2, 1));
    if (max_m >= 3) {
      const Enumerator printed = octacode_reference("A30");
      const Enumerator& oracle = brute.count(3) ? brute.at(3) : a[3];
      const auto diffs = differences(oracle, printed, 8);
      const Monomial v8 = make_monomial({0, 0, 8, 0});
      const bool one_typo = diffs.size() == 1 && printed.coefficient(v8) == 32 && oracle.coefficient(v8) == 16;
      if (diffs.empty()) {
        rep.pass("printed A_{3,0}", summary(oracle), summary(printed));
      } else if (one_typo) {
        rep.erratum("printed A_{3,0}", "16*v^8", "32*v^8", diffs.front() + "; 16v^8 is listed twice");
      } else {
        std::string note;
        for (const auto& d : diffs) note += (note.empty() ? "" : "; ") + d;
        rep.fail("printed A_{3,0}", summary(oracle), summary(printed), note);
      }
    }
  }

  for (const auto& e : table.errata) {
    if (family.name() == "octacode") break;  // recorded above against the oracle
    rep.erratum(e.location, e.computed, e.printed, e.note);
  }

  // Feasibility of the interior seed.
  if (options.candidate_search) {
    try {
      const CandidateSupport cand = disjoint_support_candidates(family, 1, 1, options.budget);
      const Enumerator& d11 = parts.D(1, 1);
      std::size_t missing = 0;
      for (const auto& [mono, c] : d11.terms()) missing += !cand.contains(mono);
      rep.check("D_{1,1} monomials realized by disjoint pairs", missing == 0, std::to_string(d11.size()),
                std::to_string(d11.size() - missing),
                std::to_string(cand.patterns.size()) + " candidate monomials");
    } catch (const BudgetExceeded& e) {
      rep.skip("D_{1,1} candidate search", std::string("needs ") + e.required() + " codewords");
    }
  }
  return report;
}

}  // namespace liftenum
