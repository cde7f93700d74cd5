#include "liftenum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftenum/codes.hpp"
#include "liftenum/discovery.hpp"
#include "liftenum/error.hpp"
#include "liftenum/fixtures.hpp"
#include "liftenum/transforms.hpp"

namespace liftenum {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string family;
  int m = 1;
  int max_m = 3;
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
  std::string format = "text";
  std::string output;
  std::string input;
  std::string op;
  std::string map;
  int i = 1;
  int j = 1;
  bool candidates = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json enumerator_json(const Enumerator& e) { return Json::parse(to_json(e)); }

std::string a_label(int m) { return "A_{" + std::to_string(m) + ",0}"; }

std::string cmd_brute(const Config& c) {
  const auto fam = build_family(c.family);
  const auto a = from_compositions(enumerate_compositions(generator_matrix(fam, c.m), c.budget, c.threads),
                                   VarLayout{c.m, 0});
  if (c.format == "json") return Json::parse(to_json(a)).dump(2) + "\n";
  return to_text(a);
}

std::string cmd_pipeline(const Config& c) {
  const auto fam = build_family(c.family);
  const auto table = load_table(c.family);
  const auto a = pipeline(table.table, TransformContext::for_family(fam), c.max_m);
  if (c.format == "json") {
    Json j;
    j["family"] = c.family;
    Json list = Json::array();
    for (int m = 1; m <= c.max_m; ++m) {
      list.push_back({{"label", a_label(m)}, {"m", m}, {"enumerator", enumerator_json(a[m])}});
    }
    j["enumerators"] = std::move(list);
    return j.dump(2) + "\n";
  }
  std::string out;
  for (int m = 1; m <= c.max_m; ++m) out += "# " + a_label(m) + "\n" + to_text(a[m]);
  return out;
}

std::pair<std::string, bool> cmd_verify(const Config& c) {
  const auto fam = build_family(c.family);
  VerifyOptions opts;
  opts.budget = c.budget;
  opts.max_m = c.max_m;
  opts.threads = c.threads;
  opts.candidate_search = c.candidates;
  const auto report = verify_table(fam, load_table(c.family), opts);
  if (c.format == "json") return {report.to_json() + "\n", report.passed()};
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << to_string(e.status) << "\t" << e.check;
    if (!e.expected.empty() || !e.actual.empty()) os << "\texpected " << e.expected << "\tgot " << e.actual;
    if (!e.note.empty()) os << "\t(" << e.note << ")";
    os << "\n";
  }
  os << (report.passed() ? "ok" : "FAILED") << ": " << report.count(ReportEntry::Status::Pass) << " passed, "
     << report.count(ReportEntry::Status::Fail) << " failed, " << report.count(ReportEntry::Status::Erratum)
     << " errata, " << report.count(ReportEntry::Status::Skipped) << " skipped\n";
  return {os.str(), report.passed()};
}

std::string emit(const Enumerator& e, const std::string& format) {
  return format == "json" ? Json::parse(to_json(e)).dump(2) + "\n" : to_text(e);
}

std::string cmd_transform(const Config& c) {
  const auto ctx = TransformContext::for_family(build_family(c.family));
  const Enumerator in = from_json(read_file(c.input));
  if (c.op == "upA") return emit(up_A(in, ctx), c.format);
  if (c.op == "downA") return emit(down_A(in, ctx), c.format);
  if (c.op == "upD") return emit(up_D(in, ctx), c.format);
  if (c.op == "downD") return emit(down_D(in, ctx), c.format);
  throw Error(ErrorCode::ParseError, "unknown transform '" + c.op + "'");
}

std::vector<int> parse_powers(const std::string& spec, const VarLayout& layout) {
  const auto canonical = layout.names(Naming::Canonical);
  std::vector<std::string> display;
  if (layout.slots() <= 8) display = layout.names(Naming::Display);
  std::vector<int> powers(layout.slots(), -1);
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "map entry '" + item + "' lacks '='");
    const std::string name = item.substr(0, eq);
    int slot = -1;
    if (auto it = std::find(display.begin(), display.end(), name); it != display.end()) {
      slot = static_cast<int>(it - display.begin());
    } else if (auto it2 = std::find(canonical.begin(), canonical.end(), name); it2 != canonical.end()) {
      slot = static_cast<int>(it2 - canonical.begin());
    } else {
      throw Error(ErrorCode::ParseError, "unknown variable '" + name + "' in map");
    }
    std::size_t used = 0;
    int power = -1;
    try {
      power = std::stoi(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() - eq - 1 || power < 0) {
      throw Error(ErrorCode::ParseError, "map entry '" + item + "' needs a nonnegative integer power");
    }
    powers[slot] = power;
  }
  for (int s = 0; s < layout.slots(); ++s) {
    if (powers[s] < 0) throw Error(ErrorCode::ParseError, "map does not assign '" + canonical[s] + "'");
  }
  return powers;
}

std::string cmd_specialize(const Config& c) {
  Enumerator e = [&] {
    if (!c.input.empty()) return from_json(read_file(c.input));
    const auto fam = build_family(c.family);
    return pipeline(load_table(c.family).table, TransformContext::for_family(fam), c.m).back();
  }();
  const auto u = specialize(e, parse_powers(c.map, e.layout()));
  if (c.format == "json") {
    Json j;
    Json terms = Json::array();
    for (const auto& [exp, coef] : u.coeffs) terms.push_back({{"exp", exp}, {"coef", coef.get_str()}});
    j["terms"] = std::move(terms);
    j["sum"] = u.sum().get_str();
    j["min_positive_exponent"] = u.min_positive_exponent();
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& [exp, coef] : u.coeffs) {
    out += (sgn(coef) < 0 ? "" : "+") + coef.get_str() + "*t^" + std::to_string(exp) + "\n";
  }
  return out.empty() ? "0\n" : out;
}

std::string cmd_table(const Config& c) {
  const auto t = load_table(c.family);
  if (c.format == "json") return table_to_json(t) + "\n";
  std::string out;
  for (const auto& [key, d] : t.table.seeds()) {
    out += "# D_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}\n" + to_text(d);
  }
  out += "# cutoff " + std::to_string(t.table.cutoff()) + "\n";
  return out;
}

std::string cmd_candidates(const Config& c) {
  const auto cand = disjoint_support_candidates(build_family(c.family), c.i, c.j, c.budget);
  Enumerator e(cand.layout, cand.n);
  for (const auto& m : cand.patterns) e.add_term(m, 1);
  return emit(e, c.format);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kExitBudget;
    case ErrorCode::NotIntegral:
    case ErrorCode::NegativeCoefficient:
    case ErrorCode::SelfDualityFailed: return kExitFailed;
    default: return kExitBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Symmetrized weight enumerators of lifted QR codes over Z_{p^m}", "liftenum"};
  app.require_subcommand(1);
  const std::vector<std::string> families = table_names();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "maximum number of codewords to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", c.output, "write the result to a file");
    sub->add_option("--threads", c.threads, "worker threads for enumeration")->check(CLI::Range(1, 256));
  };
  auto family_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--family", c.family, "octacode, qr24-2 or qr24-3")->check(CLI::IsMember(families));
    if (required) o->required();
  };

  auto* brute = app.add_subcommand("brute", "weight enumerator A_{m,0} by exhaustive enumeration");
  family_opt(brute, true);
  brute->add_option("--m", c.m, "modulus exponent")->check(CLI::Range(1, 29));
  common(brute);

  auto* pipe = app.add_subcommand("pipeline", "A_{1,0}..A_{M,0} from the partial enumerator table");
  family_opt(pipe, true);
  pipe->add_option("--max-m", c.max_m, "largest modulus exponent")->check(CLI::Range(1, 14));
  common(pipe);

  auto* verify = app.add_subcommand("verify", "cross-check an embedded table");
  family_opt(verify, true);
  c.max_m = 3;
  verify->add_option("--max-m", c.max_m, "pipeline depth to check")->check(CLI::Range(1, 14));
  verify->add_flag("--candidates", c.candidates, "also run the disjoint-support search for D_{1,1}");
  common(verify);

  auto* transform = app.add_subcommand("transform", "apply one transform to an enumerator in JSON form");
  family_opt(transform, true);
  transform->add_option("--op", c.op, "upA, downA, upD or downD")
      ->required()
      ->check(CLI::IsMember({"upA", "downA", "upD", "downD"}));
  transform->add_option("--input,-i", c.input, "enumerator JSON file")->required();
  common(transform);

  auto* spec = app.add_subcommand("specialize", "substitute t^k for each variable");
  family_opt(spec, false);
  spec->add_option("--map", c.map, "e.g. u=2,v=2,w=4,z=0")->required();
  spec->add_option("--input,-i", c.input, "enumerator JSON file");
  spec->add_option("--m", c.m, "use the pipeline's A_{m,0} for --family")->check(CLI::Range(1, 14));
  common(spec);

  auto* table = app.add_subcommand("table", "print an embedded partial enumerator table");
  family_opt(table, true);
  common(table);

  auto* cand = app.add_subcommand("candidates", "monomials realizable in D_{i,j} by disjoint pairs");
  family_opt(cand, true);
  cand->add_option("--i", c.i, "valuation classes of the code word")->check(CLI::Range(1, 8));
  cand->add_option("--j", c.j, "valuation classes of the dual word")->check(CLI::Range(1, 8));
  common(cand);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    std::string result;
    int code = kExitOk;
    if (*brute) {
      result = cmd_brute(c);
    } else if (*pipe) {
      result = cmd_pipeline(c);
    } else if (*verify) {
      bool ok = false;
      std::tie(result, ok) = cmd_verify(c);
      code = ok ? kExitOk : kExitFailed;
    } else if (*transform) {
      result = cmd_transform(c);
    } else if (*spec) {
      if (c.input.empty() == c.family.empty()) {
        err << "error: specialize needs exactly one of --input and --family\n";
        return kExitBadInput;
      }
      result = cmd_specialize(c);
    } else if (*table) {
      result = cmd_table(c);
    } else if (*cand) {
      result = cmd_candidates(c);
    }
    if (c.output.empty()) {
      out << result;
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) {
        err << "error: cannot write '" << c.output << "'\n";
        return kExitBadInput;
      }
      f << result;
    }
    return code;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.required() << " codewords required, budget " << c.budget << "\n";
    return kExitBudget;
  } catch (const PipelineError& e) {
    err << "pipeline failed at stage " << e.stage() << ": " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace liftenum
