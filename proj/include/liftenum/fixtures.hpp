#pragma once

// Embedded partial-enumerator tables for the three built-in families and the
// cross-checks that validate them.

#include <string>
#include <vector>

#include "liftenum/codes.hpp"
#include "liftenum/enumpoly.hpp"
#include "liftenum/transforms.hpp"

namespace liftenum {

/// A known misprint in reference data: where it is, what was printed and what
/// the exhaustive computation gives.
struct Erratum {
  std::string location;
  std::string printed;
  std::string computed;
  std::string note;
};

struct NamedTable {
  std::string family;
  DTable table;
  std::vector<std::string> notes;
  std::vector<Erratum> errata;
};

/// "octacode", "qr24-2" or "qr24-3"; UnknownTable otherwise. Seeds are
/// checked on load: D_{i,j} is divisible by x_0 (i > 0) and y_0 (j > 0).
NamedTable load_table(const std::string& name);

std::vector<std::string> table_names();

/// Reference Octacode polynomials as printed, duplicates included:
/// "A20", "A11", "D00", "D01", "D10", "D11", "A21", "A30".
Enumerator octacode_reference(const std::string& label);

/// {"family", "n", "cutoff", "seeds": [{"i", "j", "enumerator"}]}.
std::string table_to_json(const NamedTable& t);
NamedTable table_from_json(const std::string& json_text);

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  int max_m = 8;
  int threads = 1;
  /// Also run the disjoint-support candidate search for D_{1,1}.
  bool candidate_search = false;
};

struct ReportEntry {
  enum class Status { Pass, Fail, Erratum, Skipped };

  std::string check;
  Status status = Status::Pass;
  std::string expected;
  std::string actual;
  std::string note;
};

std::string to_string(ReportEntry::Status s);

struct VerificationReport {
  std::string family;
  std::vector<ReportEntry> entries;

  /// True unless some entry failed; errata and skips do not count.
  bool passed() const;
  std::size_t count(ReportEntry::Status s) const;
  std::string to_json() const;
};

/// Runs every applicable check for the family. Failures become report
/// entries; only a (p, n) mismatch between family and table throws.
VerificationReport verify_table(const LiftedCodeFamily& family, const NamedTable& table,
                                const VerifyOptions& options = {});

}  // namespace liftenum
