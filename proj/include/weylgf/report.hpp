#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace weylgf {

enum class Format { Json, Csv, Md };

std::string format_name(Format f);
Format parse_format(std::string_view s);

struct ReportEntry {
  int p = 0, q = 0, r = 0;
  std::string coeff;  // canonical ParamPoly text

  auto operator<=>(const ReportEntry&) const = default;
};

// One verification case: a name, PASS or FAIL, and a witness or note.
struct CaseResult {
  std::string name;
  bool pass = true;
  std::string detail;

  auto operator<=>(const CaseResult&) const = default;
};

struct TableReport {
  std::string group;                // "sp", "gl", ... or "all"
  std::string mode;                 // "full", "spin-ac", ... or a verification target
  std::vector<std::string> params;  // "a0=1", "a1/2=a1/2"
  int pmax = 0, qmax = 0, rmax = 0;
  std::vector<ReportEntry> entries;
  std::vector<CaseResult> cases;
  bool verified = false;  // whether a verdict applies
  std::string witness;    // first failing case

  bool pass() const;
  std::string verdict() const;  // "PASS", "FAIL" or "" when not a verification run
  // Sorts entries by (p,q,r) and cases by name; fills witness.
  void normalize();

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_markdown() const;
  std::string render(Format f) const;
  static TableReport from_json(std::string_view text);

  bool operator==(const TableReport&) const = default;
};

}  // namespace weylgf
