#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylgf/polyring.hpp"
#include "weylgf/recur.hpp"

namespace weylgf {

// One printed row: a fixed integer parameter vector and the values it claims.
struct PaperRow {
  Family family = Family::Sp;
  Mode mode = Mode::Full;
  std::vector<long> a;  // values for mode_params(family, mode)
  int qmax = 0;         // checked range, inclusive
  int rmax = 0;
  int rmin = 0;
  // Printed coefficient at p = 0; nullopt where the row makes no claim.
  std::function<std::optional<Rational>(int q, int r)> expected;
  // Replacement for rows whose printed values are wrong; empty otherwise.
  std::function<std::optional<Rational>(int q, int r)> corrected;
  std::string erratum;

  bool has_erratum() const { return static_cast<bool>(corrected); }
  std::optional<Rational> value(int q, int r) const { return corrected ? corrected(q, r) : expected(q, r); }

  std::string a_label() const;  // "(1,0,1)"
};

struct PaperTable {
  std::string name;
  std::string caption;
  std::vector<PaperRow> rows;
};

std::vector<std::string> paper_table_names();
// Throws ParseError for unknown names.
const PaperTable& paper_table(std::string_view name);

struct CellMismatch {
  int q = 0, r = 0;
  std::string expected;
  std::string actual;
};

struct RowCheck {
  std::string table;
  PaperRow row;
  long cells = 0;
  std::optional<CellMismatch> witness;          // against the corrected values
  long printed_mismatches = 0;                  // against the values as printed
  std::optional<CellMismatch> printed_witness;
  bool pass() const { return !witness.has_value(); }
};

RowCheck check_row(const std::string& table, const PaperRow& row);
std::vector<RowCheck> check_table(const PaperTable& table);

}  // namespace weylgf
