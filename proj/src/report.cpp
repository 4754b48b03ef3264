#include "weylgf/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "weylgf/error.hpp"

namespace weylgf {

using nlohmann::ordered_json;

std::string format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Md: return "md";
  }
  return "?";
}

Format parse_format(std::string_view s) {
  for (Format f : {Format::Json, Format::Csv, Format::Md})
    if (format_name(f) == s) return f;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(s) + "'");
}

bool TableReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string TableReport::verdict() const {
  if (!verified) return "";
  return pass() ? "PASS" : "FAIL";
}

void TableReport::normalize() {
  std::sort(entries.begin(), entries.end());
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  witness.clear();
  for (const CaseResult& c : cases) {
    if (!c.pass) {
      witness = c.name + (c.detail.empty() ? "" : ": " + c.detail);
      break;
    }
  }
}

std::string TableReport::to_json() const {
  ordered_json j;
  j["group"] = group;
  j["mode"] = mode;
  j["params"] = params;
  j["ranges"] = {{"pmax", pmax}, {"qmax", qmax}, {"rmax", rmax}};
  j["entries"] = ordered_json::array();
  for (const ReportEntry& e : entries) j["entries"].push_back({{"p", e.p}, {"q", e.q}, {"r", e.r}, {"coeff", e.coeff}});
  j["cases"] = ordered_json::array();
  for (const CaseResult& c : cases)
    j["cases"].push_back({{"name", c.name}, {"verdict", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  j["verdict"] = verified ? ordered_json(verdict()) : ordered_json(nullptr);
  j["witness"] = witness;
  return j.dump(2) + "\n";
}

TableReport TableReport::from_json(std::string_view text) {
  TableReport out;
  try {
    ordered_json j = ordered_json::parse(text);
    out.group = j.at("group").get<std::string>();
    out.mode = j.at("mode").get<std::string>();
    out.params = j.at("params").get<std::vector<std::string>>();
    if (j.contains("ranges")) {
      out.pmax = j["ranges"].value("pmax", 0);
      out.qmax = j["ranges"].value("qmax", 0);
      out.rmax = j["ranges"].value("rmax", 0);
    }
    for (const auto& e : j.at("entries"))
      out.entries.push_back({e.at("p").get<int>(), e.at("q").get<int>(), e.at("r").get<int>(),
                             e.at("coeff").get<std::string>()});
    if (j.contains("cases"))
      for (const auto& c : j["cases"])
        out.cases.push_back({c.at("name").get<std::string>(), c.at("verdict").get<std::string>() == "PASS",
                             c.value("detail", std::string())});
    out.verified = !j.at("verdict").is_null();
    out.witness = j.value("witness", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report json: ") + e.what());
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string TableReport::to_csv() const {
  std::ostringstream os;
  if (!entries.empty() || cases.empty()) {
    os << "p,q,r,coeff\n";
    for (const ReportEntry& e : entries) os << e.p << ',' << e.q << ',' << e.r << ',' << csv_field(e.coeff) << '\n';
  }
  if (!cases.empty()) {
    os << "case,verdict,detail\n";
    for (const CaseResult& c : cases)
      os << csv_field(c.name) << ',' << (c.pass ? "PASS" : "FAIL") << ',' << csv_field(c.detail) << '\n';
  }
  return os.str();
}

std::string TableReport::to_markdown() const {
  std::ostringstream os;
  os << "## " << group << " " << mode;
  if (!params.empty()) {
    os << " (";
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ", " : "") << params[i];
    os << ")";
  }
  os << "\n";
  std::map<int, std::map<std::pair<int, int>, std::string>> by_p;
  for (const ReportEntry& e : entries) by_p[e.p][{e.q, e.r}] = e.coeff;
  for (const auto& [p, cells] : by_p) {
    int qm = 0, rm = 0;
    for (const auto& [qr, c] : cells) {
      qm = std::max(qm, qr.first);
      rm = std::max(rm, qr.second);
    }
    os << "\np = " << p << "\n\n| q\\r |";
    for (int r = 0; r <= rm; ++r) os << ' ' << r << " |";
    os << "\n|---|";
    for (int r = 0; r <= rm; ++r) os << "---|";
    os << '\n';
    for (int q = 0; q <= qm; ++q) {
      os << "| " << q << " |";
      for (int r = 0; r <= rm; ++r) {
        auto it = cells.find({q, r});
        os << ' ' << (it == cells.end() ? "" : md_cell(it->second)) << " |";
      }
      os << '\n';
    }
  }
  if (!cases.empty()) {
    os << "\n| case | verdict | detail |\n|---|---|---|\n";
    for (const CaseResult& c : cases)
      os << "| " << md_cell(c.name) << " | " << (c.pass ? "PASS" : "FAIL") << " | " << md_cell(c.detail) << " |\n";
  }
  if (verified) os << "\nverdict: " << verdict() << '\n';
  return os.str();
}

std::string TableReport::render(Format f) const {
  switch (f) {
    case Format::Json: return to_json();
    case Format::Csv: return to_csv();
    case Format::Md: return to_markdown();
  }
  return "";
}

}  // namespace weylgf
