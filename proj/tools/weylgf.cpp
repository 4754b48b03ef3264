#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylgf/charformula.hpp"
#include "weylgf/dualpair.hpp"
#include "weylgf/oracle.hpp"
#include "weylgf/recur.hpp"
#include "weylgf/report.hpp"
#include "weylgf/straighten.hpp"
#include "weylgf/tables.hpp"

using namespace weylgf;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

bool is_rational_literal(const std::string& s) {
  static const std::regex re(R"(-?\d+/\d+)");
  return std::regex_match(s, re);
}

bool is_integer_literal(const std::string& s) {
  static const std::regex re(R"(-?\d+)");
  return std::regex_match(s, re);
}

Rational parse_rational(const std::string& s) {
  Rational q(s);
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

GroupId make_group(const std::string& name, int rank) {
  if (rank < 1) throw UsageError("rank must be positive");
  return GroupId{parse_family(name), rank};
}

Weight read_weight(const std::string& text, int rank) {
  Weight w = Weight::parse(text);
  if (w.rank() != rank)
    throw UsageError("weight " + w.to_string() + " has rank " + std::to_string(w.rank()) + ", expected " +
                     std::to_string(rank));
  return w;
}

// Runs cases on a pool of workers; results come back in case order.
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& cases, int jobs) {
  std::vector<CaseResult> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        out[i] = cases[i]();
      } catch (const Error& e) {
        out[i] = CaseResult{"", false, e.what()};
      }
    }
  };
  int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(cases.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

struct NamedCase {
  std::string name;
  std::function<CaseResult()> run;
};

TableReport run_named(std::vector<NamedCase> cases, int jobs) {
  std::vector<std::function<CaseResult()>> fns;
  for (const NamedCase& c : cases) fns.push_back(c.run);
  std::vector<CaseResult> results = run_cases(fns, jobs);
  TableReport report;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    results[i].name = cases[i].name;
    report.cases.push_back(results[i]);
  }
  report.verified = true;
  return report;
}

CaseResult bool_case(bool ok, const std::string& detail = "") { return CaseResult{"", ok, ok ? "" : detail}; }

std::string pad2(int v) { return v < 10 ? "0" + std::to_string(v) : std::to_string(v); }

std::vector<Family> selected_families(const std::string& group) {
  if (group == "all") return {Family::GL, Family::Sp, Family::SOodd, Family::SOeven, Family::Oeven};
  return {parse_family(group)};
}

std::vector<Mode> family_modes(Family f) {
  switch (f) {
    case Family::GL: return {Mode::Full};
    case Family::Sp: return {Mode::Full, Mode::AB, Mode::AC};
    case Family::SOodd:
    case Family::Oeven: return {Mode::Full, Mode::AB, Mode::AC, Mode::SpinAB, Mode::SpinAC};
    case Family::SOeven: return {};
  }
  return {};
}

std::map<ParamId, ParamPoly> sample_values(const ASpec& spec) {
  std::map<ParamId, ParamPoly> out;
  long v = 2;
  for (const auto& [h, c] : spec.entries) {
    for (ParamId id : c.params()) out.emplace(id, ParamPoly(v));
    v = v > 0 ? -v : 1 - v;
  }
  return out;
}

// ---- subcommands ----

struct CharOpts {
  std::string group;
  int rank = 1;
  std::string weight;
  bool spin = false;
};

int cmd_char(const CharOpts& o) {
  GroupId g = make_group(o.group, o.rank);
  Weight w = read_weight(o.weight, o.rank);
  if (o.spin != w.is_half_odd() && !(w.rank() == 0))
    throw UsageError(o.spin ? "spin characters need half-odd components" : "half-odd weight needs --spin");
  if (!is_dominant(g, w)) throw UsageError(w.to_string() + " is not dominant for " + g.label());
  std::cout << character(CharLabel{g, w, o.spin}).to_string() << '\n';
  return 0;
}

struct StraightenOpts {
  std::string group;
  int rank = 1;
  std::string weight;
  bool slow = false;
};

int cmd_straighten(const StraightenOpts& o) {
  GroupId g = make_group(o.group, o.rank);
  Weight w = read_weight(o.weight, o.rank);
  StraightenResult r = o.slow ? straighten_slow(g, w) : straighten(g, w);
  std::cout << r.to_string() << '\n';
  return 0;
}

struct ExpandOpts {
  std::string group;
  int rank = 1;
  int m = 2;
  bool spin = false;
  std::string a;
  bool symbolic = false;
  bool verify = false;
  int jobs = 1;
  std::string format = "json";
};

int cmd_expand(const ExpandOpts& o) {
  GroupId g = make_group(o.group, o.rank);
  Format fmt = parse_format(o.format);
  AKind kind = g.family == Family::GL ? AKind::GLPowers : o.spin ? AKind::SpinSymmetrized : AKind::Symmetrized;
  if (o.spin && g.family != Family::SOodd && g.family != Family::Oeven)
    throw UsageError("--spin needs so-odd or o-even");
  if (!o.a.empty() && o.symbolic) throw UsageError("--a and --symbolic are exclusive");
  ASpec spec;
  if (o.a.empty()) {
    if (o.m < 0) throw UsageError("--m must be nonnegative");
    spec = ASpec::symbolic(kind, o.m);
  } else {
    std::vector<ParamPoly> values;
    for (const std::string& s : split_list(o.a)) {
      if (is_rational_literal(s)) throw UsageError("expand takes integer or symbolic a-values");
      values.push_back(ParamPoly::parse(s));
    }
    spec = ASpec::from_values(kind, values);
  }
  ExpansionTable table = expand(g, spec, o.jobs);

  TableReport report;
  report.group = g.label();
  report.mode = kind == AKind::GLPowers ? "gl-powers" : kind == AKind::Symmetrized ? "symmetrized" : "spin";
  for (const auto& [h, c] : spec.entries) report.params.push_back("x^" + format_half(h) + ":" + c.to_string());
  if (o.verify) {
    bool ok = spec.product(o.rank) == expansion_rhs(table);
    report.cases.push_back(CaseResult{"identity " + g.label(), ok, ok ? "" : "product differs from the expansion"});
    report.verified = true;
    report.normalize();
  }

  switch (fmt) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["group"] = report.group;
      j["rank"] = o.rank;
      j["mode"] = report.mode;
      j["params"] = report.params;
      j["entries"] = nlohmann::ordered_json::array();
      for (const auto& [w, c] : table.entries) j["entries"].push_back({{"weight", w.to_string()}, {"coeff", c.to_string()}});
      j["verdict"] = report.verified ? nlohmann::ordered_json(report.verdict()) : nlohmann::ordered_json(nullptr);
      j["witness"] = report.witness;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "weight,coeff\n";
      for (const auto& [w, c] : table.entries) std::cout << '"' << w.to_string() << "\"," << c.to_string() << '\n';
      if (report.verified) std::cout << "verdict," << report.verdict() << '\n';
      break;
    case Format::Md:
      std::cout << "## " << report.group << " " << report.mode << "\n\n| weight | coeff |\n|---|---|\n";
      for (const auto& [w, c] : table.entries) std::cout << "| " << w.to_string() << " | " << c.to_string() << " |\n";
      if (report.verified) std::cout << "\nverdict: " << report.verdict() << '\n';
      break;
  }
  return report.verified && !report.pass() ? 1 : 0;
}

struct CoeffsOpts {
  std::string group;
  std::string mode = "full";
  std::string a;
  bool symbolic = false;
  int m = 3;
  int pmax = 0, qmax = 3, rmax = 3;
  std::string format = "json";
};

int cmd_coeffs(const CoeffsOpts& o) {
  Family f = parse_family(o.group);
  Mode mode = parse_mode(o.mode);
  Format fmt = parse_format(o.format);
  if (f == Family::SOeven) throw UsageError("so-even has no recurrence; use o-even");
  if (o.pmax < 0 || o.qmax < 0 || o.rmax < 0) throw UsageError("ranges must be nonnegative");
  if (o.a.empty() == !o.symbolic) throw UsageError("give exactly one of --a and --symbolic");

  std::vector<ParamPoly> a;
  std::map<ParamId, Rational> rational_values;
  std::vector<std::string> labels;
  if (o.symbolic) {
    a = symbolic_params(f, mode, o.m);
    for (const ParamPoly& p : a) labels.push_back(p.to_string() + "=" + p.to_string());
  } else {
    std::vector<std::string> items = split_list(o.a);
    std::vector<ParamId> ids = mode_params(f, mode);
    if (items.size() > ids.size() || (f != Family::GL && items.size() != ids.size()))
      throw UsageError("mode " + mode_name(mode) + " takes " + std::to_string(ids.size()) + " values");
    bool rational = std::any_of(items.begin(), items.end(), is_rational_literal);
    for (std::size_t i = 0; i < items.size(); ++i) {
      labels.push_back(ids[i].name() + "=" + items[i]);
      if (rational) {
        if (!is_rational_literal(items[i]) && !is_integer_literal(items[i]))
          throw UsageError("rational values cannot be mixed with symbols");
        rational_values[ids[i]] = parse_rational(items[i]);
        a.push_back(ParamPoly::param(ids[i]));
      } else {
        a.push_back(ParamPoly::parse(items[i]));
      }
    }
  }

  TableReport report;
  report.group = family_name(f);
  report.mode = mode_name(mode);
  report.params = labels;
  bool no_p = mode == Mode::AB || mode == Mode::SpinAB;
  report.pmax = no_p ? 0 : o.pmax;
  report.qmax = o.qmax;
  report.rmax = o.rmax;
  PolyGrid grid = coeff_grid(f, mode, a, o.qmax, o.rmax);
  ParamPoly pre = coeff_prefactor(f, mode, a);
  for (int p = 0; p <= report.pmax; ++p) {
    ParamPoly scale = pre.pow(p);
    for (int q = 0; q <= o.qmax; ++q) {
      for (int r = 0; r <= o.rmax; ++r) {
        ParamPoly c = scale * grid(q, r);
        std::string text = rational_values.empty() ? c.to_string() : format_rational(c.eval(rational_values));
        report.entries.push_back(ReportEntry{p, q, r, text});
      }
    }
  }
  report.normalize();
  std::cout << report.render(fmt);
  return 0;
}

struct VerifyOpts {
  std::string target;
  std::string group = "all";
  int n_max = -1;
  int m_max = -1;
  bool symbolic = false;
  std::string paper_table = "all";
  bool as_printed = false;
  int id = 0;
  int n = 1, m = 1;
  int which = 0;
  int bound = 10;
  int jobs = 1;
  std::string format = "md";
};

std::vector<NamedCase> identity_cases(const VerifyOpts& o) {
  int n_max = o.n_max < 0 ? 3 : o.n_max;
  int m_max = o.m_max < 0 ? 2 : o.m_max;
  std::vector<NamedCase> cases;
  for (Family f : selected_families(o.group)) {
    std::vector<AKind> kinds{f == Family::GL ? AKind::GLPowers : AKind::Symmetrized};
    if (f == Family::SOodd || f == Family::Oeven) kinds.push_back(AKind::SpinSymmetrized);
    for (AKind kind : kinds) {
      int mm = std::min(m_max, f == Family::GL ? 3 : 2);
      for (int m = kind == AKind::SpinSymmetrized ? 0 : 1; m <= mm; ++m) {
        for (int n = 1; n <= n_max; ++n) {
          GroupId g{f, n};
          std::string name = "identity " + g.label() + (kind == AKind::SpinSymmetrized ? " spin" : "") +
                             " m=" + std::to_string(m);
          bool symbolic = o.symbolic;
          cases.push_back({name, [g, kind, m, symbolic] {
                             ASpec spec = ASpec::symbolic(kind, m);
                             bool ok = symbolic ? verify_identity(g, spec) : verify_identity(g, spec, sample_values(spec));
                             return bool_case(ok, "product differs from the expansion");
                           }});
        }
      }
    }
    for (Mode mode : family_modes(f)) {
      for (int n = 1; n <= n_max; ++n) {
        std::string name = "expansion " + family_name(f) + " " + mode_name(mode) + " n=" + std::to_string(n);
        cases.push_back({name, [f, mode, n] {
                           return bool_case(verify_expansion(f, mode, n), "product differs from sum coeff * character");
                         }});
      }
    }
  }
  return cases;
}

std::vector<NamedCase> equivalence_cases(const VerifyOpts& o) {
  std::vector<NamedCase> cases;
  for (Family f : selected_families(o.group)) {
    int n_max = o.n_max >= 0 ? o.n_max : f == Family::GL ? 5 : 6;
    for (Mode mode : family_modes(f)) {
      for (int n = 1; n <= n_max; ++n) {
        std::string name = "equivalence " + family_name(f) + " " + mode_name(mode) + " n=" + pad2(n);
        cases.push_back({name, [f, mode, n] {
                           std::string d = compare_with_oracle(f, mode, n);
                           return bool_case(d.empty(), d);
                         }});
      }
    }
  }
  return cases;
}

std::string cell_text(const CellMismatch& c) {
  return "q=" + std::to_string(c.q) + " r=" + std::to_string(c.r) + " expected " + c.expected + ", recurrence " +
         c.actual;
}

std::vector<NamedCase> table_cases(const VerifyOpts& o) {
  std::vector<std::string> names =
      o.paper_table == "all" ? paper_table_names() : std::vector<std::string>{o.paper_table};
  std::vector<NamedCase> cases;
  for (const std::string& name : names) {
    const PaperTable& table = paper_table(name);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const PaperRow& row = table.rows[i];
      std::string case_name = name + " row " + pad2(static_cast<int>(i)) + " " + family_name(row.family) + " " +
                              mode_name(row.mode) + " a=" + row.a_label();
      bool printed = o.as_printed;
      cases.push_back({case_name, [name, row, printed] {
                         RowCheck c = check_row(name, row);
                         if (printed) {
                           if (c.printed_mismatches == 0) return bool_case(true);
                           return bool_case(false, std::to_string(c.printed_mismatches) + " of " +
                                                       std::to_string(c.cells) +
                                                       " printed cells differ; first " + cell_text(*c.printed_witness));
                         }
                         if (!c.pass()) return bool_case(false, cell_text(*c.witness));
                         CaseResult r{"", true, std::to_string(c.cells) + " cells"};
                         if (row.has_erratum()) r.detail += "; corrected: " + row.erratum;
                         return r;
                       }});
    }
  }
  return cases;
}

std::vector<NamedCase> dual_pair_cases(const VerifyOpts& o) {
  std::vector<int> ids;
  if (o.id == 0) ids = {1, 2, 3, 4, 5};
  else ids = {o.id};
  std::vector<NamedCase> cases;
  for (int id : ids) {
    int n = o.n, m = o.m;
    cases.push_back({"dual-pair id=" + std::to_string(id) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                     [id, n, m] { return bool_case(check_dual_pair(id, n, m), "left and right sides differ"); }});
  }
  return cases;
}

std::vector<NamedCase> box_cases(const VerifyOpts& o, const std::string& prefix, int default_max,
                                 const std::function<bool(int, int)>& check) {
  int n_max = o.n_max < 0 ? default_max : o.n_max;
  int m_max = o.m_max < 0 ? default_max : o.m_max;
  std::vector<NamedCase> cases;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m)
      cases.push_back({prefix + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                       [check, n, m] { return bool_case(check(n, m), "left and right sides differ"); }});
  return cases;
}

std::vector<NamedCase> relation_cases(const VerifyOpts& o) {
  std::vector<int> which;
  if (o.which == 0) which = {1, 2, 3, 4};
  else which = {o.which};
  std::vector<NamedCase> cases;
  for (int w : which) {
    int bound = o.bound;
    cases.push_back({"relation " + std::to_string(w) + " bound=" + std::to_string(bound),
                     [w, bound] { return bool_case(check_phi_psi_relations(w, bound), "coefficients differ"); }});
  }
  return cases;
}

std::vector<NamedCase> ratio_cases(const VerifyOpts& o) {
  int m_max = o.m_max < 0 ? 2 : o.m_max;
  int part_max = o.n_max < 0 ? 3 : o.n_max;
  std::vector<NamedCase> cases;
  for (int m = 1; m <= m_max; ++m) {
    for (const Partition& lambda : box_partitions(m, part_max)) {
      Weight w = lambda.weight(m);
      cases.push_back({"ratio m=" + std::to_string(m) + " " + w.to_string(),
                       [m, w] { return bool_case(check_ratio_identities(m, w), "ratio identity fails"); }});
    }
  }
  return cases;
}

int cmd_verify(const VerifyOpts& o) {
  Format fmt = parse_format(o.format);
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  if (o.group != "all") parse_family(o.group);
  std::vector<NamedCase> cases;
  if (o.target == "identity") cases = identity_cases(o);
  else if (o.target == "equivalence") cases = equivalence_cases(o);
  else if (o.target == "tables") cases = table_cases(o);
  else if (o.target == "dual-pair") cases = dual_pair_cases(o);
  else if (o.target == "dual-cauchy") cases = box_cases(o, "dual-cauchy", 3, check_dual_cauchy);
  else if (o.target == "spn-spm") cases = box_cases(o, "spn-spm", 2, check_spn_spm);
  else if (o.target == "relations") cases = relation_cases(o);
  else if (o.target == "ratio") cases = ratio_cases(o);
  else throw UsageError("unknown verify target '" + o.target + "'");

  TableReport report = run_named(std::move(cases), o.jobs);
  report.group = o.group;
  report.mode = o.target;
  if (o.n_max >= 0) report.params.push_back("n-max=" + std::to_string(o.n_max));
  if (o.m_max >= 0) report.params.push_back("m-max=" + std::to_string(o.m_max));
  if (o.target == "identity") report.params.push_back(o.symbolic ? "symbolic" : "sampled");
  if (o.target == "tables") report.params.push_back(o.as_printed ? "as-printed" : "corrected");
  report.normalize();
  std::cout << report.render(fmt);
  return report.pass() ? 0 : 1;
}

struct TableOpts {
  std::string name;
  int row = -1;
  bool as_printed = false;
  std::string format = "md";
};

int cmd_table(const TableOpts& o) {
  Format fmt = parse_format(o.format);
  const PaperTable& table = paper_table(o.name);
  if (o.row >= static_cast<int>(table.rows.size())) throw UsageError("row index out of range");
  std::vector<std::string> chunks;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (o.row >= 0 && static_cast<int>(i) != o.row) continue;
    const PaperRow& row = table.rows[i];
    TableReport report;
    report.group = family_name(row.family);
    report.mode = mode_name(row.mode);
    report.params = {"table=" + table.name, "row=" + std::to_string(i), "a=" + row.a_label(),
                     o.as_printed ? "source=printed" : "source=corrected"};
    if (row.has_erratum() && !o.as_printed) report.params.push_back("erratum=" + row.erratum);
    report.qmax = row.qmax;
    report.rmax = row.rmax;
    for (int q = 0; q <= row.qmax; ++q) {
      for (int r = row.rmin; r <= row.rmax; ++r) {
        std::optional<Rational> v = o.as_printed ? row.expected(q, r) : row.value(q, r);
        if (v) report.entries.push_back(ReportEntry{0, q, r, format_rational(*v)});
      }
    }
    report.normalize();
    std::string text = report.render(fmt);
    if (fmt == Format::Json) text.pop_back();
    chunks.push_back(text);
  }
  if (fmt == Format::Json) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < chunks.size(); ++i) std::cout << chunks[i] << (i + 1 < chunks.size() ? ",\n" : "\n");
    std::cout << "]\n";
  } else {
    if (fmt == Format::Md) std::cout << "# " << table.name << ": " << table.caption << "\n\n";
    for (std::size_t i = 0; i < chunks.size(); ++i) std::cout << (i ? "\n" : "") << chunks[i];
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character expansions of Weyl-symmetric product generating functions"};
  app.require_subcommand(1);

  CharOpts char_opts;
  auto* c = app.add_subcommand("char", "Print a character");
  c->add_option("--group", char_opts.group, "gl, sp, so-odd, so-even, o-even")->required();
  c->add_option("--rank", char_opts.rank, "rank n")->required();
  c->add_option("--weight", char_opts.weight, "highest weight, e.g. 2,1 or 3/2,1/2")->required();
  c->add_flag("--spin", char_opts.spin, "spin character");

  StraightenOpts st_opts;
  auto* s = app.add_subcommand("straighten", "Straighten a weight");
  s->add_option("--group", st_opts.group)->required();
  s->add_option("--rank", st_opts.rank)->required();
  s->add_option("--weight", st_opts.weight)->required();
  s->add_flag("--slow", st_opts.slow, "orbit search instead of the closed form");

  ExpandOpts ex_opts;
  auto* e = app.add_subcommand("expand", "Expand a product generating function by the oracle");
  e->add_option("--group", ex_opts.group)->required();
  e->add_option("--rank", ex_opts.rank)->required();
  e->add_option("--m", ex_opts.m, "largest power of the symbolic factor")->capture_default_str();
  e->add_flag("--spin", ex_opts.spin);
  e->add_option("--a", ex_opts.a, "comma separated coefficients, lowest power first");
  e->add_flag("--symbolic", ex_opts.symbolic);
  e->add_flag("--verify", ex_opts.verify, "also check the product identity");
  e->add_option("--jobs", ex_opts.jobs)->capture_default_str();
  e->add_option("--format", ex_opts.format, "json, csv or md")->capture_default_str();

  CoeffsOpts co_opts;
  auto* co = app.add_subcommand("coeffs", "Coefficient tables from the recurrences");
  co->add_option("--group", co_opts.group)->required();
  co->add_option("--mode", co_opts.mode, "full, ab, ac, spin-ab, spin-ac")->capture_default_str();
  co->add_option("--a", co_opts.a, "comma separated values: integers, rationals or symbols");
  co->add_flag("--symbolic", co_opts.symbolic);
  co->add_option("--m", co_opts.m, "number of symbolic GL parameters beyond a0")->capture_default_str();
  co->add_option("--pmax", co_opts.pmax)->capture_default_str();
  co->add_option("--qmax", co_opts.qmax)->capture_default_str();
  co->add_option("--rmax", co_opts.rmax)->capture_default_str();
  co->add_option("--format", co_opts.format)->capture_default_str();

  VerifyOpts ve_opts;
  auto* v = app.add_subcommand("verify", "Verification runs");
  v->add_option("target", ve_opts.target,
                "identity, equivalence, tables, dual-pair, dual-cauchy, spn-spm, relations, ratio")
      ->required();
  v->add_option("--group", ve_opts.group)->capture_default_str();
  v->add_option("--n-max", ve_opts.n_max);
  v->add_option("--m-max", ve_opts.m_max);
  v->add_flag("--symbolic", ve_opts.symbolic);
  v->add_option("--paper-table", ve_opts.paper_table)->capture_default_str();
  v->add_flag("--as-printed", ve_opts.as_printed, "compare against the printed values");
  v->add_option("--id", ve_opts.id, "dual pair 1..5, 0 for all")->capture_default_str();
  v->add_option("--n", ve_opts.n)->capture_default_str();
  v->add_option("--m", ve_opts.m)->capture_default_str();
  v->add_option("--which", ve_opts.which, "relation 1..4, 0 for all")->capture_default_str();
  v->add_option("--bound", ve_opts.bound)->capture_default_str();
  v->add_option("--jobs", ve_opts.jobs)->capture_default_str();
  v->add_option("--format", ve_opts.format)->capture_default_str();

  TableOpts ta_opts;
  auto* t = app.add_subcommand("table", "Print a stored coefficient table");
  t->add_option("name", ta_opts.name)->required();
  t->add_option("--row", ta_opts.row);
  t->add_flag("--as-printed", ta_opts.as_printed);
  t->add_option("--format", ta_opts.format)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) return cmd_char(char_opts);
    if (s->parsed()) return cmd_straighten(st_opts);
    if (e->parsed()) return cmd_expand(ex_opts);
    if (co->parsed()) return cmd_coeffs(co_opts);
    if (v->parsed()) return cmd_verify(ve_opts);
    if (t->parsed()) return cmd_table(ta_opts);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return 2;
  } catch (const Error& err) {
    std::cerr << err.what() << '\n';
    return 2;
  }
  return 2;
}
