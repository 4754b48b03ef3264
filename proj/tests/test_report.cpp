#include "doctest.h"

#include "json.hpp"

#include "weylgf/error.hpp"
#include "weylgf/report.hpp"

using namespace weylgf;

namespace {

TableReport sample() {
  TableReport r;
  r.group = "sp";
  r.mode = "full";
  r.params = {"a0=1", "a1=0", "a2=1"};
  r.qmax = 1;
  r.rmax = 1;
  r.entries = {{0, 1, 1, "0"}, {0, 0, 1, "a0*a1"}, {0, 0, 0, "1"}, {0, 1, 0, "-1, \"x\""}};
  return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("formats") {
  for (Format f : {Format::Json, Format::Csv, Format::Md}) CHECK(parse_format(format_name(f)) == f);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("normalize sorts entries and fills the witness") {
  TableReport r = sample();
  r.cases = {{"b", true, ""}, {"a", false, "first"}, {"c", false, "second"}};
  r.verified = true;
  r.normalize();
  CHECK(std::is_sorted(r.entries.begin(), r.entries.end()));
  CHECK(r.cases.front().name == "a");
  CHECK(r.witness == "a: first");
  CHECK(r.verdict() == "FAIL");
  CHECK_FALSE(r.pass());
  r.cases = {{"a", true, ""}};
  r.normalize();
  CHECK(r.verdict() == "PASS");
  CHECK(r.witness.empty());
  r.verified = false;
  CHECK(r.verdict().empty());
}

TEST_CASE("json schema and round trip") {
  TableReport r = sample();
  r.normalize();
  std::string text = r.to_json();
  auto j = nlohmann::json::parse(text);
  CHECK(j["group"] == "sp");
  CHECK(j["mode"] == "full");
  CHECK(j["params"].size() == 3);
  CHECK(j["entries"][0]["p"] == 0);
  CHECK(j["entries"][0]["coeff"] == "1");
  CHECK(j["verdict"].is_null());
  CHECK(TableReport::from_json(text) == r);
  CHECK(TableReport::from_json(text).to_json() == text);

  r.cases = {{"x", false, "why"}};
  r.verified = true;
  r.normalize();
  auto j2 = nlohmann::json::parse(r.to_json());
  CHECK(j2["verdict"] == "FAIL");
  CHECK(j2["witness"] == "x: why");
  CHECK(TableReport::from_json(r.to_json()) == r);
  CHECK_THROWS_AS(TableReport::from_json("{"), Error);
  CHECK_THROWS_AS(TableReport::from_json("{}"), Error);
}

TEST_CASE("csv quoting") {
  TableReport r = sample();
  r.normalize();
  std::string csv = r.to_csv();
  CHECK(csv.rfind("p,q,r,coeff\n0,0,0,1\n", 0) == 0);
  CHECK(csv.find("0,1,0,\"-1, \"\"x\"\"\"\n") != std::string::npos);
}

TEST_CASE("markdown grid") {
  TableReport r = sample();
  r.normalize();
  std::string md = r.to_markdown();
  CHECK(md.find("## sp full (a0=1, a1=0, a2=1)") == 0);
  CHECK(md.find("| 0 | 1 | a0*a1 |") != std::string::npos);
  CHECK(md.find("verdict") == std::string::npos);
  r.cases = {{"only", true, ""}};
  r.verified = true;
  CHECK(r.to_markdown().find("verdict: PASS") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  TableReport a = sample(), b = sample();
  std::reverse(b.entries.begin(), b.entries.end());
  a.normalize();
  b.normalize();
  for (Format f : {Format::Json, Format::Csv, Format::Md}) CHECK(a.render(f) == b.render(f));
}

}
