#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace crown;
using namespace crown::cli;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(std::vector<const char*> args) {
  args.insert(args.begin(), "crown");
  std::ostringstream out, err;
  int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

const Cell& cell(const Table& t, size_t row, const std::string& col) {
  for (size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i].name == col) return t.rows.at(row).at(i);
  FAIL("no column " << col);
  return t.rows.at(0).at(0);
}

}  // namespace

TEST_CASE("multiplicity flags") {
  std::vector<std::string> warnings;
  auto d = parse_multiplicities({}, warnings);
  CHECK(d.m_long == Rat(1));
  CHECK(d.m_other == Rat(1));
  CHECK(d.m_half == Rat(0));
  auto m = parse_multiplicities({.m = "3/2"}, warnings);
  CHECK(m.m_long == Rat(3, 2));
  CHECK(m.m_other == Rat(3, 2));
  CHECK(warnings.empty());
  auto x = parse_multiplicities({.m1 = "1", .m2 = "2.5", .mh = "1"}, warnings);
  CHECK(x.m_other == Rat(5, 2));
  CHECK(x.m_half == Rat(1));
  CHECK(warnings.size() == 1);
  CHECK_THROWS_AS(parse_multiplicities({.m = "abc"}, warnings), std::invalid_argument);
  CHECK_THROWS_AS(parse_multiplicities({.m = "1", .m1 = "2"}, warnings), std::invalid_argument);
}

TEST_CASE("boundary command rows") {
  auto doc = boundary_command("E", 6, false);
  REQUIRE(doc.table.rows.size() == 1);
  CHECK(cell(doc.table, 0, "extremal").items == std::vector<std::string>{"w1", "w6"});
  CHECK(cell(doc.table, 0, "highest_root").items == std::vector<std::string>{"1", "2", "2", "3", "2", "1"});
  auto all = boundary_command("", std::nullopt, true);
  CHECK(all.table.rows.size() == 40);  // A 8, B 7, C 7, BC 8, D 5, E 3, F 1, G 1
}

TEST_CASE("exponents command rows") {
  auto doc = exponents_command("B", 5, std::nullopt, {});
  REQUIRE(doc.table.rows.size() == 2);
  CHECK(cell(doc.table, 0, "sigma").text == "(4,1)");
  CHECK(cell(doc.table, 0, "s").text == "1-4m1-m2");
  CHECK(cell(doc.table, 1, "affine_isotropy").text == "D_5");
  CHECK(cell(doc.table, 1, "complex_s2").text == "-10");
  auto a3 = exponents_command("A", 3, "w2", {.m = "2"});
  REQUIRE(a3.table.rows.size() == 1);
  CHECK(cell(a3.table, 0, "s_value").text == "-4");
  CHECK(cell(a3.table, 0, "d_flag").text == "0");
  auto g2 = exponents_command("G", 2, std::nullopt, {.m = "1"});
  CHECK(cell(g2.table, 0, "s_value").text == "-1/2");
}

TEST_CASE("TSV round trip") {
  SUBCASE("every report kind") {
    std::vector<ReportDocument> docs = {
        boundary_command("", std::nullopt, true), exponents_command("D", 6, std::nullopt, {}),
        decay_command("BC", 3, {.m1 = "1", .m2 = "2", .mh = "1"}, {1.0}, {1.0}), complex_check_command("E", 7)};
    for (const auto& d : docs) CHECK(parse_tsv(emit_tsv(d.table)) == d.table);
    auto v = verification_table(rootsys_suite(kDefaultSeed));
    CHECK(parse_tsv(emit_tsv(v)) == v);
  }
  SUBCASE("awkward cells") {
    Table t;
    t.columns = {{"text", ColumnType::Text}, {"items", ColumnType::List}, {"n", ColumnType::Number}};
    t.rows.push_back({Cell::of("tab\there\nnewline \\ back"), Cell::list({"a,b", "", "c\td"}), Cell::number(0.1)});
    t.rows.push_back({Cell::of(""), Cell::list({}), Cell::number(-1e-300)});
    t.rows.push_back({Cell::of("x"), Cell::list({""}), Cell::number(3)});
    auto text = emit_tsv(t);
    CHECK(parse_tsv(text) == t);
  }
  SUBCASE("empty table") {
    Table t;
    t.columns = {{"a", ColumnType::Integer}, {"b", ColumnType::Boolean}};
    CHECK(parse_tsv(emit_tsv(t)) == t);
  }
  CHECK_THROWS_AS(parse_tsv("a:int\tb\n1\n"), std::invalid_argument);
}

TEST_CASE("numbers print in shortest round-trip form") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2) == "2");
  CHECK(std::stod(format_number(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"boundary", "--type", "A", "--rank", "3"}).code == 0);
  CHECK(run_cli({"boundary", "--type", "A"}).code == 2);
  CHECK(run_cli({"boundary"}).code == 2);
  CHECK(run_cli({"exponents", "--type", "A", "--rank", "3", "--eta", "w9"}).code == 2);
  CHECK(run_cli({"exponents", "--type", "Q", "--rank", "3"}).code == 2);
  CHECK(run_cli({"verify", "nosuch"}).code == 2);
  CHECK(run_cli({}).code == 2);
  auto ok = run_cli({"verify", "rootsys", "--json"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"schema_version\": 1") != std::string::npos);
  auto warn = run_cli({"exponents", "--type", "B", "--rank", "3", "--m1", "1.5", "--tsv"});
  CHECK(warn.code == 0);
  CHECK_FALSE(warn.err.empty());
}

TEST_CASE("seeded suites are deterministic") {
  auto a = verification_table(run_suite("matrix", 3));
  auto b = verification_table(run_suite("matrix", 3));
  CHECK(a == b);
}
