#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lieosc/error.hpp"
#include "lieosc/export.hpp"
#include "lieosc/suite.hpp"

using namespace lieosc;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Index tuple of a tensor CSV row, for the ordering check.
std::vector<int> row_index(const std::string& line, std::size_t rank) {
  std::vector<int> idx;
  std::istringstream in(line);
  std::string field;
  for (std::size_t k = 0; k < rank && std::getline(in, field, ','); ++k) idx.push_back(std::stoi(field));
  return idx;
}

}  // namespace

TEST_CASE("surd JSON round trip") {
  const Surd values[] = {Surd(0), Surd(Rational(-7, 3)), Surd::sqrt(Rational(3, 2)),
                         Surd(Rational(1, 2), Rational(-5)) + Surd::sqrt(6) * Surd::i(),
                         Surd::sqrt(Rational(1, 3)) + Surd::sqrt(2) + Rational(4)};
  for (const auto& s : values) {
    const std::string text = export_surd(s);
    CHECK(import_surd(text) == s);
    CHECK(export_surd(import_surd(text)) == text);
    CHECK(text.back() == '\n');
  }
  CHECK(export_surd(Surd(0)) == "{\n  \"terms\": []\n}\n");
  CHECK_THROWS_AS(import_surd("{\"terms\":[{\"d\":-1,\"re\":\"1\",\"im\":\"0\"}]}"), Error);
  CHECK_THROWS_AS(import_surd("not json"), Error);
}

TEST_CASE("matrix JSON round trip, 1-based and zero entries omitted") {
  RepBundle c2 = build_rep(Family::C, 2);
  for (const auto& x : c2.basis) {
    const std::string text = export_matrix(x);
    CHECK(import_matrix(text) == x);
    CHECK(export_matrix(import_matrix(text)) == text);
  }
  Matrix m(2, 3);
  m.set(1, 2, Surd::sqrt(2));
  json j = json::parse(export_matrix(m));
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["r"] == 2);
  CHECK(j["entries"][0]["c"] == 3);
}

TEST_CASE("tensor export: round trip, sorted CSV rows, header-only empty tensor") {
  AlgebraContext ctx = make_context(Family::C, 2);
  for (const SparseTensor* t : {&ctx.st.c, &ctx.st.d_xy, &ctx.st.h, &ctx.st.d_yyy}) {
    const std::string text = export_tensor(*t, Format::Json);
    SparseTensor back = import_tensor(text);
    CHECK(back.dims() == t->dims());
    CHECK((back - *t).is_zero());
    CHECK(export_tensor(back, Format::Json) == text);
  }

  const std::string csv = export_tensor(ctx.st.c, Format::Csv);
  auto rows = lines(csv);
  REQUIRE(rows.size() == ctx.st.c.nnz() + 1);
  CHECK(rows.front() == "i,j,k,value");
  for (std::size_t r = 2; r < rows.size(); ++r) CHECK(row_index(rows[r - 1], 3) < row_index(rows[r], 3));
  // Same config, same bytes.
  CHECK(export_tensor(make_context(Family::C, 2).st.c, Format::Csv) == csv);

  SparseTensor empty({3, 3, 3});
  CHECK(export_tensor(empty, Format::Csv) == "i,j,k,value\n");
  SparseTensor empty4({2, 2, 2, 2});
  CHECK(export_tensor(empty4, Format::Csv) == "i,j,k,l,value\n");
}

TEST_CASE("defining representation export") {
  AlgebraContext b2 = make_context(Family::B, 2);
  json j = json::parse(export_rep(b2.rep, Format::Json));
  REQUIRE(j["generators"].size() == 10);
  for (const auto& g : j["generators"]) {
    CHECK(g["matrix"]["rows"] == 5);
    CHECK(g["matrix"]["cols"] == 5);
  }
  CHECK(j["family"] == "B");
  CHECK(j["dim_v"] == 5);
  auto rows = lines(export_rep(b2.rep, Format::Csv));
  CHECK(rows.front() == "generator,row,col,value");
  CHECK(export_rep(b2.rep, Format::Json) == export_rep(make_context(Family::B, 2).rep, Format::Json));
}

TEST_CASE("oscillator export lists the occupation basis in order") {
  AlgebraContext c2 = make_context(Family::C, 2);
  OperatorRep op = oscillator_rep(c2.rep, 4);
  json j = json::parse(export_oscillator(op, c2.rep, Format::Json));
  CHECK(j["space"]["dim"] == op.dim());
  REQUIRE(j["space"]["basis"].size() == op.dim());
  CHECK(j["space"]["basis"][0] == json::array({0, 0}));
  CHECK(j["space"]["basis"][1] == json::array({1, 0}));
  CHECK(j["space"]["basis"][2] == json::array({0, 1}));
  CHECK(j["generators"].size() == 10);
}

TEST_CASE("report export and import") {
  AlgebraContext d3 = make_context(Family::D, 3);
  OperatorRep op = oscillator_rep(d3.rep, 0);
  Report r = quadratic_checks(d3, op);
  const std::string text = export_report(r, Format::Json);
  Report back = import_report(text);
  CHECK(back.subject == r.subject);
  CHECK(back.parameters == r.parameters);
  REQUIRE(back.checks.size() == r.checks.size());
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    CHECK(back.checks[k].identity == r.checks[k].identity);
    CHECK(back.checks[k].pass == r.checks[k].pass);
    CHECK(back.checks[k].max_residual == r.checks[k].max_residual);
    CHECK(back.checks[k].checked == r.checks[k].checked);
    CHECK(back.checks[k].interior_columns == r.checks[k].interior_columns);
    CHECK(back.checks[k].detail == r.checks[k].detail);
  }
  CHECK(export_report(back, Format::Json) == text);
  json j = json::parse(text);
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0]["max_residual"] == "0");

  auto rows = lines(export_report(r, Format::Csv));
  CHECK(rows.front() == "subject,identity,pass,checked,interior_columns,max_residual,detail");
  CHECK(rows.size() == r.checks.size() + 1);
}

TEST_CASE("format parsing and file output") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  const auto path = std::filesystem::temp_directory_path() / "lieosc_export_test.json";
  write_file(path.string(), "{}\n");
  std::ifstream in(path);
  std::string got((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(got == "{}\n");
  std::filesystem::remove(path);
  try {
    write_file("/nonexistent-dir/x.json", "{}\n");
    FAIL("expected an Io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
