#include <map>

#include "doctest.h"
#include "lieosc/definingrep.hpp"
#include "lieosc/error.hpp"

using namespace lieosc;

namespace {

std::map<std::pair<int, int>, std::string> cell_text(Family f, int n) {
  std::map<std::pair<int, int>, std::string> out;
  for (const auto& c : build_layout(f, n)) out[{c.row, c.col}] = c.to_string();
  return out;
}

// Lower triangle of a display, row by row.
void check_display(Family f, int n, const std::vector<std::vector<std::string>>& rows) {
  auto cells = cell_text(f, n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      INFO("cell (" << i + 1 << "," << j + 1 << ")");
      CHECK(cells[{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] == rows[i][j]);
    }
}

}  // namespace

TEST_CASE("c2 display") {
  check_display(Family::C, 2, {{"H1"},
                               {"E1", "H2"},
                               {"E12", "sqrt(2)*E2", "-H2"},
                               {"sqrt(2)*E112", "E12", "-E1", "-H1"}});
}

TEST_CASE("c3 display") {
  check_display(Family::C, 3,
                {{"H1"},
                 {"E1", "H2"},
                 {"E12", "E2", "H3"},
                 {"E123", "E23", "sqrt(2)*E3", "-H3"},
                 {"E1223", "sqrt(2)*E223", "E23", "-E2", "-H2"},
                 {"sqrt(2)*E11223", "E1223", "E123", "-E12", "-E1", "-H1"}});
}

TEST_CASE("b3 display corner and centre") {
  auto cells = cell_text(Family::B, 3);
  CHECK(cells[{7, 1}] == "0");
  CHECK(cells[{4, 4}] == "0");
  CHECK(cells[{4, 3}] == "E3");
  CHECK(cells[{2, 1}] == "E1");
}

TEST_CASE("d4 layout") {
  auto cells = cell_text(Family::D, 4);
  CHECK(cells[{5, 4}] == "0");
  CHECK(cells[{8, 1}] == "0");
  auto reduced = reduced_display(4);
  REQUIRE(reduced.size() == 7);
  // r_3 + r_4 is not a root: the cell below the two sub-diagonal entries 3, 4 is empty.
  CHECK(reduced[3][2] == "3");
  CHECK(reduced[4][3] == "4");
  CHECK(reduced[4][2] == "0");
}

TEST_CASE("metric forms") {
  Matrix j = metric_form(Family::C, 2);
  CHECK(j.at(0, 3) == Surd(1));
  CHECK(j.at(1, 2) == Surd(1));
  CHECK(j.at(2, 1) == Surd(-1));
  CHECK(j.at(3, 0) == Surd(-1));
  CHECK(j * j == -Matrix::identity(4));
  Matrix m = metric_form(Family::B, 2);
  CHECK(m * m == Matrix::identity(5));
  CHECK(m.at(2, 2) == Surd(1));
  CHECK(m.nnz() == 5);
  Matrix j3 = metric_form(Family::C, 3);
  for (int k = 0; k < 6; ++k) CHECK(j3.at(k, 5 - k) == Surd(k < 3 ? 1 : -1));
}

TEST_CASE("realized bundles satisfy the trace and transpose rules") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::C, 2}, {Family::C, 3}, {Family::B, 2}, {Family::B, 3}, {Family::D, 3}, {Family::D, 4}}) {
    RepBundle rep = build_rep(f, n);
    CHECK(rep.dim_g() == algebra_dim(f, n));
    Report r = check_trace_transpose(rep);
    for (const auto& c : r.checks) {
      INFO(r.subject << " " << c.identity << " " << c.detail);
      CHECK(c.pass);
    }
  }
  RepBundle d3 = build_rep(Family::D, 3);
  CHECK(d3.dim_v == 6);
  CHECK(d3.basis.size() == 15);
}

TEST_CASE("cartan-weyl relations") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::C, 2}, {Family::C, 3}, {Family::B, 2}, {Family::B, 3}, {Family::D, 3}, {Family::D, 4}}) {
    Report r = check_cartan_weyl(build_rep(f, n));
    for (const auto& c : r.checks) {
      INFO(r.subject << " " << c.identity << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("c2 root commutators") {
  RepBundle rep = build_rep(Family::C, 2);
  auto e = [&](std::vector<int> label) { return rep.ladders[rep.roots.find_label(label)].raise; };
  // E_1, E_2, E_3 = E_12, E_4 = E_112
  CHECK(commutator(e({1}), e({2})) == e({1, 2}) * Surd::sqrt(2));
  CHECK(commutator(e({1}), e({1, 2})) == e({1, 1, 2}) * Surd::sqrt(2));
  CHECK(commutator(rep.cartan[0], e({1})) == e({1}));
  CHECK(commutator(rep.cartan[1], e({1})) == -e({1}));
  CHECK(commutator(e({2}), e({2})).is_zero());
}

TEST_CASE("gell-mann basis") {
  RepBundle su3 = gell_mann_rep(3);
  CHECK(su3.dim_g() == 8);
  CHECK(su3.gamma == Rational(1, 2));
  Report r = check_trace_transpose(su3);
  CHECK(r.passed());
  CHECK(make_rep(Family::A, 1).dim_v == 2);
}
