#include "doctest.h"
#include "lieosc/loper.hpp"

using namespace lieosc;

namespace {

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.subject << ": " << c.identity << " " << c.detail);
    CHECK(c.pass);
  }
}

struct Setup {
  RepBundle rep;
  StructureTensors st;
  OperatorRep op;
  LOperator L;
};

Setup setup(Family f, int n, int cutoff) {
  RepBundle rep = f == Family::A ? gell_mann_rep(n) : build_rep(f, n);
  StructureTensors st = structure_tensors(rep, complete_basis(rep));
  OperatorRep op = oscillator_rep(rep, cutoff);
  LOperator L = build_L(rep, op);
  return {rep, st, op, L};
}

}  // namespace

TEST_CASE("L dimensions") {
  auto c2 = setup(Family::C, 2, 8);
  CHECK(c2.L.dim_v == 4);
  CHECK(c2.L.dim_h == 45);
  auto d3 = setup(Family::D, 3, 0);
  CHECK(d3.L.dim_v == 6);
  CHECK(d3.L.dim_h == 8);
}

TEST_CASE("quadratic relations and closed forms") {
  for (auto [f, n, cutoff] : std::vector<std::tuple<Family, int, int>>{
           {Family::C, 2, 8}, {Family::C, 3, 6}, {Family::B, 2, 0}, {Family::D, 3, 0},
           {Family::B, 3, 0}, {Family::D, 4, 0}, {Family::A, 2, 6}, {Family::A, 3, 6}}) {
    auto s = setup(f, n, cutoff);
    check_report(check_quadratic(s.rep, s.op));
  }
}

TEST_CASE("quadratic coefficients") {
  auto c2 = quadratic_spec(Family::C, 2);
  CHECK(c2.p == Rational(3));
  CHECK(c2.q == Rational(5, 4));
  CHECK(c2.minus == Rational(-5, 2));
  auto so6 = quadratic_spec(Family::D, 3);
  CHECK(so6.p == Rational(2));
  CHECK(so6.q == Rational(-5, 4));
  CHECK(so6.plus == Rational(1, 2));
  CHECK(so6.minus == Rational(-5, 2));
  // su(2) at level 2j: eigenvalues j and -(j+1).
  for (int lvl = 1; lvl <= 6; ++lvl) {
    auto s = quadratic_spec_su(2, lvl);
    CHECK(s.plus == Rational(lvl, 2));
    CHECK(s.minus == -Rational(lvl + 2, 2));
  }
}

TEST_CASE("residual vanishes only with the right coefficients") {
  auto s = setup(Family::D, 3, 0);
  auto cols = s.L.lift(s.op.interior(0));
  QuadraticSpec wrong = quadratic_spec(Family::D, 3);
  wrong.q = Rational(-1);
  CHECK_FALSE(quadratic_residual(s.L, wrong, cols).is_zero());
  CHECK(quadratic_residual(s.L, quadratic_spec(Family::D, 3), cols).is_zero());
}

TEST_CASE("eigen multiplicities of the d3 spinor") {
  auto s = setup(Family::D, 3, 0);
  auto blocks = invariant_blocks(s.L, s.rep, s.op);
  REQUIRE(blocks.size() == 2);
  auto es = eigen_structure(s.L, quadratic_spec(Family::D, 3), blocks[0]);
  // V (x) S+ = 6 x 4: the 20 and the conjugate 4-dimensional spinor.
  CHECK(es.dim == 24);
  CHECK(es.mult_plus == 20);
  CHECK(es.mult_minus == 4);
}

TEST_CASE("casimirs and operator laws") {
  for (auto [f, n, cutoff] : std::vector<std::tuple<Family, int, int>>{
           {Family::C, 2, 6}, {Family::C, 3, 6}, {Family::B, 3, 0}, {Family::D, 4, 0}, {Family::A, 2, 6}, {Family::A, 3, 6}}) {
    auto s = setup(f, n, cutoff);
    check_report(casimir_checks(s.rep, s.op, s.st, s.L));
    check_report(operator_product_laws(s.rep, s.op, s.st));
  }
}

TEST_CASE("metaplectic casimir value") {
  auto s = setup(Family::C, 2, 8);
  Matrix c2(s.op.dim(), s.op.dim());
  for (const auto& x : s.op.X) c2 += x * x;
  CHECK(c2.at(0, 0) == Surd(Rational(-5, 2)));
  CHECK(c2.at(1, 1) == Surd(Rational(-5, 2)));
}

TEST_CASE("su(3) level values") {
  auto s = setup(Family::A, 3, 4);
  auto r = casimir_checks(s.rep, s.op, s.st, s.L);
  REQUIRE(r.find("cubic-casimir-level") != nullptr);
  CHECK(r.find("cubic-casimir-level")->pass);
  // Direct value at lambda = 2 on the state |2,0,0>.
  auto lvl2 = s.op.space.level(2);
  std::size_t st200 = static_cast<std::size_t>(s.op.space.find({2, 0, 0}));
  Matrix c3(s.op.dim(), s.op.dim());
  for (const auto& [idx, v] : s.st.d_xxx.entries()) c3 += s.op.X[idx[0]] * s.op.X[idx[1]] * s.op.X[idx[2]] * v;
  CHECK(c3.at(st200, st200) == Surd(Rational(35, 9)));
  // d-law at lambda = 1: coefficient 5/6.
  std::size_t st100 = static_cast<std::size_t>(s.op.space.find({1, 0, 0}));
  for (std::size_t k = 0; k < s.op.X.size(); ++k) {
    Matrix lhs(s.op.dim(), s.op.dim());
    for (const auto& [idx, v] : s.st.d_xxx.entries())
      if (idx[2] == k) lhs += s.op.X[idx[0]] * s.op.X[idx[1]] * v;
    std::vector<std::size_t> col{st100};
    CHECK((lhs - s.op.X[k] * Surd(Rational(5, 6))).columns(col).is_zero());
  }
  CHECK(lvl2.size() == 6);
}

TEST_CASE("su(2) levels are spin j") {
  auto s = setup(Family::A, 2, 6);
  Matrix c2(s.op.dim(), s.op.dim());
  for (const auto& x : s.op.X) c2 += x * x;
  for (int lvl = 0; lvl <= 6; ++lvl) {
    Rational j(lvl, 2);
    for (auto h : s.op.space.level(lvl)) CHECK(c2.at(h, h) == Surd(j * (j + Rational(1))));
  }
}

TEST_CASE("quartic contraction of the metaplectic rep") {
  // Oracle: with d X X = 0, i c X X = -2(n+1) X and c d d = (2/n)(n+2)(n-1) c,
  // (1/3) d_ika d_jla X_i X_j X_k X_l = (1/3)(n^2-1)(n+2)(2n+1).
  for (int n : {2, 3}) {
    auto s = setup(Family::C, n, 8);
    Report r = quartic_contraction(s.op, s.st);
    REQUIRE(r.find("quartic-scalar") != nullptr);
    CHECK(r.find("quartic-scalar")->pass);
    const Rational derived = Rational(1, 3) * Rational((n * n - 1) * (n + 2) * (2 * n + 1));
    CHECK(r.find("quartic-scalar")->detail == "even " + derived.to_string() + ", odd " + derived.to_string());
    CHECK(r.find("quartic-value")->pass);
  }
}
