#include "doctest.h"
#include "lieosc/error.hpp"
#include "lieosc/fock.hpp"

using namespace lieosc;

namespace {

const Surd kHalf = Surd(Rational(1, 2));
const Surd kInvSqrt2 = Surd::sqrt(Rational(1, 2));

Matrix generator(const OperatorRep& op, const RepBundle& rep, std::vector<int> label) {
  int a = rep.roots.find_label(label);
  REQUIRE(a >= 0);
  return ladder_generator(op, rep, static_cast<std::size_t>(a), true);
}

void check_same(const Matrix& got, const Matrix& want, const std::vector<std::size_t>& cols) {
  CHECK((got - want).columns(cols).is_zero());
}

void check_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.subject << ": " << c.identity << " " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("bosonic basis order and dimension") {
  FockSpace s = bosonic_space(2, 4);
  CHECK(s.dim() == 15);
  CHECK(s.basis[0] == std::vector<int>{0, 0});
  CHECK(s.basis[1] == std::vector<int>{1, 0});
  CHECK(s.basis[2] == std::vector<int>{0, 1});
  CHECK(s.basis[3] == std::vector<int>{2, 0});
  CHECK(s.interior(2).size() == 6);
  CHECK(s.find({1, 3}) >= 0);
  CHECK(s.find({3, 3}) == -1);
  CHECK_THROWS_AS(bosonic_space(2, 3), Error);
}

TEST_CASE("bosonic ladders: [a, a^dag] = 1 except at the cutoff") {
  FockSpace s = bosonic_space(1, 5);
  Ladders l = ladder_operators(s);
  Matrix comm = commutator(l.destroy[0], l.create[0]);
  // Truncation artifact: the top state gets -cutoff instead of 1.
  for (std::size_t k = 0; k < 5; ++k) CHECK(comm.at(k, k) == Surd(1));
  CHECK(comm.at(5, 5) == Surd(-5));
}

TEST_CASE("fermionic ladders") {
  FockSpace s = fermionic_space(3, true);
  CHECK(s.dim() == 16);
  Ladders l = ladder_operators(s);
  const std::size_t d = s.dim();
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      CHECK(anticommutator(l.create[mu], l.destroy[nu]) == Matrix::scalar(d, Surd(mu == nu ? 1 : 0)));
      CHECK(anticommutator(l.create[mu], l.create[nu]).is_zero());
    }
  CHECK(l.majorana * l.majorana == Matrix::scalar(d, kHalf));
  for (int mu = 0; mu < 3; ++mu) {
    CHECK(anticommutator(l.majorana, l.create[mu]).is_zero());
    CHECK(anticommutator(l.majorana, l.destroy[mu]).is_zero());
  }
}

TEST_CASE("c2 metaplectic generators") {
  RepBundle rep = build_rep(Family::C, 2);
  OperatorRep op = metaplectic_rep(rep, 6);
  FockSpace outer = bosonic_space(2, 6);
  Ladders l = ladder_operators(outer);
  auto cols = outer.interior(2);
  const Matrix& a1d = l.create[0];
  const Matrix& a2d = l.create[1];
  const Matrix& a1 = l.destroy[0];
  const Matrix& a2 = l.destroy[1];

  check_same(op.X[0], anticommutator(a1d, a1) * kHalf, cols);
  check_same(op.X[1], anticommutator(a2d, a2) * kHalf, cols);
  check_same(generator(op, rep, {1}), a1d * a2, cols);
  // Root (0,2) belongs to (a2^dag)^2; the displayed labels of E_2 and E_112 are exchanged.
  check_same(generator(op, rep, {2}), a2d * a2d * (-kInvSqrt2), cols);
  check_same(generator(op, rep, {1, 2}), a1d * a2d * Surd(-1), cols);
  check_same(generator(op, rep, {1, 1, 2}), a1d * a1d * (-kInvSqrt2), cols);
}

TEST_CASE("metaplectic commutators and structure") {
  for (int n : {2, 3}) {
    RepBundle rep = build_rep(Family::C, n);
    CompletionBasis comp = complete_basis(rep);
    StructureTensors st = structure_tensors(rep, comp);
    OperatorRep op = metaplectic_rep(rep, 6);
    check_report(check_commutators(op, st));
    check_report(check_oscillator_structure(op, rep));
  }
}

TEST_CASE("d3 spinor generators") {
  RepBundle rep = build_rep(Family::D, 3);
  OperatorRep op = spinor_rep_d(rep);
  Ladders l = ladder_operators(op.space);
  auto all = op.space.interior(0);
  const auto& c = l.create;
  const auto& p = l.destroy;
  for (int k = 0; k < 3; ++k) check_same(op.X[k], c[k] * p[k] - Matrix::scalar(op.dim(), kHalf), all);
  check_same(generator(op, rep, {1}), c[0] * p[1], all);
  check_same(generator(op, rep, {2}), c[1] * p[2], all);
  check_same(generator(op, rep, {1, 2}), c[0] * p[2], all);
  check_same(generator(op, rep, {3}), c[1] * c[2], all);
  check_same(generator(op, rep, {1, 3}), c[0] * c[2], all);
  check_same(generator(op, rep, {1, 2, 3}), c[0] * c[1], all);
}

TEST_CASE("b3 spinor generators") {
  RepBundle rep = build_rep(Family::B, 3);
  OperatorRep op = spinor_rep_b(rep);
  Ladders l = ladder_operators(op.space);
  auto all = op.space.interior(0);
  const auto& c = l.create;
  const Matrix& m = l.majorana;
  check_same(generator(op, rep, {3}), c[2] * m, all);
  check_same(generator(op, rep, {2, 3}), c[1] * m, all);
  check_same(generator(op, rep, {1, 2, 3}), c[0] * m, all);
  check_same(generator(op, rep, {1, 2, 3, 3}), c[0] * c[2], all);
  check_same(generator(op, rep, {2, 3, 3}), c[1] * c[2], all);
  // The printed display has c1 c3 here; the root (1,1,0) requires c1 c2.
  check_same(generator(op, rep, {1, 2, 2, 3, 3}), c[0] * c[1], all);
}

TEST_CASE("spinor commutators and structure") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::D, 3}, {Family::D, 4}, {Family::B, 2}, {Family::B, 3}}) {
    RepBundle rep = build_rep(f, n);
    CompletionBasis comp = complete_basis(rep);
    StructureTensors st = structure_tensors(rep, comp);
    OperatorRep op = oscillator_rep(rep, 4);
    check_report(check_commutators(op, st));
    check_report(check_oscillator_structure(op, rep));
  }
}

TEST_CASE("d4 chirality blocks") {
  RepBundle rep = build_rep(Family::D, 4);
  OperatorRep op = spinor_rep_d(rep);
  ChiralityBlocks cb = chirality_blocks(op);
  CHECK(cb.even.size() == 8);
  CHECK(cb.odd.size() == 8);
  CHECK(cb.even.front() == 0);  // vacuum is even
  CHECK(cb.even_rep.dim() == 8);
  CompletionBasis comp = complete_basis(rep);
  StructureTensors st = structure_tensors(rep, comp);
  check_report(check_commutators(cb.even_rep, st));
  check_report(check_commutators(cb.odd_rep, st));
}

TEST_CASE("su(n) oscillators") {
  for (int n : {2, 3}) {
    RepBundle rep = gell_mann_rep(n);
    StructureTensors st = structure_tensors(rep, complete_basis(rep));
    OperatorRep op = su_oscillator_rep(rep, 4);
    check_report(check_commutators(op, st));
    check_report(check_oscillator_structure(op, rep));
  }
}

TEST_CASE("family mismatch") {
  RepBundle rep = build_rep(Family::D, 3);
  CHECK_THROWS_AS(metaplectic_rep(rep, 4), Error);
  CHECK_THROWS_AS(spinor_rep_b(rep), Error);
}
