#include "doctest.h"
#include "lieosc/error.hpp"
#include "lieosc/rtt.hpp"
#include "lieosc/sampling.hpp"

using namespace lieosc;

namespace {

bool all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.subject << ": " << c.identity << " " << c.detail);
    CHECK(c.pass);
  }
  return r.passed();
}

}  // namespace

TEST_CASE("R-matrix coefficients") {
  RepBundle c2 = build_rep(Family::C, 2);
  CHECK(r_matrix(c2, 1, 1).k == Rational(1, 4));
  RepBundle b2 = build_rep(Family::B, 2);
  CHECK(r_matrix(b2, 1, 2).k == Rational(1, 2));
  // u = 0 leaves eta P.
  RMatrix r0 = r_matrix(c2, 0, Rational(3, 2));
  CHECK(r0.matrix == swap_operator(4) * Surd(Rational(3, 2)));
  CHECK_THROWS_AS(r_matrix(c2, -3, 1), Error);
  CHECK_THROWS_AS(r_matrix(build_rep(Family::D, 3), -2, 1), Error);
}

TEST_CASE("P and K algebra") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::C, 2}, {Family::C, 3}, {Family::B, 2}, {Family::D, 4}})
    all_pass(check_r_algebra(build_rep(f, n)));
}

TEST_CASE("Yang-Baxter equation") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::C, 2}, {Family::C, 3}, {Family::B, 2}, {Family::D, 3}, {Family::B, 3}, {Family::D, 4}}) {
    RepBundle rep = build_rep(f, n);
    all_pass(check_ybe_samples(rep, 5, 42));
  }
  all_pass(check_ybe(build_rep(Family::C, 2), 2, 1, 1));
  all_pass(check_ybe(build_rep(Family::D, 3), 3, 1, 2));
  all_pass(check_ybe(build_rep(Family::D, 3), 2, 2, 1));
}

TEST_CASE("Yang-Baxter equation fails with the K sign reversed") {
  RepBundle rep = build_rep(Family::C, 2);
  const std::array<std::size_t, 3> dims{4, 4, 4};
  const std::array<std::size_t, 2> s12{0, 1}, s13{0, 2}, s23{1, 2};
  auto R = [&](Rational u) {
    RMatrix r = r_matrix(rep, u, 1);
    return r.matrix + r.K * Surd(r.k * Rational(2));
  };
  Matrix lhs = embed(R(1), dims, s12) * embed(R(2), dims, s13) * embed(R(1), dims, s23);
  Matrix rhs = embed(R(1), dims, s23) * embed(R(2), dims, s13) * embed(R(1), dims, s12);
  CHECK_FALSE((lhs - rhs).is_zero());
}

TEST_CASE("invariant form") {
  RepBundle rep = build_rep(Family::C, 2);
  CompletionBasis comp = complete_basis(rep);
  RationalSampler rng(7);
  for (int s = 0; s < 5; ++s) {
    Rational u = rng.next(), eta = rng.next_nonzero();
    if ((eta * Rational(3) + u).is_zero()) continue;
    RMatrix R = r_matrix(rep, u, eta);
    InvariantForm f = invariant_form(R, rep, comp);
    CHECK(f.b - f.c == R.k);
    CHECK(f.b + f.c == eta);
    CHECK(f.a == u + f.c / Rational(2));
  }
  // At u = 0, R = eta P and a = eta / (2n), not zero.
  InvariantForm f0 = invariant_form(r_matrix(rep, 0, 1), rep, comp);
  CHECK(f0.a == Rational(1, 4));
  CHECK(f0.b == Rational(1, 2));
  CHECK(f0.c == Rational(1, 2));
  RepBundle so7 = build_rep(Family::B, 3);
  InvariantForm g = invariant_form(r_matrix(so7, 2, 1), so7, complete_basis(so7));
  CHECK(g.a == Rational(2) + g.c * Rational(2, 7));
}

TEST_CASE("T operator") {
  RepBundle rep = build_rep(Family::D, 3);
  LOperator L = build_L(rep, spinor_rep_d(rep));
  CHECK(build_T(L, 0, 1).matrix == L.matrix);
  Matrix diff = build_T(L, 3, 2).matrix - build_T(L, 1, 2).matrix;
  CHECK(diff == Matrix::scalar(48, Surd(2)));
}

TEST_CASE("RTT relation") {
  struct Case {
    Family f;
    int n;
    int cutoff;
  };
  for (auto c : std::vector<Case>{{Family::D, 3, 0}, {Family::D, 4, 0}, {Family::B, 2, 0}, {Family::B, 3, 0},
                                  {Family::C, 2, 8}, {Family::A, 2, 5}, {Family::A, 3, 4}}) {
    RepBundle rep = c.f == Family::A ? gell_mann_rep(c.n) : build_rep(c.f, c.n);
    OperatorRep op = oscillator_rep(rep, c.cutoff);
    LOperator L = build_L(rep, op);
    all_pass(check_rtt(rep, {L}, 3, 2, 1, rtt_states(op)));
    all_pass(check_rtt(rep, {L}, Rational(1, 2), Rational(-4, 3), Rational(5, 2), rtt_states(op)));
  }
}

TEST_CASE("RTT fails with the wrong R") {
  RepBundle rep = build_rep(Family::D, 3);
  LOperator L = build_L(rep, spinor_rep_d(rep));
  // With the so(N) L the plain u + eta P solution of su(n) does not intertwine.
  TOperator T1 = build_T(L, 3, 1), T2 = build_T(L, 2, 1);
  const std::array<std::size_t, 3> dims{6, 6, 8};
  const std::array<std::size_t, 2> s12{0, 1}, s13{0, 2}, s23{1, 2};
  Matrix R = embed(Matrix::scalar(36, Surd(1)) + swap_operator(6), dims, s12);
  Matrix lhs = R * embed(T1.matrix, dims, s13) * embed(T2.matrix, dims, s23);
  Matrix rhs = embed(T2.matrix, dims, s23) * embed(T1.matrix, dims, s13) * R;
  CHECK_FALSE((lhs - rhs).is_zero());
}

TEST_CASE("two-site monodromy") {
  RepBundle rep = build_rep(Family::D, 3);
  LOperator L = build_L(rep, spinor_rep_d(rep));
  TOperator one = monodromy({L}, 2, 1);
  CHECK(one.matrix == build_T(L, 2, 1).matrix);
  TOperator two = monodromy({L, L}, 2, 1);
  CHECK(two.dim_h == 64);
  all_pass(check_rtt(rep, {L, L}, 3, 2, 1));
  all_pass(check_rtt(rep, {L, L}, 1, 1, 1));
}
