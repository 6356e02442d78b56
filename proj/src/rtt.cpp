#include "lieosc/rtt.hpp"

#include <array>

#include "lieosc/error.hpp"
#include "lieosc/sampling.hpp"

namespace lieosc {

namespace {

// Denominator of k; zero marks the pole. Family A has none.
Rational pole_denominator(const RepBundle& rep, const Rational& u, const Rational& eta) {
  switch (rep.family) {
    case Family::C: return eta * Rational(rep.rank + 1) + u;
    case Family::B:
    case Family::D: return eta * Rational(rep.dim_v - 2, 2) + u;
    case Family::A: return Rational(1);
  }
  return Rational(1);
}

Matrix k_matrix(const RepBundle& rep) {
  const std::size_t n = rep.dim_v;
  Matrix K(n * n, n * n);
  if (rep.family == Family::A) return K;
  rep.metric.for_each([&](std::size_t a, std::size_t c, const Surd& g1) {
    rep.metric.for_each([&](std::size_t b, std::size_t d, const Surd& g2) { K.set(a * n + c, b * n + d, g1 * g2); });
  });
  return K;
}

std::string params(const Rational& u, const Rational& v, const Rational& eta) {
  return "u=" + u.to_string() + " v=" + v.to_string() + " eta=" + eta.to_string();
}

}  // namespace

RMatrix r_matrix(const RepBundle& rep, const Rational& u, const Rational& eta) {
  const Rational den = pole_denominator(rep, u, eta);
  if (den.is_zero())
    fail(ErrorCode::Pole, "R-matrix pole at u=" + u.to_string() + ", eta=" + eta.to_string());
  RMatrix R;
  R.family = rep.family;
  R.rank = rep.rank;
  R.dim_v = rep.dim_v;
  R.u = u;
  R.eta = eta;
  R.P = swap_operator(rep.dim_v);
  R.K = k_matrix(rep);
  R.k = rep.family == Family::A ? Rational(0) : u * eta / den;
  const std::size_t d = R.dim_v * R.dim_v;
  R.matrix = Matrix::scalar(d, Surd(u)) + R.P * Surd(eta) - R.K * Surd(R.k);
  return R;
}

Report check_r_algebra(const RepBundle& rep) {
  Report report;
  report.subject = std::string("R-matrix algebra ") + family_letter(rep.family) + std::to_string(rep.rank);
  const std::size_t n = rep.dim_v;
  Matrix P = swap_operator(n);
  Matrix K = k_matrix(rep);
  report.expect_zero("swap-square", "P^2 = 1", P * P - Matrix::identity(n * n));
  if (rep.family == Family::A) return report;
  const Surd sign(rep.family == Family::C ? -1 : 1);
  report.expect_zero("swap-metric", rep.family == Family::C ? "P K = -K" : "P K = K", P * K - K * sign);
  report.expect_zero("metric-square", "K^2 = dim V K", K * K - K * Surd(static_cast<std::int64_t>(n)));
  return report;
}

InvariantForm invariant_form(const RMatrix& R, const RepBundle& rep, const CompletionBasis& comp) {
  if (rep.family == Family::A) fail(ErrorCode::FamilyMismatch, "the invariant form uses the completion basis of b, c, d");
  const std::size_t n = rep.dim_v;
  std::array<Matrix, 3> B{Matrix::identity(n * n), Matrix(n * n, n * n), Matrix(n * n, n * n)};
  for (const auto& x : rep.basis) B[1] += kron(x, x);
  for (const auto& y : comp.y) B[2] += kron(y, y);

  std::array<std::array<Rational, 3>, 3> g;
  std::array<Rational, 3> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g[i][j] = trace_product(B[i], B[j]).rational();
    r[i] = trace_product(B[i], R.matrix).rational();
  }
  auto det3 = [](const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const Rational det = det3(g);
  if (det.is_zero()) fail(ErrorCode::Consistency, "singular Gram system for the invariant form");
  std::array<Rational, 3> sol;
  for (int k = 0; k < 3; ++k) {
    auto m = g;
    for (int i = 0; i < 3; ++i) m[i][k] = r[i];
    sol[k] = det3(m) / det;
  }
  Matrix residual = R.matrix - B[0] * Surd(sol[0]) - B[1] * Surd(sol[1]) - B[2] * Surd(sol[2]);
  if (!residual.is_zero())
    fail(ErrorCode::Consistency, "R is not in the span of 1, x (x) x, y (x) y; residual " + residual.max_entry().to_string());
  return {sol[0], sol[1], sol[2]};
}

Report check_ybe(const RepBundle& rep, const Rational& u, const Rational& v, const Rational& eta) {
  Report report;
  report.subject = std::string("Yang-Baxter equation ") + family_letter(rep.family) + std::to_string(rep.rank);
  report.param("u", u.to_string());
  report.param("v", v.to_string());
  report.param("eta", eta.to_string());
  const std::size_t n = rep.dim_v;
  const std::array<std::size_t, 3> dims{n, n, n};
  const std::array<std::size_t, 2> s12{0, 1}, s13{0, 2}, s23{1, 2};
  Matrix R12 = embed(r_matrix(rep, u - v, eta).matrix, dims, s12);
  Matrix R13 = embed(r_matrix(rep, u, eta).matrix, dims, s13);
  Matrix R23 = embed(r_matrix(rep, v, eta).matrix, dims, s23);
  Matrix lhs = R12 * (R13 * R23);
  Matrix rhs = R23 * (R13 * R12);
  report.expect_zero("ybe", "R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)", lhs - rhs, n * n * n).detail =
      params(u, v, eta);
  return report;
}

Report check_ybe_samples(const RepBundle& rep, int samples, std::uint64_t seed) {
  Report report;
  report.subject = std::string("Yang-Baxter equation ") + family_letter(rep.family) + std::to_string(rep.rank);
  report.param("samples", std::to_string(samples));
  report.param("seed", std::to_string(seed));
  RationalSampler rng(seed);
  ResidualTally t;
  for (int s = 0; s < samples;) {
    Rational u = rng.next(), v = rng.next(), eta = rng.next_nonzero();
    if (pole_denominator(rep, u - v, eta).is_zero() || pole_denominator(rep, u, eta).is_zero() ||
        pole_denominator(rep, v, eta).is_zero())
      continue;
    Report one = check_ybe(rep, u, v, eta);
    t.add(one.checks.front().max_residual, params(u, v, eta));
    report.param("sample" + std::to_string(++s), params(u, v, eta));
  }
  t.commit(report, "ybe", "R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) at seeded samples");
  return report;
}

TOperator build_T(const LOperator& L, const Rational& u, const Rational& eta) {
  TOperator T;
  T.dim_v = L.dim_v;
  T.dim_h = L.dim_h;
  T.u = u;
  T.eta = eta;
  T.matrix = Matrix::scalar(L.dim(), Surd(u)) + L.matrix * Surd(eta);
  return T;
}

TOperator monodromy(const std::vector<LOperator>& Ls, const Rational& u, const Rational& eta) {
  if (Ls.empty()) fail(ErrorCode::InvalidArgument, "monodromy needs at least one site");
  if (Ls.size() == 1) return build_T(Ls.front(), u, eta);
  std::vector<std::size_t> dims{Ls.front().dim_v};
  std::size_t dh = 1;
  for (const auto& L : Ls) {
    if (L.family != Ls.front().family || L.rank != Ls.front().rank || L.dim_v != Ls.front().dim_v)
      fail(ErrorCode::FamilyMismatch, "monodromy sites carry different auxiliary algebras");
    dims.push_back(L.dim_h);
    dh *= L.dim_h;
  }
  TOperator T;
  T.dim_v = dims[0];
  T.dim_h = dh;
  T.u = u;
  T.eta = eta;
  T.matrix = Matrix::identity(T.dim_v * dh);
  for (std::size_t j = 0; j < Ls.size(); ++j) {
    const std::array<std::size_t, 2> slots{0, j + 1};
    T.matrix = T.matrix * embed(build_T(Ls[j], u, eta).matrix, dims, slots);
  }
  return T;
}

Report check_rtt(const RepBundle& rep, const std::vector<LOperator>& Ls, const Rational& u, const Rational& v,
                 const Rational& eta, const std::vector<std::size_t>& states) {
  Report report;
  report.subject = std::string("RTT relation ") + family_letter(rep.family) + std::to_string(rep.rank) +
                   (Ls.size() > 1 ? ", " + std::to_string(Ls.size()) + " sites" : "");
  report.param("u", u.to_string());
  report.param("v", v.to_string());
  report.param("eta", eta.to_string());
  TOperator Tu = monodromy(Ls, u, eta);
  TOperator Tv = monodromy(Ls, v, eta);
  const std::size_t n = rep.dim_v;
  if (Tu.dim_v != n) fail(ErrorCode::DimensionMismatch, "auxiliary dimension differs from the representation");
  const std::size_t dh = Tu.dim_h;
  const std::array<std::size_t, 3> dims{n, n, dh};
  const std::array<std::size_t, 2> s12{0, 1}, s13{0, 2}, s23{1, 2};
  Matrix R12 = embed(r_matrix(rep, u - v, eta).matrix, dims, s12);
  Matrix T1 = embed(Tu.matrix, dims, s13);
  Matrix T2 = embed(Tv.matrix, dims, s23);

  std::vector<std::size_t> cols;
  if (states.empty()) {
    cols.resize(n * n * dh);
    for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
  } else {
    for (std::size_t a = 0; a < n * n; ++a)
      for (auto h : states) cols.push_back(a * dh + h);
  }
  Matrix lhs = R12 * (T1 * T2.columns(cols));
  Matrix rhs = T2 * (T1 * R12.columns(cols));
  report.param("interior_depth", std::to_string(Ls.front().interior_depth == 0 ? 0 : 4));
  report.expect_zero("rtt", "R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v)", lhs - rhs, cols.size())
      .interior_columns = cols.size();
  report.checks.back().detail = params(u, v, eta);
  return report;
}

std::vector<std::size_t> rtt_states(const OperatorRep& op) {
  if (op.space.kind == FockSpace::Kind::Bosonic && op.interior_depth > 0) return op.interior(4);
  return op.interior(0);
}

std::vector<std::size_t> chain_states(const OperatorRep& op, int sites) {
  if (sites < 1) fail(ErrorCode::InvalidArgument, "a chain needs at least one site");
  const auto one = rtt_states(op);
  std::vector<std::size_t> out{0};
  for (int s = 0; s < sites; ++s) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * one.size());
    for (auto prefix : out)
      for (auto h : one) next.push_back(prefix * op.dim() + h);
    out = std::move(next);
  }
  return out;
}

}  // namespace lieosc
