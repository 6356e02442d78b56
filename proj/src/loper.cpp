#include "lieosc/loper.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <tuple>

#include "lieosc/error.hpp"

namespace lieosc {

std::vector<std::size_t> LOperator::lift(const std::vector<std::size_t>& states) const {
  std::vector<std::size_t> out;
  out.reserve(dim_v * states.size());
  for (std::size_t a = 0; a < dim_v; ++a)
    for (auto h : states) out.push_back(a * dim_h + h);
  return out;
}

LOperator build_L(const RepBundle& rep, const OperatorRep& op) {
  if (rep.family != op.family || rep.rank != op.rank)
    fail(ErrorCode::FamilyMismatch, "representation and oscillator rep belong to different algebras");
  if (op.X.size() != rep.basis.size()) fail(ErrorCode::DimensionMismatch, "generator counts differ");
  LOperator L;
  L.dim_v = rep.dim_v;
  L.dim_h = op.dim();
  L.interior_depth = op.interior_depth;
  L.family = rep.family;
  L.rank = rep.rank;
  L.matrix = Matrix(L.dim(), L.dim());
  for (std::size_t i = 0; i < op.X.size(); ++i) L.matrix += kron(rep.basis[i], op.X[i]);
  return L;
}

LOperator closed_form_L(const OperatorRep& op) {
  if (op.family == Family::A) fail(ErrorCode::FamilyMismatch, "no closed form is available for su(n)");
  const std::size_t n = op.metric.rows();
  LOperator L;
  L.dim_v = n;
  L.dim_h = op.dim();
  L.interior_depth = op.interior_depth;
  L.family = op.family;
  L.rank = op.rank;
  L.matrix = Matrix(L.dim(), L.dim());
  const Surd sign(op.family == Family::C ? 1 : -1);
  const Surd half(op.family == Family::C ? Rational(-1, 2) : Rational(1, 2));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix block(L.dim_h, L.dim_h);
      for (const auto& [c, g] : op.metric.row(a)) block += op.v_pair(c, b) * g;
      block *= sign;
      if (a == b) block += Matrix::scalar(L.dim_h, half);
      L.matrix += kron(Matrix::unit(n, n, a, b), block);
    }
  return L;
}

QuadraticSpec quadratic_spec(Family family, int rank) {
  QuadraticSpec s;
  switch (family) {
    case Family::C:
      s.p = Rational(rank + 1);
      s.q = Rational(2 * rank + 1, 4);
      s.plus = Rational(-1, 2);
      s.minus = Rational(-(2 * rank + 1), 2);
      s.label = "L^2 + (n+1) L + (2n+1)/4 = 0";
      break;
    case Family::B:
    case Family::D: {
      const int N = defining_dim(family, rank);
      s.p = Rational(N - 2, 2);
      s.q = Rational(-(N - 1), 4);
      s.plus = Rational(1, 2);
      s.minus = Rational(-(N - 1), 2);
      s.label = "L^2 + (N-2)/2 L - (N-1)/4 = 0";
      break;
    }
    case Family::A: fail(ErrorCode::FamilyMismatch, "the su(n) quadratic depends on the level");
  }
  return s;
}

QuadraticSpec quadratic_spec_su(int n, int level) {
  const Rational r = Rational(level, n);
  QuadraticSpec s;
  s.plus = Rational(level) - r;
  s.minus = Rational(-1) - r;
  s.p = -(s.plus + s.minus);
  s.q = s.plus * s.minus;
  s.label = "(L + 1 + lambda/n)(L + lambda/n - lambda) = 0 at lambda = " + std::to_string(level);
  return s;
}

Matrix quadratic_residual(const LOperator& L, const QuadraticSpec& spec, const std::vector<std::size_t>& cols) {
  Matrix Lc = L.matrix.columns(cols);
  Matrix res = L.matrix * Lc + Lc * Surd(spec.p);
  for (std::size_t j = 0; j < cols.size(); ++j) res.add(cols[j], j, Surd(spec.q));
  return res;
}

std::vector<InvariantBlock> invariant_blocks(const LOperator& L, const RepBundle& rep, const OperatorRep& op) {
  std::vector<InvariantBlock> blocks;
  const std::size_t dh = op.dim();
  if (rep.family == Family::A) {
    for (int lvl = 1; lvl <= op.space.cutoff; ++lvl) {
      InvariantBlock b{"level " + std::to_string(lvl), L.lift(op.space.level(lvl))};
      std::sort(b.states.begin(), b.states.end());
      blocks.push_back(std::move(b));
    }
    return blocks;
  }
  InvariantBlock even{"even", {}}, odd{"odd", {}};
  if (op.space.kind == FockSpace::Kind::Fermionic) {
    for (std::size_t s = 0; s < L.dim(); ++s) (op.space.parity(s % dh) ? odd : even).states.push_back(s);
    blocks.push_back(std::move(even));
    blocks.push_back(std::move(odd));
    return blocks;
  }

  // Metaplectic: group composite states by total weight w(a) + m + 1/2.
  const int n = rep.rank;
  std::vector<std::vector<int>> wv(rep.dim_v, std::vector<int>(n));
  for (int a = 0; a < rep.dim_v; ++a)
    for (int k = 0; k < n; ++k) wv[a][k] = static_cast<int>(rep.cartan[k].at(a, a).rational().as_int64());
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (int a = 0; a < rep.dim_v; ++a)
    for (std::size_t h = 0; h < dh; ++h) {
      std::vector<int> key(n);
      for (int k = 0; k < n; ++k) key[k] = wv[a][k] + op.space.basis[h][k];
      groups[key].push_back(static_cast<std::size_t>(a) * dh + h);
    }
  const int limit = op.space.cutoff - op.interior_depth;
  for (const auto& [key, members] : groups) {
    bool complete = true;
    for (int a = 0; a < rep.dim_v && complete; ++a) {
      int total = 0;
      bool valid = true;
      for (int k = 0; k < n; ++k) {
        int m = key[k] - wv[a][k];
        if (m < 0) valid = false;
        total += m;
      }
      if (valid && total > limit) complete = false;
    }
    if (!complete) continue;
    auto& target = op.space.parity(members.front() % dh) ? odd : even;
    target.states.insert(target.states.end(), members.begin(), members.end());
  }
  std::sort(even.states.begin(), even.states.end());
  std::sort(odd.states.begin(), odd.states.end());
  blocks.push_back(std::move(even));
  blocks.push_back(std::move(odd));
  return blocks;
}

namespace {

std::size_t float_rank(const Matrix& m) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  m.for_each([&](std::size_t r, std::size_t c, const Surd& v) {
    d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.to_complex();
  });
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > 1e-8) ++rank;
  return rank;
}

}  // namespace

EigenStructure eigen_structure(const LOperator& L, const QuadraticSpec& spec, const InvariantBlock& block) {
  if (block.states.empty()) fail(ErrorCode::Consistency, "empty block " + block.name);
  const auto& idx = block.states;
  // Invariance: no entry of the block columns may leave the block.
  Matrix cols = L.matrix.columns(idx);
  std::vector<bool> inside(L.dim(), false);
  for (auto s : idx) inside[s] = true;
  cols.for_each([&](std::size_t r, std::size_t, const Surd&) {
    if (!inside[r]) fail(ErrorCode::Consistency, "block " + block.name + " is not invariant under L");
  });
  Matrix Lb = L.matrix.block(idx);
  const std::size_t d = idx.size();
  Matrix q = Lb * Lb + Lb * Surd(spec.p) + Matrix::scalar(d, Surd(spec.q));
  if (!q.is_zero()) fail(ErrorCode::Consistency, "quadratic relation fails on block " + block.name);

  EigenStructure es;
  es.plus = spec.plus;
  es.minus = spec.minus;
  es.dim = d;
  es.trace = Lb.trace();
  if (!es.trace.is_rational()) fail(ErrorCode::Consistency, "trace of L is not rational on " + block.name);
  // m+ = (Tr L - minus * d) / (plus - minus)
  Rational mp = (es.trace.rational() - spec.minus * Rational(static_cast<std::int64_t>(d))) / (spec.plus - spec.minus);
  Rational mm = Rational(static_cast<std::int64_t>(d)) - mp;
  if (!mp.is_integer() || mp < Rational(0) || mm < Rational(0))
    fail(ErrorCode::Consistency, "trace system on " + block.name + " gives multiplicity " + mp.to_string());
  es.mult_plus = static_cast<std::size_t>(mp.as_int64());
  es.mult_minus = static_cast<std::size_t>(mm.as_int64());
  es.float_mult_plus = d - float_rank(Lb - Matrix::scalar(d, Surd(spec.plus)));
  es.float_mult_minus = d - float_rank(Lb - Matrix::scalar(d, Surd(spec.minus)));
  return es;
}

namespace {

Matrix partial_trace_v(const LOperator& L) {
  Matrix out(L.dim_h, L.dim_h);
  for (std::size_t a = 0; a < L.dim_v; ++a) {
    std::vector<std::size_t> idx(L.dim_h);
    for (std::size_t h = 0; h < L.dim_h; ++h) idx[h] = a * L.dim_h + h;
    out += L.matrix.block(idx);
  }
  return out;
}

std::string eigen_detail(const EigenStructure& es) {
  return "dim " + std::to_string(es.dim) + ", Tr L " + es.trace.to_string() + ": " + es.plus.to_string() + " x" +
         std::to_string(es.mult_plus) + ", " + es.minus.to_string() + " x" + std::to_string(es.mult_minus) +
         " (float rank: x" + std::to_string(es.float_mult_plus) + ", x" + std::to_string(es.float_mult_minus) + ")";
}

// sum_{i,j} t_ij X_i X_j restricted to `cols`, for a coefficient list.
Matrix quadratic_form(const OperatorRep& op, const std::vector<std::tuple<std::size_t, std::size_t, Surd>>& coeffs,
                      const std::vector<Matrix>& Xc) {
  Matrix out(op.dim(), Xc.empty() ? 0 : Xc[0].cols());
  std::map<std::size_t, Matrix> left;  // sum_i t_ij X_i per j
  for (const auto& [i, j, t] : coeffs) {
    auto it = left.find(j);
    if (it == left.end()) it = left.emplace(j, Matrix(op.dim(), op.dim())).first;
    it->second += op.X[i] * t;
  }
  for (const auto& [j, m] : left) out += m * Xc[j];
  return out;
}

std::vector<Matrix> restricted(const OperatorRep& op, const std::vector<std::size_t>& cols) {
  std::vector<Matrix> Xc;
  for (const auto& x : op.X) Xc.push_back(x.columns(cols));
  return Xc;
}

}  // namespace

Report check_quadratic(const RepBundle& rep, const OperatorRep& op) {
  Report report;
  report.subject = std::string("quadratic relation ") + family_letter(rep.family) + std::to_string(rep.rank);
  report.param("dim_h", std::to_string(op.dim()));
  if (op.space.kind == FockSpace::Kind::Bosonic) report.param("cutoff", std::to_string(op.space.cutoff));
  LOperator L = build_L(rep, op);
  report.expect_zero("l-traceless", "Tr_V L = 0", partial_trace_v(L));

  if (rep.family != Family::A) {
    const auto cols = L.lift(op.interior(op.interior_depth));
    LOperator cf = closed_form_L(op);
    report.expect_zero("closed-form", "sum x_i (x) X_i equals the closed form in v", (L.matrix - cf.matrix).columns(cols))
        .interior_columns = cols.size();
    QuadraticSpec spec = quadratic_spec(rep.family, rep.rank);
    report.expect_zero("quadratic-relation", spec.label, quadratic_residual(L, spec, cols), cols.size())
        .interior_columns = cols.size();
    for (const auto& b : invariant_blocks(L, rep, op)) {
      try {
        EigenStructure es = eigen_structure(L, spec, b);
        bool ok = es.mult_plus > 0 && es.mult_minus > 0 && es.float_mult_plus == es.mult_plus &&
                  es.float_mult_minus == es.mult_minus;
        report.expect("eigen-structure-" + b.name, "two eigenvalues with trace-system multiplicities", ok,
                      eigen_detail(es));
      } catch (const Error& e) {
        report.expect("eigen-structure-" + b.name, "two eigenvalues with trace-system multiplicities", false, e.what());
      }
    }
    return report;
  }

  const int n = rep.dim_v;
  for (const auto& b : invariant_blocks(L, rep, op)) {
    const int lvl = static_cast<int>(b.name.size() > 6 ? std::stoi(b.name.substr(6)) : 0);
    QuadraticSpec spec = quadratic_spec_su(n, lvl);
    report.expect_zero("quadratic-relation-" + std::to_string(lvl), spec.label, quadratic_residual(L, spec, b.states),
                       b.states.size());
    try {
      EigenStructure es = eigen_structure(L, spec, b);
      bool ok = es.mult_plus > 0 && es.mult_minus > 0 && es.float_mult_plus == es.mult_plus &&
                es.float_mult_minus == es.mult_minus;
      report.expect("eigen-structure-" + std::to_string(lvl), "two eigenvalues with trace-system multiplicities", ok,
                    eigen_detail(es));
    } catch (const Error& e) {
      report.expect("eigen-structure-" + std::to_string(lvl), "two eigenvalues with trace-system multiplicities",
                    false, e.what());
    }
  }
  return report;
}

Report casimir_checks(const RepBundle& rep, const OperatorRep& op, const StructureTensors& st, const LOperator& L) {
  Report report;
  report.subject = std::string("casimir operators ") + family_letter(rep.family) + std::to_string(rep.rank);
  const std::size_t dh = op.dim();
  const auto hcols = op.interior(op.interior_depth);

  Matrix c2(dh, dh);
  for (const auto& x : op.X) c2 += x * x;

  if (rep.family == Family::C) {
    const Rational expect = Rational(-rep.rank * (2 * rep.rank + 1), 4);
    report.expect_zero("casimir-oscillator", "X_i X_i = -n(2n+1)/4", (c2 - Matrix::scalar(dh, Surd(expect))).columns(hcols))
        .interior_columns = hcols.size();
  } else if (rep.family == Family::A) {
    const int n = rep.dim_v;
    ResidualTally t2, t3;
    for (int lvl = 0; lvl <= op.space.cutoff; ++lvl) {
      const auto cols = op.space.level(lvl);
      const Rational lam(lvl);
      const Rational ln = lam / Rational(n);
      Rational v2 = Rational(n - 1, 2) * lam * (Rational(1) + ln);
      t2.add((c2 - Matrix::scalar(dh, Surd(v2))).columns(cols), "level " + std::to_string(lvl));
      // C_3 = d_ijk X_i X_j X_k
      auto Xc = restricted(op, cols);
      Matrix c3(dh, cols.size());
      std::vector<Matrix> XXc(op.X.size());
      for (std::size_t k = 0; k < op.X.size(); ++k) XXc[k] = Matrix(dh, cols.size());
      for (const auto& [idx, v] : st.d_xxx.entries()) XXc[idx[0]] += op.X[idx[1]] * Xc[idx[2]] * v;
      for (std::size_t i = 0; i < op.X.size(); ++i) c3 += op.X[i] * XXc[i];
      Rational v3 = Rational((n - 1) * (n - 2), 4) * lam * (Rational(1) + ln) * (Rational(1) + Rational(2) * ln);
      Matrix sc(dh, cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) sc.set(cols[j], j, Surd(v3));
      t3.add(c3 - sc, "level " + std::to_string(lvl));
    }
    t2.commit(report, "casimir-level", "X_i X_i = (n-1) lambda (1 + lambda/n) / 2 on level lambda");
    t3.commit(report, "cubic-casimir-level",
              "d_ijk X_i X_j X_k = (n-1)(n-2) lambda (1 + lambda/n)(1 + 2 lambda/n) / 4 on level lambda");
  } else {
    const Surd value = c2.at(0, 0);
    report.expect_zero("casimir-oscillator", "X_i X_i is a multiple of the identity", c2 - Matrix::scalar(dh, value))
        .detail = "value " + value.to_string();
  }

  // C_2 on V (x) H against its decomposition.
  {
    const auto cols = L.lift(hcols);
    const Surd g(rep.gamma);
    Matrix lhs(L.dim(), cols.size());
    Matrix cv(rep.dim_v, rep.dim_v);
    for (std::size_t i = 0; i < op.X.size(); ++i) {
      Matrix total = kron(rep.basis[i] * g, Matrix::identity(dh)) + kron(Matrix::identity(rep.dim_v), op.X[i]);
      lhs += total * total.columns(cols);
      cv += rep.basis[i] * rep.basis[i];
    }
    Matrix rhs = kron(cv * (g * g), Matrix::identity(dh)) + kron(Matrix::identity(rep.dim_v), c2) + L.matrix * (g * Surd(2));
    report.expect_zero("casimir-decomposition", "C_2(V (x) H) = gamma^2 C_2(V) + C_2(H) + 2 gamma L",
                       lhs - rhs.columns(cols), cols.size())
        .interior_columns = cols.size();
  }

  if (rep.family == Family::C && op.space.cutoff >= 8) report.merge(quartic_contraction(op, st));
  return report;
}

Report operator_product_laws(const RepBundle& rep, const OperatorRep& op, const StructureTensors& st) {
  Report report;
  report.subject = std::string("operator product laws ") + family_letter(rep.family) + std::to_string(rep.rank);
  const std::size_t dim_x = op.X.size();

  // c_ijl c_ijk = kappa delta_lk
  Surd kappa;
  for (const auto& [idx, v] : st.c.entries())
    if (idx[2] == 0) kappa += v * v;

  auto c_law = [&](const std::vector<std::size_t>& cols, ResidualTally& t, const std::string& where) {
    auto Xc = restricted(op, cols);
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Surd>>> per_k(dim_x);
    for (const auto& [idx, v] : st.c.entries()) per_k[idx[2]].emplace_back(idx[0], idx[1], Surd::i() * v);
    for (std::size_t k = 0; k < dim_x; ++k) {
      Matrix lhs = quadratic_form(op, per_k[k], Xc);
      t.add(lhs + Xc[k] * (kappa * Surd(Rational(1, 2))), where + " k=" + std::to_string(k + 1));
    }
  };

  if (rep.family == Family::A) {
    const int n = rep.dim_v;
    ResidualTally tc, td;
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Surd>>> dk(dim_x);
    for (const auto& [idx, v] : st.d_xxx.entries()) dk[idx[2]].emplace_back(idx[0], idx[1], v);
    for (int lvl = 0; lvl <= op.space.cutoff; ++lvl) {
      const auto cols = op.space.level(lvl);
      c_law(cols, tc, "level " + std::to_string(lvl));
      auto Xc = restricted(op, cols);
      Rational coef = Rational((n + 2 * lvl) * (n - 2), 2 * n);
      for (std::size_t k = 0; k < dim_x; ++k)
        td.add(quadratic_form(op, dk[k], Xc) - Xc[k] * Surd(coef),
               "level " + std::to_string(lvl) + " k=" + std::to_string(k + 1));
    }
    tc.commit(report, "c-law", "i c_ijk X_i X_j = -(1/2) c_ijl c_ijl X_k");
    td.commit(report, "d-law-level", "d_ijk X_i X_j = ((n + 2 lambda)(n - 2)/(2n)) X_k on level lambda");
    return report;
  }

  const auto cols = op.interior(op.interior_depth);
  {
    ResidualTally tc;
    c_law(cols, tc, "interior");
    tc.commit(report, "c-law", "i c_ijk X_i X_j = -(1/2) c_ijl c_ijl X_k").interior_columns = cols.size();
    report.checks.back().detail = "c_ijl c_ijl = " + kappa.to_string();
  }
  if (rep.family == Family::C) {
    report.expect_equal("c-law-constant", "c_ijl c_ijl / 2 = 2(n+1)", kappa * Surd(Rational(1, 2)),
                        Surd(Rational(2 * (rep.rank + 1))));
    auto Xc = restricted(op, cols);
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Surd>>> da(st.dim_y);
    for (const auto& [idx, v] : st.d_xy.entries()) da[idx[2]].emplace_back(idx[0], idx[1], v);
    ResidualTally td;
    for (std::size_t a = 0; a < st.dim_y; ++a) td.add(quadratic_form(op, da[a], Xc), "a=" + std::to_string(a + 1));
    td.commit(report, "d-law", "d_ija X_i X_j = 0").interior_columns = cols.size();
  }
  return report;
}

Report quartic_contraction(const OperatorRep& op, const StructureTensors& st) {
  Report report;
  report.subject = std::string("quartic contraction ") + family_letter(op.family) + std::to_string(op.rank);
  if (op.family != Family::C) fail(ErrorCode::FamilyMismatch, "the quartic contraction is checked for c_n");
  if (op.space.cutoff < 8) fail(ErrorCode::CutoffTooSmall, "the quartic contraction needs cutoff >= 8");
  const std::size_t dh = op.dim();
  const auto cols = op.interior(6);
  auto Xc = restricted(op, cols);

  // Q = (1/3) sum_a sum_{ik} d_ika X_i (sum_{jl} d_jla X_j X_k X_l)
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Surd>>> da(st.dim_y);
  for (const auto& [idx, v] : st.d_xy.entries()) da[idx[2]].emplace_back(idx[0], idx[1], v);
  Matrix q(dh, cols.size());
  for (std::size_t a = 0; a < st.dim_y; ++a) {
    // inner[k] = sum_{jl} d_jla X_j X_k X_l
    std::map<std::size_t, Matrix> by_j;  // sum_l d_jla X_l (restricted)
    for (const auto& [j, l, v] : da[a]) {
      auto it = by_j.find(j);
      if (it == by_j.end()) it = by_j.emplace(j, Matrix(dh, cols.size())).first;
      it->second += Xc[l] * v;
    }
    std::map<std::size_t, Matrix> inner;
    for (const auto& [i, k, v] : da[a]) {
      if (inner.count(k)) continue;
      Matrix s(dh, cols.size());
      for (const auto& [j, m] : by_j) s += op.X[j] * (op.X[k] * m);
      inner.emplace(k, std::move(s));
    }
    for (const auto& [i, k, v] : da[a]) q += op.X[i] * inner.at(k) * v;
  }
  q *= Surd(Rational(1, 3));

  const Surd vac = q.at(0, 0);
  const int n = op.rank;
  // From d X X = 0, i c X X = -2(n+1) X, c d d = (2/n)(n+2)(n-1) c and X X = -n(2n+1)/4.
  const Rational derived = Rational(1, 3) * Rational((n * n - 1) * (n + 2) * (2 * n + 1));
  const Rational displayed = derived * Rational(2);
  // Scalar on each parity block of the columns with depth 6.
  Matrix off(dh, cols.size());
  Surd odd_value;
  bool have_odd = false;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Surd v = op.space.parity(cols[j]) ? (have_odd ? odd_value : (have_odd = true, odd_value = q.at(cols[j], j)))
                                            : vac;
    off.set(cols[j], j, v);
  }
  report.expect_zero("quartic-scalar", "the quartic contraction is scalar on each parity block", q - off, cols.size())
      .interior_columns = cols.size();
  report.checks.back().detail = "even " + vac.to_string() + ", odd " + odd_value.to_string();
  report.expect_equal("quartic-value", "(1/3) d_ika d_jla X_i X_j X_k X_l = (1/3)(n^2-1)(n+2)(2n+1)", vac, Surd(derived))
      .detail += "; the closed form with prefactor 2/3 gives " + displayed.to_string();
  return report;
}

}  // namespace lieosc
