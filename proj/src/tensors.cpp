#include "lieosc/tensors.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "lieosc/error.hpp"

namespace lieosc {

// ---------------------------------------------------------------- SparseTensor

SparseTensor::SparseTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.size() > kMaxRank) fail(ErrorCode::InvalidArgument, "tensor rank above 4");
}

Surd SparseTensor::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Surd() : it->second;
}

Surd SparseTensor::at(std::initializer_list<std::uint32_t> idx) const {
  Index key{};
  std::copy(idx.begin(), idx.end(), key.begin());
  return at(key);
}

void SparseTensor::set(const Index& idx, const Surd& v) {
  if (v.is_zero())
    entries_.erase(idx);
  else
    entries_[idx] = v;
}

void SparseTensor::add(const Index& idx, const Surd& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(idx, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

Surd SparseTensor::max_entry() const {
  Surd best;
  double mag = -1;
  for (const auto& [k, v] : entries_) {
    double m = v.magnitude();
    if (m > mag) {
      mag = m;
      best = v;
    }
  }
  return best;
}

SparseTensor& SparseTensor::add_scaled(const SparseTensor& o, const Surd& s) {
  if (o.dims_ != dims_) fail(ErrorCode::DimensionMismatch, "tensor shapes differ");
  for (const auto& [k, v] : o.entries_) add(k, v * s);
  return *this;
}

SparseTensor SparseTensor::operator-(const SparseTensor& o) const {
  SparseTensor r = *this;
  return r.add_scaled(o, Surd(-1));
}

SparseTensor SparseTensor::operator*(const Surd& s) const {
  SparseTensor r(dims_);
  for (const auto& [k, v] : entries_) r.set(k, v * s);
  return r;
}

namespace {

struct OperandPlan {
  std::array<int, 128> first{};  // letter -> first position + 1
  std::vector<std::pair<int, int>> equal;  // positions that must agree

  OperandPlan(std::string_view letters, std::size_t rank) {
    if (letters.size() != rank) fail(ErrorCode::InvalidArgument, "index letters do not match tensor rank");
    for (std::size_t p = 0; p < letters.size(); ++p) {
      auto ch = static_cast<unsigned char>(letters[p]);
      if (ch >= 128) fail(ErrorCode::InvalidArgument, "index letters must be ASCII");
      if (first[ch] == 0)
        first[ch] = static_cast<int>(p) + 1;
      else
        equal.emplace_back(first[ch] - 1, static_cast<int>(p));
    }
  }
  bool accepts(const SparseTensor::Index& idx) const {
    for (auto [p, q] : equal)
      if (idx[p] != idx[q]) return false;
    return true;
  }
  int pos(char ch) const { return first[static_cast<unsigned char>(ch)] - 1; }
};

}  // namespace

SparseTensor contract(const SparseTensor& a, std::string_view la, const SparseTensor& b, std::string_view lb,
                      std::string_view out) {
  OperandPlan pa(la, a.rank()), pb(lb, b.rank());
  std::vector<int> shared_a, shared_b;
  for (char ch : std::string(la)) {
    if (pb.pos(ch) < 0) continue;
    if (std::find(shared_a.begin(), shared_a.end(), pa.pos(ch)) != shared_a.end()) continue;
    shared_a.push_back(pa.pos(ch));
    shared_b.push_back(pb.pos(ch));
    if (a.dims()[pa.pos(ch)] != b.dims()[pb.pos(ch)])
      fail(ErrorCode::DimensionMismatch, std::string("index '") + ch + "' has different ranges");
  }
  std::vector<std::size_t> out_dims;
  // (operand, position) source per output slot
  std::vector<std::pair<int, int>> source;
  for (char ch : out) {
    if (pa.pos(ch) >= 0) {
      source.emplace_back(0, pa.pos(ch));
      out_dims.push_back(a.dims()[pa.pos(ch)]);
    } else if (pb.pos(ch) >= 0) {
      source.emplace_back(1, pb.pos(ch));
      out_dims.push_back(b.dims()[pb.pos(ch)]);
    } else {
      fail(ErrorCode::InvalidArgument, std::string("output index '") + ch + "' appears in no operand");
    }
  }
  SparseTensor result(out_dims);

  auto key_of = [](const SparseTensor::Index& idx, const std::vector<int>& pos) {
    std::uint64_t key = 0;
    for (int p : pos) key = (key << 16) | idx[p];
    return key;
  };
  std::unordered_map<std::uint64_t, std::vector<const std::pair<const SparseTensor::Index, Surd>*>> table;
  for (const auto& e : b.entries())
    if (pb.accepts(e.first)) table[key_of(e.first, shared_b)].push_back(&e);

  for (const auto& ea : a.entries()) {
    if (!pa.accepts(ea.first)) continue;
    auto it = table.find(key_of(ea.first, shared_a));
    if (it == table.end()) continue;
    for (const auto* eb : it->second) {
      SparseTensor::Index idx{};
      for (std::size_t s = 0; s < source.size(); ++s)
        idx[s] = source[s].first == 0 ? ea.first[source[s].second] : eb->first[source[s].second];
      result.add(idx, ea.second * eb->second);
    }
  }
  return result;
}

SparseTensor reduce(const SparseTensor& a, std::string_view la, std::string_view out) {
  SparseTensor one{std::vector<std::size_t>{}};
  one.set(SparseTensor::Index{}, Surd(1));
  return contract(a, la, one, "", out);
}

SparseTensor delta(std::size_t n, const Surd& k) {
  SparseTensor d({n, n});
  for (std::uint32_t i = 0; i < n; ++i) d.set({i, i, 0, 0}, k);
  return d;
}

// -------------------------------------------------------------- completion

std::size_t expected_completion_count(Family family, int rank) {
  const std::size_t n = rank;
  switch (family) {
    case Family::A: return 0;
    case Family::C: return (2 * n + 1) * (n - 1);
    case Family::B: {
      std::size_t N = 2 * n + 1;
      return (N - 1) * (N + 2) / 2;
    }
    case Family::D: {
      std::size_t N = 2 * n;
      return (N - 1) * (N + 2) / 2;
    }
  }
  return 0;
}

CompletionBasis complete_basis(const RepBundle& rep) {
  CompletionBasis comp;
  if (rep.family == Family::A) return comp;
  const std::size_t N = rep.dim_v;
  const Matrix& g = rep.metric;
  const Matrix ginv = g.transpose();
  const Matrix id = Matrix::identity(N);

  std::vector<Matrix> candidates;
  for (std::size_t k = 0; k < N; ++k) candidates.push_back(Matrix::unit(N, N, k, k));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      candidates.push_back(Matrix::unit(N, N, a, b) + Matrix::unit(N, N, b, a));
      candidates.push_back(Matrix::unit(N, N, a, b, -Surd::i()) + Matrix::unit(N, N, b, a, Surd::i()));
    }

  // Project onto G A^T G^{-1} = A, drop the trace, then Gram-Schmidt without
  // normalizing so everything stays rational until the final sqrt.
  std::vector<Matrix> ortho;
  std::vector<Rational> norms;
  const Rational half(1, 2);
  for (const auto& cand : candidates) {
    Matrix p = (cand + g * cand.transpose() * ginv) * Surd(half);
    p -= id * (p.trace() / Rational(static_cast<std::int64_t>(N)));
    for (std::size_t j = 0; j < ortho.size(); ++j) {
      Rational coeff = trace_product(p, ortho[j]).rational() / norms[j];
      if (!coeff.is_zero()) p -= ortho[j] * Surd(coeff);
    }
    if (p.is_zero()) continue;
    ortho.push_back(p);
    norms.push_back(trace_product(p, p).rational());
  }
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    comp.y.push_back(ortho[k] * Surd::sqrt(Rational(2) / norms[k]));
    comp.names.push_back("y" + std::to_string(k + 1));
  }
  if (comp.count() != expected_completion_count(rep.family, rep.rank))
    fail(ErrorCode::Consistency, "completion basis has " + std::to_string(comp.count()) + " elements, expected " +
                                     std::to_string(expected_completion_count(rep.family, rep.rank)));
  return comp;
}

// ------------------------------------------------------------ structure tensors

namespace {

using Idx = SparseTensor::Index;

Surd require_real(const Surd& v, const std::string& what) {
  if (!v.is_real()) fail(ErrorCode::Consistency, what + " has a nonzero imaginary part: " + v.to_string());
  return v;
}

std::vector<std::vector<Matrix>> products(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<std::vector<Matrix>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(b.size());
    for (const auto& m : b) out[i].push_back(a[i] * m);
  }
  return out;
}

std::string tuple(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  for (auto i : idx) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  return s + ")";
}

/// Entries whose first two indices are (i, j), as (third index, value).
std::vector<std::pair<std::uint32_t, Surd>> slice2(const SparseTensor& t, std::uint32_t i, std::uint32_t j) {
  std::vector<std::pair<std::uint32_t, Surd>> out;
  Idx lo{i, j, 0, 0};
  for (auto it = t.entries().lower_bound(lo); it != t.entries().end(); ++it) {
    if (it->first[0] != i || it->first[1] != j) break;
    out.emplace_back(it->first[2], it->second);
  }
  return out;
}

}  // namespace

StructureTensors structure_tensors(const RepBundle& rep, const CompletionBasis& comp) {
  const auto& x = rep.basis;
  const auto& y = comp.y;
  const std::size_t nx = x.size(), ny = y.size();
  StructureTensors st{rep.family,
                      rep.rank,
                      rep.dim_v,
                      nx,
                      ny,
                      Rational(2, rep.dim_v),
                      SparseTensor({nx, nx, nx}),
                      SparseTensor({nx, nx, ny}),
                      SparseTensor({nx, ny, ny}),
                      SparseTensor({ny, ny, ny}),
                      SparseTensor({nx, nx, nx})};
  const auto xx = products(x, x);
  const Surd c_scale = -Surd::i() * Surd(rep.gamma / Rational(2));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j)
      for (std::size_t k = 0; k < nx; ++k) {
        Surd c = c_scale * (trace_product(xx[i][j], x[k]) - trace_product(xx[j][i], x[k]));
        st.c.set({uint32_t(i), uint32_t(j), uint32_t(k), 0}, require_real(c, "c" + tuple({i, j, k})));
        if (rep.family == Family::A) {
          Surd d = (trace_product(xx[i][j], x[k]) + trace_product(xx[j][i], x[k])) / Rational(4);
          st.d_xxx.set({uint32_t(i), uint32_t(j), uint32_t(k), 0}, require_real(d, "d" + tuple({i, j, k})));
        }
      }
  if (ny == 0) return st;
  const auto yy = products(y, y);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j)
      for (std::size_t a = 0; a < ny; ++a)
        st.d_xy.set({uint32_t(i), uint32_t(j), uint32_t(a), 0},
                    require_real(trace_product(xx[i][j], y[a]), "d" + tuple({i, j, a})));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t a = 0; a < ny; ++a)
      for (std::size_t b = 0; b < ny; ++b)
        st.h.set({uint32_t(i), uint32_t(a), uint32_t(b), 0},
                 require_real(-Surd::i() * trace_product(yy[a][b], x[i]), "h" + tuple({i, a, b})));
  for (std::size_t a = 0; a < ny; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t g = 0; g < ny; ++g)
        st.d_yyy.set({uint32_t(a), uint32_t(b), uint32_t(g), 0},
                     require_real(trace_product(yy[a][b], y[g]), "d" + tuple({a, b, g})));
  return st;
}

Report verify_product_laws(const RepBundle& rep, const CompletionBasis& comp, const StructureTensors& st) {
  Report report;
  report.subject = std::string("product laws ") + family_letter(rep.family) + std::to_string(rep.rank);
  const auto& x = rep.basis;
  const auto& y = comp.y;
  const std::size_t nx = x.size(), ny = y.size();
  const std::size_t N = rep.dim_v;
  const Matrix id = Matrix::identity(N);
  const Surd half_i = Surd::i() * Surd(Rational(1) / (rep.gamma * Rational(2)));
  const Surd half(Rational(1, 2));

  ResidualTally xx_law;
  for (std::uint32_t i = 0; i < nx; ++i)
    for (std::uint32_t j = 0; j < nx; ++j) {
      Matrix rhs = i == j ? id * Surd(st.trace_coeff) : Matrix(N, N);
      for (const auto& [k, v] : slice2(st.c, i, j)) rhs += x[k] * (half_i * v);
      for (const auto& [a, v] : slice2(st.d_xy, i, j)) rhs += y[a] * (half * v);
      for (const auto& [k, v] : slice2(st.d_xxx, i, j)) rhs += x[k] * v;
      xx_law.add(x[i] * x[j] - rhs, tuple({i, j}));
    }
  xx_law.commit(report, "product-law-xx", "x_i x_j = (2/N) delta_ij + (i/2) c_ijk x_k + (1/2) d_ija y_a");
  if (ny == 0) return report;

  const SparseTensor h_ab_i = reduce(st.h, "iab", "abi");
  const SparseTensor d_a_i_j = reduce(st.d_xy, "ija", "aij");
  ResidualTally xy_law, yy_law;
  for (std::uint32_t i = 0; i < nx; ++i)
    for (std::uint32_t a = 0; a < ny; ++a) {
      Matrix rhs(N, N);
      for (const auto& [b, v] : slice2(st.h, i, a)) rhs += y[b] * (half_i * v);
      for (const auto& [j, v] : slice2(d_a_i_j, a, i)) rhs += x[j] * (half * v);
      xy_law.add(x[i] * y[a] - rhs, tuple({i, a}));
    }
  for (std::uint32_t a = 0; a < ny; ++a)
    for (std::uint32_t b = 0; b < ny; ++b) {
      Matrix rhs = a == b ? id * Surd(st.trace_coeff) : Matrix(N, N);
      for (const auto& [i, v] : slice2(h_ab_i, a, b)) rhs += x[i] * (half_i * v);
      for (const auto& [g, v] : slice2(st.d_yyy, a, b)) rhs += y[g] * (half * v);
      yy_law.add(y[a] * y[b] - rhs, tuple({a, b}));
    }
  xy_law.commit(report, "product-law-xy", "x_i y_a = (i/2) h_iab y_b + (1/2) d_ija x_j");
  yy_law.commit(report, "product-law-yy", "y_a y_b = (2/N) delta_ab + (i/2) h_iab x_i + (1/2) d_abg y_g");
  return report;
}

// ------------------------------------------------------------- completeness

namespace {

Matrix metric_projector(const Matrix& g) {
  const std::size_t N = g.rows();
  Matrix k(N * N, N * N);
  std::vector<std::pair<std::size_t, Surd>> vec;
  g.for_each([&](std::size_t a, std::size_t c, const Surd& v) { vec.emplace_back(a * N + c, v); });
  for (const auto& [r, vr] : vec)
    for (const auto& [c, vc] : vec) k.set(r, c, vr * vc);
  return k;
}

Matrix tensor_square_sum(const std::vector<Matrix>& ms, std::size_t N) {
  Matrix s(N * N, N * N);
  for (const auto& m : ms) s += kron(m, m);
  return s;
}

}  // namespace

Report verify_completeness(const RepBundle& rep, const CompletionBasis& comp) {
  Report report;
  report.subject = std::string("completeness ") + family_letter(rep.family) + std::to_string(rep.rank);
  const std::size_t N = rep.dim_v;
  const Matrix p = swap_operator(N);
  const Matrix id = Matrix::identity(N * N);
  const std::size_t tuples = N * N * N * N;
  if (rep.family == Family::A) {
    report.expect_zero("completeness-x", "sum_i x_i (x) x_i = 2P - (2/n) I",
                       tensor_square_sum(rep.basis, N) - (p * Surd(2) - id * Surd(Rational(2, N))), tuples);
    return report;
  }
  const Matrix k = metric_projector(rep.metric);
  const std::string kname = rep.family == Family::C ? "K" : "Q";
  report.expect_zero("completeness-x", "sum_i x_i (x) x_i = P - " + kname + ", " + kname + "_{ac,bd} = G_ac G_bd",
                     tensor_square_sum(rep.basis, N) - (p - k), tuples);
  report.expect_zero("completeness-y", "sum_a y_a (x) y_a = P + " + kname + " - (2/N) I",
                     tensor_square_sum(comp.y, N) - (p + k - id * Surd(Rational(2, N))), tuples);
  return report;
}

// --------------------------------------------------------------- identities

const std::vector<IdentityConstant>& identity_constants() {
  using R = Rational;
  static const std::vector<IdentityConstant> table = {
      {"casimir-x", [](R n) { return R(2) * n + R(1); }, [](R N) { return N - R(1); }},
      {"casimir-y", [](R n) { return (R(2) * n + R(1)) * (n - R(1)) / n; },
       [](R N) { return (N + R(2)) * (N - R(1)) / N; }},
      {"sandwich-xxx", [](R) { return R(-1); }, [](R) { return R(1); }},
      {"sandwich-yxy", [](R n) { return R(1) - R(1) / n; }, [](R N) { return -(R(1) + R(2) / N); }},
      {"sandwich-xyx", [](R) { return R(1); }, [](R) { return R(-1); }},
      {"sandwich-yyy", [](R n) { return -(R(1) + R(1) / n); }, [](R N) { return R(1) - R(2) / N; }},
      {"contraction-cc", [](R n) { return R(4) * (n + R(1)); }, [](R N) { return R(2) * (N - R(2)); }},
      {"contraction-dd-y", [](R n) { return R(4) * (n + R(1)); }, [](R N) { return R(2) * (N - R(2)); }},
      {"contraction-dd-x", [](R n) { return R(4) / n * (n * n - R(1)); },
       [](R N) { return R(2) / N * (N * N - R(4)); }},
      {"contraction-hh-x", [](R n) { return R(4) * (n - R(1)); }, [](R N) { return R(2) * (N + R(2)); }},
      {"contraction-hh-y", [](R n) { return R(4) * n; }, [](R N) { return R(2) * N; }},
      {"contraction-dyyy", [](R n) { return R(4) / n * (n - R(2)) * (n + R(1)); },
       [](R N) { return R(2) / N * (N - R(2)) * (N + R(4)); }},
      {"y-from-dxx", [](R n) { return R(2) * (n + R(1)); }, [](R N) { return N - R(2); }},
      {"cubic-ccc", [](R n) { return R(-2) * (n + R(1)); }, [](R N) { return -(N - R(2)); }},
      {"cubic-cdd", [](R n) { return R(2) / n * (n + R(2)) * (n - R(1)); },
       [](R N) { return (N - R(4)) * (N + R(2)) / N; }},
      {"cc-expansion", [](R n) { return R(4) / n; }, [](R N) { return R(8) / N; }},
  };
  return table;
}

Report check_duality() {
  Report report;
  report.subject = "duality 2n -> -N";
  for (const auto& ic : identity_constants()) {
    bool ok = true;
    std::string detail;
    for (std::int64_t N = 3; N <= 14 && ok; ++N) {
      Rational sp = ic.symplectic(Rational(-N, 2));
      Rational so = ic.orthogonal(Rational(N));
      if (sp != -so) {
        ok = false;
        detail = "N=" + std::to_string(N) + ": " + sp.to_string() + " vs " + so.to_string();
      }
    }
    report.expect("duality-" + ic.identity, "symplectic constant at n = -N/2 equals minus the so(N) constant", ok,
                  detail);
  }
  return report;
}

namespace {

Rational constant_for(const RepBundle& rep, const std::string& id) {
  for (const auto& ic : identity_constants())
    if (ic.identity == id)
      return rep.family == Family::C ? ic.symplectic(Rational(rep.rank)) : ic.orthogonal(Rational(rep.dim_v));
  fail(ErrorCode::InvalidArgument, "unknown identity " + id);
}

void expect_tensor(Report& report, const std::string& id, const std::string& desc, const SparseTensor& lhs,
                   const SparseTensor& rhs) {
  SparseTensor diff = lhs - rhs;
  CheckResult c;
  c.identity = id;
  c.description = desc;
  c.max_residual = diff.max_entry();
  c.pass = diff.is_zero();
  std::size_t checked = 1;
  for (auto d : lhs.dims()) checked *= d;
  c.checked = checked;
  if (!c.pass) {
    const auto& [idx, v] = *diff.entries().begin();
    c.detail = "first nonzero residual at index";
    for (std::size_t k = 0; k < lhs.rank(); ++k) c.detail += " " + std::to_string(idx[k] + 1);
    c.detail += ": " + v.to_string();
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

Report verify_identities(const RepBundle& rep, const CompletionBasis& comp, const StructureTensors& st) {
  Report report;
  report.subject = std::string("identities ") + family_letter(rep.family) + std::to_string(rep.rank);
  if (rep.family == Family::A) fail(ErrorCode::FamilyMismatch, "the identity suite covers c_n and so(N)");
  const auto& x = rep.basis;
  const auto& y = comp.y;
  const std::size_t nx = x.size(), ny = y.size();
  const std::size_t N = rep.dim_v;
  const Matrix id = Matrix::identity(N);
  auto k = [&](const char* name) { return Surd(constant_for(rep, name)); };

  // Symmetry classes of the tables.
  expect_tensor(report, "symmetry-c", "c_ijk = -c_jik", st.c, reduce(st.c, "ijk", "jik") * Surd(-1));
  expect_tensor(report, "symmetry-c-cyclic", "c_ijk = c_jki", st.c, reduce(st.c, "ijk", "jki"));
  expect_tensor(report, "symmetry-dxy", "d_ija = d_jia", st.d_xy, reduce(st.d_xy, "ija", "jia"));
  expect_tensor(report, "trace-dxy", "d_iia = 0 (summed over i)", reduce(st.d_xy, "iia", "a"),
                SparseTensor({ny}));
  expect_tensor(report, "symmetry-h", "h_iab = -h_iba", st.h, reduce(st.h, "iab", "iba") * Surd(-1));
  expect_tensor(report, "symmetry-dyyy", "d_abg = d_bag = d_bga", st.d_yyy, reduce(st.d_yyy, "abg", "bag"));
  expect_tensor(report, "symmetry-dyyy-cyclic", "d_abg = d_bga", st.d_yyy, reduce(st.d_yyy, "abg", "bga"));
  expect_tensor(report, "trace-dyyy", "d_aag = 0 (summed over a)", reduce(st.d_yyy, "aag", "g"), SparseTensor({ny}));

  // Casimir sums and sandwiches.
  {
    Matrix sx(N, N), sy(N, N);
    for (const auto& m : x) sx += m * m;
    for (const auto& m : y) sy += m * m;
    report.expect_zero("casimir-x", "x_i x_i = C_x", sx - id * k("casimir-x"));
    report.expect_zero("casimir-y", "y_a y_a = C_y", sy - id * k("casimir-y"));
  }
  {
    ResidualTally xxx, yxy, xyx, yyy;
    for (std::size_t j = 0; j < nx; ++j) {
      Matrix s1(N, N), s2(N, N);
      for (const auto& m : x) s1 += m * x[j] * m;
      for (const auto& m : y) s2 += m * x[j] * m;
      xxx.add(s1 - x[j] * k("sandwich-xxx"), "x" + std::to_string(j + 1));
      yxy.add(s2 - x[j] * k("sandwich-yxy"), "x" + std::to_string(j + 1));
    }
    for (std::size_t b = 0; b < ny; ++b) {
      Matrix s1(N, N), s2(N, N);
      for (const auto& m : x) s1 += m * y[b] * m;
      for (const auto& m : y) s2 += m * y[b] * m;
      xyx.add(s1 - y[b] * k("sandwich-xyx"), "y" + std::to_string(b + 1));
      yyy.add(s2 - y[b] * k("sandwich-yyy"), "y" + std::to_string(b + 1));
    }
    xxx.commit(report, "sandwich-xxx", "x_i x_j x_i = k x_j");
    yxy.commit(report, "sandwich-yxy", "y_a x_i y_a = k x_i");
    xyx.commit(report, "sandwich-xyx", "x_i y_a x_i = k y_a");
    yyy.commit(report, "sandwich-yyy", "y_a y_b y_a = k y_b");
  }

  // Quadratic contractions.
  expect_tensor(report, "contraction-cc", "c_ijk c_ijl = k delta_kl", contract(st.c, "ijk", st.c, "ijl", "kl"),
                delta(nx, k("contraction-cc")));
  expect_tensor(report, "contraction-dd-y", "d_ija d_ijb = k delta_ab", contract(st.d_xy, "ija", st.d_xy, "ijb", "ab"),
                delta(ny, k("contraction-dd-y")));
  expect_tensor(report, "contraction-dd-x", "d_ija d_ika = k delta_jk", contract(st.d_xy, "ija", st.d_xy, "ika", "jk"),
                delta(nx, k("contraction-dd-x")));
  expect_tensor(report, "contraction-hh-x", "h_iab h_jab = k delta_ij", contract(st.h, "iab", st.h, "jab", "ij"),
                delta(nx, k("contraction-hh-x")));
  expect_tensor(report, "contraction-hh-y", "h_iab h_iag = k delta_bg", contract(st.h, "iab", st.h, "iag", "bg"),
                delta(ny, k("contraction-hh-y")));
  expect_tensor(report, "contraction-dyyy", "d_agm d_bgm = k delta_ab",
                contract(st.d_yyy, "agm", st.d_yyy, "bgm", "ab"), delta(ny, k("contraction-dyyy")));

  // y from d x x.
  {
    std::vector<Matrix> acc(ny, Matrix(N, N));
    for (const auto& [idx, v] : st.d_xy.entries()) acc[idx[2]] += x[idx[0]] * x[idx[1]] * v;
    ResidualTally t;
    for (std::size_t a = 0; a < ny; ++a) t.add(acc[a] - y[a] * k("y-from-dxx"), "y" + std::to_string(a + 1));
    t.commit(report, "y-from-dxx", "d_ija x_i x_j = k y_a");
  }

  // Cubic contractions and the c-c expansion.
  {
    SparseTensor cc = contract(st.c, "piq", st.c, "qjr", "pijr");
    expect_tensor(report, "cubic-ccc", "c_piq c_qjr c_rkp = k c_ijk", contract(cc, "pijr", st.c, "rkp", "ijk"),
                  st.c * k("cubic-ccc"));
    SparseTensor cd = contract(st.c, "pqk", st.d_xy, "ipa", "qkia");
    expect_tensor(report, "cubic-cdd", "c_pqk d_ipa d_jqa = k c_ijk", contract(cd, "qkia", st.d_xy, "jqa", "ijk"),
                  st.c * k("cubic-cdd"));
  }
  {
    SparseTensor lhs = contract(st.c, "ijl", st.c, "kml", "ijkm");
    SparseTensor d1 = delta(nx);
    SparseTensor rhs = contract(d1, "ik", d1, "jm", "ijkm");
    rhs.add_scaled(contract(d1, "im", d1, "jk", "ijkm"), Surd(-1));
    rhs = rhs * k("cc-expansion");
    rhs.add_scaled(contract(st.d_xy, "ika", st.d_xy, "jma", "ijkm"), Surd(1));
    rhs.add_scaled(contract(st.d_xy, "ima", st.d_xy, "jka", "ijkm"), Surd(-1));
    expect_tensor(report, "cc-expansion",
                  "c_ijl c_kml = k (d_ik d_jm - d_im d_jk) + d_ika d_jma - d_ima d_jka", lhs, rhs);
  }
  return report;
}

// ------------------------------------------------------------------ v tensor

SparseTensor v_tensor_trace(const RepBundle& rep) {
  const auto& x = rep.basis;
  const std::size_t nx = x.size();
  const auto xx = products(x, x);
  SparseTensor v({nx, nx, nx, nx});
  std::array<std::uint32_t, 4> t{};
  for (t[0] = 0; t[0] < nx; ++t[0])
    for (t[1] = t[0]; t[1] < nx; ++t[1])
      for (t[2] = t[1]; t[2] < nx; ++t[2])
        for (t[3] = t[2]; t[3] < nx; ++t[3]) {
          auto p = t;
          Surd sum;
          std::int64_t count = 0;
          do {
            sum += trace_product(xx[p[0]][p[1]], xx[p[2]][p[3]]);
            ++count;
          } while (std::next_permutation(p.begin(), p.end()));
          Surd value = sum / Rational(2 * count);
          if (value.is_zero()) continue;
          p = t;
          do {
            v.set(p, value);
          } while (std::next_permutation(p.begin(), p.end()));
        }
  return v;
}

SparseTensor v_tensor_closed(const StructureTensors& st) {
  const std::size_t nx = st.dim_x;
  SparseTensor d1 = delta(nx);
  SparseTensor dd = contract(d1, "ij", d1, "kl", "ijkl");
  dd.add_scaled(contract(d1, "ik", d1, "jl", "ijkl"), Surd(1));
  dd.add_scaled(contract(d1, "il", d1, "jk", "ijkl"), Surd(1));
  SparseTensor v = dd * Surd(st.trace_coeff / Rational(3));
  const Surd quarter_third(Rational(1, 12));
  v.add_scaled(contract(st.d_xy, "ija", st.d_xy, "kla", "ijkl"), quarter_third);
  v.add_scaled(contract(st.d_xy, "ika", st.d_xy, "jla", "ijkl"), quarter_third);
  v.add_scaled(contract(st.d_xy, "ila", st.d_xy, "jka", "ijkl"), quarter_third);
  return v;
}

Report check_v_tensor(const RepBundle& rep, const StructureTensors& st) {
  Report report;
  report.subject = std::string("v tensor ") + family_letter(rep.family) + std::to_string(rep.rank);
  if (rep.family == Family::A) fail(ErrorCode::FamilyMismatch, "the v tensor is defined for c_n and so(N)");
  SparseTensor trace = v_tensor_trace(rep);
  SparseTensor closed = v_tensor_closed(st);
  expect_tensor(report, "v-tensor", "(1/2) Tr x_(i x_j x_k x_l) = (2/N) delta_(ij delta_kl) + (1/4) d_a(ij d_kl)a",
                trace, closed);
  expect_tensor(report, "v-tensor-symmetry", "closed form is symmetric under i <-> k", closed,
                reduce(closed, "ijkl", "kjil"));
  expect_tensor(report, "v-tensor-symmetry-2", "closed form is symmetric under j <-> l", closed,
                reduce(closed, "ijkl", "ilkj"));
  return report;
}

// ----------------------------------------------------------------- sextic

Surd sextic_component(const StructureTensors& st, const std::array<std::size_t, 6>& idx) {
  for (auto i : idx)
    if (i >= st.dim_x) fail(ErrorCode::InvalidArgument, "sextic index out of range");
  const std::size_t ny = st.dim_y;
  auto column = [&](std::size_t i, std::size_t j) {
    std::vector<Surd> u(ny);
    for (const auto& [a, v] : slice2(st.d_xy, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j))) u[a] = v;
    return u;
  };
  // All 15 perfect matchings of six slots; the symmetries of d_ija and d_abg
  // make every permutation within a matching class contribute equally.
  std::vector<std::array<int, 6>> matchings;
  std::function<void(std::array<int, 6>, int, std::vector<int>)> rec = [&](std::array<int, 6> cur, int filled,
                                                                          std::vector<int> rest) {
    if (rest.empty()) {
      matchings.push_back(cur);
      return;
    }
    int first = rest[0];
    for (std::size_t k = 1; k < rest.size(); ++k) {
      std::vector<int> next;
      for (std::size_t m = 1; m < rest.size(); ++m)
        if (m != k) next.push_back(rest[m]);
      auto c = cur;
      c[filled] = first;
      c[filled + 1] = rest[k];
      rec(c, filled + 2, next);
    }
  };
  rec({}, 0, {0, 1, 2, 3, 4, 5});
  Surd total;
  for (const auto& m : matchings) {
    auto u1 = column(idx[m[0]], idx[m[1]]);
    auto u2 = column(idx[m[2]], idx[m[3]]);
    auto u3 = column(idx[m[4]], idx[m[5]]);
    for (const auto& [k, v] : st.d_yyy.entries()) {
      if (u1[k[0]].is_zero() || u2[k[1]].is_zero() || u3[k[2]].is_zero()) continue;
      total += v * u1[k[0]] * u2[k[1]] * u3[k[2]];
    }
  }
  return total / Rational(static_cast<std::int64_t>(matchings.size()));
}

// ---------------------------------------------------------- derived reps

DerivedReps derived_reps(const StructureTensors& st) {
  DerivedReps dr;
  dr.adjoint.assign(st.dim_x, Matrix(st.dim_x, st.dim_x));
  for (const auto& [k, v] : st.c.entries()) dr.adjoint[k[0]].set(k[1], k[2], -Surd::i() * v);
  dr.h_rep.assign(st.dim_x, Matrix(st.dim_y, st.dim_y));
  for (const auto& [k, v] : st.h.entries()) dr.h_rep[k[0]].set(k[1], k[2], -Surd::i() * v);
  return dr;
}

Report check_derived_reps(const RepBundle& rep, const StructureTensors& st, const DerivedReps& dr) {
  Report report;
  report.subject = std::string("derived representations ") + family_letter(rep.family) + std::to_string(rep.rank);
  auto check_algebra = [&](const std::vector<Matrix>& m, const std::string& id, const std::string& what) {
    ResidualTally t;
    for (std::uint32_t i = 0; i < m.size(); ++i)
      for (std::uint32_t j = i + 1; j < m.size(); ++j) {
        Matrix rhs(m[0].rows(), m[0].cols());
        for (const auto& [k, v] : slice2(st.c, i, j)) rhs += m[k] * (Surd::i() * v);
        t.add(commutator(m[i], m[j]) - rhs, tuple({i, j}));
      }
    t.commit(report, id, "[" + what + "_i, " + what + "_j] = i c_ijk " + what + "_k");
  };
  auto casimir = [](const std::vector<Matrix>& m, std::size_t dim) {
    Matrix s(dim, dim);
    for (const auto& a : m) s += a * a;
    return s;
  };
  const Rational n(rep.rank), N(rep.dim_v);
  const bool sp = rep.family == Family::C;
  const bool su = rep.family == Family::A;
  // su(n) in the Gell-Mann normalization: C_2(V) = gamma^2 x_i x_i = (n^2-1)/(2n), C_2(Ad) = n.
  Rational cas_v = su ? (N * N - Rational(1)) / (Rational(2) * N) : constant_for(rep, "casimir-x");
  Rational cas_ad = su ? N : (sp ? Rational(4) * (n + Rational(1)) : Rational(2) * (N - Rational(2)));
  std::vector<Matrix> gv;
  for (const auto& x : rep.basis) gv.push_back(x * Surd(rep.gamma));
  check_algebra(gv, "algebra-v", "x");
  check_algebra(dr.adjoint, "algebra-adjoint", "F");
  report.expect_zero("casimir-v", "C_2 on V = " + cas_v.to_string(),
                     casimir(gv, rep.dim_v) - Matrix::identity(rep.dim_v) * Surd(cas_v));
  report.expect_zero("casimir-adjoint", "C_2 on the adjoint = " + cas_ad.to_string(),
                     casimir(dr.adjoint, st.dim_x) - Matrix::identity(st.dim_x) * Surd(cas_ad));
  if (st.dim_y > 0) {
    Rational cas_h = sp ? Rational(4) * n : Rational(2) * N;
    check_algebra(dr.h_rep, "algebra-h-rep", sp ? "R" : "S");
    report.expect_zero("casimir-h-rep", std::string("C_2 on the ") + (sp ? "R" : "S") + " representation = " +
                                            cas_h.to_string(),
                       casimir(dr.h_rep, st.dim_y) - Matrix::identity(st.dim_y) * Surd(cas_h));
  }
  return report;
}

}  // namespace lieosc
