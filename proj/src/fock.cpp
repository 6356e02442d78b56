#include "lieosc/fock.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lieosc/error.hpp"

namespace lieosc {

int FockSpace::total(std::size_t state) const {
  const auto& m = basis[state];
  return std::accumulate(m.begin(), m.end(), 0);
}

long FockSpace::find(const std::vector<int>& occ) const {
  auto it = lookup.find(occ);
  return it == lookup.end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::size_t> FockSpace::interior(int depth) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < basis.size(); ++s)
    if (kind == Kind::Fermionic || total(s) <= cutoff - depth) out.push_back(s);
  return out;
}

std::vector<std::size_t> FockSpace::level(int lvl) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < basis.size(); ++s)
    if (total(s) == lvl) out.push_back(s);
  return out;
}

namespace {

// Occupation vectors with the given total and per-mode maximum, in
// descending lexicographic order.
void compositions(int modes, int total, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(modes, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == modes - 1) {
      if (left > cap) return;
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, total);
}

void index_basis(FockSpace& space) {
  for (std::size_t s = 0; s < space.basis.size(); ++s) space.lookup[space.basis[s]] = s;
}

}  // namespace

FockSpace bosonic_space(int modes, int cutoff) {
  if (modes < 1) fail(ErrorCode::InvalidArgument, "a Fock space needs at least one mode");
  if (cutoff < 4) fail(ErrorCode::CutoffTooSmall, "bosonic cutoff must be at least 4, got " + std::to_string(cutoff));
  FockSpace space;
  space.kind = FockSpace::Kind::Bosonic;
  space.modes = modes;
  space.cutoff = cutoff;
  for (int t = 0; t <= cutoff; ++t) compositions(modes, t, t, space.basis);
  index_basis(space);
  return space;
}

FockSpace fermionic_space(int modes, bool majorana) {
  if (modes < 1) fail(ErrorCode::InvalidArgument, "a Fock space needs at least one mode");
  FockSpace space;
  space.kind = FockSpace::Kind::Fermionic;
  space.modes = modes;
  space.majorana = majorana;
  const int all = modes + (majorana ? 1 : 0);
  space.cutoff = all;
  for (int t = 0; t <= all; ++t) compositions(all, t, 1, space.basis);
  index_basis(space);
  return space;
}

Ladders ladder_operators(const FockSpace& space) {
  const std::size_t dim = space.dim();
  const int all = static_cast<int>(space.basis.empty() ? 0 : space.basis[0].size());
  Ladders l;
  auto build = [&](int mode, bool raise) {
    Matrix m(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
      std::vector<int> occ = space.basis[s];
      int k = occ[mode];
      if (!raise && k == 0) continue;
      if (space.kind == FockSpace::Kind::Fermionic && raise && k == 1) continue;
      occ[mode] += raise ? 1 : -1;
      long target = space.find(occ);
      if (target < 0) continue;  // beyond the cutoff
      Surd coeff;
      if (space.kind == FockSpace::Kind::Bosonic) {
        coeff = Surd::sqrt(Rational(raise ? k + 1 : k));
      } else {
        int below = std::accumulate(space.basis[s].begin(), space.basis[s].begin() + mode, 0);
        coeff = Surd(below % 2 ? -1 : 1);
      }
      m.set(static_cast<std::size_t>(target), s, coeff);
    }
    return m;
  };
  for (int mu = 0; mu < space.modes; ++mu) {
    l.create.push_back(build(mu, true));
    l.destroy.push_back(build(mu, false));
  }
  if (space.majorana) {
    int aux = all - 1;
    l.majorana = (build(aux, true) + build(aux, false)) * Surd::sqrt(Rational(1, 2));
  }
  return l;
}

Matrix number_operator(const FockSpace& space) {
  Matrix n(space.dim(), space.dim());
  for (std::size_t s = 0; s < space.dim(); ++s) {
    int t = 0;
    for (int mu = 0; mu < space.modes; ++mu) t += space.basis[s][mu];
    n.set(s, s, Surd(t));
  }
  return n;
}

Matrix bilinear(const OperatorRep& op, const Matrix& m) {
  if (op.vv.empty()) fail(ErrorCode::FamilyMismatch, "representation has no oscillator vector");
  const Matrix mg = m * op.metric;
  Matrix out(op.dim(), op.dim());
  mg.for_each([&](std::size_t a, std::size_t c, const Surd& v) { out += op.v_pair(a, c) * v; });
  return out * Surd(Rational(1, 2));
}

namespace {

// Fills vv from the listed operators on `space`, keeping the leading `keep`
// basis states, then X_i = (1/2) v^T x_i (G v).
void assemble(OperatorRep& op, const RepBundle& rep, const std::vector<Matrix>& v, std::size_t keep) {
  const std::size_t N = v.size();
  op.metric = rep.metric;
  op.vv.clear();
  op.vv.reserve(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) op.vv.push_back((v[a] * v[b]).leading(keep));
  for (const auto& x : rep.basis) op.X.push_back(bilinear(op, x));
}

void require_family(const RepBundle& rep, std::initializer_list<Family> allowed, const char* what) {
  for (Family f : allowed)
    if (rep.family == f) return;
  fail(ErrorCode::FamilyMismatch, std::string(what) + " does not apply to family " + family_letter(rep.family));
}

}  // namespace

OperatorRep metaplectic_rep(const RepBundle& rep, int cutoff) {
  require_family(rep, {Family::C}, "the metaplectic representation");
  FockSpace outer = bosonic_space(rep.rank, cutoff);
  FockSpace inner = bosonic_space(rep.rank, cutoff + 2);
  Ladders l = ladder_operators(inner);
  std::vector<Matrix> v;
  for (int mu = 0; mu < rep.rank; ++mu) v.push_back(l.create[mu]);
  for (int mu = rep.rank - 1; mu >= 0; --mu) v.push_back(l.destroy[mu]);
  OperatorRep op{outer, rep.family, rep.rank, rep.gamma, {}, 2, {}, {}};
  assemble(op, rep, v, outer.dim());
  return op;
}

OperatorRep spinor_rep_d(const RepBundle& rep) {
  require_family(rep, {Family::D}, "the d_n spinor representation");
  FockSpace space = fermionic_space(rep.rank, false);
  Ladders l = ladder_operators(space);
  std::vector<Matrix> v;
  for (int mu = 0; mu < rep.rank; ++mu) v.push_back(l.create[mu]);
  for (int mu = rep.rank - 1; mu >= 0; --mu) v.push_back(l.destroy[mu]);
  OperatorRep op{space, rep.family, rep.rank, rep.gamma, {}, 0, {}, {}};
  assemble(op, rep, v, space.dim());
  return op;
}

OperatorRep spinor_rep_b(const RepBundle& rep) {
  require_family(rep, {Family::B}, "the b_n spinor representation");
  FockSpace space = fermionic_space(rep.rank, true);
  Ladders l = ladder_operators(space);
  std::vector<Matrix> v;
  for (int mu = 0; mu < rep.rank; ++mu) v.push_back(l.create[mu]);
  v.push_back(l.majorana);
  for (int mu = rep.rank - 1; mu >= 0; --mu) v.push_back(l.destroy[mu]);
  OperatorRep op{space, rep.family, rep.rank, rep.gamma, {}, 0, {}, {}};
  assemble(op, rep, v, space.dim());
  return op;
}

OperatorRep su_oscillator_rep(const RepBundle& rep, int cutoff) {
  require_family(rep, {Family::A}, "the su(n) oscillator representation");
  const int n = rep.dim_v;
  FockSpace space = bosonic_space(n, cutoff);
  Ladders l = ladder_operators(space);
  // a^dag a keeps the total fixed, so the truncated products are exact.
  std::vector<std::vector<Matrix>> hop(n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) hop[mu].push_back(l.create[mu] * l.destroy[nu]);
  OperatorRep op{space, rep.family, rep.rank, rep.gamma, {}, 0, {}, Matrix::identity(n)};
  for (const auto& x : rep.basis) {
    Matrix X(space.dim(), space.dim());
    x.for_each([&](std::size_t mu, std::size_t nu, const Surd& v) { X += hop[mu][nu] * v; });
    op.X.push_back(X * Surd(rep.gamma));
  }
  return op;
}

OperatorRep oscillator_rep(const RepBundle& rep, int cutoff) {
  switch (rep.family) {
    case Family::C: return metaplectic_rep(rep, cutoff);
    case Family::D: return spinor_rep_d(rep);
    case Family::B: return spinor_rep_b(rep);
    case Family::A: return su_oscillator_rep(rep, cutoff);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

Matrix ladder_generator(const OperatorRep& op, const RepBundle& rep, std::size_t root, bool raise) {
  if (rep.family == Family::A) fail(ErrorCode::FamilyMismatch, "ladder generators are built for b, c and d");
  const Ladder& l = rep.ladders.at(root);
  return bilinear(op, raise ? l.raise : l.lower);
}

namespace {

OperatorRep restrict_rep(const OperatorRep& op, const std::vector<std::size_t>& idx) {
  OperatorRep r{op.space, op.family, op.rank, op.gamma, {}, op.interior_depth, {}, op.metric};
  r.space.basis.clear();
  r.space.lookup.clear();
  for (auto s : idx) r.space.basis.push_back(op.space.basis[s]);
  index_basis(r.space);
  for (const auto& x : op.X) r.X.push_back(x.block(idx));
  for (const auto& p : op.vv) r.vv.push_back(p.block(idx));
  return r;
}

}  // namespace

ChiralityBlocks chirality_blocks(const OperatorRep& op) {
  ChiralityBlocks cb;
  for (std::size_t s = 0; s < op.dim(); ++s) (op.space.parity(s) ? cb.odd : cb.even).push_back(s);
  for (std::size_t i = 0; i < op.X.size(); ++i)
    op.X[i].for_each([&](std::size_t r, std::size_t c, const Surd&) {
      if (op.space.parity(r) != op.space.parity(c))
        fail(ErrorCode::Consistency, "X_" + std::to_string(i + 1) + " mixes parities at (" + std::to_string(r + 1) +
                                         "," + std::to_string(c + 1) + ")");
    });
  cb.even_rep = restrict_rep(op, cb.even);
  cb.odd_rep = restrict_rep(op, cb.odd);
  return cb;
}

Report check_commutators(const OperatorRep& op, const StructureTensors& st) {
  Report report;
  report.subject = std::string("oscillator commutators ") + family_letter(op.family) + std::to_string(op.rank);
  const auto cols = op.interior(op.interior_depth);
  std::vector<std::vector<std::pair<std::size_t, Surd>>> by_pair(op.X.size() * op.X.size());
  for (const auto& [k, v] : st.c.entries()) by_pair[k[0] * op.X.size() + k[1]].emplace_back(k[2], v);
  ResidualTally t;
  for (std::size_t i = 0; i < op.X.size(); ++i)
    for (std::size_t j = i + 1; j < op.X.size(); ++j) {
      Matrix rhs(op.dim(), op.dim());
      for (const auto& [k, v] : by_pair[i * op.X.size() + j]) rhs += op.X[k] * (Surd::i() * v);
      t.add((commutator(op.X[i], op.X[j]) - rhs).columns(cols),
            "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  t.commit(report, "oscillator-commutators", "[X_i, X_j] = i c_ijk X_k").interior_columns = cols.size();
  return report;
}

Report check_oscillator_structure(const OperatorRep& op, const RepBundle& rep) {
  Report report;
  report.subject = std::string("oscillator structure ") + family_letter(op.family) + std::to_string(op.rank);
  const auto cols = op.interior(op.interior_depth);

  // Parity blocks.
  {
    ResidualTally t;
    for (std::size_t i = 0; i < op.X.size(); ++i) {
      Matrix cross(op.dim(), op.dim());
      op.X[i].for_each([&](std::size_t r, std::size_t c, const Surd& v) {
        if (op.space.parity(r) != op.space.parity(c)) cross.set(r, c, v);
      });
      t.add(cross, "X" + std::to_string(i + 1));
    }
    t.commit(report, "parity-blocks", "every X_i preserves the parity of the total occupation");
  }

  if (rep.family == Family::A) {
    Matrix n = number_operator(op.space);
    ResidualTally t;
    for (std::size_t i = 0; i < op.X.size(); ++i) t.add(commutator(n, op.X[i]), "X" + std::to_string(i + 1));
    t.commit(report, "number-invariant", "[N, X_i] = 0");
    bool dims_ok = true;
    std::string detail;
    for (int lvl = 0; lvl <= op.space.cutoff; ++lvl) {
      // C(n + lvl - 1, lvl)
      Rational expect(1);
      for (int k = 1; k <= lvl; ++k) expect = expect * Rational(rep.dim_v - 1 + k, k);
      if (Rational(static_cast<std::int64_t>(op.space.level(lvl).size())) != expect) {
        dims_ok = false;
        detail = "level " + std::to_string(lvl);
      }
    }
    report.expect("level-dimensions", "level lambda has dimension C(n+lambda-1, lambda)", dims_ok, detail);
    return report;
  }

  // v^T G v is a scalar: -n for C, n for D, n + 1/2 for B.
  {
    Matrix norm(op.dim(), op.dim());
    op.metric.for_each([&](std::size_t a, std::size_t b, const Surd& g) { norm += op.v_pair(a, b) * g; });
    Rational expect = rep.family == Family::C ? Rational(-rep.rank)
                      : rep.family == Family::D ? Rational(rep.rank)
                                                : Rational(2 * rep.rank + 1, 2);
    report.expect_zero("metric-norm", "v^T G v = " + expect.to_string() + " on the interior",
                       (norm - Matrix::scalar(op.dim(), Surd(expect))).columns(cols));
  }

  // Hermiticity pairings, n_+ commutativity.
  std::vector<Matrix> raise, lower;
  for (std::size_t a = 0; a < rep.roots.positive.size(); ++a) {
    raise.push_back(ladder_generator(op, rep, a, true));
    lower.push_back(ladder_generator(op, rep, a, false));
  }
  auto coordinate_sum = [&](std::size_t a) {
    const auto& v = rep.roots.positive[a].vector;
    return std::accumulate(v.begin(), v.end(), 0);
  };
  {
    ResidualTally t;
    for (std::size_t a = 0; a < raise.size(); ++a) {
      bool noncompact = coordinate_sum(a) > 0;
      Surd sign(rep.family == Family::C && noncompact ? -1 : 1);
      t.add(lower[a].adjoint() - raise[a] * sign, "E" + rep.roots.positive[a].label_string());
    }
    t.commit(report, "hermiticity",
             rep.family == Family::C ? "E_{-a}^dagger = -E_a on n_+ roots, +E_a on u(n) roots"
                                     : "E_{-a}^dagger = E_a for every root");
  }
  {
    ResidualTally t;
    std::string witness;
    for (std::size_t a = 0; a < raise.size(); ++a)
      for (std::size_t b = a + 1; b < raise.size(); ++b) {
        if (coordinate_sum(a) <= 0 || coordinate_sum(b) <= 0) continue;
        Matrix comm = commutator(raise[a], raise[b]).columns(cols);
        std::string where = "E" + rep.roots.positive[a].label_string() + ", E" + rep.roots.positive[b].label_string();
        if (rep.family == Family::B) {
          if (!comm.is_zero() && witness.empty()) witness = where;
        } else {
          t.add(comm, where);
        }
      }
    if (rep.family == Family::B)
      report.expect("n-plus-noncommutative", "some pair of n_+ generators fails to commute", !witness.empty(),
                    witness.empty() ? "all commute" : "witness [" + witness + "] != 0");
    else
      t.commit(report, "n-plus-commutative", "generators of n_+ commute pairwise");
  }
  return report;
}

}  // namespace lieosc
