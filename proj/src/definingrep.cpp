#include "lieosc/definingrep.hpp"

#include <algorithm>
#include <map>

#include "lieosc/sampling.hpp"

namespace lieosc {

std::string LayoutCell::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Cartan: return std::string(sign < 0 ? "-" : "") + "H" + std::to_string(cartan);
    case Kind::Ladder: {
      std::string s = sign < 0 ? "-" : "";
      if (sqrt2) s += "sqrt(2)*";
      s += "E" + Root{label, {}}.label_string();
      return s;
    }
  }
  return "?";
}

int defining_dim(Family family, int rank) {
  validate_rank(family, rank);
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C: return 2 * rank;
    case Family::D: return 2 * rank;
  }
  return 0;
}

Matrix metric_form(Family family, int rank) {
  const int N = defining_dim(family, rank);
  if (family == Family::A) return Matrix::identity(N);
  Matrix g(N, N);
  for (int k = 0; k < N; ++k) {
    int s = (family == Family::C && k >= rank) ? -1 : 1;
    g.set(k, N - 1 - k, Surd(s));
  }
  return g;
}

namespace {

// Weight of basis vector k (1-based) of the defining representation, i.e. the
// diagonal entries of (h_1, ..., h_n) at position k.
IntVector weight(Family family, int n, int k) {
  const int N = defining_dim(family, n);
  IntVector w(n, 0);
  if (k <= n) {
    w[k - 1] = 1;
  } else if (!(family == Family::B && k == n + 1)) {
    w[N - k] = -1;
  }
  return w;
}

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

using CellKey = std::pair<int, int>;

}  // namespace

std::vector<LayoutCell> build_layout(Family family, int rank) {
  if (family == Family::A) fail(ErrorCode::InvalidArgument, "the layout recipe is not defined for family A");
  const int n = rank;
  const int N = defining_dim(family, rank);
  const RootSystem rs = positive_roots(family, rank);

  // Step 1: Cartan generators down the diagonal, mirrored with a sign flip.
  std::map<CellKey, LayoutCell> cells;
  for (int k = 1; k <= N; ++k) {
    LayoutCell c{k, k};
    if (family == Family::B && k == n + 1) {
      c.kind = LayoutCell::Kind::Zero;
    } else {
      c.kind = LayoutCell::Kind::Cartan;
      c.cartan = k <= n ? k : N + 1 - k;
      c.sign = k <= n ? 1 : -1;
    }
    cells[{k, k}] = c;
  }

  // The display the recipe runs on; D drops row/column n+1.
  std::vector<int> shown;
  for (int k = 1; k <= N; ++k)
    if (!(family == Family::D && k == n + 1)) shown.push_back(k);

  // Step 2: simple roots down the first sub-diagonal of the display.
  std::vector<std::vector<int>> subdiag(shown.size() - 1);
  for (std::size_t p = 0; p + 1 < shown.size(); ++p) {
    IntVector diff = difference(weight(family, n, shown[p]), weight(family, n, shown[p + 1]));
    auto it = std::find(rs.simple.begin(), rs.simple.end(), diff);
    if (it == rs.simple.end())
      fail(ErrorCode::Consistency, "sub-diagonal cell (" + std::to_string(shown[p + 1]) + "," +
                                       std::to_string(shown[p]) + ") does not carry a simple root");
    subdiag[p] = {static_cast<int>(it - rs.simple.begin()) + 1};
  }

  // Step 3: every other lower cell gets the root whose label is the multiset
  // sum of the sub-diagonal segment it subtends, or zero.
  for (std::size_t p = 0; p < shown.size(); ++p) {
    std::vector<int> label;
    for (std::size_t q = p + 1; q < shown.size(); ++q) {
      label = merge_labels(label, subdiag[q - 1]);
      LayoutCell c{shown[q], shown[p]};
      if (rs.find_label(label) >= 0) {
        c.kind = LayoutCell::Kind::Ladder;
        c.label = label;
      }
      cells[{c.row, c.col}] = c;
    }
  }

  // D: reinflate the deleted row/column from the mirror image about the
  // antidiagonal, (i, j) <-> (N+1-j, N+1-i).
  if (family == Family::D) {
    const int m = n + 1;
    for (int k = 1; k <= N; ++k) {
      if (k == m) continue;
      CellKey key = k < m ? CellKey{m, k} : CellKey{k, m};
      CellKey mirror{N + 1 - key.second, N + 1 - key.first};
      LayoutCell c{key.first, key.second};
      auto it = cells.find(mirror);
      if (it != cells.end() && it->second.kind == LayoutCell::Kind::Ladder) {
        c.kind = LayoutCell::Kind::Ladder;
        c.label = it->second.label;
      }
      cells[key] = c;
    }
  }

  // Step 4: signs from x^T = -G x G^{-1}. The cell nearest the top-left
  // corner of each root keeps +1; its mirror partner takes the sign forced by
  // the constraint.
  const Matrix g = metric_form(family, rank);
  const Matrix gt = g.transpose();
  std::map<std::vector<int>, std::vector<CellKey>> by_label;
  for (const auto& [key, c] : cells)
    if (c.kind == LayoutCell::Kind::Ladder) by_label[c.label].push_back(key);
  for (auto& [label, keys] : by_label) {
    std::sort(keys.begin(), keys.end(), [](const CellKey& a, const CellKey& b) {
      return std::pair(a.first + a.second, a.first) < std::pair(b.first + b.second, b.first);
    });
    const CellKey first = keys.front();
    Matrix image = -(g * Matrix::unit(N, N, first.first - 1, first.second - 1) * gt);
    std::size_t pr = 0, pc = 0;
    Surd sigma;
    image.for_each([&](std::size_t r, std::size_t c, const Surd& v) {
      pr = r;
      pc = c;
      sigma = v;
    });
    CellKey partner{static_cast<int>(pc) + 1, static_cast<int>(pr) + 1};
    int forced = sigma.rational().sign();
    if (partner == first) {
      if (forced != 1 || keys.size() != 1)
        fail(ErrorCode::Consistency, "self-mirrored cell for root " + Root{label, {}}.label_string() +
                                         " is incompatible with the transpose rule");
    } else if (keys.size() != 2 || keys[1] != partner) {
      fail(ErrorCode::Consistency, "root " + Root{label, {}}.label_string() + " does not occupy a mirrored cell pair");
    } else {
      cells[partner].sign = forced;
    }
    // Step 5: a root owning a single cell needs sqrt(2) for Tr x x = 2.
    if (keys.size() == 1) cells[first].sqrt2 = true;
  }

  std::vector<LayoutCell> out;
  for (auto& [key, c] : cells) out.push_back(c);
  return out;
}

std::vector<std::vector<std::string>> reduced_display(int rank) {
  const int n = rank;
  const int N = 2 * n;
  auto layout = build_layout(Family::D, rank);
  std::vector<int> shown;
  for (int k = 1; k <= N; ++k)
    if (k != n + 1) shown.push_back(k);
  std::map<CellKey, std::string> text;
  for (const auto& c : layout)
    text[{c.row, c.col}] = c.kind == LayoutCell::Kind::Ladder ? Root{c.label, {}}.label_string()
                           : c.kind == LayoutCell::Kind::Cartan ? "x"
                                                                : "0";
  std::vector<std::vector<std::string>> out(shown.size());
  for (std::size_t i = 0; i < shown.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) out[i].push_back(text[{shown[i], shown[j]}]);
  return out;
}

namespace {

void check_basis_invariants(const RepBundle& rep) {
  const Matrix g = rep.metric;
  const Matrix gt = g.transpose();
  const std::size_t d = rep.basis.size();
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& x = rep.basis[i];
    if (x.adjoint() != x) fail(ErrorCode::Consistency, "x_" + std::to_string(i + 1) + " is not hermitian");
    if (!x.trace().is_zero()) fail(ErrorCode::Consistency, "x_" + std::to_string(i + 1) + " is not traceless");
    if (rep.family != Family::A && x.transpose() != -(g * x * gt))
      fail(ErrorCode::Consistency, "x_" + std::to_string(i + 1) + " violates the metric transpose rule");
    for (std::size_t j = i; j < d; ++j) {
      Surd t = trace_product(x, rep.basis[j]);
      if (t != Surd(i == j ? 2 : 0))
        fail(ErrorCode::Consistency,
             "Tr x_" + std::to_string(i + 1) + " x_" + std::to_string(j + 1) + " = " + t.to_string() + ", expected " +
                 (i == j ? "2" : "0"));
    }
  }
}

}  // namespace

RepBundle build_rep(Family family, int rank) {
  if (family == Family::A) fail(ErrorCode::InvalidArgument, "use gell_mann_rep for family A");
  const int n = rank;
  const int N = defining_dim(family, rank);
  RepBundle rep{family, rank, N, Rational(1), metric_form(family, rank), positive_roots(family, rank), {}, {}, {}, {},
                build_layout(family, rank)};

  for (int r = 1; r <= n; ++r) {
    Matrix h(N, N);
    for (int k = 1; k <= N; ++k) h.set(k - 1, k - 1, Surd(weight(family, n, k)[r - 1]));
    rep.cartan.push_back(h);
  }
  for (const auto& c : rep.layout)
    if (c.kind == LayoutCell::Kind::Cartan && rep.cartan[c.cartan - 1].at(c.row - 1, c.col - 1) != Surd(c.sign))
      fail(ErrorCode::Consistency, "diagonal cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                       ") disagrees with h_" + std::to_string(c.cartan));

  const Surd root2 = Surd::sqrt(2);
  rep.ladders.resize(rep.roots.positive.size(), Ladder{Matrix(N, N), Matrix(N, N)});
  for (const auto& c : rep.layout) {
    if (c.kind != LayoutCell::Kind::Ladder) continue;
    int a = rep.roots.find_label(c.label);
    Surd v = c.sqrt2 ? root2 : Surd(1);
    if (c.sign < 0) v = -v;
    rep.ladders[a].lower.set(c.row - 1, c.col - 1, v);
  }
  for (auto& l : rep.ladders) l.raise = l.lower.transpose();

  const Rational half(1, 2);
  for (int r = 0; r < n; ++r) {
    rep.basis.push_back(rep.cartan[r]);
    rep.basis_names.push_back("h" + std::to_string(r + 1));
  }
  // sqrt(2) e_{+-a} = u_a +- i v_a
  const Surd inv_root2 = root2 * Rational(half);
  for (std::size_t a = 0; a < rep.ladders.size(); ++a) {
    const auto& l = rep.ladders[a];
    rep.basis.push_back((l.raise + l.lower) * inv_root2);
    rep.basis.push_back((l.raise - l.lower) * (inv_root2 * -Surd::i()));
    std::string lbl = rep.roots.positive[a].label_string();
    rep.basis_names.push_back("u" + lbl);
    rep.basis_names.push_back("v" + lbl);
  }
  if (static_cast<int>(rep.basis.size()) != algebra_dim(family, rank))
    fail(ErrorCode::Consistency, "basis size does not match the algebra dimension");
  check_basis_invariants(rep);
  return rep;
}

RepBundle gell_mann_rep(int n) {
  if (n < 2) fail(ErrorCode::InvalidRank, "su(n) needs n >= 2");
  RepBundle rep{Family::A, n - 1, n, Rational(1, 2), Matrix::identity(n), positive_roots(Family::A, n - 1), {}, {}, {},
                {}, {}};
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j < k; ++j) {
      Matrix s(n, n), a(n, n);
      s.set(j - 1, k - 1, Surd(1));
      s.set(k - 1, j - 1, Surd(1));
      a.set(j - 1, k - 1, -Surd::i());
      a.set(k - 1, j - 1, Surd::i());
      rep.basis.push_back(s);
      rep.basis.push_back(a);
      rep.basis_names.push_back("s" + std::to_string(j) + std::to_string(k));
      rep.basis_names.push_back("a" + std::to_string(j) + std::to_string(k));
    }
    // sqrt(2/(k(k-1))) diag(1, ..., 1, -(k-1), 0, ...)
    Surd norm = Surd::sqrt(Rational(2, static_cast<std::int64_t>(k) * (k - 1)));
    Matrix d(n, n);
    for (int j = 1; j < k; ++j) d.set(j - 1, j - 1, norm);
    d.set(k - 1, k - 1, norm * Rational(-(k - 1)));
    rep.basis.push_back(d);
    rep.basis_names.push_back("d" + std::to_string(k));
    rep.cartan.push_back(d);
  }
  check_basis_invariants(rep);
  return rep;
}

RepBundle make_rep(Family family, int rank) {
  validate_rank(family, rank);
  return family == Family::A ? gell_mann_rep(rank + 1) : build_rep(family, rank);
}

Report check_cartan_weyl(const RepBundle& rep) {
  Report report;
  report.subject = std::string("cartan-weyl ") + family_letter(rep.family) + std::to_string(rep.rank);
  if (rep.family == Family::A) {
    report.expect("cartan-weyl", "Cartan-Weyl ladders are not built for the Gell-Mann basis", true, "skipped");
    return report;
  }
  const auto& roots = rep.roots.positive;
  const int n = rep.rank;

  ResidualTally cartan_action;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (int r = 0; r < n; ++r) {
      Surd w(roots[a].vector[r]);
      std::string where = "h" + std::to_string(r + 1) + ", e" + roots[a].label_string();
      cartan_action.add(commutator(rep.cartan[r], rep.ladders[a].raise) - rep.ladders[a].raise * w, where + " (+)");
      cartan_action.add(commutator(rep.cartan[r], rep.ladders[a].lower) + rep.ladders[a].lower * w, where + " (-)");
    }
  }
  cartan_action.commit(report, "cartan-action", "[h_r, e_{+-a}] = +-(r_a)_r e_{+-a}");

  ResidualTally pairing;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    Matrix rh(rep.dim_v, rep.dim_v);
    for (int r = 0; r < n; ++r) rh += rep.cartan[r] * Surd(roots[a].vector[r]);
    pairing.add(commutator(rep.ladders[a].raise, rep.ladders[a].lower) - rh, "e" + roots[a].label_string());
  }
  pairing.commit(report, "root-pairing", "[e_a, e_{-a}] = r_a . h");

  // Signed ladders: index s*(a+1) with s = +-1.
  auto ladder = [&](int s, std::size_t a) -> const Matrix& { return s > 0 ? rep.ladders[a].raise : rep.ladders[a].lower; };
  ResidualTally closure;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      for (int s : {1, -1}) {
        for (int t : {1, -1}) {
          if (a == b && s != t) continue;  // covered by root-pairing
          IntVector sum(n);
          for (int r = 0; r < n; ++r) sum[r] = s * roots[a].vector[r] + t * roots[b].vector[r];
          Matrix comm = commutator(ladder(s, a), ladder(t, b));
          std::string where = std::string(s > 0 ? "+" : "-") + roots[a].label_string() + "," + (t > 0 ? "+" : "-") +
                              roots[b].label_string();
          IntVector neg(n);
          for (int r = 0; r < n; ++r) neg[r] = -sum[r];
          int g = rep.roots.find(sum);
          int sg = 1;
          if (g < 0) {
            g = rep.roots.find(neg);
            sg = -1;
          }
          if (g < 0) {
            closure.add(comm, where + " (not a root)");
            continue;
          }
          const Matrix& target = ladder(sg, g);
          // Tr(e_g e_{-g}) = 2
          Surd coeff = trace_product(comm, ladder(-sg, g)) / Rational(2);
          if (coeff.is_zero()) {
            closure.add(Surd(1), where + " (vanishing coefficient)");
            continue;
          }
          closure.add(comm - target * coeff, where);
        }
      }
    }
  }
  closure.commit(report, "ladder-closure", "[e_{+-a}, e_{+-b}] is a nonzero multiple of e_{+-a+-b} iff that is a root");
  return report;
}

Report check_trace_transpose(const RepBundle& rep, unsigned seed) {
  Report report;
  report.subject = std::string("trace-transpose ") + family_letter(rep.family) + std::to_string(rep.rank);
  const std::size_t d = rep.basis.size();
  ResidualTally herm, trace, gram, transpose;
  const Matrix gt = rep.metric.transpose();
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& x = rep.basis[i];
    std::string where = rep.basis_names[i];
    herm.add(x.adjoint() - x, where);
    trace.add(x.trace(), where);
    if (rep.family != Family::A) transpose.add(x.transpose() + rep.metric * x * gt, where);
    for (std::size_t j = 0; j < d; ++j)
      gram.add(trace_product(x, rep.basis[j]) - Surd(i == j ? 2 : 0), where + "," + rep.basis_names[j]);
  }
  herm.commit(report, "hermitian", "x_i^dagger = x_i");
  trace.commit(report, "traceless", "Tr x_i = 0");
  gram.commit(report, "trace-orthonormal", "Tr x_i x_j = 2 delta_ij");
  if (rep.family != Family::A)
    transpose.commit(report, "metric-transpose", "x_i^T = -G x_i G^{-1}");

  RationalSampler sampler(seed);
  Matrix a(rep.dim_v, rep.dim_v);
  Rational sum_sq(0);
  for (std::size_t i = 0; i < d; ++i) {
    Rational c = sampler.next();
    sum_sq += c * c;
    a += rep.basis[i] * Surd(c);
  }
  report.expect_equal("random-combination-trace", "Tr A^2 = 2 sum a_i^2 for A = sum a_i x_i", trace_product(a, a),
                      Surd(sum_sq * Rational(2)));
  if (rep.family != Family::A)
    report.expect_zero("random-combination-transpose", "A^T = -G A G^{-1}", a.transpose() + rep.metric * a * gt);
  return report;
}

}  // namespace lieosc
