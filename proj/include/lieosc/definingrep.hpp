#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieosc/matrix.hpp"
#include "lieosc/report.hpp"
#include "lieosc/rootsys.hpp"

namespace lieosc {

/// One cell of the schematic L-matrix of the defining representation.
/// Row/column are 1-based; only the diagonal and the lower triangle are laid
/// out, the upper triangle follows from e_{-a} = (e_{+a})^dagger.
struct LayoutCell {
  enum class Kind { Zero, Cartan, Ladder };

  int row = 0;
  int col = 0;
  Kind kind = Kind::Zero;
  int cartan = 0;           // 1-based H index for Kind::Cartan
  std::vector<int> label;   // root label for Kind::Ladder
  int sign = 1;
  bool sqrt2 = false;

  std::string to_string() const;
};

/// The recipe: Cartan generators on the diagonal, simple roots down the first
/// sub-diagonal, remaining cells from label sums of the sub-diagonal segment
/// they subtend, signs from the transpose constraint, sqrt(2) where a root
/// owns a single cell. D-type layouts are produced on the reduced display
/// (row/column n+1 removed) and reinflated by mirror symmetry.
std::vector<LayoutCell> build_layout(Family family, int rank);

/// Schematic labels of the D-type reduced display (row/column n+1 deleted):
/// entry [i][j] for i > j is the root label word or "0".
std::vector<std::vector<std::string>> reduced_display(int rank);

/// Metric form: J (antidiagonal, +1 top half, -1 bottom half) for C;
/// M (antidiagonal ones) for B and D; identity for A.
Matrix metric_form(Family family, int rank);

/// Dimension of the defining representation.
int defining_dim(Family family, int rank);

struct Ladder {
  Matrix raise;  // e_{+a}
  Matrix lower;  // e_{-a}
};

/// Defining-representation package.
struct RepBundle {
  Family family;
  int rank;
  int dim_v;
  /// Scale of the abstract generators in this representation (1/2 for A).
  Rational gamma{1};
  Matrix metric;
  RootSystem roots;
  std::vector<Matrix> cartan;         // h_1 .. h_n
  std::vector<Ladder> ladders;        // in positive-root order
  std::vector<Matrix> basis;          // x_i: h_1..h_n, then (u_a, v_a) pairs
  std::vector<std::string> basis_names;
  std::vector<LayoutCell> layout;

  int dim_g() const { return static_cast<int>(basis.size()); }
  /// Index of u_a in `basis` for positive root index a (v_a follows).
  int u_index(int root) const { return rank + 2 * root; }
};

/// Realizes the layout as matrices and checks hermiticity, tracelessness,
/// trace orthonormality, the metric transpose rule and the ladder relation.
/// Throws Consistency naming the offending pair on failure.
RepBundle build_rep(Family family, int rank);

/// su(n) defining representation from generalized Gell-Mann matrices, n >= 2
/// (family A, rank n-1). Ordered by size step k = 2..n: (sym(j,k), antisym(j,k))
/// for j < k, then the diagonal matrix of step k.
RepBundle gell_mann_rep(int n);

/// Builds the A bundle for rank r (su(r+1)), otherwise build_rep.
RepBundle make_rep(Family family, int rank);

/// Cartan-Weyl relations of the realized matrices: [h, e_{+-a}] = +-r_a e_{+-a},
/// [e_a, e_{-a}] = r_a . h, and [e_a, e_{+-b}] proportional to e_{a+-b},
/// nonzero exactly when a +- b is a root.
Report check_cartan_weyl(const RepBundle& rep);

/// Tr x_i x_j = 2 delta, hermiticity, tracelessness, metric transpose rule, and
/// the check with a random real combination A = sum a_i x_i.
Report check_trace_transpose(const RepBundle& rep, unsigned seed = 7);

}  // namespace lieosc
