#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieosc/definingrep.hpp"
#include "lieosc/report.hpp"
#include "lieosc/tensors.hpp"

namespace lieosc {

/// Occupation-number basis. Ordered by total occupation, then by occupation
/// vector in descending lexicographic order (mode 1 excited first), so the
/// states with total <= k always form a prefix of the basis.
struct FockSpace {
  enum class Kind { Bosonic, Fermionic };

  Kind kind = Kind::Bosonic;
  int modes = 0;         // physical modes; the Majorana mode is extra
  int cutoff = 0;        // bosonic: maximal total occupation
  bool majorana = false;  // fermionic: one auxiliary mode realizes c
  std::vector<std::vector<int>> basis;
  std::map<std::vector<int>, std::size_t> lookup;

  std::size_t dim() const { return basis.size(); }
  int total(std::size_t state) const;
  /// Index of an occupation vector, or -1.
  long find(const std::vector<int>& occ) const;
  /// Basis states with total occupation <= cutoff - depth (all states when fermionic).
  std::vector<std::size_t> interior(int depth) const;
  /// Basis states of total occupation exactly `level`.
  std::vector<std::size_t> level(int level) const;
  /// Parity of the total occupation, including the Majorana mode.
  int parity(std::size_t state) const { return total(state) & 1; }
};

/// Throws CutoffTooSmall below 4.
FockSpace bosonic_space(int modes, int cutoff);
FockSpace fermionic_space(int modes, bool majorana);

struct Ladders {
  std::vector<Matrix> create;   // a_mu^dagger / c_mu
  std::vector<Matrix> destroy;  // a_mu / pi_mu
  Matrix majorana;              // c, fermionic spaces with the flag only
};

/// Bosonic: a^dagger |m> = sqrt(m_mu + 1) |m + e_mu>, with components beyond
/// the cutoff dropped. Fermionic: sign (-1)^(occupied modes below mu); the
/// Majorana operator is (f + f^dagger)/sqrt(2) on the auxiliary last mode.
Ladders ladder_operators(const FockSpace& space);
/// Total number operator (physical modes only).
Matrix number_operator(const FockSpace& space);

struct OperatorRep {
  FockSpace space;
  Family family;
  int rank;
  Rational gamma{1};
  /// X_i indexed like RepBundle::basis.
  std::vector<Matrix> X;
  /// Identities quadratic in the X_i are exact on columns with total <= cutoff - depth.
  int interior_depth = 0;
  /// v_a v_b for the oscillator vector v of the construction, row-major in
  /// (a, b); empty for the su(n) oscillators.
  std::vector<Matrix> vv;
  /// Metric used in X = (1/2) v^T x (G v).
  Matrix metric;

  std::size_t dim() const { return space.dim(); }
  std::vector<std::size_t> interior(int depth) const { return space.interior(depth); }
  const Matrix& v_pair(std::size_t a, std::size_t b) const { return vv[a * metric.rows() + b]; }
};

/// (1/2) v^T m (G v) for an arbitrary dim V x dim V matrix m.
Matrix bilinear(const OperatorRep& op, const Matrix& m);

/// X_i = (1/2) v^T x_i (J v), v = (a_1^dag..a_n^dag, a_n..a_1); exact P X P on
/// the truncated space (built on cutoff + 2 internally).
OperatorRep metaplectic_rep(const RepBundle& rep, int cutoff);
/// X_i = (1/2) v^T x_i (M v), v = (c_1..c_n, pi_n..pi_1).
OperatorRep spinor_rep_d(const RepBundle& rep);
/// As above with v = (c_1..c_n, c, pi_n..pi_1) on the Majorana-doubled space.
OperatorRep spinor_rep_b(const RepBundle& rep);
/// X_i = gamma A^dag x_i A on n bosonic modes, x_i the Gell-Mann basis.
OperatorRep su_oscillator_rep(const RepBundle& rep, int cutoff);
/// Dispatches on the family: C metaplectic, B/D spinor, A su(n) oscillators.
OperatorRep oscillator_rep(const RepBundle& rep, int cutoff);

/// E_{+-a} = (1/2) v^T e_{+-a} (G v) for positive root a.
Matrix ladder_generator(const OperatorRep& op, const RepBundle& rep, std::size_t root, bool raise);

/// Restricts every X_i to the states of one parity.
struct ChiralityBlocks {
  std::vector<std::size_t> even, odd;
  OperatorRep even_rep, odd_rep;
};
/// Throws Consistency on a nonzero cross-parity entry.
ChiralityBlocks chirality_blocks(const OperatorRep& op);

/// [X_i, X_j] = i c_ijk X_k on the interior columns.
Report check_commutators(const OperatorRep& op, const StructureTensors& st);
/// E_{-a}^dagger = +-E_a: minus exactly for the noncompact roots of the
/// metaplectic rep, plus for everything else; n_+ commutative for C and D,
/// with a noncommuting witness for B; parity blocks invariant.
Report check_oscillator_structure(const OperatorRep& op, const RepBundle& rep);

}  // namespace lieosc
