#pragma once

#include <string>
#include <vector>

#include "lieosc/fock.hpp"

namespace lieosc {

/// L = sum_i x_i (x) X_i on V (x) H. Composite index a * dim_h + h (0-based).
struct LOperator {
  Matrix matrix;
  std::size_t dim_v = 0;
  std::size_t dim_h = 0;
  int interior_depth = 0;
  Family family = Family::C;
  int rank = 0;

  std::size_t dim() const { return dim_v * dim_h; }
  /// Composite columns (a, h) for every a and the listed quantum states h.
  std::vector<std::size_t> lift(const std::vector<std::size_t>& states) const;
};

LOperator build_L(const RepBundle& rep, const OperatorRep& op);

/// C: L_ab = (Jv)_a v_b - delta_ab / 2; so(N): L_ab = delta_ab / 2 - (Mv)_a v_b.
LOperator closed_form_L(const OperatorRep& op);

/// L^2 + p L + q = 0 with roots plus (the larger) and minus.
struct QuadraticSpec {
  Rational p, q;
  Rational plus, minus;
  std::string label;
};

/// C: p = n+1, q = (2n+1)/4. so(N): p = (N-2)/2, q = -(N-1)/4.
QuadraticSpec quadratic_spec(Family family, int rank);
/// su(n) on the level-lambda oscillator states: (L + 1 + lambda/n)(L + lambda/n - lambda) = 0.
QuadraticSpec quadratic_spec_su(int n, int level);

/// Residual of L^2 + p L + q on the given composite columns.
Matrix quadratic_residual(const LOperator& L, const QuadraticSpec& spec, const std::vector<std::size_t>& cols);

/// A set of composite states that L maps into itself exactly.
struct InvariantBlock {
  std::string name;
  std::vector<std::size_t> states;  // composite indices, sorted
};

/// Fermionic: the two parity halves of H, tensored with V. su(n): one block per
/// level 1..cutoff. Metaplectic: per parity, the union of the total-weight
/// spaces that lie entirely within the quadratic interior.
std::vector<InvariantBlock> invariant_blocks(const LOperator& L, const RepBundle& rep, const OperatorRep& op);

struct EigenStructure {
  Rational plus, minus;
  std::size_t mult_plus = 0, mult_minus = 0;
  std::size_t dim = 0;
  Surd trace;
  /// dim - rank(L - lambda) in floating point at tolerance 1e-8.
  std::size_t float_mult_plus = 0, float_mult_minus = 0;
};

/// Multiplicities from m+ + m- = dim, plus m+ + minus m- = Tr L on the block.
/// Throws Consistency when the block is not invariant, the quadratic fails on
/// it, or the trace system has no nonnegative integer solution.
EigenStructure eigen_structure(const LOperator& L, const QuadraticSpec& spec, const InvariantBlock& block);

/// Quadratic relation, closed form, trace of L and the eigen structure for every
/// invariant block.
Report check_quadratic(const RepBundle& rep, const OperatorRep& op);

/// Quadratic Casimir of the oscillator rep, the decomposition of C_2(V (x) H),
/// su(n) level values of C_2 and C_3, and the quartic contraction for C.
Report casimir_checks(const RepBundle& rep, const OperatorRep& op, const StructureTensors& st, const LOperator& L);

/// d_ija X_i X_j = 0 and i c_ijk X_i X_j = -2(n+1) X_k for the metaplectic rep;
/// su(n): d_ijk X_i X_j = ((n + 2 lambda)(n - 2)/(2n)) X_k per level; the c law
/// i c_ijk X_i X_j = -(c_ijl c_ijk / 2) X_k for every family.
Report operator_product_laws(const RepBundle& rep, const OperatorRep& op, const StructureTensors& st);

/// Exact value of (1/3) d_ika d_jla X_i X_j X_k X_l on the vacuum (metaplectic
/// rep, cutoff >= 8), equal to the symmetrized quartic since d_ija X_i X_j = 0.
/// Also checks that the operator is scalar on the columns with depth 6. The
/// asserted value is (1/3)(n^2-1)(n+2)(2n+1), derived from the product laws;
/// the detail records the 2/3-prefactor closed form for comparison.
Report quartic_contraction(const OperatorRep& op, const StructureTensors& st);

}  // namespace lieosc
