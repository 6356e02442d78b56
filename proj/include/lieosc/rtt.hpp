#pragma once

#include <cstdint>
#include <vector>

#include "lieosc/loper.hpp"

namespace lieosc {

/// R(u) = u + eta P - k K on V (x) V. K_{ac,bd} = G_ac G_bd with G = J for C
/// and M for so(N); k = u eta / (eta (n+1) + u) for C, u eta / (eta (N-2)/2 + u)
/// for so(N). Family A uses u + eta P.
struct RMatrix {
  Matrix matrix;
  Matrix P;
  Matrix K;
  Rational u, eta;
  Rational k;  // coefficient of -K
  Family family = Family::C;
  int rank = 0;
  std::size_t dim_v = 0;
};

/// Throws Pole when the denominator of k vanishes.
RMatrix r_matrix(const RepBundle& rep, const Rational& u, const Rational& eta);
/// P^2 = 1, P K = -K (C) or K (so(N)), K^2 = dim V K.
Report check_r_algebra(const RepBundle& rep);

/// Coefficients of R = a 1 (x) 1 + b x_i (x) x_i + c y_a (x) y_a.
struct InvariantForm {
  Rational a, b, c;
};
/// Solved from the trace Gram system, then checked entrywise. Throws
/// Consistency when the residual is nonzero; FamilyMismatch for A.
InvariantForm invariant_form(const RMatrix& R, const RepBundle& rep, const CompletionBasis& comp);

/// R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) on V (x) V (x) V.
Report check_ybe(const RepBundle& rep, const Rational& u, const Rational& v, const Rational& eta);
/// Seeded rational samples avoiding poles.
Report check_ybe_samples(const RepBundle& rep, int samples, std::uint64_t seed);

/// T(u) = u + eta L on V (x) H.
struct TOperator {
  Matrix matrix;
  std::size_t dim_v = 0;
  std::size_t dim_h = 0;
  Rational u, eta;
};
TOperator build_T(const LOperator& L, const Rational& u, const Rational& eta);

/// Product T_1(u) T_2(u) ... in the auxiliary space, acting on V (x) H_1 (x) H_2 (x) ...
TOperator monodromy(const std::vector<LOperator>& Ls, const Rational& u, const Rational& eta);

/// R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v) on V (x) V (x) H, on the
/// composite columns whose quantum index lies in `states` (all when empty).
Report check_rtt(const RepBundle& rep, const std::vector<LOperator>& Ls, const Rational& u, const Rational& v,
                 const Rational& eta, const std::vector<std::size_t>& states = {});

/// Quantum states for the RTT check of one site: interior columns with depth 4
/// for a truncated bosonic space, everything otherwise.
std::vector<std::size_t> rtt_states(const OperatorRep& op);
/// The same for a chain of identical sites: every site within its own contract.
std::vector<std::size_t> chain_states(const OperatorRep& op, int sites);

}  // namespace lieosc
