#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lieosc/definingrep.hpp"
#include "lieosc/report.hpp"

namespace lieosc {

/// Sparse tensor of rank <= 4 with Surd entries. Exact zeros are never stored;
/// iteration order is lexicographic in the index tuple.
class SparseTensor {
 public:
  static constexpr std::size_t kMaxRank = 4;
  using Index = std::array<std::uint32_t, kMaxRank>;

  SparseTensor() = default;
  explicit SparseTensor(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }

  Surd at(const Index& idx) const;
  Surd at(std::initializer_list<std::uint32_t> idx) const;
  void set(const Index& idx, const Surd& v);
  void add(const Index& idx, const Surd& v);

  const std::map<Index, Surd>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Surd max_entry() const;

  SparseTensor& add_scaled(const SparseTensor& o, const Surd& s);
  SparseTensor operator-(const SparseTensor& o) const;
  SparseTensor operator*(const Surd& s) const;

 private:
  std::vector<std::size_t> dims_;
  std::map<Index, Surd> entries_;
};

/// Index-letter contraction: letters shared by both operands and absent from
/// `out` are summed; a letter repeated inside one operand selects its
/// diagonal. contract(c, "ijk", c, "ijl", "kl") is c_ijk c_ijl.
SparseTensor contract(const SparseTensor& a, std::string_view la, const SparseTensor& b, std::string_view lb,
                      std::string_view out);
/// Single-operand version: permutation, diagonal selection and partial sums.
SparseTensor reduce(const SparseTensor& a, std::string_view la, std::string_view out);
/// k * delta_ij on an n x n index range.
SparseTensor delta(std::size_t n, const Surd& k = Surd(1));

struct CompletionBasis {
  std::vector<Matrix> y;
  std::vector<std::string> names;
  std::size_t count() const { return y.size(); }
};

/// Orthonormal completion y_a of the x_i to all traceless hermitian matrices
/// with G y G^{-1} = y^T. Empty for family A.
CompletionBasis complete_basis(const RepBundle& rep);
/// (2n+1)(n-1) for C, (N-1)(N+2)/2 for so(N), 0 for A.
std::size_t expected_completion_count(Family family, int rank);

struct StructureTensors {
  Family family;
  int rank;
  int dim_v;
  std::size_t dim_x;
  std::size_t dim_y;
  /// 2/dim V: the identity coefficient in the symmetric product laws.
  Rational trace_coeff;
  SparseTensor c;      // c_ijk, [X_i, X_j] = i c_ijk X_k
  SparseTensor d_xy;   // d_ija
  SparseTensor h;      // h_iab
  SparseTensor d_yyy;  // d_abg
  SparseTensor d_xxx;  // su(n) only: symmetric d_ijk of the Gell-Mann basis
};

/// c_ijk = -(i gamma / 2) Tr [x_i, x_j] x_k, d_ija = Tr x_i x_j y_a,
/// h_iab = -i Tr x_i y_a y_b, d_abg = Tr y_a y_b y_g; for su(n) additionally
/// d_ijk = (1/4) Tr {x_i, x_j} x_k. Throws Consistency on complex entries.
StructureTensors structure_tensors(const RepBundle& rep, const CompletionBasis& comp);

/// The product laws for x x, x y and y y reconstructed from the tables.
Report verify_product_laws(const RepBundle& rep, const CompletionBasis& comp, const StructureTensors& st);

/// sum x_i (x) x_i = P - K and sum y (x) y = P + K - (2/N) I, K = vec(G) vec(G)^T;
/// su(n): sum x (x) x = 2P - (2/n) I.
Report verify_completeness(const RepBundle& rep, const CompletionBasis& comp);

/// Casimir sums, sandwich identities, quadratic tensor contractions, the
/// reconstruction of y from d x x, cubic contractions and the c-c expansion.
Report verify_identities(const RepBundle& rep, const CompletionBasis& comp, const StructureTensors& st);

/// Closed-form contraction constants of both families, one entry per identity.
struct IdentityConstant {
  std::string identity;
  Rational (*symplectic)(Rational n);
  Rational (*orthogonal)(Rational N);
};
const std::vector<IdentityConstant>& identity_constants();
/// Substituting 2n -> -N in every symplectic constant gives minus the
/// orthogonal one; checked at N = 3..14, which fixes the rational functions.
Report check_duality();

/// v_ijkl = (1/2) Tr x_(i x_j x_k x_l), unit-weight symmetrization.
SparseTensor v_tensor_trace(const RepBundle& rep);
/// v_ijkl = (2/N) delta_(ij delta_kl) + (1/4) d_a(ij d_kl)a.
SparseTensor v_tensor_closed(const StructureTensors& st);
Report check_v_tensor(const RepBundle& rep, const StructureTensors& st);

/// d_abg d_(ij^a d_kl^b d_pq)^g with unit-weight symmetrization over the six
/// lower indices, evaluated for one tuple.
Surd sextic_component(const StructureTensors& st, const std::array<std::size_t, 6>& idx);

struct DerivedReps {
  std::vector<Matrix> adjoint;  // (F_i)_jk = -i c_ijk
  std::vector<Matrix> h_rep;    // (R_i)_ab = -i h_iab
};
DerivedReps derived_reps(const StructureTensors& st);
/// Commutators of F and R, and their Casimirs together with that of V.
Report check_derived_reps(const RepBundle& rep, const StructureTensors& st, const DerivedReps& dr);

}  // namespace lieosc
