#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "lieosc/scalar.hpp"

namespace lieosc {

/// Row-compressed sparse matrix of Surd entries. Each row keeps its nonzero
/// entries sorted by column; exact zeros are never stored.
class Matrix {
 public:
  using Entry = std::pair<std::uint32_t, Surd>;
  using Row = std::vector<Entry>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Surd& s);
  /// Single nonzero entry (0-based).
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c, const Surd& v = Surd(1));

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Surd at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Surd& v);
  void add(std::size_t r, std::size_t c, const Surd& v);
  const Row& row(std::size_t r) const { return data_[r]; }

  std::size_t nnz() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Surd& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Surd& s) { return a *= s; }
  friend Matrix operator*(const Surd& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  Matrix operator-() const { return *this * Surd(-1); }

  Matrix transpose() const;
  Matrix adjoint() const;
  Matrix conj() const;
  Surd trace() const;

  /// Submatrix keeping all rows and the listed columns, in order.
  Matrix columns(std::span<const std::size_t> cols) const;
  /// Principal submatrix on the listed indices.
  Matrix block(std::span<const std::size_t> idx) const;
  /// Leading principal block of size n.
  Matrix leading(std::size_t n) const;

  /// Entry of largest modulus (zero when the matrix vanishes).
  Surd max_entry() const;

  /// Calls f(row, col, value) for every stored entry in row-major order.
  void for_each(const std::function<void(std::size_t, std::size_t, const Surd&)>& f) const;

 private:
  void check_same_shape(const Matrix& o, const char* op) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
/// Tr(a b) without forming the product.
Surd trace_product(const Matrix& a, const Matrix& b);

/// Lifts `op`, which acts on the tensor product of the factors listed in
/// `slots` (in that order), to the full product space with dimensions `dims`.
/// Composite indices are row-major: the first factor varies slowest.
Matrix embed(const Matrix& op, std::span<const std::size_t> dims, std::span<const std::size_t> slots);

/// Swap operator P on V (x) V: P (a (x) c) = c (x) a.
Matrix swap_operator(std::size_t n);

}  // namespace lieosc
