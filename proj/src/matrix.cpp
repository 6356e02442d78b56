#include "lieosc/matrix.hpp"

#include <algorithm>
#include <string>

namespace lieosc {

Matrix Matrix::identity(std::size_t n) { return scalar(n, Surd(1)); }

Matrix Matrix::scalar(std::size_t n, const Surd& s) {
  Matrix m(n, n);
  if (s.is_zero()) return m;
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), s);
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c, const Surd& v) {
  Matrix m(rows, cols);
  m.set(r, c, v);
  return m;
}

Surd Matrix::at(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return {};
}

void Matrix::set(std::size_t r, std::size_t c, const Surd& v) {
  if (r >= rows_ || c >= cols_) fail(ErrorCode::DimensionMismatch, "matrix index out of range");
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    row.insert(it, Entry(static_cast<std::uint32_t>(c), v));
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Surd& v) {
  if (v.is_zero()) return;
  if (r >= rows_ || c >= cols_) fail(ErrorCode::DimensionMismatch, "matrix index out of range");
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, Entry(static_cast<std::uint32_t>(c), v));
  }
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

void Matrix::check_same_shape(const Matrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::DimensionMismatch, std::string("shape mismatch in matrix ") + op + ": " + std::to_string(rows_) + "x" +
                                           std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                                           std::to_string(o.cols_));
}

namespace {

// Merges two sorted rows, a + sign*b.
Matrix::Row merge_rows(const Matrix::Row& a, const Matrix::Row& b, bool subtract) {
  Matrix::Row out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? -j->second : j->second);
      ++j;
    } else {
      Surd v = subtract ? i->second - j->second : i->second + j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same_shape(o, "addition");
  for (std::size_t r = 0; r < rows_; ++r)
    if (!o.data_[r].empty()) data_[r] = merge_rows(data_[r], o.data_[r], false);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_same_shape(o, "subtraction");
  for (std::size_t r = 0; r < rows_; ++r)
    if (!o.data_[r].empty()) data_[r] = merge_rows(data_[r], o.data_[r], true);
  return *this;
}

Matrix& Matrix::operator*=(const Surd& s) {
  if (s.is_zero()) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_)
    for (auto& e : r) e.second = e.second * s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "shape mismatch in matrix product: " + std::to_string(a.rows_) + "x" +
                                           std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                           std::to_string(b.cols_));
  Matrix out(a.rows_, b.cols_);
  std::vector<Surd> acc(b.cols_);
  std::vector<char> used(b.cols_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    touched.clear();
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) {
        if (!used[c]) {
          used[c] = 1;
          touched.push_back(c);
          acc[c] = av * bv;
        } else {
          acc[c] += av * bv;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    Matrix::Row& row = out.data_[r];
    for (auto c : touched) {
      if (!acc[c].is_zero()) row.emplace_back(c, std::move(acc[c]));
      acc[c] = Surd();
      used[c] = 0;
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(static_cast<std::uint32_t>(r), v);
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(static_cast<std::uint32_t>(r), v.conj());
  return out;
}

Matrix Matrix::conj() const {
  Matrix out(*this);
  for (auto& r : out.data_)
    for (auto& e : r) e.second = e.second.conj();
  return out;
}

Surd Matrix::trace() const {
  Surd t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::columns(std::span<const std::size_t> cols) const {
  std::vector<long> map(cols_, -1);
  for (std::size_t j = 0; j < cols.size(); ++j) map.at(cols[j]) = static_cast<long>(j);
  Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r])
      if (map[c] >= 0) out.data_[r].emplace_back(static_cast<std::uint32_t>(map[c]), v);
    std::sort(out.data_[r].begin(), out.data_[r].end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  }
  return out;
}

Matrix Matrix::block(std::span<const std::size_t> idx) const {
  std::vector<long> map(cols_, -1);
  for (std::size_t j = 0; j < idx.size(); ++j) map.at(idx[j]) = static_cast<long>(j);
  Matrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (const auto& [c, v] : data_.at(idx[i]))
      if (map[c] >= 0) out.data_[i].emplace_back(static_cast<std::uint32_t>(map[c]), v);
    std::sort(out.data_[i].begin(), out.data_[i].end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  }
  return out;
}

Matrix Matrix::leading(std::size_t n) const {
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& e : data_.at(r))
      if (e.first < n) out.data_[r].push_back(e);
  return out;
}

Surd Matrix::max_entry() const {
  Surd best;
  double mag = -1.0;
  for (const auto& r : data_)
    for (const auto& e : r) {
      double m = e.second.magnitude();
      if (m > mag) {
        mag = m;
        best = e.second;
      }
    }
  return best;
}

void Matrix::for_each(const std::function<void(std::size_t, std::size_t, const Surd&)>& f) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) f(r, c, v);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t br = 0; br < b.rows(); ++br) {
      std::size_t r = ar * b.rows() + br;
      for (const auto& [ac, av] : a.row(ar))
        for (const auto& [bc, bv] : b.row(br)) out.set(r, ac * b.cols() + bc, av * bv);
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Surd trace_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) fail(ErrorCode::DimensionMismatch, "shape mismatch in trace_product");
  Surd t;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, v] : a.row(r)) {
      Surd w = b.at(k, r);
      if (!w.is_zero()) t += v * w;
    }
  return t;
}

Matrix embed(const Matrix& op, std::span<const std::size_t> dims, std::span<const std::size_t> slots) {
  const std::size_t nf = dims.size();
  std::vector<bool> in_op(nf, false);
  std::size_t op_dim = 1;
  for (auto s : slots) {
    if (s >= nf || in_op[s]) fail(ErrorCode::DimensionMismatch, "invalid slot list in embed");
    in_op[s] = true;
    op_dim *= dims[s];
  }
  if (op.rows() != op_dim || op.cols() != op_dim)
    fail(ErrorCode::DimensionMismatch, "operator dimension does not match embedded factors");

  std::vector<std::size_t> stride(nf, 1);
  for (std::size_t f = nf; f-- > 1;) stride[f - 1] = stride[f] * dims[f];
  const std::size_t total = nf ? stride[0] * dims[0] : 1;

  // Offsets contributed by the operator's own factors for each local index.
  auto local_offsets = [&]() {
    std::vector<std::size_t> off(op_dim, 0);
    for (std::size_t idx = 0; idx < op_dim; ++idx) {
      std::size_t rem = idx;
      for (std::size_t k = slots.size(); k-- > 0;) {
        std::size_t s = slots[k];
        off[idx] += (rem % dims[s]) * stride[s];
        rem /= dims[s];
      }
    }
    return off;
  }();

  std::vector<std::size_t> rest;
  for (std::size_t f = 0; f < nf; ++f)
    if (!in_op[f]) rest.push_back(f);
  std::size_t rest_dim = 1;
  for (auto f : rest) rest_dim *= dims[f];
  std::vector<std::size_t> rest_offsets(rest_dim, 0);
  for (std::size_t idx = 0; idx < rest_dim; ++idx) {
    std::size_t rem = idx;
    for (std::size_t k = rest.size(); k-- > 0;) {
      rest_offsets[idx] += (rem % dims[rest[k]]) * stride[rest[k]];
      rem /= dims[rest[k]];
    }
  }

  Matrix out(total, total);
  for (std::size_t r = 0; r < op_dim; ++r)
    for (const auto& [c, v] : op.row(r))
      for (auto base : rest_offsets) out.add(base + local_offsets[r], base + local_offsets[c], v);
  return out;
}

Matrix swap_operator(std::size_t n) {
  Matrix p(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) p.set(a * n + c, c * n + a, Surd(1));
  return p;
}

}  // namespace lieosc
