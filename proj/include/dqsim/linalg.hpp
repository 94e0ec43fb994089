#ifndef DQSIM_LINALG_HPP
#define DQSIM_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dqsim/errors.hpp"
#include "dqsim/field.hpp"

namespace dqsim {

class Vector {
 public:
  Vector(std::vector<Fq> entries, FieldSpec ctx) : entries_(std::move(entries)), ctx_(ctx) {
    for (const Fq& e : entries_)
      if (!(e.ctx() == ctx_)) throw ContextMismatch();
  }

  static Vector zeros(std::size_t dim, FieldSpec ctx) {
    return Vector(std::vector<Fq>(dim, Fq::zero(ctx)), ctx);
  }
  static Vector from_ints(std::vector<long long> vals, FieldSpec ctx) {
    std::vector<Fq> es;
    es.reserve(vals.size());
    for (long long v : vals) es.push_back(Fq(v, ctx));
    return Vector(std::move(es), ctx);
  }
  static Vector basis(std::size_t dim, std::size_t k, FieldSpec ctx) {
    Vector v = zeros(dim, ctx);
    v.entries_[k] = Fq::one(ctx);
    return v;
  }

  std::size_t dim() const { return entries_.size(); }
  const FieldSpec& ctx() const { return ctx_; }
  const Fq& operator[](std::size_t j) const { return entries_[j]; }
  Fq& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<Fq>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Fq& e) { return e.is_zero(); });
  }

  /// Indices with nonzero amplitude, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < entries_.size(); ++j)
      if (!entries_[j].is_zero()) out.push_back(j);
    return out;
  }

  friend Vector operator+(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch();
    Vector out = a;
    for (std::size_t j = 0; j < b.dim(); ++j) out.entries_[j] = out.entries_[j] + b.entries_[j];
    return out;
  }
  friend Vector operator*(const Fq& s, const Vector& v) {
    Vector out = v;
    for (Fq& e : out.entries_) e = s * e;
    return out;
  }
  friend bool operator==(const Vector& a, const Vector& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Fq> entries_;
  FieldSpec ctx_;
};

/// Hermitian dot product <a|b> = sum conj(a_j) b_j; over degree-1 fields
/// conjugation is the identity and this is the plain bilinear form.
inline Fq inner_product(const Vector& a, const Vector& b) {
  if (!(a.ctx() == b.ctx())) throw ContextMismatch();
  if (a.dim() != b.dim()) throw DimensionMismatch();
  Fq acc = Fq::zero(a.ctx());
  for (std::size_t j = 0; j < a.dim(); ++j) acc = acc + conj(a[j]) * b[j];
  return acc;
}

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<Fq> entries, FieldSpec ctx)
      : rows_(rows), cols_(cols), entries_(std::move(entries)), ctx_(ctx) {
    if (entries_.size() != rows * cols) throw DimensionMismatch();
    for (const Fq& e : entries_)
      if (!(e.ctx() == ctx_)) throw ContextMismatch();
  }

  static Matrix zeros(std::size_t rows, std::size_t cols, FieldSpec ctx) {
    return Matrix(rows, cols, std::vector<Fq>(rows * cols, Fq::zero(ctx)), ctx);
  }
  static Matrix identity(std::size_t n, FieldSpec ctx) {
    Matrix m = zeros(n, n, ctx);
    for (std::size_t j = 0; j < n; ++j) m.at(j, j) = Fq::one(ctx);
    return m;
  }
  /// 2x2 from symmetric-range integer entries, row-major.
  static Matrix from_ints(std::size_t rows, std::size_t cols, std::vector<long long> vals,
                          FieldSpec ctx) {
    std::vector<Fq> es;
    es.reserve(vals.size());
    for (long long v : vals) es.push_back(Fq(v, ctx));
    return Matrix(rows, cols, std::move(es), ctx);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& ctx() const { return ctx_; }
  const Fq& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Fq& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Fq>& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ctx_ == b.ctx_ &&
           a.entries_ == b.entries_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.ctx_ == b.ctx_)) throw ContextMismatch();
    if (a.cols_ != b.rows_) throw DimensionMismatch();
    Matrix out = zeros(a.rows_, b.cols_, a.ctx_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Fq& ark = a.at(r, k);
        if (ark.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          out.at(r, c) = out.at(r, c) + ark * b.at(k, c);
      }
    return out;
  }
  friend Matrix operator*(const Fq& s, const Matrix& m) {
    Matrix out = m;
    for (Fq& e : out.entries_) e = s * e;
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Fq> entries_;
  FieldSpec ctx_;
};

inline Vector apply(const Matrix& m, const Vector& v) {
  if (!(m.ctx() == v.ctx())) throw ContextMismatch();
  if (m.cols() != v.dim()) throw DimensionMismatch();
  Vector out = Vector::zeros(m.rows(), m.ctx());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = out[r] + m.at(r, c) * v[c];
  return out;
}

inline Matrix conjugate_transpose(const Matrix& m) {
  Matrix out = Matrix::zeros(m.cols(), m.rows(), m.ctx());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(c, r) = conj(m.at(r, c));
  return out;
}

/// Kronecker product, row-major block layout.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
  if (!(a.ctx() == b.ctx())) throw ContextMismatch();
  Matrix out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols(), a.ctx());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

inline Vector tensor(const Vector& a, const Vector& b) {
  if (!(a.ctx() == b.ctx())) throw ContextMismatch();
  Vector out = Vector::zeros(a.dim() * b.dim(), a.ctx());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t k = 0; k < b.dim(); ++k) out[j * b.dim() + k] = a[j] * b[k];
  return out;
}

/// Rank test by Gaussian elimination with exact field arithmetic.
inline bool is_invertible(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  Matrix w = m;
  const std::size_t n = w.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return false;
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(pivot, c), w.at(col, c));
    const Fq inv = inverse(w.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const Fq factor = w.at(r, col) * inv;
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < n; ++c)
        w.at(r, c) = w.at(r, c) - factor * w.at(col, c);
    }
  }
  return true;
}

inline bool is_unitary(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  return conjugate_transpose(m) * m == Matrix::identity(m.rows(), m.ctx());
}

inline bool is_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  return conjugate_transpose(m) == m;
}

/// Truth table of a classical f : {0,1}^n -> {0,1}. The counter records
/// black-box invocations at circuit level: one per application of U_f to
/// a full state, never per matrix entry.
struct OracleTable {
  std::size_t n = 0;
  std::vector<std::uint8_t> outputs;  // length 2^n, index x_1..x_n big-endian
  mutable long eval_count = 0;

  OracleTable(std::size_t arity, std::vector<std::uint8_t> table)
      : n(arity), outputs(std::move(table)) {
    if (outputs.size() != (std::size_t{1} << n)) throw DimensionMismatch();
  }

  bool operator()(std::size_t x) const { return outputs[x] != 0; }
  void record_evaluation() const { ++eval_count; }

  std::size_t true_count() const {
    std::size_t c = 0;
    for (auto b : outputs) c += (b != 0);
    return c;
  }
};

/// Permutation matrix for U_f |y>|x> = |y + f(x)>|x>. The y register is
/// the most significant index bit.
inline Matrix build_oracle(const OracleTable& f, FieldSpec ctx) {
  const std::size_t half = std::size_t{1} << f.n;
  const std::size_t dim = half << 1;
  Matrix u = Matrix::zeros(dim, dim, ctx);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const std::size_t y = idx >> f.n;
    const std::size_t x = idx & (half - 1);
    const std::size_t yy = y ^ (f(x) ? 1u : 0u);
    u.at(yy * half + x, idx) = Fq::one(ctx);
  }
  return u;
}

/// Apply U_f in place on a dense 2^{n+1} state and record one evaluation.
inline Vector apply_oracle(const OracleTable& f, const Vector& state) {
  const std::size_t half = std::size_t{1} << f.n;
  if (state.dim() != half * 2) throw DimensionMismatch();
  Vector out = state;
  for (std::size_t x = 0; x < half; ++x)
    if (f(x)) std::swap(out[x], out[half + x]);
  f.record_evaluation();
  return out;
}

}  // namespace dqsim

#endif
