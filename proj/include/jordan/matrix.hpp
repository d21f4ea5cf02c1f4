#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jordan/ring.hpp"

namespace jordan {

using Vector = std::vector<Element>;

Vector zero_vector(const RingPtr& ring, std::size_t n);
Vector basis_vector(const RingPtr& ring, std::size_t n, std::size_t i);

// Dense row-major matrix over an exact ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingPtr& ring, std::size_t n);
  static Matrix scalar(const Element& value, std::size_t n);
  static Matrix from_ints(const RingPtr& ring, const std::vector<std::vector<long long>>& rows);
  static Matrix from_rows(const RingPtr& ring, const std::vector<Vector>& rows);
  static Matrix from_codes(const RingPtr& ring, std::size_t rows, std::size_t cols,
                           std::span<const std::uint32_t> codes);
  static Matrix diagonal(const Vector& entries);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Element>& entries() const { return entries_; }

  Matrix transpose() const;
  Vector column(std::size_t j) const;
  Vector apply(const Vector& x) const;
  Element trace() const;
  bool is_zero() const;
  bool is_identity() const;
  std::vector<std::uint32_t> codes() const;  // finite rings only

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Element& s, const Matrix& a);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator<(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

Element det(const Matrix& m);
Matrix adjugate(const Matrix& m);
Matrix inverse(const Matrix& m);  // NotInvertible
bool is_invertible(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);

// Linear maps on the row-major matrix-unit basis of M_{rows x cols}.
Matrix left_mult_map(const Matrix& a, std::size_t cols);   // X -> aX
Matrix right_mult_map(const Matrix& b, std::size_t rows);  // X -> Xb
Matrix transpose_map(const RingPtr& ring, std::size_t rows, std::size_t cols);  // M_{r,c} -> M_{c,r}
Vector flatten(const Matrix& x);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

// Nondegenerate symmetric bilinear form b(x, y) = x^T G y.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);  // DegenerateForm
  static BilinearForm standard(const RingPtr& ring, std::size_t n);

  const Matrix& gram() const { return gram_; }
  const RingPtr& ring() const { return gram_.ring(); }
  std::size_t dim() const { return gram_.rows(); }

  Element operator()(const Vector& x, const Vector& y) const;
  Element quadratic(const Vector& x) const;  // q(x) = b(x, x) / 2

  // 1 + b: Gram [1] (+) G, the extension to F1 (+) V.
  BilinearForm unit_extension() const;
  BilinearForm extend_scalars(const RingPtr& ring) const;

 private:
  Matrix gram_;
};

// m with a^T G a = m G when m is a unit; nullopt otherwise.
std::optional<Element> similitude_multiplier(const Matrix& a, const BilinearForm& form);

// |GL_n(R)| computed from the ring structure (no enumeration).
std::uint64_t gl_order(std::size_t n, const RingPtr& ring);

// Invertible n x n matrices in lexicographic entry order (entry (0,0) most
// significant, element codes as digits). The callback may return false to stop.
void for_each_gl(std::size_t n, const RingPtr& ring,
                 const std::function<bool(const Matrix&)>& visit);
std::vector<Matrix> enumerate_gl(std::size_t n, const RingPtr& ring);
std::vector<Matrix> enumerate_go(const BilinearForm& form);
std::vector<Matrix> enumerate_o(const BilinearForm& form);

}  // namespace jordan
