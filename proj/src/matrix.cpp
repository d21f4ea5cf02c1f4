#include "jordan/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kernel.hpp"

namespace jordan {

namespace {

void require_same(const Matrix& a, const Matrix& b, const char* what) {
  if (!same_ring(a.ring(), b.ring())) {
    throw Error(ErrorKind::IncompatibleRings, std::string(what) + ": matrices over different rings");
  }
}

// Matrices whose entries range over a scan of at most this many candidates.
constexpr std::uint64_t kScanCap = 1ull << 34;

}  // namespace

Vector zero_vector(const RingPtr& ring, std::size_t n) { return Vector(n, ring->zero()); }

Vector basis_vector(const RingPtr& ring, std::size_t n, std::size_t i) {
  Vector v = zero_vector(ring, n);
  v.at(i) = ring->one();
  return v;
}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw Error(ErrorKind::BadInput, "matrix without a ring");
  entries_.assign(rows * cols, ring_->zero());
}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
  return m;
}

Matrix Matrix::scalar(const Element& value, std::size_t n) {
  Matrix m(value.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

Matrix Matrix::from_ints(const RingPtr& ring, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring->from_integer(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(const RingPtr& ring, const std::vector<Vector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!same_ring(rows[i][j].ring(), ring)) throw Error(ErrorKind::IncompatibleRings, "entry ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_codes(const RingPtr& ring, std::size_t rows, std::size_t cols,
                          std::span<const std::uint32_t> codes) {
  if (codes.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "code array size");
  Matrix m(ring, rows, cols);
  for (std::size_t k = 0; k < codes.size(); ++k) m.entries_[k] = ring->from_code(codes[k]);
  return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
  if (entries.empty()) throw Error(ErrorKind::BadDims, "empty diagonal");
  Matrix m(entries[0].ring(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size");
  Vector y = zero_vector(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Element& a = (*this)(i, j);
      if (!a.is_zero() && !x[j].is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

Element Matrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
  Element t = ring_->zero();
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(ring_, rows_); }

std::vector<std::uint32_t> Matrix::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const Element& e : entries_) out.push_back(static_cast<std::uint32_t>(e.code()));
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a, b, "sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "sum shapes");
  Matrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.entries_) e = -e;
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a, b, "product");
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "product shapes");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Element& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Element& y = b(l, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix operator*(const Element& s, const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.entries_) e = s * e;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_ring(a.ring_, b.ring_) &&
         a.entries_ == b.entries_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).str();
    out << "]";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

Element det_leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Element total = m.ring()->zero();
  do {
    // sign from the inversion count
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Element term = m.ring()->one();
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    if (term.is_zero()) continue;
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Fraction-free elimination over a field (Bareiss with row pivoting).
Element det_bareiss(Matrix m) {
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  Element sign = ring->one();
  Element prev = ring->one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return ring->zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    const Element prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) * prev_inv;
      }
      m(i, k) = ring->zero();
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Division-free characteristic polynomial (Berkowitz); returns det.
Element det_berkowitz(const Matrix& m) {
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  // coefficients of det(xI - A_r), highest degree first
  std::vector<Element> c = {ring->one(), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // A_r = leading r x r block, s = column r (rows < r), row = row r (cols < r)
    std::vector<Element> q;
    q.push_back(ring->one());
    q.push_back(-m(r, r));
    Vector power(r);
    for (std::size_t i = 0; i < r; ++i) power[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Element dot = ring->zero();
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * power[i];
      q.push_back(-dot);
      if (k + 1 < r) {
        Vector next = zero_vector(ring, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * power[j];
        power = std::move(next);
      }
    }
    std::vector<Element> next(r + 2, ring->zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) next[i] += q[i - j] * c[j];
    c = std::move(next);
  }
  return n % 2 == 0 ? c[n] : -c[n];
}

Matrix minor_matrix(const Matrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.rows();
  Matrix out(m.ring(), n - 1, n - 1);
  for (std::size_t i = 0, a = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, b = 0; j < n; ++j) {
      if (j == col) continue;
      out(a, b++) = m(i, j);
    }
    ++a;
  }
  return out;
}

}  // namespace

Element det(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return m.ring()->one();
  if (m.rows() <= 4) return det_leibniz(m);
  if (m.ring()->is_field()) return det_bareiss(m);
  return det_berkowitz(m);
}

Matrix adjugate(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix adj(m.ring(), n, n);
  if (n == 1) {
    adj(0, 0) = m.ring()->one();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element cof = det(minor_matrix(m, i, j));
      adj(j, i) = (i + j) % 2 ? -cof : cof;
    }
  }
  return adj;
}

bool is_invertible(const Matrix& m) { return m.is_square() && det(m).is_unit(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  if (!ring->is_field()) {
    Element d = det(m);
    if (!d.is_unit()) throw Error(ErrorKind::NotInvertible, "determinant " + d.str() + " is not a unit");
    return d.inverse() * adjugate(m);
  }
  // Gauss-Jordan over a field.
  Matrix a = m;
  Matrix inv = Matrix::identity(ring, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::NotInvertible, "singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const Element pivot_inv = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= pivot_inv;
      inv(k, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Element f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same(a, b, "kron");
  Matrix k(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

// (aX)_{ij} = sum_k a_ik X_kj, so the map is a (x) I.
Matrix left_mult_map(const Matrix& a, std::size_t cols) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "left multiplier must be square");
  return kron(a, Matrix::identity(a.ring(), cols));
}

// (Xb)_{ij} = sum_k X_ik b_kj, so the map is I (x) b^T.
Matrix right_mult_map(const Matrix& b, std::size_t rows) {
  if (!b.is_square()) throw Error(ErrorKind::ShapeMismatch, "right multiplier must be square");
  return kron(Matrix::identity(b.ring(), rows), b.transpose());
}

Matrix transpose_map(const RingPtr& ring, std::size_t rows, std::size_t cols) {
  Matrix t(ring, rows * cols, rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j * rows + i, i * cols + j) = ring->one();
  return t;
}

Vector flatten(const Matrix& x) { return x.entries(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols || v.empty()) throw Error(ErrorKind::ShapeMismatch, "unflatten size");
  return Matrix::from_rows(v[0].ring(), [&] {
    std::vector<Vector> r(rows);
    for (std::size_t i = 0; i < rows; ++i) r[i].assign(v.begin() + i * cols, v.begin() + (i + 1) * cols);
    return r;
  }());
}

// ---------------------------------------------------------------------------
// Bilinear forms

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw Error(ErrorKind::DegenerateForm, "Gram matrix must be square");
  if (!(gram_ == gram_.transpose())) throw Error(ErrorKind::DegenerateForm, "Gram matrix is not symmetric");
  if (!is_invertible(gram_)) throw Error(ErrorKind::DegenerateForm, "Gram matrix is not invertible");
}

BilinearForm BilinearForm::standard(const RingPtr& ring, std::size_t n) {
  return BilinearForm(Matrix::identity(ring, n));
}

Element BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::ShapeMismatch, "form argument size");
  Vector gy = gram_.apply(y);
  Element s = ring()->zero();
  for (std::size_t i = 0; i < dim(); ++i) s += x[i] * gy[i];
  return s;
}

Element BilinearForm::quadratic(const Vector& x) const {
  return ring()->from_rational(Rational(1, 2)) * (*this)(x, x);
}

BilinearForm BilinearForm::unit_extension() const {
  Matrix g(ring(), dim() + 1, dim() + 1);
  g(0, 0) = ring()->one();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g(i + 1, j + 1) = gram_(i, j);
  return BilinearForm(std::move(g));
}

BilinearForm BilinearForm::extend_scalars(const RingPtr& target) const {
  Matrix g(target, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g(i, j) = embed(gram_(i, j), target);
  return BilinearForm(std::move(g));
}

std::optional<Element> similitude_multiplier(const Matrix& a, const BilinearForm& form) {
  if (!a.is_square() || a.rows() != form.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "similitude size does not match the form");
  }
  const Matrix lhs = a.transpose() * form.gram() * a;
  const Matrix& g = form.gram();
  // m is read off a unit entry of G; every entry must then agree.
  for (std::size_t k = 0; k < g.entries().size(); ++k) {
    if (!g.entries()[k].is_unit()) continue;
    const Element m = lhs.entries()[k] * g.entries()[k].inverse();
    if (!m.is_unit()) return std::nullopt;
    if (lhs == m * g) return m;
    return std::nullopt;
  }
  // No unit Gram entry (possible over non-local rings): fall back to G^{-1}.
  const Matrix ratio = lhs * inverse(g);
  const Element m = ratio(0, 0);
  if (m.is_unit() && ratio == Matrix::scalar(m, g.rows())) return m;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t gl_order(std::size_t n, const RingPtr& ring) {
  constexpr std::uint64_t kCap = ~0ull;
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kCap / a) return kCap;
    return a * b;
  };
  switch (ring->kind()) {
    case RingKind::Rationals:
      throw Error(ErrorKind::NonEnumerableRing, "GL_n(Q) is infinite");
    case RingKind::PrimeField: {
      const std::uint64_t q = ring->modulus();
      const std::uint64_t qn = detail::checked_power(q, n, kCap - 1);
      std::uint64_t order = 1;
      std::uint64_t qi = 1;
      for (std::size_t i = 0; i < n; ++i) {
        order = sat_mul(order, qn - qi);
        qi = sat_mul(qi, q);
      }
      return order;
    }
    case RingKind::Product:
      return sat_mul(gl_order(n, ring->first()), gl_order(n, ring->second()));
    case RingKind::DualNumbers: {
      // GL_n(A[t]) -> GL_n(A) is onto with kernel 1 + t M_n(A).
      if (!ring->is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring->name() + " is infinite");
      const std::uint64_t kernel = detail::checked_power(ring->first()->size(), n * n, kCap - 1);
      return sat_mul(kernel, gl_order(n, ring->first()));
    }
  }
  return 0;
}

void for_each_gl(std::size_t n, const RingPtr& ring, const std::function<bool(const Matrix&)>& visit) {
  if (!ring->is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring->name() + " cannot be enumerated");
  if (n == 0) throw Error(ErrorKind::BadDims, "GL_0");
  detail::CodeArith ar(*ring);
  const std::uint64_t total = detail::checked_power(ring->size(), n * n, kScanCap);
  if (total > kScanCap) throw Error(ErrorKind::BudgetExceeded, "matrix space too large to scan");
  detail::scan_gl_range(ar, n, 0, total, [&](std::span<const std::uint32_t> codes) {
    return visit(Matrix::from_codes(ring, n, n, codes));
  });
}

std::vector<Matrix> enumerate_gl(std::size_t n, const RingPtr& ring) {
  std::vector<Matrix> out;
  for_each_gl(n, ring, [&](const Matrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

namespace {

// Similitudes filtered at code level: a^T G a == m G for a unit m.
std::vector<Matrix> enumerate_similitudes(const BilinearForm& form, bool isometries_only) {
  const RingPtr& ring = form.ring();
  if (!ring->is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring->name() + " cannot be enumerated");
  const std::size_t n = form.dim();
  detail::CodeArith ar(*ring);
  const std::vector<std::uint32_t> g = form.gram().codes();
  const std::uint64_t total = detail::checked_power(ring->size(), n * n, kScanCap);
  if (total > kScanCap) throw Error(ErrorKind::BudgetExceeded, "matrix space too large to scan");
  std::vector<std::uint32_t> at(n * n), ga(n * n), lhs(n * n);
  std::vector<Matrix> out;
  detail::scan_gl_range(ar, n, 0, total, [&](std::span<const std::uint32_t> a) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at[i * n + j] = a[j * n + i];
    ar.matmul(g, a, ga, n, n, n);
    ar.matmul(at, ga, lhs, n, n, n);
    // find m from the first unit Gram entry, then compare everywhere
    std::size_t k = 0;
    while (k < g.size() && !ar.unit(g[k])) ++k;
    if (k == g.size()) throw Error(ErrorKind::DegenerateForm, "Gram matrix has no unit entry");
    const std::uint32_t m = ar.mul(lhs[k], ar.inv(g[k]));
    if (!ar.unit(m)) return true;
    if (isometries_only && m != ar.one()) return true;
    for (std::size_t e = 0; e < g.size(); ++e)
      if (lhs[e] != ar.mul(m, g[e])) return true;
    out.push_back(Matrix::from_codes(ring, n, n, a));
    return true;
  });
  return out;
}

}  // namespace

std::vector<Matrix> enumerate_go(const BilinearForm& form) { return enumerate_similitudes(form, false); }

std::vector<Matrix> enumerate_o(const BilinearForm& form) { return enumerate_similitudes(form, true); }

}  // namespace jordan
