#include "jordan/structure.hpp"

#include <algorithm>
#include <sstream>

namespace jordan {

// ---------------------------------------------------------------------------
// Tensors

TripleTensor::TripleTensor(RingPtr ring, std::size_t a, std::size_t b, std::size_t c, std::size_t out)
    : ring_(std::move(ring)), dims_{a, b, c, out} {
  data_.assign(a * b * c * out, ring_->zero());
}

void TripleTensor::set(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
  if (value.size() != dims_[3]) throw Error(ErrorKind::ShapeMismatch, "tensor value size");
  for (std::size_t l = 0; l < dims_[3]; ++l) at(i, j, k, l) = value[l];
}

Vector TripleTensor::basis_value(std::size_t i, std::size_t j, std::size_t k) const {
  Vector v(dims_[3]);
  for (std::size_t l = 0; l < dims_[3]; ++l) v[l] = at(i, j, k, l);
  return v;
}

Vector TripleTensor::operator()(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.size() != dims_[0] || y.size() != dims_[1] || z.size() != dims_[2]) {
    throw Error(ErrorKind::ShapeMismatch, "triple product argument sizes");
  }
  Vector out = zero_vector(ring_, dims_[3]);
  for (std::size_t i = 0; i < dims_[0]; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dims_[1]; ++j) {
      if (y[j].is_zero()) continue;
      const Element xy = x[i] * y[j];
      for (std::size_t k = 0; k < dims_[2]; ++k) {
        if (z[k].is_zero()) continue;
        const Element c = xy * z[k];
        for (std::size_t l = 0; l < dims_[3]; ++l) {
          const Element& t = at(i, j, k, l);
          if (!t.is_zero()) out[l] += c * t;
        }
      }
    }
  }
  return out;
}

std::vector<TripleTensor::Entry> TripleTensor::nonzeros() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dims_[0]; ++i)
    for (std::size_t j = 0; j < dims_[1]; ++j)
      for (std::size_t k = 0; k < dims_[2]; ++k)
        for (std::size_t l = 0; l < dims_[3]; ++l)
          if (!at(i, j, k, l).is_zero())
            out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l), at(i, j, k, l)});
  return out;
}

bool TripleTensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Element& e) { return e.is_zero(); });
}

TripleTensor TripleTensor::transport(const Matrix& a, const Matrix& b, const Matrix& c) const {
  if (a.rows() != dims_[0] || b.rows() != dims_[1] || c.rows() != dims_[2]) {
    throw Error(ErrorKind::ShapeMismatch, "transport map shapes");
  }
  // one mode at a time, skipping zeros
  TripleTensor t1(ring_, a.cols(), dims_[1], dims_[2], dims_[3]);
  for (std::size_t p = 0; p < dims_[0]; ++p)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const Element& s = a(p, i);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < dims_[1]; ++j)
        for (std::size_t k = 0; k < dims_[2]; ++k)
          for (std::size_t l = 0; l < dims_[3]; ++l) {
            const Element& t = at(p, j, k, l);
            if (!t.is_zero()) t1.at(i, j, k, l) += s * t;
          }
    }
  TripleTensor t2(ring_, a.cols(), b.cols(), dims_[2], dims_[3]);
  for (std::size_t q = 0; q < dims_[1]; ++q)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Element& s = b(q, j);
      if (s.is_zero()) continue;
      for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t k = 0; k < dims_[2]; ++k)
          for (std::size_t l = 0; l < dims_[3]; ++l) {
            const Element& t = t1.at(i, q, k, l);
            if (!t.is_zero()) t2.at(i, j, k, l) += s * t;
          }
    }
  TripleTensor t3(ring_, a.cols(), b.cols(), c.cols(), dims_[3]);
  for (std::size_t r = 0; r < dims_[2]; ++r)
    for (std::size_t k = 0; k < c.cols(); ++k) {
      const Element& s = c(r, k);
      if (s.is_zero()) continue;
      for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          for (std::size_t l = 0; l < dims_[3]; ++l) {
            const Element& t = t2.at(i, j, r, l);
            if (!t.is_zero()) t3.at(i, j, k, l) += s * t;
          }
    }
  return t3;
}

TripleTensor TripleTensor::apply_output(const Matrix& d) const {
  if (d.cols() != dims_[3]) throw Error(ErrorKind::ShapeMismatch, "output map shape");
  TripleTensor out(ring_, dims_[0], dims_[1], dims_[2], d.rows());
  for (std::size_t i = 0; i < dims_[0]; ++i)
    for (std::size_t j = 0; j < dims_[1]; ++j)
      for (std::size_t k = 0; k < dims_[2]; ++k)
        for (std::size_t l = 0; l < dims_[3]; ++l) {
          const Element& t = at(i, j, k, l);
          if (t.is_zero()) continue;
          for (std::size_t m = 0; m < d.rows(); ++m)
            if (!d(m, l).is_zero()) out.at(i, j, k, m) += d(m, l) * t;
        }
  return out;
}

TripleTensor TripleTensor::scaled(const Element& s) const {
  TripleTensor out = *this;
  for (auto& e : out.data_) e = s * e;
  return out;
}

TripleTensor TripleTensor::extend_scalars(const RingPtr& target) const {
  TripleTensor out(target, dims_[0], dims_[1], dims_[2], dims_[3]);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = embed(data_[k], target);
  return out;
}

ProductTensor::ProductTensor(RingPtr ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim) {
  data_.assign(dim * dim * dim, ring_->zero());
}

void ProductTensor::set(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "product value size");
  for (std::size_t l = 0; l < dim_; ++l) at(i, j, l) = value[l];
}

Vector ProductTensor::basis_value(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t l = 0; l < dim_; ++l) v[l] = at(i, j, l);
  return v;
}

Vector ProductTensor::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "product argument sizes");
  Vector out = zero_vector(ring_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Element c = x[i] * y[j];
      for (std::size_t l = 0; l < dim_; ++l)
        if (!at(i, j, l).is_zero()) out[l] += c * at(i, j, l);
    }
  }
  return out;
}

ProductTensor ProductTensor::extend_scalars(const RingPtr& target) const {
  ProductTensor out(target, dim_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = embed(data_[k], target);
  return out;
}

JordanPair JordanPair::make(const RingPtr& ring, std::size_t plus, std::size_t minus) {
  JordanPair p;
  p.ring = ring;
  p.dims = {plus, minus};
  p.tensor[0] = TripleTensor(ring, plus, minus, plus, plus);
  p.tensor[1] = TripleTensor(ring, minus, plus, minus, minus);
  return p;
}

JordanTriple JordanTriple::make(const RingPtr& ring, std::size_t dim) {
  JordanTriple t;
  t.ring = ring;
  t.dim = dim;
  t.tensor = TripleTensor(ring, dim, dim, dim, dim);
  return t;
}

JordanAlgebra JordanAlgebra::make(const RingPtr& ring, std::size_t dim) {
  JordanAlgebra a;
  a.ring = ring;
  a.dim = dim;
  a.product = ProductTensor(ring, dim);
  return a;
}

PairMap PairMap::identity(const RingPtr& ring, std::size_t plus, std::size_t minus) {
  return {Matrix::identity(ring, plus), Matrix::identity(ring, minus)};
}

PairMap inverse(const PairMap& f) { return {inverse(f.plus), inverse(f.minus)}; }

// ---------------------------------------------------------------------------
// Operators

Matrix d_operator(const JordanPair& pair, Sign s, const Vector& x, const Vector& y) {
  const TripleTensor& t = pair.of(s);
  if (x.size() != t.dim(0) || y.size() != t.dim(1)) throw Error(ErrorKind::ShapeMismatch, "D operator arguments");
  const std::size_t d = t.dim(2);
  Matrix m(pair.ring, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector col = t(x, y, basis_vector(pair.ring, d, k));
    for (std::size_t l = 0; l < d; ++l) m(l, k) = col[l];
  }
  return m;
}

Vector q_operator(const JordanPair& pair, Sign s, const Vector& x, const Vector& y) {
  const TripleTensor& t = pair.of(s);
  if (x.size() != t.dim(0) || y.size() != t.dim(1)) throw Error(ErrorKind::ShapeMismatch, "Q operator arguments");
  const Element half = pair.ring->from_rational(Rational(1, 2));
  Vector v = t(x, y, x);
  for (auto& e : v) e = half * e;
  return v;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

std::string tuple_text(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, index] : parts) {
    out << (first ? "" : ", ") << name << "=e" << index;
    first = false;
  }
  return out.str();
}

AxiomReport refused(std::size_t dim) {
  AxiomReport r;
  r.status = AxiomReport::Status::Refused;
  r.detail = "carrier dimension " + std::to_string(dim) + " exceeds the exhaustive-check limit " +
             std::to_string(kAxiomDimLimit);
  return r;
}

AxiomReport failure(std::string identity, std::string detail) {
  AxiomReport r;
  r.status = AxiomReport::Status::Fail;
  r.identity = std::move(identity);
  r.detail = std::move(detail);
  return r;
}

// Matrix of D^sigma_{e_i, f_j}.
std::vector<Matrix> basis_d_operators(const TripleTensor& t) {
  std::vector<Matrix> ds;
  ds.reserve(t.dim(0) * t.dim(1));
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j) {
      Matrix m(t.ring(), t.dim(2), t.dim(3));
      for (std::size_t k = 0; k < t.dim(2); ++k)
        for (std::size_t l = 0; l < t.dim(3); ++l) m(l, k) = t.at(i, j, k, l);
      ds.push_back(std::move(m));
    }
  return ds;
}

}  // namespace

AxiomReport check_axioms(const JordanPair& pair) {
  for (std::size_t d : pair.dims)
    if (d > kAxiomDimLimit) return refused(d);

  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const TripleTensor& t = pair.of(s);
    for (std::size_t i = 0; i < t.dim(0); ++i)
      for (std::size_t j = 0; j < t.dim(1); ++j)
        for (std::size_t k = 0; k < t.dim(2); ++k)
          for (std::size_t l = 0; l < t.dim(3); ++l)
            if (!(t.at(i, j, k, l) == t.at(k, j, i, l))) {
              return failure("outer symmetry",
                             std::string("sigma=") + sign_name(s) + ", " + tuple_text({{"x", i}, {"y", j}, {"z", k}}));
            }
  }

  // [D_{x,y}, D_{u,v}] = D_{D_{x,y}u, v} - D_{u, D^{-sigma}_{y,x} v}
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const TripleTensor& t = pair.of(s);
    const TripleTensor& o = pair.of(opposite(s));
    const std::size_t dp = t.dim(0);
    const std::size_t dm = t.dim(1);
    const std::vector<Matrix> d = basis_d_operators(t);
    const std::vector<Matrix> dminus = basis_d_operators(o);
    auto D = [&](std::size_t x, std::size_t y) -> const Matrix& { return d[x * dm + y]; };
    auto Dm = [&](std::size_t y, std::size_t x) -> const Matrix& { return dminus[y * dp + x]; };
    for (std::size_t x = 0; x < dp; ++x)
      for (std::size_t y = 0; y < dm; ++y)
        for (std::size_t u = 0; u < dp; ++u)
          for (std::size_t v = 0; v < dm; ++v) {
            const Matrix lhs = D(x, y) * D(u, v) - D(u, v) * D(x, y);
            Matrix rhs(pair.ring, dp, dp);
            for (std::size_t a = 0; a < dp; ++a) {
              const Element& c = D(x, y)(a, u);
              if (!c.is_zero()) rhs = rhs + c * D(a, v);
            }
            for (std::size_t b = 0; b < dm; ++b) {
              const Element& c = Dm(y, x)(b, v);
              if (!c.is_zero()) rhs = rhs - c * D(u, b);
            }
            if (!(lhs == rhs)) {
              return failure("D-identity", std::string("sigma=") + sign_name(s) + ", " +
                                               tuple_text({{"x", x}, {"y", y}, {"u", u}, {"v", v}}));
            }
          }
  }
  return {};
}

AxiomReport check_axioms(const JordanTriple& triple) {
  if (triple.dim > kAxiomDimLimit) return refused(triple.dim);
  AxiomReport r = check_axioms(pair_from_triple(triple));
  // the pair's two signs coincide; drop the sign from the report
  if (auto pos = r.detail.find("sigma=+, "); pos == 0) r.detail.erase(0, 9);
  if (auto pos = r.detail.find("sigma=-, "); pos == 0) r.detail.erase(0, 9);
  return r;
}

AxiomReport check_axioms(const JordanAlgebra& algebra) {
  const std::size_t n = algebra.dim;
  if (n > kAxiomDimLimit) return refused(n);
  const ProductTensor& p = algebra.product;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(p.basis_value(i, j) == p.basis_value(j, i)))
        return failure("commutativity", tuple_text({{"x", i}, {"y", j}}));

  if (algebra.unit) {
    for (std::size_t i = 0; i < n; ++i)
      if (!(p(*algebra.unit, basis_vector(algebra.ring, n, i)) == basis_vector(algebra.ring, n, i)))
        return failure("unit", tuple_text({{"x", i}}));
  }

  // (x^2 y) x = x^2 (y x) is cubic in x. Expanding x = sum x_i e_i, the
  // coefficient of each monomial x_i x_j x_k must vanish: sum over the
  // distinct orderings (p, q, r) of {i, j, k} of ((e_p e_q) y) e_r - (e_p e_q)(y e_r).
  std::vector<Vector> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = p.basis_value(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        std::array<std::size_t, 3> idx{i, j, k};
        std::vector<std::array<std::size_t, 3>> orders;
        do {
          orders.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
        for (std::size_t y = 0; y < n; ++y) {
          Vector total = zero_vector(algebra.ring, n);
          for (const auto& [a, b, c] : orders) {
            const Vector& ab = prod[a * n + b];
            const Vector lhs = p(p(ab, basis_vector(algebra.ring, n, y)), basis_vector(algebra.ring, n, c));
            const Vector rhs = p(ab, prod[y * n + c]);
            for (std::size_t l = 0; l < n; ++l) total[l] += lhs[l] - rhs[l];
          }
          for (const auto& e : total)
            if (!e.is_zero())
              return failure("Jordan identity",
                             "monomial " + tuple_text({{"x", i}, {"x", j}, {"x", k}}) + ", y=e" + std::to_string(y));
        }
      }
  return {};
}

// ---------------------------------------------------------------------------
// Constructions

JordanTriple triple_from_algebra(const JordanAlgebra& algebra, long long scale) {
  const AxiomReport r = check_axioms(algebra);
  if (r.status == AxiomReport::Status::Fail) {
    throw Error(ErrorKind::AxiomFailure, "algebra fails " + r.identity + " at " + r.detail);
  }
  const std::size_t n = algebra.dim;
  const RingPtr& ring = algebra.ring;
  const Element s = ring->from_integer(scale);
  JordanTriple t = JordanTriple::make(ring, n);
  const ProductTensor& p = algebra.product;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = basis_vector(ring, n, i);
        const Vector ej = basis_vector(ring, n, j);
        const Vector ek = basis_vector(ring, n, k);
        const Vector a = p(p.basis_value(i, j), ek);
        const Vector b = p(p.basis_value(k, j), ei);
        const Vector c = p(p.basis_value(k, i), ej);
        Vector v(n);
        for (std::size_t l = 0; l < n; ++l) v[l] = s * (a[l] + b[l] - c[l]);
        t.tensor.set(i, j, k, v);
      }
  return t;
}

JordanPair pair_from_triple(const JordanTriple& triple) {
  JordanPair p;
  p.ring = triple.ring;
  p.dims = {triple.dim, triple.dim};
  p.tensor = {triple.tensor, triple.tensor};
  return p;
}

JordanPair scalar_extend(const JordanPair& pair, const RingPtr& target) {
  if (!embeds_into(pair.ring, target)) {
    throw Error(ErrorKind::IncompatibleRings, pair.ring->name() + " does not embed into " + target->name());
  }
  JordanPair p;
  p.ring = target;
  p.dims = pair.dims;
  p.tensor = {pair.tensor[0].extend_scalars(target), pair.tensor[1].extend_scalars(target)};
  return p;
}

JordanTriple scalar_extend(const JordanTriple& triple, const RingPtr& target) {
  if (!embeds_into(triple.ring, target)) {
    throw Error(ErrorKind::IncompatibleRings, triple.ring->name() + " does not embed into " + target->name());
  }
  JordanTriple t;
  t.ring = target;
  t.dim = triple.dim;
  t.tensor = triple.tensor.extend_scalars(target);
  return t;
}

JordanAlgebra scalar_extend(const JordanAlgebra& algebra, const RingPtr& target) {
  if (!embeds_into(algebra.ring, target)) {
    throw Error(ErrorKind::IncompatibleRings, algebra.ring->name() + " does not embed into " + target->name());
  }
  JordanAlgebra a;
  a.ring = target;
  a.dim = algebra.dim;
  a.product = algebra.product.extend_scalars(target);
  if (algebra.unit) {
    Vector u;
    for (const auto& e : *algebra.unit) u.push_back(embed(e, target));
    a.unit = u;
  }
  return a;
}

Matrix scalar_extend(const Matrix& m, const RingPtr& target) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = embed(m(i, j), target);
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms

bool is_pair_homomorphism(const JordanPair& source, const JordanPair& target, const PairMap& f) {
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const Matrix& fs = f.of(s);
    if (fs.rows() != target.dim(s) || fs.cols() != source.dim(s)) {
      throw Error(ErrorKind::ShapeMismatch, std::string("map shape on the ") + sign_name(s) + " carrier");
    }
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const Matrix& fs = f.of(s);
    const Matrix& fo = f.of(opposite(s));
    const TripleTensor lhs = source.of(s).apply_output(fs);
    const TripleTensor rhs = target.of(s).transport(fs, fo, fs);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_pair_automorphism(const JordanPair& pair, const PairMap& f) {
  if (!is_pair_homomorphism(pair, pair, f)) return false;
  return is_invertible(f.plus) && is_invertible(f.minus);
}

bool is_triple_automorphism(const JordanTriple& triple, const Matrix& phi) {
  if (phi.rows() != triple.dim || phi.cols() != triple.dim) throw Error(ErrorKind::ShapeMismatch, "map shape");
  const TripleTensor lhs = triple.tensor.apply_output(phi);
  const TripleTensor rhs = triple.tensor.transport(phi, phi, phi);
  return lhs == rhs && is_invertible(phi);
}

bool is_algebra_automorphism(const JordanAlgebra& algebra, const Matrix& phi) {
  const std::size_t n = algebra.dim;
  if (phi.rows() != n || phi.cols() != n) throw Error(ErrorKind::ShapeMismatch, "map shape");
  std::vector<Vector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = phi.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!(phi.apply(algebra.product.basis_value(i, j)) == algebra.product(cols[i], cols[j]))) return false;
  return is_invertible(phi);
}

Matrix dual_inverse(const Matrix& trace_gram, const Matrix& phi_plus) {
  if (!trace_gram.is_square() || !is_invertible(trace_gram)) {
    throw Error(ErrorKind::DegenerateTrace, "generic trace Gram matrix is not invertible");
  }
  if (phi_plus.rows() != trace_gram.rows() || !phi_plus.is_square()) {
    throw Error(ErrorKind::ShapeMismatch, "phi+ does not match the trace");
  }
  return inverse(trace_gram) * inverse(phi_plus).transpose() * trace_gram;
}

}  // namespace jordan
