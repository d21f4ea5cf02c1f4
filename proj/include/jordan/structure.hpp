#pragma once

// Jordan pairs, triple systems and algebras as dense structure constants over
// fixed ordered bases. All maps are matrices in those bases.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordan/matrix.hpp"

namespace jordan {

enum class Sign { Plus = 0, Minus = 1 };
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline std::size_t index_of(Sign s) { return static_cast<std::size_t>(s); }
inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// Trilinear map A x B x C -> D; value(i, j, k) is the image of a basis triple.
class TripleTensor {
 public:
  TripleTensor() = default;
  TripleTensor(RingPtr ring, std::size_t a, std::size_t b, std::size_t c, std::size_t out);

  const RingPtr& ring() const { return ring_; }
  std::size_t dim(std::size_t mode) const { return dims_[mode]; }
  const std::array<std::size_t, 4>& dims() const { return dims_; }

  const Element& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[offset(i, j, k, l)];
  }
  Element& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[offset(i, j, k, l)];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, const Vector& value);

  Vector basis_value(std::size_t i, std::size_t j, std::size_t k) const;
  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const;

  struct Entry {
    std::uint32_t i, j, k, l;
    Element value;
  };
  std::vector<Entry> nonzeros() const;
  bool is_zero() const;

  // T'(x, y, z) = T(a x, b y, c z), then d applied to the output.
  TripleTensor transport(const Matrix& a, const Matrix& b, const Matrix& c) const;
  TripleTensor apply_output(const Matrix& d) const;
  TripleTensor scaled(const Element& s) const;
  TripleTensor extend_scalars(const RingPtr& target) const;

  friend bool operator==(const TripleTensor& s, const TripleTensor& t) {
    return s.dims_ == t.dims_ && same_ring(s.ring_, t.ring_) && s.data_ == t.data_;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * dims_[1] + j) * dims_[2] + k) * dims_[3] + l;
  }

  RingPtr ring_;
  std::array<std::size_t, 4> dims_{};
  std::vector<Element> data_;
};

// Bilinear product tensor of an algebra, value(i, j) = e_i e_j.
class ProductTensor {
 public:
  ProductTensor() = default;
  ProductTensor(RingPtr ring, std::size_t dim);

  const RingPtr& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const Element& at(std::size_t i, std::size_t j, std::size_t l) const { return data_[(i * dim_ + j) * dim_ + l]; }
  Element& at(std::size_t i, std::size_t j, std::size_t l) { return data_[(i * dim_ + j) * dim_ + l]; }
  void set(std::size_t i, std::size_t j, const Vector& value);
  Vector basis_value(std::size_t i, std::size_t j) const;
  Vector operator()(const Vector& x, const Vector& y) const;
  ProductTensor extend_scalars(const RingPtr& target) const;

  friend bool operator==(const ProductTensor& s, const ProductTensor& t) {
    return s.dim_ == t.dim_ && same_ring(s.ring_, t.ring_) && s.data_ == t.data_;
  }

 private:
  RingPtr ring_;
  std::size_t dim_ = 0;
  std::vector<Element> data_;
};

// T^+ : V+ x V- x V+ -> V+,  T^- : V- x V+ x V- -> V-.
struct JordanPair {
  RingPtr ring;
  std::array<std::size_t, 2> dims{};
  std::array<TripleTensor, 2> tensor;

  const TripleTensor& of(Sign s) const { return tensor[index_of(s)]; }
  std::size_t dim(Sign s) const { return dims[index_of(s)]; }
  static JordanPair make(const RingPtr& ring, std::size_t plus, std::size_t minus);
};

struct JordanTriple {
  RingPtr ring;
  std::size_t dim = 0;
  TripleTensor tensor;
  static JordanTriple make(const RingPtr& ring, std::size_t dim);
};

struct JordanAlgebra {
  RingPtr ring;
  std::size_t dim = 0;
  ProductTensor product;
  std::optional<Vector> unit;
  static JordanAlgebra make(const RingPtr& ring, std::size_t dim);
};

// (phi+, phi-) acting on the two carriers.
struct PairMap {
  Matrix plus;
  Matrix minus;

  const Matrix& of(Sign s) const { return s == Sign::Plus ? plus : minus; }
  static PairMap identity(const RingPtr& ring, std::size_t plus, std::size_t minus);
  static PairMap diagonal(const Matrix& phi) { return {phi, phi}; }

  friend PairMap operator*(const PairMap& f, const PairMap& g) { return {f.plus * g.plus, f.minus * g.minus}; }
  friend bool operator==(const PairMap& f, const PairMap& g) { return f.plus == g.plus && f.minus == g.minus; }
  friend bool operator<(const PairMap& f, const PairMap& g) {
    if (!(f.plus == g.plus)) return f.plus < g.plus;
    return f.minus < g.minus;
  }
};
PairMap inverse(const PairMap& f);

// z -> {x, y, z}^sigma as a matrix on V^sigma.
Matrix d_operator(const JordanPair& pair, Sign s, const Vector& x, const Vector& y);
// Q_x(y) = 1/2 {x, y, x}^sigma.
Vector q_operator(const JordanPair& pair, Sign s, const Vector& x, const Vector& y);

struct AxiomReport {
  enum class Status { Pass, Fail, Refused };
  Status status = Status::Pass;
  std::string identity;  // which identity failed
  std::string detail;    // first violating basis tuple
  bool passed() const { return status == Status::Pass; }
};

// Exhaustive basis-tuple checks; refused when a carrier exceeds this size.
inline constexpr std::size_t kAxiomDimLimit = 6;
AxiomReport check_axioms(const JordanPair& pair);
AxiomReport check_axioms(const JordanTriple& triple);
AxiomReport check_axioms(const JordanAlgebra& algebra);

// {x,y,z} = scale * ((xy)z + (zy)x - (zx)y).
JordanTriple triple_from_algebra(const JordanAlgebra& algebra, long long scale = 1);
JordanPair pair_from_triple(const JordanTriple& triple);

JordanPair scalar_extend(const JordanPair& pair, const RingPtr& target);
JordanTriple scalar_extend(const JordanTriple& triple, const RingPtr& target);
JordanAlgebra scalar_extend(const JordanAlgebra& algebra, const RingPtr& target);
Matrix scalar_extend(const Matrix& m, const RingPtr& target);

// f: P -> Q is a homomorphism of pairs (same dims). With P == Q and f
// invertible this is the automorphism test.
bool is_pair_homomorphism(const JordanPair& source, const JordanPair& target, const PairMap& f);
bool is_pair_automorphism(const JordanPair& pair, const PairMap& f);
bool is_triple_automorphism(const JordanTriple& triple, const Matrix& phi);
bool is_algebra_automorphism(const JordanAlgebra& algebra, const Matrix& phi);

// phi- with t(phi+ x, phi- y) = t(x, y), where t(x, y) = x^T G y.
Matrix dual_inverse(const Matrix& trace_gram, const Matrix& phi_plus);

}  // namespace jordan
