#pragma once

// Exact commutative unital rings of odd or zero characteristic.
//
// A ring is described by a small expression tree:
//
//   ring := "Q" | "F"<p> | ring "x" ring | ring "[t]" | "(" ring ")"
//
// Every element is stored as a flat vector of "atoms" (one residue mod p or
// one rational per leaf of the tree). Finite rings additionally number their
// elements by a mixed-radix code with the first atom most significant, and
// rings of at most kTableLimit elements carry full addition/multiplication
// tables so that hot loops never touch the tree.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jordan/error.hpp"

namespace jordan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Ring;
class Element;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { PrimeField, Rationals, Product, DualNumbers };

inline constexpr std::uint64_t kTableLimit = 1024;
inline constexpr std::uint16_t kNoInverse = 0xFFFF;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr prime_field(std::uint64_t p);
  static RingPtr rationals();
  static RingPtr product(RingPtr first, RingPtr second);
  static RingPtr dual_numbers(RingPtr base);
  static RingPtr parse(std::string_view text);

  RingKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::uint64_t modulus() const { return modulus_; }
  // Product: the two factors. DualNumbers: first() is the base ring.
  const RingPtr& first() const { return first_; }
  const RingPtr& second() const { return second_; }

  bool is_finite() const { return size_ != 0; }
  bool is_field() const {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::Rationals;
  }
  // Number of elements; 0 for rings containing Q.
  std::uint64_t size() const { return size_; }
  std::size_t width() const { return moduli_.size(); }
  const std::vector<std::uint64_t>& atom_moduli() const { return moduli_; }

  Element zero() const;
  Element one() const;
  Element from_integer(long long value) const;
  Element from_rational(const Rational& value) const;
  Element from_code(std::uint64_t code) const;
  Element from_coordinates(std::span<const Rational> coords) const;
  Element parse_element(std::string_view text) const;

  // All elements in code order. Throws NonEnumerableRing for infinite rings.
  std::vector<Element> elements() const;
  std::vector<Element> units() const;

  bool same_as(const Ring& other) const { return this == &other || name_ == other.name_; }

  // Code-level arithmetic for finite rings.
  bool has_tables() const { return !mul_table_.empty(); }
  std::uint64_t add_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const;
  bool unit_code(std::uint64_t a) const;
  std::uint64_t inv_code(std::uint64_t a) const;  // NotInvertible
  std::uint64_t one_code() const { return one_code_; }

  const std::uint16_t* add_table() const { return add_table_.data(); }
  const std::uint16_t* mul_table() const { return mul_table_.data(); }
  const std::uint16_t* neg_table() const { return neg_table_.data(); }
  const std::uint16_t* inv_table() const { return inv_table_.data(); }

  // Coordinate-level helpers (exposed for Element; not part of the
  // everyday API).
  std::vector<std::int64_t> decode(std::uint64_t code) const;
  std::uint64_t encode(std::span<const std::int64_t> coords) const;

 private:
  friend class Element;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  Ring() = default;
  void finish();

  template <class Atom>
  void add_coords(std::span<const Atom> a, std::span<const Atom> b, std::span<Atom> out) const;
  template <class Atom>
  void neg_coords(std::span<const Atom> a, std::span<Atom> out) const;
  template <class Atom>
  void mul_coords(std::span<const Atom> a, std::span<const Atom> b, std::span<Atom> out) const;
  template <class Atom>
  bool unit_coords(std::span<const Atom> a) const;
  template <class Atom>
  void inv_coords(std::span<const Atom> a, std::span<Atom> out) const;

  std::string format_coords(std::span<const Rational> coords) const;
  void parse_coords(std::string_view text, std::size_t& pos, std::span<Rational> out) const;
  void embed_rational(const Rational& value, std::span<Rational> out) const;

  RingKind kind_ = RingKind::PrimeField;
  std::string name_;
  std::uint64_t modulus_ = 0;
  RingPtr first_;
  RingPtr second_;
  std::vector<std::uint64_t> moduli_;  // per atom; 0 means Q
  std::vector<std::uint64_t> weights_;  // mixed-radix weights, finite rings
  std::uint64_t size_ = 0;
  std::uint64_t one_code_ = 0;

  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> inv_table_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

// Immutable ring element. Finite rings store a code; rings containing Q store
// the flat coordinate vector. Equality is structural.
class Element {
 public:
  Element() = default;

  const RingPtr& ring() const { return ring_; }
  std::uint64_t code() const;  // finite rings only
  std::vector<Rational> coordinates() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  Element inverse() const;
  Element pow(std::uint64_t exponent) const;

  std::string str() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);
  // Total order (code order on finite rings), used for canonical sorting.
  friend bool operator<(const Element& a, const Element& b);

 private:
  friend class Ring;
  Element(RingPtr ring, std::uint64_t code) : ring_(std::move(ring)), code_(code) {}
  Element(RingPtr ring, std::vector<Rational> coords)
      : ring_(std::move(ring)), coords_(std::move(coords)) {}

  RingPtr ring_;
  std::uint64_t code_ = 0;
  std::vector<Rational> coords_;
};

std::vector<Element> idempotents(const RingPtr& ring);
std::vector<Element> mu_n(const RingPtr& ring, unsigned n);

// R = e1 R x e2 R for an idempotent e1 and e2 = 1 - e1. The projections land
// in R itself (as the ideals e_i R, whose units are e_i).
struct IdempotentSplitting {
  Element e1;
  Element e2;
  Element project_first(const Element& x) const { return e1 * x; }
  Element project_second(const Element& x) const { return e2 * x; }
};
IdempotentSplitting idempotent_splitting(const RingPtr& ring, const Element& e1);

// tau = 2 e1 - 1 and back.
Element idempotent_to_root(const Element& e1);
Element root_to_idempotent(const Element& tau);

// Injective unital embedding base -> target when one exists (identity,
// diagonal into products, constants into dual numbers, prime subfield).
bool embeds_into(const RingPtr& base, const RingPtr& target);
Element embed(const Element& x, const RingPtr& target);  // IncompatibleRings

}  // namespace jordan
