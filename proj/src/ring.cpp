#include "jordan/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace jordan {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonEnumerableRing: return "NonEnumerableRing";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IncompatibleRings: return "IncompatibleRings";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::DegenerateTrace: return "DegenerateTrace";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::BadDims: return "BadDims";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NoSquareRootOfMinusOne: return "NoSquareRootOfMinusOne";
    case ErrorKind::NotSimilitude: return "NotSimilitude";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NonFieldRing: return "NonFieldRing";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MixedSystems: return "MixedSystems";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
    case ErrorKind::NotFactorable: return "NotFactorable";
  }
  return "Error";
}

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31);

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorKind::NotInvertible, "residue has no inverse");
  return t < 0 ? t + p : t;
}

// Atom arithmetic. A modulus of 0 means the atom is a rational.
std::int64_t atom_add(std::int64_t a, std::int64_t b, std::uint64_t p) {
  return static_cast<std::int64_t>((static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)) % p);
}
std::int64_t atom_neg(std::int64_t a, std::uint64_t p) {
  return a == 0 ? 0 : static_cast<std::int64_t>(p) - a;
}
std::int64_t atom_mul(std::int64_t a, std::int64_t b, std::uint64_t p) {
  return static_cast<std::int64_t>((static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b)) % p);
}
bool atom_unit(std::int64_t a, std::uint64_t) { return a != 0; }
std::int64_t atom_inv(std::int64_t a, std::uint64_t p) {
  return mod_inverse(a, static_cast<std::int64_t>(p));
}

Rational residue(const Integer& v, std::uint64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return Rational(r);
}
Rational atom_add(const Rational& a, const Rational& b, std::uint64_t p) {
  return p == 0 ? Rational(a + b) : residue(numerator(a) + numerator(b), p);
}
Rational atom_neg(const Rational& a, std::uint64_t p) {
  return p == 0 ? Rational(-a) : residue(-numerator(a), p);
}
Rational atom_mul(const Rational& a, const Rational& b, std::uint64_t p) {
  return p == 0 ? Rational(a * b) : residue(numerator(a) * numerator(b), p);
}
bool atom_unit(const Rational& a, std::uint64_t) { return a != 0; }
Rational atom_inv(const Rational& a, std::uint64_t p) {
  if (a == 0) throw Error(ErrorKind::NotInvertible, "zero has no inverse");
  if (p == 0) return Rational(1) / a;
  auto v = static_cast<std::int64_t>(numerator(a));
  return Rational(mod_inverse(v, static_cast<std::int64_t>(p)));
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Rational parse_rational_literal(std::string_view text, std::size_t& pos) {
  skip_spaces(text, pos);
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw Error(ErrorKind::ParseError, "expected digits in '" + std::string(text) + "'");
    }
    return Integer(std::string(text.substr(start, pos - start)));
  };
  Integer num = read_digits();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits();
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  }
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    throw Error(ErrorKind::ParseError,
                std::string("expected '") + c + "' at position " + std::to_string(pos) +
                    " in '" + std::string(text) + "'");
  }
  ++pos;
}

class RingParser {
 public:
  explicit RingParser(std::string_view text) : text_(text) {}

  RingPtr parse() {
    RingPtr ring = parse_product();
    skip_spaces(text_, pos_);
    if (pos_ != text_.size()) fail("trailing characters");
    return ring;
  }

 private:
  RingPtr parse_product() {
    RingPtr ring = parse_postfix();
    for (;;) {
      skip_spaces(text_, pos_);
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        ++pos_;
        ring = Ring::product(ring, parse_postfix());
      } else {
        return ring;
      }
    }
  }

  RingPtr parse_postfix() {
    RingPtr ring = parse_atom();
    while (text_.substr(pos_, 3) == "[t]") {
      pos_ += 3;
      ring = Ring::dual_numbers(ring);
    }
    return ring;
  }

  RingPtr parse_atom() {
    skip_spaces(text_, pos_);
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingPtr inner = parse_product();
      expect(text_, pos_, ')');
      return inner;
    }
    if (c == 'Q') {
      ++pos_;
      return Ring::rationals();
    }
    if (c == 'F') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 10) fail("expected a prime after 'F'");
      const std::uint64_t p = std::stoull(std::string(text_.substr(start, pos_ - start)));
      if (!is_prime(p) || p == 2 || p >= kMaxPrime) fail("F" + std::to_string(p) + " is not an odd prime field");
      return Ring::prime_field(p);
    }
    fail("unexpected character");
    return nullptr;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at position " + std::to_string(pos_) + " in ring '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Construction

RingPtr Ring::prime_field(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::BadInput, "characteristic 2 is not supported");
  if (!is_prime(p) || p >= kMaxPrime) {
    throw Error(ErrorKind::BadInput, "F" + std::to_string(p) + " is not an odd prime field");
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::PrimeField;
  ring->modulus_ = p;
  ring->finish();
  return ring;
}

RingPtr Ring::rationals() {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::Rationals;
  ring->finish();
  return ring;
}

RingPtr Ring::product(RingPtr first, RingPtr second) {
  if (!first || !second) throw Error(ErrorKind::BadInput, "null factor ring");
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::Product;
  ring->first_ = std::move(first);
  ring->second_ = std::move(second);
  ring->finish();
  return ring;
}

RingPtr Ring::dual_numbers(RingPtr base) {
  if (!base) throw Error(ErrorKind::BadInput, "null base ring");
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::DualNumbers;
  ring->first_ = std::move(base);
  ring->finish();
  return ring;
}

RingPtr Ring::parse(std::string_view text) { return RingParser(text).parse(); }

void Ring::finish() {
  switch (kind_) {
    case RingKind::PrimeField:
      name_ = "F" + std::to_string(modulus_);
      moduli_ = {modulus_};
      break;
    case RingKind::Rationals:
      name_ = "Q";
      moduli_ = {0};
      break;
    case RingKind::Product: {
      const bool wrap = second_->kind() == RingKind::Product;
      name_ = first_->name() + "x" + (wrap ? "(" + second_->name() + ")" : second_->name());
      moduli_ = first_->atom_moduli();
      const auto& rest = second_->atom_moduli();
      moduli_.insert(moduli_.end(), rest.begin(), rest.end());
      break;
    }
    case RingKind::DualNumbers: {
      const bool wrap = first_->kind() == RingKind::Product;
      name_ = (wrap ? "(" + first_->name() + ")" : first_->name()) + "[t]";
      moduli_ = first_->atom_moduli();
      moduli_.insert(moduli_.end(), first_->atom_moduli().begin(), first_->atom_moduli().end());
      break;
    }
  }
  if (moduli_.size() > 64) throw Error(ErrorKind::BadInput, "ring descriptor too deep");

  const bool finite = std::none_of(moduli_.begin(), moduli_.end(), [](auto m) { return m == 0; });
  size_ = 0;
  if (!finite) return;

  size_ = 1;
  weights_.assign(moduli_.size(), 1);
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    weights_[i] = size_;
    if (size_ > std::numeric_limits<std::uint64_t>::max() / moduli_[i]) {
      throw Error(ErrorKind::BadInput, "ring " + name_ + " is too large");
    }
    size_ *= moduli_[i];
  }
  std::vector<Rational> one(width());
  embed_rational(Rational(1), one);
  std::vector<std::int64_t> one_int(width());
  for (std::size_t i = 0; i < width(); ++i) one_int[i] = static_cast<std::int64_t>(numerator(one[i]));
  one_code_ = encode(one_int);

  if (size_ > kTableLimit) return;
  const std::size_t n = size_;
  const std::size_t w = width();
  std::vector<std::int64_t> decoded(n * w);
  for (std::uint64_t c = 0; c < n; ++c) {
    auto coords = decode(c);
    std::copy(coords.begin(), coords.end(), decoded.begin() + static_cast<std::ptrdiff_t>(c * w));
  }
  add_table_.resize(n * n);
  mul_table_.resize(n * n);
  neg_table_.resize(n);
  inv_table_.resize(n);
  std::vector<std::int64_t> out(w);
  for (std::size_t a = 0; a < n; ++a) {
    std::span<const std::int64_t> ca(decoded.data() + a * w, w);
    neg_coords<std::int64_t>(ca, out);
    neg_table_[a] = static_cast<std::uint16_t>(encode(out));
    if (unit_coords<std::int64_t>(ca)) {
      inv_coords<std::int64_t>(ca, out);
      inv_table_[a] = static_cast<std::uint16_t>(encode(out));
    } else {
      inv_table_[a] = kNoInverse;
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::span<const std::int64_t> cb(decoded.data() + b * w, w);
      add_coords<std::int64_t>(ca, cb, out);
      add_table_[a * n + b] = static_cast<std::uint16_t>(encode(out));
      mul_coords<std::int64_t>(ca, cb, out);
      mul_table_[a * n + b] = static_cast<std::uint16_t>(encode(out));
    }
  }
}

// ---------------------------------------------------------------------------
// Coordinate arithmetic (recursive over the descriptor tree)

template <class Atom>
void Ring::add_coords(std::span<const Atom> a, std::span<const Atom> b, std::span<Atom> out) const {
  for (std::size_t i = 0; i < moduli_.size(); ++i) out[i] = atom_add(a[i], b[i], moduli_[i]);
}

template <class Atom>
void Ring::neg_coords(std::span<const Atom> a, std::span<Atom> out) const {
  for (std::size_t i = 0; i < moduli_.size(); ++i) out[i] = atom_neg(a[i], moduli_[i]);
}

template <class Atom>
void Ring::mul_coords(std::span<const Atom> a, std::span<const Atom> b, std::span<Atom> out) const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      out[0] = atom_mul(a[0], b[0], modulus_);
      return;
    case RingKind::Product: {
      const std::size_t w = first_->width();
      first_->mul_coords<Atom>(a.first(w), b.first(w), out.first(w));
      second_->mul_coords<Atom>(a.subspan(w), b.subspan(w), out.subspan(w));
      return;
    }
    case RingKind::DualNumbers: {
      // (a0 + a1 t)(b0 + b1 t) = a0 b0 + (a0 b1 + a1 b0) t
      const std::size_t w = first_->width();
      std::vector<Atom> t0(w), t1(w), t2(w);
      first_->mul_coords<Atom>(a.first(w), b.first(w), t0);
      first_->mul_coords<Atom>(a.first(w), b.subspan(w), t1);
      first_->mul_coords<Atom>(a.subspan(w), b.first(w), t2);
      std::copy(t0.begin(), t0.end(), out.begin());
      first_->add_coords<Atom>(t1, t2, out.subspan(w));
      return;
    }
  }
}

template <class Atom>
bool Ring::unit_coords(std::span<const Atom> a) const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return atom_unit(a[0], modulus_);
    case RingKind::Product: {
      const std::size_t w = first_->width();
      return first_->unit_coords<Atom>(a.first(w)) && second_->unit_coords<Atom>(a.subspan(w));
    }
    case RingKind::DualNumbers:
      return first_->unit_coords<Atom>(a.first(first_->width()));
  }
  return false;
}

template <class Atom>
void Ring::inv_coords(std::span<const Atom> a, std::span<Atom> out) const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      out[0] = atom_inv(a[0], modulus_);
      return;
    case RingKind::Product: {
      const std::size_t w = first_->width();
      first_->inv_coords<Atom>(a.first(w), out.first(w));
      second_->inv_coords<Atom>(a.subspan(w), out.subspan(w));
      return;
    }
    case RingKind::DualNumbers: {
      // (a0 + a1 t)^-1 = a0^-1 - a0^-2 a1 t
      const std::size_t w = first_->width();
      std::vector<Atom> i0(w), sq(w), prod(w);
      first_->inv_coords<Atom>(a.first(w), i0);
      first_->mul_coords<Atom>(i0, i0, sq);
      first_->mul_coords<Atom>(sq, a.subspan(w), prod);
      std::copy(i0.begin(), i0.end(), out.begin());
      first_->neg_coords<Atom>(prod, out.subspan(w));
      return;
    }
  }
}

void Ring::embed_rational(const Rational& value, std::span<Rational> out) const {
  switch (kind_) {
    case RingKind::Rationals:
      out[0] = value;
      return;
    case RingKind::PrimeField: {
      Rational num = residue(numerator(value), modulus_);
      Rational den = residue(denominator(value), modulus_);
      if (den == 0) {
        throw Error(ErrorKind::NotInvertible, value.str() + " is not defined in " + name_);
      }
      out[0] = atom_mul(num, atom_inv(den, modulus_), modulus_);
      return;
    }
    case RingKind::Product: {
      const std::size_t w = first_->width();
      first_->embed_rational(value, out.first(w));
      second_->embed_rational(value, out.subspan(w));
      return;
    }
    case RingKind::DualNumbers: {
      const std::size_t w = first_->width();
      first_->embed_rational(value, out.first(w));
      first_->embed_rational(Rational(0), out.subspan(w));
      return;
    }
  }
}

std::vector<std::int64_t> Ring::decode(std::uint64_t code) const {
  std::vector<std::int64_t> coords(width());
  for (std::size_t i = 0; i < width(); ++i) {
    coords[i] = static_cast<std::int64_t>((code / weights_[i]) % moduli_[i]);
  }
  return coords;
}

std::uint64_t Ring::encode(std::span<const std::int64_t> coords) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < width(); ++i) code += static_cast<std::uint64_t>(coords[i]) * weights_[i];
  return code;
}

// ---------------------------------------------------------------------------
// Code arithmetic

std::uint64_t Ring::add_code(std::uint64_t a, std::uint64_t b) const {
  if (has_tables()) return add_table_[a * size_ + b];
  if (kind_ == RingKind::PrimeField) return (a + b) % modulus_;
  auto ca = decode(a), cb = decode(b);
  std::vector<std::int64_t> out(width());
  add_coords<std::int64_t>(ca, cb, out);
  return encode(out);
}

std::uint64_t Ring::neg_code(std::uint64_t a) const {
  if (has_tables()) return neg_table_[a];
  if (kind_ == RingKind::PrimeField) return a == 0 ? 0 : modulus_ - a;
  auto ca = decode(a);
  std::vector<std::int64_t> out(width());
  neg_coords<std::int64_t>(ca, out);
  return encode(out);
}

std::uint64_t Ring::sub_code(std::uint64_t a, std::uint64_t b) const { return add_code(a, neg_code(b)); }

std::uint64_t Ring::mul_code(std::uint64_t a, std::uint64_t b) const {
  if (has_tables()) return mul_table_[a * size_ + b];
  if (kind_ == RingKind::PrimeField) return (a * b) % modulus_;
  auto ca = decode(a), cb = decode(b);
  std::vector<std::int64_t> out(width());
  mul_coords<std::int64_t>(ca, cb, out);
  return encode(out);
}

bool Ring::unit_code(std::uint64_t a) const {
  if (has_tables()) return inv_table_[a] != kNoInverse;
  if (kind_ == RingKind::PrimeField) return a != 0;
  auto ca = decode(a);
  return unit_coords<std::int64_t>(ca);
}

std::uint64_t Ring::inv_code(std::uint64_t a) const {
  if (!unit_code(a)) throw Error(ErrorKind::NotInvertible, "element is not a unit of " + name_);
  if (has_tables()) return inv_table_[a];
  auto ca = decode(a);
  std::vector<std::int64_t> out(width());
  inv_coords<std::int64_t>(ca, out);
  return encode(out);
}

// ---------------------------------------------------------------------------
// Elements

Element Ring::zero() const {
  if (is_finite()) return Element(shared_from_this(), std::uint64_t{0});
  return Element(shared_from_this(), std::vector<Rational>(width(), Rational(0)));
}

Element Ring::one() const { return from_rational(Rational(1)); }

Element Ring::from_integer(long long value) const { return from_rational(Rational(value)); }

Element Ring::from_rational(const Rational& value) const {
  std::vector<Rational> coords(width());
  embed_rational(value, coords);
  if (!is_finite()) return Element(shared_from_this(), std::move(coords));
  std::vector<std::int64_t> ints(width());
  for (std::size_t i = 0; i < width(); ++i) ints[i] = static_cast<std::int64_t>(numerator(coords[i]));
  return Element(shared_from_this(), encode(ints));
}

Element Ring::from_coordinates(std::span<const Rational> coords) const {
  if (coords.size() != width()) throw Error(ErrorKind::ShapeMismatch, "coordinate count for " + name_);
  std::vector<Rational> reduced(width());
  for (std::size_t i = 0; i < width(); ++i) {
    if (moduli_[i] == 0) {
      reduced[i] = coords[i];
    } else {
      if (denominator(coords[i]) != 1) throw Error(ErrorKind::BadInput, "fractional residue coordinate");
      reduced[i] = residue(numerator(coords[i]), moduli_[i]);
    }
  }
  if (!is_finite()) return Element(shared_from_this(), std::move(reduced));
  std::vector<std::int64_t> ints(width());
  for (std::size_t i = 0; i < width(); ++i) ints[i] = static_cast<std::int64_t>(numerator(reduced[i]));
  return Element(shared_from_this(), encode(ints));
}

Element Ring::from_code(std::uint64_t code) const {
  if (!is_finite()) throw Error(ErrorKind::NonEnumerableRing, name_ + " has no element codes");
  if (code >= size_) throw Error(ErrorKind::BadInput, "code out of range for " + name_);
  return Element(shared_from_this(), code);
}

std::vector<Element> Ring::elements() const {
  if (!is_finite()) throw Error(ErrorKind::NonEnumerableRing, name_ + " cannot be enumerated");
  if (size_ > (1ull << 24)) throw Error(ErrorKind::BudgetExceeded, name_ + " is too large to list");
  std::vector<Element> all;
  all.reserve(size_);
  for (std::uint64_t c = 0; c < size_; ++c) all.push_back(Element(shared_from_this(), c));
  return all;
}

std::vector<Element> Ring::units() const {
  std::vector<Element> all = elements();
  std::erase_if(all, [](const Element& e) { return !e.is_unit(); });
  return all;
}

std::string Ring::format_coords(std::span<const Rational> coords) const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return coords[0].str();
    case RingKind::Product: {
      const std::size_t w = first_->width();
      return "(" + first_->format_coords(coords.first(w)) + "," +
             second_->format_coords(coords.subspan(w)) + ")";
    }
    case RingKind::DualNumbers: {
      const std::size_t w = first_->width();
      const bool wrap = first_->kind() == RingKind::DualNumbers;
      auto part = [&](std::span<const Rational> c) {
        std::string s = first_->format_coords(c);
        return wrap ? "(" + s + ")" : s;
      };
      return part(coords.first(w)) + "+" + part(coords.subspan(w)) + "t";
    }
  }
  return {};
}

void Ring::parse_coords(std::string_view text, std::size_t& pos, std::span<Rational> out) const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      embed_rational(parse_rational_literal(text, pos), out);
      return;
    case RingKind::Product: {
      const std::size_t w = first_->width();
      expect(text, pos, '(');
      first_->parse_coords(text, pos, out.first(w));
      expect(text, pos, ',');
      second_->parse_coords(text, pos, out.subspan(w));
      expect(text, pos, ')');
      return;
    }
    case RingKind::DualNumbers: {
      const std::size_t w = first_->width();
      const bool wrap = first_->kind() == RingKind::DualNumbers;
      auto part = [&](std::span<Rational> dst) {
        if (wrap) expect(text, pos, '(');
        first_->parse_coords(text, pos, dst);
        if (wrap) expect(text, pos, ')');
      };
      part(out.first(w));
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '+') {
        ++pos;
        part(out.subspan(w));
        expect(text, pos, 't');
      } else {
        first_->embed_rational(Rational(0), out.subspan(w));
      }
      return;
    }
  }
}

Element Ring::parse_element(std::string_view text) const {
  std::vector<Rational> coords(width());
  std::size_t pos = 0;
  try {
    parse_coords(text, pos, coords);
    skip_spaces(text, pos);
    if (pos != text.size()) throw Error(ErrorKind::ParseError, "trailing characters");
  } catch (const Error& structured) {
    // Plain integer or fraction literals embed as constants in any ring.
    std::size_t lit = 0;
    try {
      Rational value = parse_rational_literal(text, lit);
      skip_spaces(text, lit);
      if (lit == text.size()) return from_rational(value);
    } catch (const Error&) {
    }
    throw Error(ErrorKind::ParseError,
                "cannot parse '" + std::string(text) + "' as an element of " + name_);
  }
  if (!is_finite()) return Element(shared_from_this(), std::move(coords));
  std::vector<std::int64_t> ints(width());
  for (std::size_t i = 0; i < width(); ++i) ints[i] = static_cast<std::int64_t>(numerator(coords[i]));
  return Element(shared_from_this(), encode(ints));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a && b && a->same_as(*b);
}

namespace {
const RingPtr& common_ring(const Element& a, const Element& b) {
  if (!a.ring() || !b.ring()) throw Error(ErrorKind::BadInput, "uninitialised element");
  if (!same_ring(a.ring(), b.ring())) {
    throw Error(ErrorKind::IncompatibleRings, a.ring()->name() + " vs " + b.ring()->name());
  }
  return a.ring();
}
}  // namespace

std::uint64_t Element::code() const {
  if (!ring_ || !ring_->is_finite()) throw Error(ErrorKind::NonEnumerableRing, "element has no code");
  return code_;
}

std::vector<Rational> Element::coordinates() const {
  if (!ring_) throw Error(ErrorKind::BadInput, "uninitialised element");
  if (!ring_->is_finite()) return coords_;
  auto ints = ring_->decode(code_);
  return std::vector<Rational>(ints.begin(), ints.end());
}

bool Element::is_zero() const {
  if (ring_->is_finite()) return code_ == 0;
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool Element::is_one() const { return *this == ring_->one(); }

bool Element::is_unit() const {
  if (ring_->is_finite()) return ring_->unit_code(code_);
  return ring_->unit_coords<Rational>(coords_);
}

Element Element::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotInvertible, str() + " is not a unit of " + ring_->name());
  if (ring_->is_finite()) return Element(ring_, ring_->inv_code(code_));
  std::vector<Rational> out(coords_.size());
  ring_->inv_coords<Rational>(coords_, out);
  return Element(ring_, std::move(out));
}

Element Element::pow(std::uint64_t exponent) const {
  Element result = ring_->one();
  Element base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

std::string Element::str() const {
  if (!ring_) return "<null>";
  if (ring_->is_finite()) {
    auto ints = ring_->decode(code_);
    std::vector<Rational> coords(ints.begin(), ints.end());
    return ring_->format_coords(coords);
  }
  return ring_->format_coords(coords_);
}

Element operator+(const Element& a, const Element& b) {
  const RingPtr& r = common_ring(a, b);
  if (r->is_finite()) return Element(r, r->add_code(a.code_, b.code_));
  std::vector<Rational> out(a.coords_.size());
  r->add_coords<Rational>(a.coords_, b.coords_, out);
  return Element(r, std::move(out));
}

Element operator-(const Element& a) {
  if (!a.ring_) throw Error(ErrorKind::BadInput, "uninitialised element");
  if (a.ring_->is_finite()) return Element(a.ring_, a.ring_->neg_code(a.code_));
  std::vector<Rational> out(a.coords_.size());
  a.ring_->neg_coords<Rational>(a.coords_, out);
  return Element(a.ring_, std::move(out));
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  const RingPtr& r = common_ring(a, b);
  if (r->is_finite()) return Element(r, r->mul_code(a.code_, b.code_));
  std::vector<Rational> out(a.coords_.size());
  r->mul_coords<Rational>(a.coords_, b.coords_, out);
  return Element(r, std::move(out));
}

bool operator==(const Element& a, const Element& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.ring_->is_finite()) return a.code_ == b.code_;
  return a.coords_ == b.coords_;
}

bool operator<(const Element& a, const Element& b) {
  const RingPtr& r = common_ring(a, b);
  if (r->is_finite()) return a.code_ < b.code_;
  return a.coords_ < b.coords_;
}

// ---------------------------------------------------------------------------
// Idempotents, roots of unity, embeddings

std::vector<Element> idempotents(const RingPtr& ring) {
  std::vector<Element> result;
  for (const Element& e : ring->elements()) {
    if (e * e == e) result.push_back(e);
  }
  return result;
}

std::vector<Element> mu_n(const RingPtr& ring, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "mu_n needs n >= 1");
  std::vector<Element> result;
  for (const Element& r : ring->elements()) {
    if (r.pow(n).is_one()) result.push_back(r);
  }
  return result;
}

IdempotentSplitting idempotent_splitting(const RingPtr& ring, const Element& e1) {
  if (!same_ring(ring, e1.ring())) throw Error(ErrorKind::IncompatibleRings, "idempotent from another ring");
  if (!(e1 * e1 == e1)) throw Error(ErrorKind::NotIdempotent, e1.str() + " is not idempotent");
  return IdempotentSplitting{e1, ring->one() - e1};
}

Element idempotent_to_root(const Element& e1) {
  if (!(e1 * e1 == e1)) throw Error(ErrorKind::NotIdempotent, e1.str() + " is not idempotent");
  return e1.ring()->from_integer(2) * e1 - e1.ring()->one();
}

Element root_to_idempotent(const Element& tau) {
  if (!(tau * tau).is_one()) throw Error(ErrorKind::BadInput, tau.str() + " is not a square root of 1");
  const RingPtr& r = tau.ring();
  return r->from_rational(Rational(1, 2)) * (r->one() + tau);
}

bool embeds_into(const RingPtr& base, const RingPtr& target) {
  if (same_ring(base, target)) return true;
  switch (target->kind()) {
    case RingKind::Product:
      return embeds_into(base, target->first()) && embeds_into(base, target->second());
    case RingKind::DualNumbers:
      return embeds_into(base, target->first());
    default:
      return false;
  }
}

namespace {
std::vector<Rational> embed_coords(const Element& x, const RingPtr& target) {
  if (same_ring(x.ring(), target)) return x.coordinates();
  switch (target->kind()) {
    case RingKind::Product: {
      auto a = embed_coords(x, target->first());
      auto b = embed_coords(x, target->second());
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case RingKind::DualNumbers: {
      auto a = embed_coords(x, target->first());
      auto zero = target->first()->zero().coordinates();
      a.insert(a.end(), zero.begin(), zero.end());
      return a;
    }
    default:
      throw Error(ErrorKind::IncompatibleRings,
                  x.ring()->name() + " does not embed into " + target->name());
  }
}
}  // namespace

Element embed(const Element& x, const RingPtr& target) {
  if (!embeds_into(x.ring(), target)) {
    throw Error(ErrorKind::IncompatibleRings, x.ring()->name() + " does not embed into " + target->name());
  }
  return target->from_coordinates(embed_coords(x, target));
}

}  // namespace jordan
