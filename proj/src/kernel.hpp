#pragma once

// Code-level arithmetic for finite rings. Everything here works on element
// codes (uint32) and row-major code arrays, and is what the enumeration hot
// loops run on. Not part of the public interface.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "jordan/ring.hpp"

namespace jordan::detail {

class CodeArith {
 public:
  explicit CodeArith(const Ring& ring)
      : ring_(&ring),
        size_(static_cast<std::uint32_t>(ring.size())),
        add_(ring.has_tables() ? ring.add_table() : nullptr),
        mul_(ring.has_tables() ? ring.mul_table() : nullptr),
        neg_(ring.has_tables() ? ring.neg_table() : nullptr),
        inv_(ring.has_tables() ? ring.inv_table() : nullptr),
        one_(static_cast<std::uint32_t>(ring.one_code())) {
    if (!ring.is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring.name() + " is not finite");
    if (ring.size() > (1ull << 31)) throw Error(ErrorKind::BudgetExceeded, ring.name() + " is too large");
  }

  std::uint32_t size() const { return size_; }
  std::uint32_t one() const { return one_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_ ? add_[a * size_ + b] : static_cast<std::uint32_t>(ring_->add_code(a, b));
  }
  std::uint32_t neg(std::uint32_t a) const {
    return neg_ ? neg_[a] : static_cast<std::uint32_t>(ring_->neg_code(a));
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_ ? mul_[a * size_ + b] : static_cast<std::uint32_t>(ring_->mul_code(a, b));
  }
  bool unit(std::uint32_t a) const {
    return inv_ ? inv_[a] != kNoInverse : ring_->unit_code(a);
  }
  std::uint32_t inv(std::uint32_t a) const {
    return inv_ ? inv_[a] : static_cast<std::uint32_t>(ring_->inv_code(a));
  }

  // Determinant of an n x n row-major code matrix, n <= 4 (Laplace expansion).
  std::uint32_t det(std::span<const std::uint32_t> m, std::size_t n) const {
    switch (n) {
      case 0: return one_;
      case 1: return m[0];
      case 2: return det2(m[0], m[1], m[2], m[3]);
      case 3: {
        std::uint32_t r = mul(m[0], det2(m[4], m[5], m[7], m[8]));
        r = sub(r, mul(m[1], det2(m[3], m[5], m[6], m[8])));
        return add(r, mul(m[2], det2(m[3], m[4], m[6], m[7])));
      }
      case 4: {
        auto top = minors2(m.subspan(0, 8));
        auto bottom = minors2(m.subspan(8, 8));
        return det4_from_minors(top, bottom);
      }
      default:
        return det_general(m, n);
    }
  }

  std::uint32_t det2(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
    return sub(mul(a, d), mul(b, c));
  }

  // 2x2 minors of a 2 x 4 block, column pairs (01,02,03,12,13,23).
  std::array<std::uint32_t, 6> minors2(std::span<const std::uint32_t> rows) const {
    const auto* r0 = rows.data();
    const auto* r1 = rows.data() + 4;
    return {det2(r0[0], r0[1], r1[0], r1[1]), det2(r0[0], r0[2], r1[0], r1[2]),
            det2(r0[0], r0[3], r1[0], r1[3]), det2(r0[1], r0[2], r1[1], r1[2]),
            det2(r0[1], r0[3], r1[1], r1[3]), det2(r0[2], r0[3], r1[2], r1[3])};
  }

  // Laplace expansion along the first two rows.
  std::uint32_t det4_from_minors(const std::array<std::uint32_t, 6>& top,
                                 const std::array<std::uint32_t, 6>& bottom) const {
    std::uint32_t r = mul(top[0], bottom[5]);
    r = sub(r, mul(top[1], bottom[4]));
    r = add(r, mul(top[2], bottom[3]));
    r = add(r, mul(top[3], bottom[2]));
    r = sub(r, mul(top[4], bottom[1]));
    return add(r, mul(top[5], bottom[0]));
  }

  std::uint32_t det_general(std::span<const std::uint32_t> m, std::size_t n) const {
    // Cofactor expansion along the first row; only used for tiny n > 4.
    if (n <= 4) return det(m, n);
    std::vector<std::uint32_t> minor((n - 1) * (n - 1));
    std::uint32_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t k = 0;
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (j != c) minor[k++] = m[i * n + j];
      std::uint32_t term = mul(m[c], det_general(minor, n - 1));
      total = (c % 2 == 0) ? add(total, term) : sub(total, term);
    }
    return total;
  }

  // out = a (r x k) * b (k x c)
  void matmul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
              std::span<std::uint32_t> out, std::size_t r, std::size_t k, std::size_t c) const {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        std::uint32_t s = 0;
        for (std::size_t l = 0; l < k; ++l) {
          const std::uint32_t x = a[i * k + l];
          if (x != 0) s = add(s, mul(x, b[l * c + j]));
        }
        out[i * c + j] = s;
      }
    }
  }

  // Inverse through the adjugate; false if the determinant is not a unit.
  bool inverse(std::span<const std::uint32_t> m, std::size_t n, std::span<std::uint32_t> out) const {
    const std::uint32_t d = det_general(m, n);
    if (!unit(d)) return false;
    const std::uint32_t dinv = inv(d);
    if (n == 1) {
      out[0] = dinv;
      return true;
    }
    std::vector<std::uint32_t> minor((n - 1) * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (a == i) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (b != j) minor[k++] = m[a * n + b];
        }
        std::uint32_t cof = det_general(minor, n - 1);
        if ((i + j) % 2 == 1) cof = neg(cof);
        out[j * n + i] = mul(cof, dinv);
      }
    }
    return true;
  }

 private:
  const Ring* ring_;
  std::uint32_t size_;
  const std::uint16_t* add_;
  const std::uint16_t* mul_;
  const std::uint16_t* neg_;
  const std::uint16_t* inv_;
  std::uint32_t one_;
};

// Lexicographic odometer over all q^(n*n) code matrices, restricted to an
// index range, reporting the invertible ones.
template <class Visit>
void scan_gl_range(const CodeArith& ar, std::size_t n, std::uint64_t begin, std::uint64_t end,
                   Visit&& visit) {
  const std::size_t cells = n * n;
  const std::uint32_t q = ar.size();
  std::vector<std::uint32_t> m(cells, 0);
  {
    std::uint64_t idx = begin;
    for (std::size_t c = cells; c-- > 0;) {
      m[c] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
  }
  std::array<std::uint32_t, 6> top{};
  bool top_valid = false;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint32_t d;
    if (n == 4) {
      if (!top_valid) {
        top = ar.minors2(std::span<const std::uint32_t>(m).subspan(0, 8));
        top_valid = true;
      }
      d = ar.det4_from_minors(top, ar.minors2(std::span<const std::uint32_t>(m).subspan(8, 8)));
    } else {
      d = ar.det(m, n);
    }
    if (ar.unit(d)) {
      if (!visit(std::span<const std::uint32_t>(m))) return;
    }
    // advance the odometer
    for (std::size_t c = cells; c-- > 0;) {
      if (++m[c] < q) {
        if (c < 8) top_valid = false;
        break;
      }
      m[c] = 0;
      if (c < 8) top_valid = false;
    }
  }
}

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace jordan::detail
