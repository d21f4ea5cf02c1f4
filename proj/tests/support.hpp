#pragma once

// Independent arithmetic used as an oracle by the tests: plain integers mod p,
// permutation-expansion determinants, closed-form group orders. Nothing here
// calls into the library's arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "jordan/matrix.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<long long>>;

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline long long det_mod(const IntMat& m, long long p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    long long term = sign;
    for (std::size_t i = 0; i < n; ++i) term = mod(term * m[i][perm[i]], p);
    total = mod(total + term, p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// |GL_n(F_q)| = prod (q^n - q^i)
inline std::uint64_t gl_formula(std::size_t n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t r = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

// Calls f on every n x n matrix over Z/p.
template <class F>
void for_each_matrix(std::size_t n, long long p, F&& f) {
  IntMat m(n, std::vector<long long>(n, 0));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t c = n * n; c-- > 0;) {
      m[c / n][c % n] = static_cast<long long>(x % p);
      x /= p;
    }
    f(m);
  }
}

inline IntMat mul_mod(const IntMat& a, const IntMat& b, long long p) {
  IntMat c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] = mod(c[i][j] + a[i][k] * b[k][j], p);
  return c;
}

inline IntMat transpose(const IntMat& a) {
  IntMat t(a[0].size(), std::vector<long long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Residues of a matrix over a prime field.
inline IntMat ints(const jordan::Matrix& m) {
  IntMat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = std::stoll(m(i, j).str());
  return out;
}

inline jordan::Matrix random_matrix(std::mt19937_64& rng, const jordan::RingPtr& ring, std::size_t r, std::size_t c) {
  const auto els = ring->elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  jordan::Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = els[pick(rng)];
  return m;
}

inline jordan::Matrix random_gl(std::mt19937_64& rng, const jordan::RingPtr& ring, std::size_t n) {
  for (;;) {
    jordan::Matrix m = random_matrix(rng, ring, n, n);
    if (jordan::is_invertible(m)) return m;
  }
}

inline jordan::Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  const auto q = jordan::Ring::rationals();
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  jordan::Matrix m(q, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = q->from_rational(jordan::Rational(num(rng), den(rng)));
  return m;
}

}  // namespace oracle
