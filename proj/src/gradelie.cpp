#include "jordan/gradelie.hpp"

namespace jordan {

int GradedGL::degree(std::size_t unit) const {
  const std::size_t i = unit / k();
  const std::size_t j = unit % k();
  if (i < m && j >= m) return 1;
  if (i >= m && j < m) return -1;
  return 0;
}

GradedGL make_graded_gl(std::size_t m, std::size_t n, const RingPtr& ring) {
  if (m == 0 || n == 0) throw Error(ErrorKind::BadDims, "both blocks must be nonempty");
  GradedGL g;
  g.ring = ring;
  g.m = m;
  g.n = n;
  const std::size_t k = m + n;
  g.bracket = ProductTensor(ring, k * k);
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  for (std::size_t a = 0; a < k * k; ++a)
    for (std::size_t b = 0; b < k * k; ++b) {
      const std::size_t i = a / k, j = a % k, p = b / k, l = b % k;
      if (j == p) g.bracket.at(a, b, i * k + l) += ring->one();
      if (l == i) g.bracket.at(a, b, p * k + j) -= ring->one();
    }
  for (std::size_t u = 0; u < k * k; ++u) g.pieces[g.degree(u) + 1].push_back(u);
  return g;
}

namespace {

// [v, e_c] for a sparse vector v.
Vector bracket_with_unit(const GradedGL& g, const Vector& v, std::size_t c) {
  const std::size_t d = v.size();
  Vector out = zero_vector(g.ring, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (v[a].is_zero()) continue;
    for (std::size_t l = 0; l < d; ++l) {
      const Element& t = g.bracket.at(a, c, l);
      if (!t.is_zero()) out[l] += v[a] * t;
    }
  }
  return out;
}

}  // namespace

GradingReport check_grading(const GradedGL& g) {
  GradingReport r;
  const std::size_t d = g.k() * g.k();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector v = g.bracket.basis_value(a, b);
      const Vector w = g.bracket.basis_value(b, a);
      const int target = g.degree(a) + g.degree(b);
      for (std::size_t l = 0; l < d; ++l) {
        if (!(v[l] == -w[l]) && r.antisymmetric) {
          r.antisymmetric = false;
          r.detail = "antisymmetry fails at units " + std::to_string(a) + ", " + std::to_string(b);
        }
        if (!v[l].is_zero() && g.degree(l) != target && r.graded) {
          r.graded = false;
          r.detail = "bracket of units " + std::to_string(a) + ", " + std::to_string(b) + " leaves degree " +
                     std::to_string(target);
        }
      }
    }
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
  for (std::size_t a = 0; a < d && r.jacobi; ++a)
    for (std::size_t b = 0; b < d && r.jacobi; ++b)
      for (std::size_t c = 0; c < d && r.jacobi; ++c) {
        const Vector x = bracket_with_unit(g, g.bracket.basis_value(a, b), c);
        const Vector y = bracket_with_unit(g, g.bracket.basis_value(b, c), a);
        const Vector z = bracket_with_unit(g, g.bracket.basis_value(c, a), b);
        for (std::size_t l = 0; l < d; ++l)
          if (!(x[l] + y[l] + z[l]).is_zero()) {
            r.jacobi = false;
            r.detail = "Jacobi fails at units " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                       std::to_string(c);
            break;
          }
      }
  return r;
}

JordanPair pair_from_grading(const GradedGL& g) {
  const GradingReport report = check_grading(g);
  if (!report.passed()) throw Error(ErrorKind::GradingViolation, report.detail);
  const std::size_t m = g.m, n = g.n, k = g.k();
  // V+ index i*n+j <-> E_{i, m+j};  V- index i*m+j <-> E_{m+i, j}
  auto plus_unit = [&](std::size_t idx) { return (idx / n) * k + m + idx % n; };
  auto minus_unit = [&](std::size_t idx) { return (m + idx / m) * k + idx % m; };
  const std::size_t d = m * n;
  JordanPair p = JordanPair::make(g.ring, d, d);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto outer = [&](std::size_t idx) { return s == Sign::Plus ? plus_unit(idx) : minus_unit(idx); };
    auto inner = [&](std::size_t idx) { return s == Sign::Plus ? minus_unit(idx) : plus_unit(idx); };
    TripleTensor& t = p.tensor[index_of(s)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t c = 0; c < d; ++c) {
          const Vector v = bracket_with_unit(g, g.bracket.basis_value(outer(i), inner(j)), outer(c));
          for (std::size_t l = 0; l < k * k; ++l) {
            if (v[l].is_zero()) continue;
            if (g.degree(l) != (s == Sign::Plus ? 1 : -1)) {
              throw Error(ErrorKind::GradingViolation, "double bracket leaves the outer piece");
            }
          }
          for (std::size_t l = 0; l < d; ++l) t.at(i, j, c, l) = v[outer(l)];
        }
  }
  return p;
}

}  // namespace jordan
