#include "jordan/autfam.hpp"

#include <algorithm>

#include "jordan/serialize.hpp"
#include "kernel.hpp"

namespace jordan {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square() || m.rows() == 0) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " must be square");
}

Matrix checked_inverse(const Matrix& m, const char* what) {
  require_square(m, what);
  if (!is_invertible(m)) throw Error(ErrorKind::NotInvertible, std::string(what) + " is not invertible");
  return inverse(m);
}

bool is_local(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return true;
    case RingKind::DualNumbers:
      return is_local(ring->first());
    case RingKind::Product:
      return false;
  }
  return false;
}

// Component of x in a product ring.
Element component(const Element& x, bool second) {
  const RingPtr& ring = x.ring();
  const std::vector<Rational> coords = x.coordinates();
  const std::size_t w = ring->first()->width();
  if (!second) return ring->first()->from_coordinates(std::span<const Rational>(coords).subspan(0, w));
  return ring->second()->from_coordinates(std::span<const Rational>(coords).subspan(w));
}

Element join(const RingPtr& ring, const Element& x, const Element& y) {
  std::vector<Rational> coords = x.coordinates();
  const std::vector<Rational> rest = y.coordinates();
  coords.insert(coords.end(), rest.begin(), rest.end());
  return ring->from_coordinates(coords);
}

Element normalizer_of(const std::vector<Element>& entries, const RingPtr& ring) {
  if (ring->is_field()) {
    for (const Element& e : entries)
      if (!e.is_zero()) return e.inverse();
    throw Error(ErrorKind::BadInput, "cannot normalize a zero matrix");
  }
  if (is_local(ring)) {
    for (const Element& e : entries)
      if (e.is_unit()) return e.inverse();
    throw Error(ErrorKind::BadInput, "matrix has no unit entry");
  }
  if (ring->kind() == RingKind::Product) {
    std::vector<Element> left, right;
    for (const Element& e : entries) {
      left.push_back(component(e, false));
      right.push_back(component(e, true));
    }
    return join(ring, normalizer_of(left, ring->first()), normalizer_of(right, ring->second()));
  }
  if (!ring->is_finite()) {
    throw Error(ErrorKind::NonFieldRing, "no canonical scalar representatives over " + ring->name());
  }
  // least scaled entry sequence over all units
  std::optional<Element> best;
  std::vector<Element> best_entries;
  for (const Element& u : ring->units()) {
    std::vector<Element> scaled;
    scaled.reserve(entries.size());
    for (const Element& e : entries) scaled.push_back(u * e);
    if (!best || scaled < best_entries) {
      best = u;
      best_entries = std::move(scaled);
    }
  }
  return *best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Type IV

PairMap go_to_pair_aut(const Matrix& a, const BilinearForm& form) {
  const std::optional<Element> m = similitude_multiplier(a, form);
  if (!m) throw Error(ErrorKind::NotSimilitude, "matrix is not a similitude of the form");
  return {a, m->inverse() * a};
}

Matrix ortho_to_triple_aut(const Matrix& a, const BilinearForm& form) {
  const std::optional<Element> m = similitude_multiplier(a, form);
  if (!m || !m->is_one()) throw Error(ErrorKind::NotIsometry, "matrix is not an isometry of the form");
  return a;
}

Matrix extend_by_unit(const Matrix& f) {
  require_square(f, "f");
  Matrix out(f.ring(), f.rows() + 1, f.rows() + 1);
  out(0, 0) = f.ring()->one();
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out(i + 1, j + 1) = f(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Type I

PairMap hat_left(const Matrix& a, std::size_t n) {
  const Matrix ainv = checked_inverse(a, "a");
  // V+ = M_{m,n}: X -> aX ; V- = M_{n,m}: Y -> Y a^{-1}
  return {left_mult_map(a, n), right_mult_map(ainv, n)};
}

PairMap hat_right(const Matrix& b, std::size_t m) {
  const Matrix binv = checked_inverse(b, "b");
  // V+: X -> Xb ; V-: Y -> b^{-1} Y
  return {right_mult_map(b, m), left_mult_map(binv, m)};
}

PairMap hat_generators(const Matrix& a, const Matrix& b) { return hat_left(a, b.rows()) * hat_right(b, a.rows()); }

PairMap tilde_left(const Matrix& a, std::size_t n) {
  const Matrix ainv = checked_inverse(a, "a");
  return {left_mult_map(a, n), left_mult_map(ainv.transpose(), n)};
}

PairMap tilde_right(const Matrix& b, std::size_t m) {
  const Matrix binv = checked_inverse(b, "b");
  return {right_mult_map(b, m), right_mult_map(binv.transpose(), m)};
}

PairMap tilde_generators(const Matrix& a, const Matrix& b) {
  return tilde_left(a, b.rows()) * tilde_right(b, a.rows());
}

Matrix transpose_twist(const Element& e1, std::size_t n) {
  if (!(e1 * e1 == e1)) throw Error(ErrorKind::NotIdempotent, e1.str() + " is not idempotent");
  const RingPtr& ring = e1.ring();
  const Element e2 = ring->one() - e1;
  return e1 * Matrix::identity(ring, n * n) + e2 * transpose_map(ring, n, n);
}

// ---------------------------------------------------------------------------
// Twisted maps

Element idempotent_product(const Element& e1, const Element& e2) {
  const Element one = e1.ring()->one();
  return e1 * e2 + (one - e1) * (one - e2);
}

Element scalar_normalizer(const Matrix& m) { return normalizer_of(m.entries(), m.ring()); }

TwistedMap make_twisted_map(const Element& e1, const Matrix& g, Sign sign) {
  if (!same_ring(e1.ring(), g.ring())) throw Error(ErrorKind::IncompatibleRings, "idempotent and g differ in ring");
  if (!(e1 * e1 == e1)) throw Error(ErrorKind::NotIdempotent, e1.str() + " is not idempotent");
  require_square(g, "g");
  if (!is_invertible(g)) throw Error(ErrorKind::NotInvertible, "g is not invertible");
  return {e1, scalar_normalizer(g) * g, sign};
}

Matrix twisted_map_apply(const TwistedMap& t, const Matrix& x) {
  if (!x.is_square() || x.rows() != t.g.rows()) throw Error(ErrorKind::ShapeMismatch, "argument size");
  const Matrix ginv = inverse(t.g);
  const Element e2 = t.e1.ring()->one() - t.e1;
  const Matrix straight = t.g * x * ginv;
  const Matrix twisted = t.g * x.transpose() * ginv;
  return t.sign == Sign::Plus ? t.e1 * straight + e2 * twisted : t.e1 * straight - e2 * twisted;
}

Matrix twisted_linear_map(const TwistedMap& t) {
  const std::size_t n = t.g.rows();
  const RingPtr& ring = t.g.ring();
  // Ad_g = L_g R_{g^{-1}}
  const Matrix ad = left_mult_map(t.g, n) * right_mult_map(inverse(t.g), n);
  const Element e2 = ring->one() - t.e1;
  const Matrix twisted = ad * transpose_map(ring, n, n);
  return t.sign == Sign::Plus ? t.e1 * ad + e2 * twisted : t.e1 * ad - e2 * twisted;
}

TwistedMap twisted_compose(const TwistedMap& first, const TwistedMap& second) {
  if (first.g.rows() != second.g.rows()) throw Error(ErrorKind::ShapeMismatch, "twisted maps of different sizes");
  if (!same_ring(first.g.ring(), second.g.ring())) throw Error(ErrorKind::IncompatibleRings, "twisted map rings");
  if (first.sign != second.sign) throw Error(ErrorKind::BadInput, "cannot compose twisted maps of opposite signs");
  const Element& e1 = first.e1;
  const Element e2 = e1.ring()->one() - e1;
  // psi = e1' psi' psi'' + e2' psi' sigma~(psi''), and sigma~(Ad_g) = Ad_{g^{-T}}
  const Matrix g = e1 * (first.g * second.g) + e2 * (first.g * inverse(second.g).transpose());
  return make_twisted_map(idempotent_product(first.e1, second.e1), g, first.sign);
}

bool operator==(const TwistedMap& s, const TwistedMap& t) {
  return s.sign == t.sign && s.e1 == t.e1 && s.g == t.g;
}

// ---------------------------------------------------------------------------
// Determinant similitudes

bool det_isometry_check(const Matrix& f, std::size_t n) {
  const RingPtr& ring = f.ring();
  const std::size_t d = n * n;
  if (f.rows() != d || f.cols() != d) throw Error(ErrorKind::ShapeMismatch, "map does not act on M_n");
  if (ring->is_finite()) {
    const std::uint64_t total = detail::checked_power(ring->size(), d, 4'000'000);
    if (total > 4'000'000) throw Error(ErrorKind::BudgetExceeded, "M_n(R) too large for an exhaustive det check");
    detail::CodeArith ar(*ring);
    const std::vector<std::uint32_t> fc = f.codes();
    std::vector<std::uint32_t> x(d, 0), y(d);
    const std::uint32_t q = ar.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      ar.matmul(fc, x, y, d, d, 1);
      if (ar.det_general(y, n) != ar.det_general(x, n)) return false;
      for (std::size_t c = d; c-- > 0;) {
        if (++x[c] < q) break;
        x[c] = 0;
      }
    }
    return true;
  }
  // det(f(X)) - det(X) has degree <= n in each entry, so it vanishes
  // identically once it vanishes on the grid {0..n}^(n^2).
  std::vector<long long> x(d, 0);
  while (true) {
    Vector v;
    for (long long c : x) v.push_back(ring->from_integer(c));
    const Matrix xm = unflatten(v, n, n);
    if (!(det(unflatten(f.apply(v), n, n)) == det(xm))) return false;
    std::size_t c = d;
    while (c > 0) {
      --c;
      if (++x[c] <= static_cast<long long>(n)) break;
      x[c] = 0;
      if (c == 0) return true;
    }
  }
}

SimilitudeFactor det_similitude_factor(const Matrix& f, std::size_t n) {
  const RingPtr& ring = f.ring();
  if (f.rows() != n * n || f.cols() != n * n) throw Error(ErrorKind::ShapeMismatch, "map does not act on M_n");
  const Matrix a = unflatten(f.apply(flatten(Matrix::identity(ring, n))), n, n);
  if (!is_invertible(a)) throw Error(ErrorKind::NotSimilitude, "f(1) is not invertible");
  Matrix iso = left_mult_map(inverse(a), n) * f;
  if (!det_isometry_check(iso, n)) throw Error(ErrorKind::NotSimilitude, "L_{f(1)}^{-1} f is not a det isometry");
  return {a, std::move(iso), det(a)};
}

Matrix phi_n(const Matrix& a, const Matrix& b, const Element& tau) {
  require_square(a, "a");
  require_square(b, "b");
  if (a.rows() != b.rows()) throw Error(ErrorKind::BadInput, "a and b differ in size");
  if (!(tau * tau == tau.ring()->one())) throw Error(ErrorKind::BadInput, tau.str() + " is not in mu_2");
  if (!is_invertible(a) || !is_invertible(b)) throw Error(ErrorKind::BadInput, "a and b must be invertible");
  const std::size_t n = a.rows();
  return left_mult_map(a, n) * right_mult_map(b.transpose(), n) * transpose_twist(root_to_idempotent(tau), n);
}

std::vector<KernelElement> phi_n_kernel(const RingPtr& ring, std::size_t n) {
  if (!ring->is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring->name() + " cannot be enumerated");
  const std::uint64_t gl = gl_order(n, ring);
  const std::vector<Element> roots = mu_n(ring, 2);
  if (gl > 20'000 || gl * gl * roots.size() > 60'000'000ull) {
    throw Error(ErrorKind::BudgetExceeded, "GL_n(R)^2 x mu_2(R) too large");
  }
  detail::CodeArith ar(*ring);
  std::vector<std::vector<std::uint32_t>> group;
  for (const Matrix& g : enumerate_gl(n, ring)) group.push_back(g.codes());
  const std::uint32_t one = ar.one();
  std::vector<KernelElement> out;
  for (const Element& tau : roots) {
    const Element e1 = root_to_idempotent(tau);
    const auto c1 = static_cast<std::uint32_t>(e1.code());
    const auto c2 = static_cast<std::uint32_t>((ring->one() - e1).code());
    for (const auto& a : group)
      for (const auto& b : group) {
        // (a f_tau(E_ij) b^T)_pq = e1 a_pi b_qj + e2 a_pj b_qi must be delta
        bool identity = true;
        for (std::size_t i = 0; i < n && identity; ++i)
          for (std::size_t j = 0; j < n && identity; ++j)
            for (std::size_t p = 0; p < n && identity; ++p)
              for (std::size_t q = 0; q < n && identity; ++q) {
                const std::uint32_t v = ar.add(ar.mul(c1, ar.mul(a[p * n + i], b[q * n + j])),
                                               ar.mul(c2, ar.mul(a[p * n + j], b[q * n + i])));
                identity = v == ((p == i && q == j) ? one : 0u);
              }
        if (identity)
          out.push_back({Matrix::from_codes(ring, n, n, a), Matrix::from_codes(ring, n, n, b), tau});
      }
  }
  return out;
}

bool phi_n_kernel_check(const RingPtr& ring, std::size_t n) {
  const std::vector<KernelElement> kernel = phi_n_kernel(ring, n);
  if (kernel.size() != ring->units().size()) return false;
  for (const KernelElement& k : kernel) {
    if (!k.tau.is_one()) return false;
    const Element r = k.a(0, 0);
    if (!r.is_unit()) return false;
    if (!(k.a == Matrix::scalar(r, n)) || !(k.b == Matrix::scalar(r.inverse(), n))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Central products

bool operator<(const CentralProductElement& x, const CentralProductElement& y) {
  if (!(x.a == y.a)) return x.a < y.a;
  if (!(x.b == y.b)) return x.b < y.b;
  if (x.tau.has_value() != y.tau.has_value()) return !x.tau.has_value();
  return x.tau && *x.tau < *y.tau;
}

CentralProductElement central_canonicalize(const Matrix& a, const Matrix& b, const std::optional<Element>& tau) {
  require_square(a, "a");
  require_square(b, "b");
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorKind::IncompatibleRings, "a and b differ in ring");
  if (!is_invertible(a) || !is_invertible(b)) throw Error(ErrorKind::NotInvertible, "a and b must be invertible");
  if (tau) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::BadInput, "the mu_2 flag needs m = n");
    if (!(*tau * *tau == a.ring()->one())) throw Error(ErrorKind::BadInput, tau->str() + " is not in mu_2");
  }
  const Element s = scalar_normalizer(a);
  return {s * a, s.inverse() * b, tau};
}

CentralProductElement central_multiply(const CentralProductElement& x, const CentralProductElement& y) {
  if (x.tau.has_value() != y.tau.has_value()) throw Error(ErrorKind::BadInput, "mixing flagged and unflagged elements");
  if (!x.tau) return central_canonicalize(x.a * y.a, x.b * y.b);
  const Element e1 = root_to_idempotent(*x.tau);
  const Element e2 = e1.ring()->one() - e1;
  return central_canonicalize(x.a * (e1 * y.a + e2 * y.b), x.b * (e1 * y.b + e2 * y.a), *x.tau * *y.tau);
}

CentralProductElement central_inverse(const CentralProductElement& x) {
  const Matrix ainv = inverse(x.a);
  const Matrix binv = inverse(x.b);
  if (!x.tau) return central_canonicalize(ainv, binv);
  const Element e1 = root_to_idempotent(*x.tau);
  const Element e2 = e1.ring()->one() - e1;
  return central_canonicalize(e1 * ainv + e2 * binv, e1 * binv + e2 * ainv, x.tau);
}

// ---------------------------------------------------------------------------
// Triple automorphisms of J

TripleFactorization factor_triple_aut(const JordanAlgebra& algebra, const Matrix& phi) {
  if (!algebra.unit) throw Error(ErrorKind::BadInput, "algebra has no registered unit");
  if (phi.rows() != algebra.dim || phi.cols() != algebra.dim) throw Error(ErrorKind::ShapeMismatch, "map shape");
  auto violation = [&](const std::string& why) {
    Json repro;
    repro["ring"] = algebra.ring->name();
    repro["algebra"] = to_json(algebra);
    repro["phi"] = to_json(phi);
    return TheoremViolation(ErrorKind::NotFactorable, why, repro.dump());
  };
  const Vector& u = *algebra.unit;
  const Vector image = phi.apply(u);
  std::size_t lead = 0;
  while (lead < u.size() && u[lead].is_zero()) ++lead;
  if (lead == u.size()) throw Error(ErrorKind::BadInput, "zero unit");
  if (!u[lead].is_unit()) throw Error(ErrorKind::BadInput, "unit has no invertible leading coordinate");
  const Element r = image[lead] * u[lead].inverse();
  for (std::size_t l = 0; l < u.size(); ++l)
    if (!(image[l] == r * u[l])) throw violation("phi(1) is not a multiple of 1");
  if (!(r * r == algebra.ring->one())) throw violation("phi(1) = r 1 with r^2 != 1");
  Matrix psi = r * phi;
  if (!is_algebra_automorphism(algebra, psi)) throw violation("r phi is not an algebra automorphism");
  return {r, std::move(psi)};
}

bool tti_membership(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw Error(ErrorKind::ShapeMismatch, "a and b must be square");
  const auto ma = similitude_multiplier(a, BilinearForm::standard(a.ring(), a.rows()));
  // b b^T = m_b 1
  const auto mb = similitude_multiplier(b.transpose(), BilinearForm::standard(b.ring(), b.rows()));
  return ma && mb && (*ma * *mb).is_one();
}

}  // namespace jordan
