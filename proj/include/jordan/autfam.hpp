#pragma once

// Explicit automorphism families of the type I and type IV systems.

#include <optional>
#include <vector>

#include "jordan/catalog.hpp"

namespace jordan {

// ---- type IV ---------------------------------------------------------------

// a in GO(b) -> (a, m_a^{-1} a) on V_IV.
PairMap go_to_pair_aut(const Matrix& a, const BilinearForm& form);  // NotSimilitude
// a in O(b) -> a on That_IV.
Matrix ortho_to_triple_aut(const Matrix& a, const BilinearForm& form);  // NotIsometry
// [1] (+) f on J(V, b) = F1 + V.
Matrix extend_by_unit(const Matrix& f);

// ---- type I generators -----------------------------------------------------

// On VhI_{m,n}: L^_a = (L_a, R_{a^{-1}}), R^_b = (R_b, L_{b^{-1}}).
PairMap hat_left(const Matrix& a, std::size_t n);
PairMap hat_right(const Matrix& b, std::size_t m);
PairMap hat_generators(const Matrix& a, const Matrix& b);  // L^_a R^_b
// On VtI_{m,n}: L~_a = (L_a, L_{a^T}^{-1}), R~_b = (R_b, R_{b^T}^{-1}).
PairMap tilde_left(const Matrix& a, std::size_t n);
PairMap tilde_right(const Matrix& b, std::size_t m);
PairMap tilde_generators(const Matrix& a, const Matrix& b);  // L~_a R~_b

// X -> e1 X + e2 X^T on M_n, as an n^2 x n^2 matrix.
Matrix transpose_twist(const Element& e1, std::size_t n);

// ---- idempotent-twisted maps -----------------------------------------------

// X -> e1 g X g^{-1} (+/-) e2 g X^T g^{-1}; g is kept modulo scalars.
struct TwistedMap {
  Element e1;
  Matrix g;
  Sign sign = Sign::Plus;
};
TwistedMap make_twisted_map(const Element& e1, const Matrix& g, Sign sign);  // canonicalizes g
Matrix twisted_map_apply(const TwistedMap& t, const Matrix& x);
Matrix twisted_linear_map(const TwistedMap& t);
TwistedMap twisted_compose(const TwistedMap& first, const TwistedMap& second);  // first o second
bool operator==(const TwistedMap& s, const TwistedMap& t);

// e' * e'' = e'e'' + (1 - e')(1 - e'').
Element idempotent_product(const Element& e1, const Element& e2);

// Unit s making s * m the canonical representative of m modulo units:
// first nonzero entry 1 over fields, per component over products, first
// unit entry 1 over local rings, least scaled matrix otherwise (finite).
Element scalar_normalizer(const Matrix& m);  // NonFieldRing

// ---- determinant similitudes -----------------------------------------------

bool det_isometry_check(const Matrix& f, std::size_t n);
struct SimilitudeFactor {
  Matrix a;         // f(1)
  Matrix isometry;  // L_a^{-1} f
  Element multiplier;  // det(a)
};
SimilitudeFactor det_similitude_factor(const Matrix& f, std::size_t n);  // NotSimilitude

// L_a R_{b^T} f_tau on M_n.
Matrix phi_n(const Matrix& a, const Matrix& b, const Element& tau);
// (a, b, tau) with Phi_n(a, b, tau) = id, enumerated over GL_n(R)^2 x mu_2(R).
struct KernelElement {
  Matrix a, b;
  Element tau;
};
std::vector<KernelElement> phi_n_kernel(const RingPtr& ring, std::size_t n);
// Kernel is exactly T = {(r1, r^{-1}1, 1)}.
bool phi_n_kernel_check(const RingPtr& ring, std::size_t n = 2);

// ---- central products ------------------------------------------------------

// Class of (a, b[, tau]) modulo (r a, r^{-1} b).
struct CentralProductElement {
  Matrix a, b;
  std::optional<Element> tau;
  friend bool operator==(const CentralProductElement& x, const CentralProductElement& y) {
    return x.a == y.a && x.b == y.b && x.tau.has_value() == y.tau.has_value() && (!x.tau || *x.tau == *y.tau);
  }
  friend bool operator<(const CentralProductElement& x, const CentralProductElement& y);
};
CentralProductElement central_canonicalize(const Matrix& a, const Matrix& b,
                                           const std::optional<Element>& tau = std::nullopt);
CentralProductElement central_multiply(const CentralProductElement& x, const CentralProductElement& y);
CentralProductElement central_inverse(const CentralProductElement& x);

// ---- Aut(T_J) = mu_2 Aut(J) -------------------------------------------------

struct TripleFactorization {
  Element r;
  Matrix psi;
};
// Throws TheoremViolation(NotFactorable) with a JSON reproducer.
TripleFactorization factor_triple_aut(const JordanAlgebra& algebra, const Matrix& phi);

// a in GO_m, b in GO_n (standard forms) with m_a m_b = 1.
bool tti_membership(const Matrix& a, const Matrix& b);

}  // namespace jordan
