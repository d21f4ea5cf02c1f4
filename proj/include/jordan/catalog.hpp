#pragma once

// Named type I and type IV systems, their generic traces, and the explicit
// isomorphisms between presentations.

#include <optional>
#include <string>
#include <string_view>

#include "jordan/structure.hpp"

namespace jordan {

enum class SystemTag { VIV, ThatIV, TIV, Jbilin, VtI, VhI, TtI, ThI, Mplus };
enum class StructureKind { Pair, Triple, Algebra };

std::string_view tag_name(SystemTag tag);
StructureKind structure_kind(SystemTag tag);
const char* kind_name(StructureKind kind);

struct NamedSystem {
  SystemTag tag = SystemTag::VIV;
  std::string name;  // canonical spec string, e.g. "VhI(1,2,F3)"
  RingPtr ring;
  std::size_t m = 0;  // type I row count (m = n for square systems)
  std::size_t n = 0;  // type IV: dimension of the whole carrier / algebra
  std::optional<BilinearForm> form;  // type IV: b on W, or on V for TIV/Jbilin

  std::optional<JordanPair> pair;
  std::optional<JordanTriple> triple;
  std::optional<JordanAlgebra> algebra;
  // Gram of the generic trace t: V+ x V- -> R, when registered.
  std::optional<Matrix> trace;

  StructureKind kind() const { return structure_kind(tag); }
  // Views: algebra -> triple -> pair.
  JordanTriple as_triple() const;
  JordanPair as_pair() const;
  std::size_t total_dim() const;
  AxiomReport check() const;
};

NamedSystem make_type_iv_pair(const BilinearForm& form);
NamedSystem make_type_iv_triple(const BilinearForm& form);
// J(V, b) = F1 + V with uv = b(u, v)1. No form means V = 0 and J = F.
NamedSystem make_bilinear_form_algebra(const RingPtr& ring, const std::optional<BilinearForm>& form);
NamedSystem make_t_iv(const RingPtr& ring, const std::optional<BilinearForm>& form);
NamedSystem make_vti(std::size_t m, std::size_t n, const RingPtr& ring);
NamedSystem make_vhi(std::size_t m, std::size_t n, const RingPtr& ring);
NamedSystem make_tti(std::size_t m, std::size_t n, const RingPtr& ring);
NamedSystem make_thi(std::size_t n, const RingPtr& ring);
NamedSystem make_mn_plus(std::size_t n, const RingPtr& ring);

// Standard-form shortcuts keyed by total dimension n.
NamedSystem make_system(SystemTag tag, std::size_t m, std::size_t n, const RingPtr& ring);

// "VhI(1,2,F3)", "VIV(n=2,ring=F5)", "TIV(2,F5)", "Mplus(2,F3)", ...
NamedSystem parse_system_spec(std::string_view text);

std::optional<Element> sqrt_minus_one(const RingPtr& ring);

// Lambda: V_J -> V_IV(J, b~) with sigma*i*1 -> 1 and v -> v (unit first).
PairMap lambda_isomorphism(const RingPtr& ring, const std::optional<BilinearForm>& form, const Element& i);

// (x -> x, y -> y^T): VtI_{m,n} -> VhI_{m,n}.
PairMap vti_to_vhi(std::size_t m, std::size_t n, const RingPtr& ring);
// sigma~(psi)(X) = psi(X^T)^T for psi on M_{m,n}; result acts on M_{n,m}.
Matrix sigma_tilde(const Matrix& psi, std::size_t m, std::size_t n);

}  // namespace jordan
