#include <doctest.h>

#include <array>
#include <random>

#include "jordan/autfam.hpp"
#include "jordan/serialize.hpp"
#include "support.hpp"

using namespace jordan;

namespace {

// Plain-integer Jordan triple of dim 2 over F_p: t[i][j][k][l].
using Toy = std::array<std::array<std::array<std::array<long long, 2>, 2>, 2>, 2>;

std::array<long long, 2> toy_apply(const Toy& t, const std::array<long long, 2>& x, const std::array<long long, 2>& y,
                                   const std::array<long long, 2>& z, long long p) {
  std::array<long long, 2> out{0, 0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[l] = oracle::mod(out[l] + x[i] * y[j] * z[k] * t[i][j][k][l], p);
  return out;
}

// Independent evaluation of both triple identities on basis vectors.
std::pair<bool, bool> toy_axioms(const Toy& t, long long p) {
  const std::array<std::array<long long, 2>, 2> e{{{1, 0}, {0, 1}}};
  bool outer = true, dident = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) outer = outer && toy_apply(t, e[a], e[b], e[c], p) == toy_apply(t, e[c], e[b], e[a], p);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          for (int z = 0; z < 2; ++z) {
            // [D_xy, D_uv] z = D_{D_xy u, v} z - D_{u, D_yx v} z
            const auto l1 = toy_apply(t, e[x], e[y], toy_apply(t, e[u], e[v], e[z], p), p);
            const auto l2 = toy_apply(t, e[u], e[v], toy_apply(t, e[x], e[y], e[z], p), p);
            const auto r1 = toy_apply(t, toy_apply(t, e[x], e[y], e[u], p), e[v], e[z], p);
            const auto r2 = toy_apply(t, e[u], toy_apply(t, e[y], e[x], e[v], p), e[z], p);
            for (int l = 0; l < 2; ++l) dident = dident && oracle::mod(l1[l] - l2[l] - r1[l] + r2[l], p) == 0;
          }
  return {outer, dident};
}

JordanTriple toy_triple(const Toy& t, const RingPtr& f) {
  JordanTriple out = JordanTriple::make(f, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out.tensor.at(i, j, k, l) = f->from_integer(t[i][j][k][l]);
  return out;
}

Vector vec(const RingPtr& r, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(r->from_integer(x));
  return v;
}

}  // namespace

TEST_CASE("toy tensors: library verdict matches an independent evaluation") {
  const RingPtr f3 = Ring::parse("F3");
  Toy good{};
  good[0][0][0][0] = 1;  // {e1,e1,e1} = e1
  Toy bad{};
  bad[0][1][0][0] = 1;  // {e1,e2,e1} = e1

  const auto [g_outer, g_d] = toy_axioms(good, 3);
  CHECK(g_outer);
  CHECK(g_d);
  CHECK(check_axioms(toy_triple(good, f3)).passed());

  const auto [b_outer, b_d] = toy_axioms(bad, 3);
  CHECK(b_outer);  // symmetric under x <-> z already
  CHECK_FALSE(b_d);
  const AxiomReport r = check_axioms(toy_triple(bad, f3));
  CHECK(r.status == AxiomReport::Status::Fail);
  CHECK(r.identity == "D-identity");

  // random 2-dim tensors: verdicts agree
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coin(0, 5);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    Toy x{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) x[i][j][k][l] = coin(rng) < 4 ? 0 : coin(rng) % 3;
    const auto [o, d] = toy_axioms(x, 3);
    agree += check_axioms(toy_triple(x, f3)).passed() == (o && d);
  }
  CHECK(agree == 200);
}

TEST_CASE("refuse above the dimension limit") {
  const RingPtr f3 = Ring::parse("F3");
  CHECK(check_axioms(JordanTriple::make(f3, kAxiomDimLimit + 1)).status == AxiomReport::Status::Refused);
  CHECK(check_axioms(JordanTriple::make(f3, kAxiomDimLimit)).passed());
}

TEST_CASE("type IV Q-operator formula") {
  for (const char* name : {"F5", "Q"}) {
    const RingPtr r = Ring::parse(name);
    const NamedSystem v = make_system(SystemTag::VIV, 0, 3, r);
    const BilinearForm& b = *v.form;
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
      const Matrix xs = r->is_finite() ? oracle::random_matrix(rng, r, 2, 3) : oracle::random_rational_matrix(rng, 2, 3);
      Vector x, y;
      for (std::size_t i = 0; i < 3; ++i) {
        x.push_back(xs(0, i));
        y.push_back(xs(1, i));
      }
      Vector expect(3);
      for (std::size_t i = 0; i < 3; ++i) expect[i] = b(x, y) * x[i] - b.quadratic(x) * y[i];
      CHECK(q_operator(*v.pair, Sign::Plus, x, y) == expect);
    }
    const Vector zero = zero_vector(r, 3);
    const Vector y = basis_vector(r, 3, 1);
    CHECK(d_operator(*v.pair, Sign::Plus, zero, y).is_zero());
    CHECK(q_operator(*v.pair, Sign::Minus, zero, y) == zero);
  }
}

TEST_CASE("VhI_2: D_{1,1} is the identity") {
  const RingPtr f = Ring::parse("F5");
  const NamedSystem v = make_vhi(2, 2, f);
  const Vector one = flatten(Matrix::identity(f, 2));
  // {1,1,z} = z + z = 2z
  CHECK(d_operator(*v.pair, Sign::Plus, one, one) == Matrix::scalar(f->from_integer(2), 4));
  CHECK_THROWS_AS(d_operator(*v.pair, Sign::Plus, vec(f, {1, 0}), one), Error);
}

TEST_CASE("algebra checks against full polynomial evaluation") {
  // Over F5 the Jordan identity has degree <= 3 in each coordinate of x, so
  // checking every point of F5^2 decides it.
  const RingPtr f = Ring::parse("F5");
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(0, 4), coin(0, 2);
  int agree = 0, jordan_count = 0;
  for (int t = 0; t < 60; ++t) {
    JordanAlgebra a = JordanAlgebra::make(f, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = i; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) {
          const Element c = f->from_integer(coin(rng) ? 0 : coef(rng));
          a.product.at(i, j, l) = c;
          a.product.at(j, i, l) = c;
        }
    bool brute = true;
    for (const auto& x0 : f->elements())
      for (const auto& x1 : f->elements())
        for (const auto& y0 : f->elements())
          for (const auto& y1 : f->elements()) {
            const Vector x{x0, x1}, y{y0, y1};
            const Vector x2 = a.product(x, x);
            brute = brute && a.product(a.product(x2, y), x) == a.product(x2, a.product(y, x));
          }
    const bool lib = check_axioms(a).passed();
    agree += lib == brute;
    jordan_count += brute;
  }
  CHECK(agree == 60);
  CHECK(jordan_count > 0);
  CHECK(jordan_count < 60);

  JordanAlgebra noncomm = JordanAlgebra::make(f, 2);
  noncomm.product.at(0, 1, 0) = f->one();
  CHECK(check_axioms(noncomm).identity == "commutativity");
}

TEST_CASE("triple_from_algebra") {
  const RingPtr f3 = Ring::parse("F3");
  // J = F: {x,y,z} = xyz
  JordanAlgebra field = JordanAlgebra::make(f3, 1);
  field.product.at(0, 0, 0) = f3->one();
  field.unit = vec(f3, {1});
  const JordanTriple t = triple_from_algebra(field);
  CHECK(t.tensor.at(0, 0, 0, 0).is_one());

  // M_2(F3)^+ with the factor 2 gives the ThI_2 tensor xyz + zyx
  const NamedSystem mp = make_mn_plus(2, f3);
  CHECK(triple_from_algebra(*mp.algebra, 2).tensor == make_thi(2, f3).triple->tensor);

  // J(V,b): {1,1,v} = v
  const NamedSystem j = make_system(SystemTag::Jbilin, 0, 3, Ring::parse("F5"));
  const JordanTriple tj = triple_from_algebra(*j.algebra);
  const RingPtr f5 = Ring::parse("F5");
  CHECK(tj.tensor(basis_vector(f5, 3, 0), basis_vector(f5, 3, 0), basis_vector(f5, 3, 2)) == basis_vector(f5, 3, 2));

  JordanAlgebra noncomm = JordanAlgebra::make(f3, 2);
  noncomm.product.at(0, 1, 0) = f3->one();
  CHECK_THROWS_AS(triple_from_algebra(noncomm), Error);
}

TEST_CASE("pair_from_triple copies the tensor") {
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem that = make_system(SystemTag::ThatIV, 0, 2, f3);
  const NamedSystem viv = make_system(SystemTag::VIV, 0, 2, f3);
  const JordanPair p = pair_from_triple(*that.triple);
  CHECK(p.tensor[0] == viv.pair->tensor[0]);
  CHECK(p.tensor[1] == viv.pair->tensor[1]);

  const JordanPair q = pair_from_triple(*make_thi(2, f3).triple);
  const NamedSystem vhi = make_vhi(2, 2, f3);
  CHECK(q.tensor[0] == vhi.pair->tensor[0]);
  CHECK(q.tensor[1] == vhi.pair->tensor[1]);

  const JordanPair z = pair_from_triple(JordanTriple::make(f3, 1));
  CHECK(z.tensor[0].is_zero());
  CHECK(z.tensor[1].is_zero());
}

TEST_CASE("scalar extension keeps constants and axioms") {
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem viv = make_system(SystemTag::VIV, 0, 2, f3);
  for (const char* target : {"F3xF3", "F3[t]", "F3"}) {
    const RingPtr r = Ring::parse(target);
    const JordanPair e = scalar_extend(*viv.pair, r);
    CHECK(check_axioms(e).passed());
    for (const auto& en : viv.pair->tensor[0].nonzeros())
      CHECK(e.tensor[0].at(en.i, en.j, en.k, en.l) == embed(en.value, r));
  }
  const NamedSystem vq = make_system(SystemTag::VIV, 0, 2, Ring::rationals());
  const JordanPair same = scalar_extend(*vq.pair, Ring::rationals());
  CHECK(same.tensor[0] == vq.pair->tensor[0]);
  CHECK_THROWS_AS(scalar_extend(*viv.pair, Ring::parse("F5")), Error);
}

TEST_CASE("automorphism predicates on V_IV(F5^2)") {
  const RingPtr f5 = Ring::parse("F5");
  const NamedSystem v = make_system(SystemTag::VIV, 0, 2, f5);
  const Matrix two = Matrix::scalar(f5->from_integer(2), 2);
  const Matrix three = Matrix::scalar(f5->from_integer(3), 2);
  CHECK(is_pair_automorphism(*v.pair, PairMap::identity(f5, 2, 2)));
  CHECK(is_pair_automorphism(*v.pair, {two, three}));
  CHECK_FALSE(is_pair_automorphism(*v.pair, {two, Matrix::identity(f5, 2)}));
  // the same three verdicts from the scaling rule {ax, by, az} = a^2 b {x,y,z}: need a^2 b = a
  for (long long a = 1; a < 5; ++a)
    for (long long b = 1; b < 5; ++b) {
      const PairMap f{Matrix::scalar(f5->from_integer(a), 2), Matrix::scalar(f5->from_integer(b), 2)};
      CHECK(is_pair_automorphism(*v.pair, f) == (oracle::mod(a * b, 5) == 1));
    }
  CHECK_THROWS_AS(is_pair_automorphism(*v.pair, PairMap::identity(f5, 3, 3)), Error);
}

TEST_CASE("triple automorphisms are diagonal pair automorphisms") {
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem t = make_thi(2, f3);
  const JordanPair p = pair_from_triple(*t.triple);
  int count = 0;
  for (const auto& g : enumerate_gl(2, f3)) {
    const Matrix ad = left_mult_map(g, 2) * right_mult_map(inverse(g), 2);
    CHECK(is_algebra_automorphism(*make_mn_plus(2, f3).algebra, ad));
    CHECK(is_triple_automorphism(*t.triple, ad));
    CHECK(is_pair_automorphism(p, PairMap::diagonal(ad)));
    ++count;
  }
  CHECK(count == 48);
}

TEST_CASE("dual inverse") {
  const RingPtr f5 = Ring::parse("F5");
  const NamedSystem v = make_system(SystemTag::VIV, 0, 2, f5);
  CHECK(dual_inverse(*v.trace, Matrix::identity(f5, 2)) == Matrix::identity(f5, 2));
  CHECK(dual_inverse(*v.trace, Matrix::scalar(f5->from_integer(2), 2)) == Matrix::scalar(f5->from_integer(3), 2));

  // VtI_{1,2}, t(x,y) = tr(x y^T): phi+ = R_a gives phi- = R_{a^{-T}}
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem vt = make_vti(1, 2, f3);
  for (const auto& a : enumerate_gl(2, f3)) {
    const Matrix minus = dual_inverse(*vt.trace, right_mult_map(a, 1));
    CHECK(minus == right_mult_map(inverse(a).transpose(), 1));
    CHECK(is_pair_automorphism(*vt.pair, {right_mult_map(a, 1), minus}));
  }
  CHECK_THROWS_AS(dual_inverse(Matrix::from_ints(f5, {{1, 1}, {1, 1}}), Matrix::identity(f5, 2)), Error);
}
