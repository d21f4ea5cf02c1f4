#include <doctest.h>

#include <random>

#include "jordan/autfam.hpp"
#include "jordan/oracle.hpp"
#include "support.hpp"

using namespace jordan;

namespace {

Vector ints(const RingPtr& r, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(r->from_integer(x));
  return v;
}

// {x,y,z} = b(x,y)z + b(z,y)x - b(x,z)y, evaluated straight from the Gram matrix.
Vector type_iv_product(const Matrix& g, const Vector& x, const Vector& y, const Vector& z) {
  auto b = [&](const Vector& u, const Vector& v) {
    Element s = g.ring()->zero();
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s = s + u[i] * g(i, j) * v[j];
    return s;
  };
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = b(x, y) * z[i] + b(z, y) * x[i] - b(x, z) * y[i];
  return out;
}

}  // namespace

TEST_CASE("type IV triple product") {
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem v = make_type_iv_pair(BilinearForm::standard(f3, 2));
  CHECK(v.pair->of(Sign::Plus)(ints(f3, {1, 0}), ints(f3, {0, 1}), ints(f3, {1, 1})) == ints(f3, {1, 2}));

  std::mt19937_64 rng(31);
  for (const char* name : {"F3", "F5", "F3xF3"}) {
    const RingPtr r = Ring::parse(name);
    for (std::size_t n = 1; n <= 4; ++n) {
      Matrix g = Matrix::identity(r, n);
      g(n - 1, n - 1) = r->from_integer(2);  // a non-standard form too
      const NamedSystem s = make_type_iv_pair(BilinearForm(g));
      const NamedSystem t = make_type_iv_triple(BilinearForm(g));
      CHECK(*s.trace == g);
      for (int k = 0; k < 20; ++k) {
        const Matrix xyz = oracle::random_matrix(rng, r, 3, n);
        const Vector x = xyz.transpose().column(0), y = xyz.transpose().column(1), z = xyz.transpose().column(2);
        const Vector want = type_iv_product(g, x, y, z);
        CHECK(s.pair->of(Sign::Plus)(x, y, z) == want);
        CHECK(s.pair->of(Sign::Minus)(x, y, z) == want);
        CHECK(t.triple->tensor(x, y, z) == want);
      }
    }
  }
  // q(x) = 0 forces Q_x y = b(x,y) x
  const RingPtr f5 = Ring::parse("F5");
  const NamedSystem v5 = make_type_iv_pair(BilinearForm::standard(f5, 2));
  const Vector iso = ints(f5, {1, 2});  // 1 + 4 = 0
  CHECK(v5.form->quadratic(iso).is_zero());
  for (const auto& y : {ints(f5, {1, 0}), ints(f5, {3, 4})}) {
    const Element by = (*v5.form)(iso, y);
    CHECK(q_operator(*v5.pair, Sign::Plus, iso, y) == Vector{by * iso[0], by * iso[1]});
  }
  // n = 1 over Q: xyz
  const RingPtr q = Ring::rationals();
  const NamedSystem one = make_type_iv_pair(BilinearForm::standard(q, 1));
  const Vector a{q->from_rational(Rational(1, 2))}, b{q->from_integer(3)}, c{q->from_rational(Rational(-2, 7))};
  CHECK(one.pair->of(Sign::Plus)(a, b, c) == Vector{a[0] * b[0] * c[0]});
  CHECK_THROWS_AS(make_type_iv_pair(BilinearForm(Matrix::from_ints(f5, {{1, 2}, {2, 4}}))), Error);
}

TEST_CASE("the bilinear form algebra") {
  const RingPtr f5 = Ring::parse("F5");
  const NamedSystem j = make_system(SystemTag::Jbilin, 0, 2, f5);
  const Vector one = ints(f5, {1, 0}), v = ints(f5, {0, 1});
  CHECK(j.algebra->product(one, one) == one);
  const Vector x = ints(f5, {1, 1});
  CHECK(j.algebra->product(x, x) == ints(f5, {2, 2}));
  CHECK(*j.algebra->unit == one);
  CHECK(j.algebra->product(v, v) == one);

  const NamedSystem j3 = make_system(SystemTag::Jbilin, 0, 3, f5);
  CHECK(j3.algebra->product(ints(f5, {0, 1, 0}), ints(f5, {0, 0, 1})) == ints(f5, {0, 0, 0}));
  CHECK(check_axioms(*j3.algebra).passed());

  // n = 1: just the field
  const NamedSystem j1 = make_bilinear_form_algebra(f5, std::nullopt);
  CHECK(j1.algebra->dim == 1);
  CHECK(j1.algebra->product(ints(f5, {2}), ints(f5, {3})) == ints(f5, {1}));

  // T_IV is the triple of J(V,b)
  const NamedSystem t = make_t_iv(f5, BilinearForm::standard(f5, 2));
  CHECK(t.triple->tensor == triple_from_algebra(*make_bilinear_form_algebra(f5, BilinearForm::standard(f5, 2)).algebra).tensor);
}

TEST_CASE("type I tensors") {
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem vh = make_vhi(2, 2, f3);
  const Vector one = flatten(Matrix::identity(f3, 2));
  CHECK(vh.pair->of(Sign::Plus)(one, one, one) == flatten(Matrix::scalar(f3->from_integer(2), 2)));

  const NamedSystem vt = make_vti(1, 2, f3);
  CHECK(vt.pair->of(Sign::Plus)(ints(f3, {1, 0}), ints(f3, {1, 0}), ints(f3, {0, 1})) == ints(f3, {0, 1}));

  const NamedSystem mp = make_mn_plus(2, f3);
  const Vector e11 = ints(f3, {1, 0, 0, 0}), e22 = ints(f3, {0, 0, 0, 1});
  CHECK(mp.algebra->product(e11, e22) == ints(f3, {0, 0, 0, 0}));
  CHECK(mp.algebra->product(e11, e11) == e11);

  // against matrix arithmetic on random inputs
  std::mt19937_64 rng(41);
  for (const char* name : {"F3", "F5", "F3[t]"}) {
    const RingPtr r = Ring::parse(name);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
      const NamedSystem t = make_vti(m, n, r), h = make_vhi(m, n, r), tt = make_tti(m, n, r);
      for (int k = 0; k < 15; ++k) {
        const Matrix x = oracle::random_matrix(rng, r, m, n), y = oracle::random_matrix(rng, r, m, n),
                     z = oracle::random_matrix(rng, r, m, n), yt = oracle::random_matrix(rng, r, n, m);
        const Matrix vti = x * y.transpose() * z + z * y.transpose() * x;
        CHECK(t.pair->of(Sign::Plus)(flatten(x), flatten(y), flatten(z)) == flatten(vti));
        CHECK(tt.triple->tensor(flatten(x), flatten(y), flatten(z)) == flatten(vti));
        CHECK(h.pair->of(Sign::Plus)(flatten(x), flatten(yt), flatten(z)) == flatten(x * yt * z + z * yt * x));
        const Matrix a = yt, c = oracle::random_matrix(rng, r, n, m);
        CHECK(h.pair->of(Sign::Minus)(flatten(a), flatten(x), flatten(c)) == flatten(a * x * c + c * x * a));
      }
      // traces tr(x y^T) and tr(x y)
      const Matrix x = oracle::random_matrix(rng, r, m, n), y = oracle::random_matrix(rng, r, m, n);
      const Matrix yt = oracle::random_matrix(rng, r, n, m);
      Element tt_val = r->zero(), th_val = r->zero();
      const Vector fx = flatten(x), fy = flatten(y), fyt = flatten(yt);
      for (std::size_t i = 0; i < fx.size(); ++i)
        for (std::size_t j = 0; j < fx.size(); ++j) {
          tt_val = tt_val + fx[i] * (*t.trace)(i, j) * fy[j];
          th_val = th_val + fx[i] * (*h.trace)(i, j) * fyt[j];
        }
      CHECK(tt_val == (x * y.transpose()).trace());
      CHECK(th_val == (x * yt).trace());
    }
  }
  CHECK_THROWS_AS(make_vhi(3, 2, f3), Error);
  CHECK_THROWS_AS(make_vti(0, 2, f3), Error);
}

TEST_CASE("every catalog system satisfies the axioms up to total dimension 6") {
  int checked = 0;
  for (const char* name : {"F3", "F5", "Q"}) {
    const RingPtr r = Ring::parse(name);
    for (SystemTag tag : {SystemTag::VIV, SystemTag::ThatIV, SystemTag::TIV, SystemTag::Jbilin, SystemTag::VtI,
                          SystemTag::VhI, SystemTag::TtI, SystemTag::ThI, SystemTag::Mplus})
      for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
          const bool rect = tag == SystemTag::VtI || tag == SystemTag::VhI || tag == SystemTag::TtI;
          if (!rect && m != 1) continue;
          if (n * (rect ? m : 1) > 6 && tag != SystemTag::ThI && tag != SystemTag::Mplus) continue;
          if ((tag == SystemTag::ThI || tag == SystemTag::Mplus) && n * n > 6) continue;
          const bool square = tag == SystemTag::ThI || tag == SystemTag::Mplus;
          const NamedSystem s = make_system(tag, rect ? m : (square ? n : 0), n, r);
          if (s.total_dim() > 6) continue;
          CAPTURE(s.name);
          CHECK(s.check().passed());
          if (s.trace) CHECK(is_invertible(*s.trace));
          ++checked;
        }
  }
  CHECK(checked > 40);
}

TEST_CASE("system specs") {
  CHECK(parse_system_spec("VIV(n=2,ring=F5)").name == parse_system_spec("VIV(2,F5)").name);
  CHECK(parse_system_spec("VhI(1,2,F3)").total_dim() == 4);
  CHECK(parse_system_spec("TIV(2,F5)").kind() == StructureKind::Triple);
  CHECK(parse_system_spec("Mplus(2,F3)").kind() == StructureKind::Algebra);
  for (const char* bad : {"VIV(2", "Nope(2,F3)", "VhI(1,2,F2)", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_system_spec(bad), Error);
  }
  try {
    parse_system_spec("VhI(3,2,F3)");
    FAIL("expected BadDims");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadDims);
  }
}

TEST_CASE("the Lambda isomorphism") {
  const RingPtr f5 = Ring::parse("F5");
  REQUIRE(sqrt_minus_one(f5).has_value());
  CHECK((*sqrt_minus_one(f5) * *sqrt_minus_one(f5)) == -f5->one());
  CHECK_FALSE(sqrt_minus_one(Ring::parse("F3")).has_value());
  CHECK_FALSE(sqrt_minus_one(Ring::parse("F3xF5")).has_value());
  CHECK(sqrt_minus_one(Ring::parse("F5xF13")).has_value());

  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const std::optional<BilinearForm> form =
        n == 1 ? std::nullopt : std::optional<BilinearForm>(BilinearForm::standard(f5, n - 1));
    const NamedSystem src = make_t_iv(f5, form);
    const BilinearForm ext = form ? form->unit_extension() : BilinearForm(Matrix::identity(f5, 1));
    const NamedSystem dst = make_type_iv_pair(ext);
    for (const Element& i : {f5->from_integer(2), f5->from_integer(3)}) {
      const PairMap lam = lambda_isomorphism(f5, form, i);
      CHECK(is_pair_homomorphism(src.as_pair(), *dst.pair, lam));
      CHECK(is_invertible(lam.plus));
      // v_i fixed
      for (std::size_t k = 1; k < n; ++k) CHECK(lam.plus.column(k) == basis_vector(f5, n, k));
    }
  }
  try {
    lambda_isomorphism(Ring::parse("F3"), BilinearForm::standard(Ring::parse("F3"), 1), Ring::parse("F3")->one());
    FAIL("expected NoSquareRootOfMinusOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSquareRootOfMinusOne);
  }
}

TEST_CASE("VtI to VhI") {
  const RingPtr f3 = Ring::parse("F3");
  const PairMap id11 = vti_to_vhi(1, 1, f3);
  CHECK(id11.plus.is_identity());
  CHECK(id11.minus.is_identity());
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {1, 3}}) {
    const PairMap iso = vti_to_vhi(m, n, f3);
    CHECK(is_pair_homomorphism(*make_vti(m, n, f3).pair, *make_vhi(m, n, f3).pair, iso));
    const PairMap inv = inverse(iso);
    for (const auto& a : enumerate_gl(m, f3)) CHECK(iso * tilde_left(a, n) * inv == hat_left(a, n));
    for (const auto& b : enumerate_gl(n, f3)) CHECK(iso * tilde_right(b, m) * inv == hat_right(b, m));
  }
}

TEST_CASE("presentations with different automorphism groups") {
  // T^_IV and T_IV agree on order at n=2 over F5 (8 and 8); they separate at n=3.
  const RingPtr f5 = Ring::parse("F5");
  const auto hat2 = enumerate_automorphisms(make_system(SystemTag::ThatIV, 0, 2, f5));
  const auto t2 = enumerate_automorphisms(make_system(SystemTag::TIV, 0, 2, f5));
  CHECK(hat2.order() == 8);
  CHECK(t2.order() == 8);
  const auto hat3 = enumerate_automorphisms(make_system(SystemTag::ThatIV, 0, 3, f5));
  const auto t3 = enumerate_automorphisms(make_system(SystemTag::TIV, 0, 3, f5));
  CHECK(hat3.order() != t3.order());

  const RingPtr f3 = Ring::parse("F3");
  CHECK(enumerate_automorphisms(make_thi(2, f3)).order() != enumerate_automorphisms(make_tti(2, 2, f3)).order());
}

TEST_CASE("autfam maps respect the registered trace") {
  const RingPtr f5 = Ring::parse("F5");
  const NamedSystem v = make_system(SystemTag::VIV, 0, 2, f5);
  for (const auto& a : enumerate_go(*v.form)) {
    const PairMap f = go_to_pair_aut(a, *v.form);
    CHECK(f.plus.transpose() * *v.trace * f.minus == *v.trace);
  }
  const RingPtr f3 = Ring::parse("F3");
  const NamedSystem h = make_vhi(1, 2, f3);
  for (const auto& a : enumerate_gl(1, f3))
    for (const auto& b : enumerate_gl(2, f3)) {
      const PairMap f = hat_generators(a, b);
      CHECK(f.plus.transpose() * *h.trace * f.minus == *h.trace);
    }
}
