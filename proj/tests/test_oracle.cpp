#include <doctest.h>

#include <functional>
#include <set>

#include "jordan/autfam.hpp"
#include "jordan/oracle.hpp"
#include "support.hpp"

using namespace jordan;

namespace {

using IVec = std::vector<long long>;
using Product = std::function<IVec(const IVec&, const IVec&, const IVec&)>;

IVec apply(const oracle::IntMat& a, const IVec& x, long long p) {
  IVec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = oracle::mod(y[i] + a[i][j] * x[j], p);
  return y;
}

IVec e(std::size_t n, std::size_t i) {
  IVec v(n, 0);
  v[i] = 1;
  return v;
}

// Every (f+, f-) in GL_d+ x GL_d- with f^s{x,y,z} = {f^s x, f^-s y, f^s z} on basis vectors.
std::set<std::pair<oracle::IntMat, oracle::IntMat>> brute_pair_aut(std::size_t dp, std::size_t dm, long long p,
                                                                   const Product& plus, const Product& minus) {
  std::vector<oracle::IntMat> glp, glm;
  oracle::for_each_matrix(dp, p, [&](const oracle::IntMat& m) {
    if (oracle::det_mod(m, p)) glp.push_back(m);
  });
  oracle::for_each_matrix(dm, p, [&](const oracle::IntMat& m) {
    if (oracle::det_mod(m, p)) glm.push_back(m);
  });
  std::set<std::pair<oracle::IntMat, oracle::IntMat>> out;
  for (const auto& a : glp)
    for (const auto& b : glm) {
      bool ok = true;
      for (std::size_t i = 0; i < dp && ok; ++i)
        for (std::size_t j = 0; j < dm && ok; ++j)
          for (std::size_t k = 0; k < dp && ok; ++k)
            ok = apply(a, plus(e(dp, i), e(dm, j), e(dp, k)), p) ==
                 plus(apply(a, e(dp, i), p), apply(b, e(dm, j), p), apply(a, e(dp, k), p));
      for (std::size_t i = 0; i < dm && ok; ++i)
        for (std::size_t j = 0; j < dp && ok; ++j)
          for (std::size_t k = 0; k < dm && ok; ++k)
            ok = apply(b, minus(e(dm, i), e(dp, j), e(dm, k)), p) ==
                 minus(apply(b, e(dm, i), p), apply(a, e(dp, j), p), apply(b, e(dm, k), p));
      if (ok) out.insert({a, b});
    }
  return out;
}

std::set<std::pair<oracle::IntMat, oracle::IntMat>> as_ints(const AutomorphismSet& s) {
  std::set<std::pair<oracle::IntMat, oracle::IntMat>> out;
  for (const auto& f : s.elements) out.insert({oracle::ints(f.plus), oracle::ints(f.minus)});
  return out;
}

long long dot(const IVec& x, const IVec& y, long long p) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = oracle::mod(s + x[i] * y[i], p);
  return s;
}

// standard b: {x,y,z} = b(x,y)z + b(z,y)x - b(x,z)y
Product type_iv(long long p) {
  return [p](const IVec& x, const IVec& y, const IVec& z) {
    IVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      out[i] = oracle::mod(dot(x, y, p) * z[i] + dot(z, y, p) * x[i] - dot(x, z, p) * y[i], p);
    return out;
  };
}

// VhI_{1,n}: x, z rows, y a column; xyz + zyx = (x.y) z + (z.y) x, and the same on the minus side
Product vhi_row(long long p) {
  return [p](const IVec& x, const IVec& y, const IVec& z) {
    IVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = oracle::mod(dot(x, y, p) * z[i] + dot(z, y, p) * x[i], p);
    return out;
  };
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("exhaustive enumeration against an independent brute force") {
  for (auto [n, p] : {std::pair<std::size_t, long long>{1, 3}, {1, 5}, {2, 3}, {2, 5}}) {
    CAPTURE(n);
    CAPTURE(p);
    const auto brute = brute_pair_aut(n, n, p, type_iv(p), type_iv(p));
    const auto lib = enumerate_automorphisms(make_system(SystemTag::VIV, 0, n, Ring::prime_field(p)));
    CHECK(as_ints(lib) == brute);
  }
  CHECK(enumerate_automorphisms(make_system(SystemTag::VIV, 0, 1, Ring::parse("F3"))).order() == 2);
  CHECK(enumerate_automorphisms(make_system(SystemTag::VIV, 0, 2, Ring::parse("F5"))).order() == 32);

  const auto brute = brute_pair_aut(2, 2, 3, vhi_row(3), vhi_row(3));
  const auto lib = enumerate_automorphisms(make_vhi(1, 2, Ring::parse("F3")));
  CHECK(brute.size() == 48);
  CHECK(as_ints(lib) == brute);

  // T^_IV(1, F5): a^3 = a
  CHECK(enumerate_automorphisms(make_system(SystemTag::ThatIV, 0, 1, Ring::parse("F5"))).order() == 2);
}

TEST_CASE("pruned and unpruned scans agree") {
  for (const char* spec : {"VIV(2,F3)", "VIV(2,F5)", "VhI(1,2,F3)", "VtI(1,2,F3)"}) {
    CAPTURE(spec);
    const NamedSystem s = parse_system_spec(spec);
    NamedSystem bare = s;
    bare.trace.reset();
    const auto a = enumerate_automorphisms(s), b = enumerate_automorphisms(bare);
    CHECK(a.elements == b.elements);
    CHECK(a.provenance != b.provenance);
  }
}

TEST_CASE("exhaustive and generated sets coincide and are groups") {
  struct Case {
    const char* spec;
    StructureKind mode;
    std::size_t order;
  };
  for (const Case& c : {Case{"VIV(1,F3)", StructureKind::Pair, 2}, Case{"VIV(2,F5)", StructureKind::Pair, 32},
                        Case{"VIV(3,F3)", StructureKind::Pair, 48}, Case{"ThatIV(2,F3)", StructureKind::Triple, 8},
                        Case{"ThatIV(2,F5)", StructureKind::Triple, 8}, Case{"TIV(1,F5)", StructureKind::Triple, 2},
                        Case{"VhI(1,2,F3)", StructureKind::Pair, 48}, Case{"VhI(1,2,F5)", StructureKind::Pair, 480},
                        Case{"TtI(1,2,F3)", StructureKind::Triple, 8}, Case{"ThI(2,F3)", StructureKind::Triple, 96},
                        Case{"Mplus(2,F3)", StructureKind::Algebra, 48},
                        Case{"Jbilin(3,F5)", StructureKind::Algebra, 8}}) {
    const std::string spec_name = c.spec;
    CAPTURE(spec_name);
    const NamedSystem s = parse_system_spec(c.spec);
    const auto ex = enumerate_automorphisms(s, c.mode);
    const auto gen = generate_automorphisms(s, c.mode);
    CHECK(ex.order() == c.order);
    CHECK(compare(ex, gen).equal);
    CHECK(is_group(ex));
    CHECK(is_group(gen));
    CHECK(std::is_sorted(ex.elements.begin(), ex.elements.end()));
    CHECK(std::is_sorted(gen.elements.begin(), gen.elements.end()));
  }
}

TEST_CASE("closure") {
  const RingPtr f5 = Ring::parse("F5");
  CHECK(generate_closure({PairMap::identity(f5, 2, 2)}, "VIV(2,F5)", f5, StructureKind::Pair).order() == 1);
  const BilinearForm b = BilinearForm::standard(f5, 2);
  std::vector<PairMap> gens;
  for (const auto& a : enumerate_go(b)) gens.push_back(go_to_pair_aut(a, b));
  const auto closed = generate_closure(gens, "VIV(2,F5)", f5, StructureKind::Pair);
  CHECK(closed.order() == 32);
  std::sort(gens.begin(), gens.end());
  CHECK(closed.elements == gens);

  // 48^2 / 2 * 2
  const auto vh = generate_automorphisms(make_vhi(2, 2, Ring::parse("F3")), StructureKind::Pair);
  CHECK(vh.order() == 2304);
  CHECK(vh.mode == SetMode::Generated);
  CHECK(vh.provenance.rfind("closure of", 0) == 0);

  CHECK(kind_of([&] {
          generate_closure(gens, "VIV(2,F5)", f5, StructureKind::Pair, OracleOptions{10, 1});
        }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("is_group detects a non-subgroup") {
  const RingPtr f5 = Ring::parse("F5");
  AutomorphismSet s = enumerate_automorphisms(make_system(SystemTag::VIV, 0, 2, f5));
  s.elements.pop_back();
  CHECK_FALSE(is_group(s));
}

TEST_CASE("results do not depend on the worker count") {
  for (const char* spec : {"VhI(1,2,F5)", "ThI(2,F3)", "VIV(2,F5)"}) {
    CAPTURE(spec);
    const NamedSystem s = parse_system_spec(spec);
    const auto one = enumerate_automorphisms(s, OracleOptions{kDefaultBudget, 1});
    const auto four = enumerate_automorphisms(s, OracleOptions{kDefaultBudget, 4});
    CHECK(one.elements == four.elements);
    CHECK(to_json(one, true).dump() == to_json(four, true).dump());
  }
}

TEST_CASE("errors") {
  CHECK(kind_of([] { enumerate_automorphisms(parse_system_spec("VIV(2,Q)")); }) == ErrorKind::NonEnumerableRing);
  CHECK(kind_of([] { enumerate_automorphisms(parse_system_spec("VhI(2,2,F5)"), OracleOptions{1000, 1}); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { enumerate_automorphisms(parse_system_spec("VIV(2,F3)"), StructureKind::Triple); }) ==
        ErrorKind::BadInput);
  CHECK(kind_of([] { enumerate_automorphisms(parse_system_spec("ThI(2,F3)"), StructureKind::Algebra); }) ==
        ErrorKind::BadInput);
  const auto a = enumerate_automorphisms(parse_system_spec("VIV(1,F3)"));
  const auto b = enumerate_automorphisms(parse_system_spec("VIV(1,F5)"));
  CHECK(kind_of([&] { compare(a, b); }) == ErrorKind::MixedSystems);
}

TEST_CASE("comparison reports") {
  const auto ex = enumerate_automorphisms(parse_system_spec("VIV(2,F5)"));
  AutomorphismSet part = ex;
  part.elements.erase(part.elements.begin(), part.elements.begin() + 2);
  const CompareReport r = compare(ex, part);
  CHECK_FALSE(r.equal);
  CHECK(r.order_a == 32);
  CHECK(r.order_b == 30);
  CHECK(r.only_a.size() == 2);
  CHECK(r.only_b.empty());
  const Json j = to_json(r, ex.ring);
  for (const char* key : {"equal", "order_a", "order_b", "only_a", "only_b", "samples_only_a", "samples_only_b"})
    CHECK(j.contains(key));
  const Json s = to_json(ex, false);
  for (const char* key : {"system", "ring", "mode", "structure", "order", "generator_provenance"}) CHECK(s.contains(key));
  CHECK_FALSE(s.contains("elements"));
  CHECK(to_json(ex, true)["elements"].size() == 32);
}
