#include "jordan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <boost/container_hash/hash.hpp>
#include <deque>
#include <functional>
#include <thread>
#include <unordered_set>

#include "kernel.hpp"

namespace jordan {

using detail::CodeArith;
using Codes = std::vector<std::uint32_t>;

const char* set_mode_name(SetMode mode) { return mode == SetMode::Exhaustive ? "exhaustive" : "generated"; }

namespace {

// Row-major code matrix of size d x d; M(r, c) = m[r * d + c].
struct CodeTensor {
  std::size_t a = 0, b = 0, c = 0, out = 0;
  Codes dense;
  struct Entry {
    std::uint32_t i, j, k, l, v;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<Entry>> by_mid;

  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return dense[((i * b + j) * c + k) * out + l];
  }
};

CodeTensor code_tensor(const TripleTensor& t) {
  CodeTensor ct;
  ct.a = t.dim(0);
  ct.b = t.dim(1);
  ct.c = t.dim(2);
  ct.out = t.dim(3);
  ct.dense.resize(ct.a * ct.b * ct.c * ct.out);
  ct.by_mid.resize(ct.b);
  for (std::size_t i = 0; i < ct.a; ++i)
    for (std::size_t j = 0; j < ct.b; ++j)
      for (std::size_t k = 0; k < ct.c; ++k)
        for (std::size_t l = 0; l < ct.out; ++l) {
          const auto v = static_cast<std::uint32_t>(t.at(i, j, k, l).code());
          ct.dense[((i * ct.b + j) * ct.c + k) * ct.out + l] = v;
          if (v == 0) continue;
          CodeTensor::Entry e{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                              static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l), v};
          ct.entries.push_back(e);
          ct.by_mid[j].push_back(e);
        }
  return ct;
}

constexpr std::size_t kMaxDim = 32;

// M T(e_i, N e_j, e_k) == T(M e_i, e_j, M e_k) for all basis triples.
bool check_outer_middle(const CodeArith& ar, const CodeTensor& t, const std::uint32_t* m, const std::uint32_t* nm) {
  const std::size_t d = t.out;
  const std::size_t e = t.b;
  std::uint32_t tmp[kMaxDim];
  std::uint32_t lhs[kMaxDim];
  std::uint32_t rhs[kMaxDim];
  for (std::size_t j = 0; j < e; ++j)
    for (std::size_t i = 0; i < t.a; ++i)
      for (std::size_t k = 0; k < t.c; ++k) {
        std::fill(tmp, tmp + d, 0u);
        for (std::size_t b = 0; b < e; ++b) {
          const std::uint32_t w = nm[b * e + j];
          if (w == 0) continue;
          for (std::size_t l = 0; l < d; ++l) {
            const std::uint32_t v = t.at(i, b, k, l);
            if (v) tmp[l] = ar.add(tmp[l], ar.mul(w, v));
          }
        }
        for (std::size_t r = 0; r < d; ++r) {
          std::uint32_t s = 0;
          for (std::size_t l = 0; l < d; ++l)
            if (tmp[l]) s = ar.add(s, ar.mul(m[r * d + l], tmp[l]));
          lhs[r] = s;
        }
        std::fill(rhs, rhs + d, 0u);
        for (const auto& en : t.by_mid[j]) {
          const std::uint32_t x = m[en.i * d + i];
          if (x == 0) continue;
          const std::uint32_t z = m[en.k * d + k];
          if (z == 0) continue;
          rhs[en.l] = ar.add(rhs[en.l], ar.mul(ar.mul(x, z), en.v));
        }
        if (!std::equal(lhs, lhs + d, rhs)) return false;
      }
  return true;
}

// M T(e_i, e_j, e_k) == T(M e_i, N e_j, M e_k).
bool check_full(const CodeArith& ar, const CodeTensor& t, const std::uint32_t* m, const std::uint32_t* nm) {
  const std::size_t d = t.out;
  const std::size_t e = t.b;
  std::uint32_t lhs[kMaxDim];
  std::uint32_t rhs[kMaxDim];
  for (std::size_t i = 0; i < t.a; ++i)
    for (std::size_t j = 0; j < e; ++j)
      for (std::size_t k = 0; k < t.c; ++k) {
        for (std::size_t r = 0; r < d; ++r) {
          std::uint32_t s = 0;
          for (std::size_t l = 0; l < d; ++l) {
            const std::uint32_t v = t.at(i, j, k, l);
            if (v) s = ar.add(s, ar.mul(m[r * d + l], v));
          }
          lhs[r] = s;
        }
        std::fill(rhs, rhs + d, 0u);
        for (const auto& en : t.entries) {
          const std::uint32_t x = m[en.i * d + i];
          if (x == 0) continue;
          const std::uint32_t y = nm[en.j * e + j];
          if (y == 0) continue;
          const std::uint32_t z = m[en.k * d + k];
          if (z == 0) continue;
          rhs[en.l] = ar.add(rhs[en.l], ar.mul(ar.mul(ar.mul(x, y), z), en.v));
        }
        if (!std::equal(lhs, lhs + d, rhs)) return false;
      }
  return true;
}

struct CodeProduct {
  std::size_t d = 0;
  Codes dense;
  std::vector<CodeTensor::Entry> entries;  // k unused
};

CodeProduct code_product(const ProductTensor& p) {
  CodeProduct cp;
  cp.d = p.dim();
  cp.dense.resize(cp.d * cp.d * cp.d);
  for (std::size_t i = 0; i < cp.d; ++i)
    for (std::size_t j = 0; j < cp.d; ++j)
      for (std::size_t l = 0; l < cp.d; ++l) {
        const auto v = static_cast<std::uint32_t>(p.at(i, j, l).code());
        cp.dense[(i * cp.d + j) * cp.d + l] = v;
        if (v)
          cp.entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0,
                                static_cast<std::uint32_t>(l), v});
      }
  return cp;
}

bool check_algebra(const CodeArith& ar, const CodeProduct& p, const std::uint32_t* m) {
  const std::size_t d = p.d;
  std::uint32_t lhs[kMaxDim];
  std::uint32_t rhs[kMaxDim];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t r = 0; r < d; ++r) {
        std::uint32_t s = 0;
        for (std::size_t l = 0; l < d; ++l) {
          const std::uint32_t v = p.dense[(i * d + j) * d + l];
          if (v) s = ar.add(s, ar.mul(m[r * d + l], v));
        }
        lhs[r] = s;
      }
      std::fill(rhs, rhs + d, 0u);
      for (const auto& en : p.entries) {
        const std::uint32_t x = m[en.i * d + i];
        if (x == 0) continue;
        const std::uint32_t y = m[en.j * d + j];
        if (y == 0) continue;
        rhs[en.l] = ar.add(rhs[en.l], ar.mul(ar.mul(x, y), en.v));
      }
      if (!std::equal(lhs, lhs + d, rhs)) return false;
    }
  return true;
}

// Runs body(begin, end, out) over fixed-size chunks of [0, total) on `jobs`
// threads and concatenates the outputs in chunk order.
Codes run_chunked(std::uint64_t total, unsigned jobs,
                  const std::function<void(std::uint64_t, std::uint64_t, Codes&)>& body) {
  constexpr std::uint64_t kChunk = 1u << 16;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Codes> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++)
      body(c * kChunk, std::min(total, (c + 1) * kChunk), results[c]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(chunks, 256))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  Codes out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::uint64_t index_space(const RingPtr& ring, std::size_t d) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  const std::uint64_t s = detail::checked_power(ring->size(), d * d, cap);
  if (s > cap) throw Error(ErrorKind::BudgetExceeded, "matrix space over " + ring->name() + " is too large");
  return s;
}

void require_budget(std::uint64_t candidates, std::uint64_t budget, const std::string& what) {
  if (candidates > budget)
    throw Error(ErrorKind::BudgetExceeded, what + " needs " + std::to_string(candidates) +
                                               " candidate maps, budget is " + std::to_string(budget));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

void transpose_codes(const std::uint32_t* m, std::size_t d, std::uint32_t* out) {
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out[c * d + r] = m[r * d + c];
}

std::vector<PairMap> unpack(const RingPtr& ring, const Codes& flat, std::size_t dp, std::size_t dm) {
  const std::size_t stride = dp * dp + dm * dm;
  std::vector<PairMap> out;
  out.reserve(flat.size() / stride);
  for (std::size_t off = 0; off < flat.size(); off += stride) {
    std::span<const std::uint32_t> s(flat.data() + off, stride);
    out.push_back({Matrix::from_codes(ring, dp, dp, s.subspan(0, dp * dp)),
                   Matrix::from_codes(ring, dm, dm, s.subspan(dp * dp, dm * dm))});
  }
  return out;
}

Codes key_of(const PairMap& f) {
  Codes k = f.plus.codes();
  const Codes m = f.minus.codes();
  k.insert(k.end(), m.begin(), m.end());
  return k;
}

AutomorphismSet enumerate_pair(const NamedSystem& sys, const OracleOptions& opt) {
  const JordanPair pair = sys.as_pair();
  const RingPtr& ring = pair.ring;
  const CodeArith ar(*ring);
  const std::size_t dp = pair.dims[0];
  const std::size_t dm = pair.dims[1];
  if (dp > kMaxDim || dm > kMaxDim) throw Error(ErrorKind::BudgetExceeded, "carrier too large");
  const CodeTensor tp = code_tensor(pair.tensor[0]);
  const CodeTensor tm = code_tensor(pair.tensor[1]);
  const std::uint64_t total = index_space(ring, dp);

  AutomorphismSet set;
  set.system = sys.name;
  set.ring = ring;
  set.structure = StructureKind::Pair;

  Codes flat;
  if (sys.trace && dp == dm) {
    require_budget(gl_order(dp, ring), opt.budget, "GL_" + std::to_string(dp) + "(" + ring->name() + ")");
    const Codes g = sys.trace->codes();
    Codes ginv(dp * dp);
    if (!ar.inverse(g, dp, ginv)) throw Error(ErrorKind::DegenerateTrace, "trace form is degenerate");
    set.provenance = "exhaustive scan of GL_" + std::to_string(dp) + "(" + ring->name() +
                     "), minus part forced by the trace form";
    flat = run_chunked(total, opt.jobs, [&](std::uint64_t b, std::uint64_t e, Codes& out) {
      Codes phit(dp * dp), tmp(dp * dp), chi(dp * dp), minus(dp * dp);
      detail::scan_gl_range(ar, dp, b, e, [&](std::span<const std::uint32_t> phi) {
        // chi = G^{-1} phi^T G is the inverse of the minus part
        transpose_codes(phi.data(), dp, phit.data());
        ar.matmul(phit, g, tmp, dp, dp, dp);
        ar.matmul(ginv, tmp, chi, dp, dp, dp);
        if (!check_outer_middle(ar, tp, phi.data(), chi.data())) return true;
        if (!check_outer_middle(ar, tm, chi.data(), phi.data())) return true;
        if (!ar.inverse(chi, dp, minus)) return true;
        if (!check_full(ar, tp, phi.data(), minus.data()) || !check_full(ar, tm, minus.data(), phi.data()))
          return true;
        out.insert(out.end(), phi.begin(), phi.end());
        out.insert(out.end(), minus.begin(), minus.end());
        return true;
      });
    });
  } else {
    require_budget(saturating_mul(gl_order(dp, ring), gl_order(dm, ring)), opt.budget,
                   "GL_" + std::to_string(dp) + " x GL_" + std::to_string(dm) + "(" + ring->name() + ")");
    Codes minus_list;
    detail::scan_gl_range(ar, dm, 0, index_space(ring, dm), [&](std::span<const std::uint32_t> m) {
      minus_list.insert(minus_list.end(), m.begin(), m.end());
      return true;
    });
    const std::size_t mcells = dm * dm;
    set.provenance = "exhaustive scan of GL_" + std::to_string(dp) + " x GL_" + std::to_string(dm) + "(" +
                     ring->name() + ")";
    flat = run_chunked(total, opt.jobs, [&](std::uint64_t b, std::uint64_t e, Codes& out) {
      detail::scan_gl_range(ar, dp, b, e, [&](std::span<const std::uint32_t> phi) {
        for (std::size_t off = 0; off < minus_list.size(); off += mcells) {
          const std::uint32_t* psi = minus_list.data() + off;
          if (!check_full(ar, tp, phi.data(), psi) || !check_full(ar, tm, psi, phi.data())) continue;
          out.insert(out.end(), phi.begin(), phi.end());
          out.insert(out.end(), psi, psi + mcells);
        }
        return true;
      });
    });
  }
  set.elements = unpack(ring, flat, dp, dm);
  return set;
}

AutomorphismSet enumerate_single(const NamedSystem& sys, StructureKind mode, const OracleOptions& opt) {
  std::optional<CodeTensor> tensor;
  std::optional<CodeProduct> product;
  std::size_t d = 0;
  if (mode == StructureKind::Triple) {
    const JordanTriple t = sys.as_triple();
    tensor = code_tensor(t.tensor);
    d = t.dim;
  } else {
    if (!sys.algebra) throw Error(ErrorKind::BadInput, sys.name + " is not an algebra");
    product = code_product(sys.algebra->product);
    d = sys.algebra->dim;
  }
  const RingPtr& ring = sys.ring;
  const CodeArith ar(*ring);
  if (d > kMaxDim) throw Error(ErrorKind::BudgetExceeded, "carrier too large");
  require_budget(gl_order(d, ring), opt.budget, "GL_" + std::to_string(d) + "(" + ring->name() + ")");

  AutomorphismSet set;
  set.system = sys.name;
  set.ring = ring;
  set.structure = mode;
  set.provenance = "exhaustive scan of GL_" + std::to_string(d) + "(" + ring->name() + ")";
  const Codes flat = run_chunked(index_space(ring, d), opt.jobs, [&](std::uint64_t b, std::uint64_t e, Codes& out) {
    detail::scan_gl_range(ar, d, b, e, [&](std::span<const std::uint32_t> phi) {
      const bool ok = tensor ? check_full(ar, *tensor, phi.data(), phi.data()) : check_algebra(ar, *product, phi.data());
      if (ok) out.insert(out.end(), phi.begin(), phi.end());
      return true;
    });
  });
  for (std::size_t off = 0; off < flat.size(); off += d * d) {
    const Matrix m = Matrix::from_codes(ring, d, d, std::span<const std::uint32_t>(flat.data() + off, d * d));
    set.elements.push_back(PairMap::diagonal(m));
  }
  return set;
}

}  // namespace

bool AutomorphismSet::contains(const PairMap& f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

AutomorphismSet enumerate_automorphisms(const NamedSystem& system, StructureKind mode, const OracleOptions& options) {
  if (!system.ring->is_finite())
    throw Error(ErrorKind::NonEnumerableRing, system.ring->name() + " cannot be enumerated");
  AutomorphismSet set;
  switch (mode) {
    case StructureKind::Pair: set = enumerate_pair(system, options); break;
    case StructureKind::Triple:
      if (system.kind() == StructureKind::Pair) throw Error(ErrorKind::BadInput, system.name + " is not a triple system");
      set = enumerate_single(system, mode, options);
      break;
    case StructureKind::Algebra: set = enumerate_single(system, mode, options); break;
  }
  set.mode = SetMode::Exhaustive;
  std::sort(set.elements.begin(), set.elements.end());
  return set;
}

AutomorphismSet enumerate_automorphisms(const NamedSystem& system, const OracleOptions& options) {
  return enumerate_automorphisms(system, system.kind(), options);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

enum class Family { GO, O, UnitO, UnitOAlgebra, Hat, Tilde, TtI, Bar, BarAlgebra };

Family family_for(const NamedSystem& s, StructureKind mode) {
  const SystemTag t = s.tag;
  const auto bad = [&] {
    return Error(ErrorKind::BadInput, std::string("no generator family for ") + s.name + " in " + kind_name(mode) + " mode");
  };
  switch (mode) {
    case StructureKind::Pair:
      if (t == SystemTag::VIV || t == SystemTag::ThatIV) return Family::GO;
      if (t == SystemTag::VhI || t == SystemTag::ThI || t == SystemTag::Mplus) return Family::Hat;
      if (t == SystemTag::VtI || t == SystemTag::TtI) return Family::Tilde;
      throw bad();
    case StructureKind::Triple:
      if (t == SystemTag::ThatIV) return Family::O;
      if (t == SystemTag::TIV || t == SystemTag::Jbilin) return Family::UnitO;
      if (t == SystemTag::TtI) return Family::TtI;
      if (t == SystemTag::ThI || t == SystemTag::Mplus) return Family::Bar;
      throw bad();
    case StructureKind::Algebra:
      if (t == SystemTag::Jbilin) return Family::UnitOAlgebra;
      if (t == SystemTag::Mplus) return Family::BarAlgebra;
      throw bad();
  }
  throw bad();
}

std::vector<Matrix> twists(const RingPtr& ring, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& e1 : idempotents(ring))
    if (!e1.is_one()) out.push_back(transpose_twist(e1, n));
  return out;
}

Matrix ad(const Matrix& g) {
  const std::size_t n = g.rows();
  return left_mult_map(g, n) * right_mult_map(inverse(g), n);
}

}  // namespace

std::vector<PairMap> default_generators(const NamedSystem& s, StructureKind mode, std::string* provenance) {
  const RingPtr& ring = s.ring;
  if (!ring->is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring->name() + " cannot be enumerated");
  std::vector<PairMap> gens;
  std::string prov;
  const std::size_t m = s.m;
  const std::size_t n = s.n;
  switch (family_for(s, mode)) {
    case Family::GO:
      for (const auto& a : enumerate_go(*s.form)) gens.push_back(go_to_pair_aut(a, *s.form));
      prov = "(a, m(a)^{-1} a) for a in GO(b)";
      break;
    case Family::O:
      for (const auto& a : enumerate_o(*s.form)) gens.push_back(PairMap::diagonal(ortho_to_triple_aut(a, *s.form)));
      prov = "a in O(b)";
      break;
    case Family::UnitO:
    case Family::UnitOAlgebra: {
      std::vector<Matrix> fs;
      if (s.form) {
        for (const auto& f : enumerate_o(*s.form)) fs.push_back(extend_by_unit(f));
      } else {
        fs.push_back(Matrix::identity(ring, 1));  // J = F
      }
      const bool algebra = family_for(s, mode) == Family::UnitOAlgebra;
      const std::vector<Element> rs = algebra ? std::vector<Element>{ring->one()} : mu_n(ring, 2);
      for (const auto& r : rs)
        for (const auto& f : fs) gens.push_back(PairMap::diagonal(r * f));
      prov = algebra ? "1 (+) f for f in O(V)" : "r (1 (+) f) for r in mu_2, f in O(V)";
      break;
    }
    case Family::Hat:
    case Family::Tilde: {
      const bool hat = family_for(s, mode) == Family::Hat;
      for (const auto& a : enumerate_gl(m, ring)) gens.push_back(hat ? hat_left(a, n) : tilde_left(a, n));
      for (const auto& b : enumerate_gl(n, ring)) gens.push_back(hat ? hat_right(b, m) : tilde_right(b, m));
      prov = hat ? "L^_a, R^_b for a in GL_m, b in GL_n" : "L~_a, R~_b for a in GL_m, b in GL_n";
      if (m == n) {
        for (const auto& t : twists(ring, n)) gens.push_back(PairMap::diagonal(t));
        prov += "; transpose twists";
      }
      break;
    }
    case Family::TtI: {
      const std::vector<Matrix> as = enumerate_go(BilinearForm::standard(ring, m));
      const std::vector<Matrix> bs = enumerate_go(BilinearForm::standard(ring, n));
      for (const auto& a : as)
        for (const auto& b : bs)
          if (tti_membership(a, b)) gens.push_back(PairMap::diagonal(left_mult_map(a, n) * right_mult_map(b, m)));
      prov = "L_a R_b for a in GO_m, b in GO_n, m(a) m(b) = 1";
      if (m == n) {
        for (const auto& t : twists(ring, n)) gens.push_back(PairMap::diagonal(t));
        prov += "; transpose twists";
      }
      break;
    }
    case Family::Bar:
    case Family::BarAlgebra: {
      const bool algebra = family_for(s, mode) == Family::BarAlgebra;
      for (const auto& g : enumerate_gl(n, ring)) gens.push_back(PairMap::diagonal(ad(g)));
      if (!algebra)
        for (const auto& r : mu_n(ring, 2)) gens.push_back(PairMap::diagonal(Matrix::scalar(r, n * n)));
      for (const auto& t : twists(ring, n)) gens.push_back(PairMap::diagonal(t));
      prov = algebra ? "Ad_g for g in GL_n; transpose twists" : "r Ad_g for g in GL_n, r in mu_2; transpose twists";
      break;
    }
  }
  if (provenance) *provenance = "closure of {" + prov + "}";
  return gens;
}

// ---------------------------------------------------------------------------
// Closure

namespace {

struct KeyHash {
  std::size_t operator()(const Codes& k) const { return boost::hash_range(k.begin(), k.end()); }
};

}  // namespace

AutomorphismSet generate_closure(const std::vector<PairMap>& generators, const std::string& system,
                                 const RingPtr& ring, StructureKind structure, const OracleOptions& options) {
  if (!ring->is_finite()) throw Error(ErrorKind::NonEnumerableRing, ring->name() + " cannot be enumerated");
  AutomorphismSet set;
  set.system = system;
  set.ring = ring;
  set.mode = SetMode::Generated;
  set.structure = structure;
  if (generators.empty()) throw Error(ErrorKind::BadInput, "closure needs at least one generator");

  const CodeArith ar(*ring);
  const std::size_t dp = generators[0].plus.rows();
  const std::size_t dm = generators[0].minus.rows();
  const std::size_t pc = dp * dp;
  const std::size_t stride = pc + dm * dm;
  for (const auto& g : generators) {
    if (g.plus.rows() != dp || g.plus.cols() != dp || g.minus.rows() != dm || g.minus.cols() != dm)
      throw Error(ErrorKind::ShapeMismatch, "generators differ in shape");
    if (!same_ring(g.plus.ring(), ring)) throw Error(ErrorKind::IncompatibleRings, "generator ring");
  }

  auto multiply = [&](const Codes& x, const Codes& y) {
    Codes z(stride);
    std::span<const std::uint32_t> xs(x), ys(y);
    std::span<std::uint32_t> zs(z);
    ar.matmul(xs.subspan(0, pc), ys.subspan(0, pc), zs.subspan(0, pc), dp, dp, dp);
    ar.matmul(xs.subspan(pc), ys.subspan(pc), zs.subspan(pc), dm, dm, dm);
    return z;
  };

  std::unordered_set<Codes, KeyHash> seen;
  std::vector<Codes> elems;
  auto insert = [&](Codes k) -> bool {
    if (!seen.insert(k).second) return false;
    elems.push_back(std::move(k));
    if (elems.size() > options.budget)
      throw Error(ErrorKind::BudgetExceeded, "closure exceeds " + std::to_string(options.budget) + " elements");
    return true;
  };
  insert(key_of(PairMap::identity(ring, dp, dm)));

  // Dimino-style: the set stays closed under right multiplication by the
  // accepted generators; a new generator is only taken if it falls outside.
  std::vector<Codes> accepted;
  for (const auto& g : generators) {
    Codes gk = key_of(g);
    if (seen.count(gk)) continue;
    if (!is_invertible(g.plus) || !is_invertible(g.minus))
      throw Error(ErrorKind::NotInvertible, "generator is not invertible");
    accepted.push_back(gk);
    std::deque<std::size_t> queue;
    const std::size_t before = elems.size();
    for (std::size_t i = 0; i < before; ++i)
      if (insert(multiply(elems[i], gk))) queue.push_back(elems.size() - 1);
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      for (const auto& h : accepted)
        if (insert(multiply(elems[idx], h))) queue.push_back(elems.size() - 1);
    }
  }
  std::sort(elems.begin(), elems.end());
  Codes flat;
  flat.reserve(elems.size() * stride);
  for (const auto& e : elems) flat.insert(flat.end(), e.begin(), e.end());
  set.elements = unpack(ring, flat, dp, dm);
  set.provenance = "closure of " + std::to_string(accepted.size()) + " generators";
  return set;
}

AutomorphismSet generate_automorphisms(const NamedSystem& system, StructureKind mode, const OracleOptions& options) {
  std::string prov;
  const std::vector<PairMap> gens = default_generators(system, mode, &prov);
  AutomorphismSet set = generate_closure(gens, system.name, system.ring, mode, options);
  set.provenance = prov;
  return set;
}

bool is_group(const AutomorphismSet& set) {
  if (set.elements.empty()) return false;
  try {
    const AutomorphismSet closed = generate_closure(set.elements, set.system, set.ring, set.structure,
                                                    {.budget = set.elements.size(), .jobs = 1});
    return closed.elements == set.elements;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return false;  // closure outgrew the set
    throw;
  }
}

CompareReport compare(const AutomorphismSet& a, const AutomorphismSet& b) {
  if (a.system != b.system || a.structure != b.structure)
    throw Error(ErrorKind::MixedSystems,
                "cannot compare " + a.system + " (" + kind_name(a.structure) + ") with " + b.system + " (" +
                    kind_name(b.structure) + ")");
  CompareReport r;
  r.order_a = a.order();
  r.order_b = b.order();
  std::set_difference(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                      std::back_inserter(r.only_a));
  std::set_difference(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end(),
                      std::back_inserter(r.only_b));
  r.equal = r.only_a.empty() && r.only_b.empty();
  return r;
}

namespace {

Json element_json(const PairMap& f, StructureKind structure) {
  if (structure == StructureKind::Pair) return Json{{"plus", to_json(f.plus)}, {"minus", to_json(f.minus)}};
  return to_json(f.plus);
}

}  // namespace

Json to_json(const AutomorphismSet& set, bool dump_elements) {
  Json j;
  j["system"] = set.system;
  j["ring"] = set.ring->name();
  j["mode"] = set_mode_name(set.mode);
  j["structure"] = kind_name(set.structure);
  j["order"] = set.order();
  j["generator_provenance"] = set.provenance;
  if (dump_elements) {
    Json els = Json::array();
    for (const auto& f : set.elements) els.push_back(element_json(f, set.structure));
    j["elements"] = std::move(els);
  }
  return j;
}

Json to_json(const CompareReport& report, const RingPtr&, std::size_t samples) {
  Json j;
  j["equal"] = report.equal;
  j["order_a"] = report.order_a;
  j["order_b"] = report.order_b;
  j["only_a"] = report.only_a.size();
  j["only_b"] = report.only_b.size();
  Json sa = Json::array(), sb = Json::array();
  for (std::size_t i = 0; i < std::min(samples, report.only_a.size()); ++i)
    sa.push_back(Json{{"plus", to_json(report.only_a[i].plus)}, {"minus", to_json(report.only_a[i].minus)}});
  for (std::size_t i = 0; i < std::min(samples, report.only_b.size()); ++i)
    sb.push_back(Json{{"plus", to_json(report.only_b[i].plus)}, {"minus", to_json(report.only_b[i].minus)}});
  j["samples_only_a"] = std::move(sa);
  j["samples_only_b"] = std::move(sb);
  return j;
}

}  // namespace jordan
