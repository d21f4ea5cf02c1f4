#include "jordan/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace jordan {

std::string_view tag_name(SystemTag tag) {
  switch (tag) {
    case SystemTag::VIV: return "VIV";
    case SystemTag::ThatIV: return "ThatIV";
    case SystemTag::TIV: return "TIV";
    case SystemTag::Jbilin: return "Jbilin";
    case SystemTag::VtI: return "VtI";
    case SystemTag::VhI: return "VhI";
    case SystemTag::TtI: return "TtI";
    case SystemTag::ThI: return "ThI";
    case SystemTag::Mplus: return "Mplus";
  }
  return "?";
}

StructureKind structure_kind(SystemTag tag) {
  switch (tag) {
    case SystemTag::VIV:
    case SystemTag::VtI:
    case SystemTag::VhI:
      return StructureKind::Pair;
    case SystemTag::Jbilin:
    case SystemTag::Mplus:
      return StructureKind::Algebra;
    default:
      return StructureKind::Triple;
  }
}

const char* kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::Pair: return "pair";
    case StructureKind::Triple: return "triple";
    case StructureKind::Algebra: return "algebra";
  }
  return "?";
}

JordanTriple NamedSystem::as_triple() const {
  if (!triple) throw Error(ErrorKind::BadInput, name + " is a Jordan pair, not a triple system");
  return *triple;
}

JordanPair NamedSystem::as_pair() const { return *pair; }

std::size_t NamedSystem::total_dim() const {
  switch (kind()) {
    case StructureKind::Pair: return pair->dims[0] + pair->dims[1];
    case StructureKind::Triple: return triple->dim;
    case StructureKind::Algebra: return algebra->dim;
  }
  return 0;
}

AxiomReport NamedSystem::check() const {
  switch (kind()) {
    case StructureKind::Pair: return check_axioms(*pair);
    case StructureKind::Triple: return check_axioms(*triple);
    case StructureKind::Algebra: return check_axioms(*algebra);
  }
  return {};
}

namespace {

Matrix unit_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, std::size_t index) {
  Matrix e(ring, rows, cols);
  e(index / cols, index % cols) = ring->one();
  return e;
}

using Shape = std::pair<std::size_t, std::size_t>;

// Tensor of a matrix formula f(x, y, z) on matrix-unit bases (row-major).
TripleTensor matrix_tensor(const RingPtr& ring, Shape sx, Shape sy,
                           const std::function<Matrix(const Matrix&, const Matrix&, const Matrix&)>& f) {
  const std::size_t dx = sx.first * sx.second;
  const std::size_t dy = sy.first * sy.second;
  TripleTensor t(ring, dx, dy, dx, dx);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j)
      for (std::size_t k = 0; k < dx; ++k) {
        const Matrix v = f(unit_matrix(ring, sx.first, sx.second, i), unit_matrix(ring, sy.first, sy.second, j),
                           unit_matrix(ring, sx.first, sx.second, k));
        t.set(i, j, k, flatten(v));
      }
  return t;
}

Matrix xyz_plus_zyx(const Matrix& x, const Matrix& y, const Matrix& z) { return x * y * z + z * y * x; }
Matrix xytz_plus_zytx(const Matrix& x, const Matrix& y, const Matrix& z) {
  return x * y.transpose() * z + z * y.transpose() * x;
}

// t(x, y) = tr(xy) for x in M_{m,n}, y in M_{n,m}.
Matrix trace_xy_gram(const RingPtr& ring, std::size_t m, std::size_t n) {
  Matrix g(ring, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i * n + j, j * m + i) = ring->one();
  return g;
}

TripleTensor type_iv_tensor(const BilinearForm& form) {
  const std::size_t n = form.dim();
  const Matrix& g = form.gram();
  TripleTensor t(form.ring(), n, n, n, n);
  // b(x,y)z + b(z,y)x - b(x,z)y
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        t.at(i, j, k, k) += g(i, j);
        t.at(i, j, k, i) += g(k, j);
        t.at(i, j, k, j) -= g(i, k);
      }
  return t;
}

std::string form_label(const BilinearForm& form) {
  if (form.gram().is_identity()) return std::to_string(form.dim());
  return "gram=" + form.gram().str();
}

void check_dims(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::BadDims, "dimensions must be positive");
  if (m > n) throw Error(ErrorKind::BadDims, "type I systems need m <= n");
}

void finish_from_triple(NamedSystem& s) { s.pair = pair_from_triple(*s.triple); }

}  // namespace

NamedSystem make_type_iv_pair(const BilinearForm& form) {
  NamedSystem s;
  s.tag = SystemTag::VIV;
  s.ring = form.ring();
  s.n = form.dim();
  s.form = form;
  s.name = "VIV(" + form_label(form) + "," + s.ring->name() + ")";
  JordanPair p = JordanPair::make(s.ring, s.n, s.n);
  p.tensor[0] = type_iv_tensor(form);
  p.tensor[1] = p.tensor[0];
  s.pair = std::move(p);
  s.trace = form.gram();
  return s;
}

NamedSystem make_type_iv_triple(const BilinearForm& form) {
  NamedSystem s;
  s.tag = SystemTag::ThatIV;
  s.ring = form.ring();
  s.n = form.dim();
  s.form = form;
  s.name = "ThatIV(" + form_label(form) + "," + s.ring->name() + ")";
  JordanTriple t = JordanTriple::make(s.ring, s.n);
  t.tensor = type_iv_tensor(form);
  s.triple = std::move(t);
  finish_from_triple(s);
  s.trace = form.gram();
  return s;
}

NamedSystem make_bilinear_form_algebra(const RingPtr& ring, const std::optional<BilinearForm>& form) {
  if (form && !same_ring(form->ring(), ring)) throw Error(ErrorKind::IncompatibleRings, "form ring");
  const std::size_t v = form ? form->dim() : 0;
  NamedSystem s;
  s.tag = SystemTag::Jbilin;
  s.ring = ring;
  s.n = v + 1;
  s.form = form;
  s.name = "Jbilin(" + (form ? (form->gram().is_identity() ? std::to_string(s.n) : "gram=" + form->gram().str())
                             : std::string("1")) +
           "," + ring->name() + ")";
  JordanAlgebra a = JordanAlgebra::make(ring, s.n);
  // basis: unit first, then V
  for (std::size_t i = 0; i < s.n; ++i) {
    a.product.at(0, i, i) = ring->one();
    a.product.at(i, 0, i) = ring->one();
  }
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) a.product.at(i + 1, j + 1, 0) = form->gram()(i, j);
  a.unit = basis_vector(ring, s.n, 0);
  s.algebra = std::move(a);
  s.triple = triple_from_algebra(*s.algebra);
  finish_from_triple(s);
  return s;
}

NamedSystem make_t_iv(const RingPtr& ring, const std::optional<BilinearForm>& form) {
  NamedSystem s = make_bilinear_form_algebra(ring, form);
  s.tag = SystemTag::TIV;
  s.name = "TIV" + s.name.substr(std::string("Jbilin").size());
  s.algebra.reset();
  return s;
}

NamedSystem make_vti(std::size_t m, std::size_t n, const RingPtr& ring) {
  check_dims(m, n);
  NamedSystem s;
  s.tag = SystemTag::VtI;
  s.ring = ring;
  s.m = m;
  s.n = n;
  s.name = "VtI(" + std::to_string(m) + "," + std::to_string(n) + "," + ring->name() + ")";
  JordanPair p = JordanPair::make(ring, m * n, m * n);
  p.tensor[0] = matrix_tensor(ring, {m, n}, {m, n}, xytz_plus_zytx);
  p.tensor[1] = p.tensor[0];
  s.pair = std::move(p);
  s.trace = Matrix::identity(ring, m * n);
  return s;
}

NamedSystem make_vhi(std::size_t m, std::size_t n, const RingPtr& ring) {
  check_dims(m, n);
  NamedSystem s;
  s.tag = SystemTag::VhI;
  s.ring = ring;
  s.m = m;
  s.n = n;
  s.name = "VhI(" + std::to_string(m) + "," + std::to_string(n) + "," + ring->name() + ")";
  JordanPair p = JordanPair::make(ring, m * n, m * n);
  p.tensor[0] = matrix_tensor(ring, {m, n}, {n, m}, xyz_plus_zyx);
  p.tensor[1] = matrix_tensor(ring, {n, m}, {m, n}, xyz_plus_zyx);
  s.pair = std::move(p);
  s.trace = trace_xy_gram(ring, m, n);
  return s;
}

NamedSystem make_tti(std::size_t m, std::size_t n, const RingPtr& ring) {
  check_dims(m, n);
  NamedSystem s;
  s.tag = SystemTag::TtI;
  s.ring = ring;
  s.m = m;
  s.n = n;
  s.name = "TtI(" + std::to_string(m) + "," + std::to_string(n) + "," + ring->name() + ")";
  JordanTriple t = JordanTriple::make(ring, m * n);
  t.tensor = matrix_tensor(ring, {m, n}, {m, n}, xytz_plus_zytx);
  s.triple = std::move(t);
  finish_from_triple(s);
  s.trace = Matrix::identity(ring, m * n);
  return s;
}

NamedSystem make_thi(std::size_t n, const RingPtr& ring) {
  check_dims(n, n);
  NamedSystem s;
  s.tag = SystemTag::ThI;
  s.ring = ring;
  s.m = n;
  s.n = n;
  s.name = "ThI(" + std::to_string(n) + "," + ring->name() + ")";
  JordanTriple t = JordanTriple::make(ring, n * n);
  t.tensor = matrix_tensor(ring, {n, n}, {n, n}, xyz_plus_zyx);
  s.triple = std::move(t);
  finish_from_triple(s);
  s.trace = trace_xy_gram(ring, n, n);
  return s;
}

NamedSystem make_mn_plus(std::size_t n, const RingPtr& ring) {
  check_dims(n, n);
  NamedSystem s;
  s.tag = SystemTag::Mplus;
  s.ring = ring;
  s.m = n;
  s.n = n;
  s.name = "Mplus(" + std::to_string(n) + "," + ring->name() + ")";
  const std::size_t d = n * n;
  const Element half = ring->from_rational(Rational(1, 2));
  JordanAlgebra a = JordanAlgebra::make(ring, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix x = unit_matrix(ring, n, n, i);
      const Matrix y = unit_matrix(ring, n, n, j);
      a.product.set(i, j, flatten(half * (x * y + y * x)));
    }
  a.unit = flatten(Matrix::identity(ring, n));
  s.algebra = std::move(a);
  // x o y carries a factor 1/2, so the triple product needs the factor 2 to
  // land exactly on xyz + zyx.
  s.triple = triple_from_algebra(*s.algebra, 2);
  finish_from_triple(s);
  s.trace = trace_xy_gram(ring, n, n);
  return s;
}

NamedSystem make_system(SystemTag tag, std::size_t m, std::size_t n, const RingPtr& ring) {
  if (n == 0) throw Error(ErrorKind::BadDims, "dimension must be positive");
  auto form_on = [&](std::size_t d) -> std::optional<BilinearForm> {
    if (d == 0) return std::nullopt;
    return BilinearForm::standard(ring, d);
  };
  switch (tag) {
    case SystemTag::VIV: return make_type_iv_pair(BilinearForm::standard(ring, n));
    case SystemTag::ThatIV: return make_type_iv_triple(BilinearForm::standard(ring, n));
    case SystemTag::TIV: return make_t_iv(ring, form_on(n - 1));
    case SystemTag::Jbilin: return make_bilinear_form_algebra(ring, form_on(n - 1));
    case SystemTag::VtI: return make_vti(m, n, ring);
    case SystemTag::VhI: return make_vhi(m, n, ring);
    case SystemTag::TtI: return make_tti(m, n, ring);
    case SystemTag::ThI:
      if (m != n) throw Error(ErrorKind::BadDims, "ThI is square");
      return make_thi(n, ring);
    case SystemTag::Mplus:
      if (m != n) throw Error(ErrorKind::BadDims, "Mplus is square");
      return make_mn_plus(n, ring);
  }
  throw Error(ErrorKind::BadInput, "unknown system tag");
}

// ---------------------------------------------------------------------------
// System strings

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 4 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorKind::ParseError, "bad " + what + " '" + text + "'");
  }
  return static_cast<std::size_t>(std::stoul(text));
}

}  // namespace

NamedSystem parse_system_spec(std::string_view text) {
  const std::string spec = trim(text);
  const std::size_t open = spec.find('(');
  const std::string head = trim(spec.substr(0, open));
  static const std::map<std::string, SystemTag> names = {
      {"VIV", SystemTag::VIV},     {"V_IV", SystemTag::VIV},       {"ThatIV", SystemTag::ThatIV},
      {"That_IV", SystemTag::ThatIV}, {"TIV", SystemTag::TIV},     {"T_IV", SystemTag::TIV},
      {"Jbilin", SystemTag::Jbilin}, {"VtI", SystemTag::VtI},      {"VhI", SystemTag::VhI},
      {"TtI", SystemTag::TtI},     {"ThI", SystemTag::ThI},        {"Mplus", SystemTag::Mplus},
      {"Mn_plus", SystemTag::Mplus}};
  const auto it = names.find(head);
  if (it == names.end()) throw Error(ErrorKind::ParseError, "unknown system '" + head + "'");
  const SystemTag tag = it->second;

  std::vector<std::string> positional;
  std::map<std::string, std::string> named;
  if (open != std::string::npos) {
    if (spec.back() != ')') throw Error(ErrorKind::ParseError, "missing ')' in '" + spec + "'");
    const std::string body = spec.substr(open + 1, spec.size() - open - 2);
    int depth = 0;
    std::string current;
    auto flush = [&] {
      std::string arg = trim(current);
      current.clear();
      if (arg.empty()) throw Error(ErrorKind::ParseError, "empty argument in '" + spec + "'");
      const std::size_t eq = arg.find('=');
      if (eq == std::string::npos) {
        if (!named.empty()) throw Error(ErrorKind::ParseError, "positional argument after key=value");
        positional.push_back(arg);
      } else {
        std::string key = trim(arg.substr(0, eq));
        if (named.count(key)) throw Error(ErrorKind::ParseError, "duplicate key '" + key + "'");
        named[key] = trim(arg.substr(eq + 1));
      }
    };
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + spec + "'");
      if (c == ',' && depth == 0) {
        flush();
      } else {
        current += c;
      }
    }
    if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + spec + "'");
    if (!trim(body).empty()) flush();
  }

  const bool rectangular = tag == SystemTag::VtI || tag == SystemTag::VhI || tag == SystemTag::TtI;
  std::vector<std::string> slots = rectangular && positional.size() == 3
                                       ? std::vector<std::string>{"m", "n", "ring"}
                                       : std::vector<std::string>{"n", "ring"};
  if (positional.size() > slots.size()) throw Error(ErrorKind::ParseError, "too many arguments in '" + spec + "'");
  std::map<std::string, std::string> args = named;
  for (std::size_t i = 0; i < positional.size(); ++i) {
    if (args.count(slots[i])) throw Error(ErrorKind::ParseError, "argument '" + slots[i] + "' given twice");
    args[slots[i]] = positional[i];
  }
  for (const auto& [key, value] : args) {
    if (key != "n" && key != "ring" && !(rectangular && key == "m")) {
      throw Error(ErrorKind::ParseError, "unknown argument '" + key + "' for " + head);
    }
  }
  const std::size_t n = args.count("n") ? parse_count(args["n"], "n") : 2;
  const std::size_t m = args.count("m") ? parse_count(args["m"], "m") : n;
  const RingPtr ring = Ring::parse(args.count("ring") ? args["ring"] : "F3");
  return make_system(tag, m, n, ring);
}

// ---------------------------------------------------------------------------
// Isomorphisms

std::optional<Element> sqrt_minus_one(const RingPtr& ring) {
  if (!ring->is_finite()) return std::nullopt;
  const Element minus_one = -ring->one();
  for (const Element& x : ring->elements())
    if (x * x == minus_one) return x;
  return std::nullopt;
}

PairMap lambda_isomorphism(const RingPtr& ring, const std::optional<BilinearForm>& form, const Element& i) {
  if (!same_ring(i.ring(), ring)) throw Error(ErrorKind::IncompatibleRings, "i lives in another ring");
  if (!(i * i == -ring->one())) {
    throw Error(ErrorKind::NoSquareRootOfMinusOne, i.str() + " does not square to -1 in " + ring->name());
  }
  const std::size_t n = (form ? form->dim() : 0) + 1;
  // Lambda^sigma(1) = (sigma i)^{-1} 1 = -sigma i 1
  Matrix plus = Matrix::identity(ring, n);
  Matrix minus = Matrix::identity(ring, n);
  plus(0, 0) = -i;
  minus(0, 0) = i;
  return {plus, minus};
}

PairMap vti_to_vhi(std::size_t m, std::size_t n, const RingPtr& ring) {
  check_dims(m, n);
  return {Matrix::identity(ring, m * n), transpose_map(ring, m, n)};
}

Matrix sigma_tilde(const Matrix& psi, std::size_t m, std::size_t n) {
  if (psi.rows() != m * n || psi.cols() != m * n) throw Error(ErrorKind::ShapeMismatch, "sigma~ argument");
  // X in M_{n,m} -> X^T in M_{m,n} -> psi -> transpose back to M_{n,m}
  return transpose_map(psi.ring(), m, n) * psi * transpose_map(psi.ring(), n, m);
}

}  // namespace jordan
