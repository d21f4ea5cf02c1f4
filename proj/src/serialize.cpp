#include "jordan/serialize.hpp"

#include <algorithm>

namespace jordan {

Json to_json(const Element& e) { return e.str(); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const PairMap& f, const RingPtr& ring) {
  Json j;
  j["kind"] = "pair_map";
  j["ring"] = ring->name();
  j["plus"] = to_json(f.plus);
  j["minus"] = to_json(f.minus);
  return j;
}

Json to_json(const TwistedMap& t) {
  Json j;
  j["kind"] = "twisted_map";
  j["ring"] = t.g.ring()->name();
  j["e1"] = t.e1.str();
  j["g"] = to_json(t.g);
  j["sign"] = sign_name(t.sign);
  return j;
}

Json to_json(const CentralProductElement& c) {
  Json j;
  j["kind"] = "central_product";
  j["ring"] = c.a.ring()->name();
  j["a"] = to_json(c.a);
  j["b"] = to_json(c.b);
  if (c.tau) j["tau"] = c.tau->str();
  return j;
}

namespace {

Json tensor_entries(const TripleTensor& t, const char* sigma) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j)
      for (std::size_t k = 0; k < t.dim(2); ++k) {
        const Vector v = t.basis_value(i, j, k);
        if (std::all_of(v.begin(), v.end(), [](const Element& e) { return e.is_zero(); })) continue;
        Json e;
        if (sigma) e["sigma"] = sigma;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        Json value = Json::array();
        for (const auto& x : v) value.push_back(x.str());
        e["value"] = std::move(value);
        entries.push_back(std::move(e));
      }
  return entries;
}

Vector read_vector(const RingPtr& ring, const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) throw Error(ErrorKind::ParseError, "value must be an array of " + std::to_string(size));
  Vector v;
  for (const auto& x : j) {
    if (x.is_string()) {
      v.push_back(ring->parse_element(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      v.push_back(ring->from_integer(x.get<long long>()));
    } else {
      throw Error(ErrorKind::ParseError, "coefficients must be strings or integers");
    }
  }
  return v;
}

std::size_t read_index(const Json& e, const char* key, std::size_t bound) {
  if (!e.contains(key) || !e[key].is_number_unsigned()) throw Error(ErrorKind::ParseError, std::string("missing index ") + key);
  const auto v = e[key].get<std::size_t>();
  if (v >= bound) throw Error(ErrorKind::ParseError, std::string("index ") + key + " out of range");
  return v;
}

}  // namespace

Json to_json(const JordanPair& pair) {
  Json j;
  j["kind"] = "pair";
  j["ring"] = pair.ring->name();
  j["dims"] = {pair.dims[0], pair.dims[1]};
  Json entries = tensor_entries(pair.tensor[0], "+");
  for (auto& e : tensor_entries(pair.tensor[1], "-")) entries.push_back(std::move(e));
  j["tensor"] = std::move(entries);
  return j;
}

Json to_json(const JordanTriple& triple) {
  Json j;
  j["kind"] = "triple";
  j["ring"] = triple.ring->name();
  j["dims"] = {triple.dim};
  j["tensor"] = tensor_entries(triple.tensor, nullptr);
  return j;
}

Json to_json(const JordanAlgebra& algebra) {
  Json j;
  j["kind"] = "algebra";
  j["ring"] = algebra.ring->name();
  j["dims"] = {algebra.dim};
  Json entries = Json::array();
  for (std::size_t a = 0; a < algebra.dim; ++a)
    for (std::size_t b = 0; b < algebra.dim; ++b) {
      const Vector v = algebra.product.basis_value(a, b);
      if (std::all_of(v.begin(), v.end(), [](const Element& e) { return e.is_zero(); })) continue;
      Json value = Json::array();
      for (const auto& x : v) value.push_back(x.str());
      entries.push_back({{"i", a}, {"j", b}, {"value", std::move(value)}});
    }
  j["tensor"] = std::move(entries);
  if (algebra.unit) {
    Json u = Json::array();
    for (const auto& x : *algebra.unit) u.push_back(x.str());
    j["unit"] = std::move(u);
  }
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j;
  switch (report.status) {
    case AxiomReport::Status::Pass: j["status"] = "pass"; break;
    case AxiomReport::Status::Fail: j["status"] = "fail"; break;
    case AxiomReport::Status::Refused: j["status"] = "refused"; break;
  }
  if (!report.identity.empty()) j["identity"] = report.identity;
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

Matrix matrix_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& row : j) rows.push_back(read_vector(ring, row, j[0].size()));
  return Matrix::from_rows(ring, rows);
}

AxiomReport LoadedStructure::check() const {
  switch (kind) {
    case StructureKind::Pair: return check_axioms(*pair);
    case StructureKind::Triple: return check_axioms(*triple);
    case StructureKind::Algebra: return check_axioms(*algebra);
  }
  return {};
}

LoadedStructure structure_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "structure document must be an object");
  for (const char* key : {"kind", "ring", "dims", "tensor"})
    if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  const std::string kind = j["kind"].get<std::string>();
  const RingPtr ring = Ring::parse(j["ring"].get<std::string>());
  const Json& dims = j["dims"];
  if (!dims.is_array() || dims.empty()) throw Error(ErrorKind::ParseError, "dims must be a non-empty array");
  for (const auto& d : dims)
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0 || d.get<std::size_t>() > 64)
      throw Error(ErrorKind::ParseError, "dims must be positive integers");
  const Json& tensor = j["tensor"];
  if (!tensor.is_array()) throw Error(ErrorKind::ParseError, "tensor must be an array");

  LoadedStructure out;
  if (kind == "pair") {
    if (dims.size() != 2) throw Error(ErrorKind::ParseError, "a pair needs two dims");
    out.kind = StructureKind::Pair;
    JordanPair p = JordanPair::make(ring, dims[0].get<std::size_t>(), dims[1].get<std::size_t>());
    for (const auto& e : tensor) {
      const std::string sigma = e.value("sigma", "");
      if (sigma != "+" && sigma != "-") throw Error(ErrorKind::ParseError, "sigma must be \"+\" or \"-\"");
      const Sign s = sigma == "+" ? Sign::Plus : Sign::Minus;
      TripleTensor& t = p.tensor[index_of(s)];
      const std::size_t i = read_index(e, "i", t.dim(0));
      const std::size_t jj = read_index(e, "j", t.dim(1));
      const std::size_t k = read_index(e, "k", t.dim(2));
      t.set(i, jj, k, read_vector(ring, e["value"], t.dim(3)));
    }
    out.pair = std::move(p);
  } else if (kind == "triple") {
    if (dims.size() != 1) throw Error(ErrorKind::ParseError, "a triple system needs one dim");
    out.kind = StructureKind::Triple;
    const std::size_t d = dims[0].get<std::size_t>();
    JordanTriple t = JordanTriple::make(ring, d);
    for (const auto& e : tensor) {
      const std::size_t i = read_index(e, "i", d);
      const std::size_t jj = read_index(e, "j", d);
      const std::size_t k = read_index(e, "k", d);
      t.tensor.set(i, jj, k, read_vector(ring, e["value"], d));
    }
    out.triple = std::move(t);
  } else if (kind == "algebra") {
    if (dims.size() != 1) throw Error(ErrorKind::ParseError, "an algebra needs one dim");
    out.kind = StructureKind::Algebra;
    const std::size_t d = dims[0].get<std::size_t>();
    JordanAlgebra a = JordanAlgebra::make(ring, d);
    for (const auto& e : tensor) {
      const std::size_t i = read_index(e, "i", d);
      const std::size_t jj = read_index(e, "j", d);
      a.product.set(i, jj, read_vector(ring, e["value"], d));
    }
    if (j.contains("unit")) a.unit = read_vector(ring, j["unit"], d);
    out.algebra = std::move(a);
  } else {
    throw Error(ErrorKind::ParseError, "unknown structure kind '" + kind + "'");
  }
  return out;
}

}  // namespace jordan
