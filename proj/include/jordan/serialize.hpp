#pragma once

// JSON encodings. Elements are canonical strings, matrices row-major arrays.

#include <json.hpp>

#include "jordan/autfam.hpp"

namespace jordan {

using Json = nlohmann::ordered_json;

Json to_json(const Element& e);
Json to_json(const Matrix& m);
Json to_json(const PairMap& f, const RingPtr& ring);
Json to_json(const TwistedMap& t);
Json to_json(const CentralProductElement& c);
Json to_json(const JordanPair& pair);
Json to_json(const JordanTriple& triple);
Json to_json(const JordanAlgebra& algebra);
Json to_json(const AxiomReport& report);

Matrix matrix_from_json(const RingPtr& ring, const Json& j);

// A structure document: {"kind": "pair"|"triple"|"algebra", "ring", "dims",
// "tensor": [{"sigma", "i", "j", "k", "value": [...]}], "unit"}.
struct LoadedStructure {
  StructureKind kind = StructureKind::Pair;
  std::optional<JordanPair> pair;
  std::optional<JordanTriple> triple;
  std::optional<JordanAlgebra> algebra;
  AxiomReport check() const;
};
LoadedStructure structure_from_json(const Json& j);  // ParseError

}  // namespace jordan
