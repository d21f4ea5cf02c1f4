#pragma once

// Brute-force ground truth: exhaustive automorphism enumeration over finite
// rings and subgroup closure from explicit generators.

#include <cstdint>
#include <string>
#include <vector>

#include "jordan/autfam.hpp"
#include "jordan/serialize.hpp"

namespace jordan {

enum class SetMode { Exhaustive, Generated };
const char* set_mode_name(SetMode mode);

inline constexpr std::uint64_t kDefaultBudget = 30'000'000;

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;  // candidate maps (exhaustive) / group order (closure)
  unsigned jobs = 1;
};

// Elements are sorted; in triple and algebra mode plus == minus.
struct AutomorphismSet {
  std::string system;
  RingPtr ring;
  SetMode mode = SetMode::Exhaustive;
  StructureKind structure = StructureKind::Pair;
  std::string provenance;
  std::vector<PairMap> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const PairMap& f) const;
};

// Exhaustive: phi+ ranges over GL(V+) in lexicographic order. With a
// registered trace phi- is forced to the dual inverse; otherwise phi- ranges
// over GL(V-) too and the budget applies to the product.
AutomorphismSet enumerate_automorphisms(const NamedSystem& system, StructureKind mode,
                                        const OracleOptions& options = {});
AutomorphismSet enumerate_automorphisms(const NamedSystem& system, const OracleOptions& options = {});

// Explicit generator families from the structure theorems, per mode.
std::vector<PairMap> default_generators(const NamedSystem& system, StructureKind mode, std::string* provenance);

// Smallest subgroup containing the generators (finite rings only).
AutomorphismSet generate_closure(const std::vector<PairMap>& generators, const std::string& system,
                                 const RingPtr& ring, StructureKind structure, const OracleOptions& options = {});
AutomorphismSet generate_automorphisms(const NamedSystem& system, StructureKind mode,
                                       const OracleOptions& options = {});

// Closed under composition and inverses.
bool is_group(const AutomorphismSet& set);

struct CompareReport {
  bool equal = false;
  std::size_t order_a = 0;
  std::size_t order_b = 0;
  std::vector<PairMap> only_a;  // A \ B
  std::vector<PairMap> only_b;  // B \ A
};
CompareReport compare(const AutomorphismSet& a, const AutomorphismSet& b);  // MixedSystems

Json to_json(const AutomorphismSet& set, bool dump_elements);
Json to_json(const CompareReport& report, const RingPtr& ring, std::size_t samples = 3);

}  // namespace jordan
