// jordanctl: build Jordan systems, check their axioms, enumerate automorphism
// groups and run the claim catalog. Output is JSON; --pretty prints tables.
//
// exit codes: 0 pass, 1 claim/axiom failure, 2 usage or parse error, 3 budget/refused

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "jordan/claims.hpp"

using namespace jordan;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownClaim:
    case ErrorKind::BadDims:
      return kUsage;
    case ErrorKind::BudgetExceeded:
      return kBudget;
    default:
      return kFail;
  }
}

struct Output {
  std::string out;
  bool pretty = false;
};

void print_table(std::ostream& os, const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    if (it->is_object()) {
      print_table(os, *it, key + ".");
    } else if (it->is_array()) {
      if (it->empty() || !(*it)[0].is_object()) {
        os << std::left << std::setw(36) << key << it->dump() << "\n";
        continue;
      }
      for (std::size_t i = 0; i < it->size(); ++i) print_table(os, (*it)[i], key + "[" + std::to_string(i) + "].");
    } else {
      os << std::left << std::setw(36) << key << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

void emit(const Output& o, const Json& j) {
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorKind::BadInput, "cannot write " + o.out);
    f << j.dump(2) << "\n";
  }
  if (o.pretty) {
    print_table(std::cout, j);
  } else if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  }
}

int report_error(const Error& e) {
  Json j;
  j["error"] = std::string(error_kind_name(e.kind()));
  j["message"] = e.what();
  if (const auto* tv = dynamic_cast<const TheoremViolation*>(&e)) j["reproducer"] = Json::parse(tv->reproducer(), nullptr, false);
  std::cout << j.dump(2) << "\n";
  return exit_for(e.kind());
}

StructureKind parse_kind(const std::string& s) {
  if (s == "pair") return StructureKind::Pair;
  if (s == "triple") return StructureKind::Triple;
  if (s == "algebra") return StructureKind::Algebra;
  throw Error(ErrorKind::ParseError, "unknown structure '" + s + "'");
}

int cmd_verify(const std::string& target, const Output& o) {
  Json j;
  AxiomReport report;
  if (std::filesystem::exists(target)) {
    std::ifstream in(target);
    const Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::ParseError, target + " is not valid JSON");
    const LoadedStructure s = structure_from_json(doc);
    j["source"] = std::filesystem::path(target).filename().string();
    j["kind"] = kind_name(s.kind);
    report = s.check();
  } else {
    const NamedSystem s = parse_system_spec(target);
    j["system"] = s.name;
    j["kind"] = kind_name(s.kind());
    j["total_dim"] = s.total_dim();
    report = s.check();
  }
  j["axioms"] = to_json(report);
  emit(o, j);
  switch (report.status) {
    case AxiomReport::Status::Pass: return kPass;
    case AxiomReport::Status::Fail: return kFail;
    case AxiomReport::Status::Refused: return kBudget;
  }
  return kFail;
}

int cmd_enumerate(const std::string& spec, const std::string& mode, const std::string& as, const OracleOptions& opt,
                  bool dump, const Output& o) {
  const NamedSystem s = parse_system_spec(spec);
  const StructureKind kind = as.empty() ? s.kind() : parse_kind(as);
  AutomorphismSet set;
  if (mode == "exhaustive") {
    set = enumerate_automorphisms(s, kind, opt);
  } else if (mode == "generated") {
    set = generate_automorphisms(s, kind, opt);
  } else {
    throw Error(ErrorKind::ParseError, "mode must be exhaustive or generated");
  }
  emit(o, to_json(set, dump));
  return kPass;
}

int cmd_check(const std::string& id, const ClaimParams& params, const Output& o) {
  const ClaimResult r = run_claim(id, params);
  emit(o, r.report);
  return r.passed ? kPass : kFail;
}

int cmd_list(const Output& o) {
  Json j = Json::array();
  for (const auto& c : claim_catalog()) {
    Json e{{"id", c.id}, {"statement", c.statement}, {"ring", c.ring}, {"n", c.n}};
    if (c.m) e["m"] = c.m;
    j.push_back(std::move(e));
  }
  if (o.pretty) {
    for (const auto& c : claim_catalog()) std::cout << std::left << std::setw(20) << c.id << c.statement << "\n";
    return kPass;
  }
  emit(o, j);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan pairs, triple systems and their automorphism groups over finite rings"};
  app.require_subcommand(1);

  Output out;
  OracleOptions oracle;
  oracle.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out.out, "write the JSON report to this file");
    sub->add_flag("--pretty", out.pretty, "print a table instead of JSON");
  };
  auto oracle_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", oracle.budget, "candidate/element budget")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", oracle.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  std::string target;
  auto* verify = app.add_subcommand("verify", "check the axioms of a system spec or a tensor JSON file");
  verify->add_option("system", target, "system spec, e.g. \"VhI(1,2,F3)\", or a JSON file")->required();
  common(verify);

  std::string spec, mode = "exhaustive", as;
  bool dump = false;
  auto* enumerate = app.add_subcommand("enumerate", "compute an automorphism group");
  enumerate->add_option("system", spec, "system spec")->required();
  enumerate->add_option("--mode", mode, "exhaustive or generated")->check(CLI::IsMember({"exhaustive", "generated"}));
  enumerate->add_option("--as", as, "structure to preserve")->check(CLI::IsMember({"pair", "triple", "algebra"}));
  enumerate->add_flag("--dump-elements", dump, "include every element in the output");
  common(enumerate);
  oracle_flags(enumerate);

  std::string claim;
  std::string ring;
  std::size_t m = 0, n = 0;
  auto* check = app.add_subcommand("check", "run a claim from the catalog");
  check->add_option("claim", claim, "claim id (see list-claims)")->required();
  auto* ring_opt = check->add_option("--ring", ring, "ring, e.g. F3, F5, F3xF3, F3[t]");
  auto* m_opt = check->add_option("--m", m, "row count")->check(CLI::PositiveNumber);
  auto* n_opt = check->add_option("--n", n, "dimension")->check(CLI::PositiveNumber);
  common(check);
  oracle_flags(check);

  auto* list = app.add_subcommand("list-claims", "list the claim catalog");
  common(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(target, out);
    if (*enumerate) return cmd_enumerate(spec, mode, as, oracle, dump, out);
    if (*check) {
      ClaimParams p;
      if (*ring_opt) p.ring = ring;
      if (*m_opt) p.m = m;
      if (*n_opt) p.n = n;
      p.oracle = oracle;
      return cmd_check(claim, p, out);
    }
    if (*list) return cmd_list(out);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const Json::exception& e) {
    return report_error(Error(ErrorKind::ParseError, e.what()));
  }
  return kUsage;
}
