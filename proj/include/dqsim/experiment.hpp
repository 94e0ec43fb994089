#ifndef DQSIM_EXPERIMENT_HPP
#define DQSIM_EXPERIMENT_HPP

#include <bit>
#include <cstddef>
#include <string>

#include "dqsim/algorithms.hpp"
#include "dqsim/serialize.hpp"

namespace dqsim {

/// A runnable experiment: which algorithm, over which field, with which
/// oracle. Oracles are given inline as a truth table or by generator name:
/// "unique-sat(k)", "constant-true", "constant-false", "balanced(mask)".
struct ExperimentDescriptor {
  std::string algorithm;  // grover | dj | usat-modal | usat-discrete
  long long p = 2;
  int degree = 1;
  std::size_t n = 0;            // oracle arity (dj, usat-*)
  long long database_size = 0;  // grover
  json oracle;                  // table object or generator string; null for grover
  long long marked = -1;        // grover
  long long iterations = -1;    // grover; < 0 means round(sqrt(N))

  friend bool operator==(const ExperimentDescriptor&, const ExperimentDescriptor&) = default;
};

inline json to_json(const ExperimentDescriptor& d) {
  json j{{"algorithm", d.algorithm}, {"p", d.p}, {"degree", d.degree}};
  if (d.algorithm == "grover") {
    j["N"] = d.database_size;
    j["marked"] = d.marked;
    j["iterations"] = d.iterations;
  } else {
    j["n"] = d.n;
    j["oracle"] = d.oracle;
  }
  return j;
}

inline ExperimentDescriptor descriptor_from_json(const json& j) {
  ExperimentDescriptor d;
  d.algorithm = j.at("algorithm").get<std::string>();
  d.p = j.at("p").get<long long>();
  d.degree = j.at("degree").get<int>();
  if (d.algorithm == "grover") {
    d.database_size = j.at("N").get<long long>();
    d.marked = j.at("marked").get<long long>();
    d.iterations = j.value("iterations", -1LL);
  } else {
    d.n = j.at("n").get<std::size_t>();
    d.oracle = j.at("oracle");
  }
  FieldSpec::validate(d.p, d.degree);
  return d;
}

inline OracleTable oracle_from_generator(const std::string& name, std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> outputs(size, 0);
  if (name == "constant-true") {
    outputs.assign(size, 1);
  } else if (name == "constant-false") {
    // all zero already
  } else if (name.starts_with("unique-sat(") && name.ends_with(")")) {
    const std::size_t k = std::stoull(name.substr(11, name.size() - 12));
    if (k >= size) throw Error("unique-sat index out of range: " + name);
    outputs[k] = 1;
  } else if (name.starts_with("balanced(") && name.ends_with(")")) {
    const std::size_t mask = std::stoull(name.substr(9, name.size() - 10));
    if (mask == 0 || mask >= size) throw Error("balanced mask out of range: " + name);
    for (std::size_t x = 0; x < size; ++x)
      outputs[x] = static_cast<std::uint8_t>(std::popcount(x & mask) & 1);
  } else {
    throw Error("unknown oracle generator: " + name);
  }
  return OracleTable(n, std::move(outputs));
}

inline OracleTable make_oracle(const ExperimentDescriptor& d) {
  if (d.oracle.is_string()) return oracle_from_generator(d.oracle.get<std::string>(), d.n);
  OracleTable t = oracle_from_json(d.oracle);
  if (t.n != d.n) throw DimensionMismatch();
  return t;
}

inline json support_to_json(const std::vector<std::size_t>& support) {
  json out = json::array();
  for (std::size_t s : support) out.push_back(s);
  return out;
}

inline json run_experiment(const ExperimentDescriptor& d,
                           std::size_t max_arity = modal::kDefaultMaxArity) {
  json result;
  if (d.algorithm == "usat-modal") {
    const OracleTable f = make_oracle(d);
    const auto r = modal::unique_sat_modal(f, false, max_arity);
    result["verdict"] = r.satisfiable ? "SAT" : "UNSAT";
    result["oracle_evals"] = r.oracle_evals;
    result["final_support"] = support_to_json(r.final_support);
    result["final_state"] = to_json(*r.final_state);
  } else if (d.algorithm == "usat-discrete") {
    const OracleTable f = make_oracle(d);
    const auto r = algorithms::unique_sat_discrete(f, d.p, max_arity);
    result["verdict"] = r.verdict == algorithms::UsatVerdict::Sat     ? "SAT"
                        : r.verdict == algorithms::UsatVerdict::Unsat ? "UNSAT"
                                                                      : "INCONCLUSIVE";
    result["oracle_evals"] = r.oracle_evals;
    result["final_support"] = support_to_json(r.final_support);
    result["final_state"] = to_json(*r.final_state);
  } else if (d.algorithm == "dj") {
    const OracleTable f = make_oracle(d);
    const auto r = algorithms::deutsch_jozsa(f, d.p, max_arity);
    result["verdict"] = r.verdict == algorithms::DjVerdict::Constant ? "constant" : "balanced";
    result["oracle_evals"] = r.oracle_evals;
    result["final_support"] = support_to_json(r.x_support);
    result["final_state"] = to_json(*r.final_state);
  } else if (d.algorithm == "grover") {
    algorithms::GroverConfig cfg{d.database_size, d.p, d.iterations};
    const auto r = algorithms::grover(static_cast<std::size_t>(d.marked), cfg);
    result["verdict"] =
        r.outcomes.is_certain(static_cast<std::size_t>(d.marked)) ? "found" : "ambiguous";
    result["oracle_evals"] = r.oracle_evals;
    result["final_support"] = support_to_json(r.outcomes.possible);
    result["final_state"] = to_json(r.final_state);
  } else {
    throw Error("unknown algorithm: " + d.algorithm);
  }
  return result;
}

}  // namespace dqsim

#endif
