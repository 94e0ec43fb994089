// Command-line front end: field inspection, Bloch censuses, experiment
// execution from JSON descriptors, and the named verification check suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqsim/checks.hpp"
#include "dqsim/experiment.hpp"
#include "dqsim/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInvalidInput = 2;

std::size_t max_arity_from_env() {
  if (const char* v = std::getenv("DQSIM_MAX_N")) return std::stoull(v);
  return dqsim::modal::kDefaultMaxArity;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

int cmd_field_info(long long p, int degree) {
  const dqsim::FieldSpec ctx = dqsim::FieldSpec::validate(p, degree);
  std::cout << "field F_" << ctx.order() << " (p = " << p << ", degree = " << degree
            << ")\n";
  std::cout << "elements: " << ctx.order() << "\n";
  if (degree == 2) {
    std::cout << "phase group order: " << dqsim::discrete::phase_group(p).elements.size()
              << "\n";
  } else {
    const bool extendable = p != 2 && p % 4 == 3;
    std::cout << "degree-2 extension admissible: " << (extendable ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_census(long long p, const std::string& format, const std::string& out_path) {
  const auto census = dqsim::discrete::bloch_census(p);
  std::cout << "p=" << p << " unit_vectors=" << census.unit_vectors
            << " classes=" << census.classes << " phases=" << census.phases << "\n";
  if (format == "csv")
    emit(dqsim::to_csv(census), out_path);
  else
    emit(dqsim::to_json(census).dump(2), out_path);
  return kExitOk;
}

int cmd_run(const std::string& descriptor_path, const std::string& out_path) {
  std::ifstream in(descriptor_path);
  if (!in) {
    std::cerr << "cannot open descriptor: " << descriptor_path << "\n";
    return kExitInvalidInput;
  }
  const auto d = dqsim::descriptor_from_json(dqsim::json::parse(in));
  const dqsim::json result = dqsim::run_experiment(d, max_arity_from_env());
  emit(result.dump(2), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& filter, const std::string& format,
               const std::string& out_path) {
  const auto suite = dqsim::checks::run_paper_checks(filter);
  if (format == "json") {
    dqsim::json checks = dqsim::json::array();
    for (const auto& c : suite.checks)
      checks.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"observed", c.observed},
                        {"pass", c.pass}});
    emit(dqsim::json{{"checks", checks}, {"all_pass", suite.all_pass()}}.dump(2), out_path);
  } else {
    for (const auto& c : suite.checks)
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n"
                << "       expected: " << c.expected << "\n"
                << "       observed: " << c.observed << "\n";
    std::cout << (suite.all_pass() ? "all checks passed" : "CHECK FAILURES") << " ("
              << suite.checks.size() << " run)\n";
  }
  return suite.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite-field quantum theory simulator"};
  app.require_subcommand(1);

  long long p = 3;
  int degree = 2;
  std::string format = "json";
  std::string out_path;
  std::string filter;
  std::string descriptor_path;

  auto* field_info = app.add_subcommand("field-info", "describe a finite field");
  field_info->add_option("--p", p, "characteristic")->required();
  field_info->add_option("--degree", degree, "1 or 2")->required();

  auto* census = app.add_subcommand("census", "Bloch census over F_{p^2}");
  census->add_option("--p", p, "characteristic")->required();
  census->add_option("--format", format, "json|csv");
  census->add_option("--out", out_path, "output file (default stdout)");

  auto* run = app.add_subcommand("run", "run an experiment descriptor");
  run->add_option("descriptor", descriptor_path, "descriptor JSON file")->required();
  run->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify-paper", "run the named claim checks");
  verify->add_option("--filter", filter, "only checks whose name contains this");
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text|json");
  verify->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (field_info->parsed()) return cmd_field_info(p, degree);
    if (census->parsed()) return cmd_census(p, format, out_path);
    if (run->parsed()) return cmd_run(descriptor_path, out_path);
    if (verify->parsed()) return cmd_verify(filter, verify_format, out_path);
  } catch (const dqsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const dqsim::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
