// Command-line front end for the crepant screening library. Talks to the
// shared library exclusively through the C API in crepant.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crepant.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::int64_t env_budget(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return -1;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) {
    std::cerr << "warning: ignoring invalid " << name << "='" << raw << "'\n";
    return -1;
  }
  return v;
}

int run(const std::string& command, const std::string& file, std::int64_t budget,
        bool verbose, bool exhaustive) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read input file '" << file << "'\n";
    return kExitInput;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // precedence: --budget > options.budget in the file > CREPANT_BUDGET > default
  std::int64_t search_budget = budget;
  if (search_budget < 0) {
    char* dummy_doc = nullptr;
    crp_polytope* poly = nullptr;
    crp_cone* cone = nullptr;
    std::int64_t file_budget = -1;
    char* err = nullptr;
    if (crp_input_parse(text.c_str(), &poly, &cone, &file_budget, &err) == CRP_OK) {
      if (file_budget < 0) search_budget = env_budget("CREPANT_BUDGET");
      crp_polytope_free(poly);
      crp_cone_free(cone);
    }
    crp_string_free(err);
    crp_string_free(dummy_doc);
  }

  char* document = nullptr;
  char* err = nullptr;
  int budget_limited = 0;
  crp_status status =
      crp_run(command.c_str(), text.c_str(), search_budget,
              env_budget("CREPANT_POINT_BUDGET"), verbose ? 1 : 0,
              exhaustive ? 1 : 0, &document, &budget_limited, &err);
  if (status == CRP_OK) {
    std::fputs(document, stdout);
    crp_string_free(document);
    crp_string_free(err);
    return budget_limited ? kExitBudget : kExitOk;
  }
  std::cerr << "error: " << (err ? err : "unknown failure") << "\n";
  crp_string_free(document);
  crp_string_free(err);
  return status == CRP_ERR_BUDGET ? kExitBudget : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "crepant -- screens Gorenstein toric singularities for crepant "
      "resolutions via exact lattice-polytope bounds"};
  app.require_subcommand(1);

  std::string file;
  std::int64_t budget = -1;
  bool verbose = false;
  bool exhaustive = false;

  auto add_common = [&](CLI::App* sub, bool with_exhaustive) {
    sub->add_option("file", file, "input document (JSON)")->required();
    sub->add_option("--budget", budget, "search-node budget for the oracle");
    sub->add_flag("--verbose", verbose, "include the full evidence chain");
    if (with_exhaustive)
      sub->add_flag("--exhaustive", exhaustive,
                    "run the exhaustive basic-triangulation search");
  };

  add_common(app.add_subcommand("screen", "classify the input singularity"), false);
  add_common(app.add_subcommand("points", "lattice point counts of P_sigma"), false);
  add_common(app.add_subcommand("volume", "normalized volume of P_sigma"), false);
  add_common(app.add_subcommand("bound", "upper-bound inequality evidence"), false);
  add_common(app.add_subcommand("fvector", "f-vector of the maximal triangulation"), false);
  add_common(app.add_subcommand("triangulate",
                                "triangulate P_sigma (maximal by default)"),
             true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, file, budget, verbose, exhaustive);
}
