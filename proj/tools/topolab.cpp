// topolab: inspect finite spaces, export lattices, run the verification suites.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 unreadable input
// or bad arguments, 3 input violates an invariant, 4 a size cap was exceeded.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "topolab/compactify.hpp"
#include "topolab/discretize.hpp"
#include "topolab/ideals.hpp"
#include "topolab/io.hpp"
#include "topolab/verify.hpp"

namespace {

using namespace topolab;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::TooLarge: return 4;
    default: return 3;
  }
}

void print_text(const io::Json& report) {
  for (const auto& [key, value] : report.items()) std::cout << key << ": " << value.dump() << "\n";
}

int cmd_classify(const std::string& path, const std::string& format) {
  const io::LoadedSpace loaded = io::load_space(path);
  io::Json report = io::classification_report(loaded.space, loaded.labels);
  io::Json added = io::Json::array();
  for (auto u : loaded.added) added.push_back(io::labelled_set(u, loaded.labels));
  report["closure_added"] = std::move(added);
  if (format == "text") {
    print_text(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return 0;
}

FiniteLattice pick_lattice(const FinSpace& x, const std::string& which) {
  if (which == "disc-pw") return preweak_lattice(x);
  if (which == "disc-w") return weak_lattice(x);
  if (which == "comp-pw") return compactification_lattice(x);
  if (which == "subalg") return subalgebra_lattice(x);
  return gmp_ideal_lattice(x);
}

int cmd_lattice(const std::string& path, const std::string& which, const std::string& format) {
  const io::LoadedSpace loaded = io::load_space(path);
  const FiniteLattice l = pick_lattice(loaded.space, which);
  if (format == "json") {
    std::cout << io::lattice_to_json(l).dump(2) << "\n";
  } else {
    std::string name = which;
    for (auto& c : name) c = c == '-' ? '_' : c;
    std::cout << l.to_dot(name);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const CorpusConfig& cfg) {
  const VerifyReport report = run_verification(suite, cfg);
  std::cout << report.summary();
  return report.ok() ? 0 : 1;
}

int cmd_enumerate(std::size_t n) {
  for_each_topology(n, [](const FinSpace& x) { std::cout << io::space_to_line(x) << "\n"; });
  return 0;
}

int cmd_random(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) std::cout << io::space_to_line(random_space(n, rng())) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces: classification, discretizations, compactifications"};
  app.require_subcommand(1);
  std::string cap;
  app.add_option("--cap", cap, "Point cap for constructions (same as TOPOLAB_CAP)");

  std::string path;
  std::string format = "json";
  auto* classify = app.add_subcommand("classify", "Classification report for a space file");
  classify->add_option("file", path, "Space JSON")->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string which;
  std::string lattice_format = "dot";
  auto* lattice = app.add_subcommand("lattice", "Export a lattice attached to a space");
  lattice->add_option("file", path, "Space JSON")->required();
  lattice->add_option("--which", which)->required()->check(
      CLI::IsMember({"disc-pw", "disc-w", "comp-pw", "subalg", "ideals"}));
  lattice->add_option("--format", lattice_format)->check(CLI::IsMember({"dot", "json"}));

  std::string suite;
  CorpusConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run property suites over a corpus of spaces");
  verify->add_option("suite", suite)->required()->check(
      CLI::IsMember({"all", "rose", "thrpre", "ideals", "duality", "density"}));
  auto* exhaustive = verify->add_option("--exhaustive", cfg.exhaustive_max, "All topologies on up to N points");
  verify->add_option("--random", cfg.random_count, "Number of random spaces");
  verify->add_option("--n", cfg.random_max_n, "Largest random space")->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();

  std::size_t n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Every topology on n points as NDJSON");
  enumerate->add_option("n", n)->required();

  std::size_t count = 0;
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Seeded random spaces as NDJSON");
  random->add_option("n", n)->required();
  random->add_option("count", count)->required();
  random->add_option("seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!cap.empty()) setenv("TOPOLAB_CAP", cap.c_str(), 1);

  try {
    if (*classify) return cmd_classify(path, format);
    if (*lattice) return cmd_lattice(path, which, lattice_format);
    if (*verify) {
      cfg.exhaustive = exhaustive->count() > 0 || cfg.random_count == 0;
      if (exhaustive->count() == 0 && cfg.random_count == 0) cfg.exhaustive_max = 4;
      return cmd_verify(suite, cfg);
    }
    if (*enumerate) return cmd_enumerate(n);
    if (*random) return cmd_random(n, count, seed);
  } catch (const Error& e) {
    std::cerr << "topolab: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
