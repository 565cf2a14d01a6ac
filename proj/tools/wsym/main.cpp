// wsym: batch verification of Lie algebras, invariant metrics and
// homogeneous-space geodesic properties. Emits one JSON report per run.

#include <wsym/cli.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

// "check-go" -> "check" "go", so both spellings reach the same subcommand.
std::vector<std::string> split_hyphenated(int argc, char** argv) {
  static const std::map<std::string, std::vector<std::string>> aliases{
      {"catalog-list", {"catalog", "list"}},
      {"catalog-export", {"catalog", "export"}},
      {"check-invariance", {"check", "invariance"}},
      {"check-go", {"check", "go"}},
      {"check-two-step", {"check", "two-step"}},
      {"check-weak-symmetry", {"check", "weak-symmetry"}},
      {"demo-exp-image", {"demo", "exp-image"}},
  };
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    auto it = i == 1 ? aliases.find(argv[i]) : aliases.end();
    if (it != aliases.end()) args.insert(args.end(), it->second.begin(), it->second.end());
    else args.emplace_back(argv[i]);
  }
  return args;
}

struct Options {
  wsym::cli::RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> params;
  bool any_det = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--space,--id", o.cfg.space_id, "catalog id (heisenberg, sphere-un, sp1-spn, kath-olbrich, sl3-killing)");
  cmd->add_option("--file", o.cfg.space_file, "space bundle JSON");
  cmd->add_option("--algebra", o.cfg.algebra_file, "algebra definition JSON");
  cmd->add_option("--form", o.cfg.form_file, "form JSON");
  for (const char* p : {"p", "q", "a", "b", "n", "m"})
    cmd->add_option(std::string("--") + p, o.params[p], std::string("catalog parameter ") + p);
  cmd->add_option("--seed", o.seed, "sampling seed (default: $WSYM_SEED or 0)");
  cmd->add_option("--samples", o.cfg.samples, "number of random samples");
  cmd->add_option("--output,-o", o.cfg.output, "write the report here instead of stdout");
  cmd->add_flag("--pretty", o.cfg.pretty, "human-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wsym: exact checks for pseudo-Riemannian homogeneous spaces"};
  app.require_subcommand(1);
  Options o;
  using wsym::cli::Command;
  std::map<CLI::App*, Command> leaves;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Command c) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, o);
    leaves[cmd] = c;
    return cmd;
  };

  CLI::App* catalog = app.add_subcommand("catalog", "catalog spaces");
  catalog->require_subcommand(1);
  leaf(catalog, "list", "list catalog entries", Command::catalog_list);
  leaf(catalog, "export", "write a catalog space bundle", Command::catalog_export);
  leaf(&app, "validate", "antisymmetry and Jacobi check", Command::validate);
  leaf(&app, "lcs", "lower central series dimensions", Command::lcs);
  leaf(&app, "signature", "signature of a metric or form", Command::signature);
  CLI::App* check = app.add_subcommand("check", "property checks");
  check->require_subcommand(1);
  leaf(check, "invariance", "bi-invariance <[x,y],z> = <x,[y,z]>", Command::check_invariance);
  leaf(check, "go", "geodesic orbit survey", Command::check_go);
  leaf(check, "two-step", "two-step nilradical criterion", Command::check_two_step);
  leaf(check, "weak-symmetry", "tangent reversal witnesses", Command::check_weak_symmetry);
  CLI::App* demo = app.add_subcommand("demo", "floating-point demonstrations");
  demo->require_subcommand(1);
  CLI::App* exp_image = leaf(demo, "exp-image", "is a matrix in the image of exp?", Command::demo_exp_image);
  exp_image->add_option("--matrix", o.cfg.matrix, "JSON array of rows, or a path to one");
  exp_image->add_flag("--any-det", o.any_det, "skip the det = 1 requirement");

  const auto args = split_hyphenated(argc, argv);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [cmd, c] : leaves)
    if (cmd->parsed()) o.cfg.command = c;

  try {
    for (const auto& [k, v] : o.params)
      if (!v.empty()) o.cfg.params[k] = wsym::parse_rational(v);
    if (o.seed) {
      o.cfg.seed = *o.seed;
    } else if (const char* env = std::getenv("WSYM_SEED")) {
      o.cfg.seed = std::stoull(env);
    }
  } catch (const std::exception& e) {
    std::cerr << "wsym: input error: " << e.what() << "\n";
    return 2;
  }
  o.cfg.det_one = !o.any_det;
  return wsym::cli::run(o.cfg, std::cout, std::cerr);
}
