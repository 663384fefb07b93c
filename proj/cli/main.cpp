#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "hopfkit/commands.hpp"

using namespace hk;

namespace {

const std::map<std::string, std::string> kHelp = {
    {"verify", "Hopf (or braided Hopf) axioms"},
    {"grouplikes", "group-like elements and their multiplication table"},
    {"double", "Drinfel'd double: axioms, group-likes and S(B)"},
    {"azumaya", "Azumaya checks for End algebras (E_alpha with --braided)"},
    {"braiding-sym", "symmetry of the braiding with the exterior factor"},
    {"sequence", "the exact sequence at desk scale"},
    {"cond-check", "the subgroup condition for GL_n automorphisms"},
    {"export", "structure constants as JSON"}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras and Hopf algebras in braided categories"};
  app.require_subcommand(1);
  RunConfig cfg;
  for (auto& name : command_names()) {
    auto* sc = app.add_subcommand(name, kHelp.at(name));
    sc->add_option("--algebra", cfg.algebra, "algebra spec, e.g. taft:n=3, family:m=2,n=1,d=1, double:taft:n=3")
        ->required();
    sc->add_option("--field", cfg.field, "field spec p=<prime|Q>,root=<order>");
    sc->add_option("--out", cfg.out, "write JSON here instead of stdout");
    sc->add_flag("--braided", cfg.braided, "use the exterior braided factor of a family algebra");
    sc->add_option("--sample", cfg.sample, "sample size");
    sc->add_option("--seed", cfg.seed, "sampling seed");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  CommandResult r;
  try {
    r = run_command(app.get_subcommands().front()->get_name(), cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << Error::name(e.code()) << "): " << e.what() << "\n";
    return 2;
  }
  std::string text = r.doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  return r.ok ? 0 : 1;
}
