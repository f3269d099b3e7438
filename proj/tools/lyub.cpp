// lyub: Lyubeznik tables, Bass numbers and friends for squarefree monomial ideals.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lyubeznik/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw lyubeznik::input_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string file;
  std::string field = "q";
  std::optional<int> r;
  bool json = false;
  bool check = false;
  unsigned threads = 1;
};

const char* describe(const std::string& command) {
  if (command == "table") return "Lyubeznik table of R/I";
  if (command == "bass") return "Bass numbers of each H^r_I(R)";
  if (command == "dual-bass") return "dual Bass numbers of each H^r_I(R)";
  if (command == "betti") return "multigraded Betti numbers of the Alexander dual";
  if (command == "strands") return "linear strands of the resolution of the Alexander dual";
  if (command == "supp") return "support and small support of each H^r_I(R)";
  if (command == "dims") return "hypercube pieces and injective dimensions";
  if (command == "seqcm") return "sequentially Cohen-Macaulay test over the chosen field";
  if (command == "check") return "cross-validate every route and structural property";
  return "basic facts about the ideal";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of squarefree monomial ideals via local cohomology hypercubes"};
  app.require_subcommand(1);
  Options opt;
  for (const auto& name : lyubeznik::known_commands()) {
    auto* sub = app.add_subcommand(name, describe(name));
    sub->add_option("file", opt.file, "ideal file ('-' reads stdin)")->required();
    sub->add_option("--field", opt.field, "q or fp:<p>");
    sub->add_option("--r", opt.r, "cohomological degree (default: every nonzero r)");
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_flag("--check", opt.check, "also run the consistency checks");
    sub->add_option("--parallel", opt.threads, "worker threads")->check(CLI::Range(1U, 256U));
  }
  CLI11_PARSE(app, argc, argv);

  try {
    auto spec = lyubeznik::parse_input(slurp(opt.file));
    spec.field = lyubeznik::FieldSpec::parse(opt.field);
    spec.commands = {app.get_subcommands().front()->get_name()};
    spec.format = opt.json ? lyubeznik::OutputFormat::json : lyubeznik::OutputFormat::text;
    spec.check = opt.check;
    spec.r = opt.r;
    spec.threads = opt.threads;
    const auto report = lyubeznik::run(spec);
    std::cout << report.rendered(spec.format);
    return report.exit_code;
  } catch (const lyubeznik::resource_error& e) {
    std::cerr << "lyub: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const lyubeznik::contract_error& e) {
    std::cerr << "lyub: internal consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "lyub: " << e.what() << "\n";
    return 2;
  }
}
