#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "r3/dispatcher.hpp"
#include "r3/group_io.hpp"
#include "r3/orbitals.hpp"
#include "r3/perm_group.hpp"
#include "r3/refine.hpp"
#include "r3/zoo.hpp"

using namespace r3;

namespace {

// exit codes shared by all subcommands
constexpr int exit_ok = 0;
constexpr int exit_rejected = 1;
constexpr int exit_parse = 2;
constexpr int exit_rank = 3;
constexpr int exit_unresolved = 4;

bool read_input(const std::string& path, std::string& text)
{
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

// parse a group file, reporting diagnostics on stderr
bool load_group(const std::string& path, GroupFile& gf)
{
  std::string text;
  if (!read_input(path, text))
    return false;
  ParseResult pr = parse_group(text);
  if (!pr.ok()) {
    std::cerr << (path == "-" ? "<stdin>" : path) << ": " << pr.error.str()
              << "\n";
    return false;
  }
  gf = std::move(*pr.group);
  return true;
}

int cmd_closure(const std::string& path, const ClosureOptions& opt, bool json)
{
  GroupFile gf;
  if (!load_group(path, gf))
    return exit_parse;
  PermGroup g(gf.degree, gf.gens);
  ClosureReport rep = two_closure(g, opt);
  std::cout << (json ? report_json(rep) + "\n" : report_text(rep));
  switch (rep.status) {
    case ClosureStatus::solved:
      return exit_ok;
    case ClosureStatus::not_rank3:
      return exit_rank;
    case ClosureStatus::unresolved:
      return exit_unresolved;
  }
  return exit_unresolved;
}

int cmd_rank(const std::string& path)
{
  GroupFile gf;
  if (!load_group(path, gf))
    return exit_parse;
  PermGroup g(gf.degree, gf.gens);
  if (!g.is_transitive()) {
    std::cout << "intransitive\n";
    return exit_ok;
  }
  OrbitalStructure os = two_orbits(g);
  std::cout << "rank " << os.rank << "\n";
  std::cout << "subdegrees";
  for (uint64_t s : subdegrees(os))
    std::cout << ' ' << s;
  std::cout << "\n";
  return exit_ok;
}

int cmd_oracle(const std::string& path)
{
  GroupFile gf;
  if (!load_group(path, gf))
    return exit_parse;
  PermGroup g(gf.degree, gf.gens);
  AutOptions opt;
  opt.max_degree = g.degree();
  auto h = oracle_two_closure(g, opt);
  if (!h) {
    std::cerr << "oracle budget exceeded\n";
    return exit_unresolved;
  }
  std::cout << format_group(h->degree(), h->generators());
  return exit_ok;
}

int cmd_zoo(const std::string& name, const std::vector<std::string>& params,
            const std::string& out_path)
{
  auto inst = zoo_by_name(name, params);
  if (!inst) {
    std::cerr << "unknown instance: " << name;
    for (const std::string& p : params)
      std::cerr << ' ' << p;
    std::cerr << "\n";
    return exit_parse;
  }
  std::ostringstream out;
  out << "# " << inst->name << "\n";
  out << "# order " << inst->order.str() << "\n";
  out << "# subdegrees";
  for (uint64_t s : inst->subdegrees)
    out << ' ' << s;
  out << "\n";
  if (inst->closure_order)
    out << "# closure order " << inst->closure_order->str() << "\n";
  out << format_group(inst->degree, inst->gens);
  if (out_path.empty() || out_path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << out_path << ": cannot open\n";
      return exit_parse;
    }
    f << out.str();
  }
  return exit_ok;
}

int cmd_verify(const std::string& path, const std::string& cand_path)
{
  GroupFile gf, cf;
  if (!load_group(path, gf) || !load_group(cand_path, cf))
    return exit_parse;
  PermGroup g(gf.degree, gf.gens);
  PermGroup h(cf.degree, cf.gens);
  if (verify_candidate(g, h)) {
    std::cout << "verified\n";
    return exit_ok;
  }
  std::cout << "rejected\n";
  return exit_rejected;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"2-closure of rank 3 permutation groups"};
  app.require_subcommand(1);

  std::string file;
  std::string cand_file;
  std::string oracle_mode = "auto";
  unsigned threshold = 256;
  bool json = false;

  CLI::App* closure = app.add_subcommand("closure", "compute the 2-closure");
  closure->add_option("file", file, "group file ('-' for stdin)")->required();
  closure->add_option("--oracle", oracle_mode, "oracle mode (on, off, auto)")
      ->check(CLI::IsMember({"on", "off", "auto"}));
  closure->add_option("--threshold", threshold,
                      "max degree for the automatic oracle");
  closure->add_flag("--json", json, "emit the report as JSON");

  CLI::App* rank = app.add_subcommand("rank", "report rank and subdegrees");
  rank->add_option("file", file, "group file ('-' for stdin)")->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force 2-closure via automorphisms");
  oracle->add_option("file", file, "group file ('-' for stdin)")->required();

  std::string zoo_name;
  std::vector<std::string> zoo_params;
  std::string out_path;
  CLI::App* zoo = app.add_subcommand("zoo", "emit a named instance");
  zoo->add_option("name", zoo_name, "instance family")->required();
  zoo->add_option("params", zoo_params, "family parameters");
  zoo->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "check a closure candidate for a group");
  verify->add_option("file", file, "group file")->required();
  verify->add_option("candidate", cand_file, "candidate group file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (closure->parsed()) {
    ClosureOptions opt;
    opt.oracle = oracle_mode == "on"    ? OracleMode::on
                 : oracle_mode == "off" ? OracleMode::off
                                        : OracleMode::automatic;
    opt.threshold = threshold;
    return cmd_closure(file, opt, json);
  }
  if (rank->parsed())
    return cmd_rank(file);
  if (oracle->parsed())
    return cmd_oracle(file);
  if (zoo->parsed())
    return cmd_zoo(zoo_name, zoo_params, out_path);
  if (verify->parsed())
    return cmd_verify(file, cand_file);
  return exit_parse;
}
