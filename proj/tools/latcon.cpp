// latcon: command-line front end for the lattice congruence library.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latcon/latcon.hpp"

namespace {

using namespace latcon;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Settings {
  std::size_t jobs = default_jobs();
  std::size_t enum_limit = EnumerationOptions{}.limit;
  std::size_t con_cap = CongruenceOptions{}.cap;

  EnumerationOptions enumeration() const { return {enum_limit, jobs}; }
  CongruenceOptions congruence() const { return {con_cap}; }
};

FiniteLattice load(const std::string& path) {
  if (path == "-") return read_lat(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LatconError(ErrorKind::InvalidArgument, "cannot open " + path);
  return read_lat(in);
}

int cmd_validate(const std::string& path) {
  auto lattice = load(path);
  std::cout << "lattice: n=" << lattice.size() << ", covers=" << lattice.covers().size() << '\n';
  return kOk;
}

enum class ConMode { Count, List, Lattice };

int cmd_con(const std::string& path, ConMode mode, const Settings& settings) {
  auto lattice = load(path);
  if (mode == ConMode::Count) {
    std::cout << count_congruences(lattice, settings.congruence()) << '\n';
    return kOk;
  }
  auto cons = all_congruences(lattice, settings.congruence());
  if (mode == ConMode::List) {
    for (const auto& theta : cons.members()) std::cout << theta.to_string() << '\n';
    return kOk;
  }
  auto con_lattice = congruence_lattice(cons);
  std::vector<std::string> comments;
  for (std::size_t i = 0; i < con_lattice.partitions.size(); ++i) {
    comments.push_back("element " + std::to_string(i) + " " + con_lattice.partitions[i].to_string());
  }
  std::cout << write_lat(con_lattice.lattice, comments);
  return kOk;
}

int cmd_quotient(const std::string& path, const std::string& theta_text) {
  auto lattice = load(path);
  auto theta = Partition::parse(theta_text);
  auto result = quotient(lattice, theta);
  std::vector<std::string> comments;
  for (std::size_t x = 0; x < result.block_map.size(); ++x) {
    comments.push_back("block_map " + std::to_string(x) + " " + std::to_string(result.block_map[x]));
  }
  std::cout << write_lat(result.lattice, comments);
  return kOk;
}

int cmd_enumerate(std::size_t n, const Settings& settings) {
  auto catalog = enumerate_lattices(n, settings.enumeration());
  for (std::size_t i = 0; i < catalog.members.size(); ++i) {
    if (i > 0) std::cout << '\n';
    std::cout << write_lat(catalog.members[i]);
  }
  return kOk;
}

int cmd_spectrum(std::size_t n, const Settings& settings) {
  auto report = spectrum(n, settings.enumeration(), settings.congruence());
  std::cout << "con_count,classes\n";
  for (const auto& [count, classes] : report.counts) std::cout << count << ',' << classes << '\n';
  return kOk;
}

int cmd_verify(std::optional<std::size_t> n, const std::optional<std::string>& file, const Settings& settings) {
  std::vector<CheckResult> results;
  if (file) {
    results = run_all(load(*file), settings.congruence());
  } else {
    auto catalog = enumerate_lattices(*n, settings.enumeration());
    results = run_all(catalog, settings.jobs, settings.congruence());
  }
  for (const auto& result : results) std::cout << result.tsv() << '\n';
  return all_passed(results) ? kOk : kDomainError;
}

int cmd_build(const std::string& expression) {
  std::cout << write_lat(build_expression(expression));
  return kOk;
}

int cmd_render(const std::string& path) {
  std::cout << to_dot(load(path));
  return kOk;
}

int cmd_info(const std::string& path, bool certificate_only) {
  auto lattice = load(path);
  auto certificate = canonical_form(lattice);
  if (certificate_only) {
    std::cout << certificate.hex() << '\n';
    return kOk;
  }
  auto height = heights(lattice);
  std::cout << "n=" << lattice.size() << '\n'
            << "covers=" << lattice.covers().size() << '\n'
            << "height=" << height[lattice.top()] << '\n'
            << "join_irreducibles=" << join_irreducibles(lattice).size() << '\n'
            << "meet_irreducibles=" << meet_irreducibles(lattice).size() << '\n'
            << "chain=" << (is_chain(lattice) ? "yes" : "no") << '\n'
            << "certificate=" << certificate.hex() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices and their congruences"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--jobs", settings.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--enum-limit", settings.enum_limit, "Largest n accepted by enumerate, spectrum and verify --n")
      ->envname("LATCON_ENUM_LIMIT");
  app.add_option("--con-cap", settings.con_cap, "Largest congruence set that will be materialized")
      ->envname("LATCON_CON_CAP")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string path;

  auto* validate = app.add_subcommand("validate", "Parse and validate a .lat file");
  validate->add_option("path", path, "Input file, - for stdin")->required();
  validate->callback([&] { action = [&] { return cmd_validate(path); }; });

  auto* con = app.add_subcommand("con", "Congruences of a lattice");
  con->add_option("path", path, "Input file, - for stdin")->required();
  bool list = false;
  bool as_lattice = false;
  auto* count_flag = con->add_flag("--count", "Print |Con(L)| (default)");
  auto* list_flag = con->add_flag("--list", list, "Print every congruence");
  auto* lattice_flag = con->add_flag("--lattice", as_lattice, "Print Con(L) as a .lat lattice");
  count_flag->excludes(list_flag)->excludes(lattice_flag);
  list_flag->excludes(lattice_flag);
  con->callback([&] {
    auto mode = list ? ConMode::List : as_lattice ? ConMode::Lattice : ConMode::Count;
    action = [&, mode] { return cmd_con(path, mode, settings); };
  });

  auto* quot = app.add_subcommand("quotient", "Quotient by a congruence such as 0,1|2|3");
  std::string theta;
  quot->add_option("path", path, "Input file, - for stdin")->required();
  quot->add_option("theta", theta, "Congruence in block text form")->required();
  quot->callback([&] { action = [&] { return cmd_quotient(path, theta); }; });

  std::size_t n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "All lattices of n elements up to isomorphism");
  enumerate->add_option("n", n, "Number of elements")->required();
  enumerate->callback([&] { action = [&] { return cmd_enumerate(n, settings); }; });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Congruence counts over all n-element lattices");
  spectrum_cmd->add_option("n", n, "Number of elements")->required();
  spectrum_cmd->callback([&] { action = [&] { return cmd_spectrum(n, settings); }; });

  auto* verify = app.add_subcommand("verify", "Run the property checks");
  std::optional<std::size_t> verify_n;
  std::optional<std::string> verify_file;
  auto* n_option = verify->add_option("--n", verify_n, "Check every lattice of this size");
  auto* file_option = verify->add_option("--file", verify_file, "Check one .lat file");
  n_option->excludes(file_option);
  verify->require_option(1);
  verify->callback([&] { action = [&] { return cmd_verify(verify_n, verify_file, settings); }; });

  auto* build = app.add_subcommand("build", "Build a lattice from an expression such as glue(n5,chain:3)");
  std::string expression;
  build->add_option("expr", expression, "Lattice expression")->required();
  build->callback([&] { action = [&] { return cmd_build(expression); }; });

  auto* render = app.add_subcommand("render", "Hasse diagram in DOT");
  render->add_option("path", path, "Input file, - for stdin")->required();
  render->callback([&] { action = [&] { return cmd_render(path); }; });

  auto* info = app.add_subcommand("info", "Summary and canonical certificate");
  bool certificate_only = false;
  info->add_option("path", path, "Input file, - for stdin")->required();
  info->add_flag("--certificate", certificate_only, "Print only the certificate");
  info->callback([&] { action = [&] { return cmd_info(path, certificate_only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const int status = action();
    std::cout.flush();
    return status;
  } catch (const LatconError& e) {
    std::cout.flush();
    std::cerr << e.what() << '\n';
    return kDomainError;
  }
}
