#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "groupkit/parallel.hpp"

namespace {

struct GlobalArgs {
  std::string ring = "F2";
  std::string format = "text";
  std::string out_path;
  int jobs = 0;
};

cli::CommonOpts make_opts(const GlobalArgs& g) {
  cli::CommonOpts opts;
  opts.ring = cli::parse_ring(g.ring);
  opts.format = cli::parse_format(g.format);
  opts.out_path = g.out_path;
  if (g.jobs > 0) groupkit::set_worker_count(g.jobs);
  return opts;
}

void add_common(CLI::App* cmd, GlobalArgs& g) {
  cmd->add_option("--ring", g.ring, "coefficient ring: F2, F3, Fp:<p>, Zmod:<m>, Z");
  cmd->add_option("--format", g.format, "output format: text, json, csv");
  cmd->add_option("--out", g.out_path, "write a JSON copy of the result to this file");
  cmd->add_option("--jobs", g.jobs, "worker threads (default: cores, or RIORDAN_JOBS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated Riordan group computations over small coefficient rings"};
  app.require_subcommand(1);
  GlobalArgs g;

  auto* table1 = app.add_subcommand("table1", "invariant factors of the truncated Appell groups");
  int max_index = 10;
  bool engine_check = false;
  table1->add_option("--max-index", max_index, "last table row (<= 64, <= 16 with --verify)");
  table1->add_flag("--verify", engine_check, "cross-check each row against the group engine");
  add_common(table1, g);

  auto* element = app.add_subcommand("element", "arithmetic on single group elements");
  std::size_t order = 4;
  std::vector<std::string> mul_args, inv_args, matrix_args, order_args;
  std::string group_name = "TR";
  element->add_option("--n", order, "truncation order");
  element->add_option("--mul", mul_args, "two pair literals")->expected(2);
  element->add_option("--inv", inv_args, "one pair literal")->expected(1);
  element->add_option("--matrix", matrix_args, "one pair literal")->expected(1);
  element->add_option("--order", order_args, "one pair literal")->expected(1);
  element->add_option("--group", group_name, "ambient group name (informational)");
  add_common(element, g);

  auto* group_order = app.add_subcommand("group-order", "subgroup order by closure enumeration");
  std::string which_group = "TR";
  int level = 4;
  group_order->add_option("--group", which_group, "TR, TA, or TJ");
  group_order->add_option("--n", level, "truncation level");
  add_common(group_order, g);

  auto* lcs = app.add_subcommand("lcs", "lower central series and quotient reports");
  int lcs_level = 8, lcs_depth = 0;
  lcs->add_option("--n", lcs_level, "truncation level (2..10)");
  lcs->add_option("--depth", lcs_depth, "maximum series length (0 = until trivial)");
  add_common(lcs, g);

  auto* ab = app.add_subcommand("abelianization", "invariant factors of G/[G,G]");
  std::string ab_group = "TR";
  int ab_level = 6;
  ab->add_option("--group", ab_group, "TR, TA, or TJ");
  ab->add_option("--n", ab_level, "truncation level");
  add_common(ab, g);

  auto* dihedral = app.add_subcommand("dihedral", "dihedral embedding checks");
  int dihedral_n = 0, infinite_level = 10;
  dihedral->add_option("--n", dihedral_n, "single exponent to check (default: 1..3)");
  dihedral->add_option("--infinite-level", infinite_level, "truncation for the t/(1+t) relations");
  add_common(dihedral, g);

  auto* shapiro = app.add_subcommand("shapiro", "integer commutator-subgroup membership");
  std::string g_text, f_text, input_path;
  shapiro->add_option("--g", g_text, "JSON array of g coefficients (degree-indexed)");
  shapiro->add_option("--f", f_text, "JSON array of f coefficients (degree-indexed)");
  shapiro->add_option("--input", input_path, "JSON file with {\"g\": [...], \"f\": [...]}");
  add_common(shapiro, g);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites{"all"};
  int n_max = 10;
  verify->add_option("--suites", suites, "appell, lcs, abelianization, dihedral, shapiro, identities, all")
      ->delimiter(',');
  verify->add_option("--n-max", n_max, "level budget for the engine-backed suites");
  add_common(verify, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const cli::CommonOpts opts = make_opts(g);
    if (table1->parsed())
      return cli::cmd_table1(std::cout, max_index, engine_check, opts.format);
    if (element->parsed()) {
      if (!mul_args.empty()) return cli::cmd_element(std::cout, opts, order, "mul", mul_args);
      if (!inv_args.empty()) return cli::cmd_element(std::cout, opts, order, "inv", inv_args);
      if (!matrix_args.empty())
        return cli::cmd_element(std::cout, opts, order, "matrix", matrix_args);
      if (!order_args.empty())
        return cli::cmd_element(std::cout, opts, order, "order", order_args);
      throw std::invalid_argument("element needs one of --mul, --inv, --matrix, --order");
    }
    if (group_order->parsed())
      return cli::cmd_group_order(std::cout, opts, which_group, level);
    if (lcs->parsed()) return cli::cmd_lcs(std::cout, opts, lcs_level, lcs_depth);
    if (ab->parsed()) return cli::cmd_abelianization(std::cout, opts, ab_group, ab_level);
    if (dihedral->parsed())
      return cli::cmd_dihedral(std::cout, opts, dihedral_n, infinite_level);
    if (shapiro->parsed()) {
      cli::json input;
      if (!input_path.empty()) {
        std::ifstream file(input_path);
        if (!file) throw std::invalid_argument("cannot read input file: " + input_path);
        file >> input;
      } else {
        if (g_text.empty() || f_text.empty())
          throw std::invalid_argument("shapiro needs --input or both --g and --f");
        input = cli::json{{"g", cli::json::parse(g_text)}, {"f", cli::json::parse(f_text)}};
      }
      return cli::cmd_shapiro(std::cout, opts, input);
    }
    if (verify->parsed()) return cli::cmd_verify(std::cout, opts, suites, n_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
