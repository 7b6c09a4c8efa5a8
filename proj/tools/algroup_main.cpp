#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "algroup/io.hpp"
#include "algroup/report.hpp"

namespace {

using namespace algroup;

struct CommonArgs {
  std::string algebra;
  std::uint64_t max_group_order = std::uint64_t(1) << 20;
  int threads = 1;
  std::string json_path;
  bool quiet_timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("algebra", args.algebra,
                  "builtin (u:n:q, trunc:q:m, pattern:q:i-j,...) or an algebra file")
      ->required();
  cmd->add_option("--max-group-order", args.max_group_order,
                  "largest q^n the engine will enumerate");
  cmd->add_option("--threads", args.threads, "worker cap for character-value computation");
  cmd->add_option("--json", args.json_path, "write a machine-readable report to this file");
  cmd->add_flag("--quiet-timing", args.quiet_timing, "suppress the timing footer");
}

Context make_context(const CommonArgs& args) {
  Options opts;
  opts.max_group_order = args.max_group_order;
  opts.threads = args.threads;
  return Context(load_algebra(args.algebra), opts);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << content;
}

FqVec parse_coords(const Field& F, const std::string& text, int expected) {
  FqVec coords;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("--f: empty coordinate");
    coords.push_back(F.of_packed(std::stoll(cur)));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  if (static_cast<int>(coords.size()) != expected)
    throw std::invalid_argument("--f: expected " + std::to_string(expected) +
                                " coordinates, got " + std::to_string(coords.size()));
  return coords;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void footer(const CommonArgs& args, const Timer& timer) {
  if (!args.quiet_timing)
    std::cout << "# timing: total " << timer.seconds() << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables of finite algebra groups via coadjoint orbits"};
  app.require_subcommand(1);

  CommonArgs orbit_args, table_args, polarize_args, verify_args, branch_args;
  std::string functional_text;
  std::string csv_path;
  std::size_t max_subgroups = SIZE_MAX;

  CLI::App* cmd_orbits = app.add_subcommand("orbits", "list the coadjoint orbits");
  add_common(cmd_orbits, orbit_args);

  CLI::App* cmd_table = app.add_subcommand("table", "print the character table");
  add_common(cmd_table, table_args);
  cmd_table->add_option("--csv", csv_path, "write the table as CSV to this file");

  CLI::App* cmd_polarize =
      app.add_subcommand("polarize", "polarization witness for one functional");
  add_common(cmd_polarize, polarize_args);
  cmd_polarize->add_option("--f", functional_text, "functional coordinates, comma separated")
      ->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the full certification chain");
  add_common(cmd_verify, verify_args);

  CLI::App* cmd_branch = app.add_subcommand(
      "branch", "restriction/induction dichotomy over maximal algebra subgroups");
  add_common(cmd_branch, branch_args);
  cmd_branch->add_option("--max-subgroups", max_subgroups,
                         "check at most this many maximal subgroups");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_orbits->parsed()) {
      Timer timer;
      Context ctx = make_context(orbit_args);
      std::cout << render_orbits_text(ctx);
      if (!orbit_args.json_path.empty())
        write_file(orbit_args.json_path, report_json(ctx, "orbits", nullptr, nullptr, false));
      footer(orbit_args, timer);
      return 0;
    }
    if (cmd_table->parsed()) {
      Timer timer;
      Context ctx = make_context(table_args);
      std::cout << render_table_text(ctx);
      if (!csv_path.empty()) write_file(csv_path, table_csv(ctx));
      if (!table_args.json_path.empty())
        write_file(table_args.json_path, report_json(ctx, "table", nullptr, nullptr, true));
      footer(table_args, timer);
      return 0;
    }
    if (cmd_polarize->parsed()) {
      Timer timer;
      Context ctx = make_context(polarize_args);
      Functional f{parse_coords(ctx.field(), functional_text, ctx.algebra().dim())};
      Polarization pol = polarize(ctx, f);
      std::cout << render_polarization_text(ctx, pol);
      // the full witness: lambda, multiplicativity, induced equality, pairing
      LinearCharacterData lambda = lambda_class_function(ctx, f, pol.u);
      bool multiplicative = true;
      std::string mult_detail;
      try {
        verify_lambda_multiplicative(ctx, f, pol.u);
      } catch (const std::exception& ex) {
        multiplicative = false;
        mult_detail = ex.what();
      }
      ClassFunction induced = induce_class_function(ctx, pol.u, lambda.on_h);
      std::size_t orbit = ctx.orbit_index_of(f);
      bool equal = induced == ctx.phi(orbit);
      Cyclotomic pairing = pairing_check(ctx, orbit, f, pol.u);
      std::cout << "lambda multiplicative: " << (multiplicative ? "yes" : "NO - " + mult_detail)
                << "\n";
      std::cout << "induced equals phi_" << orbit << ": " << (equal ? "yes" : "NO") << "\n";
      std::cout << "pairing value: " << pairing.str() << "\n";
      bool all_ok = multiplicative && equal;
      if (!polarize_args.json_path.empty())
        write_file(polarize_args.json_path,
                   report_json(ctx, "polarize", nullptr, nullptr, false));
      footer(polarize_args, timer);
      return all_ok ? 0 : 1;
    }
    if (cmd_verify->parsed()) {
      Timer timer;
      Context ctx = make_context(verify_args);
      std::cout << render_algebra_summary(ctx);
      CertifiedTable cert = certify_irreducible_table(ctx);
      std::cout << render_certification_text(cert);
      if (!verify_args.json_path.empty())
        write_file(verify_args.json_path, report_json(ctx, "verify", &cert, nullptr, true));
      footer(verify_args, timer);
      return cert.all_passed ? 0 : 1;
    }
    if (cmd_branch->parsed()) {
      Timer timer;
      Context ctx = make_context(branch_args);
      BranchReport report = clifford_branching_check(ctx, max_subgroups);
      std::cout << render_branch_text(ctx, report);
      if (!branch_args.json_path.empty())
        write_file(branch_args.json_path, report_json(ctx, "branch", nullptr, &report, false));
      footer(branch_args, timer);
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
