// Command line front end: enumerate shapes and tableaux, compute a primitive
// idempotent, or run the verification suite for a whole context.
//
// Exit codes: 0 success, 1 failed verification check, 2 invalid input,
// 3 singular substitution, 4 size limit exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wreath/errors.hpp"
#include "wreath/fusion.hpp"
#include "wreath/json_io.hpp"
#include "wreath/oracle.hpp"
#include "wreath/verify.hpp"

namespace {

struct Options {
  unsigned m = 1;
  unsigned n = 0;
  std::string shape;    // JSON, e.g. [[2,1],[1]]
  std::string tableau;  // JSON, e.g. [{"pos":1,"row":1,"col":1}, ...]
  std::string method = "inductive";
  std::string out;
  long long limit = wreath::kDefaultSizeLimit;
  unsigned jobs = 1;
  bool corrupt = false;
};

void write_output(const Options& opt, const wreath::json& j) {
  const std::string text = j.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw wreath::Error("cannot open output file '" + opt.out + "'");
  file << text;
}

wreath::json shape_listing(const Options& opt, const wreath::MultiPartition& shape) {
  auto tabs = wreath::enumerate_standard_tableaux(opt.m, shape);
  wreath::json entry{{"shape", wreath::encode_shape(shape)},
                     {"tableaux", tabs.size()},
                     {"f", wreath::fraction_string(wreath::f_constant(shape))}};
  if (!opt.shape.empty()) {  // explicit shape: include the tableaux themselves
    wreath::json list = wreath::json::array();
    for (const auto& tab : tabs) list.push_back(wreath::encode_tableau(tab));
    entry["standard_tableaux"] = list;
  }
  return entry;
}

int cmd_enumerate(const Options& opt) {
  const wreath::GroupContext ctx{opt.m, opt.n};
  ctx.check_order_limit(wreath::Int(opt.limit));
  std::vector<wreath::MultiPartition> shapes;
  if (!opt.shape.empty()) {
    shapes.push_back(wreath::decode_shape(opt.m, wreath::json::parse(opt.shape)));
    if (shapes.back().total_size() != opt.n)
      throw wreath::Error("shape size does not match n");
  } else {
    shapes = wreath::enumerate_multipartitions(opt.m, opt.n);
  }
  wreath::json listing = wreath::json::array();
  wreath::Int sum_d_squared = 0;
  for (const auto& shape : shapes) {
    wreath::json entry = shape_listing(opt, shape);
    sum_d_squared += wreath::Int(entry["tableaux"].get<std::size_t>()) *
                     wreath::Int(entry["tableaux"].get<std::size_t>());
    listing.push_back(std::move(entry));
  }
  wreath::json out{{"m", opt.m},
                   {"n", opt.n},
                   {"group_order", ctx.order().str()},
                   {"shapes", listing},
                   {"sum_d_squared", sum_d_squared.str()}};
  if (opt.shape.empty()) out["identity_holds"] = (sum_d_squared == ctx.order());
  write_output(opt, out);
  return 0;
}

int cmd_compute(const Options& opt) {
  if (opt.tableau.empty()) throw wreath::Error("compute requires --tableau");
  const wreath::StandardMultiTableau tab =
      wreath::decode_tableau(opt.m, wreath::json::parse(opt.tableau));
  if (tab.size() != opt.n) throw wreath::Error("tableau size does not match n");
  if (!opt.shape.empty()) {
    const auto shape = wreath::decode_shape(opt.m, wreath::json::parse(opt.shape));
    if (!(shape == tab.shape())) throw wreath::Error("tableau does not have the given shape");
  }
  const wreath::Int limit(opt.limit);
  wreath::CycloElement e(wreath::GroupContext{opt.m, opt.n});
  if (opt.method == "consecutive")
    e = wreath::consecutive_evaluation(tab, limit);
  else if (opt.method == "inductive")
    e = wreath::inductive_evaluation(tab, limit);
  else if (opt.method == "jm-oracle")
    e = wreath::jm_idempotent(tab, limit);
  else
    throw wreath::Error("unknown method '" + opt.method + "'");
  wreath::json out{{"element", wreath::encode_element(e)},
                   {"provenance",
                    {{"method", opt.method},
                     {"shape", wreath::encode_shape(tab.shape())},
                     {"tableau", wreath::encode_tableau(tab)},
                     {"f", wreath::fraction_string(wreath::f_constant(tab.shape()))}}}};
  write_output(opt, out);
  return 0;
}

int cmd_verify(const Options& opt) {
  wreath::VerifyOptions vopt;
  vopt.jobs = opt.jobs;
  vopt.limit = wreath::Int(opt.limit);
  vopt.corrupt = opt.corrupt;
  const auto results = wreath::run_verification(wreath::GroupContext{opt.m, opt.n}, vopt);
  const bool pass = wreath::all_passed(results);
  wreath::json out{
      {"m", opt.m}, {"n", opt.n}, {"checks", wreath::encode_report(results)}, {"pass", pass}};
  write_output(opt, out);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact primitive idempotents of wreath product group algebras G(m,1,n)"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_tableau) {
    cmd->add_option("--m", opt.m, "color modulus m >= 1")->required();
    cmd->add_option("--n", opt.n, "number of strands")->required();
    cmd->add_option("--limit", opt.limit, "group order guard")
        ->envname("FUSION_SIZE_LIMIT");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    cmd->add_option("--shape", opt.shape, "multipartition as JSON, e.g. [[2,1],[1]]");
    if (needs_tableau)
      cmd->add_option("--tableau", opt.tableau,
                      "standard multitableau as JSON list of {pos,row,col}");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list shapes and tableau counts");
  add_common(enumerate, false);

  CLI::App* compute = app.add_subcommand("compute", "compute one primitive idempotent");
  add_common(compute, true);
  compute->add_option("--method", opt.method, "consecutive | inductive | jm-oracle")
      ->check(CLI::IsMember({"consecutive", "inductive", "jm-oracle"}));

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, false);
  verify->add_option("--jobs", opt.jobs, "worker threads");
  verify->add_flag("--corrupt", opt.corrupt,
                   "debug: corrupt one idempotent to prove checks can fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(opt);
    if (app.got_subcommand(compute)) return cmd_compute(opt);
    return cmd_verify(opt);
  } catch (const wreath::SingularSubstitution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wreath::SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const wreath::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
