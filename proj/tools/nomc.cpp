#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nomc/json_io.hpp"
#include "nomc/oracle.hpp"
#include "nomc/parser.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOpts {
  std::string path;
  bool json = false;
  std::size_t group_cap = nomc::kDefaultGroupCap;
  unsigned seed = 0;  // reserved for test tooling
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("file", opts.path, "problem file, or - for stdin")->required();
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
  cmd->add_option("--max-group-order", opts.group_cap,
                  "element budget for generated-group closures");
  cmd->add_option("--seed", opts.seed, "reserved for test tooling");
}

int run_check(const CommonOpts& opts, bool want_proof) {
  nomc::ProblemFile file = nomc::parse_file(read_input(opts.path));
  if (file.kind != nomc::ProblemFile::Kind::Judgement) {
    std::cerr << "check expects a judgement file (ctx |- s = t)\n";
    return kExitInputError;
  }
  const nomc::Judgement& j = *file.judgement;
  nomc::CheckOptions check_opts{opts.group_cap};

  if (want_proof || opts.json) {
    std::optional<nomc::ProofTree> proof =
        nomc::prove(j.ctx, j.lhs, j.rhs, check_opts);
    if (opts.json) {
      nlohmann::json out = {{"derivable", proof.has_value()}};
      if (proof && want_proof) out["proof"] = nomc::to_json(*proof);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (proof ? "derivable" : "not derivable") << "\n";
      if (proof && want_proof) std::cout << nomc::to_text(*proof);
    }
    return proof ? 0 : kExitNegative;
  }

  bool ok = nomc::check(j.ctx, j.lhs, j.rhs, check_opts);
  std::cout << (ok ? "derivable" : "not derivable") << "\n";
  return ok ? 0 : kExitNegative;
}

int run_unify(const CommonOpts& opts, bool trace) {
  nomc::ProblemFile file = nomc::parse_file(read_input(opts.path));
  if (file.kind != nomc::ProblemFile::Kind::Goal) {
    std::cerr << "unify expects a goal file (s =? t, ...)\n";
    return kExitInputError;
  }

  nomc::SolveOptions solve_opts;
  solve_opts.group_cap = opts.group_cap;
  if (trace) {
    solve_opts.on_step = [](const nomc::UnifProblem& from, const char* rule,
                            const nomc::UnifProblem& to) {
      std::cout << "  " << to_string(measure(from)) << " --" << rule << "--> "
                << to_string(measure(to)) << "  " << nomc::to_string(to)
                << "\n";
    };
  }
  std::set<std::string> dead_reasons;
  solve_opts.on_dead_branch = [&](const nomc::UnifProblem&,
                                  nomc::ReducedKind kind) {
    dead_reasons.insert(nomc::reduced_kind_name(kind));
  };

  std::vector<nomc::Solution> sols = nomc::solve(file.goal, solve_opts);
  if (opts.json) {
    std::cout << nomc::to_json(sols).dump(2) << "\n";
  } else if (sols.empty()) {
    std::cout << "unsolvable";
    if (!dead_reasons.empty()) {
      std::cout << " (";
      bool first = true;
      for (const std::string& r : dead_reasons) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << r;
      }
      std::cout << ")";
    }
    std::cout << "\n";
  } else {
    std::cout << sols.size() << " solution" << (sols.size() == 1 ? "" : "s")
              << "\n";
    for (const nomc::Solution& s : sols) std::cout << to_string(s) << "\n";
  }
  return sols.empty() ? kExitNegative : 0;
}

int run_normalize(const CommonOpts& opts) {
  nomc::ProblemFile file = nomc::parse_file(read_input(opts.path));
  if (file.kind != nomc::ProblemFile::Kind::Judgement) {
    std::cerr << "normalize expects a judgement file (its context is "
                 "normalized)\n";
    return kExitInputError;
  }
  nomc::Context normal = nomc::normalize(file.judgement->ctx);
  if (opts.json) {
    nlohmann::json out = {{"context", nomc::to_json(normal)}};
    nlohmann::json names = nlohmann::json::array();
    for (const nomc::Atom& a : normal.nu_names()) names.push_back(a.str());
    out["new"] = std::move(names);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << nomc::to_string(normal) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-equivalence modulo commutativity and nominal "
               "C-unification with fixed-point constraints"};
  app.require_subcommand(1);

  CommonOpts check_opts, unify_opts, norm_opts;
  bool want_proof = false, trace = false;

  CLI::App* check_cmd =
      app.add_subcommand("check", "decide a judgement ctx |- s = t");
  add_common(check_cmd, check_opts);
  check_cmd->add_flag("--proof", want_proof, "print the derivation");

  CLI::App* unify_cmd =
      app.add_subcommand("unify", "solve a goal s =? t, ...");
  add_common(unify_cmd, unify_opts);
  unify_cmd->add_flag("--trace", trace,
                      "print simplification steps with measures");

  CLI::App* norm_cmd =
      app.add_subcommand("normalize", "print the (R1)/(R2) normal form of "
                         "the file's context");
  add_common(norm_cmd, norm_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_cmd->parsed()) return run_check(check_opts, want_proof);
    if (unify_cmd->parsed()) return run_unify(unify_opts, trace);
    return run_normalize(norm_opts);
  } catch (const nomc::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
