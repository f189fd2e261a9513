// Copyright 2026 The ndwu-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// ndwu-lab: check behaviors, run sweeps and verification campaigns, and
// reproduce the almost-quantum exclusion and the criteria comparison table.
//
// Exit codes: 0 success / satisfied, 2 criterion violated (check), 1 usage or
// input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ndwu/ndwu.hpp"

using namespace ndwu;

namespace {

constexpr int kExitViolated = 2;
constexpr int kExitError = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  return out;
}

/// "lo:hi:n" or a single fixed value.
sweep::Axis parse_axis(const std::string& spec, const char* name) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      throw Error(ErrorKind::InvalidGrid, std::string(name) + ": cannot parse \"" + spec + "\"");
    }
    return v;
  };
  const auto first = spec.find(':');
  if (first == std::string::npos) return sweep::Axis::fixed(number(spec));
  const auto second = spec.find(':', first + 1);
  if (second == std::string::npos) {
    throw Error(ErrorKind::InvalidGrid, std::string(name) + ": expected lo:hi:n, got \"" + spec + "\"");
  }
  const double lo = number(spec.substr(0, first));
  const double hi = number(spec.substr(first + 1, second - first - 1));
  const double n = number(spec.substr(second + 1));
  if (n != std::floor(n) || n < 0 || n > 1e7) {
    throw Error(ErrorKind::InvalidGrid, std::string(name) + ": bad resolution in \"" + spec + "\"");
  }
  const int count = static_cast<int>(n);
  if (count < 2) throw Error(ErrorKind::InvalidGrid, std::string(name) + ": resolution " + std::to_string(count) + " < 2");
  return sweep::Axis::range(lo, hi, count);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_env_tol(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, "NDWU_LAB_TOL must be a positive number, got \"" + text + "\"");
  }
  return v;
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

int cmd_check(const std::string& file, std::optional<double> tol) {
  const auto behavior = parse_behavior_json(read_file(file), tol);
  const auto report = criterion(behavior);
  auto doc = to_json_value(report);
  doc["chsh"] = chsh(behavior);
  doc["npa_tlm"] = criteria::npa_tlm(behavior);
  std::cout << doc.dump(2) << '\n';
  return report.overall ? 0 : kExitViolated;
}

int cmd_aqc(bool swap) {
  const auto r = campaigns::aqc_report(swap);
  std::cout << "mapping " << (swap ? "swapped (A0B1 before A1B0)" : "listed (A1B0 before A0B1)") << '\n'
            << "max_lhs " << format_double(r.max_lhs) << " (" << r.max_lhs_rounded << ")\n"
            << "min_rhs " << format_double(r.min_rhs) << " (" << r.min_rhs_rounded << ")\n"
            << "side_b max_lhs " << format_double(r.report.side_b.max_lhs) << " min_rhs "
            << format_double(r.report.side_b.min_rhs) << '\n'
            << "ndwu " << (r.ndwu_violated ? "VIOLATED" : "satisfied") << '\n'
            << "npa_tlm " << (r.npa_satisfied ? "satisfied" : "VIOLATED") << '\n'
            << "ic " << (r.ic_satisfied ? "satisfied" : "VIOLATED") << '\n';
  if (!swap && !r.matches_reference()) {
    throw Error(ErrorKind::AssertionFailed, "expected roundings 0.44 / -0.25 with a violation, got " +
                                                r.max_lhs_rounded + " / " + r.min_rhs_rounded);
  }
  return 0;
}

struct SweepArgs {
  std::string alpha = "0:1:400", beta = "0", tau = "0:1:400";
  std::string criteria = "all";
  std::string out;
  bool printed_npa = false;
};

int cmd_sweep(const SweepArgs& args, double tol) {
  sweep::GridSpec grid{parse_axis(args.alpha, "alpha"), parse_axis(args.beta, "beta"), parse_axis(args.tau, "tau")};
  sweep::validate_grid(grid);
  sweep::CriterionOptions opts;
  opts.behavior_tol = tol;
  if (args.printed_npa) opts.npa_form = criteria::NpaFamilyForm::Printed;
  const bool beta_slice = grid.beta.is_fixed() && grid.beta.lo == 0.0;
  std::vector<sweep::NamedCriterion> list;
  if (args.criteria == "all") {
    for (const auto& name : sweep::known_criteria()) {
      auto c = sweep::make_criterion(name, opts);
      if (!c.needs_beta_zero || beta_slice) list.push_back(std::move(c));
    }
  } else {
    for (const auto& name : split_list(args.criteria)) list.push_back(sweep::make_criterion(name, opts));
  }
  const auto ds = sweep::sweep_grid(list, grid);
  auto out = open_out(args.out);
  sweep::write_csv(out, ds);
  std::cout << "wrote " << ds.rows.size() << " rows x " << ds.criteria.size() << " criteria to " << args.out << '\n';
  return 0;
}

int cmd_bisect(const std::string& name, const std::string& plane, int rays, const std::string& out_path,
               bool printed_npa, double tol) {
  sweep::CriterionOptions opts;
  opts.behavior_tol = tol;
  if (printed_npa) opts.npa_form = criteria::NpaFamilyForm::Printed;
  const auto c = sweep::make_criterion(name, opts);
  sweep::Plane p{};
  if (plane == "alpha-tau") {
    p = sweep::Plane::AlphaTau;
  } else if (plane == "alpha-beta") {
    if (c.needs_beta_zero) throw Error(ErrorKind::InvalidGrid, "criterion \"" + name + "\" needs a beta = 0 slice");
    p = sweep::Plane::AlphaBeta;
  } else {
    throw Error(ErrorKind::InvalidInput, "plane must be alpha-tau or alpha-beta");
  }
  const auto results = sweep::radial_bisect(c.verdict, p, rays);
  auto out = open_out(out_path);
  sweep::write_rays_csv(out, results);
  std::cout << "wrote " << results.size() << " rays to " << out_path << '\n';
  return 0;
}

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> dims;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidInput, "bad dimension \"" + item + "\"");
    dims.push_back(v);
  }
  return dims;
}

int cmd_verify(const std::string& kind, long trials, const std::string& dims_arg, std::uint64_t seed, double tol) {
  const auto dims = parse_dims(dims_arg);
  long failures = 0;
  if (kind == "theorem1") {
    const auto s = campaigns::run_relation_fuzz(trials, dims, seed);
    failures = s.failures;
    std::cout << "trials " << s.trials << "\npassed " << s.trials - s.failures << "\nfailed " << s.failures
              << "\nmin_slack " << format_double(s.min_slack) << "\ntightest trial " << s.tightest.trial << " d "
              << s.tightest.dim << " seed " << s.tightest.seed << " lhs " << format_double(s.tightest.lhs) << " rhs "
              << format_double(s.tightest.rhs) << '\n';
  } else if (kind == "symmetry") {
    const auto s = campaigns::run_symmetry(trials, dims, seed);
    failures = s.failures;
    std::cout << "pairs " << s.pairs << "\npassed " << s.pairs - s.failures << "\nfailed " << s.failures
              << "\nmax_asymmetry " << format_double(s.max_asymmetry) << "\nworst trial " << s.worst_trial << " d "
              << s.worst_dim << " seed " << seed << '\n';
  } else if (kind == "tsirelson") {
    campaigns::TsirelsonOptions opts;
    opts.samples = trials;
    const auto s = campaigns::run_tsirelson(campaigns::ndwu_verdict(), seed, opts);
    failures = s.violations;
    std::cout << "samples " << s.samples << "\naccepted " << s.accepted << "\nviolations " << s.violations
              << "\nbest_sampled_chsh " << format_double(s.best_sampled) << "\nbest_refined_chsh "
              << format_double(s.best_refined) << "\nbest_abs_chsh " << format_double(s.best_abs_chsh) << '\n';
    if (s.violations > 0) {
      std::cout << "witness weights";
      for (double w : s.best_weights) std::cout << ' ' << format_double(w);
      std::cout << " seed " << seed << '\n';
    }
  } else if (kind == "quantum-criterion") {
    const auto s = campaigns::run_quantum_criterion(trials, seed, tol);
    failures = s.criterion_failures + s.npa_failures + s.relation_failures + s.tsirelson_exceeded;
    std::cout << "trials " << s.trials << "\ncriterion_failures " << s.criterion_failures << "\nnpa_failures "
              << s.npa_failures << "\nrelation_failures " << s.relation_failures << "\ntsirelson_exceeded "
              << s.tsirelson_exceeded << "\nmax_abs_chsh " << format_double(s.max_abs_chsh) << '\n';
    if (s.first_failure >= 0) std::cout << "first failing trial " << s.first_failure << " seed " << seed << '\n';
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown kind \"" + kind + "\"");
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << '\n';
  return failures == 0 ? 0 : kExitError;
}

int cmd_table1(std::uint64_t seed) {
  campaigns::Table1Options opts;
  opts.seed = seed;
  const auto t = campaigns::compute_table1(opts);
  std::printf("%-20s %-5s %-5s %-5s\n", "", "IC", "NPA", "NDWU");
  for (std::size_t r = 0; r < 4; ++r) {
    std::printf("%-20s %-5s %-5s %-5s\n", campaigns::kRowNames[r], yes_no(t.cells[r][0]).c_str(),
                yes_no(t.cells[r][1]).c_str(), yes_no(t.cells[r][2]).c_str());
  }
  std::fflush(stdout);
  if (!t.matches_reference()) {
    std::string msg;
    for (const auto& m : t.mismatches) msg += (msg.empty() ? "" : "; ") + m;
    throw Error(ErrorKind::MismatchWithPaper, msg);
  }
  return 0;
}

int cmd_box(const std::string& name, const boxes::FamilyPoint& pt, double tol) {
  Behavior b = boxes::uniform_box();
  if (name == "pr") {
    b = boxes::pr_box();
  } else if (name == "pr-prime") {
    b = boxes::pr_prime_box();
  } else if (name == "anti-pr") {
    b = boxes::anti_pr_box();
  } else if (name == "uniform") {
    b = boxes::uniform_box();
  } else if (name == "local") {
    b = boxes::local_box(0, 0, 0, 0);
  } else if (name == "aqc") {
    b = boxes::aqc_behavior();
  } else if (name == "family") {
    b = boxes::noisy_family(pt, tol);
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown box \"" + name + "\" (pr, pr-prime, anti-pr, uniform, local, aqc, family)");
  }
  std::cout << to_json(b) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ndwu-lab: uncertainty-disturbance criteria for no-signaling boxes"};
  app.require_subcommand(1);
  double tol = kDefaultTol;
  auto* tol_opt = app.add_option("--tol", tol, "Validation tolerance (default: $NDWU_LAB_TOL or 1e-9)")
                      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Evaluate the correlation criterion on a behavior JSON file");
  std::string check_file;
  check->add_option("file", check_file, "Behavior JSON")->required();

  auto* aqc = app.add_subcommand("aqc", "Almost-quantum exclusion report");
  bool swap = false;
  aqc->add_flag("--swap-joint-order", swap, "Exchange the A1B0 and A0B1 joint entries");

  auto* sweep_cmd = app.add_subcommand("sweep", "Grid sweep of family criteria to CSV");
  SweepArgs sweep_args;
  sweep_cmd->add_option("--alpha", sweep_args.alpha, "lo:hi:n or fixed value")->capture_default_str();
  sweep_cmd->add_option("--beta", sweep_args.beta, "lo:hi:n or fixed value")->capture_default_str();
  sweep_cmd->add_option("--tau", sweep_args.tau, "lo:hi:n or fixed value")->capture_default_str();
  sweep_cmd->add_option("--criteria", sweep_args.criteria, "Comma list or \"all\"")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_args.out, "CSV path")->required();
  sweep_cmd->add_flag("--printed-npa-denominator", sweep_args.printed_npa, "Use the printed NPA family formula");

  auto* bisect = app.add_subcommand("bisect", "Radial boundary bisection to CSV");
  std::string bisect_criterion = "ndwu", plane = "alpha-tau", bisect_out;
  int rays = 64;
  bool bisect_printed = false;
  bisect->add_option("--criterion", bisect_criterion)->capture_default_str();
  bisect->add_option("--plane", plane, "alpha-tau or alpha-beta")->capture_default_str();
  bisect->add_option("--rays", rays)->capture_default_str()->check(CLI::PositiveNumber);
  bisect->add_option("--out", bisect_out, "CSV path")->required();
  bisect->add_flag("--printed-npa-denominator", bisect_printed, "Use the printed NPA family formula");

  auto* verify = app.add_subcommand("verify", "Seeded verification campaign");
  std::string kind, dims = "2,3,4,5";
  long trials = 1000;
  std::uint64_t seed = 0;
  verify->add_option("kind", kind, "theorem1, symmetry, tsirelson, quantum-criterion")
      ->required()
      ->check(CLI::IsMember({"theorem1", "symmetry", "tsirelson", "quantum-criterion"}));
  verify->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--dims", dims, "Comma list within 2..8")->capture_default_str();
  verify->add_option("--seed", seed)->required();

  auto* table = app.add_subcommand("table1", "Criteria comparison table");
  std::uint64_t table_seed = 1;
  table->add_option("--seed", table_seed, "Seed for the sampled Tsirelson cells")->capture_default_str();

  auto* box = app.add_subcommand("box", "Print a named behavior as JSON");
  std::string box_name;
  boxes::FamilyPoint pt;
  box->add_option("name", box_name, "pr, pr-prime, anti-pr, uniform, local, aqc, family")->required();
  box->add_option("--alpha", pt.alpha);
  box->add_option("--beta", pt.beta);
  box->add_option("--tau", pt.tau);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  std::optional<double> tol_override;
  try {
    if (tol_opt->count() > 0) {
      tol_override.emplace(tol);
    } else if (const char* env = std::getenv("NDWU_LAB_TOL")) {
      tol = parse_env_tol(env);
      tol_override.emplace(tol);
    }
    if (*check) return cmd_check(check_file, tol_override);
    if (*aqc) return cmd_aqc(swap);
    if (*sweep_cmd) return cmd_sweep(sweep_args, tol);
    if (*bisect) return cmd_bisect(bisect_criterion, plane, rays, bisect_out, bisect_printed, tol);
    if (*verify) return cmd_verify(kind, trials, dims, seed, tol);
    if (*table) return cmd_table1(table_seed);
    if (*box) return cmd_box(box_name, pt, tol);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
