#include "dodo/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "dodo/certify.hpp"
#include "dodo/errors.hpp"
#include "dodo/feasibility.hpp"
#include "dodo/io.hpp"
#include "dodo/optimize.hpp"
#include "dodo/oracle.hpp"
#include "dodo/reduction.hpp"
#include "dodo/solve.hpp"

namespace dodo::cli {

namespace {

struct Options {
  std::string instance;
  std::string schedule;
  std::string certificate;
  std::string output;
  std::string counters;
  std::optional<WorkerCount> workers;
  std::string format = "compact";
  std::int64_t limit = 24;
  std::string target;
  std::string variant;
  bool all = false;
  std::size_t max_solutions = 1000;
};

Instance load_instance(const Options& o) {
  return make_instance(io::parse_instance_spec(io::read_json_file(o.instance)), o.workers);
}

io::ScheduleFormat schedule_format(const std::string& name) {
  return name == "dense" ? io::ScheduleFormat::Dense : io::ScheduleFormat::Compact;
}

// Writes to the --output file when given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw ParseError("cannot write " + o.output);
  file << text;
}

void print_witness(std::ostream& out, const InfeasibilityWitness& w) {
  out << "INFEASIBLE\n";
  for (const auto& line : w.chain) out << "  " << line << '\n';
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  out << "valid: D=" << inst.days << " N=" << inst.workers << ' ' << describe(inst.bounds) << '\n';
  out << "class: " << to_string(classify_instance(inst)) << '\n';
  return kFeasible;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(o);
  const auto report = solve(inst, {.brute_limit = o.limit});
  err << "route: " << to_string(report.route) << '\n';
  switch (report.verdict) {
    case Verdict::Feasible:
      emit(o, out, io::schedule_to_json(*report.schedule, schedule_format(o.format)).dump(2) + "\n");
      if (!o.counters.empty() && report.counters) {
        std::ofstream file(o.counters);
        if (!file) throw ParseError("cannot write " + o.counters);
        file << io::counters_to_json(*report.counters).dump(2) << '\n';
      }
      return kFeasible;
    case Verdict::Infeasible:
      if (report.witness) {
        print_witness(out, *report.witness);
      } else {
        out << "INFEASIBLE (exhaustive search)\n";
      }
      return kInfeasible;
    case Verdict::Undecided:
      out << "UNDECIDED: N*D = " << inst.workers * inst.days << " exceeds --limit " << o.limit << '\n';
      return kUndecided;
  }
  return kUndecided;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  const Schedule s = io::parse_schedule(io::read_json_file(o.schedule));
  const auto report = check_schedule(inst, s);
  if (report.feasible()) {
    out << "FEASIBLE\n";
    return kFeasible;
  }
  out << "INFEASIBLE: " << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations) out << "  " << describe(v) << '\n';
  return kInfeasible;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(o);
  Schedule s(inst.days, inst.workers);
  if (o.schedule.empty()) {
    const auto report = solve(inst, {.brute_limit = o.limit});
    if (report.verdict == Verdict::Undecided) {
      out << "UNDECIDED\n";
      return kUndecided;
    }
    if (report.verdict == Verdict::Infeasible) {
      if (report.witness) print_witness(out, *report.witness); else out << "INFEASIBLE\n";
      return kInfeasible;
    }
    s = *report.schedule;
  } else {
    s = io::parse_schedule(io::read_json_file(o.schedule));
  }
  const certify::CertificateGraph graph(inst);
  try {
    const auto flow = certify::schedule_to_flow(inst, graph, s);
    std::ostringstream text;
    io::write_certificate(text, certify::unbind_flow(graph, flow));
    emit(o, out, text.str());
  } catch (const InfeasibleError& e) {
    err << e.what() << '\n';
    return kInfeasible;
  }
  return kFeasible;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  std::ifstream in(o.certificate);
  if (!in) throw ParseError("cannot open " + o.certificate);
  const auto triples = io::parse_certificate(in);
  const certify::CertificateGraph graph(inst);
  certify::FlowCertificate flow;
  try {
    flow = certify::bind_flow(graph, triples);
  } catch (const certify::CertificateStructureError& e) {
    out << "REJECTED: " << e.what() << '\n';
    return kInfeasible;
  }
  const auto verdict = certify::verify_certificate(inst, graph, flow);
  if (verdict) {
    out << "VALID\n";
    return kFeasible;
  }
  out << "REJECTED\n";
  for (const auto& reason : verdict.reasons) out << "  " << reason << '\n';
  return kInfeasible;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const auto tp = io::parse_three_partition(io::read_json_file(o.instance));
  static const std::map<std::string, reduction::ExactVariant> exact{
      {"UW_LW", reduction::ExactVariant::UwLw},
      {"UW_LO", reduction::ExactVariant::UwLo},
      {"UO_LO", reduction::ExactVariant::UoLo},
      {"UO_LW", reduction::ExactVariant::UoLw}};
  static const std::map<std::string, reduction::OneSidedVariant> onesided{
      {"ONESIDED_UW_UO_LW", reduction::OneSidedVariant::UwUoLw},
      {"ONESIDED_UW_UO_LO", reduction::OneSidedVariant::UwUoLo}};
  Instance inst;
  if (const auto it = exact.find(o.variant); it != exact.end()) {
    inst = reduction::encode_exact(tp, it->second);
  } else {
    inst = reduction::encode_onesided(tp, onesided.at(o.variant)).instance;
  }
  emit(o, out, io::instance_to_json(inst).dump() + "\n");
  return kFeasible;
}

bool limited_decide(const Instance& inst, std::int64_t limit) { return decide(inst, {.brute_limit = limit}); }

int cmd_optimize_bound(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  const auto kind = *optimize::parse_bound_kind(o.target);
  const auto best =
      optimize::optimize_bound(inst, kind, [&](const Instance& probe) { return limited_decide(probe, o.limit); });
  if (!best) {
    out << "no feasible value of " << o.target << " in [1, " << inst.days << "]\n";
    return kInfeasible;
  }
  out << (optimize::minimizes(kind) ? "minimal " : "maximal ") << o.target << " = " << *best << '\n';
  return kFeasible;
}

int cmd_optimize_workers(const Options& o, std::ostream& out) {
  const auto spec = io::parse_instance_spec(io::read_json_file(o.instance));
  auto free_spec = spec;
  free_spec.workers.reset();
  const auto result = optimize::minimize_workers(make_parametric(free_spec));
  if (!result.workers) {
    out << to_string(result.status) << '\n';
    return kInfeasible;
  }
  out << "minimal N = " << *result.workers << '\n';
  return kFeasible;
}

int cmd_brute(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  oracle::SearchOptions opts{.size_limit = o.limit, .break_symmetry = false, .max_solutions = o.max_solutions};
  const auto mode = o.all ? oracle::SearchMode::EnumerateAll : oracle::SearchMode::FindOne;
  const auto result = oracle::brute_force(inst, mode, opts);
  if (!result.feasible) {
    out << "INFEASIBLE (exhaustive search)\n";
    return kInfeasible;
  }
  if (o.all) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& s : result.schedules) all.push_back(io::schedule_to_json(s, io::ScheduleFormat::Dense));
    emit(o, out, all.dump(2) + "\n");
  } else {
    emit(o, out, io::schedule_to_json(result.schedules.front(), schedule_format(o.format)).dump(2) + "\n");
  }
  return kFeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Days-off scheduling: feasibility, schedules, certificates and hard-instance generation", "dodo"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("instance", o.instance, "Instance JSON file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--workers,-n", o.workers, "Override the worker count N");
  };
  const auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", o.limit, "Largest N*D searched exhaustively")->capture_default_str();
  };
  const auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output,-o", o.output, "Write result to file"); };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Schedule encoding")
        ->check(CLI::IsMember({"dense", "compact"}))
        ->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate an instance, print its class");
  add_instance(validate_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Decide feasibility and emit a schedule or a witness");
  add_instance(solve_cmd);
  add_limit(solve_cmd);
  add_output(solve_cmd);
  add_format(solve_cmd);
  solve_cmd->add_option("--counters", o.counters, "Write period counters (local-bounds route) to file");

  auto* check_cmd = app.add_subcommand("check", "Check a schedule against an instance");
  add_instance(check_cmd);
  check_cmd->add_option("schedule", o.schedule, "Schedule JSON file")->required()->check(CLI::ExistingFile);

  auto* certify_cmd = app.add_subcommand("certify", "Emit a flow certificate for a schedule (solved if omitted)");
  add_instance(certify_cmd);
  certify_cmd->add_option("schedule", o.schedule, "Schedule JSON file")->check(CLI::ExistingFile);
  add_limit(certify_cmd);
  add_output(certify_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Verify a flow certificate");
  add_instance(verify_cmd);
  verify_cmd->add_option("certificate", o.certificate, "Certificate file")->required()->check(CLI::ExistingFile);

  auto* generate_cmd = app.add_subcommand("generate", "Build a hard instance from a 3-partition input");
  generate_cmd->add_option("--from-3partition", o.instance, "JSON file {m, A}")->required()->check(CLI::ExistingFile);
  generate_cmd->add_option("--variant", o.variant, "Encoding")
      ->check(CLI::IsMember({"UW_LW", "UW_LO", "UO_LO", "UO_LW", "ONESIDED_UW_UO_LW", "ONESIDED_UW_UO_LO"}))
      ->default_val("UW_LW");
  add_output(generate_cmd);

  auto* bound_cmd = app.add_subcommand("optimize-bound", "Extreme feasible value of one bound");
  add_instance(bound_cmd);
  add_limit(bound_cmd);
  bound_cmd->add_option("--target", o.target, "Bound to optimize")
      ->required()
      ->check(CLI::IsMember({"lw", "uw", "lo", "uo", "Uw", "Uo"}));

  auto* workers_cmd = app.add_subcommand("optimize-workers", "Smallest feasible worker count");
  workers_cmd->add_option("instance", o.instance, "Instance JSON file")->required()->check(CLI::ExistingFile);

  auto* brute_cmd = app.add_subcommand("brute", "Exhaustive search");
  add_instance(brute_cmd);
  add_limit(brute_cmd);
  add_output(brute_cmd);
  add_format(brute_cmd);
  brute_cmd->add_flag("--all", o.all, "Enumerate every feasible schedule");
  brute_cmd->add_option("--max", o.max_solutions, "Cap on enumerated schedules")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kFeasible : kInputError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (certify_cmd->parsed()) return cmd_certify(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (generate_cmd->parsed()) return cmd_generate(o, out);
    if (bound_cmd->parsed()) return cmd_optimize_bound(o, out);
    if (workers_cmd->parsed()) return cmd_optimize_workers(o, out);
    if (brute_cmd->parsed()) return cmd_brute(o, out);
  } catch (const SizeGateError& e) {
    err << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "arithmetic overflow: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace dodo::cli
