#include "dodo/solve.hpp"

#include "dodo/errors.hpp"
#include "dodo/oracle.hpp"
#include "dodo/udodosp.hpp"

namespace dodo {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Feasible: return "FEASIBLE";
    case Verdict::Infeasible: return "INFEASIBLE";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

SolveReport solve(const Instance& instance, const SolveOptions& options) {
  validate(instance);
  SolveReport report;
  report.route = classify_instance(instance);
  switch (report.route) {
    case ComplexityClass::UdodospPoly: {
      auto s = udodosp::solve(instance);
      report.schedule = std::move(s.schedule);
      report.witness = std::move(s.witness);
      break;
    }
    case ComplexityClass::LdodospPoly: {
      auto s = ldodosp::solve(instance);
      report.schedule = std::move(s.schedule);
      report.counters = std::move(s.counters);
      report.witness = std::move(s.witness);
      break;
    }
    case ComplexityClass::TrivialAllOff:
      report.schedule = Schedule(instance.days, instance.workers);
      break;
    case ComplexityClass::GeneralHard: {
      if (instance.workers > 63 || instance.workers * instance.days > options.brute_limit) return report;
      auto found = oracle::brute_force(instance, oracle::SearchMode::FindOne, {.size_limit = options.brute_limit});
      if (found.feasible) report.schedule = std::move(found.schedules.front());
      break;
    }
  }
  report.verdict = report.schedule ? Verdict::Feasible : Verdict::Infeasible;
  return report;
}

bool decide(const Instance& instance, const SolveOptions& options) {
  const auto report = solve(instance, options);
  if (report.verdict == Verdict::Undecided) {
    throw SizeGateError("instance is in the general class and N * D exceeds the search limit " +
                        std::to_string(options.brute_limit));
  }
  return report.verdict == Verdict::Feasible;
}

}  // namespace dodo
