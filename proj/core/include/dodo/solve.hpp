#pragma once

#include <cstdint>
#include <optional>

#include "dodo/classify.hpp"
#include "dodo/diffcon.hpp"
#include "dodo/instance.hpp"
#include "dodo/ldodosp.hpp"
#include "dodo/schedule.hpp"

namespace dodo {

enum class Verdict { Feasible, Infeasible, Undecided };

const char* to_string(Verdict verdict);

struct SolveOptions {
  std::int64_t brute_limit = 24;  // N*D gate for hard instances
};

struct SolveReport {
  ComplexityClass route = ComplexityClass::GeneralHard;
  Verdict verdict = Verdict::Undecided;
  std::optional<Schedule> schedule;
  std::optional<InfeasibilityWitness> witness;      // polynomial routes only
  std::optional<ldodosp::PeriodCounters> counters;  // local-bounds route only
};

/// Routes by complexity class: upper-bound solver, counter solver, the all-OFF
/// schedule, or (size-gated) exhaustive search. Undecided when a hard instance
/// is above the gate.
SolveReport solve(const Instance& instance, const SolveOptions& options = {});

/// Feasibility by the same routing. Throws SizeGateError when undecided.
bool decide(const Instance& instance, const SolveOptions& options = {});

}  // namespace dodo
