#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dodo/certify.hpp"
#include "dodo/instance.hpp"
#include "dodo/ldodosp.hpp"
#include "dodo/reduction.hpp"
#include "dodo/schedule.hpp"

/// File formats. Instances, schedules and 3-partition inputs are JSON;
/// certificates are line-oriented text.
namespace dodo::io {

/// {"days": D, "workers": N?, "bounds": {"lw":..,"uw":..,"lo":..,"uo":..,"Uw":..,"Uo":..}?,
///  "requests": [[rl, ru] | [rl, null] | r, ...]?}
/// A single integer r means rl = ru = r; a null upper side means ru = N.
/// Throws ParseError.
InstanceSpec parse_instance_spec(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& instance);

enum class ScheduleFormat { Dense, Compact };

/// {"days": D, "workers": N, "rows": ["0110", ...]} or
/// {"days": D, "workers": N, "compact": [{"day": d, "offset": o, "count": k}, ...]}.
Schedule parse_schedule(const nlohmann::json& doc);
/// Compact output falls back to dense rows when some day is not a cyclic interval.
nlohmann::json schedule_to_json(const Schedule& schedule, ScheduleFormat format);

/// {"m": m, "A": [a_1, ..., a_3m]}
reduction::ThreePartition parse_three_partition(const nlohmann::json& doc);

/// {"started": [...], "terminated": [...]}
nlohmann::json counters_to_json(const ldodosp::PeriodCounters& counters);

/// One triple per line: "<tail> <head> <amount>" with endpoints written as
/// "s", "t" or "(d,ON|OFF,a,b)". Blank lines and '#' comments are skipped.
std::vector<certify::FlowTriple> parse_certificate(std::istream& in);
void write_certificate(std::ostream& out, const std::vector<certify::FlowTriple>& triples);

certify::Endpoint parse_endpoint(const std::string& text);

nlohmann::json read_json_file(const std::string& path);

}  // namespace dodo::io
