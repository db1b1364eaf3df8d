#include "dodo/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dodo/errors.hpp"

namespace dodo::io {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
  return value.get<std::int64_t>();
}

int small_integer(const json& value, const std::string& what) {
  const auto v = integer(value, what);
  if (v < -1'000'000'000 || v > 1'000'000'000) throw ParseError(what + " is out of range");
  return static_cast<int>(v);
}

struct BoundKey {
  const char* name;
  std::optional<int> PartialBounds::*slot;
};

constexpr BoundKey kBoundKeys[] = {
    {"lw", &PartialBounds::min_work_run},   {"uw", &PartialBounds::max_work_run},
    {"lo", &PartialBounds::min_off_run},    {"uo", &PartialBounds::max_off_run},
    {"Uw", &PartialBounds::max_work_total}, {"Uo", &PartialBounds::max_off_total},
};

RequestSpec parse_request(const json& value, int day) {
  const std::string what = "request of day " + std::to_string(day);
  if (value.is_number_integer()) {
    const auto r = integer(value, what);
    return {r, r};
  }
  if (!value.is_array() || value.size() != 2) throw ParseError(what + " must be an integer or [rl, ru]");
  RequestSpec spec{integer(value[0], what + " lower side"), std::nullopt};
  if (!value[1].is_null()) spec.upper = integer(value[1], what + " upper side");
  return spec;
}

}  // namespace

InstanceSpec parse_instance_spec(const json& doc) {
  InstanceSpec spec;
  spec.days = small_integer(field(doc, "days"), "days");
  if (const auto it = doc.find("workers"); it != doc.end() && !it->is_null()) {
    spec.workers = integer(*it, "workers");
  }
  if (const auto it = doc.find("bounds"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw ParseError("bounds must be an object");
    for (const auto& [key, value] : it->items()) {
      const auto* known = std::find_if(std::begin(kBoundKeys), std::end(kBoundKeys),
                                       [&](const BoundKey& k) { return key == k.name; });
      if (known == std::end(kBoundKeys)) throw ParseError("unknown bound \"" + key + "\"");
      if (!value.is_null()) spec.bounds.*(known->slot) = small_integer(value, "bound " + key);
    }
  }
  if (const auto it = doc.find("requests"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("requests must be an array");
    int day = 1;
    for (const auto& r : *it) spec.requests.push_back(parse_request(r, day++));
  }
  return spec;
}

json instance_to_json(const Instance& instance) {
  const Bounds& b = instance.bounds;
  json requests = json::array();
  for (const auto& r : instance.requests) {
    requests.push_back(r.exact() ? json(r.lower) : json::array({r.lower, r.upper}));
  }
  return {{"days", instance.days},
          {"workers", instance.workers},
          {"bounds",
           {{"lw", b.min_work_run},
            {"uw", b.max_work_run},
            {"lo", b.min_off_run},
            {"uo", b.max_off_run},
            {"Uw", b.max_work_total},
            {"Uo", b.max_off_total}}},
          {"requests", requests}};
}

Schedule parse_schedule(const json& doc) {
  const int days = small_integer(field(doc, "days"), "days");
  const auto workers = integer(field(doc, "workers"), "workers");
  if (days < 1) throw ParseError("days must be at least 1");
  if (workers < 0) throw ParseError("workers must be non-negative");
  if (const auto it = doc.find("rows"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("rows must be an array of strings");
    std::vector<std::string> rows;
    for (const auto& row : *it) {
      if (!row.is_string()) throw ParseError("rows must be an array of strings");
      rows.push_back(row.get<std::string>());
    }
    if (static_cast<std::int64_t>(rows.size()) != workers) {
      throw ParseError("schedule lists " + std::to_string(rows.size()) + " rows for " + std::to_string(workers) +
                       " workers");
    }
    try {
      return Schedule::from_rows(days, rows);
    } catch (const DimensionError& e) {
      throw ParseError(e.what());
    }
  }
  const auto& compact = field(doc, "compact");
  if (!compact.is_array()) throw ParseError("compact must be an array");
  std::vector<std::optional<CyclicInterval>> per_day(static_cast<std::size_t>(days));
  for (const auto& entry : compact) {
    const int day = small_integer(field(entry, "day"), "compact day");
    if (day < 1 || day > days) throw ParseError("compact day " + std::to_string(day) + " outside [1, D]");
    auto& slot = per_day[static_cast<std::size_t>(day - 1)];
    if (slot) throw ParseError("compact day " + std::to_string(day) + " listed twice");
    slot = CyclicInterval{integer(field(entry, "offset"), "offset"), integer(field(entry, "count"), "count")};
  }
  std::vector<CyclicInterval> intervals;
  for (int d = 1; d <= days; ++d) {
    const auto& slot = per_day[static_cast<std::size_t>(d - 1)];
    if (!slot) throw ParseError("compact schedule has no entry for day " + std::to_string(d));
    intervals.push_back(*slot);
  }
  try {
    return Schedule::from_compact(days, workers, std::move(intervals));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

json schedule_to_json(const Schedule& schedule, ScheduleFormat format) {
  json doc{{"days", schedule.days()}, {"workers", schedule.workers()}};
  if (format == ScheduleFormat::Compact) {
    if (const auto compact = schedule.compact_form()) {
      json entries = json::array();
      for (int d = 1; d <= schedule.days(); ++d) {
        const auto& iv = (*compact)[static_cast<std::size_t>(d - 1)];
        entries.push_back({{"day", d}, {"offset", iv.offset}, {"count", iv.count}});
      }
      doc["compact"] = std::move(entries);
      return doc;
    }
  }
  doc["rows"] = schedule.rows();
  return doc;
}

reduction::ThreePartition parse_three_partition(const json& doc) {
  reduction::ThreePartition tp;
  tp.groups = small_integer(field(doc, "m"), "m");
  const auto& values = field(doc, "A");
  if (!values.is_array()) throw ParseError("A must be an array of integers");
  for (const auto& a : values) tp.values.push_back(integer(a, "value of A"));
  return tp;
}

json counters_to_json(const ldodosp::PeriodCounters& counters) {
  return {{"started", counters.started}, {"terminated", counters.terminated}};
}

certify::Endpoint parse_endpoint(const std::string& text) {
  if (text == "s") return certify::Endpoint::source();
  if (text == "t") return certify::Endpoint::sink();
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("vertex \"" + text + "\" is not s, t or (d,ON|OFF,a,b)");
  }
  std::vector<std::string> parts;
  std::stringstream inner(text.substr(1, text.size() - 2));
  for (std::string part; std::getline(inner, part, ',');) parts.push_back(part);
  if (parts.size() != 4 || (parts[1] != "ON" && parts[1] != "OFF")) {
    throw ParseError("vertex \"" + text + "\" is not of the form (d,ON|OFF,a,b)");
  }
  const auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw ParseError("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("vertex \"" + text + "\" has a non-integer field \"" + s + "\"");
    }
  };
  return certify::Endpoint::at({number(parts[0]), parts[1] == "ON" ? Shift::On : Shift::Off, number(parts[2]),
                                number(parts[3])});
}

std::vector<certify::FlowTriple> parse_certificate(std::istream& in) {
  std::vector<certify::FlowTriple> out;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    // Vertices may be written with spaces after the commas.
    std::string compact;
    int depth = 0;
    for (char c : line) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth > 0 && (c == ' ' || c == '\t')) continue;
      compact += c;
    }
    std::istringstream tokens(compact);
    std::string tail, head, amount, extra;
    if (!(tokens >> tail)) continue;
    const std::string where = "certificate line " + std::to_string(line_no);
    if (!(tokens >> head >> amount) || (tokens >> extra)) throw ParseError(where + ": expected \"tail head amount\"");
    certify::FlowTriple triple{parse_endpoint(tail), parse_endpoint(head), 0};
    try {
      std::size_t used = 0;
      triple.amount = std::stoll(amount, &used);
      if (used != amount.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError(where + ": amount \"" + amount + "\" is not an integer");
    }
    out.push_back(triple);
  }
  return out;
}

void write_certificate(std::ostream& out, const std::vector<certify::FlowTriple>& triples) {
  for (const auto& t : triples) {
    out << certify::to_string(t.tail) << ' ' << certify::to_string(t.head) << ' ' << t.amount << '\n';
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace dodo::io
