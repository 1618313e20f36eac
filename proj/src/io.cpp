#include "robsched/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "robsched/core.hpp"

namespace robsched::io {

namespace {

using nlohmann::json;

constexpr std::string_view kInstanceFormat = "robsched-instance";
constexpr std::string_view kSolutionFormat = "robsched-solution";

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     e.what());
  }
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field \"" + key + "\"");
  return *it;
}

Time as_int(const json& value, const std::string& path) {
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<Time>::max()))
      throw ParseError(path + ": integer out of range");
    return static_cast<Time>(v);
  }
  if (!value.is_number_integer()) throw ParseError(path + ": expected an integer");
  return value.get<Time>();
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path + ": expected a string");
  return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path + ": expected an array");
  return value;
}

void check_header(const json& doc, std::string_view format) {
  const std::string got = as_string(field(doc, "format", "$"), "$.format");
  if (got != format) throw ParseError("$.format: expected \"" + std::string(format) + "\", got \"" + got + "\"");
  const Time version = as_int(field(doc, "version", "$"), "$.version");
  if (version != kFormatVersion)
    throw ParseError("$.version: unsupported version " + std::to_string(version));
}

std::vector<Time> int_array(const json& value, const std::string& path) {
  std::vector<Time> out;
  out.reserve(as_array(value, path).size());
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(as_int(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void append_int(std::string& out, Time v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

void append_int_array(std::string& out, const auto& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    append_int(out, static_cast<Time>(values[i]));
  }
  out += ']';
}

}  // namespace

std::string to_string(Criterion criterion) {
  return criterion == Criterion::Absolute ? "absolute" : "regret";
}

Criterion parse_criterion(std::string_view text) {
  if (text == "absolute") return Criterion::Absolute;
  if (text == "regret") return Criterion::Regret;
  throw ParseError("unknown criterion \"" + std::string(text) + "\"");
}

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  check_header(doc, kInstanceFormat);

  const json& unc = field(doc, "uncertainty", "$");
  UncertaintyModel model;
  const std::string kind = as_string(field(unc, "kind", "$.uncertainty"), "$.uncertainty.kind");
  if (kind == "U1")
    model.kind = UncertaintyKind::U1;
  else if (kind == "U2")
    model.kind = UncertaintyKind::U2;
  else
    throw ParseError("$.uncertainty.kind: expected \"U1\" or \"U2\", got \"" + kind + "\"");
  model.gamma = as_int(field(unc, "gamma", "$.uncertainty"), "$.uncertainty.gamma");

  const json& jobs_json = as_array(field(doc, "jobs", "$"), "$.jobs");
  if (jobs_json.empty()) throw ParseError("$.jobs: must contain at least one job");
  std::vector<Job> jobs;
  jobs.reserve(jobs_json.size());
  for (std::size_t i = 0; i < jobs_json.size(); ++i) {
    const std::string path = "$.jobs[" + std::to_string(i) + "]";
    const json& j = jobs_json[i];
    Job job;
    const Time id = as_int(field(j, "id", path), path + ".id");
    if (id < 1 || id > std::numeric_limits<JobId>::max()) throw ParseError(path + ".id: out of range");
    job.id = static_cast<JobId>(id);
    job.p = as_int(field(j, "p", path), path + ".p");
    job.r_lo = as_int(field(j, "r_lo", path), path + ".r_lo");
    job.r_hi = as_int(field(j, "r_hi", path), path + ".r_hi");
    jobs.push_back(job);
  }
  return Instance(std::move(jobs), model);
}

std::string serialize_instance(const Instance& instance) {
  std::string out;
  out.reserve(64 + instance.size() * 48);
  out += "{\n  \"format\": \"";
  out += kInstanceFormat;
  out += "\",\n  \"version\": ";
  append_int(out, kFormatVersion);
  out += ",\n  \"uncertainty\": {\"kind\": \"";
  out += to_string(instance.uncertainty().kind);
  out += "\", \"gamma\": ";
  append_int(out, instance.uncertainty().gamma);
  out += "},\n  \"jobs\": [\n";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Job& job = instance.jobs()[i];
    out += "    {\"id\": ";
    append_int(out, job.id);
    out += ", \"p\": ";
    append_int(out, job.p);
    out += ", \"r_lo\": ";
    append_int(out, job.r_lo);
    out += ", \"r_hi\": ";
    append_int(out, job.r_hi);
    out += i + 1 < instance.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

SolutionFile parse_solution(std::string_view text) {
  const json doc = parse_document(text);
  check_header(doc, kSolutionFormat);

  SolutionFile sol;
  try {
    sol.criterion = parse_criterion(as_string(field(doc, "criterion", "$"), "$.criterion"));
  } catch (const ParseError& e) {
    throw ParseError(std::string("$.criterion: ") + e.what());
  }
  sol.objective = as_int(field(doc, "objective", "$"), "$.objective");
  for (Time id : int_array(field(doc, "permutation", "$"), "$.permutation")) {
    if (id < 1 || id > std::numeric_limits<JobId>::max())
      throw ParseError("$.permutation: job id out of range");
    sol.schedule.order.push_back(static_cast<JobId>(id));
  }
  const json& worst = field(doc, "worst_case", "$");
  const Time cand = as_int(field(worst, "candidate_job", "$.worst_case"), "$.worst_case.candidate_job");
  if (cand < 1 || cand > std::numeric_limits<JobId>::max())
    throw ParseError("$.worst_case.candidate_job: out of range");
  sol.worst_candidate = static_cast<JobId>(cand);
  sol.worst_scenario.releases =
      int_array(field(worst, "releases", "$.worst_case"), "$.worst_case.releases");
  if (sol.criterion == Criterion::Regret)
    sol.per_candidate = int_array(field(doc, "per_candidate", "$"), "$.per_candidate");
  return sol;
}

std::string serialize_solution(const SolutionFile& solution) {
  std::string out;
  out += "{\n  \"format\": \"";
  out += kSolutionFormat;
  out += "\",\n  \"version\": ";
  append_int(out, kFormatVersion);
  out += ",\n  \"criterion\": \"";
  out += to_string(solution.criterion);
  out += "\",\n  \"objective\": ";
  append_int(out, solution.objective);
  out += ",\n  \"permutation\": ";
  append_int_array(out, solution.schedule.order);
  out += ",\n  \"worst_case\": {\"candidate_job\": ";
  append_int(out, solution.worst_candidate);
  out += ", \"releases\": ";
  append_int_array(out, solution.worst_scenario.releases);
  out += "}";
  if (solution.criterion == Criterion::Regret) {
    out += ",\n  \"per_candidate\": ";
    append_int_array(out, solution.per_candidate);
  }
  out += "\n}\n";
  return out;
}

void check_solution(const SolutionFile& solution, const Instance& instance) {
  Time value = makespan(solution.schedule, solution.worst_scenario, instance);
  if (solution.criterion == Criterion::Regret)
    value -= optimal_makespan(solution.worst_scenario, instance);
  if (value != solution.objective)
    throw InvalidInput("solution objective " + std::to_string(solution.objective) +
                       " but re-evaluation gives " + std::to_string(value));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace robsched::io
