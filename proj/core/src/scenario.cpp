#include "sfcrel/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sfcrel/errors.hpp"

namespace sfcrel {

namespace {

using json = nlohmann::json;

// Walks one JSON object, remembering which keys were read so leftovers can
// be reported as unknown fields.
class ObjectReader {
 public:
  ObjectReader(const json& value, std::string path)
      : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) fail("expected an object");
  }

  bool has(const std::string& key) const { return value_.contains(key); }

  const json& at(const std::string& key) {
    seen_.insert(key);
    auto it = value_.find(key);
    if (it == value_.end()) {
      throw ParseError("missing field '" + field(key) + "'");
    }
    return *it;
  }

  std::string path_of(const std::string& key) const { return field(key); }

  std::string text(const std::string& key) {
    const json& v = at(key);
    if (!v.is_string()) type_error(key, "a string");
    return v.get<std::string>();
  }

  double number(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number()) type_error(key, "a number");
    return v.get<double>();
  }

  std::int64_t integer(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number_integer()) type_error(key, "an integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      type_error(key, "an integer in range");
    }
    return v.get<std::int64_t>();
  }

  int small_integer(const std::string& key) {
    const std::int64_t v = integer(key);
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
      type_error(key, "an integer in range");
    }
    return static_cast<int>(v);
  }

  std::uint64_t unsigned_integer(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number_unsigned()) type_error(key, "a non-negative integer");
    return v.get<std::uint64_t>();
  }

  const json& array(const std::string& key) {
    const json& v = at(key);
    if (!v.is_array()) type_error(key, "an array");
    return v;
  }

  void finish() const {
    for (auto it = value_.begin(); it != value_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ParseError("unknown field '" + field(it.key()) + "'");
      }
    }
  }

 private:
  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError((path_.empty() ? std::string("<root>") : path_) + ": " +
                     what);
  }
  [[noreturn]] void type_error(const std::string& key,
                               const std::string& expected) const {
    throw ParseError("field '" + field(key) + "' must be " + expected);
  }

  const json& value_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

VnfDescriptor read_vnf(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  VnfDescriptor v;
  v.kind = r.text("kind");
  v.reliability = r.number("reliability");
  v.service_rate = r.number("service_rate");
  v.vcpus = r.small_integer("vcpus");
  r.finish();
  return v;
}

ServiceTemplate read_service(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  ServiceTemplate t;
  t.chain.service_name = r.text("name");
  t.traffic_share = r.number("traffic_share");
  t.chain.arrival_rate = r.number("arrival_rate");
  t.chain.delay_budget = r.number("delay_budget");
  t.chain.reliability_target = r.number("reliability_target");
  const json& vnfs = r.array("vnfs");
  for (std::size_t i = 0; i < vnfs.size(); ++i) {
    t.chain.vnfs.push_back(read_vnf(vnfs[i], indexed(r.path_of("vnfs"), i)));
  }
  r.finish();
  return t;
}

SubstrateSpec read_substrate(const json& value) {
  ObjectReader r(value, "substrate");
  SubstrateSpec s;
  s.node_count = r.small_integer("node_count");
  s.capacity = r.small_integer("capacity");
  s.reliability = r.number("reliability");
  r.finish();
  return s;
}

DemandMode parse_demand_mode(const std::string& text) {
  if (text == "uniform") return DemandMode::uniform;
  if (text == "catalog") return DemandMode::catalog;
  if (text == "explicit") return DemandMode::explicit_;
  throw ParseError("field 'placement.demand.mode' must be one of uniform, "
                   "catalog, explicit (got '" + text + "')");
}

DemandSpec read_demand(const json& value) {
  ObjectReader outer(value, "placement");
  DemandSpec d;
  ObjectReader r(outer.at("demand"), "placement.demand");
  d.mode = parse_demand_mode(r.text("mode"));
  switch (d.mode) {
    case DemandMode::uniform:
      d.min = r.small_integer("min");
      d.max = r.small_integer("max");
      break;
    case DemandMode::catalog:
      break;
    case DemandMode::explicit_: {
      const json& values = r.array("values");
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].is_number_integer()) {
          throw ParseError("field '" + indexed("placement.demand.values", i) +
                           "' must be an integer");
        }
        d.values.push_back(values[i].get<int>());
      }
      break;
    }
  }
  r.finish();
  outer.finish();
  return d;
}

StudySpec read_study(const json& value) {
  ObjectReader r(value, "study");
  StudySpec s;
  // Every study field is optional; absent ones keep their defaults.
  if (r.has("vnf_count")) s.vnf_count = r.small_integer("vnf_count");
  if (r.has("vnf_reliability")) s.vnf_reliability = r.number("vnf_reliability");
  if (r.has("service_rate")) s.service_rate = r.number("service_rate");
  if (r.has("arrival_rate")) s.arrival_rate = r.number("arrival_rate");
  if (r.has("vcpus")) s.vcpus = r.small_integer("vcpus");
  if (r.has("max_subchains")) s.max_subchains = r.small_integer("max_subchains");
  if (r.has("des_arrivals")) s.des_arrivals = r.unsigned_integer("des_arrivals");
  if (r.has("mc_trials")) s.mc_trials = r.unsigned_integer("mc_trials");
  r.finish();
  return s;
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                           std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json vnf_json(const VnfDescriptor& v) {
  return json{{"kind", v.kind},
              {"reliability", v.reliability},
              {"service_rate", v.service_rate},
              {"vcpus", v.vcpus}};
}

}  // namespace

std::string_view to_string(DemandMode mode) noexcept {
  switch (mode) {
    case DemandMode::uniform:
      return "uniform";
    case DemandMode::catalog:
      return "catalog";
    case DemandMode::explicit_:
      return "explicit";
  }
  return "?";
}

ChainSpec StudySpec::chain() const {
  ChainSpec spec;
  spec.service_name = "study";
  spec.arrival_rate = arrival_rate;
  // The study sweeps l itself; the SLA fields only need to be valid.
  spec.delay_budget = std::numeric_limits<double>::max();
  spec.reliability_target = 0.5;
  for (int i = 0; i < vnf_count; ++i) {
    spec.vnfs.push_back(VnfDescriptor{"VNF" + std::to_string(i + 1),
                                      vnf_reliability, service_rate, vcpus});
  }
  return spec;
}

std::vector<double> Scenario::design_nodes() const {
  return {substrate.reliability};
}

void Scenario::validate() const {
  std::vector<std::string> problems;
  if (schema_version != kScenarioSchemaVersion) {
    problems.push_back("schema_version must be " +
                       std::to_string(kScenarioSchemaVersion));
  }
  if (request_count < 1) problems.push_back("request_count must be >= 1");
  if (substrate.node_count < 1) {
    problems.push_back("substrate.node_count must be >= 1");
  }
  if (substrate.capacity < 1) {
    problems.push_back("substrate.capacity must be >= 1");
  }
  if (!(substrate.reliability > 0.0 && substrate.reliability <= 1.0)) {
    problems.push_back("substrate.reliability must lie in (0, 1]");
  }
  switch (demand.mode) {
    case DemandMode::uniform:
      if (demand.min < 1) problems.push_back("placement demand min must be >= 1");
      if (demand.max < demand.min) {
        problems.push_back("placement demand max must be >= min");
      }
      break;
    case DemandMode::catalog:
      break;
    case DemandMode::explicit_:
      if (demand.values.size() != static_cast<std::size_t>(std::max(0, request_count))) {
        problems.push_back("placement demand lists " +
                           std::to_string(demand.values.size()) +
                           " values for " + std::to_string(request_count) +
                           " requests");
      }
      for (int v : demand.values) {
        if (v < 1) {
          problems.push_back("placement demand values must be >= 1");
          break;
        }
      }
      break;
  }

  if (service_catalog.empty()) {
    problems.push_back("service_catalog must not be empty");
  }
  double share_sum = 0.0;
  std::set<std::string> names;
  for (const auto& t : service_catalog) {
    if (!names.insert(t.chain.service_name).second) {
      problems.push_back("duplicate service name '" + t.chain.service_name + "'");
    }
    if (!(t.traffic_share >= 0.0 && t.traffic_share <= 1.0)) {
      problems.push_back("service '" + t.chain.service_name +
                         "': traffic_share must lie in [0, 1]");
    }
    share_sum += t.traffic_share;
    try {
      t.chain.validate();
    } catch (const ValidationError& e) {
      problems.insert(problems.end(), e.problems().begin(), e.problems().end());
    }
  }
  if (!service_catalog.empty() && std::fabs(share_sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "traffic shares sum to " << share_sum << ", expected 1";
    problems.push_back(msg.str());
  }

  if (study.vnf_count < 1) problems.push_back("study.vnf_count must be >= 1");
  if (!(study.vnf_reliability > 0.0 && study.vnf_reliability <= 1.0)) {
    problems.push_back("study.vnf_reliability must lie in (0, 1]");
  }
  if (!(study.service_rate > 0.0)) {
    problems.push_back("study.service_rate must be positive");
  }
  if (!(study.arrival_rate > 0.0)) {
    problems.push_back("study.arrival_rate must be positive");
  }
  if (study.vcpus < 1) problems.push_back("study.vcpus must be >= 1");
  if (study.max_subchains < 1) {
    problems.push_back("study.max_subchains must be >= 1");
  }
  if (study.des_arrivals < 100) {
    problems.push_back("study.des_arrivals must be >= 100");
  }
  if (study.mc_trials < 1) problems.push_back("study.mc_trials must be >= 1");

  if (!problems.empty()) throw ValidationError(std::move(problems));
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = locate(text, offset);
    throw ParseError("scenario is not valid JSON at line " +
                         std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }

  ObjectReader r(doc, "");
  Scenario s;
  s.schema_version = r.small_integer("schema_version");
  if (s.schema_version != kScenarioSchemaVersion) {
    throw ParseError("unsupported schema_version " +
                     std::to_string(s.schema_version) + " (expected " +
                     std::to_string(kScenarioSchemaVersion) + ")");
  }
  if (r.has("name")) s.name = r.text("name");
  try {
    s.setting = parse_queue_setting(r.text("setting"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("field 'setting': ") + e.what());
  }
  s.seed = r.unsigned_integer("seed");
  s.request_count = r.small_integer("request_count");
  s.substrate = read_substrate(r.at("substrate"));
  s.demand = read_demand(r.at("placement"));
  const json& catalog = r.array("service_catalog");
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    s.service_catalog.push_back(
        read_service(catalog[i], indexed("service_catalog", i)));
  }
  if (r.has("study")) s.study = read_study(r.at("study"));
  r.finish();

  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string write_scenario(const Scenario& s) {
  json doc;
  doc["schema_version"] = s.schema_version;
  if (!s.name.empty()) doc["name"] = s.name;
  doc["setting"] = std::string(to_string(s.setting));
  doc["seed"] = s.seed;
  doc["request_count"] = s.request_count;
  doc["substrate"] = json{{"node_count", s.substrate.node_count},
                          {"capacity", s.substrate.capacity},
                          {"reliability", s.substrate.reliability}};
  json demand{{"mode", std::string(to_string(s.demand.mode))}};
  if (s.demand.mode == DemandMode::uniform) {
    demand["min"] = s.demand.min;
    demand["max"] = s.demand.max;
  } else if (s.demand.mode == DemandMode::explicit_) {
    demand["values"] = s.demand.values;
  }
  doc["placement"] = json{{"demand", demand}};
  json catalog = json::array();
  for (const auto& t : s.service_catalog) {
    json vnfs = json::array();
    for (const auto& v : t.chain.vnfs) vnfs.push_back(vnf_json(v));
    catalog.push_back(json{{"name", t.chain.service_name},
                           {"traffic_share", t.traffic_share},
                           {"arrival_rate", t.chain.arrival_rate},
                           {"delay_budget", t.chain.delay_budget},
                           {"reliability_target", t.chain.reliability_target},
                           {"vnfs", vnfs}});
  }
  doc["service_catalog"] = catalog;
  doc["study"] = json{{"vnf_count", s.study.vnf_count},
                      {"vnf_reliability", s.study.vnf_reliability},
                      {"service_rate", s.study.service_rate},
                      {"arrival_rate", s.study.arrival_rate},
                      {"vcpus", s.study.vcpus},
                      {"max_subchains", s.study.max_subchains},
                      {"des_arrivals", s.study.des_arrivals},
                      {"mc_trials", s.study.mc_trials}};
  return doc.dump(2) + "\n";
}

}  // namespace sfcrel
