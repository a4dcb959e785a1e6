#include "sfcrel/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sfcrel/errors.hpp"
#include "sfcrel/rng.hpp"

namespace sfcrel {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Quotes a CSV cell when it needs it.
std::string cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string setting_label(QueueSetting s) { return std::string(to_string(s)); }

DesignRow row_from(const DesignOutcome& out, const ChainSpec& spec,
                   const std::string& scheme) {
  DesignRow row;
  row.service = spec.service_name;
  row.setting = out.setting;
  row.scheme = scheme;
  row.subchains = out.subchains;
  row.backups = out.total_backups;
  row.reliability = out.reliability;
  row.delay = out.delay;
  row.vcpus = out.vcpus;
  row.backup_vcpus = out.vcpus - vcpu_bill(spec.base_vcpus(), out.subchains, {});
  row.feasible = out.feasible;
  row.note = out.reason;
  return row;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

CheckRow check_reliability(const std::string& name,
                           const RedundancyStructure& structure,
                           double closed_form, std::uint64_t trials,
                           std::uint64_t seed) {
  CheckRow c;
  c.name = name;
  c.expected = closed_form;
  if (structure.component_count() <= kExhaustiveLimit) {
    c.observed = exact_structure_reliability(structure);
    c.tolerance = 1e-12;
    c.note = "exhaustive";
  } else {
    const SimEstimate mc = mc_structure_reliability(structure, trials, seed);
    c.observed = mc.mean;
    const double se =
        std::sqrt(closed_form * (1.0 - closed_form) / static_cast<double>(trials));
    c.tolerance = 4.0 * se;
    c.note = "monte-carlo";
  }
  c.pass = std::fabs(c.observed - c.expected) <= c.tolerance;
  return c;
}

CheckRow check_delay(const std::string& name, QueueSetting setting,
                     const ChainSpec& spec, int subchains,
                     std::uint64_t arrivals, std::uint64_t seed) {
  CheckRow c;
  c.name = name;
  c.tolerance = 0.03;
  c.note = "relative error";
  c.expected = chain_response(setting, spec.service_rates(), spec.arrival_rate,
                              subchains);
  DesConfig cfg;
  cfg.setting = setting;
  cfg.stages = spec.service_rates();
  cfg.arrival_rate = spec.arrival_rate;
  cfg.subchains = subchains;
  cfg.arrivals = arrivals;
  cfg.seed = seed;
  c.observed = des_tandem(cfg).mean;
  c.pass = std::fabs(c.observed - c.expected) <= c.tolerance * c.expected;
  return c;
}

CheckRow failed_check(const std::string& name, const std::string& why) {
  CheckRow c;
  c.name = name;
  c.expected = std::nan("");
  c.observed = std::nan("");
  c.pass = false;
  c.note = why;
  return c;
}

}  // namespace

std::vector<DesignRow> run_design(const Scenario& scenario,
                                  QueueSetting setting) {
  const std::vector<double> node_p = scenario.design_nodes();
  std::vector<DesignRow> rows;
  for (const auto& t : scenario.service_catalog) {
    const ChainSpec& spec = t.chain;
    try {
      const DesignOutcome out = design_chain(spec, setting, node_p);
      rows.push_back(row_from(out, spec, "subchain"));

      // Classical schemes with the same redundancy as the subchain count:
      // dedicated standbys mirror pooled stages, chain standbys mirror
      // parallel subchains.
      const int extra = out.subchains - 1;
      const std::vector<int> per_vnf(spec.vnfs.size(), extra);
      const BaselineResult scb1 = scb1_baseline(spec, per_vnf, node_p);
      const BaselineResult scb2 = scb2_baseline(spec, extra, node_p);
      const int base = vcpu_bill(spec.base_vcpus(), 1, {});
      DesignRow r1{spec.service_name, setting, "scb1", 1,
                   extra * static_cast<int>(spec.vnfs.size()), scb1.reliability,
                   scb1.delay, scb1.vcpus, scb1.vcpus - base, true, ""};
      DesignRow r2{spec.service_name, setting, "scb2", 1,
                   extra * static_cast<int>(spec.vnfs.size()), scb2.reliability,
                   scb2.delay, scb2.vcpus, scb2.vcpus - base, true, ""};
      rows.push_back(r1);
      rows.push_back(r2);

      DesignOutcome full = design_full_backup(spec, node_p);
      full.setting = setting;
      rows.push_back(row_from(full, spec, "full_backup"));
    } catch (const Error& e) {
      DesignRow row;
      row.service = spec.service_name;
      row.setting = setting;
      row.scheme = "subchain";
      row.feasible = false;
      row.note = e.what();
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<StudyRow> run_study(const StudySpec& study,
                                std::span<const double> node_p) {
  const ChainSpec spec = study.chain();
  const std::vector<double> p = spec.vnf_reliabilities();
  std::vector<StudyRow> rows;
  for (QueueSetting setting : {QueueSetting::MM1, QueueSetting::MMM}) {
    for (int l = 1; l <= study.max_subchains; ++l) {
      StudyRow r;
      r.setting = setting;
      r.subchains = l;
      r.delay = chain_response(setting, spec.service_rates(), spec.arrival_rate, l);
      r.vcpus = vcpu_bill(spec.base_vcpus(), l, {});
      if (setting == QueueSetting::MM1) {
        r.reliability = subchain_mm1_reliability(p, l, node_p);
        const BaselineResult b = scb2_baseline(spec, l - 1, node_p);
        r.scb_reliability = b.reliability;
        r.scb_vcpus = b.vcpus;
      } else {
        r.reliability = subchain_mmm_reliability(p, l, node_p);
        const std::vector<int> per_vnf(spec.vnfs.size(), l - 1);
        const BaselineResult b = scb1_baseline(spec, per_vnf, node_p);
        r.scb_reliability = b.reliability;
        r.scb_vcpus = b.vcpus;
      }
      rows.push_back(r);
    }
  }
  return rows;
}

std::vector<SimulationRow> run_simulate(const Scenario& scenario,
                                        QueueSetting setting,
                                        std::uint64_t seed) {
  const ChainSpec spec = scenario.study.chain();
  std::vector<SimulationRow> rows;
  for (int l = 1; l <= scenario.study.max_subchains; ++l) {
    SimulationRow r;
    r.setting = setting;
    r.subchains = l;
    r.analytic_delay =
        chain_response(setting, spec.service_rates(), spec.arrival_rate, l);
    DesConfig cfg;
    cfg.setting = setting;
    cfg.stages = spec.service_rates();
    cfg.arrival_rate = spec.arrival_rate;
    cfg.subchains = l;
    cfg.arrivals = scenario.study.des_arrivals;
    cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(l));
    r.des = des_tandem(cfg);
    r.relative_error = (r.des.mean - r.analytic_delay) / r.analytic_delay;
    rows.push_back(r);
  }
  return rows;
}

RedundancyStructure structure_of(const ChainSpec& spec,
                                 const DesignOutcome& outcome,
                                 std::span<const double> node_p) {
  const std::vector<double> p = spec.vnf_reliabilities();
  const std::size_t width = p.size();
  if (outcome.setting == QueueSetting::MMM) {
    std::vector<int> copies(width, outcome.subchains);
    if (!outcome.backups.empty()) {
      for (std::size_t v = 0; v < width; ++v) copies[v] += outcome.backups[0][v];
    }
    return make_pooled_stages(p, copies, node_p);
  }
  std::vector<std::vector<int>> copies(
      static_cast<std::size_t>(outcome.subchains), std::vector<int>(width, 1));
  for (std::size_t k = 0; k < outcome.backups.size() && k < copies.size(); ++k) {
    for (std::size_t v = 0; v < width; ++v) copies[k][v] += outcome.backups[k][v];
  }
  return make_parallel_subchains(p, copies, node_p);
}

std::vector<SubstrateNode> make_substrate(const Scenario& scenario) {
  std::vector<SubstrateNode> nodes;
  nodes.reserve(static_cast<std::size_t>(scenario.substrate.node_count));
  for (int i = 0; i < scenario.substrate.node_count; ++i) {
    nodes.push_back(SubstrateNode::make("n" + std::to_string(i + 1),
                                        scenario.substrate.capacity,
                                        scenario.substrate.reliability));
  }
  return nodes;
}

std::vector<PlacementRequest> make_requests(const Scenario& scenario,
                                            QueueSetting setting,
                                            std::uint64_t seed) {
  const auto& catalog = scenario.service_catalog;
  std::vector<int> designed;
  if (scenario.demand.mode == DemandMode::catalog) {
    const std::vector<double> node_p = scenario.design_nodes();
    for (const auto& t : catalog) {
      designed.push_back(design_chain(t.chain, setting, node_p).vcpus);
    }
  }
  Rng rng(seed);
  std::vector<PlacementRequest> out;
  for (int i = 0; i < scenario.request_count; ++i) {
    // Service type by traffic share; the last type absorbs rounding.
    const double u = rng.uniform01();
    std::size_t type = catalog.size() - 1;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      cumulative += catalog[k].traffic_share;
      if (u < cumulative) {
        type = k;
        break;
      }
    }
    PlacementRequest r;
    r.id = "s" + std::to_string(i + 1);
    r.service = catalog[type].chain.service_name;
    switch (scenario.demand.mode) {
      case DemandMode::uniform:
        r.demand = rng.uniform_int(scenario.demand.min, scenario.demand.max);
        break;
      case DemandMode::catalog:
        r.demand = designed[type];
        break;
      case DemandMode::explicit_:
        r.demand = scenario.demand.values[static_cast<std::size_t>(i)];
        break;
    }
    out.push_back(std::move(r));
  }
  return out;
}

PlaceOptions place_options_from_env() {
  PlaceOptions options;
  const char* raw = std::getenv(kExactLimitEnv);
  if (raw == nullptr || *raw == '\0') return options;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 1'000'000) {
    throw DomainError(std::string(kExactLimitEnv) +
                      " must be a non-negative integer, got '" + raw + "'");
  }
  options.exact_max_requests = static_cast<int>(v);
  return options;
}

PlaceReport run_place(const Scenario& scenario, QueueSetting setting,
                      std::span<const PlacementMethod> methods,
                      std::uint64_t seed, const PlaceOptions& options) {
  PlaceReport report;
  report.requests = make_requests(scenario, setting, seed);
  report.nodes = make_substrate(scenario);
  const int count = static_cast<int>(report.requests.size());
  for (PlacementMethod method : methods) {
    PlaceRow row;
    row.method = method;
    row.requests = count;
    if (method == PlacementMethod::ExactILP &&
        count > options.exact_max_requests) {
      row.status = "skipped";
      row.note = "request count " + std::to_string(count) +
                 " exceeds exact-solver limit " +
                 std::to_string(options.exact_max_requests);
      report.rows.push_back(row);
      report.outcomes.emplace_back();
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      PlacementOutcome out;
      if (method == PlacementMethod::MMA || method == PlacementMethod::MDM) {
        const PreferenceTables prefs =
            build_preferences(report.requests, report.nodes);
        out = method == PlacementMethod::MMA
                  ? mma_place(report.requests, report.nodes, prefs)
                  : mdm_place(report.requests, report.nodes, prefs);
        row.stable = verify_stability(out, report.requests, report.nodes, prefs);
      } else {
        out = place(method, report.requests, report.nodes);
      }
      row.wall_seconds = seconds_since(start);
      row.status = "ok";
      row.active_nodes = out.active_nodes;
      row.proposals = out.proposals;
      row.search_nodes = out.search_nodes;
      row.proven_optimal = out.proven_optimal;
      report.outcomes.push_back(std::move(out));
    } catch (const Error& e) {
      row.wall_seconds = seconds_since(start);
      row.status = "error";
      row.note = e.what();
      report.outcomes.emplace_back();
    }
    report.rows.push_back(row);
  }
  return report;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

ValidationReport run_validate(const Scenario& scenario, QueueSetting setting,
                              std::uint64_t seed) {
  ValidationReport report;
  const std::vector<double> node_p = scenario.design_nodes();
  const std::uint64_t arrivals = scenario.study.des_arrivals;
  const std::uint64_t trials = scenario.study.mc_trials;
  std::uint64_t stream = 0;

  for (const auto& t : scenario.service_catalog) {
    const ChainSpec& spec = t.chain;
    const std::string tag = spec.service_name + "/" + setting_label(setting);
    try {
      const DesignOutcome out = design_chain(spec, setting, node_p);
      report.checks.push_back(check_reliability(
          "reliability:" + tag, structure_of(spec, out, node_p), out.reliability,
          trials, derive_seed(seed, stream++)));
      report.checks.push_back(check_delay("delay:" + tag, setting, spec,
                                          out.subchains, arrivals,
                                          derive_seed(seed, stream++)));
      DesignOutcome full = design_full_backup(spec, node_p);
      report.checks.push_back(check_reliability(
          "reliability:" + spec.service_name + "/full_backup",
          structure_of(spec, full, node_p), full.reliability, trials,
          derive_seed(seed, stream++)));
    } catch (const Error& e) {
      report.checks.push_back(failed_check("design:" + tag, e.what()));
    }
  }

  const ChainSpec study = scenario.study.chain();
  const std::vector<double> p = study.vnf_reliabilities();
  for (int l = 1; l <= scenario.study.max_subchains; ++l) {
    const std::string tag =
        "study/" + setting_label(setting) + "/l=" + std::to_string(l);
    try {
      const bool pooled = setting == QueueSetting::MMM;
      const RedundancyStructure s =
          pooled ? make_pooled_stages(p, std::vector<int>(p.size(), l), node_p)
                 : make_parallel_chains(p, l, node_p);
      const double closed = pooled ? subchain_mmm_reliability(p, l, node_p)
                                   : subchain_mm1_reliability(p, l, node_p);
      report.checks.push_back(check_reliability(
          "reliability:" + tag, s, closed, trials, derive_seed(seed, stream++)));
      report.checks.push_back(check_delay("delay:" + tag, setting, study, l,
                                          arrivals, derive_seed(seed, stream++)));
    } catch (const Error& e) {
      report.checks.push_back(failed_check("study:" + tag, e.what()));
    }
  }
  return report;
}

std::vector<BenchRow> run_bench(const Scenario& scenario, QueueSetting setting,
                                std::uint64_t seed,
                                const BenchOptions& options) {
  if (options.repeats < 1) throw DomainError("bench repeats must be >= 1");
  std::vector<BenchRow> rows;
  for (int count : options.counts) {
    if (count < 1) throw DomainError("bench request counts must be >= 1");
    std::vector<BenchRow> block(options.methods.size());
    for (std::size_t m = 0; m < options.methods.size(); ++m) {
      block[m].requests = count;
      block[m].method = options.methods[m];
    }
    for (int rep = 0; rep < options.repeats; ++rep) {
      Scenario instance = scenario;
      instance.request_count = count;
      if (instance.demand.mode == DemandMode::explicit_) {
        throw DomainError("bench needs generated demands, not explicit ones");
      }
      const std::uint64_t s = derive_seed(
          seed, static_cast<std::uint64_t>(count) * 100'000 +
                    static_cast<std::uint64_t>(rep));
      const PlaceReport report =
          run_place(instance, setting, options.methods, s, options.place);
      for (std::size_t m = 0; m < report.rows.size(); ++m) {
        const PlaceRow& r = report.rows[m];
        BenchRow& b = block[m];
        if (r.status != "ok") {
          ++b.skipped;
          continue;
        }
        ++b.instances;
        b.mean_active_nodes += r.active_nodes;
        b.mean_proposals += static_cast<double>(r.proposals);
        b.mean_seconds += r.wall_seconds;
      }
    }
    for (auto& b : block) {
      if (b.instances > 0) {
        b.mean_active_nodes /= b.instances;
        b.mean_proposals /= b.instances;
        b.mean_seconds /= b.instances;
      }
      rows.push_back(b);
    }
  }
  return rows;
}

std::string design_csv(const std::vector<DesignRow>& rows) {
  std::ostringstream out;
  out << "service,setting,scheme,subchains,backups,reliability,delay_ms,vcpus,"
         "backup_vcpus,feasible,note\n";
  for (const auto& r : rows) {
    out << cell(r.service) << ',' << setting_label(r.setting) << ','
        << r.scheme << ',' << r.subchains << ',' << r.backups << ','
        << num(r.reliability) << ',' << num(r.delay * 1000.0) << ','
        << r.vcpus << ',' << r.backup_vcpus << ','
        << (r.feasible ? "yes" : "no") << ',' << cell(r.note) << '\n';
  }
  return out.str();
}

std::string study_csv(const std::vector<StudyRow>& rows) {
  std::ostringstream out;
  out << "setting,subchains,reliability,delay_ms,vcpus,scb_reliability,"
         "scb_vcpus\n";
  for (const auto& r : rows) {
    out << setting_label(r.setting) << ',' << r.subchains << ','
        << num(r.reliability) << ',' << num(r.delay * 1000.0) << ','
        << r.vcpus << ',' << num(r.scb_reliability) << ',' << r.scb_vcpus
        << '\n';
  }
  return out.str();
}

std::string simulation_csv(const std::vector<SimulationRow>& rows) {
  std::ostringstream out;
  out << "setting,subchains,analytic_ms,des_mean_ms,des_half_width_ms,samples,"
         "relative_error\n";
  for (const auto& r : rows) {
    out << setting_label(r.setting) << ',' << r.subchains << ','
        << num(r.analytic_delay * 1000.0) << ',' << num(r.des.mean * 1000.0)
        << ',' << num(r.des.half_width_95 * 1000.0) << ',' << r.des.samples
        << ',' << num(r.relative_error) << '\n';
  }
  return out.str();
}

std::string placement_csv(const PlaceReport& report) {
  std::ostringstream out;
  out << "method,requests,status,active_nodes,proposals,search_nodes,"
         "proven_optimal,stable,note\n";
  for (const auto& r : report.rows) {
    const bool matching =
        r.method == PlacementMethod::MMA || r.method == PlacementMethod::MDM;
    const bool ok = r.status == "ok";
    out << to_string(r.method) << ',' << r.requests << ',' << r.status << ',';
    if (ok) {
      out << r.active_nodes << ',' << r.proposals << ',' << r.search_nodes
          << ',' << (r.method == PlacementMethod::ExactILP
                         ? (r.proven_optimal ? "yes" : "no")
                         : "")
          << ',' << (matching ? (r.stable ? "yes" : "no") : "");
    } else {
      out << ",,,,";
    }
    out << ',' << cell(r.note) << '\n';
  }
  return out.str();
}

std::string assignments_csv(const PlaceReport& report) {
  std::ostringstream out;
  out << "method,request,service,demand,node\n";
  for (std::size_t m = 0; m < report.rows.size(); ++m) {
    if (report.rows[m].status != "ok") continue;
    const PlacementOutcome& o = report.outcomes[m];
    for (std::size_t s = 0; s < report.requests.size(); ++s) {
      const auto& r = report.requests[s];
      out << to_string(report.rows[m].method) << ',' << cell(r.id) << ','
          << cell(r.service) << ',' << r.demand << ','
          << cell(report.nodes[o.assignment[s]].id) << '\n';
    }
  }
  return out.str();
}

std::string placement_timings_csv(const PlaceReport& report) {
  std::ostringstream out;
  out << "method,requests,wall_seconds\n";
  for (const auto& r : report.rows) {
    if (r.status == "skipped") continue;
    out << to_string(r.method) << ',' << r.requests << ','
        << num(r.wall_seconds) << '\n';
  }
  return out.str();
}

std::string validation_csv(const ValidationReport& report) {
  std::ostringstream out;
  out << "check,expected,observed,tolerance,result,note\n";
  for (const auto& c : report.checks) {
    out << cell(c.name) << ',' << num(c.expected) << ',' << num(c.observed)
        << ',' << num(c.tolerance) << ',' << (c.pass ? "pass" : "FAIL") << ','
        << cell(c.note) << '\n';
  }
  return out.str();
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "requests,method,instances,skipped,mean_active_nodes,mean_proposals\n";
  for (const auto& r : rows) {
    out << r.requests << ',' << to_string(r.method) << ',' << r.instances
        << ',' << r.skipped << ',' << num(r.mean_active_nodes) << ','
        << num(r.mean_proposals) << '\n';
  }
  return out.str();
}

std::string bench_timings_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "requests,method,instances,mean_seconds\n";
  for (const auto& r : rows) {
    out << r.requests << ',' << to_string(r.method) << ',' << r.instances
        << ',' << num(r.mean_seconds) << '\n';
  }
  return out.str();
}

}  // namespace sfcrel
