#include "opdyn.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <unordered_map>

#include "opdyn/extraction.hpp"
#include "opdyn/graph.hpp"
#include "opdyn/harness.hpp"
#include "opdyn/partition.hpp"
#include "opdyn/synth.hpp"

struct opdyn_graph {
  opdyn::Graph impl;
};
struct opdyn_partition {
  opdyn::Partition impl;
};

namespace {

thread_local std::string g_last_error;

opdyn_status fail(opdyn_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

// Maps C++ failures onto status codes at the boundary.
template <typename Fn>
opdyn_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return OPDYN_OK;
  } catch (const opdyn::ParseError& e) {
    return fail(OPDYN_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OPDYN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OPDYN_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    const std::string what = e.what();
    return fail(what.find("cannot open") != std::string::npos ||
                        what.find("write failed") != std::string::npos
                    ? OPDYN_ERR_IO
                    : OPDYN_ERR_RUNTIME,
                what);
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

opdyn_status require(bool ok, const char* what) {
  return ok ? OPDYN_OK : fail(OPDYN_ERR_INVALID_ARGUMENT, what);
}

opdyn::CoreMethod parse_method(const char* method) {
  const std::string m = method ? method : "densest";
  if (m == "densest") return opdyn::CoreMethod::kDensest;
  if (m == "krich") return opdyn::CoreMethod::kRichClub;
  throw std::invalid_argument("unknown core method: " + m +
                              " (expected densest or krich)");
}

}  // namespace

extern "C" {

const char* opdyn_version(void) { return "0.1.0"; }

const char* opdyn_last_error(void) { return g_last_error.c_str(); }

void opdyn_string_free(char* s) { delete[] s; }

opdyn_status opdyn_graph_load(const char* path, opdyn_graph** out) {
  if (auto st = require(path && out, "graph_load: null argument")) return st;
  return guarded([&] { *out = new opdyn_graph{opdyn::load_graph(path)}; });
}

opdyn_status opdyn_graph_from_text(const char* text, opdyn_graph** out) {
  if (auto st = require(text && out, "graph_from_text: null argument"))
    return st;
  return guarded([&] {
    *out = new opdyn_graph{opdyn::largest_component(
        opdyn::normalize(opdyn::parse_edge_list_text(text)))};
  });
}

void opdyn_graph_free(opdyn_graph* g) { delete g; }

opdyn_status opdyn_graph_counts(const opdyn_graph* g, uint64_t* nodes,
                                uint64_t* edges) {
  if (auto st = require(g != nullptr, "graph_counts: null graph")) return st;
  if (nodes) *nodes = g->impl.node_count();
  if (edges) *edges = g->impl.edge_count();
  return OPDYN_OK;
}

opdyn_status opdyn_graph_write_canonical(const opdyn_graph* g,
                                         const char* path) {
  if (auto st = require(g && path, "write_canonical: null argument"))
    return st;
  return guarded([&] { g->impl.write_canonical(path); });
}

opdyn_status opdyn_extract_core(const opdyn_graph* g, const char* method,
                                opdyn_partition** out) {
  if (auto st = require(g && out, "extract_core: null argument")) return st;
  return guarded([&] {
    *out = new opdyn_partition{
        opdyn::extract_core(g->impl, parse_method(method))};
  });
}

opdyn_status opdyn_partition_from_core_file(const opdyn_graph* g,
                                            const char* path,
                                            opdyn_partition** out) {
  if (auto st = require(g && path && out, "core_file: null argument"))
    return st;
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open: ") + path);
    std::unordered_map<std::string, opdyn::agent_id> by_label;
    for (opdyn::agent_id v = 0; v < g->impl.node_count(); ++v)
      by_label.emplace(g->impl.label(v), v);
    std::vector<opdyn::agent_id> core;
    std::string label;
    while (in >> label) {
      const auto it = by_label.find(label);
      if (it == by_label.end())
        throw std::invalid_argument("core file: unknown agent label '" +
                                    label + "'");
      core.push_back(it->second);
    }
    *out = new opdyn_partition{opdyn::Partition(g->impl, core)};
  });
}

void opdyn_partition_free(opdyn_partition* p) { delete p; }

opdyn_status opdyn_partition_core_size(const opdyn_partition* p,
                                       uint64_t* out) {
  if (auto st = require(p && out, "core_size: null argument")) return st;
  *out = p->impl.core_size();
  return OPDYN_OK;
}

opdyn_status opdyn_partition_write_core(const opdyn_graph* g,
                                        const opdyn_partition* p,
                                        const char* path) {
  if (auto st = require(g && p && path, "write_core: null argument"))
    return st;
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw std::runtime_error(std::string("cannot open for writing: ") + path);
    for (opdyn::agent_id v : p->impl.core()) out << g->impl.label(v) << '\n';
    if (!out) throw std::runtime_error(std::string("write failed: ") + path);
  });
}

opdyn_status opdyn_metrics_json(const opdyn_graph* g,
                                const opdyn_partition* p, char** out_json) {
  if (auto st = require(g && p && out_json, "metrics: null argument"))
    return st;
  return guarded(
      [&] { *out_json = dup_string(opdyn::metrics_json(g->impl, p->impl)); });
}

opdyn_status opdyn_parse_rational(const char* text, int64_t* num,
                                  int64_t* den) {
  if (auto st = require(text && num && den, "parse_rational: null argument"))
    return st;
  return guarded([&] {
    const opdyn::Rational r = opdyn::parse_rational(text);
    *num = r.num;
    *den = r.den;
  });
}

opdyn_status opdyn_synth_generate(const opdyn_synth_spec* spec,
                                  opdyn_graph** graph_out,
                                  opdyn_partition** partition_out,
                                  char** warning_out) {
  if (auto st = require(spec && graph_out, "synth: null argument")) return st;
  return guarded([&] {
    opdyn::SynthSpec s;
    s.n_periphery = spec->n_periphery;
    s.epsilon = spec->epsilon;
    s.d_core_out = spec->d_core_out;
    s.d_peri_in = spec->d_peri_in;
    s.c_r = {spec->cr_num, spec->cr_den};
    s.c_d = {spec->cd_num, spec->cd_den};
    s.seed = spec->seed;
    opdyn::SynthResult result = opdyn::generate(s);
    if (warning_out)
      *warning_out = result.plan.warning.empty()
                         ? nullptr
                         : dup_string(result.plan.warning);
    if (partition_out)
      *partition_out = new opdyn_partition{std::move(result.partition)};
    *graph_out = new opdyn_graph{std::move(result.graph)};
  });
}

opdyn_status opdyn_run_experiment(const opdyn_graph* g,
                                  const opdyn_experiment_config* cfg,
                                  char** report_json_out) {
  if (auto st = require(g && cfg, "run_experiment: null argument")) return st;
  return guarded([&] {
    opdyn::ExperimentConfig c;
    c.dataset = cfg->dataset ? cfg->dataset : "dataset";
    c.method = parse_method(cfg->core_method);
    if (cfg->core_override) {
      const auto& core = cfg->core_override->impl.core();
      c.core_override.emplace(core.begin(), core.end());
    }
    const std::string mode = cfg->mode ? cfg->mode : "plain";
    if (mode == "plain")
      c.mode = opdyn::DynMode::kPlain;
    else if (mode == "stubborn-core")
      c.mode = opdyn::DynMode::kStubbornCore;
    else
      throw std::invalid_argument("unknown mode: " + mode);
    c.trials = cfg->trials ? cfg->trials : 50;
    c.max_rounds = cfg->max_rounds;
    c.consensus_fraction =
        cfg->consensus_fraction > 0 ? cfg->consensus_fraction : 0.95;
    c.base_seed = cfg->base_seed;
    c.stats_every = cfg->stats_every;
    c.out_dir = cfg->out_dir ? cfg->out_dir : "";
    c.threads = cfg->threads;
    const opdyn::ExperimentReport rep = opdyn::run_experiment(g->impl, c);
    if (report_json_out) *report_json_out = dup_string(rep.to_json());
  });
}

opdyn_status opdyn_scatter_csv(const char* const* report_paths, size_t count,
                               char** csv_out) {
  if (auto st =
          require((report_paths || count == 0) && csv_out, "scatter: null argument"))
    return st;
  return guarded([&] {
    std::vector<opdyn::ExperimentReport> reports;
    reports.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      std::ifstream in(report_paths[i]);
      if (!in)
        throw std::runtime_error(std::string("cannot open: ") +
                                 report_paths[i]);
      std::ostringstream text;
      text << in.rdbuf();
      reports.push_back(opdyn::ExperimentReport::from_json(text.str()));
    }
    *csv_out = dup_string(opdyn::scatter_data(reports).to_csv());
  });
}

}  // extern "C"
