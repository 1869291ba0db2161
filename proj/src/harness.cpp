#include "opdyn/harness.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace opdyn {

namespace {

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json json_number(double x) {
  if (std::isinf(x) || std::isnan(x)) return fmt_double(x);
  return x;
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
  }
  return j.get<double>();
}

// Runs fn(0..count) across a small worker pool; any exception is rethrown
// on the calling thread after all workers finish.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, count ? count : 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

OutcomeFractions classify(const std::vector<TrialOutcome>& outcomes) {
  OutcomeFractions f;
  f.total = static_cast<std::uint32_t>(outcomes.size());
  for (const TrialOutcome& o : outcomes) {
    switch (o.label) {
      case TrialLabel::kCoreConsensus: ++f.consensus_core; break;
      case TrialLabel::kPeripheryConsensus: ++f.consensus_periphery; break;
      case TrialLabel::kMetastable: ++f.metastable; break;
    }
  }
  return f;
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["n"] = n;
  j["m"] = m;
  j["core_method"] = core_method;
  j["core_size"] = core_size;
  j["vol_core"] = vol_core;
  j["vol_periphery"] = vol_peri;
  j["robustness"] = json_number(c_r);
  j["dominance"] = json_number(c_d);
  j["alt_method"] = alt_method;
  j["robustness_alt"] = json_number(c_r_alt);
  j["dominance_alt"] = json_number(c_d_alt);
  j["mode"] = mode;
  j["trials"] = trials;
  j["max_rounds"] = max_rounds;
  j["consensus_fraction"] = consensus_fraction;
  j["base_seed"] = base_seed;
  j["count_core_consensus"] = fractions.consensus_core;
  j["count_periphery_consensus"] = fractions.consensus_periphery;
  j["count_metastable"] = fractions.metastable;
  j["frac_core_consensus"] = fractions.frac_core();
  j["frac_periphery_consensus"] = fractions.frac_periphery();
  j["frac_metastable"] = fractions.frac_metastable();
  j["mean_rounds"] = mean_rounds;
  j["predicted_regime"] = predicted_regime;
  j["dominance_gap"] = json_number(dominance_gap);
  j["robustness_gap"] = json_number(robustness_gap);
  j["thresholds"] = {{"c_star", theory::c_star},
                     {"p_star", theory::p_star},
                     {"sigma_empirical", theory::sigma_empirical}};
  return j.dump(2) + "\n";
}

ExperimentReport ExperimentReport::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ExperimentReport r;
  r.dataset = j.at("dataset").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.m = j.at("m").get<std::uint64_t>();
  r.core_method = j.at("core_method").get<std::string>();
  r.core_size = j.at("core_size").get<std::uint64_t>();
  r.vol_core = j.at("vol_core").get<std::uint64_t>();
  r.vol_peri = j.at("vol_periphery").get<std::uint64_t>();
  r.c_r = number_from_json(j.at("robustness"));
  r.c_d = number_from_json(j.at("dominance"));
  r.alt_method = j.value("alt_method", "");
  r.c_r_alt = j.contains("robustness_alt")
                  ? number_from_json(j.at("robustness_alt"))
                  : std::numeric_limits<double>::quiet_NaN();
  r.c_d_alt = j.contains("dominance_alt")
                  ? number_from_json(j.at("dominance_alt"))
                  : std::numeric_limits<double>::quiet_NaN();
  r.mode = j.value("mode", "plain");
  r.trials = j.at("trials").get<std::uint32_t>();
  r.max_rounds = j.at("max_rounds").get<std::uint64_t>();
  r.consensus_fraction = j.at("consensus_fraction").get<double>();
  r.base_seed = j.at("base_seed").get<std::uint64_t>();
  r.fractions.consensus_core = j.at("count_core_consensus").get<std::uint32_t>();
  r.fractions.consensus_periphery =
      j.at("count_periphery_consensus").get<std::uint32_t>();
  r.fractions.metastable = j.at("count_metastable").get<std::uint32_t>();
  r.fractions.total = r.fractions.consensus_core +
                      r.fractions.consensus_periphery + r.fractions.metastable;
  r.mean_rounds = j.at("mean_rounds").get<double>();
  r.predicted_regime = j.value("predicted_regime", "");
  r.dominance_gap = j.contains("dominance_gap")
                        ? number_from_json(j.at("dominance_gap"))
                        : 0.0;
  r.robustness_gap = j.contains("robustness_gap")
                         ? number_from_json(j.at("robustness_gap"))
                         : 0.0;
  return r;
}

ExperimentReport run_experiment(const Graph& g, const ExperimentConfig& cfg) {
  if (cfg.trials == 0)
    throw std::invalid_argument("experiment: trials must be positive");
  if (cfg.mode != DynMode::kPlain && cfg.mode != DynMode::kStubbornCore)
    throw std::invalid_argument(
        "experiment: dynamics mode must be plain or stubborn-core");

  // Selected partition plus the alternative extraction for the report.
  Partition primary = cfg.core_override
                          ? Partition(g, *cfg.core_override)
                          : extract_core(g, cfg.method);
  const CoreMethod alt_method = cfg.core_override ? cfg.method
                                : cfg.method == CoreMethod::kDensest
                                    ? CoreMethod::kRichClub
                                    : CoreMethod::kDensest;
  ExperimentReport rep;
  rep.dataset = cfg.dataset;
  rep.n = g.node_count();
  rep.m = g.edge_count();
  rep.core_method = cfg.core_override ? "override"
                    : cfg.method == CoreMethod::kDensest ? "densest"
                                                         : "krich";
  rep.alt_method =
      alt_method == CoreMethod::kDensest ? "densest" : "krich";
  rep.core_size = primary.core_size();
  rep.vol_core = primary.core_volume();
  rep.vol_peri = primary.periphery_volume();
  rep.c_r = robustness(primary).value();
  rep.c_d = dominance(primary).value();
  try {
    const Partition alt = extract_core(g, alt_method);
    rep.c_r_alt = robustness(alt).value();
    rep.c_d_alt = dominance(alt).value();
  } catch (const std::exception&) {
    // The alternative extraction can legitimately fail (no extractable
    // core); the report then carries NaN for the alt metrics.
    rep.c_r_alt = rep.c_d_alt = std::numeric_limits<double>::quiet_NaN();
  }
  rep.mode = cfg.mode == DynMode::kPlain ? "plain" : "stubborn-core";
  rep.trials = cfg.trials;
  rep.max_rounds = cfg.max_rounds ? cfg.max_rounds : g.node_count();
  rep.consensus_fraction = cfg.consensus_fraction;
  rep.base_seed = cfg.base_seed;

  // Advisory theory prediction.  The theorems speak about families with
  // |C| = |P|^epsilon, so read epsilon off the actual split; delta is a
  // fixed small slack.
  {
    const double np = static_cast<double>(primary.periphery_size());
    const double eps =
        np > 1.0 ? std::log(static_cast<double>(primary.core_size())) /
                       std::log(np)
                 : 0.0;
    const auto pred =
        theory::predict_regime(rep.c_r, rep.c_d, std::max(np, 2.0), eps, 0.05);
    rep.predicted_regime = theory::regime_name(pred.regime);
    rep.dominance_gap = pred.dominance_gap;
    rep.robustness_gap = pred.robustness_gap;
  }

  const bool writing = !cfg.out_dir.empty();
  if (writing) std::filesystem::create_directories(cfg.out_dir);
  const ColorConfig init = core_blue_init(g, primary);

  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::vector<std::string> rounds_csv(writing && cfg.stats_every ? cfg.trials
                                                                 : 0);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) {
    DynamicsParams params;
    params.mode = cfg.mode;
    params.seed = cfg.base_seed + i;
    params.max_rounds = rep.max_rounds;
    params.consensus_fraction = cfg.consensus_fraction;
    RunHooks hooks;
    std::string* csv = rounds_csv.empty() ? nullptr : &rounds_csv[i];
    if (csv) {
      *csv = "round,blue_volume,red_volume,phi_min,phi_max\n";
      hooks.stats_every = cfg.stats_every;
      hooks.on_stats = [csv](const RoundStats& s) {
        *csv += std::to_string(s.round) + ',' + std::to_string(s.blue_volume) +
                ',' + std::to_string(s.red_volume) + ',' +
                fmt_double(s.phi_min) + ',' + fmt_double(s.phi_max) + '\n';
      };
    }
    outcomes[i] =
        run(g, init, params, &primary, csv ? &hooks : nullptr);
  });

  rep.fractions = classify(outcomes);
  double round_sum = 0;
  for (const TrialOutcome& o : outcomes)
    round_sum += static_cast<double>(o.rounds);
  rep.mean_rounds = round_sum / static_cast<double>(cfg.trials);

  if (writing) {
    const std::filesystem::path dir(cfg.out_dir);
    std::string trials_csv = "trial,label,rounds,final_blue_volume\n";
    for (std::uint32_t i = 0; i < cfg.trials; ++i) {
      const TrialOutcome& o = outcomes[i];
      trials_csv += std::to_string(i) + ',' + trial_label_name(o.label) + ',' +
                    std::to_string(o.rounds) + ',' +
                    std::to_string(o.final_blue_volume) + '\n';
    }
    write_file((dir / "trials.csv").string(), trials_csv);
    write_file((dir / "report.json").string(), rep.to_json());
    std::string core_txt;
    for (agent_id v : primary.core()) core_txt += g.label(v) + '\n';
    write_file((dir / "core.txt").string(), core_txt);
    for (std::size_t i = 0; i < rounds_csv.size(); ++i)
      write_file((dir / ("rounds_" + std::to_string(i) + ".csv")).string(),
                 rounds_csv[i]);
  }
  return rep;
}

ExperimentReport run_experiment_file(const std::string& path,
                                     ExperimentConfig cfg) {
  if (cfg.dataset.empty())
    cfg.dataset = std::filesystem::path(path).stem().string();
  const Graph g = load_graph(path);
  return run_experiment(g, cfg);
}

ScatterData scatter_data(const std::vector<ExperimentReport>& reports) {
  ScatterData data;
  std::uint32_t below = 0, below_meta = 0, above = 0, above_cons = 0;
  for (const ExperimentReport& r : reports) {
    ScatterRow row;
    row.dataset = r.dataset;
    row.c_d = r.c_d;
    row.frac_core = r.fractions.frac_core();
    row.frac_periphery = r.fractions.frac_periphery();
    row.frac_metastable = r.fractions.frac_metastable();
    row.mean_rounds = r.mean_rounds;
    // Dominant label; ties resolve core > periphery > metastable.
    row.dominant = "core-consensus";
    double best = row.frac_core;
    if (row.frac_periphery > best) {
      best = row.frac_periphery;
      row.dominant = "periphery-consensus";
    }
    if (row.frac_metastable > best) {
      best = row.frac_metastable;
      row.dominant = "metastable";
    }
    const auto side = [](double x, double t) {
      return x < t ? "below" : x > t ? "above" : "at";
    };
    row.side_of_c_star = side(r.c_d, theory::c_star);
    row.side_of_sigma = side(r.c_d, theory::sigma_empirical);
    if (r.c_d < theory::sigma_empirical) {
      ++below;
      below_meta += row.dominant == "metastable";
    } else if (r.c_d > theory::sigma_empirical) {
      ++above;
      above_cons += row.dominant != "metastable";
    }
    data.rows.push_back(std::move(row));
  }
  if (below)
    data.metastable_below_sigma = static_cast<double>(below_meta) / below;
  if (above)
    data.consensus_above_sigma = static_cast<double>(above_cons) / above;
  return data;
}

std::string ScatterData::to_csv() const {
  std::string out =
      "dataset,dominance,dominant_outcome,frac_core_consensus,"
      "frac_periphery_consensus,frac_metastable,mean_rounds,side_of_c_star,"
      "side_of_sigma\n";
  for (const ScatterRow& r : rows) {
    out += r.dataset + ',' + fmt_double(r.c_d) + ',' + r.dominant + ',' +
           fmt_double(r.frac_core) + ',' + fmt_double(r.frac_periphery) + ',' +
           fmt_double(r.frac_metastable) + ',' + fmt_double(r.mean_rounds) +
           ',' + r.side_of_c_star + ',' + r.side_of_sigma + '\n';
  }
  if (metastable_below_sigma)
    out += "# fraction_metastable_below_sigma," +
           fmt_double(*metastable_below_sigma) + '\n';
  if (consensus_above_sigma)
    out += "# fraction_consensus_above_sigma," +
           fmt_double(*consensus_above_sigma) + '\n';
  return out;
}

}  // namespace opdyn
