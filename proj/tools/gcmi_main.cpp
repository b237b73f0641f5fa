// Copyright 2026 The gcmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Links against the C API only.

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcmi/gcmi.h"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDegenerate = 2;

struct Failure {
  gcmi_status status;
  std::string message;
};

void Check(gcmi_status s) {
  if (s != GCMI_OK) throw Failure{s, gcmi_last_error()};
}

[[noreturn]] void Usage(const std::string& message) {
  throw Failure{GCMI_INVALID_ARGUMENT, message};
}

struct GraphDeleter {
  void operator()(gcmi_graph* g) const { gcmi_graph_destroy(g); }
};
struct LogitDeleter {
  void operator()(gcmi_logit* p) const { gcmi_logit_destroy(p); }
};
using Graph = std::unique_ptr<gcmi_graph, GraphDeleter>;
using Logit = std::unique_ptr<gcmi_logit, LogitDeleter>;

Graph LoadGraph(const std::string& edges, const std::string& attrs) {
  gcmi_graph* g = nullptr;
  Check(gcmi_graph_load(edges.c_str(), attrs.c_str(), &g));
  return Graph(g);
}

template <typename T>
std::vector<T> ParseList(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const char* s = item.c_str();
    char* end = nullptr;
    errno = 0;
    T value;
    if constexpr (std::is_floating_point_v<T>) {
      value = std::strtod(s, &end);
    } else {
      value = static_cast<T>(std::strtoull(s, &end, 10));
    }
    if (item.empty() || *end != '\0' || errno != 0) {
      Usage(std::string("bad value `") + item + "` in " + what);
    }
    out.push_back(value);
  }
  if (out.empty()) Usage(std::string(what) + " is empty");
  return out;
}

std::string JoinList(const std::vector<double>& xs) {
  std::string out;
  for (double x : xs) {
    if (!out.empty()) out += ',';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    out += buf;
  }
  return out;
}

json Number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// State shared by every subcommand run.
struct Run {
  std::string command;
  fs::path out;
  json summary = json::object();
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;

  std::string Path(const std::string& name) {
    outputs.push_back(name);
    return (out / name).string();
  }
  void Warn(const std::string& message) {
    std::cerr << "gcmi: warning: " << message << "\n";
    warnings.push_back(message);
  }
};

// Flag values shared across subcommands.
struct Options {
  std::string out;
  std::string edges, attrs;
  double alpha = 1.3;
  std::uint64_t kmax_cutoff = 0;
  bool normalized = false;

  gcmi_sbm_config sbm{};
  gcmi_dmpa_config dmpa{};
  bool swap_pa_degrees = false;  // CLI11 flags bind to bool, copied into dmpa
  bool reject_whole_event = false;
  gcmi_spsa_config spsa{};
  std::string direction = "minimize";
  std::string objective_mode = "graph_exact";
  std::string gain_schedule = "constant";

  std::string alphas;
  std::uint32_t replicates = 200;
  bool shuffle_attributes = false;
  std::string p_f_values = "0.1,0.2,0.3,0.4,0.5";
  std::string rho_values = "0.05,0.15,0.25,0.35,0.45,0.55,0.65,0.75,0.85,0.95";

  std::string pmf = "uniform";
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  std::string edge_counts = "10,100,1000";
  std::uint32_t trials = 20;
  bool uniform_both_arms = false;

  std::string snapshots;
  std::string manifest;

  Options() {
    gcmi_sbm_config_default(&sbm);
    gcmi_dmpa_config_default(&dmpa);
    gcmi_spsa_config_default(&spsa);
    std::vector<double> grid;
    for (int i = 0; i <= 14; ++i) grid.push_back(0.6 + 0.1 * i);
    alphas = JoinList(grid);
  }
};

void ResolveSpsa(Options& o) {
  if (o.direction == "minimize") {
    o.spsa.direction = GCMI_MINIMIZE;
  } else if (o.direction == "maximize") {
    o.spsa.direction = GCMI_MAXIMIZE;
  } else {
    Usage("--direction must be minimize or maximize");
  }
  if (o.objective_mode == "graph_exact") {
    o.spsa.mode = GCMI_GRAPH_EXACT;
  } else if (o.objective_mode == "jdam_move") {
    o.spsa.mode = GCMI_JDAM_MOVE;
  } else {
    Usage("--objective-mode must be graph_exact or jdam_move");
  }
  if (o.gain_schedule == "constant") {
    o.spsa.schedule = GCMI_GAIN_CONSTANT;
  } else if (o.gain_schedule == "decaying") {
    o.spsa.schedule = GCMI_GAIN_DECAYING;
  } else {
    Usage("--gain-schedule must be constant or decaying");
  }
}

// ----- Subcommand bodies -----------------------------------------------------

void DoMeasure(Options& o, Run& run) {
  const auto g = LoadGraph(o.edges, o.attrs);
  gcmi_measure_report r{};
  Check(gcmi_measure(g.get(), o.alpha, o.kmax_cutoff, &r));
  json j;
  j["alpha"] = r.alpha;
  j["shannon_H"] = r.shannon_h;
  j["degree_mi"] = r.degree_mi;
  j["joint_mi"] = r.joint_mi;
  j["delta_i"] = r.delta_i;
  j["gamma_deg"] = r.gamma_deg_defined ? json(r.gamma_deg) : json(nullptr);
  j["gamma_att"] = r.gamma_att_defined ? json(r.gamma_att) : json(nullptr);
  std::cout << j.dump() << "\n";
  if (!r.gamma_deg_defined) run.Warn("degree assortativity is undefined");
  if (!r.gamma_att_defined) run.Warn("attribute assortativity is undefined");
  run.summary = j;
  if (!run.out.empty()) {
    std::ofstream csv(run.Path("measure.csv"), std::ios::binary);
    csv << "alpha,shannon_H,degree_mi,joint_mi,delta_i,gamma_deg,gamma_att\n";
    auto cell = [](const json& v) {
      if (v.is_null()) return std::string("NA");
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
      return std::string(buf);
    };
    csv << cell(j["alpha"]) << ',' << cell(j["shannon_H"]) << ','
        << cell(j["degree_mi"]) << ',' << cell(j["joint_mi"]) << ','
        << cell(j["delta_i"]) << ',' << cell(j["gamma_deg"]) << ','
        << cell(j["gamma_att"]) << "\n";
    if (!csv) Usage("cannot write measure.csv");
  }
}

void SaveGraph(const gcmi_graph* g, Run& run) {
  const auto edges = run.Path("graph.edges");
  const auto attrs = run.Path("graph.attrs");
  Check(gcmi_graph_save(g, edges.c_str(), attrs.c_str()));
  std::uint64_t n = 0, m = 0;
  Check(gcmi_graph_num_nodes(g, &n));
  Check(gcmi_graph_num_edges(g, &m));
  run.summary["n_nodes"] = n;
  run.summary["n_edges"] = m;
}

void DoGenerateSbm(Options& o, Run& run) {
  o.sbm.seed = o.seed;
  gcmi_graph* g = nullptr;
  Check(gcmi_generate_sbm(&o.sbm, &g));
  SaveGraph(Graph(g).get(), run);
}

void DoGenerateDmpa(Options& o, Run& run) {
  o.dmpa.seed = o.seed;
  o.dmpa.swap_pa_degrees = o.swap_pa_degrees;
  o.dmpa.reject_whole_event = o.reject_whole_event;
  gcmi_graph* g = nullptr;
  Check(gcmi_generate_dmpa(&o.dmpa, &g));
  SaveGraph(Graph(g).get(), run);
}

void DoJdamExport(Options& o, Run& run) {
  const auto g = LoadGraph(o.edges, o.attrs);
  const auto path = run.Path(o.normalized ? "jdam_normalized.csv" : "jdam.csv");
  Check(gcmi_jdam_export_csv(g.get(), o.normalized, o.kmax_cutoff, path.c_str()));
}

void DoSweepAlpha(Options& o, Run& run) {
  const auto alphas = ParseList<double>(o.alphas, "--alphas");
  gcmi_sweep_alpha_config cfg{};
  cfg.sbm = o.sbm;
  cfg.alphas = alphas.data();
  cfg.num_alphas = alphas.size();
  cfg.replicates = o.replicates;
  cfg.master_seed = o.seed;
  cfg.shuffle_attributes = o.shuffle_attributes;
  gcmi_sweep_alpha_summary s{};
  Check(gcmi_sweep_alpha(&cfg, run.out.string().c_str(), &s));
  run.outputs = {"sweep_alpha.csv", "sweep_alpha_replicates.csv"};
  run.summary["argmax_alpha"] = s.argmax_alpha;
  run.summary["max_r"] = Number(s.max_r);
  run.summary["n_skipped_degenerate"] = s.n_skipped_degenerate;
  if (s.n_skipped_degenerate > 0) {
    run.Warn(std::to_string(s.n_skipped_degenerate) +
             " replicates skipped: attribute assortativity undefined");
  }
}

void DoSweepDmpa(Options& o, Run& run) {
  const auto p_f = ParseList<double>(o.p_f_values, "--p-f-values");
  const auto rho = ParseList<double>(o.rho_values, "--rho-values");
  gcmi_sweep_dmpa_config cfg{};
  cfg.p_f_values = p_f.data();
  cfg.num_p_f = p_f.size();
  cfg.rho_values = rho.data();
  cfg.num_rho = rho.size();
  cfg.base = o.dmpa;
  cfg.base.swap_pa_degrees = o.swap_pa_degrees;
  cfg.base.reject_whole_event = o.reject_whole_event;
  cfg.alpha = o.alpha;
  cfg.master_seed = o.seed;
  gcmi_sweep_dmpa_summary s{};
  Check(gcmi_sweep_dmpa(&cfg, run.out.string().c_str(), &s));
  run.outputs = {"sweep_dmpa.csv", "sweep_dmpa_correlation.csv"};
  run.summary["pooled_r"] = Number(s.pooled_r);
  run.summary["num_points"] = s.num_points;
  if (!std::isfinite(s.pooled_r)) {
    run.warnings.push_back("pooled correlation undefined (constant series)");
  }
}

void DoOptimize(Options& o, Run& run) {
  ResolveSpsa(o);
  o.spsa.seed = o.seed;
  const auto g = LoadGraph(o.edges, o.attrs);
  gcmi_logit* p = nullptr;
  Check(gcmi_optimize(g.get(), o.alpha, &o.spsa, &p));
  const Logit logit(p);
  Check(gcmi_logit_write_csv(logit.get(), run.Path("theta.csv").c_str()));
  std::uint64_t classes = 0;
  Check(gcmi_logit_num_classes(logit.get(), &classes));
  run.summary["num_classes"] = classes;
}

void DoAddEdges(Options& o, Run& run) {
  const auto g = LoadGraph(o.edges, o.attrs);
  gcmi_logit* p = nullptr;
  if (o.pmf == "uniform") {
    Check(gcmi_logit_uniform(g.get(), &p));
  } else {
    Check(gcmi_logit_read_csv(o.pmf.c_str(), &p));
  }
  const Logit logit(p);
  gcmi_graph* grown = nullptr;
  Check(gcmi_add_edges(g.get(), logit.get(), o.count, o.seed, o.alpha,
                       run.Path("trace.csv").c_str(), &grown));
  SaveGraph(Graph(grown).get(), run);
}

void DoIntervention(Options& o, Run& run) {
  ResolveSpsa(o);
  Graph g;
  if (o.edges.empty()) {
    // Without an input graph the base is an SBM drawn from the master seed.
    o.sbm.seed = o.seed;
    gcmi_graph* raw = nullptr;
    Check(gcmi_generate_sbm(&o.sbm, &raw));
    g.reset(raw);
  } else {
    g = LoadGraph(o.edges, o.attrs);
  }
  const auto counts = ParseList<std::uint64_t>(o.edge_counts, "--edge-counts");
  gcmi_intervention_config cfg{};
  cfg.alpha = o.alpha;
  cfg.spsa = o.spsa;
  cfg.edge_counts = counts.data();
  cfg.num_edge_counts = counts.size();
  cfg.trials = o.trials;
  cfg.master_seed = o.seed;
  cfg.uniform_both_arms = o.uniform_both_arms;
  gcmi_intervention_summary s{};
  Check(gcmi_intervention(g.get(), &cfg, run.out.string().c_str(), &s));
  run.outputs = {"intervention.csv", "intervention_trials.csv", "theta.csv"};
  run.summary["d_gamma_att_optimized"] = Number(s.d_gamma_att_optimized);
  run.summary["d_gamma_att_uniform"] = Number(s.d_gamma_att_uniform);
  run.summary["d_gamma_deg_optimized"] = Number(s.d_gamma_deg_optimized);
  run.summary["d_gamma_deg_uniform"] = Number(s.d_gamma_deg_uniform);
  if (s.any_undefined) run.Warn("some trials had undefined assortativity");
}

void DoTemporal(Options& o, Run& run) {
  gcmi_temporal_summary s{};
  Check(gcmi_temporal(o.snapshots.c_str(), o.alpha, run.out.string().c_str(), &s));
  run.outputs = {"temporal.csv", "temporal_trend.csv"};
  run.summary["num_snapshots"] = s.num_snapshots;
  run.summary["kendall_tau"] = s.tau_defined ? json(s.kendall_tau) : json(nullptr);
  if (!s.tau_defined) run.Warn("Kendall tau is undefined for this series");
  if (s.any_undefined) run.Warn("some snapshots had undefined assortativity");
}

// ----- Manifest --------------------------------------------------------------

const std::vector<std::string> kPathOptions{"edges", "attrs", "pmf", "snapshots"};

// Records every option of `sub` by long name, input paths made absolute.
json RecordConfig(const CLI::App* sub) {
  json config = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help" || name == "out") continue;
    if (opt->get_items_expected_max() == 0) {
      config[name] = opt->count() > 0;
      continue;
    }
    std::string value = opt->count() > 0 ? opt->results().front()
                                         : opt->get_default_str();
    if (value.empty()) continue;
    const bool is_path =
        std::find(kPathOptions.begin(), kPathOptions.end(), name) != kPathOptions.end();
    if (is_path && !(name == "pmf" && value == "uniform")) {
      value = fs::absolute(value).lexically_normal().string();
    }
    config[name] = value;
  }
  return config;
}

void WriteManifest(const Run& run, const json& config, const std::string& status) {
  json m;
  m["tool"] = "gcmi";
  m["version"] = gcmi_version();
  m["command"] = run.command;
  m["config"] = config;
  m["status"] = status;
  m["outputs"] = run.outputs;
  m["warnings"] = run.warnings;
  m["summary"] = run.summary;
  std::ofstream out(run.out / "manifest.json", std::ios::binary);
  out << m.dump(2) << "\n";
}

int Dispatch(const std::vector<std::string>& args);

// Rebuilds the argument list recorded in a manifest.
std::vector<std::string> ReplayArgs(const std::string& manifest_path,
                                    const std::string& out) {
  std::ifstream in(manifest_path);
  if (!in) Usage("cannot open " + manifest_path);
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception& e) {
    throw Failure{GCMI_PARSE_ERROR, manifest_path + ": " + e.what()};
  }
  std::vector<std::string> args{"gcmi"};
  std::stringstream words(m.at("command").get<std::string>());
  for (std::string w; words >> w;) args.push_back(w);
  for (const auto& [key, value] : m.at("config").items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else {
      args.push_back("--" + key);
      args.push_back(value.get<std::string>());
    }
  }
  args.push_back("--out");
  args.push_back(out);
  return args;
}

// ----- Application -----------------------------------------------------------

void AddGraphInput(CLI::App* sub, Options& o, bool required = true) {
  auto* e = sub->add_option("--edges", o.edges, "Edge list file (u v [w])");
  auto* a = sub->add_option("--attrs", o.attrs, "Attribute file (node +1|-1)");
  if (required) {
    e->required();
    a->required();
  } else {
    e->needs(a);
    a->needs(e);
  }
}

void AddSbmFlags(CLI::App* sub, Options& o) {
  sub->add_option("--n1", o.sbm.n1, "Nodes of type +1");
  sub->add_option("--n2", o.sbm.n2, "Nodes of type -1");
  sub->add_option("--p-in", o.sbm.p_in, "Within-block edge probability");
  sub->add_option("--p-out", o.sbm.p_out, "Between-block edge probability");
  sub->add_option("--max-retries", o.sbm.max_retries,
                  "Redraws allowed for disconnected samples");
}

void AddDmpaFlags(CLI::App* sub, Options& o, bool grid) {
  if (!grid) {
    sub->add_option("--p-f", o.dmpa.p_f, "Probability a new node has type -1");
    sub->add_option("--rho-att", o.dmpa.rho_att, "Same-type acceptance probability");
  }
  sub->add_option("--p-event", o.dmpa.p_event, "Probability of event (1)");
  sub->add_option("--q-event", o.dmpa.q_event, "Probability of event (2)");
  sub->add_option("--delta", o.dmpa.delta, "Preferential attachment offset");
  sub->add_option("--target-edges", o.dmpa.target_edges, "Edges to grow");
  sub->add_flag("--swap-pa-degrees", o.swap_pa_degrees,
                "Swap the degrees used by events (1) and (2)");
  sub->add_flag("--reject-whole-event", o.reject_whole_event,
                "A rejected newcomer proposal discards the step");
}

void AddSpsaFlags(CLI::App* sub, Options& o) {
  sub->add_option("--iterations", o.spsa.iterations, "SPSA iterations");
  sub->add_option("--delta", o.spsa.delta, "Perturbation size");
  sub->add_option("--epsilon", o.spsa.epsilon, "Step size");
  sub->add_option("--direction", o.direction, "minimize or maximize");
  sub->add_option("--samples-per-eval", o.spsa.samples_per_eval,
                  "Objective draws averaged per evaluation");
  sub->add_option("--objective-mode", o.objective_mode, "graph_exact or jdam_move");
  sub->add_option("--gain-schedule", o.gain_schedule, "constant or decaying");
}

int Dispatch(const std::vector<std::string>& args) {
  Options o;
  CLI::App app("Glass-ceiling mutual information for attributed networks", "gcmi");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gcmi_version()));

  using Body = void (*)(Options&, Run&);
  std::vector<std::tuple<CLI::App*, std::string, Body>> commands;
  auto add = [&](CLI::App* sub, std::string name, Body body, bool out_required) {
    auto* opt = sub->add_option("--out", o.out, "Output directory");
    if (out_required) opt->required();
    commands.emplace_back(sub, std::move(name), body);
  };
  auto alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "Renyi order");
  };
  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed")->required();
  };

  auto* measure = app.add_subcommand("measure", "Print information measures as JSON");
  AddGraphInput(measure, o);
  alpha(measure);
  measure->add_option("--kmax-cutoff", o.kmax_cutoff, "Clamp degrees above K (0 = off)");
  add(measure, "measure", DoMeasure, false);

  auto* generate = app.add_subcommand("generate", "Generate a synthetic graph");
  generate->require_subcommand(1);
  auto* sbm = generate->add_subcommand("sbm", "Two-block stochastic block model");
  AddSbmFlags(sbm, o);
  seed(sbm);
  add(sbm, "generate sbm", DoGenerateSbm, true);
  auto* dmpa = generate->add_subcommand("dmpa", "Directed mixed preferential attachment");
  AddDmpaFlags(dmpa, o, false);
  seed(dmpa);
  add(dmpa, "generate dmpa", DoGenerateDmpa, true);

  auto* jdam = app.add_subcommand("jdam", "Joint degree and attribute matrix");
  jdam->require_subcommand(1);
  auto* jdam_export = jdam->add_subcommand("export", "Write the JDAM as CSV");
  AddGraphInput(jdam_export, o);
  jdam_export->add_flag("--normalized", o.normalized, "Write probabilities");
  jdam_export->add_option("--kmax-cutoff", o.kmax_cutoff, "Clamp degrees above K (0 = off)");
  add(jdam_export, "jdam export", DoJdamExport, true);

  auto* sweep_alpha = app.add_subcommand("sweep-alpha", "Renyi order sweep on SBM replicates");
  AddSbmFlags(sweep_alpha, o);
  sweep_alpha->add_option("--alphas", o.alphas, "Comma-separated Renyi orders");
  sweep_alpha->add_option("--replicates", o.replicates, "SBM replicates");
  sweep_alpha->add_flag("--shuffle-attributes", o.shuffle_attributes,
                        "Shuffle attributes independently of structure");
  seed(sweep_alpha);
  add(sweep_alpha, "sweep-alpha", DoSweepAlpha, true);

  auto* sweep_dmpa = app.add_subcommand("sweep-dmpa", "DMPA homophily grid");
  sweep_dmpa->add_option("--p-f-values", o.p_f_values, "Comma-separated p_f values");
  sweep_dmpa->add_option("--rho-values", o.rho_values, "Comma-separated rho_att values");
  AddDmpaFlags(sweep_dmpa, o, true);
  alpha(sweep_dmpa);
  seed(sweep_dmpa);
  add(sweep_dmpa, "sweep-dmpa", DoSweepDmpa, true);

  auto* optimize = app.add_subcommand("optimize", "Train the edge-class logit with SPSA");
  AddGraphInput(optimize, o);
  alpha(optimize);
  AddSpsaFlags(optimize, o);
  seed(optimize);
  add(optimize, "optimize", DoOptimize, true);

  auto* add_edges = app.add_subcommand("add-edges", "Add edges drawn from a class pmf");
  AddGraphInput(add_edges, o);
  add_edges->add_option("--pmf", o.pmf, "theta.csv from optimize, or `uniform`");
  add_edges->add_option("--count", o.count, "Edges to add")->required();
  alpha(add_edges);
  seed(add_edges);
  add(add_edges, "add-edges", DoAddEdges, true);

  auto* intervention = app.add_subcommand(
      "intervention", "Optimized versus uniform edge addition, paired trials");
  AddGraphInput(intervention, o, false);
  AddSbmFlags(intervention, o);
  alpha(intervention);
  AddSpsaFlags(intervention, o);
  intervention->add_option("--edge-counts", o.edge_counts, "Comma-separated milestones");
  intervention->add_option("--trials", o.trials, "Paired trials");
  intervention->add_flag("--uniform-both-arms", o.uniform_both_arms,
                         "Use the uniform pmf in both arms");
  seed(intervention);
  add(intervention, "intervention", DoIntervention, true);

  auto* temporal = app.add_subcommand("temporal", "Measure a series of snapshots");
  temporal->add_option("--snapshots", o.snapshots,
                       "Directory of <tag>.edges / <tag>.attrs pairs")->required();
  alpha(temporal);
  add(temporal, "temporal", DoTemporal, true);

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", o.manifest, "manifest.json")->required();
  replay->add_option("--out", o.out, "Output directory")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (replay->parsed()) return Dispatch(ReplayArgs(o.manifest, o.out));

  for (auto& [sub, name, body] : commands) {
    if (!sub->parsed()) continue;
    Run run;
    run.command = name;
    const json config = RecordConfig(sub);
    if (!o.out.empty()) {
      run.out = o.out;
      fs::create_directories(run.out);
    }
    std::string status = "ok";
    int code = kExitOk;
    try {
      body(o, run);
      if (!run.warnings.empty()) {
        status = "degenerate";
        code = kExitDegenerate;
      }
    } catch (const Failure& f) {
      const bool degenerate = gcmi_status_is_degenerate(f.status);
      std::cerr << "gcmi: " << (degenerate ? "warning: " : "error: ") << f.message
                << "\n";
      run.warnings.push_back(f.message);
      status = degenerate ? "degenerate" : "error";
      code = degenerate ? kExitDegenerate : kExitError;
    }
    if (!run.out.empty()) WriteManifest(run, config, status);
    return code;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Dispatch(std::vector<std::string>(argv, argv + argc));
  } catch (const Failure& f) {
    std::cerr << "gcmi: error: " << f.message << "\n";
  } catch (const std::exception& e) {
    std::cerr << "gcmi: error: " << e.what() << "\n";
  }
  return kExitError;
}
