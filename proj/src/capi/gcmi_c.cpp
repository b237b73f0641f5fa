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


#include "gcmi/gcmi.h"

#include <cmath>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "assortativity.hpp"
#include "attributed_graph.hpp"
#include "csv.hpp"
#include "distributions.hpp"
#include "error.hpp"
#include "experiments.hpp"
#include "generators.hpp"
#include "info_measures.hpp"
#include "spsa_optimizer.hpp"

struct gcmi_graph {
  gcmi::AttributedMultigraph g;
};

struct gcmi_logit {
  gcmi::GroupSpace space;
  std::vector<double> pmf;
  std::optional<gcmi::OptimizeResult> trained;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
gcmi_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return GCMI_OK;
  } catch (const gcmi::Error& e) {
    last_error = e.what();
    return static_cast<gcmi_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GCMI_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GCMI_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) gcmi::Fail(gcmi::ErrorCode::kInvalidArgument, what);
}

gcmi::DistributionOptions Cap(uint64_t degree_cap) {
  gcmi::DistributionOptions opts;
  if (degree_cap > 0) opts.degree_cap = degree_cap;
  return opts;
}

gcmi::SbmConfig ToCore(const gcmi_sbm_config& c) {
  return {c.n1, c.n2, c.p_in, c.p_out, c.seed, c.max_retries};
}

gcmi::DmpaConfig ToCore(const gcmi_dmpa_config& c) {
  gcmi::DmpaConfig d;
  d.p_f = c.p_f;
  d.rho_att = c.rho_att;
  d.p_event = c.p_event;
  d.q_event = c.q_event;
  d.delta = c.delta;
  d.target_edges = c.target_edges;
  d.seed = c.seed;
  d.swap_pa_degrees = c.swap_pa_degrees != 0;
  d.rejection = c.reject_whole_event ? gcmi::DmpaConfig::Rejection::kEvent
                                     : gcmi::DmpaConfig::Rejection::kPartner;
  return d;
}

gcmi::SpsaConfig ToCore(const gcmi_spsa_config& c) {
  gcmi::SpsaConfig s;
  s.delta = c.delta;
  s.epsilon = c.epsilon;
  s.iterations = c.iterations;
  s.direction = c.direction == GCMI_MAXIMIZE ? gcmi::Direction::kMaximize
                                             : gcmi::Direction::kMinimize;
  s.seed = c.seed;
  s.samples_per_eval = c.samples_per_eval;
  s.mode = c.mode == GCMI_JDAM_MOVE ? gcmi::ObjectiveMode::kJdamMove
                                     : gcmi::ObjectiveMode::kGraphExact;
  s.schedule = c.schedule == GCMI_GAIN_DECAYING ? gcmi::GainSchedule::kDecaying
                                                : gcmi::GainSchedule::kConstant;
  return s;
}

template <typename T>
std::vector<T> ToVector(const T* data, size_t n) {
  Require(n == 0 || data != nullptr, "null array with nonzero length");
  return std::vector<T>(data, data + n);
}

}  // namespace

extern "C" {

const char* gcmi_status_name(gcmi_status status) {
  return gcmi::ErrorCodeName(static_cast<gcmi::ErrorCode>(status));
}

const char* gcmi_last_error(void) { return last_error.c_str(); }

const char* gcmi_version(void) { return GCMI_VERSION; }

int gcmi_status_is_degenerate(gcmi_status status) {
  switch (status) {
    case GCMI_EMPTY_GRAPH:
    case GCMI_DEGENERATE_DISTRIBUTION:
    case GCMI_EMPTY_JDAM:
    case GCMI_DEGENERATE_SERIES:
    case GCMI_TOO_FEW_VALID_REPLICATES:
      return 1;
    default:
      return 0;
  }
}

// ----- Graphs ----------------------------------------------------------------

gcmi_status gcmi_graph_create(gcmi_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new gcmi_graph{};
  });
}

void gcmi_graph_destroy(gcmi_graph* g) { delete g; }

gcmi_status gcmi_graph_add_node(gcmi_graph* g, int attribute, uint32_t* id_out) {
  return Guard([&] {
    Require(g != nullptr, "null graph");
    Require(attribute == 1 || attribute == -1, "attribute must be +1 or -1");
    const auto id = g->g.AddNode(attribute == 1 ? gcmi::Attribute::kPlus
                                                : gcmi::Attribute::kMinus);
    if (id_out) *id_out = id;
  });
}

gcmi_status gcmi_graph_add_edge(gcmi_graph* g, uint32_t u, uint32_t v,
                                uint64_t count) {
  return Guard([&] {
    Require(g != nullptr, "null graph");
    Require(count > 0, "edge count must be positive");
    g->g.AddEdge(u, v, count);
  });
}

gcmi_status gcmi_graph_num_nodes(const gcmi_graph* g, uint64_t* out) {
  return Guard([&] {
    Require(g && out, "null argument");
    *out = g->g.num_nodes();
  });
}

gcmi_status gcmi_graph_num_edges(const gcmi_graph* g, uint64_t* out) {
  return Guard([&] {
    Require(g && out, "null argument");
    *out = g->g.num_edges();
  });
}

gcmi_status gcmi_graph_degree(const gcmi_graph* g, uint32_t v, uint64_t* out) {
  return Guard([&] {
    Require(g && out, "null argument");
    *out = g->g.Degree(v);
  });
}

gcmi_status gcmi_graph_load(const char* edge_path, const char* attribute_path,
                            gcmi_graph** out) {
  return Guard([&] {
    Require(edge_path && attribute_path && out, "null argument");
    *out = new gcmi_graph{gcmi::LoadGraph(edge_path, attribute_path)};
  });
}

gcmi_status gcmi_graph_save(const gcmi_graph* g, const char* edge_path,
                            const char* attribute_path) {
  return Guard([&] {
    Require(g && edge_path && attribute_path, "null argument");
    gcmi::SaveGraph(g->g, edge_path, attribute_path);
  });
}

// ----- Measures --------------------------------------------------------------

gcmi_status gcmi_measure(const gcmi_graph* g, double alpha, uint64_t degree_cap,
                         gcmi_measure_report* out) {
  return Guard([&] {
    Require(g && out, "null argument");
    const auto m = gcmi::MeasureGraph(g->g, gcmi::RenyiOrder(alpha), Cap(degree_cap));
    gcmi_measure_report r{};
    r.alpha = m.alpha;
    r.shannon_h = m.shannon_entropy;
    r.degree_mi = m.degree_mi;
    r.joint_mi = m.joint_mi;
    r.delta_i = m.delta_i;
    r.gamma_deg_defined = m.gamma_deg.has_value();
    r.gamma_deg = m.gamma_deg.value_or(NAN);
    r.gamma_att_defined = m.gamma_att.has_value();
    r.gamma_att = m.gamma_att.value_or(NAN);
    *out = r;
  });
}

gcmi_status gcmi_jdam_export_csv(const gcmi_graph* g, int normalized,
                                 uint64_t degree_cap, const char* path) {
  return Guard([&] {
    Require(g && path, "null argument");
    const auto jdam = gcmi::BuildJdam(g->g, Cap(degree_cap));
    std::optional<gcmi::NormalizedJdam> nj;
    if (normalized) nj = gcmi::NormalizeJdam(jdam);
    const std::size_t dim = jdam.counts.dim();
    gcmi::CsvWriter csv(path);
    std::vector<std::string> row{""};
    for (std::size_t b = 0; b < dim; ++b) row.push_back(gcmi::GroupLabel(b));
    csv.Row(row);
    for (std::size_t a = 0; a < dim; ++a) {
      row.assign(1, gcmi::GroupLabel(a));
      for (std::size_t b = 0; b < dim; ++b) {
        row.push_back(nj ? gcmi::FormatReal(nj->p4.at(a, b))
                         : std::to_string(jdam.counts.at(a, b)));
      }
      csv.Row(row);
    }
  });
}

// ----- Generators ------------------------------------------------------------

void gcmi_sbm_config_default(gcmi_sbm_config* cfg) {
  if (!cfg) return;
  const gcmi::SbmConfig d;
  *cfg = {d.n1, d.n2, d.p_in, d.p_out, d.seed, d.max_retries};
}

void gcmi_dmpa_config_default(gcmi_dmpa_config* cfg) {
  if (!cfg) return;
  const gcmi::DmpaConfig d;
  *cfg = {d.p_f,   d.rho_att,        d.p_event, d.q_event,
          d.delta, d.target_edges,   d.seed,    d.swap_pa_degrees ? 1 : 0,
          d.rejection == gcmi::DmpaConfig::Rejection::kEvent ? 1 : 0};
}

gcmi_status gcmi_generate_sbm(const gcmi_sbm_config* cfg, gcmi_graph** out) {
  return Guard([&] {
    Require(cfg && out, "null argument");
    *out = new gcmi_graph{gcmi::GenerateSbm(ToCore(*cfg))};
  });
}

gcmi_status gcmi_generate_dmpa(const gcmi_dmpa_config* cfg, gcmi_graph** out) {
  return Guard([&] {
    Require(cfg && out, "null argument");
    *out = new gcmi_graph{gcmi::ProjectUndirected(gcmi::GenerateDmpa(ToCore(*cfg)))};
  });
}

// ----- Edge-class distributions ----------------------------------------------

void gcmi_spsa_config_default(gcmi_spsa_config* cfg) {
  if (!cfg) return;
  const gcmi::SpsaConfig d;
  *cfg = {d.delta, d.epsilon, d.iterations, GCMI_MINIMIZE, d.seed,
          d.samples_per_eval, GCMI_GRAPH_EXACT, GCMI_GAIN_CONSTANT};
}

void gcmi_logit_destroy(gcmi_logit* p) { delete p; }

gcmi_status gcmi_optimize(const gcmi_graph* g, double alpha,
                          const gcmi_spsa_config* cfg, gcmi_logit** out) {
  return Guard([&] {
    Require(g && cfg && out, "null argument");
    auto result = gcmi::Optimize(g->g, gcmi::RenyiOrder(alpha), ToCore(*cfg));
    auto pmf = result.Pmf();
    *out = new gcmi_logit{result.space, std::move(pmf), std::move(result)};
  });
}

gcmi_status gcmi_logit_uniform(const gcmi_graph* g, gcmi_logit** out) {
  return Guard([&] {
    Require(g && out, "null argument");
    const auto space = gcmi::GroupSpace::ForGraph(g->g);
    const std::size_t n = space.num_classes();
    *out = new gcmi_logit{space, std::vector<double>(n, 1.0 / static_cast<double>(n)),
                          std::nullopt};
  });
}

gcmi_status gcmi_logit_read_csv(const char* path, gcmi_logit** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    auto pmf = gcmi::ReadPmfCsv(path);
    const auto space = gcmi::GroupSpace::FromClassCount(pmf.size());
    *out = new gcmi_logit{space, std::move(pmf), std::nullopt};
  });
}

gcmi_status gcmi_logit_write_csv(const gcmi_logit* p, const char* path) {
  return Guard([&] {
    Require(p && path, "null argument");
    if (p->trained) {
      gcmi::WriteLogitCsv(path, *p->trained);
      return;
    }
    // Untrained distributions are written with theta = log(prob).
    gcmi::OptimizeResult r;
    r.space = p->space;
    r.mask.assign(p->pmf.size(), 0);
    r.params.theta.resize(p->pmf.size());
    for (std::size_t i = 0; i < p->pmf.size(); ++i) {
      r.mask[i] = p->pmf[i] > 0.0;
      r.params.theta[i] = std::log(p->pmf[i]);
    }
    gcmi::WriteLogitCsv(path, r);
  });
}

gcmi_status gcmi_logit_num_classes(const gcmi_logit* p, uint64_t* out) {
  return Guard([&] {
    Require(p && out, "null argument");
    *out = p->pmf.size();
  });
}

gcmi_status gcmi_add_edges(const gcmi_graph* g, const gcmi_logit* p,
                           uint64_t count, uint64_t seed, double alpha,
                           const char* trace_path, gcmi_graph** out) {
  return Guard([&] {
    Require(g && p && trace_path, "null argument");
    gcmi::Rng rng(seed);
    const auto milestones = gcmi::DefaultMilestones(count);
    auto result = gcmi::ApplyEdges(g->g, p->pmf, p->space, count, rng,
                                   gcmi::RenyiOrder(alpha), milestones);
    if (result.trace.empty()) {
      // No edges requested: the trace still reports the starting point.
      const auto m = gcmi::MeasureGraph(g->g, gcmi::RenyiOrder(alpha));
      result.trace.push_back({0, m.gamma_att, m.gamma_deg, m.delta_i});
    }
    gcmi::WriteTraceCsv(trace_path, result.trace);
    if (out) *out = new gcmi_graph{std::move(result.graph)};
  });
}

// ----- Experiments -----------------------------------------------------------

gcmi_status gcmi_sweep_alpha(const gcmi_sweep_alpha_config* cfg,
                             const char* out_dir, gcmi_sweep_alpha_summary* out) {
  return Guard([&] {
    Require(cfg && out_dir && out, "null argument");
    gcmi::AlphaSweepConfig c;
    c.sbm = ToCore(cfg->sbm);
    c.alphas = ToVector(cfg->alphas, cfg->num_alphas);
    c.replicates = cfg->replicates;
    c.master_seed = cfg->master_seed;
    c.shuffle_attributes = cfg->shuffle_attributes != 0;
    const auto r = gcmi::SweepAlpha(c);
    gcmi::WriteAlphaSweepCsv(out_dir, r);
    gcmi_sweep_alpha_summary s{};
    s.argmax_alpha = r.ArgmaxAlpha();
    s.max_r = -INFINITY;
    for (const auto& rec : r.records) {
      s.max_r = std::max(s.max_r, rec.r);
      s.n_skipped_degenerate = std::max(s.n_skipped_degenerate, rec.n_skipped_degenerate);
    }
    *out = s;
  });
}

gcmi_status gcmi_sweep_dmpa(const gcmi_sweep_dmpa_config* cfg,
                            const char* out_dir, gcmi_sweep_dmpa_summary* out) {
  return Guard([&] {
    Require(cfg && out_dir && out, "null argument");
    gcmi::DmpaSweepConfig c;
    c.p_f_values = ToVector(cfg->p_f_values, cfg->num_p_f);
    c.rho_values = ToVector(cfg->rho_values, cfg->num_rho);
    c.base = ToCore(cfg->base);
    c.alpha = cfg->alpha;
    c.master_seed = cfg->master_seed;
    const auto r = gcmi::SweepDmpa(c);
    gcmi::WriteDmpaSweepCsv(out_dir, r);
    *out = {r.pooled_r, r.grid.size()};
  });
}

gcmi_status gcmi_intervention(const gcmi_graph* g,
                              const gcmi_intervention_config* cfg,
                              const char* out_dir,
                              gcmi_intervention_summary* out) {
  return Guard([&] {
    Require(g && cfg && out_dir && out, "null argument");
    gcmi::InterventionConfig c;
    c.alpha = cfg->alpha;
    c.spsa = ToCore(cfg->spsa);
    c.edge_counts = ToVector(cfg->edge_counts, cfg->num_edge_counts);
    c.trials = cfg->trials;
    c.master_seed = cfg->master_seed;
    c.uniform_both_arms = cfg->uniform_both_arms != 0;
    const auto r = gcmi::RunIntervention(g->g, c);
    gcmi::WriteInterventionCsv(out_dir, r);
    const auto& first = r.milestones.front();
    const auto& last = r.milestones.back();
    gcmi_intervention_summary s{};
    s.d_gamma_att_optimized = last.gamma_att_optimized.mean - first.gamma_att_optimized.mean;
    s.d_gamma_att_uniform = last.gamma_att_uniform.mean - first.gamma_att_uniform.mean;
    s.d_gamma_deg_optimized = last.gamma_deg_optimized.mean - first.gamma_deg_optimized.mean;
    s.d_gamma_deg_uniform = last.gamma_deg_uniform.mean - first.gamma_deg_uniform.mean;
    for (const auto& m : r.milestones) {
      for (const auto* a : {&m.gamma_att_optimized, &m.gamma_att_uniform,
                            &m.gamma_deg_optimized, &m.gamma_deg_uniform}) {
        if (a->n != c.trials) s.any_undefined = 1;
      }
    }
    *out = s;
  });
}

gcmi_status gcmi_temporal(const char* snapshot_dir, double alpha,
                          const char* out_dir, gcmi_temporal_summary* out) {
  return Guard([&] {
    Require(snapshot_dir && out_dir && out, "null argument");
    const auto r = gcmi::TemporalAnalysis(std::filesystem::path(snapshot_dir), alpha);
    gcmi::WriteTemporalCsv(out_dir, r);
    gcmi_temporal_summary s{};
    s.num_snapshots = r.series.size();
    s.tau_defined = r.kendall_tau.has_value();
    s.kendall_tau = r.kendall_tau.value_or(NAN);
    for (const auto& rec : r.series) {
      if (!rec.gamma_att || !rec.gamma_deg) s.any_undefined = 1;
    }
    *out = s;
  });
}

}  // extern "C"
