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

#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "assortativity.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "info_measures.hpp"
#include "numeric.hpp"
#include "rng.hpp"

namespace gcmi {

namespace {

std::vector<double> Grid(double first, double step, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    // Rounded to 1e-9 so grid values print and compare cleanly.
    out.push_back(std::round((first + step * i) * 1e9) / 1e9);
  }
  return out;
}

ArmStats Summarize(const std::vector<std::optional<double>>& values) {
  std::vector<double> xs;
  for (const auto& v : values) {
    if (v) xs.push_back(*v);
  }
  ArmStats s;
  s.n = static_cast<std::uint32_t>(xs.size());
  if (xs.empty()) {
    s.mean = std::nan("");
    s.se = std::nan("");
    return s;
  }
  s.mean = Sum(xs) / static_cast<double>(xs.size());
  if (xs.size() < 2) {
    s.se = std::nan("");
    return s;
  }
  CompensatedSum ss;
  for (double x : xs) ss.Add((x - s.mean) * (x - s.mean));
  const double var = ss.value() / static_cast<double>(xs.size() - 1);
  s.se = std::sqrt(var / static_cast<double>(xs.size()));
  return s;
}

AttributedMultigraph ShuffleAttributes(const AttributedMultigraph& g, Rng& rng) {
  const auto perm = rng.Permutation(static_cast<std::uint32_t>(g.num_nodes()));
  std::vector<Attribute> attrs(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) attrs[v] = g.attribute(perm[v]);
  AttributedMultigraph out(std::move(attrs));
  g.ForEachEdge([&](NodeId u, NodeId v, std::uint64_t w) { out.AddEdge(u, v, w); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<double> DefaultSweepAlphas() { return Grid(0.6, 0.1, 15); }
std::vector<double> DefaultRhoGrid() { return Grid(0.05, 0.1, 10); }
std::vector<double> DefaultPfGrid() { return Grid(0.1, 0.1, 5); }

double AlphaSweepResult::ArgmaxAlpha() const {
  if (records.empty()) Fail(ErrorCode::kInvalidArgument, "empty sweep");
  const auto best = std::max_element(
      records.begin(), records.end(),
      [](const AlphaRecord& a, const AlphaRecord& b) { return a.r < b.r; });
  return best->alpha;
}

AlphaSweepResult SweepAlpha(const AlphaSweepConfig& cfg) {
  if (cfg.alphas.empty()) Fail(ErrorCode::kInvalidConfig, "no alphas given");
  for (double a : cfg.alphas) {
    if (!(a > 0.0 && a <= 4.0)) {
      Fail(ErrorCode::kInvalidConfig, "alphas must lie in (0, 4]");
    }
  }
  if (cfg.replicates < 30) {
    Fail(ErrorCode::kInvalidConfig, "sweep needs at least 30 replicates");
  }
  std::vector<RenyiOrder> orders;
  for (double a : cfg.alphas) orders.emplace_back(a);

  AlphaSweepResult result;
  result.replicates.resize(cfg.replicates);
  for (std::uint32_t i = 0; i < cfg.replicates; ++i) {
    const std::uint64_t seed = DeriveSeed(cfg.master_seed, i);
    SbmConfig sbm = cfg.sbm;
    sbm.seed = seed;
    AttributedMultigraph g = GenerateSbm(sbm);
    Rng relabel(DeriveSeed(seed, 1));
    if (cfg.shuffle_attributes) g = ShuffleAttributes(g, relabel);
    g = g.Relabeled(relabel.Permutation(static_cast<std::uint32_t>(g.num_nodes())));

    const auto nj = NormalizeJdam(BuildJdam(g));
    auto& rec = result.replicates[i];
    rec.index = i;
    rec.gamma_att = AttributeAssortativity(AttributeDistributionOf(nj));
    rec.gamma_deg = DegreeAssortativity(nj.degree_joint, nj.degree_marginal);
    for (const auto& order : orders) {
      rec.delta_i.push_back(AttributeConditionalMi(nj, order));
    }
  }

  for (std::size_t a = 0; a < orders.size(); ++a) {
    std::vector<double> info, abs_gamma;
    std::uint32_t skipped = 0;
    for (const auto& rec : result.replicates) {
      if (!rec.gamma_att) {
        ++skipped;
        continue;
      }
      info.push_back(rec.delta_i[a]);
      abs_gamma.push_back(std::fabs(*rec.gamma_att));
    }
    if (info.size() < 10) {
      Fail(ErrorCode::kTooFewValidReplicates,
           std::to_string(info.size()) + " usable replicates");
    }
    result.records.push_back({cfg.alphas[a], PearsonR(info, abs_gamma),
                              static_cast<std::uint32_t>(info.size()), skipped});
  }
  return result;
}

// ---------------------------------------------------------------------------

double DmpaSweepResult::MeanDeltaIAtRho(double rho) const {
  std::vector<double> xs;
  for (const auto& rec : grid) {
    if (std::fabs(rec.rho_att - rho) < 1e-9) xs.push_back(rec.delta_i);
  }
  if (xs.empty()) Fail(ErrorCode::kInvalidArgument, "rho not on the grid");
  return Sum(xs) / static_cast<double>(xs.size());
}

DmpaSweepResult SweepDmpa(const DmpaSweepConfig& cfg) {
  if (cfg.p_f_values.empty() || cfg.rho_values.empty()) {
    Fail(ErrorCode::kInvalidConfig, "empty DMPA grid");
  }
  const RenyiOrder order(cfg.alpha);
  DmpaSweepResult result;
  std::uint64_t index = 0;
  for (double p_f : cfg.p_f_values) {
    for (double rho : cfg.rho_values) {
      DmpaConfig dc = cfg.base;
      dc.p_f = p_f;
      dc.rho_att = rho;
      dc.seed = DeriveSeed(cfg.master_seed, index++);
      const auto g = ProjectUndirected(GenerateDmpa(dc));
      const auto m = MeasureGraph(g, order);
      result.grid.push_back({p_f, rho, m.delta_i, m.gamma_att, m.gamma_deg,
                             g.num_nodes(), g.num_edges()});
    }
  }

  // NaN when either series is constant, e.g. a single rho value.
  auto correlate = [](const std::vector<const DmpaGridRecord*>& recs) {
    std::vector<double> info, distance;
    for (const auto* r : recs) {
      info.push_back(r->delta_i);
      distance.push_back(std::fabs(r->rho_att - 0.5));
    }
    try {
      return PearsonR(info, distance);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateSeries) throw;
      return std::nan("");
    }
  };
  std::vector<const DmpaGridRecord*> all;
  for (const auto& r : result.grid) all.push_back(&r);
  result.pooled_r = correlate(all);
  if (cfg.rho_values.size() >= 2) {
    for (double p_f : cfg.p_f_values) {
      std::vector<const DmpaGridRecord*> slice;
      for (const auto& r : result.grid) {
        if (r.p_f == p_f) slice.push_back(&r);
      }
      result.r_by_p_f.emplace_back(p_f, correlate(slice));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

InterventionResult RunIntervention(const AttributedMultigraph& g,
                                   const InterventionConfig& cfg) {
  if (cfg.trials < 10) Fail(ErrorCode::kInvalidConfig, "need at least 10 trials");
  std::set<std::uint64_t> marks;
  for (auto c : cfg.edge_counts) {
    if (c > 0) marks.insert(c);
  }
  if (marks.empty()) {
    Fail(ErrorCode::kInvalidConfig, "need at least one positive edge count");
  }
  const std::vector<std::uint64_t> milestones(marks.begin(), marks.end());
  const std::uint64_t max_count = milestones.back();
  const RenyiOrder order(cfg.alpha);

  InterventionResult result;
  SpsaConfig spsa = cfg.spsa;
  spsa.seed = DeriveSeed(cfg.master_seed, 0);
  result.trained = Optimize(g, order, spsa);
  const GroupSpace space = result.trained.space;
  const std::vector<double> uniform(space.num_classes(),
                                    1.0 / static_cast<double>(space.num_classes()));
  const std::vector<double> optimized =
      cfg.uniform_both_arms ? uniform : result.trained.Pmf();

  const auto base = MeasureGraph(g, order);
  result.base_gamma_att = base.gamma_att;
  result.base_gamma_deg = base.gamma_deg;
  result.base_delta_i = base.delta_i;

  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = DeriveSeed(cfg.master_seed, 1 + t);
    Rng rng_opt(seed), rng_uni(seed);
    result.optimized_traces.push_back(
        ApplyEdges(g, optimized, space, max_count, rng_opt, order, milestones).trace);
    result.uniform_traces.push_back(
        ApplyEdges(g, uniform, space, max_count, rng_uni, order, milestones).trace);
  }

  const std::size_t points = milestones.size() + 1;
  for (std::size_t j = 0; j < points; ++j) {
    InterventionMilestone m;
    m.edges_added = j == 0 ? 0 : milestones[j - 1];
    std::vector<std::optional<double>> ga_o, ga_u, gd_o, gd_u, di_o, di_u;
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
      const auto& o = result.optimized_traces[t][j];
      const auto& u = result.uniform_traces[t][j];
      ga_o.push_back(o.gamma_att);
      ga_u.push_back(u.gamma_att);
      gd_o.push_back(o.gamma_deg);
      gd_u.push_back(u.gamma_deg);
      di_o.push_back(o.delta_i);
      di_u.push_back(u.delta_i);
    }
    m.gamma_att_optimized = Summarize(ga_o);
    m.gamma_att_uniform = Summarize(ga_u);
    m.gamma_deg_optimized = Summarize(gd_o);
    m.gamma_deg_uniform = Summarize(gd_u);
    m.delta_i_optimized = Summarize(di_o);
    m.delta_i_uniform = Summarize(di_u);
    result.milestones.push_back(m);
  }
  return result;
}

// ---------------------------------------------------------------------------

TemporalResult TemporalAnalysis(const std::vector<GraphSnapshot>& snapshots,
                                double alpha) {
  if (snapshots.empty()) {
    Fail(ErrorCode::kInvalidArgument, "snapshot series is empty");
  }
  const RenyiOrder order(alpha);
  TemporalResult result;
  std::vector<double> index, info;
  for (const auto& snap : snapshots) {
    MeasureReport m;
    try {
      m = MeasureGraph(snap.graph, order);
    } catch (const Error& e) {
      throw Error(e.code(), "snapshot `" + snap.tag + "`: " + e.what());
    }
    result.series.push_back({snap.tag, m.delta_i, m.gamma_att, m.gamma_deg,
                             snap.graph.num_nodes(), snap.graph.num_edges()});
    index.push_back(static_cast<double>(index.size()));
    info.push_back(m.delta_i);
  }
  result.kendall_tau = KendallTau(index, info);
  return result;
}

TemporalResult TemporalAnalysis(const std::filesystem::path& dir, double alpha) {
  return TemporalAnalysis(LoadSnapshotSeries(dir), alpha);
}

// ---------------------------------------------------------------------------

void WriteAlphaSweepCsv(const std::filesystem::path& dir,
                        const AlphaSweepResult& r) {
  CsvWriter summary(dir / "sweep_alpha.csv");
  summary.Row({"alpha", "r", "n_replicates", "n_skipped_degenerate"});
  for (const auto& rec : r.records) {
    summary.Row({FormatReal(rec.alpha), FormatReal(rec.r),
                 std::to_string(rec.n_replicates),
                 std::to_string(rec.n_skipped_degenerate)});
  }
  CsvWriter reps(dir / "sweep_alpha_replicates.csv");
  std::vector<std::string> header{"replicate", "gamma_att", "gamma_deg"};
  for (const auto& rec : r.records) header.push_back("delta_i@" + FormatReal(rec.alpha));
  reps.Row(header);
  for (const auto& rep : r.replicates) {
    std::vector<std::string> row{std::to_string(rep.index),
                                 FormatReal(rep.gamma_att),
                                 FormatReal(rep.gamma_deg)};
    for (double v : rep.delta_i) row.push_back(FormatReal(v));
    reps.Row(row);
  }
}

void WriteDmpaSweepCsv(const std::filesystem::path& dir,
                       const DmpaSweepResult& r) {
  CsvWriter grid(dir / "sweep_dmpa.csv");
  grid.Row({"p_f", "rho_att", "abs_rho_minus_half", "delta_i", "gamma_att",
            "gamma_deg", "n_nodes", "n_edges"});
  for (const auto& rec : r.grid) {
    grid.Row({FormatReal(rec.p_f), FormatReal(rec.rho_att),
              FormatReal(std::fabs(rec.rho_att - 0.5)), FormatReal(rec.delta_i),
              FormatReal(rec.gamma_att), FormatReal(rec.gamma_deg),
              std::to_string(rec.n_nodes), std::to_string(rec.n_edges)});
  }
  CsvWriter corr(dir / "sweep_dmpa_correlation.csv");
  corr.Row({"p_f", "r"});
  corr.Row({"pooled", FormatReal(r.pooled_r)});
  for (const auto& [p_f, value] : r.r_by_p_f) {
    corr.Row({FormatReal(p_f), FormatReal(value)});
  }
}

void WriteInterventionCsv(const std::filesystem::path& dir,
                          const InterventionResult& r) {
  CsvWriter summary(dir / "intervention.csv");
  summary.Row({"edges_added", "gamma_att_optimized", "gamma_att_optimized_se",
               "gamma_att_uniform", "gamma_att_uniform_se",
               "gamma_deg_optimized", "gamma_deg_optimized_se",
               "gamma_deg_uniform", "gamma_deg_uniform_se",
               "delta_i_optimized", "delta_i_optimized_se", "delta_i_uniform",
               "delta_i_uniform_se"});
  for (const auto& m : r.milestones) {
    summary.Row({std::to_string(m.edges_added),
                 FormatReal(m.gamma_att_optimized.mean),
                 FormatReal(m.gamma_att_optimized.se),
                 FormatReal(m.gamma_att_uniform.mean),
                 FormatReal(m.gamma_att_uniform.se),
                 FormatReal(m.gamma_deg_optimized.mean),
                 FormatReal(m.gamma_deg_optimized.se),
                 FormatReal(m.gamma_deg_uniform.mean),
                 FormatReal(m.gamma_deg_uniform.se),
                 FormatReal(m.delta_i_optimized.mean),
                 FormatReal(m.delta_i_optimized.se),
                 FormatReal(m.delta_i_uniform.mean),
                 FormatReal(m.delta_i_uniform.se)});
  }
  CsvWriter trials(dir / "intervention_trials.csv");
  trials.Row({"trial", "arm", "edges_added", "gamma_att", "gamma_deg", "delta_i"});
  auto emit = [&](const std::vector<std::vector<TraceRecord>>& traces,
                  const char* arm) {
    for (std::size_t t = 0; t < traces.size(); ++t) {
      for (const auto& rec : traces[t]) {
        trials.Row({std::to_string(t), arm, std::to_string(rec.edges_added),
                    FormatReal(rec.gamma_att), FormatReal(rec.gamma_deg),
                    FormatReal(rec.delta_i)});
      }
    }
  };
  emit(r.optimized_traces, "optimized");
  emit(r.uniform_traces, "uniform");
  WriteLogitCsv(dir / "theta.csv", r.trained);
}

void WriteTemporalCsv(const std::filesystem::path& dir, const TemporalResult& r) {
  CsvWriter out(dir / "temporal.csv");
  out.Row({"snapshot_tag", "delta_i", "gamma_att", "gamma_deg", "n_nodes",
           "n_edges"});
  for (const auto& rec : r.series) {
    out.Row({rec.tag, FormatReal(rec.delta_i), FormatReal(rec.gamma_att),
             FormatReal(rec.gamma_deg), std::to_string(rec.n_nodes),
             std::to_string(rec.n_edges)});
  }
  CsvWriter trend(dir / "temporal_trend.csv");
  trend.Row({"statistic", "value"});
  trend.Row({"kendall_tau", FormatReal(r.kendall_tau)});
}

void WriteTraceCsv(const std::filesystem::path& path,
                   const std::vector<TraceRecord>& trace) {
  CsvWriter out(path);
  out.Row({"edges_added", "gamma_att", "gamma_deg", "delta_i"});
  for (const auto& rec : trace) {
    out.Row({std::to_string(rec.edges_added), FormatReal(rec.gamma_att),
             FormatReal(rec.gamma_deg), FormatReal(rec.delta_i)});
  }
}

}  // namespace gcmi
