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
#include <string>
#include <vector>

#include "assortativity.hpp"
#include "csv.hpp"
#include "doctest.h"
#include "test_util.hpp"

using gcmi::ErrorCode;
using namespace testutil;

namespace {

gcmi::AlphaSweepConfig SmallAlphaSweep() {
  gcmi::AlphaSweepConfig cfg;
  cfg.sbm.n1 = cfg.sbm.n2 = 10;
  cfg.sbm.p_in = 0.4;
  cfg.sbm.p_out = 0.1;
  cfg.alphas = {0.8, 1.0, 1.5};
  cfg.replicates = 30;
  cfg.master_seed = 7;
  return cfg;
}

std::vector<double> Column(const gcmi::CsvTable& t, const std::string& name) {
  const auto c = t.Column(name);
  std::vector<double> out;
  for (const auto& row : t.rows) out.push_back(gcmi::ParseReal(row[c]));
  return out;
}

gcmi::InterventionConfig SmallIntervention() {
  gcmi::InterventionConfig cfg;
  cfg.spsa.iterations = 20;
  cfg.edge_counts = {20, 5};
  cfg.trials = 10;
  cfg.master_seed = 3;
  return cfg;
}

gcmi::AttributedMultigraph BaseSbm() {
  gcmi::SbmConfig sbm;
  sbm.n1 = sbm.n2 = 8;
  sbm.p_in = 0.5;
  sbm.p_out = 0.1;
  sbm.seed = 4;
  return gcmi::GenerateSbm(sbm);
}

}  // namespace

TEST_CASE("alpha sweep is deterministic and its CSV reproduces r") {
  const auto cfg = SmallAlphaSweep();
  const auto a = gcmi::SweepAlpha(cfg);
  const auto b = gcmi::SweepAlpha(cfg);
  REQUIRE(a.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.records[i].r == b.records[i].r);
    CHECK(a.records[i].n_replicates == 30);
    CHECK(a.records[i].n_skipped_degenerate == 0);
  }

  TempDir dir;
  gcmi::WriteAlphaSweepCsv(dir.path(), a);
  const auto summary = gcmi::ReadCsv(dir / "sweep_alpha.csv");
  const auto reps = gcmi::ReadCsv(dir / "sweep_alpha_replicates.csv");
  CHECK(reps.rows.size() == 30);
  const auto gamma = Column(reps, "gamma_att");
  std::vector<double> abs_gamma;
  for (double g : gamma) abs_gamma.push_back(std::fabs(g));
  const auto rs = Column(summary, "r");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto info = Column(reps, "delta_i@" + gcmi::FormatReal(cfg.alphas[i]));
    CHECK(gcmi::PearsonR(info, abs_gamma) == a.records[i].r);
    CHECK(rs[i] == a.records[i].r);
  }
  CHECK(a.ArgmaxAlpha() == Column(summary, "alpha")[static_cast<std::size_t>(
                               std::max_element(rs.begin(), rs.end()) - rs.begin())]);
}

TEST_CASE("alpha sweep validation") {
  auto cfg = SmallAlphaSweep();
  cfg.replicates = 29;
  CHECK(CodeOf([&] { gcmi::SweepAlpha(cfg); }) == ErrorCode::kInvalidConfig);
  cfg = SmallAlphaSweep();
  cfg.alphas = {4.5};
  CHECK(CodeOf([&] { gcmi::SweepAlpha(cfg); }) == ErrorCode::kInvalidConfig);
  cfg.alphas = {};
  CHECK(CodeOf([&] { gcmi::SweepAlpha(cfg); }) == ErrorCode::kInvalidConfig);

  // One attribute value everywhere: every replicate is degenerate.
  cfg = SmallAlphaSweep();
  cfg.sbm.n2 = 0;
  CHECK(CodeOf([&] { gcmi::SweepAlpha(cfg); }) == ErrorCode::kTooFewValidReplicates);
}

TEST_CASE("shuffled attributes keep the sweep well defined") {
  auto cfg = SmallAlphaSweep();
  cfg.shuffle_attributes = true;
  const auto r = gcmi::SweepAlpha(cfg);
  CHECK(r.records.size() == 3);
  CHECK(gcmi::SweepAlpha(cfg).records[0].r == r.records[0].r);
}

TEST_CASE("shuffled attributes give a correlation inside the null band") {
  auto cfg = SmallAlphaSweep();
  cfg.sbm.n1 = cfg.sbm.n2 = 30;
  cfg.sbm.p_in = 0.3;
  cfg.sbm.p_out = 0.05;
  cfg.alphas = {1.0};
  cfg.replicates = 200;
  cfg.shuffle_attributes = true;
  const auto r = gcmi::SweepAlpha(cfg);
  // 95% band of a zero Pearson correlation.
  CHECK(std::fabs(r.records[0].r) < 1.96 / std::sqrt(r.records[0].n_replicates - 1.0));
}

TEST_CASE("structure-free SBM attributes match the shuffled null") {
  auto cfg = SmallAlphaSweep();
  cfg.sbm.n1 = cfg.sbm.n2 = 30;
  cfg.sbm.p_in = cfg.sbm.p_out = 0.15;
  cfg.alphas = {1.3};
  cfg.replicates = 200;
  const auto observed = gcmi::SweepAlpha(cfg);
  cfg.shuffle_attributes = true;
  cfg.master_seed = 8;
  const auto null = gcmi::SweepAlpha(cfg);
  double mean_obs = 0, mean_null = 0, var_null = 0;
  for (const auto& rep : observed.replicates) mean_obs += rep.delta_i[0] / 200;
  for (const auto& rep : null.replicates) mean_null += rep.delta_i[0] / 200;
  for (const auto& rep : null.replicates) {
    var_null += (rep.delta_i[0] - mean_null) * (rep.delta_i[0] - mean_null) / 199;
  }
  CHECK(std::fabs(mean_obs - mean_null) < 3 * std::sqrt(var_null / 200));
}

TEST_CASE("DMPA grid is deterministic and its CSV reproduces r") {
  gcmi::DmpaSweepConfig cfg;
  cfg.p_f_values = {0.2, 0.4};
  cfg.rho_values = {0.1, 0.5, 0.9};
  cfg.base.target_edges = 400;
  cfg.master_seed = 11;
  const auto a = gcmi::SweepDmpa(cfg);
  CHECK(a.grid.size() == 6);
  CHECK(a.grid[1].p_f == 0.2);
  CHECK(a.grid[1].rho_att == 0.5);
  CHECK(a.grid[3].p_f == 0.4);
  CHECK(a.r_by_p_f.size() == 2);
  CHECK(gcmi::SweepDmpa(cfg).pooled_r == a.pooled_r);

  TempDir dir;
  gcmi::WriteDmpaSweepCsv(dir.path(), a);
  const auto grid = gcmi::ReadCsv(dir / "sweep_dmpa.csv");
  CHECK(gcmi::PearsonR(Column(grid, "delta_i"), Column(grid, "abs_rho_minus_half")) ==
        a.pooled_r);
  const auto corr = gcmi::ReadCsv(dir / "sweep_dmpa_correlation.csv");
  CHECK(corr.rows[0][0] == "pooled");
  CHECK(gcmi::ParseReal(corr.rows[0][1]) == a.pooled_r);
  CHECK(a.MeanDeltaIAtRho(0.5) == doctest::Approx((a.grid[1].delta_i + a.grid[4].delta_i) / 2));
  CHECK(CodeOf([&] { a.MeanDeltaIAtRho(0.3); }) == ErrorCode::kInvalidArgument);

  cfg.rho_values = {0.5};
  cfg.p_f_values = {0.1, 0.2, 0.3};
  const auto single = gcmi::SweepDmpa(cfg);
  CHECK(single.r_by_p_f.empty());
  CHECK(std::isnan(single.pooled_r));
}

TEST_CASE("intervention milestones, pairing and CSV") {
  const auto g = BaseSbm();
  const auto cfg = SmallIntervention();
  const auto r = gcmi::RunIntervention(g, cfg);
  REQUIRE(r.milestones.size() == 3);
  CHECK(r.milestones[0].edges_added == 0);
  CHECK(r.milestones[1].edges_added == 5);
  CHECK(r.milestones[2].edges_added == 20);
  const auto base = gcmi::MeasureGraph(g, gcmi::RenyiOrder(1.3));
  CHECK(r.milestones[0].delta_i_optimized.mean == doctest::Approx(base.delta_i).epsilon(1e-12));
  CHECK(r.milestones[0].delta_i_uniform.mean == doctest::Approx(base.delta_i).epsilon(1e-12));
  CHECK(r.milestones[0].delta_i_optimized.se == doctest::Approx(0.0));
  CHECK(r.milestones[0].gamma_att_optimized.mean ==
        doctest::Approx(*base.gamma_att).epsilon(1e-12));
  CHECK(r.base_delta_i == base.delta_i);
  for (std::size_t t = 0; t < 10; ++t) {
    CHECK(r.optimized_traces[t][0].delta_i == base.delta_i);
    CHECK(r.uniform_traces[t][0].gamma_att == base.gamma_att);
    CHECK(r.uniform_traces[t][0].gamma_deg == base.gamma_deg);
  }
  CHECK(r.milestones[2].delta_i_uniform.n == 10);
  CHECK(r.optimized_traces.size() == 10);

  const auto again = gcmi::RunIntervention(g, cfg);
  CHECK(again.milestones[2].gamma_att_uniform.mean == r.milestones[2].gamma_att_uniform.mean);

  TempDir dir;
  gcmi::WriteInterventionCsv(dir.path(), r);
  const auto table = gcmi::ReadCsv(dir / "intervention.csv");
  CHECK(Column(table, "delta_i_uniform")[2] == r.milestones[2].delta_i_uniform.mean);
  CHECK(Column(table, "gamma_deg_optimized_se")[1] == r.milestones[1].gamma_deg_optimized.se);
  const auto trials = gcmi::ReadCsv(dir / "intervention_trials.csv");
  CHECK(trials.rows.size() == 2 * 10 * 3);
  CHECK(std::filesystem::exists(dir / "theta.csv"));
}

TEST_CASE("uniform sampler in both arms gives identical arms") {
  auto cfg = SmallIntervention();
  cfg.uniform_both_arms = true;
  const auto r = gcmi::RunIntervention(BaseSbm(), cfg);
  for (const auto& m : r.milestones) {
    CHECK(m.delta_i_optimized.mean == m.delta_i_uniform.mean);
    CHECK(m.gamma_att_optimized.mean == m.gamma_att_uniform.mean);
  }
}

TEST_CASE("intervention validation") {
  auto cfg = SmallIntervention();
  cfg.trials = 9;
  CHECK(CodeOf([&] { gcmi::RunIntervention(BaseSbm(), cfg); }) == ErrorCode::kInvalidConfig);
  cfg = SmallIntervention();
  cfg.edge_counts = {0};
  CHECK(CodeOf([&] { gcmi::RunIntervention(BaseSbm(), cfg); }) == ErrorCode::kInvalidConfig);
}

TEST_CASE("temporal series trend") {
  std::vector<gcmi::GraphSnapshot> one{{"a", Path3(kM, kP)}};
  auto r = gcmi::TemporalAnalysis(one, 1.3);
  CHECK(r.series.size() == 1);
  CHECK_FALSE(r.kendall_tau.has_value());

  gcmi::AttributedMultigraph pair({kP, kM, kP, kP});
  pair.AddEdge(0, 1);
  pair.AddEdge(2, 3);
  std::vector<gcmi::GraphSnapshot> same{{"a", pair}, {"b", pair}, {"c", pair}};
  r = gcmi::TemporalAnalysis(same, 1.3);
  REQUIRE(r.kendall_tau.has_value());
  CHECK(*r.kendall_tau == 0.0);

  // Homophily ramps up over the series.
  std::vector<gcmi::GraphSnapshot> ramp;
  const double rhos[] = {0.5, 0.6, 0.7, 0.8, 0.9};
  for (int i = 0; i < 5; ++i) {
    gcmi::DmpaConfig dc;
    dc.rho_att = rhos[i];
    dc.target_edges = 3000;
    dc.seed = 100 + i;
    ramp.push_back({std::to_string(2000 + i), gcmi::ProjectUndirected(gcmi::GenerateDmpa(dc))});
  }
  r = gcmi::TemporalAnalysis(ramp, 1.3);
  REQUIRE(r.kendall_tau.has_value());
  CHECK(*r.kendall_tau > 0.0);

  CHECK(CodeOf([] { gcmi::TemporalAnalysis(std::vector<gcmi::GraphSnapshot>{}, 1.3); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("temporal series from a directory") {
  TempDir dir;
  WriteFile(dir / "2001.edges", "0 1\n1 2\n");
  WriteFile(dir / "2001.attrs", "0 +1\n1 -1\n2 +1\n");
  WriteFile(dir / "2002.edges", "0 1\n1 2\n2 3\n");
  WriteFile(dir / "2002.attrs", "0 +1\n1 -1\n2 +1\n3 -1\n");
  const auto r = gcmi::TemporalAnalysis(dir.path(), 1.0);
  REQUIRE(r.series.size() == 2);
  CHECK(r.series[0].tag == "2001");
  CHECK(r.series[1].n_edges == 3);

  TempDir out;
  gcmi::WriteTemporalCsv(out.path(), r);
  const auto trend = gcmi::ReadCsv(out / "temporal_trend.csv");
  CHECK(trend.rows[0][0] == "kendall_tau");
}
