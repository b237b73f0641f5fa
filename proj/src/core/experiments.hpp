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

// Numerical studies: the Renyi-order sweep on SBM replicates, the DMPA
// homophily grid, the edge-addition intervention, and snapshot series.
// Every work item draws from its own seed, DeriveSeed(master, index), so
// results do not depend on execution order.

#ifndef GCMI_CORE_EXPERIMENTS_HPP_
#define GCMI_CORE_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "attributed_graph.hpp"
#include "generators.hpp"
#include "spsa_optimizer.hpp"

namespace gcmi {

// ----- Renyi-order sweep ----------------------------------------------------

struct AlphaSweepConfig {
  SbmConfig sbm;  // seed ignored; replicate i uses DeriveSeed(master, i)
  std::vector<double> alphas;
  std::uint32_t replicates = 200;
  std::uint64_t master_seed = 0;
  // Replace each replicate's attributes by a random shuffle (null model).
  bool shuffle_attributes = false;
};

// {0.6, 0.7, ..., 2.0}.
std::vector<double> DefaultSweepAlphas();

struct AlphaRecord {
  double alpha = 0.0;
  double r = 0.0;  // Pearson r(I_alpha, |gamma_att|)
  std::uint32_t n_replicates = 0;
  std::uint32_t n_skipped_degenerate = 0;
};

struct ReplicateRecord {
  std::uint32_t index = 0;
  std::optional<double> gamma_att;
  std::optional<double> gamma_deg;
  std::vector<double> delta_i;  // one per alpha
};

struct AlphaSweepResult {
  std::vector<AlphaRecord> records;
  std::vector<ReplicateRecord> replicates;

  double ArgmaxAlpha() const;
};

AlphaSweepResult SweepAlpha(const AlphaSweepConfig& cfg);

// ----- DMPA grid ------------------------------------------------------------

struct DmpaSweepConfig {
  std::vector<double> p_f_values;
  std::vector<double> rho_values;
  DmpaConfig base;  // seed ignored; grid point i uses DeriveSeed(master, i)
  double alpha = 1.3;
  std::uint64_t master_seed = 0;
};

struct DmpaGridRecord {
  double p_f = 0.0;
  double rho_att = 0.0;
  double delta_i = 0.0;
  std::optional<double> gamma_att;
  std::optional<double> gamma_deg;
  std::size_t n_nodes = 0;
  std::uint64_t n_edges = 0;
};

struct DmpaSweepResult {
  std::vector<DmpaGridRecord> grid;  // p_f major, rho minor
  // r(I, |rho - 0.5|) over the whole grid; NaN when undefined.
  double pooled_r = 0.0;
  std::vector<std::pair<double, double>> r_by_p_f;

  // Mean I over the grid points with this rho.
  double MeanDeltaIAtRho(double rho) const;
};

// {0.05, 0.15, ..., 0.95} and {0.1, 0.2, ..., 0.5}.
std::vector<double> DefaultRhoGrid();
std::vector<double> DefaultPfGrid();

DmpaSweepResult SweepDmpa(const DmpaSweepConfig& cfg);

// ----- Intervention ---------------------------------------------------------

struct InterventionConfig {
  double alpha = 1.3;
  SpsaConfig spsa;  // seed ignored; training uses DeriveSeed(master, 0)
  std::vector<std::uint64_t> edge_counts{10, 100, 1000};
  std::uint32_t trials = 20;
  std::uint64_t master_seed = 0;
  // Use the uniform pmf in both arms (self-consistency control).
  bool uniform_both_arms = false;
};

struct ArmStats {
  double mean = 0.0;
  double se = 0.0;
  std::uint32_t n = 0;  // trials with a defined value
};

struct InterventionMilestone {
  std::uint64_t edges_added = 0;
  ArmStats gamma_att_optimized, gamma_att_uniform;
  ArmStats gamma_deg_optimized, gamma_deg_uniform;
  ArmStats delta_i_optimized, delta_i_uniform;
};

struct InterventionResult {
  OptimizeResult trained;
  std::optional<double> base_gamma_att;
  std::optional<double> base_gamma_deg;
  double base_delta_i = 0.0;
  std::vector<InterventionMilestone> milestones;  // first is 0 added edges
  // Per-trial paired traces: [trial][milestone].
  std::vector<std::vector<TraceRecord>> optimized_traces;
  std::vector<std::vector<TraceRecord>> uniform_traces;
};

InterventionResult RunIntervention(const AttributedMultigraph& g,
                                   const InterventionConfig& cfg);

// ----- Snapshot series ------------------------------------------------------

struct TemporalRecord {
  std::string tag;
  double delta_i = 0.0;
  std::optional<double> gamma_att;
  std::optional<double> gamma_deg;
  std::size_t n_nodes = 0;
  std::uint64_t n_edges = 0;
};

struct TemporalResult {
  std::vector<TemporalRecord> series;
  std::optional<double> kendall_tau;  // delta_i against snapshot index
};

TemporalResult TemporalAnalysis(const std::vector<GraphSnapshot>& snapshots,
                                double alpha);
TemporalResult TemporalAnalysis(const std::filesystem::path& dir, double alpha);

// ----- Output files ---------------------------------------------------------

void WriteAlphaSweepCsv(const std::filesystem::path& dir,
                        const AlphaSweepResult& r);
void WriteDmpaSweepCsv(const std::filesystem::path& dir,
                       const DmpaSweepResult& r);
void WriteInterventionCsv(const std::filesystem::path& dir,
                          const InterventionResult& r);
void WriteTemporalCsv(const std::filesystem::path& dir, const TemporalResult& r);
void WriteTraceCsv(const std::filesystem::path& path,
                   const std::vector<TraceRecord>& trace);

}  // namespace gcmi

#endif  // GCMI_CORE_EXPERIMENTS_HPP_
