// Copyright 2026 The Authors.
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

// Command-line front end: run, theorems, mku, synth.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "recourse/recourse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitTheorem = 2;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            const std::string& out) {
  using namespace recourse;
  ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
  if (seed) config.base_seed = *seed;
  if (!out.empty()) config.output_dir = out;
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult result = run_experiment(config);
  write_outputs(config.output_dir, config, result, utc_timestamp());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("wrote %zu run rows and %zu aggregate rows to %s (%.1fs)\n", result.reports.size(),
              result.aggregates.size(), config.output_dir.c_str(), secs);
  std::printf("sign check: %zu violations over %zu negative-agent actions\n",
              result.sign_violations, result.actions_checked);
  return kExitOk;
}

int cmd_theorems(std::uint64_t seed, const std::string& out) {
  using namespace recourse;
  std::ostringstream report;
  std::size_t violations = 0;
  for (const TheoremCheck& c : run_theorem_suite(seed)) {
    report << "theorem " << c.name << " instances " << c.instances << " comparisons "
           << c.comparisons << " violations " << c.violations << "\n";
    violations += c.violations;
  }
  std::cout << report.str();
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::kConfig, "cannot write '" + out + "'");
    f << report.str();
  }
  return violations == 0 ? kExitOk : kExitTheorem;
}

int cmd_mku(std::optional<std::uint64_t> seed, const std::string& out) {
  using namespace recourse;
  KUnionInstance mku;
  std::size_t k = 1;
  if (seed) {
    Rng rng(*seed);
    mku = random_k_union(rng, 6, 4);
    k = 2;
  } else {
    mku.universe_size = 3;
    mku.sets = {{0, 1}, {1, 2}};
  }
  const GameInstance g = mku_to_instance(mku, k);
  std::printf("universe %zu, %zu sets, k = %zu\n", mku.universe_size, mku.sets.size(), k);
  for (std::size_t j = 0; j < mku.sets.size(); ++j) {
    std::printf("  S%zu = {", j);
    for (std::size_t e = 0; e < mku.sets[j].size(); ++e)
      std::printf("%s%d", e ? ", " : "", mku.sets[j][e]);
    std::printf("}\n");
  }
  const std::size_t m = mku.sets.size();
  bool consistent = true;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> subset;
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1u) subset.push_back(static_cast<int>(j));
    const CertainOutcome o = certain_outcome(g, subset);
    const std::size_t u = union_size(mku, subset);
    consistent = consistent && o.manipulate == u - k;
    std::string name;
    for (int j : subset) name += (name.empty() ? "S" : ",S") + std::to_string(j);
    std::printf("  reveal {%s}: recourse %zu, manipulators %zu, |union| - k = %zu\n",
                name.c_str(), o.recourse, o.manipulate, u - k);
  }
  const Selection game = brute_force_select(g, k, Objective::kUtility, Cardinality::kExactly);
  const Selection oracle = brute_force_min_k_union(mku, k);
  std::printf("best release by expected utility: union %zu; minimum k-union: %g\n",
              union_size(mku, game.subset), oracle.value);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::kConfig, "cannot write '" + out + "'");
    dump_instance(f, g);
  }
  consistent = consistent && static_cast<double>(union_size(mku, game.subset)) == oracle.value;
  return consistent ? kExitOk : kExitTheorem;
}

int cmd_synth(const std::string& config_path, std::optional<std::uint64_t> seed,
              const std::string& out, std::optional<std::size_t> n, std::optional<std::size_t> d,
              std::optional<double> shift) {
  using namespace recourse;
  SyntheticSpec spec = config_path.empty() ? SyntheticSpec{} : load_config(config_path).synthetic;
  if (seed) spec.seed = *seed;
  if (n) spec.n = *n;
  if (d) spec.d = *d;
  if (shift) spec.group_shift = *shift;
  const Population pop = synth_population(spec);
  if (out.empty()) {
    write_population_csv(std::cout, pop);
  } else {
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::kConfig, "cannot write '" + out + "'");
    write_population_csv(f, pop);
    std::printf("wrote %zu agents to %s\n", pop.size(), out.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategic recourse withholding: experiments and theorem checks"};
  app.require_subcommand(1);

  std::string config_path, out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n, d;
  std::optional<double> shift;

  auto* run = app.add_subcommand("run", "Run an experiment sweep and write CSV files");
  run->add_option("--config,config", config_path, "Key-value config file");
  run->add_option("--seed", seed, "Override base_seed");
  run->add_option("--out", out, "Override output_dir");

  auto* theorems = app.add_subcommand("theorems", "Run the theorem checks and print a report");
  std::uint64_t theorem_seed = 0;
  theorems->add_option("--seed", theorem_seed, "Suite seed");
  theorems->add_option("--out", out, "Also write the report to this file");

  auto* mku = app.add_subcommand("mku", "Minimum k-Union reduction demo");
  mku->add_option("--seed", seed, "Random instance instead of the fixed fixture");
  mku->add_option("--out", out, "Write the reduced game instance to this file");

  auto* synth = app.add_subcommand("synth", "Emit a synthetic CSV dataset");
  synth->add_option("--config", config_path, "Config file (synthetic.* keys)");
  synth->add_option("--seed", seed, "Generator seed");
  synth->add_option("--out", out, "Output CSV (stdout when absent)");
  synth->add_option("--n", n, "Number of agents");
  synth->add_option("--d", d, "Feature dimension");
  synth->add_option("--shift", shift, "Group mean shift");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, seed, out);
    if (*theorems) return cmd_theorems(theorem_seed, out);
    if (*mku) return cmd_mku(seed, out);
    if (*synth) return cmd_synth(config_path, seed, out, n, d, shift);
  } catch (const recourse::Error& e) {
    // Every library error reaching the CLI stems from its inputs.
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
