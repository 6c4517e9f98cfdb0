#include "nonneg/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "nonneg/analysis.hpp"
#include "unit_random.hpp"
#include "nonneg/spectral.hpp"

namespace nonneg {
void SimulationParams::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

Tensor random_tensor(std::size_t n, int order, double density, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const auto m = static_cast<std::size_t>(order);
  std::vector<Entry> entries;
  std::vector<Index> tuple(m, 0);
  while (true) {
    const double mask = detail::open_unit(gen);
    const double value = detail::open_unit(gen);
    if (mask < density) entries.push_back({tuple, value});

    std::size_t p = m;
    while (p > 0) {
      --p;
      if (++tuple[p] < n) break;
      tuple[p] = 0;
      if (p == 0) return Tensor(order, n, std::move(entries));
    }
  }
}

TrialOutcome run_trial(const SimulationParams& params, std::size_t trial) {
  const Tensor t = random_tensor(params.n, params.order, params.density, params.seed + trial);
  HopmConfig config;
  config.tolerance = params.tolerance;
  config.max_iterations = params.max_iterations;

  const SpectralReport report = spectral_radius(t, config);
  TrialOutcome out;
  out.rho = report.rho;
  out.weakly_irreducible = matrix_irreducible(representation(t));
  out.iterations = report.total_iterations;
  out.blocks = report.partition.blocks.size();
  out.residual = report.block_results[report.argmax_block].residual;
  return out;
}

SimulationRow simulate(const SimulationParams& params) {
  params.validate();
  const auto started = std::chrono::steady_clock::now();

  std::vector<TrialOutcome> outcomes(params.trials);
  unsigned workers = params.threads != 0 ? params.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(params.trials));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < params.trials; i += workers) outcomes[i] = run_trial(params, i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Summed in trial order so the row does not depend on the thread count.
  SimulationRow row;
  row.n = params.n;
  row.order = params.order;
  row.density = params.density;
  row.trials = params.trials;
  std::size_t irreducible = 0;
  for (const auto& o : outcomes) {
    row.mean_rho += o.rho;
    row.mean_iterations += static_cast<double>(o.iterations);
    row.mean_blocks += static_cast<double>(o.blocks);
    row.mean_residual += o.residual;
    if (o.weakly_irreducible) ++irreducible;
  }
  const auto count = static_cast<double>(params.trials);
  row.mean_rho /= count;
  row.mean_iterations /= count;
  row.mean_blocks /= count;
  row.mean_residual /= count;
  row.percent_weakly_irreducible = 100.0 * static_cast<double>(irreducible) / count;
  row.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return row;
}

std::vector<SimulationParams> sweep_parameters(std::size_t trials, std::uint64_t seed,
                                               double tolerance) {
  const std::vector<std::pair<std::size_t, double>> rows = {
      {3, 0.1},  {3, 0.2},  {3, 0.3},   {3, 0.4},  {3, 0.5},  {3, 0.6},  {3, 0.7},  {3, 0.8},
      {3, 0.9},  {4, 0.1},  {4, 0.2},   {4, 0.4},  {4, 0.8},  {10, 0.05}, {10, 0.1}, {10, 0.15},
      {10, 0.2}, {20, 0.05}, {20, 0.1}, {30, 0.05}, {30, 0.1}, {40, 0.05}, {50, 0.05}};
  std::vector<SimulationParams> out;
  for (const auto& [n, density] : rows) {
    SimulationParams p;
    p.n = n;
    p.density = density;
    p.trials = trials;
    p.seed = seed;
    p.tolerance = tolerance;
    out.push_back(p);
  }
  return out;
}

}  // namespace nonneg
