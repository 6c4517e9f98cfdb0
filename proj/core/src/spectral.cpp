#include "nonneg/spectral.hpp"

#include <utility>

namespace nonneg {

SpectralReport spectral_radius(const Tensor& t, const HopmConfig& config) {
  config.validate();
  SpectralReport report;
  report.partition = weak_partition(t);
  report.certification_tolerance = 100.0 * config.tolerance;

  const auto& blocks = report.partition.blocks;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    try {
      HopmResult r = hopm_run(blocks[b].tensor, config);
      report.total_iterations += r.iterations;
      report.block_results.push_back({blocks[b].indices, r.pair.value, std::move(r.pair.vector),
                                      r.bracket, r.iterations, r.pair.residual,
                                      std::move(r.trace)});
    } catch (const ConvergenceError& e) {
      report.total_iterations += e.iterations();
      throw SpectralConvergenceError("block " + std::to_string(b + 1) + ": " + e.what(),
                                     std::move(report), b, e);
    }
    if (b == 0 || report.block_results[b].value > report.rho) {
      report.rho = report.block_results[b].value;
      report.argmax_block = b;
    }
  }

  report.assembled_vector = assemble_eigenvector(t, report);
  if (report.assembled_vector) {
    report.assembled_residual = residual(t, report.rho, *report.assembled_vector);
  }
  return report;
}

std::optional<Vector> assemble_eigenvector(const Tensor& t, const SpectralReport& report) {
  for (const auto& block : report.block_results) {
    if (block.value != report.rho) continue;
    Vector v(t.dim(), 0.0);
    for (std::size_t k = 0; k < block.indices.size(); ++k) v[block.indices[k]] = block.vector[k];
    if (residual(t, report.rho, v) <= report.certification_tolerance) return v;
  }
  return std::nullopt;
}

}  // namespace nonneg
