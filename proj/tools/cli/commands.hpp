#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nonneg/hopm.hpp"
#include "nonneg/partition.hpp"
#include "nonneg/simulation.hpp"
#include "nonneg/spectral.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kParseError = 2,
  kNoConvergence = 3,
  kGuardExceeded = 4,
};

enum class Format { Table, Machine };

struct ClassifyOptions {
  std::string file;
  Format format = Format::Table;
};

struct RadiusOptions {
  std::string file;
  Format format = Format::Table;
  HopmConfig config;
  bool trace = false;
};

struct PartitionOptions {
  std::string file;
  Format format = Format::Table;
  PartitionKind mode = PartitionKind::Weak;
};

struct SimulateOptions {
  SimulationParams params;
  /// Run every row of the standard parameter sweep instead of one row.
  bool sweep = false;
  Format format = Format::Table;
};

struct OracleOptions {
  std::string file;
  Format format = Format::Table;
  std::size_t grid = 200;
};

// Machine-readable reports. Index sets and block numbers are one-based.
nlohmann::json classify_report(const Tensor& t);
nlohmann::json radius_report(const SpectralReport& report, bool with_trace);
nlohmann::json partition_report(const BlockPartition& partition);
nlohmann::json simulation_report(const std::vector<SimulationRow>& rows);

int run_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err);
int run_radius(const RadiusOptions& options, std::ostream& out, std::ostream& err);
int run_partition(const PartitionOptions& options, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int run_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the matching subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonneg::cli
