#include "commands.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nonneg/analysis.hpp"
#include "nonneg/errors.hpp"
#include "nonneg/oracle.hpp"
#include "nonneg/tensor_io.hpp"

namespace nonneg::cli {
namespace {

using nlohmann::json;

json one_based(const IndexSet& s) {
  json a = json::array();
  for (Index i : s) a.push_back(i + 1);
  return a;
}

std::string set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k != 0) out += ",";
    out += std::to_string(s[k] + 1);
  }
  return out + "}";
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v, int digits = 3) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits) << v;
  return os.str();
}

std::string general(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

json profile_json(const StructureProfile& p) {
  return {{"strictly_nonnegative", p.strictly_nonnegative},
          {"weakly_irreducible", p.weakly_irreducible},
          {"weakly_primitive", p.weakly_primitive},
          {"irreducible", p.irreducible},
          {"primitive", p.primitive},
          {"weakly_positive", p.weakly_positive},
          {"essentially_positive", p.essentially_positive}};
}

// Profile with "primitive" reported as "undecided" when the exact test gives up.
json profile_or_undecided(const Tensor& t) {
  try {
    return profile_json(classify(t));
  } catch (const PrimitivityUndecided&) {
    StructureProfile p;
    const Vector r = row_sums(t);
    p.strictly_nonnegative = std::all_of(r.begin(), r.end(), [](double v) { return v > 0.0; });
    const NonnegativeMatrix g = representation(t);
    p.weakly_irreducible = matrix_irreducible(g);
    p.weakly_primitive = matrix_primitive(g);
    p.irreducible = is_irreducible(t);
    const NonnegativeMatrix m = majorization(t);
    p.weakly_positive = p.essentially_positive = true;
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (std::size_t j = 0; j < t.dim(); ++j) {
        if (m(i, j) > 0.0) continue;
        p.essentially_positive = false;
        if (i != j) p.weakly_positive = false;
      }
    }
    json j = profile_json(p);
    j["primitive"] = "undecided";
    return j;
  }
}

const char* const kPredicateOrder[] = {"strictly_nonnegative", "weakly_irreducible",
                                       "weakly_primitive",     "irreducible",
                                       "primitive",            "weakly_positive",
                                       "essentially_positive"};

void print_matrix(std::ostream& out, const std::string& name, const NonnegativeMatrix& m) {
  out << name << ":\n";
  for (const auto& row : m.rows()) {
    out << " ";
    for (double v : row) out << " " << std::setw(10) << general(v);
    out << "\n";
  }
}

void print_vector(std::ostream& out, const Vector& v) {
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << general(v[i]);
  out << ")";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

Tensor load(const std::string& file) { return read_tensor_file(file); }

void print_trace_rows(std::ostream& out, const SpectralReport& report) {
  out << std::setw(4) << "Blk" << std::setw(6) << "Ite" << std::setw(11) << "alpha"
      << std::setw(11) << "beta" << std::setw(13) << "alpha-beta" << std::setw(13) << "residual"
      << "\n";
  for (std::size_t b = 0; b < report.block_results.size(); ++b) {
    for (const auto& row : report.block_results[b].trace) {
      out << std::setw(4) << b + 1 << std::setw(6) << row.iteration << std::setw(11)
          << fixed(row.upper, 3) << std::setw(11) << fixed(row.lower, 3) << std::setw(13)
          << sci(row.gap) << std::setw(13) << sci(row.residual) << "\n";
    }
  }
}

void print_radius_table(std::ostream& out, const SpectralReport& report, bool with_trace) {
  out << "rho = " << general(report.rho) << "\n";
  out << std::setw(4) << "Blk" << "  " << std::left << std::setw(16) << "indices" << std::right
      << std::setw(16) << "rho" << std::setw(7) << "Ite" << std::setw(13) << "residual" << "\n";
  for (std::size_t b = 0; b < report.block_results.size(); ++b) {
    const auto& r = report.block_results[b];
    out << std::setw(4) << b + 1 << "  " << std::left << std::setw(16) << set_string(r.indices)
        << std::right << std::setw(16) << general(r.value) << std::setw(7) << r.iterations
        << std::setw(13) << sci(r.residual) << "\n";
  }
  out << "total iterations: " << report.total_iterations << "\n";
  if (report.assembled_vector) {
    out << "eigenvector: ";
    print_vector(out, *report.assembled_vector);
    out << "  residual " << sci(report.assembled_residual) << "\n";
  } else {
    out << "eigenvector: not certified\n";
  }
  if (with_trace) {
    out << "\n";
    print_trace_rows(out, report);
  }
}

json block_result_json(const BlockResult& r, std::size_t number) {
  return {{"block", number},
          {"indices", one_based(r.indices)},
          {"value", r.value},
          {"alpha", r.bracket.upper},
          {"beta", r.bracket.lower},
          {"vector", r.vector},
          {"iterations", r.iterations},
          {"residual", r.residual}};
}

json trace_json(const SpectralReport& report) {
  json rows = json::array();
  for (std::size_t b = 0; b < report.block_results.size(); ++b) {
    for (const auto& row : report.block_results[b].trace) {
      rows.push_back({{"block", b + 1},
                      {"iteration", row.iteration},
                      {"alpha", row.upper},
                      {"beta", row.lower},
                      {"gap", row.gap},
                      {"residual", row.residual}});
    }
  }
  return rows;
}

json subset_json(const oracle::SubsetVerdict& v) {
  json j = {{"verdict", v.reducible}, {"work", v.work}};
  j["witness"] = v.witness ? one_based(*v.witness) : json(nullptr);
  return j;
}

json simulation_row_json(const SimulationRow& r) {
  return {{"n", r.n},
          {"order", r.order},
          {"density", r.density},
          {"trials", r.trials},
          {"mean_rho", r.mean_rho},
          {"percent_weakly_irreducible", r.percent_weakly_irreducible},
          {"mean_iterations", r.mean_iterations},
          {"mean_blocks", r.mean_blocks},
          {"mean_residual", r.mean_residual},
          {"wall_time", r.wall_time}};
}

}  // namespace

json classify_report(const Tensor& t) {
  json j;
  j["command"] = "classify";
  j["order"] = t.order();
  j["dim"] = t.dim();
  j["profile"] = profile_or_undecided(t);
  j["majorization"] = majorization(t).rows();
  j["representation"] = representation(t).rows();
  j["row_sums"] = row_sums(t);
  return j;
}

json radius_report(const SpectralReport& report, bool with_trace) {
  json j;
  j["command"] = "radius";
  j["converged"] = true;
  j["rho"] = report.rho;
  json blocks = json::array();
  for (std::size_t b = 0; b < report.block_results.size(); ++b) {
    blocks.push_back(block_result_json(report.block_results[b], b + 1));
  }
  j["blocks"] = blocks;
  j["argmax_block"] = report.block_results.empty() ? json(nullptr) : json(report.argmax_block + 1);
  j["eigenvector"] = report.assembled_vector ? json(*report.assembled_vector) : json(nullptr);
  j["eigenvector_residual"] =
      report.assembled_vector ? json(report.assembled_residual) : json(nullptr);
  j["total_iterations"] = report.total_iterations;
  if (with_trace) j["trace"] = trace_json(report);
  return j;
}

json partition_report(const BlockPartition& partition) {
  json j;
  j["command"] = "partition";
  j["mode"] = partition.kind == PartitionKind::Weak ? "weak" : "strong";
  json blocks = json::array();
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    const auto& blk = partition.blocks[b];
    blocks.push_back({{"block", b + 1},
                      {"indices", one_based(blk.indices)},
                      {"entries", blk.tensor.nnz()},
                      {"profile", profile_or_undecided(blk.tensor)}});
  }
  j["blocks"] = blocks;
  return j;
}

json simulation_report(const std::vector<SimulationRow>& rows) {
  json j;
  j["command"] = "simulate";
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back(simulation_row_json(r));
  return j;
}

int run_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err) {
  Tensor t = Tensor::zero(2, 1);
  try {
    t = load(options.file);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const json report = classify_report(t);
  if (options.format == Format::Machine) {
    emit(out, report);
    return kSuccess;
  }
  out << "order " << t.order() << ", dimension " << t.dim() << ", " << t.nnz() << " entries\n";
  for (const char* key : kPredicateOrder) {
    const json& v = report["profile"][key];
    out << "  " << std::left << std::setw(22) << key << std::right
        << (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.get<std::string>()) << "\n";
  }
  print_matrix(out, "M(T)", majorization(t));
  print_matrix(out, "G(T)", representation(t));
  out << "R(T): ";
  print_vector(out, row_sums(t));
  out << "\n";
  return kSuccess;
}

int run_radius(const RadiusOptions& options, std::ostream& out, std::ostream& err) {
  Tensor t = Tensor::zero(2, 1);
  try {
    t = load(options.file);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    const SpectralReport report = spectral_radius(t, options.config);
    if (options.format == Format::Machine) {
      emit(out, radius_report(report, options.trace));
    } else {
      print_radius_table(out, report, options.trace);
    }
    return kSuccess;
  } catch (const SpectralConvergenceError& e) {
    const auto& partial = e.partial();
    err << "error: " << e.what() << "\n";
    if (options.format == Format::Machine) {
      json j = radius_report(partial, options.trace);
      j["converged"] = false;
      j["rho"] = nullptr;
      j["failed_block"] = e.failed_block() + 1;
      j["failed_indices"] = one_based(partial.partition.blocks[e.failed_block()].indices);
      j["best_bracket"] = {{"alpha", e.cause().best().upper}, {"beta", e.cause().best().lower}};
      j["error"] = e.what();
      emit(out, j);
    } else {
      out << "not converged in block " << e.failed_block() + 1 << " "
          << set_string(partial.partition.blocks[e.failed_block()].indices) << "; best bracket ["
          << general(e.cause().best().lower) << ", " << general(e.cause().best().upper) << "]\n";
      for (std::size_t b = 0; b < partial.block_results.size(); ++b) {
        const auto& r = partial.block_results[b];
        out << "  block " << b + 1 << " " << set_string(r.indices) << ": " << general(r.value)
            << "\n";
      }
    }
    return kNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int run_partition(const PartitionOptions& options, std::ostream& out, std::ostream& err) {
  Tensor t = Tensor::zero(2, 1);
  try {
    t = load(options.file);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const BlockPartition p =
      options.mode == PartitionKind::Weak ? weak_partition(t) : strong_partition(t);
  const json report = partition_report(p);
  if (options.format == Format::Machine) {
    emit(out, report);
    return kSuccess;
  }
  out << (p.kind == PartitionKind::Weak ? "weak" : "strong") << " partition, "
      << p.blocks.size() << " block(s)\n";
  for (const auto& blk : report["blocks"]) {
    IndexSet s;
    for (const auto& i : blk["indices"]) s.push_back(i.get<Index>() - 1);
    out << "  block " << blk["block"].get<std::size_t>() << " " << set_string(s) << "  ("
        << blk["entries"].get<std::size_t>() << " entries)";
    for (const char* key : kPredicateOrder) {
      const json& v = blk["profile"][key];
      if (v.is_boolean() && v.get<bool>()) out << " " << key;
    }
    out << "\n";
  }
  return kSuccess;
}

int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<SimulationParams> params;
  if (options.sweep) {
    params = sweep_parameters(options.params.trials, options.params.seed, options.params.tolerance);
    for (auto& p : params) {
      p.threads = options.params.threads;
      p.max_iterations = options.params.max_iterations;
    }
  } else {
    params.push_back(options.params);
  }

  std::vector<SimulationRow> rows;
  try {
    for (const auto& p : params) rows.push_back(simulate(p));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SpectralConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  }

  if (options.format == Format::Machine) {
    emit(out, simulation_report(rows));
    return kSuccess;
  }
  out << std::setw(4) << "n" << std::setw(7) << "Den" << std::setw(10) << "rho" << std::setw(8)
      << "Per" << std::setw(8) << "Ite" << std::setw(7) << "Blks" << std::setw(12) << "Res"
      << std::setw(9) << "TolCpu" << "\n";
  for (const auto& r : rows) {
    out << std::setw(4) << r.n << std::setw(7) << fixed(r.density, 2) << std::setw(10)
        << fixed(r.mean_rho, 3) << std::setw(8) << fixed(r.percent_weakly_irreducible, 2)
        << std::setw(8) << fixed(r.mean_iterations, 2) << std::setw(7) << fixed(r.mean_blocks, 2)
        << std::setw(12) << sci(r.mean_residual, 4) << std::setw(9) << fixed(r.wall_time, 2)
        << "\n";
  }
  return kSuccess;
}

int run_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  Tensor t = Tensor::zero(2, 1);
  try {
    t = load(options.file);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  json j;
  j["command"] = "oracle";
  try {
    const auto reducible = oracle::reducible_bruteforce(t);
    const auto weak = oracle::weakly_reducible_bruteforce(t);
    j["reducible"] = subset_json(reducible);
    j["weakly_reducible"] = subset_json(weak);
    json blocks = json::array();
    for (const auto& b : oracle::dense_blocks(oracle::dense_representation(t))) {
      blocks.push_back(one_based(b));
    }
    j["dense_blocks"] = blocks;
    if (!weak.reducible && t.dim() <= oracle::kMaxGridDim && options.grid >= t.dim()) {
      const auto grid = oracle::cw_grid(t, options.grid);
      j["cw_grid"] = {{"resolution", options.grid},
                      {"lower_bound", grid.lower_bound},
                      {"point", grid.point},
                      {"work", grid.work}};
    } else {
      j["cw_grid"] = nullptr;
    }
    if (t.order() == 2) {
      NonnegativeMatrix m(t.dim());
      for (std::size_t k = 0; k < t.nnz(); ++k) m.set(t.row(k), t.trailing(k)[0], t.value(k));
      const auto ref = oracle::matrix_radius_reference(m);
      j["matrix_radius"] = {{"value", ref.value},
                            {"lower", ref.lower},
                            {"upper", ref.upper},
                            {"iterations", ref.iterations},
                            {"converged", ref.converged}};
    } else {
      j["matrix_radius"] = nullptr;
    }
  } catch (const OracleGuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kGuardExceeded;
  }

  if (options.format == Format::Machine) {
    emit(out, j);
    return kSuccess;
  }
  auto verdict_line = [&](const char* name, const json& v) {
    out << std::left << std::setw(18) << name << std::right
        << (v["verdict"].get<bool>() ? "yes" : "no");
    if (!v["witness"].is_null()) {
      IndexSet s;
      for (const auto& i : v["witness"]) s.push_back(i.get<Index>() - 1);
      out << "  witness " << set_string(s);
    }
    out << "  (" << v["work"].get<std::uint64_t>() << " subsets)\n";
  };
  verdict_line("reducible", j["reducible"]);
  verdict_line("weakly reducible", j["weakly_reducible"]);
  out << std::left << std::setw(18) << "dense blocks" << std::right;
  for (const auto& b : j["dense_blocks"]) {
    IndexSet s;
    for (const auto& i : b) s.push_back(i.get<Index>() - 1);
    out << set_string(s) << " ";
  }
  out << "\n";
  if (!j["cw_grid"].is_null()) {
    out << std::left << std::setw(18) << "grid lower bound" << std::right
        << general(j["cw_grid"]["lower_bound"].get<double>()) << "  (resolution "
        << options.grid << ", " << j["cw_grid"]["work"].get<std::uint64_t>() << " points)\n";
  }
  if (!j["matrix_radius"].is_null()) {
    out << std::left << std::setw(18) << "matrix radius" << std::right
        << general(j["matrix_radius"]["value"].get<double>())
        << (j["matrix_radius"]["converged"].get<bool>() ? "" : "  (not converged)") << "\n";
  }
  return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius and structure of nonnegative tensors", "nntensor"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::Table},
                                              {"machine", Format::Machine}};
  Format format = Format::Table;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: table or machine (JSON)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  ClassifyOptions classify_opts;
  auto* classify_cmd = app.add_subcommand("classify", "Structural classes, M(T), G(T), R(T)");
  classify_cmd->add_option("file", classify_opts.file, "Tensor file")->required();
  add_format(classify_cmd);

  RadiusOptions radius_opts;
  bool no_shift = false;
  const std::map<std::string, StartKind> starts{{"uniform", StartKind::Uniform},
                                                {"random", StartKind::Random}};
  auto* radius_cmd = app.add_subcommand("radius", "Spectral radius via weak partition");
  radius_cmd->add_option("file", radius_opts.file, "Tensor file")->required();
  radius_cmd->add_option("--tol", radius_opts.config.tolerance, "Bracket width tolerance")
      ->default_val(1e-6);
  radius_cmd->add_option("--max-iter", radius_opts.config.max_iterations, "Iteration limit per block")
      ->default_val(10000);
  radius_cmd->add_flag("--no-shift", no_shift, "Iterate on T instead of T + E");
  radius_cmd->add_option("--start", radius_opts.config.start, "Start vector: uniform or random")
      ->transform(CLI::CheckedTransformer(starts, CLI::ignore_case));
  radius_cmd->add_option("--seed", radius_opts.config.seed, "Seed for --start random");
  radius_cmd->add_flag("--trace", radius_opts.trace, "Print per-iteration bounds");
  add_format(radius_cmd);

  PartitionOptions partition_opts;
  const std::map<std::string, PartitionKind> modes{{"weak", PartitionKind::Weak},
                                                   {"strong", PartitionKind::Strong}};
  auto* partition_cmd = app.add_subcommand("partition", "Weakly irreducible or irreducible blocks");
  partition_cmd->add_option("file", partition_opts.file, "Tensor file")->required();
  partition_cmd->add_option("--mode", partition_opts.mode, "weak or strong")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  add_format(partition_cmd);

  SimulateOptions simulate_opts;
  auto* simulate_cmd = app.add_subcommand("simulate", "Random tensor experiment");
  auto& sp = simulate_opts.params;
  simulate_cmd->add_option("--n", sp.n, "Dimension")->default_val(3);
  simulate_cmd->add_option("--order", sp.order, "Order")->default_val(3);
  simulate_cmd->add_option("--density", sp.density, "Probability of a nonzero entry")
      ->default_val(0.5);
  simulate_cmd->add_option("--trials", sp.trials, "Tensors per row")->default_val(50);
  simulate_cmd->add_option("--seed", sp.seed, "Base seed; trial i uses seed + i")->default_val(1);
  simulate_cmd->add_option("--tol", sp.tolerance, "Bracket width tolerance")->default_val(1e-6);
  simulate_cmd->add_option("--max-iter", sp.max_iterations, "Iteration limit per block")
      ->default_val(10000);
  simulate_cmd->add_option("--threads", sp.threads, "Worker threads (0 = all cores)")
      ->default_val(1);
  simulate_cmd->add_flag("--sweep", simulate_opts.sweep,
                         "Run all 23 (n, density) rows of the reference experiment");
  add_format(simulate_cmd);

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference checks");
  oracle_cmd->add_option("file", oracle_opts.file, "Tensor file")->required();
  oracle_cmd->add_option("--grid", oracle_opts.grid, "Simplex grid resolution")->default_val(200);
  add_format(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (*classify_cmd) {
    classify_opts.format = format;
    return run_classify(classify_opts, out, err);
  }
  if (*radius_cmd) {
    radius_opts.format = format;
    radius_opts.config.shift = !no_shift;
    return run_radius(radius_opts, out, err);
  }
  if (*partition_cmd) {
    partition_opts.format = format;
    return run_partition(partition_opts, out, err);
  }
  if (*simulate_cmd) {
    simulate_opts.format = format;
    return run_simulate(simulate_opts, out, err);
  }
  oracle_opts.format = format;
  return run_oracle(oracle_opts, out, err);
}

}  // namespace nonneg::cli
