// graphforge command-line tool.
//
// Exit codes: 0 success, 1 unexpected error, 2 invalid input or missing
// file, 3 generation failure, 4 degenerate statistic.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "graphforge/graphforge.hpp"

namespace gf = graphforge;
namespace io = graphforge::io;
namespace fs = std::filesystem;

namespace {

int exit_code_for(gf::ErrorCode code) {
  switch (code) {
    case gf::ErrorCode::kGenerationFailed:
    case gf::ErrorCode::kInfeasibleParams:
    case gf::ErrorCode::kInfeasibleSplit:
      return 3;
    case gf::ErrorCode::kDegenerateSequence:
    case gf::ErrorCode::kDegenerateGraph:
    case gf::ErrorCode::kDegenerateSample:
    case gf::ErrorCode::kUndefinedAuc:
      return 4;
    default:
      return 2;
  }
}

// GRAPHFORGE_SEED wins over --seed.
std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("GRAPHFORGE_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    return io::parse_int<std::uint64_t>(s);
  } catch (const gf::Error&) {
    throw gf::Error(gf::ErrorCode::kInvalidParams, "GRAPHFORGE_SEED is not an integer");
  }
}

io::Json read_config(const std::string& path) {
  if (!fs::exists(path)) throw gf::Error(gf::ErrorCode::kIoError, "no such file: " + path);
  return io::parse_json(io::read_file(path), path);
}

std::string bundle_name(const gf::ResultRow& row) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%06llu", row.generator.c_str(),
                static_cast<unsigned long long>(row.sample_index));
  return buf;
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

struct GenerateArgs {
  std::string generator;
  std::string config;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  io::Json j = a.config.empty() ? io::Json::object() : read_config(a.config);
  std::string name = a.generator;
  if (name.empty()) {
    if (!j.is_object() || !j.contains("generator") || !j["generator"].is_string()) {
      throw gf::Error(gf::ErrorCode::kInvalidParams, "--generator is required");
    }
    name = j["generator"].get<std::string>();
  }
  const gf::DatasetConfig cfg = io::parse_dataset_config(j, gf::parse_generator(name));
  const std::uint64_t seed = env_seed().value_or(a.seed);
  const gf::GeneratedDataset d = gf::build_dataset(cfg, seed, a.sample_index);
  io::export_bundle(d, a.out);
  std::cerr << "wrote " << a.out << ": n=" << d.graph.num_nodes()
            << " edges=" << d.graph.num_edges() << " communities=" << d.communities.num_communities()
            << "\n";
  return 0;
}

struct SweepArgs {
  std::string config;
  std::string out;
  std::string datasets_dir;
  std::size_t workers = 1;
  bool resume = false;
  std::optional<std::uint64_t> seed;
};

int cmd_sweep(const SweepArgs& a) {
  gf::SweepConfig cfg = io::parse_sweep_config(read_config(a.config));
  if (a.seed) cfg.master_seed = *a.seed;
  if (auto s = env_seed()) cfg.master_seed = *s;
  if (!a.datasets_dir.empty()) cfg.export_datasets = true;
  const fs::path datasets_dir = a.datasets_dir.empty() ? fs::path(a.out).parent_path() / "datasets"
                                                       : fs::path(a.datasets_dir);

  std::size_t start = 0;
  if (a.resume && fs::exists(a.out)) {
    const std::string text = io::read_file(a.out);
    const io::ResumePoint point = io::find_resume_point(text, cfg);
    if (point.byte_offset == 0) {
      io::write_file(a.out, io::results_header(cfg) + "\n");
    } else {
      fs::resize_file(a.out, point.byte_offset);
    }
    start = point.rows;
    std::cerr << "resuming at row " << start << "\n";
  } else {
    io::write_file(a.out, io::results_header(cfg) + "\n");
  }

  std::ofstream out(a.out, std::ios::binary | std::ios::app);
  if (!out) throw gf::Error(gf::ErrorCode::kIoError, "cannot append to " + a.out);

  gf::SweepHooks hooks;
  std::size_t failures = 0;
  hooks.on_row = [&](const gf::ResultRow& row) {
    if (!row.ok) ++failures;
    out << io::row_to_line(row) << '\n';
    out.flush();
    if (!out) throw gf::Error(gf::ErrorCode::kIoError, "write failed for " + a.out);
  };
  if (cfg.export_datasets) {
    hooks.on_dataset = [&](const gf::ResultRow& row, const gf::GeneratedDataset& d) {
      io::export_bundle(d, datasets_dir / bundle_name(row));
    };
  }
  const std::size_t total = gf::run_sweep(cfg, hooks, a.workers, start);
  std::cerr << "wrote " << total - start << " rows to " << a.out << " (" << failures
            << " failed)\n";
  return 0;
}

int cmd_metrics(const std::string& dataset, const std::string& out) {
  const gf::GeneratedDataset d = io::load_bundle(dataset);
  const gf::GraphMetrics m = gf::compute_all(d.graph, d.communities);
  std::string text = "metric,value,error\n";
  const auto values = m.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    text += std::string(gf::GraphMetrics::kNames[i]) + ",";
    if (values[i]->value) text += io::format_double(*values[i]->value);
    text += ",";
    if (values[i]->reason) text += std::string(gf::to_string(*values[i]->reason));
    text += "\n";
  }
  write_output(out, text);
  return 0;
}

int cmd_bench_ppr(const std::string& dataset, double damping, const std::string& out) {
  const gf::GeneratedDataset d = io::load_bundle(dataset);
  gf::PprOptions opt;
  opt.damping = damping;
  const gf::ScoreMatrix s = gf::ppr_classifier(d, opt);
  const gf::AucResult r = gf::roc_auc_ovr(s, d.communities, d.split.test);
  std::string text = "model,macro_auc,undefined_classes\nppr," + io::format_double(r.macro) + "," +
                     std::to_string(r.undefined_classes.size()) + "\n";
  if (r.has_warning()) {
    std::cerr << "warning: " << r.undefined_classes.size()
              << " classes have no positives or no negatives in the test set\n";
  }
  write_output(out, text);
  return 0;
}

std::vector<gf::ResultRow> load_rows(const std::string& input) {
  if (!fs::exists(input)) throw gf::Error(gf::ErrorCode::kIoError, "no such file: " + input);
  return io::load_results(input).rows;
}

int cmd_kde(const std::string& input, const std::string& metric, const std::string& out) {
  const auto rows = load_rows(input);
  std::vector<std::string> skipped;
  const auto curves = gf::kde_by_generator(rows, metric, &skipped);
  for (const auto& g : skipped) {
    std::cerr << "warning: " << g << " has fewer than two distinct values of " << metric
              << "; skipped\n";
  }
  write_output(out, io::kde_csv(curves));
  return 0;
}

int cmd_curves(const std::string& input, const std::string& metric, const std::string& model,
               std::size_t buckets, const std::string& out) {
  const auto rows = load_rows(input);
  write_output(out, io::curves_csv(gf::performance_curves(rows, metric, model, buckets)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic graph dataset generation and benchmarking"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate one dataset bundle");
  generate->add_option("--generator", gen.generator, "sbm, cabam, or lfr");
  generate->add_option("--config", gen.config, "JSON parameter file");
  generate->add_option("--seed", gen.seed, "Seed (GRAPHFORGE_SEED overrides)");
  generate->add_option("--sample-index", gen.sample_index, "Sample index");
  generate->add_option("--out", gen.out, "Output directory")->required();

  SweepArgs sw;
  std::uint64_t sweep_seed = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--config", sw.config, "JSON sweep config")->required();
  sweep->add_option("--out", sw.out, "Results file (JSON lines)")->required();
  sweep->add_option("--datasets-dir", sw.datasets_dir, "Export one bundle per sample here");
  sweep->add_option("--workers", sw.workers, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--resume", sw.resume, "Continue an interrupted results file");
  auto* seed_opt = sweep->add_option("--seed", sweep_seed, "Master seed override");

  std::string dataset;
  std::string out;
  auto* metrics = app.add_subcommand("metrics", "Graph statistics of a bundle");
  metrics->add_option("--dataset", dataset, "Bundle directory")->required();
  metrics->add_option("--out", out, "CSV output (default stdout)");

  double damping = 0.85;
  auto* bench = app.add_subcommand("bench-ppr", "PPR baseline ROC-AUC on a bundle");
  bench->add_option("--dataset", dataset, "Bundle directory")->required();
  bench->add_option("--damping", damping, "PageRank damping");
  bench->add_option("--out", out, "CSV output (default stdout)");

  std::string input;
  std::string metric;
  std::string model;
  std::size_t buckets = 20;
  auto* kde = app.add_subcommand("kde", "Per-generator density of a metric");
  kde->add_option("--input", input, "Results file")->required();
  kde->add_option("--metric", metric, "Metric or parameter name")->required();
  kde->add_option("--out", out, "CSV output (default stdout)");

  auto* curves = app.add_subcommand("curves", "Mean model AUC against a metric");
  curves->add_option("--input", input, "Results file")->required();
  curves->add_option("--metric", metric, "Metric or parameter name")->required();
  curves->add_option("--model", model, "Model name in the scores")->required();
  curves->add_option("--buckets", buckets, "Number of buckets")->check(CLI::PositiveNumber);
  curves->add_option("--out", out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*sweep) {
      if (*seed_opt) sw.seed = sweep_seed;
      return cmd_sweep(sw);
    }
    if (*metrics) return cmd_metrics(dataset, out);
    if (*bench) return cmd_bench_ppr(dataset, damping, out);
    if (*kde) return cmd_kde(input, metric, out);
    if (*curves) return cmd_curves(input, metric, model, buckets, out);
  } catch (const gf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
