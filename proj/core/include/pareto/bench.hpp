#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "pareto/archive.hpp"
#include "pareto/datasets.hpp"

namespace pareto {

struct Checkpoint {
  std::size_t processed = 0;
  std::uint64_t elapsed_ns = 0;
  std::uint64_t comparisons = 0;
};

// One repetition of one backend over one stream. Comparison counts are exact
// and reproduce for a fixed seed; wall times are whatever the clock said.
struct RunMetrics {
  std::string backend;
  std::string shape;
  std::size_t objectives = 0;
  std::size_t points = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  int repetition = 0;
  std::uint64_t total_comparisons = 0;
  double mean_comparisons_per_insert = 0.0;
  std::uint64_t wall_time_ns = 0;
  std::size_t final_archive_size = 0;
  std::vector<std::uint64_t> per_insert_comparisons;  // empty when not traced
  std::vector<Checkpoint> checkpoints;  // always ends with the full run
  bool contended_timing = false;  // true when repetitions ran concurrently
};

struct RunConfig {
  int repetitions = 10;
  bool shuffle = false;
  std::uint64_t seed = 0;
  bool verify = false;                 // replay against the linear list
  std::size_t checkpoint_every = 0;    // 0: only the final checkpoint
  std::optional<bool> trace_per_insert;  // default: on for n <= 10000
  unsigned parallel_workers = 0;       // 0 or 1: run repetitions serially
  NdTreeConfig tree_config;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Streams every point through a fresh archive once per repetition. Timing
// covers updates only; shuffling (when on) derives a per-repetition order
// from the seed. Incompatible backend and stream dimensions fail up front.
std::vector<RunMetrics> run_stream(Backend kind, const PointStream& stream,
                                   const RunConfig& config);

// Fixed column set, one row per RunMetrics entry:
// backend,shape,p,n,epsilon,seed,repetition,total_comparisons,
// mean_comparisons_per_insert,wall_time_ns,final_archive_size
void write_csv(const std::vector<RunMetrics>& metrics,
               const std::filesystem::path& path);

std::string csv_header();
std::string csv_row(const RunMetrics& m);

}  // namespace pareto
