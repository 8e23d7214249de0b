#include "pareto/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <thread>

#include "pareto/linear_list.hpp"

namespace pareto {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

// Fisher-Yates with our own bounded draw; std::shuffle sequences differ
// between standard libraries.
void shuffle_points(std::vector<Point>& points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = points.size(); i > 1; --i) {
    std::size_t j = bounded(rng, i);
    std::swap(points[i - 1], points[j]);
  }
}

std::vector<Point> sorted_set(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  return points;
}

RunMetrics run_one(Backend kind, const PointStream& stream,
                   const RunConfig& config, int repetition) {
  using clock = std::chrono::steady_clock;

  std::vector<Point> points = stream.points;
  if (config.shuffle) {
    shuffle_points(points, mix(config.seed + static_cast<std::uint64_t>(
                                                 repetition)));
  }
  bool trace =
      config.trace_per_insert.value_or(points.size() <= 10000);

  RunMetrics m;
  m.backend = std::string(backend_name(kind));
  if (stream.spec.has_value()) {
    switch (stream.spec->shape) {
      case StreamShape::Convex: m.shape = "convex"; break;
      case StreamShape::NonConvex: m.shape = "nonconvex"; break;
      case StreamShape::Clustered: m.shape = "clustered"; break;
    }
    m.epsilon = stream.spec->epsilon;
  } else {
    m.shape = "file";
  }
  m.objectives = stream.objectives;
  m.points = points.size();
  m.seed = config.seed;
  m.repetition = repetition;
  if (trace) m.per_insert_comparisons.reserve(points.size());

  ComparisonCounter counter;
  auto archive = make_archive(kind, counter, config.tree_config);
  const auto start = clock::now();
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint64_t before = counter.count;
    archive->update(points[i]);
    if (trace) m.per_insert_comparisons.push_back(counter.count - before);
    if (config.checkpoint_every != 0 &&
        (i + 1) % config.checkpoint_every == 0 && i + 1 != points.size()) {
      auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                         clock::now() - start)
                         .count();
      m.checkpoints.push_back(
          {i + 1, static_cast<std::uint64_t>(elapsed), counter.count});
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                     clock::now() - start)
                     .count();
  m.wall_time_ns = static_cast<std::uint64_t>(elapsed);
  m.checkpoints.push_back({points.size(), m.wall_time_ns, counter.count});
  m.total_comparisons = counter.count;
  m.mean_comparisons_per_insert =
      points.empty() ? 0.0
                     : static_cast<double>(counter.count) /
                           static_cast<double>(points.size());
  m.final_archive_size = archive->size();

  if (config.verify) {
    ComparisonCounter scratch;
    LinearListArchive reference(scratch);
    for (const auto& p : points) reference.update(p);
    if (sorted_set(archive->points()) != sorted_set(reference.points())) {
      throw VerificationError("backend " + m.backend + " repetition " +
                              std::to_string(repetition) +
                              " disagrees with the linear list reference");
    }
  }
  return m;
}

}  // namespace

std::vector<RunMetrics> run_stream(Backend kind, const PointStream& stream,
                                   const RunConfig& config) {
  if (config.repetitions < 1) {
    throw std::invalid_argument("need at least one repetition");
  }
  if (kind == Backend::SortedList && stream.objectives != 2) {
    throw std::invalid_argument(
        "sorted list archive supports exactly 2 objectives");
  }
  if (kind == Backend::QuadTree && stream.objectives > 32) {
    throw std::invalid_argument("quad tree archive supports at most 32 "
                                "objectives");
  }
  if (kind == Backend::NdTree) {
    // Fail bad tree configs before burning any work.
    std::size_t children = config.tree_config.max_children != 0
                               ? config.tree_config.max_children
                               : stream.objectives + 1;
    if (children < 2 || config.tree_config.max_leaf_size + 1 < children) {
      throw std::invalid_argument(
          "tree config needs max_children >= 2 and max_leaf_size >= "
          "max_children - 1");
    }
  }

  std::vector<RunMetrics> results(static_cast<std::size_t>(config.repetitions));
  if (config.parallel_workers > 1 && config.repetitions > 1) {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        int rep = next.fetch_add(1);
        if (rep >= config.repetitions) return;
        results[static_cast<std::size_t>(rep)] =
            run_one(kind, stream, config, rep);
        results[static_cast<std::size_t>(rep)].contended_timing = true;
      }
    };
    unsigned count = std::min<unsigned>(config.parallel_workers,
                                        static_cast<unsigned>(config.repetitions));
    std::vector<std::thread> threads;
    threads.reserve(count);
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  } else {
    for (int rep = 0; rep < config.repetitions; ++rep) {
      results[static_cast<std::size_t>(rep)] =
          run_one(kind, stream, config, rep);
    }
  }
  return results;
}

namespace {

void append_double(std::string& out, double v) {
  char buffer[32];
  if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
    auto res = std::to_chars(buffer, buffer + sizeof buffer,
                             static_cast<long long>(v));
    out.append(buffer, res.ptr);
  } else {
    auto res = std::to_chars(buffer, buffer + sizeof buffer, v);
    out.append(buffer, res.ptr);
  }
}

}  // namespace

std::string csv_header() {
  return "backend,shape,p,n,epsilon,seed,repetition,total_comparisons,"
         "mean_comparisons_per_insert,wall_time_ns,final_archive_size";
}

std::string csv_row(const RunMetrics& m) {
  std::string row;
  row += m.backend;
  row += ',';
  row += m.shape;
  row += ',';
  row += std::to_string(m.objectives);
  row += ',';
  row += std::to_string(m.points);
  row += ',';
  append_double(row, m.epsilon);
  row += ',';
  row += std::to_string(m.seed);
  row += ',';
  row += std::to_string(m.repetition);
  row += ',';
  row += std::to_string(m.total_comparisons);
  row += ',';
  append_double(row, m.mean_comparisons_per_insert);
  row += ',';
  row += std::to_string(m.wall_time_ns);
  row += ',';
  row += std::to_string(m.final_archive_size);
  return row;
}

void write_csv(const std::vector<RunMetrics>& metrics,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << csv_header() << '\n';
  for (const auto& m : metrics) out << csv_row(m) << '\n';
  if (!out) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

}  // namespace pareto
