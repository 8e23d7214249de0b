#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pareto/bench.hpp"
#include "pareto/datasets.hpp"
#include "pareto/nd_tree.hpp"
#include "pareto/nds.hpp"

namespace {

// 0 success, 1 verification or audit failure, 2 usage and input errors.
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

pareto::StreamShape parse_shape(const std::string& name) {
  if (name == "convex") return pareto::StreamShape::Convex;
  if (name == "nonconvex") return pareto::StreamShape::NonConvex;
  if (name == "clustered") return pareto::StreamShape::Clustered;
  throw CLI::ValidationError("--shape",
                             "expected convex, nonconvex or clustered");
}

int cmd_generate(const pareto::GeneratorSpec& spec,
                 const std::filesystem::path& out) {
  pareto::PointStream stream = pareto::generate(spec);
  pareto::write_stream(stream, out);

  pareto::ComparisonCounter counter;
  auto tree = pareto::make_archive(pareto::Backend::NdTree, counter);
  for (const auto& p : stream.points) tree->update(p);
  std::cout << out.string() << ": " << stream.points.size() << " points, p="
            << stream.objectives << ", " << tree->size() << " non-dominated\n";
  return 0;
}

std::vector<pareto::Backend> resolve_backends(const std::string& name,
                                              std::size_t objectives) {
  if (name == "all") {
    std::vector<pareto::Backend> picked;
    for (pareto::Backend b : pareto::all_backends()) {
      if (b == pareto::Backend::SortedList && objectives != 2) continue;
      picked.push_back(b);
    }
    return picked;
  }
  auto parsed = pareto::backend_from_name(name);
  if (!parsed) {
    throw CLI::ValidationError("--backend", "unknown backend " + name);
  }
  return {*parsed};
}

int cmd_bench(const std::filesystem::path& in, const std::string& backend,
              const pareto::RunConfig& config,
              const std::filesystem::path& csv) {
  pareto::PointStream stream = pareto::read_stream(in);
  std::vector<pareto::RunMetrics> rows;
  for (pareto::Backend kind : resolve_backends(backend, stream.objectives)) {
    auto metrics = pareto::run_stream(kind, stream, config);
    double mean_total = 0.0;
    double mean_per_insert = 0.0;
    double mean_ms = 0.0;
    for (const auto& m : metrics) {
      mean_total += static_cast<double>(m.total_comparisons);
      mean_per_insert += m.mean_comparisons_per_insert;
      mean_ms += static_cast<double>(m.wall_time_ns) / 1e6;
    }
    double reps = static_cast<double>(metrics.size());
    std::cout << pareto::backend_name(kind) << ": "
              << mean_total / reps << " comparisons, "
              << mean_per_insert / reps << " per insert, "
              << mean_ms / reps << " ms, archive "
              << metrics.front().final_archive_size << " ("
              << metrics.size() << " reps"
              << (config.verify ? ", verified" : "") << ")\n";
    rows.insert(rows.end(), std::make_move_iterator(metrics.begin()),
                std::make_move_iterator(metrics.end()));
  }
  if (!csv.empty()) pareto::write_csv(rows, csv);
  return 0;
}

int cmd_sort(const std::filesystem::path& in, const std::string& backend,
             const std::filesystem::path& out,
             const pareto::NdTreeConfig& tree_config) {
  pareto::PointStream stream = pareto::read_stream(in);
  pareto::ComparisonCounter counter;
  pareto::FrontAssignment assignment;
  if (backend == "bruteforce") {
    assignment = pareto::brute_force_sort(stream.points, counter);
  } else if (backend == "ndtree") {
    assignment = pareto::nd_sort(stream.points, pareto::Backend::NdTree,
                                 counter, tree_config);
  } else if (backend == "mfront2") {
    assignment = pareto::nd_sort(stream.points, pareto::Backend::MFront2,
                                 counter, tree_config);
  } else {
    throw CLI::ValidationError("--backend",
                               "expected ndtree, mfront2 or bruteforce");
  }

  std::ofstream file(out, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + out.string() + " for writing");
  }
  for (std::size_t i = 0; i < assignment.front_of.size(); ++i) {
    file << i << ' ' << assignment.front_of[i] << '\n';
  }
  if (!file) throw std::runtime_error("write failed for " + out.string());

  std::cout << assignment.fronts.size() << " fronts, " << counter.count
            << " comparisons\n";
  return 0;
}

int cmd_audit(const std::filesystem::path& in,
              const pareto::NdTreeConfig& tree_config,
              std::size_t check_every) {
  pareto::PointStream stream = pareto::read_stream(in);
  pareto::ComparisonCounter counter;
  pareto::NdTreeArchive tree(counter, tree_config);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < stream.points.size(); ++i) {
    tree.update(stream.points[i]);
    if ((i + 1) % check_every == 0 || i + 1 == stream.points.size()) {
      ++checks;
      auto violations = tree.audit();
      if (!violations.empty()) {
        std::cerr << "audit failed after " << (i + 1) << " updates:\n";
        for (const auto& v : violations) std::cerr << "  " << v << '\n';
        return kExitFailedCheck;
      }
    }
  }
  std::cout << checks << " audits clean, archive " << tree.size()
            << ", depth " << tree.depth() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online Pareto archive toolkit"};
  app.require_subcommand(1);

  pareto::GeneratorSpec spec;
  std::string gen_shape = "convex";
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a point stream file");
  generate->add_option("--shape", gen_shape, "convex, nonconvex or clustered")
      ->capture_default_str();
  generate->add_option("--n", spec.points, "number of points")
      ->capture_default_str();
  generate->add_option("--p", spec.objectives, "objectives per point")
      ->capture_default_str();
  generate->add_option("--vmax", spec.value_max, "coordinate upper bound")
      ->capture_default_str();
  generate->add_option("--epsilon", spec.epsilon, "shell thickness in (0, 1]")
      ->capture_default_str();
  generate->add_option("--seed", spec.seed, "generator seed")
      ->capture_default_str();
  generate->add_option("--clusters", spec.clusters, "clustered: cluster count")
      ->capture_default_str();
  generate
      ->add_option("--cluster-size", spec.cluster_size,
                   "clustered: points per cluster")
      ->capture_default_str();
  generate->add_option("--out", gen_out, "output stream file")->required();

  std::string bench_in;
  std::string bench_backend = "ndtree";
  std::string bench_csv;
  pareto::RunConfig run_config;
  auto* bench = app.add_subcommand("bench", "Replay a stream, count and time");
  bench->add_option("--in", bench_in, "input stream file")->required();
  bench
      ->add_option("--backend", bench_backend,
                   "ndtree, list, sortedlist, quadtree, mfront2 or all")
      ->capture_default_str();
  bench->add_option("--reps", run_config.repetitions, "repetitions per backend")
      ->capture_default_str();
  bench->add_flag("--shuffle", run_config.shuffle,
                  "reshuffle the stream each repetition");
  bench->add_flag("--verify", run_config.verify,
                  "replay against the linear list and compare sets");
  bench->add_option("--csv", bench_csv, "write one row per repetition here");
  bench->add_option("--seed", run_config.seed, "shuffle seed")
      ->capture_default_str();
  bench
      ->add_option("--checkpoint-every", run_config.checkpoint_every,
                   "record progress every K updates (0: end only)")
      ->capture_default_str();
  bench
      ->add_option("--parallel", run_config.parallel_workers,
                   "worker threads for repetitions (timings contended)")
      ->capture_default_str();
  bench
      ->add_option("--max-leaf-size", run_config.tree_config.max_leaf_size,
                   "ndtree: points per leaf before splitting")
      ->capture_default_str();
  bench
      ->add_option("--children", run_config.tree_config.max_children,
                   "ndtree: children per split (0: objectives + 1)")
      ->capture_default_str();

  std::string sort_in;
  std::string sort_backend = "ndtree";
  std::string sort_out;
  pareto::NdTreeConfig sort_config;
  auto* sort = app.add_subcommand("sort", "Assign every point to a front");
  sort->add_option("--in", sort_in, "input population file")->required();
  sort->add_option("--backend", sort_backend, "ndtree, mfront2 or bruteforce")
      ->capture_default_str();
  sort->add_option("--out", sort_out, "front assignment output file")
      ->required();
  sort->add_option("--max-leaf-size", sort_config.max_leaf_size,
                   "ndtree: points per leaf before splitting")
      ->capture_default_str();
  sort->add_option("--children", sort_config.max_children,
                   "ndtree: children per split (0: objectives + 1)")
      ->capture_default_str();

  std::string audit_in;
  pareto::NdTreeConfig audit_config;
  std::size_t check_every = 1000;
  auto* audit = app.add_subcommand("audit", "Stream into a tree, check bounds");
  audit->add_option("--in", audit_in, "input stream file")->required();
  audit
      ->add_option("--max-leaf-size", audit_config.max_leaf_size,
                   "points per leaf before splitting")
      ->capture_default_str();
  audit
      ->add_option("--children", audit_config.max_children,
                   "children per split (0: objectives + 1)")
      ->capture_default_str();
  audit->add_option("--check-every", check_every, "updates between audits")
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (generate->parsed()) {
      spec.shape = parse_shape(gen_shape);
      if (spec.shape == pareto::StreamShape::Clustered &&
          spec.points != spec.clusters * spec.cluster_size) {
        throw CLI::ValidationError(
            "--n", "clustered streams need n = clusters * cluster-size");
      }
      return cmd_generate(spec, gen_out);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_in, bench_backend, run_config, bench_csv);
    }
    if (sort->parsed()) {
      return cmd_sort(sort_in, sort_backend, sort_out, sort_config);
    }
    if (audit->parsed()) {
      if (check_every == 0) {
        throw CLI::ValidationError("--check-every", "must be positive");
      }
      return cmd_audit(audit_in, audit_config, check_every);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const pareto::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitFailedCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
