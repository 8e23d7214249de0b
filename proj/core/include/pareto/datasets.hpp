#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "pareto/core.hpp"

namespace pareto {

enum class StreamShape { Convex, NonConvex, Clustered };

// Recipe for a synthetic objective stream. Generation is a pure function of
// the spec: same spec, same bytes.
struct GeneratorSpec {
  StreamShape shape = StreamShape::Convex;
  std::size_t points = 100000;           // n
  std::size_t objectives = 2;            // p
  std::int64_t value_max = 10000;        // coordinates drawn from {0..value_max}
  double epsilon = 0.1;                  // shell thickness, in (0, 1]
  std::uint64_t seed = 0;
  std::size_t clusters = 100;            // clustered shape only
  std::size_t cluster_size = 1000;       // clustered shape only
};

struct PointStream {
  std::size_t objectives = 0;
  std::vector<Point> points;
  std::optional<GeneratorSpec> spec;  // present when generated in-process
};

// Membership test for the convex shell: distance from the all-max corner
// falls in [sqrt(1-epsilon), 1] times value_max.
bool inside_shell(const Point& candidate, std::int64_t value_max,
                  double epsilon);

// Integer points rejection-sampled from the shell; smaller epsilon means a
// thinner shell and a harder stream (more mutually non-dominated points).
PointStream gen_convex(const GeneratorSpec& spec);

// The convex stream mirrored through the origin, turning the boundary
// non-convex.
PointStream gen_nonconvex(const GeneratorSpec& spec);

// clusters * cluster_size points taken from a 2n convex pool: repeatedly pick
// a random remaining point and pull in its cluster_size - 1 nearest remaining
// neighbors. Requires points == clusters * cluster_size.
PointStream gen_clustered(const GeneratorSpec& spec);

PointStream generate(const GeneratorSpec& spec);

struct StreamParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format: header "p n", then n lines of p space-separated coordinates.
// Integral values print as plain integers, everything else as the shortest
// decimal that round-trips. LF line ends, no trailing whitespace.
void write_stream(const PointStream& stream, const std::filesystem::path& path);
PointStream read_stream(const std::filesystem::path& path);

}  // namespace pareto
