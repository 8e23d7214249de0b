#include "pareto/datasets.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <system_error>

namespace pareto {

namespace {

void validate(const GeneratorSpec& spec) {
  if (spec.objectives < 2) {
    throw std::invalid_argument("need at least 2 objectives");
  }
  if (spec.value_max < 1) {
    throw std::invalid_argument("value_max must be positive");
  }
  if (!(spec.epsilon > 0.0 && spec.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1]");
  }
  if (spec.shape == StreamShape::Clustered &&
      spec.points != spec.clusters * spec.cluster_size) {
    throw std::invalid_argument(
        "clustered stream needs points == clusters * cluster_size");
  }
}

// Unbiased draw from [0, bound), stable across standard libraries (the
// distribution classes are not).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Point> sample_shell(std::size_t count, const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Point> out;
  out.reserve(count);
  Point candidate(spec.objectives);
  while (out.size() < count) {
    for (std::size_t k = 0; k < spec.objectives; ++k) {
      candidate[k] = static_cast<double>(
          bounded(rng, static_cast<std::uint64_t>(spec.value_max) + 1));
    }
    if (inside_shell(candidate, spec.value_max, spec.epsilon)) {
      out.push_back(candidate);
    }
  }
  return out;
}

double distance_sq(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return sum;
}

void append_value(std::string& line, double v) {
  char buffer[32];
  if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
    auto res = std::to_chars(buffer, buffer + sizeof buffer,
                             static_cast<long long>(v));
    line.append(buffer, res.ptr);
  } else {
    auto res = std::to_chars(buffer, buffer + sizeof buffer, v);
    line.append(buffer, res.ptr);
  }
}

}  // namespace

bool inside_shell(const Point& candidate, std::int64_t value_max,
                  double epsilon) {
  double vmax = static_cast<double>(value_max);
  double sum = 0.0;
  for (double y : candidate) {
    double diff = vmax - y;
    sum += diff * diff;
  }
  double outer = vmax * vmax;
  return sum >= (1.0 - epsilon) * outer && sum <= outer;
}

PointStream gen_convex(const GeneratorSpec& spec) {
  validate(spec);
  PointStream stream;
  stream.objectives = spec.objectives;
  stream.points = sample_shell(spec.points, spec);
  stream.spec = spec;
  return stream;
}

PointStream gen_nonconvex(const GeneratorSpec& spec) {
  PointStream stream = gen_convex(spec);
  for (auto& p : stream.points) {
    for (auto& v : p) v = v == 0.0 ? 0.0 : -v;
  }
  stream.spec = spec;
  return stream;
}

PointStream gen_clustered(const GeneratorSpec& spec) {
  validate(spec);
  std::vector<Point> pool = sample_shell(2 * spec.points, spec);
  std::mt19937_64 picker(mix(spec.seed ^ 0xc1a5'7e2dULL));

  PointStream stream;
  stream.objectives = spec.objectives;
  stream.points.reserve(spec.points);
  std::vector<std::uint32_t> remaining(pool.size());
  for (std::uint32_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::vector<std::pair<double, std::uint32_t>> ranked;
  for (std::size_t c = 0; c < spec.clusters; ++c) {
    std::size_t pick = bounded(picker, remaining.size());
    std::uint32_t center = remaining[pick];

    ranked.clear();
    for (std::uint32_t id : remaining) {
      if (id == center) continue;
      ranked.emplace_back(distance_sq(pool[center], pool[id]), id);
    }
    std::size_t take = spec.cluster_size - 1;
    std::partial_sort(ranked.begin(),
                      ranked.begin() + static_cast<std::ptrdiff_t>(take),
                      ranked.end());  // ties resolved by lower pool index

    stream.points.push_back(pool[center]);
    std::vector<char> taken(pool.size(), 0);
    taken[center] = 1;
    for (std::size_t i = 0; i < take; ++i) {
      stream.points.push_back(pool[ranked[i].second]);
      taken[ranked[i].second] = 1;
    }
    remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                   [&](std::uint32_t id) { return taken[id]; }),
                    remaining.end());
  }
  stream.spec = spec;
  return stream;
}

PointStream generate(const GeneratorSpec& spec) {
  switch (spec.shape) {
    case StreamShape::Convex:
      return gen_convex(spec);
    case StreamShape::NonConvex:
      return gen_nonconvex(spec);
    case StreamShape::Clustered:
      return gen_clustered(spec);
  }
  throw std::invalid_argument("unknown stream shape");
}

void write_stream(const PointStream& stream,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  std::string line;
  line.reserve(64);
  line.clear();
  append_value(line, static_cast<double>(stream.objectives));
  line.push_back(' ');
  append_value(line, static_cast<double>(stream.points.size()));
  line.push_back('\n');
  out << line;
  for (const auto& p : stream.points) {
    assert(p.size() == stream.objectives);
    line.clear();
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k != 0) line.push_back(' ');
      append_value(line, p[k]);
    }
    line.push_back('\n');
    out << line;
  }
  if (!out) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t space = line.find(' ', pos);
    if (space == std::string_view::npos) space = line.size();
    fields.push_back(line.substr(pos, space - pos));
    pos = space + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line_number, const std::string& what) {
  throw StreamParseError("line " + std::to_string(line_number) + ": " + what);
}

double parse_coordinate(std::string_view field, std::size_t line_number) {
  double value = 0.0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    fail(line_number, "expected a number, got \"" + std::string(field) + "\"");
  }
  if (!std::isfinite(value)) {
    fail(line_number, "coordinate is not finite");
  }
  return value;
}

}  // namespace

PointStream read_stream(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw StreamParseError("cannot open " + path.string());
  }
  std::string line;
  std::size_t line_number = 1;
  if (!std::getline(in, line)) {
    fail(line_number, "missing header");
  }
  auto header = split_fields(line);
  if (header.size() != 2) {
    fail(line_number, "header must be \"objectives count\"");
  }
  std::uint64_t objectives = 0;
  std::uint64_t count = 0;
  auto parse_u64 = [&](std::string_view field, std::uint64_t& out) {
    auto res = std::from_chars(field.data(), field.data() + field.size(), out);
    return res.ec == std::errc{} && res.ptr == field.data() + field.size();
  };
  if (!parse_u64(header[0], objectives) || !parse_u64(header[1], count)) {
    fail(line_number, "header must be \"objectives count\"");
  }
  if (objectives < 2) {
    fail(line_number, "need at least 2 objectives");
  }

  PointStream stream;
  stream.objectives = objectives;
  stream.points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    ++line_number;
    if (!std::getline(in, line)) {
      fail(line_number, "expected " + std::to_string(count) +
                            " points, file ends after " + std::to_string(i));
    }
    auto fields = split_fields(line);
    if (fields.size() != objectives) {
      fail(line_number, "expected " + std::to_string(objectives) +
                            " values, got " + std::to_string(fields.size()));
    }
    Point p(objectives);
    for (std::size_t k = 0; k < objectives; ++k) {
      p[k] = parse_coordinate(fields[k], line_number);
    }
    stream.points.push_back(std::move(p));
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty()) {
      fail(line_number, "unexpected content after the last point");
    }
  }
  return stream;
}

}  // namespace pareto
