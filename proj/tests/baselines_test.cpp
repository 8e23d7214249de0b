#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "pareto/linear_list.hpp"
#include "pareto/mfront.hpp"
#include "pareto/quad_tree.hpp"
#include "pareto/sorted_list.hpp"

using pareto::ComparisonCounter;
using pareto::Point;

namespace {

template <typename A>
void feed(A& archive, const std::vector<Point>& stream) {
  for (const auto& y : stream) archive.update(y);
}

}  // namespace

TEST_CASE("linear list scans the whole archive for a non-dominated candidate") {
  ComparisonCounter c;
  pareto::LinearListArchive list(c);
  CHECK(list.update({0, 9}).accepted);
  feed(list, {{1, 8}, {2, 7}});
  REQUIRE(list.size() == 3);

  auto base = c.count;
  CHECK(list.update({3, 6}).accepted);
  CHECK(c.count - base == 3);

  // The scan stops at the first coverer instead.
  base = c.count;
  CHECK_FALSE(list.update({1, 8}).accepted);
  CHECK(c.count - base == 2);
}

TEST_CASE("linear list evicts every dominated member") {
  ComparisonCounter c;
  pareto::LinearListArchive list(c);
  feed(list, {{1, 1, 1}, {0, 2, 2}, {2, 2, 0}});
  auto outcome = list.update({1, 1, 0});
  CHECK(outcome.accepted);
  CHECK(oracle::same_set(outcome.evicted, {{1, 1, 1}, {2, 2, 0}}));
  CHECK(oracle::same_set(list.points(), {{1, 1, 0}, {0, 2, 2}}));
}

TEST_CASE("sorted list splices the candidate into position") {
  ComparisonCounter c;
  pareto::SortedListArchive list(c);
  feed(list, {{1, 5}, {3, 3}, {5, 1}});
  auto outcome = list.update({2, 2});
  CHECK(outcome.accepted);
  CHECK(oracle::same_set(outcome.evicted, {{3, 3}}));
  // points() exposes storage order: ascending first objective.
  CHECK(list.points() == std::vector<Point>{{1, 5}, {2, 2}, {5, 1}});
}

TEST_CASE("sorted list rejects on the predecessor check") {
  ComparisonCounter c;
  pareto::SortedListArchive list(c);
  CHECK(list.update({1, 5}).accepted);
  CHECK_FALSE(list.update({2, 6}).accepted);
  CHECK(list.points() == std::vector<Point>{{1, 5}});
}

TEST_CASE("sorted list resolves equal first objectives by coverage") {
  ComparisonCounter c;
  pareto::SortedListArchive list(c);
  CHECK(list.update({2, 5}).accepted);

  SUBCASE("better second objective evicts the incumbent") {
    auto outcome = list.update({2, 4});
    CHECK(outcome.accepted);
    CHECK(oracle::same_set(outcome.evicted, {{2, 5}}));
    CHECK(list.points() == std::vector<Point>{{2, 4}});
  }
  SUBCASE("worse second objective is rejected") {
    CHECK_FALSE(list.update({2, 6}).accepted);
  }
  SUBCASE("exact duplicate is rejected") {
    CHECK_FALSE(list.update({2, 5}).accepted);
    CHECK(list.size() == 1);
  }
}

TEST_CASE("sorted list refuses dimensions other than two") {
  ComparisonCounter c;
  pareto::SortedListArchive list(c);
  CHECK_THROWS_AS(list.update({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("sorted list stays bi-sorted through random updates") {
  ComparisonCounter c;
  pareto::SortedListArchive list(c);
  auto stream = oracle::random_stream(21, 600, 2, 32);
  for (const auto& y : stream) {
    list.update(y);
    auto points = list.points();
    for (std::size_t i = 1; i < points.size(); ++i) {
      REQUIRE(points[i - 1][0] < points[i][0]);
      REQUIRE(points[i - 1][1] > points[i][1]);
    }
  }
  CHECK(oracle::same_set(list.points(), oracle::non_dominated(stream)));
}

TEST_CASE("quad tree roots the first point") {
  ComparisonCounter c;
  pareto::QuadTreeArchive tree(c);
  CHECK(tree.update({5, 5}).accepted);
  REQUIRE(tree.root() != nullptr);
  CHECK(tree.root()->point == Point{5, 5});

  // All-ones successorship vector against the root: covered, one comparison.
  auto base = c.count;
  CHECK_FALSE(tree.update({6, 6}).accepted);
  CHECK(c.count - base == 1);
}

namespace {

void check_masks(const pareto::QuadTreeArchive::Node& node, std::size_t p) {
  const std::uint32_t full = (p == 32) ? 0xffffffffu : ((1u << p) - 1);
  for (const auto& [mask, child] : node.children) {
    REQUIRE(mask != 0);
    REQUIRE(mask != full);
    std::uint32_t recomputed = 0;
    for (std::size_t k = 0; k < p; ++k) {
      if (child->point[k] >= node.point[k]) recomputed |= 1u << k;
    }
    REQUIRE(mask == recomputed);
    check_masks(*child, p);
  }
}

}  // namespace

TEST_CASE("quad tree child masks are exact and never degenerate") {
  ComparisonCounter c;
  pareto::QuadTreeArchive tree(c);
  auto stream = oracle::random_stream(31, 1000, 3, 24);
  for (const auto& y : stream) {
    auto before = tree.size();
    auto outcome = tree.update(y);
    if (!outcome.accepted) CHECK(tree.size() == before);
    for (const auto& gone : outcome.evicted) {
      CHECK(oracle::strictly_dominates(y, gone));
    }
  }
  REQUIRE(tree.root() != nullptr);
  check_masks(*tree.root(), 3);
  CHECK(oracle::same_set(tree.points(), oracle::non_dominated(stream)));
}

TEST_CASE("mfront rejects a duplicate through the zero-width interval") {
  ComparisonCounter c;
  pareto::MFrontArchive front(c);
  CHECK(front.update({3, 4, 5}).accepted);
  auto outcome = front.update({3, 4, 5});
  CHECK_FALSE(outcome.accepted);
  CHECK(outcome.evicted.empty());
  CHECK(front.size() == 1);
}

TEST_CASE("reference lookup returns a nearby archive member") {
  ComparisonCounter c;
  pareto::MFrontArchive front(c);
  front.update({7, 7});
  CHECK(front.approx_nearest({0, 0}) == Point{7, 7});

  front.update({0, 14});
  front.update({14, 0});
  // {(7,7),(0,14),(14,0)}: the budget of four distance evaluations is enough
  // to land on the true nearest here.
  CHECK(front.approx_nearest({6, 8}) == Point{7, 7});
}

TEST_CASE("reference lookup on two spread points picks the closer one") {
  ComparisonCounter c;
  pareto::MFrontArchive front(c);
  front.update({0, 0});
  // (10,10) would dominate nothing here; use an incomparable pair.
  front.update({10, -1});
  CHECK(front.approx_nearest({1, 1}) == Point{0, 0});
}

TEST_CASE("mfront indexes stay sorted permutations of the archive") {
  ComparisonCounter c;
  pareto::MFrontArchive front(c);
  auto stream = oracle::random_stream(41, 400, 3, 16);
  for (const auto& y : stream) {
    front.update(y);
    auto members = oracle::sorted(front.points());
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& idx = front.objective_index(k);
      REQUIRE(idx.size() == front.size());
      std::vector<Point> via_index;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) REQUIRE(idx[i - 1].key <= idx[i].key);
        REQUIRE(front.live(idx[i].id));
        REQUIRE(front.pool_point(idx[i].id)[k] == idx[i].key);
        via_index.push_back(front.pool_point(idx[i].id));
      }
      REQUIRE(oracle::sorted(via_index) == members);
    }
    // The reference point must always be a live member.
    auto ref = front.approx_nearest(y);
    bool member = false;
    for (const auto& z : front.points()) member = member || z == ref;
    REQUIRE(member);
  }
}

TEST_CASE("all backends keep the same non-dominated set") {
  for (std::size_t p : {2u, 3u, 4u}) {
    for (std::uint64_t grid : {5u, 40u}) {
      auto stream = oracle::random_stream(900 + p + grid, 800, p, grid);
      auto expected = oracle::non_dominated(stream);

      ComparisonCounter c;
      pareto::LinearListArchive list(c);
      pareto::QuadTreeArchive quad(c);
      pareto::MFrontArchive front(c);
      feed(list, stream);
      feed(quad, stream);
      feed(front, stream);
      CHECK(oracle::same_set(list.points(), expected));
      CHECK(oracle::same_set(quad.points(), expected));
      CHECK(oracle::same_set(front.points(), expected));
      CHECK(list.size() == expected.size());
      CHECK(quad.size() == expected.size());
      CHECK(front.size() == expected.size());

      if (p == 2) {
        pareto::SortedListArchive sorted(c);
        feed(sorted, stream);
        CHECK(oracle::same_set(sorted.points(), expected));
      }
    }
  }
}

TEST_CASE("re-offering archived points is a no-op for every backend") {
  auto stream = oracle::random_stream(55, 300, 3, 10);
  ComparisonCounter c;
  pareto::QuadTreeArchive quad(c);
  pareto::MFrontArchive front(c);
  feed(quad, stream);
  feed(front, stream);
  for (const auto& y : quad.points()) {
    auto outcome = quad.update(y);
    CHECK_FALSE(outcome.accepted);
    CHECK(outcome.evicted.empty());
  }
  for (const auto& y : front.points()) {
    auto outcome = front.update(y);
    CHECK_FALSE(outcome.accepted);
    CHECK(outcome.evicted.empty());
  }
}
