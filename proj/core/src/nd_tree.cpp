#include "pareto/nd_tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pareto {

namespace {

// Raw coordinate checks for audit paths; deliberately outside the counted
// comparison interface.
bool raw_covers(const Point& u, const Point& v) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return false;
  }
  return true;
}

DominanceOutcome raw_compare(const Point& u, const Point& v) {
  bool u_better = false;
  bool v_better = false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] < v[k]) u_better = true;
    else if (v[k] < u[k]) v_better = true;
    if (u_better && v_better) return DominanceOutcome::Incomparable;
  }
  if (u_better) return DominanceOutcome::Dominates;
  if (v_better) return DominanceOutcome::DominatedBy;
  return DominanceOutcome::Equal;
}

std::unique_ptr<NdTreeArchive::Node> make_leaf(const Point& p,
                                               NdTreeArchive::Node* parent) {
  auto node = std::make_unique<NdTreeArchive::Node>();
  node->ideal = p;
  node->nadir = p;
  node->parent = parent;
  node->points.push_back(p);
  return node;
}

// Widen the bounds of n (and ancestors, while anything changes) to admit p.
void update_ideal_nadir(NdTreeArchive::Node& n, const Point& p) {
  NdTreeArchive::Node* cur = &n;
  while (cur != nullptr) {
    bool changed = false;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] < cur->ideal[k]) {
        cur->ideal[k] = p[k];
        changed = true;
      }
      if (p[k] > cur->nadir[k]) {
        cur->nadir[k] = p[k];
        changed = true;
      }
    }
    if (!changed) break;
    cur = cur->parent;
  }
}

void harvest_points(NdTreeArchive::Node& n, std::vector<Point>& out) {
  if (n.leaf()) {
    for (auto& p : n.points) out.push_back(std::move(p));
    n.points.clear();
    return;
  }
  for (auto& child : n.children) harvest_points(*child, out);
  n.children.clear();
}

void collect_points(const NdTreeArchive::Node& n, std::vector<Point>& out) {
  if (n.leaf()) {
    out.insert(out.end(), n.points.begin(), n.points.end());
    return;
  }
  for (const auto& child : n.children) collect_points(*child, out);
}

double midpoint_distance_sq(const Point& p, const NdTreeArchive::Node& n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    double mid = 0.5 * (n.ideal[k] + n.nadir[k]);
    double diff = p[k] - mid;
    sum += diff * diff;
  }
  return sum;
}

double euclidean(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace

NdTreeArchive::NdTreeArchive(ComparisonCounter& counter, NdTreeConfig config)
    : counter_(&counter), config_(config) {
  if (config_.max_children == 1) {
    throw std::invalid_argument("tree needs at least 2 children per node");
  }
}

void NdTreeArchive::resolve_config(std::size_t dimensions) {
  max_children_ =
      config_.max_children != 0 ? config_.max_children : dimensions + 1;
  if (max_children_ < 2) {
    throw std::invalid_argument("tree needs at least 2 children per node");
  }
  if (config_.max_leaf_size + 1 < max_children_) {
    // A splitting leaf holds max_leaf_size + 1 points and must seed every
    // child with one of them.
    throw std::invalid_argument(
        "max_leaf_size must be at least max_children - 1");
  }
}

UpdateOutcome NdTreeArchive::update(const Point& candidate) {
  UpdateOutcome outcome;
  if (root_ == nullptr) {
    resolve_config(candidate.size());
    root_ = make_leaf(candidate, nullptr);
    size_ = 1;
    outcome.accepted = true;
    return outcome;
  }
  assert(candidate.size() == root_->ideal.size());
  if (!update_node(*root_, candidate, outcome.evicted)) {
    assert(outcome.evicted.empty());
    return outcome;
  }
  size_ -= outcome.evicted.size();
  if (root_->hollow()) {
    root_ = make_leaf(candidate, nullptr);
  } else {
    insert(candidate);
  }
  ++size_;
  outcome.accepted = true;
  return outcome;
}

bool NdTreeArchive::update_node(Node& n, const Point& candidate,
                                std::vector<Point>& evicted) {
  auto vs_nadir = compare(candidate, n.nadir, *counter_);
  if (vs_nadir == DominanceOutcome::DominatedBy ||
      vs_nadir == DominanceOutcome::Equal) {
    // The pessimistic corner covers the candidate, so every point below
    // does too.
    return false;
  }
  auto vs_ideal = compare(candidate, n.ideal, *counter_);
  if (vs_ideal == DominanceOutcome::Dominates ||
      vs_ideal == DominanceOutcome::Equal) {
    // The candidate covers the optimistic corner and with it the whole
    // subtree.
    harvest_points(n, evicted);
    return true;
  }
  if (vs_ideal != DominanceOutcome::DominatedBy &&
      vs_nadir != DominanceOutcome::Dominates) {
    // Incomparable to both corners: nothing below can cover the candidate or
    // be dominated by it.
    return true;
  }

  if (n.leaf()) {
    std::size_t i = 0;
    while (i < n.points.size()) {
      switch (compare(candidate, n.points[i], *counter_)) {
        case DominanceOutcome::DominatedBy:
        case DominanceOutcome::Equal:
          return false;
        case DominanceOutcome::Dominates:
          evicted.push_back(std::move(n.points[i]));
          n.points.erase(n.points.begin() + static_cast<std::ptrdiff_t>(i));
          break;
        case DominanceOutcome::Incomparable:
          ++i;
          break;
      }
    }
    return true;
  }

  for (auto it = n.children.begin(); it != n.children.end();) {
    if (!update_node(**it, candidate, evicted)) return false;
    if ((*it)->hollow()) {
      it = n.children.erase(it);
    } else {
      ++it;
    }
  }
  if (n.children.size() == 1) {
    // Splice the single child into n's slot, keeping the child's bounds.
    auto child = std::move(n.children.front());
    n.children.clear();
    n.ideal = std::move(child->ideal);
    n.nadir = std::move(child->nadir);
    n.points = std::move(child->points);
    n.children = std::move(child->children);
    for (auto& grandchild : n.children) grandchild->parent = &n;
  }
  return true;
}

void NdTreeArchive::insert(const Point& candidate) {
  Node* n = root_.get();
  while (!n->leaf()) {
    Node* closest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& child : n->children) {
      double d = midpoint_distance_sq(candidate, *child);
      if (d < best) {
        best = d;
        closest = child.get();
      }
    }
    n = closest;
  }
  n->points.push_back(candidate);
  update_ideal_nadir(*n, candidate);
  if (n->points.size() > config_.max_leaf_size) split(*n);
}

void NdTreeArchive::split(Node& n) {
  std::vector<Point> pool = std::move(n.points);
  n.points.clear();

  // First seed: highest average distance to all other points in the pool.
  std::size_t first = 0;
  double best_avg = -1.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j != i) sum += euclidean(pool[i], pool[j]);
    }
    double avg = sum / static_cast<double>(pool.size() - 1);
    if (avg > best_avg) {
      best_avg = avg;
      first = i;
    }
  }
  auto take = [&pool](std::size_t i) {
    Point p = std::move(pool[i]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    return p;
  };
  n.children.push_back(make_leaf(take(first), &n));

  // Remaining seeds: highest average distance to everything already placed.
  while (n.children.size() < max_children_) {
    std::size_t pick = 0;
    best_avg = -1.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      double sum = 0.0;
      std::size_t placed = 0;
      for (const auto& child : n.children) {
        for (const auto& q : child->points) {
          sum += euclidean(pool[i], q);
          ++placed;
        }
      }
      double avg = sum / static_cast<double>(placed);
      if (avg > best_avg) {
        best_avg = avg;
        pick = i;
      }
    }
    n.children.push_back(make_leaf(take(pick), &n));
  }

  // Everything else joins the child with the closest midpoint, in list order.
  for (auto& p : pool) {
    Node* closest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& child : n.children) {
      double d = midpoint_distance_sq(p, *child);
      if (d < best) {
        best = d;
        closest = child.get();
      }
    }
    closest->points.push_back(p);
    update_ideal_nadir(*closest, p);
  }
}

std::vector<Point> NdTreeArchive::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  if (root_ != nullptr) collect_points(*root_, out);
  return out;
}

std::size_t NdTreeArchive::depth() const {
  if (root_ == nullptr) return 0;
  std::size_t deepest = 0;
  struct Frame {
    const Node* node;
    std::size_t level;
  };
  std::vector<Frame> stack{{root_.get(), 1}};
  while (!stack.empty()) {
    auto [node, level] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, level);
    for (const auto& child : node->children) {
      stack.push_back({child.get(), level + 1});
    }
  }
  return deepest;
}

namespace {

std::string format_point(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k != 0) os << ',';
    os << p[k];
  }
  os << ')';
  return os.str();
}

// Exhaustive "does any other tree point cover p, or is dominated by p" check
// pruned with the node bounds. Exact as long as the bounds themselves passed
// their coverage checks, which audit verifies first.
bool mutual_violation(const NdTreeArchive::Node& n, const Point& p,
                      const NdTreeArchive::Node* home, std::size_t home_index) {
  bool comparable_ideal = raw_compare(p, n.ideal) != DominanceOutcome::Incomparable;
  bool comparable_nadir = raw_compare(p, n.nadir) != DominanceOutcome::Incomparable;
  if (!comparable_ideal && !comparable_nadir) return false;
  if (n.leaf()) {
    for (std::size_t i = 0; i < n.points.size(); ++i) {
      if (&n == home && i == home_index) continue;
      if (raw_compare(p, n.points[i]) != DominanceOutcome::Incomparable) {
        return true;
      }
    }
    return false;
  }
  for (const auto& child : n.children) {
    if (mutual_violation(*child, p, home, home_index)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> NdTreeArchive::audit() const {
  std::vector<std::string> violations;
  if (root_ == nullptr) {
    if (size_ != 0) violations.push_back("empty tree reports nonzero size");
    return violations;
  }
  std::size_t seen_points = 0;
  bool bounds_ok = true;

  struct Frame {
    const Node* node;
    const Node* parent;
  };
  std::vector<Frame> stack{{root_.get(), nullptr}};
  while (!stack.empty()) {
    auto [node, parent] = stack.back();
    stack.pop_back();
    if (node->parent != parent) {
      violations.push_back("broken parent link");
    }
    if (node->ideal.size() != root_->ideal.size() ||
        node->nadir.size() != root_->ideal.size()) {
      violations.push_back("inconsistent dimensions");
    }
    if (node->leaf()) {
      seen_points += node->points.size();
      if (node->points.empty()) {
        violations.push_back("hollow leaf");
      }
      if (node->points.size() > config_.max_leaf_size) {
        violations.push_back("leaf holds " + std::to_string(node->points.size()) +
                             " points, max is " +
                             std::to_string(config_.max_leaf_size));
      }
      for (const auto& p : node->points) {
        if (!raw_covers(node->ideal, p)) {
          bounds_ok = false;
          violations.push_back("ideal " + format_point(node->ideal) +
                               " does not cover point " + format_point(p));
        }
        if (!raw_covers(p, node->nadir)) {
          bounds_ok = false;
          violations.push_back("point " + format_point(p) +
                               " does not cover nadir " +
                               format_point(node->nadir));
        }
      }
    } else {
      if (!node->points.empty()) {
        violations.push_back("internal node holds leaf points");
      }
      if (node->children.size() < 2) {
        violations.push_back("internal node has a single child");
      }
      if (node->children.size() > max_children_) {
        violations.push_back("internal node has " +
                             std::to_string(node->children.size()) +
                             " children, max is " +
                             std::to_string(max_children_));
      }
      for (const auto& child : node->children) {
        if (!raw_covers(node->ideal, child->ideal)) {
          bounds_ok = false;
          violations.push_back("child ideal escapes parent ideal");
        }
        if (!raw_covers(child->nadir, node->nadir)) {
          bounds_ok = false;
          violations.push_back("child nadir escapes parent nadir");
        }
        stack.push_back({child.get(), node});
      }
    }
  }
  if (seen_points != size_) {
    violations.push_back("tree holds " + std::to_string(seen_points) +
                         " points but reports size " + std::to_string(size_));
  }
  if (bounds_ok) {
    // Bounds are trustworthy, so the pruned pairwise search is exhaustive.
    std::vector<Frame> walk{{root_.get(), nullptr}};
    while (!walk.empty()) {
      const Node* node = walk.back().node;
      walk.pop_back();
      for (const auto& child : node->children) walk.push_back({child.get(), node});
      for (std::size_t i = 0; i < node->points.size(); ++i) {
        if (mutual_violation(*root_, node->points[i], node, i)) {
          violations.push_back("point " + format_point(node->points[i]) +
                               " is comparable to another tree point");
        }
      }
    }
  }
  return violations;
}

std::vector<Point> worst_case_stream(int levels) {
  assert(levels >= 1);
  std::vector<Point> points{{0.0, 0.0}, {1.0, -1.0}};
  for (int k = levels; k >= 1; --k) {
    double v = std::ldexp(1.0, k);
    points.push_back({v, -v});
  }
  return points;
}

}  // namespace pareto
