#include "pareto/quad_tree.hpp"

#include <cassert>
#include <utility>

namespace pareto {

namespace {

struct MaskedCompare {
  std::uint32_t mask;  // bit k set iff u[k] >= v[k]
  DominanceOutcome outcome;
};

// Successorship vector and dominance outcome in one counted comparison.
MaskedCompare masked_compare(const Point& u, const Point& v,
                             ComparisonCounter& counter) {
  assert(u.size() == v.size());
  assert(u.size() <= 32);
  ++counter.count;
  std::uint32_t mask = 0;
  bool u_better = false;
  bool v_better = false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] >= v[k]) mask |= 1u << k;
    if (u[k] < v[k]) u_better = true;
    else if (v[k] < u[k]) v_better = true;
  }
  DominanceOutcome outcome;
  if (u_better && v_better) outcome = DominanceOutcome::Incomparable;
  else if (u_better) outcome = DominanceOutcome::Dominates;
  else if (v_better) outcome = DominanceOutcome::DominatedBy;
  else outcome = DominanceOutcome::Equal;
  return {mask, outcome};
}

void gather_subtree(QuadTreeArchive::Node& n, std::vector<Point>& out) {
  for (auto& [mask, child] : n.children) {
    out.push_back(std::move(child->point));
    gather_subtree(*child, out);
  }
  n.children.clear();
}

void collect_subtree(const QuadTreeArchive::Node& n, std::vector<Point>& out) {
  out.push_back(n.point);
  for (const auto& [mask, child] : n.children) collect_subtree(*child, out);
}

}  // namespace

bool QuadTreeArchive::covered(const Node& n, const Point& candidate) const {
  auto cmp = masked_compare(candidate, n.point, *counter_);
  if (cmp.outcome == DominanceOutcome::DominatedBy ||
      cmp.outcome == DominanceOutcome::Equal) {
    return true;
  }
  // A subtree under mask b keeps points that are >= the node's point exactly
  // on the bits of b; it can hold a coverer of the candidate only if the
  // candidate is >= the node's point on those same bits.
  for (const auto& [mask, child] : n.children) {
    if ((mask & ~cmp.mask) == 0 && covered(*child, candidate)) return true;
  }
  return false;
}

void QuadTreeArchive::remove_dominated(std::unique_ptr<Node>& slot,
                                       const Point& candidate,
                                       std::vector<Point>& evicted,
                                       std::vector<Point>& loose) {
  auto cmp = masked_compare(candidate, slot->point, *counter_);
  if (cmp.outcome == DominanceOutcome::Dominates) {
    evicted.push_back(std::move(slot->point));
    gather_subtree(*slot, loose);
    slot.reset();
    return;
  }
  // A subtree under mask b can hold a point dominated by the candidate only
  // if the candidate is below the node's point everywhere the subtree is.
  auto& children = slot->children;
  for (std::size_t i = 0; i < children.size();) {
    if ((cmp.mask & ~children[i].first) == 0) {
      remove_dominated(children[i].second, candidate, evicted, loose);
      if (children[i].second == nullptr) {
        children.erase(children.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
    }
    ++i;
  }
}

void QuadTreeArchive::insert_point(Point p) {
  if (root_ == nullptr) {
    root_ = std::make_unique<Node>();
    root_->point = std::move(p);
    return;
  }
  Node* cur = root_.get();
  for (;;) {
    auto cmp = masked_compare(p, cur->point, *counter_);
    assert(cmp.outcome == DominanceOutcome::Incomparable);
    Node* next = nullptr;
    for (auto& [mask, child] : cur->children) {
      if (mask == cmp.mask) {
        next = child.get();
        break;
      }
    }
    if (next == nullptr) {
      auto node = std::make_unique<Node>();
      node->point = std::move(p);
      cur->children.emplace_back(cmp.mask, std::move(node));
      return;
    }
    cur = next;
  }
}

// Loose points repeat the full insertion against the rebuilt tree, dominance
// tests included. The coverage test is live (the new candidate may cover
// them); the dominated search can never fire, but the navigation still pays
// for it, which is what makes removals from this structure expensive.
void QuadTreeArchive::reinsert(Point p, std::vector<Point>& evicted) {
  if (covered(*root_, p)) {
    evicted.push_back(std::move(p));
    return;
  }
  std::vector<Point> none_evicted;
  std::vector<Point> none_loose;
  remove_dominated(root_, p, none_evicted, none_loose);
  assert(none_evicted.empty() && none_loose.empty());
  insert_point(std::move(p));
}

UpdateOutcome QuadTreeArchive::update(const Point& candidate) {
  UpdateOutcome outcome;
  if (root_ == nullptr) {
    insert_point(candidate);
    size_ = 1;
    outcome.accepted = true;
    return outcome;
  }
  assert(candidate.size() == root_->point.size());
  if (covered(*root_, candidate)) return outcome;

  // Removing a node detaches its whole subtree; the residents come back as
  // loose points and are re-inserted one by one after the candidate is in.
  std::vector<Point> loose;
  remove_dominated(root_, candidate, outcome.evicted, loose);
  insert_point(candidate);
  for (auto& p : loose) reinsert(std::move(p), outcome.evicted);
  size_ = size_ - outcome.evicted.size() + 1;
  outcome.accepted = true;
  return outcome;
}

std::vector<Point> QuadTreeArchive::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  if (root_ != nullptr) collect_subtree(*root_, out);
  return out;
}

}  // namespace pareto
