#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pareto/archive.hpp"

namespace pareto {

// Tree of axis-aligned dominance bounds. Every node keeps an optimistic
// corner (ideal: covers everything below it) and a pessimistic corner
// (nadir: covered by everything below it). A candidate comparable to the
// corners either settles against the whole subtree at once or descends;
// a candidate incomparable to both corners skips the subtree entirely.
// Bounds only widen while points sit in the tree; removals never tighten
// them, which keeps them valid but approximate.
class NdTreeArchive final : public Archive {
 public:
  struct Node {
    Point ideal;
    Point nadir;
    Node* parent = nullptr;
    std::vector<Point> points;  // leaf payload, empty for internal nodes
    std::vector<std::unique_ptr<Node>> children;

    bool leaf() const { return children.empty(); }
    bool hollow() const { return points.empty() && children.empty(); }
  };

  explicit NdTreeArchive(ComparisonCounter& counter, NdTreeConfig config = {});

  UpdateOutcome update(const Point& candidate) override;
  std::size_t size() const override { return size_; }
  std::vector<Point> points() const override;

  // Structural self-check; returns human-readable violations, empty when the
  // tree is sound. Runs on raw coordinate checks and leaves the comparison
  // counter untouched.
  std::vector<std::string> audit() const;

  // Nodes on the longest root-to-leaf path; 0 for an empty tree.
  std::size_t depth() const;

  const Node* root() const { return root_.get(); }
  Node* root() { return root_.get(); }
  const NdTreeConfig& config() const { return config_; }

 private:
  // False when the candidate is covered somewhere below n (reject). True
  // otherwise; dominated points have then been moved into evicted and n may
  // have been hollowed out or collapsed.
  bool update_node(Node& n, const Point& candidate, std::vector<Point>& evicted);
  void insert(const Point& candidate);
  void split(Node& n);
  void resolve_config(std::size_t dimensions);

  ComparisonCounter* counter_;
  NdTreeConfig config_;
  std::size_t max_children_ = 0;  // resolved from config at first insert
  std::unique_ptr<Node> root_;
  std::size_t size_ = 0;
};

// Adversarial two-objective stream (0,0), (1,-1), (2^levels,-2^levels), ...,
// (2,-2). Fed into a tree with max_leaf_size 2 and max_children 2 it builds a
// fully unbalanced chain, the degenerate shape for query cost.
std::vector<Point> worst_case_stream(int levels);

}  // namespace pareto
