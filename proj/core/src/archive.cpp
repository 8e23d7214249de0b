#include "pareto/archive.hpp"

#include "pareto/linear_list.hpp"
#include "pareto/mfront.hpp"
#include "pareto/nd_tree.hpp"
#include "pareto/quad_tree.hpp"
#include "pareto/sorted_list.hpp"

namespace pareto {

std::unique_ptr<Archive> make_archive(Backend kind, ComparisonCounter& counter,
                                      const NdTreeConfig& tree_config) {
  switch (kind) {
    case Backend::NdTree:
      return std::make_unique<NdTreeArchive>(counter, tree_config);
    case Backend::LinearList:
      return std::make_unique<LinearListArchive>(counter);
    case Backend::SortedList:
      return std::make_unique<SortedListArchive>(counter);
    case Backend::QuadTree:
      return std::make_unique<QuadTreeArchive>(counter);
    case Backend::MFront2:
      return std::make_unique<MFrontArchive>(counter);
  }
  return nullptr;
}

std::optional<Backend> backend_from_name(std::string_view name) {
  if (name == "ndtree") return Backend::NdTree;
  if (name == "list") return Backend::LinearList;
  if (name == "sortedlist") return Backend::SortedList;
  if (name == "quadtree") return Backend::QuadTree;
  if (name == "mfront2") return Backend::MFront2;
  return std::nullopt;
}

std::string_view backend_name(Backend kind) {
  switch (kind) {
    case Backend::NdTree:
      return "ndtree";
    case Backend::LinearList:
      return "list";
    case Backend::SortedList:
      return "sortedlist";
    case Backend::QuadTree:
      return "quadtree";
    case Backend::MFront2:
      return "mfront2";
  }
  return "unknown";
}

const std::vector<Backend>& all_backends() {
  static const std::vector<Backend> kinds{
      Backend::NdTree, Backend::LinearList, Backend::SortedList,
      Backend::QuadTree, Backend::MFront2};
  return kinds;
}

}  // namespace pareto
